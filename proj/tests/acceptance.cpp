// Acceptance suite: one PASS/FAIL line per criterion. Usage: tanaka_acceptance PATH_TO_TANAKA_CLI

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tanaka/catalog.hpp"
#include "tanaka/crmodels.hpp"
#include "tanaka/frames.hpp"
#include "tanaka/prolong.hpp"

using namespace tanaka;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string run(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

struct Swept {
  std::string id;
  SymbolAlgebra symbol;
};

std::vector<Swept> sweep_symbols() {
  std::vector<Swept> out;
  for (int k = 2; k <= 12; ++k) out.push_back({"default-k" + std::to_string(k), build_symbol_algebra(k)});
  for (const auto& m : builtin_catalog())
    if (m.expect_nondegenerate && min_length_for_codim(m.k) >= 3) out.push_back({m.id, symbol_from_frame(m)});
  return out;
}

GradedLieAlgebra working_form(const GradedLieAlgebra& a) {
  return a.conjugation() ? realify(a).algebra : a;
}

Outcome criterion1(const std::string& cli) {
  Outcome o;
  const auto t = Clock::now();
  int status = 0;
  const std::string out = run("'" + cli + "' verify --model heisenberg --format json", status);
  const double elapsed = seconds_since(t);
  o.require(status == 0, "CLI exit status " + std::to_string(status));
  if (!o.pass) return o;
  const auto j = nlohmann::json::parse(out);
  const std::size_t total = j.at("levi_tanaka_total").get<std::size_t>();
  o.require(total == 8, "Levi-Tanaka total " + std::to_string(total));
  o.require(j.at("verdict") == "confirmed", "verdict " + j.at("verdict").get<std::string>());
  o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  o.detail = o.pass ? "total 8, " + std::to_string(elapsed) + " s" : o.detail;
  return o;
}

struct SweepResult {
  std::vector<std::pair<std::string, TheoremReport>> reports;
  std::string error;
  double seconds = 0;
};

SweepResult run_sweep() {
  SweepResult r;
  const auto t = Clock::now();
  try {
    for (const auto& s : sweep_symbols()) r.reports.emplace_back(s.id, verify_theorem(s.symbol, s.id));
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.seconds = seconds_since(t);
  return r;
}

Outcome criterion2(const SweepResult& s) {
  Outcome o;
  o.require(s.error.empty(), s.error);
  for (const auto& [id, r] : s.reports) {
    bool vanish = r.higher_vanish;
    for (const auto& [deg, dim] : r.prolongation_dims) vanish = vanish && (deg <= 0 || dim == 0);
    o.require(vanish, id + ": nonzero G^j for some j >= 1");
  }
  o.require(s.seconds < 300, "sweep took " + std::to_string(s.seconds) + " s");
  if (o.pass) o.detail = std::to_string(s.reports.size()) + " symbols, " + std::to_string(s.seconds) + " s";
  return o;
}

Outcome criterion3(const SweepResult& s) {
  Outcome o;
  o.require(s.error.empty(), s.error);
  for (const auto& [id, r] : s.reports) {
    const std::size_t g0 = r.prolongation_dims.count(0) ? r.prolongation_dims.at(0) : 0;
    o.require(g0 == 1 || g0 == 2, id + ": dim G0 = " + std::to_string(g0));
    o.require(r.euler_in_G0, id + ": Euler derivation not in G0");
  }
  if (o.pass) o.detail = "dim G0 in {1,2}, Euler in G0 for all";
  return o;
}

Outcome criterion4(const SweepResult& s) {
  Outcome o;
  o.require(s.error.empty(), s.error);
  std::ostringstream cases;
  for (const auto& [id, r] : s.reports) {
    o.require(r.confirmed() && r.bijective && r.pair_failures == 0 && r.derivations_match,
              id + ": " + r.verdict + " " + r.first_failure);
    cases << " " << id << "=" << (r.alpha_case == AlphaCase::Complex ? "C" : "R");
  }
  if (o.pass) o.detail = "all confirmed;" + cases.str();
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t = Clock::now();
  for (int ell = 1; ell <= 7; ++ell)
    o.require(witt_dim(ell) == oracle::count_lyndon(ell), "witt_dim(" + std::to_string(ell) + ")");
  o.require(min_length_for_codim(1) == 2, "min_length_for_codim(1)");
  const double elapsed = seconds_since(t);
  o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "l <= 7 against brute-force Lyndon counts";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto cat = builtin_catalog();
  const auto from_frame = symbol_from_frame(find_model(cat, "heisenberg"));
  const auto built = build_symbol_algebra(1);
  o.require(from_frame.algebra == built.algebra, "heisenberg symbol differs from the k=1 construction");
  if (o.pass) o.detail = "identical Hall-labelled tables";
  return o;
}

Outcome criterion7(const SweepResult& s) {
  Outcome o;
  std::size_t algebras = 0;
  auto structural = [&](const std::string& id, const GradedLieAlgebra& a) {
    ++algebras;
    o.require(check_jacobi(a).passed(), id + ": Jacobi");
    o.require(grading_violations(a).empty(), id + ": grading");
  };
  auto symbol_checks = [&](const std::string& id, const GradedLieAlgebra& a) {
    structural(id, a);
    o.require(is_fundamental(a), id + ": fundamental");
    o.require(is_nondegenerate_symbol(a), id + ": nondegenerate");
    o.require(is_pseudocomplex(a), id + ": pseudocomplex");
  };
  std::vector<Swept> all = sweep_symbols();
  all.push_back({"default-k1", build_symbol_algebra(1)});
  for (const auto& [id, symbol] : all) {
    symbol_checks(id, symbol.algebra);
    const GradedLieAlgebra m = working_form(symbol.algebra);
    if (symbol.algebra.conjugation()) symbol_checks(id + "/real", m);
    const auto p = full_prolongation(m, Flavor::LeviTanaka);
    structural(id + "/G", p.algebra);
    o.require(is_transitive(p), id + ": prolongation transitive");
    const auto aut = build_aut_cr(symbol);
    const GradedLieAlgebra a = aut.algebra.conjugation() ? realify(aut).algebra : aut.algebra;
    structural(id + "/aut", a);
    o.require(is_transitive(a), id + ": aut_CR transitive");
  }
  o.require(s.error.empty(), s.error);
  if (o.pass) o.detail = std::to_string(algebras) + " algebras";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t models = 0;
  double worst = 0;
  for (const auto& model : builtin_catalog()) {
    if (!model.expect_nondegenerate) continue;
    const auto t = Clock::now();
    const auto m = working_form(symbol_from_frame(model).algebra);
    const auto g = bch_group_law(m);
    o.require(frame_structure_mismatches(m, left_invariant_frame(g)).empty(), model.id + ": frame brackets");
    o.require(check_associativity(g), model.id + ": associativity");
    const double elapsed = seconds_since(t);
    worst = std::max(worst, elapsed);
    o.require(elapsed < 60, model.id + ": " + std::to_string(elapsed) + " s");
    ++models;
  }
  if (o.pass) o.detail = std::to_string(models) + " models, slowest " + std::to_string(worst) + " s";
  return o;
}

Outcome criterion9() {
  Outcome o;
  HallBasis h(5);
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = 0; b < h.size(); ++b) {
      if (h.word(a).length() + h.word(b).length() > 5) continue;
      const auto expected = oracle::lyndon_coordinates(oracle::commutator(
          oracle::lyndon_polynomial(h.word(a).letters), oracle::lyndon_polynomial(h.word(b).letters)));
      std::map<oracle::Word, mpz_class> got;
      for (const auto& [w, c] : h.bracket(a, b)) got[h.word(w).letters] = c;
      o.require(got == expected, "[" + h.label(a) + ", " + h.label(b) + "]");
      ++pairs;
    }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: tanaka_acceptance PATH_TO_TANAKA_CLI\n";
    return 2;
  }
  const std::string cli = argv[1];
  const SweepResult sweep = run_sweep();

  const std::vector<std::function<Outcome()>> criteria = {
      [&] { return criterion1(cli); }, [&] { return criterion2(sweep); }, [&] { return criterion3(sweep); },
      [&] { return criterion4(sweep); }, criterion5, criterion6, [&] { return criterion7(sweep); },
      criterion8, criterion9};

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << o.detail << "\n";
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
