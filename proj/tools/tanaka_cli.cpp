// tanaka: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tanaka/catalog.hpp"
#include "tanaka/crmodels.hpp"
#include "tanaka/frames.hpp"
#include "tanaka/freelie.hpp"
#include "tanaka/liealg.hpp"
#include "tanaka/prolong.hpp"

using namespace tanaka;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "text";
  std::string output;
};

struct Selector {
  std::optional<int> k;
  std::string model;
  std::string quotient = "default";
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw UsageError("cannot write " + c.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QuotientSpec parse_quotient(const std::string& s) {
  if (s == "default") return QuotientSpec::default_quotient();
  if (s == "truncate") return QuotientSpec::truncate();
  const std::string prefix = "explicit:";
  if (s.rfind(prefix, 0) == 0) {
    std::string body = s.substr(prefix.size());
    std::string source = "inline";
    if (!body.empty() && body.front() == '@') {
      source = body.substr(1);
      body = read_file(source);
    }
    try {
      return QuotientSpec::explicit_projection(matrix_from_json(nlohmann::json::parse(body)), source);
    } catch (const nlohmann::json::exception& e) {
      throw BadQuotient(std::string("explicit quotient is not valid JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw BadQuotient(std::string("explicit quotient: ") + e.what());
    }
  }
  throw UsageError("unknown quotient '" + s + "' (default, truncate, explicit:JSON or explicit:@FILE)");
}

class Cli {
 public:
  explicit Cli(std::string catalog_path) {
    catalog_ = catalog_path.empty() ? builtin_catalog() : load_catalog(catalog_path);
  }

  const std::vector<ModelSpec>& catalog() const { return catalog_; }

  const ModelSpec& model(const std::string& id) const {
    try {
      return find_model(catalog_, id);
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
  }

  SymbolAlgebra symbol(const Selector& sel) const {
    if (!sel.model.empty()) {
      if (sel.quotient != "default") throw UsageError("--quotient applies to --k only");
      return symbol_from_frame(model(sel.model));
    }
    if (!sel.k) throw UsageError("one of --k or --model is required");
    if (*sel.k < 1) throw UsageError("--k must be positive");
    return build_symbol_algebra(*sel.k, parse_quotient(sel.quotient));
  }

  std::string id_of(const Selector& sel) const {
    if (!sel.model.empty()) return sel.model;
    std::ostringstream os;
    os << "k" << std::setw(2) << std::setfill('0') << *sel.k << "-" << sel.quotient.substr(0, sel.quotient.find(':'));
    return os.str();
  }

 private:
  std::vector<ModelSpec> catalog_;
};

void add_selector(CLI::App* cmd, Selector& sel) {
  auto* k = cmd->add_option("--k", sel.k, "Codimension; uses the symbol built from the free algebra");
  auto* m = cmd->add_option("--model", sel.model, "Catalog model id; uses the symbol induced by its frame");
  k->excludes(m);
  m->excludes(k);
  cmd->add_option("--quotient", sel.quotient,
                  "Top-layer quotient for --k: default, truncate, explicit:JSON, explicit:@FILE");
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--output,-o", c.output, "Write to a file instead of stdout");
}

std::string witt_table(int max_length, const std::string& format) {
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream os;
  os << std::setw(3) << "l" << std::setw(8) << "witt" << std::setw(12) << "cumulative" << "  k with rho=l\n";
  for (int ell = 1; ell <= max_length; ++ell) {
    const auto w = witt_dim(ell);
    const auto cum = cumulative_dim(ell);
    // rho = l exactly for cumulative(l-1) - 2 < k <= cumulative(l) - 2.
    const long lo = ell == 1 ? 1 : static_cast<long>(cumulative_dim(ell - 1)) - 1;
    const long hi = static_cast<long>(cum) - 2;
    std::string range = "—";
    if (hi >= std::max(lo, 1L)) {
      const long from = std::max(lo, 1L);
      range = from == hi ? "k=" + std::to_string(hi) : "k=" + std::to_string(from) + "…" + std::to_string(hi);
    }
    os << std::setw(3) << ell << std::setw(8) << w << std::setw(12) << cum << "  " << range << "\n";
    nlohmann::json row = {{"length", ell}, {"witt_dim", w}, {"cumulative", cum}};
    if (range == "—") row["k_range"] = nullptr;
    else row["k_range"] = {std::max(lo, 1L), hi};
    rows.push_back(row);
  }
  return format == "json" ? rows.dump(2) : os.str();
}

std::string symbol_text(const SymbolAlgebra& s, bool real) {
  std::ostringstream os;
  os << "symbol algebra k=" << s.k << " rho=" << s.rho << " quotient=" << s.quotient.describe() << "\n";
  const GradedLieAlgebra a = real ? realify(s.algebra).algebra : s.algebra;
  os << format_table(a);
  if (a.J()) os << "J on degree -1: " << *a.J() << "\n";
  return os.str();
}

struct VerifyJob {
  std::string id;
  std::optional<SymbolAlgebra> symbol;
};

TheoremReport run_job(const VerifyJob& job, AlphaCase c) {
  if (job.symbol->rho == 2) return verify_heisenberg(job.symbol, job.id);
  return theorem_report(*job.symbol, job.id, c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbol algebras, Tanaka prolongations and infinitesimal CR automorphisms "
               "of rigid CR models with one complex direction"};
  app.require_subcommand(1);
  std::string catalog_path;
  app.add_option("--catalog", catalog_path, "Model catalog JSON (defaults to the built-in catalog)");

  int witt_max = 7;
  Common witt_c;
  auto* witt = app.add_subcommand("witt", "Witt dimensions and the codimensions of each length");
  witt->add_option("--max-length", witt_max, "Largest length")->check(CLI::Range(1, 60));
  add_common(witt, witt_c);

  Selector sym_sel;
  Common sym_c;
  bool sym_real = false;
  auto* symbol = app.add_subcommand("symbol", "Print a symbol algebra");
  add_selector(symbol, sym_sel);
  add_common(symbol, sym_c);
  symbol->add_flag("--real", sym_real, "Print the real form instead of the Hall-labelled complex form");

  Selector ver_sel;
  Common ver_c;
  std::optional<int> ver_all;
  bool ver_with_catalog = false;
  std::string ver_case = "auto";
  auto* verify = app.add_subcommand("verify", "Check aut_CR = Levi-Tanaka prolongation");
  add_selector(verify, ver_sel);
  add_common(verify, ver_c);
  auto* all_opt = verify->add_option("--all", ver_all, "Sweep the default quotients for k = 1..KMAX");
  all_opt->check(CLI::Range(1, 12));
  verify->add_flag("--with-catalog", ver_with_catalog, "With --all, also sweep catalog models with k <= KMAX");
  verify->add_option("--case", ver_case, "alpha case")->check(CLI::IsMember({"auto", "real", "complex"}));

  Selector pro_sel;
  Common pro_c;
  std::string flavor = "levi-tanaka";
  std::optional<int> guard;
  auto* prolong = app.add_subcommand("prolong", "Compute a Tanaka or Levi-Tanaka prolongation");
  add_selector(prolong, pro_sel);
  add_common(prolong, pro_c);
  prolong->add_option("--flavor", flavor, "levi-tanaka or full-tanaka")
      ->check(CLI::IsMember({"levi-tanaka", "full-tanaka"}));
  prolong->add_option("--guard", guard, "Largest degree computed before giving up");

  std::string growth_model;
  Common growth_c;
  auto* growth = app.add_subcommand("growth", "Growth vector and total nondegeneracy of a model");
  growth->add_option("--model", growth_model, "Catalog model id")->required();
  add_common(growth, growth_c);

  Selector frame_sel;
  Common frame_c;
  bool frame_left = false;
  auto* frame = app.add_subcommand("frame", "CR field of a model and its Hall-word brackets");
  frame->add_option("--model", frame_sel.model, "Catalog model id")->required();
  frame->add_flag("--left-invariant", frame_left, "Print the left-invariant frame of the real symbol instead");
  add_common(frame, frame_c);

  Selector bch_sel;
  Common bch_c;
  auto* bch = app.add_subcommand("bch", "Group law of the real symbol in exponential coordinates");
  add_selector(bch, bch_sel);
  add_common(bch, bch_c);

  Common cat_c;
  auto* catalog = app.add_subcommand("catalog", "Catalog utilities");
  catalog->require_subcommand(1);
  auto* cat_export = catalog->add_subcommand("export", "Write the catalog as JSON");
  cat_export->add_option("--output,-o", cat_c.output, "Output file");
  auto* cat_list = catalog->add_subcommand("list", "List model ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const Cli cli(catalog_path);

    if (*witt) {
      emit(witt_c, witt_table(witt_max, witt_c.format));
      return kOk;
    }

    if (*symbol) {
      const SymbolAlgebra s = cli.symbol(sym_sel);
      if (sym_c.format == "json") {
        emit(sym_c, to_json(sym_real ? realify(s.algebra).algebra : s.algebra).dump(2));
      } else {
        emit(sym_c, symbol_text(s, sym_real));
      }
      return kOk;
    }

    if (*verify) {
      const AlphaCase c = alpha_case_from_string(ver_case);
      std::vector<VerifyJob> jobs;
      if (ver_all) {
        if (ver_sel.k || !ver_sel.model.empty()) throw UsageError("--all excludes --k and --model");
        for (int k = 1; k <= *ver_all; ++k) {
          Selector s{k, "", ver_sel.quotient};
          jobs.push_back({cli.id_of(s), std::nullopt});
        }
        if (ver_with_catalog)
          for (const auto& m : cli.catalog())
            if (m.k <= *ver_all && m.expect_nondegenerate) jobs.push_back({m.id, std::nullopt});
      } else {
        if (!ver_sel.k && ver_sel.model.empty()) throw UsageError("one of --k, --model or --all is required");
        jobs.push_back({cli.id_of(ver_sel), std::nullopt});
      }
      // Symbols are built up front so input errors surface before any work starts.
      for (auto& job : jobs) {
        Selector s = ver_sel;
        if (ver_all) {
          bool from_catalog = false;
          for (const auto& m : cli.catalog())
            if (m.id == job.id) from_catalog = true;
          if (from_catalog) s = Selector{std::nullopt, job.id, "default"};
          else s = Selector{std::stoi(job.id.substr(1, 2)), "", ver_sel.quotient};
        }
        job.symbol = cli.symbol(s);
      }
      std::sort(jobs.begin(), jobs.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

      std::vector<std::future<TheoremReport>> futures;
      for (const auto& job : jobs) futures.push_back(std::async(std::launch::async, run_job, std::cref(job), c));
      std::vector<TheoremReport> reports;
      std::string errors;
      for (std::size_t i = 0; i < futures.size(); ++i) {
        try {
          reports.push_back(futures[i].get());
        } catch (const VerificationFailed& e) {
          errors += jobs[i].id + ": " + e.what() + "\n";
          if (e.report()) reports.push_back(*e.report());
        } catch (const CaseMismatch& e) {
          errors += jobs[i].id + ": " + e.what() + "\n";
        }
      }
      bool ok = errors.empty();
      for (const auto& r : reports) ok = ok && r.confirmed();
      if (ver_c.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) out.push_back(r.to_json());
        emit(ver_c, (jobs.size() == 1 && reports.size() == 1 ? out.front() : out).dump(2));
      } else {
        std::string text;
        for (const auto& r : reports) text += r.to_text();
        if (reports.size() > 1) {
          std::size_t confirmed = 0;
          for (const auto& r : reports) confirmed += r.confirmed() ? 1 : 0;
          text += "summary: " + std::to_string(confirmed) + "/" + std::to_string(jobs.size()) + " confirmed\n";
          std::map<int, std::vector<const TheoremReport*>> by_k;
          for (const auto& r : reports) by_k[r.k].push_back(&r);
          for (const auto& [k, group] : by_k) {
            bool differ = false;
            for (const auto* r : group) differ = differ || r->prolongation_total != group.front()->prolongation_total;
            if (!differ) continue;
            text += "note: k=" + std::to_string(k) + " quotient choices give different Levi-Tanaka dimensions:";
            for (const auto* r : group) text += " " + r->model + "=" + std::to_string(r->prolongation_total);
            text += "\n";
          }
        }
        emit(ver_c, text);
      }
      if (!errors.empty()) std::cerr << errors;
      return ok ? kOk : kVerificationFailure;
    }

    if (*prolong) {
      const SymbolAlgebra s = cli.symbol(pro_sel);
      const GradedLieAlgebra m = s.algebra.conjugation() ? realify(s.algebra).algebra : s.algebra;
      const ProlongedAlgebra p = full_prolongation(m, flavor_from_string(flavor), guard);
      if (pro_c.format == "json") {
        emit(pro_c, to_json(p.algebra).dump(2));
      } else {
        std::ostringstream os;
        os << to_string(p.flavor) << " prolongation, k=" << s.k << " rho=" << s.rho
           << " quotient=" << s.quotient.describe() << "\n";
        os << "first zero component: degree " << p.terminated_at << "\n";
        os << format_table(p.algebra);
        emit(pro_c, os.str());
      }
      return kOk;
    }

    if (*growth) {
      const ModelSpec& m = cli.model(growth_model);
      const GrowthReport g = growth_and_nondegeneracy(m);
      if (growth_c.format == "json") {
        emit(growth_c, nlohmann::json{{"model", m.id},
                                      {"growth", g.filtration.growth},
                                      {"rho", g.rho},
                                      {"totally_nondegenerate", g.totally_nondegenerate},
                                      {"reason", g.reason}}
                           .dump(2));
      } else {
        std::ostringstream os;
        os << m.id << ": growth (";
        for (std::size_t i = 0; i < g.filtration.growth.size(); ++i)
          os << (i ? "," : "") << g.filtration.growth[i];
        os << "), rho=" << g.rho << ", "
           << (g.totally_nondegenerate ? "totally nondegenerate" : "not totally nondegenerate: " + g.reason)
           << "\n";
        emit(growth_c, os.str());
      }
      return g.totally_nondegenerate == m.expect_nondegenerate ? kOk : kVerificationFailure;
    }

    if (*frame) {
      const ModelSpec& m = cli.model(frame_sel.model);
      if (frame_left) {
        const GradedLieAlgebra real = realify(symbol_from_frame(m).algebra).algebra;
        const auto fields = left_invariant_frame(bch_group_law(real));
        nlohmann::json j = nlohmann::json::array();
        std::ostringstream os;
        for (std::size_t i = 0; i < fields.size(); ++i) {
          os << "X_" << real.element(i).label << " = " << fields[i].str() << "\n";
          j.push_back({{"label", real.element(i).label}, {"field", fields[i].to_json()}});
        }
        const auto bad = frame_structure_mismatches(real, fields);
        os << "brackets reproduce the structure constants: " << (bad.empty() ? "yes" : "no") << "\n";
        emit(frame_c, frame_c.format == "json" ? j.dump(2) : os.str());
        return bad.empty() ? kOk : kVerificationFailure;
      }
      const PolyVectorField L = tangential_cr_field(m);
      const int rho = std::max(growth_and_nondegeneracy(m).rho, 1);
      const HallBasis h(rho);
      const auto fields = hall_word_fields(L, h);
      nlohmann::json j = nlohmann::json::array();
      std::ostringstream os;
      for (std::size_t w = 0; w < h.size(); ++w) {
        os << std::left << std::setw(12) << h.label(w) << std::right << fields[w].str() << "\n";
        j.push_back({{"word", h.to_json(w)}, {"field", fields[w].to_json()}});
      }
      emit(frame_c, frame_c.format == "json" ? j.dump(2) : os.str());
      return kOk;
    }

    if (*bch) {
      const SymbolAlgebra s = cli.symbol(bch_sel);
      const GradedLieAlgebra real = s.algebra.conjugation() ? realify(s.algebra).algebra : s.algebra;
      const GroupLaw g = bch_group_law(real);
      const bool assoc = check_associativity(g);
      std::vector<std::string> names;
      for (std::size_t i = 0; i < g.dim(); ++i) names.push_back("a" + std::to_string(i + 1));
      for (std::size_t i = 0; i < g.dim(); ++i) names.push_back("b" + std::to_string(i + 1));
      if (bch_c.format == "json") {
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& p : g.product) comps.push_back(p.to_json());
        emit(bch_c, nlohmann::json{{"class", g.nilpotency_class}, {"product", comps}, {"associative", assoc}}
                        .dump(2));
      } else {
        std::ostringstream os;
        os << "nilpotency class " << g.nilpotency_class << "\n";
        for (std::size_t i = 0; i < g.dim(); ++i)
          os << "(a*b)_" << (i + 1) << " [" << real.element(i).label << "] = " << g.product[i].str(names) << "\n";
        os << "associative: " << (assoc ? "yes" : "no") << "\n";
        emit(bch_c, os.str());
      }
      return assoc ? kOk : kVerificationFailure;
    }

    if (*cat_export) {
      emit(cat_c, catalog_to_json(cli.catalog()).dump(2));
      return kOk;
    }
    if (*cat_list) {
      std::ostringstream os;
      for (const auto& m : cli.catalog())
        os << std::left << std::setw(22) << m.id << " k=" << m.k << "  " << m.note << "\n";
      emit(cat_c, os.str());
      return kOk;
    }
  } catch (const VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const CaseMismatch& e) {
    std::cerr << "case mismatch: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const BadQuotient& e) {
    std::cerr << "bad quotient: " << e.what() << "\n";
    return kUsage;
  } catch (const NotTotallyNondegenerate& e) {
    std::cerr << "not totally nondegenerate: " << e.what() << "\n";
    return kUsage;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsage;
}
