#include "tanaka/crmodels.hpp"

#include <iomanip>
#include <sstream>

namespace tanaka {

std::string to_string(AlphaCase c) {
  switch (c) {
    case AlphaCase::Real: return "real-alpha";
    case AlphaCase::Complex: return "complex-alpha";
    case AlphaCase::Auto: return "auto";
  }
  return "auto";
}

AlphaCase alpha_case_from_string(const std::string& s) {
  if (s == "real-alpha" || s == "real") return AlphaCase::Real;
  if (s == "complex-alpha" || s == "complex") return AlphaCase::Complex;
  if (s == "auto") return AlphaCase::Auto;
  throw std::invalid_argument("unknown alpha case: " + s);
}

DerivationMap euler_derivation(const GradedLieAlgebra& m) {
  DerivationMap d(m.dim());
  for (std::size_t b = 0; b < m.dim(); ++b) d[b] = Gaussian(m.degree(b)) * unit_vector(m.dim(), b);
  return d;
}

std::optional<DerivationMap> rotation_derivation(const GradedLieAlgebra& m) {
  if (!m.J()) throw MissingJ();
  // -J commutes with J, so any extension lies in the J-commuting degree-0 derivations.
  const ProlongationComponent g0 = grade0(m, true);
  const auto g1 = m.indices_of_degree(-1);
  const Matrix& j = *m.J();
  Vector target;
  for (std::size_t c = 0; c < g1.size(); ++c)
    for (std::size_t r = 0; r < g1.size(); ++r) target.push_back(-j(r, c));
  std::vector<Vector> cols;
  for (const auto& d : g0.basis) {
    Vector col;
    for (std::size_t c = 0; c < g1.size(); ++c)
      for (std::size_t r = 0; r < g1.size(); ++r) col.push_back(d[g1[c]][g1[r]]);
    cols.push_back(std::move(col));
  }
  if (cols.empty()) return std::nullopt;
  auto coeffs = solve_linear(Matrix::from_columns(cols), target);
  if (!coeffs) return std::nullopt;
  DerivationMap out(m.dim(), Vector(m.dim()));
  for (std::size_t t = 0; t < g0.dim(); ++t)
    for (std::size_t b = 0; b < m.dim(); ++b) axpy((*coeffs)[t], g0.basis[t][b], out[b]);
  return out;
}

AutCRAlgebra build_aut_cr(const SymbolAlgebra& s, AlphaCase c) {
  const GradedLieAlgebra& m = s.algebra;
  const std::size_t n = m.dim();
  if (c == AlphaCase::Auto) c = rotation_derivation(m) ? AlphaCase::Complex : AlphaCase::Real;
  const bool complex = c == AlphaCase::Complex;
  const std::size_t dim = n + (complex ? 2 : 1);

  std::vector<BasisElement> basis = m.basis();
  basis.push_back({"d", 0, std::nullopt, nullptr});
  if (complex) basis.push_back({"r", 0, std::nullopt, nullptr});

  BracketTable table(dim);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector v = m.bracket_vector(a, b);
      v.resize(dim);
      table.set(a, b, v);
    }
  for (std::size_t b = 0; b < n; ++b) {
    const auto& bd = m.element(b).bidegree;
    if (!bd) throw InvalidAlgebra("aut_CR needs bidegree labels on the symbol basis");
    table.set(n, b, Gaussian(-bd->length()) * unit_vector(dim, b));
    if (complex) table.set(n + 1, b, Gaussian(0, -(bd->n - bd->n_bar)) * unit_vector(dim, b));
  }

  std::optional<Matrix> conjugation;
  if (m.conjugation()) {
    Matrix p(dim, dim);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col) p(r, col) = (*m.conjugation())(r, col);
    for (std::size_t i = n; i < dim; ++i) p(i, i) = 1;
    conjugation = std::move(p);
  }

  AlgebraMeta meta = m.meta();
  meta.flavor = "aut-cr";
  AutCRAlgebra out;
  try {
    out.algebra = GradedLieAlgebra(std::move(basis), std::move(table), m.J(), conjugation, meta);
  } catch (const InvalidAlgebra& e) {
    if (complex) throw CaseMismatch(std::string("rotation is not a derivation of the symbol: ") + e.what());
    throw;
  }
  out.negative_dim = n;
  out.alpha_case = c;
  out.d_index = n;
  if (complex) out.r_index = n + 1;
  return out;
}

AutCRAlgebra realify(const AutCRAlgebra& a) {
  AutCRAlgebra out = a;
  out.algebra = realify(a.algebra).algebra;
  if (out.algebra.element(a.d_index).label != "d" ||
      (a.r_index && out.algebra.element(*a.r_index).label != "r"))
    throw NotSelfConjugate("grading elements are not fixed by the conjugation");
  return out;
}

namespace {

std::string pair_name(const GradedLieAlgebra& a, std::size_t i, std::size_t j) {
  return "[" + a.element(i).label + ", " + a.element(j).label + "]";
}

void precheck(const GradedLieAlgebra& m) {
  if (auto bad = grading_violations(m); !bad.empty())
    throw VerificationFailed("symbol bracket " + pair_name(m, bad.front().first, bad.front().second) +
                             " violates the grading");
  if (auto rep = check_jacobi(m); !rep.passed()) {
    const auto& v = rep.violations.front();
    throw VerificationFailed("symbol fails Jacobi at bracket " + pair_name(m, v.i, v.j) + " with " +
                             m.element(v.k).label);
  }
}

DerivationMap action_on_negative(const GradedLieAlgebra& a, std::size_t x, std::size_t n) {
  DerivationMap d(n);
  for (std::size_t b = 0; b < n; ++b) {
    Vector v = a.bracket_vector(x, b);
    for (std::size_t k = n; k < v.size(); ++k)
      if (!v[k].is_zero()) throw InvalidAlgebra("degree-0 element leaves the negative part");
    v.resize(n);
    d[b] = std::move(v);
  }
  return d;
}

}  // namespace

TheoremReport theorem_report(const SymbolAlgebra& s, const std::string& model, AlphaCase requested) {
  precheck(s.algebra);
  if (s.rho < 3)
    throw RhoTooSmall("length " + std::to_string(s.rho) + " < 3; use the Heisenberg verification");

  TheoremReport rep;
  rep.model = model.empty() ? "k=" + std::to_string(s.k) : model;
  rep.k = s.k;
  rep.rho = s.rho;
  rep.quotient = s.quotient.describe();

  AutCRAlgebra aut = build_aut_cr(s, requested);
  GradedLieAlgebra m = s.algebra;
  if (s.algebra.conjugation()) {
    m = realify(s.algebra).algebra;
    aut = realify(aut);
    rep.field = "real";
  } else {
    rep.field = "complex";
  }
  rep.alpha_case = aut.alpha_case;
  const std::size_t n = m.dim();

  ProlongedAlgebra p = full_prolongation(m, Flavor::LeviTanaka);
  rep.aut_dims = aut.algebra.dims_by_degree();
  rep.prolongation_dims = p.dims();
  rep.aut_total = aut.algebra.dim();
  rep.prolongation_total = p.total_dim();
  rep.higher_vanish = p.terminated_at == 1;
  rep.G0_equals_g0 = p.components[0].dim() == aut.algebra.dim() - n;
  rep.euler_in_G0 = component_coordinates(p, 0, euler_derivation(m)).has_value();

  Matrix iso(p.total_dim(), aut.algebra.dim());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b)
      if (aut.algebra.bracket(a, b) != m.bracket(a, b) && rep.first_failure.empty())
        rep.first_failure = "negative part differs at " + pair_name(m, a, b);
    iso(a, a) = 1;
  }
  rep.g0_in_G0 = true;
  for (std::size_t x = n; x < aut.algebra.dim(); ++x) {
    const DerivationMap d = action_on_negative(aut.algebra, x, n);
    if (x == aut.d_index && d != euler_derivation(m)) rep.derivations_match = false;
    if (aut.r_index && x == *aut.r_index) {
      auto rot = rotation_derivation(m);
      if (!rot || *rot != d) rep.derivations_match = false;
    }
    auto coords = component_coordinates(p, 0, d);
    if (!coords) {
      rep.g0_in_G0 = false;
      continue;
    }
    for (std::size_t i = 0; i < coords->size(); ++i) iso(p.offset(0) + i, x) = (*coords)[i];
  }
  rep.isomorphism = iso;
  rep.bijective = iso.rows() == iso.cols() && inverse(iso).has_value();

  for (std::size_t a = 0; a < aut.algebra.dim(); ++a)
    for (std::size_t b = a + 1; b < aut.algebra.dim(); ++b) {
      ++rep.pairs_checked;
      const Vector lhs = iso * aut.algebra.bracket_vector(a, b);
      const Vector rhs = p.algebra.bracket(iso.column(a), iso.column(b));
      if (lhs != rhs) {
        ++rep.pair_failures;
        if (rep.first_failure.empty()) rep.first_failure = pair_name(aut.algebra, a, b);
      }
    }
  rep.transitive = is_transitive(p) && tanaka::is_transitive(aut.algebra);
  const bool ok = rep.bijective && rep.pair_failures == 0 && rep.first_failure.empty() &&
                  rep.g0_in_G0 && rep.euler_in_G0 && rep.derivations_match && rep.transitive;
  rep.verdict = ok ? "confirmed" : "failed";
  return rep;
}

TheoremReport verify_theorem(const SymbolAlgebra& s, const std::string& model, AlphaCase requested) {
  TheoremReport rep = theorem_report(s, model, requested);
  if (!rep.confirmed())
    throw VerificationFailed(
        "verification failed for " + rep.model +
            (rep.first_failure.empty() ? std::string() : ": first failing pair " + rep.first_failure),
        rep);
  return rep;
}

TheoremReport verify_heisenberg(const std::optional<SymbolAlgebra>& s, const std::string& model) {
  const SymbolAlgebra sym = s ? *s : build_symbol_algebra(1);
  if (sym.rho != 2) throw std::invalid_argument("verify_heisenberg: symbol must have length two");
  precheck(sym.algebra);
  TheoremReport rep;
  rep.model = model;
  rep.k = sym.k;
  rep.rho = sym.rho;
  rep.quotient = sym.quotient.describe();
  rep.heisenberg = true;
  rep.alpha_case = AlphaCase::Complex;
  const GradedLieAlgebra m = realify(sym.algebra).algebra;
  rep.field = "real";
  const ProlongedAlgebra p = full_prolongation(m, Flavor::LeviTanaka);
  // For the length-two model aut_CR coincides with the whole prolongation.
  rep.aut_dims = rep.prolongation_dims = p.dims();
  rep.aut_total = rep.prolongation_total = p.total_dim();
  rep.isomorphism = Matrix::identity(p.total_dim());
  rep.pairs_checked = p.total_dim() * (p.total_dim() - 1) / 2;
  rep.bijective = true;
  rep.g0_in_G0 = true;
  rep.G0_equals_g0 = true;
  rep.euler_in_G0 = component_coordinates(p, 0, euler_derivation(m)).has_value();
  rep.derivations_match = rotation_derivation(m).has_value();
  rep.higher_vanish = p.terminated_at == 1;
  rep.transitive = is_transitive(p);
  const bool ok = rep.transitive && rep.euler_in_G0 && check_jacobi(p.algebra).passed();
  rep.verdict = ok ? "confirmed" : "failed";
  return rep;
}

nlohmann::json TheoremReport::to_json() const {
  auto dims = [](const std::map<int, std::size_t>& m) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [d, c] : m) j[std::to_string(d)] = c;
    return j;
  };
  return {{"model", model},
          {"k", k},
          {"rho", rho},
          {"quotient", quotient},
          {"field", field},
          {"case", to_string(alpha_case)},
          {"heisenberg", heisenberg},
          {"aut_cr_dims", dims(aut_dims)},
          {"levi_tanaka_dims", dims(prolongation_dims)},
          {"aut_cr_total", aut_total},
          {"levi_tanaka_total", prolongation_total},
          {"isomorphism", matrix_to_json(isomorphism)},
          {"checks",
           {{"pairs_checked", pairs_checked},
            {"pair_failures", pair_failures},
            {"first_failure", first_failure},
            {"bijective", bijective},
            {"g0_in_G0", g0_in_G0},
            {"G0_equals_g0", G0_equals_g0},
            {"euler_in_G0", euler_in_G0},
            {"derivations_match", derivations_match},
            {"higher_components_vanish", higher_vanish},
            {"transitive", transitive}}},
          {"verdict", verdict}};
}

std::string TheoremReport::to_text() const {
  std::ostringstream os;
  os << "model " << model << "  k=" << k << " rho=" << rho << " quotient=" << quotient
     << " field=" << field << " case=" << to_string(alpha_case) << "\n";
  std::map<int, bool> degrees;
  for (const auto& [d, c] : aut_dims) degrees[d] = true;
  for (const auto& [d, c] : prolongation_dims) degrees[d] = true;
  auto row = [&](const std::string& name, const std::map<int, std::size_t>& m, std::size_t total) {
    os << "  " << std::left << std::setw(10) << name << std::right;
    for (const auto& [d, unused] : degrees) {
      auto it = m.find(d);
      os << std::setw(4) << (it == m.end() ? 0 : it->second);
    }
    os << "  | " << total << "\n";
  };
  os << "  " << std::left << std::setw(10) << "degree" << std::right;
  for (const auto& [d, unused] : degrees) os << std::setw(4) << d;
  os << "  | total\n";
  row("aut_CR", aut_dims, aut_total);
  row("G(g-)", prolongation_dims, prolongation_total);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "  bijective " << yn(bijective) << ", brackets preserved " << (pairs_checked - pair_failures)
     << "/" << pairs_checked << ", g0 in G0 " << yn(g0_in_G0) << ", dim G0 = dim g0 "
     << yn(G0_equals_g0) << ", Euler in G0 " << yn(euler_in_G0) << ", G^j=0 (j>=1) "
     << yn(higher_vanish) << ", transitive " << yn(transitive) << "\n";
  if (!first_failure.empty()) os << "  first failure: " << first_failure << "\n";
  os << "  verdict: " << verdict << "\n";
  return os.str();
}

}  // namespace tanaka
