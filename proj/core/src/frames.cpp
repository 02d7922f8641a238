#include "tanaka/frames.hpp"

#include <functional>
#include <map>

namespace tanaka {

void validate_model(const ModelSpec& m) {
  if (m.k < 1) throw std::invalid_argument(m.id + ": codimension must be positive");
  const Chart chart = m.chart();
  if (m.explicit_L) {
    if (!(m.explicit_L->chart() == chart)) throw ChartMismatch(m.id + ": explicit L uses the wrong chart");
    return;
  }
  if (static_cast<int>(m.phi.size()) != m.k)
    throw std::invalid_argument(m.id + ": expected " + std::to_string(m.k) + " defining polynomials");
  if (m.weights.size() != m.phi.size())
    throw std::invalid_argument(m.id + ": one weight per defining polynomial required");
  for (std::size_t j = 0; j < m.phi.size(); ++j) {
    if (m.phi[j].nvars() != chart.size()) throw std::invalid_argument(m.id + ": phi in the wrong ring");
    if (!(m.phi[j].conj(chart.conj_perm) == m.phi[j]))
      throw std::invalid_argument(m.id + ": phi_" + std::to_string(j + 1) + " is not real");
    if (j > 0 && m.weights[j] < m.weights[j - 1])
      throw std::invalid_argument(m.id + ": weights must be nondecreasing");
  }
}

PolyVectorField tangential_cr_field(const ModelSpec& m) {
  if (m.explicit_L) return *m.explicit_L;
  validate_model(m);
  const Chart chart = m.chart();
  const std::size_t n = chart.size();
  for (const auto& phi : m.phi)
    for (std::size_t u = 2; u < n; ++u)
      if (!phi.independent_of(u)) throw NotRigid(m.id + ": defining polynomial depends on u");
  // L = d/dz + sum a_j d/du_j; L(z) = 1, L(conj z) = 0 and L(u_j - i phi_j) = a_j - i phi_j,z = 0.
  PolyVectorField L = PolyVectorField::coordinate(chart, 0);
  for (int j = 0; j < m.k; ++j) {
    const Polynomial a = Gaussian::i() * m.phi[j].derivative(0);
    L += PolyVectorField(chart, [&] {
      std::vector<Polynomial> comps(n, Polynomial(n));
      comps[2 + j] = a;
      return comps;
    }());
  }
  return L;
}

std::vector<PolyVectorField> hall_word_fields(const PolyVectorField& L, const HallBasis& h) {
  std::vector<PolyVectorField> fields;
  fields.reserve(h.size());
  for (std::size_t w = 0; w < h.size(); ++w) {
    const HallWord& hw = h.word(w);
    if (hw.is_generator()) fields.push_back(hw.letters.front() == 1 ? L : L.conj());
    else fields.push_back(vf_bracket(fields[*hw.left], fields[*hw.right]));
  }
  return fields;
}

GrowthReport growth_and_nondegeneracy(const ModelSpec& m, std::optional<int> max_length) {
  const PolyVectorField L = tangential_cr_field(m);
  const std::size_t n = L.chart().size();
  const int expected = min_length_for_codim(m.k);
  const int bound = max_length.value_or(expected + 1);
  const HallBasis h(bound);
  const auto fields = hall_word_fields(L, h);

  GrowthReport rep;
  EquationSystem span(n);
  std::vector<Vector> basis;
  for (int ell = 1; ell <= bound; ++ell) {
    for (auto w : h.indices_of_length(ell)) {
      Vector v = fields[w].at_origin();
      if (!is_zero(v) && span.add_row(v)) basis.push_back(std::move(v));
    }
    rep.filtration.growth.push_back(basis.size());
    rep.filtration.spans.push_back(basis);
    if (basis.size() == n) {
      rep.filtration.degree_of_nonholonomy = ell;
      break;
    }
  }
  rep.rho = rep.filtration.degree_of_nonholonomy;
  if (rep.rho == 0) {
    rep.reason = "not bracket-generating at the origin within length " + std::to_string(bound);
  } else if (rep.rho != expected) {
    rep.reason = "degree of nonholonomy " + std::to_string(rep.rho) + " differs from the minimum " +
                 std::to_string(expected);
  } else {
    for (int ell = 1; ell < rep.rho; ++ell)
      if (rep.filtration.growth[ell - 1] != cumulative_dim(ell)) {
        rep.reason = "D_" + std::to_string(ell) + " has dimension " +
                     std::to_string(rep.filtration.growth[ell - 1]) + ", free value " +
                     std::to_string(cumulative_dim(ell));
        break;
      }
  }
  rep.totally_nondegenerate = rep.reason.empty();
  return rep;
}

SymbolAlgebra symbol_from_frame(const ModelSpec& m) {
  const GrowthReport g = growth_and_nondegeneracy(m);
  if (!g.totally_nondegenerate) throw NotTotallyNondegenerate(m.id + ": " + g.reason);
  const int rho = g.rho;
  const HallBasis h(rho);
  const auto fields = hall_word_fields(tangential_cr_field(m), h);
  const auto top = h.indices_of_length(rho);
  const std::size_t lower = cumulative_dim(rho - 1);

  // Relations c among top-word values modulo the span of the lower words.
  std::vector<Vector> cols;
  for (auto w : top) cols.push_back(fields[w].at_origin());
  for (std::size_t w = 0; w < lower; ++w) cols.push_back(fields[w].at_origin());
  std::vector<Vector> killed;
  for (const auto& kv : kernel_basis(Matrix::from_columns(cols)))
    killed.emplace_back(kv.begin(), kv.begin() + static_cast<std::ptrdiff_t>(top.size()));
  if (killed.empty()) return build_symbol_algebra(m.k);
  const Matrix proj = Matrix::from_rows(kernel_basis(Matrix::from_columns(killed).transpose()));
  return build_symbol_algebra(m.k, QuotientSpec::explicit_projection(proj, "frame:" + m.id));
}

namespace {

using Word = std::vector<std::uint8_t>;  // letters 0 = X, 1 = Y
using Series = std::map<Word, Rational>;

Series multiply(const Series& a, const Series& b, std::size_t max_len) {
  Series out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      if (wa.size() + wb.size() > max_len) continue;
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      Rational& slot = out[w];
      slot += ca * cb;
    }
  std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

// Coefficients of log(exp X exp Y) up to the given word length.
Series log_exp_exp(std::size_t max_len) {
  Series t;  // exp X exp Y - 1
  Rational fp = 1;
  for (std::size_t p = 0; p <= max_len; ++p) {
    if (p > 0) fp *= Rational(static_cast<long>(p));
    Rational fq = 1;
    for (std::size_t q = 0; p + q <= max_len; ++q) {
      if (q > 0) fq *= Rational(static_cast<long>(q));
      if (p + q == 0) continue;
      Word w(p, 0);
      w.insert(w.end(), q, 1);
      t[w] += Rational(1) / (fp * fq);
    }
  }
  Series result;
  Series power = t;
  for (std::size_t k = 1; k <= max_len; ++k) {
    const Rational c = Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    for (const auto& [w, v] : power) result[w] += c * v;
    power = multiply(power, t, max_len);
  }
  std::erase_if(result, [](const auto& x) { return x.second.is_zero(); });
  return result;
}

using PolyVec = std::vector<Polynomial>;

PolyVec symbolic_bracket(const GradedLieAlgebra& m, const PolyVec& u, const PolyVec& v) {
  const std::size_t n = m.dim();
  const std::size_t ring = u.front().nvars();
  PolyVec out(n, Polynomial(ring));
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || v[j].is_zero() || m.bracket(i, j).empty()) continue;
      const Polynomial prod = u[i] * v[j];
      for (const auto& [k, c] : m.bracket(i, j)) out[k] += c * prod;
    }
  }
  return out;
}

}  // namespace

GroupLaw bch_group_law(const GradedLieAlgebra& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.degree(i) >= 0) throw NotNilpotent("group law needs a negatively graded algebra");
  GroupLaw g;
  g.algebra = m;
  g.nilpotency_class = m.dim() == 0 ? 0 : -m.min_degree();
  const std::size_t n = m.dim();
  const std::size_t ring = 2 * n;
  PolyVec a, b;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(Polynomial::variable(ring, i));
    b.push_back(Polynomial::variable(ring, n + i));
  }
  g.product = bch_apply(g, a, b);
  return g;
}

std::vector<Polynomial> bch_apply(const GroupLaw& g, const std::vector<Polynomial>& u,
                                  const std::vector<Polynomial>& v) {
  const std::size_t n = g.dim();
  if (u.size() != n || v.size() != n) throw std::invalid_argument("bch_apply: wrong vector length");
  if (n == 0) return {};
  const std::size_t ring = u.front().nvars();
  const auto c = static_cast<std::size_t>(g.nilpotency_class);
  const Series z = log_exp_exp(c);

  // Right-nested brackets [w_1, [w_2, ... w_n]] memoized by suffix; a Lie
  // polynomial of degree d equals 1/d times the sum of its coefficients times them.
  std::map<Word, PolyVec> nested;
  std::function<const PolyVec&(const Word&, std::size_t)> right_nested =
      [&](const Word& w, std::size_t from) -> const PolyVec& {
    Word key(w.begin() + static_cast<std::ptrdiff_t>(from), w.end());
    if (auto it = nested.find(key); it != nested.end()) return it->second;
    PolyVec val;
    if (key.size() == 1) val = key.front() == 0 ? u : v;
    else val = symbolic_bracket(g.algebra, key.front() == 0 ? u : v, right_nested(w, from + 1));
    return nested.emplace(key, std::move(val)).first->second;
  };

  PolyVec out(n, Polynomial(ring));
  for (const auto& [w, coeff] : z) {
    const PolyVec& r = right_nested(w, 0);
    const Gaussian s(coeff / Rational(static_cast<long>(w.size())));
    for (std::size_t k = 0; k < n; ++k)
      if (!r[k].is_zero()) out[k] += s * r[k];
  }
  return out;
}

bool check_associativity(const GroupLaw& g) {
  const std::size_t n = g.dim();
  const std::size_t ring = 3 * n;
  PolyVec a, b, c;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(Polynomial::variable(ring, i));
    b.push_back(Polynomial::variable(ring, n + i));
    c.push_back(Polynomial::variable(ring, 2 * n + i));
  }
  auto law = [&](const PolyVec& x, const PolyVec& y) {
    PolyVec args = x;
    args.insert(args.end(), y.begin(), y.end());
    PolyVec out;
    for (const auto& p : g.product) out.push_back(p.substitute(args));
    return out;
  };
  return law(a, law(b, c)) == law(law(a, b), c);
}

std::vector<PolyVectorField> left_invariant_frame(const GroupLaw& g) {
  const std::size_t n = g.dim();
  const Chart chart = Chart::real(n, "a");
  std::vector<PolyVectorField> frame;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> comps;
    for (std::size_t j = 0; j < n; ++j) comps.push_back(g.product[j].derivative(n + i).restrict_to(0, n));
    frame.emplace_back(chart, std::move(comps));
  }
  return frame;
}

std::vector<std::pair<std::size_t, std::size_t>> frame_structure_mismatches(
    const GradedLieAlgebra& m, const std::vector<PolyVectorField>& frame) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  const std::size_t n = m.dim();
  if (frame.size() != n) throw std::invalid_argument("frame size does not match the algebra");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      PolyVectorField expected(frame[i].chart());
      for (const auto& [k, c] : m.bracket(i, j)) expected += c * frame[k];
      if (!(vf_bracket(frame[i], frame[j]) == expected)) bad.emplace_back(i, j);
    }
  return bad;
}

}  // namespace tanaka
