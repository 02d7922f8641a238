#include "tanaka/prolong.hpp"

#include <algorithm>

namespace tanaka {

std::string to_string(Flavor f) {
  return f == Flavor::LeviTanaka ? "levi-tanaka" : "full-tanaka";
}

Flavor flavor_from_string(const std::string& s) {
  if (s == "levi-tanaka" || s == "levi" || s == "lt") return Flavor::LeviTanaka;
  if (s == "full-tanaka" || s == "full" || s == "tanaka") return Flavor::FullTanaka;
  throw std::invalid_argument("unknown flavor: " + s);
}

std::size_t PartialProlongation::offset(int l) const {
  std::size_t off = m.dim();
  for (int j = 0; j < l && j < static_cast<int>(components.size()); ++j) off += components[j].dim();
  return off;
}

std::size_t PartialProlongation::global_dim() const {
  return offset(static_cast<int>(components.size()));
}

DerivationMap PartialProlongation::map_of(int l, std::size_t i) const {
  DerivationMap d = components.at(l).basis.at(i);
  for (auto& v : d) v.resize(global_dim());
  return d;
}

Vector PartialProlongation::act(const Vector& u, std::size_t b) const {
  const std::size_t n = m.dim();
  Vector r(global_dim());
  for (std::size_t i = 0; i < n && i < u.size(); ++i)
    if (!u[i].is_zero())
      for (const auto& [k, c] : m.bracket(i, b)) r[k] += u[i] * c;
  std::size_t pos = n;
  for (const auto& comp : components)
    for (const auto& d : comp.basis) {
      if (pos < u.size() && !u[pos].is_zero()) {
        const Vector& img = d[b];
        for (std::size_t k = 0; k < img.size(); ++k)
          if (!img[k].is_zero()) r[k] += u[pos] * img[k];
      }
      ++pos;
    }
  return r;
}

namespace {

// Global indices that a degree-l map may send basis element b to.
std::vector<std::size_t> slot(const PartialProlongation& p, std::size_t b, int l) {
  const int target = p.m.degree(b) + l;
  if (target < 0) return p.m.indices_of_degree(target);
  std::vector<std::size_t> out;
  const std::size_t off = p.offset(target);
  for (std::size_t i = 0; i < p.components.at(target).dim(); ++i) out.push_back(off + i);
  return out;
}

ProlongationComponent solve_component(const PartialProlongation& p, int l, bool j_constraint) {
  const GradedLieAlgebra& m = p.m;
  const std::size_t n = m.dim();
  const std::size_t g = p.global_dim();

  std::vector<std::vector<std::size_t>> slots(n);
  std::vector<std::size_t> start(n + 1, 0);
  for (std::size_t b = 0; b < n; ++b) {
    slots[b] = slot(p, b, l);
    start[b + 1] = start[b] + slots[b].size();
  }
  const std::size_t unknowns = start[n];
  ProlongationComponent comp{l, {}};
  if (unknowns == 0) return comp;

  // act_on[s][b] = [g_s, e_b] for every global index s that occurs in a slot.
  std::map<std::size_t, std::vector<Vector>> act_on;
  for (const auto& sl : slots)
    for (auto s : sl)
      if (!act_on.count(s)) {
        std::vector<Vector> row(n);
        const Vector e = unit_vector(g, s);
        for (std::size_t b = 0; b < n; ++b) row[b] = p.act(e, b);
        act_on.emplace(s, std::move(row));
      }

  EquationSystem sys(unknowns);
  std::vector<Vector> block(g, Vector(unknowns));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = y + 1; z < n; ++z) {
      for (auto& row : block) std::fill(row.begin(), row.end(), Gaussian());
      for (const auto& [c, coeff] : m.bracket(y, z))
        for (std::size_t s = 0; s < slots[c].size(); ++s) block[slots[c][s]][start[c] + s] += coeff;
      for (std::size_t s = 0; s < slots[y].size(); ++s) {
        const Vector& v = act_on.at(slots[y][s])[z];
        for (std::size_t r = 0; r < g; ++r)
          if (!v[r].is_zero()) block[r][start[y] + s] -= v[r];
      }
      for (std::size_t s = 0; s < slots[z].size(); ++s) {
        const Vector& v = act_on.at(slots[z][s])[y];
        for (std::size_t r = 0; r < g; ++r)
          if (!v[r].is_zero()) block[r][start[z] + s] += v[r];
      }
      for (const auto& row : block)
        if (!is_zero(row)) sys.add_row(row);
    }

  if (j_constraint) {
    if (!m.J()) throw MissingJ();
    const Matrix& j = *m.J();
    const auto g1 = m.indices_of_degree(-1);
    // Slot of a degree -1 element at l = 0 is g1 itself, in the same order.
    for (std::size_t c = 0; c < g1.size(); ++c)
      for (std::size_t t = 0; t < g1.size(); ++t) {
        Vector row(unknowns);
        for (std::size_t r = 0; r < g1.size(); ++r) row[start[g1[r]] + t] += j(r, c);
        for (std::size_t s = 0; s < g1.size(); ++s) row[start[g1[c]] + s] -= j(t, s);
        if (!is_zero(row)) sys.add_row(std::move(row));
      }
  }

  for (const auto& kv : sys.kernel()) {
    DerivationMap d(n, Vector(g));
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t s = 0; s < slots[b].size(); ++s) d[b][slots[b][s]] = kv[start[b] + s];
    comp.basis.push_back(std::move(d));
  }
  return comp;
}

Vector flatten(const DerivationMap& d, std::size_t width) {
  Vector out;
  for (const auto& v : d) {
    Vector w = v;
    w.resize(width);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

}  // namespace

ProlongationComponent grade0(const GradedLieAlgebra& m, bool j_constraint) {
  if (!is_fundamental(m)) throw NotFundamental();
  PartialProlongation p{m, j_constraint ? Flavor::LeviTanaka : Flavor::FullTanaka, {}};
  return solve_component(p, 0, j_constraint);
}

ProlongationComponent prolong_component(const PartialProlongation& p, int l) {
  if (l < 1) throw std::invalid_argument("prolong_component: degree must be positive, use grade0");
  if (static_cast<int>(p.components.size()) < l)
    throw MissingLowerComponents("components 0.." + std::to_string(l - 1) + " are required, have " +
                                 std::to_string(p.components.size()));
  PartialProlongation lower{p.m, p.flavor, {p.components.begin(), p.components.begin() + l}};
  return solve_component(lower, l, false);
}

bool satisfies_leibniz(const PartialProlongation& p, int l, const DerivationMap& d) {
  const std::size_t n = p.m.dim();
  const std::size_t g = p.global_dim();
  auto image = [&](std::size_t b) {
    Vector v = d.at(b);
    v.resize(g);
    return v;
  };
  for (std::size_t b = 0; b < n; ++b) {
    const Vector v = image(b);
    const int target = p.m.degree(b) + l;
    for (std::size_t k = 0; k < g; ++k) {
      if (v[k].is_zero()) continue;
      const int deg = k < n ? p.m.degree(k) : [&] {
        int j = 0;
        while (p.offset(j + 1) <= k) ++j;
        return j;
      }();
      if (deg != target) return false;
    }
  }
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = y + 1; z < n; ++z) {
      Vector r(g);
      for (const auto& [c, coeff] : p.m.bracket(y, z)) axpy(coeff, image(c), r);
      r = r - p.act(image(y), z) + p.act(image(z), y);
      if (!is_zero(r)) return false;
    }
  return true;
}

std::optional<Vector> component_coordinates(const PartialProlongation& p, int l,
                                            const DerivationMap& d) {
  const auto& comp = p.components.at(l);
  const std::size_t width = p.global_dim();
  if (comp.dim() == 0) {
    if (is_zero(flatten(d, width))) return Vector{};
    return std::nullopt;
  }
  std::vector<Vector> cols;
  for (const auto& b : comp.basis) cols.push_back(flatten(b, width));
  return solve_linear(Matrix::from_columns(cols), flatten(d, width));
}

ProlongedAlgebra full_prolongation(const GradedLieAlgebra& m, Flavor flavor,
                                   std::optional<int> guard) {
  if (!is_fundamental(m)) throw NotFundamental();
  const bool levi = flavor == Flavor::LeviTanaka;
  if (levi && !is_pseudocomplex(m)) throw NotPseudocomplex();
  const int limit = guard.value_or(-m.min_degree() + 3);

  ProlongedAlgebra out;
  out.m = m;
  out.flavor = flavor;
  out.components.push_back(grade0(m, levi));
  int l = 0;
  while (out.components.back().dim() > 0) {
    if (l >= limit)
      throw GuardExceeded("prolongation still nonzero at degree " + std::to_string(l) +
                          " (guard " + std::to_string(limit) + ")");
    ++l;
    out.components.push_back(prolong_component(out, l));
  }
  out.terminated_at = l;
  // Once a component vanishes, every later one does too.
  if (prolong_component(out, l + 1).dim() != 0)
    throw InvalidAlgebra("prolongation did not terminate after a zero component");

  const std::size_t n = m.dim();
  const std::size_t total = out.global_dim();
  std::vector<BasisElement> basis = m.basis();
  std::vector<int> comp_of(total, -1);
  for (int c = 0; c < static_cast<int>(out.components.size()); ++c)
    for (std::size_t i = 0; i < out.components[c].dim(); ++i) {
      comp_of[out.offset(c) + i] = c;
      basis.push_back({"G" + std::to_string(c) + "." + std::to_string(i + 1), c, std::nullopt, nullptr});
    }

  BracketTable table(total);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector v = m.bracket_vector(a, b);
      v.resize(total);
      table.set(a, b, v);
    }
  for (std::size_t s = n; s < total; ++s) {
    const DerivationMap d = out.map_of(comp_of[s], s - out.offset(comp_of[s]));
    for (std::size_t b = 0; b < n; ++b) table.set(s, b, d[b]);
  }

  auto bracket_with = [&](std::size_t s, const Vector& u) {
    Vector r(total);
    for (std::size_t k = 0; k < total; ++k)
      if (!u[k].is_zero())
        for (const auto& [t, c] : table.get(s, k)) r[t] += u[k] * c;
    return r;
  };

  // Brackets of positive-degree pairs, by increasing total degree, via
  // [g, h](x) = [g, [h, x]] - [h, [g, x]].
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t s = n; s < total; ++s)
    for (std::size_t t = s + 1; t < total; ++t) pairs.emplace_back(s, t);
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    return comp_of[x.first] + comp_of[x.second] < comp_of[y.first] + comp_of[y.second];
  });
  for (const auto& [s, t] : pairs) {
    const int deg = comp_of[s] + comp_of[t];
    DerivationMap img(n);
    for (std::size_t x = 0; x < n; ++x) {
      Vector hx(total);
      for (const auto& [k, c] : table.get(t, x)) hx[k] += c;
      Vector gx(total);
      for (const auto& [k, c] : table.get(s, x)) gx[k] += c;
      img[x] = bracket_with(s, hx) - bracket_with(t, gx);
    }
    Vector result(total);
    if (deg < static_cast<int>(out.components.size()) && out.components[deg].dim() > 0) {
      auto coords = component_coordinates(out, deg, img);
      if (!coords)
        throw InvalidAlgebra("bracket of " + basis[s].label + " and " + basis[t].label +
                             " is not in the prolongation");
      for (std::size_t i = 0; i < coords->size(); ++i) result[out.offset(deg) + i] = (*coords)[i];
    } else {
      for (const auto& v : img)
        if (!is_zero(v))
          throw InvalidAlgebra("bracket of " + basis[s].label + " and " + basis[t].label +
                               " lands in a vanishing component");
    }
    table.set(s, t, result);
  }

  AlgebraMeta meta = m.meta();
  meta.flavor = to_string(flavor);
  out.algebra = GradedLieAlgebra(std::move(basis), std::move(table), m.J(), std::nullopt, meta);
  if (!tanaka::is_transitive(out.algebra))
    throw InvalidAlgebra("assembled prolongation is not transitive");
  return out;
}

bool is_transitive(const ProlongedAlgebra& p) { return tanaka::is_transitive(p.algebra); }

}  // namespace tanaka
