#include "tanaka/liealg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tanaka {

namespace {

SparseTerms to_sparse(const Vector& v) {
  SparseTerms out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.emplace_back(k, v[k]);
  return out;
}

Vector to_dense(const SparseTerms& t, std::size_t n) {
  Vector v(n);
  for (const auto& [k, c] : t) v[k] = c;
  return v;
}

void add_sparse(Vector& acc, const Gaussian& s, const SparseTerms& t) {
  if (s.is_zero()) return;
  for (const auto& [k, c] : t) acc[k] += s * c;
}

}  // namespace

void BracketTable::set(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("BracketTable::set: index out of range");
  if (value.size() != dim_) throw std::invalid_argument("BracketTable::set: value has wrong size");
  if (i == j) {
    if (!is_zero(value)) throw std::invalid_argument("BracketTable::set: [e, e] must vanish");
    return;
  }
  entries_[i * dim_ + j] = to_sparse(value);
  entries_[j * dim_ + i] = to_sparse(Gaussian(-1) * value);
}

GradedLieAlgebra::GradedLieAlgebra(std::vector<BasisElement> basis, BracketTable brackets,
                                   std::optional<Matrix> j, std::optional<Matrix> conjugation,
                                   AlgebraMeta meta)
    : basis_(std::move(basis)),
      brackets_(std::move(brackets)),
      j_(std::move(j)),
      conjugation_(std::move(conjugation)),
      meta_(std::move(meta)) {
  validate();
}

GradedLieAlgebra GradedLieAlgebra::unchecked(std::vector<BasisElement> basis, BracketTable brackets,
                                             std::optional<Matrix> j,
                                             std::optional<Matrix> conjugation, AlgebraMeta meta) {
  GradedLieAlgebra a;
  a.basis_ = std::move(basis);
  a.brackets_ = std::move(brackets);
  a.j_ = std::move(j);
  a.conjugation_ = std::move(conjugation);
  a.meta_ = std::move(meta);
  return a;
}

void GradedLieAlgebra::validate() const {
  const std::size_t n = dim();
  if (brackets_.dim() != n) throw InvalidAlgebra("bracket table size does not match basis");
  for (std::size_t i = 0; i < n; ++i) {
    if (!brackets_.get(i, i).empty()) throw InvalidAlgebra("[e, e] != 0 for " + basis_[i].label);
    for (std::size_t j = i + 1; j < n; ++j)
      if (to_dense(brackets_.get(i, j), n) != Gaussian(-1) * to_dense(brackets_.get(j, i), n))
        throw InvalidAlgebra("bracket not antisymmetric on (" + basis_[i].label + ", " +
                             basis_[j].label + ")");
  }
  if (auto bad = grading_violations(*this); !bad.empty())
    throw InvalidAlgebra("bracket [" + basis_[bad.front().first].label + ", " +
                         basis_[bad.front().second].label + "] violates the grading");
  if (auto rep = check_jacobi(*this); !rep.passed()) {
    const auto& v = rep.violations.front();
    throw InvalidAlgebra("Jacobi identity fails on (" + basis_[v.i].label + ", " +
                         basis_[v.j].label + ", " + basis_[v.k].label + ")");
  }
  if (j_) {
    const std::size_t d = indices_of_degree(-1).size();
    if (j_->rows() != d || j_->cols() != d) throw InvalidAlgebra("J has wrong shape");
    if ((*j_) * (*j_) != Gaussian(-1) * Matrix::identity(d)) throw InvalidAlgebra("J*J != -id");
  }
  if (conjugation_) {
    const Matrix& p = *conjugation_;
    if (p.rows() != n || p.cols() != n) throw InvalidAlgebra("conjugation has wrong shape");
    if (p * p.conj() != Matrix::identity(n)) throw InvalidAlgebra("conjugation is not an involution");
  }
}

std::vector<std::size_t> GradedLieAlgebra::indices_of_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].degree == d) out.push_back(i);
  return out;
}

std::vector<int> GradedLieAlgebra::degrees() const {
  std::set<int> s;
  for (const auto& b : basis_) s.insert(b.degree);
  return {s.begin(), s.end()};
}

std::map<int, std::size_t> GradedLieAlgebra::dims_by_degree() const {
  std::map<int, std::size_t> m;
  for (const auto& b : basis_) ++m[b.degree];
  return m;
}

int GradedLieAlgebra::min_degree() const {
  auto d = degrees();
  return d.empty() ? 0 : d.front();
}

int GradedLieAlgebra::max_degree() const {
  auto d = degrees();
  return d.empty() ? 0 : d.back();
}

Vector GradedLieAlgebra::bracket_vector(std::size_t i, std::size_t j) const {
  return to_dense(brackets_.get(i, j), dim());
}

Vector GradedLieAlgebra::bracket(const Vector& a, const Vector& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("bracket: vector size mismatch");
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero() || i == j) continue;
      add_sparse(r, a[i] * b[j], brackets_.get(i, j));
    }
  }
  return r;
}

Vector GradedLieAlgebra::bracket(std::size_t i, const Vector& v) const {
  Vector r(dim());
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) add_sparse(r, v[j], brackets_.get(i, j));
  return r;
}

bool GradedLieAlgebra::is_real() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      for (const auto& [k, c] : bracket(i, j))
        if (!c.is_real()) return false;
  return !j_ || j_->is_real();
}

GradedLieAlgebra GradedLieAlgebra::with_meta(AlgebraMeta meta) const {
  GradedLieAlgebra a = *this;
  a.meta_ = std::move(meta);
  return a;
}

GradedLieAlgebra GradedLieAlgebra::with_J(std::optional<Matrix> j) const {
  return GradedLieAlgebra(basis_, brackets_, std::move(j), conjugation_, meta_);
}

GradedLieAlgebra GradedLieAlgebra::with_conjugation(std::optional<Matrix> p) const {
  return GradedLieAlgebra(basis_, brackets_, j_, std::move(p), meta_);
}

GradedLieAlgebra GradedLieAlgebra::change_basis(const Matrix& change,
                                                std::vector<BasisElement> new_basis) const {
  const std::size_t n = dim();
  if (change.rows() != n || change.cols() != n || new_basis.size() != n)
    throw std::invalid_argument("change_basis: shape mismatch");
  auto inv = inverse(change);
  if (!inv) throw std::invalid_argument("change_basis: matrix is singular");
  std::vector<Vector> cols(n);
  for (std::size_t a = 0; a < n; ++a) cols[a] = change.column(a);
  BracketTable table(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) table.set(a, b, (*inv) * bracket(cols[a], cols[b]));

  std::optional<Matrix> j;
  if (j_) {
    const auto old_m1 = indices_of_degree(-1);
    std::vector<std::size_t> new_m1;
    for (std::size_t a = 0; a < n; ++a)
      if (new_basis[a].degree == -1) new_m1.push_back(a);
    if (new_m1.size() != old_m1.size()) throw std::invalid_argument("change_basis: degree -1 mismatch");
    Matrix block(old_m1.size(), new_m1.size());
    for (std::size_t r = 0; r < old_m1.size(); ++r)
      for (std::size_t c = 0; c < new_m1.size(); ++c) block(r, c) = change(old_m1[r], new_m1[c]);
    auto block_inv = inverse(block);
    if (!block_inv) throw std::invalid_argument("change_basis: does not preserve degree -1");
    j = (*block_inv) * (*j_) * block;
  }
  std::optional<Matrix> p;
  if (conjugation_) p = (*inv) * (*conjugation_) * change.conj();
  return GradedLieAlgebra(std::move(new_basis), std::move(table), std::move(j), std::move(p), meta_);
}

JacobiReport check_jacobi(const GradedLieAlgebra& a) {
  JacobiReport rep;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r(n);
        for (const auto& [s, c] : a.bracket(i, j)) add_sparse(r, c, a.bracket(s, k));
        for (const auto& [s, c] : a.bracket(j, k)) add_sparse(r, c, a.bracket(s, i));
        for (const auto& [s, c] : a.bracket(k, i)) add_sparse(r, c, a.bracket(s, j));
        if (!is_zero(r)) rep.violations.push_back({i, j, k, std::move(r)});
      }
  return rep;
}

std::vector<std::pair<std::size_t, std::size_t>> grading_violations(const GradedLieAlgebra& a) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.bracket(i, j))
        if (a.degree(k) != a.degree(i) + a.degree(j)) {
          out.emplace_back(i, j);
          break;
        }
  return out;
}

bool is_fundamental(const GradedLieAlgebra& a) {
  const std::size_t n = a.dim();
  for (const auto& b : a.basis())
    if (b.degree >= 0) throw std::invalid_argument("is_fundamental: algebra must be negatively graded");
  const auto gens = a.indices_of_degree(-1);
  EquationSystem span(n);
  std::vector<Vector> layer;
  for (auto g : gens) {
    Vector v = unit_vector(n, g);
    if (span.add_row(v)) layer.push_back(std::move(v));
  }
  while (!layer.empty()) {
    std::vector<Vector> next;
    for (auto g : gens)
      for (const auto& v : layer) {
        Vector w = a.bracket(g, v);
        if (!is_zero(w) && span.add_row(w)) next.push_back(std::move(w));
      }
    layer = std::move(next);
  }
  return span.rank() == n;
}

bool is_nondegenerate_symbol(const GradedLieAlgebra& a) {
  const auto g1 = a.indices_of_degree(-1);
  const std::size_t n = a.dim();
  // Column x holds the concatenation of [e_x, e_y] over y in degree -1.
  Matrix m(g1.size() * n, g1.size());
  for (std::size_t cx = 0; cx < g1.size(); ++cx)
    for (std::size_t ry = 0; ry < g1.size(); ++ry)
      for (const auto& [k, c] : a.bracket(g1[cx], g1[ry])) m(ry * n + k, cx) = c;
  return rank(m) == g1.size();
}

bool is_pseudocomplex(const GradedLieAlgebra& a) {
  if (!a.J()) throw MissingJ();
  const Matrix& j = *a.J();
  const auto g1 = a.indices_of_degree(-1);
  const std::size_t n = a.dim();
  auto apply_j = [&](std::size_t col) {
    Vector v(n);
    for (std::size_t r = 0; r < g1.size(); ++r) v[g1[r]] = j(r, col);
    return v;
  };
  for (std::size_t x = 0; x < g1.size(); ++x)
    for (std::size_t y = x + 1; y < g1.size(); ++y)
      if (a.bracket_vector(g1[x], g1[y]) != a.bracket(apply_j(x), apply_j(y))) return false;
  return true;
}

bool is_transitive(const GradedLieAlgebra& a) {
  std::vector<std::size_t> neg, nonneg;
  for (std::size_t i = 0; i < a.dim(); ++i) (a.degree(i) < 0 ? neg : nonneg).push_back(i);
  const std::size_t n = a.dim();
  EquationSystem rows(neg.size() * n);
  for (auto p : nonneg) {
    Vector v(neg.size() * n);
    for (std::size_t m = 0; m < neg.size(); ++m)
      for (const auto& [k, c] : a.bracket(p, neg[m])) v[m * n + k] = c;
    if (!rows.add_row(std::move(v))) return false;
  }
  return true;
}

std::string QuotientSpec::describe() const {
  switch (kind) {
    case Kind::Default: return "default";
    case Kind::Truncate: return "truncate";
    case Kind::Explicit: return "explicit:" + source;
  }
  return "unknown";
}

Matrix swap_on_layer(const HallBasis& h, int ell) {
  const auto layer = h.indices_of_length(ell);
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t p = 0; p < layer.size(); ++p) pos[layer[p]] = p;
  // Swapped image of every word up to length ell, built along the bracketing tree.
  std::vector<HallCombination> image(h.size());
  for (std::size_t w = 0; w < h.size() && h.word(w).length() <= ell; ++w) {
    const HallWord& hw = h.word(w);
    if (hw.is_generator()) image[w] = {{hw.letters.front() == 1 ? 1u : 0u, 1}};
    else image[w] = h.bracket(image[*hw.left], image[*hw.right]);
  }
  Matrix s(layer.size(), layer.size());
  for (std::size_t c = 0; c < layer.size(); ++c)
    for (const auto& [k, coeff] : image[layer[c]]) s(pos.at(k), c) = Rational(coeff);
  return s;
}

namespace {

// Row-reduced projection with exactly q rows; throws BadQuotient on rank deficiency.
Matrix normalize_projection(const Matrix& p, std::size_t q) {
  EchelonForm e = row_reduce(p);
  if (e.pivots.size() != q)
    throw BadQuotient("projection has rank " + std::to_string(e.pivots.size()) + ", expected " +
                      std::to_string(q));
  Matrix out(q, p.cols());
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t c = 0; c < p.cols(); ++c) out(r, c) = e.reduced(r, c);
  return out;
}

// Projection whose kernel is the span of the given top-layer vectors.
Matrix annihilator_projection(const std::vector<Vector>& killed, std::size_t width) {
  if (killed.empty()) return Matrix::identity(width);
  Matrix k = Matrix::from_columns(killed);
  auto rows = kernel_basis(k.transpose());
  return Matrix::from_rows(rows);
}

// Kernel spanned by conjugation-fixed vectors from the trailing words, chosen
// complementary to the first q words.
Matrix default_projection(const HallBasis& h, int rho, std::size_t q) {
  const Matrix swap = swap_on_layer(h, rho);
  const std::size_t w = swap.rows();
  std::vector<Vector> killed;
  EquationSystem span(w);
  for (std::size_t r = 0; r < q; ++r) span.add_row(unit_vector(w, r));
  for (std::size_t t = w; t-- > 0 && span.rank() < w;) {
    const Vector e = unit_vector(w, t);
    const Vector s = swap.column(t);
    for (Vector cand : {e + s, Gaussian::i() * (e - s)})
      if (!is_zero(cand) && span.add_row(cand)) killed.push_back(std::move(cand));
  }
  return annihilator_projection(killed, w);
}

}  // namespace

SymbolAlgebra build_symbol_algebra(int k, const QuotientSpec& quotient) {
  if (k < 1) throw BadQuotient("codimension must be positive");
  const int rho = min_length_for_codim(k);
  const HallBasis h(rho);
  const auto top = h.indices_of_length(rho);
  const std::size_t lower = cumulative_dim(rho - 1);
  const std::size_t w = top.size();
  const std::size_t q = static_cast<std::size_t>(2 + k) - lower;

  Matrix proj;
  switch (quotient.kind) {
    case QuotientSpec::Kind::Default:
      proj = normalize_projection(default_projection(h, rho, q), q);
      break;
    case QuotientSpec::Kind::Truncate: {
      proj = Matrix(q, w);
      for (std::size_t r = 0; r < q; ++r) proj(r, r) = 1;
      break;
    }
    case QuotientSpec::Kind::Explicit: {
      if (!quotient.projection) throw BadQuotient("explicit quotient without a projection matrix");
      const Matrix& p = *quotient.projection;
      if (p.rows() != q || p.cols() != w)
        throw BadQuotient("explicit projection must be " + std::to_string(q) + "x" +
                          std::to_string(w) + " for k=" + std::to_string(k) + ", got " +
                          std::to_string(p.rows()) + "x" + std::to_string(p.cols()));
      proj = normalize_projection(p, q);
      break;
    }
  }

  // Surviving top words sit at the pivot columns of the reduced projection.
  std::vector<std::size_t> survivors;
  for (std::size_t r = 0; r < q; ++r) {
    std::size_t c = 0;
    while (proj(r, c).is_zero()) ++c;
    survivors.push_back(c);
  }

  std::vector<std::size_t> hall_index;
  for (std::size_t i = 0; i < lower; ++i) hall_index.push_back(i);
  for (auto c : survivors) hall_index.push_back(top[c]);
  const std::size_t n = hall_index.size();

  std::map<std::size_t, std::size_t> lower_pos;
  for (std::size_t i = 0; i < lower; ++i) lower_pos[i] = i;
  std::map<std::size_t, std::size_t> top_col;
  for (std::size_t c = 0; c < w; ++c) top_col[top[c]] = c;

  auto embed = [&](const HallCombination& comb) {
    Vector v(n);
    for (const auto& [word, coeff] : comb) {
      if (auto it = lower_pos.find(word); it != lower_pos.end()) {
        v[it->second] += Rational(coeff);
      } else {
        const std::size_t c = top_col.at(word);
        for (std::size_t r = 0; r < q; ++r)
          if (!proj(r, c).is_zero()) v[lower + r] += Gaussian(Rational(coeff)) * proj(r, c);
      }
    }
    return v;
  };

  std::vector<BasisElement> basis;
  for (auto hi : hall_index) {
    const HallWord& hw = h.word(hi);
    basis.push_back({h.label(hi), -hw.length(), hw.bidegree, h.to_json(hi)});
  }
  BracketTable table(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      table.set(a, b, embed(h.bracket(hall_index[a], hall_index[b], Truncation::Drop)));

  Matrix j(2, 2);
  j(0, 0) = Gaussian::i();
  j(1, 1) = -Gaussian::i();

  // Conjugation exists iff the killed subspace is stable under the generator swap.
  std::optional<Matrix> conjugation;
  {
    const Matrix swap = swap_on_layer(h, rho);
    bool stable = true;
    for (const auto& kv : kernel_basis(proj))
      if (!is_zero(proj * (swap * conj(kv)))) stable = false;
    if (stable) {
      Matrix p(n, n);
      for (std::size_t a = 0; a < n; ++a) {
        const int len = h.word(hall_index[a]).length();
        const Matrix s = swap_on_layer(h, len);
        const auto layer = h.indices_of_length(len);
        const std::size_t col =
            std::find(layer.begin(), layer.end(), hall_index[a]) - layer.begin();
        HallCombination img;
        for (std::size_t r = 0; r < layer.size(); ++r)
          if (!s(r, col).is_zero()) img[layer[r]] = s(r, col).re().num();  // swap entries are integers
        const Vector v = embed(img);
        for (std::size_t r = 0; r < n; ++r) p(r, a) = v[r];
      }
      conjugation = std::move(p);
    }
  }

  AlgebraMeta meta;
  meta.k = k;
  meta.rho = rho;
  meta.quotient = quotient.describe();
  meta.field = "complex";
  GradedLieAlgebra alg(std::move(basis), std::move(table), std::move(j), std::move(conjugation),
                       std::move(meta));

  if (alg.dim() != static_cast<std::size_t>(2 + k)) throw BadQuotient("symbol algebra has wrong dimension");
  for (int ell = 1; ell < rho; ++ell)
    if (alg.indices_of_degree(-ell).size() != witt_dim(ell))
      throw BadQuotient("symbol algebra is not free below the top degree");
  if (!is_fundamental(alg)) throw BadQuotient("symbol algebra is not fundamental");

  return SymbolAlgebra{std::move(alg), k, rho, quotient, std::move(proj), std::move(hall_index)};
}

RealForm realify(const GradedLieAlgebra& a) {
  if (!a.conjugation()) throw NotSelfConjugate("algebra carries no conjugation");
  const Matrix& p = *a.conjugation();
  const std::size_t n = a.dim();
  auto sigma = [&](const Vector& v) { return p * conj(v); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sigma(a.bracket_vector(i, j)) != a.bracket(p.column(i), p.column(j)))
        throw NotSelfConjugate("conjugation does not preserve [" + a.element(i).label + ", " +
                               a.element(j).label + "]");

  std::vector<Vector> cols;
  std::vector<BasisElement> labels;
  EquationSystem span(n);
  for (std::size_t e = 0; e < n && cols.size() < n; ++e) {
    const Vector u = unit_vector(n, e);
    const Vector s = p.column(e);
    const BasisElement& el = a.element(e);
    std::vector<std::pair<Vector, std::string>> cands;
    if (s == u) {
      cands.emplace_back(u, el.label);
    } else if (s == Gaussian(-1) * u) {
      cands.emplace_back(Gaussian::i() * u, "im" + el.label);
    } else {
      cands.emplace_back(u + s, "re" + el.label);
      cands.emplace_back(Gaussian::i() * (u - s), "im" + el.label);
    }
    for (auto& [v, label] : cands) {
      if (cols.size() == n || is_zero(v) || !span.add_row(v)) continue;
      if (label == "re1") label = "x";
      if (label == "im1") label = "y";
      labels.push_back({label, el.degree, std::nullopt, nullptr});
      cols.push_back(v);
    }
  }
  if (cols.size() != n) throw NotSelfConjugate("fixed points of the conjugation do not span");
  const Matrix basis = Matrix::from_columns(cols);
  GradedLieAlgebra real = a.change_basis(basis, labels);
  if (!real.is_real()) throw NotSelfConjugate("structure constants are not real in the fixed-point basis");
  AlgebraMeta meta = a.meta();
  meta.field = "real";
  real = real.with_conjugation(Matrix::identity(n)).with_meta(meta);
  return {std::move(real), basis};
}

GradedLieAlgebra complexify(const GradedLieAlgebra& real) {
  if (!real.is_real()) throw std::invalid_argument("complexify: algebra is not real");
  AlgebraMeta meta = real.meta();
  meta.field = "complex";
  return real.with_conjugation(Matrix::identity(real.dim())).with_meta(meta);
}

nlohmann::json scalar_to_json(const Gaussian& q) {
  return {{"re", q.re().str()}, {"im", q.im().str()}};
}

Gaussian scalar_from_json(const nlohmann::json& j) {
  auto part = [&](const char* key) -> Rational {
    if (!j.contains(key)) return Rational();
    const auto& v = j.at(key);
    if (v.is_number_integer()) return Rational(v.get<long>());
    return Rational::parse(v.get<std::string>());
  };
  return {part("re"), part("im")};
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  std::vector<Vector> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
    Vector v;
    for (const auto& x : row) {
      if (x.is_object()) v.push_back(scalar_from_json(x));
      else if (x.is_number_integer()) v.emplace_back(x.get<long>());
      else if (x.is_string()) v.emplace_back(Rational::parse(x.get<std::string>()));
      else throw std::invalid_argument("matrix entry must be an integer, rational string or {re, im}");
    }
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(rows);
}

nlohmann::json to_json(const GradedLieAlgebra& a) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : a.basis()) {
    nlohmann::json e = {{"label", b.label}, {"degree", b.degree}};
    if (b.bidegree) e["bidegree"] = {b.bidegree->n, b.bidegree->n_bar};
    if (!b.word.is_null()) e["word"] = b.word;
    basis.push_back(std::move(e));
  }
  nlohmann::json brackets = nlohmann::json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const auto& t = a.bracket(i, j);
      if (t.empty()) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [k, c] : t) {
        nlohmann::json term = scalar_to_json(c);
        term["k"] = k;
        terms.push_back(std::move(term));
      }
      brackets.push_back({{"i", i}, {"j", j}, {"terms", std::move(terms)}});
    }
  nlohmann::json meta = nlohmann::json::object();
  if (a.meta().k) meta["k"] = *a.meta().k;
  if (a.meta().rho) meta["rho"] = *a.meta().rho;
  if (!a.meta().quotient.empty()) meta["quotient"] = a.meta().quotient;
  if (!a.meta().flavor.empty()) meta["flavor"] = a.meta().flavor;
  if (!a.meta().field.empty()) meta["field"] = a.meta().field;
  nlohmann::json out = {{"basis", std::move(basis)}, {"brackets", std::move(brackets)}, {"meta", meta}};
  if (a.J()) out["J"] = matrix_to_json(*a.J());
  if (a.conjugation()) out["conjugation"] = matrix_to_json(*a.conjugation());
  if (!a.meta().flavor.empty()) out["flavor"] = a.meta().flavor;
  return out;
}

GradedLieAlgebra algebra_from_json(const nlohmann::json& j) {
  std::vector<BasisElement> basis;
  for (const auto& e : j.at("basis")) {
    BasisElement b;
    b.label = e.at("label").get<std::string>();
    b.degree = e.at("degree").get<int>();
    if (e.contains("bidegree")) b.bidegree = Bidegree{e["bidegree"][0].get<int>(), e["bidegree"][1].get<int>()};
    if (e.contains("word")) b.word = e["word"];
    basis.push_back(std::move(b));
  }
  const std::size_t n = basis.size();
  BracketTable table(n);
  for (const auto& br : j.at("brackets")) {
    Vector v(n);
    for (const auto& t : br.at("terms")) v.at(t.at("k").get<std::size_t>()) += scalar_from_json(t);
    table.set(br.at("i").get<std::size_t>(), br.at("j").get<std::size_t>(), v);
  }
  AlgebraMeta meta;
  if (j.contains("meta")) {
    const auto& m = j["meta"];
    if (m.contains("k")) meta.k = m["k"].get<int>();
    if (m.contains("rho")) meta.rho = m["rho"].get<int>();
    if (m.contains("quotient")) meta.quotient = m["quotient"].get<std::string>();
    if (m.contains("flavor")) meta.flavor = m["flavor"].get<std::string>();
    if (m.contains("field")) meta.field = m["field"].get<std::string>();
  }
  std::optional<Matrix> jm, pm;
  if (j.contains("J")) jm = matrix_from_json(j["J"]);
  if (j.contains("conjugation")) pm = matrix_from_json(j["conjugation"]);
  return GradedLieAlgebra(std::move(basis), std::move(table), std::move(jm), std::move(pm), std::move(meta));
}

std::string format_table(const GradedLieAlgebra& a) {
  std::ostringstream os;
  os << "dim " << a.dim() << ", degree dims:";
  for (const auto& [d, c] : a.dims_by_degree()) os << " " << d << ":" << c;
  os << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    os << "  e" << i << " = " << a.element(i).label << "  (degree " << a.degree(i) << ")\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const auto& t = a.bracket(i, j);
      if (t.empty()) continue;
      os << "  [" << a.element(i).label << ", " << a.element(j).label << "] =";
      bool first = true;
      for (const auto& [k, c] : t) {
        os << (first ? " " : " + ");
        if (!c.is_one()) os << "(" << c << ")*";
        os << a.element(k).label;
        first = false;
      }
      os << "\n";
    }
  return os.str();
}

}  // namespace tanaka
