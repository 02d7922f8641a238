#include "tanaka/exact.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tanaka {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

Rational::Rational(const Integer& v) : v_(v) {}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Gaussian Gaussian::inverse() const {
  if (is_zero()) throw std::domain_error("Gaussian: division by zero");
  if (im_.is_zero()) return {Rational(1) / re_, Rational()};
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Gaussian::str() const {
  if (im_.is_zero()) return re_.str();
  std::ostringstream os;
  auto imag = [&](const Rational& q, bool leading) {
    Rational a = q.sign() < 0 ? -q : q;
    if (q.sign() < 0) os << (leading ? "-" : "-");
    else if (!leading) os << "+";
    if (a == Rational(1)) os << "i";
    else if (a.is_integer()) os << a << "i";
    else os << "(" << a << ")i";
  };
  if (re_.is_zero()) {
    imag(im_, true);
  } else {
    os << re_;
    imag(im_, false);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Gaussian& q) { return os << q.str(); }

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vector +: size mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vector -: size mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Gaussian& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(const Gaussian& s, const Vector& x, Vector& y) {
  if (s.is_zero()) return;
  if (x.size() != y.size()) throw std::invalid_argument("axpy: size mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += s * x[i];
}

Vector conj(const Vector& v) {
  Vector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.conj());
  return r;
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  if (cols.empty()) return {};
  Matrix m(cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows_) throw std::invalid_argument("Matrix::from_columns: ragged columns");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_real() const {
  for (const auto& x : data_)
    if (!x.is_real()) return false;
  return true;
}

Matrix Matrix::conj() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = x.conj();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix *: dimension mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Gaussian& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
    }
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("Matrix * Vector: dimension mismatch");
  Vector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix +: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix -: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const Gaussian& s, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.data_) x *= s;
  return m;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]";
  }
  return os << "]";
}

EchelonForm row_reduce(Matrix m) {
  EchelonForm out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    Gaussian inv = m(lead_row, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(lead_row, k).is_zero()) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      Gaussian f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(lead_row, k).is_zero()) m(r, k) -= f * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  EchelonForm e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_linear(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  EchelonForm e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  if (m * x != b) throw std::logic_error("solve_linear: residual check failed");
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  EchelonForm e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

bool EquationSystem::add_row(Vector row) {
  if (row.size() != unknowns_) throw std::invalid_argument("EquationSystem: row size mismatch");
  for (std::size_t k = 0; k < pivot_rows_.size(); ++k) {
    const std::size_t c = pivot_cols_[k];
    if (row[c].is_zero()) continue;
    Gaussian f = row[c];
    const Vector& p = pivot_rows_[k];
    for (std::size_t j = 0; j < unknowns_; ++j)
      if (!p[j].is_zero()) row[j] -= f * p[j];
  }
  std::size_t c = 0;
  while (c < unknowns_ && row[c].is_zero()) ++c;
  if (c == unknowns_) return false;
  Gaussian inv = row[c].inverse();
  for (auto& x : row)
    if (!x.is_zero()) x *= inv;
  pivot_rows_.push_back(std::move(row));
  pivot_cols_.push_back(c);
  return true;
}

Matrix EquationSystem::matrix() const {
  if (pivot_rows_.empty()) return Matrix(1, unknowns_);
  return Matrix::from_rows(pivot_rows_);
}

}  // namespace tanaka
