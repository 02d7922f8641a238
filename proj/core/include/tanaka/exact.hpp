// Exact scalars (rationals, Gaussian rationals) and dense linear algebra over them.
#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tanaka {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& v);
  explicit Rational(const Integer& v);

  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  const mpq_class& raw() const { return v_; }
  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// An element re + i*im of Q(i).
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Gaussian(T v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return im_.is_zero() && re_ == Rational(1); }

  Gaussian conj() const { return {re_, -im_}; }
  // q * conj(q), always real.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Gaussian inverse() const;

  Gaussian operator-() const { return {-re_, -im_}; }
  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // "3/2", "-i", "1+(2/3)i"
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Gaussian& q);

using Vector = std::vector<Gaussian>;

bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Gaussian& s, const Vector& v);
void axpy(const Gaussian& s, const Vector& x, Vector& y);  // y += s*x
Vector conj(const Vector& v);
Vector unit_vector(std::size_t n, std::size_t i);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Gaussian& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Gaussian& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  bool is_zero() const;
  bool is_real() const;
  Matrix conj() const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Gaussian& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gaussian> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct EchelonForm {
  Matrix reduced;                    // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Pivot choice: columns left to right, first nonzero row top to bottom.
EchelonForm row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

// Null space basis, one vector per free column in increasing column order.
std::vector<Vector> kernel_basis(const Matrix& m);

// Particular solution with free variables set to zero; nullopt when inconsistent.
std::optional<Vector> solve_linear(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);

// Accumulates linear equations row by row, keeping only a reduced independent set.
// Large derivation systems produce many redundant rows; this keeps memory at
// O(unknowns^2).
class EquationSystem {
 public:
  explicit EquationSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t rank() const { return pivot_rows_.size(); }

  // Returns false when the row was dependent on the rows already present.
  bool add_row(Vector row);

  Matrix matrix() const;
  std::vector<Vector> kernel() const { return kernel_basis(matrix()); }

 private:
  std::size_t unknowns_;
  std::vector<Vector> pivot_rows_;     // each normalized to pivot 1
  std::vector<std::size_t> pivot_cols_;
};

}  // namespace tanaka
