// Sparse multivariate polynomials over Q(i) and polynomial vector fields.
#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanaka/exact.hpp"

namespace tanaka {

using Monomial = std::vector<std::uint16_t>;

// Variable names plus the permutation that formal conjugation applies to them.
struct Chart {
  std::vector<std::string> names;
  std::vector<std::size_t> conj_perm;

  std::size_t size() const { return names.size(); }
  // (z, conj z, u_1 .. u_k) with conjugation swapping z and conj z.
  static Chart cr(int k);
  // n real variables with the given prefix, conjugation trivial.
  static Chart real(std::size_t n, const std::string& prefix);
  friend bool operator==(const Chart&, const Chart&) = default;
};

class ChartMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Gaussian& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Monomial& m, const Gaussian& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Gaussian>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Gaussian coefficient(const Monomial& m) const;
  Gaussian constant_term() const;
  int total_degree() const;
  // True if no monomial involves variable i.
  bool independent_of(std::size_t i) const;

  void add_term(const Monomial& m, const Gaussian& c);

  Polynomial derivative(std::size_t i) const;
  // Conjugates coefficients and permutes variables.
  Polynomial conj(const std::vector<std::size_t>& perm) const;
  // Keeps only terms with zero exponent in variables [first, last).
  Polynomial set_zero(std::size_t first, std::size_t last) const;
  // Terms free of variables outside [first, first + count), moved to a ring with
  // exactly those variables.
  Polynomial restrict_to(std::size_t first, std::size_t count) const;
  // Re-indexes variable i to offset + i in a ring with nvars variables.
  Polynomial embed(std::size_t nvars, std::size_t offset) const;
  // Substitutes polynomials (all in one ring) for every variable.
  Polynomial substitute(const std::vector<Polynomial>& values) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Gaussian& s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str(const std::vector<std::string>& names) const;
  nlohmann::json to_json() const;
  static Polynomial from_json(const nlohmann::json& j, std::size_t nvars);

 private:
  std::size_t nvars_ = 0;
  std::map<Monomial, Gaussian> terms_;
};

class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(Chart chart);
  PolyVectorField(Chart chart, std::vector<Polynomial> components);
  // The coordinate field d/dx_i.
  static PolyVectorField coordinate(const Chart& chart, std::size_t i);

  const Chart& chart() const { return chart_; }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& component(std::size_t i) const { return components_.at(i); }
  bool is_zero() const;

  // X(f) = sum_i X^i df/dx_i
  Polynomial apply(const Polynomial& f) const;
  // Components at the origin.
  Vector at_origin() const;
  PolyVectorField conj() const;

  PolyVectorField& operator+=(const PolyVectorField& o);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b);
  friend PolyVectorField operator*(const Gaussian& s, const PolyVectorField& v);
  friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

  // "∂/∂z + i z̄ ∂/∂u₁"
  std::string str() const;
  nlohmann::json to_json() const;
  static PolyVectorField from_json(const nlohmann::json& j, const Chart& chart);

 private:
  Chart chart_;
  std::vector<Polynomial> components_;
};

// [a, b]^i = a(b^i) - b(a^i)
PolyVectorField vf_bracket(const PolyVectorField& a, const PolyVectorField& b);

}  // namespace tanaka
