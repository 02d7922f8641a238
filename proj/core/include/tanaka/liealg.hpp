// Finite-dimensional graded Lie algebras given by structure constants over Q(i),
// structural checks, and the symbol algebras of totally nondegenerate models.
#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tanaka/exact.hpp"
#include "tanaka/freelie.hpp"

namespace tanaka {

struct BasisElement {
  std::string label;
  int degree = 0;
  std::optional<Bidegree> bidegree;  // set for Hall-word labelled elements
  nlohmann::json word;               // nested-pair Hall word, or null
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

using SparseTerms = std::vector<std::pair<std::size_t, Gaussian>>;

// Antisymmetric table of brackets of basis elements.
class BracketTable {
 public:
  explicit BracketTable(std::size_t dim = 0) : dim_(dim), entries_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  // Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set(std::size_t i, std::size_t j, const Vector& value);
  const SparseTerms& get(std::size_t i, std::size_t j) const { return entries_.at(i * dim_ + j); }

  friend bool operator==(const BracketTable&, const BracketTable&) = default;

 private:
  std::size_t dim_;
  std::vector<SparseTerms> entries_;
};

struct AlgebraMeta {
  std::optional<int> k;
  std::optional<int> rho;
  std::string quotient;
  std::string flavor;
  std::string field;  // "complex" or "real"
  friend bool operator==(const AlgebraMeta&, const AlgebraMeta&) = default;
};

class InvalidAlgebra : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class MissingJ : public std::runtime_error {
 public:
  MissingJ() : std::runtime_error("algebra carries no complex structure J") {}
};
class NotSelfConjugate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class BadQuotient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;
  // Validates grading, Jacobi, J*J = -id and conjugation being an involution.
  GradedLieAlgebra(std::vector<BasisElement> basis, BracketTable brackets,
                   std::optional<Matrix> j = std::nullopt,
                   std::optional<Matrix> conjugation = std::nullopt, AlgebraMeta meta = {});
  // Skips validation; used for negative controls.
  static GradedLieAlgebra unchecked(std::vector<BasisElement> basis, BracketTable brackets,
                                    std::optional<Matrix> j = std::nullopt,
                                    std::optional<Matrix> conjugation = std::nullopt,
                                    AlgebraMeta meta = {});

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& element(std::size_t i) const { return basis_.at(i); }
  int degree(std::size_t i) const { return basis_.at(i).degree; }
  std::vector<std::size_t> indices_of_degree(int d) const;
  // Sorted list of degrees that occur.
  std::vector<int> degrees() const;
  std::map<int, std::size_t> dims_by_degree() const;
  int min_degree() const;
  int max_degree() const;

  const BracketTable& table() const { return brackets_; }
  const SparseTerms& bracket(std::size_t i, std::size_t j) const { return brackets_.get(i, j); }
  Vector bracket_vector(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& a, const Vector& b) const;
  // [e_i, v]
  Vector bracket(std::size_t i, const Vector& v) const;

  // Complex structure on the degree -1 subspace, in the order of indices_of_degree(-1).
  const std::optional<Matrix>& J() const { return j_; }
  // Antilinear involution: sigma(v) = P * conj(v).
  const std::optional<Matrix>& conjugation() const { return conjugation_; }
  const AlgebraMeta& meta() const { return meta_; }
  bool is_real() const;

  GradedLieAlgebra with_meta(AlgebraMeta meta) const;
  GradedLieAlgebra with_J(std::optional<Matrix> j) const;
  GradedLieAlgebra with_conjugation(std::optional<Matrix> p) const;
  // Columns of `change` are the new basis vectors in current coordinates. J and the
  // conjugation are carried along; the result is validated.
  GradedLieAlgebra change_basis(const Matrix& change, std::vector<BasisElement> new_basis) const;

  friend bool operator==(const GradedLieAlgebra&, const GradedLieAlgebra&) = default;

 private:
  std::vector<BasisElement> basis_;
  BracketTable brackets_;
  std::optional<Matrix> j_;
  std::optional<Matrix> conjugation_;
  AlgebraMeta meta_;

  void validate() const;
};

struct JacobiViolation {
  std::size_t i, j, k;
  Vector residual;
};

struct JacobiReport {
  std::vector<JacobiViolation> violations;
  bool passed() const { return violations.empty(); }
};

// Exhaustive over all basis triples i < j < k.
JacobiReport check_jacobi(const GradedLieAlgebra& a);
// Pairs (i, j) whose bracket leaves the degree deg(i) + deg(j).
std::vector<std::pair<std::size_t, std::size_t>> grading_violations(const GradedLieAlgebra& a);
// Negatively graded input required.
bool is_fundamental(const GradedLieAlgebra& a);
bool is_nondegenerate_symbol(const GradedLieAlgebra& a);
bool is_pseudocomplex(const GradedLieAlgebra& a);
// No nonzero element of nonnegative degree brackets the negative part to zero.
bool is_transitive(const GradedLieAlgebra& a);

// Quotient of the top free layer of F(2, rho) that defines a symbol algebra.
//
// Default keeps the first q Hall words of length rho as the surviving basis and
// kills a conjugation-stable complement built from the trailing words, so the
// quotient always has a real form. Truncate kills the trailing words themselves;
// that quotient is complex only and may have no real form.
struct QuotientSpec {
  enum class Kind { Default, Truncate, Explicit };
  Kind kind = Kind::Default;
  // Explicit only: q x W matrix whose kernel is the subspace killed in the top layer.
  std::optional<Matrix> projection;
  std::string source;

  static QuotientSpec default_quotient() { return {}; }
  static QuotientSpec truncate() { return {Kind::Truncate, std::nullopt, {}}; }
  static QuotientSpec explicit_projection(Matrix p, std::string source = "explicit") {
    return {Kind::Explicit, std::move(p), std::move(source)};
  }
  std::string describe() const;
};

struct SymbolAlgebra {
  // Complex Hall-labelled basis; J = diag(i, -i) on (generator 1, generator 2).
  GradedLieAlgebra algebra;
  int k = 0;
  int rho = 0;
  QuotientSpec quotient;
  // Row-reduced projection of the top free layer onto the surviving top elements.
  Matrix projection;
  // Hall basis index of each basis element.
  std::vector<std::size_t> hall_index;
};

SymbolAlgebra build_symbol_algebra(int k, const QuotientSpec& quotient = {});

// The generator swap 1 <-> 2 on the Hall words of length ell: column w holds the
// Hall coordinates of the swapped word.
Matrix swap_on_layer(const HallBasis& h, int ell);

struct RealForm {
  GradedLieAlgebra algebra;
  Matrix basis;  // columns: real basis vectors in the original coordinates
};

RealForm realify(const GradedLieAlgebra& a);
GradedLieAlgebra complexify(const GradedLieAlgebra& real);

// Canonical JSON form; from_json(to_json(a)) == a.
nlohmann::json to_json(const GradedLieAlgebra& a);
GradedLieAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json scalar_to_json(const Gaussian& q);
Gaussian scalar_from_json(const nlohmann::json& j);

std::string format_table(const GradedLieAlgebra& a);

}  // namespace tanaka
