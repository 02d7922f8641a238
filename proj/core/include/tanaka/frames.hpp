// CR models as polynomial vector fields: the tangential CR field of a rigid model,
// its bracket filtration at the origin, the induced symbol algebra, and the
// exponential-coordinate group law of a nilpotent algebra with its left-invariant
// frame.
//
// A rigid model is Im w_j = phi_j(z, conj z), j = 1..k, on coordinates
// (z, conj z, u_1..u_k) with u_j = Re w_j. The Heisenberg sphere w - conj(w) = 2i z conj(z)
// is phi_1 = z conj(z).
#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanaka/liealg.hpp"
#include "tanaka/polynomial.hpp"

namespace tanaka {

class NotRigid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotTotallyNondegenerate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotNilpotent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelSpec {
  std::string id;
  int k = 0;
  // phi_j on Chart::cr(k); must not depend on the u variables.
  std::vector<Polynomial> phi;
  std::vector<int> weights;
  // Overrides the tangency solve when present.
  std::optional<PolyVectorField> explicit_L;
  std::string note;
  bool expect_nondegenerate = true;

  Chart chart() const { return Chart::cr(k); }
};

// Reality of each phi_j, nondecreasing weights, arity; throws std::invalid_argument.
void validate_model(const ModelSpec& m);

// L = d/dz + sum_j a_j d/du_j with L(u_j - i phi_j) = 0, i.e. L kills the
// restrictions of the conj(w_j).
PolyVectorField tangential_cr_field(const ModelSpec& m);

// Fields of the Hall words of length <= max_length, generator 1 = L, 2 = conj(L).
std::vector<PolyVectorField> hall_word_fields(const PolyVectorField& L, const HallBasis& h);

struct Filtration {
  std::vector<std::size_t> growth;          // dim D_1, dim D_2, ...
  std::vector<std::vector<Vector>> spans;   // a basis of each D_l at the origin
  int degree_of_nonholonomy = 0;            // 0 when never bracket-generating within the bound
};

struct GrowthReport {
  Filtration filtration;
  bool totally_nondegenerate = false;
  int rho = 0;
  std::string reason;
};

// Bound defaults to min_length_for_codim(k) + 1.
GrowthReport growth_and_nondegeneracy(const ModelSpec& m, std::optional<int> max_length = std::nullopt);

// Symbol algebra induced by the model's frame at the origin.
SymbolAlgebra symbol_from_frame(const ModelSpec& m);

// Group law in exponential coordinates: product(a, b) with a in variables 0..n-1
// and b in variables n..2n-1.
struct GroupLaw {
  GradedLieAlgebra algebra;
  int nilpotency_class = 0;
  std::vector<Polynomial> product;
  std::size_t dim() const { return algebra.dim(); }
};

GroupLaw bch_group_law(const GradedLieAlgebra& m);
// product(u, v) for polynomial vectors u, v in a common ring.
std::vector<Polynomial> bch_apply(const GroupLaw& g, const std::vector<Polynomial>& u,
                                  const std::vector<Polynomial>& v);
// product(a, product(b, c)) == product(product(a, b), c) with 3n symbolic variables.
bool check_associativity(const GroupLaw& g);

// X_i = sum_j d product_j / d b_i (a, 0) d/da_j
std::vector<PolyVectorField> left_invariant_frame(const GroupLaw& g);
// Pairs (i, j) with [X_i, X_j] != sum_k c^k_ij X_k.
std::vector<std::pair<std::size_t, std::size_t>> frame_structure_mismatches(
    const GradedLieAlgebra& m, const std::vector<PolyVectorField>& frame);

}  // namespace tanaka
