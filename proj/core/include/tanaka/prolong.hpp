// Tanaka and Levi-Tanaka prolongations of fundamental negatively graded algebras.
//
// Every component is computed as the kernel of the Leibniz system posed on full
// block maps m -> m + G^0 + ... + G^{l-1}. Coordinates in that target ("global"
// coordinates) list the basis of m first, then each lower component in order.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanaka/exact.hpp"
#include "tanaka/liealg.hpp"

namespace tanaka {

enum class Flavor { FullTanaka, LeviTanaka };

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

class NotFundamental : public std::runtime_error {
 public:
  NotFundamental() : std::runtime_error("algebra is not fundamental") {}
};
class NotPseudocomplex : public std::runtime_error {
 public:
  NotPseudocomplex() : std::runtime_error("algebra is not pseudocomplex") {}
};
class MissingLowerComponents : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Images of the basis of m, one vector per basis element in global coordinates.
using DerivationMap = std::vector<Vector>;

struct ProlongationComponent {
  int degree = 0;
  std::vector<DerivationMap> basis;
  std::size_t dim() const { return basis.size(); }
};

struct PartialProlongation {
  GradedLieAlgebra m;
  Flavor flavor = Flavor::FullTanaka;
  std::vector<ProlongationComponent> components;  // degrees 0, 1, ... in order

  // Global index of the first element of G^l.
  std::size_t offset(int l) const;
  std::size_t global_dim() const;
  // [u, e_b] for u in global coordinates and e_b a basis element of m.
  Vector act(const Vector& u, std::size_t b) const;
  // Image of the i-th element of G^l, padded to global_dim().
  DerivationMap map_of(int l, std::size_t i) const;
};

// Degree-preserving derivations of m; with j_constraint only those commuting with J.
ProlongationComponent grade0(const GradedLieAlgebra& m, bool j_constraint);

// G^l for l >= 1 given components 0 .. l-1.
ProlongationComponent prolong_component(const PartialProlongation& p, int l);

// Leibniz residuals d([y,z]) - [d(y),z] - [y,d(z)] over all basis pairs of m.
bool satisfies_leibniz(const PartialProlongation& p, int l, const DerivationMap& d);

// Coordinates of a degree-l map in the basis of G^l, if it lies there.
std::optional<Vector> component_coordinates(const PartialProlongation& p, int l,
                                            const DerivationMap& d);

struct ProlongedAlgebra : PartialProlongation {
  // m + G^0 + ... on the global basis, brackets assembled and validated.
  GradedLieAlgebra algebra;
  // Degree of the first zero component.
  int terminated_at = 0;

  std::map<int, std::size_t> dims() const { return algebra.dims_by_degree(); }
  std::size_t total_dim() const { return algebra.dim(); }
};

// Default guard is rho + 3 with rho the depth of m.
ProlongedAlgebra full_prolongation(const GradedLieAlgebra& m, Flavor flavor,
                                   std::optional<int> guard = std::nullopt);

bool is_transitive(const ProlongedAlgebra& p);

}  // namespace tanaka
