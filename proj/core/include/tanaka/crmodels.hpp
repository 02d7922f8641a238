// The algebra g_- + g_0 read off from the constant-type structure equations of a
// totally nondegenerate model, and the check that it is the Levi-Tanaka
// prolongation of its symbol.
//
// Conventions (see docs/conventions.md): [v_i, v_j] = -sum_k c^k_ij v_k, so the
// term (n a + n' conj(a)) ^ Gamma in d(Gamma) gives [v0, v] = -n v and
// [conj(v0), v] = -n' v for a Hall word v of bidegree (n, n'). With
// d = v0 + conj(v0) and r = i (v0 - conj(v0)):
//   [d, v] = -(n + n') v,   [r, v] = -i (n - n') v.
#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "tanaka/liealg.hpp"
#include "tanaka/prolong.hpp"

namespace tanaka {

// Real: alpha = conj(alpha), g_0 = <d>. Complex: g_0 = <d, r>.
enum class AlphaCase { Real, Complex, Auto };

std::string to_string(AlphaCase c);
AlphaCase alpha_case_from_string(const std::string& s);

class CaseMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class RhoTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AutCRAlgebra {
  // Basis: the symbol basis first, then d, then r in the complex case.
  GradedLieAlgebra algebra;
  std::size_t negative_dim = 0;
  AlphaCase alpha_case = AlphaCase::Real;
  std::size_t d_index = 0;
  std::optional<std::size_t> r_index;
};

// Works on the Hall-labelled complex symbol; Auto picks Complex when the
// rotation derivation exists.
AutCRAlgebra build_aut_cr(const SymbolAlgebra& s, AlphaCase c = AlphaCase::Auto);
// Real form of a self-conjugate aut_CR algebra; d and r are fixed by the conjugation.
AutCRAlgebra realify(const AutCRAlgebra& a);

// x -> deg(x) x on every basis element.
DerivationMap euler_derivation(const GradedLieAlgebra& m);
// Leibniz extension of -J from degree -1, or nullopt when none exists.
std::optional<DerivationMap> rotation_derivation(const GradedLieAlgebra& m);

struct TheoremReport {
  std::string model;
  int k = 0;
  int rho = 0;
  std::string quotient;
  std::string field;
  AlphaCase alpha_case = AlphaCase::Real;
  bool heisenberg = false;
  std::map<int, std::size_t> aut_dims;
  std::map<int, std::size_t> prolongation_dims;
  std::size_t aut_total = 0;
  std::size_t prolongation_total = 0;
  // Columns: images of the aut_CR basis in the basis of the prolongation.
  Matrix isomorphism;
  std::size_t pairs_checked = 0;
  std::size_t pair_failures = 0;
  std::string first_failure;
  bool bijective = false;
  bool g0_in_G0 = false;
  bool G0_equals_g0 = false;
  bool euler_in_G0 = false;
  bool derivations_match = true;
  bool higher_vanish = false;
  bool transitive = false;
  bool confirmed() const { return verdict == "confirmed"; }
  std::string verdict;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

class VerificationFailed : public std::runtime_error {
 public:
  VerificationFailed(const std::string& what, std::optional<TheoremReport> report = std::nullopt)
      : std::runtime_error(what), report_(std::move(report)) {}
  const std::optional<TheoremReport>& report() const { return report_; }

 private:
  std::optional<TheoremReport> report_;
};

// Requires rho >= 3. Throws VerificationFailed when the symbol is not a graded Lie
// algebra or the constructed map is not an isomorphism.
TheoremReport verify_theorem(const SymbolAlgebra& s, const std::string& model = {},
                             AlphaCase requested = AlphaCase::Auto);
// Same checks without throwing on a negative verdict.
TheoremReport theorem_report(const SymbolAlgebra& s, const std::string& model = {},
                             AlphaCase requested = AlphaCase::Auto);

// Levi-Tanaka prolongation of the real Heisenberg symbol (or the given length-two symbol).
TheoremReport verify_heisenberg(const std::optional<SymbolAlgebra>& s = std::nullopt,
                                const std::string& model = "heisenberg");

}  // namespace tanaka
