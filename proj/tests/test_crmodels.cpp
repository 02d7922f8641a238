#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tanaka/catalog.hpp"
#include "tanaka/crmodels.hpp"
#include "tanaka/frames.hpp"

using namespace tanaka;

namespace {

SymbolAlgebra corrupt(SymbolAlgebra s, std::size_t i, std::size_t j, const Gaussian& factor) {
  BracketTable t = s.algebra.table();
  t.set(i, j, factor * s.algebra.bracket_vector(i, j));
  s.algebra = GradedLieAlgebra::unchecked(s.algebra.basis(), t, s.algebra.J(), s.algebra.conjugation(),
                                          s.algebra.meta());
  return s;
}

// k = 4 quotient whose kernel mixes bidegrees (3,1) and (2,2) in the length-4 layer.
SymbolAlgebra mixed_bidegree_symbol() {
  return build_symbol_algebra(4, QuotientSpec::explicit_projection(Matrix::from_rows({{1, 1, 0}}), "mixed"));
}

}  // namespace

TEST(AutCR, HeisenbergComplexCase) {
  const auto aut = build_aut_cr(build_symbol_algebra(1), AlphaCase::Complex);
  EXPECT_EQ(aut.algebra.dim(), 5u);
  const auto real = realify(aut).algebra;
  const std::size_t x = 0, y = 1, d = aut.d_index, r = *aut.r_index;
  EXPECT_EQ(real.element(x).label, "x");
  EXPECT_EQ(real.bracket_vector(d, x), Gaussian(-1) * unit_vector(5, x));
  EXPECT_EQ(real.bracket_vector(d, y), Gaussian(-1) * unit_vector(5, y));
  EXPECT_EQ(real.bracket_vector(r, x), Gaussian(-1) * unit_vector(5, y));
  EXPECT_EQ(real.bracket_vector(r, y), unit_vector(5, x));
}

TEST(AutCR, FreeThreeStepRealCase) {
  const auto aut = build_aut_cr(build_symbol_algebra(3), AlphaCase::Real);
  EXPECT_EQ(aut.algebra.dim(), 6u);
  EXPECT_FALSE(aut.r_index);
  EXPECT_EQ(aut.algebra.indices_of_degree(0).size(), 1u);
}

TEST(AutCR, GradingElementEigenvalues) {
  for (int k = 1; k <= 12; ++k) {
    const auto s = build_symbol_algebra(k);
    const auto aut = build_aut_cr(s);
    const std::size_t dim = aut.algebra.dim();
    for (std::size_t b = 0; b < aut.negative_dim; ++b) {
      const int ell = -aut.algebra.degree(b);
      EXPECT_EQ(aut.algebra.bracket_vector(aut.d_index, b), Gaussian(-ell) * unit_vector(dim, b));
      if (aut.r_index) {
        const auto bd = *aut.algebra.element(b).bidegree;
        EXPECT_EQ(aut.algebra.bracket_vector(*aut.r_index, b),
                  Gaussian(0, -(bd.n - bd.n_bar)) * unit_vector(dim, b));
      }
    }
    if (aut.r_index) {
      EXPECT_TRUE(is_zero(aut.algebra.bracket_vector(aut.d_index, *aut.r_index)));
    }
    // Nondegeneracy and transitivity of the real form.
    const auto real = realify(aut).algebra;
    EXPECT_TRUE(is_nondegenerate_symbol(real));
    EXPECT_TRUE(is_transitive(real));
    EXPECT_TRUE(check_jacobi(real).passed());
  }
}

TEST(AutCR, CaseMismatch) {
  EXPECT_THROW(build_aut_cr(build_symbol_algebra(2), AlphaCase::Complex), CaseMismatch);
  EXPECT_THROW(build_aut_cr(mixed_bidegree_symbol(), AlphaCase::Complex), CaseMismatch);
  EXPECT_EQ(build_aut_cr(mixed_bidegree_symbol()).alpha_case, AlphaCase::Real);
}

TEST(Derivations, Euler) {
  const auto e = euler_derivation(oracle::real_heisenberg());
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0], (Vector{-1, 0, 0}));
  EXPECT_EQ(e[1], (Vector{0, -1, 0}));
  EXPECT_EQ(e[2], (Vector{0, 0, -2}));
}

TEST(Derivations, RotationHeisenberg) {
  const auto r = rotation_derivation(oracle::real_heisenberg());
  ASSERT_TRUE(r);
  EXPECT_EQ((*r)[0], (Vector{0, -1, 0}));
  EXPECT_EQ((*r)[1], (Vector{1, 0, 0}));
  EXPECT_TRUE(is_zero((*r)[2]));

  const auto rc = rotation_derivation(build_symbol_algebra(1).algebra);
  ASSERT_TRUE(rc);
  EXPECT_TRUE(is_zero((*rc)[2]));
}

TEST(Derivations, RotationFailsOnMixedBidegreeQuotient) {
  const auto s = mixed_bidegree_symbol();
  EXPECT_EQ(s.rho, 4);
  EXPECT_FALSE(rotation_derivation(s.algebra));
  EXPECT_TRUE(rotation_derivation(build_symbol_algebra(4, QuotientSpec::truncate()).algebra));
}

TEST(Theorem, FreeThreeStep) {
  const auto r = verify_theorem(build_symbol_algebra(3), "k3");
  EXPECT_TRUE(r.confirmed());
  EXPECT_EQ(r.aut_total, 7u);
  EXPECT_EQ(r.prolongation_total, 7u);
  EXPECT_EQ(r.alpha_case, AlphaCase::Complex);
  EXPECT_TRUE(r.bijective);
  EXPECT_TRUE(r.derivations_match);
  EXPECT_EQ(r.pair_failures, 0u);
}

TEST(Theorem, DefaultKTwo) {
  const auto r = verify_theorem(build_symbol_algebra(2));
  EXPECT_TRUE(r.confirmed());
  const std::size_t g0 = r.prolongation_dims.at(0);
  EXPECT_TRUE(g0 == 1 || g0 == 2);
  EXPECT_EQ(r.prolongation_total, 4 + g0);
  EXPECT_EQ(r.aut_total, r.prolongation_total);
}

TEST(Theorem, CaseMatchesDimG0) {
  std::vector<SymbolAlgebra> symbols;
  for (int k = 2; k <= 12; ++k) symbols.push_back(build_symbol_algebra(k));
  for (const auto& m : builtin_catalog())
    if (m.expect_nondegenerate && m.k >= 2) symbols.push_back(symbol_from_frame(m));
  for (const auto& s : symbols) {
    const auto r = verify_theorem(s);
    EXPECT_TRUE(r.confirmed());
    EXPECT_EQ(r.alpha_case == AlphaCase::Complex, r.prolongation_dims.at(0) == 2) << s.k;
    EXPECT_TRUE(r.G0_equals_g0 && r.g0_in_G0 && r.euler_in_G0 && r.higher_vanish && r.transitive);
  }
}

TEST(Theorem, ComplexPathWithoutRealForm) {
  // The mixed quotient has no real form: checked over Q(i), real case.
  const auto r = theorem_report(mixed_bidegree_symbol(), "mixed");
  EXPECT_EQ(r.field, "complex");
  EXPECT_EQ(r.alpha_case, AlphaCase::Real);
}

TEST(Theorem, CorruptedBracketNamesPair) {
  // k = 6 is the free algebra F(2,4); doubling [2,[1,2]] breaks Jacobi on (1, 2, [1,2]).
  const auto s = build_symbol_algebra(6);
  ASSERT_EQ(s.algebra.element(4).label, "[[1,2],2]");
  try {
    verify_theorem(corrupt(s, 1, 2, 2), "corrupt");
    FAIL() << "expected VerificationFailed";
  } catch (const VerificationFailed& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("[1,2]"), std::string::npos) << what;
  }
}

TEST(Theorem, CorruptedGradingNamesPair) {
  auto s = build_symbol_algebra(3);
  BracketTable t = s.algebra.table();
  Vector v(5);
  v[3] = 1;
  t.set(0, 1, v);  // [1,2] now lands in degree -3
  s.algebra = GradedLieAlgebra::unchecked(s.algebra.basis(), t, s.algebra.J(), s.algebra.conjugation(),
                                          s.algebra.meta());
  try {
    verify_theorem(s);
    FAIL() << "expected VerificationFailed";
  } catch (const VerificationFailed& e) {
    EXPECT_NE(std::string(e.what()).find("[1, 2]"), std::string::npos) << e.what();
  }
}

TEST(Theorem, RhoTooSmall) { EXPECT_THROW(verify_theorem(build_symbol_algebra(1)), RhoTooSmall); }

TEST(Theorem, CaseRequestMismatch) {
  EXPECT_THROW(verify_theorem(build_symbol_algebra(2), "", AlphaCase::Complex), CaseMismatch);
}

TEST(Heisenberg, EightDimensional) {
  const auto r = verify_heisenberg();
  EXPECT_TRUE(r.confirmed());
  EXPECT_EQ(r.prolongation_total, 8u);
  EXPECT_EQ(r.prolongation_dims, (std::map<int, std::size_t>{{-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}}));
  EXPECT_TRUE(r.transitive);
  EXPECT_FALSE(r.higher_vanish);
}

TEST(Report, JsonAndText) {
  const auto r = verify_theorem(build_symbol_algebra(4), "k4");
  const auto j = r.to_json();
  EXPECT_EQ(j["model"], "k4");
  EXPECT_EQ(j["verdict"], "confirmed");
  EXPECT_EQ(j["aut_cr_total"], 7);
  EXPECT_EQ(j["checks"]["pair_failures"], 0);
  EXPECT_EQ(j["case"], "real-alpha");
  const std::string text = r.to_text();
  EXPECT_NE(text.find("aut_CR"), std::string::npos);
  EXPECT_NE(text.find("verdict: confirmed"), std::string::npos);
}

TEST(AlphaCaseNames, RoundTrip) {
  for (auto c : {AlphaCase::Real, AlphaCase::Complex, AlphaCase::Auto})
    EXPECT_EQ(alpha_case_from_string(to_string(c)), c);
  EXPECT_EQ(alpha_case_from_string("real"), AlphaCase::Real);
}
