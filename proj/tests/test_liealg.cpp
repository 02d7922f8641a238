#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tanaka/liealg.hpp"

using namespace tanaka;
using oracle::make_algebra;

namespace {

std::vector<std::size_t> dims_of(const GradedLieAlgebra& a) {
  std::vector<std::size_t> out;
  for (int d = -1; d >= a.min_degree(); --d) out.push_back(a.indices_of_degree(d).size());
  return out;
}

}  // namespace

TEST(Jacobi, AbelianAndHeisenbergPass) {
  EXPECT_TRUE(check_jacobi(oracle::abelian(4)).passed());
  EXPECT_TRUE(check_jacobi(oracle::real_heisenberg()).passed());
}

TEST(Jacobi, CorruptedConstantReported) {
  // [e1,e2]=e3, [e1,e3]=e4, [e1,e4]=e5, [e2,e3]=0, and the corrupt [e2,e4]=e6.
  // On (e1,e2,e3) the Jacobi sum is -[e2,e4] = -e6; every other triple has degree <= -5.
  auto a = make_algebra({{"e1", -1}, {"e2", -1}, {"e3", -2}, {"e4", -3}, {"e5", -4}, {"e6", -4}},
                        {{0, 1, {{2, 1}}}, {0, 2, {{3, 1}}}, {0, 3, {{4, 1}}}, {1, 3, {{5, 1}}}},
                        std::nullopt, false);
  const auto r = check_jacobi(a);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].i, 0u);
  EXPECT_EQ(r.violations[0].j, 1u);
  EXPECT_EQ(r.violations[0].k, 2u);
  EXPECT_THROW(make_algebra({{"e1", -1}, {"e2", -1}, {"e3", -2}, {"e4", -3}, {"e5", -4}, {"e6", -4}},
                            {{0, 1, {{2, 1}}}, {0, 2, {{3, 1}}}, {0, 3, {{4, 1}}}, {1, 3, {{5, 1}}}}),
               InvalidAlgebra);
}

TEST(Grading, ViolationRejected) {
  auto bad = make_algebra({{"x", -1}, {"y", -1}, {"t", -2}}, {{0, 1, {{0, 1}}}}, std::nullopt, false);
  EXPECT_FALSE(grading_violations(bad).empty());
  EXPECT_THROW(make_algebra({{"x", -1}, {"y", -1}, {"t", -2}}, {{0, 1, {{0, 1}}}}), InvalidAlgebra);
}

TEST(Fundamental, Examples) {
  EXPECT_TRUE(is_fundamental(oracle::real_heisenberg()));
  auto extra = make_algebra({{"x", -1}, {"y", -1}, {"t", -2}, {"c", -2}}, {{0, 1, {{2, 1}}}});
  EXPECT_FALSE(is_fundamental(extra));
  EXPECT_TRUE(is_fundamental(build_symbol_algebra(3).algebra));
}

TEST(Nondegenerate, Examples) {
  EXPECT_TRUE(is_nondegenerate_symbol(oracle::real_heisenberg()));
  auto flat = make_algebra({{"x", -1}, {"y", -1}, {"t", -2}}, {});
  EXPECT_FALSE(is_nondegenerate_symbol(flat));
}

TEST(Pseudocomplex, Examples) {
  EXPECT_TRUE(is_pseudocomplex(oracle::real_heisenberg()));
  EXPECT_THROW(is_pseudocomplex(make_algebra({{"x", -1}, {"y", -1}, {"t", -2}}, {{0, 1, {{2, 1}}}})),
               MissingJ);
  Matrix degenerate(2, 2);
  degenerate(0, 0) = 1;
  degenerate(1, 0) = 1;
  degenerate(1, 1) = 1;
  EXPECT_THROW(make_algebra({{"x", -1}, {"y", -1}, {"t", -2}}, {{0, 1, {{2, 1}}}}, degenerate),
               InvalidAlgebra);
}

TEST(SymbolAlgebra, Dimensions) {
  const auto s1 = build_symbol_algebra(1);
  EXPECT_EQ(s1.rho, 2);
  EXPECT_EQ(dims_of(s1.algebra), (std::vector<std::size_t>{2, 1}));

  const auto s2 = build_symbol_algebra(2);
  EXPECT_EQ(s2.rho, 3);
  EXPECT_EQ(dims_of(s2.algebra), (std::vector<std::size_t>{2, 1, 1}));
  EXPECT_EQ(s2.algebra.element(3).label, "[1,[1,2]]");

  const auto s3 = build_symbol_algebra(3);
  EXPECT_EQ(dims_of(s3.algebra), (std::vector<std::size_t>{2, 1, 2}));
  EXPECT_EQ(s3.projection, Matrix::identity(2));
}

TEST(SymbolAlgebra, FreeBelowTop) {
  for (int k = 1; k <= 12; ++k) {
    const auto s = build_symbol_algebra(k);
    const HallBasis h(s.rho);
    for (std::size_t a = 0; a < s.algebra.dim(); ++a)
      for (std::size_t b = 0; b < s.algebra.dim(); ++b) {
        const int len = h.word(s.hall_index[a]).length() + h.word(s.hall_index[b]).length();
        if (len >= s.rho) continue;
        Vector expected(s.algebra.dim());
        for (const auto& [w, c] : h.bracket(s.hall_index[a], s.hall_index[b])) {
          for (std::size_t e = 0; e < s.algebra.dim(); ++e)
            if (s.hall_index[e] == w) expected[e] = Gaussian(Rational(c));
        }
        EXPECT_EQ(s.algebra.bracket_vector(a, b), expected) << k;
      }
  }
}

TEST(SymbolAlgebra, TruncateKillsTrailingWords) {
  const auto s = build_symbol_algebra(2, QuotientSpec::truncate());
  EXPECT_EQ(s.algebra.element(3).label, "[1,[1,2]]");
  EXPECT_EQ(s.projection, Matrix::from_rows({{1, 0}}));
  // Killing [[1,2],2] alone is not stable under the generator swap.
  EXPECT_FALSE(s.algebra.conjugation());
  EXPECT_TRUE(build_symbol_algebra(2).algebra.conjugation());
}

TEST(SymbolAlgebra, ExplicitQuotient) {
  const auto s = build_symbol_algebra(2, QuotientSpec::explicit_projection(Matrix::from_rows({{1, 1}}), "t"));
  EXPECT_EQ(s.quotient.describe(), "explicit:t");
  EXPECT_EQ(s.algebra.dim(), 4u);
  EXPECT_TRUE(check_jacobi(s.algebra).passed());
  EXPECT_THROW(build_symbol_algebra(2, QuotientSpec::explicit_projection(Matrix::from_rows({{1, 0, 0}}))),
               BadQuotient);
  EXPECT_THROW(build_symbol_algebra(4, QuotientSpec::explicit_projection(Matrix(1, 3))), BadQuotient);
  EXPECT_THROW(build_symbol_algebra(3, QuotientSpec::explicit_projection(Matrix::from_rows({{1, 0}}))),
               BadQuotient);
}

TEST(SymbolAlgebra, InvariantsUpToTwelve) {
  for (int k = 1; k <= 12; ++k)
    for (const auto& q : {QuotientSpec::default_quotient(), QuotientSpec::truncate()}) {
      const auto s = build_symbol_algebra(k, q);
      EXPECT_EQ(s.algebra.dim(), static_cast<std::size_t>(2 + k));
      for (int ell = 1; ell < s.rho; ++ell)
        EXPECT_EQ(s.algebra.indices_of_degree(-ell).size(), witt_dim(ell));
      EXPECT_TRUE(check_jacobi(s.algebra).passed());
      EXPECT_TRUE(grading_violations(s.algebra).empty());
      EXPECT_TRUE(is_fundamental(s.algebra));
      EXPECT_TRUE(is_nondegenerate_symbol(s.algebra));
      EXPECT_TRUE(is_pseudocomplex(s.algebra));
      if (s.algebra.conjugation()) {
        const auto real = realify(s.algebra).algebra;
        EXPECT_TRUE(real.is_real());
        EXPECT_TRUE(is_pseudocomplex(real));
        EXPECT_TRUE(is_fundamental(real));
        EXPECT_TRUE(check_jacobi(real).passed());
      }
    }
}

TEST(Realify, Heisenberg) {
  const auto real = realify(build_symbol_algebra(1).algebra).algebra;
  ASSERT_EQ(real.dim(), 3u);
  EXPECT_EQ(real.element(0).label, "x");
  EXPECT_EQ(real.element(1).label, "y");
  const Vector xy = real.bracket_vector(0, 1);
  EXPECT_TRUE(xy[0].is_zero() && xy[1].is_zero());
  EXPECT_FALSE(xy[2].is_zero());
  EXPECT_TRUE(xy[2].is_real());
  // J(x) = y, J(y) = -x
  Matrix j(2, 2);
  j(1, 0) = 1;
  j(0, 1) = -1;
  EXPECT_EQ(*real.J(), j);
}

TEST(Realify, AbelianAndRoundTrip) {
  const auto ab = complexify(oracle::abelian(3));
  const auto r = realify(ab).algebra;
  EXPECT_EQ(r.table(), oracle::abelian(3).table());

  const auto h = oracle::real_heisenberg();
  const auto back = realify(complexify(h)).algebra;
  EXPECT_EQ(back.table(), h.table());
  EXPECT_EQ(back.basis(), h.basis());
  EXPECT_EQ(back.J(), h.J());
}

TEST(Realify, NotSelfConjugate) {
  // A conjugation that swaps x and y but not compatibly with [x,y] = i t.
  auto a = make_algebra({{"x", -1}, {"y", -1}, {"t", -2}}, {{0, 1, {{2, Gaussian(1)}}}});
  Matrix p(3, 3);
  p(1, 0) = 1;
  p(0, 1) = 1;
  p(2, 2) = 1;
  EXPECT_THROW(realify(a.with_conjugation(p)), NotSelfConjugate);
  EXPECT_THROW(realify(oracle::real_heisenberg()), NotSelfConjugate);
}

TEST(Json, RoundTrip) {
  for (int k = 1; k <= 12; ++k) {
    const auto s = build_symbol_algebra(k);
    EXPECT_EQ(algebra_from_json(to_json(s.algebra)), s.algebra);
    const auto real = realify(s.algebra).algebra;
    EXPECT_EQ(algebra_from_json(nlohmann::json::parse(to_json(real).dump())), real);
  }
  const auto j = to_json(build_symbol_algebra(2).algebra);
  EXPECT_TRUE(j.contains("basis"));
  EXPECT_TRUE(j.contains("brackets"));
  EXPECT_EQ(j["meta"]["k"], 2);
  EXPECT_EQ(j["meta"]["rho"], 3);
}

TEST(ChangeBasis, PreservesStructure) {
  const auto s = build_symbol_algebra(3).algebra;
  Matrix c = Matrix::identity(5);
  c(0, 1) = 2;  // mixes the two degree -1 generators
  c(3, 4) = Gaussian(0, 1);
  std::vector<BasisElement> labels = s.basis();
  const auto t = s.change_basis(c, labels);
  EXPECT_TRUE(check_jacobi(t).passed());
  EXPECT_EQ(t.change_basis(*inverse(c), labels).table(), s.table());
}
