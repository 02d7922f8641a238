#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tanaka/catalog.hpp"
#include "tanaka/crmodels.hpp"
#include "tanaka/frames.hpp"
#include "tanaka/prolong.hpp"

using namespace tanaka;

namespace {

GradedLieAlgebra real_symbol(int k, const QuotientSpec& q = {}) {
  return realify(build_symbol_algebra(k, q).algebra).algebra;
}

PartialProlongation partial(const GradedLieAlgebra& m, Flavor f, int up_to) {
  PartialProlongation p;
  p.m = m;
  p.flavor = f;
  p.components.push_back(grade0(m, f == Flavor::LeviTanaka));
  for (int l = 1; l <= up_to; ++l) p.components.push_back(prolong_component(p, l));
  return p;
}

// The multilinear form x_1, ..., x_{depth} -> [[u, x_1], ...] landing in m, flattened.
Vector signature(const PartialProlongation& p, const Vector& u, int depth) {
  const std::size_t n = p.m.dim();
  Vector out(u.begin(), u.begin() + static_cast<long>(n));
  if (depth == 0) return out;
  for (std::size_t b = 0; b < n; ++b) {
    const Vector s = signature(p, p.act(u, b), depth - 1);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

Vector element(const PartialProlongation& p, int l, std::size_t i) {
  Vector u(p.global_dim());
  u[p.offset(l) + i] = 1;
  return u;
}

}  // namespace

TEST(Grade0, Heisenberg) {
  const auto h = oracle::real_heisenberg();
  EXPECT_EQ(grade0(h, false).dim(), 4u);
  EXPECT_EQ(grade0(h, true).dim(), 2u);
}

TEST(Grade0, FreeThreeStepContainsEuler) {
  const auto m = real_symbol(3);
  PartialProlongation p;
  p.m = m;
  p.flavor = Flavor::LeviTanaka;
  p.components.push_back(grade0(m, true));
  EXPECT_EQ(p.components[0].dim(), 2u);
  EXPECT_TRUE(component_coordinates(p, 0, euler_derivation(m)));
}

TEST(Grade0, NotFundamental) {
  auto extra = oracle::make_algebra({{"x", -1}, {"y", -1}, {"t", -2}, {"c", -2}}, {{0, 1, {{2, 1}}}});
  EXPECT_THROW(grade0(extra, false), NotFundamental);
}

TEST(ProlongComponent, HeisenbergLeviTanaka) {
  const auto p = partial(oracle::real_heisenberg(), Flavor::LeviTanaka, 3);
  EXPECT_EQ(p.components[1].dim(), 2u);
  EXPECT_EQ(p.components[2].dim(), 1u);
  EXPECT_EQ(p.components[3].dim(), 0u);
}

TEST(ProlongComponent, MissingLower) {
  PartialProlongation p;
  p.m = oracle::real_heisenberg();
  p.components.push_back(grade0(p.m, true));
  EXPECT_THROW(prolong_component(p, 2), MissingLowerComponents);
}

TEST(ProlongComponent, FreeThreeStepVanishes) {
  const auto p = partial(real_symbol(3), Flavor::LeviTanaka, 1);
  EXPECT_EQ(p.components[1].dim(), 0u);
}

TEST(ProlongComponent, LeibnizResiduals) {
  for (int k : {1, 2, 3, 4}) {
    const auto m = real_symbol(k);
    const auto p = partial(m, Flavor::LeviTanaka, k == 1 ? 2 : 0);
    for (int l = 0; l < static_cast<int>(p.components.size()); ++l)
      for (const auto& d : p.components[l].basis) EXPECT_TRUE(satisfies_leibniz(p, l, d));
  }
  // x -> x, y -> 0, t -> 0 is not a derivation: d[x,y] = 0 but [dx,y] = t.
  PartialProlongation p;
  p.m = oracle::real_heisenberg();
  DerivationMap bad(3, Vector(3));
  bad[0][0] = 1;
  EXPECT_FALSE(satisfies_leibniz(p, 0, bad));
}

TEST(FullProlongation, HeisenbergEight) {
  const auto p = full_prolongation(real_symbol(1), Flavor::LeviTanaka);
  EXPECT_EQ(p.total_dim(), 8u);
  EXPECT_EQ(p.dims(), (std::map<int, std::size_t>{{-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}}));
  EXPECT_EQ(p.terminated_at, 3);
  EXPECT_TRUE(is_transitive(p));
  EXPECT_TRUE(check_jacobi(p.algebra).passed());
}

TEST(FullProlongation, FreeThreeStepSeven) {
  const auto p = full_prolongation(real_symbol(3), Flavor::LeviTanaka);
  EXPECT_EQ(p.total_dim(), 7u);
  EXPECT_EQ(p.dims(), (std::map<int, std::size_t>{{-3, 2}, {-2, 1}, {-1, 2}, {0, 2}}));
}

TEST(FullProlongation, AbelianHitsGuard) {
  EXPECT_THROW(full_prolongation(oracle::abelian(2), Flavor::FullTanaka, 4), GuardExceeded);
  EXPECT_THROW(full_prolongation(oracle::abelian(2), Flavor::FullTanaka), GuardExceeded);
}

TEST(FullProlongation, RequiresPseudocomplex) {
  EXPECT_THROW(full_prolongation(oracle::make_algebra({{"x", -1}, {"y", -1}, {"t", -2}}, {{0, 1, {{2, 1}}}}),
                                 Flavor::LeviTanaka),
               MissingJ);
}

TEST(FullProlongation, FreeThreeStepIsG2) {
  // The (2,3,5) distribution: full prolongation is split G2, dims 2,1,2 | 4 | 2,1,2.
  const auto p = full_prolongation(real_symbol(3), Flavor::FullTanaka);
  EXPECT_EQ(p.total_dim(), 14u);
  EXPECT_EQ(p.dims(), (std::map<int, std::size_t>{{-3, 2}, {-2, 1}, {-1, 2}, {0, 4}, {1, 2}, {2, 1}, {3, 2}}));
  EXPECT_TRUE(is_transitive(p));
  EXPECT_TRUE(check_jacobi(p.algebra).passed());
  EXPECT_EQ(prolong_component(p, p.terminated_at + 1).dim(), 0u);
}

TEST(FullProlongation, EngelIsInfinite) {
  EXPECT_THROW(full_prolongation(real_symbol(2), Flavor::FullTanaka), GuardExceeded);
}

TEST(FullProlongation, LeviTanakaInsideFullTanaka) {
  for (int k = 1; k <= 8; ++k) {
    const auto m = real_symbol(k);
    const int depth = k == 1 ? 2 : 0;
    const auto lt = partial(m, Flavor::LeviTanaka, depth);
    const auto ft = partial(m, Flavor::FullTanaka, depth);
    for (int l = 0; l <= depth; ++l) {
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < ft.components[l].dim(); ++i) rows.push_back(signature(ft, element(ft, l, i), l + 1));
      const std::size_t full_rank = rank(Matrix::from_rows(rows));
      EXPECT_EQ(full_rank, ft.components[l].dim());
      for (std::size_t i = 0; i < lt.components[l].dim(); ++i) rows.push_back(signature(lt, element(lt, l, i), l + 1));
      EXPECT_EQ(rank(Matrix::from_rows(rows)), full_rank) << "k=" << k << " l=" << l;
    }
  }
}

TEST(FullProlongation, HigherComponentsVanishForRealSymbols) {
  auto check = [](const GradedLieAlgebra& m, const std::string& what) {
    const auto p = full_prolongation(m, Flavor::LeviTanaka);
    EXPECT_EQ(p.terminated_at, 1) << what;
    const std::size_t g0 = p.components[0].dim();
    EXPECT_TRUE(g0 == 1 || g0 == 2) << what;
    EXPECT_TRUE(check_jacobi(p.algebra).passed()) << what;
    EXPECT_TRUE(is_transitive(p)) << what;
  };
  for (int k = 2; k <= 12; ++k) check(real_symbol(k), "default k=" + std::to_string(k));
  for (const auto& model : builtin_catalog())
    if (model.expect_nondegenerate && model.k >= 2)
      check(realify(symbol_from_frame(model).algebra).algebra, model.id);
}

TEST(FullProlongation, TruncateWithoutRealFormKeepsPositiveParts) {
  // Not the symbol of any real model: the complex quotient has no conjugation.
  const auto s = build_symbol_algebra(2, QuotientSpec::truncate());
  ASSERT_FALSE(s.algebra.conjugation());
  const auto p = full_prolongation(s.algebra, Flavor::LeviTanaka);
  EXPECT_EQ(p.total_dim(), 10u);
  EXPECT_GT(p.components[1].dim(), 0u);
}

TEST(Transitivity, ZeroActingElementDetected) {
  auto p = full_prolongation(real_symbol(3), Flavor::LeviTanaka);
  ASSERT_TRUE(is_transitive(p));
  std::vector<BasisElement> basis = p.algebra.basis();
  basis.push_back({"z", 0, std::nullopt, nullptr});
  const std::size_t n = basis.size();
  BracketTable table(n);
  for (std::size_t a = 0; a + 1 < n; ++a)
    for (std::size_t b = a + 1; b + 1 < n; ++b) {
      Vector v = p.algebra.bracket_vector(a, b);
      v.resize(n);
      table.set(a, b, v);
    }
  p.algebra = GradedLieAlgebra(std::move(basis), std::move(table), p.algebra.J());
  EXPECT_FALSE(is_transitive(p));
}

TEST(Json, ProlongedAlgebraRoundTrip) {
  const auto p = full_prolongation(real_symbol(1), Flavor::LeviTanaka);
  const auto j = to_json(p.algebra);
  EXPECT_EQ(j["meta"]["flavor"], "levi-tanaka");
  EXPECT_EQ(algebra_from_json(nlohmann::json::parse(j.dump())), p.algebra);
}

TEST(Flavor, Names) {
  EXPECT_EQ(to_string(Flavor::LeviTanaka), "levi-tanaka");
  EXPECT_EQ(flavor_from_string("full-tanaka"), Flavor::FullTanaka);
  EXPECT_THROW(flavor_from_string("other"), std::invalid_argument);
}
