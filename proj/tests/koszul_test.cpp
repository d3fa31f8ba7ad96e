#include "oracles.hpp"

#include "tork/betti_table.hpp"
#include "tork/graded_module.hpp"
#include "tork/koszul.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace tork {
namespace {

SimplicialComplex square() { return SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }
SimplicialComplex pentagon() {
  return SimplicialComplex::from_facets(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
}

BettiTable table_of(int m, std::size_t j_max,
                    std::initializer_list<std::tuple<int, std::size_t, std::size_t>> cells) {
  BettiTable b(m, j_max);
  for (const auto& [i, j, v] : cells) b.set(i, j, v);
  return b;
}

TEST(Strand, ResidueFieldHasZeroDifferential) {
  const KoszulStrand s = strand(GradedModule::residue_field(2), 1);
  EXPECT_EQ(s.dims, (std::vector<std::size_t>{0, 2}));
  ASSERT_EQ(s.d.size(), 2u);
  EXPECT_TRUE(s.d[1].is_zero());
  EXPECT_EQ(s.d[1].rows(), 0u);
  EXPECT_EQ(s.d[1].cols(), 2u);
}

TEST(Strand, PolynomialRingInOneVariable) {
  const GradedModule m = stanley_reisner(SimplicialComplex::from_facets(1, {{1}}), 1);
  const KoszulStrand s = strand(m, 1);
  EXPECT_EQ(s.dims, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(s.d[1], SparseMatrix(1, 1, {{0, 0, Rational(1)}}));
}

TEST(Strand, DimsAreModuleTimesBinomial) {
  const GradedModule m = stanley_reisner(square(), 4);
  for (std::size_t j = 0; j <= 4; ++j) {
    const KoszulStrand s = strand(m, j);
    for (std::size_t i = 0; i < s.dims.size(); ++i) {
      EXPECT_EQ(Integer(static_cast<unsigned long>(s.dims[i])),
                Integer(static_cast<unsigned long>(m.dim(j - i))) * binomial(4, static_cast<long>(i)));
      if (i > 0) {
        EXPECT_EQ(s.d[i].rows(), s.dims[i - 1]);
        EXPECT_EQ(s.d[i].cols(), s.dims[i]);
      }
    }
  }
}

TEST(Strand, RejectsInvalidModule) {
  const GradedModule bad(1, {1, 2}, {{SparseMatrix(3, 1)}});
  EXPECT_THROW(strand(bad, 1), std::invalid_argument);
  EXPECT_THROW(betti_table(bad), std::invalid_argument);
}

TEST(Strand, SquaresToZero) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const GradedModule m = random_artinian_module(1 + static_cast<int>(seed % 4), seed, 3);
    for (std::size_t j = 0; j <= m.num_levels() + 4; ++j) {
      const KoszulStrand s = strand(m, j);
      EXPECT_TRUE(differentials_square_to_zero(s));
      for (std::size_t i = 1; i + 1 < s.d.size(); ++i) {
        EXPECT_TRUE(compose(s.d[i], s.d[i + 1]).is_zero());
      }
    }
  }
}

TEST(Strand, DetectsBrokenDifferential) {
  KoszulStrand s;
  s.dims = {1, 1, 1};
  s.d = {SparseMatrix(0, 1), SparseMatrix::identity(1), SparseMatrix::identity(1)};
  EXPECT_FALSE(differentials_square_to_zero(s));
}

TEST(BettiTable, ResidueFieldGivesBinomials) {
  for (int m = 0; m <= 6; ++m) {
    const BettiTable b = betti_table(GradedModule::residue_field(m));
    for (int i = 0; i <= m; ++i) {
      for (std::size_t j = 0; j <= b.j_max(); ++j) {
        const Integer want = j == static_cast<std::size_t>(i) ? binomial(m, i) : Integer(0);
        EXPECT_EQ(Integer(static_cast<unsigned long>(b.at(i, j))), want);
      }
    }
    EXPECT_EQ(hrk(b), std::size_t{1} << m);
    EXPECT_EQ(euler_characteristic(b), m == 0 ? 1 : 0);
  }
}

TEST(BettiTable, SquareGolden) {
  const BettiTable b = stanley_reisner_betti(square());
  EXPECT_EQ(b, table_of(4, 4, {{0, 0, 1}, {1, 2, 2}, {2, 4, 1}}));
  EXPECT_EQ(b, oracle::brute_hochster(square()));
  EXPECT_EQ(total_betti(b), (std::vector<std::size_t>{1, 2, 1, 0, 0}));
  EXPECT_EQ(hrk(b), 4u);
  EXPECT_EQ(projective_dimension(b), 2);
  const auto p = poincare_vector(b);
  for (std::size_t k = 0; k < p.size(); ++k) {
    const std::size_t want = k == 0 ? 1 : k == 3 ? 2 : k == 6 ? 1 : 0;
    EXPECT_EQ(p[k], want) << "degree " << k;
  }
}

TEST(BettiTable, PentagonGolden) {
  const BettiTable b = stanley_reisner_betti(pentagon());
  EXPECT_EQ(b, table_of(5, 5, {{0, 0, 1}, {1, 2, 5}, {2, 3, 5}, {3, 5, 1}}));
  EXPECT_EQ(b, oracle::brute_hochster(pentagon()));
  EXPECT_EQ(total_betti(b), (std::vector<std::size_t>{1, 5, 5, 1, 0, 0}));
  EXPECT_EQ(hrk(b), 12u);
}

TEST(BettiTable, FullSimplexIsFree) {
  for (int m = 1; m <= 5; ++m) {
    VertexList all;
    for (int v = 1; v <= m; ++v) all.push_back(v);
    const BettiTable b = stanley_reisner_betti(SimplicialComplex::from_facets(m, {all}));
    EXPECT_EQ(b, table_of(m, m, {{0, 0, 1}}));
    EXPECT_EQ(hrk(b), 1u);
    EXPECT_EQ(projective_dimension(b), 0);
  }
}

TEST(BettiTable, EmptyComplexIsResidueField) {
  for (int m = 0; m <= 5; ++m) {
    const BettiTable b = stanley_reisner_betti(SimplicialComplex(m));
    BettiTable want(m, static_cast<std::size_t>(m));
    for (int i = 0; i <= m; ++i) {
      want.set(i, static_cast<std::size_t>(i), binomial(m, i).get_ui());
    }
    EXPECT_EQ(b, want);
  }
}

TEST(BettiTable, GhostVertexContributesOneLinearSyzygy) {
  const SimplicialComplex k = SimplicialComplex::from_facets(3, {{1, 2}});
  const BettiTable b = stanley_reisner_betti(k);
  EXPECT_EQ(b.at(1, 1), 1u);
  EXPECT_EQ(b, oracle::brute_hochster(k));
}

TEST(BettiTable, MonomialQuotientExample) {
  const GradedModule m = monomial_quotient(2, {{2, 0}, {1, 1}, {0, 2}}, 3);
  const BettiTable b = betti_table(m);
  EXPECT_EQ(total_betti(b), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(b, table_of(2, 3, {{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}));
  EXPECT_EQ(total_betti(betti_table(dual_module(m))), (std::vector<std::size_t>{2, 3, 1}));
}

TEST(BettiTable, StrandEulerCharacteristicMatchesChains) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int m = 1 + static_cast<int>(seed % 4);
    const GradedModule mod = random_artinian_module(m, seed, 3);
    const BettiTable b = betti_table(mod);
    for (std::size_t j = 0; j <= b.j_max(); ++j) {
      Integer homology = 0, chains = 0;
      for (int i = 0; i <= m; ++i) {
        const Integer sign = i % 2 == 0 ? 1 : -1;
        homology += sign * Integer(static_cast<unsigned long>(b.at(i, j)));
        if (static_cast<std::size_t>(i) <= j) {
          chains += sign * Integer(static_cast<unsigned long>(mod.dim(j - static_cast<std::size_t>(i)))) *
                    binomial(m, i);
        }
      }
      EXPECT_EQ(homology, chains) << "seed " << seed << " j " << j;
    }
  }
}

TEST(BettiTable, DefaultRangeIsComplete) {
  // One strand past the default range is exact.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const GradedModule mod = random_artinian_module(3, seed, 2);
    const BettiTable b = betti_table(mod);
    const BettiTable wider = betti_table(mod, b.j_max() + 3);
    EXPECT_EQ(b, wider);
  }
}

TEST(BettiTable, ParallelMatchesSerial) {
  const GradedModule m = stanley_reisner(pentagon(), 5);
  KoszulOptions serial, parallel;
  parallel.jobs = 4;
  EXPECT_EQ(betti_table(m, 5, serial), betti_table(m, 5, parallel));
}

TEST(BettiTable, NoGapsBelowProjectiveDimension) {
  for (const auto& k : sample_complexes(6, 60, 21)) {
    const BettiTable b = stanley_reisner_betti(k);
    const auto totals = total_betti(b);
    for (int i = 0; i <= projective_dimension(b); ++i) EXPECT_GE(totals[static_cast<std::size_t>(i)], 1u);
  }
}

TEST(BettiTableType, AccessorsAndErrors) {
  BettiTable b(2, 3);
  EXPECT_TRUE(b.is_zero());
  EXPECT_EQ(b.at(5, 9), 0u);
  EXPECT_THROW(b.set(3, 0, 1), std::out_of_range);
  EXPECT_THROW(b.set(0, 4, 1), std::out_of_range);
  EXPECT_THROW(projective_dimension(b), std::invalid_argument);
  EXPECT_EQ(total_betti(b), (std::vector<std::size_t>{0, 0, 0}));
  b.add(1, 2, 3);
  b.add(1, 2, 1);
  EXPECT_EQ(b.at(1, 2), 4u);
  EXPECT_EQ(b, table_of(2, 7, {{1, 2, 4}}));
  EXPECT_NE(b, table_of(3, 3, {{1, 2, 4}}));
  EXPECT_EQ(euler_characteristic(BettiTable(0, 0)), 0);
}

TEST(BettiTableType, Binomial) {
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(4, 0), 1);
  EXPECT_EQ(binomial(4, 5), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(-1, 0), 0);
}

}  // namespace
}  // namespace tork
