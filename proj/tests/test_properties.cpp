#include <gtest/gtest.h>

#include "properties.hpp"

namespace {
constexpr std::uint64_t kSeed = 20240601;

void expect_clean(const props::Outcome& o, std::size_t cases) {
  EXPECT_EQ(o.cases, cases);
  EXPECT_EQ(o.failures, 0u) << o.name << ": " << o.first_failure;
}
}  // namespace

TEST(Properties, Contraction) { expect_clean(props::contraction(1500, kSeed + 1), 1500); }
TEST(Properties, Bilinearity) { expect_clean(props::bilinearity(1000, kSeed + 2), 1000); }
TEST(Properties, Composition) { expect_clean(props::composition(1000, kSeed + 3), 1000); }
TEST(Properties, GorensteinSymmetry) { expect_clean(props::gorenstein_symmetry(1000, kSeed + 4), 1000); }
TEST(Properties, ColonTwoWays) { expect_clean(props::colon_two_ways(1000, kSeed + 5), 1000); }
TEST(Properties, MultiplicityIdentity) { expect_clean(props::multiplicity_identity(1000, kSeed + 6), 1000); }
TEST(Properties, EmbeddingInvariance) { expect_clean(props::embedding_invariance(1000, kSeed + 7), 1000); }
TEST(Properties, EssentialRoundTrip) { expect_clean(props::essential_round_trip(1000, kSeed + 8), 1000); }
TEST(Properties, GrassmannDimension) { expect_clean(props::grassmann_dimension(1500, kSeed + 9), 1500); }
