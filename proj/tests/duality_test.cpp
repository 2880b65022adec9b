#include <gtest/gtest.h>

#include <set>

#include "orbitduality/duality.hpp"

using namespace orbitduality;

namespace {

LieType B(int n) { return LieType::make(Family::B, n); }
LieType C(int n) { return LieType::make(Family::C, n); }

std::vector<LieType> types_up_to(int max_rank) {
  std::vector<LieType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = f == Family::D ? 2 : 1; n <= max_rank; ++n) out.push_back(LieType::make(f, n));
  }
  return out;
}

int springer_dim(const Orbit& o) {
  return (lie_algebra_dim(o.type) - orbit_dim(o) - o.type.rank) / 2;
}

}  // namespace

TEST(Gdual, Examples) {
  const Orbit a = gdual(make_class_pair(B(4), Partition{}, Partition{5, 3, 1}));
  EXPECT_EQ(a.type, C(4));
  EXPECT_EQ(a.partition, (Partition{2, 2, 2, 2}));
  EXPECT_EQ(springer_dim(a), 6);

  const Orbit b = gdual(make_class_pair(B(4), Partition{5, 3}, Partition{1}));
  EXPECT_EQ(b.partition, (Partition{2, 2, 2, 1, 1}));
  EXPECT_EQ(springer_dim(b), 7);

  const Orbit c = gdual(make_class_pair(B(2), Partition{3, 1}, Partition{1}));
  EXPECT_EQ(c.type, C(2));
  EXPECT_EQ(c.partition, (Partition{2, 1, 1}));
  EXPECT_EQ(springer_dim(c), 2);
}

TEST(CanonicalPreimage, Examples) {
  EXPECT_EQ(canonical_preimage(make_orbit(C(4), Partition{2, 2, 2, 2})),
            make_class_pair(B(4), Partition{}, Partition{5, 3, 1}));
  EXPECT_EQ(canonical_preimage(make_orbit(C(2), Partition{2, 1, 1})),
            make_class_pair(B(2), Partition{3, 1}, Partition{1}));
  EXPECT_EQ(canonical_preimage(make_orbit(C(4), Partition{3, 3, 2})),
            make_class_pair(B(4), Partition{}, Partition{3, 3, 3}));
}

// A target whose preimage needs the excluded top value moved out of nu:
// lambda* = [5,3,1,1,1] gives nu = [4,2] before normalisation.
TEST(CanonicalPreimage, NormalisesTheExcludedValue) {
  const Orbit target = make_orbit(B(5), Partition{3, 3, 2, 2, 1});
  const ClassPair p = canonical_preimage(target);
  EXPECT_NO_THROW(validate_pair(p));
  EXPECT_EQ(gdual(p).partition, target.partition);
}

TEST(Gdual, SurjectiveRoundTripAndSpecialSources) {
  for (auto t : types_up_to(6)) {
    std::set<Partition> image;
    for (const auto& o : enumerate_orbits(t)) {
      for (const auto& c : enumerate_classes(o)) image.insert(gdual(c).partition);
    }
    std::set<Partition> all;
    for (const auto& target : enumerate_orbits(langlands_dual(t))) {
      all.insert(target.partition);
      const ClassPair p = canonical_preimage(target);
      EXPECT_EQ(gdual(p).partition, target.partition) << target.type.name() << ' ' << target.partition.to_string();
      EXPECT_TRUE(is_special(p.orbit()));
      if (is_special(target)) {
        EXPECT_TRUE(p.is_trivial()) << target.partition.to_string();
      }
    }
    EXPECT_EQ(image, all) << t.name();
  }
}

TEST(Gdual, SpringerFiberDimensionIsBtilde) {
  for (auto t : types_up_to(6)) {
    for (const auto& o : enumerate_orbits(t)) {
      for (const auto& c : enumerate_classes(o)) {
        const Orbit g = gdual(c);
        const int twice = lie_algebra_dim(g.type) - orbit_dim(g) - t.rank;
        EXPECT_EQ(twice, 2 * btilde_pair(c)) << t.name() << ' ' << c.to_string();
      }
    }
  }
}

TEST(Gdual, FactorsThroughCanonicalQuotient) {
  EXPECT_TRUE(verify_factorization(make_orbit(B(4), Partition{5, 3, 1})));
  for (const auto& o : enumerate_orbits(C(3))) EXPECT_TRUE(verify_factorization(o));
  for (auto t : types_up_to(6)) {
    for (const auto& o : enumerate_orbits(t)) EXPECT_TRUE(verify_factorization(o)) << t.name();
  }
}

TEST(Gdual, OrderReversingOnTrivialClasses) {
  for (auto t : types_up_to(6)) {
    const auto orbits = enumerate_orbits(t);
    for (const auto& a : orbits) {
      for (const auto& b : orbits) {
        if (!dominance_leq(a.partition, b.partition)) continue;
        EXPECT_TRUE(dominance_leq(gdual(ClassPair{t, {}, b.partition}).partition,
                                  gdual(ClassPair{t, {}, a.partition}).partition));
      }
    }
  }
}
