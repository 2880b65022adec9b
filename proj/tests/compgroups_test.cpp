#include <gtest/gtest.h>

#include <bit>

#include "orbitduality/compgroups.hpp"

using namespace orbitduality;

namespace {

LieType B(int n) { return LieType::make(Family::B, n); }
LieType C(int n) { return LieType::make(Family::C, n); }
LieType D(int n) { return LieType::make(Family::D, n); }

std::vector<std::string> texts(const std::vector<ClassPair>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST(EnumerateClasses, FourClassesOf531InB4) {
  const auto cs = enumerate_classes(make_orbit(B(4), Partition{5, 3, 1}));
  EXPECT_EQ(texts(cs), (std::vector<std::string>{";5,3,1", "3,1;5", "5,1;3", "5,3;1"}));
}

TEST(EnumerateClasses, RegularC1HasOnlyTheTrivialClass) {
  EXPECT_EQ(texts(enumerate_classes(make_orbit(C(1), Partition{2}))),
            (std::vector<std::string>{";2"}));
}

TEST(EnumerateClasses, B3Of331) {
  EXPECT_EQ(texts(enumerate_classes(make_orbit(B(3), Partition{3, 3, 1}))),
            (std::vector<std::string>{";3,3,1", "3,1;3"}));
}

TEST(EnumerateClasses, TypeAAndVeryEvenAreTrivial) {
  for (const auto& o : enumerate_orbits(LieType::make(Family::A, 5))) {
    EXPECT_EQ(enumerate_classes(o).size(), 1u);
  }
  for (const auto& o : enumerate_orbits(D(6))) {
    if (o.very_even) {
      EXPECT_EQ(enumerate_classes(o).size(), 1u) << o.partition.to_string();
    }
  }
}

TEST(EnumerateClasses, PowerOfTwoSelfValidatingAndInvertible) {
  for (Family f : {Family::B, Family::C, Family::D}) {
    for (int n = f == Family::D ? 2 : 1; n <= 6; ++n) {
      const LieType t = LieType::make(f, n);
      for (const auto& o : enumerate_orbits(t)) {
        const auto cs = enumerate_classes(o);
        ASSERT_FALSE(cs.empty());
        EXPECT_TRUE(std::has_single_bit(cs.size()));
        EXPECT_TRUE(cs.front().is_trivial());
        for (const auto& c : cs) {
          EXPECT_NO_THROW(validate_pair(c));
          EXPECT_EQ(c.lambda(), o.partition);
          EXPECT_EQ(class_of_element(o, c.values()), c);
        }
      }
    }
  }
}

TEST(ClassOfElement, Examples) {
  const Orbit o = make_orbit(B(4), Partition{5, 3, 1});
  EXPECT_EQ(class_of_element(o, {5, 1}).to_string(), "5,1;3");
  EXPECT_EQ(class_of_element(o, {}).to_string(), ";5,3,1");
  EXPECT_EQ(class_of_element(make_orbit(B(3), Partition{3, 3, 1}), {3, 1}).to_string(), "3,1;3");
  EXPECT_THROW(class_of_element(o, {5}), DomainError);     // odd count in type B
  EXPECT_THROW(class_of_element(o, {5, 2}), DomainError);  // not a part value
  // C and D: the largest generator value of odd multiplicity is excluded.
  EXPECT_THROW(class_of_element(make_orbit(C(3), Partition{4, 2}), {4}), DomainError);
  EXPECT_EQ(class_of_element(make_orbit(C(3), Partition{4, 2}), {2}).to_string(), "2;4");
}

TEST(ValidatePair, NamesTheViolatedConstraint) {
  try {
    make_class_pair(B(4), Partition{3, 3}, Partition{3});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("distinguished"), std::string::npos);
  }
  EXPECT_THROW(make_class_pair(B(4), Partition{3, 1}, Partition{4}), DomainError);
  EXPECT_THROW(make_class_pair(D(3), Partition{5, 1}, Partition{}), DomainError);  // 5 excluded
  EXPECT_NO_THROW(make_class_pair(D(4), Partition{3, 1}, Partition{3, 1}));
}

TEST(ClassStats, Examples) {
  const auto s = class_stats(make_class_pair(B(4), Partition{3, 1}, Partition{5}));
  EXPECT_EQ(s.s_odd, (std::vector<int>{5, 3, 1}));
  EXPECT_EQ(s.t1, (std::vector<int>{3, 1}));
  EXPECT_TRUE(s.t2.empty());
  EXPECT_EQ(s.delta(1), 1);
  EXPECT_EQ(s.delta(2), 1);
  EXPECT_EQ(s.delta(3), 0);

  const auto triv = class_stats(make_class_pair(B(4), Partition{}, Partition{5, 3, 1}));
  EXPECT_TRUE(triv.t1.empty() && triv.t2.empty());
  for (int m = 0; m <= triv.l() + 1; ++m) EXPECT_EQ(triv.delta(m), 0);
  for (int t : triv.t) EXPECT_EQ(t, 0);

  const auto s3 = class_stats(make_class_pair(B(3), Partition{3, 1}, Partition{3}));
  EXPECT_EQ(s3.s_odd, (std::vector<int>{1}));
  EXPECT_EQ(s3.s_even, (std::vector<int>{3}));
  EXPECT_EQ(s3.t1, (std::vector<int>{1}));
  EXPECT_EQ(s3.t2, (std::vector<int>{3}));
}

TEST(ClassStats, ParityOfLAndPartition) {
  for (Family f : {Family::B, Family::C, Family::D}) {
    for (int n = f == Family::D ? 2 : 1; n <= 6; ++n) {
      for (const auto& o : enumerate_orbits(LieType::make(f, n))) {
        for (const auto& c : enumerate_classes(o)) {
          const auto s = class_stats(c);
          if (f == Family::B) {
            EXPECT_EQ(s.l() % 2, 1);
          }
          else EXPECT_EQ(s.l() % 2, 0);
          std::vector<int> both = s.t1;
          both.insert(both.end(), s.t2.begin(), s.t2.end());
          std::sort(both.begin(), both.end(), std::greater<>());
          EXPECT_EQ(both, c.nu.vec());
        }
      }
    }
  }
}

TEST(SymmetricDifference, IsTheGroupLaw) {
  EXPECT_EQ(symmetric_difference({5, 3}, {3, 1}), (ValueSet{5, 1}));
  EXPECT_EQ(symmetric_difference({}, {3, 1}), (ValueSet{3, 1}));
  EXPECT_EQ(symmetric_difference({3, 1}, {3, 1}), ValueSet{});
}
