#include <gtest/gtest.h>

#include <set>

#include "orbitduality/quotient.hpp"

using namespace orbitduality;

namespace {

LieType B(int n) { return LieType::make(Family::B, n); }

std::vector<Orbit> classical_orbits(int max_rank) {
  std::vector<Orbit> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = f == Family::D ? 2 : 1; n <= max_rank; ++n) {
      for (auto& o : enumerate_orbits(LieType::make(f, n))) out.push_back(std::move(o));
    }
  }
  return out;
}

}  // namespace

TEST(BtildePair, Examples) {
  EXPECT_EQ(btilde_pair(make_class_pair(B(4), Partition{3, 1}, Partition{5})), 6);
  EXPECT_EQ(btilde_pair(make_class_pair(B(4), Partition{5, 3}, Partition{1})), 7);
  EXPECT_EQ(btilde_pair(make_class_pair(B(4), Partition{5, 1}, Partition{3})), 7);
  EXPECT_EQ(btilde_pair(make_class_pair(B(4), Partition{}, Partition{5, 3, 1})), 6);
}

TEST(Kernel, Examples) {
  const auto k1 = make_class_pair(B(4), Partition{3, 1}, Partition{5});
  const auto k2 = make_class_pair(B(4), Partition{5, 1}, Partition{3});
  const auto triv = make_class_pair(B(4), Partition{}, Partition{5, 3, 1});
  EXPECT_TRUE(in_kernel_btilde(k1));
  EXPECT_TRUE(in_kernel_combinatorial(k1));
  EXPECT_FALSE(in_kernel_btilde(k2));
  EXPECT_FALSE(in_kernel_combinatorial(k2));
  EXPECT_TRUE(in_kernel_btilde(triv));
  EXPECT_TRUE(in_kernel_combinatorial(triv));
}

// The two kernel criteria pin each other's conventions, so disagreement
// anywhere is a failure.
TEST(Kernel, CriteriaAgreeToRank6) {
  for (const auto& o : classical_orbits(6)) {
    for (const auto& c : enumerate_classes(o)) {
      EXPECT_EQ(in_kernel_btilde(c), in_kernel_combinatorial(c))
          << c.type.name() << ' ' << c.to_string();
    }
  }
}

TEST(Btilde, TrivialClassIsMinimal) {
  for (const auto& o : classical_orbits(6)) {
    for (const auto& c : enumerate_classes(o)) EXPECT_LE(btilde_trivial(o), btilde_pair(c));
  }
}

TEST(CanonicalQuotient, B4Of531) {
  const auto q = canonical_quotient(make_orbit(B(4), Partition{5, 3, 1}));
  EXPECT_EQ(q.order, 2);
  ASSERT_EQ(q.kernel.size(), 2u);
  EXPECT_EQ(q.kernel[0].to_string(), ";5,3,1");
  EXPECT_EQ(q.kernel[1].to_string(), "3,1;5");
  EXPECT_EQ(q.k_elements, (std::vector<ValueSet>{{}, {5, 1}}));
  EXPECT_EQ(q.k_generators, (std::vector<ValueSet>{{5, 1}}));
  EXPECT_EQ(q.coset_of(q.classes[3]), (ValueSet{5, 1}));  // [5,3] + [3,1] = [5,1]
}

TEST(CanonicalQuotient, ZeroOrbitAndTypeAAreTrivial) {
  EXPECT_EQ(canonical_quotient(make_orbit(B(3), Partition{1, 1, 1, 1, 1, 1, 1})).order, 1);
  for (const auto& o : enumerate_orbits(LieType::make(Family::A, 4))) {
    EXPECT_EQ(canonical_quotient(o).order, 1);
  }
}

TEST(CanonicalQuotient, StructureToRank6) {
  for (const auto& o : classical_orbits(6)) {
    const auto q = canonical_quotient(o);
    ASSERT_FALSE(q.kernel.empty());
    EXPECT_TRUE(q.kernel.front().is_trivial());
    EXPECT_EQ(q.order * q.kernel.size(), q.classes.size());

    std::set<ValueSet> h;
    for (const auto& k : q.kernel) h.insert(k.values());
    for (const auto& a : h) {
      for (const auto& b : h) EXPECT_TRUE(h.count(symmetric_difference(a, b)));
    }

    std::map<ValueSet, int> b_of_coset;
    for (const auto& c : q.classes) {
      const auto [it, fresh] = b_of_coset.emplace(q.coset_of(c), btilde_pair(c));
      if (!fresh) {
        EXPECT_EQ(it->second, btilde_pair(c));
      }
      // coset ids are the smallest member of the coset
      EXPECT_LE(Partition(q.coset_of(c)), c.nu);
    }
    EXPECT_EQ(static_cast<int>(b_of_coset.size()), q.order);

    EXPECT_EQ(static_cast<int>(q.k_elements.size()), q.order);
    std::set<ValueSet> cosets_hit;
    for (const auto& k : q.k_elements) {
      if (!k.empty()) {
        EXPECT_FALSE(h.count(k));
      }
      cosets_hit.insert(q.coset_of(class_of_element(o, k)));
    }
    EXPECT_EQ(static_cast<int>(cosets_hit.size()), q.order);
  }
}

// Basis values of K are the "corners" of the Young diagram: value i with
// the prescribed parity of i and of the column height lambda*_i.
TEST(CanonicalQuotient, CornerCharacterisation) {
  for (Family f : {Family::B, Family::C, Family::D}) {
    for (int n = f == Family::D ? 2 : 1; n <= 6; ++n) {
      for (const auto& o : enumerate_orbits(LieType::make(f, n))) {
        if (o.very_even) continue;
        const Partition star = dual(o.partition);
        ValueSet expected;
        for (int v : o.partition.distinct_values()) {
          const int height = star.at_or_zero(static_cast<std::size_t>(v - 1));
          const bool want = f == Family::B   ? (v % 2 == 1 && height % 2 == 1)
                            : f == Family::C ? (v % 2 == 0 && height % 2 == 0)
                                             : (v % 2 == 1 && height % 2 == 0);
          if (want) expected.push_back(v);
        }
        EXPECT_EQ(transversal_basis(o), expected) << o.type.name() << ' ' << o.partition.to_string();
      }
    }
  }
}
