#pragma once

// Brute-force reference implementations. These only use partition
// validation, enumeration and the dominance order, never the algorithms they
// are meant to check.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "orbitduality/compgroups.hpp"
#include "orbitduality/errors.hpp"
#include "orbitduality/partitions.hpp"

namespace orbitduality::oracle {

namespace detail {

inline bool in_class(const Partition& p, PartitionClass cls) {
  // Restated membership rule: values of the restricted parity occur an even
  // number of times, and the size parity matches the class.
  const int eps = cls == PartitionClass::C ? 1 : 0;
  const bool odd_size = p.size() % 2 == 1;
  if (odd_size != (cls == PartitionClass::B)) return false;
  for (int v : p.parts()) {
    if (v % 2 == eps && p.multiplicity(v) % 2 != 0) return false;
  }
  return true;
}

inline bool all_distinct(const Partition& p) {
  for (std::size_t i = 1; i < p.length(); ++i) {
    if (p[i] == p[i - 1]) return false;
  }
  return true;
}

}  // namespace detail

inline constexpr int kDefaultSizeBound = 20;

/// Dominance-maximum of {mu in P_X(m) : mu <= lambda} by exhaustive search.
inline Partition brute_collapse(const Partition& lambda, PartitionClass cls,
                                int size_bound = kDefaultSizeBound) {
  if (lambda.size() > size_bound) {
    throw DomainError("brute_collapse: size " + std::to_string(lambda.size()) +
                      " exceeds bound " + std::to_string(size_bound));
  }
  if ((lambda.size() % 2 == 1) != (cls == PartitionClass::B)) {
    throw DomainError("brute_collapse: size parity does not match the class");
  }
  std::vector<Partition> below;
  for (auto& mu : all_partitions(lambda.size())) {
    if (detail::in_class(mu, cls) && dominance_leq(mu, lambda)) below.push_back(std::move(mu));
  }
  std::vector<Partition> maxima;
  for (const auto& mu : below) {
    const bool dominates_all = std::all_of(below.begin(), below.end(), [&](const Partition& other) {
      return dominance_leq(other, mu);
    });
    if (dominates_all) maxima.push_back(mu);
  }
  if (maxima.size() != 1) {
    throw DomainError("brute_collapse: no unique dominance-maximum below [" +
                      lambda.to_string() + "]");
  }
  return maxima.front();
}

/// Classes of A(O) found by testing every subset of the distinct part values
/// of lambda against the pair constraints.
inline std::vector<ClassPair> brute_classes(LieType type, const Partition& lambda,
                                            int rank_bound = 10) {
  if (type.rank > rank_bound) {
    throw DomainError("brute_classes: rank " + std::to_string(type.rank) + " exceeds bound " +
                      std::to_string(rank_bound));
  }
  std::vector<ClassPair> out;
  if (type.family == Family::A) {
    out.push_back(ClassPair{type, {}, lambda});
    return out;
  }
  const PartitionClass nu_cls = type.family == Family::C ? PartitionClass::C : PartitionClass::D;
  const PartitionClass eta_cls = type.family == Family::B   ? PartitionClass::B
                                 : type.family == Family::C ? PartitionClass::C
                                                            : PartitionClass::D;
  // Largest value not congruent to epsilon with odd multiplicity (C and D).
  int forbidden = 0;
  if (type.family != Family::B) {
    const int eps = type.family == Family::C ? 1 : 0;
    for (int v : lambda.parts()) {
      if (v % 2 != eps && lambda.multiplicity(v) % 2 == 1) {
        forbidden = std::max(forbidden, v);
      }
    }
  }
  std::vector<int> values;
  for (int v : lambda.parts()) {
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << values.size()); ++mask) {
    std::vector<int> nu_parts;
    std::vector<int> eta_parts = lambda.vec();
    for (std::size_t b = 0; b < values.size(); ++b) {
      if (!(mask & (std::uint64_t{1} << b))) continue;
      nu_parts.push_back(values[b]);
      eta_parts.erase(std::find(eta_parts.begin(), eta_parts.end(), values[b]));
    }
    const Partition nu = Partition::from_unsorted(nu_parts);
    const Partition eta(eta_parts);
    if (!detail::all_distinct(nu) || !detail::in_class(nu, nu_cls)) continue;
    if (!detail::in_class(eta, eta_cls)) continue;
    if (forbidden != 0 && nu.multiplicity(forbidden) > 0) continue;
    out.push_back(ClassPair{type, nu, eta});
  }
  std::sort(out.begin(), out.end(),
            [](const ClassPair& a, const ClassPair& b) { return a.nu < b.nu; });
  return out;
}

}  // namespace orbitduality::oracle
