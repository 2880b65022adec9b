#pragma once

// Classical nilpotent orbits: Lie types, orbit enumeration, specialness,
// Lusztig-Spaltenstein duality, orbit dimensions and the b~-value of the
// trivial conjugacy class.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitduality/errors.hpp"
#include "orbitduality/partitions.hpp"

namespace orbitduality {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

inline bool is_classical(Family f) {
  return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

struct LieType {
  Family family = Family::A;
  int rank = 1;

  /// Validating constructor. Classical ranks: A,B,C >= 1 and D >= 2.
  /// Exceptional families carry their fixed rank.
  static LieType make(Family family, int rank) {
    switch (family) {
      case Family::G2: return {family, 2};
      case Family::F4: return {family, 4};
      case Family::E6: return {family, 6};
      case Family::E7: return {family, 7};
      case Family::E8: return {family, 8};
      default: break;
    }
    const int min_rank = family == Family::D ? 2 : 1;
    if (rank < min_rank) {
      throw DomainError("rank of type " + orbitduality::to_string(family) +
                        " must be at least " + std::to_string(min_rank));
    }
    return {family, rank};
  }

  static LieType parse(std::string_view family, int rank) {
    if (family == "A") return make(Family::A, rank);
    if (family == "B") return make(Family::B, rank);
    if (family == "C") return make(Family::C, rank);
    if (family == "D") return make(Family::D, rank);
    if (family == "G2") return make(Family::G2, 2);
    if (family == "F4") return make(Family::F4, 4);
    if (family == "E6") return make(Family::E6, 6);
    if (family == "E7") return make(Family::E7, 7);
    if (family == "E8") return make(Family::E8, 8);
    throw DomainError("unknown Lie type '" + std::string(family) + "'");
  }

  std::string name() const {
    return is_classical(family) ? orbitduality::to_string(family) + std::to_string(rank)
                                : orbitduality::to_string(family);
  }

  friend bool operator==(const LieType&, const LieType&) = default;
};

/// Langlands dual type: B <-> C, everything else self-dual.
inline LieType langlands_dual(LieType t) {
  if (t.family == Family::B) return {Family::C, t.rank};
  if (t.family == Family::C) return {Family::B, t.rank};
  return t;
}

inline void require_classical(LieType t) {
  if (!is_classical(t.family)) {
    throw DomainError("operation requires a classical type, got " + t.name() +
                      " (use the exceptional tables)");
  }
}

/// Partition class governing orbits of the type; none for type A.
inline std::optional<PartitionClass> partition_class(LieType t) {
  switch (t.family) {
    case Family::B: return PartitionClass::B;
    case Family::C: return PartitionClass::C;
    case Family::D: return PartitionClass::D;
    default: return std::nullopt;
  }
}

/// Size of the partitions labelling orbits: n+1, 2n+1, 2n, 2n.
inline int partition_size(LieType t) {
  require_classical(t);
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2 * t.rank + 1;
    default: return 2 * t.rank;
  }
}

inline int lie_algebra_dim(LieType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * n + 2 * n;
    case Family::B:
    case Family::C: return 2 * n * n + n;
    case Family::D: return 2 * n * n - n;
    case Family::G2: return 14;
    case Family::F4: return 52;
    case Family::E6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
  }
  return 0;
}

inline int positive_roots(LieType t) { return (lie_algebra_dim(t) - t.rank) / 2; }

// ---------------------------------------------------------------------------

/// A classical nilpotent orbit. Very even type-D partitions label two orbits;
/// both are represented by one value with `very_even` set.
struct Orbit {
  LieType type;
  Partition partition;
  bool very_even = false;

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

inline bool all_parts_even(const Partition& p) {
  return std::all_of(p.parts().begin(), p.parts().end(), [](int v) { return v % 2 == 0; });
}

/// Validates that `lambda` labels an orbit of `type` and builds it.
inline Orbit make_orbit(LieType type, Partition lambda) {
  require_classical(type);
  const int m = partition_size(type);
  if (lambda.size() != m) {
    throw DomainError("orbit of " + type.name() + " needs a partition of " +
                      std::to_string(m) + ", got [" + lambda.to_string() +
                      "] of size " + std::to_string(lambda.size()));
  }
  if (auto cls = partition_class(type); cls && !member(lambda, *cls)) {
    throw DomainError("[" + lambda.to_string() + "] is not in P_" +
                      std::string(1, to_char(*cls)) + "(" + std::to_string(m) + ")");
  }
  const bool ve = type.family == Family::D && !lambda.empty() && all_parts_even(lambda);
  return Orbit{type, std::move(lambda), ve};
}

inline std::vector<Orbit> enumerate_orbits(LieType type) {
  require_classical(type);
  std::vector<Orbit> out;
  const auto cls = partition_class(type);
  for (auto& lambda : all_partitions(partition_size(type))) {
    if (!cls || member(lambda, *cls)) out.push_back(make_orbit(type, std::move(lambda)));
  }
  return out;
}

inline bool is_special(const Orbit& o) {
  require_classical(o.type);
  switch (o.type.family) {
    case Family::A: return true;
    case Family::B: return member(dual(o.partition), PartitionClass::B);
    default: return o.very_even || member(dual(o.partition), PartitionClass::C);
  }
}

/// Lusztig-Spaltenstein duality inside the same algebra: lambda* in type A,
/// (lambda*)_X otherwise.
inline Orbit ls_dual(const Orbit& o) {
  require_classical(o.type);
  const auto cls = partition_class(o.type);
  Partition d = dual(o.partition);
  if (cls) d = collapse(d, *cls);
  return make_orbit(o.type, std::move(d));
}

/// Duality into the Langlands dual algebra: (lambda^C)*_C for B,
/// (lambda^B)*_B for C, and the in-algebra duality for A and D.
inline Orbit bv_dual(const Orbit& o) {
  require_classical(o.type);
  const LieType target = langlands_dual(o.type);
  switch (o.type.family) {
    case Family::B:
      return make_orbit(target, collapse(dual(transfer_bc(o.partition)), PartitionClass::C));
    case Family::C:
      return make_orbit(target, collapse(dual(transfer_cb(o.partition)), PartitionClass::B));
    default:
      return ls_dual(o);
  }
}

/// dim g - dim Z_g(e), from the column lengths s of lambda.
inline int orbit_dim(const Orbit& o) {
  require_classical(o.type);
  const Partition s = dual(o.partition);
  int sum_sq = 0;
  for (int v : s.parts()) sum_sq += v * v;
  int odd_parts = 0;
  for (int v : o.partition.parts()) odd_parts += v % 2;
  int centralizer = 0;
  switch (o.type.family) {
    case Family::A: centralizer = sum_sq - 1; break;
    case Family::B:
    case Family::D: centralizer = (sum_sq - odd_parts) / 2; break;
    case Family::C: centralizer = (sum_sq + odd_parts) / 2; break;
    default: break;
  }
  return lie_algebra_dim(o.type) - centralizer;
}

/// Closed-form b~ of (lambda, trivial class) for a partition read in the
/// given classical family. Positions are 1-based. No membership check, so it
/// also scores the nu and eta halves of a class pair.
inline int btilde_formula(Family family, const Partition& lambda) {
  // Work with 4 * b~ to stay in integers.
  long sum_sq = 0;
  long sum = 0;
  long odd_pos = 0;
  long even_pos = 0;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    const long v = lambda[i];
    sum_sq += v * v;
    sum += v;
    ((i % 2 == 0) ? odd_pos : even_pos) += v;
  }
  long four_b = 0;
  switch (family) {
    case Family::A: four_b = 2 * sum_sq - 2 * sum; break;
    case Family::B: four_b = sum_sq - 2 * odd_pos + 1; break;
    case Family::C:
    case Family::D: four_b = sum_sq - 2 * even_pos; break;
    default: throw DomainError("b~ formula is only available for classical types");
  }
  if (four_b % 4 != 0) {
    throw DomainError("b~ formula gave a non-integer for [" + lambda.to_string() +
                      "] in type " + to_string(family));
  }
  return static_cast<int>(four_b / 4);
}

inline int btilde_trivial(const Orbit& o) {
  require_classical(o.type);
  return btilde_formula(o.type.family, o.partition);
}

/// b~ from its definition: half of dim g - dim d(O) - rank, with d the
/// duality inside the same algebra.
inline int btilde_definitional(const Orbit& o) {
  const Orbit f = ls_dual(o);
  const int twice = lie_algebra_dim(o.type) - orbit_dim(f) - o.type.rank;
  if (twice % 2 != 0) throw DomainError("odd Springer fiber dimension numerator");
  return twice / 2;
}

}  // namespace orbitduality
