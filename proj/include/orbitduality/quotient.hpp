#pragma once

// b~-values of (orbit, class) pairs and the canonical quotient
// A-bar(O) = A(O) / H, where H is the set of classes whose b~-value equals
// that of the trivial class.

#include <algorithm>
#include <map>
#include <vector>

#include "orbitduality/compgroups.hpp"
#include "orbitduality/orbits.hpp"

namespace orbitduality {

/// b~ of a pair: nu and eta are scored in their own sub-algebras (D and B for
/// a type-B source, C and C for C, D and D for D).
inline int btilde_pair(const ClassPair& p) {
  validate_pair(p);
  switch (p.type.family) {
    case Family::A: return btilde_formula(Family::A, p.eta);
    case Family::B: return btilde_formula(Family::D, p.nu) + btilde_formula(Family::B, p.eta);
    case Family::C: return btilde_formula(Family::C, p.nu) + btilde_formula(Family::C, p.eta);
    case Family::D: return btilde_formula(Family::D, p.nu) + btilde_formula(Family::D, p.eta);
    default: throw DomainError("b~ of a pair needs a classical type");
  }
}

inline bool in_kernel_btilde(const ClassPair& p) {
  return btilde_pair(p) == btilde_trivial(p.orbit());
}

/// Kernel membership read off the class statistics: t_m = 0 for even m and
/// delta_{m+1} + t_m + delta_m even for odd m. With the type-C padding
/// j_1 = 0 the m = 1 parity is not checked: x and x + (central values) name
/// the same adjoint class and exactly one of them passes it.
inline bool in_kernel_combinatorial(const ClassPair& p) {
  if (p.type.family == Family::A) return p.is_trivial();
  const ClassStats s = class_stats(p);
  for (int m = 0; m <= s.l(); ++m) {
    const int tm = s.t[static_cast<std::size_t>(m)];
    if (m % 2 == 0) {
      if (tm != 0) return false;
    } else if (!(s.padded && m == 1) && (s.delta(m + 1) + tm + s.delta(m)) % 2 != 0) {
      return false;
    }
  }
  return true;
}

/// Basis values spanning the transversal K: the j_m with m odd and the
/// S_even values lying in an interval with m even.
inline ValueSet transversal_basis(const Orbit& o) {
  ValueSet out;
  if (o.type.family == Family::A) return out;
  const ClassStats s = class_stats(ClassPair{o.type, {}, o.partition});
  for (int m = 1; m <= s.l(); m += 2) {
    if (s.j(m) != 0) out.push_back(s.j(m));
  }
  for (int v : s.s_even) {
    if (s.interval_of(v) % 2 == 0) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

struct CanonicalQuotient {
  Orbit orbit;
  std::vector<ClassPair> classes;      ///< all of A(O), enumeration order
  std::vector<ClassPair> kernel;       ///< H, enumeration order
  ValueSet k_basis;                    ///< values spanning K
  std::vector<ValueSet> k_generators;  ///< generators of K as value sets
  std::vector<ValueSet> k_elements;    ///< every element of K
  int order = 1;                       ///< |A(O)| / |H|
  /// Class value set -> coset identifier (smallest nu in the coset).
  std::map<ValueSet, ValueSet> class_to_coset;

  ValueSet coset_of(const ClassPair& p) const { return class_to_coset.at(p.values()); }
};

namespace detail {

inline std::vector<ValueSet> span_subsets(const ValueSet& basis, bool even_only) {
  std::vector<ValueSet> out;
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    ValueSet v;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (mask & (std::uint64_t{1} << b)) v.push_back(basis[b]);
    }
    if (even_only && v.size() % 2 != 0) continue;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline CanonicalQuotient canonical_quotient(const Orbit& o) {
  require_classical(o.type);
  CanonicalQuotient q{o, enumerate_classes(o), {}, {}, {}, {}, 1, {}};
  for (const auto& c : q.classes) {
    if (in_kernel_btilde(c)) q.kernel.push_back(c);
  }
  q.order = static_cast<int>(q.classes.size() / q.kernel.size());

  // Coset identifiers: classes arrive sorted by nu, so the first class seen
  // in each coset is the smallest.
  for (const auto& c : q.classes) {
    if (q.class_to_coset.count(c.values())) continue;
    const ValueSet id = c.values();
    for (const auto& h : q.kernel) {
      q.class_to_coset[symmetric_difference(id, h.values())] = id;
    }
  }

  if (o.type.family != Family::A) {
    q.k_basis = transversal_basis(o);
    const bool even_only = needs_even_cardinality(o.type.family);
    q.k_elements = detail::span_subsets(q.k_basis, even_only);
    for (std::size_t i = 0; i < q.k_basis.size(); ++i) {
      if (!even_only) {
        q.k_generators.push_back({q.k_basis[i]});
      } else if (i > 0) {
        q.k_generators.push_back({q.k_basis[0], q.k_basis[i]});
      }
    }
  } else {
    q.k_elements = {ValueSet{}};
  }
  return q;
}

}  // namespace orbitduality
