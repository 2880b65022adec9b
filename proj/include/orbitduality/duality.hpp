#pragma once

// The generalized duality from (orbit, class) pairs to orbits of the
// Langlands dual algebra, its canonical preimages, and the check that it
// factors through the canonical quotient.

#include <map>

#include "orbitduality/compgroups.hpp"
#include "orbitduality/orbits.hpp"
#include "orbitduality/partitions.hpp"
#include "orbitduality/quotient.hpp"

namespace orbitduality {

/// Image of the pair (nu, eta):
///   B: (nu u eta^C)*_C    C: (nu u eta^B)*_B    D: (nu u (eta*_D)*)*_D
/// and lambda* for type A.
inline Orbit gdual(const ClassPair& p) {
  validate_pair(p);
  const LieType target = langlands_dual(p.type);
  switch (p.type.family) {
    case Family::A:
      return make_orbit(target, dual(p.eta));
    case Family::B:
      return make_orbit(target,
                        collapse(dual(union_of(p.nu, transfer_bc(p.eta))), PartitionClass::C));
    case Family::C:
      return make_orbit(target,
                        collapse(dual(union_of(p.nu, transfer_cb(p.eta))), PartitionClass::B));
    case Family::D: {
      const Partition inner = dual(collapse(dual(p.eta), PartitionClass::D));
      return make_orbit(target, collapse(dual(union_of(p.nu, inner)), PartitionClass::D));
    }
    default:
      throw DomainError("generalized duality needs a classical type");
  }
}

/// The canonical pair mapping onto `target`. Writes lambda* = nu u mu with nu
/// one copy of every value whose multiplicity breaks the parity rule, then
/// sets eta = mu^C, mu^B or mu_D for a target of type B, C or D. In C and D
/// the pair is then rewritten to the adjoint representative whose nu avoids
/// the excluded top value.
inline ClassPair canonical_preimage(const Orbit& target) {
  require_classical(target.type);
  const LieType source = langlands_dual(target.type);
  const Partition star = dual(target.partition);
  if (target.type.family == Family::A) return make_class_pair(source, {}, star);

  // Values that must have even multiplicity in lambda* for target special:
  // even values when the target is B, odd values for C and D.
  const int bad_parity = target.type.family == Family::B ? 0 : 1;
  std::vector<int> nu_parts;
  for (int v : star.distinct_values()) {
    if (v % 2 == bad_parity && star.multiplicity(v) % 2 == 1) nu_parts.push_back(v);
  }
  Partition nu(nu_parts);
  const Partition mu = remove_parts(star, nu);
  Partition eta;
  switch (target.type.family) {
    case Family::B: eta = transfer_bc(mu); break;
    case Family::C: eta = transfer_cb(mu); break;
    default: eta = collapse(mu, PartitionClass::D); break;
  }
  const ClassPair normalized = normalize_pair(ClassPair{source, std::move(nu), std::move(eta)});
  validate_pair(normalized);
  return normalized;
}

/// True when classes in the same coset of the canonical-quotient kernel
/// always have the same dual orbit.
inline bool verify_factorization(const Orbit& o) {
  const CanonicalQuotient q = canonical_quotient(o);
  std::map<ValueSet, Partition> image_of_coset;
  for (const auto& c : q.classes) {
    const Partition image = gdual(c).partition;
    const auto [it, inserted] = image_of_coset.emplace(q.coset_of(c), image);
    if (!inserted && it->second != image) return false;
  }
  return true;
}

}  // namespace orbitduality
