#pragma once

// Conjugacy classes of the component group A(O) of a classical orbit for the
// adjoint group, encoded as pairs (nu, eta) with lambda = nu u eta, together
// with the S_odd / S_even / T1 / T2 / delta / t_m statistics of a class.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orbitduality/errors.hpp"
#include "orbitduality/orbits.hpp"
#include "orbitduality/partitions.hpp"

namespace orbitduality {

/// A set of part values, stored strictly decreasing. Group elements of A(O)
/// are such sets under symmetric difference.
using ValueSet = std::vector<int>;

inline ValueSet symmetric_difference(const ValueSet& a, const ValueSet& b) {
  ValueSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out), std::greater<>());
  return out;
}

struct ClassPair {
  LieType type;
  Partition nu;
  Partition eta;

  Partition lambda() const { return union_of(nu, eta); }
  Orbit orbit() const { return make_orbit(type, lambda()); }
  bool is_trivial() const { return nu.empty(); }
  ValueSet values() const { return nu.vec(); }

  /// Text form `nu;eta`, e.g. `3,1;5`; the trivial class is `;5,3,1`.
  std::string to_string() const { return nu.to_string() + ";" + eta.to_string(); }

  friend bool operator==(const ClassPair&, const ClassPair&) = default;
};

namespace detail {

/// Parity of the values that generate A(O): odd in B/D, even in C.
inline int generator_parity(Family f) { return f == Family::C ? 0 : 1; }

/// Class of the distinguished partition nu inside the sub-algebra l_1.
inline PartitionClass nu_class(Family f) {
  return f == Family::C ? PartitionClass::C : PartitionClass::D;
}

/// In C and D the largest generator-parity value of odd multiplicity may not
/// appear in nu; 0 when there is no such value or the type is A/B.
inline int excluded_value(Family f, const Partition& lambda) {
  if (f != Family::C && f != Family::D) return 0;
  const int par = generator_parity(f);
  for (int v : lambda.distinct_values()) {
    if (v % 2 == par && lambda.multiplicity(v) % 2 == 1) return v;
  }
  return 0;
}

}  // namespace detail

/// Part values of lambda that may appear in nu, decreasing.
inline ValueSet basis_values(const Orbit& o) {
  require_classical(o.type);
  ValueSet out;
  if (o.type.family == Family::A) return out;
  const int par = detail::generator_parity(o.type.family);
  const int excluded = detail::excluded_value(o.type.family, o.partition);
  for (int v : o.partition.distinct_values()) {
    if (v % 2 == par && v != excluded) out.push_back(v);
  }
  return out;
}

/// Values of generator parity with odd multiplicity in lambda. Their sum is
/// the image of the centre in the component group of the isometry group, so
/// in C and D the adjoint A(O) identifies x with x + (this set).
inline ValueSet central_values(Family f, const Partition& lambda) {
  ValueSet out;
  if (f != Family::C && f != Family::D) return out;
  const int par = detail::generator_parity(f);
  for (int v : lambda.distinct_values()) {
    if (v % 2 == par && lambda.multiplicity(v) % 2 == 1) out.push_back(v);
  }
  return out;
}

inline bool needs_even_cardinality(Family f) { return f == Family::B || f == Family::D; }

/// Throws DomainError naming the first violated pair constraint.
inline void validate_pair(const ClassPair& p) {
  require_classical(p.type);
  const Partition lambda = p.lambda();
  const int m = partition_size(p.type);
  if (lambda.size() != m) {
    throw DomainError("pair sizes add to " + std::to_string(lambda.size()) +
                      ", expected " + std::to_string(m) + " for " + p.type.name());
  }
  const Family f = p.type.family;
  if (f == Family::A) {
    if (!p.nu.empty()) throw DomainError("type A component groups are trivial; nu must be empty");
    return;
  }
  const PartitionClass nu_cls = detail::nu_class(f);
  if (!is_distinguished(p.nu, nu_cls)) {
    throw DomainError("nu = [" + p.nu.to_string() + "] is not a distinguished partition in P_" +
                      std::string(1, to_char(nu_cls)));
  }
  const PartitionClass eta_cls = *partition_class(p.type);
  if (!member(p.eta, eta_cls)) {
    throw DomainError("eta = [" + p.eta.to_string() + "] is not in P_" +
                      std::string(1, to_char(eta_cls)));
  }
  const int excluded = detail::excluded_value(f, lambda);
  if (excluded != 0 && p.nu.multiplicity(excluded) > 0) {
    throw DomainError("nu may not contain " + std::to_string(excluded) +
                      ", the largest value of odd multiplicity in lambda");
  }
}

/// Rewrites a pair whose nu contains the excluded top value into the
/// representative of the same adjoint class that avoids it.
inline ClassPair normalize_pair(const ClassPair& p) {
  const Partition lambda = p.lambda();
  const int excluded = detail::excluded_value(p.type.family, lambda);
  if (excluded == 0 || p.nu.multiplicity(excluded) == 0) return p;
  Partition nu(symmetric_difference(p.nu.vec(), central_values(p.type.family, lambda)));
  Partition eta = remove_parts(lambda, nu);
  return ClassPair{p.type, std::move(nu), std::move(eta)};
}

inline ClassPair make_class_pair(LieType type, Partition nu, Partition eta) {
  ClassPair p{type, std::move(nu), std::move(eta)};
  validate_pair(p);
  return p;
}

/// The class whose group element is the sum of the basis elements in `values`.
inline ClassPair class_of_element(const Orbit& o, ValueSet values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw DomainError("repeated basis value");
  }
  const ValueSet basis = basis_values(o);
  for (int v : values) {
    if (std::find(basis.begin(), basis.end(), v) == basis.end()) {
      throw DomainError(std::to_string(v) + " is not a basis value of A(O) for [" +
                        o.partition.to_string() + "] in " + o.type.name());
    }
  }
  if (needs_even_cardinality(o.type.family) && values.size() % 2 != 0) {
    throw DomainError("types B and D need an even number of basis values");
  }
  Partition nu(values);
  Partition eta = remove_parts(o.partition, nu);
  return ClassPair{o.type, std::move(nu), std::move(eta)};
}

/// All classes of A(O), trivial class first, then by nu in lexicographic order.
inline std::vector<ClassPair> enumerate_classes(const Orbit& o) {
  require_classical(o.type);
  const ValueSet basis = basis_values(o);
  const bool even_only = needs_even_cardinality(o.type.family);
  std::vector<ClassPair> out;
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    ValueSet values;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (mask & (std::uint64_t{1} << b)) values.push_back(basis[b]);
    }
    if (even_only && values.size() % 2 != 0) continue;
    out.push_back(class_of_element(o, std::move(values)));
  }
  std::sort(out.begin(), out.end(),
            [](const ClassPair& a, const ClassPair& b) { return a.nu < b.nu; });
  return out;
}

// ---------------------------------------------------------------------------

/// Statistics of a class. S_odd is j_l > ... > j_1 (type C pads j_1 = 0 to
/// make l even). Interval m covers values between j_m and j_{m+1}, for
/// m = 0..l, with j_0 = 0 and j_{l+1} = +infinity.
struct ClassStats {
  std::vector<int> s_odd;   ///< j_l, ..., j_1 (decreasing)
  std::vector<int> s_even;  ///< decreasing
  std::vector<int> t1;      ///< parts of nu in S_odd
  std::vector<int> t2;      ///< parts of nu in S_even
  std::vector<int> t;       ///< t[m] = |T2^(m)|, m = 0..l
  bool padded = false;      ///< type C with j_1 = 0 added

  int l() const { return static_cast<int>(s_odd.size()); }

  /// j_m for 0 <= m <= l+1 (j_0 = 0, j_{l+1} = INT_MAX).
  int j(int m) const {
    if (m <= 0) return 0;
    if (m > l()) return INT_MAX;
    return s_odd[static_cast<std::size_t>(l() - m)];
  }

  /// delta_m, zero outside 1..l and for the padding value.
  int delta(int m) const {
    if (m < 1 || m > l()) return 0;
    const int v = j(m);
    return v != 0 && std::find(t1.begin(), t1.end(), v) != t1.end() ? 1 : 0;
  }

  /// Index m of the interval holding a value of S_even.
  int interval_of(int value) const {
    int m = 0;
    while (m < l() && value > j(m + 1)) ++m;
    return m;
  }
};

inline ClassStats class_stats(const ClassPair& p) {
  validate_pair(p);
  ClassStats s;
  if (p.type.family == Family::A) {
    s.t.assign(1, 0);
    return s;
  }
  const Partition lambda = p.lambda();
  const int par = detail::generator_parity(p.type.family);
  for (int v : lambda.distinct_values()) {
    if (v % 2 != par) continue;
    (lambda.multiplicity(v) % 2 == 1 ? s.s_odd : s.s_even).push_back(v);
  }
  if (p.type.family == Family::C && s.s_odd.size() % 2 == 1) {
    s.s_odd.push_back(0);
    s.padded = true;
  }
  for (int v : p.nu.parts()) {
    const bool odd = std::find(s.s_odd.begin(), s.s_odd.end(), v) != s.s_odd.end();
    (odd ? s.t1 : s.t2).push_back(v);
  }
  s.t.assign(static_cast<std::size_t>(s.l() + 1), 0);
  for (int v : s.t2) ++s.t[static_cast<std::size_t>(s.interval_of(v))];
  return s;
}

}  // namespace orbitduality
