#pragma once

// Named cross-checks between the library, the brute-force oracles and the
// identities the constructions must satisfy. Each check sweeps the classical
// types up to a rank bound and reports the first counterexample it meets.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbitduality/compgroups.hpp"
#include "orbitduality/duality.hpp"
#include "orbitduality/exceptional.hpp"
#include "orbitduality/oracle.hpp"
#include "orbitduality/orbits.hpp"
#include "orbitduality/quotient.hpp"

namespace orbitduality::oracle {

struct CheckResult {
  std::string check;
  std::string scope;
  bool passed = true;
  long cases = 0;
  std::optional<std::string> counterexample;
};

/// Classical types of rank 1..max_rank (D from rank 2), in the order A, B, C, D.
inline std::vector<LieType> classical_types(int max_rank) {
  std::vector<LieType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = f == Family::D ? 2 : 1; n <= max_rank; ++n) out.push_back(LieType::make(f, n));
  }
  return out;
}

namespace detail {

inline std::string scope_of(int max_rank) {
  return max_rank < 1 ? "empty" : "rank<=" + std::to_string(max_rank);
}

struct Sweep {
  CheckResult result;

  Sweep(std::string check, std::string scope) {
    result.check = std::move(check);
    result.scope = std::move(scope);
  }
  void fail(const std::string& what) {
    if (result.passed) result.counterexample = what;
    result.passed = false;
  }
  void expect(bool ok, const std::function<std::string()>& what) {
    ++result.cases;
    if (!ok) fail(what());
  }
};

inline std::string at(const Orbit& o) { return o.type.name() + " [" + o.partition.to_string() + "]"; }
inline std::string at(const ClassPair& p) { return p.type.name() + " (" + p.to_string() + ")"; }

}  // namespace detail

inline CheckResult check_collapse(int max_size) {
  detail::Sweep s{"collapse_matches_oracle", "size<=" + std::to_string(max_size)};
  for (int m = 0; m <= max_size; ++m) {
    for (const auto& lambda : all_partitions(m)) {
      for (auto cls : {PartitionClass::B, PartitionClass::C, PartitionClass::D}) {
        if (!size_parity_ok(m, cls)) continue;
        const Partition fast = collapse(lambda, cls);
        const Partition slow = brute_collapse(lambda, cls, std::max(max_size, kDefaultSizeBound));
        s.expect(fast == slow, [&] {
          return "[" + lambda.to_string() + "]_" + std::string(1, to_char(cls)) + ": collapse [" +
                 fast.to_string() + "] vs oracle [" + slow.to_string() + "]";
        });
      }
    }
  }
  return s.result;
}

inline CheckResult check_classes(int max_rank) {
  detail::Sweep s{"classes_match_oracle", detail::scope_of(max_rank)};
  for (auto t : classical_types(max_rank)) {
    for (const auto& o : enumerate_orbits(t)) {
      const auto fast = enumerate_classes(o);
      const auto slow = brute_classes(t, o.partition, std::max(max_rank, 10));
      s.expect(fast == slow, [&] {
        return detail::at(o) + ": " + std::to_string(fast.size()) + " classes vs oracle " +
               std::to_string(slow.size());
      });
    }
  }
  return s.result;
}

inline CheckResult check_btilde_definitional(int max_rank) {
  detail::Sweep s{"btilde_formula_matches_definition", detail::scope_of(max_rank)};
  for (auto t : classical_types(max_rank)) {
    for (const auto& o : enumerate_orbits(t)) {
      const int a = btilde_trivial(o);
      const int b = btilde_definitional(o);
      s.expect(a == b, [&] {
        return detail::at(o) + ": formula " + std::to_string(a) + " vs definition " +
               std::to_string(b);
      });
    }
  }
  return s.result;
}

/// d(d(O)) = O on special orbits, and O1 <= O2 implies d(O2) <= d(O1).
inline CheckResult check_duality_involution(int max_rank) {
  detail::Sweep s{"duality_involution_order_reversing", detail::scope_of(max_rank)};
  for (auto t : classical_types(max_rank)) {
    const auto orbits = enumerate_orbits(t);
    for (const auto& o : orbits) {
      const Orbit d = ls_dual(o);
      s.expect(is_special(d), [&] { return detail::at(o) + ": dual is not special"; });
      if (is_special(o)) {
        s.expect(ls_dual(d).partition == o.partition,
                 [&] { return detail::at(o) + ": d(d(O)) = [" + ls_dual(d).partition.to_string() + "]"; });
      }
    }
    for (const auto& a : orbits) {
      for (const auto& b : orbits) {
        if (!dominance_leq(a.partition, b.partition)) continue;
        s.expect(dominance_leq(ls_dual(b).partition, ls_dual(a).partition), [&] {
          return t.name() + " [" + a.partition.to_string() + "] <= [" + b.partition.to_string() +
                 "] but the duals are not reversed";
        });
      }
    }
  }
  return s.result;
}

inline CheckResult check_kernel_agreement(int max_rank) {
  detail::Sweep s{"kernel_criteria_agree", detail::scope_of(max_rank)};
  for (auto t : classical_types(max_rank)) {
    for (const auto& o : enumerate_orbits(t)) {
      for (const auto& c : enumerate_classes(o)) {
        const bool a = in_kernel_btilde(c);
        const bool b = in_kernel_combinatorial(c);
        s.expect(a == b, [&] {
          return detail::at(c) + ": b~ criterion " + (a ? "in" : "out") + ", combinatorial " +
                 (b ? "in" : "out");
        });
      }
    }
  }
  return s.result;
}

/// b~ is constant on cosets of H, |K| = |A(O)|/|H|, K meets H trivially, and
/// K maps onto the cosets.
inline CheckResult check_coset_constancy(int max_rank) {
  detail::Sweep s{"quotient_cosets_and_transversal", detail::scope_of(max_rank)};
  for (auto t : classical_types(max_rank)) {
    for (const auto& o : enumerate_orbits(t)) {
      const auto q = canonical_quotient(o);
      std::map<ValueSet, int> btilde_of_coset;
      for (const auto& c : q.classes) {
        const int b = btilde_pair(c);
        const auto [it, fresh] = btilde_of_coset.emplace(q.coset_of(c), b);
        s.expect(fresh || it->second == b, [&] { return detail::at(c) + ": b~ differs in its coset"; });
      }
      s.expect(static_cast<int>(q.k_elements.size()) == q.order, [&] {
        return detail::at(o) + ": |K| = " + std::to_string(q.k_elements.size()) + ", |A/H| = " +
               std::to_string(q.order);
      });
      std::set<ValueSet> kernel_values;
      for (const auto& h : q.kernel) kernel_values.insert(h.values());
      std::set<ValueSet> hit;
      for (const auto& k : q.k_elements) {
        s.expect(k.empty() || !kernel_values.count(k),
                 [&] { return detail::at(o) + ": K meets H in a non-trivial element"; });
        hit.insert(q.coset_of(class_of_element(o, k)));
      }
      s.expect(static_cast<int>(hit.size()) == q.order,
               [&] { return detail::at(o) + ": K does not cover every coset"; });
    }
  }
  return s.result;
}

inline CheckResult check_btilde_inequality(int max_rank) {
  detail::Sweep s{"trivial_class_minimises_btilde", detail::scope_of(max_rank)};
  for (auto t : classical_types(max_rank)) {
    for (const auto& o : enumerate_orbits(t)) {
      const int base = btilde_trivial(o);
      for (const auto& c : enumerate_classes(o)) {
        s.expect(base <= btilde_pair(c), [&] {
          return detail::at(c) + ": b~ " + std::to_string(btilde_pair(c)) + " < trivial " +
                 std::to_string(base);
        });
      }
    }
  }
  return s.result;
}

/// Every dual orbit is hit by some pair, and canonical_preimage is a
/// section of gdual landing on special orbits.
inline CheckResult check_surjectivity(int max_rank) {
  detail::Sweep s{"gdual_surjective_with_section", detail::scope_of(max_rank)};
  for (auto t : classical_types(max_rank)) {
    std::set<Partition> image;
    for (const auto& o : enumerate_orbits(t)) {
      for (const auto& c : enumerate_classes(o)) image.insert(gdual(c).partition);
    }
    for (const auto& target : enumerate_orbits(langlands_dual(t))) {
      s.expect(image.count(target.partition) > 0,
               [&] { return detail::at(target) + ": not in the image of gdual"; });
      const ClassPair p = canonical_preimage(target);
      s.expect(gdual(p).partition == target.partition, [&] {
        return detail::at(target) + ": canonical preimage " + detail::at(p) + " maps to [" +
               gdual(p).partition.to_string() + "]";
      });
      s.expect(is_special(p.orbit()),
               [&] { return detail::at(target) + ": preimage orbit is not special"; });
    }
  }
  return s.result;
}

/// (dim Lg - dim gdual(p) - rank) / 2 = b~(p).
inline CheckResult check_springer_law(int max_rank) {
  detail::Sweep s{"springer_fiber_dimension", detail::scope_of(max_rank)};
  for (auto t : classical_types(max_rank)) {
    for (const auto& o : enumerate_orbits(t)) {
      for (const auto& c : enumerate_classes(o)) {
        const Orbit g = gdual(c);
        const int lhs = lie_algebra_dim(g.type) - orbit_dim(g) - t.rank;
        s.expect(lhs == 2 * btilde_pair(c), [&] {
          return detail::at(c) + ": 2 b~ = " + std::to_string(2 * btilde_pair(c)) +
                 ", codimension gives " + std::to_string(lhs);
        });
      }
    }
  }
  return s.result;
}

inline CheckResult check_factorization(int max_rank) {
  detail::Sweep s{"gdual_factors_through_quotient", detail::scope_of(max_rank)};
  for (auto t : classical_types(max_rank)) {
    for (const auto& o : enumerate_orbits(t)) {
      s.expect(verify_factorization(o),
               [&] { return detail::at(o) + ": gdual differs inside a coset"; });
    }
  }
  return s.result;
}

inline CheckResult check_exceptional_tables() {
  detail::Sweep s{"exceptional_tables", "G2,F4,E6,E7,E8"};
  for (const auto& d : distinguished_btilde_table()) {
    for (const auto& r : exceptional_rows()) {
      if (r.group != d.group || !same_label(r.orbit, d.orbit) || !same_label(r.class_label, r.orbit))
        continue;
      s.expect(r.btilde == d.btilde, [&] {
        return d.group + " " + d.orbit + ": trivial-class row " + std::to_string(r.btilde) +
               " vs distinguished table " + std::to_string(d.btilde);
      });
    }
  }
  for (const auto& c : crosscheck_classical_factors().rows) {
    s.expect(c.match, [&] {
      return c.row.group + " " + c.row.class_label + ": factors give " + std::to_string(c.computed) +
             ", table " + std::to_string(c.row.btilde);
    });
  }
  for (const auto& r : exceptional_rows()) {
    s.expect(is_exceptional_orbit_name(r.group, r.dual),
             [&] { return r.group + " dual '" + r.dual + "' is not an orbit name"; });
  }
  return s.result;
}

/// All checks, sorted by check name. Heavy sweeps stop at rank 6.
inline std::vector<CheckResult> consistency_suite(int max_rank) {
  const int r = std::max(max_rank, 0);
  const int heavy = std::min(r, 6);
  std::vector<CheckResult> out{
      check_collapse(std::min(2 * r, 14)),
      check_classes(r),
      check_btilde_definitional(r),
      check_duality_involution(heavy),
      check_kernel_agreement(heavy),
      check_coset_constancy(heavy),
      check_btilde_inequality(heavy),
      check_surjectivity(heavy),
      check_springer_law(heavy),
      check_factorization(heavy),
  };
  if (r > 0) out.push_back(check_exceptional_tables());
  std::sort(out.begin(), out.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.check < b.check; });
  return out;
}

}  // namespace orbitduality::oracle
