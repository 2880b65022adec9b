#pragma once

// Partition arithmetic: validation, conjugation, dominance order, the
// B/C/D partition classes, collapses and the B <-> C transfer maps.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitduality/errors.hpp"

namespace orbitduality {

/// A weakly decreasing list of positive integers. Zero parts are never
/// stored; the empty partition is valid and has size 0.
class Partition {
 public:
  Partition() = default;

  /// Throws DomainError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) {
        throw DomainError("partition parts must be positive");
      }
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw DomainError("partition parts must be weakly decreasing");
      }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Sorts `parts` decreasingly and drops zeros. Negative parts are rejected.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  /// Parses the canonical text form `5,3,1`. The empty string is the empty
  /// partition. Parts may be given in any order.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    if (text.empty()) return Partition();
    while (true) {
      const auto comma = text.find(',');
      const auto token = trim(text.substr(0, comma));
      int value = 0;
      const auto* end = token.data() + token.size();
      const auto [ptr, ec] = std::from_chars(token.data(), end, value);
      if (token.empty() || ec != std::errc() || ptr != end || value <= 0) {
        throw ParseError("invalid partition part '" + std::string(token) +
                         "' (expected comma-separated positive integers)");
      }
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return from_unsorted(std::move(parts));
  }

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// 0-based access; positions past the end read as zero.
  int at_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int operator[](std::size_t i) const { return parts_[i]; }

  int multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
  }

  /// Distinct part values, decreasing.
  std::vector<int> distinct_values() const {
    std::vector<int> out;
    for (int p : parts_) {
      if (out.empty() || out.back() != p) out.push_back(p);
    }
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Conjugate partition: column lengths of the Young diagram.
inline Partition dual(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
  for (int p : lambda.parts()) {
    for (int i = 0; i < p; ++i) ++cols[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(cols));
}

/// Dominance order mu <= lambda: every prefix sum of mu is at most the
/// corresponding prefix sum of lambda. Both must have the same size.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) {
    throw DomainError("dominance comparison requires partitions of equal size (" +
                      std::to_string(mu.size()) + " vs " +
                      std::to_string(lambda.size()) + ")");
  }
  const std::size_t n = std::max(mu.length(), lambda.length());
  int a = 0;
  int b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    a += mu.at_or_zero(i);
    b += lambda.at_or_zero(i);
    if (a > b) return false;
  }
  return true;
}

/// Multiset union of parts.
inline Partition union_of(const Partition& nu, const Partition& eta) {
  std::vector<int> parts;
  parts.reserve(nu.length() + eta.length());
  std::merge(nu.parts().begin(), nu.parts().end(), eta.parts().begin(),
             eta.parts().end(), std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

/// Removes one copy of each part of `nu` from `lambda`.
inline Partition remove_parts(const Partition& lambda, const Partition& nu) {
  std::vector<int> parts = lambda.vec();
  for (int v : nu.parts()) {
    auto it = std::find(parts.begin(), parts.end(), v);
    if (it == parts.end()) {
      throw DomainError("part " + std::to_string(v) + " does not occur in " +
                        lambda.to_string());
    }
    parts.erase(it);
  }
  return Partition(std::move(parts));
}

/// All partitions of m in reverse lexicographic order ([m] first, [1^m] last).
inline std::vector<Partition> all_partitions(int m) {
  std::vector<Partition> out;
  if (m < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

// ---------------------------------------------------------------------------
// Partition classes

enum class PartitionClass { B, C, D };

inline char to_char(PartitionClass cls) {
  switch (cls) {
    case PartitionClass::B: return 'B';
    case PartitionClass::C: return 'C';
    case PartitionClass::D: return 'D';
  }
  return '?';
}

/// Parity (0 or 1) of the part values that must occur with even multiplicity:
/// odd values for C, even values for B and D.
inline int restricted_parity(PartitionClass cls) {
  return cls == PartitionClass::C ? 1 : 0;
}

inline bool size_parity_ok(int m, PartitionClass cls) {
  return cls == PartitionClass::B ? (m % 2 == 1) : (m % 2 == 0);
}

inline bool member(const Partition& lambda, PartitionClass cls) {
  if (!size_parity_ok(lambda.size(), cls)) return false;
  const int eps = restricted_parity(cls);
  const auto& p = lambda.vec();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (p[i] % 2 == eps && (j - i) % 2 == 1) return false;
    i = j;
  }
  return true;
}

/// Member of the class with every multiplicity at most one.
inline bool is_distinguished(const Partition& nu, PartitionClass cls) {
  const auto& p = nu.vec();
  if (std::adjacent_find(p.begin(), p.end()) != p.end()) return false;
  return member(nu, cls);
}

/// The X-collapse: the dominance-largest member of class X lying below lambda.
///
/// Repeatedly takes the largest restricted-parity value q of odd multiplicity,
/// lowers its last occurrence to q-1 and raises the first later part that is
/// smaller than q-1 (a zero part if needed). Each step is one elementary
/// collapsing move, so the result stays below lambda.
inline Partition collapse(const Partition& lambda, PartitionClass cls) {
  if (!size_parity_ok(lambda.size(), cls)) {
    throw DomainError(std::string(1, to_char(cls)) + "-collapse requires " +
                      (cls == PartitionClass::B ? "odd" : "even") +
                      " size, got " + std::to_string(lambda.size()));
  }
  const int eps = restricted_parity(cls);
  std::vector<int> p = lambda.vec();
  while (true) {
    int q = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < p.size();) {
      std::size_t j = i;
      while (j < p.size() && p[j] == p[i]) ++j;
      if (p[i] > 0 && p[i] % 2 == eps && (j - i) % 2 == 1) {
        q = p[i];
        last = j - 1;
        break;
      }
      i = j;
    }
    if (q == 0) break;
    p[last] = q - 1;
    std::size_t k = last + 1;
    while (k < p.size() && p[k] >= q - 1) ++k;
    if (k == p.size()) p.push_back(0);
    p[k] += 1;
  }
  std::erase(p, 0);
  return Partition(std::move(p));
}

/// lambda^- : the last part lowered by one (dropped if it reaches zero).
inline Partition lower_last(const Partition& lambda) {
  std::vector<int> p = lambda.vec();
  if (p.empty()) throw DomainError("cannot lower the last part of the empty partition");
  if (--p.back() == 0) p.pop_back();
  return Partition(std::move(p));
}

/// lambda^+ : the first part raised by one; the empty partition becomes [1].
inline Partition raise_first(const Partition& lambda) {
  std::vector<int> p = lambda.vec();
  if (p.empty()) return Partition{1};
  ++p.front();
  return Partition(std::move(p));
}

/// lambda_+ : a part equal to one appended.
inline Partition append_one(const Partition& lambda) {
  std::vector<int> p = lambda.vec();
  p.push_back(1);
  return Partition(std::move(p));
}

/// lambda^C = (lambda^-)_C for lambda in P_B(2n+1); lands in the special
/// partitions of P_C(2n).
inline Partition transfer_bc(const Partition& lambda) {
  if (!member(lambda, PartitionClass::B)) {
    throw DomainError("B-to-C transfer requires a partition in P_B, got [" +
                      lambda.to_string() + "]");
  }
  return collapse(lower_last(lambda), PartitionClass::C);
}

/// lambda^B = (lambda^+)_B for lambda in P_C(2n); lands in the special
/// partitions of P_B(2n+1).
inline Partition transfer_cb(const Partition& lambda) {
  if (!member(lambda, PartitionClass::C)) {
    throw DomainError("C-to-B transfer requires a partition in P_C, got [" +
                      lambda.to_string() + "]");
  }
  return collapse(raise_first(lambda), PartitionClass::B);
}

}  // namespace orbitduality
