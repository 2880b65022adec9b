#pragma once

// Exceptional-group data: b~ of the distinguished orbits, and the duality
// tables for orbits whose component group is non-trivial. The tables are
// compiled in from data/*.txt; ORBITDUALITY_DATA may point at a replacement
// duality file.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "orbitduality/embedded_data.hpp"
#include "orbitduality/errors.hpp"
#include "orbitduality/orbits.hpp"
#include "orbitduality/partitions.hpp"

namespace orbitduality {

struct ExceptionalRow {
  std::string group;  ///< G2, F4, E6, E7 or E8
  std::string orbit;
  std::optional<std::vector<int>> weights;
  std::string class_label;
  int btilde = 0;
  std::string quotient_name;  ///< "1", "S2", ..., "S5"
  std::string dual;
  bool starred = false;
};

struct DistinguishedBtilde {
  std::string group;
  std::string orbit;
  std::optional<std::vector<int>> weights;
  int btilde = 0;
};

inline const std::vector<std::string>& exceptional_groups() {
  static const std::vector<std::string> groups{"G2", "F4", "E6", "E7", "E8"};
  return groups;
}

/// Bala-Carter labels of all nilpotent orbits, ASCII spelling.
inline const std::vector<std::string>& exceptional_orbit_names(std::string_view group) {
  static const std::map<std::string, std::vector<std::string>, std::less<>> names{
      {"G2", {"0", "A1", "~A1", "G2(a1)", "G2"}},
      {"F4",
       {"0", "A1", "~A1", "A1+~A1", "A2", "~A2", "A2+~A1", "B2", "~A2+A1", "C3(a1)", "F4(a3)",
        "B3", "C3", "F4(a2)", "F4(a1)", "F4"}},
      {"E6",
       {"0", "A1", "2A1", "3A1", "A2", "A2+A1", "2A2", "A2+2A1", "A3", "2A2+A1", "A3+A1",
        "D4(a1)", "A4", "D4", "A4+A1", "A5", "D5(a1)", "E6(a3)", "D5", "E6(a1)", "E6"}},
      {"E7",
       {"0",         "A1",        "2A1",        "(3A1)''",   "(3A1)'",     "A2",
        "4A1",       "A2+A1",     "A2+2A1",     "A3",        "2A2",        "A2+3A1",
        "(A3+A1)''", "2A2+A1",    "(A3+A1)'",   "D4(a1)",    "A3+2A1",     "D4",
        "D4(a1)+A1", "A3+A2",     "A4",         "A3+A2+A1",  "(A5)''",     "D4+A1",
        "A4+A1",     "D5(a1)",    "A4+A2",      "(A5)'",     "A5+A1",      "D5(a1)+A1",
        "D6(a2)",    "E6(a3)",    "D5",         "E7(a5)",    "A6",         "D5+A1",
        "D6(a1)",    "E7(a4)",    "D6",         "E6(a1)",    "E6",         "E7(a3)",
        "E7(a2)",    "E7(a1)",    "E7"}},
      {"E8",
       {"0",          "A1",        "2A1",       "3A1",        "A2",         "4A1",
        "A2+A1",      "A2+2A1",    "A3",        "A2+3A1",     "2A2",        "2A2+A1",
        "A3+A1",      "D4(a1)",    "D4",        "2A2+2A1",    "A3+2A1",     "D4(a1)+A1",
        "A3+A2",      "A4",        "A3+A2+A1",  "D4+A1",      "D4(a1)+A2",  "A4+A1",
        "2A3",        "D5(a1)",    "A4+2A1",    "A4+A2",      "A5",         "D5(a1)+A1",
        "A4+A2+A1",   "D4+A2",     "E6(a3)",    "D5",         "A4+A3",      "A5+A1",
        "D5(a1)+A2",  "D6(a2)",    "E6(a3)+A1", "E7(a5)",     "D5+A1",      "E8(a7)",
        "A6",         "D6(a1)",    "A6+A1",     "E7(a4)",     "E6(a1)",     "D5+A2",
        "D6",         "E6",        "D7(a2)",    "A7",         "E6(a1)+A1",  "E7(a3)",
        "E8(b6)",     "D7(a1)",    "E6+A1",     "E7(a2)",     "E8(a6)",     "D7",
        "E8(b5)",     "E7(a1)",    "E8(a5)",    "E8(b4)",     "E7",         "E8(a4)",
        "E8(a3)",     "E8(a2)",    "E8(a1)",    "E8"}},
  };
  const auto it = names.find(group);
  if (it == names.end()) throw DomainError("unknown exceptional group '" + std::string(group) + "'");
  return it->second;
}

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

/// Summands of a label at parenthesis depth 0, e.g. "(A3+A1)'+A1" -> two.
inline std::vector<std::string> top_level_summands(std::string_view label) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : label) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::optional<std::vector<int>> parse_weights(const std::string& field, int line_no) {
  if (field == "-" || field.empty()) return std::nullopt;
  std::vector<int> w;
  std::istringstream in(field);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) + ": bad weight '" + tok + "'");
    }
  }
  return w;
}

inline int parse_int_field(const std::string& field, int line_no) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(field, &used);
    if (used == field.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + field + "'");
}

template <class F>
void for_each_record(std::string_view text, std::size_t fields, F&& f) {
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    auto cols = split(line, '|');
    if (cols.size() != fields) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(fields) + " fields, got " + std::to_string(cols.size()));
    }
    f(cols, line_no);
  }
}

}  // namespace detail

/// Order-insensitive form of a label: top-level summands sorted.
inline std::string canonical_label(std::string_view label) {
  auto parts = detail::top_level_summands(label);
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '+';
    out += p;
  }
  return out;
}

inline bool same_label(std::string_view a, std::string_view b) {
  return canonical_label(a) == canonical_label(b);
}

inline bool is_exceptional_orbit_name(std::string_view group, std::string_view name) {
  const auto& names = exceptional_orbit_names(group);
  return std::any_of(names.begin(), names.end(),
                     [&](const std::string& n) { return same_label(n, name); });
}

inline std::vector<ExceptionalRow> parse_duality_table(std::string_view text) {
  std::vector<ExceptionalRow> rows;
  detail::for_each_record(text, 8, [&](const std::vector<std::string>& c, int line_no) {
    ExceptionalRow r;
    r.group = c[0];
    exceptional_orbit_names(r.group);  // throws on an unknown group
    r.orbit = c[1];
    r.weights = detail::parse_weights(c[2], line_no);
    r.class_label = c[3];
    r.btilde = detail::parse_int_field(c[4], line_no);
    r.quotient_name = c[5];
    static const std::vector<std::string> quotients{"1", "S2", "S3", "S4", "S5"};
    if (std::find(quotients.begin(), quotients.end(), r.quotient_name) == quotients.end()) {
      throw ParseError("line " + std::to_string(line_no) + ": bad quotient '" + c[5] + "'");
    }
    r.dual = c[6];
    if (c[7] != "" && c[7] != "*") {
      throw ParseError("line " + std::to_string(line_no) + ": star field must be empty or *");
    }
    r.starred = c[7] == "*";
    rows.push_back(std::move(r));
  });
  return rows;
}

inline std::vector<DistinguishedBtilde> parse_distinguished_table(std::string_view text) {
  std::vector<DistinguishedBtilde> rows;
  detail::for_each_record(text, 4, [&](const std::vector<std::string>& c, int line_no) {
    rows.push_back({c[0], c[1], detail::parse_weights(c[2], line_no),
                    detail::parse_int_field(c[3], line_no)});
  });
  return rows;
}

/// Text of the duality table: $ORBITDUALITY_DATA if set, else the built-in copy.
inline std::string duality_table_text() {
  if (const char* path = std::getenv("ORBITDUALITY_DATA"); path && *path) {
    std::ifstream in(path);
    if (!in) throw DomainError(std::string("cannot read ORBITDUALITY_DATA file ") + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return std::string(embedded::exceptional_duality);
}

inline const std::vector<ExceptionalRow>& exceptional_rows() {
  static const std::vector<ExceptionalRow> rows = parse_duality_table(duality_table_text());
  return rows;
}

inline const std::vector<DistinguishedBtilde>& distinguished_btilde_table() {
  static const std::vector<DistinguishedBtilde> rows =
      parse_distinguished_table(embedded::distinguished_btilde);
  return rows;
}

/// Orbit names of `group` that head a block of the duality table, in order.
inline std::vector<std::string> exceptional_table_orbits(std::string_view group) {
  std::vector<std::string> out;
  for (const auto& r : exceptional_rows()) {
    if (r.group == group && (out.empty() || out.back() != r.orbit)) out.push_back(r.orbit);
  }
  return out;
}

/// All rows of an orbit's block, trivial class first. Unknown names and
/// orbits left out because A(O) is trivial raise different errors.
inline std::vector<ExceptionalRow> lookup_orbit(std::string_view group, std::string_view orbit) {
  if (!is_exceptional_orbit_name(group, orbit)) {
    throw DomainError("'" + std::string(orbit) + "' is not an orbit of " + std::string(group));
  }
  std::vector<ExceptionalRow> out;
  for (const auto& r : exceptional_rows()) {
    if (r.group == group && same_label(r.orbit, orbit)) out.push_back(r);
  }
  if (out.empty()) {
    throw DomainError(std::string(group) + " orbit " + std::string(orbit) +
                      " is not tabulated: its component group A(O) is trivial");
  }
  std::stable_partition(out.begin(), out.end(), [](const ExceptionalRow& r) {
    return same_label(r.class_label, r.orbit);
  });
  return out;
}

inline int lookup_distinguished_btilde(std::string_view group, std::string_view orbit) {
  if (!is_exceptional_orbit_name(group, orbit)) {
    throw DomainError("'" + std::string(orbit) + "' is not an orbit of " + std::string(group));
  }
  for (const auto& d : distinguished_btilde_table()) {
    if (d.group == group && same_label(d.orbit, orbit)) return d.btilde;
  }
  throw DomainError(std::string(group) + " orbit " + std::string(orbit) + " is not distinguished");
}

// ---------------------------------------------------------------------------
// Cross-check of tabulated b~ against the classical formulas applied to the
// simple factors of the class label.

struct LabelFactor {
  int count = 1;
  bool short_roots = false;  ///< ~ prefix
  std::string family;        ///< A, B, C, D, E, F or G
  int rank = 0;
  std::string suffix;  ///< "", "a1", "b4", ...

  std::string name() const {
    std::string s = (short_roots ? "~" : "") + family + std::to_string(rank);
    if (!suffix.empty()) s += "(" + suffix + ")";
    return s;
  }
};

/// Splits a label such as "(A3+2A1)''" or "A1+D6(a2)" into simple factors.
inline std::vector<LabelFactor> parse_label_factors(std::string_view label) {
  std::string s(label);
  while (!s.empty() && s.back() == '\'') s.pop_back();
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  static const std::regex factor_re(R"(^(\d*)(~?)([A-G])(\d+)(?:\(([ab]\d+)\))?$)");
  std::vector<LabelFactor> out;
  for (const auto& part : detail::top_level_summands(s)) {
    std::smatch m;
    if (!std::regex_match(part, m, factor_re)) {
      throw ParseError("cannot read label factor '" + part + "' in '" + std::string(label) + "'");
    }
    LabelFactor f;
    f.count = m[1].length() ? std::stoi(m[1]) : 1;
    f.short_roots = m[2].length() > 0;
    f.family = m[3];
    f.rank = std::stoi(m[4]);
    f.suffix = m[5];
    out.push_back(std::move(f));
  }
  return out;
}

/// Partitions of the non-regular classical factors that occur in class labels.
inline const std::map<std::string, Partition>& classical_factor_dictionary() {
  static const std::map<std::string, Partition> dict{
      {"B4(a2)", Partition{5, 3, 1}}, {"C3(a1)", Partition{4, 2}},
      {"D4(a1)", Partition{5, 3}},    {"D5(a1)", Partition{7, 3}},
      {"D6(a1)", Partition{9, 3}},    {"D6(a2)", Partition{7, 5}},
      {"D7(a1)", Partition{11, 3}},   {"D7(a2)", Partition{9, 5}},
      {"D8(a1)", Partition{13, 3}},   {"D8(a2)", Partition{11, 5}},
      {"D8(a3)", Partition{9, 7}},    {"D8(a5)", Partition{7, 5, 3, 1}},
  };
  return dict;
}

/// Family and partition of a classical factor, or nullopt for E/F/G.
inline std::optional<std::pair<Family, Partition>> classical_factor_partition(const LabelFactor& f) {
  const std::string key = f.family + std::to_string(f.rank) +
                          (f.suffix.empty() ? "" : "(" + f.suffix + ")");
  const int r = f.rank;
  if (f.family == "A" && f.suffix.empty()) return std::pair{Family::A, Partition{r + 1}};
  Family fam;
  if (f.family == "B") fam = Family::B;
  else if (f.family == "C") fam = Family::C;
  else if (f.family == "D") fam = Family::D;
  else return std::nullopt;
  if (!f.suffix.empty()) {
    const auto& dict = classical_factor_dictionary();
    const auto it = dict.find(key);
    if (it == dict.end()) throw DomainError("no partition known for factor " + key);
    return std::pair{fam, it->second};
  }
  switch (fam) {
    case Family::B: return std::pair{fam, Partition{2 * r + 1}};
    case Family::C: return std::pair{fam, Partition{2 * r}};
    default: return std::pair{fam, Partition{2 * r - 1, 1}};
  }
}

struct FactorCheck {
  ExceptionalRow row;
  std::vector<std::pair<std::string, int>> factors;  ///< factor name, b~ per copy
  int computed = 0;
  bool classical_only = true;
  bool match = false;
};

struct CrosscheckReport {
  std::vector<FactorCheck> rows;

  int classical_rows() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                          [](const FactorCheck& c) { return c.classical_only; }));
  }
  std::vector<FactorCheck> mismatches() const {
    std::vector<FactorCheck> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
                 [](const FactorCheck& c) { return !c.match; });
    return out;
  }
};

/// Every row is scored as the sum over label factors: classical factors by
/// the closed formula, exceptional factors by the distinguished table.
inline CrosscheckReport crosscheck_classical_factors() {
  CrosscheckReport report;
  for (const auto& row : exceptional_rows()) {
    FactorCheck c{row, {}, 0, true, false};
    for (const auto& f : parse_label_factors(row.class_label)) {
      int b = 0;
      if (auto cp = classical_factor_partition(f)) {
        b = btilde_formula(cp->first, cp->second);
      } else {
        c.classical_only = false;
        const std::string base = f.family + std::to_string(f.rank);
        b = lookup_distinguished_btilde(base, f.name());
      }
      c.factors.emplace_back((f.count > 1 ? std::to_string(f.count) : "") + f.name(), b);
      c.computed += f.count * b;
    }
    c.match = c.computed == row.btilde;
    report.rows.push_back(std::move(c));
  }
  return report;
}

}  // namespace orbitduality
