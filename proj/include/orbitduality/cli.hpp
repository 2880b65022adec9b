#pragma once

// Command-line front end. `dispatch` takes the argument list without the
// program name and writes to the given streams, so it can be driven from
// tests as well as from main().
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "orbitduality/compgroups.hpp"
#include "orbitduality/duality.hpp"
#include "orbitduality/errors.hpp"
#include "orbitduality/exceptional.hpp"
#include "orbitduality/orbits.hpp"
#include "orbitduality/partitions.hpp"
#include "orbitduality/quotient.hpp"
#include "orbitduality/verify.hpp"

namespace orbitduality::cli {

using nlohmann::json;

inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json to_json(const Partition& p) { return json(p.vec()); }

inline json to_json(const ClassPair& p) {
  return json{{"nu", to_json(p.nu)}, {"eta", to_json(p.eta)}};
}

inline json to_json(const ExceptionalRow& r) {
  json j{{"group", r.group},   {"orbit", r.orbit},         {"class_label", r.class_label},
         {"btilde", r.btilde}, {"quotient", r.quotient_name}, {"dual", r.dual},
         {"starred", r.starred}};
  j["weights"] = r.weights ? json(*r.weights) : json(nullptr);
  return j;
}

inline std::string bracket(const Partition& p) { return "[" + p.to_string() + "]"; }

inline std::string pair_text(const ClassPair& p) {
  return "(" + (p.nu.empty() ? std::string("{}") : bracket(p.nu)) + ", " + bracket(p.eta) + ")";
}

/// Young diagram, one row per part, for partitions of at most 20 boxes.
inline void sketch(std::ostream& out, const Partition& p, const std::string& indent = "  ") {
  if (p.empty() || p.size() > 20) return;
  for (int v : p.parts()) out << indent << std::string(static_cast<std::size_t>(v), '#') << '\n';
}

/// Shared option values; each subcommand binds the ones it takes.
struct Args {
  std::string type;
  int rank = 0;
  std::string partition;
  std::string nu;
  std::string eta;
  std::string group;
  std::string orbit;
  int max_rank = 4;
  bool json = false;
  bool cross = false;
  bool distinguished = false;
  bool crosscheck = false;
};

inline LieType lie_type(const Args& a) { return LieType::parse(a.type, a.rank); }

inline Partition partition_arg(const std::string& text, const char* flag) {
  try {
    return Partition::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

inline Orbit orbit_arg(const Args& a) {
  return make_orbit(lie_type(a), partition_arg(a.partition, "--partition"));
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace detail

inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using detail::Args;
  Args a;
  CLI::App app{"Nilpotent orbits of classical Lie algebras: component groups, b~-values, "
               "canonical quotients and duality.\n"
               "Partitions are comma-separated parts, e.g. 5,3,1; pass an empty nu as --nu \"\".",
               "orbitduality"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  const std::vector<std::string> classical{"A", "B", "C", "D"};
  std::function<int()> action;

  auto add_type = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--type", a.type, "Lie type")->required()->check(CLI::IsMember(allowed));
  };
  auto add_rank = [&](CLI::App* sub) {
    sub->add_option("--rank", a.rank, "Rank n")->required()->check(CLI::PositiveNumber);
  };
  auto add_partition = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--partition", a.partition, "Partition, e.g. 5,3,1");
    if (required) opt->required();
    return opt;
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", a.json, "Emit JSON"); };

  // dual -------------------------------------------------------------------
  auto* dual_cmd = app.add_subcommand("dual", "Duality of an orbit (in-algebra, or --cross into the Langlands dual)");
  add_type(dual_cmd, classical);
  add_rank(dual_cmd);
  add_partition(dual_cmd);
  dual_cmd->add_flag("--cross", a.cross, "Map into the Langlands dual algebra");
  add_json(dual_cmd);
  dual_cmd->callback([&] {
    action = [&] {
      const Orbit o = detail::orbit_arg(a);
      const Orbit d = a.cross ? bv_dual(o) : ls_dual(o);
      if (a.json) {
        detail::emit(out, json{{"dual_type", to_string(d.type.family)},
                               {"rank", d.type.rank},
                               {"partition", detail::to_json(d.partition)}});
      } else {
        out << o.type.name() << ' ' << detail::bracket(o.partition) << " -> " << d.type.name()
            << ' ' << detail::bracket(d.partition) << (d.very_even ? " (very even)" : "") << '\n';
        detail::sketch(out, d.partition);
      }
      return kOk;
    };
  });

  // collapse ---------------------------------------------------------------
  auto* collapse_cmd = app.add_subcommand("collapse", "X-collapse of a partition (X = --type B, C or D)");
  add_type(collapse_cmd, {"B", "C", "D"});
  add_partition(collapse_cmd);
  add_json(collapse_cmd);
  collapse_cmd->callback([&] {
    action = [&] {
      const Partition p = detail::partition_arg(a.partition, "--partition");
      const PartitionClass cls = a.type == "B" ? PartitionClass::B
                                 : a.type == "C" ? PartitionClass::C
                                                 : PartitionClass::D;
      const Partition c = collapse(p, cls);
      if (a.json) {
        detail::emit(out, json{{"class", a.type}, {"partition", detail::to_json(c)}});
      } else {
        out << detail::bracket(p) << "_" << a.type << " = " << detail::bracket(c) << '\n';
        detail::sketch(out, c);
      }
      return kOk;
    };
  });

  // special ----------------------------------------------------------------
  auto* special_cmd = app.add_subcommand("special", "Whether an orbit is special");
  add_type(special_cmd, classical);
  add_rank(special_cmd);
  add_partition(special_cmd);
  add_json(special_cmd);
  special_cmd->callback([&] {
    action = [&] {
      const Orbit o = detail::orbit_arg(a);
      const bool s = is_special(o);
      if (a.json) {
        detail::emit(out, json{{"type", a.type},
                               {"rank", a.rank},
                               {"partition", detail::to_json(o.partition)},
                               {"special", s}});
      } else {
        out << o.type.name() << ' ' << detail::bracket(o.partition) << ": "
            << (s ? "special" : "not special") << '\n';
      }
      return kOk;
    };
  });

  // orbits -----------------------------------------------------------------
  auto* orbits_cmd = app.add_subcommand("orbits", "List the nilpotent orbits of a classical type");
  add_type(orbits_cmd, classical);
  add_rank(orbits_cmd);
  add_json(orbits_cmd);
  orbits_cmd->callback([&] {
    action = [&] {
      const LieType t = detail::lie_type(a);
      const auto orbits = enumerate_orbits(t);
      if (a.json) {
        json list = json::array();
        for (const auto& o : orbits) {
          list.push_back({{"partition", detail::to_json(o.partition)},
                          {"very_even", o.very_even},
                          {"special", is_special(o)},
                          {"dim", orbit_dim(o)},
                          {"btilde", btilde_trivial(o)}});
        }
        detail::emit(out, json{{"type", a.type}, {"rank", t.rank}, {"orbits", list}});
      } else {
        out << t.name() << ": " << orbits.size() << " partitions\n";
        for (const auto& o : orbits) {
          out << "  " << detail::bracket(o.partition) << "  dim " << orbit_dim(o) << "  b~ "
              << btilde_trivial(o) << (is_special(o) ? "  special" : "")
              << (o.very_even ? "  very even (two orbits)" : "") << '\n';
        }
      }
      return kOk;
    };
  });

  // classes ----------------------------------------------------------------
  auto* classes_cmd = app.add_subcommand("classes", "Conjugacy classes of A(O) as (nu, eta) pairs");
  add_type(classes_cmd, classical);
  add_rank(classes_cmd);
  add_partition(classes_cmd);
  add_json(classes_cmd);
  classes_cmd->callback([&] {
    action = [&] {
      const Orbit o = detail::orbit_arg(a);
      const auto classes = enumerate_classes(o);
      if (a.json) {
        json list = json::array();
        for (const auto& c : classes) list.push_back(detail::to_json(c));
        detail::emit(out, json{{"type", a.type},
                               {"rank", a.rank},
                               {"partition", detail::to_json(o.partition)},
                               {"classes", list}});
      } else {
        out << o.type.name() << ' ' << detail::bracket(o.partition) << ": " << classes.size()
            << " classes\n";
        for (const auto& c : classes) out << "  " << detail::pair_text(c) << '\n';
      }
      return kOk;
    };
  });

  // btilde -----------------------------------------------------------------
  auto* btilde_cmd = app.add_subcommand("btilde", "b~-value of an orbit (trivial class) or of a --nu/--eta pair");
  add_type(btilde_cmd, classical);
  add_rank(btilde_cmd);
  auto* bt_part = add_partition(btilde_cmd, false);
  auto* bt_nu = btilde_cmd->add_option("--nu", a.nu, "nu of the pair (may be empty)");
  auto* bt_eta = btilde_cmd->add_option("--eta", a.eta, "eta of the pair");
  bt_part->excludes(bt_nu)->excludes(bt_eta);
  bt_eta->needs(bt_nu);
  bt_nu->needs(bt_eta);
  add_json(btilde_cmd);
  btilde_cmd->callback([&] {
    action = [&] {
      const LieType t = detail::lie_type(a);
      json j{{"type", a.type}, {"rank", a.rank}};
      int b = 0;
      if (bt_eta->count()) {
        const ClassPair p = make_class_pair(t, detail::partition_arg(a.nu, "--nu"),
                                            detail::partition_arg(a.eta, "--eta"));
        b = btilde_pair(p);
        j["nu"] = detail::to_json(p.nu);
        j["eta"] = detail::to_json(p.eta);
        if (!a.json) out << t.name() << ' ' << detail::pair_text(p) << ": b~ = " << b << '\n';
      } else if (bt_part->count()) {
        const Orbit o = detail::orbit_arg(a);
        b = btilde_trivial(o);
        j["partition"] = detail::to_json(o.partition);
        if (!a.json) out << t.name() << ' ' << detail::bracket(o.partition) << ": b~ = " << b << '\n';
      } else {
        throw detail::UsageError("btilde needs --partition or --nu and --eta");
      }
      j["btilde"] = b;
      if (a.json) detail::emit(out, j);
      return kOk;
    };
  });

  // quotient ---------------------------------------------------------------
  auto* quotient_cmd = app.add_subcommand("quotient", "Canonical quotient A(O)/H with kernel and transversal K");
  add_type(quotient_cmd, classical);
  add_rank(quotient_cmd);
  add_partition(quotient_cmd);
  add_json(quotient_cmd);
  quotient_cmd->callback([&] {
    action = [&] {
      const Orbit o = detail::orbit_arg(a);
      const CanonicalQuotient q = canonical_quotient(o);
      if (a.json) {
        json classes = json::array();
        for (const auto& c : q.classes) {
          json e = detail::to_json(c);
          e["btilde"] = btilde_pair(c);
          e["coset"] = q.coset_of(c);
          classes.push_back(e);
        }
        json kernel = json::array();
        for (const auto& h : q.kernel) kernel.push_back(detail::to_json(h));
        detail::emit(out, json{{"type", a.type},
                               {"rank", a.rank},
                               {"partition", detail::to_json(o.partition)},
                               {"order", q.order},
                               {"component_group_order", q.classes.size()},
                               {"classes", classes},
                               {"kernel", kernel},
                               {"k_basis", q.k_basis},
                               {"k_generators", q.k_generators}});
      } else {
        out << o.type.name() << ' ' << detail::bracket(o.partition) << ": |A(O)| = "
            << q.classes.size() << ", |H| = " << q.kernel.size() << ", |A-bar(O)| = " << q.order
            << '\n';
        for (const auto& c : q.classes) {
          out << "  " << detail::pair_text(c) << "  b~ " << btilde_pair(c)
              << (in_kernel_btilde(c) ? "  in H" : "") << '\n';
        }
        out << "  K generators:";
        if (q.k_generators.empty()) out << " none";
        for (const auto& g : q.k_generators) out << ' ' << detail::bracket(Partition(g));
        out << '\n';
      }
      return kOk;
    };
  });

  // gdual ------------------------------------------------------------------
  auto* gdual_cmd = app.add_subcommand("gdual", "Dual orbit of an (orbit, class) pair");
  add_type(gdual_cmd, classical);
  add_rank(gdual_cmd);
  gdual_cmd->add_option("--nu", a.nu, "nu (empty string for the trivial class)")->required();
  gdual_cmd->add_option("--eta", a.eta, "eta")->required();
  add_json(gdual_cmd);
  gdual_cmd->callback([&] {
    action = [&] {
      const ClassPair p = make_class_pair(detail::lie_type(a), detail::partition_arg(a.nu, "--nu"),
                                          detail::partition_arg(a.eta, "--eta"));
      const Orbit d = gdual(p);
      if (a.json) {
        detail::emit(out, json{{"dual_type", to_string(d.type.family)},
                               {"rank", d.type.rank},
                               {"partition", detail::to_json(d.partition)}});
      } else {
        out << p.type.name() << ' ' << detail::pair_text(p) << " -> " << d.type.name() << ' '
            << detail::bracket(d.partition) << '\n';
        detail::sketch(out, d.partition);
      }
      return kOk;
    };
  });

  // preimage ---------------------------------------------------------------
  auto* preimage_cmd = app.add_subcommand("preimage", "Canonical pair mapping onto an orbit of the dual algebra");
  add_type(preimage_cmd, classical);
  add_rank(preimage_cmd);
  add_partition(preimage_cmd);
  add_json(preimage_cmd);
  preimage_cmd->callback([&] {
    action = [&] {
      const ClassPair p = canonical_preimage(detail::orbit_arg(a));
      if (a.json) {
        detail::emit(out, json{{"type", to_string(p.type.family)},
                               {"rank", p.type.rank},
                               {"nu", detail::to_json(p.nu)},
                               {"eta", detail::to_json(p.eta)}});
      } else {
        out << p.type.name() << ' ' << detail::pair_text(p) << '\n';
      }
      return kOk;
    };
  });

  // exceptional ------------------------------------------------------------
  auto* exc_cmd = app.add_subcommand("exceptional", "Look up or dump the exceptional-group tables");
  exc_cmd->add_option("--group", a.group, "G2, F4, E6, E7 or E8")
      ->check(CLI::IsMember(exceptional_groups()));
  exc_cmd->add_option("--orbit", a.orbit, "Bala-Carter label, e.g. \"G2(a1)\" or \"A1+~A1\"");
  exc_cmd->add_flag("--distinguished", a.distinguished, "b~ of distinguished orbits instead");
  exc_cmd->add_flag("--crosscheck", a.crosscheck, "Compare every row with its label factors");
  add_json(exc_cmd);
  exc_cmd->callback([&] {
    action = [&]() -> int {
      if (!a.orbit.empty() && a.group.empty()) throw detail::UsageError("--orbit needs --group");
      if (a.crosscheck) {
        const auto report = crosscheck_classical_factors();
        json rows = json::array();
        for (const auto& c : report.rows) {
          if (!a.group.empty() && c.row.group != a.group) continue;
          json factors = json::array();
          for (const auto& [name, b] : c.factors) factors.push_back({{"factor", name}, {"btilde", b}});
          rows.push_back({{"group", c.row.group},
                          {"class_label", c.row.class_label},
                          {"btilde", c.row.btilde},
                          {"computed", c.computed},
                          {"classical_only", c.classical_only},
                          {"match", c.match},
                          {"factors", factors}});
        }
        if (a.json) {
          detail::emit(out, json{{"rows", rows}, {"mismatches", report.mismatches().size()}});
        } else {
          for (const auto& r : rows) {
            out << r["group"].get<std::string>() << "  " << r["class_label"].get<std::string>()
                << "  table " << r["btilde"] << "  factors " << r["computed"]
                << (r["match"].get<bool>() ? "" : "  MISMATCH") << '\n';
          }
          out << report.mismatches().size() << " mismatches\n";
        }
        return report.mismatches().empty() ? kOk : kDomainError;
      }
      if (a.distinguished) {
        json list = json::array();
        for (const auto& d : distinguished_btilde_table()) {
          if (!a.group.empty() && d.group != a.group) continue;
          if (!a.orbit.empty() && !same_label(d.orbit, a.orbit)) continue;
          list.push_back({{"group", d.group}, {"orbit", d.orbit}, {"btilde", d.btilde}});
        }
        if (!a.orbit.empty() && list.empty()) lookup_distinguished_btilde(a.group, a.orbit);
        if (a.json) {
          detail::emit(out, list);
        } else {
          for (const auto& d : list) {
            out << d["group"].get<std::string>() << "  " << d["orbit"].get<std::string>() << "  b~ "
                << d["btilde"] << '\n';
          }
        }
        return kOk;
      }
      std::vector<ExceptionalRow> rows;
      if (!a.orbit.empty()) {
        rows = lookup_orbit(a.group, a.orbit);
      } else {
        for (const auto& r : exceptional_rows()) {
          if (a.group.empty() || r.group == a.group) rows.push_back(r);
        }
      }
      if (a.json) {
        json list = json::array();
        for (const auto& r : rows) list.push_back(detail::to_json(r));
        detail::emit(out, list);
      } else {
        std::string last;
        for (const auto& r : rows) {
          const std::string head = r.group + " " + r.orbit;
          if (head != last) {
            out << head << "  A-bar = " << r.quotient_name << '\n';
            last = head;
          }
          out << "  " << (r.starred ? "* " : "  ") << r.class_label << "  b~ " << r.btilde
              << "  -> " << r.dual << '\n';
        }
      }
      return kOk;
    };
  });

  // verify -----------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Run the consistency suite against the brute-force oracles");
  verify_cmd->add_option("--max-rank", a.max_rank, "Largest rank swept (heavy checks stop at 6)")
      ->check(CLI::Range(0, 7));
  add_json(verify_cmd);
  verify_cmd->callback([&] {
    action = [&] {
      const auto results = oracle::consistency_suite(a.max_rank);
      bool all = true;
      json list = json::array();
      for (const auto& r : results) {
        all = all && r.passed;
        json j{{"check", r.check}, {"scope", r.scope}, {"status", r.passed ? "pass" : "fail"},
               {"cases", r.cases}};
        if (r.counterexample) j["counterexample"] = *r.counterexample;
        list.push_back(j);
      }
      if (a.json) {
        detail::emit(out, list);
      } else {
        for (const auto& r : results) {
          out << (r.passed ? "pass  " : "FAIL  ") << r.check << "  " << r.scope << "  ("
              << r.cases << " cases)";
          if (r.counterexample) out << "  counterexample: " << *r.counterexample;
          out << '\n';
        }
      }
      return all ? kOk : kDomainError;
    };
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return kUsageError;
  }

  try {
    return action();
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace orbitduality::cli
