#pragma once

// Command-line front end. Kept in a header so the test suites can drive it
// in-process; tools/main.cpp only forwards argv.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <skelideal/skelideal.hpp>

namespace skelideal::cli {

enum ExitCode : int { kOk = 0, kClaimFailure = 1, kUsage = 2, kResource = 3 };

namespace detail {

using json = nlohmann::ordered_json;

struct GlobalFlags {
  std::optional<std::string> config_path;
  std::optional<std::string> format;
  std::optional<std::uint64_t> max_candidates;
  std::optional<std::uint64_t> max_generators;
};

inline CliConfig resolve_config(const GlobalFlags& flags, const CliConfig::EnvLookup& env) {
  CliConfig cfg;
  std::optional<std::string> path = flags.config_path;
  if (!path) path = env("SKELIDEAL_CONFIG");
  if (path) cfg.apply_file(*path);
  cfg.apply_env(env);
  if (flags.format) cfg.set("format", *flags.format, "--format");
  if (flags.max_candidates) cfg.limits.max_candidates = *flags.max_candidates;
  if (flags.max_generators) cfg.limits.max_generators = *flags.max_generators;
  cfg.validate();
  return cfg;
}

inline void require_oracle_bounds(const CliConfig& cfg, unsigned n, unsigned m, unsigned r) {
  if (n > cfg.oracle_max_n || m > cfg.oracle_max_m || r > cfg.oracle_max_r) {
    throw ResourceError("oracle query (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                        ", r=" + std::to_string(r) + ") exceeds oracle bounds (n<=" +
                        std::to_string(cfg.oracle_max_n) + ", m<=" + std::to_string(cfg.oracle_max_m) +
                        ", r<=" + std::to_string(cfg.oracle_max_r) + ")");
  }
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

inline std::string join_indices(const std::vector<unsigned>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

inline json verdict_json(const ContainmentVerdict& v) {
  json j;
  j["kind"] = v.kind == QueryKind::ordinary ? "ordinary" : "symbolic";
  j["n"] = v.n;
  j["c"] = v.c;
  if (v.kind == QueryKind::symbolic) j["d"] = v.d;
  j["m"] = v.m;
  j[v.kind == QueryKind::ordinary ? "r" : "s"] = v.r_or_s;
  j["fast_path"] = v.fast_path;
  j["oracle"] = v.oracle ? json(*v.oracle) : json(nullptr);
  j["agree"] = v.agree ? json(*v.agree) : json(nullptr);
  if (v.counterexample) j["counterexample"] = to_string(*v.counterexample);
  return j;
}

inline void print_verdict(const ContainmentVerdict& v, const CliConfig& cfg, std::ostream& out) {
  if (cfg.format == OutputFormat::json) {
    out << verdict_json(v).dump() << '\n';
    return;
  }
  if (v.kind == QueryKind::ordinary) {
    const SimplicialSpec spec(v.n, v.c);
    const auto [k, p] = thm_a_params(v.c, v.m);
    const Rational bound(static_cast<std::int64_t>(v.n + 1) * k - p, static_cast<std::int64_t>(v.n - v.c + 2));
    out << "query: I^(" << v.m << ")(" << v.n << "," << v.c << ") in I^" << v.r_or_s << "(" << v.n << "," << v.c
        << ")\n";
    out << "bound: r <= " << to_string(bound) << " (k=" << k << ", p=" << p << ")\n";
  } else {
    out << "query: I^(" << v.m << ")(" << v.n << "," << v.c << ") in I^(" << v.r_or_s << ")(" << v.n << ","
        << v.d << ")\n";
  }
  out << "fast_path: " << bool_str(v.fast_path) << '\n';
  if (v.oracle) {
    out << "oracle: " << bool_str(*v.oracle) << '\n';
    out << "agree: " << bool_str(*v.agree) << '\n';
  }
  if (v.counterexample) out << "counterexample: " << to_string(*v.counterexample) << '\n';
}

}  // namespace detail

/// Runs the CLI on `args` (args[0] is the program name) and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const CliConfig::EnvLookup& env = CliConfig::process_env) {
  using detail::json;

  CLI::App app{"Simplicial ideals: powers, containment and resurgence", "skelideal"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Expand all help");

  detail::GlobalFlags flags;
  app.add_option("--config", flags.config_path, "key = value config file (or SKELIDEAL_CONFIG)");
  app.add_option("--format", flags.format, "Output format: text or json");
  app.add_option("--max-candidates", flags.max_candidates, "Enumeration budget");
  app.add_option("--max-generators", flags.max_generators, "Intermediate generator budget");

  unsigned n = 0, c = 0, d = 0;
  std::optional<unsigned> power, symbolic;
  std::string route = "criterion";

  auto* gens = app.add_subcommand("gens", "List minimal generators of I(n,c), I^r(n,c) or I^(m)(n,c)");
  gens->add_option("--n", n, "Ambient projective dimension")->required();
  gens->add_option("--c", c, "Codimension")->required();
  auto* gp = gens->add_option("--power", power, "Ordinary power r");
  auto* gs = gens->add_option("--symbolic", symbolic, "Symbolic power m");
  gp->excludes(gs);
  gens->add_option("--route", route, "Symbolic route: criterion or intersection")
      ->check(CLI::IsMember({"criterion", "intersection"}));

  std::string monomial_text;
  auto* member = app.add_subcommand("member", "Test membership of a monomial in I^r(n,c) or I^(m)(n,c)");
  member->add_option("--n", n, "Ambient projective dimension")->required();
  member->add_option("--c", c, "Codimension")->required();
  auto* mp = member->add_option("--power", power, "Ordinary power r");
  auto* ms = member->add_option("--symbolic", symbolic, "Symbolic power m");
  mp->excludes(ms);
  member->add_option("monomial", monomial_text, "Monomial such as x0^2*x1")->required();

  unsigned m = 0, r = 0, s = 0;
  bool oracle = false;
  auto* cont = app.add_subcommand("containment", "Is I^(m)(n,c) contained in I^r(n,c)?");
  cont->add_option("--n", n)->required();
  cont->add_option("--c", c)->required();
  cont->add_option("--m", m)->required();
  cont->add_option("--r", r)->required();
  cont->add_flag("--oracle", oracle, "Also decide by brute force");

  auto* csym = app.add_subcommand("containment-sym", "Is I^(m)(n,c) contained in I^(s)(n,d)?");
  csym->add_option("--n", n)->required();
  csym->add_option("--c", c)->required();
  csym->add_option("--d", d)->required();
  csym->add_option("--m", m)->required();
  csym->add_option("--s", s)->required();
  csym->add_flag("--oracle", oracle, "Also decide by brute force");

  std::int64_t witnesses = 10;
  std::vector<std::int64_t> box{12, 12};
  auto* res = app.add_subcommand("resurgence", "Resurgence of I(n,c) with witnesses and a box sweep");
  res->add_option("--n", n)->required();
  res->add_option("--c", c)->required();
  res->add_option("--witnesses", witnesses, "Number of witness pairs (k = 1..K)");
  res->add_option("--box", box, "Sweep bounds M R")->expected(2);
  res->add_flag("--oracle", oracle, "Sweep the box with the brute-force oracle");

  std::string scope_text;
  std::optional<std::string> report_path;
  bool deep_flag = false;
  bool timings = false;
  bool serial = false;
  auto* ver = app.add_subcommand("verify", "Check the identities and containments over bounded ranges");
  ver->add_option("scope", scope_text, "triangle, tetrahedron, general or all")->required();
  ver->add_flag("--deep", deep_flag, "Use the widened parameter ranges");
  ver->add_option("--report", report_path, "Write the JSON report to this path");
  ver->add_flag("--timings", timings, "Include wall_time_ms in the JSON report");
  ver->add_flag("--serial", serial, "Run claims one at a time");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const CliConfig cfg = detail::resolve_config(flags, env);
    const bool as_json = cfg.format == OutputFormat::json;

    if (*gens) {
      const SimplicialSpec spec(n, c);
      MonomialIdeal ideal = MonomialIdeal::zero(n);
      std::string kind = "ideal";
      unsigned order = 1;
      if (power) {
        kind = "power";
        order = *power;
        ideal = ordinary_power_min_gens(spec, *power, cfg.limits);
      } else if (symbolic) {
        kind = "symbolic";
        order = *symbolic;
        ideal = route == "criterion" ? symbolic_power(spec, *symbolic, cfg.limits)
                                     : symbolic_power_oracle(spec, *symbolic, cfg.limits);
      } else {
        ideal = simplicial_ideal(spec);
      }
      if (as_json) {
        json j;
        j["n"] = n;
        j["c"] = c;
        j["kind"] = kind;
        j["order"] = order;
        j["generators"] = json::parse(to_json(ideal).dump());
        out << j.dump() << '\n';
      } else {
        out << to_text(ideal);
      }
      return kOk;
    }

    if (*member) {
      const SimplicialSpec spec(n, c);
      if (!power && !symbolic) throw ParameterError("member needs --power or --symbolic");
      const Monomial a = parse_monomial(monomial_text, n);
      json j;
      j["monomial"] = to_string(a);
      bool is_member = false;
      std::string reason;
      if (symbolic) {
        is_member = symbolic_member(spec, *symbolic, a);
        const auto face = weakest_face(spec, a);
        j["member"] = is_member;
        j["weakest_face"] = face.variables;
        j["face_sum"] = face.sum;
        j["required"] = *symbolic;
        if (!is_member) {
          reason = "violated: variables " + detail::join_indices(face.variables) + " sum to " +
                   std::to_string(face.sum) + " < " + std::to_string(*symbolic);
        }
      } else {
        is_member = ordinary_member(spec, *power, a);
        const auto deficit = ordinary_degree_deficit(spec, *power, a);
        const std::uint64_t need = std::uint64_t{spec.generator_degree()} * *power;
        j["member"] = is_member;
        std::uint64_t capped = 0;
        for (auto e : a.exponents()) capped += std::min<std::uint64_t>(e, *power);
        j["capped_degree"] = capped;
        j["required_degree"] = need;
        j["deficit"] = deficit;
        if (!is_member) {
          reason = "violated: sum of min(a_i, " + std::to_string(*power) + ") is " + std::to_string(capped) +
                   " < " + std::to_string(need) + " (deficit " + std::to_string(deficit) + ")";
        }
      }
      if (as_json) {
        out << j.dump() << '\n';
      } else {
        out << detail::bool_str(is_member) << '\n';
        if (!reason.empty()) out << reason << '\n';
      }
      return kOk;
    }

    if (*cont) {
      if (oracle) detail::require_oracle_bounds(cfg, n, m, r);
      detail::print_verdict(query_containment(n, c, m, r, oracle, cfg.limits), cfg, out);
      return kOk;
    }

    if (*csym) {
      if (oracle) detail::require_oracle_bounds(cfg, n, m, s);
      detail::print_verdict(query_symbolic_containment(n, c, d, m, s, oracle, cfg.limits), cfg, out);
      return kOk;
    }

    if (*res) {
      const SimplicialSpec spec(n, c);
      if (witnesses < 0) throw ParameterError("--witnesses must be >= 0");
      if (oracle) {
        detail::require_oracle_bounds(cfg, n, static_cast<unsigned>(box[0]), static_cast<unsigned>(box[1]));
      }
      const auto rep = resurgence_report(spec, witnesses, box[0], box[1], oracle, cfg.limits);
      if (as_json) {
        json j;
        j["n"] = n;
        j["c"] = c;
        j["rho"] = to_string(rep.rho);
        j["witnesses"] = json::array();
        for (const auto& w : rep.witnesses) {
          j["witnesses"].push_back({{"k", w.k}, {"m", w.m}, {"r", w.r}, {"ratio", to_string(w.ratio)}});
        }
        json emp;
        emp["box"] = {rep.empirical.max_m, rep.empirical.max_r};
        emp["method"] = oracle ? "oracle" : "closed_form";
        emp["noncontainment_pairs"] = rep.empirical.noncontainment_pairs;
        if (rep.empirical.ratio) {
          emp["sup"] = to_string(*rep.empirical.ratio);
          emp["argmax"] = {rep.empirical.argmax_m, rep.empirical.argmax_r};
        } else {
          emp["sup"] = nullptr;
        }
        j["empirical"] = emp;
        j["boundary"] = json::array();
        for (const auto& [br, bm] : rep.boundary) j["boundary"].push_back({{"r", br}, {"min_m", bm}});
        out << j.dump() << '\n';
      } else {
        out << "rho: " << to_string(rep.rho) << '\n';
        if (!rep.witnesses.empty()) {
          out << "witnesses (k, m_k, r_k, m_k/r_k):\n";
          for (const auto& w : rep.witnesses) {
            out << "  " << w.k << " " << w.m << " " << w.r << " " << to_string(w.ratio) << '\n';
          }
        }
        out << "empirical sup over m<=" << rep.empirical.max_m << ", r<=" << rep.empirical.max_r << " ("
            << (oracle ? "oracle" : "closed form") << "): ";
        if (rep.empirical.ratio) {
          out << to_string(*rep.empirical.ratio) << " at m=" << rep.empirical.argmax_m
              << ", r=" << rep.empirical.argmax_r << '\n';
        } else {
          out << "none (every pair is a containment)\n";
        }
        out << "least m with containment (r: m):";
        for (const auto& [br, bm] : rep.boundary) out << ' ' << br << ':' << bm;
        out << '\n';
      }
      return kOk;
    }

    if (*ver) {
      const Scope scope = parse_scope(scope_text);
      const bool deep = deep_flag || cfg.deep;
      const auto report = verify_paper(scope, deep ? VerifyBounds::deep() : VerifyBounds{}, deep, cfg.limits, !serial);
      const std::string report_json = to_json(report, timings).dump(2) + "\n";
      if (report_path) {
        std::ofstream f(*report_path, std::ios::binary);
        if (!f) throw ParameterError("cannot write report to '" + *report_path + "'");
        f << report_json;
      }
      if (as_json && !report_path) {
        out << report_json;
      } else {
        out << summary_table(report);
      }
      for (const auto& claim : report.claims) {
        if (claim.status != ClaimStatus::pass) {
          err << claim.claim_id << " " << to_string(claim.status) << ": "
              << claim.counterexample.value_or("") << '\n';
        }
      }
      if (report.count(ClaimStatus::fail) > 0) return kClaimFailure;
      if (report.count(ClaimStatus::resource_error) > 0) return kResource;
      return kOk;
    }
  } catch (const ResourceError& e) {
    err << "resource budget exceeded: " << e.what() << '\n';
    return kResource;
  } catch (const std::overflow_error& e) {
    err << "resource budget exceeded: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace skelideal::cli
