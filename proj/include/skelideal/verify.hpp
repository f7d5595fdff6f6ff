#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "containment.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "limits.hpp"
#include "monomial.hpp"
#include "simplicial.hpp"

namespace skelideal {

enum class Scope { triangle, tetrahedron, general, all };

inline std::string_view to_string(Scope s) {
  switch (s) {
    case Scope::triangle: return "triangle";
    case Scope::tetrahedron: return "tetrahedron";
    case Scope::general: return "general";
    case Scope::all: return "all";
  }
  return "all";
}

inline Scope parse_scope(std::string_view s) {
  if (s == "triangle") return Scope::triangle;
  if (s == "tetrahedron") return Scope::tetrahedron;
  if (s == "general") return Scope::general;
  if (s == "all") return Scope::all;
  throw ParameterError("unknown scope '" + std::string(s) +
                       "' (expected triangle, tetrahedron, general or all)");
}

/// Parameter ranges for every claim family. `deep()` widens all of them.
struct VerifyBounds {
  unsigned triangle_max_m = 4;
  unsigned triangle_generator_max_m = 8;
  unsigned triangle_criterion_max = 12;
  unsigned triangle_oracle_max = 8;
  unsigned complete_intersection_max_k = 5;
  unsigned tetra_max_m = 3;
  unsigned tetra_generator_max_m = 6;
  unsigned remark_max_n = 4;
  unsigned hierarchy_max_n = 5;
  unsigned thm_a_max_n = 4;
  unsigned thm_a_max_mr = 6;
  unsigned thm_b_max_n = 3;
  unsigned thm_b_max_ms = 5;
  unsigned routes_max_n = 4;
  unsigned routes_max_m = 5;
  unsigned ordinary_max_n = 4;
  unsigned ordinary_max_r = 4;
  unsigned membership_samples = 2000;
  unsigned cr_max_n = 6;
  unsigned cr_max_r = 6;
  unsigned product_max_n = 3;
  unsigned product_max_ab = 3;
  unsigned resurgence_max_n = 4;
  unsigned resurgence_box = 30;
  unsigned witness_max_k = 100;
  unsigned witness_oracle_max_m = 6;

  static VerifyBounds deep() {
    VerifyBounds b;
    b.triangle_max_m = 8;
    b.triangle_generator_max_m = 12;
    b.triangle_criterion_max = 30;
    b.triangle_oracle_max = 12;
    b.complete_intersection_max_k = 8;
    b.tetra_max_m = 5;
    b.tetra_generator_max_m = 9;
    b.remark_max_n = 6;
    b.hierarchy_max_n = 7;
    b.thm_a_max_n = 5;
    b.thm_a_max_mr = 8;
    b.thm_b_max_n = 4;
    b.thm_b_max_ms = 7;
    b.routes_max_n = 5;
    b.routes_max_m = 6;
    b.ordinary_max_n = 5;
    b.ordinary_max_r = 5;
    b.membership_samples = 10000;
    b.cr_max_n = 10;
    b.cr_max_r = 10;
    b.product_max_n = 4;
    b.product_max_ab = 4;
    b.resurgence_max_n = 6;
    b.resurgence_box = 60;
    b.witness_max_k = 1000;
    b.witness_oracle_max_m = 8;
    return b;
  }
};

enum class ClaimStatus { pass, fail, resource_error };

inline std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::resource_error: return "resource_error";
  }
  return "fail";
}

struct ClaimResult {
  std::string claim_id;
  std::string statement;
  std::string params_range;
  ClaimStatus status = ClaimStatus::pass;
  std::optional<std::string> counterexample;
  std::optional<std::string> note;
  std::int64_t wall_time_ms = 0;
};

struct VerifyReport {
  Scope scope = Scope::all;
  bool deep = false;
  std::vector<ClaimResult> claims;

  bool all_passed() const {
    return std::all_of(claims.begin(), claims.end(),
                       [](const ClaimResult& c) { return c.status == ClaimStatus::pass; });
  }
  std::size_t count(ClaimStatus s) const {
    return static_cast<std::size_t>(std::count_if(
        claims.begin(), claims.end(), [&](const ClaimResult& c) { return c.status == s; }));
  }
};

namespace detail {

/// What a claim check hands back: a counterexample (absent on success) and
/// an optional observation.
struct Outcome {
  std::optional<std::string> counterexample;
  std::optional<std::string> note;
};

struct Claim {
  Scope scope;
  std::string id;
  std::string statement;
  std::string range;
  std::function<Outcome()> check;
};

inline std::string range_str(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

/// All distinct permutations of the given exponent vectors, graded-lex sorted.
inline std::vector<Monomial> orbit_list(const std::vector<std::vector<Exponent>>& bases) {
  std::vector<Monomial> gens;
  for (auto base : bases) {
    std::sort(base.begin(), base.end());
    do {
      gens.emplace_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
  }
  std::sort(gens.begin(), gens.end(), GradedLexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

inline std::string describe(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  // First generator of either side missing from the other.
  for (const auto& g : lhs.generators()) {
    if (!rhs.contains(g)) return "lhs generator " + to_string(g) + " not in rhs";
  }
  for (const auto& g : rhs.generators()) {
    if (!lhs.contains(g)) return "rhs generator " + to_string(g) + " not in lhs";
  }
  return "ideals differ";
}

inline std::optional<std::string> expect_equal(const MonomialIdeal& lhs, const MonomialIdeal& rhs,
                                               const std::string& where) {
  if (lhs == rhs) return std::nullopt;
  return where + ": " + describe(lhs, rhs);
}

inline std::optional<std::string> expect_sub(const MonomialIdeal& lhs, const MonomialIdeal& rhs,
                                             const std::string& where) {
  for (const auto& g : lhs.generators()) {
    if (!rhs.contains(g)) return where + ": generator " + to_string(g) + " not contained";
  }
  return std::nullopt;
}

/// Checks that `ideal` is generated by `listed` and, when `minimal` is set,
/// that `listed` is exactly its minimal generating set.
inline std::optional<std::string> expect_generated_by(const MonomialIdeal& ideal, const std::vector<Monomial>& listed,
                                                      bool minimal, const std::string& where) {
  const auto generated = MonomialIdeal::from_generators(ideal.ambient_n(), listed);
  if (auto ce = expect_equal(ideal, generated, where)) return ce;
  if (minimal && generated.size() != listed.size()) return where + ": listed generators are redundant";
  return std::nullopt;
}

inline std::string p(const char* name, unsigned v) { return std::string(name) + "=" + std::to_string(v); }

inline std::vector<Claim> build_claims(const VerifyBounds& b, const Limits& lim) {
  std::vector<Claim> claims;
  const auto claim = [&](Scope s, std::string id, std::string statement, std::string range,
                       std::function<Outcome()> check) {
    claims.push_back({s, std::move(id), std::move(statement), std::move(range), std::move(check)});
  };

  // ---- triangle: E = I(2,1), V = I(2,2) in P^2 ----
  const SimplicialSpec tri_e(2, 1);
  const SimplicialSpec tri_v(2, 2);

  claim(Scope::triangle, "triangle.v2_generators",
      "V^(2) = <x0^2*x1^2, x0^2*x2^2, x1^2*x2^2, x0*x1*x2>", "n=2, c=2, m=2", [=] {
        const auto expected = MonomialIdeal::from_generators(
            2, {Monomial{2, 2, 0}, Monomial{2, 0, 2}, Monomial{0, 2, 2}, Monomial{1, 1, 1}});
        return Outcome{expect_equal(symbolic_power(tri_v, 2, lim), expected, "V^(2)"), {}};
      });

  claim(Scope::triangle, "triangle.symbolic_generators",
      "V^(m) is minimally generated by the permutations of x^(m-k)*x^(m-k)*x^k, 0 <= k <= floor(m/2)",
      range_str({"1 <= m <= " + std::to_string(b.triangle_generator_max_m)}), [=] {
        for (unsigned m = 1; m <= b.triangle_generator_max_m; ++m) {
          std::vector<std::vector<Exponent>> bases;
          for (unsigned k = 0; k <= m / 2; ++k) bases.push_back({m - k, m - k, k});
          if (auto ce = expect_generated_by(symbolic_power(tri_v, m, lim), orbit_list(bases), true, p("m", m)))
            return Outcome{ce, {}};
        }
        return Outcome{};
      });

  claim(Scope::triangle, "triangle.power_even", "V^(2m) = (V^(2))^m",
      range_str({"1 <= m <= " + std::to_string(b.triangle_max_m)}), [=] {
        const auto v2 = symbolic_power(tri_v, 2, lim);
        for (unsigned m = 1; m <= b.triangle_max_m; ++m) {
          if (auto ce = expect_equal(symbolic_power(tri_v, 2 * m, lim), pow(v2, m, lim), p("m", m)))
            return Outcome{ce, {}};
        }
        return Outcome{};
      });

  claim(Scope::triangle, "triangle.power_odd", "V^(2m+1) = V^(2m) * V",
      range_str({"1 <= m <= " + std::to_string(b.triangle_max_m)}), [=] {
        const auto v = simplicial_ideal(tri_v);
        for (unsigned m = 1; m <= b.triangle_max_m; ++m) {
          if (auto ce = expect_equal(symbolic_power(tri_v, 2 * m + 1, lim),
                                     mul(symbolic_power(tri_v, 2 * m, lim), v, lim), p("m", m)))
            return Outcome{ce, {}};
        }
        return Outcome{};
      });

  claim(Scope::triangle, "triangle.v2_sum", "V^(2) = E + V^2", "n=2", [=] {
    const auto v = simplicial_ideal(tri_v);
    return Outcome{expect_equal(symbolic_power(tri_v, 2, lim), add(simplicial_ideal(tri_e), pow(v, 2, lim)),
                                "V^(2) vs E + V^2"),
                   {}};
  });

  claim(Scope::triangle, "triangle.e_in_v2", "E is contained in V^(2)", "n=2", [=] {
    return Outcome{expect_sub(simplicial_ideal(tri_e), symbolic_power(tri_v, 2, lim), "E in V^(2)"), {}};
  });

  claim(Scope::triangle, "triangle.e_in_v2m", "E^(m) is contained in V^(2m)",
      range_str({"1 <= m <= " + std::to_string(b.triangle_max_m)}), [=] {
        for (unsigned m = 1; m <= b.triangle_max_m; ++m) {
          if (auto ce = expect_sub(symbolic_power(tri_e, m, lim), symbolic_power(tri_v, 2 * m, lim), p("m", m)))
            return Outcome{ce, {}};
        }
        return Outcome{};
      });

  claim(Scope::triangle, "triangle.e_step", "E^(m+1) is contained in V^(2) * E^(m), which is contained in V * E^(m)",
      range_str({"1 <= m <= " + std::to_string(b.triangle_max_m)}), [=] {
        const auto v = simplicial_ideal(tri_v);
        const auto v2 = symbolic_power(tri_v, 2, lim);
        for (unsigned m = 1; m <= b.triangle_max_m; ++m) {
          const auto em = symbolic_power(tri_e, m, lim);
          const auto mid = mul(v2, em, lim);
          if (auto ce = expect_sub(symbolic_power(tri_e, m + 1, lim), mid, p("m", m) + " (first)"))
            return Outcome{ce, {}};
          if (auto ce = expect_sub(mid, mul(v, em, lim), p("m", m) + " (second)")) return Outcome{ce, {}};
        }
        return Outcome{};
      });

  claim(Scope::triangle, "triangle.e_complete_intersection", "E^k = E^(k)",
      range_str({"1 <= k <= " + std::to_string(b.complete_intersection_max_k)}), [=] {
        const auto e = simplicial_ideal(tri_e);
        for (unsigned k = 1; k <= b.complete_intersection_max_k; ++k) {
          if (auto ce = expect_equal(pow(e, k, lim), symbolic_power(tri_e, k, lim), p("k", k)))
            return Outcome{ce, {}};
        }
        return Outcome{};
      });

  claim(Scope::triangle, "triangle.containment_criterion", "V^(m) in V^r iff 2r <= ceil(3m/2)",
      range_str({"closed form m,r <= " + std::to_string(b.triangle_criterion_max),
                 "oracle m,r <= " + std::to_string(b.triangle_oracle_max)}),
      [=] {
        for (unsigned m = 1; m <= b.triangle_criterion_max; ++m) {
          for (unsigned r = 1; r <= b.triangle_criterion_max; ++r) {
            const bool criterion = 2 * r <= (3 * m + 1) / 2;
            if (thm_a_predicate(tri_v, m, r) != criterion)
              return Outcome{p("m", m) + ", " + p("r", r) + ": closed form disagrees", {}};
            if (m <= b.triangle_oracle_max && r <= b.triangle_oracle_max &&
                containment_oracle(tri_v, m, r, lim) != criterion)
              return Outcome{p("m", m) + ", " + p("r", r) + ": oracle disagrees", {}};
          }
        }
        return Outcome{};
      });

  // ---- tetrahedron: F = I(3,1), E = I(3,2), V = I(3,3) in P^3 ----
  const SimplicialSpec tet_f(3, 1);
  const SimplicialSpec tet_e(3, 2);
  const SimplicialSpec tet_v(3, 3);

  claim(Scope::tetrahedron, "tetrahedron.edge_symbolic_generators",
      "E^(m) is minimally generated by the permutations of x^(m-j)*x^(m-j)*x^(m-j)*x^j, 0 <= j <= floor(m/2)",
      range_str({"1 <= m <= " + std::to_string(b.tetra_generator_max_m)}), [=] {
        for (unsigned m = 1; m <= b.tetra_generator_max_m; ++m) {
          std::vector<std::vector<Exponent>> bases;
          for (unsigned j = 0; j <= m / 2; ++j) bases.push_back({m - j, m - j, m - j, j});
          if (auto ce = expect_generated_by(symbolic_power(tet_e, m, lim), orbit_list(bases), true, p("m", m)))
            return Outcome{ce, {}};
        }
        return Outcome{};
      });

  claim(Scope::tetrahedron, "tetrahedron.vertex_symbolic_generators",
      "V^(m) is generated by the permutations of x^(m-i-j)*x^(m-i-j)*x^i*x^j, 2i+j <= m, i+2j <= m",
      range_str({"1 <= m <= " + std::to_string(b.tetra_generator_max_m)}), [=] {
        std::vector<unsigned> redundant_at;
        for (unsigned m = 1; m <= b.tetra_generator_max_m; ++m) {
          std::vector<std::vector<Exponent>> bases;
          for (unsigned i = 0; 2 * i <= m; ++i) {
            for (unsigned j = 0; 2 * i + j <= m && i + 2 * j <= m; ++j) bases.push_back({m - i - j, m - i - j, i, j});
          }
          const auto raw = orbit_list(bases);
          if (auto ce = expect_generated_by(symbolic_power(tet_v, m, lim), raw, false, p("m", m))) return Outcome{ce, {}};
          if (MonomialIdeal::from_generators(3, raw).size() != raw.size()) redundant_at.push_back(m);
        }
        std::string note = "parameterized list irredundant for every m checked";
        if (!redundant_at.empty()) {
          note = "parameterized list redundant at m =";
          for (auto m : redundant_at) note += " " + std::to_string(m);
        }
        return Outcome{std::nullopt, note};
      });

  claim(Scope::tetrahedron, "tetrahedron.e_power_even", "E^(2m) = (E^(2))^m",
      range_str({"1 <= m <= " + std::to_string(b.tetra_max_m)}), [=] {
        const auto e2 = symbolic_power(tet_e, 2, lim);
        for (unsigned m = 1; m <= b.tetra_max_m; ++m) {
          if (auto ce = expect_equal(symbolic_power(tet_e, 2 * m, lim), pow(e2, m, lim), p("m", m)))
            return Outcome{ce, {}};
        }
        return Outcome{};
      });

  claim(Scope::tetrahedron, "tetrahedron.e_power_odd", "E^(2m+1) = E^(2m) * E",
      range_str({"1 <= m <= " + std::to_string(b.tetra_max_m)}), [=] {
        const auto e = simplicial_ideal(tet_e);
        for (unsigned m = 1; m <= b.tetra_max_m; ++m) {
          if (auto ce = expect_equal(symbolic_power(tet_e, 2 * m + 1, lim),
                                     mul(symbolic_power(tet_e, 2 * m, lim), e, lim), p("m", m)))
            return Outcome{ce, {}};
        }
        return Outcome{};
      });

  claim(Scope::tetrahedron, "tetrahedron.e3_in_e2", "E^(3) is contained in E^2", "n=3, c=2", [=] {
    return Outcome{expect_sub(symbolic_power(tet_e, 3, lim), pow(simplicial_ideal(tet_e), 2, lim), "E^(3) in E^2"),
                   {}};
  });

  claim(Scope::tetrahedron, "tetrahedron.e2_sum", "E^(2) = F + E^2", "n=3", [=] {
    return Outcome{expect_equal(symbolic_power(tet_e, 2, lim),
                                add(simplicial_ideal(tet_f), pow(simplicial_ideal(tet_e), 2, lim)),
                                "E^(2) vs F + E^2"),
                   {}};
  });

  claim(Scope::tetrahedron, "tetrahedron.f_complete_intersection", "F^k = F^(k)",
      range_str({"1 <= k <= " + std::to_string(b.complete_intersection_max_k)}), [=] {
        const auto f = simplicial_ideal(tet_f);
        for (unsigned k = 1; k <= b.complete_intersection_max_k; ++k) {
          if (auto ce = expect_equal(pow(f, k, lim), symbolic_power(tet_f, k, lim), p("k", k)))
            return Outcome{ce, {}};
        }
        return Outcome{};
      });

  // ---- general I(n,c) ----
  claim(Scope::general, "general.basic_inclusions", "I(n,c) is contained in I(n,c+1)",
      range_str({"1 <= c < n <= " + std::to_string(b.hierarchy_max_n)}), [=] {
        for (unsigned n = 2; n <= b.hierarchy_max_n; ++n) {
          for (unsigned c = 1; c < n; ++c) {
            if (auto ce = expect_sub(simplicial_ideal({n, c}), simplicial_ideal({n, c + 1}),
                                     p("n", n) + ", " + p("c", c)))
              return Outcome{ce, {}};
          }
        }
        return Outcome{};
      });

  claim(Scope::general, "general.second_symbolic_power", "I^(2)(n,2) = I(n,1) + I^2(n,2)",
      range_str({"2 <= n <= " + std::to_string(b.remark_max_n)}), [=] {
        for (unsigned n = 2; n <= b.remark_max_n; ++n) {
          const SimplicialSpec s2(n, 2);
          if (auto ce = expect_equal(symbolic_power(s2, 2, lim),
                                     add(simplicial_ideal({n, 1}), pow(simplicial_ideal(s2), 2, lim)), p("n", n)))
            return Outcome{ce, {}};
        }
        return Outcome{};
      });

  claim(Scope::general, "general.symbolic_routes_agree",
      "c-subset criterion and face-prime intersection give the same I^(m)(n,c)",
      range_str({"1 <= c <= n <= " + std::to_string(b.routes_max_n), "m <= " + std::to_string(b.routes_max_m)}),
      [=] {
        for (unsigned n = 1; n <= b.routes_max_n; ++n) {
          for (unsigned c = 1; c <= n; ++c) {
            for (unsigned m = 1; m <= b.routes_max_m; ++m) {
              const SimplicialSpec s(n, c);
              if (auto ce = expect_equal(symbolic_power(s, m, lim), symbolic_power_oracle(s, m, lim),
                                         p("n", n) + ", " + p("c", c) + ", " + p("m", m)))
                return Outcome{ce, {}};
            }
          }
        }
        return Outcome{};
      });

  claim(Scope::general, "general.ordinary_power_closed_form",
      "minimal generators of I^r(n,c): total degree (n-c+2)r, every exponent <= r",
      range_str({"1 <= c <= n <= " + std::to_string(b.ordinary_max_n), "r <= " + std::to_string(b.ordinary_max_r)}),
      [=] {
        for (unsigned n = 1; n <= b.ordinary_max_n; ++n) {
          for (unsigned c = 1; c <= n; ++c) {
            const SimplicialSpec s(n, c);
            const auto base = simplicial_ideal(s);
            for (unsigned r = 1; r <= b.ordinary_max_r; ++r) {
              if (auto ce = expect_equal(ordinary_power_min_gens(s, r, lim), pow(base, r, lim),
                                         p("n", n) + ", " + p("c", c) + ", " + p("r", r)))
                return Outcome{ce, {}};
            }
          }
        }
        return Outcome{};
      });

  claim(Scope::general, "general.ordinary_membership",
      "x^a in I^r(n,c) iff sum_i min(a_i, r) >= (n-c+2) r",
      range_str({"1 <= c <= n <= " + std::to_string(b.ordinary_max_n), "r <= " + std::to_string(b.ordinary_max_r),
                 std::to_string(b.membership_samples) + " seeded samples per case"}),
      [=] {
        std::mt19937_64 rng(20141009);
        for (unsigned n = 1; n <= b.ordinary_max_n; ++n) {
          for (unsigned c = 1; c <= n; ++c) {
            const SimplicialSpec s(n, c);
            for (unsigned r = 1; r <= b.ordinary_max_r; ++r) {
              const auto ideal = ordinary_power_min_gens(s, r, lim);
              std::uniform_int_distribution<Exponent> dist(0, 2 * r + 1);
              for (unsigned t = 0; t < b.membership_samples; ++t) {
                std::vector<Exponent> e(n + 1);
                for (auto& x : e) x = dist(rng);
                const Monomial a(std::move(e));
                if (ordinary_member(s, r, a) != ideal.contains(a))
                  return Outcome{p("n", n) + ", " + p("c", c) + ", " + p("r", r) + ", a=" + to_string(a), {}};
              }
            }
          }
        }
        return Outcome{};
      });

  claim(Scope::general, "general.ordinary_in_symbolic",
      "every x^a in I^r(n,c) has all c-subset exponent sums >= r",
      range_str({"1 <= c <= n <= " + std::to_string(b.ordinary_max_n), "r <= " + std::to_string(b.ordinary_max_r)}),
      [=] {
        for (unsigned n = 1; n <= b.ordinary_max_n; ++n) {
          for (unsigned c = 1; c <= n; ++c) {
            const SimplicialSpec s(n, c);
            for (unsigned r = 1; r <= b.ordinary_max_r; ++r) {
              const auto gens = ordinary_power_min_gens(s, r, lim);
              for (const auto& g : gens.generators()) {
                if (!symbolic_member(s, r, g))
                  return Outcome{p("n", n) + ", " + p("c", c) + ", " + p("r", r) + ", a=" + to_string(g), {}};
              }
            }
          }
        }
        return Outcome{};
      });

  claim(Scope::general, "general.symbolic_product", "(I^(a))^b is contained in I^(ab)",
      range_str({"1 <= c <= n <= " + std::to_string(b.product_max_n), "a, b <= " + std::to_string(b.product_max_ab)}),
      [=] {
        for (unsigned n = 1; n <= b.product_max_n; ++n) {
          for (unsigned c = 1; c <= n; ++c) {
            const SimplicialSpec s(n, c);
            for (unsigned a = 1; a <= b.product_max_ab; ++a) {
              const auto sa = symbolic_power(s, a, lim);
              for (unsigned e = 1; e <= b.product_max_ab; ++e) {
                if (auto ce = expect_sub(pow(sa, e, lim), symbolic_power(s, a * e, lim),
                                         p("n", n) + ", " + p("c", c) + ", " + p("a", a) + ", " + p("b", e)))
                  return Outcome{ce, {}};
              }
            }
          }
        }
        return Outcome{};
      });

  claim(Scope::general, "general.filtration", "I^(m+1) in I^(m) and I^(r+1) in I^r",
      range_str({"1 <= c <= n <= " + std::to_string(b.routes_max_n), "m, r <= " + std::to_string(b.routes_max_m)}),
      [=] {
        for (unsigned n = 1; n <= b.routes_max_n; ++n) {
          for (unsigned c = 1; c <= n; ++c) {
            const SimplicialSpec s(n, c);
            for (unsigned m = 1; m < b.routes_max_m; ++m) {
              const auto where = p("n", n) + ", " + p("c", c) + ", " + p("m", m);
              if (auto ce = expect_sub(symbolic_power(s, m + 1, lim), symbolic_power(s, m, lim), where + " symbolic"))
                return Outcome{ce, {}};
              if (auto ce = expect_sub(ordinary_power_min_gens(s, m + 1, lim), ordinary_power_min_gens(s, m, lim),
                                       where + " ordinary"))
                return Outcome{ce, {}};
            }
          }
        }
        return Outcome{};
      });

  claim(Scope::general, "general.containment_criterion_exact",
      "I^(m)(n,c) in I^r(n,c) iff r <= ((n+1)k - p)/(n-c+2), m = kc - p, 0 <= p < c",
      range_str({"1 <= c <= n <= " + std::to_string(b.thm_a_max_n), "m, r <= " + std::to_string(b.thm_a_max_mr)}),
      [=] {
        for (unsigned n = 1; n <= b.thm_a_max_n; ++n) {
          for (unsigned c = 1; c <= n; ++c) {
            const SimplicialSpec s(n, c);
            for (unsigned m = 1; m <= b.thm_a_max_mr; ++m) {
              for (unsigned r = 1; r <= b.thm_a_max_mr; ++r) {
                if (thm_a_predicate(s, m, r) != containment_oracle(s, m, r, lim))
                  return Outcome{p("n", n) + ", " + p("c", c) + ", " + p("m", m) + ", " + p("r", r), {}};
              }
            }
          }
        }
        return Outcome{};
      });

  claim(Scope::general, "general.symbolic_criterion_sound", "c <= d and s c <= m d imply I^(m)(n,c) in I^(s)(n,d)",
      range_str({"1 <= c <= d <= n <= " + std::to_string(b.thm_b_max_n), "m, s <= " + std::to_string(b.thm_b_max_ms)}),
      [=] {
        for (unsigned n = 1; n <= b.thm_b_max_n; ++n) {
          for (unsigned c = 1; c <= n; ++c) {
            for (unsigned d = c; d <= n; ++d) {
              for (unsigned m = 1; m <= b.thm_b_max_ms; ++m) {
                for (unsigned s = 1; s <= b.thm_b_max_ms; ++s) {
                  if (thm_b_predicate(c, d, m, s) && !symbolic_containment_oracle(n, c, d, m, s, lim))
                    return Outcome{p("n", n) + ", " + p("c", c) + ", " + p("d", d) + ", " + p("m", m) + ", " +
                                       p("s", s),
                                   {}};
                }
              }
            }
          }
        }
        return Outcome{};
      });

  claim(Scope::general, "general.symbolic_criterion_not_necessary",
      "I^(3)(3,2) is contained in I^(5)(3,3) although s c = 10 > m d = 9", "n=3, c=2, d=3, m=3, s=5", [=] {
        if (thm_b_predicate(2, 3, 3, 5)) return Outcome{"sufficient condition unexpectedly holds", {}};
        if (auto g = symbolic_containment_counterexample(3, 2, 3, 3, 5, lim))
          return Outcome{"generator " + to_string(*g) + " not in I^(5)(3,3)", {}};
        return Outcome{};
      });

  claim(Scope::general, "general.containment_at_m_eq_cr", "m = c r always gives I^(m)(n,c) in I^r(n,c)",
      range_str({"1 <= c <= n <= " + std::to_string(b.cr_max_n), "r <= " + std::to_string(b.cr_max_r)}), [=] {
        for (unsigned n = 1; n <= b.cr_max_n; ++n) {
          for (unsigned c = 1; c <= n; ++c) {
            for (unsigned r = 1; r <= b.cr_max_r; ++r) {
              if (!thm_a_predicate({n, c}, std::int64_t{c} * r, r))
                return Outcome{p("n", n) + ", " + p("c", c) + ", " + p("r", r), {}};
            }
          }
        }
        return Outcome{};
      });

  claim(Scope::general, "general.resurgence",
      "rho(I(n,c)) = c(n-c+2)/(n+1): noncontainment forces m/r < rho, m/r > rho forces containment, "
      "witnesses (kc, r_k) are noncontainments approaching rho",
      range_str({"1 <= c <= n <= " + std::to_string(b.resurgence_max_n),
                 "box m, r <= " + std::to_string(b.resurgence_box), "k <= " + std::to_string(b.witness_max_k),
                 "oracle on witnesses with m_k <= " + std::to_string(b.witness_oracle_max_m)}),
      [=] {
        for (unsigned n = 1; n <= b.resurgence_max_n; ++n) {
          for (unsigned c = 1; c <= n; ++c) {
            const SimplicialSpec s(n, c);
            const Rational rho = resurgence(s);
            const auto where = p("n", n) + ", " + p("c", c);
            for (std::int64_t m = 1; m <= b.resurgence_box; ++m) {
              for (std::int64_t r = 1; r <= b.resurgence_box; ++r) {
                const bool contained = thm_a_predicate(s, m, r);
                const Rational q(m, r);
                if (!contained && !(q < rho))
                  return Outcome{where + ": noncontainment at m=" + std::to_string(m) + ", r=" + std::to_string(r) +
                                     " with m/r >= rho",
                                 {}};
                if (q > rho && !contained)
                  return Outcome{where + ": m/r > rho without containment", {}};
              }
            }
            for (std::int64_t k = 1; k <= b.witness_max_k; ++k) {
              const auto w = resurgence_witness(s, k);
              if (thm_a_predicate(s, w.m, w.r) || !(w.ratio < rho) || rho - w.ratio > rho / Rational(k))
                return Outcome{where + ": witness k=" + std::to_string(k), {}};
              if (w.m <= b.witness_oracle_max_m &&
                  containment_oracle(s, static_cast<unsigned>(w.m), static_cast<unsigned>(w.r), lim))
                return Outcome{where + ": oracle finds containment at witness k=" + std::to_string(k), {}};
            }
          }
        }
        return Outcome{};
      });

  return claims;
}

inline bool in_scope(Scope requested, Scope claim) { return requested == Scope::all || requested == claim; }

}  // namespace detail

/// Runs every claim in `scope` over its configured range. Claims run
/// concurrently; results come back in a fixed order. A claim that exceeds a
/// budget is reported as resource_error rather than aborting the run.
inline VerifyReport verify_paper(Scope scope, const VerifyBounds& bounds, bool deep = false,
                                 const Limits& limits = {}, bool parallel = true) {
  auto claims = detail::build_claims(bounds, limits);
  std::erase_if(claims, [&](const detail::Claim& c) { return !detail::in_scope(scope, c.scope); });

  const auto run_one = [](const detail::Claim& claim) {
    ClaimResult res{claim.id, claim.statement, claim.range, ClaimStatus::pass, {}, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto outcome = claim.check();
      res.note = std::move(outcome.note);
      if (outcome.counterexample) {
        res.status = ClaimStatus::fail;
        res.counterexample = std::move(outcome.counterexample);
      }
    } catch (const ResourceError& e) {
      res.status = ClaimStatus::resource_error;
      res.counterexample = e.what();
    }
    res.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                           .count();
    return res;
  };

  VerifyReport report{scope, deep, {}};
  if (parallel) {
    std::vector<std::future<ClaimResult>> pending;
    for (const auto& claim : claims) pending.push_back(std::async(std::launch::async, run_one, std::cref(claim)));
    for (auto& f : pending) report.claims.push_back(f.get());
  } else {
    for (const auto& claim : claims) report.claims.push_back(run_one(claim));
  }
  return report;
}

/// JSON report. Timings vary between runs, so they are only included on
/// request; without them the output is byte-stable.
inline nlohmann::ordered_json to_json(const VerifyReport& report, bool include_timings = false) {
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const auto& c : report.claims) {
    nlohmann::ordered_json j;
    j["claim_id"] = c.claim_id;
    j["paper_ref"] = c.statement;
    j["params_range"] = c.params_range;
    j["status"] = std::string(to_string(c.status));
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    if (c.note) j["note"] = *c.note;
    if (include_timings) j["wall_time_ms"] = c.wall_time_ms;
    claims.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["scope"] = std::string(to_string(report.scope));
  out["deep"] = report.deep;
  out["passed"] = report.count(ClaimStatus::pass);
  out["failed"] = report.count(ClaimStatus::fail);
  out["resource_errors"] = report.count(ClaimStatus::resource_error);
  out["claims"] = std::move(claims);
  return out;
}

/// Human-readable summary table.
inline std::string summary_table(const VerifyReport& report) {
  std::size_t width = 8;
  for (const auto& c : report.claims) width = std::max(width, c.claim_id.size());
  std::ostringstream os;
  const auto pad = [&](const std::string& s) { return s + std::string(width - s.size() + 2, ' '); };
  os << pad("claim") << "status          ms\n";
  for (const auto& c : report.claims) {
    std::string status(to_string(c.status));
    status.resize(16, ' ');
    os << pad(c.claim_id) << status << c.wall_time_ms << '\n';
    if (c.counterexample) os << "    counterexample: " << *c.counterexample << '\n';
    if (c.note) os << "    note: " << *c.note << '\n';
  }
  os << report.count(ClaimStatus::pass) << " passed, " << report.count(ClaimStatus::fail) << " failed, "
     << report.count(ClaimStatus::resource_error) << " resource errors\n";
  return os.str();
}

}  // namespace skelideal
