#include <optional>

#include <gtest/gtest.h>

#include <skelideal/containment.hpp>

#include "oracles.hpp"

using namespace skelideal;

TEST(ThmAParams, Decomposition) {
  EXPECT_EQ(thm_a_params(2, 3), (ThmAParams{2, 1}));
  EXPECT_EQ(thm_a_params(2, 4), (ThmAParams{2, 0}));
  EXPECT_EQ(thm_a_params(3, 7), (ThmAParams{3, 2}));
  EXPECT_THROW(thm_a_params(0, 3), ParameterError);
  EXPECT_THROW(thm_a_params(2, 0), ParameterError);
}

TEST(ThmAParams, InvariantsHold) {
  for (std::int64_t c = 1; c <= 8; ++c) {
    for (std::int64_t m = 1; m <= 60; ++m) {
      const auto [k, p] = thm_a_params(c, m);
      EXPECT_EQ(k * c - p, m);
      EXPECT_GE(p, 0);
      EXPECT_LT(p, c);
    }
  }
}

TEST(ThmA, Examples) {
  EXPECT_TRUE(thm_a_predicate({3, 2}, 3, 2));
  EXPECT_FALSE(thm_a_predicate({3, 2}, 3, 3));
  EXPECT_FALSE(containment_oracle({3, 2}, 3, 3));
  for (std::int64_t m = 1; m <= 10; ++m) {
    for (std::int64_t r = 1; r <= 10; ++r) EXPECT_EQ(thm_a_predicate({2, 1}, m, r), r <= m);
  }
  EXPECT_THROW(thm_a_predicate({2, 2}, 2, 0), ParameterError);
}

TEST(ThmA, BoundaryEqualityIsContainment) {
  // n=c=2, m=4: k=2, p=0, bound (3*2)/2 = 3 exactly.
  EXPECT_TRUE(thm_a_predicate({2, 2}, 4, 3));
  EXPECT_TRUE(containment_oracle({2, 2}, 4, 3));
  EXPECT_FALSE(thm_a_predicate({2, 2}, 4, 4));
}

TEST(ThmA, MatchesContainmentOracleOnGrid) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned c = 1; c <= n; ++c) {
      for (unsigned m = 1; m <= 6; ++m) {
        for (unsigned r = 1; r <= 6; ++r) {
          EXPECT_EQ(thm_a_predicate({n, c}, m, r), containment_oracle({n, c}, m, r))
              << "n=" << n << " c=" << c << " m=" << m << " r=" << r;
        }
      }
    }
  }
}

TEST(ContainmentOracle, AgreesWithIndependentBruteForce) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned c = 1; c <= n; ++c) {
      for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned r = 1; r <= 4; ++r) {
          EXPECT_EQ(containment_oracle({n, c}, m, r), oracle::containment(n, c, m, r))
              << "n=" << n << " c=" << c << " m=" << m << " r=" << r;
        }
      }
    }
  }
}

TEST(ContainmentOracle, Examples) {
  EXPECT_TRUE(containment_oracle({2, 2}, 2, 1));
  EXPECT_FALSE(containment_oracle({2, 2}, 3, 3));
  EXPECT_TRUE(containment_oracle({3, 2}, 3, 2));
  const auto ce = containment_counterexample({2, 2}, 3, 3);
  ASSERT_TRUE(ce.has_value());
  EXPECT_FALSE(ordinary_member({2, 2}, 3, *ce));
}

TEST(TriangleCriterion, CeilingForm) {
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t r = 1; r <= 12; ++r) {
      EXPECT_EQ(thm_a_predicate({2, 2}, m, r), 2 * r <= (3 * m + 1) / 2) << m << "," << r;
    }
  }
}

TEST(ThmB, Examples) {
  EXPECT_TRUE(thm_b_predicate(2, 3, 2, 3));
  EXPECT_FALSE(thm_b_predicate(2, 3, 3, 5));
  EXPECT_TRUE(symbolic_containment_oracle(3, 2, 3, 3, 5));
  for (std::int64_t m = 1; m <= 5; ++m) {
    for (std::int64_t s = 1; s <= 5; ++s) EXPECT_FALSE(thm_b_predicate(3, 2, m, s));
  }
  EXPECT_THROW(thm_b_predicate(0, 1, 1, 1), ParameterError);
}

TEST(ThmB, SymbolicOracleExamples) {
  for (unsigned m = 1; m <= 5; ++m) EXPECT_TRUE(symbolic_containment_oracle(2, 1, 2, m, 2 * m));
  for (unsigned n = 2; n <= 3; ++n) {
    for (unsigned c = 1; c <= n; ++c) {
      for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned s = 1; s <= m; ++s) EXPECT_TRUE(symbolic_containment_oracle(n, c, c, m, s));
      }
    }
  }
}

TEST(ThmB, SoundOnGrid) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned c = 1; c <= n; ++c) {
      for (unsigned d = c; d <= n; ++d) {
        for (unsigned m = 1; m <= 5; ++m) {
          for (unsigned s = 1; s <= 5; ++s) {
            if (thm_b_predicate(c, d, m, s)) { EXPECT_TRUE(symbolic_containment_oracle(n, c, d, m, s)); }
          }
        }
      }
    }
  }
}

TEST(Verdict, OrdinaryAndSymbolic) {
  const auto v = query_containment(3, 2, 3, 2, true);
  EXPECT_TRUE(v.fast_path);
  EXPECT_EQ(v.oracle, std::optional<bool>(true));
  EXPECT_EQ(v.agree, std::optional<bool>(true));

  const auto w = query_symbolic_containment(3, 2, 3, 3, 5, true);
  EXPECT_FALSE(w.fast_path);
  EXPECT_EQ(w.oracle, std::optional<bool>(true));
  EXPECT_EQ(w.agree, std::optional<bool>(false));

  const auto fast_only = query_containment(2, 2, 2, 2, false);
  EXPECT_FALSE(fast_only.fast_path);
  EXPECT_FALSE(fast_only.oracle.has_value());
}

TEST(Resurgence, ClosedForm) {
  EXPECT_EQ(resurgence({2, 2}), Rational(4, 3));
  EXPECT_EQ(resurgence({3, 2}), Rational(3, 2));
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(resurgence({n, 1}), Rational(1));
  EXPECT_EQ(to_string(Rational(4, 3)), "4/3");
  EXPECT_EQ(to_string(Rational(6, 6)), "1");
}

TEST(Resurgence, Witnesses) {
  EXPECT_EQ(resurgence_witness({2, 2}, 5), (ResurgenceWitness{5, 10, 8, Rational(5, 4)}));
  EXPECT_EQ(resurgence_witness({2, 2}, 20), (ResurgenceWitness{20, 40, 31, Rational(40, 31)}));
  EXPECT_EQ(resurgence_witness({3, 2}, 3), (ResurgenceWitness{3, 6, 5, Rational(6, 5)}));
  EXPECT_THROW(resurgence_witness({2, 2}, 0), ParameterError);
}

TEST(Resurgence, WitnessesAreNoncontainmentsBelowRho) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned c = 1; c <= n; ++c) {
      const SimplicialSpec s(n, c);
      const auto rho = resurgence(s);
      for (std::int64_t k = 1; k <= 100; ++k) {
        const auto w = resurgence_witness(s, k);
        EXPECT_FALSE(thm_a_predicate(s, w.m, w.r));
        EXPECT_LT(w.ratio, rho);
        EXPECT_LE(rho - w.ratio, rho / Rational(k));
        if (n <= 3 && w.m <= 6) {
          EXPECT_FALSE(containment_oracle(s, static_cast<unsigned>(w.m), static_cast<unsigned>(w.r)));
        }
      }
    }
  }
}

TEST(Resurgence, EmpiricalSupremum) {
  const auto tri12 = empirical_resurgence_sup({2, 2}, 12, 12);
  ASSERT_TRUE(tri12.ratio.has_value());
  EXPECT_EQ(*tri12.ratio, Rational(5, 4));
  EXPECT_EQ(tri12.argmax_m, 10);
  EXPECT_EQ(tri12.argmax_r, 8);

  const auto tri30 = empirical_resurgence_sup({2, 2}, 30, 30);
  EXPECT_EQ(*tri30.ratio, Rational(30, 23));
  EXPECT_LT(*tri30.ratio, Rational(4, 3));

  const auto tet = empirical_resurgence_sup({3, 3}, 10, 10);
  EXPECT_EQ(*tet.ratio, Rational(4, 3));
  EXPECT_EQ(tet.argmax_m, 8);
  EXPECT_EQ(tet.argmax_r, 6);
  EXPECT_LT(*tet.ratio, Rational(3, 2));

  for (unsigned n = 1; n <= 4; ++n) {
    const auto ci = empirical_resurgence_sup({n, 1}, 10, 10);
    ASSERT_TRUE(ci.ratio.has_value());
    EXPECT_LT(*ci.ratio, Rational(1));
  }
  const auto none = empirical_resurgence_sup({2, 1}, 5, 1);
  EXPECT_FALSE(none.ratio.has_value());
}

TEST(Resurgence, OracleSweepMatchesClosedFormSweep) {
  const auto fast = empirical_resurgence_sup({2, 2}, 8, 8, false);
  const auto slow = empirical_resurgence_sup({2, 2}, 8, 8, true);
  EXPECT_EQ(fast.ratio, slow.ratio);
  EXPECT_EQ(fast.argmax_m, slow.argmax_m);
  EXPECT_EQ(fast.noncontainment_pairs, slow.noncontainment_pairs);

  // Independent sweep with the test-only oracle.
  std::optional<Rational> best;
  for (unsigned m = 1; m <= 6; ++m) {
    for (unsigned r = 1; r <= 6; ++r) {
      if (!oracle::containment(2, 2, m, r) && (!best || Rational(m, r) > *best)) best = Rational(m, r);
    }
  }
  EXPECT_EQ(empirical_resurgence_sup({2, 2}, 6, 6).ratio, best);
}

TEST(Resurgence, StrictnessAndGuaranteeInBox) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned c = 1; c <= n; ++c) {
      const SimplicialSpec s(n, c);
      const auto rho = resurgence(s);
      for (std::int64_t m = 1; m <= 25; ++m) {
        for (std::int64_t r = 1; r <= 25; ++r) {
          const bool contained = thm_a_predicate(s, m, r);
          if (!contained) { EXPECT_LT(Rational(m, r), rho); }
          if (Rational(m, r) > rho) { EXPECT_TRUE(contained); }
        }
      }
    }
  }
}

TEST(Resurgence, ContainmentAtCTimesR) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned c = 1; c <= n; ++c) {
      for (std::int64_t r = 1; r <= 6; ++r) {
        EXPECT_TRUE(thm_a_predicate({n, c}, c * r, r));
        EXPECT_LE(min_containing_m({n, c}, r), c * r);
      }
    }
  }
}

TEST(Resurgence, ReportAndBudget) {
  const auto rep = resurgence_report({2, 2}, 5, 12, 12);
  EXPECT_EQ(rep.rho, Rational(4, 3));
  ASSERT_EQ(rep.witnesses.size(), 5u);
  EXPECT_EQ(rep.witnesses[4].ratio, Rational(5, 4));
  ASSERT_EQ(rep.boundary.size(), 12u);
  // least m with 2r <= ceil(3m/2)
  EXPECT_EQ(rep.boundary[0], (std::pair<std::int64_t, std::int64_t>{1, 1}));
  EXPECT_EQ(rep.boundary[1], (std::pair<std::int64_t, std::int64_t>{2, 3}));
  EXPECT_EQ(rep.boundary[2], (std::pair<std::int64_t, std::int64_t>{3, 4}));
  Limits tight;
  tight.max_candidates = 10;
  EXPECT_THROW(empirical_resurgence_sup({2, 2}, 12, 12, false, tight), ResourceError);
}
