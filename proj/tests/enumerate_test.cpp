/*
   Copyright 2026 The wreath-eulerian Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <set>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "wreath/enumerate.hpp"

namespace wreath {
namespace {

using CP = ColoredPermutation;
using Poly = IntPolynomial;

CP P(unsigned alpha, const char* text) { return CP::parse(alpha, text); }

template <class Range>
std::vector<CP> collect(const Range& r) {
  return {r.begin(), r.end()};
}

Poly to_poly(const std::vector<std::uint64_t>& c) { return Poly(std::vector<BigInt>(c.begin(), c.end())); }

std::vector<CP> sorted_oracle(unsigned alpha, unsigned n, int last_color) {
  std::vector<CP> out;
  for (auto& e : oracle::all_elements(alpha, n, last_color)) out.push_back(CP::validate(alpha, e.window, e.colors));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Streams, QuotientExamples) {
  EXPECT_EQ(collect(iterate_quotient_reps(2, 2)),
            (std::vector<CP>{P(2, "1^0 2^0"), P(2, "1^1 2^0"), P(2, "2^0 1^0"), P(2, "2^1 1^0")}));
  const auto s4 = collect(iterate_quotient_reps(1, 4));
  EXPECT_EQ(s4.size(), 24u);
  EXPECT_EQ(s4.front(), identity(1, 4));
  const auto q33 = collect(iterate_quotient_reps(3, 3));
  ASSERT_EQ(q33.size(), 54u);
  for (std::size_t i = 0; i < q33.size(); ++i) {
    EXPECT_TRUE(is_quotient_rep(q33[i]));
    for (std::size_t j = i + 1; j < q33.size(); ++j) EXPECT_FALSE(same_coset(q33[i], q33[j]));
  }
}

TEST(Streams, FullAndFixedExamples) {
  EXPECT_EQ(collect(iterate_full_group(2, 2)).size(), 8u);
  EXPECT_EQ(collect(iterate_fixed_last_color(2, 2, 0)), collect(iterate_quotient_reps(2, 2)));
  const auto f = collect(iterate_fixed_last_color(3, 2, 1));
  EXPECT_EQ(f, (std::vector<CP>{P(3, "1^0 2^1"), P(3, "1^1 2^1"), P(3, "1^2 2^1"), P(3, "2^0 1^1"),
                                P(3, "2^1 1^1"), P(3, "2^2 1^1")}));
  EXPECT_THROW(iterate_fixed_last_color(3, 2, 3), ParameterError);
}

TEST(Streams, LexicographicDuplicateFreeAndComplete) {
  for (unsigned alpha = 1; alpha <= 3; ++alpha) {
    for (unsigned n = 1; n <= 4; ++n) {
      const std::vector<std::pair<Domain, int>> domains = {
          {Domain::quotient(), 0}, {Domain::full(), -1}, {Domain::fixed_last_color(alpha - 1), int(alpha - 1)}};
      for (const auto& [domain, last] : domains) {
        const auto got = collect(ElementRange(alpha, n, domain));
        ASSERT_EQ(BigInt(got.size()), domain_cardinality(alpha, n, domain));
        ASSERT_TRUE(std::is_sorted(got.begin(), got.end()));
        ASSERT_EQ(std::set<CP>(got.begin(), got.end()).size(), got.size());
        ASSERT_EQ(got, sorted_oracle(alpha, n, last));
      }
    }
  }
}

TEST(Streams, CardinalityFormulas) {
  EXPECT_EQ(domain_cardinality(2, 9, Domain::quotient()), 92897280);
  EXPECT_EQ(domain_cardinality(2, 7, Domain::quotient()), 322560);
  EXPECT_EQ(domain_cardinality(2, 5, Domain::full()), 3840);
  EXPECT_EQ(domain_cardinality(2, 20, Domain::quotient()).str(), "1275541328062914232320000");
  EXPECT_GT(domain_cardinality(2, 21, Domain::quotient()), BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST(Streams, CapRefusesWithExactCount) {
  try {
    iterate_quotient_reps(2, 5, 100);
    FAIL();
  } catch (const ResourceCapExceeded& e) {
    EXPECT_EQ(e.required(), 1920);
    EXPECT_NE(std::string(e.what()).find("1920"), std::string::npos);
  }
  EXPECT_THROW(flag_eulerian_quotient(2, 12), ResourceCapExceeded);  // 2^11 * 12! > 10^9
  EXPECT_NO_THROW(iterate_quotient_reps(2, 5, 1920));
}

TEST(Shards, PartitionTheDomain) {
  for (unsigned threads : {2u, 3u, 8u, 64u}) {
    for (const Domain& d : {Domain::quotient(), Domain::full(), Domain::fixed_last_color(1)}) {
      const unsigned alpha = 3, n = 4;
      std::vector<CP> all;
      for (const Shard& s : plan_shards(alpha, n, d, threads)) {
        for_each_element(alpha, n, d, [&](const ColoredView& v) { all.push_back(CP::from_view(v)); }, s);
      }
      std::sort(all.begin(), all.end());
      ASSERT_EQ(all, collect(ElementRange(alpha, n, d)));
    }
  }
}

TEST(Shards, MergedResultIndependentOfWorkerCount) {
  for (unsigned alpha = 1; alpha <= 3; ++alpha) {
    for (unsigned n = 1; n <= 6; ++n) {
      const auto ref = statistic_polynomial(alpha, n, Domain::quotient(), Statistic::flag, {kDefaultElementCap, 1});
      for (unsigned threads : {2u, 4u, 7u}) {
        ASSERT_EQ(statistic_polynomial(alpha, n, Domain::quotient(), Statistic::flag, {kDefaultElementCap, threads}),
                  ref);
        ASSERT_EQ(statistic_polynomial(alpha, n, Domain::full(), Statistic::colored_descent,
                                       {kDefaultElementCap, threads}),
                  statistic_polynomial(alpha, n, Domain::full(), Statistic::colored_descent));
      }
    }
  }
}

TEST(Polynomials, ColoredEulerianExamples) {
  // Brute force over the four representatives 1^0 2^0, 1^1 2^0, 2^0 1^0, 2^1 1^0.
  const auto q22 = oracle::all_elements(2, 2, 0);
  EXPECT_EQ(to_poly(oracle::distribution(q22, 1, oracle::descents)), Poly({1, 3}));
  EXPECT_EQ(colored_eulerian(2, 2).polynomial, Poly({1, 3}));
  EXPECT_EQ(colored_eulerian(1, 3).polynomial, Poly({1, 4, 1}));
  for (unsigned alpha = 1; alpha <= 6; ++alpha) EXPECT_EQ(colored_eulerian(alpha, 1).polynomial, Poly({1}));
}

TEST(Polynomials, FlagQuotientExamples) {
  const auto q32 = oracle::all_elements(2, 3, 0);
  ASSERT_EQ(q32.size(), 24u);
  const Poly brute = to_poly(oracle::distribution(q32, 4, [](const oracle::Element& e) { return oracle::flag(e, 2); }));
  EXPECT_EQ(brute, Poly({1, 6, 10, 6, 1}));
  const StatReport f32 = flag_eulerian_quotient(2, 3);
  EXPECT_EQ(f32.polynomial, brute);
  EXPECT_EQ(f32.polynomial.nominal_degree(), 4u);
  EXPECT_TRUE(f32.palindromic);
  for (unsigned n = 1; n <= 7; ++n) EXPECT_EQ(flag_eulerian_quotient(1, n).polynomial, classical_eulerian(n));
  EXPECT_EQ(flag_eulerian_quotient(3, 2).cardinality, 6);
}

TEST(Polynomials, FlagFullExamples) {
  const auto g22 = oracle::all_elements(2, 2);
  const Poly brute = to_poly(oracle::distribution(g22, 3, [](const oracle::Element& e) { return oracle::flag(e, 2); }));
  EXPECT_EQ(brute, Poly({1, 3, 3, 1}));
  EXPECT_EQ(flag_eulerian_full(2, 2).polynomial, brute);
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(flag_eulerian_full(1, n).polynomial, classical_eulerian(n));
  EXPECT_EQ(flag_eulerian_full(2, 3).cardinality, 48);
}

TEST(Polynomials, AllDomainsMatchBruteForce) {
  for (unsigned alpha = 1; alpha <= 3; ++alpha) {
    for (unsigned n = 1; n <= 5; ++n) {
      if (oracle::power(alpha, n) * oracle::factorial(n) > 30000) continue;
      std::vector<std::pair<Domain, int>> domains = {{Domain::quotient(), 0}, {Domain::full(), -1}};
      for (unsigned b = 0; b < alpha; ++b) domains.push_back({Domain::fixed_last_color(b), int(b)});
      for (const auto& [domain, last] : domains) {
        const auto elems = oracle::all_elements(alpha, n, last);
        const std::size_t flag_max = statistic_maximum(Statistic::flag, alpha, n, domain);
        const auto flags = oracle::distribution(elems, static_cast<unsigned>(flag_max),
                                                [&](const oracle::Element& e) { return oracle::flag(e, alpha); });
        const auto descents = oracle::distribution(elems, n - 1, oracle::descents);
        ASSERT_EQ(statistic_polynomial(alpha, n, domain, Statistic::flag), to_poly(flags));
        ASSERT_EQ(statistic_polynomial(alpha, n, domain, Statistic::colored_descent), to_poly(descents));
        // The nominal degree is attained.
        ASSERT_GT(flags.back(), 0u) << domain.name();
        ASSERT_GT(descents.back(), 0u) << domain.name();
      }
    }
  }
}

TEST(Polynomials, ReportInvariants) {
  for (unsigned alpha = 1; alpha <= 4; ++alpha) {
    for (unsigned n = 1; n <= 5; ++n) {
      const StatReport r = flag_eulerian_quotient(alpha, n);
      EXPECT_EQ(r.cardinality, evaluate(r.polynomial, 1));
      EXPECT_EQ(r.cardinality, domain_cardinality(alpha, n, Domain::quotient()));
      EXPECT_TRUE(r.palindromic);
      EXPECT_EQ(r.domain, Domain::quotient());
      EXPECT_EQ(r.statistic, Statistic::flag);
    }
  }
}

TEST(ClassicalEulerian, RecurrenceValues) {
  EXPECT_EQ(classical_eulerian(1), Poly({1}));
  EXPECT_EQ(classical_eulerian(2), Poly({1, 1}));
  EXPECT_EQ(classical_eulerian(3), Poly({1, 4, 1}));
  EXPECT_EQ(classical_eulerian(4), Poly({1, 11, 11, 1}));
  const auto s4 = oracle::all_elements(1, 4);
  EXPECT_EQ(to_poly(oracle::distribution(s4, 3, oracle::descents)), classical_eulerian(4));
  EXPECT_EQ(evaluate(classical_eulerian(20), 1), factorial(20));
  EXPECT_THROW(classical_eulerian(0), ParameterError);
}

TEST(FlagTable, RowsMatchExpectations) {
  const FlagTable t2 = flag_table(2, 5);
  ASSERT_EQ(t2.rows.size(), 5u);
  EXPECT_EQ(t2.rows[2], Poly({1, 6, 10, 6, 1}));
  const FlagTable t1 = flag_table(1, 6);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(t1.rows[n - 1], classical_eulerian(n));
  for (unsigned alpha = 1; alpha <= 4; ++alpha) {
    const FlagTable t = flag_table(alpha, 5);
    for (std::size_t n = 1; n <= 5; ++n) {
      const Poly& row = t.rows[n - 1];
      EXPECT_EQ(row.nominal_degree(), alpha * (n - 1));
      EXPECT_EQ(row.coefficient(0), 1);
      EXPECT_EQ(evaluate(row, 1), domain_cardinality(alpha, n, Domain::quotient()));
      EXPECT_TRUE(is_palindromic(row));
    }
  }
  EXPECT_THROW(flag_table(2, 0), ParameterError);
}

TEST(Verifiers, Symmetry) {
  for (auto [alpha, n] : {std::pair{3u, 4u}, {1u, 5u}, {4u, 4u}}) {
    const auto v = verify_symmetry(alpha, n);
    EXPECT_TRUE(v.verified);
    EXPECT_TRUE(v.palindromic);
    EXPECT_FALSE(v.pointwise.counterexample);
    EXPECT_EQ(v.pointwise.checked, domain_cardinality(alpha, n, Domain::quotient()));
  }
  EXPECT_EQ(verify_symmetry(4, 4).pointwise.checked, 1536);
}

TEST(Verifiers, Involution) {
  for (unsigned alpha = 1; alpha <= 4; ++alpha) {
    for (unsigned n = 1; n <= 5; ++n) EXPECT_TRUE(verify_involution(alpha, n, {kDefaultElementCap, 3}).verified);
  }
}

TEST(Verifiers, ProductIdentity) {
  const auto checks = verify_product_identity(3);
  ASSERT_EQ(checks.size(), 3u);
  EXPECT_EQ(checks[0].enumerated, Poly({1, 6, 10, 6, 1}));
  for (const auto& c : checks) {
    EXPECT_TRUE(c.holds) << "k=" << c.parameter;
    EXPECT_EQ(c.n, 2 * c.parameter + 1);
  }
  EXPECT_EQ(evaluate(checks[2].enumerated, 1), 322560);
}

TEST(Verifiers, AbrIdentity) {
  const auto checks = verify_abr_identity(5);
  ASSERT_EQ(checks.size(), 5u);
  EXPECT_EQ(checks[1].enumerated, Poly({1, 3, 3, 1}));
  EXPECT_EQ(checks[2].enumerated, binomial_power(3) * Poly({1, 4, 1}));
  for (const auto& c : checks) EXPECT_TRUE(c.holds) << "n=" << c.n;
  EXPECT_EQ(evaluate(checks[4].enumerated, 1), 3840);
}

TEST(Verifiers, CosetInvariance) {
  const auto v23 = verify_coset_invariance(2, 3);
  EXPECT_TRUE(v23.verified);
  EXPECT_EQ(v23.coset_count, 24u);
  const auto v32 = verify_coset_invariance(3, 2);
  EXPECT_TRUE(v32.verified);
  EXPECT_EQ(v32.coset_count, 6u);
  const auto v14 = verify_coset_invariance(1, 4);
  EXPECT_TRUE(v14.verified);
  EXPECT_EQ(v14.coset_count, 24u);
  EXPECT_EQ(v23.over_cosets, colored_eulerian(2, 3).polynomial);
}

// Pointwise failures report the lexicographically first violator even when
// the search is sharded.
TEST(Verifiers, FirstCounterexampleIsDeterministic) {
  auto predicate = [](const ColoredView& w) { return w.colors[0] == 0 || w.window[0] != 2; };
  for (unsigned threads : {1u, 2u, 5u}) {
    const auto v = detail::check_pointwise(3, 4, Domain::quotient(), {kDefaultElementCap, threads}, predicate);
    EXPECT_FALSE(v.verified);
    ASSERT_TRUE(v.counterexample);
    EXPECT_EQ(*v.counterexample, P(3, "2^1 1^0 3^0 4^0"));
  }
}

}  // namespace
}  // namespace wreath
