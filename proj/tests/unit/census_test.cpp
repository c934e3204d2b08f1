#include <gtest/gtest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "oracles.hpp"
#include "vulnfactory/census.hpp"
#include "vulnfactory/errors.hpp"

namespace vf = vulnfactory;

TEST(TotalAfter, BaseAndSubstitution) {
    EXPECT_EQ(vf::total_after(0), 11);
    EXPECT_EQ(vf::total_after(3), 26);
}

TEST(TotalAfter, MillionMatchesAccumulationOracle) {
    // Frozen from oracle::accumulate_total(1'000'000).
    EXPECT_EQ(oracle::accumulate_total(1'000'000), 5000011);
    EXPECT_EQ(vf::total_after(1'000'000), 5000011);
}

TEST(TotalAfter, MatchesMaterializedSet) {
    for (std::size_t k : {0u, 1u, 2u, 7u, 40u}) {
        EXPECT_EQ(vf::total_after(k), oracle::materialize(k).size()) << "k=" << k;
    }
}

TEST(TotalAfter, NegativeRejected) { EXPECT_THROW((void)vf::total_after(-1), vf::DomainError); }

TEST(CensusAfter, ReportFieldsAgree) {
    const vf::CensusReport r = vf::census_after(4);
    EXPECT_EQ(r.base_count, 11);
    EXPECT_EQ(r.per_module, 5);
    EXPECT_EQ(r.generated, 20);
    EXPECT_EQ(r.total, r.base_count + r.per_module * r.k);
}

TEST(MinIterationsExceeding, Examples) {
    // Frozen from oracle::scan_min_iterations.
    EXPECT_EQ(oracle::scan_min_iterations(100), 18);
    EXPECT_EQ(oracle::scan_min_iterations(11), 1);
    EXPECT_EQ(vf::min_iterations_exceeding(100), 18);
    EXPECT_EQ(vf::total_after(18), 101);
    EXPECT_EQ(vf::min_iterations_exceeding(10), 0);
    EXPECT_EQ(vf::min_iterations_exceeding(11), 1);
}

TEST(MinIterationsExceeding, AgreesWithLinearScan) {
    for (int c = 0; c <= 2000; ++c) {
        ASSERT_EQ(vf::min_iterations_exceeding(c), oracle::scan_min_iterations(c)) << "C=" << c;
    }
}

TEST(IsDistinct, Examples) {
    const auto m7 = vf::module_vulnerabilities(7);
    const auto m42 = vf::module_vulnerabilities(42);
    EXPECT_TRUE(vf::is_distinct(m7[0], m42[0]));
    EXPECT_FALSE(vf::is_distinct(m7[0], m7[0]));
    EXPECT_TRUE(vf::is_distinct(m7[0], m7[1]));
}

TEST(IsDistinct, BaseEntriesPairwiseDistinct) {
    const auto base = vf::base_catalog();
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = 0; j < base.size(); ++j) {
            EXPECT_EQ(vf::is_distinct(base[i], base[j]), i != j);
        }
    }
}

TEST(IsDistinctProperty, CrossModulePairs) {
    for (int m = 0; m <= 50; ++m) {
        const auto vm = vf::module_vulnerabilities(m);
        for (int n = m + 1; n <= 50; ++n) {
            const auto vn = vf::module_vulnerabilities(n);
            for (const auto& a : vm) {
                for (const auto& b : vn) {
                    ASSERT_TRUE(vf::is_distinct(a, b)) << m << " vs " << n;
                    ASSERT_TRUE(vf::is_distinct(b, a));
                }
            }
        }
    }
}

TEST(Assignability, GeneratedEntriesMeetAllCriteria) {
    for (const auto& v : vf::render_module(3).vulns) {
        const auto verdict = vf::is_cve_assignable(v);
        EXPECT_TRUE(verdict.recognized_cwe);
        EXPECT_TRUE(verdict.identifiable_component);
        EXPECT_TRUE(verdict.independently_fixable);
        EXPECT_TRUE(verdict.assignable());
    }
}

TEST(Assignability, EmptyComponentFailsCriterionTwo) {
    auto v = vf::module_vulnerabilities(3)[0];
    v.component.name.clear();
    const auto verdict = vf::is_cve_assignable(v);
    EXPECT_FALSE(verdict.identifiable_component);
    EXPECT_FALSE(verdict.assignable());
    EXPECT_TRUE(verdict.recognized_cwe);
}

TEST(Assignability, BaseIntegerOverflowAssignable) {
    const auto b4 = vf::base_catalog()[3];
    ASSERT_EQ(b4.cwe.id, 190);
    EXPECT_TRUE(vf::is_cve_assignable(b4).assignable());
    for (const auto& b : vf::base_catalog()) {
        EXPECT_TRUE(vf::is_cve_assignable(b).assignable()) << b.cwe.id;
    }
}

TEST(Assignability, UnknownCweFailsCriterionOne) {
    auto v = vf::module_vulnerabilities(1)[2];
    v.cwe = vf::CweClass{79, "XSS"};
    EXPECT_FALSE(vf::is_cve_assignable(v).recognized_cwe);
}

TEST(Assignability, SharedFileFailsCriterionThree) {
    auto v = vf::module_vulnerabilities(5)[0];
    v.location.file = vf::module_file_name(6);
    const auto verdict = vf::is_cve_assignable(v);
    EXPECT_TRUE(verdict.identifiable_component);
    EXPECT_FALSE(verdict.independently_fixable);
}

TEST(Assignability, MalformedComponentName) {
    auto v = vf::module_vulnerabilities(5)[0];
    for (const char* bad : {"vuln_module_", "vuln_module_05", "module_5", "vuln_module_5x"}) {
        v.component.name = bad;
        EXPECT_FALSE(vf::is_cve_assignable(v).identifiable_component) << bad;
    }
}

TEST(Enumerate, RoundTripExamples) {
    const vf::VulnId id = vf::enumerate(3, 2);
    EXPECT_EQ(std::get<vf::GeneratedVulnId>(id), (vf::GeneratedVulnId{3, 2}));
    EXPECT_EQ(vf::enumerate_inverse(id), (std::pair<vf::BigInt, int>{3, 2}));
    EXPECT_EQ(std::get<vf::GeneratedVulnId>(vf::enumerate(0, 1)), (vf::GeneratedVulnId{0, 1}));
}

TEST(Enumerate, Domain) {
    EXPECT_THROW((void)vf::enumerate_inverse(vf::VulnId{vf::BaseVulnId{5}}), vf::DomainError);
    EXPECT_THROW((void)vf::enumerate(0, 0), vf::DomainError);
    EXPECT_THROW((void)vf::enumerate(0, 6), vf::DomainError);
    EXPECT_THROW((void)vf::enumerate(-1, 1), vf::DomainError);
}

TEST(EnumerateProperty, BijectionOnSampledDomain) {
    std::unordered_set<std::string> seen;
    for (int n = 0; n <= 1000; ++n) {
        for (int i = 1; i <= 5; ++i) {
            const vf::VulnId id = vf::enumerate(n, i);
            ASSERT_EQ(vf::enumerate_inverse(id), (std::pair<vf::BigInt, int>{n, i}));
            ASSERT_TRUE(seen.insert(vf::to_string(id)).second) << vf::to_string(id);
        }
    }
    EXPECT_EQ(seen.size(), 1001u * 5u);
}

TEST(SurvivingGrowth, Examples) {
    EXPECT_EQ(vf::surviving_growth(vf::InvalidationSet({2}), 10), 51);
    for (int k : {0, 1, 1000}) {
        EXPECT_EQ(vf::surviving_growth(vf::InvalidationSet({1, 2, 3, 4, 5}), k), 11);
        EXPECT_EQ(vf::surviving_growth(vf::InvalidationSet({1, 2, 3, 4, 5}, 4), k), 7);
        EXPECT_EQ(vf::surviving_growth(vf::InvalidationSet({1, 2, 3, 4, 5}, 50), k), 0);
    }
    EXPECT_EQ(vf::surviving_growth(vf::InvalidationSet({}, 100), 1000), 4911);
}

TEST(SurvivingGrowth, MatchesExplicitSetRemoval) {
    // Frozen from oracle::explicit_survivors(1000, {}, 100).
    EXPECT_EQ(oracle::explicit_survivors(1000, {}, 100), 4911u);
    const std::vector<std::set<int>> column_sets = {{}, {2}, {1, 5}, {1, 2, 3}, {1, 2, 3, 4}, {1, 2, 3, 4, 5}};
    for (const auto& cols : column_sets) {
        vf::InvalidationSet inv;
        for (int c : cols) {
            inv.invalidate_column(c);
        }
        for (std::size_t k : {0u, 3u, 25u}) {
            for (std::size_t s : {0u, 7u, 40u, 500u}) {
                inv.set_finite_instances(s);
                ASSERT_EQ(vf::surviving_growth(inv, k), oracle::explicit_survivors(k, cols, s))
                    << "|I|=" << cols.size() << " k=" << k << " s=" << s;
            }
        }
    }
}

TEST(SurvivingGrowthProperty, Monotonicity) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> kdist(0, 5000);
    std::uniform_int_distribution<int> sdist(0, 20000);
    for (int trial = 0; trial < 300; ++trial) {
        const int k = kdist(rng);
        const int s = sdist(rng);
        vf::BigInt previous = -1;
        vf::InvalidationSet inv({}, s);
        for (int cols = 0; cols <= 5; ++cols) {
            if (cols > 0) {
                inv.invalidate_column(cols);
            }
            const vf::BigInt now = vf::surviving_growth(inv, k);
            if (previous >= 0) {
                ASSERT_LE(now, previous);
            }
            previous = now;
            ASSERT_LE(vf::surviving_growth(vf::InvalidationSet({}, s + 1), k),
                      vf::surviving_growth(vf::InvalidationSet({}, s), k));
            ASSERT_GE(vf::surviving_growth(inv, k + 1), vf::surviving_growth(inv, k));
        }
    }
}

TEST(IsUnbounded, Examples) {
    EXPECT_TRUE(vf::is_unbounded(vf::InvalidationSet({}, 1'000'000)));
    EXPECT_TRUE(vf::is_unbounded(vf::InvalidationSet({1, 2, 3, 4})));
    EXPECT_FALSE(vf::is_unbounded(vf::InvalidationSet({1, 2, 3, 4, 5})));
}

TEST(IsUnboundedProperty, WitnessExistsForEveryBound) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> cdist(0, 1'000'000);
    std::uniform_int_distribution<int> sdist(0, 1'000'000);
    std::uniform_int_distribution<int> coldist(0, 4);
    for (int trial = 0; trial < 500; ++trial) {
        vf::InvalidationSet inv({}, sdist(rng));
        const int cols = coldist(rng);
        for (int c = 1; c <= cols; ++c) {
            inv.invalidate_column(c);
        }
        const vf::BigInt bound = cdist(rng);
        const auto k = vf::min_iterations_surviving_exceeding(inv, bound);
        ASSERT_TRUE(k.has_value());
        ASSERT_GT(vf::surviving_growth(inv, *k), bound);
        if (*k > 0) {
            ASSERT_LE(vf::surviving_growth(inv, *k - 1), bound);
        }
    }
    EXPECT_FALSE(vf::min_iterations_surviving_exceeding(vf::InvalidationSet({1, 2, 3, 4, 5}), 0));
}

TEST(InvalidationSet, RejectsBadInput) {
    EXPECT_THROW(vf::InvalidationSet({0}), vf::DomainError);
    EXPECT_THROW(vf::InvalidationSet({6}), vf::DomainError);
    EXPECT_THROW(vf::InvalidationSet({}, -1), vf::DomainError);
    vf::InvalidationSet inv({3, 3});
    EXPECT_EQ(inv.column_count(), 1u);
    EXPECT_TRUE(inv.column_invalidated(3));
}
