#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_support.hpp"
#include "xlmhg/enrichment.hpp"
#include "xlmhg/statistic.hpp"

using namespace xlmhg;
using xlmhg::testing::example_list;

TEST(FoldEnrichment, WorkedExample) {
    const RankedList v = example_list();
    EXPECT_DOUBLE_EQ(fold_enrichment(v, 1), 4.0);
    EXPECT_DOUBLE_EQ(fold_enrichment(v, 4), 3.0);
    EXPECT_DOUBLE_EQ(fold_enrichment(v, 6), 8.0 / 3.0);
    EXPECT_DOUBLE_EQ(fold_enrichment(v, 20), 1.0);
}

TEST(FoldEnrichment, DomainErrors) {
    EXPECT_THROW(fold_enrichment(example_list(), 0), DomainError);
    EXPECT_THROW(fold_enrichment(example_list(), 21), DomainError);
    EXPECT_THROW(fold_enrichment(RankedList({0, 0, 0}), 1), DomainError);
}

TEST(EnrichmentScore, PsiOneGivesMaximumFold) {
    const EnrichmentReport r = enrichment_score(example_list(), {0, 20}, 1.0);
    ASSERT_TRUE(r.score);
    EXPECT_DOUBLE_EQ(*r.score, 4.0);
    EXPECT_EQ(*r.score_cutoff, 1);
    EXPECT_EQ(r.candidate_cutoffs.size(), 20U);
}

TEST(EnrichmentScore, PsiAtStatisticGivesFoldAtOptimalCutoff) {
    const double s = compute_statistic(example_list(), {0, 20}).statistic;
    const EnrichmentReport r = enrichment_score(example_list(), {0, 20}, s);
    ASSERT_TRUE(r.score);
    EXPECT_DOUBLE_EQ(*r.score, 8.0 / 3.0);
    EXPECT_EQ(*r.score_cutoff, 6);
}

TEST(EnrichmentScore, IntermediatePsi) {
    const EnrichmentReport r = enrichment_score(example_list(), {0, 20}, 0.04);
    ASSERT_TRUE(r.score);
    EXPECT_DOUBLE_EQ(*r.score, 3.0);
    EXPECT_EQ(*r.score_cutoff, 4);
    EXPECT_NE(std::find(r.candidate_cutoffs.begin(), r.candidate_cutoffs.end(), 6), r.candidate_cutoffs.end());
    EXPECT_EQ(std::find(r.candidate_cutoffs.begin(), r.candidate_cutoffs.end(), 5), r.candidate_cutoffs.end());
}

TEST(EnrichmentScore, RespectsXAndL) {
    const EnrichmentReport r = enrichment_score(example_list(), {3, 5}, 0.05);
    ASSERT_TRUE(r.score);
    EXPECT_EQ(r.candidate_cutoffs, std::vector<std::int64_t>{4});
    EXPECT_DOUBLE_EQ(*r.score, 3.0);
}

TEST(EnrichmentScore, PreconditionViolations) {
    EXPECT_THROW(enrichment_score(example_list(), {0, 20}, 0.01), DomainError);  // below the statistic
    EXPECT_THROW(enrichment_score(example_list(), {0, 20}, 0.0), DomainError);
    EXPECT_THROW(enrichment_score(example_list(), {0, 20}, 1.5), DomainError);
}

TEST(EnrichmentScore, EmptyCandidateSetHasNoScore) {
    // statistic is 1.0 with X > K, so psi = 1 is allowed but nothing qualifies
    const EnrichmentReport r = enrichment_score(example_list(), {6, 20}, 1.0);
    EXPECT_TRUE(r.candidate_cutoffs.empty());
    EXPECT_FALSE(r.score);
    EXPECT_FALSE(r.score_cutoff);
}

TEST(EnrichmentScore, MonotoneInPsiAndBounded) {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 200; ++rep) {
        const RankedList list = xlmhg::testing::random_list(rng, 50, 0.2);
        if (list.ones() == 0) continue;
        const StatResult stat = compute_statistic(list, TestParams::mhg(list), true);
        const auto at_s = enrichment_score(list, TestParams::mhg(list), stat.statistic);
        const auto at_one = enrichment_score(list, TestParams::mhg(list), 1.0);
        double previous = at_s.score.value_or(0.0);
        for (double psi : {0.001, 0.01, 0.05, 0.1, 0.3, 0.7, 1.0}) {
            if (psi < stat.statistic) continue;
            const auto r = enrichment_score(list, TestParams::mhg(list), psi);
            ASSERT_TRUE(r.score);
            ASSERT_GE(*r.score, previous);
            ASSERT_LE(*r.score, *at_one.score);
            previous = *r.score;
        }
    }
}
