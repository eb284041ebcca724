#include <doctest.h>

#include <cmath>

#include "cryassess/grading.hpp"
#include "checks.hpp"
#include "fixtures.hpp"

using namespace cry;

TEST_CASE("grade letters map levels monotonically, A best") {
    CHECK(grade_of(4) == Grade::A);
    CHECK(grade_of(3) == Grade::B);
    CHECK(grade_of(2) == Grade::C);
    CHECK(grade_of(1) == Grade::D);
    CHECK(grade_of(0) == Grade::E);
    CHECK_THROWS_AS(grade_of(5), std::out_of_range);
    CHECK_THROWS_AS(grade_of(-1), std::out_of_range);
}

TEST_CASE("overall grade distributions across the three quarters") {
    auto cohort = fixtures::paper_cohort();

    auto q1 = grade_distribution(cohort, 1);
    REQUIRE(q1.size() == 1);
    CHECK(q1[0].group == "overall");
    CHECK(q1[0].population == 4000);
    CHECK_NEAR(q1[0].proportions[4] * 100.0, 26.67, 0.01);

    auto q2 = grade_distribution(cohort, 2);
    CHECK_NEAR(q2[0].proportions[4] * 100.0, 60.725, 0.001);
    CHECK(q2[0].proportions[0] == 0.0);  // nobody at grade E in quarter 2

    auto q3 = grade_distribution(cohort, 3);
    CHECK_NEAR(q3[0].proportions[4] * 100.0, 70.1, 0.001);
    CHECK(q3[0].proportions[0] == 0.0);

    double sum = 0;
    for (double p : q1[0].proportions) sum += p;
    CHECK(std::abs(sum - 1.0) < 1e-12);
}

TEST_CASE("grade-A share of a quarter equals the column-4 mass of the incoming cross-tab") {
    auto cohort = fixtures::paper_cohort();
    auto m = progression_matrix(cohort, 1, 2);

    long long level4_in_q2 = 0;
    for (std::size_t i = 0; i < m.row_levels.size(); ++i)
        level4_in_q2 += m.counts[i].back();  // column 4
    CHECK(level4_in_q2 == 2429);

    auto q2 = grade_distribution(cohort, 2);
    CHECK(q2[0].proportions[4] ==
          static_cast<double>(level4_in_q2) / static_cast<double>(m.paired_children));
}

TEST_CASE("per-state distribution on a hand-built cohort") {
    // 45 West Bengal children, 4 at grade A: 8.89% to the displayed precision.
    std::vector<AssessmentRecord> records;
    for (int i = 0; i < 45; ++i) {
        AssessmentRecord r;
        r.child_id = "wb" + std::to_string(i);
        r.state = State::WestBengal;
        r.quarter = 1;
        if (i < 4) r.improvements.bits = {1, 1, 1, 1};
        records.push_back(r);
    }
    AssessmentRecord other;
    other.child_id = "mn";
    other.state = State::Manipur;
    other.quarter = 1;
    records.push_back(other);

    auto cohort = build_cohort(records).cohort;
    auto dists = grade_distribution(cohort, 1, GroupBy::ByState);
    REQUIRE(dists.size() == 2);  // sorted by label: Manipur, West Bengal
    CHECK(dists[0].group == "Manipur");
    CHECK(dists[1].group == "West Bengal");
    CHECK(dists[1].population == 45);
    CHECK(std::round(dists[1].proportions[4] * 10000.0) / 100.0 == 8.89);
}

TEST_CASE("grouped progression by sex reproduces the published table") {
    auto cohort = fixtures::sex_groups_cohort();

    auto q1q2 = grouped_progression(cohort, 1, 2, GroupBy::BySex);
    REQUIRE(q1q2.size() == 2);
    CHECK_NEAR(q1q2.at("Female").s_star, 0.217, 0.001);
    CHECK_NEAR(q1q2.at("Male").s_star, 0.218, 0.001);

    auto q2q3 = grouped_progression(cohort, 2, 3, GroupBy::BySex);
    CHECK_NEAR(q2q3.at("Female").s_star, 0.125, 0.001);
    CHECK_NEAR(q2q3.at("Male").s_star, 0.119, 0.001);
}

TEST_CASE("grouped progression by state reproduces the published table") {
    auto cohort = fixtures::state_groups_cohort();

    auto q1q2 = grouped_progression(cohort, 1, 2, GroupBy::ByState);
    REQUIRE(q1q2.size() == 4);
    CHECK_NEAR(q1q2.at("Jammu & Kashmir").s_star, 0.096, 0.001);
    CHECK_NEAR(q1q2.at("Jharkhand").s_star, 0.171, 0.001);
    CHECK_NEAR(q1q2.at("Manipur").s_star, 0.105, 0.001);
    CHECK_NEAR(q1q2.at("West Bengal").s_star, 0.260, 0.001);

    auto q2q3 = grouped_progression(cohort, 2, 3, GroupBy::ByState);
    CHECK_NEAR(q2q3.at("Jammu & Kashmir").s_star, 0.187, 0.001);
    CHECK_NEAR(q2q3.at("Jharkhand").s_star, 0.163, 0.001);
    CHECK_NEAR(q2q3.at("Manipur").s_star, 0.042, 0.001);
    CHECK_NEAR(q2q3.at("West Bengal").s_star, 0.155, 0.001);
}

TEST_CASE("groups without paired children are omitted") {
    std::vector<AssessmentRecord> records;
    AssessmentRecord r;
    r.child_id = "f1";
    r.sex = Sex::Female;
    r.quarter = 1;
    records.push_back(r);
    r.quarter = 2;
    records.push_back(r);
    r.child_id = "m1";
    r.sex = Sex::Male;
    r.quarter = 1;
    records.push_back(r);  // male child never seen again
    auto cohort = build_cohort(records).cohort;

    auto scores = grouped_progression(cohort, 1, 2, GroupBy::BySex);
    CHECK(scores.size() == 1);
    CHECK(scores.count("Female") == 1);
}

TEST_CASE("empty quarter is an error") {
    AssessmentRecord r;
    r.child_id = "c";
    r.quarter = 1;
    auto cohort = build_cohort({r}).cohort;
    CHECK_THROWS_AS(grade_distribution(cohort, 3), std::invalid_argument);
}
