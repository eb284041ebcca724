#include "fixtures.hpp"

#include <cassert>
#include <cmath>
#include <deque>
#include <stdexcept>

#include <fmt/format.h>

namespace fixtures {

using cry::AssessmentRecord;
using cry::Cohort;
using cry::ImprovementFlags;
using cry::Sex;
using cry::State;

const std::map<int, std::array<long long, 5>> kQ1LagCounts = {
    {-7, {2, 2, 21, 36, 3}},      {-6, {5, 2, 49, 129, 26}},
    {-5, {5, 5, 107, 173, 70}},   {-4, {125, 13, 93, 197, 246}},
    {-3, {225, 35, 122, 161, 239}}, {-2, {342, 39, 156, 202, 195}},
    {-1, {214, 16, 111, 104, 175}}, {0, {10, 18, 93, 101, 102}},
};

const std::map<int, std::array<double, 5>> kQ1LagScores = {
    {-7, {0.00, 0.06, 0.39, 0.95, 1.00}}, {-6, {0.00, 0.03, 0.27, 0.88, 1.00}},
    {-5, {0.00, 0.03, 0.33, 0.81, 1.00}}, {-4, {0.00, 0.20, 0.34, 0.64, 1.00}},
    {-3, {0.00, 0.33, 0.49, 0.69, 1.00}}, {-2, {0.00, 0.41, 0.57, 0.79, 1.00}},
    {-1, {0.00, 0.37, 0.55, 0.72, 1.00}}, {0, {0.00, 0.09, 0.37, 0.69, 1.00}},
};

// Chosen so the per-level panel totals close: quarter-1 level populations
// 932/131/758/1112/1067 minus the lag-table column sums leave exactly
// these 31 positive-lag children.
const std::array<long long, 5> kPositiveLagLevelCounts = {4, 1, 6, 9, 11};

const std::map<int, std::array<long long, 4>> kQ1Q2Transitions = {
    {0, {48, 83, 47, 754}}, {1, {21, 24, 19, 67}},   {2, {25, 173, 161, 399}},
    {3, {24, 208, 283, 597}}, {4, {22, 178, 255, 612}},
};

const std::map<int, std::array<long long, 4>> kQ2Q3Transitions = {
    {1, {13, 18, 16, 93}},  {2, {13, 150, 239, 264}},
    {3, {9, 77, 267, 412}}, {4, {19, 76, 299, 2035}},
};

const std::map<int, std::array<double, 4>> kQ1Q2RatesPercent = {
    {0, {5.15, 8.91, 5.04, 80.90}},  {1, {16.03, 18.32, 14.50, 51.15}},
    {2, {3.30, 22.82, 21.24, 52.64}}, {3, {2.16, 18.71, 25.45, 53.69}},
    {4, {2.06, 16.68, 23.90, 57.36}},
};

const std::map<int, std::array<double, 4>> kQ2Q3RatesPercent = {
    {1, {9.29, 12.86, 11.43, 66.43}}, {2, {1.95, 22.52, 35.89, 39.64}},
    {3, {1.18, 10.07, 34.90, 53.86}}, {4, {0.78, 3.13, 12.31, 83.78}},
};

const std::array<double, 4> kQ1Q2ColumnSumsPercent = {28.70, 85.44, 90.14, 295.73};
const std::array<double, 4> kQ2Q3ColumnSumsPercent = {13.19, 48.57, 94.52, 243.708};

namespace {

ImprovementFlags flags_for_level(int level) {
    ImprovementFlags f;
    for (int i = 0; i < level; ++i) f.bits[static_cast<std::size_t>(i)] = 1;
    return f;
}

void set_classes(AssessmentRecord& r, int lag) {
    r.compatible_class = lag >= -1 ? 3 : 1;
    r.age_appropriate_class = r.compatible_class - lag;
}

AssessmentRecord child_record(const std::string& id, Sex sex, State state, int lag,
                              int quarter, int level) {
    AssessmentRecord r;
    r.child_id = id;
    r.center = fmt::format("{}-centre", to_string(state));
    r.sex = sex;
    r.state = state;
    set_classes(r, lag);
    r.attendance = "80";
    r.improvements = flags_for_level(level);
    r.quarter = quarter;
    return r;
}

// Deals out transition targets to children in id order: for each starting
// level, the recorded counts of next-quarter levels are consumed left to
// right over columns 1..4.
class TransitionDealer {
  public:
    explicit TransitionDealer(const std::map<int, std::array<long long, 4>>& counts) {
        for (const auto& [from, cols] : counts)
            for (int j = 0; j < 4; ++j)
                for (long long n = 0; n < cols[static_cast<std::size_t>(j)]; ++n)
                    queues_[from].push_back(j + 1);
    }

    int next(int from_level) {
        auto& q = queues_.at(from_level);
        if (q.empty()) throw std::logic_error("transition counts exhausted");
        int level = q.front();
        q.pop_front();
        return level;
    }

  private:
    std::map<int, std::deque<int>> queues_;
};

}  // namespace

std::vector<AssessmentRecord> paper_records() {
    struct Child {
        int lag;
        int q1_level;
    };
    std::vector<Child> children;
    for (const auto& [lag, counts] : kQ1LagCounts)
        for (int level = 0; level <= 4; ++level)
            for (long long n = 0; n < counts[static_cast<std::size_t>(level)]; ++n)
                children.push_back({lag, level});
    for (int level = 0; level <= 4; ++level)
        for (long long n = 0; n < kPositiveLagLevelCounts[static_cast<std::size_t>(level)];
             ++n)
            children.push_back({+1, level});
    assert(children.size() == 4000);

    TransitionDealer q1q2(kQ1Q2Transitions);
    TransitionDealer q2q3(kQ2Q3Transitions);

    std::vector<AssessmentRecord> records;
    records.reserve(children.size() * 3);
    for (std::size_t i = 0; i < children.size(); ++i) {
        auto id = fmt::format("C{:04}", i + 1);
        Sex sex = i < 2119 ? Sex::Female : Sex::Male;
        State state = i < 565    ? State::JammuKashmir
                      : i < 1265 ? State::Jharkhand
                      : i < 2266 ? State::Manipur
                                 : State::WestBengal;
        int q1 = children[i].q1_level;
        int q2 = q1q2.next(q1);
        int q3 = q2q3.next(q2);
        records.push_back(child_record(id, sex, state, children[i].lag, 1, q1));
        records.push_back(child_record(id, sex, state, children[i].lag, 2, q2));
        records.push_back(child_record(id, sex, state, children[i].lag, 3, q3));
    }
    return records;
}

Cohort paper_cohort() {
    auto built = cry::build_cohort(paper_records());
    assert(built.duplicates.empty());
    return std::move(built.cohort);
}

std::vector<AssessmentRecord> group_panel(const std::string& id_prefix, Sex sex,
                                          State state, double target1, double target2,
                                          int row_population) {
    const int n = row_population;
    // From each of rows 0..3, k1 children jump to level 4 between quarters
    // 1 and 2; the unweighted displacement sum is then 10*k1/n = 30*target1.
    const long long k1 = std::llround(3.0 * target1 * n);
    if (k1 < 0 || k1 > n) throw std::invalid_argument("target1 out of range");
    const long long stay = n - k1;  // each of rows 0..3 keeps this many in quarter 2

    // Between quarters 2 and 3 the jump counts m[i] per row solve
    // 4*m0 + 3*m1 + 2*m2 + m3 = 30*target2*stay, dealt greedily.
    long long budget = std::llround(30.0 * target2 * static_cast<double>(stay));
    std::array<long long, 4> movers{};
    for (int i = 0; i < 4; ++i) {
        long long weight = 4 - i;
        movers[static_cast<std::size_t>(i)] = std::min<long long>(stay, budget / weight);
        budget -= movers[static_cast<std::size_t>(i)] * weight;
    }
    if (budget != 0) throw std::logic_error("cannot decompose target2 displacement");

    std::vector<AssessmentRecord> records;
    records.reserve(static_cast<std::size_t>(n) * 15);
    int serial = 0;
    for (int row = 0; row <= 4; ++row) {
        for (int c = 0; c < n; ++c) {
            auto id = fmt::format("{}{:05}", id_prefix, ++serial);
            int q1 = row;
            int q2 = (row < 4 && c < k1) ? 4 : row;
            int q3 = q2;
            if (row < 4 && q2 == row) {
                // Stayers are ordered after the k1 movers; the first m[row]
                // of them jump in quarter 3.
                long long stay_index = c - k1;
                if (stay_index < movers[static_cast<std::size_t>(row)]) q3 = 4;
            }
            records.push_back(child_record(id, sex, state, 0, 1, q1));
            records.push_back(child_record(id, sex, state, 0, 2, q2));
            records.push_back(child_record(id, sex, state, 0, 3, q3));
        }
    }
    return records;
}

Cohort sex_groups_cohort() {
    auto records = group_panel("F", Sex::Female, State::WestBengal, 0.217, 0.125);
    auto male = group_panel("M", Sex::Male, State::Manipur, 0.218, 0.119);
    records.insert(records.end(), male.begin(), male.end());
    return std::move(cry::build_cohort(std::move(records)).cohort);
}

Cohort state_groups_cohort() {
    std::vector<AssessmentRecord> records;
    auto append = [&](const char* prefix, State state, double t1, double t2) {
        auto group = group_panel(prefix, Sex::Female, state, t1, t2);
        records.insert(records.end(), group.begin(), group.end());
    };
    append("JK", State::JammuKashmir, 0.096, 0.187);
    append("JH", State::Jharkhand, 0.171, 0.163);
    append("MN", State::Manipur, 0.105, 0.042);
    append("WB", State::WestBengal, 0.260, 0.155);
    return std::move(cry::build_cohort(std::move(records)).cohort);
}

}  // namespace fixtures
