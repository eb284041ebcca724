#pragma once

#include <map>
#include <string>
#include <vector>

#include "cryassess/record.hpp"

namespace cry {

struct DuplicateNote {
    std::string child_id;
    int quarter;
};

class Cohort;
struct CohortBuildResult;
CohortBuildResult build_cohort(std::vector<AssessmentRecord> records);

// Immutable panel of assessment records keyed by (child_id, quarter).
// Safe for unrestricted concurrent reads once built.
class Cohort {
  public:
    Cohort() = default;

    const AssessmentRecord* find(const std::string& child_id, int quarter) const;
    std::vector<const AssessmentRecord*> quarter(int q) const;
    std::vector<int> quarters() const;

    const std::vector<AssessmentRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }

    const std::map<State, long long>& state_counts() const { return state_counts_; }
    const std::map<Sex, long long>& sex_counts() const { return sex_counts_; }

    // Child ids present in `from_q` but missing in `to_q`.
    std::vector<std::string> missing_in(int from_q, int to_q) const;

  private:
    friend CohortBuildResult build_cohort(std::vector<AssessmentRecord> records);

    std::vector<AssessmentRecord> records_;  // sorted by (child_id, quarter)
    std::map<State, long long> state_counts_;
    std::map<Sex, long long> sex_counts_;
};

// Result of build_cohort, which deduplicates on (child_id, quarter): the
// first occurrence wins and every later one is reported. Demographic
// summaries are computed over kept records.
struct CohortBuildResult {
    Cohort cohort;
    std::vector<DuplicateNote> duplicates;
};

}  // namespace cry
