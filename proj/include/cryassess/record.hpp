#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace cry {

enum class State { JammuKashmir, Jharkhand, Manipur, WestBengal };
enum class Sex { Male, Female };

const char* to_string(State s);
const char* to_string(Sex s);

// The four per-subject binary improvement flags, in column order:
// 1st language oral, 2nd language oral, mathematics oral, writing.
struct ImprovementFlags {
    std::array<int, 4> bits{0, 0, 0, 0};

    int level() const { return bits[0] + bits[1] + bits[2] + bits[3]; }
    bool operator==(const ImprovementFlags&) const = default;
};

// One child in one assessment quarter.
struct AssessmentRecord {
    std::string child_id;
    std::string center;
    State state = State::WestBengal;
    Sex sex = Sex::Female;
    int age_appropriate_class = 0;
    int compatible_class = 0;
    std::string attendance;  // numeric pass-through, never scored
    ImprovementFlags improvements;
    int quarter = 1;

    bool operator==(const AssessmentRecord&) const = default;
};

// Number of subjects (0..4) in which the child improved this quarter.
inline int improvement_level(const AssessmentRecord& r) {
    return r.improvements.level();
}

// Compatible class minus age-appropriate class. Negative values are
// laggards; positive values mean the child tested above their age class.
inline int class_lag(const AssessmentRecord& r) {
    return r.compatible_class - r.age_appropriate_class;
}

}  // namespace cry
