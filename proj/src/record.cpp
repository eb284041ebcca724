#include "cryassess/record.hpp"

namespace cry {

const char* to_string(State s) {
    switch (s) {
        case State::JammuKashmir: return "Jammu & Kashmir";
        case State::Jharkhand: return "Jharkhand";
        case State::Manipur: return "Manipur";
        case State::WestBengal: return "West Bengal";
    }
    return "?";
}

const char* to_string(Sex s) {
    return s == Sex::Male ? "Male" : "Female";
}

}  // namespace cry
