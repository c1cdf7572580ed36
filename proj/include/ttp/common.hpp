#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ttp {

// All distances are kept as exact integers (decimal inputs are scaled by a
// common power of ten at parse time), so bound comparisons never suffer
// float drift. Wide is used for cross-multiplied rational comparisons.
using Weight = long long;
using Wide = __int128;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedSize : std::runtime_error {
    explicit UnsupportedSize(const std::string& msg) : std::runtime_error(msg) {}
};

struct SizeTooLarge : std::runtime_error {
    explicit SizeTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

// A construction postcondition failed. Indicates a defect in the solver
// itself, never an input problem.
struct ConstructionError : std::logic_error {
    explicit ConstructionError(const std::string& msg) : std::logic_error(msg) {}
};

struct JunctionViolation : std::logic_error {
    explicit JunctionViolation(const std::string& msg) : std::logic_error(msg) {}
};

// Formats a scaled integer weight back into decimal text.
std::string format_weight(Weight value, int scale_pow);

}  // namespace ttp
