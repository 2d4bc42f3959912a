#pragma once

#include <cstdint>

#include "gwa/algebra.hpp"
#include "gwa/report.hpp"

namespace gwa {

/// Property suite for the normal-form engine: closed forms of y^k x^k and
/// x^k y^k, associativity, grading additivity, the involution, the ideal
/// A_1 A_{-1} = (P), and transported products under conjugation.
Report verify_normal_form(const Presentation& pres, unsigned cases,
                          std::uint64_t seed);

}  // namespace gwa
