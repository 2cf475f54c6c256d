#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fatpoints/divisor.hpp"

namespace fatpoints {

enum class CurveKind { exceptional, square_zero };

// An irreducible-curve class from the finite tables of the 8-point surface,
// with the thresholds used by the rank dispatch cached.
struct CurveClass {
    DivisorClass cls;
    CurveKind kind = CurveKind::exceptional;
    std::int64_t lambda = 0;          // lower threshold
    std::int64_t Lambda = 0;          // upper threshold
    std::int64_t max_point_mult = 0;  // m_C = max_i C.E_i
};

struct CurveThresholds {
    std::int64_t m_c = 0;
    std::int64_t lambda = 0;
    std::int64_t Lambda = 0;
};

// m_C is the largest C.E_i; Lambda = max(m_C, C.L - m_C). The lower threshold
// is min(m_C, C.L - m_C) for smooth rational curves, raised to at least 2
// otherwise. For C = E_i both thresholds come out 0. On the 8-point surface
// every table curve is smooth rational, so the non-rational branch is only
// kept for completeness.
[[nodiscard]] CurveThresholds curve_thresholds(const DivisorClass& c, bool smooth_rational);

// All 240 classes with C^2 = -1, C.K = -1, in canonical (d, m) order.
// Built once from the seven coefficient patterns and shared read-only.
[[nodiscard]] const std::vector<CurveClass>& exceptional_curves();

// All 2160 classes of smooth rational curves with C^2 = 0, C.K = -2.
[[nodiscard]] const std::vector<CurveClass>& square_zero_curves();

// Generators of the cone of monotone, numerically effective, nearly uniform
// classes: (1,0,0), (3,1,0), (3,1,1), (8,3,0), (8,3,1), (11,4,3), (17,6,6).
[[nodiscard]] const std::array<Triple, 7>& nearly_uniform_nef_generators();

// Inequality membership test for that cone:
// a >= b, b >= 0, 3d-8a >= 0, 5d-13a-b >= 0, 6d-15a-2b >= 0.
[[nodiscard]] bool nearly_uniform_nef_member(const Triple& t);

}  // namespace fatpoints
