#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fatpoints/curves.hpp"
#include "fatpoints/divisor.hpp"

namespace fatpoints {

enum class ReductionVerdict { nef_residual, empty };

// Outcome of stripping fixed components off a complete linear system.
// The original class always equals residual + sum multiplicity*curve.
struct ReductionReport {
    std::vector<std::pair<CurveClass, std::int64_t>> subtracted;
    DivisorClass residual;
    ReductionVerdict verdict = ReductionVerdict::nef_residual;
};

// On the 8-point surface a class is nef iff it meets all 240 exceptional
// curves nonnegatively.
[[nodiscard]] bool is_nef(const DivisorClass& f);

// Riemann-Roch value (F^2 - F.K)/2 + 1. The numerator is always even here.
[[nodiscard]] std::int64_t chi(const DivisorClass& f);

// Repeatedly subtracts the first exceptional curve (canonical table order)
// meeting the class negatively, one copy per iteration; consecutive copies of
// the same curve are coalesced in the report. Stops with verdict empty as
// soon as F.L < 0, or with a nef residual. Iteration count is capped at
// 10*(|d| + sum|m_i|) + 100; exceeding the cap throws internal_error.
[[nodiscard]] ReductionReport fixed_component_reduction(const DivisorClass& f);

// 0 if the reduction ends empty, chi(residual) otherwise (a nef class on this
// surface is effective with vanishing h1, and fixed components do not change
// the section count).
[[nodiscard]] std::int64_t h0(const DivisorClass& f);

// Serre duality: h2(F) = h0(K - F).
[[nodiscard]] std::int64_t h2(const DivisorClass& f);

// h0 - chi + h2; throws internal_error if that comes out negative.
[[nodiscard]] std::int64_t h1(const DivisorClass& f);

}  // namespace fatpoints
