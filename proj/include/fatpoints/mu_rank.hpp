#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/cohomology.hpp"
#include "fatpoints/curves.hpp"
#include "fatpoints/divisor.hpp"

namespace fatpoints {

// Which branch of the rank dispatch fired.
enum class MuCase {
    h0_zero,            // no sections, map is trivially injective
    case_a,             // F.C >= Lambda_C for every table curve: maximal rank
    case_b_step,        // F.C < lambda_C: kernel agrees with F - C
    case_c_i,           // F.(L - E_1 - E_2) = 0
    case_c_ii,          // F = (3+8r)L - (1+3r)(E_1+...+E_7) - rE_8, r >= 1
    case_c_iii_maxrank  // remaining nef classes: maximal rank
};

[[nodiscard]] const char* to_string(MuCase c);

struct MuTraceEvent {
    MuCase kind = MuCase::h0_zero;
    DivisorClass cls;                      // monotone class the event fired at
    std::optional<CurveClass> subtracted;  // set for case_b_step
    std::int64_t r = 0;                    // set for case_c_ii
    std::int64_t ker = 0, cok = 0;         // kernel/cokernel of mu at cls
};

// ker/cok of the multiplication map H0(F) (x) H0(L) -> H0(F+L), plus the
// chain of dispatch events that produced them. Satisfies
// cok - ker = h0(F+L) - 3*h0(F) at every class in the trace.
struct MuRankReport {
    std::int64_t ker = 0;
    std::int64_t cok = 0;
    std::vector<MuTraceEvent> trace;
};

// Input is monotone-normalized internally; permuting the m entries does not
// change the answer since the points are general.
[[nodiscard]] MuRankReport mu_rank(const DivisorClass& f);

// q = h0(F - E_1), l = h0(F - (L - E_1)) and their h1 counterparts. The
// kernel of mu_F is at most q + l; when F is effective with h1(F) = 0 the
// cokernel is at most q* + l*.
struct QLReport {
    std::int64_t q = 0, l = 0, q_star = 0, l_star = 0;
};

// Throws std::invalid_argument if f is not monotone.
[[nodiscard]] QLReport ql_report(const DivisorClass& f);

// Rank defect of the restricted multiplication map
// H0(O_C(t)) (x) H0(L) -> H0(O_C(t + C.L)) for a table curve C: zero for
// every exceptional curve, and zero for square-zero curves except
// (4L-3E_1-E_2-...-E_8, t=1) and (8L-3E_1-...-3E_7-E_8, t=3), where it is 1.
[[nodiscard]] std::int64_t curve_restriction_mu_defect(const CurveClass& c, std::int64_t t);

// Number of times the case-c(i) consistency identity has been checked (it
// throws internal_error when violated). Diagnostic only.
[[nodiscard]] std::uint64_t mu_case_ci_checks();

}  // namespace fatpoints
