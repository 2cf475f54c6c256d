#include "fatpoints/curves.hpp"

#include <algorithm>

namespace fatpoints {

namespace {

struct Pattern {
    std::int64_t d;
    std::array<std::int64_t, kPoints> coeffs;  // one representative, any order
};

// C^2 = -1, C.K = -1.
constexpr std::array<Pattern, 7> kExceptionalPatterns{{
    {0, {0, 0, 0, 0, 0, 0, 0, -1}},
    {1, {1, 1, 0, 0, 0, 0, 0, 0}},
    {2, {1, 1, 1, 1, 1, 0, 0, 0}},
    {3, {2, 1, 1, 1, 1, 1, 1, 0}},
    {4, {2, 2, 2, 1, 1, 1, 1, 1}},
    {5, {2, 2, 2, 2, 2, 2, 1, 1}},
    {6, {3, 2, 2, 2, 2, 2, 2, 2}},
}};

// Smooth rational, C^2 = 0, C.K = -2.
constexpr std::array<Pattern, 15> kSquareZeroPatterns{{
    {1, {1, 0, 0, 0, 0, 0, 0, 0}},
    {2, {1, 1, 1, 1, 0, 0, 0, 0}},
    {3, {2, 1, 1, 1, 1, 1, 0, 0}},
    {4, {2, 2, 2, 1, 1, 1, 1, 0}},
    {4, {3, 1, 1, 1, 1, 1, 1, 1}},
    {5, {3, 2, 2, 2, 1, 1, 1, 1}},
    {5, {2, 2, 2, 2, 2, 2, 1, 0}},
    {6, {3, 3, 2, 2, 2, 2, 1, 1}},
    {7, {3, 3, 3, 3, 2, 2, 2, 1}},
    {7, {4, 3, 2, 2, 2, 2, 2, 2}},
    {8, {3, 3, 3, 3, 3, 3, 3, 1}},
    {8, {4, 3, 3, 3, 3, 2, 2, 2}},
    {9, {4, 4, 3, 3, 3, 3, 3, 2}},
    {10, {4, 4, 4, 4, 3, 3, 3, 3}},
    {11, {4, 4, 4, 4, 4, 4, 4, 3}},
}};

template <std::size_t N>
std::vector<CurveClass> expand_patterns(const std::array<Pattern, N>& patterns, CurveKind kind) {
    std::vector<CurveClass> out;
    for (const Pattern& p : patterns) {
        auto coeffs = p.coeffs;
        std::sort(coeffs.begin(), coeffs.end());
        // next_permutation over the sorted multiset enumerates each distinct
        // arrangement exactly once.
        do {
            CurveClass c;
            c.cls.d = p.d;
            c.cls.m = coeffs;
            c.kind = kind;
            const CurveThresholds th = curve_thresholds(c.cls, /*smooth_rational=*/true);
            c.lambda = th.lambda;
            c.Lambda = th.Lambda;
            c.max_point_mult = th.m_c;
            out.push_back(c);
        } while (std::next_permutation(coeffs.begin(), coeffs.end()));
    }
    std::sort(out.begin(), out.end(),
              [](const CurveClass& a, const CurveClass& b) { return a.cls < b.cls; });
    return out;
}

}  // namespace

CurveThresholds curve_thresholds(const DivisorClass& c, bool smooth_rational) {
    // For C = E_i the maximum coefficient is 0 and C.L = 0, so both
    // thresholds come out 0, matching their defined values.
    const std::int64_t m_c = *std::max_element(c.m.begin(), c.m.end());
    const std::int64_t other = c.d - m_c;
    CurveThresholds th;
    th.m_c = m_c;
    th.Lambda = std::max(m_c, other);
    const std::int64_t lo = std::min(m_c, other);
    th.lambda = smooth_rational ? lo : std::max<std::int64_t>(lo, 2);
    return th;
}

const std::vector<CurveClass>& exceptional_curves() {
    static const std::vector<CurveClass> table =
        expand_patterns(kExceptionalPatterns, CurveKind::exceptional);
    return table;
}

const std::vector<CurveClass>& square_zero_curves() {
    static const std::vector<CurveClass> table =
        expand_patterns(kSquareZeroPatterns, CurveKind::square_zero);
    return table;
}

const std::array<Triple, 7>& nearly_uniform_nef_generators() {
    static const std::array<Triple, 7> gens{{
        {1, 0, 0}, {3, 1, 0}, {3, 1, 1}, {8, 3, 0}, {8, 3, 1}, {11, 4, 3}, {17, 6, 6},
    }};
    return gens;
}

bool nearly_uniform_nef_member(const Triple& t) {
    return t.a >= t.b && t.b >= 0 && 3 * t.d - 8 * t.a >= 0 &&
           5 * t.d - 13 * t.a - t.b >= 0 && 6 * t.d - 15 * t.a - 2 * t.b >= 0;
}

}  // namespace fatpoints
