#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fatpoints/divisor.hpp"

namespace fatpoints {

// dim of the space of degree-t forms in three variables: C(t+2,2), 0 for t<0.
[[nodiscard]] constexpr std::int64_t r_dim(std::int64_t t) {
    return t >= 0 ? (t + 2) * (t + 1) / 2 : 0;
}

// A fat point scheme m_1 p_1 + ... + m_8 p_8 at general points. Multiplicity
// lists with fewer than 8 entries are zero-padded; storage is monotone.
struct FatPointScheme {
    std::array<std::int64_t, kPoints> mults{};

    // Accepts 1..8 nonnegative entries; anything else is a usage error.
    [[nodiscard]] static FatPointScheme from(std::span<const std::int64_t> mults);

    // F_t = tL - m_1 E_1 - ... - m_8 E_8.
    [[nodiscard]] DivisorClass class_in_degree(std::int64_t t) const;

    friend bool operator==(const FatPointScheme&, const FatPointScheme&) = default;
};

// h_Z(t) = h0(F_t), the dimension of the degree-t piece of the ideal.
[[nodiscard]] std::int64_t hilbert_function(const FatPointScheme& z, std::int64_t t);

// Least t with h_Z(t) > 0.
[[nodiscard]] std::int64_t initial_degree(const FatPointScheme& z);

// Least t with F_t nef; at and beyond it h_Z agrees with the chi polynomial.
[[nodiscard]] std::int64_t nef_degree(const FatPointScheme& z);

// Minimal free graded resolution 0 -> F_1 -> F_0 -> I_Z -> 0, recorded as the
// graded generator counts nu_t (F_0) and syzygy counts s_t (F_1), nonzero
// entries only. The Hilbert values over [alpha, window_end] are kept for
// audit; window_end = nef_degree + 3, past which both counts vanish.
struct GradedResolution {
    std::array<std::int64_t, kPoints> mults{};
    std::int64_t alpha = 0;
    std::int64_t window_end = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> hilbert;
    std::map<std::int64_t, std::int64_t> generators;
    std::map<std::int64_t, std::int64_t> syzygies;
};

// Generator counts alone: nu_alpha = h_Z(alpha), nu_t = cok(mu applied to
// F_{t-1}) for larger t; zero outside [alpha, nef_degree + 1].
[[nodiscard]] std::map<std::int64_t, std::int64_t> nu_sequence(const FatPointScheme& z);

[[nodiscard]] GradedResolution resolution(const FatPointScheme& z);

// Resolution bookkeeping over a caller-supplied window with caller-supplied
// dimension data: hilbert(t) = h_Z(t) and mu_cok(t) = dim cok of the
// multiplication map in degree t. Used to assemble an independently computed
// (e.g. brute-force) resolution for comparison against the engine's. Checks
// s_t = nu_t - third difference of h_Z >= 0, that both counts vanish beyond
// the window (two extra degrees are over-computed), and that the Hilbert
// series of the result is exact; violations throw internal_error.
[[nodiscard]] GradedResolution assemble_resolution(
    const std::array<std::int64_t, kPoints>& mults, std::int64_t alpha, std::int64_t nef_deg,
    const std::function<std::int64_t(std::int64_t)>& hilbert,
    const std::function<std::int64_t(std::int64_t)>& mu_cok);

}  // namespace fatpoints
