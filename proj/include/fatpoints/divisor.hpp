#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "fatpoints/errors.hpp"

namespace fatpoints {

inline constexpr int kPoints = 8;

namespace detail {
std::int64_t narrow_i128(__int128 v, const char* what);
}

// The class d*L - m[0]*E_1 - ... - m[7]*E_8 in the rank-9 divisor lattice of
// the plane blown up at 8 points. The intersection form is diag(1,-1,...,-1),
// so F.L = d and F.E_i = m[i]. Representation is canonical: two classes are
// equal iff all nine integers agree.
struct DivisorClass {
    std::int64_t d = 0;
    std::array<std::int64_t, kPoints> m{};

    friend constexpr bool operator==(const DivisorClass&, const DivisorClass&) = default;
    // (d, m)-lexicographic. Doubles as the canonical ordering of curve tables.
    friend constexpr auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

[[nodiscard]] constexpr DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
    a.d += b.d;
    for (int i = 0; i < kPoints; ++i) a.m[i] += b.m[i];
    return a;
}

[[nodiscard]] constexpr DivisorClass operator-(DivisorClass a, const DivisorClass& b) {
    a.d -= b.d;
    for (int i = 0; i < kPoints; ++i) a.m[i] -= b.m[i];
    return a;
}

[[nodiscard]] constexpr DivisorClass operator-(DivisorClass a) {
    a.d = -a.d;
    for (int i = 0; i < kPoints; ++i) a.m[i] = -a.m[i];
    return a;
}

[[nodiscard]] constexpr DivisorClass operator*(std::int64_t c, DivisorClass a) {
    a.d *= c;
    for (int i = 0; i < kPoints; ++i) a.m[i] *= c;
    return a;
}

[[nodiscard]] constexpr DivisorClass line_class() { return DivisorClass{1, {}}; }

[[nodiscard]] constexpr DivisorClass point_class(int i) {
    DivisorClass e;
    e.m[i] = -1;  // E_i = 0*L - (-1)*E_i
    return e;
}

// K = -3L + E_1 + ... + E_8.
[[nodiscard]] constexpr DivisorClass canonical_class() {
    DivisorClass k;
    k.d = -3;
    k.m.fill(-1);
    return k;
}

// Symmetric bilinear form: A.B = d_A*d_B - sum m_A[i]*m_B[i].
// Intermediate products are taken in 128 bits so multiplicities up to 1e6
// cannot overflow.
[[nodiscard]] inline std::int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
    __int128 acc = static_cast<__int128>(a.d) * b.d;
    for (int i = 0; i < kPoints; ++i) acc -= static_cast<__int128>(a.m[i]) * b.m[i];
    return detail::narrow_i128(acc, "intersection product");
}

[[nodiscard]] bool is_monotone(const DivisorClass& f);

struct MonotoneResult {
    DivisorClass cls;               // same class with m weakly decreasing
    std::array<int, kPoints> perm;  // input slot i landed at output slot perm[i]
};

// Stable sort of the m entries (ties keep original order), so the returned
// permutation is deterministic.
[[nodiscard]] MonotoneResult monotone_normalize(const DivisorClass& f);

// Inverse of monotone_normalize: permute_back(res.cls, res.perm) == input.
[[nodiscard]] DivisorClass permute_back(const DivisorClass& g, const std::array<int, kPoints>& perm);

// Quadratic Cremona transform centered at points i, j, k (0-based, distinct).
// Acts as the lattice reflection in the root L-E_i-E_j-E_k, so it preserves
// the intersection form and fixes the canonical class. Involutive.
[[nodiscard]] DivisorClass cremona(const DivisorClass& f, int i, int j, int k);

// Nearly uniform class dL - a(E_1+...+E_7) - bE_8, written as a triple.
struct Triple {
    std::int64_t d = 0, a = 0, b = 0;
    friend constexpr bool operator==(const Triple&, const Triple&) = default;
    [[nodiscard]] DivisorClass expand() const;
};

// Lossless inverse of Triple::expand; nullopt if f is not nearly uniform.
[[nodiscard]] std::optional<Triple> to_triple(const DivisorClass& f);

// Canonical text form "d m1 ... m8" (class = dL - sum m_i E_i).
[[nodiscard]] std::string to_string(const DivisorClass& f);

}  // namespace fatpoints
