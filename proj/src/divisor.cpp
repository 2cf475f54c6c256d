#include "fatpoints/divisor.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace fatpoints {

namespace detail {

std::int64_t narrow_i128(__int128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw internal_error(std::string(what) + ": 64-bit overflow");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace detail

bool is_monotone(const DivisorClass& f) {
    for (int i = 0; i + 1 < kPoints; ++i)
        if (f.m[i] < f.m[i + 1]) return false;
    return true;
}

MonotoneResult monotone_normalize(const DivisorClass& f) {
    std::array<int, kPoints> order{};
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return f.m[a] > f.m[b]; });
    MonotoneResult out;
    out.cls.d = f.d;
    for (int j = 0; j < kPoints; ++j) {
        out.cls.m[j] = f.m[order[j]];
        out.perm[order[j]] = j;
    }
    return out;
}

DivisorClass permute_back(const DivisorClass& g, const std::array<int, kPoints>& perm) {
    DivisorClass f;
    f.d = g.d;
    for (int i = 0; i < kPoints; ++i) f.m[i] = g.m[perm[i]];
    return f;
}

DivisorClass cremona(const DivisorClass& f, int i, int j, int k) {
    if (i < 0 || i >= kPoints || j < 0 || j >= kPoints || k < 0 || k >= kPoints ||
        i == j || i == k || j == k) {
        throw std::invalid_argument("cremona: indices must be distinct and in 0..7");
    }
    // Reflection in the root R = L - E_i - E_j - E_k (R^2 = -2):
    // F -> F + (F.R) R.
    DivisorClass root = line_class() - point_class(i) - point_class(j) - point_class(k);
    return f + intersect(f, root) * root;
}

DivisorClass Triple::expand() const {
    DivisorClass f;
    f.d = d;
    f.m.fill(a);
    f.m[kPoints - 1] = b;
    return f;
}

std::optional<Triple> to_triple(const DivisorClass& f) {
    for (int i = 1; i < kPoints - 1; ++i)
        if (f.m[i] != f.m[0]) return std::nullopt;
    return Triple{f.d, f.m[0], f.m[kPoints - 1]};
}

std::string to_string(const DivisorClass& f) {
    std::ostringstream os;
    os << f.d;
    for (int i = 0; i < kPoints; ++i) os << ' ' << f.m[i];
    return os.str();
}

}  // namespace fatpoints
