#include "fatpoints/resolution.hpp"

#include <algorithm>

#include "fatpoints/cohomology.hpp"
#include "fatpoints/mu_rank.hpp"

namespace fatpoints {

namespace {

// Monotone nef classes used as a cheap emptiness cut: F_t.W < 0 for a nef W
// certifies h_Z(t) = 0 without running the full reduction. The square-zero
// curve shapes plus -K and 17L-6(E_1+...+E_8) cover the usual profiles.
const std::vector<DivisorClass>& effectivity_witnesses() {
    static const std::vector<DivisorClass> witnesses = [] {
        std::vector<DivisorClass> out;
        for (const CurveClass& c : square_zero_curves()) {
            if (is_monotone(c.cls)) out.push_back(c.cls);
        }
        out.push_back(-canonical_class());
        DivisorClass uniform;
        uniform.d = 17;
        uniform.m.fill(6);
        out.push_back(uniform);
        return out;
    }();
    return witnesses;
}

}  // namespace

FatPointScheme FatPointScheme::from(std::span<const std::int64_t> mults) {
    if (mults.empty() || mults.size() > kPoints)
        throw std::invalid_argument("fat point scheme needs 1 to 8 multiplicities");
    FatPointScheme z;
    for (std::size_t i = 0; i < mults.size(); ++i) {
        if (mults[i] < 0)
            throw std::invalid_argument("multiplicities must be nonnegative");
        z.mults[i] = mults[i];
    }
    std::sort(z.mults.begin(), z.mults.end(), std::greater<>());
    return z;
}

DivisorClass FatPointScheme::class_in_degree(std::int64_t t) const {
    DivisorClass f;
    f.d = t;
    f.m = mults;
    return f;
}

std::int64_t hilbert_function(const FatPointScheme& z, std::int64_t t) {
    return h0(z.class_in_degree(t));
}

std::int64_t nef_degree(const FatPointScheme& z) {
    // F_t.E_i = m_i >= 0 always; for the remaining curves F_t.C >= 0 exactly
    // from t >= ceil(sum m_i c_i / C.L), so the least nef degree is the max
    // of those thresholds.
    std::int64_t t = 0;
    for (const CurveClass& c : exceptional_curves()) {
        if (c.cls.d <= 0) continue;
        std::int64_t num = 0;
        for (int i = 0; i < kPoints; ++i) num += z.mults[i] * c.cls.m[i];
        if (num > 0) t = std::max(t, (num + c.cls.d - 1) / c.cls.d);
    }
    return t;
}

std::int64_t initial_degree(const FatPointScheme& z) {
    const std::int64_t stop = nef_degree(z);
    for (std::int64_t t = 0; t <= stop; ++t) {
        bool cut = false;
        for (const DivisorClass& w : effectivity_witnesses()) {
            // mults and witness entries are both sorted descending, which is
            // the alignment giving the strongest cut for this witness shape.
            __int128 prod = static_cast<__int128>(t) * w.d;
            for (int i = 0; i < kPoints; ++i)
                prod -= static_cast<__int128>(z.mults[i]) * w.m[i];
            if (prod < 0) {
                cut = true;
                break;
            }
        }
        if (cut) continue;
        if (hilbert_function(z, t) > 0) return t;
    }
    // F_t is nef at t = stop, so h_Z(stop) = chi > 0 and the loop returned.
    throw internal_error("initial_degree: scan passed the nef degree");
}

GradedResolution assemble_resolution(const std::array<std::int64_t, kPoints>& mults,
                                     std::int64_t alpha, std::int64_t nef_deg,
                                     const std::function<std::int64_t(std::int64_t)>& hilbert,
                                     const std::function<std::int64_t(std::int64_t)>& mu_cok) {
    GradedResolution res;
    res.mults = mults;
    res.alpha = alpha;
    res.window_end = nef_deg + 3;

    std::map<std::int64_t, std::int64_t> h_cache;
    const auto h_at = [&](std::int64_t t) -> std::int64_t {
        if (t < alpha) return 0;
        auto it = h_cache.find(t);
        if (it != h_cache.end()) return it->second;
        const std::int64_t v = hilbert(t);
        h_cache.emplace(t, v);
        return v;
    };

    if (h_at(alpha) <= 0)
        throw internal_error("assemble_resolution: initial degree carries no sections");

    // Generators: everything at alpha, cokernels of the multiplication map
    // after that. Beyond nef_deg + 1 the map in the previous degree is onto,
    // so the count vanishes; two extra degrees are checked.
    std::map<std::int64_t, std::int64_t> nu;
    nu[alpha] = h_at(alpha);
    for (std::int64_t t = alpha + 1; t <= nef_deg + 3; ++t) {
        const std::int64_t v = mu_cok(t - 1);
        if (v < 0) throw internal_error("assemble_resolution: negative generator count");
        if (t > nef_deg + 1 && v != 0)
            throw internal_error("assemble_resolution: generator past the window");
        if (v > 0) nu[t] = v;
    }

    const auto nu_at = [&](std::int64_t t) -> std::int64_t {
        auto it = nu.find(t);
        return it == nu.end() ? 0 : it->second;
    };

    // Syzygies: s_t = nu_t - (third difference of h_Z at t). The difference
    // vanishes once all four samples sit in the chi-polynomial range, so
    // degrees past nef_deg + 3 are zero; again two extra are checked.
    for (std::int64_t t = alpha; t <= nef_deg + 5; ++t) {
        const std::int64_t d3 =
            h_at(t) - 3 * h_at(t - 1) + 3 * h_at(t - 2) - h_at(t - 3);
        const std::int64_t s = nu_at(t) - d3;
        if (s < 0) throw internal_error("assemble_resolution: negative syzygy count");
        if (t > res.window_end && s != 0)
            throw internal_error("assemble_resolution: syzygy past the window");
        if (s > 0 && t <= res.window_end) res.syzygies[t] = s;
    }
    res.generators = std::move(nu);

    for (std::int64_t t = alpha; t <= res.window_end; ++t)
        res.hilbert.emplace_back(t, h_at(t));

    // Hilbert series audit: the resolution must reproduce h_Z on the window.
    for (const auto& [t, h] : res.hilbert) {
        std::int64_t from_res = 0;
        for (const auto& [i, v] : res.generators) from_res += v * r_dim(t - i);
        for (const auto& [i, v] : res.syzygies) from_res -= v * r_dim(t - i);
        if (from_res != h)
            throw internal_error("assemble_resolution: Hilbert series mismatch");
    }
    return res;
}

GradedResolution resolution(const FatPointScheme& z) {
    const std::int64_t alpha = initial_degree(z);
    const std::int64_t t_nef = nef_degree(z);
    return assemble_resolution(
        z.mults, alpha, t_nef, [&](std::int64_t t) { return hilbert_function(z, t); },
        [&](std::int64_t t) { return mu_rank(z.class_in_degree(t)).cok; });
}

std::map<std::int64_t, std::int64_t> nu_sequence(const FatPointScheme& z) {
    return resolution(z).generators;
}

}  // namespace fatpoints
