#include "fatpoints/cohomology.hpp"

#include <cstdlib>

namespace fatpoints {

namespace {

std::int64_t iteration_cap(const DivisorClass& f) {
    std::int64_t size = std::llabs(f.d);
    for (int i = 0; i < kPoints; ++i) size += std::llabs(f.m[i]);
    return 10 * size + 100;
}

}  // namespace

bool is_nef(const DivisorClass& f) {
    for (const CurveClass& c : exceptional_curves())
        if (intersect(f, c.cls) < 0) return false;
    return true;
}

std::int64_t chi(const DivisorClass& f) {
    const std::int64_t numerator = intersect(f, f) - intersect(f, canonical_class());
    if (numerator % 2 != 0)
        throw internal_error("chi: odd Riemann-Roch numerator");  // impossible on this lattice
    return numerator / 2 + 1;
}

ReductionReport fixed_component_reduction(const DivisorClass& f) {
    ReductionReport rep;
    rep.residual = f;
    const auto& table = exceptional_curves();
    const std::int64_t cap = iteration_cap(f);
    for (std::int64_t iter = 0;; ++iter) {
        if (iter > cap)
            throw internal_error("fixed_component_reduction: iteration cap exceeded");
        DivisorClass& cur = rep.residual;
        if (cur.d < 0) {  // F.L < 0 and L is nef, so |F| is empty
            rep.verdict = ReductionVerdict::empty;
            return rep;
        }
        const CurveClass* neg = nullptr;
        for (const CurveClass& c : table) {
            if (intersect(cur, c.cls) < 0) {
                neg = &c;
                break;
            }
        }
        if (neg == nullptr) {
            rep.verdict = ReductionVerdict::nef_residual;
            return rep;
        }
        cur = cur - neg->cls;
        if (!rep.subtracted.empty() && rep.subtracted.back().first.cls == neg->cls)
            rep.subtracted.back().second += 1;
        else
            rep.subtracted.emplace_back(*neg, 1);
    }
}

std::int64_t h0(const DivisorClass& f) {
    const ReductionReport rep = fixed_component_reduction(f);
    return rep.verdict == ReductionVerdict::empty ? 0 : chi(rep.residual);
}

std::int64_t h2(const DivisorClass& f) { return h0(canonical_class() - f); }

std::int64_t h1(const DivisorClass& f) {
    const std::int64_t value = h0(f) - chi(f) + h2(f);
    if (value < 0) throw internal_error("h1: negative value for class " + to_string(f));
    return value;
}

}  // namespace fatpoints
