#include "fatpoints/mu_rank.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace fatpoints {

namespace {

std::atomic<std::uint64_t> g_ci_checks{0};

std::int64_t depth_cap(const DivisorClass& f) {
    std::int64_t size = std::llabs(f.d);
    for (int i = 0; i < kPoints; ++i) size += std::llabs(f.m[i]);
    return 10 * size + 100;
}

bool meets_all_at_Lambda(const DivisorClass& f) {
    for (const CurveClass& c : exceptional_curves())
        if (intersect(f, c.cls) < c.Lambda) return false;
    return true;
}

// Curve with f.C < lambda_C minimizing f.C; ties broken by table order.
const CurveClass* pick_reduction_curve(const DivisorClass& f) {
    const CurveClass* best = nullptr;
    std::int64_t best_val = 0;
    for (const CurveClass& c : exceptional_curves()) {
        const std::int64_t v = intersect(f, c.cls);
        if (v < c.lambda && (best == nullptr || v < best_val)) {
            best = &c;
            best_val = v;
        }
    }
    return best;
}

// Monotone f equal to (3+8r)L - (1+3r)(E_1+...+E_7) - rE_8 with r >= 1.
std::optional<std::int64_t> nearly_uniform_special_r(const DivisorClass& f) {
    const std::int64_t r = f.m[kPoints - 1];
    if (r < 1 || f.d != 3 + 8 * r) return std::nullopt;
    for (int i = 0; i < kPoints - 1; ++i)
        if (f.m[i] != 1 + 3 * r) return std::nullopt;
    return r;
}

}  // namespace

const char* to_string(MuCase c) {
    switch (c) {
        case MuCase::h0_zero: return "h0_zero";
        case MuCase::case_a: return "case_a";
        case MuCase::case_b_step: return "case_b_step";
        case MuCase::case_c_i: return "case_c_i";
        case MuCase::case_c_ii: return "case_c_ii";
        case MuCase::case_c_iii_maxrank: return "case_c_iii_maxrank";
    }
    return "?";
}

MuRankReport mu_rank(const DivisorClass& input) {
    MuRankReport rep;
    DivisorClass f = monotone_normalize(input).cls;
    const std::int64_t cap = depth_cap(f);

    // h0 of the class each trace event fired at, filled during the forward
    // pass so the unwind does not recompute it.
    std::vector<std::int64_t> h0_at;

    std::int64_t ker = 0, cok = 0;  // of the terminal class
    for (std::int64_t depth = 0;; ++depth) {
        if (depth > cap) throw internal_error("mu_rank: reduction chain exceeded depth cap");

        const std::int64_t h = h0(f);

        if (h == 0) {
            // Empty source space: injective, cokernel is the whole target.
            ker = 0;
            cok = h0(f + line_class());
            rep.trace.push_back({MuCase::h0_zero, f, std::nullopt, 0, ker, cok});
            h0_at.push_back(h);
            break;
        }

        if (meets_all_at_Lambda(f)) {
            const std::int64_t hl = h0(f + line_class());
            ker = std::max<std::int64_t>(0, 3 * h - hl);
            cok = std::max<std::int64_t>(0, hl - 3 * h);
            rep.trace.push_back({MuCase::case_a, f, std::nullopt, 0, ker, cok});
            h0_at.push_back(h);
            break;
        }

        if (const CurveClass* c = pick_reduction_curve(f)) {
            // Kernel is unchanged by dropping C; cokernels are recovered from
            // rank-nullity on the unwind.
            rep.trace.push_back({MuCase::case_b_step, f, *c, 0, 0, 0});
            h0_at.push_back(h);
            f = monotone_normalize(f - c->cls).cls;
            continue;
        }

        // Remaining cases: every exceptional product is >= lambda >= 0, so f
        // is nef (and effective, h > 0).
        if (!is_nef(f)) throw internal_error("mu_rank: non-nef class reached case (c)");

        if (f.d == f.m[0] + f.m[1]) {  // f.(L - E_1 - E_2) = 0
            const DivisorClass a = f - (line_class() - point_class(0));
            const DivisorClass b = f - (line_class() - point_class(1));
            const std::int64_t h0a = h0(a), h0b = h0(b);
            const std::int64_t h1a = h1(a), h1b = h1(b);
            ker = h0a + h0b;
            cok = h1a + h1b;
            const std::int64_t hl = h0(f + line_class());
            if (cok - ker != hl - 3 * h)
                throw internal_error("mu_rank: case c(i) consistency identity violated at " +
                                     to_string(f));
            g_ci_checks.fetch_add(1, std::memory_order_relaxed);
            rep.trace.push_back({MuCase::case_c_i, f, std::nullopt, 0, ker, cok});
            h0_at.push_back(h);
            break;
        }

        if (auto r = nearly_uniform_special_r(f)) {
            ker = *r + 1;
            cok = *r;
            const std::int64_t hl = h0(f + line_class());
            if (cok - ker != hl - 3 * h)
                throw internal_error("mu_rank: case c(ii) violates rank-nullity at " +
                                     to_string(f));
            rep.trace.push_back({MuCase::case_c_ii, f, std::nullopt, *r, ker, cok});
            h0_at.push_back(h);
            break;
        }

        const std::int64_t hl = h0(f + line_class());
        ker = std::max<std::int64_t>(0, 3 * h - hl);
        cok = std::max<std::int64_t>(0, hl - 3 * h);
        const std::int64_t expected =
            intersect(f, line_class()) + intersect(f, canonical_class()) - intersect(f, f);
        if (cok != std::max<std::int64_t>(0, expected))
            throw internal_error("mu_rank: case c(iii) cokernel formula mismatch at " +
                                 to_string(f));
        rep.trace.push_back({MuCase::case_c_iii_maxrank, f, std::nullopt, 0, ker, cok});
        h0_at.push_back(h);
        break;
    }

    // Unwind the reduction chain. The kernel is shared by every class in it;
    // each cokernel comes from rank-nullity at its own class.
    for (auto idx = rep.trace.size(); idx-- > 0;) {
        MuTraceEvent& ev = rep.trace[idx];
        if (ev.kind != MuCase::case_b_step) continue;
        const std::int64_t h = h0_at[idx];
        const std::int64_t hl = h0(ev.cls + line_class());
        ev.ker = ker;
        ev.cok = ker + (hl - 3 * h);
        if (ev.cok < 0)
            throw internal_error("mu_rank: negative cokernel on reduction chain at " +
                                 to_string(ev.cls));
    }

    rep.ker = rep.trace.front().ker;
    rep.cok = rep.trace.front().cok;
    {
        const std::int64_t h = h0_at.front();
        const std::int64_t hl = h0(rep.trace.front().cls + line_class());
        if (rep.cok - rep.ker != hl - 3 * h || rep.ker > 3 * h || rep.cok > hl)
            throw internal_error("mu_rank: report violates rank-nullity bounds at " +
                                 to_string(rep.trace.front().cls));
    }
    return rep;
}

QLReport ql_report(const DivisorClass& f) {
    if (!is_monotone(f))
        throw std::invalid_argument("ql_report: class must be monotone: " + to_string(f));
    QLReport q;
    const DivisorClass fe = f - point_class(0);
    const DivisorClass fl = f - (line_class() - point_class(0));
    q.q = h0(fe);
    q.q_star = h1(fe);
    q.l = h0(fl);
    q.l_star = h1(fl);
    return q;
}

std::int64_t curve_restriction_mu_defect(const CurveClass& c, std::int64_t t) {
    // Kernel of O_C (x) H0(L) -> O_C(d) splits as O_C(-a) + O_C(-b) with
    // a + b = d. Generically a = min(m_C, d - m_C); the two wide square-zero
    // shapes below split more evenly.
    const std::int64_t d = c.cls.d;
    auto sorted = c.cls.m;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::int64_t a;
    if (d == 10 && sorted == std::array<std::int64_t, 8>{4, 4, 4, 4, 3, 3, 3, 3})
        a = 5;
    else if (d == 11 && sorted == std::array<std::int64_t, 8>{4, 4, 4, 4, 4, 4, 4, 3})
        a = 5;
    else
        a = std::min(c.max_point_mult, d - c.max_point_mult);
    const std::int64_t b = d - a;

    const auto pos = [](std::int64_t v) { return std::max<std::int64_t>(0, v); };
    const std::int64_t kernel_dim = pos(t - a + 1) + pos(t - b + 1);
    const std::int64_t maxrank_kernel = pos(3 * (t + 1) - (t + d + 1));
    const std::int64_t defect = kernel_dim - maxrank_kernel;
    if (defect < 0)
        throw internal_error("curve_restriction_mu_defect: negative defect for " +
                             to_string(c.cls));
    return defect;
}

std::uint64_t mu_case_ci_checks() { return g_ci_checks.load(std::memory_order_relaxed); }

}  // namespace fatpoints
