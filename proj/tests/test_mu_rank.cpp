#include <doctest.h>

#include <random>

#include "fatpoints/mu_rank.hpp"

using namespace fatpoints;

namespace {

DivisorClass uniform(std::int64_t d, std::int64_t m) {
    DivisorClass f;
    f.d = d;
    f.m.fill(m);
    return f;
}

const CurveClass& table_entry(const std::vector<CurveClass>& table, const DivisorClass& cls) {
    for (const CurveClass& c : table)
        if (c.cls == cls) return c;
    REQUIRE(false);
    return table.front();
}

}  // namespace

TEST_CASE("ql_report") {
    const QLReport a = ql_report(DivisorClass{4, {2, 2, 1, 1, 1, 1, 1, 1}});
    CHECK(a.q == 0);
    CHECK(a.l == 0);

    for (std::int64_t t = 1; t <= 8; ++t) {
        const QLReport b = ql_report(uniform(t, 0));
        CHECK(b.q == (t + 2) * (t + 1) / 2 - 1);  // one point condition
    }

    const QLReport z = ql_report(uniform(0, 0));
    CHECK(z.q == 0);
    CHECK(z.l == 0);

    CHECK_THROWS_AS((void)ql_report(DivisorClass{4, {1, 2, 0, 0, 0, 0, 0, 0}}),
                    std::invalid_argument);
}

TEST_CASE("mu_rank known values") {
    // anticanonical class
    const MuRankReport mk = mu_rank(-canonical_class());
    CHECK(mk.ker == 0);
    CHECK(mk.cok == 1);

    const MuRankReport m2k = mu_rank(-2 * canonical_class());
    CHECK(m2k.ker == 0);
    CHECK(m2k.cok == 0);

    // uniform multiplicity 54: reduction chain ends at 9L - 3(E_1+...+E_8)
    const MuRankReport big = mu_rank(uniform(153, 54));
    CHECK(big.ker == 3);
    CHECK(big.cok == 48);
    REQUIRE(!big.trace.empty());
    CHECK(big.trace.front().kind == MuCase::case_b_step);
    CHECK(big.trace.back().kind == MuCase::case_a);
    CHECK(big.trace.back().cls == uniform(9, 3));
    CHECK(big.trace.back().ker == 3);
    CHECK(big.trace.back().cok == 0);
    CHECK(big.trace.size() == 25);  // 24 reduction steps, one terminal

    // nearly uniform special family
    for (std::int64_t r = 1; r <= 5; ++r) {
        DivisorClass f = Triple{3 + 8 * r, 1 + 3 * r, r}.expand();
        const MuRankReport rep = mu_rank(f);
        CHECK(rep.ker == r + 1);
        CHECK(rep.cok == r);
        CHECK(rep.trace.back().kind == MuCase::case_c_ii);
        CHECK(rep.trace.back().r == r);
    }

    // double point in degree 2: perpendicular-to-a-line case
    const MuRankReport dp = mu_rank(DivisorClass{2, {2, 0, 0, 0, 0, 0, 0, 0}});
    CHECK(dp.ker == 2);
    CHECK(dp.cok == 0);
    CHECK(dp.trace.back().kind == MuCase::case_c_i);

    // no sections
    const MuRankReport empty = mu_rank(DivisorClass{2, {3, 3, 0, 0, 0, 0, 0, 0}});
    CHECK(empty.ker == 0);
    CHECK(empty.trace.size() == 1);
    CHECK(empty.trace.front().kind == MuCase::h0_zero);

    // multiples of L land in the nice case with the Koszul kernel
    const MuRankReport line = mu_rank(uniform(1, 0));
    CHECK(line.ker == 3);
    CHECK(line.cok == 0);
}

TEST_CASE("mu_rank input need not be monotone") {
    const MuRankReport a = mu_rank(DivisorClass{2, {0, 0, 2, 0, 0, 0, 0, 0}});
    CHECK(a.ker == 2);
    CHECK(a.cok == 0);
}

TEST_CASE("mu_rank rank-nullity and section-count bounds on random classes") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::int64_t> dd(-30, 30), dm(-12, 12);
    for (int trial = 0; trial < 300; ++trial) {
        DivisorClass f;
        f.d = dd(rng);
        for (int i = 0; i < kPoints; ++i) f.m[i] = dm(rng);

        const MuRankReport rep = mu_rank(f);
        const DivisorClass g = monotone_normalize(f).cls;
        const std::int64_t h = h0(g), hl = h0(g + line_class());
        CHECK(rep.cok - rep.ker == hl - 3 * h);
        CHECK(rep.ker <= 3 * h);
        CHECK(rep.cok <= hl);

        // every event on the trace satisfies rank-nullity at its own class
        for (const MuTraceEvent& ev : rep.trace) {
            CHECK(ev.cok - ev.ker == h0(ev.cls + line_class()) - 3 * h0(ev.cls));
            CHECK(ev.ker >= 0);
            CHECK(ev.cok >= 0);
        }

        const QLReport ql = ql_report(g);
        if (h > 0) CHECK(rep.ker <= ql.q + ql.l);
        if (h > 0 && h1(g) == 0) CHECK(rep.cok <= ql.q_star + ql.l_star);

        // permutation invariance
        DivisorClass shuffled = f;
        std::shuffle(shuffled.m.begin(), shuffled.m.end(), rng);
        const MuRankReport rep2 = mu_rank(shuffled);
        CHECK(rep2.ker == rep.ker);
        CHECK(rep2.cok == rep.cok);
    }
}

TEST_CASE("restricted multiplication defects") {
    const auto& exc = exceptional_curves();
    const auto& sq = square_zero_curves();

    for (const CurveClass& c : exc)
        for (std::int64_t t = 0; t <= 6; ++t) CHECK(curve_restriction_mu_defect(c, t) == 0);

    const CurveClass& wide1 = table_entry(sq, DivisorClass{4, {3, 1, 1, 1, 1, 1, 1, 1}});
    const CurveClass& wide2 = table_entry(sq, DivisorClass{8, {3, 3, 3, 3, 3, 3, 3, 1}});
    CHECK(curve_restriction_mu_defect(wide1, 1) == 1);
    CHECK(curve_restriction_mu_defect(wide2, 3) == 1);

    for (const CurveClass& c : sq) {
        for (std::int64_t t = 0; t <= 12; ++t) {
            const std::int64_t defect = curve_restriction_mu_defect(c, t);
            const bool special =
                (c.max_point_mult == 3 && c.cls.d == 4 && t == 1) ||
                (c.max_point_mult == 3 && c.cls.d == 8 && t == 3);
            CHECK(defect == (special ? 1 : 0));
        }
    }
}
