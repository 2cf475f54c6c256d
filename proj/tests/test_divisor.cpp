#include <doctest.h>

#include <random>

#include "fatpoints/divisor.hpp"

using namespace fatpoints;

namespace {

DivisorClass random_class(std::mt19937_64& rng, std::int64_t d_bound, std::int64_t m_bound) {
    std::uniform_int_distribution<std::int64_t> dd(-d_bound, d_bound), dm(-m_bound, m_bound);
    DivisorClass f;
    f.d = dd(rng);
    for (int i = 0; i < kPoints; ++i) f.m[i] = dm(rng);
    return f;
}

}  // namespace

TEST_CASE("intersection form") {
    CHECK(intersect(line_class(), line_class()) == 1);
    CHECK(intersect(point_class(0), point_class(1)) == 0);
    CHECK(intersect(point_class(0), point_class(0)) == -1);
    CHECK(intersect(line_class(), point_class(3)) == 0);

    const DivisorClass k = canonical_class();
    CHECK(k.d == -3);
    for (int i = 0; i < kPoints; ++i) CHECK(k.m[i] == -1);
    CHECK(intersect(k, k) == 9 - 8);  // direct expansion

    // F.E_i reads off the coefficient, F.L reads off the degree
    DivisorClass f{5, {1, 3, 2, 0, 0, 0, 0, 0}};
    CHECK(intersect(f, point_class(1)) == 3);
    CHECK(intersect(f, line_class()) == 5);
}

TEST_CASE("intersect is symmetric and bilinear") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const DivisorClass a = random_class(rng, 50, 20);
        const DivisorClass b = random_class(rng, 50, 20);
        const DivisorClass c = random_class(rng, 50, 20);
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(a + b, c) == intersect(a, c) + intersect(b, c));
        std::int64_t self = a.d * a.d;
        for (int i = 0; i < kPoints; ++i) self -= a.m[i] * a.m[i];
        CHECK(intersect(a, a) == self);
    }
}

TEST_CASE("intersect survives multiplicities up to 1e6") {
    DivisorClass f;
    f.d = 3'000'000;
    f.m.fill(1'000'000);
    CHECK(intersect(f, f) == 9'000'000'000'000LL - 8'000'000'000'000LL);
}

TEST_CASE("monotone_normalize sorts and round-trips") {
    DivisorClass f{5, {1, 3, 2, 0, 0, 0, 0, 0}};
    const MonotoneResult r = monotone_normalize(f);
    CHECK(r.cls == DivisorClass{5, {3, 2, 1, 0, 0, 0, 0, 0}});
    CHECK(permute_back(r.cls, r.perm) == f);

    // already monotone input gives the identity permutation
    const MonotoneResult id = monotone_normalize(r.cls);
    CHECK(id.cls == r.cls);
    for (int i = 0; i < kPoints; ++i) CHECK(id.perm[i] == i);

    CHECK(is_monotone(r.cls));
    CHECK(!is_monotone(f));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const DivisorClass g = random_class(rng, 30, 10);
        const MonotoneResult m = monotone_normalize(g);
        CHECK(is_monotone(m.cls));
        CHECK(permute_back(m.cls, m.perm) == g);
    }
}

TEST_CASE("cremona basics") {
    const DivisorClass e8 = point_class(7);
    CHECK(cremona(e8, 0, 1, 2) == e8);  // disjoint support

    // the line through the first two points maps to E_3
    DivisorClass line12{1, {1, 1, 0, 0, 0, 0, 0, 0}};
    const DivisorClass image = cremona(line12, 0, 1, 2);
    CHECK(intersect(image, image) == -1);
    CHECK(intersect(image, canonical_class()) == -1);
    CHECK(image == point_class(2));

    CHECK_THROWS_AS((void)cremona(e8, 1, 1, 2), std::invalid_argument);
}

TEST_CASE("cremona preserves the form and fixes K") {
    std::mt19937_64 rng(99);
    const DivisorClass k = canonical_class();
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> di(0, kPoints - 1);
        int i = di(rng), j = di(rng), l = di(rng);
        if (i == j || i == l || j == l) continue;
        const DivisorClass a = random_class(rng, 40, 15);
        const DivisorClass b = random_class(rng, 40, 15);
        CHECK(intersect(cremona(a, i, j, l), cremona(b, i, j, l)) == intersect(a, b));
        CHECK(cremona(cremona(a, i, j, l), i, j, l) == a);  // involution
        CHECK(cremona(k, i, j, l) == k);
    }
}

TEST_CASE("triples round-trip") {
    const Triple t{11, 4, 3};
    const DivisorClass f = t.expand();
    CHECK(f == DivisorClass{11, {4, 4, 4, 4, 4, 4, 4, 3}});
    REQUIRE(to_triple(f).has_value());
    CHECK(*to_triple(f) == t);

    DivisorClass not_uniform{5, {2, 1, 1, 1, 1, 1, 1, 0}};
    CHECK(!to_triple(not_uniform).has_value());
}

TEST_CASE("text form") {
    CHECK(to_string(canonical_class()) == "-3 -1 -1 -1 -1 -1 -1 -1 -1");
}
