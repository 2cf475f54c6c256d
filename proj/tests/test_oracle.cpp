#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "fatpoints/oracle.hpp"

using namespace fatpoints;

namespace {
const std::vector<std::int64_t> kDouble{2};
}

TEST_CASE("oracle determinism and genericity") {
    const OracleInstance a = make_oracle(1'000'003, 7);
    const OracleInstance b = make_oracle(1'000'003, 7);
    CHECK(a.points == b.points);
    const OracleInstance c = make_oracle(1'000'003, 8);
    CHECK(a.points != c.points);

    CHECK_THROWS_AS((void)make_oracle(1'000'004, 1), std::invalid_argument);  // composite
    CHECK_THROWS_AS((void)make_oracle(1ull << 33, 1), std::invalid_argument);
}

TEST_CASE("ideal dimensions") {
    const OracleInstance inst = make_oracle();

    CHECK(ideal_dim(inst, kDouble, 2) == 3);  // three derivative conditions
    for (std::int64_t t = 0; t <= 8; ++t)
        CHECK(ideal_dim(inst, std::vector<std::int64_t>{0}, t) == (t + 2) * (t + 1) / 2);

    // one simple point kills one dimension in every positive degree
    for (std::int64_t t = 1; t <= 6; ++t)
        CHECK(ideal_dim(inst, std::vector<std::int64_t>{1}, t) == (t + 2) * (t + 1) / 2 - 1);

    CHECK_THROWS_AS((void)ideal_dim(make_oracle(13, 1), kDouble, 20), std::invalid_argument);
}

TEST_CASE("brute-force multiplication ranks") {
    const OracleInstance inst = make_oracle();

    const MuBrute dp = mu_rank_bruteforce(inst, kDouble, 2);
    CHECK(dp.ker == 2);
    CHECK(dp.cok == 0);

    // eight simple points in degree 3: the anticanonical case
    const MuBrute anti = mu_rank_bruteforce(inst, std::vector<std::int64_t>(8, 1), 3);
    CHECK(anti.ker == 0);
    CHECK(anti.cok == 1);

    // empty scheme, degree 1: Koszul kernel of R_1 (x) R_1 -> R_2
    const MuBrute koszul = mu_rank_bruteforce(inst, std::vector<std::int64_t>{0}, 1);
    CHECK(koszul.ker == 3);
    CHECK(koszul.cok == 0);

    // internal rank-nullity of the oracle
    for (std::int64_t t = 0; t <= 6; ++t) {
        const MuBrute mu = mu_rank_bruteforce(inst, kDouble, t);
        CHECK(mu.cok - mu.ker ==
              ideal_dim(inst, kDouble, t + 1) - 3 * ideal_dim(inst, kDouble, t));
    }
}

TEST_CASE("engine agrees with the oracle on sample schemes") {
    const OracleInstance inst = make_oracle();

    CHECK(compare(inst, kDouble, 6).ok());
    CHECK(compare(inst, std::vector<std::int64_t>{3, 3, 2, 2, 1, 1, 1, 0}, 12).ok());
    CHECK(compare(inst, std::vector<std::int64_t>{0}, 4).ok());

    // a second independent seed
    const OracleInstance inst2 = make_oracle(1'000'003, 2);
    CHECK(compare(inst2, std::vector<std::int64_t>{3, 3, 2, 2, 1, 1, 1, 0}, 12).ok());
}

TEST_CASE("large prime exercises the lazy-reduction rank path") {
    // near the 2^31 modulus bound the rank routine must reduce constantly
    const OracleInstance inst = make_oracle(2147483647ull, 5);
    CHECK(ideal_dim(inst, kDouble, 2) == 3);
    CHECK(compare(inst, std::vector<std::int64_t>{2, 1}, 6).ok());
}

TEST_CASE("mismatch reporting flags a wrong engine") {
    // harness self-test: a fabricated wrong value must be flagged
    CompareLine line;
    line.t = 4;
    line.engine_h = 11;
    line.oracle_h = 12;
    line.engine_ker = line.oracle_ker = 0;
    line.engine_cok = line.oracle_cok = 1;
    CHECK(!line.match());

    CompareReport rep;
    rep.lines.push_back(line);
    rep.first_mismatch = 0;
    CHECK(!rep.ok());
}

TEST_CASE("full-scale hilbert value" * doctest::skip(std::getenv("FATPOINTS_EXPENSIVE") == nullptr)) {
    // uniform multiplicity 54 in degree 153; large elimination, minutes of work
    const OracleInstance inst = make_oracle();
    CHECK(ideal_dim(inst, std::vector<std::int64_t>(8, 54), 153) == 55);
}
