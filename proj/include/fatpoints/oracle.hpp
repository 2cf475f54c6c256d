#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fatpoints/resolution.hpp"

namespace fatpoints {

// Brute-force verifier: random points over a large prime field, fat point
// ideals realized as explicit vanishing conditions, dimensions and map ranks
// obtained by exact modular Gaussian elimination. Same (prime, seed) always
// reproduces the same points and results.
struct OracleInstance {
    std::uint64_t prime = 1'000'003;
    std::uint64_t seed = 1;
    std::array<std::array<std::uint64_t, 2>, kPoints> points{};  // affine chart z = 1
};

// Draws 8 points uniformly in the affine chart; re-draws (up to 100 attempts)
// until they are pairwise distinct with no three collinear. The modulus must
// be an odd prime below 2^31.
[[nodiscard]] OracleInstance make_oracle(std::uint64_t prime = 1'000'003, std::uint64_t seed = 1);

// dim of the degree-t piece of the ideal: C(t+2,2) minus the rank of the
// matrix of derivative conditions of order < m_i at each point. Requires
// prime > t and prime > max multiplicity (else the derivative conditions
// would not cut out the right subscheme); violations are usage errors.
[[nodiscard]] std::int64_t ideal_dim(const OracleInstance& inst,
                                     std::span<const std::int64_t> mults, std::int64_t t);

struct MuBrute {
    std::int64_t ker = 0;
    std::int64_t cok = 0;
};

// Kernel basis of the degree-t conditions, multiplied through by x, y, z and
// stacked in degree t+1; ranks read off the stack. Requires prime > t+1.
[[nodiscard]] MuBrute mu_rank_bruteforce(const OracleInstance& inst,
                                         std::span<const std::int64_t> mults, std::int64_t t);

struct CompareLine {
    std::array<std::int64_t, kPoints> mults{};
    std::int64_t t = 0;
    std::int64_t engine_h = 0, oracle_h = 0;
    std::int64_t engine_ker = 0, oracle_ker = 0;
    std::int64_t engine_cok = 0, oracle_cok = 0;

    [[nodiscard]] bool match() const {
        return engine_h == oracle_h && engine_ker == oracle_ker && engine_cok == oracle_cok;
    }
};

struct CompareReport {
    std::vector<CompareLine> lines;
    std::optional<std::size_t> first_mismatch;

    [[nodiscard]] bool ok() const { return !first_mismatch.has_value(); }
};

// Runs engine and oracle side by side for t = 0..t_max; stops at the first
// disagreement. A mismatch is reported, not thrown.
[[nodiscard]] CompareReport compare(const OracleInstance& inst,
                                    std::span<const std::int64_t> mults, std::int64_t t_max);

}  // namespace fatpoints
