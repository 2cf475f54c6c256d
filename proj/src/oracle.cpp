#include "fatpoints/oracle.hpp"

#include <algorithm>
#include <random>

#include "fatpoints/mu_rank.hpp"

namespace fatpoints {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 mulmod_wide(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 powmod(u64 base, u64 exp, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mulmod_wide(r, base, p);
        base = mulmod_wide(base, base, p);
        exp >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_wide(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Dense matrix mod p, p < 2^31 so products fit in u64 without widening.
struct ModMatrix {
    std::size_t nr = 0, nc = 0;
    u64 p = 0;
    std::vector<u32> a;

    ModMatrix(std::size_t rows, std::size_t cols, u64 prime)
        : nr(rows), nc(cols), p(prime), a(rows * cols, 0) {}

    u32* row(std::size_t r) { return a.data() + r * nc; }
    const u32* row(std::size_t r) const { return a.data() + r * nc; }
};

u64 invmod(u64 v, u64 p) { return powmod(v, p - 2, p); }

// Row echelon form; full = reduced (pivots normalized, cleared above too).
std::size_t echelonize(ModMatrix& m, bool full, std::vector<std::size_t>* pivot_cols) {
    const u64 p = m.p;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.nc && r < m.nr; ++c) {
        std::size_t sel = r;
        while (sel < m.nr && m.row(sel)[c] == 0) ++sel;
        if (sel == m.nr) continue;
        if (sel != r)
            std::swap_ranges(m.row(sel), m.row(sel) + m.nc, m.row(r));
        const u64 inv = invmod(m.row(r)[c], p);
        u32* pr = m.row(r);
        for (std::size_t j = c; j < m.nc; ++j) pr[j] = static_cast<u32>(pr[j] * inv % p);
        const std::size_t lo = full ? 0 : r + 1;
        for (std::size_t i = lo; i < m.nr; ++i) {
            if (i == r) continue;
            const u64 f = m.row(i)[c];
            if (f == 0) continue;
            u32* ri = m.row(i);
            for (std::size_t j = c; j < m.nc; ++j) {
                const u64 v = ri[j] + p * p - f * pr[j];
                ri[j] = static_cast<u32>(v % p);
            }
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

// Rank via an incremental echelon basis. Incoming rows are eliminated in a
// u64 buffer against the stored normalized pivots; entries are only reduced
// mod p when the accumulated axpy count could overflow, which keeps the inner
// loop a plain multiply-accumulate. Handles the full-scale instances (about
// 12000 square) where textbook elimination with a modulo per element crawls.
std::size_t matrix_rank(const ModMatrix& m) {
    const u64 p = m.p;
    const std::size_t nc = m.nc;
    // after a reduce every entry is < p; each axpy adds at most (p-1)^2
    const u64 max_axpys = (~0ull - p) / ((p - 1) * (p - 1));
    std::vector<std::vector<u32>> pivots;
    std::vector<std::size_t> pivot_at(nc, SIZE_MAX);
    std::vector<u64> buf(nc);

    for (std::size_t r = 0; r < m.nr; ++r) {
        const u32* src = m.row(r);
        for (std::size_t j = 0; j < nc; ++j) buf[j] = src[j];
        u64 axpys = 0;
        for (std::size_t c = 0; c < nc; ++c) {
            buf[c] %= p;
            if (buf[c] == 0) continue;
            if (pivot_at[c] == SIZE_MAX) {
                for (std::size_t j = c; j < nc; ++j) buf[j] %= p;
                const u64 inv = invmod(buf[c], p);
                std::vector<u32> row(nc, 0);
                for (std::size_t j = c; j < nc; ++j)
                    row[j] = static_cast<u32>(buf[j] * inv % p);
                pivot_at[c] = pivots.size();
                pivots.push_back(std::move(row));
                break;
            }
            const std::vector<u32>& pr = pivots[pivot_at[c]];
            const u64 g = p - buf[c];
            for (std::size_t j = c; j < nc; ++j) buf[j] += g * pr[j];
            if (++axpys >= max_axpys) {
                for (std::size_t j = c; j < nc; ++j) buf[j] %= p;
                axpys = 0;
            }
        }
    }
    return pivots.size();
}

// Basis of the right kernel, one vector per free column.
std::vector<std::vector<u32>> kernel_basis(ModMatrix m) {
    std::vector<std::size_t> pivots;
    const std::size_t rank = echelonize(m, true, &pivots);
    std::vector<char> is_pivot(m.nc, 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<u32>> basis;
    for (std::size_t f = 0; f < m.nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<u32> v(m.nc, 0);
        v[f] = 1;
        for (std::size_t k = 0; k < rank; ++k) {
            const u32 coeff = m.row(k)[f];
            if (coeff) v[pivots[k]] = static_cast<u32>(m.p - coeff);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Index of x^ax y^ay z^(t-ax-ay) among degree-t monomials, ax-major.
std::size_t monomial_index(i64 t, i64 ax, i64 ay) {
    return static_cast<std::size_t>(ax * (t + 1) - ax * (ax - 1) / 2 + ay);
}

std::array<i64, kPoints> padded(std::span<const i64> mults) {
    if (mults.empty() || mults.size() > kPoints)
        throw std::invalid_argument("oracle: 1 to 8 multiplicities required");
    std::array<i64, kPoints> out{};
    for (std::size_t i = 0; i < mults.size(); ++i) {
        if (mults[i] < 0) throw std::invalid_argument("oracle: negative multiplicity");
        out[i] = mults[i];
    }
    return out;
}

void check_field(const OracleInstance& inst, const std::array<i64, kPoints>& mults, i64 t) {
    if (t < 0) throw std::invalid_argument("oracle: negative degree");
    const i64 max_mult = *std::max_element(mults.begin(), mults.end());
    if (static_cast<u64>(t) >= inst.prime || static_cast<u64>(max_mult) >= inst.prime)
        throw std::invalid_argument("oracle: prime too small for this degree/multiplicity");
}

// Rows are the order-(ax,ay) derivative conditions at each point, columns the
// degree-t monomials in the affine chart z = 1.
ModMatrix conditions_matrix(const OracleInstance& inst, const std::array<i64, kPoints>& mults,
                            i64 t) {
    const u64 p = inst.prime;
    std::size_t nrows = 0;
    for (i64 m : mults) nrows += static_cast<std::size_t>(m * (m + 1) / 2);
    ModMatrix mat(nrows, static_cast<std::size_t>(r_dim(t)), p);

    std::size_t row = 0;
    for (int pt = 0; pt < kPoints; ++pt) {
        const i64 mult = mults[pt];
        if (mult == 0) continue;
        const u64 px = inst.points[pt][0] % p, py = inst.points[pt][1] % p;
        std::vector<u64> xpow(t + 1), ypow(t + 1);
        xpow[0] = ypow[0] = 1;
        for (i64 e = 1; e <= t; ++e) {
            xpow[e] = xpow[e - 1] * px % p;
            ypow[e] = ypow[e - 1] * py % p;
        }
        // falling[n][k] = n (n-1) ... (n-k+1) mod p, n <= t < p
        std::vector<std::vector<u64>> falling(t + 1, std::vector<u64>(mult, 0));
        for (i64 n = 0; n <= t; ++n) {
            u64 acc = 1;
            for (i64 k = 0; k < mult; ++k) {
                falling[n][k] = acc;
                acc = acc * ((n - k + p) % p) % p;
            }
        }
        for (i64 ax = 0; ax < mult; ++ax) {
            for (i64 ay = 0; ax + ay < mult; ++ay) {
                u32* r = mat.row(row++);
                for (i64 ex = ax; ex <= t; ++ex) {
                    for (i64 ey = ay; ex + ey <= t; ++ey) {
                        const u64 v = falling[ex][ax] * falling[ey][ay] % p *
                                      xpow[ex - ax] % p * ypow[ey - ay] % p;
                        r[monomial_index(t, ex, ey)] = static_cast<u32>(v);
                    }
                }
            }
        }
    }
    return mat;
}

}  // namespace

OracleInstance make_oracle(std::uint64_t prime, std::uint64_t seed) {
    if (prime >= (1ull << 31) || !is_prime(prime))
        throw std::invalid_argument("oracle: modulus must be a prime below 2^31");
    OracleInstance inst;
    inst.prime = prime;
    inst.seed = seed;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        for (auto& pt : inst.points) {
            pt[0] = rng() % prime;
            pt[1] = rng() % prime;
        }
        bool generic = true;
        for (int i = 0; i < kPoints && generic; ++i)
            for (int j = i + 1; j < kPoints && generic; ++j)
                for (int k = j + 1; k < kPoints && generic; ++k) {
                    // det of the three points in the chart (x, y, 1)
                    const u64 p = prime;
                    const auto &a = inst.points[i], &b = inst.points[j], &c = inst.points[k];
                    u64 det = (a[0] * ((b[1] + p - c[1]) % p) + b[0] * ((c[1] + p - a[1]) % p) +
                               c[0] * ((a[1] + p - b[1]) % p)) %
                              p;
                    if (det == 0) generic = false;
                }
        if (generic) return inst;
    }
    throw std::invalid_argument("oracle: could not draw points in general position");
}

std::int64_t ideal_dim(const OracleInstance& inst, std::span<const std::int64_t> mults,
                       std::int64_t t) {
    const auto m = padded(mults);
    check_field(inst, m, t);
    ModMatrix mat = conditions_matrix(inst, m, t);
    return r_dim(t) - static_cast<i64>(matrix_rank(std::move(mat)));
}

MuBrute mu_rank_bruteforce(const OracleInstance& inst, std::span<const std::int64_t> mults,
                           std::int64_t t) {
    const auto m = padded(mults);
    check_field(inst, m, t + 1);
    const auto basis = kernel_basis(conditions_matrix(inst, m, t));
    const std::size_t k = basis.size();
    const i64 dim_next = ideal_dim(inst, mults, t + 1);
    if (k == 0) return {0, dim_next};

    // Rows x*b, y*b, z*b for each degree-t kernel element b, written in the
    // degree-(t+1) monomial basis.
    ModMatrix stack(3 * k, static_cast<std::size_t>(r_dim(t + 1)), inst.prime);
    std::size_t row = 0;
    for (const auto& b : basis) {
        u32* rx = stack.row(row++);
        u32* ry = stack.row(row++);
        u32* rz = stack.row(row++);
        for (i64 ex = 0; ex <= t; ++ex) {
            for (i64 ey = 0; ex + ey <= t; ++ey) {
                const u32 v = b[monomial_index(t, ex, ey)];
                if (!v) continue;
                rx[monomial_index(t + 1, ex + 1, ey)] = v;
                ry[monomial_index(t + 1, ex, ey + 1)] = v;
                rz[monomial_index(t + 1, ex, ey)] = v;
            }
        }
    }
    const i64 rank = static_cast<i64>(matrix_rank(std::move(stack)));
    MuBrute out;
    out.ker = static_cast<i64>(3 * k) - rank;
    out.cok = dim_next - rank;
    if (out.ker < 0 || out.cok < 0)
        throw internal_error("oracle: negative kernel or cokernel dimension");
    return out;
}

CompareReport compare(const OracleInstance& inst, std::span<const std::int64_t> mults,
                      std::int64_t t_max) {
    CompareReport rep;
    const FatPointScheme z = FatPointScheme::from(mults);
    for (i64 t = 0; t <= t_max; ++t) {
        CompareLine line;
        line.mults = z.mults;
        line.t = t;
        line.engine_h = hilbert_function(z, t);
        line.oracle_h = ideal_dim(inst, z.mults, t);
        const MuRankReport mu = mu_rank(z.class_in_degree(t));
        line.engine_ker = mu.ker;
        line.engine_cok = mu.cok;
        const MuBrute brute = mu_rank_bruteforce(inst, z.mults, t);
        line.oracle_ker = brute.ker;
        line.oracle_cok = brute.cok;
        rep.lines.push_back(line);
        if (!line.match()) {
            rep.first_mismatch = rep.lines.size() - 1;
            break;
        }
    }
    return rep;
}

}  // namespace fatpoints
