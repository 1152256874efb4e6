#include "qldpc/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qldpc/rng.hpp"

namespace qldpc {

namespace {

constexpr int kBuildAttempts = 64;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::size_t mult_order(std::uint64_t a, std::uint64_t mod) {
    std::uint64_t x = a % mod;
    if (gcd_u64(x, mod) != 1) throw std::invalid_argument("mult_order: not a unit");
    std::size_t ord = 1;
    std::uint64_t y = x;
    while (y != 1) {
        y = y * x % mod;
        ++ord;
    }
    return ord;
}

BitVec random_weight_row(std::size_t v, std::size_t weight, Rng& rng) {
    if (weight > v) throw std::invalid_argument("random_weight_row: weight exceeds length");
    BitVec row(v);
    std::size_t placed = 0;
    while (placed < weight) {
        const std::size_t p = rng.next_below(v);
        if (!row.get(p)) {
            row.set(p);
            ++placed;
        }
    }
    return row;
}

// Weight-w row whose support is closed under negation mod v, so the
// circulant it generates is symmetric.
BitVec random_symmetric_row(std::size_t v, std::size_t weight, Rng& rng) {
    BitVec row(v);
    std::size_t remaining = weight;
    const bool v_even = v % 2 == 0;
    if (remaining % 2) {
        // one self-paired position: 0, or v/2 when v is even
        const std::size_t fixed = v_even && rng.next_below(2) ? v / 2 : 0;
        row.set(fixed);
        --remaining;
    }
    while (remaining >= 2) {
        const std::size_t p = rng.next_below(v);
        const std::size_t q = (v - p) % v;
        if (p == q || row.get(p) || row.get(q)) continue;
        row.set(p);
        row.set(q);
        remaining -= 2;
    }
    return row;
}

// Polynomial view of circulants: a first row is an element of
// GF(2)[x]/(x^v - 1); circulant product is polynomial product and the
// transpose is the reciprocal a(x^-1).
BitVec poly_mul(const BitVec& a, const BitVec& b) {
    const std::size_t v = a.size();
    BitVec out(v);
    for (std::size_t i : a.support())
        for (std::size_t j : b.support()) out.flip((i + j) % v);
    return out;
}

BitVec poly_hat(const BitVec& a) {
    const std::size_t v = a.size();
    BitVec out(v);
    for (std::size_t i : a.support()) out.set((v - i) % v);
    return out;
}

BitVec poly_shift(const BitVec& a, std::size_t k) {
    const std::size_t v = a.size();
    BitVec out(v);
    for (std::size_t i : a.support()) out.set((i + k) % v);
    return out;
}

BinaryMatrix concat_blocks(const std::vector<BinaryMatrix>& blocks) {
    BinaryMatrix out = blocks.front();
    for (std::size_t i = 1; i < blocks.size(); ++i) out = out.concat_cols(blocks[i]);
    return out;
}

// Row layout (H ; H), X block first: generator i pairs with i + m/2, as the
// supernode decoder assumes.
StabilizerCode make_dual_containing(const BinaryMatrix& h_tilde, std::string kind,
                                    std::uint64_t seed) {
    const BinaryMatrix zero(h_tilde.rows(), h_tilde.cols());
    return StabilizerCode(h_tilde.stack_rows(zero), zero.stack_rows(h_tilde), std::move(kind),
                          seed);
}

StabilizerCode make_css(const BinaryMatrix& hx_tilde, const BinaryMatrix& hz_tilde,
                        std::string kind, std::uint64_t seed) {
    const std::size_t n = hx_tilde.cols();
    return StabilizerCode(hx_tilde.stack_rows(BinaryMatrix(hz_tilde.rows(), n)),
                          BinaryMatrix(hx_tilde.rows(), n).stack_rows(hz_tilde), std::move(kind),
                          seed);
}

void require_valid(const StabilizerCode& code, const char* who) {
    std::string diag;
    if (!code.validate(&diag)) throw std::runtime_error(std::string(who) + ": " + diag);
}

}  // namespace

StabilizerCode build_bicycle(std::size_t n, std::size_t m, std::size_t w, std::uint64_t seed) {
    if (n == 0 || n % 2 || m % 2 || w % 2)
        throw std::invalid_argument("build_bicycle: n, m, w must be even");
    if (w / 2 > n / 2 || m > n || m == 0) throw std::invalid_argument("build_bicycle: bad sizes");
    const std::size_t half = n / 2;
    const std::size_t remove = (n - m) / 2;

    for (int attempt = 0; attempt < kBuildAttempts; ++attempt) {
        Rng rng(mix_seed(seed, attempt));
        const BinaryMatrix a = BinaryMatrix::circulant(random_weight_row(half, w / 2, rng));
        const BinaryMatrix h0 = a.concat_cols(a.transposed());

        // Remove rows one at a time, keeping column weight as uniform as
        // possible: all rows have equal weight, so minimizing the resulting
        // column-weight variance is the same as removing the row whose
        // support carries the largest current column-weight sum. Ties go to
        // the lowest row index.
        std::vector<std::vector<std::size_t>> supports(half);
        for (std::size_t r = 0; r < half; ++r) supports[r] = h0.row_support(r);
        std::vector<std::size_t> colw = h0.column_weights();
        std::vector<bool> removed(half, false);
        for (std::size_t step = 0; step < remove; ++step) {
            std::size_t best = half;
            std::size_t best_sum = 0;
            for (std::size_t r = 0; r < half; ++r) {
                if (removed[r]) continue;
                std::size_t s = 0;
                for (std::size_t c : supports[r]) s += colw[c];
                if (best == half || s > best_sum) {
                    best = r;
                    best_sum = s;
                }
            }
            removed[best] = true;
            for (std::size_t c : supports[best]) --colw[c];
        }
        std::vector<std::size_t> keep;
        for (std::size_t r = 0; r < half; ++r)
            if (!removed[r]) keep.push_back(r);
        const BinaryMatrix h_tilde = h0.submatrix_rows(keep);

        if (h_tilde.rank() != m / 2) continue;  // degenerate draw, resample
        StabilizerCode code = make_dual_containing(h_tilde, "bicycle", seed);
        require_valid(code, "build_bicycle");
        if (code.k() != n - m) continue;
        return code;
    }
    throw std::runtime_error("build_bicycle: no full-rank draw within budget");
}

StabilizerCode build_bibd_bose(std::size_t t, std::size_t alpha) {
    const std::size_t v = 6 * t + 1;
    if (t == 0 || !is_prime(v)) throw std::invalid_argument("build_bibd_bose: 6t+1 must be prime");
    if (alpha % v == 0 || mult_order(alpha, v) != v - 1)
        throw std::invalid_argument("build_bibd_bose: alpha must be primitive mod 6t+1");

    std::vector<BinaryMatrix> blocks;
    for (std::size_t i = 0; i < t; ++i) {
        // base block {0, a^i, a^(2t+i), a^(4t+i)}; column beta of the
        // circulant is the developed block B + beta, so its first row is the
        // indicator of -B mod v
        const std::size_t members[4] = {0, static_cast<std::size_t>(powmod(alpha, i, v)),
                                        static_cast<std::size_t>(powmod(alpha, 2 * t + i, v)),
                                        static_cast<std::size_t>(powmod(alpha, 4 * t + i, v))};
        BitVec first(v);
        for (std::size_t member : members) first.set((v - member) % v);
        if (first.weight() != 4) throw std::runtime_error("build_bibd_bose: degenerate base block");
        blocks.push_back(BinaryMatrix::circulant(first));
    }
    const BinaryMatrix h_tilde = concat_blocks(blocks);
    if (!(h_tilde * h_tilde.transposed()).is_zero())
        throw std::runtime_error("build_bibd_bose: incidence matrix not self-orthogonal");
    StabilizerCode code = make_dual_containing(h_tilde, "bibd", 0);
    require_valid(code, "build_bibd_bose");
    return code;
}

bool is_perfume(std::size_t p, std::size_t sigma, std::size_t tau) {
    if (p < 2) return false;
    if (gcd_u64(sigma % p, p) != 1) return false;
    const std::size_t ord = mult_order(sigma, p);
    std::uint64_t x = sigma % p;
    std::vector<bool> in_group(p, false);
    for (std::size_t i = 1; i <= ord; ++i) {
        if (i < ord && gcd_u64((p + 1 - x) % p, p) != 1) return false;  // 1 - sigma^i
        in_group[x] = true;
        x = x * (sigma % p) % p;
    }
    if (gcd_u64(tau % p, p) != 1) return false;
    return !in_group[tau % p];
}

StabilizerCode build_quasicyclic(std::size_t p, std::size_t sigma, std::size_t tau,
                                 std::size_t j_rows, std::size_t k_rows) {
    if (!is_perfume(p, sigma, tau)) throw std::invalid_argument("build_quasicyclic: not a perfume");
    const std::size_t ord = mult_order(sigma, p);
    const std::size_t l = 2 * ord;
    if (j_rows < 1 || k_rows < 1 || j_rows > ord || k_rows > ord)
        throw std::invalid_argument("build_quasicyclic: need 1 <= J,K <= L/2");

    auto sig_pow = [&](long long e) {
        const long long r = ((e % static_cast<long long>(ord)) + ord) % static_cast<long long>(ord);
        return powmod(sigma, r, p);
    };

    // base matrix entries over Z_P, indexed from zero
    auto base_x = [&](std::size_t j, std::size_t col) -> std::size_t {
        const std::uint64_t s = sig_pow(static_cast<long long>(col) - static_cast<long long>(j));
        return col < l / 2 ? s : (tau % p) * s % p;
    };
    auto base_z = [&](std::size_t k, std::size_t col) -> std::size_t {
        const std::uint64_t s = sig_pow(static_cast<long long>(k) - static_cast<long long>(col));
        const std::uint64_t val = col < l / 2 ? (tau % p) * s % p : s;
        return (p - val) % p;
    };

    auto lift = [&](std::size_t rows, auto&& base) {
        BinaryMatrix h(rows * p, l * p);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < l; ++c) {
                const std::size_t s = base(r, c);
                for (std::size_t i = 0; i < p; ++i) h.set(r * p + i, c * p + (i + s) % p);
            }
        return h;
    };

    const BinaryMatrix hx = lift(j_rows, base_x);
    const BinaryMatrix hz = lift(k_rows, base_z);
    if (!(hz * hx.transposed()).is_zero())
        throw std::runtime_error("build_quasicyclic: commutation failed");
    if (hx.count_4cycles() != 0 || hz.count_4cycles() != 0)
        throw std::runtime_error("build_quasicyclic: lifted graph has 4-cycles");
    StabilizerCode code = make_css(hx, hz, "quasicyclic", 0);
    require_valid(code, "build_quasicyclic");
    return code;
}

namespace {

// Meet-in-the-middle search for a weight-w solution y of
//   y*hat(b) + b*hat(y) = c   over GF(2)[x]/(x^v - 1),
// which is linear in the coefficients of y. Returns the first solution in
// lexicographic support order, or nullopt when no weight-w solution exists.
std::optional<BitVec> solve_last_block(const BitVec& b, const BitVec& c, std::size_t weight) {
    const std::size_t v = b.size();
    const BitVec bh = poly_hat(b);
    // image of the unit vector x^k: x^k*hat(b) + b*x^(-k)
    std::vector<BitVec> col;
    col.reserve(v);
    for (std::size_t k = 0; k < v; ++k) {
        BitVec ck = poly_shift(bh, k);
        ck ^= poly_shift(b, (v - k) % v);
        col.push_back(std::move(ck));
    }
    auto key_of = [](const BitVec& x) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint64_t w : x.words()) {
            h ^= w;
            h *= 0x100000001b3ULL;
        }
        return h;
    };
    auto advance = [](std::vector<std::size_t>& s, std::size_t limit) {
        std::size_t i = s.size();
        while (i-- > 0) {
            if (s[i] + (s.size() - i) <= limit) {
                ++s[i];
                for (std::size_t j = i + 1; j < s.size(); ++j) s[j] = s[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    const std::size_t w1 = weight / 2;
    const std::size_t w2 = weight - w1;

    struct Cand {
        std::vector<std::size_t> idx;
        BitVec sum;
    };
    std::unordered_multimap<std::uint64_t, Cand> table;
    if (w1 == 0) {
        table.emplace(key_of(c), Cand{{}, c});
    } else {
        std::vector<std::size_t> comb(w1);
        std::iota(comb.begin(), comb.end(), 0);
        do {
            BitVec sum = c;
            for (std::size_t k : comb) sum ^= col[k];
            table.emplace(key_of(sum), Cand{comb, sum});
        } while (advance(comb, v - 1));
    }

    std::vector<std::size_t> comb2(w2);
    std::iota(comb2.begin(), comb2.end(), 0);
    do {
        BitVec sum(v);
        for (std::size_t k : comb2) sum ^= col[k];
        auto [lo, hi] = table.equal_range(key_of(sum));
        std::optional<std::vector<std::size_t>> best;
        for (auto it = lo; it != hi; ++it) {
            if (it->second.sum != sum) continue;
            bool disjoint = true;
            for (std::size_t k : it->second.idx)
                if (std::find(comb2.begin(), comb2.end(), k) != comb2.end()) disjoint = false;
            if (!disjoint) continue;
            if (!best || it->second.idx < *best) best = it->second.idx;
        }
        if (best) {
            BitVec y(v);
            for (std::size_t k : *best) y.set(k);
            for (std::size_t k : comb2) y.set(k);
            return y;
        }
    } while (advance(comb2, v - 1));
    return std::nullopt;
}

}  // namespace

StabilizerCode build_bicycle_like(std::size_t v, std::size_t a, std::size_t weight,
                                  std::uint64_t seed) {
    if (a < 2 || a % 2) throw std::invalid_argument("build_bicycle_like: a must be even");
    if (weight == 0 || weight > v) throw std::invalid_argument("build_bicycle_like: bad weight");
    const std::size_t half = a / 2;

    for (int attempt = 0; attempt < kBuildAttempts; ++attempt) {
        Rng rng(mix_seed(seed, attempt));
        std::vector<BitVec> poly(a, BitVec(v));
        for (std::size_t i = 0; i + 1 < a; ++i) poly[i] = random_weight_row(v, weight, rng);

        // Commutation of ~HZ ~HX^T in the polynomial ring reads
        //   sum_{i<half} [ a_{half+i} hat(a_i) + a_i hat(a_{half+i}) ] = 0.
        // The final block pairs with a_{half-1}; solve for it given the
        // rest. When no solution of the target weight exists (the typical
        // case), complete the second half with the transposed first-half
        // blocks in reverse order, which satisfies the condition
        // identically; an unpaired middle block is redrawn symmetric.
        BitVec rhs(v);
        for (std::size_t i = 0; i + 1 < half; ++i) {
            rhs ^= poly_mul(poly[half + i], poly_hat(poly[i]));
            rhs ^= poly_mul(poly[i], poly_hat(poly[half + i]));
        }
        if (auto solved = solve_last_block(poly[half - 1], rhs, weight)) {
            poly[a - 1] = *solved;
        } else {
            for (std::size_t i = 1; i <= half; ++i) {
                const std::size_t src = half + 1 - i;
                if (src == i) {
                    poly[i - 1] = random_symmetric_row(v, weight, rng);
                    poly[half + i - 1] = poly[i - 1];
                } else {
                    poly[half + i - 1] = poly_hat(poly[src - 1]);
                }
            }
        }

        bool weights_ok = true;
        for (std::size_t i = 0; i < a; ++i)
            if (poly[i].weight() != weight) weights_ok = false;
        if (!weights_ok) continue;

        std::vector<BinaryMatrix> bx, bz;
        for (std::size_t i = 0; i < a; ++i) bx.push_back(BinaryMatrix::circulant(poly[i]));
        for (std::size_t i = 0; i < a; ++i) bz.push_back(bx[(half + i) % a]);
        const BinaryMatrix hx = concat_blocks(bx);
        const BinaryMatrix hz = concat_blocks(bz);
        if (!(hz * hx.transposed()).is_zero()) continue;

        StabilizerCode code = make_css(hx, hz, "bicycle_like", seed);
        require_valid(code, "build_bicycle_like");
        if (code.k() != v * a - 2 * v) continue;
        return code;
    }
    throw std::runtime_error("build_bicycle_like: commutation search budget exhausted");
}

namespace {

BinaryMatrix random_permutation(std::size_t n, Rng& rng) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[rng.next_below(i + 1)]);
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, perm[i]);
    return m;
}

BinaryMatrix block_2x2(const BinaryMatrix& tl, const BinaryMatrix& tr, const BinaryMatrix& bl,
                       const BinaryMatrix& br) {
    return tl.concat_cols(tr).stack_rows(bl.concat_cols(br));
}

StabilizerCode build_ncss(bool variant_a, std::size_t a, std::size_t bs, std::size_t weight,
                          std::uint64_t seed, std::size_t expected_k) {
    if (a == 0 || bs == 0 || weight == 0 || weight > bs)
        throw std::invalid_argument("build_ncss: bad parameters");
    for (int attempt = 0; attempt < kBuildAttempts; ++attempt) {
        Rng rng(mix_seed(seed, attempt));
        std::vector<BinaryMatrix> ax, az;
        for (std::size_t i = 0; i < a; ++i) {
            const BinaryMatrix bx = BinaryMatrix::circulant(random_weight_row(bs, weight, rng));
            const BinaryMatrix bz = BinaryMatrix::circulant(random_weight_row(bs, weight, rng));
            const BinaryMatrix p = random_permutation(bs, rng);
            const BinaryMatrix pt = p.transposed();
            if (variant_a) {
                ax.push_back(block_2x2(bx, bx.transposed() * pt, p * bx.transposed(), p * bx * pt));
                az.push_back(block_2x2(bz, bz.transposed() * pt, p * bz.transposed(), p * bz * pt));
            } else {
                ax.push_back(bx.concat_cols(bx.transposed() * pt));
                az.push_back(bz.concat_cols(bz.transposed() * pt));
            }
        }
        StabilizerCode code(concat_blocks(ax), concat_blocks(az), variant_a ? "ncss_a" : "ncss_b",
                            seed);
        std::string diag;
        if (!code.validate(&diag)) continue;  // resample on commutation failure
        if (expected_k != 0 && code.k() != expected_k) continue;
        return code;
    }
    throw std::runtime_error("build_ncss: search budget exhausted");
}

}  // namespace

StabilizerCode build_ncss_a(std::size_t a, std::size_t block_size, std::size_t weight,
                            std::uint64_t seed, std::size_t expected_k) {
    return build_ncss(true, a, block_size, weight, seed, expected_k);
}

StabilizerCode build_ncss_b(std::size_t a, std::size_t block_size, std::size_t weight,
                            std::uint64_t seed, std::size_t expected_k) {
    return build_ncss(false, a, block_size, weight, seed, expected_k);
}

}  // namespace qldpc
