#include "qldpc/bp.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace qldpc {

namespace {

inline void wht2(double* v) {
    const double a = v[0], b = v[1];
    v[0] = a + b;
    v[1] = a - b;
}

inline void wht4(double* v) {
    const double a = v[0] + v[1], b = v[0] - v[1];
    const double c = v[2] + v[3], d = v[2] - v[3];
    v[0] = a + c;
    v[1] = b + d;
    v[2] = a - c;
    v[3] = b - d;
}

inline void normalize_floor(double* v, std::size_t q, double floor) {
    double sum = 0.0;
    for (std::size_t s = 0; s < q; ++s) {
        if (!(v[s] > 0.0)) v[s] = 0.0;  // clears rounding negatives and NaN
        sum += v[s];
    }
    if (!(sum > 0.0) || !std::isfinite(sum)) {
        const double u = 1.0 / static_cast<double>(q);
        for (std::size_t s = 0; s < q; ++s) v[s] = u;
        return;
    }
    const double inv = 1.0 / sum;
    for (std::size_t s = 0; s < q; ++s) {
        v[s] *= inv;
        if (v[s] < floor) v[s] = floor;
    }
}

// Permutation mu~[t] = mu[perm(h)[t]] realizing e = conj(H^-1 t), and the
// output index H_ij * conj(a) of the final recombination.
inline GF4 trace_perm(GF4 h, GF4 t) { return gf4_conj(gf4_mul(gf4_conj(h), t)); }
inline GF4 trace_out_idx(GF4 h, GF4 a) { return gf4_mul(h, gf4_conj(a)); }

inline std::uint8_t argmax_lowest(const double* v, std::size_t q) {
    std::uint8_t best = 0;
    for (std::size_t s = 1; s < q; ++s)
        if (v[s] > v[best]) best = static_cast<std::uint8_t>(s);
    return best;
}

}  // namespace

void MessageState::resize(const FactorGraph& g) {
    const std::size_t q = g.q();
    mu.resize(g.num_edges() * q);
    lambda.resize(g.num_edges() * q);
    marginal.resize(g.num_vars * q);
    hard.resize(g.num_vars);
    synd.resize(g.num_checks);
    const std::size_t deg = std::max(g.max_check_degree(), g.max_var_degree()) + 2;
    fwd.resize(deg * 4);
    bwd.resize(deg * 4);
}

void check_update(CheckKind kind, std::size_t degree, std::span<const double> incoming,
                  std::span<const GF4> coeffs, std::uint8_t target, std::span<double> outgoing,
                  double floor) {
    if (degree == 0) throw std::invalid_argument("check_update: degree-0 check");
    thread_local std::vector<double> t, pre, suf;
    const std::size_t q = kind == CheckKind::Gf2 ? 2 : 4;
    t.resize(degree * q);
    pre.resize((degree + 1) * q);
    suf.resize((degree + 1) * q);

    // per-edge transforms of the (permuted) incoming messages
    for (std::size_t e = 0; e < degree; ++e) {
        double* te = t.data() + e * q;
        const double* in = incoming.data() + e * q;
        if (kind == CheckKind::Gf4Trace) {
            const GF4 h = coeffs[e];
            for (GF4 s = 0; s < 4; ++s) te[s] = in[trace_perm(h, s)];
            wht4(te);
        } else if (kind == CheckKind::Gf4Plain) {
            std::memcpy(te, in, 4 * sizeof(double));
            wht4(te);
        } else {
            te[0] = in[0];
            te[1] = in[1];
            wht2(te);
        }
    }

    // running products excluding each edge
    for (std::size_t s = 0; s < q; ++s) pre[s] = 1.0;
    for (std::size_t e = 0; e < degree; ++e)
        for (std::size_t s = 0; s < q; ++s) pre[(e + 1) * q + s] = pre[e * q + s] * t[e * q + s];
    for (std::size_t s = 0; s < q; ++s) suf[degree * q + s] = 1.0;
    for (std::size_t e = degree; e-- > 0;)
        for (std::size_t s = 0; s < q; ++s) suf[e * q + s] = t[e * q + s] * suf[(e + 1) * q + s];

    for (std::size_t e = 0; e < degree; ++e) {
        double conv[4];
        for (std::size_t s = 0; s < q; ++s) conv[s] = pre[e * q + s] * suf[(e + 1) * q + s];
        double* out = outgoing.data() + e * q;
        if (kind == CheckKind::Gf2) {
            wht2(conv);
            out[0] = conv[target & 1];
            out[1] = conv[(target ^ 1) & 1];
        } else if (kind == CheckKind::Gf4Plain) {
            wht4(conv);
            for (GF4 a = 0; a < 4; ++a) out[a] = conv[target ^ a];
        } else {
            wht4(conv);
            const GF4 wz = target ? gf4_omega : gf4_zero;
            const GF4 h = coeffs[e];
            for (GF4 a = 0; a < 4; ++a) {
                const GF4 i1 = gf4_add(wz, trace_out_idx(h, a));
                out[a] = conv[i1] + conv[i1 ^ 1];
            }
        }
        normalize_floor(out, q, floor);
    }
}

void graph_syndrome(const FactorGraph& g, std::span<const std::uint8_t> estimate,
                    std::vector<std::uint8_t>& out) {
    out.assign(g.num_checks, 0);
    for (std::size_t i = 0; i < g.num_checks; ++i) {
        GF4 acc = 0;
        for (std::uint32_t e = g.check_offset[i]; e < g.check_offset[i + 1]; ++e) {
            const std::uint8_t s = estimate[g.edge_var[e]];
            if (g.kind == CheckKind::Gf4Trace)
                acc = gf4_add(acc, gf4_mul(g.edge_coeff[e], gf4_conj(s)));
            else
                acc ^= s;
        }
        out[i] = g.kind == CheckKind::Gf4Trace ? gf4_trace(acc) : acc;
    }
}

namespace {

// Shared decode loop. When dup contributions are given (exponent-form
// duplicated decoding), dup_by_var lists for every variable the extra edge
// ids whose lambda enters products a second time, in duplicate append order.
BpResult decode_impl(const FactorGraph& g, std::span<const std::uint8_t> targets,
                     std::span<const double> priors, const BpConfig& cfg, MessageState* ws,
                     const std::vector<std::vector<std::uint32_t>>* dup_by_var) {
    if (targets.size() != g.num_checks) throw std::invalid_argument("bp_decode: target size mismatch");
    const std::size_t q = g.q();
    if (priors.size() != g.num_vars * q) throw std::invalid_argument("bp_decode: prior size mismatch");
    if (cfg.i_max < 1) throw std::invalid_argument("bp_decode: i_max must be >= 1");

    MessageState local;
    MessageState& st = ws ? *ws : local;
    st.resize(g);
    if (dup_by_var) {
        std::size_t maxdeg = 0;
        for (std::size_t v = 0; v < g.num_vars; ++v)
            maxdeg = std::max(maxdeg,
                              g.var_offset[v + 1] - g.var_offset[v] + (*dup_by_var)[v].size());
        st.fwd.resize((maxdeg + 2) * 4);
        st.bwd.resize((maxdeg + 2) * 4);
    }

    for (std::size_t e = 0; e < g.num_edges(); ++e)
        std::memcpy(st.mu.data() + e * q, priors.data() + g.edge_var[e] * q, q * sizeof(double));

    BpResult res;
    for (int iter = 1; iter <= cfg.i_max; ++iter) {
        // check-to-variable round
        for (std::size_t i = 0; i < g.num_checks; ++i) {
            const std::uint32_t off = g.check_offset[i];
            const std::size_t deg = g.check_offset[i + 1] - off;
            check_update(g.kind, deg,
                         std::span<const double>(st.mu.data() + off * q, deg * q),
                         std::span<const GF4>(g.edge_coeff.data() + off, deg), targets[i],
                         std::span<double>(st.lambda.data() + off * q, deg * q),
                         cfg.epsilon_floor);
        }

        // marginals and hard decision
        for (std::size_t v = 0; v < g.num_vars; ++v) {
            double* m = st.marginal.data() + v * q;
            std::memcpy(m, priors.data() + v * q, q * sizeof(double));
            for (std::uint32_t k = g.var_offset[v]; k < g.var_offset[v + 1]; ++k) {
                const double* l = st.lambda.data() + g.var_edge[k] * q;
                for (std::size_t s = 0; s < q; ++s) m[s] *= l[s];
            }
            if (dup_by_var)
                for (std::uint32_t e : (*dup_by_var)[v]) {
                    const double* l = st.lambda.data() + e * q;
                    for (std::size_t s = 0; s < q; ++s) m[s] *= l[s];
                }
            normalize_floor(m, q, cfg.epsilon_floor);
            st.hard[v] = argmax_lowest(m, q);
        }

        graph_syndrome(g, st.hard, st.synd);
        if (std::equal(st.synd.begin(), st.synd.end(), targets.begin())) {
            res.estimate.assign(st.hard.begin(), st.hard.end());
            res.converged = true;
            res.iterations = iter;
            return res;
        }
        if (iter == cfg.i_max) break;

        // variable-to-check round; prefix/suffix over the (possibly extended)
        // neighbor list, excluding only the original position
        for (std::size_t v = 0; v < g.num_vars; ++v) {
            const std::uint32_t begin = g.var_offset[v];
            const std::size_t deg = g.var_offset[v + 1] - begin;
            const std::size_t dext = dup_by_var ? (*dup_by_var)[v].size() : 0;
            const std::size_t total = deg + dext;
            auto lam = [&](std::size_t pos) -> const double* {
                return pos < deg ? st.lambda.data() + g.var_edge[begin + pos] * q
                                 : st.lambda.data() + (*dup_by_var)[v][pos - deg] * q;
            };
            double* pre = st.fwd.data();
            double* suf = st.bwd.data();
            for (std::size_t s = 0; s < q; ++s) pre[s] = 1.0;
            for (std::size_t p = 0; p < total; ++p) {
                const double* l = lam(p);
                for (std::size_t s = 0; s < q; ++s) pre[(p + 1) * q + s] = pre[p * q + s] * l[s];
            }
            for (std::size_t s = 0; s < q; ++s) suf[total * q + s] = 1.0;
            for (std::size_t p = total; p-- > 0;) {
                const double* l = lam(p);
                for (std::size_t s = 0; s < q; ++s) suf[p * q + s] = l[s] * suf[(p + 1) * q + s];
            }
            for (std::size_t p = 0; p < deg; ++p) {
                double* out = st.mu.data() + g.var_edge[begin + p] * q;
                const double* pr = priors.data() + v * q;
                for (std::size_t s = 0; s < q; ++s)
                    out[s] = pr[s] * pre[p * q + s] * suf[(p + 1) * q + s];
                normalize_floor(out, q, cfg.epsilon_floor);
            }
        }
    }

    res.estimate.assign(st.hard.begin(), st.hard.end());
    res.converged = false;
    res.iterations = cfg.i_max;
    return res;
}

}  // namespace

BpResult bp_decode(const FactorGraph& g, std::span<const std::uint8_t> targets,
                   std::span<const double> priors, const BpConfig& cfg, MessageState* ws) {
    return decode_impl(g, targets, priors, cfg, ws, nullptr);
}

BpResult bp_decode_duplicated(const FactorGraph& g, std::span<const std::uint8_t> targets,
                              std::span<const double> priors, const BpConfig& cfg,
                              const std::vector<std::size_t>& dup_rows, MessageState* ws) {
    std::vector<std::vector<std::uint32_t>> dup_by_var(g.num_vars);
    for (std::size_t r : dup_rows) {
        if (r >= g.num_checks)
            throw std::invalid_argument("bp_decode_duplicated: row index out of range");
        for (std::uint32_t e = g.check_offset[r]; e < g.check_offset[r + 1]; ++e)
            dup_by_var[g.edge_var[e]].push_back(e);
    }
    return decode_impl(g, targets, priors, cfg, ws, &dup_by_var);
}

ExactResult brute_force_exact(const FactorGraph& g, std::span<const std::uint8_t> targets,
                              std::span<const double> priors) {
    const std::size_t q = g.q();
    const std::size_t n = g.num_vars;
    double states = 1.0;
    for (std::size_t i = 0; i < n; ++i) states *= static_cast<double>(q);
    if (states > static_cast<double>(1u << 20))
        throw std::invalid_argument("brute_force_exact: instance too large");

    ExactResult res;
    res.marginals.assign(n * q, 0.0);
    std::vector<std::uint8_t> assign(n, 0), synd;
    double best = -1.0;
    const std::uint64_t total = static_cast<std::uint64_t>(states);
    for (std::uint64_t c = 0; c < total; ++c) {
        // digits with position 0 most significant: counter order is the
        // lexicographic order of error vectors
        std::uint64_t x = c;
        for (std::size_t i = n; i-- > 0;) {
            assign[i] = static_cast<std::uint8_t>(x % q);
            x /= q;
        }
        graph_syndrome(g, assign, synd);
        if (!std::equal(synd.begin(), synd.end(), targets.begin())) continue;
        double p = 1.0;
        for (std::size_t i = 0; i < n; ++i) p *= priors[i * q + assign[i]];
        for (std::size_t i = 0; i < n; ++i) res.marginals[i * q + assign[i]] += p;
        if (p > best) {
            best = p;
            res.ml = assign;
        }
    }
    if (best < 0.0) throw std::runtime_error("brute_force_exact: no assignment matches the syndrome");
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t s = 0; s < q; ++s) sum += res.marginals[i * q + s];
        if (sum > 0.0)
            for (std::size_t s = 0; s < q; ++s) res.marginals[i * q + s] /= sum;
    }
    return res;
}

CssSyndrome css_syndrome_split(const StabilizerCode& code, const Syndrome& z) {
    if (!code.is_css()) throw std::invalid_argument("css_syndrome_split: non-CSS code");
    if (z.size() != code.m()) throw std::invalid_argument("css_syndrome_split: syndrome length");
    CssSyndrome out{BitVec(code.x_rows().size()), BitVec(code.z_rows().size())};
    for (std::size_t i = 0; i < code.x_rows().size(); ++i)
        if (z.get(code.x_rows()[i])) out.z_z.set(i);
    for (std::size_t i = 0; i < code.z_rows().size(); ++i)
        if (z.get(code.z_rows()[i])) out.z_x.set(i);
    return out;
}

PairResult gf2_pair_decode(const StabilizerCode& code, const Syndrome& z,
                           std::span<const double> priors_x, std::span<const double> priors_z,
                           const BpConfig& cfg) {
    if (!code.is_css()) throw std::invalid_argument("gf2_pair_decode: non-CSS code");
    const std::size_t n = code.n();
    if (priors_x.size() != n || priors_z.size() != n)
        throw std::invalid_argument("gf2_pair_decode: prior size mismatch");
    const FactorGraph gx = build_graph(code.css_hz());
    const FactorGraph gz = build_graph(code.css_hx());
    const CssSyndrome split = css_syndrome_split(code, z);
    std::vector<double> px(2 * n), pz(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        px[2 * i] = 1.0 - priors_x[i];
        px[2 * i + 1] = priors_x[i];
        pz[2 * i] = 1.0 - priors_z[i];
        pz[2 * i + 1] = priors_z[i];
    }
    PairResult res;
    res.x = bp_decode(gx, bit_targets(split.z_x), px, cfg);
    res.z = bp_decode(gz, bit_targets(split.z_z), pz, cfg);
    return res;
}

}  // namespace qldpc
