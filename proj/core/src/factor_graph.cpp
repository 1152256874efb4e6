#include "qldpc/factor_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace qldpc {

namespace {

// rows_support[i] = sorted column supports with coefficients, one per check
// node (originals followed by duplicates).
FactorGraph assemble(CheckKind kind, std::size_t num_vars,
                     const std::vector<std::vector<std::pair<std::uint32_t, GF4>>>& rows) {
    FactorGraph g;
    g.kind = kind;
    g.num_checks = rows.size();
    g.num_vars = num_vars;
    g.check_offset.resize(rows.size() + 1, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        g.check_offset[i + 1] = g.check_offset[i] + static_cast<std::uint32_t>(rows[i].size());
    const std::size_t ne = g.check_offset.back();
    g.edge_var.resize(ne);
    g.edge_coeff.resize(ne);
    g.edge_check.resize(ne);
    std::size_t e = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [c, v] : rows[i]) {
            g.edge_var[e] = c;
            g.edge_coeff[e] = v;
            g.edge_check[e] = static_cast<std::uint32_t>(i);
            ++e;
        }
    // variable-side view, ascending (var, check); edges within a check are
    // already ascending in var, so a stable counting pass suffices
    g.var_offset.assign(num_vars + 1, 0);
    for (std::size_t k = 0; k < ne; ++k) ++g.var_offset[g.edge_var[k] + 1];
    for (std::size_t v = 0; v < num_vars; ++v) g.var_offset[v + 1] += g.var_offset[v];
    g.var_edge.resize(ne);
    std::vector<std::uint32_t> fill(g.var_offset.begin(), g.var_offset.end() - 1);
    for (std::uint32_t k = 0; k < ne; ++k) g.var_edge[fill[g.edge_var[k]]++] = k;
    return g;
}

void append_duplicates(std::vector<std::vector<std::pair<std::uint32_t, GF4>>>& rows,
                       std::size_t originals, const std::vector<std::size_t>& duplication) {
    for (std::size_t r : duplication) {
        if (r >= originals) throw std::invalid_argument("build_graph: duplication index out of range");
        rows.push_back(rows[r]);
    }
}

}  // namespace

std::size_t FactorGraph::max_check_degree() const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < num_checks; ++i) d = std::max(d, check_degree(i));
    return d;
}

std::size_t FactorGraph::max_var_degree() const {
    std::size_t d = 0;
    for (std::size_t v = 0; v < num_vars; ++v) d = std::max<std::size_t>(d, var_offset[v + 1] - var_offset[v]);
    return d;
}

FactorGraph build_graph(const BinaryMatrix& h, const std::vector<std::size_t>& duplication) {
    if (h.rows() == 0) throw std::invalid_argument("build_graph: empty matrix");
    std::vector<std::vector<std::pair<std::uint32_t, GF4>>> rows(h.rows());
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c : h.row_support(r))
            rows[r].emplace_back(static_cast<std::uint32_t>(c), gf4_one);
    append_duplicates(rows, h.rows(), duplication);
    return assemble(CheckKind::Gf2, h.cols(), rows);
}

FactorGraph build_graph(const GF4Matrix& h, const std::vector<std::size_t>& duplication) {
    if (h.rows() == 0) throw std::invalid_argument("build_graph: empty matrix");
    std::vector<std::vector<std::pair<std::uint32_t, GF4>>> rows(h.rows());
    for (const auto& e : h.entries()) rows[e.row].emplace_back(e.col, e.value);
    for (auto& r : rows) std::sort(r.begin(), r.end());
    append_duplicates(rows, h.rows(), duplication);
    return assemble(CheckKind::Gf4Trace, h.cols(), rows);
}

FactorGraph build_supernode_graph(const BinaryMatrix& h_tilde,
                                  const std::vector<std::size_t>& duplication) {
    if (h_tilde.rows() == 0) throw std::invalid_argument("build_supernode_graph: empty matrix");
    std::vector<std::vector<std::pair<std::uint32_t, GF4>>> rows(h_tilde.rows());
    for (std::size_t r = 0; r < h_tilde.rows(); ++r)
        for (std::size_t c : h_tilde.row_support(r))
            rows[r].emplace_back(static_cast<std::uint32_t>(c), gf4_one);
    append_duplicates(rows, h_tilde.rows(), duplication);
    return assemble(CheckKind::Gf4Plain, h_tilde.cols(), rows);
}

std::vector<std::uint8_t> bit_targets(const BitVec& z) {
    std::vector<std::uint8_t> t(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) t[i] = z.get(i);
    return t;
}

std::vector<std::uint8_t> supernode_targets(const BitVec& z_z, const BitVec& z_x) {
    if (z_z.size() != z_x.size()) throw std::invalid_argument("supernode_targets: length mismatch");
    std::vector<std::uint8_t> t(z_z.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = gf4_add(gf4_mul(gf4_omega, z_z.get(i) ? gf4_one : gf4_zero),
                       z_x.get(i) ? gf4_one : gf4_zero);
    return t;
}

std::vector<std::uint8_t> extend_targets(const std::vector<std::uint8_t>& targets,
                                         const std::vector<std::size_t>& duplication) {
    std::vector<std::uint8_t> out(targets);
    out.reserve(targets.size() + duplication.size());
    for (std::size_t r : duplication) {
        if (r >= targets.size()) throw std::invalid_argument("extend_targets: index out of range");
        out.push_back(targets[r]);
    }
    return out;
}

}  // namespace qldpc
