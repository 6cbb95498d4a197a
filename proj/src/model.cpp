// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#include "hypergh/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_set>

namespace hypergh {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::EmptyAxis: return "EmptyAxis";
        case ErrorCode::NonFiniteWeight: return "NonFiniteWeight";
        case ErrorCode::DuplicateIdentifier: return "DuplicateIdentifier";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::NotAMetric: return "NotAMetric";
        case ErrorCode::MalformedChain: return "MalformedChain";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), values_(rows * cols, fill) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows * cols) {
        throw Error(ErrorCode::ValidationError,
                    "matrix data has " + std::to_string(values_.size()) + " entries, expected " +
                        std::to_string(rows * cols));
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<std::vector<double>> tmp;
    for (const auto& r : rows) tmp.emplace_back(r);
    *this = from_rows(tmp);
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<double> values;
    values.reserve(r * c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) {
            throw Error(ErrorCode::ValidationError,
                        "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(c));
        }
        values.insert(values.end(), rows[i].begin(), rows[i].end());
    }
    return Matrix(r, c, std::move(values));
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::max_abs_difference(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::InvalidArgument, "matrix shapes differ");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < a.values_.size(); ++k)
        worst = std::max(worst, std::abs(a.values_[k] - b.values_[k]));
    return worst;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

std::vector<std::string> default_ids(char prefix, std::size_t n) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ids.push_back(std::string(1, prefix) + std::to_string(i + 1));
    return ids;
}

void check_unique(const std::vector<std::string>& ids, const char* axis) {
    std::unordered_set<std::string> seen;
    for (const auto& id : ids) {
        if (!seen.insert(id).second) {
            throw Error(ErrorCode::DuplicateIdentifier,
                        std::string("duplicate ") + axis + " identifier '" + id + "'");
        }
    }
}

void check_finite(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!std::isfinite(m(i, j))) {
                throw Error(ErrorCode::NonFiniteWeight, "non-finite weight at (" +
                                                            std::to_string(i) + ", " +
                                                            std::to_string(j) + ")");
            }
}

}  // namespace

void validate(const std::vector<std::string>& nodes, const std::vector<std::string>& edges,
              const Matrix& omega) {
    if (nodes.empty() || edges.empty()) {
        throw Error(ErrorCode::EmptyAxis, "hypernetwork needs at least one node and one edge");
    }
    if (omega.rows() != nodes.size() || omega.cols() != edges.size()) {
        throw Error(ErrorCode::ValidationError,
                    "omega is " + std::to_string(omega.rows()) + "x" + std::to_string(omega.cols()) +
                        " but there are " + std::to_string(nodes.size()) + " nodes and " +
                        std::to_string(edges.size()) + " edges");
    }
    check_unique(nodes, "node");
    check_unique(edges, "edge");
    check_finite(omega);
}

// ---------------------------------------------------------------------------
// Hypernetwork / Network

Hypernetwork::Hypernetwork(std::vector<std::string> nodes, std::vector<std::string> edges,
                           Matrix omega)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), omega_(std::move(omega)) {
    validate(nodes_, edges_, omega_);
}

Hypernetwork::Hypernetwork(Matrix omega)
    : Hypernetwork(default_ids('x', omega.rows()), default_ids('y', omega.cols()),
                   std::move(omega)) {}

Hypernetwork Hypernetwork::transposed() const {
    return Hypernetwork(edges_, nodes_, omega_.transposed());
}

Network::Network(std::vector<std::string> nodes, Matrix omega)
    : nodes_(std::move(nodes)), omega_(std::move(omega)) {
    if (omega_.rows() != omega_.cols()) {
        throw Error(ErrorCode::ValidationError, "network kernel must be square");
    }
    validate(nodes_, nodes_, omega_);
}

Network::Network(Matrix omega) : Network(default_ids('x', omega.rows()), std::move(omega)) {}

Hypernetwork from_network(const Network& n) {
    return Hypernetwork(n.nodes(), n.nodes(), n.omega());
}

// ---------------------------------------------------------------------------
// Correspondences and maps

bool is_correspondence(const Relation& r, std::size_t left_size, std::size_t right_size) {
    std::vector<bool> left(left_size, false);
    std::vector<bool> right(right_size, false);
    for (const auto& [a, b] : r) {
        if (a >= left_size || b >= right_size) return false;
        left[a] = true;
        right[b] = true;
    }
    return std::all_of(left.begin(), left.end(), [](bool v) { return v; }) &&
           std::all_of(right.begin(), right.end(), [](bool v) { return v; });
}

bool CorrespondencePair::is_valid(std::size_t nodes, std::size_t nodes_prime, std::size_t edges,
                                  std::size_t edges_prime) const {
    return is_correspondence(s, nodes, nodes_prime) && is_correspondence(t, edges, edges_prime);
}

namespace {

bool total_into(const std::vector<std::size_t>& map, std::size_t domain, std::size_t codomain) {
    return map.size() == domain &&
           std::all_of(map.begin(), map.end(), [&](std::size_t v) { return v < codomain; });
}

Relation union_of_graphs(const std::vector<std::size_t>& forward,
                         const std::vector<std::size_t>& backward) {
    Relation r;
    r.reserve(forward.size() + backward.size());
    for (std::size_t a = 0; a < forward.size(); ++a) r.emplace_back(a, forward[a]);
    for (std::size_t b = 0; b < backward.size(); ++b) r.emplace_back(backward[b], b);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

}  // namespace

bool MapQuadruple::is_valid(std::size_t nodes, std::size_t nodes_prime, std::size_t edges,
                            std::size_t edges_prime) const {
    return total_into(phi, nodes, nodes_prime) && total_into(psi, edges, edges_prime) &&
           total_into(phi_back, nodes_prime, nodes) && total_into(psi_back, edges_prime, edges);
}

CorrespondencePair MapQuadruple::to_correspondence() const {
    return {union_of_graphs(phi, phi_back), union_of_graphs(psi, psi_back)};
}

MapQuadruple MapQuadruple::identity(std::size_t nodes, std::size_t edges) {
    MapQuadruple q;
    q.phi.resize(nodes);
    q.psi.resize(edges);
    std::iota(q.phi.begin(), q.phi.end(), std::size_t{0});
    std::iota(q.psi.begin(), q.psi.end(), std::size_t{0});
    q.phi_back = q.phi;
    q.psi_back = q.psi;
    return q;
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

// Groups equal keys in first-occurrence order.
template <typename Key>
void group_by_key(const std::vector<Key>& keys, std::vector<std::size_t>& cls,
                  std::vector<std::size_t>& rep) {
    std::map<Key, std::size_t> index;
    cls.assign(keys.size(), 0);
    rep.clear();
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto [it, inserted] = index.emplace(keys[i], rep.size());
        if (inserted) rep.push_back(i);
        cls[i] = it->second;
    }
}

}  // namespace

Reduction reduce_with_maps(const Hypernetwork& h) {
    const Matrix& w = h.omega();
    std::vector<std::vector<double>> rows(w.rows());
    for (std::size_t i = 0; i < w.rows(); ++i) rows[i].assign(w.row(i).begin(), w.row(i).end());
    std::vector<std::size_t> node_class, node_rep;
    group_by_key(rows, node_class, node_rep);

    const Matrix wt = w.transposed();
    std::vector<std::vector<double>> cols(wt.rows());
    for (std::size_t j = 0; j < wt.rows(); ++j) cols[j].assign(wt.row(j).begin(), wt.row(j).end());
    std::vector<std::size_t> edge_class, edge_rep;
    group_by_key(cols, edge_class, edge_rep);

    Matrix reduced(node_rep.size(), edge_rep.size());
    std::vector<std::string> nodes, edges;
    for (std::size_t i = 0; i < node_rep.size(); ++i) {
        nodes.push_back(h.nodes()[node_rep[i]]);
        for (std::size_t j = 0; j < edge_rep.size(); ++j) reduced(i, j) = w(node_rep[i], edge_rep[j]);
    }
    for (std::size_t j : edge_rep) edges.push_back(h.edges()[j]);

    return Reduction{Hypernetwork(std::move(nodes), std::move(edges), std::move(reduced)),
                     std::move(node_class), std::move(edge_class), std::move(node_rep),
                     std::move(edge_rep)};
}

Hypernetwork reduce(const Hypernetwork& h) { return reduce_with_maps(h).reduced; }

// ---------------------------------------------------------------------------
// Strong isomorphism

namespace {

// Kuhn augmenting path on a boolean adjacency matrix.
bool augment(std::size_t u, const std::vector<std::vector<bool>>& adj,
             std::vector<std::ptrdiff_t>& match_right, std::vector<bool>& seen) {
    for (std::size_t v = 0; v < adj[u].size(); ++v) {
        if (!adj[u][v] || seen[v]) continue;
        seen[v] = true;
        if (match_right[v] < 0 ||
            augment(static_cast<std::size_t>(match_right[v]), adj, match_right, seen)) {
            match_right[v] = static_cast<std::ptrdiff_t>(u);
            return true;
        }
    }
    return false;
}

bool has_perfect_matching(const std::vector<std::vector<bool>>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::ptrdiff_t> match_right(n, -1);
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<bool> seen(n, false);
        if (!augment(u, adj, match_right, seen)) return false;
    }
    return true;
}

bool extend_node_bijection(const Hypernetwork& a, const Hypernetwork& b,
                           const std::vector<std::vector<double>>& sorted_rows_a,
                           const std::vector<std::vector<double>>& sorted_rows_b,
                           std::vector<std::size_t>& perm, std::vector<bool>& used) {
    const std::size_t n = a.num_nodes();
    const std::size_t m = a.num_edges();
    const std::size_t depth = perm.size();
    if (depth == n) {
        std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t yp = 0; yp < m; ++yp) {
                bool ok = true;
                for (std::size_t x = 0; x < n && ok; ++x) ok = a(x, y) == b(perm[x], yp);
                adj[y][yp] = ok;
            }
        return has_perfect_matching(adj);
    }
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand] || sorted_rows_a[depth] != sorted_rows_b[cand]) continue;
        used[cand] = true;
        perm.push_back(cand);
        if (extend_node_bijection(a, b, sorted_rows_a, sorted_rows_b, perm, used)) return true;
        perm.pop_back();
        used[cand] = false;
    }
    return false;
}

}  // namespace

bool is_strongly_isomorphic(const Hypernetwork& a, const Hypernetwork& b) {
    if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) return false;
    auto sorted_rows = [](const Hypernetwork& h) {
        std::vector<std::vector<double>> out;
        for (std::size_t x = 0; x < h.num_nodes(); ++x) {
            auto r = h.omega().row(x);
            out.emplace_back(r.begin(), r.end());
            std::sort(out.back().begin(), out.back().end());
        }
        return out;
    };
    const auto ra = sorted_rows(a);
    const auto rb = sorted_rows(b);
    std::vector<std::size_t> perm;
    std::vector<bool> used(a.num_nodes(), false);
    return extend_node_bijection(a, b, ra, rb, perm, used);
}

}  // namespace hypergh
