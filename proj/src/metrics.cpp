// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#include "hypergh/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>

namespace hypergh {

SearchOptions SearchOptions::from_environment() {
    SearchOptions opts;
    if (const char* env = std::getenv("HYPERGH_BUDGET")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && std::isfinite(v) && v > 0) opts.budget = v;
    }
    return opts;
}

double FunctionalDistortions::max() const {
    return std::max({dis, dis_back, codis_forward, codis_backward});
}

// ---------------------------------------------------------------------------
// Distortions

namespace {

void check_index(std::size_t i, std::size_t size, const char* what) {
    if (i >= size) {
        throw Error(ErrorCode::IndexOutOfRange, std::string(what) + " index " + std::to_string(i) +
                                                    " out of range (size " + std::to_string(size) +
                                                    ")");
    }
}

void check_relation(const Relation& r, std::size_t left, std::size_t right, const char* what) {
    for (const auto& [a, b] : r) {
        check_index(a, left, what);
        check_index(b, right, what);
    }
}

void check_map(const std::vector<std::size_t>& map, std::size_t domain, std::size_t codomain,
               const char* what) {
    if (map.size() != domain) {
        throw Error(ErrorCode::IndexOutOfRange, std::string(what) + " has " +
                                                    std::to_string(map.size()) +
                                                    " entries, expected " + std::to_string(domain));
    }
    for (std::size_t v : map) check_index(v, codomain, what);
}

}  // namespace

double distortion_hyper(const Hypernetwork& h, const Hypernetwork& hp, const CorrespondencePair& cp) {
    check_relation(cp.s, h.num_nodes(), hp.num_nodes(), "node correspondence");
    check_relation(cp.t, h.num_edges(), hp.num_edges(), "edge correspondence");
    double worst = 0.0;
    for (const auto& [x, xp] : cp.s)
        for (const auto& [y, yp] : cp.t) worst = std::max(worst, std::abs(h(x, y) - hp(xp, yp)));
    return worst;
}

double distortion_network(const Network& n, const Network& np, const Relation& r) {
    check_relation(r, n.size(), np.size(), "correspondence");
    double worst = 0.0;
    for (const auto& [a, ap] : r)
        for (const auto& [b, bp] : r) worst = std::max(worst, std::abs(n(a, b) - np(ap, bp)));
    return worst;
}

FunctionalDistortions functional_distortions(const Hypernetwork& h, const Hypernetwork& hp,
                                             const MapQuadruple& q) {
    check_map(q.phi, h.num_nodes(), hp.num_nodes(), "phi");
    check_map(q.psi, h.num_edges(), hp.num_edges(), "psi");
    check_map(q.phi_back, hp.num_nodes(), h.num_nodes(), "phi_back");
    check_map(q.psi_back, hp.num_edges(), h.num_edges(), "psi_back");

    FunctionalDistortions d;
    for (std::size_t x = 0; x < h.num_nodes(); ++x) {
        for (std::size_t y = 0; y < h.num_edges(); ++y)
            d.dis = std::max(d.dis, std::abs(h(x, y) - hp(q.phi[x], q.psi[y])));
        for (std::size_t yp = 0; yp < hp.num_edges(); ++yp)
            d.codis_forward = std::max(d.codis_forward, std::abs(h(x, q.psi_back[yp]) - hp(q.phi[x], yp)));
    }
    for (std::size_t xp = 0; xp < hp.num_nodes(); ++xp) {
        for (std::size_t yp = 0; yp < hp.num_edges(); ++yp)
            d.dis_back = std::max(d.dis_back, std::abs(h(q.phi_back[xp], q.psi_back[yp]) - hp(xp, yp)));
        for (std::size_t y = 0; y < h.num_edges(); ++y)
            d.codis_backward = std::max(d.codis_backward, std::abs(h(q.phi_back[xp], y) - hp(xp, q.psi[y])));
    }
    return d;
}

double log10_map_pairs(std::size_t n, std::size_t np) {
    return static_cast<double>(n) * std::log10(static_cast<double>(np)) +
           static_cast<double>(np) * std::log10(static_cast<double>(n));
}

// ---------------------------------------------------------------------------
// Threshold decision for hypernetworks

namespace {

using Word = std::uint64_t;

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

bool any_bit(const Word* row, std::size_t words) {
    for (std::size_t k = 0; k < words; ++k)
        if (row[k] != 0) return true;
    return false;
}

std::size_t lowest_bit(const Word* row, std::size_t words) {
    for (std::size_t k = 0; k < words; ++k)
        if (row[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(row[k]));
    return std::numeric_limits<std::size_t>::max();
}

// Depth-first search over (phi, phi_back) for two kernels A (n x m) and B (n' x m').
// Every chosen node pair (x, x') restricts psi(y) to the y' with
// |A(x,y) - B(x',y')| <= limit, and psi_back(y') to the y with the same property.
class HyperDecider {
 public:
    HyperDecider(const Matrix& a, const Matrix& b, double limit)
        : a_(a), b_(b), n_(a.rows()), m_(a.cols()), np_(b.rows()), mp_(b.cols()),
          wp_(words_for(mp_)), w_(words_for(m_)) {
        compat_psi_.assign(n_ * np_ * m_ * wp_, 0);
        compat_back_.assign(n_ * np_ * mp_ * w_, 0);
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t xp = 0; xp < np_; ++xp) {
                Word* psi_rows = &compat_psi_[(x * np_ + xp) * m_ * wp_];
                Word* back_rows = &compat_back_[(x * np_ + xp) * mp_ * w_];
                for (std::size_t y = 0; y < m_; ++y)
                    for (std::size_t yp = 0; yp < mp_; ++yp)
                        if (std::abs(a_(x, y) - b_(xp, yp)) <= limit) {
                            psi_rows[y * wp_ + yp / 64] |= Word{1} << (yp % 64);
                            back_rows[yp * w_ + y / 64] |= Word{1} << (y % 64);
                        }
            }
        state_size_ = m_ * wp_ + mp_ * w_;
        states_.assign((n_ + np_ + 1) * state_size_, 0);
        Word* root = states_.data();
        for (std::size_t y = 0; y < m_; ++y)
            for (std::size_t yp = 0; yp < mp_; ++yp) root[y * wp_ + yp / 64] |= Word{1} << (yp % 64);
        Word* root_back = root + m_ * wp_;
        for (std::size_t yp = 0; yp < mp_; ++yp)
            for (std::size_t y = 0; y < m_; ++y) root_back[yp * w_ + y / 64] |= Word{1} << (y % 64);
        in_relation_.assign(n_ * np_, 0);
        phi_.assign(n_, 0);
        phi_back_.assign(np_, 0);
    }

    std::optional<MapQuadruple> run() {
        if (!search(0)) return std::nullopt;
        const Word* leaf = state(n_ + np_);
        MapQuadruple q;
        q.phi = phi_;
        q.phi_back = phi_back_;
        q.psi.resize(m_);
        q.psi_back.resize(mp_);
        for (std::size_t y = 0; y < m_; ++y) q.psi[y] = lowest_bit(leaf + y * wp_, wp_);
        for (std::size_t yp = 0; yp < mp_; ++yp)
            q.psi_back[yp] = lowest_bit(leaf + m_ * wp_ + yp * w_, w_);
        return q;
    }

 private:
    Word* state(std::size_t depth) { return states_.data() + depth * state_size_; }

    // Copies the parent state into the child and intersects with the pair's constraints.
    bool apply(std::size_t depth, std::size_t x, std::size_t xp) {
        const Word* parent = state(depth);
        Word* child = state(depth + 1);
        if (in_relation_[x * np_ + xp] > 0) {
            std::copy(parent, parent + state_size_, child);
            return true;
        }
        const Word* cpsi = &compat_psi_[(x * np_ + xp) * m_ * wp_];
        for (std::size_t y = 0; y < m_; ++y) {
            Word* row = child + y * wp_;
            for (std::size_t k = 0; k < wp_; ++k) row[k] = parent[y * wp_ + k] & cpsi[y * wp_ + k];
            if (!any_bit(row, wp_)) return false;
        }
        const Word* cback = &compat_back_[(x * np_ + xp) * mp_ * w_];
        const Word* pback = parent + m_ * wp_;
        Word* back = child + m_ * wp_;
        for (std::size_t yp = 0; yp < mp_; ++yp) {
            Word* row = back + yp * w_;
            for (std::size_t k = 0; k < w_; ++k) row[k] = pback[yp * w_ + k] & cback[yp * w_ + k];
            if (!any_bit(row, w_)) return false;
        }
        return true;
    }

    bool search(std::size_t depth) {
        if (depth == n_ + np_) return true;
        if (depth < n_) {
            const std::size_t x = depth;
            for (std::size_t xp = 0; xp < np_; ++xp) {
                if (!apply(depth, x, xp)) continue;
                phi_[x] = xp;
                ++in_relation_[x * np_ + xp];
                const bool found = search(depth + 1);
                --in_relation_[x * np_ + xp];
                if (found) return true;
            }
            return false;
        }
        const std::size_t xp = depth - n_;
        for (std::size_t x = 0; x < n_; ++x) {
            if (!apply(depth, x, xp)) continue;
            phi_back_[xp] = x;
            ++in_relation_[x * np_ + xp];
            const bool found = search(depth + 1);
            --in_relation_[x * np_ + xp];
            if (found) return true;
        }
        return false;
    }

    const Matrix& a_;
    const Matrix& b_;
    std::size_t n_, m_, np_, mp_;
    std::size_t wp_, w_;
    std::size_t state_size_ = 0;
    std::vector<Word> compat_psi_;
    std::vector<Word> compat_back_;
    std::vector<Word> states_;
    std::vector<int> in_relation_;
    std::vector<std::size_t> phi_;
    std::vector<std::size_t> phi_back_;
};

// Reduced, oriented problem: both inputs are reduced and possibly transposed
// so the node-map enumeration is the cheaper of the two sides.
struct PreparedPair {
    Reduction left;
    Reduction right;
    bool transposed = false;
    Matrix a;
    Matrix b;
    double log10_leaves = 0.0;
};

PreparedPair prepare(const Hypernetwork& h, const Hypernetwork& hp) {
    PreparedPair p{reduce_with_maps(h), reduce_with_maps(hp), false, {}, {}, 0.0};
    const Hypernetwork& l = p.left.reduced;
    const Hypernetwork& r = p.right.reduced;
    const double node_side = log10_map_pairs(l.num_nodes(), r.num_nodes());
    const double edge_side = log10_map_pairs(l.num_edges(), r.num_edges());
    p.transposed = edge_side < node_side;
    p.log10_leaves = std::min(node_side, edge_side);
    p.a = p.transposed ? l.omega().transposed() : l.omega();
    p.b = p.transposed ? r.omega().transposed() : r.omega();
    return p;
}

std::string scientific(double log10_value) {
    char buf[32];
    if (log10_value > 300) std::snprintf(buf, sizeof buf, "1e%.0f", log10_value);
    else std::snprintf(buf, sizeof buf, "%.3g", std::pow(10.0, log10_value));
    return buf;
}

void check_budget(double log10_leaves, const SearchOptions& opts) {
    if (log10_leaves > std::log10(opts.budget)) {
        throw Error(ErrorCode::BudgetExceeded,
                    "exact search needs about " + scientific(log10_leaves) +
                        " map pairs, over the budget of " + scientific(std::log10(opts.budget)));
    }
}

// Maps a quadruple on the reduced, oriented problem back onto the original inputs.
MapQuadruple lift(const PreparedPair& p, MapQuadruple q) {
    if (p.transposed) {
        std::swap(q.phi, q.psi);
        std::swap(q.phi_back, q.psi_back);
    }
    auto compose = [](const std::vector<std::size_t>& cls, const std::vector<std::size_t>& map,
                      const std::vector<std::size_t>& rep) {
        std::vector<std::size_t> out(cls.size());
        for (std::size_t i = 0; i < cls.size(); ++i) out[i] = rep[map[cls[i]]];
        return out;
    };
    MapQuadruple out;
    out.phi = compose(p.left.node_class, q.phi, p.right.node_representative);
    out.psi = compose(p.left.edge_class, q.psi, p.right.edge_representative);
    out.phi_back = compose(p.right.node_class, q.phi_back, p.left.node_representative);
    out.psi_back = compose(p.right.edge_class, q.psi_back, p.left.edge_representative);
    return out;
}

std::vector<double> candidate_thresholds(const Matrix& a, const Matrix& b) {
    std::vector<double> theta;
    theta.reserve(a.values().size() * b.values().size());
    for (double u : a.values())
        for (double v : b.values()) theta.push_back(std::abs(u - v));
    std::sort(theta.begin(), theta.end());
    theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
    return theta;
}

// Smallest index i with feasible(theta[i]); theta.back() must be feasible.
template <typename Decide>
auto threshold_search(const std::vector<double>& theta, Decide&& decide) {
    std::size_t lo = 0;
    std::size_t hi = theta.size() - 1;
    auto best = decide(theta[hi]);
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (auto found = decide(theta[mid])) {
            best = std::move(found);
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return std::make_pair(theta[hi], std::move(best));
}

}  // namespace

std::optional<MapQuadruple> decide_dh_leq(const Hypernetwork& h, const Hypernetwork& hp, double t,
                                          const SearchOptions& opts) {
    if (!(t >= 0.0)) throw Error(ErrorCode::InvalidArgument, "threshold must be nonnegative");
    const PreparedPair p = prepare(h, hp);
    auto q = HyperDecider(p.a, p.b, t + opts.tolerance).run();
    if (!q) return std::nullopt;
    return lift(p, std::move(*q));
}

DistanceResult exact_dh(const Hypernetwork& h, const Hypernetwork& hp, const SearchOptions& opts) {
    const PreparedPair p = prepare(h, hp);
    check_budget(p.log10_leaves, opts);
    const auto theta = candidate_thresholds(p.a, p.b);
    auto [t, q] = threshold_search(theta, [&](double limit) {
        return HyperDecider(p.a, p.b, limit + opts.tolerance).run();
    });
    if (!q) throw Error(ErrorCode::InvalidArgument, "no feasible threshold (non-finite input?)");
    return DistanceResult{t / 2.0, lift(p, std::move(*q)), true};
}

// ---------------------------------------------------------------------------
// Threshold decision for networks

namespace {

class NetworkDecider {
 public:
    NetworkDecider(const Matrix& a, const Matrix& b, double limit)
        : n_(a.rows()), np_(b.rows()), pairs_(n_ * np_), words_(words_for(pairs_)) {
        compat_.assign(pairs_ * words_, 0);
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t xp = 0; xp < np_; ++xp) {
                Word* row = &compat_[(x * np_ + xp) * words_];
                for (std::size_t z = 0; z < n_; ++z)
                    for (std::size_t zp = 0; zp < np_; ++zp)
                        if (std::abs(a(x, z) - b(xp, zp)) <= limit &&
                            std::abs(a(z, x) - b(zp, xp)) <= limit) {
                            const std::size_t q = z * np_ + zp;
                            row[q / 64] |= Word{1} << (q % 64);
                        }
            }
        states_.assign((n_ + np_ + 1) * words_, ~Word{0});
        phi_.assign(n_, 0);
        phi_back_.assign(np_, 0);
    }

    std::optional<MapQuadruple> run() {
        if (!search(0)) return std::nullopt;
        MapQuadruple q;
        q.phi = phi_;
        q.phi_back = phi_back_;
        q.psi = phi_;
        q.psi_back = phi_back_;
        return q;
    }

 private:
    bool test(const Word* bits, std::size_t p) const { return (bits[p / 64] >> (p % 64)) & 1U; }

    bool apply(std::size_t depth, std::size_t p) {
        const Word* parent = &states_[depth * words_];
        const Word* row = &compat_[p * words_];
        if (!test(parent, p) || !test(row, p)) return false;
        Word* child = &states_[(depth + 1) * words_];
        for (std::size_t k = 0; k < words_; ++k) child[k] = parent[k] & row[k];
        return true;
    }

    bool search(std::size_t depth) {
        if (depth == n_ + np_) return true;
        if (depth < n_) {
            const std::size_t x = depth;
            for (std::size_t xp = 0; xp < np_; ++xp) {
                if (!apply(depth, x * np_ + xp)) continue;
                phi_[x] = xp;
                if (search(depth + 1)) return true;
            }
            return false;
        }
        const std::size_t xp = depth - n_;
        for (std::size_t x = 0; x < n_; ++x) {
            if (!apply(depth, x * np_ + xp)) continue;
            phi_back_[xp] = x;
            if (search(depth + 1)) return true;
        }
        return false;
    }

    std::size_t n_, np_, pairs_, words_;
    std::vector<Word> compat_;
    std::vector<Word> states_;
    std::vector<std::size_t> phi_;
    std::vector<std::size_t> phi_back_;
};

}  // namespace

std::optional<MapQuadruple> decide_dn_leq(const Network& n, const Network& np, double t,
                                          const SearchOptions& opts) {
    if (!(t >= 0.0)) throw Error(ErrorCode::InvalidArgument, "threshold must be nonnegative");
    return NetworkDecider(n.omega(), np.omega(), t + opts.tolerance).run();
}

DistanceResult exact_dn(const Network& n, const Network& np, const SearchOptions& opts) {
    check_budget(log10_map_pairs(n.size(), np.size()), opts);
    const auto theta = candidate_thresholds(n.omega(), np.omega());
    auto [t, q] = threshold_search(theta, [&](double limit) {
        return NetworkDecider(n.omega(), np.omega(), limit + opts.tolerance).run();
    });
    if (!q) throw Error(ErrorCode::InvalidArgument, "no feasible threshold (non-finite input?)");
    return DistanceResult{t / 2.0, std::move(*q), true};
}

// ---------------------------------------------------------------------------
// Local search upper bound

namespace {

// Cost of a node relation S when psi and psi_back are chosen pointwise optimally.
class PointwiseEvaluator {
 public:
    PointwiseEvaluator(const Hypernetwork& h, const Hypernetwork& hp) : h_(h), hp_(hp) {}

    double cost(const std::vector<std::size_t>& phi, const std::vector<std::size_t>& phi_back,
                MapQuadruple* witness = nullptr) const {
        const std::size_t m = h_.num_edges();
        const std::size_t mp = hp_.num_edges();
        // worst[y][y'] = max over S of |w(x,y) - w'(x',y')|
        std::vector<double> worst(m * mp, 0.0);
        auto accumulate = [&](std::size_t x, std::size_t xp) {
            for (std::size_t y = 0; y < m; ++y)
                for (std::size_t yp = 0; yp < mp; ++yp) {
                    double& cell = worst[y * mp + yp];
                    cell = std::max(cell, std::abs(h_(x, y) - hp_(xp, yp)));
                }
        };
        for (std::size_t x = 0; x < phi.size(); ++x) accumulate(x, phi[x]);
        for (std::size_t xp = 0; xp < phi_back.size(); ++xp) accumulate(phi_back[xp], xp);

        double total = 0.0;
        if (witness) {
            witness->phi = phi;
            witness->phi_back = phi_back;
            witness->psi.assign(m, 0);
            witness->psi_back.assign(mp, 0);
        }
        for (std::size_t y = 0; y < m; ++y) {
            std::size_t arg = 0;
            for (std::size_t yp = 1; yp < mp; ++yp)
                if (worst[y * mp + yp] < worst[y * mp + arg]) arg = yp;
            total = std::max(total, worst[y * mp + arg]);
            if (witness) witness->psi[y] = arg;
        }
        for (std::size_t yp = 0; yp < mp; ++yp) {
            std::size_t arg = 0;
            for (std::size_t y = 1; y < m; ++y)
                if (worst[y * mp + yp] < worst[arg * mp + yp]) arg = y;
            total = std::max(total, worst[arg * mp + yp]);
            if (witness) witness->psi_back[yp] = arg;
        }
        return total;
    }

 private:
    const Hypernetwork& h_;
    const Hypernetwork& hp_;
};

}  // namespace

DistanceResult upper_bound_dh(const Hypernetwork& h, const Hypernetwork& hp, unsigned restarts,
                              std::uint64_t seed) {
    const std::size_t n = h.num_nodes();
    const std::size_t np = hp.num_nodes();
    const PointwiseEvaluator eval(h, hp);
    std::mt19937_64 rng(seed);

    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> best_phi, best_back;

    const unsigned rounds = std::max(1U, restarts);
    for (unsigned round = 0; round < rounds; ++round) {
        std::vector<std::size_t> phi(n), back(np);
        if (round == 0) {
            for (std::size_t x = 0; x < n; ++x) phi[x] = x % np;
            for (std::size_t xp = 0; xp < np; ++xp) back[xp] = xp % n;
        } else {
            std::uniform_int_distribution<std::size_t> to_right(0, np - 1), to_left(0, n - 1);
            for (auto& v : phi) v = to_right(rng);
            for (auto& v : back) v = to_left(rng);
        }
        double cost = eval.cost(phi, back);
        for (bool improved = true; improved;) {
            improved = false;
            auto sweep = [&](std::vector<std::size_t>& map, std::size_t codomain) {
                for (std::size_t i = 0; i < map.size(); ++i) {
                    const std::size_t keep = map[i];
                    std::size_t best_value = keep;
                    for (std::size_t v = 0; v < codomain; ++v) {
                        if (v == keep) continue;
                        map[i] = v;
                        const double c = eval.cost(phi, back);
                        if (c < cost) {
                            cost = c;
                            best_value = v;
                            improved = true;
                        }
                    }
                    map[i] = best_value;
                }
            };
            sweep(phi, np);
            sweep(back, n);
        }
        if (cost < best_cost) {
            best_cost = cost;
            best_phi = phi;
            best_back = back;
        }
    }
    DistanceResult r;
    r.value = eval.cost(best_phi, best_back, &r.witness) / 2.0;
    r.exact = false;
    return r;
}

// ---------------------------------------------------------------------------
// Weak isomorphism and alignment

WeakIsomorphism is_weakly_isomorphic(const Hypernetwork& h, const Hypernetwork& hp,
                                     const SearchOptions& opts) {
    const PreparedPair p = prepare(h, hp);
    check_budget(p.log10_leaves, opts);
    auto q = HyperDecider(p.a, p.b, opts.tolerance).run();
    if (!q) return {};
    return {true, lift(p, std::move(*q))};
}

Alignment align(const Hypernetwork& h, const Hypernetwork& hp, const SearchOptions& opts) {
    const DistanceResult r = exact_dh(h, hp, opts);
    CorrespondencePair cp = r.witness.to_correspondence();

    std::vector<std::string> nodes, edges;
    for (const auto& [x, xp] : cp.s) nodes.push_back(h.nodes()[x] + "|" + hp.nodes()[xp]);
    for (const auto& [y, yp] : cp.t) edges.push_back(h.edges()[y] + "|" + hp.edges()[yp]);
    Matrix w(cp.s.size(), cp.t.size());
    Matrix wp(cp.s.size(), cp.t.size());
    for (std::size_t i = 0; i < cp.s.size(); ++i)
        for (std::size_t j = 0; j < cp.t.size(); ++j) {
            w(i, j) = h(cp.s[i].first, cp.t[j].first);
            wp(i, j) = hp(cp.s[i].second, cp.t[j].second);
        }
    return Alignment{Hypernetwork(nodes, edges, std::move(w)),
                     Hypernetwork(nodes, edges, std::move(wp)), std::move(cp), r.value};
}

}  // namespace hypergh
