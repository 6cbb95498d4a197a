// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#include "hypergh/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace hypergh {

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::ValidationError, where + ": " + what);
}

std::vector<std::string> string_list(const json& doc, const char* key) {
    if (!doc.contains(key)) invalid(key, "missing");
    const json& v = doc.at(key);
    if (!v.is_array()) invalid(key, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string()) invalid(std::string(key) + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back(v[i].get<std::string>());
    }
    return out;
}

double number_at(const json& v, const std::string& where) {
    if (!v.is_number()) invalid(where, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) invalid(where, "weight is not finite");
    return d;
}

std::map<std::string, std::size_t> index_of(const std::vector<std::string>& ids, const char* axis) {
    std::map<std::string, std::size_t> out;
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (!out.emplace(ids[i], i).second) invalid(axis, "duplicate identifier '" + ids[i] + "'");
    return out;
}

Matrix parse_omega(const json& omega, const std::vector<std::string>& rows,
                   const std::vector<std::string>& cols) {
    if (!omega.is_array()) invalid("omega", "expected an array");
    const bool sparse = omega.empty() || !omega[0].is_array() ||
                        (!omega[0].empty() && omega[0][0].is_string());
    Matrix w(rows.size(), cols.size(), 0.0);
    if (!sparse) {
        if (omega.size() != rows.size()) {
            invalid("omega", "expected " + std::to_string(rows.size()) + " rows, got " +
                                 std::to_string(omega.size()));
        }
        for (std::size_t i = 0; i < omega.size(); ++i) {
            const std::string where = "omega[" + std::to_string(i) + "]";
            if (!omega[i].is_array() || omega[i].size() != cols.size()) {
                invalid(where, "expected " + std::to_string(cols.size()) + " values");
            }
            for (std::size_t j = 0; j < cols.size(); ++j)
                w(i, j) = number_at(omega[i][j], where + "[" + std::to_string(j) + "]");
        }
        return w;
    }
    const auto row_index = index_of(rows, "nodes");
    const auto col_index = index_of(cols, "edges");
    std::vector<bool> seen(rows.size() * cols.size(), false);
    for (std::size_t k = 0; k < omega.size(); ++k) {
        const std::string where = "omega[" + std::to_string(k) + "]";
        const json& t = omega[k];
        std::string node, edge;
        double value = 0.0;
        if (t.is_array() && t.size() == 3 && t[0].is_string() && t[1].is_string()) {
            node = t[0].get<std::string>();
            edge = t[1].get<std::string>();
            value = number_at(t[2], where + "[2]");
        } else if (t.is_object() && t.contains("node") && t.contains("edge") && t.contains("value") &&
                   t["node"].is_string() && t["edge"].is_string()) {
            node = t["node"].get<std::string>();
            edge = t["edge"].get<std::string>();
            value = number_at(t["value"], where + ".value");
        } else {
            invalid(where, "expected [node, edge, value]");
        }
        const auto r = row_index.find(node);
        if (r == row_index.end()) invalid(where, "unknown node '" + node + "'");
        const auto c = col_index.find(edge);
        if (c == col_index.end()) invalid(where, "unknown edge '" + edge + "'");
        const std::size_t cell = r->second * cols.size() + c->second;
        if (seen[cell]) invalid(where, "repeated entry for ('" + node + "', '" + edge + "')");
        seen[cell] = true;
        w(r->second, c->second) = value;
    }
    return w;
}

}  // namespace

Model parse_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object()) invalid("document", "expected an object");
    const bool network = doc.contains("network") && doc["network"].is_boolean() && doc["network"].get<bool>();
    if (!doc.contains("omega")) invalid("omega", "missing");
    const auto nodes = string_list(doc, "nodes");
    if (network) {
        if (doc.contains("edges") && string_list(doc, "edges") != nodes) {
            invalid("edges", "a network uses its node list on both axes");
        }
        Matrix w = parse_omega(doc["omega"], nodes, nodes);
        try {
            return Network(nodes, std::move(w));
        } catch (const Error& e) {
            throw Error(ErrorCode::ValidationError, e.what());
        }
    }
    const auto edges = string_list(doc, "edges");
    Matrix w = parse_omega(doc["omega"], nodes, edges);
    try {
        return Hypernetwork(nodes, edges, std::move(w));
    } catch (const Error& e) {
        throw Error(ErrorCode::ValidationError, e.what());
    }
}

Hypernetwork parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(s);
        while (std::getline(ls, cell, ',')) {
            cell.erase(0, cell.find_first_not_of(" \t\r"));
            cell.erase(cell.find_last_not_of(" \t\r") + 1);
            cells.push_back(cell);
        }
        return cells;
    };
    std::vector<std::string> edges;
    std::vector<std::string> nodes;
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split(line);
        const std::string where = "line " + std::to_string(line_no);
        if (edges.empty() && nodes.empty() && rows.empty()) {
            if (cells.size() < 2) invalid(where, "header needs at least one edge id");
            edges.assign(cells.begin() + 1, cells.end());
            continue;
        }
        if (cells.size() != edges.size() + 1) {
            invalid(where, "expected " + std::to_string(edges.size() + 1) + " cells, got " +
                               std::to_string(cells.size()));
        }
        nodes.push_back(cells[0]);
        auto& row = rows.emplace_back();
        for (std::size_t j = 1; j < cells.size(); ++j) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(cells[j], &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != cells[j].size() || cells[j].empty()) {
                throw Error(ErrorCode::ParseError, where + ", column " + std::to_string(j + 1) +
                                                       ": not a number: '" + cells[j] + "'");
            }
            row.push_back(v);
        }
    }
    if (edges.empty()) invalid("csv", "empty file");
    try {
        return Hypernetwork(nodes, edges, Matrix::from_rows(rows));
    } catch (const Error& e) {
        throw Error(ErrorCode::ValidationError, e.what());
    }
}

Model load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    if (csv) return parse_csv(buf.str());
    return parse_json(buf.str());
}

Hypernetwork as_hypernetwork(const Model& m) {
    if (const auto* h = std::get_if<Hypernetwork>(&m)) return *h;
    return from_network(std::get<Network>(m));
}

Network as_network(const Model& m) {
    if (const auto* n = std::get_if<Network>(&m)) return *n;
    const auto& h = std::get<Hypernetwork>(m);
    if (h.num_nodes() != h.num_edges()) {
        throw Error(ErrorCode::ValidationError, "a network needs a square kernel");
    }
    return Network(h.nodes(), h.omega());
}

// ---------------------------------------------------------------------------
// JSON encoders

namespace {

json matrix_rows(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
    return rows;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const Hypernetwork& h) {
    return {{"nodes", h.nodes()}, {"edges", h.edges()}, {"omega", matrix_rows(h.omega())}};
}

json to_json(const Network& n) {
    return {{"network", true}, {"nodes", n.nodes()}, {"omega", matrix_rows(n.omega())}};
}

json to_json(const MapQuadruple& q) {
    return {{"phi", q.phi}, {"psi", q.psi}, {"phi_back", q.phi_back}, {"psi_back", q.psi_back}};
}

json to_json(const DistanceResult& r) {
    return {{"value", r.value}, {"exact", r.exact}, {"witness", to_json(r.witness)}};
}

json to_json(const FunctionalDistortions& d) {
    return {{"dis", d.dis},
            {"dis_back", d.dis_back},
            {"codis_forward", d.codis_forward},
            {"codis_backward", d.codis_backward},
            {"max", d.max()}};
}

json to_json(const InvariantSummary& s) {
    return {{"capacity", s.capacity},
            {"node_capacity", s.node_capacity},
            {"edge_capacity", s.edge_capacity},
            {"node_capacity_image", s.node_capacity_image()},
            {"edge_capacity_image", s.edge_capacity_image()},
            {"node_radius", s.node_radius},
            {"edge_radius", s.edge_radius},
            {"spectrum", s.spectrum},
            {"support_spectrum", s.support_spectrum()},
            {"node_spectrum", s.node_spectrum},
            {"edge_spectrum", s.edge_spectrum}};
}

json to_json(const BoundReport& r) {
    return {{"local_node", r.local_node},
            {"local_edge", r.local_edge},
            {"spectrum_hausdorff_node", r.spectrum_hausdorff_node},
            {"spectrum_hausdorff_edge", r.spectrum_hausdorff_edge},
            {"capacity_fn_corr_node", r.capacity_fn_corr_node},
            {"capacity_fn_corr_edge", r.capacity_fn_corr_edge},
            {"capacity_fn_hausdorff_node", r.capacity_fn_hausdorff_node},
            {"capacity_fn_hausdorff_edge", r.capacity_fn_hausdorff_edge},
            {"capacity_radius_node", r.capacity_radius_node},
            {"capacity_radius_edge", r.capacity_radius_edge},
            {"global_spectrum", r.global_spectrum},
            {"capacity_diff", r.capacity_diff},
            {"graphified_clique", r.graphified_clique},
            {"graphified_line", r.graphified_line},
            {"graphified_node_affinity", r.graphified_node_affinity},
            {"graphified_edge_affinity", r.graphified_edge_affinity},
            {"best", r.best}};
}

json to_json(const FilteredComplex& f) {
    json simplices = json::array();
    for (const auto& s : f.simplices)
        simplices.push_back({{"vertices", s.vertices}, {"appearance", s.appearance}});
    return {{"axis", f.axis == Axis::Node ? "node" : "edge"}, {"max_dim", f.max_dim}, {"simplices", simplices}};
}

json to_json(const Barcode& b) {
    json degrees = json::array();
    for (const auto& bars : b.degrees) {
        json row = json::array();
        for (const auto& bar : bars) row.push_back({{"birth", bar.birth}, {"death", number_or_null(bar.death)}});
        degrees.push_back(row);
    }
    return {{"degrees", degrees}};
}

json to_json(const Dendrogram& d) {
    json merges = json::array();
    for (const auto& m : d.merges)
        merges.push_back({{"height", m.height}, {"children", m.children}, {"cluster", m.cluster}});
    return {{"labels", d.labels}, {"leaf_heights", d.leaf_heights}, {"merges", merges}, {"leaf_order", d.leaf_order}};
}

json to_json(const NnccVerdict& v) {
    json out = {{"holds", v.holds}};
    if (v.failing) {
        out["witness"] = {{"x0", v.failing->x0},
                          {"x1", v.failing->x1},
                          {"ybar", v.failing->ybar},
                          {"uncovered", {v.gap_lo, v.gap_hi}}};
    }
    json covers = json::array();
    for (const auto& [t, chain] : v.covers) {
        json c = json::array();
        for (const auto& iv : chain) c.push_back({{"node", iv.node}, {"lo", iv.lo}, {"hi", iv.hi}});
        covers.push_back({{"x0", t.x0}, {"x1", t.x1}, {"ybar", t.ybar}, {"cover", c}});
    }
    out["covers"] = covers;
    return out;
}

json to_json(const LabeledBipartiteNetwork& b) {
    return {{"left", b.left()}, {"right", b.right()}, {"network", to_json(b.as_network())}};
}

void save(const std::string& path, const json& doc) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
    f << doc.dump(2) << '\n';
    if (!f) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

// ---------------------------------------------------------------------------
// SVG

namespace {

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string barcode_svg(const Barcode& b, double left, double right) {
    const double width = 600, margin = 40, row_h = 14;
    std::size_t rows = 0;
    for (const auto& bars : b.degrees) rows += bars.size() + 1;
    const double height = margin * 2 + row_h * static_cast<double>(rows);
    const double span = left == right ? 1.0 : left - right;
    auto x_of = [&](double v) { return margin + (left - v) / span * (width - 2 * margin); };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
      << height << "\">\n";
    s << "<line x1=\"" << margin << "\" y1=\"" << height - margin / 2 << "\" x2=\"" << width - margin
      << "\" y2=\"" << height - margin / 2 << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << margin << "\" y=\"" << height - 4 << "\" font-size=\"10\">" << fmt(left) << "</text>\n";
    s << "<text x=\"" << width - margin << "\" y=\"" << height - 4 << "\" font-size=\"10\" text-anchor=\"end\">"
      << fmt(right) << "</text>\n";
    double y = margin;
    for (std::size_t k = 0; k < b.degrees.size(); ++k) {
        s << "<text x=\"4\" y=\"" << y + row_h * 0.7 << "\" font-size=\"10\">H" << k << "</text>\n";
        y += row_h;
        for (const auto& bar : b.degrees[k]) {
            const double x1 = x_of(bar.birth);
            const double x2 = bar.essential() ? width - margin : x_of(bar.death);
            s << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y + row_h / 2) << "\" x2=\"" << fmt(x2)
              << "\" y2=\"" << fmt(y + row_h / 2) << "\" stroke=\"" << (bar.essential() ? "firebrick" : "steelblue")
              << "\" stroke-width=\"4\"/>\n";
            y += row_h;
        }
    }
    s << "</svg>\n";
    return s.str();
}

std::string dendrogram_svg(const Dendrogram& d) {
    const std::size_t n = d.labels.size();
    const double width = std::max(200.0, 60.0 * static_cast<double>(n)), height = 400, margin = 40;
    double top = -std::numeric_limits<double>::infinity(), bottom = std::numeric_limits<double>::infinity();
    for (double h : d.leaf_heights) top = std::max(top, h), bottom = std::min(bottom, h);
    for (const auto& m : d.merges) bottom = std::min(bottom, m.height);
    const double span = top == bottom ? 1.0 : top - bottom;
    auto y_of = [&](double h) { return margin + (top - h) / span * (height - 2 * margin); };

    std::vector<double> x(n + d.merges.size()), level(n + d.merges.size());
    for (std::size_t i = 0; i < d.leaf_order.size(); ++i) {
        const std::size_t leaf = d.leaf_order[i];
        x[leaf] = margin + (static_cast<double>(i) + 0.5) * (width - 2 * margin) / static_cast<double>(n);
        level[leaf] = d.leaf_heights[leaf];
    }
    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
      << height << "\">\n";
    for (std::size_t leaf = 0; leaf < n; ++leaf) {
        s << "<text x=\"" << fmt(x[leaf]) << "\" y=\"" << fmt(y_of(level[leaf]) - 6)
          << "\" font-size=\"10\" text-anchor=\"middle\">" << escape(d.labels[leaf]) << "</text>\n";
    }
    for (const auto& m : d.merges) {
        const double ym = y_of(m.height);
        double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0;
        for (std::size_t c : m.children) {
            s << "<line x1=\"" << fmt(x[c]) << "\" y1=\"" << fmt(y_of(level[c])) << "\" x2=\"" << fmt(x[c])
              << "\" y2=\"" << fmt(ym) << "\" stroke=\"black\"/>\n";
            lo = std::min(lo, x[c]);
            hi = std::max(hi, x[c]);
            sum += x[c];
        }
        s << "<line x1=\"" << fmt(lo) << "\" y1=\"" << fmt(ym) << "\" x2=\"" << fmt(hi) << "\" y2=\"" << fmt(ym)
          << "\" stroke=\"black\"/>\n";
        s << "<text x=\"" << fmt(hi + 4) << "\" y=\"" << fmt(ym + 3) << "\" font-size=\"9\">" << fmt(m.height)
          << "</text>\n";
        x[m.cluster] = sum / static_cast<double>(m.children.size());
        level[m.cluster] = m.height;
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace hypergh
