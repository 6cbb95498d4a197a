// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "hypergh/dowker.hpp"
#include "hypergh/graphify.hpp"
#include "hypergh/invariants.hpp"
#include "hypergh/metrics.hpp"
#include "hypergh/model.hpp"
#include "hypergh/transport.hpp"

namespace hypergh {

using json = nlohmann::json;
using Model = std::variant<Hypernetwork, Network>;

/// Parses a JSON document. `omega` is either dense rows or sparse
/// [node, edge, value] triples with implicit zeros; `"network": true` with a
/// square kernel yields a Network. Throws ParseError or ValidationError.
Model parse_json(const std::string& text);

/// Dense CSV: header row of edge ids (first cell ignored), then one row per node.
Hypernetwork parse_csv(const std::string& text);

/// Reads a file; `.csv` files go through parse_csv, everything else through parse_json.
Model load(const std::string& path);

/// Interprets a model as a hypernetwork; networks become (X, X, omega).
Hypernetwork as_hypernetwork(const Model& m);
/// Interprets a model as a network; hypernetworks must be square.
Network as_network(const Model& m);

json to_json(const Hypernetwork& h);
json to_json(const Network& n);
json to_json(const MapQuadruple& q);
json to_json(const DistanceResult& r);
json to_json(const FunctionalDistortions& d);
json to_json(const InvariantSummary& s);
json to_json(const BoundReport& r);
json to_json(const FilteredComplex& f);
json to_json(const Barcode& b);
json to_json(const Dendrogram& d);
json to_json(const NnccVerdict& v);
json to_json(const LabeledBipartiteNetwork& b);

void save(const std::string& path, const json& doc);

/// One row per bar grouped by degree; the x axis runs from `left` (the
/// capacity) down to `right` (the smallest spectrum value).
std::string barcode_svg(const Barcode& b, double left, double right);

/// Leaves on top at their own heights, merge heights decreasing downward.
std::string dendrogram_svg(const Dendrogram& d);

}  // namespace hypergh
