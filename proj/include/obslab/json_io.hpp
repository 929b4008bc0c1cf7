#pragma once

#include <string>

#include "json.hpp"
#include "obslab/deleted_product.hpp"
#include "obslab/drawing.hpp"
#include "obslab/gf2.hpp"
#include "obslab/graph.hpp"
#include "obslab/realisability.hpp"

// JSON formats for every file the tool reads or writes. ordered_json
// keeps insertion order, so serialization is deterministic and numeric
// histogram keys stay sorted numerically.

namespace obslab::io {

using json = nlohmann::ordered_json;

// {"n": int, "edges": [[u, v], ...]}; optional "labels": [str, ...].
Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);

// Sorted list of pairs of edges, each edge by endpoints:
// [[[a, b], [c, d]], ...]. Order-insensitive on input; canonical
// (PairIndex order) on output.
CrossingSet crossing_set_from_json(const json& j, const Graph& g, const PairIndex& idx);
json crossing_set_to_json(const CrossingSet& a, const Graph& g, const PairIndex& idx);

// {"graph": {...}, "points": [[x, y], ...], "polylines": [[[x, y], ...], ...]}.
Drawing drawing_from_json(const json& j);
json drawing_to_json(const Drawing& d);

// {"histogram": {"3": 120, ...}, "metadata": {basis_size, vector_length,
// elapsed_ms}}; histogram keys ascend numerically.
json histogram_to_json(const gf2::WeightHistogram& h);
gf2::WeightHistogram histogram_from_json(const json& j);

json crossing_report_to_json(const CrossingReport& r, const Graph& g);
json characterisation_to_json(const CharacterisationReport& r);

// Parses with errors wrapped as std::invalid_argument naming the
// offending field.
json parse_json_text(const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace obslab::io
