#include "obslab/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace obslab::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

int require_int(const json& j, const char* where) {
  if (!j.is_number_integer()) fail(std::string(where) + " must be an integer");
  return j.get<int>();
}

std::int64_t require_int64(const json& j, const char* where) {
  if (!j.is_number_integer()) fail(std::string(where) + " must be an integer");
  return j.get<std::int64_t>();
}

const json& require_array(const json& j, const char* where, std::size_t len = 0) {
  if (!j.is_array()) fail(std::string(where) + " must be an array");
  if (len != 0 && j.size() != len)
    fail(std::string(where) + " must have " + std::to_string(len) + " entries");
  return j;
}

const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Graph graph_from_json(const json& j) {
  const int n = require_int(require_field(j, "n"), "\"n\"");
  std::vector<std::pair<int, int>> edges;
  for (const json& e : require_array(require_field(j, "edges"), "\"edges\"")) {
    require_array(e, "edge", 2);
    edges.emplace_back(require_int(e[0], "edge endpoint"), require_int(e[1], "edge endpoint"));
  }
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const json& l : require_array(j.at("labels"), "\"labels\""))
      labels.push_back(l.get<std::string>());
  return make_graph(n, std::move(edges), std::move(labels));
}

json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count;
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (!g.labels.empty()) j["labels"] = g.labels;
  return j;
}

CrossingSet crossing_set_from_json(const json& j, const Graph& g, const PairIndex& idx) {
  CrossingSet a(idx.size());
  for (const json& pair : require_array(j, "crossing set")) {
    require_array(pair, "pair", 2);
    int edge[2];
    for (int s = 0; s < 2; ++s) {
      require_array(pair[s], "pair edge", 2);
      const int u = require_int(pair[s][0], "edge endpoint");
      const int v = require_int(pair[s][1], "edge endpoint");
      edge[s] = g.edge_index(u, v);
      if (edge[s] < 0)
        fail("pair names a non-edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
    }
    const int i = idx.index_of(edge[0], edge[1]);
    if (i < 0) fail("pair of edges is not independent");
    if (a.get(i)) fail("duplicate pair in crossing set");
    a.set(i);
  }
  return a;
}

json crossing_set_to_json(const CrossingSet& a, const Graph& g, const PairIndex& idx) {
  if (a.length() != idx.size()) fail("crossing set length does not match pair index");
  json out = json::array();
  for (int i : a.to_indices()) {
    const auto [e, f] = idx.pair_at(i);
    out.push_back({{g.edges[e].first, g.edges[e].second},
                   {g.edges[f].first, g.edges[f].second}});
  }
  return out;
}

Drawing drawing_from_json(const json& j) {
  Drawing d;
  d.graph = graph_from_json(require_field(j, "graph"));

  for (const json& p : require_array(require_field(j, "points"), "\"points\"")) {
    require_array(p, "point", 2);
    d.points.push_back({require_int64(p[0], "x"), require_int64(p[1], "y")});
  }

  for (const json& line : require_array(require_field(j, "polylines"), "\"polylines\"")) {
    std::vector<Point> pts;
    for (const json& p : require_array(line, "polyline")) {
      require_array(p, "point", 2);
      pts.push_back({require_int64(p[0], "x"), require_int64(p[1], "y")});
    }
    d.polylines.push_back(std::move(pts));
  }

  if (static_cast<int>(d.points.size()) != d.graph.vertex_count)
    fail("\"points\" must list one point per vertex");
  if (static_cast<int>(d.polylines.size()) != d.graph.edge_count())
    fail("\"polylines\" must list one polyline per edge, in canonical edge order");
  return d;
}

json drawing_to_json(const Drawing& d) {
  json j;
  j["graph"] = graph_to_json(d.graph);
  json points = json::array();
  for (const Point& p : d.points) points.push_back({p.x, p.y});
  j["points"] = std::move(points);
  json lines = json::array();
  for (const auto& line : d.polylines) {
    json pts = json::array();
    for (const Point& p : line) pts.push_back({p.x, p.y});
    lines.push_back(std::move(pts));
  }
  j["polylines"] = std::move(lines);
  return j;
}

json histogram_to_json(const gf2::WeightHistogram& h) {
  json hist = json::object();
  for (const auto& [w, c] : h.counts) hist[std::to_string(w)] = c;
  json meta;
  meta["basis_size"] = h.basis_size;
  meta["vector_length"] = h.vector_length;
  meta["elapsed_ms"] = h.elapsed_ms;
  json j;
  j["histogram"] = std::move(hist);
  j["metadata"] = std::move(meta);
  return j;
}

gf2::WeightHistogram histogram_from_json(const json& j) {
  gf2::WeightHistogram h;
  for (const auto& [key, value] : require_field(j, "histogram").items())
    h.counts[std::stoi(key)] = value.get<std::uint64_t>();
  const json& meta = require_field(j, "metadata");
  h.basis_size = require_int(require_field(meta, "basis_size"), "basis_size");
  h.vector_length = require_int(require_field(meta, "vector_length"), "vector_length");
  h.elapsed_ms = require_int64(require_field(meta, "elapsed_ms"), "elapsed_ms");
  return h;
}

json crossing_report_to_json(const CrossingReport& r, const Graph& g) {
  const PairIndex idx = independent_pairs(g);
  json counts = json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    for (int f = e + 1; f < g.edge_count(); ++f) {
      if (r.counts[e][f] == 0) continue;
      json entry;
      entry["edges"] = {{g.edges[e].first, g.edges[e].second},
                        {g.edges[f].first, g.edges[f].second}};
      entry["crossings"] = r.counts[e][f];
      entry["independent"] = idx.index_of(e, f) >= 0;
      counts.push_back(std::move(entry));
    }
  }
  json j;
  j["crossing_pairs"] = std::move(counts);
  j["independent_crossings"] = r.independent_crossings;
  j["adjacent_crossings"] = r.adjacent_crossings;
  j["realized_set"] = crossing_set_to_json(r.realized_set, g, idx);
  j["good"] = r.good;
  j["tolerable"] = r.tolerable;
  j["bad"] = r.bad;
  j["thrackle"] = r.thrackle;
  j["generalized_thrackle"] = r.generalized_thrackle;
  j["superthrackle"] = r.superthrackle;
  return j;
}

json characterisation_to_json(const CharacterisationReport& r) {
  json j;
  j["holds"] = r.holds;
  j["basepoint_ok"] = r.basepoint_ok;
  j["directions_ok"] = r.directions_ok;
  j["constraint_rank"] = r.constraint_rank;
  j["coset_dim"] = r.coset_dim;
  j["pair_count"] = r.pair_count;
  return j;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("JSON parse error: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace obslab::io
