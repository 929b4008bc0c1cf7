#include "obslab/drawing.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace obslab {

namespace {

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

std::string point_str(const Point& p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

struct Segment {
  Point a, b;
  int edge;     // owning edge index
  int pos;      // position within the polyline
  bool first;   // contains the polyline's first point
  bool last;    // contains the polyline's last point
};

// Whether the touch point p is a free end of the segment's polyline
// (rather than an interior bend), so that meeting another edge there
// can be legitimate.
bool terminal_contact(const Segment& s, const std::vector<Point>& line, const Point& p) {
  return (s.first && line.front() == p) || (s.last && line.back() == p);
}

enum class Meet { kNone, kProper, kTouch, kOverlap };

struct MeetResult {
  Meet kind = Meet::kNone;
  Point at;  // touch point, valid for kTouch
};

MeetResult classify(const Segment& s, const Segment& t) {
  const int o1 = orientation(s.a, s.b, t.a);
  const int o2 = orientation(s.a, s.b, t.b);
  const int o3 = orientation(t.a, t.b, s.a);
  const int o4 = orientation(t.a, t.b, s.b);

  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0)
    return {Meet::kProper, {}};

  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // Collinear: compare 1-D extents along the dominant axis.
    const bool by_x = s.a.x != s.b.x || t.a.x != t.b.x;
    auto key = [&](const Point& p) { return by_x ? p.x : p.y; };
    const std::int64_t s_lo = std::min(key(s.a), key(s.b)), s_hi = std::max(key(s.a), key(s.b));
    const std::int64_t t_lo = std::min(key(t.a), key(t.b)), t_hi = std::max(key(t.a), key(t.b));
    const std::int64_t lo = std::max(s_lo, t_lo), hi = std::min(s_hi, t_hi);
    if (lo > hi) return {Meet::kNone, {}};
    if (lo < hi) return {Meet::kOverlap, {}};
    const Point at = key(s.a) == lo ? s.a : s.b;
    return {Meet::kTouch, at};
  }

  // Non-collinear with some orientation zero: possible endpoint touch.
  if (o1 == 0 && point_on_segment(t.a, s.a, s.b)) return {Meet::kTouch, t.a};
  if (o2 == 0 && point_on_segment(t.b, s.a, s.b)) return {Meet::kTouch, t.b};
  if (o3 == 0 && point_on_segment(s.a, t.a, t.b)) return {Meet::kTouch, s.a};
  if (o4 == 0 && point_on_segment(s.b, t.a, t.b)) return {Meet::kTouch, s.b};
  return {Meet::kNone, {}};
}

void check_range(const Point& p) {
  if (std::abs(p.x) > kMaxCoordinate || std::abs(p.y) > kMaxCoordinate)
    throw DrawingError("COORDINATE_RANGE", "coordinate " + point_str(p) + " out of range");
}

std::vector<Segment> collect_segments(const Drawing& d) {
  std::vector<Segment> segs;
  for (int e = 0; e < d.graph.edge_count(); ++e) {
    const std::vector<Point>& line = d.polylines[e];
    const int count = static_cast<int>(line.size()) - 1;
    for (int i = 0; i < count; ++i)
      segs.push_back({line[i], line[i + 1], e, i, i == 0, i == count - 1});
  }
  return segs;
}

std::vector<std::vector<int>> scan(const Drawing& d) {
  const Graph& g = d.graph;
  if (static_cast<int>(d.points.size()) != g.vertex_count)
    throw std::invalid_argument("point count does not match vertex count");
  if (static_cast<int>(d.polylines.size()) != g.edge_count())
    throw std::invalid_argument("polyline count does not match edge count");

  for (const Point& p : d.points) check_range(p);
  for (const auto& line : d.polylines)
    for (const Point& p : line) check_range(p);

  for (int u = 0; u < g.vertex_count; ++u)
    for (int v = u + 1; v < g.vertex_count; ++v)
      if (d.points[u] == d.points[v])
        throw DrawingError("DUPLICATE_VERTEX", "vertices " + vertex_name(g, u) + " and " +
                                                   vertex_name(g, v) + " share " +
                                                   point_str(d.points[u]));

  for (int e = 0; e < g.edge_count(); ++e) {
    const std::vector<Point>& line = d.polylines[e];
    if (line.size() < 2) throw std::invalid_argument("polyline needs at least two points");
    for (std::size_t i = 0; i + 1 < line.size(); ++i)
      if (line[i] == line[i + 1])
        throw DrawingError("DEGENERATE_SEGMENT",
                           "edge " + std::to_string(e) + " repeats " + point_str(line[i]));
    const Point pu = d.points[g.edges[e].first];
    const Point pv = d.points[g.edges[e].second];
    const bool forward = line.front() == pu && line.back() == pv;
    const bool backward = line.front() == pv && line.back() == pu;
    if (!forward && !backward)
      throw DrawingError("ENDPOINT_MISMATCH",
                         "polyline of edge " + std::to_string(e) +
                             " does not join its endpoints");
  }

  const std::vector<Segment> segs = collect_segments(d);

  // No polyline may pass through any vertex point except to terminate
  // on its own endpoints.
  for (int v = 0; v < g.vertex_count; ++v) {
    const Point p = d.points[v];
    for (const Segment& s : segs) {
      if (!point_on_segment(p, s.a, s.b)) continue;
      const bool own_end = g.incident(s.edge, v) && (p == s.a || p == s.b) &&
                           terminal_contact(s, d.polylines[s.edge], p);
      if (!own_end)
        throw DrawingError("VERTEX_ON_EDGE", "vertex " + vertex_name(g, v) + " lies on edge " +
                                                 std::to_string(s.edge));
    }
  }

  const int m = g.edge_count();
  std::vector<std::vector<int>> counts(m, std::vector<int>(m, 0));

  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Segment& s = segs[i];
      const Segment& t = segs[j];
      const MeetResult meet = classify(s, t);
      if (meet.kind == Meet::kNone) continue;

      const std::string where =
          "edge " + std::to_string(s.edge) + " segment " + std::to_string(s.pos) + " vs edge " +
          std::to_string(t.edge) + " segment " + std::to_string(t.pos);

      if (meet.kind == Meet::kOverlap) throw DrawingError("OVERLAPPING_SEGMENTS", where);

      if (s.edge == t.edge) {
        // Consecutive segments share exactly their junction; anything
        // else is the edge meeting itself.
        if (t.pos - s.pos == 1 && meet.kind == Meet::kTouch && meet.at == s.b) continue;
        throw DrawingError("SELF_INTERSECTION", where);
      }

      if (meet.kind == Meet::kProper) {
        ++counts[s.edge][t.edge];
        ++counts[t.edge][s.edge];
        continue;
      }

      // Touch between different edges: only a shared graph vertex at
      // both polylines' free ends is transverse-compatible.
      bool allowed = false;
      for (int v : {g.edges[s.edge].first, g.edges[s.edge].second})
        if (g.incident(t.edge, v) && d.points[v] == meet.at &&
            terminal_contact(s, d.polylines[s.edge], meet.at) &&
            terminal_contact(t, d.polylines[t.edge], meet.at))
          allowed = true;
      if (!allowed)
        throw DrawingError("NON_TRANSVERSE_TOUCH", where + " at " + point_str(meet.at));
    }
  }
  return counts;
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
  const std::int64_t cross =
      (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sign(cross);
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

void validate_drawing(const Drawing& d) { scan(d); }

CrossingReport crossing_report(const Drawing& d) {
  CrossingReport r;
  r.counts = scan(d);

  const Graph& g = d.graph;
  const PairIndex idx = independent_pairs(g);
  r.realized_set = CrossingSet(idx.size());

  bool all_indep_once = true, all_indep_odd = true, all_adjacent_even = true,
       all_adjacent_once = true;
  r.tolerable = true;
  for (int e = 0; e < g.edge_count(); ++e) {
    for (int f = e + 1; f < g.edge_count(); ++f) {
      const int c = r.counts[e][f];
      const int pair = idx.index_of(e, f);
      if (pair >= 0) {
        r.independent_crossings += c;
        if (c % 2 == 1) r.realized_set.set(pair);
        if (c > 1) r.tolerable = false;
        if (c != 1) all_indep_once = false;
        if (c % 2 == 0) all_indep_odd = false;
      } else {
        r.adjacent_crossings += c;
        if (c % 2 == 1) all_adjacent_even = false;
        if (c != 1) all_adjacent_once = false;
      }
    }
  }
  r.good = r.tolerable && r.adjacent_crossings == 0;
  r.bad = !r.good;
  r.thrackle = all_indep_once;
  r.generalized_thrackle = all_indep_odd && all_adjacent_even;
  r.superthrackle = all_indep_once && all_adjacent_once;
  return r;
}

bool is_realisation_of(const Drawing& d, const CrossingSet& a) {
  const CrossingReport r = crossing_report(d);
  if (a.length() != r.realized_set.length())
    throw std::invalid_argument("crossing set does not match the drawing's graph");
  return r.realized_set == a;
}

}  // namespace obslab
