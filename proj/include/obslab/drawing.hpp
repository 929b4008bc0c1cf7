#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "obslab/graph.hpp"

// Exact verification of integer-coordinate polyline drawings: validity
// (transverse intersections only, no overlaps, vertices clear of
// foreign edges), per-pair crossing counts, the realized parity set,
// and the good/tolerable/thrackle classification flags.

namespace obslab {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline constexpr std::int64_t kMaxCoordinate = 1'000'000;

struct Drawing {
  Graph graph;
  std::vector<Point> points;                    // one per vertex
  std::vector<std::vector<Point>> polylines;    // one per edge, canonical edge order
};

// Validation failure with a machine-readable code:
//   COORDINATE_RANGE, DUPLICATE_VERTEX, DEGENERATE_SEGMENT,
//   ENDPOINT_MISMATCH, VERTEX_ON_EDGE, OVERLAPPING_SEGMENTS,
//   NON_TRANSVERSE_TOUCH, SELF_INTERSECTION.
class DrawingError : public std::runtime_error {
 public:
  DrawingError(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Throws DrawingError on the first violated invariant (std::
// invalid_argument for structural size mismatches).
void validate_drawing(const Drawing& d);

struct CrossingReport {
  // Symmetric matrix of proper crossing counts for every edge pair,
  // adjacent pairs included; diagonal zero.
  std::vector<std::vector<int>> counts;
  int independent_crossings = 0;
  int adjacent_crossings = 0;
  CrossingSet realized_set;  // odd-parity independent pairs

  bool good = false;                  // tolerable and no adjacent crossings
  bool tolerable = false;             // no independent pair crosses twice
  bool bad = false;                   // not good
  bool thrackle = false;              // every independent pair crosses exactly once
  bool generalized_thrackle = false;  // independent odd, adjacent even
  bool superthrackle = false;         // every pair crosses exactly once
};

// Validates, then counts. All intersection tests use exact 64-bit
// orientation predicates; degeneracies are rejected, never perturbed.
CrossingReport crossing_report(const Drawing& d);

// True iff the drawing's realized parity set equals a. Throws
// std::invalid_argument when a's length does not match |PG|.
bool is_realisation_of(const Drawing& d, const CrossingSet& a);

// Exact sign of the cross product (b - a) x (c - a): > 0 for a left
// turn, 0 for collinear. Exposed for tests.
int orientation(const Point& a, const Point& b, const Point& c);
bool point_on_segment(const Point& p, const Point& a, const Point& b);

}  // namespace obslab
