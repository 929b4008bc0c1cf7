#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

// Bit-packed GF(2) linear algebra: vectors, matrices, rank/solve/image
// bases, affine subspaces, and the Gray-code coset weight-histogram
// kernel. All row reduction is deterministic (leftmost column, first
// row), so echelon forms, bases and solutions are byte-reproducible.

namespace obslab::gf2 {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int length) : len_(length), w_((length + 63) / 64, 0) {}

  static BitVector from_indices(int length, std::span<const int> ones);

  int length() const { return len_; }
  int word_count() const { return static_cast<int>(w_.size()); }

  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool value = true) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (value)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(int i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void xor_with(const BitVector& other);
  int popcount() const;
  bool is_zero() const;
  // Index of the lowest set bit, or -1 when zero.
  int first_set() const;

  std::vector<int> to_indices() const;

  std::span<const std::uint64_t> words() const { return w_; }
  std::uint64_t word(int i) const { return w_[i]; }

  friend bool operator==(const BitVector& a, const BitVector& b) {
    return a.len_ == b.len_ && a.w_ == b.w_;
  }
  friend bool operator!=(const BitVector& a, const BitVector& b) { return !(a == b); }

  friend BitVector operator^(BitVector a, const BitVector& b) {
    a.xor_with(b);
    return a;
  }

 private:
  int len_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const;
};

// GF(2) inner product: parity of the intersection support.
bool dot(const BitVector& a, const BitVector& b);

// Rectangular: every row has the same length. Row/column roles are the
// caller's business (the realisability module uses rows = 1-cells,
// columns = independent edge pairs).
struct BitMatrix {
  int cols = 0;
  std::vector<BitVector> rows;

  BitMatrix() = default;
  explicit BitMatrix(int columns) : cols(columns) {}

  int row_count() const { return static_cast<int>(rows.size()); }
  void add_row(BitVector row);

  BitMatrix transposed() const;
};

// Row echelon form with combination tracking: each echelon row carries
// the subset of original rows that XOR to it, so solutions can be
// reported over the caller's row index space.
class EchelonForm {
 public:
  static EchelonForm build(const BitMatrix& m);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<BitVector>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduces target against the echelon rows. Returns the combination of
  // original rows whose XOR equals target, or nullopt when target is
  // outside the row space. Free variables are implicitly zero, making
  // the reported combination canonical.
  std::optional<BitVector> solve(const BitVector& target) const;

  // Basis of the nullspace {x : M x = 0} treating matrix rows as the
  // constraints, one basis vector per free column, ascending.
  std::vector<BitVector> nullspace_basis() const;

 private:
  int cols_ = 0;
  int original_rows_ = 0;
  std::vector<BitVector> rows_;
  std::vector<int> pivots_;
  std::vector<BitVector> combos_;
};

int rank(const BitMatrix& m);

// Basis of the row space, in reduced echelon form. Size equals rank(m).
std::vector<BitVector> image_basis(const BitMatrix& m);

// Basepoint plus an independent basis: the coset basepoint + span(basis).
struct AffineSubspace {
  BitVector basepoint;
  std::vector<BitVector> basis;

  int dimension() const { return static_cast<int>(basis.size()); }
  int length() const { return basepoint.length(); }
};

// Validates lengths and basis independence; throws std::invalid_argument.
AffineSubspace make_affine_subspace(BitVector basepoint, std::vector<BitVector> basis);

// Coefficients c with v = basepoint XOR sum c_i basis_i, or nullopt.
// Throws std::invalid_argument on length mismatch.
std::optional<BitVector> membership(const AffineSubspace& sub, const BitVector& v);

bool affine_equal(const AffineSubspace& a, const AffineSubspace& b);

// All v with (row_i, v) = rhs_i over GF(2), as basepoint + nullspace, or
// nullopt when inconsistent.
std::optional<AffineSubspace> solve_linear_system(const BitMatrix& m, const BitVector& rhs);

struct WeightHistogram {
  std::map<int, std::uint64_t> counts;  // weight -> multiplicity, nonzero only
  int basis_size = 0;
  int vector_length = 0;
  std::int64_t elapsed_ms = 0;

  std::uint64_t total() const;
  int min_weight() const;
  int max_weight() const;
};

inline constexpr int kMaxHistogramBasis = 40;

// Full enumeration of the coset by a binary-reflected Gray-code sweep:
// one basis XOR and one popcount per element. Work splits across
// workers by fixing the top-order basis coefficients; partial histograms
// merge by addition, so the result is identical for every worker count.
// Throws std::domain_error when the basis size exceeds kMaxHistogramBasis.
WeightHistogram weight_histogram(const AffineSubspace& sub, int workers);

}  // namespace obslab::gf2
