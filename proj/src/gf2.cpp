#include "obslab/gf2.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace obslab::gf2 {

BitVector BitVector::from_indices(int length, std::span<const int> ones) {
  BitVector v(length);
  for (int i : ones) {
    if (i < 0 || i >= length) throw std::invalid_argument("bit index out of range");
    v.set(i);
  }
  return v;
}

void BitVector::xor_with(const BitVector& other) {
  if (other.len_ != len_) throw std::invalid_argument("BitVector length mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= other.w_[i];
}

int BitVector::popcount() const {
  int c = 0;
  for (std::uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool BitVector::is_zero() const {
  for (std::uint64_t w : w_)
    if (w != 0) return false;
  return true;
}

int BitVector::first_set() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] != 0) return static_cast<int>(i) * 64 + std::countr_zero(w_[i]);
  return -1;
}

std::vector<int> BitVector::to_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t w = w_[i];
    while (w != 0) {
      out.push_back(static_cast<int>(i) * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t BitVectorHash::operator()(const BitVector& v) const {
  // FNV-1a over the packed words.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint64_t w : v.words()) {
    for (int b = 0; b < 64; b += 8) {
      h ^= (w >> b) & 0xff;
      h *= 0x100000001b3ull;
    }
  }
  return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(v.length()));
}

bool dot(const BitVector& a, const BitVector& b) {
  if (a.length() != b.length()) throw std::invalid_argument("BitVector length mismatch");
  int parity = 0;
  for (int i = 0; i < a.word_count(); ++i) parity ^= std::popcount(a.word(i) & b.word(i)) & 1;
  return parity != 0;
}

void BitMatrix::add_row(BitVector row) {
  if (row.length() != cols) throw std::invalid_argument("row length does not match column count");
  rows.push_back(std::move(row));
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(row_count());
  t.rows.assign(cols, BitVector(row_count()));
  for (int r = 0; r < row_count(); ++r)
    for (int c : rows[r].to_indices()) t.rows[c].set(r);
  return t;
}

EchelonForm EchelonForm::build(const BitMatrix& m) {
  EchelonForm e;
  e.cols_ = m.cols;
  e.original_rows_ = m.row_count();

  std::vector<BitVector> work = m.rows;
  std::vector<BitVector> combos(work.size());
  for (std::size_t i = 0; i < work.size(); ++i) {
    combos[i] = BitVector(m.row_count());
    combos[i].set(static_cast<int>(i));
  }

  // Gauss-Jordan, leftmost column first, first available row.  Rows are
  // copied out only after the sweep so they carry the full reduction:
  // eliminations at later pivot columns still rewrite earlier pivot rows.
  std::size_t next = 0;
  for (int col = 0; col < m.cols && next < work.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < work.size() && !work[pivot].get(col)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[next], work[pivot]);
    std::swap(combos[next], combos[pivot]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r != next && work[r].get(col)) {
        work[r].xor_with(work[next]);
        combos[r].xor_with(combos[next]);
      }
    }
    e.pivots_.push_back(col);
    ++next;
  }
  e.rows_.assign(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(next));
  e.combos_.assign(combos.begin(), combos.begin() + static_cast<std::ptrdiff_t>(next));
  return e;
}

std::optional<BitVector> EchelonForm::solve(const BitVector& target) const {
  if (target.length() != cols_) throw std::invalid_argument("target length mismatch");
  BitVector residual = target;
  BitVector combo(original_rows_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (residual.get(pivots_[i])) {
      residual.xor_with(rows_[i]);
      combo.xor_with(combos_[i]);
    }
  }
  if (!residual.is_zero()) return std::nullopt;
  return combo;
}

std::vector<BitVector> EchelonForm::nullspace_basis() const {
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots_) is_pivot[p] = true;

  std::vector<BitVector> basis;
  for (int col = 0; col < cols_; ++col) {
    if (is_pivot[col]) continue;
    BitVector v(cols_);
    v.set(col);
    // Reduced form: each pivot row has a single pivot entry among pivot
    // columns, so back-substitution reads straight off the echelon rows.
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i].get(col)) v.set(pivots_[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const BitMatrix& m) { return EchelonForm::build(m).rank(); }

std::vector<BitVector> image_basis(const BitMatrix& m) { return EchelonForm::build(m).rows(); }

AffineSubspace make_affine_subspace(BitVector basepoint, std::vector<BitVector> basis) {
  BitMatrix m(basepoint.length());
  for (const BitVector& b : basis) {
    if (b.length() != basepoint.length())
      throw std::invalid_argument("basis vector length mismatch");
    m.add_row(b);
  }
  if (rank(m) != static_cast<int>(basis.size()))
    throw std::invalid_argument("basis vectors are linearly dependent");
  return AffineSubspace{std::move(basepoint), std::move(basis)};
}

std::optional<BitVector> membership(const AffineSubspace& sub, const BitVector& v) {
  if (v.length() != sub.basepoint.length())
    throw std::invalid_argument("vector length does not match subspace");
  BitMatrix m(sub.basepoint.length());
  for (const BitVector& b : sub.basis) m.add_row(b);
  return EchelonForm::build(m).solve(v ^ sub.basepoint);
}

bool affine_equal(const AffineSubspace& a, const AffineSubspace& b) {
  if (a.length() != b.length()) return false;
  if (a.dimension() != b.dimension()) return false;
  if (!membership(a, b.basepoint).has_value()) return false;
  // Equal dimensions plus containment of b's basis directions in span(a.basis).
  BitMatrix m(a.length());
  for (const BitVector& v : a.basis) m.add_row(v);
  const EchelonForm e = EchelonForm::build(m);
  for (const BitVector& v : b.basis)
    if (!e.solve(v).has_value()) return false;
  return true;
}

std::optional<AffineSubspace> solve_linear_system(const BitMatrix& m, const BitVector& rhs) {
  if (rhs.length() != m.row_count()) throw std::invalid_argument("rhs length mismatch");
  // Eliminate on rows augmented with the right-hand side bit.
  BitMatrix aug(m.cols + 1);
  for (int r = 0; r < m.row_count(); ++r) {
    BitVector row(m.cols + 1);
    for (int c : m.rows[r].to_indices()) row.set(c);
    if (rhs.get(r)) row.set(m.cols);
    aug.add_row(std::move(row));
  }
  const EchelonForm e = EchelonForm::build(aug);

  BitVector particular(m.cols);
  for (std::size_t i = 0; i < e.rows().size(); ++i) {
    if (e.pivots()[i] == m.cols) return std::nullopt;  // 0 = 1 row
    if (e.rows()[i].get(m.cols)) particular.set(e.pivots()[i]);
  }

  // Nullspace of the unaugmented system.
  BitMatrix hom(m.cols);
  for (const BitVector& row : m.rows) hom.add_row(row);
  return make_affine_subspace(std::move(particular), EchelonForm::build(hom).nullspace_basis());
}

std::uint64_t WeightHistogram::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, c] : counts) t += c;
  return t;
}

int WeightHistogram::min_weight() const {
  return counts.empty() ? -1 : counts.begin()->first;
}

int WeightHistogram::max_weight() const {
  return counts.empty() ? -1 : counts.rbegin()->first;
}

namespace {

// Single-machine-word sweep: the whole vector fits in one uint64.
void sweep_word(std::uint64_t start, const std::uint64_t* basis, int dim, std::uint64_t* hist) {
  std::uint64_t v = start;
  ++hist[std::popcount(v)];
  if (dim == 0) return;
  const std::uint64_t steps = std::uint64_t{1} << dim;
  for (std::uint64_t t = 1; t < steps; ++t) {
    v ^= basis[std::countr_zero(t)];
    ++hist[std::popcount(v)];
  }
}

// General multi-word sweep; weight is updated per touched word.
void sweep_wide(const BitVector& start, const std::vector<BitVector>& basis, int dim,
                std::uint64_t* hist) {
  std::vector<std::uint64_t> v(start.words().begin(), start.words().end());
  int weight = start.popcount();
  ++hist[weight];
  if (dim == 0) return;
  const std::uint64_t steps = std::uint64_t{1} << dim;
  for (std::uint64_t t = 1; t < steps; ++t) {
    const std::span<const std::uint64_t> b = basis[std::countr_zero(t)].words();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (b[i] == 0) continue;
      weight -= std::popcount(v[i]);
      v[i] ^= b[i];
      weight += std::popcount(v[i]);
    }
    ++hist[weight];
  }
}

int split_bits(int workers, int dim) {
  if (workers <= 1 || dim == 0) return 0;
  int b = 0;
  while ((1 << b) < workers * 8) ++b;
  return std::min(b, dim);
}

}  // namespace

WeightHistogram weight_histogram(const AffineSubspace& sub, int workers) {
  const int k = sub.dimension();
  const int len = sub.length();
  if (k > kMaxHistogramBasis) throw std::domain_error("histogram basis size exceeds cap");
  if (workers < 1) throw std::invalid_argument("workers must be positive");

  const auto t0 = std::chrono::steady_clock::now();

  // Fix the top b coefficients; task j sweeps the 2^(k-b) completions of
  // prefix j. Sub-histograms merge by addition, so any assignment of
  // tasks to workers yields identical output.
  const int b = split_bits(workers, k);
  const int dim = k - b;
  const std::uint64_t tasks = std::uint64_t{1} << b;
  const bool word_path = len <= 64;

  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(static_cast<std::size_t>(len) + 1, 0));

  std::vector<std::uint64_t> basis_words(k > 0 ? k : 1, 0);
  if (word_path)
    for (int i = 0; i < k; ++i) basis_words[i] = sub.basis[i].word_count() ? sub.basis[i].word(0) : 0;

  auto run_tasks = [&](int tid) {
    std::uint64_t* hist = partial[tid].data();
    for (std::uint64_t j = tid; j < tasks; j += workers) {
      BitVector start = sub.basepoint;
      for (int i = 0; i < b; ++i)
        if ((j >> i) & 1) start.xor_with(sub.basis[dim + i]);
      if (word_path)
        sweep_word(start.word_count() ? start.word(0) : 0, basis_words.data(), dim, hist);
      else
        sweep_wide(start, sub.basis, dim, hist);
    }
  };

  if (workers == 1) {
    run_tasks(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(run_tasks, t);
    for (std::thread& t : pool) t.join();
  }

  WeightHistogram out;
  out.basis_size = k;
  out.vector_length = len;
  for (int w = 0; w <= len; ++w) {
    std::uint64_t c = 0;
    for (int t = 0; t < workers; ++t) c += partial[t][w];
    if (c != 0) out.counts[w] = c;
  }
  out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return out;
}

}  // namespace obslab::gf2
