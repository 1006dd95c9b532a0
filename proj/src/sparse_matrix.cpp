#include "quadgor/sparse_matrix.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <tuple>

#include "quadgor/errors.hpp"

namespace qg {

namespace {

// Integer row kept sorted by column. Rows are scaled freely during
// elimination, so only the rational row space is preserved, which is all
// rank and RREF need.
using IntEntry = std::pair<std::size_t, BigInt>;
using IntRow = std::vector<IntEntry>;

IntRow clear_denominators(const std::vector<std::pair<std::size_t, Rational>>& row) {
  BigInt lcm_den = 1;
  for (const auto& [c, v] : row) {
    const BigInt d = denominator(v);
    lcm_den = lcm_den / gcd(lcm_den, d) * d;
  }
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.emplace_back(c, numerator(v) * (lcm_den / denominator(v)));
  return out;
}

void strip_content(IntRow& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (const auto& [c, v] : row) {
    g = gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

const BigInt* row_value(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const IntEntry& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// target = pivot_val * target - target_val_at_pivot_col * pivot_row, then
// content-stripped. Cancels the pivot column exactly.
IntRow eliminate_against(const IntRow& target, const IntRow& pivot, const BigInt& pivot_val,
                         const BigInt& target_val) {
  IntRow out;
  out.reserve(target.size() + pivot.size());
  auto a = target.begin();
  auto b = pivot.begin();
  while (a != target.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != target.end() && a->first < b->first)) {
      out.emplace_back(a->first, pivot_val * a->second);
      ++a;
    } else if (a == target.end() || b->first < a->first) {
      out.emplace_back(b->first, -target_val * b->second);
      ++b;
    } else {
      BigInt v = pivot_val * a->second - target_val * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  strip_content(out);
  return out;
}

struct SparseElimination {
  std::vector<IntRow> rows;
  std::vector<bool> active;
  std::vector<std::vector<std::size_t>> col_rows;  // may hold stale ids
  std::vector<std::size_t> col_count;              // exact live counts

  explicit SparseElimination(const SparseRationalMatrix& m) {
    rows.reserve(m.rows());
    active.assign(m.rows(), true);
    col_rows.assign(m.cols(), {});
    col_count.assign(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      rows.push_back(clear_denominators(m.row(i)));
      strip_content(rows.back());
      for (const auto& [c, v] : rows.back()) {
        col_rows[c].push_back(i);
        ++col_count[c];
      }
    }
  }

  void replace_row(std::size_t id, IntRow next) {
    for (const auto& [c, v] : rows[id]) --col_count[c];
    for (const auto& [c, v] : next) {
      ++col_count[c];
      col_rows[c].push_back(id);  // duplicates filtered on use
    }
    rows[id] = std::move(next);
  }

  void retire(std::size_t id) {
    active[id] = false;
    for (const auto& [c, v] : rows[id]) --col_count[c];
  }

  // Live candidate rows holding column c, deduplicated, ascending id.
  std::vector<std::size_t> candidates(std::size_t c) {
    auto& bucket = col_rows[c];
    std::sort(bucket.begin(), bucket.end());
    bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    std::vector<std::size_t> out;
    out.reserve(bucket.size());
    for (std::size_t id : bucket)
      if (active[id] && row_value(rows[id], c)) out.push_back(id);
    bucket.assign(out.begin(), out.end());
    return out;
  }
};

bool use_dense(const SparseRationalMatrix& m, const EliminationConfig& cfg) {
  if (m.rows() == 0 || m.cols() == 0) return false;
  // Never densify beyond a few million cells; above that the sparse path is
  // the only sane one no matter the density.
  if (m.rows() > 2000000 / std::max<std::size_t>(m.cols(), 1)) return false;
  return m.nonzero_count() * 100 > m.rows() * m.cols() * cfg.dense_threshold_percent;
}

std::size_t rank_dense(const SparseRationalMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<BigInt>> a(nr, std::vector<BigInt>(nc, 0));
  for (std::size_t i = 0; i < nr; ++i)
    for (const auto& [c, v] : clear_denominators(m.row(i))) a[i][c] = v;
  // One-step Bareiss; every interior division is exact.
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_sparse(const SparseRationalMatrix& m) {
  SparseElimination el(m);
  // Lazy min-heap over (nnz, row id); Markowitz-style: the sparsest live row
  // pivots, on its column with the fewest live entries. Ties break to the
  // smallest index, keeping runs reproducible.
  using HeapItem = std::pair<std::size_t, std::size_t>;
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
  for (std::size_t i = 0; i < el.rows.size(); ++i)
    if (!el.rows[i].empty()) heap.emplace(el.rows[i].size(), i);

  std::size_t rank_count = 0;
  while (!heap.empty()) {
    auto [nnz, r] = heap.top();
    heap.pop();
    if (!el.active[r] || el.rows[r].empty() || el.rows[r].size() != nnz) continue;

    std::size_t pivot_col = el.rows[r].front().first;
    std::size_t best_count = el.col_count[pivot_col];
    for (const auto& [c, v] : el.rows[r]) {
      if (el.col_count[c] < best_count) {
        best_count = el.col_count[c];
        pivot_col = c;
      }
    }
    const BigInt pivot_val = *row_value(el.rows[r], pivot_col);

    for (std::size_t id : el.candidates(pivot_col)) {
      if (id == r) continue;
      const BigInt target_val = *row_value(el.rows[id], pivot_col);
      IntRow next = eliminate_against(el.rows[id], el.rows[r], pivot_val, target_val);
      el.replace_row(id, std::move(next));
      if (!el.rows[id].empty()) heap.emplace(el.rows[id].size(), id);
    }
    el.retire(r);
    el.col_rows[pivot_col].clear();
    ++rank_count;
  }
  return rank_count;
}

struct RrefResult {
  std::vector<std::size_t> pivot_cols;
  // Rational pivot rows of the unique RREF, sorted by pivot column.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> pivot_rows;
};

// Column-ordered fraction-free forward pass followed by rational
// back-substitution. The output is the reduced row echelon form, which is
// unique for the row space, so pivot-row tie-breaks cannot leak through.
RrefResult rref_sparse(const SparseRationalMatrix& m) {
  SparseElimination el(m);
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> pivot_ids;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto cand = el.candidates(c);
    if (cand.empty()) continue;
    std::size_t pivot = cand.front();
    for (std::size_t id : cand)
      if (el.rows[id].size() < el.rows[pivot].size()) pivot = id;
    const BigInt pivot_val = *row_value(el.rows[pivot], c);
    for (std::size_t id : cand) {
      if (id == pivot) continue;
      const BigInt target_val = *row_value(el.rows[id], c);
      el.replace_row(id, eliminate_against(el.rows[id], el.rows[pivot], pivot_val, target_val));
    }
    el.retire(pivot);
    el.col_rows[c].clear();
    pivot_cols.push_back(c);
    pivot_ids.push_back(pivot);
  }

  RrefResult out;
  out.pivot_cols = pivot_cols;
  out.pivot_rows.resize(pivot_cols.size());
  for (std::size_t t = 0; t < pivot_cols.size(); ++t) {
    const IntRow& row = el.rows[pivot_ids[t]];
    const BigInt* pv = row_value(row, pivot_cols[t]);
    auto& rr = out.pivot_rows[t];
    rr.reserve(row.size());
    for (const auto& [c, v] : row) rr.emplace_back(c, make_rational(v, *pv));
  }
  // Clear each pivot column above its pivot, right to left.
  for (std::size_t t = pivot_cols.size(); t-- > 0;) {
    const std::size_t pc = pivot_cols[t];
    for (std::size_t s = 0; s < t; ++s) {
      auto& rr = out.pivot_rows[s];
      auto it = std::lower_bound(
          rr.begin(), rr.end(), pc,
          [](const std::pair<std::size_t, Rational>& e, std::size_t c) { return e.first < c; });
      if (it == rr.end() || it->first != pc) continue;
      const Rational factor = it->second;
      std::vector<std::pair<std::size_t, Rational>> merged;
      merged.reserve(rr.size() + out.pivot_rows[t].size());
      auto a = rr.begin();
      auto b = out.pivot_rows[t].begin();
      const auto bend = out.pivot_rows[t].end();
      while (a != rr.end() || b != bend) {
        if (b == bend || (a != rr.end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == rr.end() || b->first < a->first) {
          Rational v = -factor * b->second;
          if (v != 0) merged.emplace_back(b->first, std::move(v));
          ++b;
        } else {
          Rational v = a->second - factor * b->second;
          if (v != 0) merged.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      rr = std::move(merged);
    }
  }
  return out;
}

RrefResult rref_dense(const SparseRationalMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc, 0));
  for (std::size_t i = 0; i < nr; ++i)
    for (const auto& [c, v] : m.row(i)) a[i][c] = v;
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[r], a[p]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < nc; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < nc; ++j) a[i][j] -= f * a[r][j];
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.pivot_rows.resize(out.pivot_cols.size());
  for (std::size_t t = 0; t < out.pivot_cols.size(); ++t)
    for (std::size_t j = 0; j < nc; ++j)
      if (a[t][j] != 0) out.pivot_rows[t].emplace_back(j, a[t][j]);
  return out;
}

}  // namespace

Rational SparseVector::at(std::size_t i) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), i,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == entries.end() || it->first != i) return 0;
  return it->second;
}

void SparseRationalMatrix::Builder::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) fail(Errc::DimensionMismatch, "entry outside matrix shape");
  if (value == 0) return;
  triplets_.emplace_back(row, col, value);
}

void SparseRationalMatrix::Builder::add_row(std::size_t row, const SparseVector& v) {
  if (v.size != cols_) fail(Errc::DimensionMismatch, "row length does not match column count");
  for (const auto& [c, val] : v.entries) add(row, c, val);
}

SparseRationalMatrix SparseRationalMatrix::Builder::build() {
  std::sort(triplets_.begin(), triplets_.end(),
            [](const auto& a, const auto& b) {
              return std::tie(std::get<0>(a), std::get<1>(a)) <
                     std::tie(std::get<0>(b), std::get<1>(b));
            });
  SparseRationalMatrix m;
  m.rows_ = rows_;
  m.cols_ = cols_;
  m.row_data_.assign(rows_, {});
  for (std::size_t i = 0; i < triplets_.size();) {
    std::size_t j = i;
    Rational acc = 0;
    const auto r = std::get<0>(triplets_[i]);
    const auto c = std::get<1>(triplets_[i]);
    while (j < triplets_.size() && std::get<0>(triplets_[j]) == r &&
           std::get<1>(triplets_[j]) == c) {
      acc += std::get<2>(triplets_[j]);
      ++j;
    }
    if (acc != 0) {
      m.row_data_[r].emplace_back(c, acc);
      ++m.nnz_;
    }
    i = j;
  }
  return m;
}

Rational SparseRationalMatrix::at(std::size_t i, std::size_t j) const {
  const auto& r = row_data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == r.end() || it->first != j) return 0;
  return it->second;
}

SparseRationalMatrix SparseRationalMatrix::identity(std::size_t n) {
  Builder b(n, n);
  for (std::size_t i = 0; i < n; ++i) b.add(i, i, 1);
  return b.build();
}

SparseRationalMatrix SparseRationalMatrix::transpose() const {
  Builder b(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [c, v] : row_data_[i]) b.add(c, i, v);
  return b.build();
}

SparseRationalMatrix SparseRationalMatrix::multiply(const SparseRationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(Errc::DimensionMismatch, "multiply shape mismatch");
  Builder b(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [k, v] : row_data_[i])
      for (const auto& [j, w] : rhs.row_data_[k]) b.add(i, j, v * w);
  return b.build();
}

SparseVector SparseRationalMatrix::apply(const SparseVector& v) const {
  if (v.size != cols_) fail(Errc::DimensionMismatch, "apply shape mismatch");
  SparseVector out;
  out.size = rows_;
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (const auto& [c, w] : row_data_[i]) acc += w * v.at(c);
    if (acc != 0) out.entries.emplace_back(i, acc);
  }
  return out;
}

std::string SparseRationalMatrix::to_matrix_market() const {
  std::ostringstream os;
  os << "%%MatrixMarket matrix coordinate rational general\n";
  os << rows_ << " " << cols_ << " " << nnz_ << "\n";
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [c, v] : row_data_[i])
      os << (i + 1) << " " << (c + 1) << " " << to_string(v) << "\n";
  return os.str();
}

std::size_t rank(const SparseRationalMatrix& m, const EliminationConfig& cfg) {
  if (m.nonzero_count() == 0) return 0;
  if (use_dense(m, cfg)) return rank_dense(m);
  return rank_sparse(m);
}

std::vector<SparseVector> kernel_basis(const SparseRationalMatrix& m,
                                       const EliminationConfig& cfg) {
  const RrefResult rref = use_dense(m, cfg) ? rref_dense(m) : rref_sparse(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rref.pivot_cols) is_pivot[c] = true;

  std::vector<SparseVector> kernel;
  kernel.reserve(m.cols() - rref.pivot_cols.size());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    SparseVector v;
    v.size = m.cols();
    for (std::size_t t = 0; t < rref.pivot_cols.size(); ++t) {
      const auto& row = rref.pivot_rows[t];
      auto it = std::lower_bound(
          row.begin(), row.end(), j,
          [](const std::pair<std::size_t, Rational>& e, std::size_t c) { return e.first < c; });
      if (it != row.end() && it->first == j && it->second != 0)
        v.entries.emplace_back(rref.pivot_cols[t], -it->second);
    }
    v.entries.emplace_back(j, 1);
    std::sort(v.entries.begin(), v.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::size_t span_dimension(const std::vector<SparseVector>& vectors,
                           const EliminationConfig& cfg) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().size;
  for (const auto& v : vectors)
    if (v.size != n) fail(Errc::DimensionMismatch, "span over vectors of mixed length");
  SparseRationalMatrix::Builder b(vectors.size(), n);
  for (std::size_t i = 0; i < vectors.size(); ++i) b.add_row(i, vectors[i]);
  return rank(b.build(), cfg);
}

}  // namespace qg
