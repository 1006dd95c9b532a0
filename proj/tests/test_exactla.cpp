#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "quadgor/errors.hpp"
#include "quadgor/rational.hpp"
#include "quadgor/sparse_matrix.hpp"
#include "quadgor/util.hpp"

using qg::EliminationConfig;
using qg::Rational;
using qg::SparseRationalMatrix;
using qg::SparseVector;

namespace {

// Independent oracle: cofactor expansion along the first row. Exponential,
// fine for n <= 6.
Rational det_cofactor(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][j] * det_cofactor(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

// Rank oracle: maximum size of a square submatrix with nonzero determinant.
std::size_t rank_by_minors(const std::vector<std::vector<Rational>>& m) {
  const std::size_t nr = m.size();
  const std::size_t nc = nr == 0 ? 0 : m[0].size();
  std::size_t best = 0;
  for (std::size_t sz = 1; sz <= std::min(nr, nc); ++sz) {
    bool found = false;
    std::vector<bool> pick_r(nr, false);
    std::fill(pick_r.begin(), pick_r.begin() + static_cast<long>(sz), true);
    std::sort(pick_r.begin(), pick_r.end());
    do {
      std::vector<std::size_t> rs;
      for (std::size_t i = 0; i < nr; ++i)
        if (pick_r[i]) rs.push_back(i);
      std::vector<bool> pick_c(nc, false);
      std::fill(pick_c.begin(), pick_c.begin() + static_cast<long>(sz), true);
      std::sort(pick_c.begin(), pick_c.end());
      do {
        std::vector<std::size_t> cs;
        for (std::size_t i = 0; i < nc; ++i)
          if (pick_c[i]) cs.push_back(i);
        std::vector<std::vector<Rational>> sub(sz, std::vector<Rational>(sz));
        for (std::size_t a = 0; a < sz; ++a)
          for (std::size_t b = 0; b < sz; ++b) sub[a][b] = m[rs[a]][cs[b]];
        if (det_cofactor(sub) != 0) {
          found = true;
          break;
        }
      } while (!found && std::next_permutation(pick_c.begin(), pick_c.end()));
      if (found) break;
    } while (std::next_permutation(pick_r.begin(), pick_r.end()));
    if (found)
      best = sz;
    else
      break;
  }
  return best;
}

SparseRationalMatrix from_dense(const std::vector<std::vector<Rational>>& m) {
  const std::size_t nr = m.size();
  const std::size_t nc = nr == 0 ? 0 : m[0].size();
  SparseRationalMatrix::Builder b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      if (m[i][j] != 0) b.add(i, j, m[i][j]);
  return b.build();
}

std::vector<std::vector<Rational>> random_dense(std::size_t nr, std::size_t nc,
                                                qg::Rng& rng, int density_pct) {
  std::vector<std::vector<Rational>> m(nr, std::vector<Rational>(nc, Rational(0)));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      if (rng.below(100) < static_cast<std::uint64_t>(density_pct))
        m[i][j] = Rational(rng.in_range(-9, 9));
  return m;
}

bool is_zero_vector(const SparseVector& v) { return v.entries.empty(); }

}  // namespace

TEST_CASE("identity and transpose") {
  const auto id = SparseRationalMatrix::identity(7);
  CHECK(qg::rank(id) == 7);
  CHECK(id.transpose().at(3, 3) == Rational(1));
  CHECK(qg::kernel_basis(id).empty());
}

TEST_CASE("rank matches minor-expansion oracle on random small matrices") {
  qg::Rng rng(42);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t nr = 1 + rng.below(5);
    const std::size_t nc = 1 + rng.below(5);
    const auto dense = random_dense(nr, nc, rng, 60);
    const auto sparse = from_dense(dense);
    CHECK(qg::rank(sparse) == rank_by_minors(dense));
  }
}

TEST_CASE("singular square matrices detected exactly") {
  qg::Rng rng(7);
  for (int iter = 0; iter < 25; ++iter) {
    const std::size_t n = 2 + rng.below(4);
    auto dense = random_dense(n, n, rng, 70);
    if (n == 2) {
      dense[1] = dense[0];
    } else {
      for (std::size_t j = 0; j < n; ++j)
        dense[n - 1][j] = dense[0][j] + Rational(2) * dense[1][j];
    }
    const auto sparse = from_dense(dense);
    CHECK(det_cofactor(dense) == 0);
    CHECK(qg::rank(sparse) < n);
  }
}

TEST_CASE("kernel parameterization is canonical") {
  SparseRationalMatrix::Builder b(1, 2);
  b.add(0, 0, Rational(1));
  b.add(0, 1, Rational(1));
  const auto m = b.build();
  const auto ker = qg::kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0].at(0) == Rational(-1));
  CHECK(ker[0].at(1) == Rational(1));
}

TEST_CASE("rank plus kernel dimension equals column count; kernel annihilates") {
  qg::Rng rng(2026);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t nr = 1 + rng.below(12);
    const std::size_t nc = 1 + rng.below(12);
    const auto dense = random_dense(nr, nc, rng, 25);
    const auto m = from_dense(dense);
    const auto ker = qg::kernel_basis(m);
    CHECK(qg::rank(m) + ker.size() == nc);
    for (const auto& v : ker) CHECK(is_zero_vector(m.apply(v)));
  }
}

TEST_CASE("rank is invariant under transpose and insertion order") {
  qg::Rng rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t nr = 1 + rng.below(8);
    const std::size_t nc = 1 + rng.below(8);
    const auto dense = random_dense(nr, nc, rng, 40);
    const auto m = from_dense(dense);
    CHECK(qg::rank(m) == qg::rank(m.transpose()));

    // rebuild with entries inserted in reverse order
    SparseRationalMatrix::Builder b(nr, nc);
    for (std::size_t i = nr; i-- > 0;)
      for (std::size_t j = nc; j-- > 0;)
        if (dense[i][j] != 0) b.add(i, j, dense[i][j]);
    const auto m2 = b.build();
    CHECK(m2.nonzero_count() == m.nonzero_count());
    CHECK(qg::rank(m2) == qg::rank(m));
  }
}

TEST_CASE("duplicate builder entries accumulate") {
  SparseRationalMatrix::Builder b(1, 1);
  b.add(0, 0, Rational(2));
  b.add(0, 0, Rational(-2));
  const auto m = b.build();
  CHECK(m.nonzero_count() == 0);
  CHECK(qg::rank(m) == 0);
}

TEST_CASE("dense and sparse elimination paths agree") {
  qg::Rng rng(99);
  EliminationConfig always_dense;
  always_dense.dense_threshold_percent = 100;
  EliminationConfig never_dense;
  never_dense.dense_threshold_percent = 0;
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t nr = 2 + rng.below(10);
    const std::size_t nc = 2 + rng.below(10);
    const auto m = from_dense(random_dense(nr, nc, rng, 35));
    CHECK(qg::rank(m, always_dense) == qg::rank(m, never_dense));
  }
}

TEST_CASE("multiply respects associativity with apply") {
  qg::Rng rng(5);
  const auto a = from_dense(random_dense(4, 5, rng, 60));
  const auto b = from_dense(random_dense(5, 3, rng, 60));
  SparseVector v;
  v.size = 3;
  v.entries = {{0, Rational(2)}, {2, Rational(-7)}};
  const auto lhs = a.multiply(b).apply(v);
  const auto rhs = a.apply(b.apply(v));
  CHECK(lhs == rhs);
}

TEST_CASE("rank of a product is bounded by factor ranks") {
  qg::Rng rng(31);
  for (int iter = 0; iter < 10; ++iter) {
    const auto a = from_dense(random_dense(6, 4, rng, 50));
    const auto b = from_dense(random_dense(4, 6, rng, 50));
    const auto p = a.multiply(b);
    CHECK(qg::rank(p) <= std::min(qg::rank(a), qg::rank(b)));
  }
}

TEST_CASE("span_dimension matches rank of stacked rows") {
  qg::Rng rng(17);
  for (int iter = 0; iter < 15; ++iter) {
    const std::size_t count = 1 + rng.below(8);
    const std::size_t len = 1 + rng.below(8);
    std::vector<SparseVector> vs;
    SparseRationalMatrix::Builder b(count, len);
    for (std::size_t i = 0; i < count; ++i) {
      SparseVector v;
      v.size = len;
      for (std::size_t j = 0; j < len; ++j)
        if (rng.below(100) < 40) {
          const Rational val(rng.in_range(-5, 5));
          if (val != 0) {
            v.entries.emplace_back(j, val);
            b.add(i, j, val);
          }
        }
      vs.push_back(std::move(v));
    }
    CHECK(qg::span_dimension(vs) == qg::rank(b.build()));
  }
}

TEST_CASE("span_dimension rejects mixed lengths") {
  SparseVector a;
  a.size = 3;
  SparseVector b;
  b.size = 4;
  CHECK_THROWS_AS(qg::span_dimension({a, b}), qg::Error);
}

TEST_CASE("elimination handles big intermediate values") {
  // Hilbert-like matrix: dense rationals with growing denominators.
  const std::size_t n = 8;
  SparseRationalMatrix::Builder b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b.add(i, j, qg::make_rational(1, static_cast<long>(i + j + 1)));
  CHECK(qg::rank(b.build()) == n);  // Hilbert matrices are nonsingular
}

TEST_CASE("deterministic across repeated runs") {
  qg::Rng rng_a(1234);
  qg::Rng rng_b(1234);
  for (int iter = 0; iter < 5; ++iter) {
    const auto da = random_dense(9, 9, rng_a, 30);
    const auto db = random_dense(9, 9, rng_b, 30);
    const auto ma = from_dense(da);
    const auto mb = from_dense(db);
    CHECK(qg::rank(ma) == qg::rank(mb));
    const auto ka = qg::kernel_basis(ma);
    const auto kb = qg::kernel_basis(mb);
    REQUIRE(ka.size() == kb.size());
    for (std::size_t i = 0; i < ka.size(); ++i) CHECK(ka[i] == kb[i]);
  }
}

TEST_CASE("matrix market export round-trips shape") {
  SparseRationalMatrix::Builder b(2, 3);
  b.add(0, 0, Rational(1));
  b.add(1, 2, qg::make_rational(-3, 4));
  const auto text = b.build().to_matrix_market();
  CHECK(text.find("2 3 2") != std::string::npos);
  CHECK(text.find("-3/4") != std::string::npos);
}
