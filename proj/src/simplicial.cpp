#include "quadgor/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "quadgor/errors.hpp"
#include "quadgor/util.hpp"

namespace qg {

Face Face::from_vertices(const std::vector<int>& vs) {
  Face f;
  for (int v : vs) {
    if (v < 0 || static_cast<std::size_t>(v) >= kMaxVertices)
      fail(Errc::BadArgument, "vertex index " + std::to_string(v) + " outside supported range");
    if (f.bits_.test(static_cast<std::size_t>(v)))
      fail(Errc::BadArgument, "repeated vertex " + std::to_string(v) + " in face");
    f.bits_.set(static_cast<std::size_t>(v));
  }
  return f;
}

Face Face::singleton(int v) { return from_vertices({v}); }

Face Face::with(int v) const {
  Face f(*this);
  f.bits_.set(static_cast<std::size_t>(v));
  return f;
}

Face Face::without(int v) const {
  Face f(*this);
  f.bits_.reset(static_cast<std::size_t>(v));
  return f;
}

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  out.reserve(bits_.count());
  for (std::size_t v = 0; v < kMaxVertices; ++v)
    if (bits_.test(v)) out.push_back(static_cast<int>(v));
  return out;
}

std::string Face::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << "}";
  return os.str();
}

bool Face::operator<(const Face& other) const {
  // graded: smaller faces first, ties by first differing vertex
  if (bits_.count() != other.bits_.count()) return bits_.count() < other.bits_.count();
  for (std::size_t v = 0; v < kMaxVertices; ++v) {
    const bool a = bits_.test(v), b = other.bits_.test(v);
    if (a != b) return a;
  }
  return false;
}

SimplicialComplex build_complex(const std::vector<std::vector<int>>& facets, int m,
                                const std::vector<std::string>& labels) {
  if (m < 1) fail(Errc::BadArgument, "vertex count must be positive");
  if (static_cast<std::size_t>(m) > kMaxVertices)
    fail(Errc::InstanceTooLarge,
         "vertex count " + std::to_string(m) + " exceeds capacity " + std::to_string(kMaxVertices));
  if (facets.empty()) fail(Errc::BadArgument, "facet list is empty");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(m))
    fail(Errc::BadArgument, "label list length must equal vertex count");

  std::vector<Face> fs;
  fs.reserve(facets.size());
  for (const auto& raw : facets) {
    for (int v : raw)
      if (v < 0 || v >= m)
        fail(Errc::BadArgument, "vertex index " + std::to_string(v) + " outside [0," +
                                    std::to_string(m) + ")");
    fs.push_back(Face::from_vertices(raw));
  }
  const std::size_t card = fs.front().cardinality();
  for (const auto& f : fs)
    if (f.cardinality() != card)
      fail(Errc::NonPure, "facets of cardinality " + std::to_string(card) + " and " +
                              std::to_string(f.cardinality()) + " mixed");
  if (card < 2)
    fail(Errc::DimensionTooSmall, "facet cardinality must be at least 2, got " +
                                      std::to_string(card));

  std::sort(fs.begin(), fs.end());
  for (std::size_t i = 1; i < fs.size(); ++i)
    if (fs[i] == fs[i - 1]) fail(Errc::DuplicateFacet, "facet " + fs[i].to_string() + " repeated");

  Face covered;
  for (const auto& f : fs) covered = covered.united(f);
  for (int v = 0; v < m; ++v)
    if (!covered.has(v))
      fail(Errc::UnusedVertex, "vertex " + std::to_string(v) + " lies in no facet");

  SimplicialComplex c;
  c.m = m;
  c.facets = std::move(fs);
  c.labels = labels;
  return c;
}

namespace {

// All cardinality-k subsets of the given vertex list, appended to out.
void collect_subsets(const std::vector<int>& vs, int k, std::set<Face>& out) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  const int n = static_cast<int>(vs.size());
  while (true) {
    std::vector<int> pick;
    pick.reserve(static_cast<std::size_t>(k));
    for (int i : idx) pick.push_back(vs[static_cast<std::size_t>(i)]);
    out.insert(Face::from_vertices(pick));
    int t = k - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == n - k + t) --t;
    if (t < 0) break;
    ++idx[static_cast<std::size_t>(t)];
    for (int s = t + 1; s < k; ++s)
      idx[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(s - 1)] + 1;
  }
}

}  // namespace

std::vector<Face> enumerate_faces(const SimplicialComplex& c, int k) {
  if (k < 0 || k > c.d() - 1)
    fail(Errc::BadArgument, "face cardinality " + std::to_string(k) + " outside [0," +
                                std::to_string(c.d() - 1) + "]");
  if (k == 0) return {Face()};
  std::set<Face> faces;
  for (const auto& f : c.facets) collect_subsets(f.vertices(), k, faces);
  return {faces.begin(), faces.end()};
}

FVector f_vector(const SimplicialComplex& c) {
  FVector fv;
  fv.e.resize(static_cast<std::size_t>(c.d()));
  fv.e[0] = 1;
  for (int k = 1; k <= c.d() - 1; ++k)
    fv.e[static_cast<std::size_t>(k)] = enumerate_faces(c, k).size();
  return fv;
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c, int max_cardinality) {
  if (max_cardinality < 0 || max_cardinality > c.d())
    fail(Errc::BadArgument, "cardinality bound " + std::to_string(max_cardinality) +
                                " outside [0," + std::to_string(c.d()) + "]");
  std::vector<Face> out;
  std::set<Face> prev_faces = {Face()};  // cardinality t-1 faces
  for (int t = 1; t <= max_cardinality; ++t) {
    std::set<Face> cur_faces;
    if (t <= c.d() - 1) {
      auto list = enumerate_faces(c, t);
      cur_faces.insert(list.begin(), list.end());
    }
    // A minimal non-face is a (t-1)-face plus one vertex, all of whose
    // cardinality t-1 subsets are faces. Candidates built that way cover
    // everything and skip supersets of smaller non-faces for free.
    std::set<Face> found;
    for (const auto& base : prev_faces) {
      for (int v = 0; v < c.m; ++v) {
        if (base.has(v)) continue;
        Face s = base.with(v);
        if (cur_faces.count(s) || found.count(s)) continue;
        bool all_subfaces = true;
        for (int w : s.vertices()) {
          if (!prev_faces.count(s.without(w))) {
            all_subfaces = false;
            break;
          }
        }
        if (all_subfaces) found.insert(s);
      }
    }
    out.insert(out.end(), found.begin(), found.end());
    prev_faces = std::move(cur_faces);
  }
  return out;
}

FlagResult is_flag(const SimplicialComplex& c) {
  FlagResult r;
  r.flag = true;
  for (const auto& s : minimal_nonfaces(c, c.d())) {
    if (s.cardinality() >= 3) {
      r.flag = false;
      r.witness = s;
      break;
    }
  }
  return r;
}

ConnectivityResult is_facet_connected(const SimplicialComplex& c) {
  const int n = c.n();
  const std::size_t shared = static_cast<std::size_t>(c.facet_cardinality()) - 1;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack = {0};
  seen[0] = true;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (seen[static_cast<std::size_t>(j)]) continue;
      if (c.facets[static_cast<std::size_t>(i)]
              .intersect(c.facets[static_cast<std::size_t>(j)])
              .cardinality() == shared) {
        seen[static_cast<std::size_t>(j)] = true;
        stack.push_back(j);
      }
    }
  }
  ConnectivityResult r;
  r.connected = true;
  for (int j = 0; j < n; ++j) {
    if (!seen[static_cast<std::size_t>(j)]) {
      r.connected = false;
      r.witness = std::make_pair(0, j);
      break;
    }
  }
  return r;
}

SimplicialComplex turan_complex(const std::vector<int>& orders) {
  if (orders.size() < 2)
    fail(Errc::DimensionTooSmall, "need at least two block orders, got " +
                                      std::to_string(orders.size()));
  long long m = 0;
  long long count = 1;
  for (int a : orders) {
    if (a < 2) fail(Errc::OrderTooSmall, "block order " + std::to_string(a) + " below 2");
    m += a;
    count *= a;
    if (m > static_cast<long long>(kMaxVertices))
      fail(Errc::InstanceTooLarge, "total vertex count exceeds capacity");
    if (count > 2000000) fail(Errc::InstanceTooLarge, "facet count exceeds 2e6");
  }
  std::vector<int> offset(orders.size(), 0);
  for (std::size_t i = 1; i < orders.size(); ++i)
    offset[i] = offset[i - 1] + orders[i - 1];

  std::vector<std::vector<int>> facets;
  facets.reserve(static_cast<std::size_t>(count));
  std::vector<int> pick(orders.size(), 0);
  while (true) {
    std::vector<int> f(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) f[i] = offset[i] + pick[i];
    facets.push_back(std::move(f));
    std::size_t t = orders.size();
    while (t > 0 && pick[t - 1] == orders[t - 1] - 1) pick[--t] = 0;
    if (t == 0) break;
    ++pick[t - 1];
  }
  return build_complex(facets, static_cast<int>(m));
}

SimplicialComplex random_pure_complex(int d, int m, int n, std::uint64_t seed) {
  const int card = d - 1;
  if (card < 2) fail(Errc::DimensionTooSmall, "facet cardinality below 2");
  if (m < 1 || static_cast<std::size_t>(m) > kMaxVertices)
    fail(Errc::BadArgument, "vertex count out of range");
  if (n < 1) fail(Errc::BadArgument, "facet count must be positive");
  if (binomial(m, card) < n)
    fail(Errc::Infeasible, "only " + binomial(m, card).str() + " distinct facets exist, " +
                               std::to_string(n) + " requested");
  if (static_cast<long long>(n) * card < m)
    fail(Errc::Infeasible, "cannot cover " + std::to_string(m) + " vertices with " +
                               std::to_string(n) + " facets");

  Rng rng(seed);
  std::vector<int> pool(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) pool[static_cast<std::size_t>(i)] = i;

  for (int attempt = 0; attempt < 200; ++attempt) {
    std::set<Face> facets;
    long long draws = 0;
    const long long draw_limit = 60LL * n + 600;
    while (static_cast<int>(facets.size()) < n && draws < draw_limit) {
      ++draws;
      for (int i = 0; i < card; ++i) {
        const auto j = static_cast<std::size_t>(
            rng.in_range(i, m - 1));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      }
      facets.insert(Face::from_vertices(
          std::vector<int>(pool.begin(), pool.begin() + card)));
    }
    if (static_cast<int>(facets.size()) < n) continue;
    Face covered;
    for (const auto& f : facets) covered = covered.united(f);
    bool all = true;
    for (int v = 0; v < m; ++v)
      if (!covered.has(v)) {
        all = false;
        break;
      }
    if (!all) continue;
    std::vector<std::vector<int>> lists;
    lists.reserve(facets.size());
    for (const auto& f : facets) lists.push_back(f.vertices());
    return build_complex(lists, m);
  }
  fail(Errc::Infeasible, "no covering facet sample found within attempt budget");
}

}  // namespace qg
