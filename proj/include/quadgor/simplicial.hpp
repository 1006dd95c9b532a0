#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadgor/rational.hpp"

namespace qg {

inline constexpr std::size_t kMaxVertices = 128;

// Vertex subset as a fixed-width bitset. Comparison is lexicographic on the
// sorted vertex list, which for bitsets means the first differing vertex
// decides and the face containing it comes first.
class Face {
 public:
  Face() = default;
  static Face from_vertices(const std::vector<int>& vs);
  static Face singleton(int v);

  std::size_t cardinality() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool has(int v) const { return bits_.test(static_cast<std::size_t>(v)); }
  bool contains(const Face& other) const { return (other.bits_ & ~bits_).none(); }
  bool intersects(const Face& other) const { return (bits_ & other.bits_).any(); }

  Face united(const Face& other) const { return Face(bits_ | other.bits_); }
  Face intersect(const Face& other) const { return Face(bits_ & other.bits_); }
  Face minus(const Face& other) const { return Face(bits_ & ~other.bits_); }
  Face with(int v) const;
  Face without(int v) const;

  std::vector<int> vertices() const;
  std::string to_string() const;  // "{0,2,5}"

  bool operator==(const Face& other) const { return bits_ == other.bits_; }
  bool operator!=(const Face& other) const { return bits_ != other.bits_; }
  bool operator<(const Face& other) const;

 private:
  explicit Face(const std::bitset<kMaxVertices>& b) : bits_(b) {}
  std::bitset<kMaxVertices> bits_;
};

// Pure complex given by its facet list. Canonical: facets sorted, distinct,
// every vertex of [0, m) used, facet cardinality d-1 >= 2.
struct SimplicialComplex {
  int m = 0;
  std::vector<Face> facets;
  std::vector<std::string> labels;  // empty or one per vertex

  int n() const { return static_cast<int>(facets.size()); }
  int facet_cardinality() const { return static_cast<int>(facets.front().cardinality()); }
  int d() const { return facet_cardinality() + 1; }  // socle degree of the algebra
};

struct FVector {
  std::vector<unsigned long long> e;  // e[k] counts (k-1)-faces, k = 0..d-1

  // e_0 = 1 and e_k = 0 for every k >= d.
  unsigned long long at(long long k) const {
    if (k < 0 || k >= static_cast<long long>(e.size())) return 0;
    return e[static_cast<std::size_t>(k)];
  }
};

struct FlagResult {
  bool flag = false;
  std::optional<Face> witness;  // minimal non-face of cardinality >= 3
};

struct ConnectivityResult {
  bool connected = false;
  std::optional<std::pair<int, int>> witness;  // facet indices in distinct components
};

SimplicialComplex build_complex(const std::vector<std::vector<int>>& facets, int m,
                                const std::vector<std::string>& labels = {});

// All cardinality-k faces, ascending; k = 0 yields the empty face alone.
std::vector<Face> enumerate_faces(const SimplicialComplex& c, int k);

FVector f_vector(const SimplicialComplex& c);

// Minimal non-faces up to the given cardinality, ascending by cardinality
// then lexicographic. Every proper subset of a listed set is a face.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& c, int max_cardinality);

// Flag means every minimal non-face is an edge-sized set.
FlagResult is_flag(const SimplicialComplex& c);

// Facet adjacency: two facets sharing a (d-3)-face, i.e. intersection of
// cardinality d-2. Connectivity of that graph.
ConnectivityResult is_facet_connected(const SimplicialComplex& c);

// Partition [0, sum(orders)) into blocks of the given sizes, in input order;
// facets are the transversals picking one vertex per block.
SimplicialComplex turan_complex(const std::vector<int>& orders);

// n distinct facets of cardinality d-1 over [0, m), uniformly seeded; retries
// until every vertex is covered, Errc::Infeasible after bounded attempts.
SimplicialComplex random_pure_complex(int d, int m, int n, std::uint64_t seed);

}  // namespace qg
