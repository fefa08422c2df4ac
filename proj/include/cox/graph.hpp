#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cox/errors.hpp"

namespace cox {

// Hard cap on the number of generators. Subsets are bitmasks and several
// searches walk the powerset of the generator set.
inline constexpr int kMaxRank = 16;

// Matrix entry m(s,t) = infinity.
inline constexpr int kInfiniteLabel = std::numeric_limits<int>::max();

// A subset of the generator set, as a bitmask over parse-order indices.
// Iteration always runs in ascending index order.
class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset from_bits(std::uint32_t bits) { return Subset(bits); }
  static constexpr Subset single(int i) { return Subset(1u << i); }
  // The full set {0, ..., n-1}.
  static constexpr Subset range(int n) {
    return Subset(n == 0 ? 0u : (std::uint32_t(-1) >> (32 - n)));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr Subset with(int i) const { return Subset(bits_ | (1u << i)); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~(1u << i)); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator<(Subset a, Subset b) { return a.bits_ < b.bits_; }

  // Smallest member, or -1 when empty.
  constexpr int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  class iterator {
   public:
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint32_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

struct GraphEdge {
  std::string s, t;
  int m = 3;
};

// A finite-rank Coxeter matrix with named generators, viewed as a labeled
// graph: s and t are joined by an edge iff m(s,t) >= 3. The parse-time
// generator order is fixed for the lifetime of the graph and determines
// ShortLex order and bitmask positions everywhere else in the library.
class Graph {
 public:
  // matrix is rank*rank row-major; entries are 1 on the diagonal and
  // values in {2, 3, ...} or kInfiniteLabel off it.
  Graph(std::vector<std::string> names, std::vector<int> matrix);

  // Text format: first line lists the vertex names; every following
  // non-empty line that does not start with '#' reads "s t m" where m is
  // an integer >= 2 or the token "inf". Pairs absent from the file get m=2.
  static Graph parse(std::string_view text);
  static Graph parse_file(const std::string& path);
  static Graph from_edges(std::vector<std::string> names,
                          const std::vector<GraphEdge>& edges);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index(std::string_view name) const;

  int label(int s, int t) const { return matrix_[s * rank() + t]; }
  bool adjacent(int s, int t) const { return s != t && label(s, t) >= 3; }

  // Vertices joined to s by an edge.
  Subset star(int s) const { return star_[s]; }
  Subset all() const { return Subset::range(rank()); }

  // Structural hash of (names, matrix); elements carry it so that values
  // from different presentations cannot be mixed silently.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  std::vector<std::string> names_;
  std::vector<int> matrix_;
  std::vector<Subset> star_;
  std::uint64_t fingerprint_ = 0;
};

enum class TypeKind { A, B, D, E6, E7, E8, F4, H3, H4, I2, Infinite };

// Isomorphism type of a connected labeled subgraph, with the group order
// when finite. order is empty exactly when kind == Infinite.
struct ComponentType {
  TypeKind kind = TypeKind::Infinite;
  int rank = 0;
  std::optional<std::uint64_t> order;

  bool finite() const { return order.has_value(); }
};

std::string to_string(const ComponentType& t);

struct Decomposition {
  Subset x0;    // union of the finite-type components
  Subset xinf;  // union of the infinite-type components
};

struct ParabolicAnalysis {
  std::vector<std::pair<Subset, ComponentType>> components;
  Subset x0, xinf, yinf;
  Subset commensurator;  // yinf | xinf
  bool self_commensurating = false;
};

// Partition of x into connectivity classes of the induced labeled graph,
// ordered by smallest member.
std::vector<Subset> connected_components(const Graph& g, Subset x);

// Connectivity class of s inside `within` (s must belong to it).
Subset component_of(const Graph& g, Subset within, int s);

// Matches a connected subset against the finite-type templates up to
// labeled-graph isomorphism. Throws SemanticError on disconnected input.
ComponentType classify_component(const Graph& g, Subset x);

Decomposition decompose_subset(const Graph& g, Subset x);

// { t in S : m(s,t) = 2 for all s in x }. Members of x are excluded
// automatically because m(t,t) = 1.
Subset perpendicular_set(const Graph& g, Subset x);

ParabolicAnalysis analyze_parabolic(const Graph& g, Subset x);

// Comma-separated generator names; "-" or "" denote the empty subset.
Subset parse_subset(const Graph& g, std::string_view csv);
std::string format_subset(const Graph& g, Subset x);

}  // namespace cox
