#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cox/graph.hpp"

namespace cox {

// Resource limits for the enumerative operations. All searches that can
// diverge on infinite groups are bounded by one of these and throw
// BudgetError when the bound is reached.
struct Budgets {
  std::size_t ball_cap = 1'000'000;    // elements per ball enumeration
  std::size_t search_cap = 1'000'000;  // visited states in witness searches
  std::size_t order_cap = 10'000;      // full-group enumeration bound
  std::size_t class_cap = 2'000'000;   // words per braid-class closure
};

// A group element in ShortLex normal form: the lexicographically least
// reduced word over the parse order of the generators, one byte per
// letter. Only Group produces instances, which is what keeps the
// invariant. Elements remember the fingerprint of their graph.
class Element {
 public:
  Element() = delete;

  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  int letter(std::size_t i) const { return static_cast<unsigned char>(word_[i]); }
  std::vector<int> letters() const;
  std::uint64_t graph_id() const { return gid_; }
  const std::string& raw() const { return word_; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.gid_ == b.gid_ && a.word_ == b.word_;
  }

  // Length first, then lexicographic on letters.
  static bool shortlex_less(const Element& a, const Element& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
    return a.word_ < b.word_;
  }

 private:
  friend class Group;
  Element(std::string word, std::uint64_t gid) : word_(std::move(word)), gid_(gid) {}

  std::string word_;
  std::uint64_t gid_;
};

struct ShortLex {
  bool operator()(const Element& a, const Element& b) const {
    return Element::shortlex_less(a, b);
  }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    return std::hash<std::string>()(e.raw()) ^ static_cast<std::size_t>(e.graph_id());
  }
};

// w = u * v * u_prime with u in W_x, u_prime in W_x', v the unique
// minimal-length element of the double coset, and additive lengths.
struct DoubleCosetDecomposition {
  Element u, v, u_prime;
};

// Word engine for the Coxeter group of a graph. Reduction is Tits'
// procedure: breadth-first closure of a word under braid moves, deleting
// adjacent equal pairs whenever one appears; a word with a nil-free
// closure is reduced and its normal form is the least member of the
// closure. Results are memoized per queried word; the cache never changes
// results, so instances are safe to share across threads.
class Group {
 public:
  explicit Group(Graph graph, Budgets budgets = {});

  const Graph& graph() const { return graph_; }
  const Budgets& budgets() const { return budgets_; }

  Element identity() const { return Element(std::string(), gid_); }

  // Whitespace-separated generator names; "e" alone is the identity
  // (unless a generator is actually named "e").
  Element parse_word(std::string_view text) const;
  std::string format_word(const Element& w) const;

  Element normal_form(std::span<const int> letters) const;
  Element mult(const Element& w, int s) const;   // w * s
  Element lmult(int s, const Element& w) const;  // s * w
  Element product(const Element& a, const Element& b) const;
  Element inverse(const Element& w) const;

  bool is_left_descent(int s, const Element& w) const;
  bool is_right_descent(const Element& w, int s) const;
  Subset left_descents(const Element& w) const;
  Subset right_descents(const Element& w) const;

  Subset support(const Element& w) const;
  bool in_parabolic(const Element& w, Subset x) const;

  // All elements of length <= radius in ShortLex order, each exactly once.
  std::vector<Element> ball(int radius) const;
  // Ball of the standard parabolic W_x.
  std::vector<Element> parabolic_ball(Subset x, int radius) const;
  // Every element of W_x; throws BudgetError if there are more than cap.
  std::vector<Element> parabolic_elements(Subset x, std::size_t cap) const;

  // Longest element of W_x; requires x of finite type.
  Element longest_element(Subset x) const;

  // Minimal representative of W_x * w (no left descent in x).
  Element min_coset_rep_left(Subset x, const Element& w) const;
  // Minimal representative of w * W_x (no right descent in x).
  Element min_coset_rep_right(Subset x, const Element& w) const;

  // Strips the smallest left descent in x, then the smallest right
  // descent in x', alternating until none remain. The unique minimal v is
  // reached regardless of the order; fixing it makes (u, u') deterministic.
  DoubleCosetDecomposition double_coset_decompose(const Element& w, Subset x,
                                                  Subset x_prime) const;

  // If l(vs) > l(v) and v s v^-1 is a generator t, returns t.
  std::optional<int> conjugate_generator(const Element& v, int s) const;

  void check_element(const Element& w) const;

 private:
  Element reduce_word(std::string word) const;
  std::optional<Element> memo_lookup(const std::string& word) const;
  void memo_store(const std::string& word, const Element& result) const;
  std::vector<Element> enumerate(Subset x, int max_radius, std::size_t cap) const;

  Graph graph_;
  Budgets budgets_;
  std::uint64_t gid_;

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::string, std::string> memo_;
};

}  // namespace cox
