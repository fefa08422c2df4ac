#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cox/words.hpp"

namespace cox {

using Rational = boost::multiprecision::cpp_rational;

// Exact element of the field Q(sqrt2, sqrt3, sqrt5), stored as eight
// rational coordinates over the basis sqrt(2^a * 3^b * 5^c); the basis
// index packs (a,b,c) into three bits. Square roots of distinct squarefree
// integers are linearly independent over Q, so a value is zero exactly
// when every coordinate is zero, and the sign of a nonzero value is
// decided by refining rational enclosures of the roots.
//
// This field contains cos(pi/m) for m in {2,3,4,5,6}, which together with
// the infinite label covers every edge label the root machinery accepts.
class Scalar {
 public:
  Scalar() = default;

  static Scalar of(long n) { return of(Rational(n)); }
  static Scalar of(Rational q);
  // coeff * sqrt(product of the primes selected by mask).
  static Scalar surd(unsigned mask, Rational coeff);

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  bool is_zero() const;
  int sign() const;  // -1, 0, +1

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }

  // Total order on coordinates; used only as a container key.
  static int compare_coeffs(const Scalar& a, const Scalar& b);

  const Rational& coeff(unsigned mask) const { return c_[mask]; }
  std::string str() const;

 private:
  std::array<Rational, 8> c_{};
};

// Vector in the reflection representation, coordinates indexed by the
// generators in parse order.
using Root = std::vector<Scalar>;

struct RootLess {
  bool operator()(const Root& a, const Root& b) const;
};

struct RootReflection {
  Root root;
  Element reflection;
};

// The reflection representation over the exact scalar field: symmetric
// bilinear form with B(e_s,e_t) = -cos(pi/m(s,t)) (and -1 for the infinite
// label), generator action s(x) = x - 2 B(x,e_s) e_s, and the sign-based
// length oracle that is independent of word rewriting.
//
// Supported labels: m in {2,3,4,5,6} and the infinite label. Other labels
// throw SemanticError at construction; callers fall back to the word
// engine, which accepts every label.
class RootSystem {
 public:
  explicit RootSystem(const Graph& g);

  static bool supports(const Graph& g);
  const Graph& graph() const { return graph_; }

  const Scalar& basis_form(int s, int t) const { return form_[s * graph_.rank() + t]; }
  Scalar bilinear(const Root& a, const Root& b) const;

  Root simple_root(int s) const;
  Root reflect(int s, const Root& r) const;
  Root act_letters(std::span<const int> letters, const Root& r) const;
  Root act(const Element& w, const Root& r) const;

  // +1 if all coordinates >= 0, -1 if all <= 0; throws SemanticError on a
  // mixed-sign vector, which can never be a root.
  int root_sign(const Root& r) const;
  bool is_positive(const Root& r) const { return root_sign(r) > 0; }

  // True iff l(ws) < l(w), read off the sign of w(e_s).
  bool root_descent(const Element& w, int s) const;

  // Length of the product of `letters`, computed purely by stripping
  // sign-detected descents; never consults the word engine.
  int root_length(std::span<const int> letters) const;

  // Distinct positive roots at breadth-first distance <= depth from the
  // simple roots, each paired with its reflection in normal form.
  std::vector<RootReflection> positive_roots_up_to_depth(const Group& group, int depth) const;

 private:
  void check_compatible(std::uint64_t gid) const;
  // Columns of the matrix of w; updates them to those of w*s.
  void right_mult_columns(std::vector<Root>& cols, int s) const;

  Graph graph_;
  std::vector<Scalar> form_;
};

// The subset x' with w(E_x) = E_x' if it exists: for every s in x,
// l(ws) > l(w) and w s w^-1 is a generator. Uses only word lengths, so it
// works for every edge label.
std::optional<Subset> simple_image_set(const Group& group, const Element& w, Subset x);

}  // namespace cox
