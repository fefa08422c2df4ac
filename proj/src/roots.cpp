#include "cox/roots.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cox {

using boost::multiprecision::cpp_int;

namespace {

constexpr int kPrimes[3] = {2, 3, 5};

int squarefree_of_mask(unsigned mask) {
  int d = 1;
  for (int b = 0; b < 3; ++b)
    if (mask & (1u << b)) d *= kPrimes[b];
  return d;
}

// Rational enclosure of sqrt(d) with denominator 2^prec.
std::pair<Rational, Rational> surd_bounds(int d, unsigned prec) {
  cpp_int scaled = cpp_int(d) << (2 * prec);
  cpp_int r = boost::multiprecision::sqrt(scaled);  // floor(2^prec * sqrt(d))
  cpp_int den = cpp_int(1) << prec;
  return {Rational(r, den), Rational(r + 1, den)};
}

}  // namespace

Scalar Scalar::of(Rational q) {
  Scalar s;
  s.c_[0] = std::move(q);
  return s;
}

Scalar Scalar::surd(unsigned mask, Rational coeff) {
  Scalar s;
  s.c_[mask & 7u] = std::move(coeff);
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (int i = 0; i < 8; ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (int i = 0; i < 8; ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (unsigned i = 0; i < 8; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (unsigned j = 0; j < 8; ++j) {
      if (b.c_[j].is_zero()) continue;
      // sqrt(d_i) * sqrt(d_j) = gcd_part * sqrt(d_{i xor j})
      int common = squarefree_of_mask(i & j);
      out.c_[i ^ j] += a.c_[i] * b.c_[j] * common;
    }
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out;
  for (int i = 0; i < 8; ++i) out.c_[i] = -c_[i];
  return out;
}

bool Scalar::is_zero() const {
  for (const auto& q : c_)
    if (!q.is_zero()) return false;
  return true;
}

int Scalar::sign() const {
  bool pos = false, neg = false;
  for (const auto& q : c_) {
    int s = q.sign();
    if (s > 0) pos = true;
    if (s < 0) neg = true;
  }
  if (!pos && !neg) return 0;
  // Every basis value is positive, so same-signed coordinates settle it.
  if (!neg) return 1;
  if (!pos) return -1;
  for (unsigned prec = 32; prec <= 4096; prec *= 2) {
    Rational lo = 0, hi = 0;
    for (unsigned i = 0; i < 8; ++i) {
      if (c_[i].is_zero()) continue;
      auto [blo, bhi] = surd_bounds(squarefree_of_mask(i), prec);
      if (c_[i].sign() > 0) {
        lo += c_[i] * blo;
        hi += c_[i] * bhi;
      } else {
        lo += c_[i] * bhi;
        hi += c_[i] * blo;
      }
    }
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
  }
  // Unreachable: the value is nonzero (coordinate independence), so the
  // enclosures eventually separate it from zero.
  throw Error("scalar sign not decided at maximal precision");
}

int Scalar::compare_coeffs(const Scalar& a, const Scalar& b) {
  for (int i = 0; i < 8; ++i) {
    if (a.c_[i] < b.c_[i]) return -1;
    if (b.c_[i] < a.c_[i]) return 1;
  }
  return 0;
}

std::string Scalar::str() const {
  static const char* kNames[8] = {"",         "sqrt(2)",  "sqrt(3)",  "sqrt(6)",
                                  "sqrt(5)",  "sqrt(10)", "sqrt(15)", "sqrt(30)"};
  std::ostringstream out;
  bool first = true;
  for (unsigned i = 0; i < 8; ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) out << (c_[i].sign() > 0 ? " + " : " - ");
    Rational q = first ? c_[i] : Rational(boost::multiprecision::abs(c_[i]));
    out << q.str();
    if (i) out << "*" << kNames[i];
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

bool RootLess::operator()(const Root& a, const Root& b) const {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = Scalar::compare_coeffs(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

namespace {

// -cos(pi/m) as an exact scalar, or nothing when m is unsupported.
std::optional<Scalar> form_entry(int m) {
  switch (m) {
    case 1:
      return Scalar::of(1);  // -cos(pi) = 1
    case 2:
      return Scalar::of(0);
    case 3:
      return Scalar::of(Rational(-1, 2));
    case 4:
      return Scalar::surd(1u, Rational(-1, 2));  // -sqrt(2)/2
    case 5: {
      // -cos(pi/5) = -(1 + sqrt(5))/4
      Scalar s = Scalar::of(Rational(-1, 4));
      return s + Scalar::surd(4u, Rational(-1, 4));
    }
    case 6:
      return Scalar::surd(2u, Rational(-1, 2));  // -sqrt(3)/2
    case kInfiniteLabel:
      return Scalar::of(-1);
    default:
      return std::nullopt;
  }
}

}  // namespace

bool RootSystem::supports(const Graph& g) {
  for (int s = 0; s < g.rank(); ++s)
    for (int t = s + 1; t < g.rank(); ++t)
      if (!form_entry(g.label(s, t))) return false;
  return true;
}

RootSystem::RootSystem(const Graph& g) : graph_(g) {
  const int n = graph_.rank();
  form_.resize(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      auto e = form_entry(graph_.label(s, t));
      if (!e)
        throw SemanticError("edge label " + std::to_string(graph_.label(s, t)) +
                            " is outside the exact scalar field; use the word engine");
      form_[s * n + t] = *e;
    }
}

void RootSystem::check_compatible(std::uint64_t gid) const {
  if (gid != graph_.fingerprint())
    throw SemanticError("element belongs to a different Coxeter graph");
}

Scalar RootSystem::bilinear(const Root& a, const Root& b) const {
  const int n = graph_.rank();
  Scalar out;
  for (int s = 0; s < n; ++s) {
    if (a[s].is_zero()) continue;
    for (int t = 0; t < n; ++t) {
      if (b[t].is_zero()) continue;
      out += a[s] * b[t] * basis_form(s, t);
    }
  }
  return out;
}

Root RootSystem::simple_root(int s) const {
  Root r(graph_.rank());
  r[s] = Scalar::of(1);
  return r;
}

Root RootSystem::reflect(int s, const Root& r) const {
  // s(x) = x - 2 B(x, e_s) e_s
  Scalar b;
  for (int t = 0; t < graph_.rank(); ++t) {
    if (r[t].is_zero()) continue;
    b += r[t] * basis_form(t, s);
  }
  Root out = r;
  out[s] -= (Scalar::of(2) * b);
  return out;
}

Root RootSystem::act_letters(std::span<const int> letters, const Root& r) const {
  Root out = r;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = reflect(*it, out);
  return out;
}

Root RootSystem::act(const Element& w, const Root& r) const {
  check_compatible(w.graph_id());
  return act_letters(w.letters(), r);
}

int RootSystem::root_sign(const Root& r) const {
  bool pos = false, neg = false;
  for (const Scalar& c : r) {
    int s = c.sign();
    if (s > 0) pos = true;
    if (s < 0) neg = true;
  }
  if (pos && neg) throw SemanticError("mixed-sign vector is not a root");
  return neg ? -1 : 1;
}

bool RootSystem::root_descent(const Element& w, int s) const {
  check_compatible(w.graph_id());
  auto letters = w.letters();
  return root_sign(act_letters(letters, simple_root(s))) < 0;
}

void RootSystem::right_mult_columns(std::vector<Root>& cols, int s) const {
  // (w s)(e_t) = w(e_t) - 2 B(e_t, e_s) w(e_s)
  const Root ws = cols[s];
  for (int t = 0; t < graph_.rank(); ++t) {
    const Scalar& b = basis_form(t, s);
    if (b.is_zero()) continue;
    Scalar factor = Scalar::of(2) * b;
    for (int i = 0; i < graph_.rank(); ++i) cols[t][i] -= factor * ws[i];
  }
}

int RootSystem::root_length(std::span<const int> letters) const {
  const int n = graph_.rank();
  std::vector<Root> cols;
  cols.reserve(n);
  for (int t = 0; t < n; ++t) cols.push_back(simple_root(t));
  for (int l : letters) {
    if (l < 0 || l >= n) throw SemanticError("generator index out of range");
    right_mult_columns(cols, l);
  }
  int len = 0;
  for (;;) {
    int s = -1;
    for (int t = 0; t < n; ++t)
      if (root_sign(cols[t]) < 0) {
        s = t;
        break;
      }
    if (s < 0) break;
    right_mult_columns(cols, s);
    ++len;
  }
  for (int t = 0; t < n; ++t)
    if (!(cols[t] == simple_root(t)))
      throw Error("descent stripping did not terminate at the identity");
  return len;
}

std::vector<RootReflection> RootSystem::positive_roots_up_to_depth(const Group& group,
                                                                   int depth) const {
  if (group.graph().fingerprint() != graph_.fingerprint())
    throw SemanticError("group and root system use different Coxeter graphs");
  std::map<Root, Element, RootLess> seen;
  std::vector<RootReflection> out;
  std::map<Root, Element, RootLess> frontier;
  for (int s = 0; s < graph_.rank(); ++s) {
    Root r = simple_root(s);
    Element refl = group.normal_form(std::array<int, 1>{s});
    frontier.emplace(r, refl);
  }
  for (const auto& [r, refl] : frontier) {
    seen.emplace(r, refl);
    out.push_back(RootReflection{r, refl});
  }
  for (int d = 1; d <= depth && !frontier.empty(); ++d) {
    std::map<Root, Element, RootLess> next;
    for (const auto& [r, refl] : frontier) {
      for (int s = 0; s < graph_.rank(); ++s) {
        Root r2 = reflect(s, r);
        if (root_sign(r2) < 0) continue;
        if (seen.count(r2) || next.count(r2)) continue;
        Element refl2 = group.mult(group.lmult(s, refl), s);
        next.emplace(std::move(r2), std::move(refl2));
      }
    }
    for (const auto& [r, refl] : next) {
      if (out.size() >= group.budgets().ball_cap)
        throw BudgetError("positive root enumeration exceeds budget");
      seen.emplace(r, refl);
      out.push_back(RootReflection{r, refl});
    }
    frontier = std::move(next);
  }
  return out;
}

std::optional<Subset> simple_image_set(const Group& group, const Element& w, Subset x) {
  Subset image;
  for (int s : x) {
    auto t = group.conjugate_generator(w, s);
    if (!t) return std::nullopt;
    image = image.with(*t);
  }
  return image;
}

}  // namespace cox
