#include "cox/words.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace cox {

Group::Group(Graph graph, Budgets budgets)
    : graph_(std::move(graph)), budgets_(budgets), gid_(graph_.fingerprint()) {}

std::vector<int> Element::letters() const {
  std::vector<int> out(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) out[i] = letter(i);
  return out;
}

void Group::check_element(const Element& w) const {
  if (w.graph_id() != gid_)
    throw SemanticError("element belongs to a different Coxeter graph");
}

Element Group::parse_word(std::string_view text) const {
  std::vector<int> letters;
  std::size_t i = 0;
  std::vector<std::string> tokens;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.size() == 1 && tokens[0] == "e" && !graph_.index("e")) return identity();
  for (const auto& tok : tokens) {
    auto idx = graph_.index(tok);
    if (!idx) throw SemanticError("unknown generator '" + tok + "'");
    letters.push_back(*idx);
  }
  return normal_form(letters);
}

std::string Group::format_word(const Element& w) const {
  check_element(w);
  if (w.is_identity()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += " ";
    out += graph_.name(w.letter(i));
  }
  return out;
}

std::optional<Element> Group::memo_lookup(const std::string& word) const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  auto it = memo_.find(word);
  if (it == memo_.end()) return std::nullopt;
  return Element(it->second, gid_);
}

void Group::memo_store(const std::string& word, const Element& result) const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.emplace(word, result.raw());
}

Element Group::reduce_word(std::string word) const {
  // Delete adjacent equal pairs in the raw word first; concatenation
  // produces them often and they never survive reduction.
  for (std::size_t i = 0; i + 1 < word.size();) {
    if (word[i] == word[i + 1]) {
      word.erase(i, 2);
      i = i > 0 ? i - 1 : 0;
    } else {
      ++i;
    }
  }
  if (word.size() <= 1) return Element(std::move(word), gid_);
  if (auto hit = memo_lookup(word)) return *hit;

  std::unordered_set<std::string> seen{word};
  std::deque<std::string> queue{word};
  std::string best = word;
  while (!queue.empty()) {
    std::string u = std::move(queue.front());
    queue.pop_front();
    const std::size_t n = u.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      unsigned char s = u[i], t = u[i + 1];
      if (s == t) {
        std::string shorter = u;
        shorter.erase(i, 2);
        Element res = reduce_word(std::move(shorter));
        memo_store(word, res);
        return res;
      }
      int m = graph_.label(s, t);
      if (m == kInfiniteLabel || static_cast<std::size_t>(m) > n - i) continue;
      bool alternating = true;
      for (int k = 2; k < m; ++k) {
        if (static_cast<unsigned char>(u[i + k]) != (k % 2 == 0 ? s : t)) {
          alternating = false;
          break;
        }
      }
      if (!alternating) continue;
      std::string v = u;
      for (int k = 0; k < m; ++k) v[i + k] = static_cast<char>(k % 2 == 0 ? t : s);
      if (seen.insert(v).second) {
        if (seen.size() > budgets_.class_cap)
          throw BudgetError("braid class closure exceeds budget");
        if (v < best) best = v;
        queue.push_back(std::move(v));
      }
    }
  }
  Element res(std::move(best), gid_);
  memo_store(word, res);
  return res;
}

Element Group::normal_form(std::span<const int> letters) const {
  std::string word;
  word.reserve(letters.size());
  for (int l : letters) {
    if (l < 0 || l >= graph_.rank())
      throw SemanticError("generator index " + std::to_string(l) + " out of range");
    word.push_back(static_cast<char>(l));
  }
  return reduce_word(std::move(word));
}

Element Group::mult(const Element& w, int s) const {
  check_element(w);
  if (s < 0 || s >= graph_.rank()) throw SemanticError("generator index out of range");
  // A canonical word minus its last letter is canonical.
  if (!w.raw().empty() && static_cast<unsigned char>(w.raw().back()) == s)
    return Element(w.raw().substr(0, w.raw().size() - 1), gid_);
  std::string cand = w.raw();
  cand.push_back(static_cast<char>(s));
  return reduce_word(std::move(cand));
}

Element Group::lmult(int s, const Element& w) const {
  check_element(w);
  if (s < 0 || s >= graph_.rank()) throw SemanticError("generator index out of range");
  // A canonical word minus its first letter is canonical.
  if (!w.raw().empty() && static_cast<unsigned char>(w.raw().front()) == s)
    return Element(w.raw().substr(1), gid_);
  std::string cand;
  cand.reserve(w.raw().size() + 1);
  cand.push_back(static_cast<char>(s));
  cand += w.raw();
  return reduce_word(std::move(cand));
}

Element Group::product(const Element& a, const Element& b) const {
  check_element(a);
  check_element(b);
  Element out = a;
  for (std::size_t i = 0; i < b.length(); ++i) out = mult(out, b.letter(i));
  return out;
}

Element Group::inverse(const Element& w) const {
  check_element(w);
  std::string rev(w.raw().rbegin(), w.raw().rend());
  return reduce_word(std::move(rev));
}

bool Group::is_left_descent(int s, const Element& w) const {
  return lmult(s, w).length() < w.length();
}

bool Group::is_right_descent(const Element& w, int s) const {
  return mult(w, s).length() < w.length();
}

Subset Group::left_descents(const Element& w) const {
  Subset d;
  for (int s = 0; s < graph_.rank(); ++s)
    if (is_left_descent(s, w)) d = d.with(s);
  return d;
}

Subset Group::right_descents(const Element& w) const {
  Subset d;
  for (int s = 0; s < graph_.rank(); ++s)
    if (is_right_descent(w, s)) d = d.with(s);
  return d;
}

Subset Group::support(const Element& w) const {
  check_element(w);
  Subset out;
  for (std::size_t i = 0; i < w.length(); ++i) out = out.with(w.letter(i));
  return out;
}

bool Group::in_parabolic(const Element& w, Subset x) const {
  return support(w).subset_of(x);
}

std::vector<Element> Group::enumerate(Subset x, int max_radius, std::size_t cap) const {
  std::vector<Element> out{identity()};
  std::vector<Element> level{identity()};
  for (int r = 1; max_radius < 0 || r <= max_radius; ++r) {
    std::set<Element, ShortLex> next;
    for (const Element& w : level)
      for (int s : x) {
        Element ws = mult(w, s);
        if (ws.length() > w.length()) next.insert(std::move(ws));
      }
    if (next.empty()) break;
    if (out.size() + next.size() > cap)
      throw BudgetError("enumeration exceeds budget of " + std::to_string(cap) + " elements");
    level.assign(next.begin(), next.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Element> Group::ball(int radius) const {
  return enumerate(graph_.all(), radius, budgets_.ball_cap);
}

std::vector<Element> Group::parabolic_ball(Subset x, int radius) const {
  return enumerate(x, radius, budgets_.ball_cap);
}

std::vector<Element> Group::parabolic_elements(Subset x, std::size_t cap) const {
  return enumerate(x, -1, cap);
}

Element Group::longest_element(Subset x) const {
  if (!decompose_subset(graph_, x).xinf.empty())
    throw SemanticError("longest element requires a finite-type subset");
  Element w = identity();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s : x) {
      Element ws = mult(w, s);
      if (ws.length() > w.length()) {
        w = std::move(ws);
        grew = true;
        break;
      }
    }
  }
  return w;
}

Element Group::min_coset_rep_left(Subset x, const Element& w) const {
  Element v = w;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int s : x) {
      Element sv = lmult(s, v);
      if (sv.length() < v.length()) {
        v = std::move(sv);
        stripped = true;
        break;
      }
    }
  }
  return v;
}

Element Group::min_coset_rep_right(Subset x, const Element& w) const {
  Element v = w;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int s : x) {
      Element vs = mult(v, s);
      if (vs.length() < v.length()) {
        v = std::move(vs);
        stripped = true;
        break;
      }
    }
  }
  return v;
}

DoubleCosetDecomposition Group::double_coset_decompose(const Element& w, Subset x,
                                                       Subset x_prime) const {
  check_element(w);
  Element v = w;
  std::vector<int> left_strips, right_strips;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int s : x) {
      Element sv = lmult(s, v);
      if (sv.length() < v.length()) {
        v = std::move(sv);
        left_strips.push_back(s);
        stripped = true;
        break;
      }
    }
    for (int s : x_prime) {
      Element vs = mult(v, s);
      if (vs.length() < v.length()) {
        v = std::move(vs);
        right_strips.push_back(s);
        stripped = true;
        break;
      }
    }
  }
  std::reverse(right_strips.begin(), right_strips.end());
  return DoubleCosetDecomposition{normal_form(left_strips), v, normal_form(right_strips)};
}

std::optional<int> Group::conjugate_generator(const Element& v, int s) const {
  Element vs = mult(v, s);
  if (vs.length() <= v.length()) return std::nullopt;
  for (int t = 0; t < graph_.rank(); ++t) {
    Element tv = lmult(t, v);
    if (tv.length() == vs.length() && tv == vs) return t;
  }
  return std::nullopt;
}

}  // namespace cox
