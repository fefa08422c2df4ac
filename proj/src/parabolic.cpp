#include "cox/parabolic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace cox {

ParabolicDescriptor intersect_parabolic_conjugate(const Group& group, Subset x, Subset x_prime,
                                                  const Element& w) {
  auto dcd = group.double_coset_decompose(w, x, x_prime);
  Subset core;
  for (int s : x_prime) {
    // v is (x,x')-reduced, so l(v s) > l(v) for s in x'.
    auto t = group.conjugate_generator(dcd.v, s);
    if (t && x.contains(*t)) core = core.with(*t);
  }
  Element conjugator = group.min_coset_rep_right(core, dcd.u);
  return ParabolicDescriptor{std::move(conjugator), core};
}

std::vector<Element> descriptor_elements(const Group& group, const ParabolicDescriptor& d,
                                         std::size_t cap) {
  std::vector<Element> out;
  Element inv = group.inverse(d.conjugator);
  for (const Element& h : group.parabolic_elements(d.core, cap))
    out.push_back(group.product(group.product(d.conjugator, h), inv));
  std::sort(out.begin(), out.end(), Element::shortlex_less);
  return out;
}

std::vector<Element> quasi_center(const Group& group, Subset x) {
  std::vector<Element> out;
  for (const Subset& comp : connected_components(group.graph(), x))
    if (classify_component(group.graph(), comp).finite())
      out.push_back(group.longest_element(comp));
  return out;
}

std::optional<NormalizerDecomposition> normalizer_decompose(const Group& group, Subset x,
                                                            const Element& w) {
  group.check_element(w);
  Element v = w;
  std::vector<int> strips;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int s : x) {
      Element vs = group.mult(v, s);
      if (vs.length() < v.length()) {
        v = std::move(vs);
        strips.push_back(s);
        stripped = true;
        break;
      }
    }
  }
  std::reverse(strips.begin(), strips.end());
  Element u = group.normal_form(strips);
  if (simple_image_set(group, v, x) != std::optional<Subset>(x)) return std::nullopt;
  return NormalizerDecomposition{std::move(v), std::move(u)};
}

bool normalizer_membership(const Group& group, Subset x, const Element& w) {
  return normalizer_decompose(group, x, w).has_value();
}

Subset quasi_centralizer(const Group& group, Subset x) {
  auto d = decompose_subset(group.graph(), x);
  if (!d.x0.empty())
    throw SemanticError(
        "quasi-centralizer closed form requires every component of the subset to be infinite");
  return perpendicular_set(group.graph(), x);
}

bool commensurator_membership(const Group& group, Subset x, const Element& w) {
  Subset xinf = decompose_subset(group.graph(), x).xinf;
  Element v = group.double_coset_decompose(w, x, x).v;
  return simple_image_set(group, v, xinf) == std::optional<Subset>(xinf);
}

bool is_admissible(const Group& group, Subset x, int t) {
  if (x.contains(t)) throw SemanticError("t must lie outside the subset");
  if (t < 0 || t >= group.graph().rank()) throw SemanticError("generator index out of range");
  Subset y0 = component_of(group.graph(), x.with(t), t);
  return classify_component(group.graph(), y0).finite();
}

ElementaryConjugation elementary_conjugation(const Group& group, Subset x, int t) {
  if (!is_admissible(group, x, t))
    throw SemanticError("generator '" + group.graph().name(t) + "' is not admissible here");
  Subset y0 = component_of(group.graph(), x.with(t), t);
  Subset x0 = y0.without(t);
  Element c = group.product(group.longest_element(y0), group.longest_element(x0));
  auto image = simple_image_set(group, c, x);
  if (!image || !image->subset_of(x.with(t)))
    throw Error("elementary conjugation image invariant violated");
  for (int s : x)
    if (group.mult(c, s).length() < c.length())
      throw Error("elementary conjugation is not reduced against the subset");
  return ElementaryConjugation{t, x, std::move(c), *image};
}

namespace {

// Lazily computed edges of the conjugation groupoid, shared by the two
// witness searches within one call.
class EdgeCache {
 public:
  explicit EdgeCache(const Group& group) : group_(group) {}

  const std::optional<ElementaryConjugation>& edge(Subset x, int t) {
    auto key = std::make_pair(x.bits(), t);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::optional<ElementaryConjugation> e;
    if (is_admissible(group_, x, t)) e = elementary_conjugation(group_, x, t);
    return cache_.emplace(key, std::move(e)).first->second;
  }

 private:
  const Group& group_;
  std::map<std::pair<std::uint32_t, int>, std::optional<ElementaryConjugation>> cache_;
};

}  // namespace

std::optional<ConjugationWitness> conjugation_witness(const Group& group, Subset x,
                                                      Subset x_prime) {
  if (x == x_prime) return ConjugationWitness{{}, group.identity()};
  EdgeCache edges(group);
  struct Node {
    Subset subset;
    int parent;  // index into nodes
    std::optional<ElementaryConjugation> step;
  };
  std::vector<Node> nodes{{x, -1, std::nullopt}};
  std::set<std::uint32_t> visited{x.bits()};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    Subset here = nodes[cur].subset;
    for (int t = 0; t < group.graph().rank(); ++t) {
      if (here.contains(t)) continue;
      const auto& e = edges.edge(here, t);
      if (!e) continue;
      if (!visited.insert(e->x_next.bits()).second) continue;
      nodes.push_back(Node{e->x_next, cur, *e});
      if (e->x_next == x_prime) {
        std::vector<ElementaryConjugation> steps;
        for (int i = static_cast<int>(nodes.size()) - 1; i > 0; i = nodes[i].parent)
          steps.push_back(*nodes[i].step);
        std::reverse(steps.begin(), steps.end());
        Element w = group.identity();
        for (const auto& st : steps) w = group.product(st.c, w);
        return ConjugationWitness{std::move(steps), std::move(w)};
      }
      queue.push_back(static_cast<int>(nodes.size()) - 1);
    }
  }
  return std::nullopt;
}

std::optional<ConjugationWitness> factor_witness(const Group& group, Subset x, const Element& w) {
  group.check_element(w);
  auto target = simple_image_set(group, w, x);
  if (!target) return std::nullopt;
  if (w.is_identity()) return ConjugationWitness{{}, group.identity()};

  EdgeCache edges(group);
  struct Node {
    Subset subset;
    Element prefix;
    int parent;
    std::optional<ElementaryConjugation> step;
  };
  std::vector<Node> nodes{{x, group.identity(), -1, std::nullopt}};
  std::set<std::pair<std::uint32_t, std::string>> visited{{x.bits(), std::string()}};
  std::deque<int> queue{0};

  auto finish = [&](int goal) {
    std::vector<ElementaryConjugation> steps;
    for (int i = goal; i > 0; i = nodes[i].parent) steps.push_back(*nodes[i].step);
    std::reverse(steps.begin(), steps.end());
    ConjugationWitness witness{std::move(steps), nodes[goal].prefix};
    if (nodes[goal].subset != *target)
      throw Error("factor witness terminal subset mismatch");
    // When every component of x is infinite, each step must be a single
    // generator commuting with all of x.
    if (decompose_subset(group.graph(), x).x0.empty() && !x.empty()) {
      Subset perp = perpendicular_set(group.graph(), x);
      for (const auto& st : witness.steps)
        if (st.c.length() != 1 || st.c.letter(0) != st.t || !perp.contains(st.t) ||
            !(st.x_next == x))
          throw Error("factor witness specialization invariant violated");
    }
    return witness;
  };

  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    Subset here = nodes[cur].subset;
    for (int t = 0; t < group.graph().rank(); ++t) {
      if (here.contains(t)) continue;
      const auto& e = edges.edge(here, t);
      if (!e) continue;
      Element prefix = group.product(e->c, nodes[cur].prefix);
      if (prefix.length() > w.length()) continue;
      if (!visited.insert({e->x_next.bits(), prefix.raw()}).second) continue;
      if (visited.size() > group.budgets().search_cap)
        throw BudgetError("factor witness search exceeds state budget");
      nodes.push_back(Node{e->x_next, prefix, cur, *e});
      if (prefix == w) return finish(static_cast<int>(nodes.size()) - 1);
      queue.push_back(static_cast<int>(nodes.size()) - 1);
    }
  }
  return std::nullopt;
}

}  // namespace cox
