#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cox/roots.hpp"
#include "cox/words.hpp"

namespace cox {

// The conjugated standard parabolic u0 * W_Y * u0^-1, canonicalized so
// that the conjugator is the minimal-length element of its coset u0 W_Y.
struct ParabolicDescriptor {
  Element conjugator;
  Subset core;
};

// One admissible move of the conjugation groupoid: t not in x, the
// component y0 of t inside {t} union x generates a finite group, and
// c = w_{y0} * w_{x0} with x0 = y0 minus {t} carries E_x to E_{x_next}.
struct ElementaryConjugation {
  int t;
  Subset x;
  Element c;
  Subset x_next;
};

// A chain of elementary conjugations; w is the product of the steps' c
// values with the last step leftmost.
struct ConjugationWitness {
  std::vector<ElementaryConjugation> steps;
  Element w;
};

struct NormalizerDecomposition {
  Element v;  // minimal representative of w W_x; satisfies v x v^-1 = x
  Element u;  // the remaining factor in W_x
};

// Descriptor of W_x intersected with w W_x' w^-1.
ParabolicDescriptor intersect_parabolic_conjugate(const Group& group, Subset x, Subset x_prime,
                                                  const Element& w);

// All elements of u0 W_Y u0^-1 (the subgroup a descriptor denotes).
// Throws BudgetError if the core subgroup has more than cap elements.
std::vector<Element> descriptor_elements(const Group& group, const ParabolicDescriptor& d,
                                         std::size_t cap);

// Generating involutions of { w in W_x : w x w^-1 = x }: the longest
// elements of the finite-type components of x. They commute pairwise and
// generate an elementary abelian 2-group.
std::vector<Element> quasi_center(const Group& group, Subset x);

// Membership in { w : w W_x w^-1 = W_x }, decided on the minimal coset
// representative; members split as w = v * u with u in W_x.
bool normalizer_membership(const Group& group, Subset x, const Element& w);
std::optional<NormalizerDecomposition> normalizer_decompose(const Group& group, Subset x,
                                                            const Element& w);

// { w : w x w^-1 = x } = W_Y with Y the generators commuting with all of
// x; valid only when every component of x is infinite, and throws
// SemanticError otherwise.
Subset quasi_centralizer(const Group& group, Subset x);

// Membership in the commensurator of W_x, decided on the minimal double
// coset representative: v must carry the simple roots of the infinite
// part of x onto themselves.
bool commensurator_membership(const Group& group, Subset x, const Element& w);

bool is_admissible(const Group& group, Subset x, int t);
ElementaryConjugation elementary_conjugation(const Group& group, Subset x, int t);

// Shortest chain of elementary conjugations carrying x to x_prime, found
// by breadth-first search over subsets with the smallest admissible t
// expanded first; nothing when x_prime is unreachable.
std::optional<ConjugationWitness> conjugation_witness(const Group& group, Subset x,
                                                      Subset x_prime);

// A chain whose product is exactly w, when w carries E_x onto some E_x'.
// Bounded breadth-first search over (subset, prefix product) states;
// throws BudgetError when the state budget runs out, which is distinct
// from the nothing returned when no chain exists.
std::optional<ConjugationWitness> factor_witness(const Group& group, Subset x, const Element& w);

}  // namespace cox
