#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cox/parabolic.hpp"

namespace cox {

enum class Law {
  Commensurator,     // membership criterion vs support in the closed-form set
  Normalizer,        // membership and decomposition vs generator conjugation
  QuasiCentralizer,  // set conjugation vs the perpendicular generators
  DualLength,        // rewriting length vs root-sign length
  CosetUniqueness,   // decomposition vs brute-force double coset minimum
};

Law law_from_name(const std::string& name);
std::string law_name(Law law);

struct Counterexample {
  std::string element;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string check_name;
  std::string graph_name;
  std::string subset;
  std::string subset2;
  int radius = 0;
  std::size_t elements_checked = 0;
  std::vector<Counterexample> failures;
  bool negative_control = false;

  bool pass() const { return failures.empty(); }
  // Suite-level verdict: a negative control must produce counterexamples.
  bool ok() const { return negative_control ? !failures.empty() : failures.empty(); }
};

struct BallCheckOptions {
  std::optional<Subset> second;   // second subset for the coset law
  bool negative_control = false;  // run the documented perturbed formula
};

// Elementwise { h : h in W_x and w^-1 h w in W_x' }, by enumeration of the
// whole group. Requires the group finite with at most order_cap elements;
// uses only word arithmetic, never the closed-form operations it checks.
std::vector<Element> brute_force_intersection(const Group& group, Subset x, Subset x_prime,
                                              const Element& w);

// Evaluates both sides of a law on every element of the radius ball and
// reports every mismatch. With negative_control set, the closed-form side
// is perturbed in a law-specific way so a healthy corpus must fail:
//   commensurator    - drops the perpendicular part from the formula set
//   normalizer       - ignores the W_x factor of the decomposition
//   quasiCentralizer - adds a stray generator to the formula set
//   dualLength       - reads root signs over a graph with one corrupted label
//   cosetUniqueness  - strips left descents only
CheckReport ball_check(const Group& group, Subset x, int radius, Law law,
                       const BallCheckOptions& options = {});

// Distinct cosets of W_y met inside growing balls of W_x, for x with all
// components infinite and y a proper subset of x. Nondecreasing by
// construction; a healthy run is strictly increasing at three or more
// radii. Evidence, not proof, that W_y has infinite index in W_x.
std::vector<std::size_t> growth_probe(const Group& group, Subset x, Subset y, int max_radius);

struct SuiteCheck {
  Law law;
  std::string graph_path;
  std::string subset;
  std::string subset2;
  int radius = 8;
  bool negative_control = false;
};

struct SuiteGrowth {
  std::string graph_path;
  std::string subset;
  std::string target;
  int radius = 6;
};

struct SuiteCell {
  std::optional<SuiteCheck> check;
  std::optional<SuiteGrowth> growth;
};

struct SuiteConfig {
  std::vector<SuiteCell> cells;
  std::string base_dir;  // graph paths resolve against this
};

// Line-oriented config:
//   check <law> <graph> <subset> [<subset2>] [radius=N] [negative=1]
//   growth <graph> <subset> <target-subset> [radius=N]
// '#' starts a comment line; '-' denotes the empty subset.
SuiteConfig parse_suite_config(std::istream& in, std::string base_dir);
SuiteConfig parse_suite_config_file(const std::string& path);

// Runs every cell in config order; budgets apply to each constructed
// group. A cell that throws becomes a failing report instead of aborting
// the suite.
std::vector<CheckReport> run_suite(const SuiteConfig& config, const Budgets& budgets = {});

}  // namespace cox
