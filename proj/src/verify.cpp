#include "cox/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cox {

Law law_from_name(const std::string& name) {
  if (name == "commensurator") return Law::Commensurator;
  if (name == "normalizer") return Law::Normalizer;
  if (name == "quasiCentralizer") return Law::QuasiCentralizer;
  if (name == "dualLength") return Law::DualLength;
  if (name == "cosetUniqueness") return Law::CosetUniqueness;
  throw ParseError("unknown law '" + name + "'");
}

std::string law_name(Law law) {
  switch (law) {
    case Law::Commensurator:
      return "commensurator";
    case Law::Normalizer:
      return "normalizer";
    case Law::QuasiCentralizer:
      return "quasiCentralizer";
    case Law::DualLength:
      return "dualLength";
    case Law::CosetUniqueness:
      return "cosetUniqueness";
  }
  return "?";
}

std::vector<Element> brute_force_intersection(const Group& group, Subset x, Subset x_prime,
                                              const Element& w) {
  group.check_element(w);
  auto all = group.parabolic_elements(group.graph().all(), group.budgets().order_cap);
  Element winv = group.inverse(w);
  std::vector<Element> out;
  for (const Element& h : all) {
    if (!group.in_parabolic(h, x)) continue;
    Element conj = group.product(group.product(winv, h), w);
    if (group.in_parabolic(conj, x_prime)) out.push_back(h);
  }
  return out;
}

namespace {

// w s w^-1 in W_x  iff  W_x (w s) = W_x w.
bool conjugate_in_parabolic(const Group& g, const Element& w, int s, Subset x) {
  return g.min_coset_rep_left(x, g.mult(w, s)) == g.min_coset_rep_left(x, w);
}

// w^-1 s w in W_x  iff  (s w) W_x = w W_x.
bool inverse_conjugate_in_parabolic(const Group& g, const Element& w, int s, Subset x) {
  return g.min_coset_rep_right(x, g.lmult(s, w)) == g.min_coset_rep_right(x, w);
}

// Direct two-sided test for w W_x w^-1 = W_x via generator images.
bool direct_normalizes(const Group& g, const Element& w, Subset x) {
  for (int s : x) {
    if (!conjugate_in_parabolic(g, w, s, x)) return false;
    if (!inverse_conjugate_in_parabolic(g, w, s, x)) return false;
  }
  return true;
}

// Direct test for w x w^-1 = x as a set of generators.
bool direct_quasi_centralizes(const Group& g, const Element& w, Subset x) {
  Subset image;
  for (int s : x) {
    Element ws = g.mult(w, s);
    Element conj = g.product(ws, g.inverse(w));
    if (conj.length() != 1) return false;
    int t = conj.letter(0);
    if (!x.contains(t)) return false;
    image = image.with(t);
  }
  return image == x;
}

Graph corrupt_one_label(const Graph& g) {
  const int n = g.rank();
  std::vector<int> matrix(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) matrix[s * n + t] = g.label(s, t);
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      if (matrix[s * n + t] >= 3) {
        matrix[s * n + t] = matrix[t * n + s] = 2;
        return Graph(g.names(), matrix);
      }
    }
  // No edge at all: promote the first commuting pair instead.
  if (n >= 2) matrix[1] = matrix[n] = 3;
  return Graph(g.names(), matrix);
}

void check_commensurator(const Group& g, Subset x, const std::vector<Element>& ball,
                         bool negative, CheckReport& rep) {
  auto an = analyze_parabolic(g.graph(), x);
  Subset formula_set = negative ? an.xinf : an.commensurator;
  for (const Element& w : ball) {
    ++rep.elements_checked;
    bool criterion = commensurator_membership(g, x, w);
    bool support_side = g.in_parabolic(w, formula_set);
    if (criterion != support_side)
      rep.failures.push_back({g.format_word(w),
                              criterion ? "commensurating" : "not commensurating",
                              support_side ? "in formula set" : "outside formula set"});
  }
}

void check_normalizer(const Group& g, Subset x, const std::vector<Element>& ball, bool negative,
                      CheckReport& rep) {
  for (const Element& w : ball) {
    ++rep.elements_checked;
    bool direct = direct_normalizes(g, w, x);
    bool member;
    if (negative) {
      // Perturbed: test the element itself instead of its coset
      // representative, losing the W_x factor.
      member = simple_image_set(g, w, x) == std::optional<Subset>(x);
    } else {
      member = normalizer_membership(g, x, w);
    }
    if (member != direct) {
      rep.failures.push_back({g.format_word(w), direct ? "normalizing" : "not normalizing",
                              member ? "accepted" : "rejected"});
      continue;
    }
    if (negative || !member) continue;
    auto split = normalizer_decompose(g, x, w);
    const Element& v = split->v;
    const Element& u = split->u;
    if (!(g.product(v, u) == w))
      rep.failures.push_back({g.format_word(w), "v*u = w", "product mismatch"});
    if (!g.in_parabolic(u, x))
      rep.failures.push_back({g.format_word(w), "u in W_x", g.format_word(u)});
    if (simple_image_set(g, v, x) != std::optional<Subset>(x))
      rep.failures.push_back({g.format_word(w), "v x v^-1 = x", g.format_word(v)});
    for (int s : x)
      if (g.mult(v, s).length() <= v.length())
        rep.failures.push_back({g.format_word(w), "l(vs) > l(v)", g.graph().name(s)});
  }
}

void check_quasi_centralizer(const Group& g, Subset x, const std::vector<Element>& ball,
                             bool negative, CheckReport& rep) {
  Subset y = quasi_centralizer(g, x);  // enforces the all-infinite precondition
  if (negative) {
    for (int t = 0; t < g.graph().rank(); ++t)
      if (!y.contains(t)) {
        y = y.with(t);
        break;
      }
  }
  for (const Element& w : ball) {
    ++rep.elements_checked;
    bool direct = direct_quasi_centralizes(g, w, x);
    bool formula = g.in_parabolic(w, y);
    if (direct != formula)
      rep.failures.push_back({g.format_word(w),
                              direct ? "conjugates x onto x" : "moves x",
                              formula ? "in W_Y" : "outside W_Y"});
  }
}

void check_dual_length(const Group& g, const std::vector<Element>& ball, bool negative,
                       CheckReport& rep) {
  RootSystem roots(negative ? corrupt_one_label(g.graph()) : g.graph());
  for (const Element& w : ball) {
    ++rep.elements_checked;
    auto letters = w.letters();
    int by_roots = roots.root_length(letters);
    if (by_roots != static_cast<int>(w.length()))
      rep.failures.push_back({g.format_word(w), std::to_string(w.length()),
                              std::to_string(by_roots)});
  }
}

void check_coset_uniqueness(const Group& g, Subset x, Subset x2, int radius,
                            const std::vector<Element>& ball, bool negative, CheckReport& rep) {
  auto u_side = g.parabolic_ball(x, radius);
  auto u2_side = g.parabolic_ball(x2, radius);
  for (const Element& w : ball) {
    ++rep.elements_checked;
    Element v = g.identity();
    if (negative) {
      v = g.min_coset_rep_left(x, w);  // perturbed: forgets the right strips
    } else {
      auto d = g.double_coset_decompose(w, x, x2);
      v = d.v;
      if (d.u.length() + d.v.length() + d.u_prime.length() != w.length())
        rep.failures.push_back({g.format_word(w), "additive lengths", "non-additive split"});
      if (!(g.product(g.product(d.u, d.v), d.u_prime) == w))
        rep.failures.push_back({g.format_word(w), "u*v*u' = w", "product mismatch"});
      if (!g.in_parabolic(d.u, x) || !g.in_parabolic(d.u_prime, x2))
        rep.failures.push_back({g.format_word(w), "factors in their parabolics", "support leak"});
      if (!(g.left_descents(d.v) & x).empty() || !(g.right_descents(d.v) & x2).empty())
        rep.failures.push_back({g.format_word(w), "v reduced on both sides", g.format_word(d.v)});
    }
    // Brute-force minimum over the double coset members reachable here.
    std::set<Element, ShortLex> at_min;
    std::size_t min_len = w.length() + 1;
    for (const Element& a : u_side)
      for (const Element& b : u2_side) {
        Element m = g.product(g.product(a, w), b);
        if (m.length() < min_len) {
          min_len = m.length();
          at_min.clear();
        }
        if (m.length() == min_len) at_min.insert(m);
      }
    if (at_min.size() != 1)
      rep.failures.push_back({g.format_word(w), "unique minimal coset element",
                              std::to_string(at_min.size()) + " at minimal length"});
    else if (!(*at_min.begin() == v))
      rep.failures.push_back(
          {g.format_word(w), g.format_word(*at_min.begin()), g.format_word(v)});
  }
}

}  // namespace

CheckReport ball_check(const Group& group, Subset x, int radius, Law law,
                       const BallCheckOptions& options) {
  CheckReport rep;
  rep.check_name = law_name(law);
  rep.graph_name = "";
  rep.subset = format_subset(group.graph(), x);
  rep.radius = radius;
  rep.negative_control = options.negative_control;
  auto ball = group.ball(radius);
  switch (law) {
    case Law::Commensurator:
      check_commensurator(group, x, ball, options.negative_control, rep);
      break;
    case Law::Normalizer:
      check_normalizer(group, x, ball, options.negative_control, rep);
      break;
    case Law::QuasiCentralizer:
      check_quasi_centralizer(group, x, ball, options.negative_control, rep);
      break;
    case Law::DualLength:
      check_dual_length(group, ball, options.negative_control, rep);
      break;
    case Law::CosetUniqueness: {
      Subset x2 = options.second.value_or(x);
      rep.subset2 = format_subset(group.graph(), x2);
      check_coset_uniqueness(group, x, x2, radius, ball, options.negative_control, rep);
      break;
    }
  }
  return rep;
}

std::vector<std::size_t> growth_probe(const Group& group, Subset x, Subset y, int max_radius) {
  auto d = decompose_subset(group.graph(), x);
  if (x.empty() || !d.x0.empty())
    throw SemanticError("growth probe requires a subset with all components infinite");
  if (!y.subset_of(x) || y == x)
    throw SemanticError("growth probe target must be a proper subset");
  auto elements = group.parabolic_ball(x, max_radius);
  std::set<std::string> reps;
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_radius) + 1, 0);
  std::size_t i = 0;
  for (int r = 0; r <= max_radius; ++r) {
    while (i < elements.size() && elements[i].length() == static_cast<std::size_t>(r)) {
      reps.insert(group.min_coset_rep_left(y, elements[i]).raw());
      ++i;
    }
    counts[r] = reps.size();
  }
  return counts;
}

SuiteConfig parse_suite_config(std::istream& in, std::string base_dir) {
  SuiteConfig config;
  config.base_dir = std::move(base_dir);
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("config line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;

    auto parse_kv = [&](const std::string& t, int& radius, bool& negative) {
      if (t.rfind("radius=", 0) == 0) {
        try {
          radius = std::stoi(t.substr(7));
        } catch (...) {
          fail("bad radius '" + t + "'");
        }
        return true;
      }
      if (t == "negative=1") {
        negative = true;
        return true;
      }
      if (t == "negative=0") return true;
      return false;
    };

    if (tokens[0] == "check") {
      if (tokens.size() < 4) fail("check needs a law, a graph and a subset");
      SuiteCheck c;
      c.law = law_from_name(tokens[1]);
      c.graph_path = tokens[2];
      c.subset = tokens[3];
      std::size_t i = 4;
      if (i < tokens.size() && tokens[i].find('=') == std::string::npos) c.subset2 = tokens[i++];
      for (; i < tokens.size(); ++i)
        if (!parse_kv(tokens[i], c.radius, c.negative_control))
          fail("unexpected token '" + tokens[i] + "'");
      config.cells.push_back(SuiteCell{c, std::nullopt});
    } else if (tokens[0] == "growth") {
      if (tokens.size() < 4) fail("growth needs a graph, a subset and a target");
      SuiteGrowth gcell;
      gcell.graph_path = tokens[1];
      gcell.subset = tokens[2];
      gcell.target = tokens[3];
      bool ignored = false;
      for (std::size_t i = 4; i < tokens.size(); ++i)
        if (!parse_kv(tokens[i], gcell.radius, ignored))
          fail("unexpected token '" + tokens[i] + "'");
      config.cells.push_back(SuiteCell{std::nullopt, gcell});
    } else {
      fail("unknown directive '" + tokens[0] + "'");
    }
  }
  return config;
}

SuiteConfig parse_suite_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  std::string dir;
  auto slash = path.find_last_of('/');
  if (slash != std::string::npos) dir = path.substr(0, slash + 1);
  return parse_suite_config(in, dir);
}

std::vector<CheckReport> run_suite(const SuiteConfig& config, const Budgets& budgets) {
  std::map<std::string, Group> groups;
  auto load = [&](const std::string& path) -> const Group& {
    auto it = groups.find(path);
    if (it != groups.end()) return it->second;
    Graph g = Graph::parse_file(config.base_dir + path);
    return groups.emplace(path, Group(std::move(g), budgets)).first->second;
  };

  std::vector<CheckReport> reports;
  for (const SuiteCell& cell : config.cells) {
    CheckReport rep;
    try {
      if (cell.check) {
        const SuiteCheck& c = *cell.check;
        const Group& g = load(c.graph_path);
        BallCheckOptions opts;
        opts.negative_control = c.negative_control;
        if (!c.subset2.empty()) opts.second = parse_subset(g.graph(), c.subset2);
        rep = ball_check(g, parse_subset(g.graph(), c.subset), c.radius, c.law, opts);
        rep.graph_name = c.graph_path;
      } else {
        const SuiteGrowth& c = *cell.growth;
        const Group& g = load(c.graph_path);
        rep.check_name = "growth";
        rep.graph_name = c.graph_path;
        rep.subset = c.subset;
        rep.subset2 = c.target;
        rep.radius = c.radius;
        auto counts = growth_probe(g, parse_subset(g.graph(), c.subset),
                                   parse_subset(g.graph(), c.target), c.radius);
        rep.elements_checked = counts.size();
        int increases = 0;
        std::string shown;
        for (std::size_t i = 0; i < counts.size(); ++i) {
          if (i && counts[i] > counts[i - 1]) ++increases;
          if (i && counts[i] < counts[i - 1])
            rep.failures.push_back({"counts", "nondecreasing", "decreasing"});
          shown += (i ? "," : "") + std::to_string(counts[i]);
        }
        if (increases < 3)
          rep.failures.push_back({"counts", "strictly increasing at >= 3 radii", shown});
      }
    } catch (const Error& e) {
      if (cell.check) {
        rep.check_name = law_name(cell.check->law);
        rep.graph_name = cell.check->graph_path;
        rep.subset = cell.check->subset;
        rep.negative_control = cell.check->negative_control;
      } else {
        rep.check_name = "growth";
        rep.graph_name = cell.growth->graph_path;
        rep.subset = cell.growth->subset;
      }
      rep.failures.push_back({"", "completed run", e.what()});
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace cox
