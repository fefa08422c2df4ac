#include "cox/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace cox {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

Graph::Graph(std::vector<std::string> names, std::vector<int> matrix)
    : names_(std::move(names)), matrix_(std::move(matrix)) {
  const int n = rank();
  if (n == 0) throw ParseError("graph has no generators");
  if (n > kMaxRank)
    throw ParseError("graph has " + std::to_string(n) + " generators; at most " +
                     std::to_string(kMaxRank) + " are supported");
  if (matrix_.size() != static_cast<std::size_t>(n) * n)
    throw SemanticError("matrix size does not match rank");
  for (int s = 0; s < n; ++s) {
    if (matrix_[s * n + s] != 1) throw SemanticError("m(s,s) must be 1");
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      int m = matrix_[s * n + t];
      if (m != matrix_[t * n + s]) throw SemanticError("matrix is not symmetric");
      if (m != kInfiniteLabel && m < 2)
        throw SemanticError("off-diagonal label " + std::to_string(m) + " < 2");
    }
  }
  star_.resize(n);
  for (int s = 0; s < n; ++s) {
    Subset st;
    for (int t = 0; t < n; ++t)
      if (adjacent(s, t)) st = st.with(t);
    star_[s] = st;
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& nm : names_) h = fnv1a(h, nm.data(), nm.size() + 1);
  h = fnv1a(h, matrix_.data(), matrix_.size() * sizeof(int));
  fingerprint_ = h;
}

Graph Graph::parse(std::string_view text) {
  std::vector<std::string> names;
  std::vector<int> matrix;
  std::vector<bool> assigned;
  int n = 0;
  bool have_header = false;

  std::size_t pos = 0;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
  };

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;

    if (!have_header) {
      names = tokens;
      n = static_cast<int>(names.size());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (names[i] == names[j]) fail("duplicate vertex '" + names[i] + "'");
      matrix.assign(static_cast<std::size_t>(n) * n, 2);
      for (int i = 0; i < n; ++i) matrix[i * n + i] = 1;
      assigned.assign(static_cast<std::size_t>(n) * n, false);
      have_header = true;
      continue;
    }

    if (tokens.size() != 3) fail("expected 's t m'");
    auto find = [&](const std::string& nm) {
      for (int i = 0; i < n; ++i)
        if (names[i] == nm) return i;
      fail("unknown vertex '" + nm + "'");
      return -1;
    };
    int s = find(tokens[0]);
    int t = find(tokens[1]);
    if (s == t) fail("label on a self-pair '" + tokens[0] + "'");

    int m;
    if (tokens[2] == "inf") {
      m = kInfiniteLabel;
    } else {
      const auto& tok = tokens[2];
      auto res = std::from_chars(tok.data(), tok.data() + tok.size(), m);
      if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        fail("malformed integer '" + tok + "'");
      if (m < 2) fail("label " + std::to_string(m) + " < 2");
    }
    if (assigned[s * n + t]) fail("duplicate edge '" + tokens[0] + " " + tokens[1] + "'");
    assigned[s * n + t] = assigned[t * n + s] = true;
    matrix[s * n + t] = matrix[t * n + s] = m;
  }
  if (!have_header) throw ParseError("graph has no generators");
  return Graph(std::move(names), std::move(matrix));
}

Graph Graph::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Graph Graph::from_edges(std::vector<std::string> names, const std::vector<GraphEdge>& edges) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < names.size(); ++i) ss << (i ? " " : "") << names[i];
  ss << "\n";
  for (const auto& e : edges) {
    ss << e.s << " " << e.t << " ";
    if (e.m == kInfiniteLabel)
      ss << "inf";
    else
      ss << e.m;
    ss << "\n";
  }
  return parse(ss.str());
}

std::optional<int> Graph::index(std::string_view name) const {
  for (int i = 0; i < rank(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<Subset> connected_components(const Graph& g, Subset x) {
  std::vector<Subset> parts;
  Subset left = x;
  while (!left.empty()) {
    int s = left.min();
    Subset comp = component_of(g, x, s);
    parts.push_back(comp);
    left = left - comp;
  }
  return parts;
}

Subset component_of(const Graph& g, Subset within, int s) {
  Subset comp = Subset::single(s);
  Subset frontier = comp;
  while (!frontier.empty()) {
    Subset next;
    for (int v : frontier) next = next | (g.star(v) & within);
    frontier = next - comp;
    comp = comp | frontier;
  }
  return comp;
}

namespace {

ComponentType finite_type(TypeKind kind, int rank, std::uint64_t order) {
  return ComponentType{kind, rank, order};
}

// Classification of a connected path with edge label sequence `labels`
// (read end to end; size = rank-1, rank >= 3, every label finite).
std::optional<ComponentType> classify_path(const std::vector<int>& labels) {
  const int k = static_cast<int>(labels.size()) + 1;
  auto count_of = [&](int m) {
    return static_cast<int>(std::count(labels.begin(), labels.end(), m));
  };
  const int threes = count_of(3);
  if (threes == k - 1) return finite_type(TypeKind::A, k, factorial(k + 1));
  if (count_of(4) == 1 && threes == k - 2) {
    if (labels.front() == 4 || labels.back() == 4)
      return finite_type(TypeKind::B, k, (std::uint64_t(1) << k) * factorial(k));
    if (k == 4 && labels[1] == 4) return finite_type(TypeKind::F4, 4, 1152);
    return std::nullopt;
  }
  if (count_of(5) == 1 && threes == k - 2 && (labels.front() == 5 || labels.back() == 5)) {
    if (k == 3) return finite_type(TypeKind::H3, 3, 120);
    if (k == 4) return finite_type(TypeKind::H4, 4, 14400);
  }
  return std::nullopt;
}

}  // namespace

ComponentType classify_component(const Graph& g, Subset x) {
  const int k = x.count();
  if (k == 0) return finite_type(TypeKind::A, 0, 1);
  if (connected_components(g, x).size() != 1)
    throw SemanticError("classify_component requires a connected subset");
  if (k == 1) return finite_type(TypeKind::A, 1, 2);

  int edge_count = 0;
  int max_label = 0;
  for (int s : x)
    for (int t : g.star(s) & x)
      if (s < t) {
        ++edge_count;
        max_label = std::max(max_label, g.label(s, t));
      }
  if (max_label == kInfiniteLabel) return ComponentType{TypeKind::Infinite, k, std::nullopt};

  if (k == 2) {
    int m = max_label;
    if (m == 3) return finite_type(TypeKind::A, 2, 6);
    if (m == 4) return finite_type(TypeKind::B, 2, 8);
    return finite_type(TypeKind::I2, 2, 2ull * static_cast<std::uint64_t>(m));
  }

  // A connected finite-type graph is a tree.
  if (edge_count != k - 1) return ComponentType{TypeKind::Infinite, k, std::nullopt};

  std::vector<int> branch, leaves;
  for (int s : x) {
    int deg = (g.star(s) & x).count();
    if (deg >= 4) return ComponentType{TypeKind::Infinite, k, std::nullopt};
    if (deg == 3) branch.push_back(s);
    if (deg == 1) leaves.push_back(s);
  }
  if (branch.size() > 1) return ComponentType{TypeKind::Infinite, k, std::nullopt};

  if (branch.empty()) {
    // Path. Walk from one leaf and collect labels; try both directions.
    int start = leaves[0];
    std::vector<int> labels;
    Subset seen = Subset::single(start);
    int cur = start;
    while (true) {
      Subset nxt = (g.star(cur) & x) - seen;
      if (nxt.empty()) break;
      int v = nxt.min();
      labels.push_back(g.label(cur, v));
      seen = seen.with(v);
      cur = v;
    }
    if (auto t = classify_path(labels)) return *t;
    std::reverse(labels.begin(), labels.end());
    if (auto t = classify_path(labels)) return *t;
    return ComponentType{TypeKind::Infinite, k, std::nullopt};
  }

  // One branch vertex: D or E shapes, all labels 3.
  for (int s : x)
    for (int t : g.star(s) & x)
      if (s < t && g.label(s, t) != 3) return ComponentType{TypeKind::Infinite, k, std::nullopt};
  int b = branch[0];
  std::vector<int> arms;
  for (int v : g.star(b) & x) {
    int len = 1;
    Subset seen = Subset::single(b).with(v);
    int cur = v;
    while (true) {
      Subset nxt = (g.star(cur) & x) - seen;
      if (nxt.empty()) break;
      cur = nxt.min();
      seen = seen.with(cur);
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1)
    return finite_type(TypeKind::D, k, (std::uint64_t(1) << (k - 1)) * factorial(k));
  if (arms[0] == 1 && arms[1] == 2) {
    if (arms[2] == 2) return finite_type(TypeKind::E6, 6, 51840);
    if (arms[2] == 3) return finite_type(TypeKind::E7, 7, 2903040);
    if (arms[2] == 4) return finite_type(TypeKind::E8, 8, 696729600);
  }
  return ComponentType{TypeKind::Infinite, k, std::nullopt};
}

std::string to_string(const ComponentType& t) {
  switch (t.kind) {
    case TypeKind::A:
      return "A" + std::to_string(t.rank);
    case TypeKind::B:
      return "B" + std::to_string(t.rank);
    case TypeKind::D:
      return "D" + std::to_string(t.rank);
    case TypeKind::E6:
      return "E6";
    case TypeKind::E7:
      return "E7";
    case TypeKind::E8:
      return "E8";
    case TypeKind::F4:
      return "F4";
    case TypeKind::H3:
      return "H3";
    case TypeKind::H4:
      return "H4";
    case TypeKind::I2:
      return "I2(" + std::to_string(*t.order / 2) + ")";
    case TypeKind::Infinite:
      return "infinite";
  }
  return "?";
}

Decomposition decompose_subset(const Graph& g, Subset x) {
  Decomposition d;
  for (const Subset& comp : connected_components(g, x)) {
    if (classify_component(g, comp).finite())
      d.x0 = d.x0 | comp;
    else
      d.xinf = d.xinf | comp;
  }
  return d;
}

Subset perpendicular_set(const Graph& g, Subset x) {
  Subset out;
  for (int t = 0; t < g.rank(); ++t) {
    bool ok = true;
    for (int s : x)
      if (g.label(s, t) != 2) {
        ok = false;
        break;
      }
    if (ok) out = out.with(t);
  }
  return out;
}

ParabolicAnalysis analyze_parabolic(const Graph& g, Subset x) {
  ParabolicAnalysis a;
  for (const Subset& comp : connected_components(g, x))
    a.components.emplace_back(comp, classify_component(g, comp));
  for (const auto& [comp, type] : a.components) {
    if (type.finite())
      a.x0 = a.x0 | comp;
    else
      a.xinf = a.xinf | comp;
  }
  a.yinf = perpendicular_set(g, a.xinf);
  a.commensurator = a.yinf | a.xinf;
  a.self_commensurating = (a.x0 == a.yinf);
  return a;
}

Subset parse_subset(const Graph& g, std::string_view csv) {
  Subset out;
  if (csv.empty() || csv == "-") return out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string_view tok =
        csv.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (tok.empty()) throw ParseError("empty name in subset");
    auto idx = g.index(tok);
    if (!idx) throw SemanticError("unknown generator '" + std::string(tok) + "'");
    out = out.with(*idx);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_subset(const Graph& g, Subset x) {
  std::string out;
  for (int s : x) {
    if (!out.empty()) out += ",";
    out += g.name(s);
  }
  return out;
}

}  // namespace cox
