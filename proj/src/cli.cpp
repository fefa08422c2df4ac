#include "cox/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cox/json_io.hpp"
#include "cox/parabolic.hpp"
#include "cox/verify.hpp"

namespace cox::cli {

namespace {

using nlohmann::json;

struct Options {
  Budgets budgets;
  bool as_json = false;

  std::string graph_file;
  std::string word, word2;
  std::string subset, left, right, xprime;
  std::string config_file;
  int radius = 8;
};

Group make_group(const Options& opt) {
  return Group(Graph::parse_file(opt.graph_file), opt.budgets);
}

void emit(const Options& opt, std::ostream& out, const std::string& command,
          const json& inputs, const json& result, const std::string& text) {
  if (opt.as_json)
    out << envelope(command, opt.graph_file, inputs, result).dump() << "\n";
  else
    out << text;
}

std::string word_line(const Group& g, const Element& w) {
  return g.format_word(w) + " (length " + std::to_string(w.length()) + ")\n";
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  Group g = make_group(opt);
  Subset x = parse_subset(g.graph(), opt.subset);
  auto a = analyze_parabolic(g.graph(), x);
  std::ostringstream text;
  text << "graph: " << opt.graph_file << " (rank " << g.graph().rank() << ")\n";
  text << "X = {" << format_subset(g.graph(), x) << "}\n";
  for (const auto& [members, type] : a.components)
    text << "  component {" << format_subset(g.graph(), members) << "}: " << to_string(type)
         << "\n";
  text << "X0 = {" << format_subset(g.graph(), a.x0) << "}  Xinf = {"
       << format_subset(g.graph(), a.xinf) << "}  Yinf = {" << format_subset(g.graph(), a.yinf)
       << "}\n";
  text << "commensurator = <" << format_subset(g.graph(), a.commensurator)
       << ">; self-commensurating: " << (a.self_commensurating ? "yes" : "no") << "\n";
  emit(opt, out, "analyze", json{{"subset", opt.subset}}, analysis_json(g.graph(), a),
       text.str());
  return kOk;
}

int cmd_reduce(const Options& opt, std::ostream& out) {
  Group g = make_group(opt);
  Element w = g.parse_word(opt.word);
  emit(opt, out, "reduce", json{{"word", opt.word}},
       json{{"word", word_json(g, w)}, {"length", w.length()}}, word_line(g, w));
  return kOk;
}

int cmd_prod(const Options& opt, std::ostream& out) {
  Group g = make_group(opt);
  Element w = g.product(g.parse_word(opt.word), g.parse_word(opt.word2));
  emit(opt, out, "prod", json{{"w1", opt.word}, {"w2", opt.word2}},
       json{{"word", word_json(g, w)}, {"length", w.length()}}, word_line(g, w));
  return kOk;
}

int cmd_inv(const Options& opt, std::ostream& out) {
  Group g = make_group(opt);
  Element w = g.inverse(g.parse_word(opt.word));
  emit(opt, out, "inv", json{{"word", opt.word}},
       json{{"word", word_json(g, w)}, {"length", w.length()}}, word_line(g, w));
  return kOk;
}

int cmd_coset(const Options& opt, std::ostream& out) {
  Group g = make_group(opt);
  auto d = g.double_coset_decompose(g.parse_word(opt.word), parse_subset(g.graph(), opt.left),
                                    parse_subset(g.graph(), opt.right));
  std::ostringstream text;
  text << "u=" << g.format_word(d.u) << ", v=" << g.format_word(d.v)
       << ", u'=" << g.format_word(d.u_prime) << "\n";
  emit(opt, out, "coset",
       json{{"word", opt.word}, {"left", opt.left}, {"right", opt.right}},
       decomposition_json(g, d), text.str());
  return kOk;
}

int cmd_intersect(const Options& opt, std::ostream& out) {
  Group g = make_group(opt);
  auto d = intersect_parabolic_conjugate(g, parse_subset(g.graph(), opt.subset),
                                         parse_subset(g.graph(), opt.xprime),
                                         g.parse_word(opt.word));
  std::ostringstream text;
  text << "conjugator = " << g.format_word(d.conjugator) << "; core = {"
       << format_subset(g.graph(), d.core) << "}\n";
  emit(opt, out, "intersect",
       json{{"x", opt.subset}, {"xprime", opt.xprime}, {"word", opt.word}},
       descriptor_json(g, d), text.str());
  return kOk;
}

int cmd_witness(const Options& opt, std::ostream& out) {
  Group g = make_group(opt);
  Subset x = parse_subset(g.graph(), opt.subset);
  std::optional<ConjugationWitness> w;
  json inputs{{"x", opt.subset}};
  if (!opt.word.empty()) {
    inputs["word"] = opt.word;
    w = factor_witness(g, x, g.parse_word(opt.word));
  } else {
    inputs["xprime"] = opt.xprime;
    w = conjugation_witness(g, x, parse_subset(g.graph(), opt.xprime));
  }
  std::ostringstream text;
  if (!w) {
    text << "none\n";
    emit(opt, out, "witness", inputs, nullptr, text.str());
    return kOk;
  }
  for (std::size_t i = 0; i < w->steps.size(); ++i) {
    const auto& st = w->steps[i];
    text << "step " << i << ": t=" << g.graph().name(st.t) << ", {"
         << format_subset(g.graph(), st.x) << "} -> {" << format_subset(g.graph(), st.x_next)
         << "}, c=" << g.format_word(st.c) << "\n";
  }
  text << "w = " << g.format_word(w->w) << "\n";
  emit(opt, out, "witness", inputs, witness_json(g, *w), text.str());
  return kOk;
}

int cmd_ball(const Options& opt, std::ostream& out) {
  Group g = make_group(opt);
  auto elements = g.ball(opt.radius);
  std::ostringstream text;
  json words = json::array();
  for (const Element& w : elements) {
    text << g.format_word(w) << "\n";
    words.push_back(word_json(g, w));
  }
  emit(opt, out, "ball", json{{"radius", opt.radius}},
       json{{"elements", words}, {"count", elements.size()}}, text.str());
  return kOk;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  Group g = make_group(opt);
  Subset x = opt.subset.empty() ? g.graph().all() : parse_subset(g.graph(), opt.subset);
  std::ostringstream text;
  json comps = json::array();
  for (const Subset& comp : connected_components(g.graph(), x)) {
    auto type = classify_component(g.graph(), comp);
    text << "{" << format_subset(g.graph(), comp) << "}: " << to_string(type);
    if (type.order) text << " (order " << *type.order << ")";
    text << "\n";
    comps.push_back(component_json(g.graph(), comp, type));
  }
  emit(opt, out, "classify", json{{"subset", opt.subset}}, json{{"components", comps}},
       text.str());
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  auto config = parse_suite_config_file(opt.config_file);
  auto reports = run_suite(config, opt.budgets);
  bool all_ok = true;
  std::ostringstream text;
  for (const CheckReport& r : reports) {
    all_ok = all_ok && r.ok();
    if (opt.as_json) {
      out << report_json(r).dump() << "\n";
    } else {
      text << (r.ok() ? "[ok]  " : "[FAIL] ") << r.check_name << " " << r.graph_name << " {"
           << r.subset << "}";
      if (!r.subset2.empty()) text << " {" << r.subset2 << "}";
      text << " radius=" << r.radius << " checked=" << r.elements_checked
           << " failures=" << r.failures.size();
      if (r.negative_control) text << " (negative control)";
      text << "\n";
    }
  }
  if (!opt.as_json) out << text.str();
  return all_ok ? kOk : kCheckFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter group calculator: commensurators, normalizers and "
               "quasi-centralizers of standard parabolic subgroups"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--ball-cap", opt.budgets.ball_cap, "max elements per ball enumeration")
      ->envname("COXCOMM_BALL_CAP");
  app.add_option("--search-cap", opt.budgets.search_cap, "max states in witness searches")
      ->envname("COXCOMM_SEARCH_CAP");
  app.add_option("--order-cap", opt.budgets.order_cap, "max size for full-group enumeration")
      ->envname("COXCOMM_ORDER_CAP");
  app.add_option("--class-cap", opt.budgets.class_cap, "max words per braid-class closure")
      ->envname("COXCOMM_CLASS_CAP");

  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("graph", opt.graph_file, "graph file")->required();
    cmd->add_flag("--json", opt.as_json, "emit a JSON envelope");
  };

  auto* analyze = app.add_subcommand("analyze", "commensurator analysis of a subset");
  add_graph(analyze);
  analyze->add_option("--subset", opt.subset, "comma-separated generators")->required();

  auto* reduce = app.add_subcommand("reduce", "normal form of a word");
  add_graph(reduce);
  reduce->add_option("word", opt.word, "whitespace-separated generators, e = identity")
      ->required();

  auto* prod = app.add_subcommand("prod", "product of two words");
  add_graph(prod);
  prod->add_option("w1", opt.word)->required();
  prod->add_option("w2", opt.word2)->required();

  auto* inv = app.add_subcommand("inv", "inverse of a word");
  add_graph(inv);
  inv->add_option("word", opt.word)->required();

  auto* coset = app.add_subcommand("coset", "double coset decomposition");
  add_graph(coset);
  coset->add_option("word", opt.word)->required();
  coset->add_option("--left", opt.left, "left subset");
  coset->add_option("--right", opt.right, "right subset");

  auto* intersect = app.add_subcommand("intersect", "intersection with a conjugated parabolic");
  add_graph(intersect);
  intersect->add_option("--x", opt.subset)->required();
  intersect->add_option("--xprime", opt.xprime)->required();
  intersect->add_option("--word", opt.word)->required();

  auto* witness = app.add_subcommand("witness", "chain of elementary conjugations");
  add_graph(witness);
  witness->add_option("--x", opt.subset)->required();
  witness->add_option("--xprime", opt.xprime, "target subset");
  witness->add_option("--word", opt.word, "factor this element instead");

  auto* ball = app.add_subcommand("ball", "all elements up to a length");
  add_graph(ball);
  ball->add_option("--radius", opt.radius)->envname("COXCOMM_RADIUS");

  auto* classify = app.add_subcommand("classify", "component types of a subset");
  add_graph(classify);
  classify->add_option("--subset", opt.subset, "defaults to all generators");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--config", opt.config_file, "suite config file")->required();
  verify->add_flag("--json", opt.as_json, "emit JSON lines, one per report");

  std::vector<char*> argv;
  std::string program = "coxcomm";
  argv.push_back(program.data());
  std::vector<std::string> storage = args;
  for (auto& a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opt, out);
    if (reduce->parsed()) return cmd_reduce(opt, out);
    if (prod->parsed()) return cmd_prod(opt, out);
    if (inv->parsed()) return cmd_inv(opt, out);
    if (coset->parsed()) return cmd_coset(opt, out);
    if (intersect->parsed()) return cmd_intersect(opt, out);
    if (witness->parsed()) return cmd_witness(opt, out);
    if (ball->parsed()) return cmd_ball(opt, out);
    if (classify->parsed()) return cmd_classify(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetError;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticError;
  }
  return kParseError;
}

}  // namespace cox::cli
