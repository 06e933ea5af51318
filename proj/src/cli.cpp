#include "tamari/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include "tamari/balance.hpp"
#include "tamari/grammar.hpp"
#include "tamari/lattice.hpp"
#include "tamari/patterns.hpp"
#include "tamari/polynomial.hpp"
#include "tamari/tree.hpp"
#include "tamari/words.hpp"

namespace tamari {

namespace {

constexpr int kLatticeNodeCap = 13;   // Catalan growth; lift with --force
constexpr int kGenerateStepCap = 4;   // output count roughly squares per step

Family parse_family(const std::string& name) {
  if (name == "balanced") return Family::balanced;
  if (name == "maximal") return Family::maximal;
  if (name == "intervals") return Family::intervals;
  if (name == "maximal-intervals") return Family::maximal_intervals;
  throw CLI::ValidationError("--which", "unknown family '" + name + "'");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << content;
}

std::string marks_json(const std::vector<int>& marks) {
  std::string out = "[";
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(marks[i]);
  }
  return out + "]";
}

int cmd_enum(int nodes, const std::string& filter, std::ostream& out) {
  std::vector<Tree> trees;
  if (filter.empty()) {
    trees = all_trees(nodes);
  } else {
    for (const Tree& t : all_balanced_trees(nodes)) {
      if (filter == "balanced" || (filter == "maximal" && is_maximal_balanced(t)) ||
          (filter == "minimal" && is_minimal_balanced(t)))
        trees.push_back(t);
    }
  }
  for (const Tree& t : trees) out << serialize(t) << '\n';
  out << "count=" << trees.size() << '\n';
  return 0;
}

int cmd_series(const FunctionalEquation& eq, int degree, bool csv, std::ostream& out) {
  std::vector<Coeff> coeffs = iterate_fixed_point(eq, degree);
  if (csv) out << "leaves,count\n";
  for (int n = 1; n <= degree; ++n) {
    const Coeff& c = coeffs[static_cast<std::size_t>(n - 1)];
    if (csv)
      out << n << ',' << c.get_str() << '\n';
    else
      out << "leaves=" << n << " count=" << c.get_str() << '\n';
  }
  return 0;
}

int cmd_interval(const std::string& lower_json, const std::string& upper_json,
                 const std::string& dot_path, DotLabels labels, std::ostream& out) {
  Tree lower = deserialize(lower_json);
  Tree upper = deserialize(upper_json);
  Interval iv = interval(lower, upper);
  for (const Tree& t : iv.elements) out << serialize(t) << '\n';
  out << "elements=" << iv.elements.size() << '\n';
  if (lower.balanced() && upper.balanced()) {
    int k = hypercube_dimension(iv);  // throws loudly if the isomorphism fails
    out << "k=" << k << '\n';
    out << "hypercube=verified\n";
  } else {
    out << "hypercube=skipped (endpoints not balanced)\n";
  }
  if (!dot_path.empty()) {
    write_file(dot_path, to_dot(iv, labels));
    if (labels == DotLabels::index) write_file(dot_path + ".map.tsv", dot_sidecar(iv.elements));
  }
  return 0;
}

int cmd_generate(Family family, int steps, std::ostream& out) {
  SynchronousGrammar g = builtin_grammar(family);
  std::vector<GeneratedTree> outputs = generate_bud_trees(g, steps);
  for (const GeneratedTree& gt : outputs) {
    out << "{\"tree\":" << serialize(gt.shape) << ",\"labels\":" << marks_json(gt.labels)
        << ",\"marks\":" << marks_json(gt.marks) << "}\n";
  }
  out << "count=" << outputs.size() << '\n';
  return 0;
}

int cmd_patterns(const std::string& tree_json, const std::string& avoid_spec, std::ostream& out) {
  Tree t = deserialize(tree_json);
  std::vector<TreePatternPtr> patterns;
  std::stringstream ss(avoid_spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    patterns.push_back(parse_pattern(item));
  }
  bool all_avoided = true;
  for (const auto& p : patterns) {
    bool occ = occurs(t, *p);
    if (occ) all_avoided = false;
    out << "pattern " << pattern_to_string(*p) << ": " << (occ ? "occurs" : "avoided") << '\n';
  }
  out << "avoids=" << (all_avoided ? "true" : "false") << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced binary trees in the Tamari lattice: enumeration, "
               "verification, counting series, DOT export"};
  app.require_subcommand(1);

  // enum
  auto* c_enum = app.add_subcommand("enum", "List trees as JSON lines with a final count");
  int enum_nodes = 0;
  bool f_balanced = false, f_maximal = false, f_minimal = false;
  c_enum->add_option("--nodes", enum_nodes, "Internal node count")->required()
      ->check(CLI::Range(0, 64));
  c_enum->add_flag("--balanced", f_balanced, "Only balanced trees");
  c_enum->add_flag("--maximal", f_maximal, "Only maximal balanced trees");
  c_enum->add_flag("--minimal", f_minimal, "Only minimal balanced trees");

  // lattice
  auto* c_lattice = app.add_subcommand("lattice", "Write the Hasse diagram of the Tamari lattice");
  int lattice_nodes = 0;
  std::string lattice_dot;
  std::string lattice_labels = "json";
  bool lattice_force = false;
  c_lattice->add_option("--nodes", lattice_nodes, "Internal node count")->required()
      ->check(CLI::Range(0, 64));
  c_lattice->add_option("--dot", lattice_dot, "Output DOT file")->required();
  c_lattice->add_option("--labels", lattice_labels, "Node labels: json|index")
      ->check(CLI::IsMember({"json", "index"}));
  c_lattice->add_flag("--force", lattice_force, "Allow sizes above the resource bound");

  // balanced-poset
  auto* c_bposet = app.add_subcommand("balanced-poset",
                                      "Write the Hasse diagram of the balanced trees");
  int bposet_nodes = 0;
  std::string bposet_dot;
  std::string bposet_labels = "json";
  c_bposet->add_option("--nodes", bposet_nodes, "Internal node count")->required()
      ->check(CLI::Range(0, 64));
  c_bposet->add_option("--dot", bposet_dot, "Output DOT file")->required();
  c_bposet->add_option("--labels", bposet_labels, "Node labels: json|index")
      ->check(CLI::IsMember({"json", "index"}));

  // interval
  auto* c_interval = app.add_subcommand("interval",
                                        "Elements of [lower, upper] and the hypercube verdict");
  std::string iv_lower, iv_upper, iv_dot;
  std::string iv_labels = "json";
  c_interval->add_option("--lower", iv_lower, "Lower tree, JSON")->required();
  c_interval->add_option("--upper", iv_upper, "Upper tree, JSON")->required();
  c_interval->add_option("--dot", iv_dot, "Optional DOT file");
  c_interval->add_option("--labels", iv_labels, "Node labels: json|index")
      ->check(CLI::IsMember({"json", "index"}));

  // verify-closure
  auto* c_closure = app.add_subcommand("verify-closure",
                                       "Check balanced-interval closure for all sizes up to a bound");
  int closure_max = 0;
  bool closure_serial = false;
  c_closure->add_option("--max-nodes", closure_max, "Largest size checked")->required()
      ->check(CLI::Range(0, 16));
  c_closure->add_flag("--serial", closure_serial, "Use the serial reference kernel");

  // hypercube-sweep
  auto* c_hyper = app.add_subcommand("hypercube-sweep",
                                     "Check the hypercube isomorphism of every balanced interval");
  int hyper_max = 0;
  bool hyper_serial = false;
  c_hyper->add_option("--max-nodes", hyper_max, "Largest size checked")->required()
      ->check(CLI::Range(0, 16));
  c_hyper->add_flag("--serial", hyper_serial, "Use the serial reference kernel");

  // series
  auto* c_series = app.add_subcommand("series", "Counting series by number of leaves");
  std::string series_which;
  int series_degree = 0;
  bool series_csv = false;
  std::vector<std::string> series_subst;
  c_series->add_option("--which", series_which,
                       "balanced|maximal|intervals|maximal-intervals");
  c_series->add_option("--degree", series_degree, "Number of coefficients")->required()
      ->check(CLI::Range(1, 64));
  c_series->add_flag("--csv", series_csv, "CSV output (header leaves,count)");
  c_series->add_option("--subst", series_subst,
                       "Custom substitution polynomial, one per variable in x,y,z,t "
                       "(e.g. --subst \"x^2 + 2*x*y\" --subst x); seed is x");

  // generate
  auto* c_generate = app.add_subcommand("generate", "Exhaustive synchronous-grammar derivations");
  std::string gen_grammar;
  int gen_steps = 0;
  bool gen_force = false;
  c_generate->add_option("--grammar", gen_grammar,
                         "balanced|maximal|intervals|maximal-intervals")->required();
  c_generate->add_option("--steps", gen_steps, "Number of synchronous steps")->required()
      ->check(CLI::Range(0, 8));
  c_generate->add_flag("--force", gen_force, "Allow step counts above the resource bound");

  // patterns
  auto* c_patterns = app.add_subcommand("patterns", "Pattern occurrence and avoidance");
  std::string pat_tree, pat_avoid;
  c_patterns->add_option("--tree", pat_tree, "Tree, JSON")->required();
  c_patterns->add_option("--avoid", pat_avoid,
                         "Patterns separated by ';', e.g. \"(-1 L:(-1)); (-1 L:(0))\"")
      ->required();

  std::vector<std::string> argv_copy = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("tamari");
    for (const std::string& a : argv_copy) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*c_enum) {
      if (f_balanced + f_maximal + f_minimal > 1) {
        err << "enum: --balanced/--maximal/--minimal are mutually exclusive\n";
        return 2;
      }
      std::string filter = f_balanced ? "balanced" : f_maximal ? "maximal"
                                      : f_minimal  ? "minimal"
                                                   : "";
      if (filter.empty() && enum_nodes > kLatticeNodeCap) {
        err << "enum: full enumeration beyond " << kLatticeNodeCap
            << " nodes is refused (Catalan growth)\n";
        return 2;
      }
      return cmd_enum(enum_nodes, filter, out);
    }
    if (*c_lattice) {
      if (lattice_nodes > kLatticeNodeCap && !lattice_force) {
        err << "lattice: " << lattice_nodes << " nodes exceeds the bound of " << kLatticeNodeCap
            << " (Catalan growth); pass --force to proceed\n";
        return 2;
      }
      TamariPoset poset = build_poset(lattice_nodes);
      DotLabels labels = lattice_labels == "index" ? DotLabels::index : DotLabels::json;
      write_file(lattice_dot, to_dot(poset, labels));
      if (labels == DotLabels::index)
        write_file(lattice_dot + ".map.tsv", dot_sidecar(poset.elements));
      out << "elements=" << poset.elements.size() << " covers=" << poset.covers.size() << '\n';
      return 0;
    }
    if (*c_bposet) {
      BalancedPoset poset = balanced_subposet(bposet_nodes);
      DotLabels labels = bposet_labels == "index" ? DotLabels::index : DotLabels::json;
      TamariPoset view;
      view.nodes = poset.nodes;
      view.elements = poset.elements;
      view.covers = poset.covers;
      write_file(bposet_dot, to_dot(view, labels));
      if (labels == DotLabels::index)
        write_file(bposet_dot + ".map.tsv", dot_sidecar(poset.elements));
      out << "elements=" << poset.elements.size() << " covers=" << poset.covers.size() << '\n';
      return 0;
    }
    if (*c_interval) {
      DotLabels labels = iv_labels == "index" ? DotLabels::index : DotLabels::json;
      return cmd_interval(iv_lower, iv_upper, iv_dot, labels, out);
    }
    if (*c_closure) {
      auto rows = verify_closure_upto(closure_max,
                                      closure_serial ? Exec::serial : Exec::parallel);
      for (const SweepRow& row : rows) out << format_row(row) << '\n';
      return all_pass(rows) ? 0 : 1;
    }
    if (*c_hyper) {
      auto rows = verify_hypercubes_upto(hyper_max,
                                         hyper_serial ? Exec::serial : Exec::parallel);
      for (const SweepRow& row : rows) out << format_row(row) << '\n';
      return all_pass(rows) ? 0 : 1;
    }
    if (*c_series) {
      if (!series_subst.empty()) {
        int arity = static_cast<int>(series_subst.size());
        if (arity > kMaxVars) {
          err << "series: at most 4 substitution polynomials\n";
          return 2;
        }
        std::vector<Polynomial> sigma;
        for (const std::string& s : series_subst) sigma.push_back(Polynomial::parse(s, arity));
        FunctionalEquation eq(std::move(sigma), Polynomial::variable(arity, 0));
        return cmd_series(eq, series_degree, series_csv, out);
      }
      if (series_which.empty()) {
        err << "series: either --which or --subst is required\n";
        return 2;
      }
      return cmd_series(builtin_equation(parse_family(series_which)), series_degree, series_csv,
                        out);
    }
    if (*c_generate) {
      if (gen_steps > kGenerateStepCap && !gen_force) {
        err << "generate: " << gen_steps << " steps exceeds the bound of " << kGenerateStepCap
            << "; pass --force to proceed\n";
        return 2;
      }
      return cmd_generate(parse_family(gen_grammar), gen_steps, out);
    }
    if (*c_patterns) return cmd_patterns(pat_tree, pat_avoid, out);
  } catch (const CLI::Error& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "no subcommand selected\n";
  return 2;
}

}  // namespace tamari
