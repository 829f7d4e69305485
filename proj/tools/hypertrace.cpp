// hypertrace command line: analyze instances, generate them, benchmark the peels.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypertrace/hypertrace.hpp"

namespace ht = hypertrace;

namespace {

enum exit_status { ok = 0, usage = 1, check_failed = 2, budget = 3 };

struct Common {
  std::string input;
  std::string out;
  std::uint64_t budget_subsets = ht::Budget{}.subsets;
  std::size_t exact_limit = ht::default_exact_limit;
  std::size_t j_max = 6;
  std::size_t k_max = 12;
  bool allow_multi = false;
  bool json = false;
  bool text = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("input", c.input, "instance file ('-' for stdin)")->required();
  sub->add_option("--out,-o", c.out, "write the report here instead of stdout");
  sub->add_option("--budget-subsets", c.budget_subsets, "cap on subsets examined by each exhaustive search")
      ->check(CLI::PositiveNumber);
  sub->add_option("--exact-limit", c.exact_limit, "largest n for exact reduced degeneracy");
  sub->add_option("--j-max", c.j_max, "largest j tried in the j-indexed bounds");
  sub->add_option("--k-max", c.k_max, "largest k profiled for the trace function");
  sub->add_flag("--allow-multi", c.allow_multi, "keep repeated hyperedges");
  auto* j = sub->add_flag("--json", c.json, "JSON report (default)");
  auto* t = sub->add_flag("--text", c.text, "plain-text report");
  j->excludes(t);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw ht::invalid_input("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ht::Instance load(const Common& c) {
  const std::string text = read_input(c.input);
  std::istringstream probe(text);
  ht::Instance inst{ht::Graph{}, c.input, std::nullopt, {}};
  if (ht::detect_format(probe) == ht::InstanceFormat::graph) {
    auto p = ht::parse_graph(text);
    inst.data = std::move(p.graph);
    inst.warnings = std::move(p.warnings);
  } else {
    auto p = ht::parse_hypergraph(text, c.allow_multi);
    inst.data = std::move(p.hypergraph);
    inst.warnings = std::move(p.warnings);
  }
  return inst;
}

void emit(const std::string& s, const std::string& out) {
  if (out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ht::invalid_input("cannot write " + out);
  f << s;
}

int report(const Common& c, ht::Analyses a, bool graph_only) {
  const ht::Instance inst = load(c);
  if (graph_only && !inst.is_graph()) throw ht::invalid_input("this command needs a graph ('p graph') input");
  for (const auto& w : inst.warnings) std::cerr << "warning: " << w << '\n';
  ht::ReportOptions opt;
  opt.analyses = a;
  opt.budget.subsets = c.budget_subsets;
  opt.exact_limit = c.exact_limit;
  opt.j_max = c.j_max;
  opt.k_max = c.k_max;
  const ht::AnalysisReport r = ht::run_report(inst, opt);
  emit(c.text ? ht::render_text(r) : ht::json(r).dump(2) + "\n", c.out);
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypertrace: degeneracy, trace function, VC dimension and domination bounds for hypergraphs"};
  app.set_version_flag("--version", std::string(ht::hypertrace_version));
  app.require_subcommand(1);

  Common analyze_opts, vc_opts, dt_opts, dom_opts, tree_opts;
  auto* analyze = app.add_subcommand("analyze", "run every analysis that applies to the input");
  add_common(analyze, analyze_opts);
  auto* vc = app.add_subcommand("vc", "exact VC dimension");
  add_common(vc, vc_opts);
  auto* dt = app.add_subcommand("dt", "minimum distinguishing transversal and its lower bounds");
  add_common(dt, dt_opts);
  auto* dominate = app.add_subcommand("dominate", "LD, ID and OLD numbers of a graph with lower bounds");
  add_common(dominate, dom_opts);
  auto* tree = app.add_subcommand("tree-check", "tree degeneracy certificates and closed-form bounds");
  add_common(tree, tree_opts);

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  std::string kind;
  std::size_t n = 10, m = 10, max_edge = 3;
  double p = 0.5;
  std::uint64_t seed = 1;
  bool multi = false;
  std::string gen_out;
  gen->add_option("kind", kind, "tree, gnp or hypergraph")->required()->check(CLI::IsMember({"tree", "gnp", "hypergraph"}));
  gen->add_option("--n", n, "vertices");
  gen->add_option("--m", m, "edges (hypergraph)");
  gen->add_option("--p", p, "edge probability (gnp)");
  gen->add_option("--max-edge", max_edge, "largest edge size (hypergraph)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_flag("--allow-multi", multi, "allow repeated edges (hypergraph)");
  gen->add_option("--out,-o", gen_out, "output file");

  auto* bench = app.add_subcommand("bench", "time the peels or the VC search; CSV on stdout");
  std::string suite = "peel";
  std::vector<std::size_t> sizes;
  std::uint64_t bench_seed = 1;
  ht::BenchOptions bopt;
  std::string bench_out;
  bench->add_option("--suite", suite, "peel or vc")->check(CLI::IsMember({"peel", "vc"}));
  bench->add_option("--sizes", sizes, "vertex counts");
  bench->add_option("--seed", bench_seed, "base seed");
  bench->add_option("--reps", bopt.repetitions, "repetitions; the minimum is reported");
  bench->add_option("--budget-subsets", bopt.budget.subsets, "subset cap for the vc suite")->check(CLI::PositiveNumber);
  bench->add_option("--out,-o", bench_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    if (*analyze) return report(analyze_opts, {}, false);
    if (*vc) return report(vc_opts, {false, false, true, false, false, false}, false);
    if (*dt) return report(dt_opts, {false, false, false, true, false, false}, false);
    if (*dominate) return report(dom_opts, {false, false, false, false, true, false}, true);
    if (*tree) {
      const ht::Instance inst = load(tree_opts);
      if (!inst.is_graph() || !ht::is_tree(std::get<ht::Graph>(inst.data)))
        throw ht::invalid_input("tree-check needs a tree");
      return report(tree_opts, {false, false, false, false, true, true}, true);
    }
    if (*gen) {
      std::string text;
      if (kind == "tree")
        text = ht::serialize_graph(ht::random_tree(n, seed));
      else if (kind == "gnp")
        text = ht::serialize_graph(ht::random_gnp(n, p, seed));
      else
        text = ht::serialize_hypergraph(ht::random_hypergraph(n, m, max_edge, seed, !multi));
      emit(text, gen_out);
      return ok;
    }
    if (*bench) {
      const auto s = suite == "peel" ? ht::BenchSuite::peel : ht::BenchSuite::vc;
      if (sizes.empty()) sizes = ht::default_bench_sizes(s);
      const auto rows = ht::run_bench(s, sizes, bench_seed, bopt);
      emit(ht::bench_csv(rows), bench_out);
      for (const auto& [name, slope] : ht::scaling_exponents(rows))
        std::cerr << name << ": time ~ (sum of edge sizes)^" << slope << '\n';
      return ok;
    }
  } catch (const ht::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return budget;
  } catch (const ht::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}
