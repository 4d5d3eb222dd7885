#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mwdp/apps/color.hpp"
#include "mwdp/apps/digraph_apps.hpp"
#include "mwdp/apps/game.hpp"
#include "mwdp/apps/mad.hpp"
#include "mwdp/classify.hpp"
#include "mwdp/cut_graph.hpp"
#include "mwdp/io.hpp"
#include "mwdp/reductions/hyp2col.hpp"
#include "mwdp/reductions/linearize.hpp"
#include "mwdp/reductions/maxcut.hpp"
#include "mwdp/reductions/symmetrize.hpp"
#include "mwdp/solve.hpp"

namespace {

using mwdp::Error;
using mwdp::ErrorCode;
using mwdp::io::Json;

struct Globals {
  std::size_t cap = mwdp::default_cap();
  unsigned threads = 1;
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::HardInstanceTooLarge:
    case ErrorCode::TooLarge: return 3;
    case ErrorCode::Internal: return 1;
    default: return 2;
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json sides_json(const mwdp::Partition& p, const std::vector<std::string>& names) {
  Json x1 = Json::array(), x2 = Json::array();
  for (std::size_t i = 0; i < names.size(); ++i)
    (p.side(i) == mwdp::Side::X1 ? x1 : x2).push_back(names[i]);
  return Json{{"x1", std::move(x1)}, {"x2", std::move(x2)}};
}

// ---- classify / solve ----------------------------------------------------

void run_classify(const std::string& in) {
  const mwdp::Instance inst = mwdp::io::to_instance(mwdp::io::read_file(in));
  emit(mwdp::io::from_verdict(mwdp::classify(inst.family())));
}

struct SolveArgs {
  std::string in;
  std::string method = "auto";
  std::string cutgraph;
  std::uint64_t seed = 0;
  std::size_t restarts = 16;
};

void run_solve(const SolveArgs& a, const Globals& g) {
  const mwdp::Instance inst = mwdp::io::to_instance(mwdp::io::read_file(a.in));
  if (!a.cutgraph.empty()) {
    for (const auto& [id, m] : inst.family())
      if (!m.property_a())
        throw Error(ErrorCode::PreconditionViolated,
                    "--emit-cutgraph needs Property (a); matrix '" + id + "' violates it");
    mwdp::io::write_file(a.cutgraph, mwdp::io::from_cut_graph(mwdp::build_cut_graph(inst)));
  }
  mwdp::Solution s;
  if (a.method == "auto") {
    s = mwdp::solve(inst, mwdp::SolveOptions{g.cap, g.threads, a.seed, a.restarts});
  } else if (a.method == "mincut") {
    s = mwdp::solve_mincut(inst);
  } else if (a.method == "trivial-b") {
    s = mwdp::solve_trivial_b(inst);
  } else if (a.method == "trivial-c") {
    s = mwdp::solve_trivial_c(inst);
  } else if (a.method == "brute") {
    s = mwdp::brute_force(inst, mwdp::BruteForceOptions{g.cap, g.threads});
  } else {
    s = mwdp::local_search(inst, mwdp::LocalSearchOptions{a.seed, a.restarts, g.threads});
  }
  emit(mwdp::io::from_solution(inst, s));
}

// ---- reduce ----------------------------------------------------------------

struct ReduceArgs {
  std::string in;
  std::string out;
  std::string report;
  std::string matrix;
  std::string m;
  std::string r;
};

/// Writes the produced object to -o, or inlines it in the summary.
void finish_reduce(const ReduceArgs& a, const char* key, Json produced, Json summary) {
  if (a.out.empty()) {
    summary[key] = std::move(produced);
  } else {
    mwdp::io::write_file(a.out, produced);
    summary["output"] = a.out;
  }
  emit(summary);
}

const char* const kHypNames[4] = {"s0", "s1", "s2", "s3"};
const char* const kCutNames[4] = {"s_A", "s_B", "s_C", "s_D"};

void run_hyp2col(const ReduceArgs& a) {
  const mwdp::Hypergraph3 h = mwdp::io::to_hypergraph(mwdp::io::read_file(a.in));
  const mwdp::Matrix2x2 m = mwdp::io::parse_matrix(a.matrix, "--matrix");
  const mwdp::HypergraphReduction red = mwdp::hypergraph_to_mwop(h, m);
  Json report = mwdp::io::from_report(red.report, kHypNames, "theta");
  report["threshold"] = mwdp::io::from_rational(red.threshold);
  if (!a.report.empty()) mwdp::io::write_file(a.report, report);
  finish_reduce(a, "instance", mwdp::io::from_instance(red.instance),
                Json{{"vertices", red.instance.num_vertices()},
                     {"arcs", red.instance.arcs().size()},
                     {"report", report}});
}

void run_maxcut(const ReduceArgs& a, bool bc) {
  const mwdp::Graph graph = mwdp::io::to_graph(mwdp::io::read_file(a.in));
  const mwdp::Matrix2x2 m = mwdp::io::parse_matrix(a.m, "--m");
  const mwdp::Matrix2x2 r = mwdp::io::parse_matrix(a.r, "--r");
  const mwdp::MaxcutReduction red =
      bc ? mwdp::maxcut_to_mwop_bc(graph, m, r) : mwdp::maxcut_to_mwop_ba(graph, m, r);
  Json report = mwdp::io::from_report(red.report, kCutNames, "epsilon");
  report["gadget_case"] = red.gadget_case;
  report["graph_vertices"] = red.graph_vertices;
  if (!a.report.empty()) mwdp::io::write_file(a.report, report);
  finish_reduce(a, "instance", mwdp::io::from_instance(red.instance),
                Json{{"vertices", red.instance.num_vertices()},
                     {"arcs", red.instance.arcs().size()},
                     {"report", report}});
}

void run_symmetrize(const ReduceArgs& a) {
  const mwdp::Instance inst = mwdp::io::to_instance(mwdp::io::read_file(a.in));
  const mwdp::Instance out = mwdp::mwop_to_mwsdp(inst);
  finish_reduce(a, "instance", mwdp::io::from_instance(out),
                Json{{"vertices", out.num_vertices()}, {"arcs", out.arcs().size()}});
}

void run_linearize(const ReduceArgs& a) {
  const mwdp::Hypergraph3 h = mwdp::io::to_hypergraph(mwdp::io::read_file(a.in));
  const mwdp::Hypergraph3 out = mwdp::make_linear(h);
  finish_reduce(a, "hypergraph", mwdp::io::from_hypergraph(out),
                Json{{"vertices", out.vertices.size()}, {"edges", out.edges.size()}});
}

// ---- app -------------------------------------------------------------------

struct AppArgs {
  std::string in;
  std::string k;
  std::string s;
  std::string t;
};

void run_game(const AppArgs& a, const Globals& g) {
  const mwdp::PolymatrixGame game = mwdp::io::to_game(mwdp::io::read_file(a.in));
  mwdp::SolveOptions opts;
  opts.cap = g.cap;
  opts.threads = g.threads;
  const mwdp::WelfareResult res = mwdp::max_welfare(game, opts);
  Json actions = Json::object();
  for (std::size_t i = 0; i < game.players.size(); ++i)
    actions[game.players[i]] = res.profile.side(i) == mwdp::Side::X1 ? 1 : 2;
  emit(Json{{"case", mwdp::to_string(res.verdict.kase)},
            {"method", mwdp::to_string(res.method)},
            {"welfare", mwdp::io::from_rational(res.welfare)},
            {"actions", std::move(actions)}});
}

void run_mad(const AppArgs& a) {
  const mwdp::Graph graph = mwdp::io::to_graph(mwdp::io::read_file(a.in));
  if (!a.k.empty()) {
    const mwdp::Rational k = mwdp::io::to_rational(Json(a.k), "--k");
    const mwdp::MadDecision d = mwdp::mad_decide(graph, k);
    emit(Json{{"k", mwdp::io::from_rational(k)},
              {"answer", d.answer},
              {"witness", mwdp::io::from_ids(d.witness)}});
    return;
  }
  const mwdp::MadResult r = mwdp::mad_exact(graph);
  emit(Json{{"mad", mwdp::io::from_rational(r.mad)}, {"witness", mwdp::io::from_ids(r.witness)}});
}

void run_colorpart(const AppArgs& a) {
  const mwdp::ColoredGraph graph = mwdp::io::to_colored_graph(mwdp::io::read_file(a.in));
  const mwdp::ColorPartResult r = mwdp::two_color_partition(graph);
  Json j{{"value", mwdp::io::from_rational(r.value)}};
  j.update(sides_json(r.partition, graph.vertices));
  emit(j);
}

void run_colordiff(const AppArgs& a, const Globals& g) {
  const mwdp::ColoredGraph graph = mwdp::io::to_colored_graph(mwdp::io::read_file(a.in));
  mwdp::BruteForceOptions opts;
  opts.cap = g.cap;
  opts.threads = g.threads;
  const mwdp::ColorDiffResult r = mwdp::two_color_difference(graph, opts);
  emit(Json{{"value", mwdp::io::from_rational(r.value)},
            {"subset", mwdp::io::from_ids(r.subset)}});
}

void run_balance(const AppArgs& a) {
  const mwdp::WeightedDigraph d = mwdp::io::to_digraph(mwdp::io::read_file(a.in));
  const mwdp::BalanceResult r = mwdp::balance_defect(d);
  Json j{{"r_plus", mwdp::io::from_rational(r.r_plus)}};
  j.update(sides_json(r.partition, d.vertices));
  emit(j);
}

void run_stcut(const AppArgs& a) {
  const mwdp::WeightedDigraph d = mwdp::io::to_digraph(mwdp::io::read_file(a.in));
  const mwdp::StCutResult r = mwdp::min_st_cut_via_mwdp(d, a.s, a.t);
  Json j{{"cut_size", r.cut_size}};
  j.update(sides_json(r.partition, d.vertices));
  emit(j);
}

void run_dicut(const AppArgs& a, const Globals& g) {
  const mwdp::WeightedDigraph d = mwdp::io::to_digraph(mwdp::io::read_file(a.in));
  mwdp::BruteForceOptions opts;
  opts.cap = g.cap;
  opts.threads = g.threads;
  const mwdp::DicutResult r = mwdp::max_weighted_dicut(d, opts);
  Json j{{"value", mwdp::io::from_rational(r.value)}};
  j.update(sides_json(r.partition, d.vertices));
  emit(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver toolkit for maximum weighted digraph partition"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--cap", globals.cap, "Brute-force vertex cap (default 26, or $MWDP_CAP)");
  app.add_option("--threads", globals.threads, "Worker threads for exhaustive search")
      ->check(CLI::Range(1U, 1024U));

  std::string command;
  std::string input;
  std::function<void()> action;

  auto* classify = app.add_subcommand("classify", "Classify an instance's matrix family");
  classify->add_option("-i,--input", input, "Instance JSON")->required();
  classify->callback([&] {
    command = "classify";
    action = [&] { run_classify(input); };
  });

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Find a maximum-weight partition");
  solve->add_option("-i,--input", solve_args.in, "Instance JSON")->required();
  solve->add_option("--method", solve_args.method, "Solver")
      ->check(CLI::IsMember({"auto", "mincut", "trivial-b", "trivial-c", "brute", "local"}));
  solve->add_option("--emit-cutgraph", solve_args.cutgraph, "Write the cut graph H here");
  solve->add_option("--seed", solve_args.seed, "Seed for local search");
  solve->add_option("--restarts", solve_args.restarts, "Local search restarts");
  solve->callback([&] {
    command = "solve";
    input = solve_args.in;
    action = [&] { run_solve(solve_args, globals); };
  });

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Emit a hardness reduction instance");
  reduce->require_subcommand(1);
  auto add_io = [&](CLI::App* sub, bool report) {
    sub->add_option("-i,--input", reduce_args.in, "Input JSON")->required();
    sub->add_option("-o,--output", reduce_args.out, "Output JSON (stdout if omitted)");
    if (report) sub->add_option("--report", reduce_args.report, "Write the gadget report here");
  };
  auto on_reduce = [&](CLI::App* sub, std::function<void()> fn) {
    sub->callback([&, sub, fn] {
      command = "reduce " + sub->get_name();
      input = reduce_args.in;
      action = fn;
    });
  };

  auto* hyp2col = reduce->add_subcommand("hyp2col", "Hypergraph 2-coloring to MWOP");
  add_io(hyp2col, true);
  hyp2col->add_option("--matrix", reduce_args.matrix, "Matrix violating (a)")->required();
  on_reduce(hyp2col, [&] { run_hyp2col(reduce_args); });

  for (const char* name : {"maxcut-bc", "maxcut-ba"}) {
    auto* sub = reduce->add_subcommand(name, "MaxCut to MWOP");
    add_io(sub, true);
    sub->add_option("--m", reduce_args.m, "Matrix M")->required();
    sub->add_option("--r", reduce_args.r, "Matrix R")->required();
    const bool bc = std::string(name) == "maxcut-bc";
    on_reduce(sub, [&, bc] { run_maxcut(reduce_args, bc); });
  }

  auto* symmetrize = reduce->add_subcommand("symmetrize", "MWOP to MWSDP");
  add_io(symmetrize, false);
  on_reduce(symmetrize, [&] { run_symmetrize(reduce_args); });

  auto* linearize = reduce->add_subcommand("linearize", "Make a 3-uniform hypergraph linear");
  add_io(linearize, false);
  on_reduce(linearize, [&] { run_linearize(reduce_args); });

  AppArgs app_args;
  auto* apps = app.add_subcommand("app", "Application adapters");
  apps->require_subcommand(1);
  auto add_app = [&](const char* name, const char* help,
                     std::function<void()> fn) -> CLI::App* {
    auto* sub = apps->add_subcommand(name, help);
    sub->add_option("-i,--input", app_args.in, "Input JSON")->required();
    sub->callback([&, sub, fn] {
      command = "app " + sub->get_name();
      input = app_args.in;
      action = fn;
    });
    return sub;
  };
  add_app("game", "Maximum welfare of a two-action polymatrix game",
          [&] { run_game(app_args, globals); });
  add_app("mad", "Maximum average degree", [&] { run_mad(app_args); })
      ->add_option("--k", app_args.k, "Decide whether mad > k instead");
  add_app("colorpart", "Best 2-color partition", [&] { run_colorpart(app_args); });
  add_app("colordiff", "Largest color-2 minus color-1 weight",
          [&] { run_colordiff(app_args, globals); });
  add_app("balance", "Balance defect of a weighted digraph", [&] { run_balance(app_args); });
  auto* stcut = add_app("stcut", "Minimum (s,t)-cut", [&] { run_stcut(app_args); });
  stcut->add_option("--s", app_args.s, "Source")->required();
  stcut->add_option("--t", app_args.t, "Sink")->required();
  add_app("dicut", "Maximum weighted directed cut", [&] { run_dicut(app_args, globals); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    action();
  } catch (const Error& e) {
    std::cerr << "mwdp " << command << ": " << input << ": " << mwdp::to_string(e.code())
              << ": " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "mwdp " << command << ": " << input << ": internal error: " << e.what()
              << '\n';
    return 1;
  }
  return 0;
}
