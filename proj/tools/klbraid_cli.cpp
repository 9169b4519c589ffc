// klbraid: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 verification failure (or internal error), 2 invalid input,
// infeasible bound or insufficient data.

#include "klbraid/klbraid.h"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

struct ContextDeleter {
  void operator()(klb_context* c) const { klb_context_free(c); }
};
struct GraphDeleter {
  void operator()(klb_graph* g) const { klb_graph_free(g); }
};
struct ReportDeleter {
  void operator()(klb_report* r) const { klb_report_free(r); }
};
using ContextPtr = std::unique_ptr<klb_context, ContextDeleter>;
using GraphPtr = std::unique_ptr<klb_graph, GraphDeleter>;
using ReportPtr = std::unique_ptr<klb_report, ReportDeleter>;

int exit_code_for(klb_status s) {
  switch (s) {
    case KLB_OK: return kExitOk;
    case KLB_INTERNAL_ERROR: return kExitFailed;
    default: return kExitInvalid;
  }
}

int report_error(klb_status s) {
  std::cerr << "klbraid: " << klb_status_name(s) << ": " << klb_last_error() << "\n";
  return exit_code_for(s);
}

std::optional<GraphPtr> load_graph(const std::string& path, int& code) {
  klb_graph* g = nullptr;
  const klb_status s = klb_graph_load(path.c_str(), &g);
  if (s != KLB_OK) {
    code = report_error(s);
    return std::nullopt;
  }
  return GraphPtr(g);
}

int emit(klb_status s, klb_report* raw, const std::string& format) {
  if (s != KLB_OK) return report_error(s);
  ReportPtr r(raw);
  if (format == "csv") {
    const std::string csv = klb_report_csv(r.get());
    if (csv.empty()) {
      std::cerr << "klbraid: this command has no tabular output; use --format json\n";
      return kExitInvalid;
    }
    std::cout << csv;
  } else {
    std::cout << klb_report_json(r.get()) << "\n";
  }
  return klb_report_passed(r.get()) == 0 ? kExitFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig polynomials of braid and cone-graph matroids"};
  app.require_subcommand(1);
  bool timing = false;
  std::string format = "json";
  app.add_flag("--timing", timing, "Include wall-clock timing in reports");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  int kl_n = 0, kl_cone = -1;
  std::string kl_graph;
  auto* kl = app.add_subcommand("kl", "KL polynomial of M_n or of a graph");
  auto* kl_n_opt = kl->add_option("--n", kl_n, "Braid matroid size");
  kl->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  auto* kl_graph_opt = kl->add_option("--graph", kl_graph, "Graph file (JSON or edge list)");
  kl->add_option("--cone", kl_cone, "Cone the graph with this many vertices")->needs(kl_graph_opt)->check(CLI::NonNegativeNumber);
  kl_n_opt->excludes(kl_graph_opt);

  int eq_n = 0;
  auto* eqkl = app.add_subcommand("eqkl", "Specht decomposition of the equivariant KL polynomial of M_n");
  eqkl->add_option("--n", eq_n, "Braid matroid size")->required();
  eqkl->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  int e1_i = 0, e1_n = 0;
  std::string e1_graph;
  auto* e1 = app.add_subcommand("e1", "E_1 page dimensions and Euler identity");
  e1->add_option("--i", e1_i, "Degree")->required();
  e1->add_option("--n", e1_n, "Size (number of cone vertices with --graph)")->required();
  e1->add_option("--graph", e1_graph, "Base graph for the relative version");
  e1->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  int gf_i = 0, gf_max = 0;
  bool gf_fit = false, gf_asym = false;
  auto* genfun = app.add_subcommand("genfun", "Sequence d_coeff(i, n), rational fit and asymptotics");
  genfun->add_option("--i", gf_i, "Degree")->required();
  genfun->add_option("--max-n", gf_max, "Last n")->required();
  genfun->add_flag("--fit", gf_fit, "Fit a rational generating function");
  genfun->add_flag("--asymptotics", gf_asym, "Report ratio diagnostics");
  genfun->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> suites;
  for (std::size_t k = 0; k < klb_verify_suite_count(); ++k) suites.emplace_back(klb_verify_suite_name(k));
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  klb_context* raw_ctx = nullptr;
  const char* cache = std::getenv("KL_CACHE_DIR");
  if (const klb_status s = klb_context_new(cache, &raw_ctx); s != KLB_OK) return report_error(s);
  ContextPtr ctx(raw_ctx);
  klb_context_set_timing(ctx.get(), timing ? 1 : 0);

  int code = kExitOk;
  klb_report* r = nullptr;
  // r is filled by the command, so read it only after the call returns
  auto run = [&](klb_status s) { return emit(s, r, format); };
  if (kl->parsed()) {
    if (kl_graph.empty() && kl_n_opt->count() == 0) {
      std::cerr << "klbraid: kl needs --n or --graph\n";
      return kExitInvalid;
    }
    if (!kl_graph.empty()) {
      auto g = load_graph(kl_graph, code);
      if (!g) return code;
      code = run(klb_cmd_kl_graph(ctx.get(), g->get(), kl_cone, &r));
    } else {
      code = run(klb_cmd_kl_braid(ctx.get(), kl_n, &r));
    }
  } else if (eqkl->parsed()) {
    code = run(klb_cmd_eqkl(ctx.get(), eq_n, &r));
  } else if (e1->parsed()) {
    GraphPtr g;
    if (!e1_graph.empty()) {
      auto loaded = load_graph(e1_graph, code);
      if (!loaded) return code;
      g = std::move(*loaded);
    }
    code = run(klb_cmd_e1(ctx.get(), e1_i, e1_n, g.get(), &r));
  } else if (genfun->parsed()) {
    code = run(klb_cmd_genfun(ctx.get(), gf_i, gf_max, gf_fit ? 1 : 0, gf_asym ? 1 : 0, &r));
  } else if (verify->parsed()) {
    code = run(klb_cmd_verify(ctx.get(), suite.c_str(), &r));
  }

  if (const klb_status s = klb_context_save(ctx.get()); s != KLB_OK) {
    report_error(s);
    if (code == kExitOk) code = kExitInvalid;
  }
  return code;
}
