#include "klbraid/klbraid.h"

#include "klbraid/kl.hpp"
#include "klbraid/polyseries.hpp"
#include "klbraid/report.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

struct klb_context {
  std::optional<std::filesystem::path> cache_dir;
  klb::ReportOptions opts;
};

struct klb_graph {
  klb::Graph g;
};

struct klb_poly {
  std::vector<std::string> coeffs;
};

struct klb_report {
  std::string json;
  std::string csv;
  int passed = -1;
};

namespace {

thread_local std::string last_error;

klb_status fail(klb_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs body and maps exceptions onto status codes.
template <class F>
klb_status guarded(F&& body, klb_status invalid_as = KLB_INVALID_ARGUMENT) {
  try {
    last_error.clear();
    body();
    return KLB_OK;
  } catch (const klb::InsufficientDataError& e) {
    return fail(KLB_INSUFFICIENT_DATA, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(KLB_PARSE_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(invalid_as, e.what());
  } catch (const std::domain_error& e) {
    return fail(KLB_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(KLB_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(KLB_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(KLB_INTERNAL_ERROR, "unknown exception");
  }
}

klb_status null_arg(const char* what) { return fail(KLB_INVALID_ARGUMENT, std::string(what) + " is NULL"); }

klb_poly* make_poly(const klb::ZPoly& p) {
  auto* out = new klb_poly;
  for (const auto& c : p.coeffs()) out->coeffs.push_back(c.get_str());
  return out;
}

klb_report* make_report(const klb::Report& r) {
  auto* out = new klb_report;
  out->json = r.doc.dump(2);
  out->csv = r.csv;
  out->passed = r.passed ? (*r.passed ? 1 : 0) : -1;
  return out;
}

}  // namespace

extern "C" {

const char* klb_last_error(void) { return last_error.c_str(); }

const char* klb_status_name(klb_status s) {
  switch (s) {
    case KLB_OK: return "ok";
    case KLB_INVALID_ARGUMENT: return "invalid argument";
    case KLB_INSUFFICIENT_DATA: return "insufficient data";
    case KLB_IO_ERROR: return "i/o error";
    case KLB_PARSE_ERROR: return "parse error";
    case KLB_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

klb_status klb_context_new(const char* cache_dir, klb_context** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  auto ctx = std::make_unique<klb_context>();
  if (cache_dir && *cache_dir) {
    ctx->cache_dir = std::filesystem::path(cache_dir);
    std::error_code ec;
    std::filesystem::create_directories(*ctx->cache_dir, ec);
    if (ec) return fail(KLB_IO_ERROR, "cannot create cache directory " + std::string(cache_dir) + ": " + ec.message());
    const klb_status s = guarded([&] { klb::default_kl_table().load(*ctx->cache_dir); }, KLB_PARSE_ERROR);
    if (s != KLB_OK) return s;
  }
  *out = ctx.release();
  return KLB_OK;
}

klb_status klb_context_save(klb_context* ctx) {
  if (!ctx) return null_arg("ctx");
  if (!ctx->cache_dir) return KLB_OK;
  try {
    klb::default_kl_table().save(*ctx->cache_dir);
  } catch (const std::exception& e) {
    return fail(KLB_IO_ERROR, e.what());
  }
  return KLB_OK;
}

void klb_context_free(klb_context* ctx) {
  if (!ctx) return;
  klb_context_save(ctx);
  delete ctx;
}

klb_status klb_context_set_timing(klb_context* ctx, int enabled) {
  if (!ctx) return null_arg("ctx");
  ctx->opts.timing = enabled != 0;
  return KLB_OK;
}

klb_status klb_graph_new(int num_vertices, klb_graph** out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = new klb_graph{klb::Graph(num_vertices)}; });
}

klb_status klb_graph_add_edge(klb_graph* g, int u, int v) {
  if (!g) return null_arg("graph");
  return guarded([&] { g->g.add_edge(u, v); });
}

klb_status klb_graph_parse(const char* text, klb_graph** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return guarded([&] { *out = new klb_graph{klb::parse_graph(text)}; }, KLB_PARSE_ERROR);
}

klb_status klb_graph_load(const char* path, klb_graph** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  std::ifstream in(path);
  if (!in) return fail(KLB_IO_ERROR, std::string("cannot open graph file: ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return guarded([&] { *out = new klb_graph{klb::parse_graph(buf.str())}; }, KLB_PARSE_ERROR);
}

klb_status klb_graph_cone(const klb_graph* g, int n, klb_graph** out) {
  if (!g) return null_arg("graph");
  if (!out) return null_arg("out");
  if (n < 0) return fail(KLB_INVALID_ARGUMENT, "cone size must be nonnegative");
  return guarded([&] { *out = new klb_graph{klb::cone_extend(g->g, n)}; });
}

int klb_graph_num_vertices(const klb_graph* g) { return g ? g->g.num_vertices() : -1; }

void klb_graph_free(klb_graph* g) { delete g; }

klb_status klb_kl_braid(klb_context* ctx, int n, klb_poly** out) {
  if (!ctx) return null_arg("ctx");
  if (!out) return null_arg("out");
  return guarded([&] { *out = make_poly(klb::kl_braid(n)); });
}

klb_status klb_kl_graph(klb_context* ctx, const klb_graph* g, klb_poly** out) {
  if (!ctx) return null_arg("ctx");
  if (!g) return null_arg("graph");
  if (!out) return null_arg("out");
  return guarded([&] { *out = make_poly(klb::kl_graphic(g->g)); });
}

size_t klb_poly_num_coeffs(const klb_poly* p) { return p ? p->coeffs.size() : 0; }

const char* klb_poly_coeff(const klb_poly* p, size_t i) {
  static const char* const zero = "0";
  if (!p || i >= p->coeffs.size()) return zero;
  return p->coeffs[i].c_str();
}

void klb_poly_free(klb_poly* p) { delete p; }

klb_status klb_cmd_kl_braid(klb_context* ctx, int n, klb_report** out) {
  if (!ctx) return null_arg("ctx");
  if (!out) return null_arg("out");
  return guarded([&] { *out = make_report(klb::report_kl_braid(n, ctx->opts)); });
}

klb_status klb_cmd_kl_graph(klb_context* ctx, const klb_graph* g, int cone, klb_report** out) {
  if (!ctx) return null_arg("ctx");
  if (!g) return null_arg("graph");
  if (!out) return null_arg("out");
  const std::optional<int> c = cone < 0 ? std::nullopt : std::optional<int>(cone);
  return guarded([&] { *out = make_report(klb::report_kl_graph(g->g, c, ctx->opts)); });
}

klb_status klb_cmd_eqkl(klb_context* ctx, int n, klb_report** out) {
  if (!ctx) return null_arg("ctx");
  if (!out) return null_arg("out");
  return guarded([&] { *out = make_report(klb::report_eqkl(n, ctx->opts)); });
}

klb_status klb_cmd_e1(klb_context* ctx, int i, int n, const klb_graph* g, klb_report** out) {
  if (!ctx) return null_arg("ctx");
  if (!out) return null_arg("out");
  return guarded([&] { *out = make_report(klb::report_e1(i, n, g ? &g->g : nullptr, ctx->opts)); });
}

klb_status klb_cmd_genfun(klb_context* ctx, int i, int max_n, int fit, int asymptotics, klb_report** out) {
  if (!ctx) return null_arg("ctx");
  if (!out) return null_arg("out");
  return guarded([&] { *out = make_report(klb::report_genfun(i, max_n, fit != 0, asymptotics != 0, ctx->opts)); });
}

klb_status klb_cmd_verify(klb_context* ctx, const char* suite, klb_report** out) {
  if (!ctx) return null_arg("ctx");
  if (!suite) return null_arg("suite");
  if (!out) return null_arg("out");
  return guarded([&] { *out = make_report(klb::report_verify(suite, ctx->opts)); });
}

const char* klb_report_json(const klb_report* r) { return r ? r->json.c_str() : ""; }
const char* klb_report_csv(const klb_report* r) { return r ? r->csv.c_str() : ""; }
int klb_report_passed(const klb_report* r) { return r ? r->passed : -1; }
void klb_report_free(klb_report* r) { delete r; }

size_t klb_verify_suite_count(void) { return klb::verify_suite_names().size(); }

const char* klb_verify_suite_name(size_t i) {
  const auto& names = klb::verify_suite_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

}  // extern "C"
