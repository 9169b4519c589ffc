#pragma once

// Serializable reports for the command-line surface and the verification suites.
// Exact values are rendered as decimal strings; key order is fixed so that output is
// byte-stable for identical inputs.

#include "klbraid/graph.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace klb {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  bool timing = false;  // include wall-clock milliseconds (breaks byte stability)
};

struct Report {
  Json doc;
  std::string csv;             // tabular view; empty when the command has none
  std::optional<bool> passed;  // set by commands that verify something
};

Report report_kl_braid(int n, const ReportOptions& opts = {});
/// KL polynomial of gamma, or of cone_extend(gamma, *cone) when a cone size is given.
Report report_kl_graph(const Graph& gamma, std::optional<int> cone, const ReportOptions& opts = {});
Report report_eqkl(int n, const ReportOptions& opts = {});
/// E_1 page and Euler identity for the braid matroid, or for cone_extend(*gamma, n).
Report report_e1(int i, int n, const Graph* gamma, const ReportOptions& opts = {});
Report report_genfun(int i, int max_n, bool fit, bool asymptotics, const ReportOptions& opts = {});

/// Suite names accepted by report_verify.
const std::vector<std::string>& verify_suite_names();
/// Runs one suite (or "all"); passed is false iff some assertion failed.
/// Throws std::invalid_argument for an unknown suite name.
Report report_verify(const std::string& suite, const ReportOptions& opts = {});

}  // namespace klb
