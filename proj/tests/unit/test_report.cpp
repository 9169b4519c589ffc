#include "klbraid/report.hpp"

#include "klbraid/polyseries.hpp"

#include "doctest.h"

using namespace klb;

namespace {

BigRat rat(const Json& j) { return BigRat(j.get<std::string>()); }

}  // namespace

TEST_CASE("reports are byte-stable without timing") {
  CHECK(report_kl_braid(9).doc.dump() == report_kl_braid(9).doc.dump());
  CHECK(report_eqkl(6).doc.dump() == report_eqkl(6).doc.dump());
  CHECK(report_e1(2, 8, nullptr).csv == report_e1(2, 8, nullptr).csv);
  CHECK(report_genfun(2, 30, true, true).doc.dump() == report_genfun(2, 30, true, true).doc.dump());
  CHECK(report_verify("fs").doc.dump() == report_verify("fs").doc.dump());
  CHECK_FALSE(report_kl_braid(5).doc.contains("timing_ms"));
  CHECK(report_kl_braid(5, {true}).doc.contains("timing_ms"));
}

TEST_CASE("kl report") {
  const Report r = report_kl_braid(6);
  CHECK(r.doc["outputs"]["coefficients"] == Json::array({"1", "16", "15"}));
  CHECK(r.csv == "i,coefficient\n0,1\n1,16\n2,15\n");
  CHECK_FALSE(r.passed.has_value());
  CHECK(report_kl_braid(2).doc["outputs"]["coefficients"] == Json::array({"1"}));
  CHECK(report_kl_graph(Graph(1), 3).doc["outputs"]["coefficients"] == Json::array({"1", "1"}));
  CHECK_THROWS_AS(report_kl_braid(0), std::invalid_argument);
  CHECK_THROWS_AS(report_kl_graph(Graph(1), -1), std::invalid_argument);
}

TEST_CASE("e1 report verdict can be re-derived from its cells") {
  for (int n : {5, 9}) {
    const Report r = report_e1(2, n, nullptr);
    const Json parsed = Json::parse(r.doc.dump());
    BigInt sum = 0;
    for (const auto& c : parsed["outputs"]["cells"]) {
      const BigInt dim(c["dim"].get<std::string>());
      sum += (c["p"].get<int>() + c["q"].get<int>()) % 2 == 0 ? dim : BigInt(-dim);
    }
    CHECK((sum == BigInt(parsed["outputs"]["kl_coefficient"].get<std::string>())) == parsed["verdicts"]["euler_identity"].get<bool>());
    CHECK(r.passed == std::optional<bool>(true));
  }
}

TEST_CASE("genfun report verdict can be re-derived from its values") {
  const Json parsed = Json::parse(report_genfun(2, 30, true, false).doc.dump());
  const Json& fit = parsed["outputs"]["fit"];
  std::vector<BigRat> num, den;
  for (const auto& c : fit["rational_function"]["num"]) num.push_back(rat(c));
  for (const auto& c : fit["rational_function"]["den"]) den.push_back(rat(c));
  const RatFn f(Poly(num, 'u'), Poly(den, 'u'));
  const auto s = series(f, 30);
  for (const auto& row : parsed["outputs"]["sequence"]) CHECK(s.at(row["n"].get<int>()) == rat(row["dim"]));
  CHECK((r_extract(f, 4) == rat(fit["predicted_r"])) == parsed["verdicts"]["r_matches_prediction"].get<bool>());
  CHECK(rat(fit["r"]) == BigRat(1, 24));
}

TEST_CASE("genfun asymptotics") {
  const Report r = report_genfun(1, 25, false, true);
  CHECK(r.doc["outputs"]["asymptotics"]["verdict"].get<std::string>().rfind("stabilizing toward", 0) == 0);
  const Report short_run = report_genfun(3, 8, false, true);
  CHECK(short_run.doc["outputs"]["asymptotics"]["verdict"].get<std::string>().rfind("skipped", 0) == 0);
  CHECK_THROWS_AS(report_genfun(1, 10, true, false), InsufficientDataError);
}

TEST_CASE("eqkl report") {
  const Report r = report_eqkl(6);
  CHECK(r.passed == std::optional<bool>(true));
  CHECK(r.csv.rfind("degree,partition,multiplicity\n0,(6),1\n", 0) == 0);
  CHECK(r.csv.find("\"(") != std::string::npos);  // partitions with commas are quoted
  CHECK_THROWS_AS(report_eqkl(10), std::invalid_argument);
}

TEST_CASE("verify suites") {
  const auto& names = verify_suite_names();
  CHECK(names.back() == "all");
  for (const auto& n : {"paper-i1", "paper-i2", "euler", "fs", "conjecture", "relative"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  for (const auto& n : {"paper-i1", "euler", "fs", "conjecture"}) {
    const Report r = report_verify(n);
    CHECK(r.passed == std::optional<bool>(true));
  }
  CHECK_THROWS_AS(report_verify("bogus"), std::invalid_argument);
}
