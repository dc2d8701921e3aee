#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "serialize.hpp"
#include "tensorcomm/verification.hpp"
#include "test_helpers.hpp"

using namespace tcm;
using namespace tcm::cli;

TEST_CASE("format names") {
  CHECK(parse_format("matrix-market") == OutputFormat::MatrixMarket);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("text") == OutputFormat::Text);
  CHECK_FALSE(parse_format("csv").has_value());
  CHECK(to_string(OutputFormat::MatrixMarket) == "matrix-market");
}

TEST_CASE("matrix market round trip is exact") {
  std::mt19937 rng(31337);
  // permutation matrices, basis generators (with sqrt(2) entries), random data
  std::vector<ComplexDense> cases;
  cases.push_back(tcm_by_rule(2, 3).to_dense());
  cases.push_back(tcm_by_gellmann(3, 4));
  for (const auto& lam : rect_gellmann(3, 5).lambdas) cases.push_back(lam);
  for (int trial = 0; trial < 5; ++trial) {
    cases.push_back(test_util::random_matrix(rng, 4, 7));
  }
  for (const auto& m : cases) {
    const ComplexDense back = read_matrix_market(to_matrix_market(m));
    CHECK(max_abs_diff(back, m) == 0.0);
  }
}

TEST_CASE("matrix market output for a permutation") {
  const std::string text = to_matrix_market(tcm_by_rule(2, 3).to_dense(), {"n=2 p=3 method=rule"});
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "%%MatrixMarket matrix coordinate complex general");
  std::getline(in, line);
  CHECK(line == "% n=2 p=3 method=rule");
  std::getline(in, line);
  CHECK(line == "6 6 6");
  int entries = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++entries;
    std::istringstream fields(line);
    int i, j;
    double re, im;
    REQUIRE((fields >> i >> j >> re >> im));
    CHECK(re == 1.0);
    CHECK(im == 0.0);
  }
  CHECK(entries == 6);
}

TEST_CASE("matrix market rejects malformed input") {
  CHECK_THROWS_AS(read_matrix_market(std::string{}), std::runtime_error);
  CHECK_THROWS_AS(read_matrix_market(std::string{"%%MatrixMarket matrix array real general\n"}),
                  std::runtime_error);
  CHECK_THROWS_AS(
      read_matrix_market(std::string{"%%MatrixMarket matrix coordinate real general\n2 2 0\n"}),
      std::runtime_error);
  CHECK_THROWS_AS(read_matrix_market(std::string{
                      "%%MatrixMarket matrix coordinate complex general\n2 2 1\n"}),
                  std::runtime_error);
  CHECK_THROWS_AS(read_matrix_market(std::string{
                      "%%MatrixMarket matrix coordinate complex general\n2 2 1\n3 1 1 0\n"}),
                  std::runtime_error);
}

TEST_CASE("concatenated matrix market documents parse in sequence") {
  const ComplexDense a = identity(2);
  const ComplexDense b = 2.0 * elementary(2, 3, 1, 2);
  std::istringstream in(to_matrix_market(a) + to_matrix_market(b));
  CHECK(read_matrix_market(in) == a);
  CHECK(read_matrix_market(in) == b);
}

TEST_CASE("json dense round trip is exact") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexDense m = test_util::random_matrix(rng, 3, 5);
    const ComplexDense back = dense_from_json(dense_to_json(m));
    CHECK(max_abs_diff(back, m) == 0.0);
  }
  const ComplexDense u = tcm_by_gellmann(2, 4);
  CHECK(dense_from_json(dense_to_json(u)) == u);
}

TEST_CASE("json dense rejects inconsistent shapes") {
  nlohmann::json j = dense_to_json(identity(2));
  j["rows"] = 3;
  CHECK_THROWS(dense_from_json(j));
}

TEST_CASE("json permutation round trip") {
  const PermutationSpec spec = tcm_by_rule(3, 4);
  const PermutationSpec back = permutation_from_json(permutation_to_json(spec));
  CHECK(back.n == spec.n);
  CHECK(back.p == spec.p);
  CHECK(back.target_of == spec.target_of);

  nlohmann::json bad = permutation_to_json(spec);
  bad["targets"][0] = bad["targets"][1];  // no longer a bijection
  CHECK_THROWS_AS(permutation_from_json(bad), std::runtime_error);
}

TEST_CASE("system serialization carries shape and ordering") {
  const GellMannSystem sys = rect_gellmann(2, 3);
  const nlohmann::json j = system_to_json(sys);
  CHECK(j["n"] == 2);
  CHECK(j["p"] == 3);
  CHECK(j["ordering"] == kOrderingName);
  REQUIRE(j["lambdas"].size() == 5);
  for (std::size_t a = 0; a < sys.lambdas.size(); ++a) {
    CHECK(dense_from_json(j["lambdas"][a]) == sys.lambdas[a]);
  }
  CHECK(dense_from_json(j["padded_identity"]) == sys.padded_identity);

  // one matrix market document per matrix, identity first
  std::istringstream in(system_to_matrix_market(sys));
  CHECK(read_matrix_market(in) == sys.padded_identity);
  for (const auto& lam : sys.lambdas) {
    CHECK(max_abs_diff(read_matrix_market(in), lam) == 0.0);
  }
}

TEST_CASE("report serialization") {
  const VerificationReport report = full_report(2, 3);
  const nlohmann::json j = report_to_json(report);
  CHECK(j["ok"] == true);
  CHECK(j["records"].size() == report.records.size());
  bool saw_erratum = false;
  for (const auto& r : j["records"]) {
    if (r["status"] == "erratum-expected") saw_erratum = true;
  }
  CHECK(saw_erratum);

  const std::string text = report_to_text(report);
  CHECK(text.find("result: OK") != std::string::npos);
  CHECK(text.find("erratum-expected") != std::string::npos);
  CHECK(text.find("(2,4) vs (4,2)") != std::string::npos);
}

TEST_CASE("text rendering") {
  CHECK(to_text(identity(2)) == "1  0\n0  1\n");
  const std::string s2 = to_text(test_util::sigma2());
  CHECK(s2.find("-1i") != std::string::npos);
  CHECK(s2.find("1i") != std::string::npos);
}
