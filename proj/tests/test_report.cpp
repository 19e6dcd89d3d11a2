#include "doctest_main.hpp"

#include "quadwalk/errors.hpp"
#include "quadwalk/report.hpp"

using namespace quadwalk;

namespace {

StepSet steps(const char* text) { return parse_step_set(text).steps; }

}  // namespace

TEST_CASE("report json round-trip") {
  for (Flavor f : {Flavor::Anywhere, Flavor::Origin}) {
    VerificationReport r = verify_model(steps("N,SE,SW"), f, 1200);
    std::string first = dump(to_json(r));
    VerificationReport back = report_from_json(Json::parse(first));
    CHECK(dump(to_json(back)) == first);
    CHECK(dump(Json::parse(first)) == first);
    CHECK(back.verdict == r.verdict);
    CHECK(back.predicted.row == r.predicted.row);
    CHECK(back.estimated.kappa == r.estimated.kappa);
  }
}

TEST_CASE("report json fields") {
  VerificationReport r = verify_model(steps("N,S,E,W"), Flavor::Anywhere, 1000);
  Json j = to_json(r);
  for (const char* key : {"model", "steps", "flavor", "predicted", "estimated", "tolerances", "verdict", "n_used", "seconds"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["model"] == 1);
  CHECK(j["predicted"]["row"] == "anywhere:1");
  CHECK(j["predicted"]["kappa"][0]["exact"] == "4/pi");
  CHECK(j["predicted"]["period"] == 1);
}

TEST_CASE("report json rejects malformed input") {
  VerificationReport r = verify_model(steps("N,S,E,W"), Flavor::Anywhere, 1000);
  Json j = to_json(r);
  Json wrong_row = j;
  wrong_row["predicted"]["row"] = "anywhere:2";
  CHECK_THROWS_AS(report_from_json(wrong_row), ParseError);
  Json no_verdict = j;
  no_verdict.erase("verdict");
  CHECK_THROWS_AS(report_from_json(no_verdict), ParseError);
  Json bad_flavor = j;
  bad_flavor["flavor"] = "diagonal";
  CHECK_THROWS_AS(report_from_json(bad_flavor), ParseError);
}

TEST_CASE("reproduce_tables layout") {
  std::vector<VerificationReport> reports;
  reports.push_back(verify_model(steps("N,S,E,W"), Flavor::Anywhere, 1000));
  reports.push_back(verify_model(steps("N,S,E,W"), Flavor::Origin, 1000));
  VerificationReport failed = reports.back();
  failed.verdict = Verdict::Fail;
  reports.push_back(failed);
  std::string text = reproduce_tables(reports);
  CHECK(text.find("Walks ending anywhere") != std::string::npos);
  CHECK(text.find("Boundary returns") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("summary: 2 pass, 1 fail") != std::string::npos);
}
