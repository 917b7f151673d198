#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <set>

#include "weylshape/error.hpp"
#include "weylshape/shape_checker.hpp"

using namespace weylshape;

namespace {

CornerCandidate find(std::int64_t u, std::int64_t v, std::int64_t f1) {
  for (const CornerCandidate& c : enumerate_candidates(15))
    if (c.u == u && c.v == v && c.f1 == f1) return c;
  FAIL("no candidate (" << u << "," << v << ") f1=" << f1);
  return {};
}

}  // namespace

TEST_CASE("enumeration up to 15") {
  const auto cands = enumerate_candidates(15);
  CHECK(cands.size() == 13);
  std::set<std::pair<std::int64_t, std::int64_t>> corners;
  for (const CornerCandidate& c : cands) corners.emplace(c.u, c.v);
  CHECK(corners.size() == 9);
  CHECK(enumerate_candidates(8).empty());
  CHECK(enumerate_candidates(6).empty());
  CHECK(enumerate_candidates(9).size() == 1);
  CHECK_THROWS_AS(enumerate_candidates(4), Error);
}

TEST_CASE("refuting single candidates") {
  SUBCASE("(3,6) with F = (2,4)") {
    const CandidateReport r = refute(find(3, 6, 2));
    CHECK(r.candidate.dir == Direction{3, -1});
    CHECK(r.candidate.d == 1);
    REQUIRE(r.cuts.size() == 1);
    CHECK(r.cuts[0].c1 == std::pair<std::int64_t, std::int64_t>{1, 0});
    CHECK(r.cuts[0].gamma == Rational(2));
    CHECK(r.cuts[0].c2 == std::pair{Rational(5, 3), Rational(2)});
    CHECK(r.cuts[0].forbidden);
    CHECK(r.verdict == Verdict::RefutedCondition6);
  }
  SUBCASE("(3,9) with F = (2,6)") {
    const CandidateReport r = refute(find(3, 9, 2));
    CHECK(r.candidate.dir == Direction{5, -1});
    CHECK(r.cuts.empty());
    CHECK(r.verdict == Verdict::RefutedNoC1);
  }
  SUBCASE("(6,9) with F = (2,3)") {
    const CandidateReport r = refute(find(6, 9, 2));
    CHECK(r.candidate.dir == Direction{2, -1});
    REQUIRE(r.cuts.size() == 1);
    CHECK(r.cuts[0].c1 == std::pair<std::int64_t, std::int64_t>{2, 1});
    CHECK(r.cuts[0].gamma == Rational(4));
    CHECK(r.cuts[0].c2 == std::pair{Rational(7, 2), Rational(4)});
    CHECK(r.verdict == Verdict::RefutedCondition6);
  }
}

TEST_CASE("bound summaries") {
  const BoundResult r15 = check_bound(15);
  CHECK(r15.summary.candidates == 13);
  CHECK(r15.summary.refuted == 13);
  CHECK(r15.summary.unresolved == 0);
  CHECK(r15.summary.conclusion() == std::string("B > 15"));

  const BoundResult r9 = check_bound(9);
  CHECK(r9.summary.candidates == 1);
  CHECK(r9.summary.conclusion() == std::string("B > 9"));

  const BoundResult r30 = check_bound(30, 3);
  CHECK(r30.summary.unresolved > 0);
  CHECK_FALSE(r30.summary.conclusion().has_value());
  CHECK(emit_summary(r30.summary).find("no bound claim") != std::string::npos);
}

TEST_CASE("table formats") {
  const auto reports = check_bound(15).reports;
  SUBCASE("csv") {
    CHECK(emit_table({}, "csv") == "C0,F,dir,C1,d,gamma,C2,verdict\n");
    const std::string csv = emit_table(reports, "csv");
    CHECK(csv.find("\"(3,6)\",\"(2,4)\",\"(3,-1)\",\"(1,0)\",1,2,\"(2-1/3,2)\",refuted:condition-6\n") !=
          std::string::npos);
  }
  SUBCASE("json") {
    const auto j = nlohmann::json::parse(emit_table(reports, "json"));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 13);
    CHECK(j[0]["C0"] == nlohmann::json::array({3, 6}));
    CHECK(j[0]["F"] == nlohmann::json::array({2, 4}));
    CHECK(j[0]["dir"] == nlohmann::json::array({3, -1}));
    CHECK(j[0]["C1"] == nlohmann::json::parse("[[1,0]]"));
    CHECK(j[0]["d"] == 1);
    CHECK(j[0]["gamma"] == "2");
    CHECK(j[0]["C2"] == nlohmann::json::array({"5/3", "2"}));
    CHECK(j[0]["verdict"] == "refuted:condition-6");
    CHECK(j[1]["gamma"].is_null());
    CHECK(j[1]["verdict"] == "refuted:no-C1");
  }
  SUBCASE("unknown") { CHECK_THROWS_AS(emit_table(reports, "xml"), Error); }
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::RefutedNoC1) == "refuted:no-C1");
  CHECK(to_string(Verdict::RefutedCondition6) == "refuted:condition-6");
  CHECK(to_string(Verdict::Unresolved) == "unresolved");
}
