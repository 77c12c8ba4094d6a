#include <doctest.h>

#include <sstream>

#include "casimir/cli.hpp"
#include "casimir/io.hpp"

using namespace casimir;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "casimir");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("elementary subcommand on the worked example") {
  const Run r = run({"elementary", "--tuple", "1,9,2,5,5,9,6,8,4,5", "--raw"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "eigenvalue: a1*a5 - a2*a5 - a1 + a2\n"));
  CHECK(contains(r.out, "| (1,9,2,5,5,9,6,8,4,5,1) | 1..11 | yes | 1 | 2 |"));
  CHECK(contains(r.out, "| (9,2,5,5,9) | 2..6 | no | 2 | 5 |"));
  CHECK(contains(r.out, "| (5,5) | 4..5 | yes | 5 | INF |"));
  CHECK(contains(r.out, "| (5,9,6,8,4,5) | 5..10 | no | 4 | 5 |"));

  const Run latex = run({"elementary", "--tuple", "1,2", "--raw", "--latex"});
  CHECK(contains(latex.out, "eigenvalue: -\\alpha_{1} + \\alpha_{2}\n"));

  const Run lit = run({"elementary", "--tuple", "1", "--raw", "--sign", "literal"});
  CHECK(contains(lit.out, "eigenvalue: -a1\n"));
}

TEST_CASE("elementary JSON") {
  const Run r = run({"elementary", "--tuple", "1,2", "--raw", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"tuple\":[1,2],\"n\":2,\"shifted\":false,\"sign\":\"alternating\",\"eigenvalue\":"
        "{\"nvars\":2,\"terms\":[{\"c\":\"-1/1\",\"e\":[1,0]},{\"c\":\"1/1\",\"e\":[0,1]}]},"
        "\"cycles\":[{\"start\":1,\"end\":3,\"base\":1,\"proper\":true,\"v1\":1,\"v2\":2}]}\n");
}

TEST_CASE("casimir subcommand") {
  const Run j = run({"casimir", "--m", "2", "--n", "2", "--json"});
  CHECK(j.code == 0);
  // the Casimir sum itself carries p1 terms; the reduced form is p2 - 1/2
  const Run ps = run({"casimir", "--m", "2", "--n", "2", "--basis", "power-sum"});
  CHECK(ps.out == "p2 - 1/2\n");
  const Run ps3 = run({"casimir", "--m", "3", "--n", "3", "--basis", "power-sum"});
  CHECK(ps3.out == "p3 - 3/2*p2 + 3\n");
  const Run psj = run({"casimir", "--m", "2", "--n", "3", "--basis", "power-sum", "--json"});
  CHECK(psj.out ==
        "{\"partitions\":[{\"parts\":[2],\"coeff_n\":[\"1/1\"]},{\"parts\":[],\"coeff_n\":[\"-2/1\"]}]}\n");
  const Run over = run({"casimir", "--m", "3", "--n", "2", "--basis", "power-sum"});
  CHECK(over.code == 0);
  CHECK(contains(over.out, "outside the stated range"));
}

TEST_CASE("polynomial JSON serialization") {
  MPoly p(2);
  p.add_term({2, 0}, 1);
  p.add_term({0, 2}, 1);
  p.add_term({0, 0}, Rat(-1) / 2);
  CHECK(dump(to_json(p)) ==
        R"({"nvars":2,"terms":[{"c":"1/1","e":[2,0]},{"c":"1/1","e":[0,2]},{"c":"-1/2","e":[0,0]}]})");
  CHECK(dump(to_json(MPoly(3))) == R"({"nvars":3,"terms":[]})");
}

TEST_CASE("closed-form subcommand") {
  CHECK(run({"closed-form", "--m", "1"}).out == "0\n");
  CHECK(run({"closed-form", "--m", "2"}).out == "p2 - (n^3 - n)/12\n");
  CHECK(run({"closed-form", "--m", "3"}).out == "p3 - (n/2)*p2 + (n^4 - n^2)/24\n");
  CHECK(run({"closed-form", "--m", "2", "--json"}).out ==
        R"({"partitions":[{"parts":[2],"coeff_n":["1/1"]},{"parts":[],"coeff_n":["0/1","1/12","0/1","-1/12"]}]})"
        "\n");
}

TEST_CASE("JSON round trip reproduces the bytes") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"casimir", "--m", "3", "--n", "4", "--json"},
           {"casimir", "--m", "2", "--n", "3", "--raw", "--json"},
           {"elementary", "--tuple", "1,9,2,5,5,9,6,8,4,5", "--json"}}) {
    const Json doc = Json::parse(run(args).out);
    const Json& poly = doc.contains("eigenvalue") ? doc.at("eigenvalue") : doc;
    CHECK(dump(to_json(mpoly_from_json(poly))) == dump(poly));
  }
  const std::string cf = run({"closed-form", "--m", "4", "--json"}).out;
  CHECK(dump(to_json(closed_form_from_json(Json::parse(cf)))) + "\n" == cf);
}

TEST_CASE("identical argv gives identical bytes regardless of --threads") {
  const auto a = run({"casimir", "--m", "3", "--n", "5", "--json", "--threads", "1"});
  const auto b = run({"casimir", "--m", "3", "--n", "5", "--json", "--threads", "6"});
  CHECK(a.out == b.out);
  const auto v1 = run({"verify", "--m", "4", "--n", "4", "--random", "30", "--seed", "3", "--json"});
  const auto v2 = run({"verify", "--m", "4", "--n", "4", "--random", "30", "--seed", "3", "--json"});
  CHECK(v1.out == v2.out);
}

TEST_CASE("verify subcommand and its exit codes") {
  const Run ok = run({"verify", "--m", "3", "--n", "3", "--exhaustive"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "consistent convention: alternating"));
  const Run j = run({"verify", "--m", "3", "--n", "3", "--exhaustive", "--json"});
  CHECK(j.out ==
        R"({"total":27,"zero":13,"match_literal":0,"match_alternating":14,"mismatch":[],"consistent_convention":"alternating"})"
        "\n");
  const Run literal = run({"verify", "--m", "3", "--n", "3", "--exhaustive", "--sign", "literal"});
  CHECK(literal.code == 1);
  CHECK(contains(literal.out, "mismatch: (1,1,1)"));
  CHECK(run({"verify", "--m", "2", "--n", "3", "--exhaustive", "--sign", "literal"}).code == 0);
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"closed-form"}).code == 2);
  CHECK(run({"closed-form", "--m", "2", "--frobnicate"}).code == 2);
  CHECK(run({"elementary", "--tuple", "1,x"}).code == 2);
  CHECK(run({"elementary", "--tuple", "3,1", "--n", "2"}).code == 2);
  CHECK(run({"elementary", "--tuple", "1", "--sign", "upside-down"}).code == 2);
  CHECK(run({"verify", "--m", "2", "--n", "2"}).code == 2);
  CHECK(run({"verify", "--m", "2", "--n", "2", "--random", "5"}).code == 2);
  CHECK(run({"verify", "--m", "2", "--n", "2", "--exhaustive", "--random", "5", "--seed", "1"}).code == 2);
  CHECK(run({"tables", "--m", "4"}).code == 2);
  CHECK(run({"casimir", "--m", "0", "--n", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("tables subcommand") {
  const Run t2 = run({"tables", "--m", "2"});
  CHECK(t2.code == 0);
  CHECK(contains(t2.out, "| i1 > i2 | 0 |"));
  CHECK(contains(t2.out, "| i1 = i2 | (α_{i1} + (n+1)/2 − i1)² |"));
  CHECK(contains(t2.out, "| i1 < i2 | −α_{i1} + α_{i2} + i1 − i2 |"));
  CHECK(!contains(t2.out, "DISCREPANCY"));

  const Run t3 = run({"tables", "--m", "3"});
  CHECK(contains(t3.out, "| i1 = i2 = i3 | (α_{i1} + (n+1)/2 − i1)³ |"));
  CHECK(contains(t3.out, "**DISCREPANCY**"));
  CHECK(contains(t3.out, "computed: −(β_{i1} − β_{i2})(β_{i2} − 1); reference: α_{i1} − α_{i2}"));

  const Json j = Json::parse(run({"tables", "--m", "3", "--format", "json"}).out);
  CHECK(j.at("rows").size() == 8);
  std::size_t mismatched = 0;
  for (const auto& row : j.at("rows")) mismatched += !row.at("matches").get<bool>();
  CHECK(mismatched == 1);
}
