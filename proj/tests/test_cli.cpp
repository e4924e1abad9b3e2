#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "liq/cli.hpp"
#include "liq/report.hpp"

namespace {

  struct Run {
    int         code = -1;
    std::string out;
    std::string err;
  };

  Run liq_run(std::vector<std::string> args) {
    args.insert(args.begin(), "liq");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    Run                r;
    r.code = liq::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out  = out.str();
    r.err  = err.str();
    return r;
  }

  std::string data(std::string const& name) {
    return std::string(LIQ_TEST_DATA) + "/" + name;
  }

  bool contains(std::string const& text, std::string const& needle) {
    return text.find(needle) != std::string::npos;
  }

}  // namespace

TEST_CASE("enumerate") {
  auto const r = liq_run({"enumerate", "-n", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "count: 8"));
  auto const iso = liq_run({"enumerate", "-n", "2", "--filter", "left_ample", "--iso"});
  CHECK(contains(iso.out, "count: 2"));
  CHECK(contains(liq_run({"enumerate", "-n", "3", "--serial"}).out, "count: 113"));
  CHECK(contains(liq_run({"enumerate", "-n", "3"}).out, "count: 113"));
}

TEST_CASE("check") {
  CHECK(liq_run({"check", "clifford4"}).code == 0);
  auto const lz = liq_run({"check", "leftzero2", "--ample"});
  CHECK(lz.code == 1);
  CHECK(contains(lz.out, "left_ample: false"));
  CHECK(liq_run({"check", data("chain3.sgp")}).code == 0);
}

TEST_CASE("bad input exits with 2") {
  CHECK(liq_run({"check", data("no_such_file.sgp")}).code == 2);
  CHECK(liq_run({"frobnicate"}).code == 2);
  CHECK(liq_run({"enumerate", "-n", "9"}).code == 2);
  CHECK(liq_run({"hull", "leftzero2"}).code == 2);
  auto const r = liq_run({"lift", "B0(Z2,2)", "0,1,2,3,4", "B0(Z2,2)", "0,5,6,7,8",
                          data("not_a_morphism.map")});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "not a morphism"));
}

TEST_CASE("hull and iorder") {
  auto const h = liq_run({"hull", "Z3"});
  CHECK(h.code == 0);
  CHECK(contains(h.out, "hull_size: 3"));

  auto const b = liq_run({"iorder", "bicyclic", "--builtin", "--window", "6"});
  CHECK(b.code == 0);
  CHECK(contains(b.out, "classical_left_order: false"));

  auto const s = liq_run({"iorder", "B0(Z2,2)", "0,1,2,3,4", "--suite", "lemma3.6", "--suite", "thm3.9"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "lemma3.6 (vii)"));
  CHECK(contains(s.out, "thm3.9 conditions agree: true"));

  // closed but far too small
  CHECK(liq_run({"iorder", "B0(Z2,2)", "0,1"}).code == 1);
  // (0,0,0)(1,0,0) = 0 is missing
  CHECK(liq_run({"iorder", "B0(Z2,2)", "1,5"}).code == 2);
}

TEST_CASE("lift") {
  auto const r = liq_run({"lift", "B0(Z2,2)", "0,1,2,3,4", "B0(Z2,2)", "0,5,6,7,8",
                          data("brandt_rows.map")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "lifts: true"));
}

TEST_CASE("assemble") {
  auto const c = liq_run({"assemble", data("clifford4.diagram"), "--theorem"});
  CHECK(c.code == 0);
  auto const f = liq_run({"assemble", data("fold.diagram")});
  CHECK(f.code == 1);
  CHECK(contains(f.out, "lc: false"));
}

TEST_CASE("equiv") {
  CHECK(liq_run({"equiv", "roundtrip", "Z4"}).code == 0);
  CHECK(liq_run({"equiv", "roundtrip", "S3"}).code == 0);
  CHECK(liq_run({"equiv", "roundtrip", "nat", "--window", "10"}).code == 0);
  CHECK(liq_run({"equiv", "roundtrip", "chain2"}).code == 2);
}

TEST_CASE("builtin") {
  auto const r = liq_run({"builtin", "bicyclic", "--window", "3", "--table"});
  CHECK(r.code == 0);
  CHECK(liq_run({"builtin", "free3"}).code == 2);
}

TEST_CASE("JSON output is deterministic and round trips") {
  for (std::vector<std::string> args : {std::vector<std::string>{"hull", "Z3"},
                                        std::vector<std::string>{"check", "clifford4"},
                                        std::vector<std::string>{"enumerate", "-n", "3", "--iso"},
                                        std::vector<std::string>{"assemble", data("fold.diagram")}}) {
    args.push_back("--json");
    auto const a = liq_run(args);
    auto const b = liq_run(args);
    CHECK(a.out == b.out);
    auto const report = liq::Report::from_json(a.out);
    CHECK(report.to_json() == a.out);
    CHECK(liq::Report::from_json(report.to_json()) == report);
    CHECK((a.code == 0) == report.all_hold());
  }
  CHECK_THROWS_AS(liq::Report::from_json("{\"command\": 1}"), liq::InputError);
}

TEST_CASE("timings") {
  CHECK(contains(liq_run({"hull", "Z3"}).out, "time total: "));
  CHECK_FALSE(contains(liq_run({"hull", "Z3", "--json"}).out, "timings"));
  auto const timed = liq_run({"hull", "Z3", "--json", "--timings"});
  CHECK(contains(timed.out, "\"timings\""));
  auto const report = liq::Report::from_json(timed.out);
  REQUIRE(report.timings.size() == 1);
  CHECK(report.timings[0].label == "total");
  CHECK(report.timings[0].seconds >= 0);
}
