#include <doctest.h>

#include "cplan/errors.hpp"
#include "cplan/experiments.hpp"

#include <sstream>

using namespace cplan;

namespace {

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("optimal-plan count experiment") {
    const auto r = run_experiment("lemma11", 3);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].expected == "128");
    CHECK(r.rows[0].observed == "128");
    CHECK(r.ok());
    CHECK(run_experiment("lemma11", 4).rows[0].observed == "32768");
}

TEST_CASE("commitment experiment") {
    const auto r = run_experiment("lemma17", 3);
    CHECK(r.rows.size() == 256);
    CHECK(r.passed == 256);
    CHECK(r.failed == 0);
    CHECK(r.rows[0].expected == "acs");
    CHECK(r.rows[255].expected == "acu");
}

TEST_CASE("position experiment") {
    const auto r = run_experiment("lemma27", 3);
    CHECK(r.rows.size() == 256);
    CHECK(r.passed == 256);
    const auto text = write_report(r);
    CHECK(text.find("# a_n=90\n") != std::string::npos);
    CHECK(text.find("# b_n=91\n") != std::string::npos);
    CHECK(text.find("# length=23296\n") != std::string::npos);
}

TEST_CASE("report format") {
    const auto r = run_experiment("lemma17", 3);
    const auto l = lines(write_report(r));
    REQUIRE(l.size() > 257);
    CHECK(l[0] == "case,expected,observed,pass");
    CHECK(l[1] == "0,acs,acs,true");
    CHECK(l.back() == "# summary: 256 passed, 0 failed, 256 total");
    CHECK(write_report(r) == write_report(run_experiment("lemma17", 3)));
}

TEST_CASE("experiment errors") {
    CHECK_THROWS_AS(run_experiment("lemma99", 3), InputError);
    CHECK_THROWS_AS(run_experiment("lemma17", 4), CapExceeded);
    CHECK_THROWS_AS(run_experiment("lemma27", 4), CapExceeded);
    CHECK(run_experiment("lemma17", 2).rows.size() == 1);
}
