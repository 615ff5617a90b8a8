#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vfrac/cli.hpp"
#include "vfrac/errors.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdlib>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

using namespace vfrac;
using namespace vfrac::cli;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult call(std::initializer_list<std::string> args) {
    std::vector<std::string> full{"vfrac"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& s : full) argv.push_back(s.c_str());
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

TEST_CASE("ml subcommand") {
    auto fixed = call({"ml", "--z", "1"});
    CHECK(fixed.code == 0);
    CHECK(fixed.out == "2.66666666666667\n"); // partial sum to i=3 is 8/3

    auto adaptive = call({"ml", "--z", "1", "--tol", "1e-12"});
    CHECK(adaptive.code == 0);
    CHECK(adaptive.out.find("2.718281828459") == 0);
    CHECK(adaptive.err.empty());

    auto six = call({"ml", "--z", "1.5", "--gamma", "1.2", "--beta", "0.8",
                     "--rho", "1.5", "--delta", "2.0", "--p", "1.1", "--q",
                     "0.9", "--tol", "1e-13"});
    CHECK(six.code == 0);
    CHECK(std::fabs(std::stod(six.out) - 2.266481373112547586) < 1e-12);

    // beyond the radius the series reports rather than lies
    auto far = call({"ml", "--z", "60", "--tol", "1e-10"});
    CHECK(far.code == 1);
    CHECK(far.err.find("ml at z=60") != std::string::npos);
}

TEST_CASE("deriv subcommand, both methods") {
    auto r = call({"deriv", "--fn", "t^2", "--alpha", "0.5", "--t", "1",
                   "--method", "both"});
    CHECK(r.code == 0);
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "t,closed,limit,agree");
    auto cells = split_csv(lines[1]);
    REQUIRE(cells.size() == 4);
    CHECK(cells[0] == "1");
    CHECK(cells[1] == "2");
    CHECK(std::fabs(std::stod(cells[2]) - 2.0) <= 1e-6);
    CHECK(cells[3] == "true");
}

TEST_CASE("deriv over a grid") {
    auto r = call({"deriv", "--fn", "t^2", "--alpha", "0.5", "--grid",
                   "1:2:3"});
    CHECK(r.code == 0);
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "t,closed");
    const double ts[] = {1.0, 1.5, 2.0};
    for (int i = 0; i < 3; ++i) {
        auto cells = split_csv(lines[1 + i]);
        REQUIRE(cells.size() == 2);
        double t = std::stod(cells[0]);
        double d = std::stod(cells[1]);
        CHECK(t == ts[i]);
        // all-ones C = 1: D t^2 = 2 t^(3/2)
        CHECK(std::fabs(d - 2.0 * std::pow(t, 1.5)) < 1e-12);
    }

    auto bad = call({"deriv", "--fn", "t^2", "--grid", "0:1:3"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("above 0") != std::string::npos);
}

TEST_CASE("integral subcommand") {
    auto r = call({"integral", "--fn", "t^2", "--a", "0.5", "--t", "2",
                   "--alpha", "1"});
    CHECK(r.code == 0);
    CHECK(std::fabs(std::stod(r.out) - 2.625) < 1e-10); // plain integral of t^2

    auto w = call({"integral", "--fn", "t^2", "--a", "0.5", "--b", "2",
                   "--alpha", "0.5"});
    CHECK(w.code == 0);
    CHECK(std::fabs(std::stod(w.out) - 2.192031021678297326) < 1e-9);

    auto bad = call({"integral", "--fn", "t^2", "--a", "2", "--t", "1"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("integral of \"t^2\"") != std::string::npos);
}

TEST_CASE("verify single rule as json") {
    auto r = call({"verify", "--rule", "ftc", "--format", "json"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["rule"] == "ftc");
    CHECK(j["passed"] == true);
    CHECK(j["tolerance"] == 1e-7);
    CHECK(j["max_residual"].get<double>() <= 1e-7);
    CHECK(std::string(j["statement"]).size() > 0);
    REQUIRE(j["cases"].is_array());
    REQUIRE(!j["cases"].empty());
    for (const auto& c : j["cases"]) {
        CHECK(c.contains("inputs"));
        CHECK(c.contains("residual"));
    }

    // witness rules carry the located point
    auto m = call({"verify", "--rule", "mvt", "--format", "json"});
    CHECK(m.code == 0);
    auto mj = json::parse(m.out);
    CHECK(mj["cases"].front().contains("witness"));
}

TEST_CASE("verify --all") {
    auto r = call({"verify", "--all"});
    CHECK(r.code == 0);
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 26); // header and one line per rule
    CHECK(lines[0] == "rule,passed,max_residual,tolerance");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 4);
        CHECK(cells[1] == "true");
    }

    auto j = call({"verify", "--all", "--format", "json"});
    CHECK(j.code == 0);
    auto arr = json::parse(j.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 25);
}

TEST_CASE("verify failure and usage errors") {
    auto fail = call({"verify", "--rule", "ftc", "--tol", "0"});
    CHECK(fail.code == 2);
    auto lines = split_lines(fail.out);
    REQUIRE(lines.size() == 2);
    CHECK(split_csv(lines[1])[1] == "false");

    auto unknown = call({"verify", "--rule", "no_such_rule"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("unknown rule") != std::string::npos);

    auto missing = call({"verify"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("--rule") != std::string::npos);
}

TEST_CASE("table subcommand") {
    auto r = call({"table", "--fn", "sin(t)", "--grid", "0:2:5"});
    CHECK(r.code == 0);
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "t,value");
    for (int i = 0; i < 5; ++i) {
        auto cells = split_csv(lines[1 + i]);
        double t = std::stod(cells[0]);
        CHECK(t == 0.5 * i);
        CHECK(std::fabs(std::stod(cells[1]) - std::sin(t)) < 1e-14);
    }

    auto j = call({"table", "--fn", "sin(t)", "--grid", "0:2:5", "--format",
                   "json"});
    CHECK(j.code == 0);
    auto arr = json::parse(j.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 5);
    CHECK(arr[2]["t"] == 1.0);
    CHECK(std::fabs(arr[2]["value"].get<double>() - std::sin(1.0)) < 1e-14);
}

TEST_CASE("argument errors") {
    CHECK(call({"frobnicate"}).code == 1);
    CHECK(call({}).code == 1);
    CHECK(call({"ml", "--bogus", "3"}).code == 1);
    CHECK(call({"deriv", "--t", "1"}).code == 1);       // --fn required
    CHECK(call({"table", "--fn", "t"}).code == 1);      // --grid required
    CHECK(call({"deriv", "--fn", "t +", "--t", "1"}).code == 1);
    CHECK(call({"deriv", "--fn", "t^2", "--n", "1", "--alpha", "0.5"}).code ==
          1); // n disagrees with alpha

    auto help = call({"--help"});
    CHECK(help.code == 0);
    for (const char* name : {"ml", "deriv", "integral", "verify", "table"})
        CHECK(help.out.find(name) != std::string::npos);
}

TEST_CASE("emit_table") {
    std::vector<std::string> header{"t", "value"};
    std::vector<json> rows{json::array({1.0, 2.0})};
    CHECK(emit_table(header, rows, Format::csv) == "t,value\n1,2\n");
    CHECK(emit_table(header, {}, Format::csv) == "t,value\n");

    std::vector<json> mixed{json::array({1.0, "x", true}),
                            json::array({2.5, "y", false})};
    auto text = emit_table({"a", "b", "c"}, mixed, Format::json);
    auto arr = json::parse(text);
    REQUIRE(arr.size() == 2);
    CHECK(arr[0]["a"] == 1.0);
    CHECK(arr[0]["b"] == "x");
    CHECK(arr[0]["c"] == true);
    CHECK(arr[1]["c"] == false);
    CHECK(text.back() == '\n');
}

TEST_CASE("format_value and grids") {
    CHECK(format_value(2.0) == "2");
    CHECK(format_value(0.5) == "0.5");
    CHECK(format_value(2.0 / 3.0) == "0.666666666666667");
    CHECK(format_value(1e300) == "1e+300");

    GridSpec g = parse_grid("0:1:7");
    CHECK(g.start == 0.0);
    CHECK(g.stop == 1.0);
    CHECK(g.count == 7);
    auto pts = g.points();
    REQUIRE(pts.size() == 7);
    CHECK(pts.front() == 0.0);
    CHECK(pts.back() == 1.0); // exact endpoint

    CHECK(parse_grid("2:2:1").points() == std::vector<double>{2.0});
    CHECK_THROWS_AS(parse_grid("1:2"), DomainError);
    CHECK_THROWS_AS(parse_grid("a:b:c"), DomainError);
    CHECK_THROWS_AS(parse_grid("0:1:0"), DomainError);
}

TEST_CASE("direct RunConfig entry point") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::ml;
    cfg.z = 1.0;
    std::ostringstream out, err;
    CHECK(run(cfg, out, err) == 0);
    CHECK(out.str() == "2.66666666666667\n");
}

TEST_CASE("output is deterministic") {
    auto a = call({"verify", "--all"});
    auto b = call({"verify", "--all"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}
