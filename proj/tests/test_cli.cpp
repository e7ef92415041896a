#include "gvmlab/config.hpp"
#include "gvmlab/report.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gvmlab;

namespace {

JobConfig base_config(const std::string& command, long m, const std::string& mu) {
    JobConfig c;
    c.command = command;
    c.m = m;
    std::string cur;
    for (char ch : mu) {
        if (ch == ',') {
            c.mu.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    c.mu.push_back(cur);
    return c;
}

std::vector<std::string> strip_timing(const Report& r) {
    std::vector<std::string> lines;
    for (const auto& line : r.lines)
        if (line.rfind("timing_ms:", 0) != 0)
            lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("config file parsing and overrides") {
    JobConfig c = parse_config_text("# run\nm = 2\nmu = -3/6, 1\ndepth = 4\nconfirm = true\n");
    CHECK(c.m == 2);
    REQUIRE(c.mu.size() == 2);
    CHECK(c.mu[0] == "-3/6");
    CHECK(c.depth == 4);
    CHECK(c.confirm);
    apply_config_entry(c, "depth", "2");
    CHECK(c.depth == 2);
    CHECK_THROWS_AS(parse_config_text("nonsense\n"), ConfigError);
    CHECK_THROWS_AS(apply_config_entry(c, "spin", "1"), ConfigError);
}

TEST_CASE("config validation names the offending field") {
    JobConfig c = base_config("simplicity", 2, "0,0");
    CHECK_NOTHROW(c.validate());

    JobConfig wrong_len = base_config("simplicity", 3, "0,0");
    CHECK_THROWS_WITH_AS(wrong_len.validate(),
                         doctest::Contains("'mu'"), ConfigError);

    JobConfig bad_cmd = base_config("explode", 2, "0,0");
    CHECK_THROWS_AS(bad_cmd.validate(), ConfigError);

    JobConfig bad_rat = base_config("search", 2, "0,zebra");
    CHECK_THROWS_AS(bad_rat.validate(), ConfigError);

    JobConfig iso_missing = base_config("iso", 2, "1,0");
    CHECK_THROWS_AS(iso_missing.validate(), ConfigError);
}

TEST_CASE("echoed config reproduces the run bit-exactly") {
    JobConfig c = base_config("simplicity", 2, "-3/6,2");
    c.confirm = true;
    c.depth = 2;
    Report r1 = run_command(c);

    // Rebuild the config purely from the echo lines and re-run.
    JobConfig echoed;
    for (const auto& [key, value] : c.echo())
        apply_config_entry(echoed, key, value);
    Report r2 = run_command(echoed);
    CHECK(strip_timing(r1) == strip_timing(r2));
}

TEST_CASE("reports are deterministic") {
    JobConfig c = base_config("search", 2, "0,0");
    c.depth = 2;
    Report r1 = run_command(c);
    Report r2 = run_command(c);
    CHECK(strip_timing(r1) == strip_timing(r2));
    CHECK(r1.ok);
}

TEST_CASE("cmd_simplicity worked examples") {
    SUBCASE("mu = (0,0): case 2") {
        JobConfig c = base_config("simplicity", 2, "0,0");
        Report r = run_command(c);
        CHECK(r.ok);
        auto lines = r.lines;
        CHECK(std::find(lines.begin(), lines.end(), "  simple = false") != lines.end());
        CHECK(std::find(lines.begin(), lines.end(), "  case2 = true") != lines.end());
        CHECK(std::find(lines.begin(), lines.end(), "  predicted = (0,1)") != lines.end());
    }
    SUBCASE("mu = (-1,-1/2) confirmed by search") {
        JobConfig c = base_config("simplicity", 2, "-1,-1/2");
        c.confirm = true;
        Report r = run_command(c);
        CHECK(r.ok);
        CHECK(std::find(r.lines.begin(), r.lines.end(), "  case1 = true") != r.lines.end());
        CHECK(std::find(r.lines.begin(), r.lines.end(), "  agreement = true") !=
              r.lines.end());
    }
    SUBCASE("simple mu") {
        JobConfig c = base_config("simplicity", 2, "-1/2,-1/3");
        c.confirm = true;
        c.depth = 3;
        Report r = run_command(c);
        CHECK(r.ok);
        CHECK(std::find(r.lines.begin(), r.lines.end(), "  simple = true") != r.lines.end());
    }
}

TEST_CASE("cmd_search reports singular lines and structural checks") {
    JobConfig c = base_config("search", 3, "2,2,0");
    c.depth = 2;
    Report r = run_command(c);
    CHECK(r.ok);
    bool found_line = false, found_checks = false;
    for (const auto& line : r.lines) {
        if (line.find("leading=(0,0,1)") != std::string::npos)
            found_line = true;
        if (line.find("lemma4.6-scalar = pass") != std::string::npos)
            found_checks = true;
    }
    CHECK(found_line);
    CHECK(found_checks);

    JobConfig simple = base_config("search", 2, "-1/2,-1/3");
    simple.depth = 2;
    Report rs = run_command(simple);
    CHECK(rs.ok);
    bool stated_empty = false;
    for (const auto& line : rs.lines)
        if (line.find("no singular vectors up to depth") != std::string::npos)
            stated_empty = true;
    CHECK(stated_empty);
}

TEST_CASE("cmd_verify filter and fault injection") {
    JobConfig c = base_config("verify", 2, "1,0");
    c.depth = 1;
    c.suite = "lemma3.6";
    Report r = run_command(c);
    CHECK(r.ok);
    // Only the filtered suite appears after the config echo.
    long suites_listed = 0;
    for (const auto& line : r.lines)
        if (line.rfind("  lemma", 0) == 0 || line.rfind("  bracket", 0) == 0 ||
            line.rfind("  sigma", 0) == 0 || line.rfind("  embed", 0) == 0 ||
            line.rfind("  iso", 0) == 0)
            ++suites_listed;
    CHECK(suites_listed == 1);

    JobConfig fault = base_config("verify", 2, "1,0");
    fault.depth = 1;
    fault.suite = "bracket-hw";
    fault.inject_fault = true;
    Report rf = run_command(fault);
    CHECK_FALSE(rf.ok);
    bool mismatch_reported = false;
    for (const auto& line : rf.lines)
        if (line.find("FAIL") != std::string::npos &&
            line.find("xy-yx") != std::string::npos)
            mismatch_reported = true;
    CHECK(mismatch_reported);
}

TEST_CASE("cmd_iso runs the intertwining and corollary checks") {
    JobConfig c = base_config("iso", 2, "1,0");
    c.lambda = std::vector<std::string>{"1", "2"};
    c.mu_w = std::vector<std::string>{"1", "0"};
    c.depth = 2;
    Report r = run_command(c);
    CHECK(r.ok);
    bool corollary = false;
    for (const auto& line : r.lines)
        if (line.find("agrees_with_twisted_criterion = true") != std::string::npos)
            corollary = true;
    CHECK(corollary);
}

TEST_CASE("criterion commands fail explicitly off the two-block shape") {
    JobConfig c = base_config("simplicity", 3, "1,2,3");
    CHECK_THROWS_AS(run_command(c), DomainError);
    // the search command accepts any rational mu
    JobConfig s = base_config("search", 3, "1,2,3");
    s.depth = 1;
    CHECK_NOTHROW(run_command(s));
}

TEST_CASE("GVMLAB_MAX_DEPTH is a hard cap") {
    setenv("GVMLAB_MAX_DEPTH", "2", 1);
    CHECK(capped_depth(5) == 2);
    JobConfig c = base_config("search", 2, "0,0");
    c.depth = 3;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.depth = 2;
    CHECK_NOTHROW(c.validate());
    unsetenv("GVMLAB_MAX_DEPTH");
    CHECK(capped_depth(5) == 5);
}
