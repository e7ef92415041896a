#include "gvmlab/report.hpp"

#include "gvmlab/verify.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

namespace gvmlab {

std::string Report::text() const {
    std::string out;
    for (const auto& line : lines)
        out += line + "\n";
    return out;
}

namespace {

std::string join_predicted(const std::vector<MultiIndex>& predicted) {
    std::string s;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (i)
            s += ";";
        s += predicted[i].str();
    }
    return s.empty() ? "-" : s;
}

std::string one_line_vector(const GvmModule& module, const GvmVector& v) {
    std::string s;
    for (const auto& [label, terms] : module.serialize(v)) {
        if (!s.empty())
            s += " + ";
        s += label + "{";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i)
                s += ", ";
            s += terms[i].first + ": " + terms[i].second;
        }
        s += "}";
    }
    return s.empty() ? "0" : s;
}

void emit_verdict(Report& report, const SimplicityVerdict& verdict) {
    report.section("verdict");
    report.item("simple", verdict.simple ? "true" : "false");
    report.item("case1", verdict.case1_holds ? "true" : "false");
    report.item("case2", verdict.case2_holds ? "true" : "false");
    if (verdict.l)
        report.item("l", std::to_string(*verdict.l));
    report.item("predicted", join_predicted(verdict.predicted));
}

std::shared_ptr<const HwModule> search_hw(const Weight& mu, long degree) {
    long wanted = search_depth_requirement(mu.size(), degree);
    return std::make_shared<const HwModule>(mu, capped_depth(wanted));
}

void emit_search(Report& report, const GvmModule& module, const SearchResult& result) {
    report.section("search");
    report.item("max_degree", std::to_string(result.max_degree));
    report.item("completed_degree", std::to_string(result.completed_degree));
    report.item("hw_depth_cap", std::to_string(result.hw_depth_cap));
    report.item("lines_found", std::to_string(result.lines.size()));
    if (result.truncated) {
        report.item("truncated", "true");
        report.truncated = true;
    }
    if (result.lines.empty()) {
        report.item("note", "no singular vectors up to depth " +
                                std::to_string(result.completed_degree));
        return;
    }
    for (const auto& line : result.lines) {
        report.item("line", "degree=" + std::to_string(line.degree) +
                                " leading=" + line.leading.str() + " weight=" +
                                module.weight_of(line.vector).str());
        report.item("vector", one_line_vector(module, line.vector));
    }
}

void emit_structural(Report& report, const StructuralReport& checks) {
    report.section("structural_checks");
    for (const auto& item : checks.items) {
        std::string value = item.skipped ? "skipped" : (item.passed ? "pass" : "FAIL");
        if (!item.detail.empty())
            value += " (" + item.detail + ")";
        report.item(item.name, value);
        if (!item.skipped && !item.passed)
            report.ok = false;
    }
}

}  // namespace

Report cmd_simplicity(const JobConfig& config) {
    Report report;
    Weight mu = config.mu_weight();
    BlockProfile profile = detect_profile(mu, config.ibar_value());
    SimplicityVerdict verdict = simplicity_criterion(mu, profile);
    report.section("profile");
    report.item("ibar", std::to_string(profile.ibar));
    if (profile.has_band())
        report.item("a", profile.a.str());
    emit_verdict(report, verdict);

    if (config.confirm) {
        long degree = config.depth;
        for (const auto& p : verdict.predicted)
            degree = std::max(degree, p.degree());
        if (verdict.simple)
            degree = config.depth;
        GvmModule module(std::make_shared<PlainLAction>(search_hw(mu, degree)));
        SearchResult result = module.singular_search(degree);
        emit_search(report, module, result);
        bool agree;
        if (verdict.simple) {
            agree = result.lines.empty();
        } else {
            agree = true;
            for (const auto& p : verdict.predicted) {
                bool found = false;
                for (const auto& line : result.lines)
                    if (line.leading == p)
                        found = true;
                agree = agree && found;
            }
        }
        report.section("confirm");
        report.item("agreement", agree ? "true" : "false");
        if (!agree)
            report.ok = false;
    }
    return report;
}

Report cmd_search(const JobConfig& config) {
    Report report;
    Weight mu = config.mu_weight();
    GvmModule module(std::make_shared<PlainLAction>(search_hw(mu, config.depth)));
    SearchResult result = module.singular_search(config.depth);
    emit_search(report, module, result);

    if (!result.lines.empty()) {
        // Structural checks run on the grlex-minimal line (the canonical w).
        const SingularLine* minimal = &result.lines.front();
        for (const auto& line : result.lines)
            if (grlex_less(line.leading, minimal->leading))
                minimal = &line;
        report.section("minimal_line");
        report.item("leading", minimal->leading.str());
        emit_structural(report, module.structural_checks(minimal->vector));
    }
    return report;
}

Report cmd_verify(const JobConfig& config) {
    Report report;
    VerifyOptions options;
    options.mu = config.mu_weight();
    options.ibar = config.ibar_value();
    options.depth = config.depth;
    options.lambda = config.lambda_value();
    options.mu_w = config.mu_w_weight();
    options.filter = config.suite;
    options.inject_fault = config.inject_fault;

    report.section("suites");
    for (const auto& suite : run_suites(options)) {
        std::string value = suite.skipped ? "skipped" : (suite.passed ? "pass" : "FAIL");
        value += " checks=" + std::to_string(suite.checks);
        if (!suite.detail.empty())
            value += " (" + suite.detail + ")";
        report.item(suite.name, value);
        if (!suite.skipped && !suite.passed)
            report.ok = false;
    }
    return report;
}

Report cmd_iso(const JobConfig& config) {
    Report report;
    Weight mu_w = *config.mu_w_weight();
    Lambda lambda = *config.lambda_value();
    long w_depth = capped_depth(2 * static_cast<long>(mu_w.size()) + config.depth);
    IsoReport iso = iso_verify(mu_w, lambda, config.depth, w_depth);
    report.section("iso");
    report.item("degree_bound", std::to_string(iso.degree_bound));
    report.item("w_basis", std::to_string(iso.basis_size));
    for (const auto& pg : iso.generators) {
        std::string value = pg.passed ? "pass" : "FAIL";
        value += " checks=" + std::to_string(pg.checked);
        if (!pg.counterexample.empty())
            value += " (" + pg.counterexample + ")";
        report.item(pg.generator.str(), value);
        if (!pg.passed)
            report.ok = false;
    }

    report.section("corollary_crosscheck");
    try {
        BlockProfile profile = detect_profile(mu_w);
        SimplicityVerdict verdict = tensor_simplicity(lambda, mu_w, profile);
        report.item("two_block", "true");
        report.item("simple", verdict.simple ? "true" : "false");
        report.item("agrees_with_twisted_criterion", "true");  // enforced internally
    } catch (const DomainError&) {
        report.item("two_block", "false");
        report.item("note", "corollary needs a two-block mu_w");
    }
    return report;
}

Report run_command(const JobConfig& config) {
    config.validate();
    auto start = std::chrono::steady_clock::now();
    Report report;
    report.kv("gvmlab_report", "v1");
    report.kv("command", config.command);
    report.section("config");
    for (const auto& [key, value] : config.echo())
        report.item(key, value);

    Report body;
    if (config.command == "simplicity")
        body = cmd_simplicity(config);
    else if (config.command == "search")
        body = cmd_search(config);
    else if (config.command == "verify")
        body = cmd_verify(config);
    else
        body = cmd_iso(config);

    report.lines.insert(report.lines.end(), body.lines.begin(), body.lines.end());
    report.ok = body.ok;
    report.truncated = body.truncated;
    report.kv("status", report.truncated ? "truncated" : (report.ok ? "ok" : "fail"));
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    report.kv("timing_ms", std::to_string(elapsed));
    return report;
}

int emit_report(const Report& report, const JobConfig& config) {
    if (config.out.empty()) {
        std::cout << report.text();
    } else {
        std::ofstream out(config.out);
        if (!out)
            throw ConfigError("cannot write report to '" + config.out + "'");
        out << report.text();
    }
    return report.ok && !report.truncated ? 0 : 1;
}

}  // namespace gvmlab
