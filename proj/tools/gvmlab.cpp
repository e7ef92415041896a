#include "gvmlab/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
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

void add_common_options(CLI::App* cmd, gvmlab::JobConfig& config, std::string& config_path,
                        std::string& mu_csv, std::string& lambda_csv, std::string& mu_w_csv,
                        long& ibar_flag) {
    cmd->add_option("--config", config_path, "key=value config file; flags override it");
    cmd->add_option("--m", config.m, "rank of gl(m)");
    cmd->add_option("--mu", mu_csv, "highest weight, comma-separated rationals");
    cmd->add_option("--ibar", ibar_flag, "two-block split point (1-based)");
    cmd->add_option("--depth", config.depth, "search / suite depth");
    cmd->add_option("--lambda", lambda_csv, "nonzero rationals for Omega(lambda)");
    cmd->add_option("--mu-w", mu_w_csv, "highest weight of the tensor factor W");
    cmd->add_option("--out", config.out, "write the report to this file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for generalized Verma and tensor modules"};
    app.require_subcommand(1);

    gvmlab::JobConfig config;
    std::string config_path, mu_csv, lambda_csv, mu_w_csv;
    long ibar_flag = 0;

    auto* simplicity = app.add_subcommand("simplicity", "two-block simplicity verdict");
    add_common_options(simplicity, config, config_path, mu_csv, lambda_csv, mu_w_csv,
                       ibar_flag);
    simplicity->add_flag("--confirm", config.confirm,
                         "confirm the verdict by brute-force kernel search");

    auto* search = app.add_subcommand("search", "singular vector search");
    add_common_options(search, config, config_path, mu_csv, lambda_csv, mu_w_csv, ibar_flag);

    auto* verify = app.add_subcommand("verify", "cross-module property suites");
    add_common_options(verify, config, config_path, mu_csv, lambda_csv, mu_w_csv, ibar_flag);
    verify->add_option("--suite", config.suite, "substring filter on suite names");
    verify->add_flag("--inject-fault", config.inject_fault,
                     "harness self-test: corrupt one bracket check")
        ->group("");  // hidden

    auto* iso = app.add_subcommand("iso", "tensor-module equivalence checks");
    add_common_options(iso, config, config_path, mu_csv, lambda_csv, mu_w_csv, ibar_flag);

    CLI11_PARSE(app, argc, argv);

    try {
        gvmlab::JobConfig base;
        if (!config_path.empty())
            base = gvmlab::parse_config_file(config_path);

        // Command-line values override the file.
        CLI::App* active = app.get_subcommands().front();
        base.command = active->get_name();
        if (active->count("--m"))
            base.m = config.m;
        if (active->count("--mu"))
            base.mu = split_commas(mu_csv);
        if (active->count("--ibar"))
            base.ibar = ibar_flag;
        if (active->count("--depth"))
            base.depth = config.depth;
        if (active->count("--lambda"))
            base.lambda = split_commas(lambda_csv);
        if (active->count("--mu-w"))
            base.mu_w = split_commas(mu_w_csv);
        if (active->count("--out"))
            base.out = config.out;
        if (config.confirm)
            base.confirm = true;
        if (!config.suite.empty())
            base.suite = config.suite;
        if (config.inject_fault)
            base.inject_fault = true;
        if (base.m == 0 && !base.mu.empty())
            base.m = static_cast<long>(base.mu.size());

        gvmlab::Report report = gvmlab::run_command(base);
        return gvmlab::emit_report(report, base);
    } catch (const gvmlab::ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const gvmlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
