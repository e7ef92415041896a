#pragma once

#include "gvmlab/weight.hpp"
#include "gvmlab/witt.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gvmlab {

/// One run's worth of configuration: a flat key=value file plus command-line
/// overrides; rationals stay strings until use so no float ever touches them.
struct JobConfig {
    std::string command;  // simplicity | search | verify | iso
    long m = 0;
    std::vector<std::string> mu;
    std::optional<long> ibar;  // 1-based; auto-detected from mu when omitted
    long depth = 3;
    std::optional<std::vector<std::string>> lambda;
    std::optional<std::vector<std::string>> mu_w;
    bool confirm = false;
    std::string suite;  // cmd_verify filter; empty = all suites
    std::string out;    // report destination; empty = stdout
    bool inject_fault = false;  // harness self-test fixture

    Weight mu_weight() const;
    std::optional<Weight> mu_w_weight() const;
    std::optional<Lambda> lambda_value() const;
    std::optional<std::size_t> ibar_value() const;

    /// Throws ConfigError naming the offending field.
    void validate() const;

    /// Stable key order; parsing the echo reproduces the run bit-exactly.
    std::vector<std::pair<std::string, std::string>> echo() const;
};

/// key=value lines; '#' starts a comment; lists are comma-separated.
JobConfig parse_config_text(const std::string& text);
JobConfig parse_config_file(const std::string& path);

/// Applies one key=value pair (the config-file grammar) onto a config.
void apply_config_entry(JobConfig& config, const std::string& key, const std::string& value);

/// GVMLAB_MAX_DEPTH, when set, is a hard safety cap on every depth in a run.
std::optional<long> env_depth_cap();
/// min(depth, cap); the extra slack internal engines request is capped too.
long capped_depth(long wanted);

}  // namespace gvmlab
