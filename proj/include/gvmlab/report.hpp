#pragma once

#include "gvmlab/config.hpp"

#include <string>
#include <vector>

namespace gvmlab {

/// Line-oriented structured report with a stable schema. Everything except the
/// trailing timing line is deterministic for a given config.
struct Report {
    std::vector<std::string> lines;
    bool ok = true;
    bool truncated = false;

    void kv(const std::string& key, const std::string& value) {
        lines.push_back(key + ": " + value);
    }
    void item(const std::string& key, const std::string& value) {
        lines.push_back("  " + key + " = " + value);
    }
    void section(const std::string& name) { lines.push_back(name + ":"); }

    std::string text() const;
};

Report cmd_simplicity(const JobConfig& config);
Report cmd_search(const JobConfig& config);
Report cmd_verify(const JobConfig& config);
Report cmd_iso(const JobConfig& config);

/// Validates, dispatches, echoes the config, and appends status and timing.
Report run_command(const JobConfig& config);

/// Write to config.out or stdout; returns the process exit code (0 iff every
/// executed check passed and no truncation occurred).
int emit_report(const Report& report, const JobConfig& config);

}  // namespace gvmlab
