#include "gvmlab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gvmlab {

namespace {
std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !out.empty())
        out.push_back(trim(cur));
    return out;
}

std::string join_list(const std::vector<std::string>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            s += ",";
        s += items[i];
    }
    return s;
}

std::vector<std::string> canonical_rationals(const std::vector<std::string>& raw,
                                             const std::string& field) {
    std::vector<std::string> out;
    for (const auto& s : raw) {
        try {
            out.push_back(Rational::parse(s).str());
        } catch (const DomainError&) {
            throw ConfigError("config: bad rational '" + s + "' in field '" + field + "'");
        }
    }
    return out;
}
}  // namespace

Weight JobConfig::mu_weight() const {
    std::vector<Rational> entries;
    for (const auto& s : mu)
        entries.push_back(Rational::parse(s));
    return Weight(std::move(entries));
}

std::optional<Weight> JobConfig::mu_w_weight() const {
    if (!mu_w)
        return std::nullopt;
    std::vector<Rational> entries;
    for (const auto& s : *mu_w)
        entries.push_back(Rational::parse(s));
    return Weight(std::move(entries));
}

std::optional<Lambda> JobConfig::lambda_value() const {
    if (!lambda)
        return std::nullopt;
    std::vector<Rational> entries;
    for (const auto& s : *lambda)
        entries.push_back(Rational::parse(s));
    return Lambda(std::move(entries));
}

std::optional<std::size_t> JobConfig::ibar_value() const {
    if (!ibar)
        return std::nullopt;
    return static_cast<std::size_t>(*ibar);
}

void JobConfig::validate() const {
    if (command != "simplicity" && command != "search" && command != "verify" &&
        command != "iso")
        throw ConfigError("config: unknown command '" + command + "'");
    if (m < 1)
        throw ConfigError("config: field 'm' must be >= 1");
    if (mu.empty())
        throw ConfigError("config: field 'mu' is required");
    if (static_cast<long>(mu.size()) != m)
        throw ConfigError("config: field 'mu' must have m = " + std::to_string(m) +
                          " entries");
    canonical_rationals(mu, "mu");
    if (ibar && (*ibar < 1 || *ibar > m))
        throw ConfigError("config: field 'ibar' out of range 1..m");
    if (depth < 1)
        throw ConfigError("config: field 'depth' must be >= 1");
    if (auto cap = env_depth_cap(); cap && depth > *cap)
        throw ConfigError("config: field 'depth' exceeds GVMLAB_MAX_DEPTH = " +
                          std::to_string(*cap));
    if (lambda) {
        if (static_cast<long>(lambda->size()) != m)
            throw ConfigError("config: field 'lambda' must have m entries");
        for (const auto& s : canonical_rationals(*lambda, "lambda"))
            if (Rational::parse(s).is_zero())
                throw ConfigError("config: field 'lambda' entries must be nonzero");
    }
    if (mu_w) {
        if (static_cast<long>(mu_w->size()) != m)
            throw ConfigError("config: field 'mu_w' must have m entries");
        canonical_rationals(*mu_w, "mu_w");
    }
    if (command == "iso") {
        if (!lambda)
            throw ConfigError("config: command 'iso' needs field 'lambda'");
        if (!mu_w)
            throw ConfigError("config: command 'iso' needs field 'mu_w'");
    }
}

std::vector<std::pair<std::string, std::string>> JobConfig::echo() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("command", command);
    out.emplace_back("m", std::to_string(m));
    out.emplace_back("mu", join_list(canonical_rationals(mu, "mu")));
    if (ibar)
        out.emplace_back("ibar", std::to_string(*ibar));
    out.emplace_back("depth", std::to_string(depth));
    if (lambda)
        out.emplace_back("lambda", join_list(canonical_rationals(*lambda, "lambda")));
    if (mu_w)
        out.emplace_back("mu_w", join_list(canonical_rationals(*mu_w, "mu_w")));
    out.emplace_back("confirm", confirm ? "true" : "false");
    if (!suite.empty())
        out.emplace_back("suite", suite);
    if (inject_fault)
        out.emplace_back("inject_fault", "true");
    return out;
}

void apply_config_entry(JobConfig& config, const std::string& key, const std::string& value) {
    if (key == "command") {
        config.command = value;
    } else if (key == "m") {
        config.m = std::stol(value);
    } else if (key == "mu") {
        config.mu = split_list(value);
    } else if (key == "ibar") {
        config.ibar = std::stol(value);
    } else if (key == "depth") {
        config.depth = std::stol(value);
    } else if (key == "lambda") {
        config.lambda = split_list(value);
    } else if (key == "mu_w") {
        config.mu_w = split_list(value);
    } else if (key == "confirm") {
        config.confirm = (value == "true" || value == "1");
    } else if (key == "suite") {
        config.suite = value;
    } else if (key == "out") {
        config.out = value;
    } else if (key == "inject_fault") {
        config.inject_fault = (value == "true" || value == "1");
    } else {
        throw ConfigError("config: unknown key '" + key + "'");
    }
}

JobConfig parse_config_text(const std::string& text) {
    JobConfig config;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key=value, got '" + line + "'");
        apply_config_entry(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return config;
}

JobConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::optional<long> env_depth_cap() {
    const char* raw = std::getenv("GVMLAB_MAX_DEPTH");
    if (!raw || !*raw)
        return std::nullopt;
    try {
        return std::stol(raw);
    } catch (...) {
        throw ConfigError("GVMLAB_MAX_DEPTH is not an integer");
    }
}

long capped_depth(long wanted) {
    if (auto cap = env_depth_cap())
        return std::min(wanted, *cap);
    return wanted;
}

}  // namespace gvmlab
