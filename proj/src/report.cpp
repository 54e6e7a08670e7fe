#include "domset/report.hpp"
#include "domset/errors.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace domset {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string SolveReport::to_json() const {
    nlohmann::ordered_json j;
    j["instance"] = instance;
    j["n"] = n;
    j["m"] = m;
    j["max_deg"] = max_deg;
    j["min_deg"] = min_deg;
    j["spec"] = spec_text;
    j["solver"] = solver;
    j["size"] = size;
    if (optimum) j["optimum"] = *optimum;
    if (ratio) j["ratio"] = *ratio;
    if (certified_bound) j["bound"] = *certified_bound;
    j["escalated"] = escalated;
    j["seed"] = seed;
    j["wall_ms"] = wall_ms;
    return j.dump();
}

std::string SolveReport::csv_header(bool include_timing) {
    std::string h = "instance,n,m,max_deg,min_deg,spec,solver,size,optimum,ratio,bound,escalated,seed";
    if (include_timing) h += ",wall_ms";
    return h;
}

std::string SolveReport::csv_row(bool include_timing) const {
    std::ostringstream out;
    out << instance << ',' << n << ',' << m << ',' << max_deg << ',' << min_deg << ','
        << spec_text << ',' << solver << ',' << size << ','
        << (optimum ? std::to_string(*optimum) : "") << ','
        << (ratio ? format_double(*ratio) : "") << ','
        << (certified_bound ? format_double(*certified_bound) : "") << ','
        << (escalated ? 1 : 0) << ',' << seed;
    if (include_timing) out << ',' << format_double(wall_ms);
    return out.str();
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        cur = trim(cur);
        if (!cur.empty()) parts.push_back(cur);
    }
    return parts;
}

long long to_ll(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw ParseError("bad " + what + ": " + s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad " + what + ": " + s);
    }
}

} // namespace

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    bool have_generator = false;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("config line needs key=value: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "generator") {
            std::istringstream gs(value);
            std::string kind;
            gs >> kind;
            cfg.generator_kind = kind;
            std::string tok;
            while (gs >> tok) {
                auto teq = tok.find('=');
                if (teq == std::string::npos)
                    throw ParseError("generator token needs key=value: " + tok);
                std::string tk = tok.substr(0, teq), tv = tok.substr(teq + 1);
                if (tk == "n") cfg.n = static_cast<int>(to_ll(tv, "n"));
                else if (tk == "d") cfg.d = static_cast<int>(to_ll(tv, "d"));
                else if (tk == "n1") cfg.n1 = static_cast<int>(to_ll(tv, "n1"));
                else if (tk == "n2") cfg.n2 = static_cast<int>(to_ll(tv, "n2"));
                else if (tk == "p") cfg.p = Rational::parse(tv);
                else throw ParseError("unknown generator key: " + tk);
            }
            have_generator = true;
        } else if (key == "count") {
            cfg.count = static_cast<int>(to_ll(value, "count"));
            if (cfg.count < 1) throw ParseError("count must be >= 1");
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(to_ll(value, "seed"));
        } else if (key == "specs") {
            cfg.spec_texts = split_list(value, ';');
        } else if (key == "solvers") {
            cfg.solvers = split_list(value, ';');
        } else if (key == "budget") {
            cfg.budget = to_ll(value, "budget");
            if (cfg.budget <= 0) throw ParseError("budget must be positive");
        } else if (key == "require_exact") {
            if (value == "true") cfg.require_exact = true;
            else if (value == "false") cfg.require_exact = false;
            else throw ParseError("require_exact must be true or false");
        } else if (key == "out") {
            cfg.out_path = value;
        } else {
            throw ParseError("unknown config key: " + key);
        }
    }
    if (!have_generator) throw ParseError("config is missing a generator line");
    if (cfg.spec_texts.empty()) throw ParseError("config is missing specs");
    if (cfg.solvers.empty()) throw ParseError("config is missing solvers");
    return cfg;
}

} // namespace domset
