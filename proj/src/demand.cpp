#include "domset/demand.hpp"
#include "domset/errors.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace domset {

long long ceil_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return q + ((r != 0 && (r > 0) == (b > 0)) ? 1 : 0);
}

Rational Rational::of(long long num, long long den) {
    if (den <= 0) throw PreconditionError("rational needs positive denominator");
    if (num < 0) throw PreconditionError("rational must be nonnegative");
    long long g = std::gcd(num, den);
    if (g == 0) g = 1;
    return Rational{num / g, den / g};
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            long long v = std::stoll(text, &used);
            if (used != text.size()) throw ParseError("bad rational: " + text);
            return Rational::of(v, 1);
        }
        long long num = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw ParseError("bad rational: " + text);
        long long den = std::stoll(text.substr(slash + 1), &used);
        if (used != text.size() - slash - 1) throw ParseError("bad rational: " + text);
        return Rational::of(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational: " + text);
    } catch (const std::out_of_range&) {
        throw ParseError("rational out of range: " + text);
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

FFunctionSpec FFunctionSpec::half() { return FFunctionSpec{Id::half, {1, 2}, 0}; }
FFunctionSpec FFunctionSpec::sqrt_plus_one() { return FFunctionSpec{Id::sqrt_plus_one, {0, 1}, 0}; }
FFunctionSpec FFunctionSpec::two_log_half() { return FFunctionSpec{Id::two_log_half, {0, 1}, 0}; }

FFunctionSpec FFunctionSpec::linear(Rational alpha) {
    if (alpha.num <= 0) throw PreconditionError("linear f needs alpha > 0");
    return FFunctionSpec{Id::linear, alpha, 0};
}

FFunctionSpec FFunctionSpec::constant(long long k) {
    if (k < 1) throw PreconditionError("constant f needs k >= 1");
    return FFunctionSpec{Id::constant, {0, 1}, k};
}

FFunctionSpec FFunctionSpec::parse(const std::string& text) {
    if (text == "half") return half();
    if (text == "sqrt_plus_one") return sqrt_plus_one();
    if (text == "two_log_half") return two_log_half();
    if (text.rfind("linear:", 0) == 0) return linear(Rational::parse(text.substr(7)));
    if (text.rfind("const:", 0) == 0) {
        Rational r = Rational::parse(text.substr(6));
        if (r.den != 1) throw ParseError("const f needs an integer: " + text);
        return constant(r.num);
    }
    throw ParseError("unknown f function: " + text);
}

std::string FFunctionSpec::name() const {
    switch (id) {
    case Id::half: return "half";
    case Id::sqrt_plus_one: return "sqrt_plus_one";
    case Id::two_log_half: return "two_log_half";
    case Id::linear: return "linear:" + alpha.str();
    case Id::constant: return "const:" + std::to_string(k);
    }
    return "?";
}

double FFunctionSpec::eval(long long x) const {
    switch (id) {
    case Id::half: return static_cast<double>(x) / 2.0;
    case Id::sqrt_plus_one: return std::sqrt(static_cast<double>(x)) + 1.0;
    case Id::two_log_half: return 2.0 * std::log1p(static_cast<double>(x) / 2.0);
    case Id::linear:
        return static_cast<double>(alpha.num) * static_cast<double>(x) /
               static_cast<double>(alpha.den);
    case Id::constant: return static_cast<double>(k);
    }
    return 0.0;
}

namespace {

long long snap_ceil(double value) {
    double r = std::nearbyint(value);
    if (std::abs(value - r) <= 1e-9) return static_cast<long long>(r);
    return static_cast<long long>(std::ceil(value));
}

} // namespace

long long FFunctionSpec::ceil_at(long long x) const {
    long long raw;
    switch (id) {
    case Id::half: raw = ceil_div(x, 2); break;
    case Id::linear: raw = ceil_div(alpha.num * x, alpha.den); break;
    case Id::constant: raw = k; break;
    default: raw = snap_ceil(eval(x)); break;
    }
    return raw < 0 ? 0 : raw;
}

DemandSpec DemandSpec::kdom(long long k) {
    if (k < 1) throw PreconditionError("k-domination needs k >= 1");
    DemandSpec s;
    s.kind = Kind::kdom;
    s.k = k;
    return s;
}

DemandSpec DemandSpec::alpha_dom(Rational alpha) {
    if (alpha.num <= 0 || alpha.num > alpha.den)
        throw PreconditionError("alpha-domination needs 0 < alpha <= 1");
    DemandSpec s;
    s.kind = Kind::alpha;
    s.alpha = alpha;
    return s;
}

DemandSpec DemandSpec::fdom(FFunctionSpec f) {
    DemandSpec s;
    s.kind = Kind::fdom;
    s.f = f;
    return s;
}

DemandSpec DemandSpec::vector_dom(std::vector<long long> reqs) {
    for (long long r : reqs)
        if (r < 0) throw PreconditionError("vector demands must be nonnegative");
    DemandSpec s;
    s.kind = Kind::vector;
    s.reqs = std::move(reqs);
    return s;
}

DemandSpec DemandSpec::parse(const std::string& text,
                             const std::function<std::string(const std::string&)>& loader) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("demand spec needs key=value: " + text);
    std::string key = text.substr(0, eq), value = text.substr(eq + 1);
    if (key == "k") {
        Rational r = Rational::parse(value);
        if (r.den != 1) throw ParseError("k must be an integer: " + text);
        return kdom(r.num);
    }
    if (key == "alpha") return alpha_dom(Rational::parse(value));
    if (key == "f") return fdom(FFunctionSpec::parse(value));
    if (key == "vector") {
        if (value.empty() || value[0] != '@')
            throw ParseError("vector spec needs @file: " + text);
        std::string path = value.substr(1);
        std::string contents;
        if (loader) {
            contents = loader(path);
        } else {
            std::ifstream in(path);
            if (!in) throw ParseError("cannot open vector file: " + path);
            std::ostringstream buf;
            buf << in.rdbuf();
            contents = buf.str();
        }
        std::istringstream in(contents);
        std::vector<long long> reqs;
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            long long r;
            if (!(ls >> r)) {
                std::string junk;
                std::istringstream ls2(line);
                if (ls2 >> junk) throw ParseError("bad vector line: " + line);
                continue; // blank
            }
            std::string rest;
            if (ls >> rest) throw ParseError("bad vector line: " + line);
            reqs.push_back(r);
        }
        return vector_dom(std::move(reqs));
    }
    throw ParseError("unknown demand spec: " + text);
}

std::string DemandSpec::text() const {
    switch (kind) {
    case Kind::kdom: return "k=" + std::to_string(k);
    case Kind::alpha: return "alpha=" + alpha.str();
    case Kind::fdom: return "f=" + f.name();
    case Kind::vector: return "vector[" + std::to_string(reqs.size()) + "]";
    }
    return "?";
}

long long demand_at(const DemandSpec& spec, const Graph& g, Vertex v) {
    if (v < 0 || v >= g.n) throw PreconditionError("vertex out of range: " + std::to_string(v));
    long long d = static_cast<long long>(g.adj[v].size());
    switch (spec.kind) {
    case DemandSpec::Kind::kdom: return spec.k;
    case DemandSpec::Kind::alpha: return ceil_div(spec.alpha.num * d, spec.alpha.den);
    case DemandSpec::Kind::fdom: return spec.f.ceil_at(d);
    case DemandSpec::Kind::vector:
        if (static_cast<size_t>(v) >= spec.reqs.size())
            throw PreconditionError("vector demand list shorter than graph");
        return spec.reqs[v];
    }
    return 0;
}

namespace {

std::vector<long long> hits_inside(const Graph& g, const VertexSet& d) {
    std::vector<long long> hits(g.n, 0);
    for (Vertex u : d.members)
        for (Vertex w : g.adj[u]) ++hits[w];
    return hits;
}

} // namespace

bool is_dominating(const Graph& g, const VertexSet& d, const DemandSpec& spec) {
    if (d.universe != g.n) throw PreconditionError("vertex set universe mismatch");
    const auto in = d.mask();
    const auto hits = hits_inside(g, d);
    for (Vertex v = 0; v < g.n; ++v)
        if (!in[v] && hits[v] < demand_at(spec, g, v)) return false;
    return true;
}

std::map<Vertex, long long> deficiency(const Graph& g, const VertexSet& d, const DemandSpec& spec) {
    if (d.universe != g.n) throw PreconditionError("vertex set universe mismatch");
    const auto in = d.mask();
    const auto hits = hits_inside(g, d);
    std::map<Vertex, long long> shortfall;
    for (Vertex v = 0; v < g.n; ++v) {
        if (in[v]) continue;
        long long need = demand_at(spec, g, v);
        if (hits[v] < need) shortfall[v] = need - hits[v];
    }
    return shortfall;
}

DomWitness make_witness(const Graph& g, const VertexSet& d, const DemandSpec& spec) {
    if (d.universe != g.n) throw PreconditionError("vertex set universe mismatch");
    return DomWitness{d, hits_inside(g, d), spec};
}

std::vector<std::pair<long long, long long>> find_xy(const FFunctionSpec& f, long long bound) {
    if (bound < 3) throw PreconditionError("find_xy needs bound >= 3");
    std::vector<std::pair<long long, long long>> pairs;
    for (long long y = 2; y <= bound; ++y)
        for (long long x = 1; x < y; ++x)
            if (f.ceil_at(y) == x && f.ceil_at(x + 3) == x + 1) pairs.emplace_back(x, y);
    return pairs;
}

} // namespace domset
