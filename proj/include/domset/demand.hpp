#pragma once

#include "domset/graph.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace domset {

/// Exact nonnegative rational, kept normalized with den > 0.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long num, long long den);
    static Rational parse(const std::string& text); // "2/3" or "1"
    std::string str() const;

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

/// ceil(a/b) for b > 0, exact for any sign of a.
long long ceil_div(long long a, long long b);

/// Registered demand functions of the vertex degree. The rational ones
/// (half, linear, constant) evaluate exactly; the transcendental ones use
/// doubles with a 1e-9 integer snap before taking the ceiling, so values
/// sitting on a decision boundary resolve deterministically.
struct FFunctionSpec {
    enum class Id { half, sqrt_plus_one, two_log_half, linear, constant };

    Id id = Id::half;
    Rational alpha{1, 2}; // linear only
    long long k = 0;      // constant only

    static FFunctionSpec half();
    static FFunctionSpec sqrt_plus_one();
    static FFunctionSpec two_log_half();
    static FFunctionSpec linear(Rational alpha);
    static FFunctionSpec constant(long long k);

    /// "half", "sqrt_plus_one", "two_log_half", "linear:2/3", "const:4"
    static FFunctionSpec parse(const std::string& text);
    std::string name() const;

    double eval(long long x) const;

    /// max(0, ceil(f(x))) under the snap rule.
    long long ceil_at(long long x) const;

    bool operator==(const FFunctionSpec& o) const {
        return id == o.id && alpha == o.alpha && k == o.k;
    }
};

/// Demand rule: how many neighbors inside the candidate set a vertex
/// outside it must have.
struct DemandSpec {
    enum class Kind { kdom, alpha, fdom, vector };

    Kind kind = Kind::kdom;
    long long k = 1;                // kdom
    Rational alpha{1, 1};           // alpha
    FFunctionSpec f;                // fdom
    std::vector<long long> reqs;    // vector

    static DemandSpec kdom(long long k);
    static DemandSpec alpha_dom(Rational alpha);
    static DemandSpec fdom(FFunctionSpec f);
    static DemandSpec vector_dom(std::vector<long long> reqs);

    /// CLI textual form: k=3, alpha=1/2, f=half, f=linear:2/3, f=const:4,
    /// vector=@file. The loader maps a path to file contents (one integer
    /// per line); by default reads from the filesystem.
    static DemandSpec parse(const std::string& text,
                            const std::function<std::string(const std::string&)>& loader = {});
    std::string text() const;
};

/// Required hits for v when outside the set. Integer hits make
/// ">= alpha*d_v" equivalent to ">= ceil(alpha*d_v)".
long long demand_at(const DemandSpec& spec, const Graph& g, Vertex v);

/// True iff every vertex outside d has at least demand_at(...) neighbors
/// in d. Members of d impose no condition.
bool is_dominating(const Graph& g, const VertexSet& d, const DemandSpec& spec);

/// Shortfall per unsatisfied vertex outside d; empty iff is_dominating.
std::map<Vertex, long long> deficiency(const Graph& g, const VertexSet& d, const DemandSpec& spec);

struct DomWitness {
    VertexSet set;
    std::vector<long long> per_vertex_hits; // |N(v) ∩ set| for every v
    DemandSpec spec;
};

DomWitness make_witness(const Graph& g, const VertexSet& d, const DemandSpec& spec);

/// All pairs 1 <= x < y <= bound with x = ceil(f(y)) and
/// x+1 = ceil(f(x+3)), ascending by (y,x). Empty result is valid.
std::vector<std::pair<long long, long long>> find_xy(const FFunctionSpec& f, long long bound);

} // namespace domset
