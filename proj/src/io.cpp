#include "conscheck/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace conscheck {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? message + " at line " + std::to_string(line) : message),
      line_(line) {}

namespace {

constexpr int kMaxVertices = 100'000'000;

struct Reader {
    std::vector<std::string> lines;
    std::size_t next = 0;

    explicit Reader(const std::string& text) {
        if (text.find('\r') != std::string::npos)
            throw ParseError(0, "carriage return found; lines must end with LF");
        std::size_t start = 0;
        while (start < text.size()) {
            std::size_t nl = text.find('\n', start);
            if (nl == std::string::npos)
                throw ParseError(static_cast<int>(lines.size()) + 1, "missing trailing newline");
            lines.push_back(text.substr(start, nl - start));
            start = nl + 1;
        }
    }

    bool done() const { return next >= lines.size(); }
    // 1-based number of the most recently taken line.
    int lineno() const { return static_cast<int>(next); }

    const std::string& take(const std::string& what) {
        if (done())
            throw ParseError(static_cast<int>(lines.size()) + 1,
                             "unexpected end of file, expected " + what);
        return lines[next++];
    }
    const std::string* peek() const { return done() ? nullptr : &lines[next]; }
};

std::vector<std::string> tokens_of(const std::string& line, int lineno) {
    if (line.empty()) throw ParseError(lineno, "empty line");
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t sp = line.find(' ', start);
        std::string tok =
            line.substr(start, sp == std::string::npos ? std::string::npos : sp - start);
        if (tok.empty()) throw ParseError(lineno, "malformed spacing");
        out.push_back(std::move(tok));
        if (sp == std::string::npos) break;
        start = sp + 1;
    }
    return out;
}

// take() must run before lineno() so token errors blame the taken line;
// as function arguments the two calls would be indeterminately sequenced.
std::vector<std::string> take_tokens(Reader& r, const std::string& what) {
    const std::string& line = r.take(what);
    return tokens_of(line, r.lineno());
}

std::int64_t parse_number(const std::string& tok, int lineno, const std::string& what,
                          std::int64_t max_value) {
    if (tok.empty() || tok.size() > 18) throw ParseError(lineno, "bad " + what);
    for (char c : tok)
        if (c < '0' || c > '9') throw ParseError(lineno, "bad " + what);
    if (tok.size() > 1 && tok[0] == '0') throw ParseError(lineno, "leading zero in " + what);
    std::int64_t value = 0;
    for (char c : tok) value = value * 10 + (c - '0');
    if (value > max_value) throw ParseError(lineno, what + " out of range");
    return value;
}

std::int64_t tagged_number(Reader& r, const std::string& tag, const std::string& what,
                           std::int64_t max_value) {
    auto toks = take_tokens(r, tag + " line");
    if (toks.size() != 2 || toks[0] != tag)
        throw ParseError(r.lineno(), "expected " + tag + " line");
    return parse_number(toks[1], r.lineno(), what, max_value);
}

struct Frame {
    Problem problem = Problem::TwoColoring;
    int n = 0;
    std::optional<int> k;
    std::optional<int> d;
};

Frame read_frame(Reader& r, const std::string& magic) {
    {
        auto toks = take_tokens(r, "header");
        if (toks.size() != 2 || toks[0] != magic || toks[1] != "1")
            throw ParseError(r.lineno(), "expected header \"" + magic + " 1\"");
    }
    Frame f;
    {
        auto toks = take_tokens(r, "PROBLEM line");
        if (toks.size() != 2 || toks[0] != "PROBLEM")
            throw ParseError(r.lineno(), "expected PROBLEM line");
        auto p = problem_from_name(toks[1]);
        if (!p) throw ParseError(r.lineno(), "unknown problem \"" + toks[1] + "\"");
        f.problem = *p;
    }
    f.n = static_cast<int>(tagged_number(r, "N", "n", kMaxVertices));
    if (f.n < 1) throw ParseError(r.lineno(), "n must be >= 1");
    if (problem_has_k(f.problem)) {
        f.k = static_cast<int>(tagged_number(r, "K", "k", 1'000'000'000));
    } else if (const std::string* p = r.peek(); p && p->starts_with("K ")) {
        throw ParseError(r.lineno() + 1, "problem does not take K");
    }
    if (problem_has_d(f.problem)) {
        f.d = static_cast<int>(tagged_number(r, "D", "d", 1'000'000'000));
    } else if (const std::string* p = r.peek(); p && p->starts_with("D ")) {
        throw ParseError(r.lineno() + 1, "problem does not take D");
    }
    return f;
}

EdgeSet read_edges(Reader& r, std::int64_t m, int n, std::optional<int> d) {
    std::vector<Pair> pairs;
    std::set<Pair> seen;
    std::map<int, int> degree;
    for (std::int64_t j = 0; j < m; ++j) {
        auto toks = take_tokens(r, "edge line");
        if (toks.size() != 2) throw ParseError(r.lineno(), "expected edge line \"u v\"");
        const int u = static_cast<int>(parse_number(toks[0], r.lineno(), "vertex", kMaxVertices));
        const int v = static_cast<int>(parse_number(toks[1], r.lineno(), "vertex", kMaxVertices));
        if (u == v) throw ParseError(r.lineno(), "self-loop");
        if (u > v) throw ParseError(r.lineno(), "edge endpoints out of order");
        if (v >= n) throw ParseError(r.lineno(), "edge endpoint out of range");
        const Pair p(u, v);
        if (!seen.insert(p).second) throw ParseError(r.lineno(), "duplicate edge");
        if (d && (++degree[u] > *d || ++degree[v] > *d))
            throw ParseError(r.lineno(), "degree bound d exceeded");
        pairs.push_back(p);
    }
    return EdgeSet::from_pairs(std::move(pairs));
}

std::vector<VertexId> parse_vertex_list(const std::vector<std::string>& toks, std::size_t from,
                                        int lineno) {
    std::vector<VertexId> vs;
    for (std::size_t i = from; i < toks.size(); ++i) {
        vs.push_back(static_cast<int>(parse_number(toks[i], lineno, "vertex", kMaxVertices)));
        if (vs.size() >= 2 && vs[vs.size() - 2] >= vs.back())
            throw ParseError(lineno, "vertex list must be strictly ascending");
    }
    return vs;
}

Pair parse_pair_token(const std::string& tok, int lineno) {
    const std::size_t dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= tok.size())
        throw ParseError(lineno, "expected pair \"u-v\"");
    const int u =
        static_cast<int>(parse_number(tok.substr(0, dash), lineno, "vertex", kMaxVertices));
    const int v =
        static_cast<int>(parse_number(tok.substr(dash + 1), lineno, "vertex", kMaxVertices));
    if (u == v) throw ParseError(lineno, "self-loop");
    if (u > v) throw ParseError(lineno, "pair endpoints out of order");
    return Pair(u, v);
}

/// Shared by verdict ("SOLUTION ...") and scenario ("CONCEPT ...") lines.
Solution parse_solution_tail(Reader& r, const std::vector<std::string>& toks) {
    const int lineno = r.lineno();
    if (toks.size() >= 2 && toks[1] == "VSET")
        return Solution::vset(parse_vertex_list(toks, 2, lineno));
    if (toks.size() >= 2 && toks[1] == "PSET") {
        std::vector<Pair> ps;
        for (std::size_t i = 2; i < toks.size(); ++i) {
            ps.push_back(parse_pair_token(toks[i], lineno));
            if (ps.size() >= 2 && !(ps[ps.size() - 2] < ps.back()))
                throw ParseError(lineno, "pair list must be strictly ascending");
        }
        return Solution::pset(std::move(ps));
    }
    if (toks.size() == 3 && toks[1] == "COVER") {
        const std::int64_t members_count =
            parse_number(toks[2], lineno, "cover size", 10'000'000);
        std::vector<std::vector<VertexId>> members;
        for (std::int64_t i = 0; i < members_count; ++i) {
            auto mt = take_tokens(r, "C line");
            if (mt.size() < 3 || mt[0] != "C")
                throw ParseError(r.lineno(), "expected C line with >= 2 vertices");
            members.push_back(parse_vertex_list(mt, 1, r.lineno()));
        }
        return Solution::cover(std::move(members));
    }
    throw ParseError(lineno, "unrecognized solution form");
}

std::string serialize_solution_tail(const Solution& s) {
    std::string out;
    if (s.is_vset()) {
        out = "VSET";
        for (VertexId x : s.vertices()) out += " " + std::to_string(x);
        out += "\n";
    } else if (s.is_pset()) {
        out = "PSET";
        for (const Pair& p : s.pairs())
            out += " " + std::to_string(p.u) + "-" + std::to_string(p.v);
        out += "\n";
    } else {
        out = "COVER " + std::to_string(s.members().size()) + "\n";
        for (const auto& member : s.members()) {
            out += "C";
            for (VertexId x : member) out += " " + std::to_string(x);
            out += "\n";
        }
    }
    return out;
}

double parse_probability(const std::string& tok, int lineno) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end != begin + tok.size() || !std::isfinite(value) || value < 0.0)
        throw ParseError(lineno, "bad probability");
    return value;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    Reader r(text);
    const Frame f = read_frame(r, "CONSCHECK");
    Instance inst;
    inst.problem = f.problem;
    inst.n = f.n;
    inst.k = f.k;
    inst.d = f.d;
    const std::int64_t t = tagged_number(r, "T", "t", 10'000'000);
    if (t < 1) throw ParseError(r.lineno(), "t must be >= 1");
    for (std::int64_t i = 0; i < t; ++i) {
        auto toks = take_tokens(r, "S line");
        if (toks.size() != 3 || toks[0] != "S")
            throw ParseError(r.lineno(), "expected S line \"S <label> <m>\"");
        if (toks[1] != "0" && toks[1] != "1")
            throw ParseError(r.lineno(), "label must be 0 or 1");
        const int label = toks[1] == "1" ? 1 : 0;
        const std::int64_t m = parse_number(toks[2], r.lineno(), "edge count", 100'000'000);
        inst.samples.push_back({read_edges(r, m, inst.n, inst.d), label});
    }
    if (!r.done()) throw ParseError(r.lineno() + 1, "trailing content");
    try {
        inst.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    inst.validate();
    std::string out =
        "CONSCHECK 1\nPROBLEM " + problem_name(inst.problem) + "\nN " + std::to_string(inst.n) +
        "\n";
    if (inst.k) out += "K " + std::to_string(*inst.k) + "\n";
    if (inst.d) out += "D " + std::to_string(*inst.d) + "\n";
    out += "T " + std::to_string(inst.samples.size()) + "\n";
    for (const Sample& s : inst.samples) {
        out += "S " + std::to_string(s.label) + " " + std::to_string(s.edges.size()) + "\n";
        for (const Pair& p : s.edges.edges())
            out += std::to_string(p.u) + " " + std::to_string(p.v) + "\n";
    }
    return out;
}

Verdict parse_verdict(const std::string& text) {
    try {
        Reader r(text);
        auto toks = take_tokens(r, "verdict line");
        Verdict out = Verdict::no_solution();
        if (toks.size() == 1 && toks[0] == "NO-SOLUTION") {
            // proven absence; nothing further to read
        } else if (!toks.empty() && toks[0] == "SOLUTION") {
            out = Verdict::found(parse_solution_tail(r, toks));
        } else {
            throw ParseError(r.lineno(), "unrecognized verdict");
        }
        if (!r.done()) throw ParseError(r.lineno() + 1, "trailing content");
        return out;
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

std::string serialize_verdict(const Verdict& verdict) {
    if (!verdict.is_found()) return "NO-SOLUTION\n";
    return "SOLUTION " + serialize_solution_tail(*verdict.solution);
}

Scenario parse_scenario(const std::string& text) {
    try {
        Reader r(text);
        const Frame f = read_frame(r, "CONSCHECK-SCENARIO");
        Scenario sc;
        sc.problem = f.problem;
        sc.n = f.n;
        sc.k = f.k;
        sc.d = f.d;
        {
            auto toks = take_tokens(r, "CONCEPT line");
            if (toks.empty() || toks[0] != "CONCEPT")
                throw ParseError(r.lineno(), "expected CONCEPT line");
            sc.target = parse_solution_tail(r, toks);
        }
        const std::int64_t t = tagged_number(r, "T", "t", 10'000'000);
        if (t < 1) throw ParseError(r.lineno(), "t must be >= 1");
        for (std::int64_t i = 0; i < t; ++i) {
            auto toks = take_tokens(r, "S line");
            if (toks.size() != 2 || toks[0] != "S")
                throw ParseError(r.lineno(), "expected S line \"S <m>\"");
            const std::int64_t m = parse_number(toks[1], r.lineno(), "edge count", 100'000'000);
            auto pt = take_tokens(r, "PROB line");
            if (pt.size() != 2 || pt[0] != "PROB")
                throw ParseError(r.lineno(), "expected PROB line");
            const double prob = parse_probability(pt[1], r.lineno());
            sc.dist.support.emplace_back(read_edges(r, m, sc.n, sc.d), prob);
        }
        if (!r.done()) throw ParseError(r.lineno() + 1, "trailing content");
        sc.validate();
        return sc;
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

std::string serialize_scenario(const Scenario& sc) {
    sc.validate();
    std::string out = "CONSCHECK-SCENARIO 1\nPROBLEM " + problem_name(sc.problem) + "\nN " +
                      std::to_string(sc.n) + "\n";
    if (sc.k) out += "K " + std::to_string(*sc.k) + "\n";
    if (sc.d) out += "D " + std::to_string(*sc.d) + "\n";
    out += "CONCEPT " + serialize_solution_tail(sc.target);
    out += "T " + std::to_string(sc.dist.support.size()) + "\n";
    char buf[64];
    for (const auto& [edges, prob] : sc.dist.support) {
        std::snprintf(buf, sizeof buf, "%.17g", prob);
        out += "S " + std::to_string(edges.size()) + "\nPROB " + std::string(buf) + "\n";
        for (const Pair& p : edges.edges())
            out += std::to_string(p.u) + " " + std::to_string(p.v) + "\n";
    }
    return out;
}

}  // namespace conscheck
