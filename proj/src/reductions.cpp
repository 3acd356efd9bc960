#include "conscheck/reductions.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <string>

namespace conscheck {

void CnfFormula::validate() const {
    if (num_vars < 1) throw std::invalid_argument("formula needs >= 1 variable");
    for (const auto& clause : clauses) {
        if (clause.empty()) throw std::invalid_argument("empty clause");
        for (int lit : clause)
            if (lit == 0 || std::abs(lit) > num_vars)
                throw std::invalid_argument("literal out of range");
    }
}

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    bool have_header = false;
    int declared_clauses = 0;
    std::vector<int> current;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("dimacs line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            if (have_header) fail("duplicate header");
            if (!(ls >> p >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf")
                fail("malformed problem line");
            have_header = true;
            continue;
        }
        if (!have_header) fail("clause before header");
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.empty()) fail("empty clause");
                f.clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
        if (!ls.eof()) fail("non-integer token");
    }
    ++lineno;
    if (!have_header) fail("missing header");
    if (!current.empty()) fail("unterminated clause");
    if (static_cast<int>(f.clauses.size()) != declared_clauses) fail("clause count mismatch");
    f.validate();
    return f;
}

Instance reduce_sat_to_two_coloring(const CnfFormula& formula) {
    formula.validate();
    Instance inst;
    inst.problem = Problem::TwoColoring;
    inst.n = formula.num_vars + 2;
    inst.samples.push_back({EdgeSet::from_pairs({Pair(0, 1)}), 1});
    for (const auto& clause : formula.clauses) {
        std::set<Pair> edges;
        for (int lit : clause) {
            int var_vertex = std::abs(lit) + 1;
            edges.insert(lit > 0 ? Pair(0, var_vertex) : Pair(1, var_vertex));
        }
        inst.samples.push_back({EdgeSet::from_pairs({edges.begin(), edges.end()}), 0});
    }
    inst.validate();
    return inst;
}

void SetCoverInstance::validate() const {
    if (universe < 1) throw std::invalid_argument("set cover needs >= 1 element");
    if (sets.empty()) throw std::invalid_argument("set cover needs >= 1 set");
    if (k < 1) throw std::invalid_argument("set cover needs k >= 1");
    for (const auto& s : sets) {
        if (s.empty()) throw std::invalid_argument("empty set in family");
        for (int e : s)
            if (e < 1 || e > universe) throw std::invalid_argument("element out of range");
    }
}

namespace {

std::vector<Pair> all_pairs_except(int n, const std::set<Pair>& removed) {
    std::vector<Pair> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Pair p(u, v);
            if (!removed.contains(p)) out.push_back(p);
        }
    return out;
}

std::vector<Pair> all_pairs_avoiding(int n, const std::set<int>& banned) {
    std::vector<Pair> out;
    for (int u = 0; u < n; ++u) {
        if (banned.contains(u)) continue;
        for (int v = u + 1; v < n; ++v) {
            if (banned.contains(v)) continue;
            out.push_back(Pair(u, v));
        }
    }
    return out;
}

}  // namespace

Instance reduce_set_cover_to_matching(const SetCoverInstance& sc) {
    sc.validate();
    const int m = static_cast<int>(sc.sets.size());
    const int k = sc.k;
    Instance inst;
    inst.problem = Problem::Matching;
    inst.n = k * (m + 1);
    inst.k = k;

    std::vector<Pair> star;
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < m; ++l) star.emplace_back(i * (m + 1), i * (m + 1) + 1 + l);
    inst.samples.push_back({EdgeSet::from_pairs(star), 1});

    for (int u = 1; u <= sc.universe; ++u) {
        std::set<Pair> keepers_removed;
        for (int l = 0; l < m; ++l) {
            if (std::find(sc.sets[static_cast<std::size_t>(l)].begin(),
                          sc.sets[static_cast<std::size_t>(l)].end(),
                          u) == sc.sets[static_cast<std::size_t>(l)].end())
                continue;
            for (int i = 0; i < k; ++i) keepers_removed.insert(Pair(i * (m + 1), i * (m + 1) + 1 + l));
        }
        inst.samples.push_back({EdgeSet::from_pairs(all_pairs_except(inst.n, keepers_removed)), 0});
    }
    inst.validate();
    return inst;
}

Instance reduce_set_cover_to_path(const SetCoverInstance& sc) {
    sc.validate();
    const int m = static_cast<int>(sc.sets.size());
    const int k = sc.k;
    Instance inst;
    inst.problem = Problem::Path;
    inst.n = k * (m + 1) + 1;
    inst.k = 2 * k;

    std::vector<Pair> ladder;
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < m; ++l) {
            int leaf = i * (m + 1) + 1 + l;
            ladder.emplace_back(i * (m + 1), leaf);
            ladder.emplace_back(leaf, (i + 1) * (m + 1));
        }
    inst.samples.push_back({EdgeSet::from_pairs(ladder), 1});

    for (int u = 1; u <= sc.universe; ++u) {
        std::set<int> banned;
        for (int l = 0; l < m; ++l) {
            if (std::find(sc.sets[static_cast<std::size_t>(l)].begin(),
                          sc.sets[static_cast<std::size_t>(l)].end(),
                          u) == sc.sets[static_cast<std::size_t>(l)].end())
                continue;
            for (int i = 0; i < k; ++i) banned.insert(i * (m + 1) + 1 + l);
        }
        inst.samples.push_back({EdgeSet::from_pairs(all_pairs_avoiding(inst.n, banned)), 0});
    }

    // Guard samples: one bans every edge at the first block center, the other
    // at the final center.  A consistent 2k-edge path must therefore touch
    // both end centers, which pins it to the center-leaf-center-...-center
    // shape; without the guards a path could start and end at leaf vertices,
    // selecting k+1 sets instead of k.
    inst.samples.push_back({EdgeSet::from_pairs(all_pairs_avoiding(inst.n, {0})), 0});
    inst.samples.push_back({EdgeSet::from_pairs(all_pairs_avoiding(inst.n, {k * (m + 1)})), 0});
    inst.validate();
    return inst;
}

Instance reduce_set_cover_to_independent_set(const SetCoverInstance& sc) {
    sc.validate();
    const int m = static_cast<int>(sc.sets.size());
    Instance inst;
    inst.problem = Problem::IndependentSetDeg;
    inst.n = 2 * m;
    inst.k = 2 * sc.k;
    inst.d = 1;
    for (int u = 1; u <= sc.universe; ++u) {
        std::vector<Pair> edges;
        for (int l = 0; l < m; ++l)
            if (std::find(sc.sets[static_cast<std::size_t>(l)].begin(),
                          sc.sets[static_cast<std::size_t>(l)].end(),
                          u) != sc.sets[static_cast<std::size_t>(l)].end())
                edges.emplace_back(2 * l, 2 * l + 1);
        inst.samples.push_back({EdgeSet::from_pairs(std::move(edges)), 0});
    }
    inst.validate();
    return inst;
}

void GraphInstance::validate() const {
    if (n < 1) throw std::invalid_argument("graph needs >= 1 vertex");
    if (k < 0) throw std::invalid_argument("graph instance needs k >= 0");
    for (const Pair& e : edges)
        if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
}

Instance reduce_independent_set(const GraphInstance& g) {
    g.validate();
    Instance inst;
    inst.problem = Problem::IndependentSetDeg;
    inst.n = g.n;
    inst.k = g.k;
    inst.d = 1;
    if (g.edges.empty()) {
        inst.samples.push_back({EdgeSet{}, 1});
    } else {
        for (const Pair& e : g.edges) inst.samples.push_back({EdgeSet::from_pairs({e}), 1});
    }
    inst.validate();
    return inst;
}

}  // namespace conscheck
