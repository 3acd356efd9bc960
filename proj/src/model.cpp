#include "conscheck/model.hpp"

#include <algorithm>

namespace conscheck {

Pair::Pair(VertexId a, VertexId b) {
    if (a == b) throw std::invalid_argument("pair endpoints must differ");
    u = std::min(a, b);
    v = std::max(a, b);
}

EdgeSet EdgeSet::from_pairs(std::vector<Pair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw std::invalid_argument("duplicate edge in edge set");
    EdgeSet s;
    s.edges_ = std::move(pairs);
    return s;
}

bool EdgeSet::contains(Pair p) const {
    return std::binary_search(edges_.begin(), edges_.end(), p);
}

int EdgeSet::max_vertex() const {
    int m = -1;
    for (const Pair& e : edges_) m = std::max(m, e.v);
    return m;
}

int EdgeSet::max_degree(int n) const {
    std::vector<int> deg(static_cast<std::size_t>(std::max(n, 0)), 0);
    int best = 0;
    for (const Pair& e : edges_) {
        best = std::max(best, ++deg[static_cast<std::size_t>(e.u)]);
        best = std::max(best, ++deg[static_cast<std::size_t>(e.v)]);
    }
    return best;
}

EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b) {
    std::vector<Pair> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                   std::back_inserter(out));
    return EdgeSet::from_pairs(std::move(out));
}

EdgeSet edge_intersection(const EdgeSet& a, const EdgeSet& b) {
    std::vector<Pair> out;
    std::set_intersection(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                          std::back_inserter(out));
    return EdgeSet::from_pairs(std::move(out));
}

std::string problem_name(Problem p) {
    switch (p) {
        case Problem::TwoColoring: return "two-coloring";
        case Problem::SplitGraph: return "split-graph";
        case Problem::Matching: return "matching";
        case Problem::Path: return "path";
        case Problem::EdgeCliqueCover: return "edge-clique-cover";
        case Problem::IndependentSetDeg: return "independent-set-deg";
        case Problem::DominatingSetDeg: return "dominating-set-deg";
    }
    throw std::logic_error("unreachable");
}

std::optional<Problem> problem_from_name(const std::string& name) {
    for (Problem p : {Problem::TwoColoring, Problem::SplitGraph, Problem::Matching, Problem::Path,
                      Problem::EdgeCliqueCover, Problem::IndependentSetDeg, Problem::DominatingSetDeg})
        if (problem_name(p) == name) return p;
    return std::nullopt;
}

bool problem_has_k(Problem p) {
    return p != Problem::TwoColoring && p != Problem::SplitGraph;
}

bool problem_has_d(Problem p) {
    return p == Problem::IndependentSetDeg || p == Problem::DominatingSetDeg;
}

int Instance::num_negative() const {
    int c = 0;
    for (const Sample& s : samples) c += (s.label == 0);
    return c;
}

int Instance::num_positive() const {
    return static_cast<int>(samples.size()) - num_negative();
}

void Instance::validate() const {
    if (n < 1) throw std::invalid_argument("instance requires n >= 1");
    if (problem_has_k(problem)) {
        if (!k) throw std::invalid_argument("problem " + problem_name(problem) + " requires parameter k");
        if (*k < 0) throw std::invalid_argument("parameter k must be >= 0");
    } else if (k) {
        throw std::invalid_argument("problem " + problem_name(problem) + " does not take parameter k");
    }
    if (problem_has_d(problem)) {
        if (!d) throw std::invalid_argument("problem " + problem_name(problem) + " requires parameter d");
        if (*d < 0) throw std::invalid_argument("parameter d must be >= 0");
    } else if (d) {
        throw std::invalid_argument("problem " + problem_name(problem) + " does not take parameter d");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Sample& s = samples[i];
        if (s.label != 0 && s.label != 1)
            throw std::invalid_argument("sample " + std::to_string(i + 1) + ": label must be 0 or 1");
        if (s.edges.max_vertex() >= n)
            throw std::invalid_argument("sample " + std::to_string(i + 1) + ": edge endpoint out of range");
        if (d && s.edges.max_degree(n) > *d)
            throw std::invalid_argument("sample " + std::to_string(i + 1) + ": degree bound d exceeded");
    }
}

Solution Solution::vset(std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("duplicate vertex in vertex-set solution");
    if (!vertices.empty() && vertices.front() < 0)
        throw std::invalid_argument("negative vertex in vertex-set solution");
    Solution s;
    s.data_ = VSet{std::move(vertices)};
    return s;
}

Solution Solution::pset(std::vector<Pair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw std::invalid_argument("duplicate pair in pair-set solution");
    Solution s;
    s.data_ = PSet{std::move(pairs)};
    return s;
}

Solution Solution::cover(std::vector<std::vector<VertexId>> members) {
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        if (std::adjacent_find(m.begin(), m.end()) != m.end())
            throw std::invalid_argument("duplicate vertex in cover member");
        if (m.size() < 2) throw std::invalid_argument("cover member must have size >= 2");
        if (m.front() < 0) throw std::invalid_argument("negative vertex in cover member");
    }
    std::sort(members.begin(), members.end());
    Solution s;
    s.data_ = Cover{std::move(members)};
    return s;
}

namespace {

void check_range(const std::vector<VertexId>& xs, int n) {
    for (VertexId v : xs)
        if (v < 0 || v >= n) throw std::invalid_argument("solution vertex out of range");
}

void check_range(const std::vector<Pair>& ps, int n) {
    for (const Pair& p : ps)
        if (p.u < 0 || p.v >= n) throw std::invalid_argument("solution vertex out of range");
}

bool verify_two_coloring(const std::vector<VertexId>& x, const EdgeSet& edges, int n) {
    std::vector<char> in_x(static_cast<std::size_t>(n), 0);
    for (VertexId v : x) in_x[static_cast<std::size_t>(v)] = 1;
    for (const Pair& e : edges.edges())
        if (in_x[static_cast<std::size_t>(e.u)] == in_x[static_cast<std::size_t>(e.v)]) return false;
    return true;
}

bool verify_split(const std::vector<VertexId>& x, const EdgeSet& edges, int n) {
    std::vector<char> in_x(static_cast<std::size_t>(n), 0);
    for (VertexId v : x) in_x[static_cast<std::size_t>(v)] = 1;
    // complement independent: no edge with both endpoints outside X
    for (const Pair& e : edges.edges())
        if (!in_x[static_cast<std::size_t>(e.u)] && !in_x[static_cast<std::size_t>(e.v)]) return false;
    // X a clique: all pairs inside X present
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (!edges.contains(Pair(x[i], x[j]))) return false;
    return true;
}

bool verify_matching(const std::vector<Pair>& f, const EdgeSet& edges, int n, int k) {
    if (static_cast<int>(f.size()) != k) return false;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (const Pair& e : f) {
        if (!edges.contains(e)) return false;
        if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) return false;
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
    }
    return true;
}

bool verify_path(const std::vector<Pair>& f, const EdgeSet& edges, int n, int k) {
    if (static_cast<int>(f.size()) != k) return false;
    if (k == 0) return true;  // a single vertex is a path in every graph
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> verts;
    for (const Pair& e : f) {
        if (!edges.contains(e)) return false;
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
        verts.push_back(e.u);
        verts.push_back(e.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (static_cast<int>(verts.size()) != k + 1) return false;
    int deg1 = 0;
    for (VertexId v : verts) {
        if (deg[static_cast<std::size_t>(v)] > 2) return false;
        deg1 += (deg[static_cast<std::size_t>(v)] == 1);
    }
    if (deg1 != 2) return false;
    // connectivity over the k+1 touched vertices
    std::vector<int> root(static_cast<std::size_t>(n));
    for (VertexId v : verts) root[static_cast<std::size_t>(v)] = v;
    auto find = [&](VertexId a) {
        while (root[static_cast<std::size_t>(a)] != a) {
            root[static_cast<std::size_t>(a)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(a)])];
            a = root[static_cast<std::size_t>(a)];
        }
        return a;
    };
    int merges = 0;
    for (const Pair& e : f) {
        VertexId ra = find(e.u), rb = find(e.v);
        if (ra != rb) {
            root[static_cast<std::size_t>(ra)] = rb;
            ++merges;
        }
    }
    return merges == static_cast<int>(verts.size()) - 1;
}

bool verify_ecc(const std::vector<std::vector<VertexId>>& members, const EdgeSet& edges, int k) {
    if (static_cast<int>(members.size()) != k) return false;
    std::vector<Pair> covered;
    for (const auto& m : members)
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                Pair p(m[i], m[j]);
                if (!edges.contains(p)) return false;  // member not a clique
                covered.push_back(p);
            }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    return covered.size() == edges.size();  // covered is a subset, so equality
}

bool verify_independent(const std::vector<VertexId>& x, const EdgeSet& edges, int k) {
    if (static_cast<int>(x.size()) != k) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (edges.contains(Pair(x[i], x[j]))) return false;
    return true;
}

bool verify_dominating(const std::vector<VertexId>& x, const EdgeSet& edges, int n, int k) {
    if (static_cast<int>(x.size()) != k) return false;
    std::vector<char> dominated(static_cast<std::size_t>(n), 0);
    for (VertexId v : x) dominated[static_cast<std::size_t>(v)] = 1;
    for (const Pair& e : edges.edges()) {
        bool u_in = std::binary_search(x.begin(), x.end(), e.u);
        bool v_in = std::binary_search(x.begin(), x.end(), e.v);
        if (u_in) dominated[static_cast<std::size_t>(e.v)] = 1;
        if (v_in) dominated[static_cast<std::size_t>(e.u)] = 1;
    }
    return std::all_of(dominated.begin(), dominated.end(), [](char c) { return c != 0; });
}

}  // namespace

bool verify(Problem problem, const Solution& solution, const EdgeSet& sample_edges, int n,
            std::optional<int> k, std::optional<int> d) {
    (void)d;  // degree bound constrains instances, not the predicate
    if (sample_edges.max_vertex() >= n) throw std::invalid_argument("sample edge endpoint out of range");
    auto need_k = [&]() {
        if (!k) throw std::invalid_argument("verify: problem requires parameter k");
        return *k;
    };
    switch (problem) {
        case Problem::TwoColoring:
            if (!solution.is_vset()) throw std::invalid_argument("verify: expected vertex-set solution");
            check_range(solution.vertices(), n);
            return verify_two_coloring(solution.vertices(), sample_edges, n);
        case Problem::SplitGraph:
            if (!solution.is_vset()) throw std::invalid_argument("verify: expected vertex-set solution");
            check_range(solution.vertices(), n);
            return verify_split(solution.vertices(), sample_edges, n);
        case Problem::Matching:
            if (!solution.is_pset()) throw std::invalid_argument("verify: expected pair-set solution");
            check_range(solution.pairs(), n);
            return verify_matching(solution.pairs(), sample_edges, n, need_k());
        case Problem::Path:
            if (!solution.is_pset()) throw std::invalid_argument("verify: expected pair-set solution");
            check_range(solution.pairs(), n);
            return verify_path(solution.pairs(), sample_edges, n, need_k());
        case Problem::EdgeCliqueCover:
            if (!solution.is_cover()) throw std::invalid_argument("verify: expected cover solution");
            for (const auto& m : solution.members()) check_range(m, n);
            return verify_ecc(solution.members(), sample_edges, need_k());
        case Problem::IndependentSetDeg:
            if (!solution.is_vset()) throw std::invalid_argument("verify: expected vertex-set solution");
            check_range(solution.vertices(), n);
            return verify_independent(solution.vertices(), sample_edges, need_k());
        case Problem::DominatingSetDeg:
            if (!solution.is_vset()) throw std::invalid_argument("verify: expected vertex-set solution");
            check_range(solution.vertices(), n);
            return verify_dominating(solution.vertices(), sample_edges, n, need_k());
    }
    throw std::logic_error("unreachable");
}

bool is_consistent(const Instance& instance, const Solution& solution) {
    for (const Sample& s : instance.samples) {
        bool holds = verify(instance.problem, solution, s.edges, instance.n, instance.k, instance.d);
        if (holds != (s.label == 1)) return false;
    }
    return true;
}

std::optional<std::vector<VertexId>> cover_member_from_edges(const std::vector<Pair>& pairs) {
    std::vector<VertexId> verts;
    for (const Pair& p : pairs) {
        verts.push_back(p.u);
        verts.push_back(p.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() < 2) return std::nullopt;
    std::vector<Pair> want = cover_member_pairs(verts);
    std::vector<Pair> got = pairs;
    std::sort(got.begin(), got.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    if (got != want) return std::nullopt;
    return verts;
}

std::vector<Pair> cover_member_pairs(const std::vector<VertexId>& member) {
    std::vector<Pair> out;
    for (std::size_t i = 0; i < member.size(); ++i)
        for (std::size_t j = i + 1; j < member.size(); ++j) out.emplace_back(member[i], member[j]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace conscheck
