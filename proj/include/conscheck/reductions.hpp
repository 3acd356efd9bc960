#pragma once

#include <iosfwd>

#include "conscheck/model.hpp"

namespace conscheck {

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;  // DIMACS literals, nonzero, |lit| <= num_vars

    void validate() const;
};

/// Parses DIMACS CNF ("c" comments, "p cnf <vars> <clauses>" header, clauses
/// terminated by 0). Throws std::runtime_error naming the offending line.
CnfFormula parse_dimacs(std::istream& in);

/// Formula -> two-coloring consistency. Vertices: 0 and 1 are the polarity
/// anchors, variable i (1-based) becomes vertex i+1. One positive sample
/// {(0,1)} forces the anchors apart; each clause contributes a negative
/// sample pairing literals with the anchor of their polarity (positive
/// literal -> vertex 0, negated -> vertex 1). Consistent iff satisfiable.
Instance reduce_sat_to_two_coloring(const CnfFormula& formula);

struct SetCoverInstance {
    int universe = 0;                    // elements 1..universe
    std::vector<std::vector<int>> sets;  // nonempty subsets of the universe
    int k = 0;

    void validate() const;
};

/// Set cover -> matching consistency with parameter k. Block i in [0,k) has
/// center i*(m+1) and leaves i*(m+1)+1+l for set l in [0,m); the positive
/// sample holds all center-leaf star edges, and the negative sample of an
/// element keeps every pair except the star edges of sets containing it.
/// Consistent iff some <= k sets cover the universe.
Instance reduce_set_cover_to_matching(const SetCoverInstance& sc);

/// Set cover -> path consistency with parameter 2k. Centers at i*(m+1) for
/// i in [0,k], leaves between consecutive centers as above; the positive
/// sample joins each center to the leaves of its block on both sides, and
/// the negative sample of an element keeps every pair not touching a leaf
/// of a set containing it. Two guard negatives (every pair missing the
/// first / the last center) pin solutions to the center-to-center shape.
/// Consistent iff some <= k sets cover the universe.
Instance reduce_set_cover_to_path(const SetCoverInstance& sc);

/// Set cover -> independent set consistency with parameter 2k, degree
/// bound 1. Set l owns vertices 2l and 2l+1; the negative sample of an
/// element joins the vertex pair of each set containing it. Consistent iff
/// some exactly-k distinct sets cover the universe (equivalently a <= k
/// cover exists and there are at least k sets).
Instance reduce_set_cover_to_independent_set(const SetCoverInstance& sc);

struct GraphInstance {
    int n = 0;
    std::vector<Pair> edges;
    int k = 0;

    void validate() const;
};

/// Plain independent set -> consistency with degree bound 1: one positive
/// single-edge sample per graph edge (one empty positive sample if the graph
/// has none). Consistent iff the graph has an independent set of size k.
Instance reduce_independent_set(const GraphInstance& g);

}  // namespace conscheck
