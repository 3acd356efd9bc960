#include "conscheck/parity_forest.hpp"

#include <numeric>

namespace conscheck {

ParityForest::ParityForest(int size)
    : parent_(static_cast<std::size_t>(size)),
      parity_(static_cast<std::size_t>(size), 0),
      rank_(static_cast<std::size_t>(size), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

std::pair<int, int> ParityForest::find(int a) {
    int p = 0;
    int x = a;
    while (parent_[static_cast<std::size_t>(x)] != x) {
        p ^= parity_[static_cast<std::size_t>(x)];
        x = parent_[static_cast<std::size_t>(x)];
    }
    // path compression: repoint the chain directly at the root
    int cur = a;
    int cur_par = p;
    while (parent_[static_cast<std::size_t>(cur)] != cur) {
        int next = parent_[static_cast<std::size_t>(cur)];
        int next_par = cur_par ^ parity_[static_cast<std::size_t>(cur)];
        parent_[static_cast<std::size_t>(cur)] = x;
        parity_[static_cast<std::size_t>(cur)] = static_cast<std::uint8_t>(cur_par);
        cur = next;
        cur_par = next_par;
    }
    return {x, p};
}

bool ParityForest::relate(int a, int b, int want_parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == want_parity;
    int parity_between_roots = pa ^ pb ^ want_parity;
    if (rank_[static_cast<std::size_t>(ra)] < rank_[static_cast<std::size_t>(rb)]) {
        std::swap(ra, rb);
    }
    parent_[static_cast<std::size_t>(rb)] = ra;
    parity_[static_cast<std::size_t>(rb)] = static_cast<std::uint8_t>(parity_between_roots);
    if (rank_[static_cast<std::size_t>(ra)] == rank_[static_cast<std::size_t>(rb)])
        ++rank_[static_cast<std::size_t>(ra)];
    return true;
}

std::vector<int> ParityForest::coloring() {
    std::vector<int> out(parent_.size());
    for (int i = 0; i < size(); ++i) {
        auto [root, parity] = find(i);
        (void)root;
        out[static_cast<std::size_t>(i)] = 1 ^ parity;
    }
    return out;
}

}  // namespace conscheck
