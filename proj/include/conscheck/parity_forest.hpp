#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace conscheck {

/// Union-find over binary-colorable elements. Each element carries a parity
/// relative to its root; same/diff constraints merge trees and report
/// contradictions. Used to propagate equal-color / different-color
/// constraints between coloring classes.
class ParityForest {
  public:
    explicit ParityForest(int size);

    /// (root, parity of a relative to root)
    std::pair<int, int> find(int a);

    /// Impose color(a) == color(b). False iff this contradicts earlier
    /// constraints (the forest is left unchanged on contradiction).
    bool same(int a, int b) { return relate(a, b, 0); }
    /// Impose color(a) != color(b).
    bool diff(int a, int b) { return relate(a, b, 1); }

    /// A concrete 0/1 coloring satisfying all constraints: every root takes
    /// color 1, all other elements root color xor parity.
    std::vector<int> coloring();

    int size() const { return static_cast<int>(parent_.size()); }

  private:
    bool relate(int a, int b, int want_parity);
    std::vector<int> parent_;
    std::vector<std::uint8_t> parity_;  // relative to parent
    std::vector<int> rank_;
};

}  // namespace conscheck
