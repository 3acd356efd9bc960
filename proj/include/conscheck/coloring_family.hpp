#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace conscheck {

enum class ColoringMode {
    Random,      // seeded independent trials
    Exhaustive,  // every coloring, by increasing base-c counter value
};

/// Number of random trials that bounds the miss probability of a colorful
/// target below e^-40: ceil(40 * e^colors). Saturates on overflow.
std::uint64_t default_trials(int colors);

inline constexpr std::uint64_t kDefaultExhaustiveCap = 10'000'000;

/// Index-addressable family of vertex colorings with a fixed color count.
/// Random colorings are derived independently per index from the seed, so
/// parallel scans see the same family as serial ones. Exhaustive families
/// enumerate color vectors as base-c numerals, vertex 0 least significant.
class ColoringFamily {
  public:
    static ColoringFamily random(int colors, int n, std::uint64_t seed,
                                 std::optional<std::uint64_t> trials = std::nullopt);
    /// Throws std::length_error when colors^n exceeds the cap.
    static ColoringFamily exhaustive(int colors, int n, std::uint64_t cap = kDefaultExhaustiveCap);

    std::uint64_t size() const { return size_; }
    int colors() const { return colors_; }
    std::vector<int> coloring(std::uint64_t index) const;

  private:
    ColoringMode mode_ = ColoringMode::Random;
    int colors_ = 1;
    int n_ = 0;
    std::uint64_t seed_ = 0;
    std::uint64_t size_ = 0;
};

}  // namespace conscheck
