#include "conscheck/coloring_family.hpp"

#include <cmath>
#include <random>

#include "conscheck/numeric.hpp"

namespace conscheck {

std::uint64_t default_trials(int colors) {
    double v = std::ceil(40.0 * std::exp(static_cast<double>(colors)));
    if (!(v < 9.2e18)) return kSaturated;
    return static_cast<std::uint64_t>(v);
}

ColoringFamily ColoringFamily::random(int colors, int n, std::uint64_t seed,
                                      std::optional<std::uint64_t> trials) {
    if (colors < 1) throw std::invalid_argument("coloring family needs >= 1 color");
    ColoringFamily f;
    f.mode_ = ColoringMode::Random;
    f.colors_ = colors;
    f.n_ = n;
    f.seed_ = seed;
    f.size_ = trials.value_or(default_trials(colors));
    return f;
}

ColoringFamily ColoringFamily::exhaustive(int colors, int n, std::uint64_t cap) {
    if (colors < 1) throw std::invalid_argument("coloring family needs >= 1 color");
    std::uint64_t count = sat_pow(static_cast<std::uint64_t>(colors), static_cast<std::uint64_t>(n));
    if (count > cap) throw std::length_error("exhaustive coloring family too large");
    ColoringFamily f;
    f.mode_ = ColoringMode::Exhaustive;
    f.colors_ = colors;
    f.n_ = n;
    f.size_ = count;
    return f;
}

std::vector<int> ColoringFamily::coloring(std::uint64_t index) const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    if (mode_ == ColoringMode::Exhaustive) {
        std::uint64_t rest = index;
        for (int v = 0; v < n_; ++v) {
            out[static_cast<std::size_t>(v)] = static_cast<int>(rest % static_cast<std::uint64_t>(colors_));
            rest /= static_cast<std::uint64_t>(colors_);
        }
    } else {
        std::mt19937_64 rng(mix64(seed_ ^ mix64(index)));
        for (int v = 0; v < n_; ++v)
            out[static_cast<std::size_t>(v)] = static_cast<int>(rng() % static_cast<std::uint64_t>(colors_));
    }
    return out;
}

}  // namespace conscheck
