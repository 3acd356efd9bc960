#pragma once

#include <cstdint>
#include <limits>

namespace conscheck {

/// Saturating arithmetic on uint64: results clamp at the max value instead of
/// wrapping, so candidate-space counts can be compared against budgets safely.
inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

constexpr std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > kSaturated - b ? kSaturated : a + b;
}

constexpr std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

constexpr std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

/// Binomial coefficient with saturation.
constexpr std::uint64_t sat_binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) / i is integral at every step
        std::uint64_t num = n - k + i;
        if (r > kSaturated / num) return kSaturated;
        r = r * num / i;
    }
    return r;
}

/// splitmix64-style mixer; used to derive independent per-index seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace conscheck
