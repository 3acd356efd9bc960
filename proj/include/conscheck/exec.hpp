#pragma once

#include <atomic>
#include <cstdint>
#include <optional>

namespace conscheck::exec {

enum class Mode {
    Serial,    // reference path: plain loop, early exit
    Parallel,  // OpenMP scan with a min-index reduction
};

/// Returns the smallest i in [0, count) with pred(i) true, or nullopt.
/// pred must be pure; both modes return the same index.
template <typename Pred>
std::optional<std::uint64_t> find_first(std::uint64_t count, Mode mode, Pred&& pred) {
    if (mode == Mode::Serial) {
        for (std::uint64_t i = 0; i < count; ++i)
            if (pred(i)) return i;
        return std::nullopt;
    }
    std::atomic<std::uint64_t> best{count};
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
        std::uint64_t u = static_cast<std::uint64_t>(i);
        if (u >= best.load(std::memory_order_relaxed)) continue;
        if (pred(u)) {
            std::uint64_t cur = best.load(std::memory_order_relaxed);
            while (u < cur && !best.compare_exchange_weak(cur, u, std::memory_order_relaxed)) {
            }
        }
    }
    std::uint64_t r = best.load();
    if (r == count) return std::nullopt;
    return r;
}

}  // namespace conscheck::exec
