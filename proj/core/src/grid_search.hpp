#pragma once

// Exhaustive grid scan plus windowed local refinement over up to three axes.
// Internal to njconst_core.

#include <algorithm>
#include <array>
#include <cstdint>
#include <thread>
#include <vector>

#include "njconst/constants.hpp"
#include "numeric.hpp"

namespace njconst::detail {

// Periodic axes sample [lo, hi) with `count` points; closed axes sample
// [lo, hi] inclusive. count == 1 pins the axis at lo and excludes it from
// refinement.
struct Axis {
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;
    bool periodic = false;

    [[nodiscard]] double sample(int k) const {
        if (count == 1) return lo;
        if (periodic) return lo + (hi - lo) * static_cast<double>(k) / count;
        if (k == count - 1) return hi;
        return lo + (hi - lo) * static_cast<double>(k) / (count - 1);
    }
    [[nodiscard]] double step() const {
        if (count == 1) return 0.0;
        return periodic ? (hi - lo) / count : (hi - lo) / (count - 1);
    }
    [[nodiscard]] bool pinned() const { return count == 1; }
};

using Coords = std::array<double, 3>;

struct ScanHit {
    std::array<int, 3> index{};
    double value = 0.0;
};

struct SearchPoint {
    Coords coords{};
    double value = 0.0;
};

[[nodiscard]] unsigned resolve_workers(unsigned requested);

/// Row-major scan of the index box. The first axis is partitioned into
/// contiguous blocks, one per worker; each block keeps its first maximum and
/// the blocks are reduced in order, so the result equals the single-worker scan
/// bit for bit. value_at must be safe to call concurrently.
template <class ValueAt>
ScanHit scan_grid(const std::array<int, 3>& counts, const ValueAt& value_at, unsigned workers) {
    auto scan_rows = [&](int row_begin, int row_end) {
        ScanHit best;
        bool have = false;
        for (int i = row_begin; i < row_end; ++i) {
            for (int j = 0; j < counts[1]; ++j) {
                for (int k = 0; k < counts[2]; ++k) {
                    const double v = value_at(i, j, k);
                    if (!have || v > best.value) {
                        best = {{i, j, k}, v};
                        have = true;
                    }
                }
            }
        }
        return best;
    };

    const int rows = counts[0];
    const unsigned n = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(rows));
    if (n == 1) return scan_rows(0, rows);

    std::vector<ScanHit> partial(n);
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (unsigned w = 0; w < n; ++w) {
        const int begin = static_cast<int>(static_cast<long long>(rows) * w / n);
        const int end = static_cast<int>(static_cast<long long>(rows) * (w + 1) / n);
        threads.emplace_back([&, w, begin, end] { partial[w] = scan_rows(begin, end); });
    }
    for (auto& t : threads) t.join();

    ScanHit best = partial.front();
    for (unsigned w = 1; w < n; ++w) {
        if (partial[w].value > best.value) best = partial[w];
    }
    return best;
}

/// Windowed refinement around `start`. Round r samples refine_points per
/// unpinned axis in [c - w, c + w] (clipped to closed-axis bounds) starting from
/// w = one coarse step. When the best sample sits on an interior window edge the
/// window is re-centred and resampled before shrinking. The incumbent only
/// changes on a strict improvement.
template <class ValueAtCoords>
SearchPoint refine(const std::array<Axis, 3>& axes, SearchPoint start, const SearchConfig& config,
                   const ValueAtCoords& value_at, std::uint64_t& evaluations) {
    constexpr int kMaxRecentre = 32;
    SearchPoint best = start;
    Coords half_width{};
    for (int d = 0; d < 3; ++d) half_width[d] = axes[d].step();

    const int n = config.refine_points;
    std::array<int, 3> counts{};
    for (int d = 0; d < 3; ++d) counts[d] = axes[d].pinned() ? 1 : n;

    for (int round = 0; round < config.refine_rounds; ++round) {
        for (int attempt = 0; attempt < kMaxRecentre; ++attempt) {
            std::array<Axis, 3> window{};
            for (int d = 0; d < 3; ++d) {
                if (axes[d].pinned()) {
                    window[d] = {best.coords[d], best.coords[d], 1, false};
                    continue;
                }
                double lo = best.coords[d] - half_width[d];
                double hi = best.coords[d] + half_width[d];
                if (!axes[d].periodic) {
                    lo = std::max(lo, axes[d].lo);
                    hi = std::min(hi, axes[d].hi);
                }
                window[d] = {lo, hi, n, false};
            }

            std::array<int, 3> hit{-1, -1, -1};
            for (int i = 0; i < counts[0]; ++i) {
                for (int j = 0; j < counts[1]; ++j) {
                    for (int k = 0; k < counts[2]; ++k) {
                        const Coords c{window[0].sample(i), window[1].sample(j), window[2].sample(k)};
                        const double v = value_at(c);
                        ++evaluations;
                        if (v > best.value) {
                            best = {c, v};
                            hit = {i, j, k};
                        }
                    }
                }
            }
            if (hit[0] < 0) break;

            bool on_edge = false;
            for (int d = 0; d < 3; ++d) {
                if (axes[d].pinned()) continue;
                const bool low_edge = hit[d] == 0 && (axes[d].periodic || window[d].lo > axes[d].lo);
                const bool high_edge = hit[d] == n - 1 && (axes[d].periodic || window[d].hi < axes[d].hi);
                on_edge = on_edge || low_edge || high_edge;
            }
            if (!on_edge) break;
        }
        for (double& w : half_width) w *= config.shrink;
    }
    return best;
}

}  // namespace njconst::detail
