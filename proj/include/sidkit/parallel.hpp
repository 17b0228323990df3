#pragma once

#include <cstddef>
#include <functional>

namespace sidkit {

/// Worker count used by grid scans and probes. Defaults to 1; values < 1
/// are clamped to 1. Results never depend on this setting.
void set_threads(int threads) noexcept;
int threads() noexcept;

/// Calls body(i) for i in [0, count), split into contiguous chunks across
/// threads(). Each index is visited exactly once; callers write results to
/// per-index slots and reduce in index order afterwards.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace sidkit
