#pragma once

#include <cstddef>
#include <functional>

namespace dmod {

/// Worker count from DMOD_CURVE_THREADS (default 1, capped at the hardware count).
int threadCount();

/// Runs body(0) .. body(n - 1), possibly concurrently. Callers write results by
/// index, so output order never depends on scheduling. The exception of the
/// lowest failing index is rethrown.
void parallelFor(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace dmod
