#pragma once

#include <cstddef>
#include <functional>

namespace maxlab {

// Worker cap for all data-parallel loops (CLI --threads). 0 = hardware default.
void set_max_threads(int n);
int max_threads();

// Static block partition over [0, n). Bodies must be independent; results are
// written to disjoint slots, so reductions stay deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace maxlab
