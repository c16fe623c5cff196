#pragma once

#include <cstddef>
#include <functional>

namespace beliefsim {

// Runs body(i) for i in [0, n). With threads > 1 the index range is split
// into contiguous blocks, one worker per block; each index writes only its
// own preallocated slot, so results do not depend on the thread count.
void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace beliefsim
