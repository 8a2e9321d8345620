// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace polsar {

/// Runs chunk_fn over contiguous index ranges covering [0, n). Chunk
/// boundaries depend only on (n, threads), never on scheduling, so callers
/// writing to per-index slots get identical results for any thread count.
/// threads == 0 uses hardware concurrency; threads == 1 runs inline.
void parallel_for(int n, int threads,
                  const std::function<void(int begin, int end)>& chunk_fn);

}  // namespace polsar
