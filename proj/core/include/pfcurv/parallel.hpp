// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace pfcurv {

/// Worker count for data-parallel loops. Reads PFCURV_THREADS (0 or unset
/// means hardware concurrency).
unsigned thread_count();

/// Runs fn(i) for i in [0, n). Iterations must not write shared state.
/// Small ranges run inline.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace pfcurv
