// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace pairq {

// PAIRQ_NUM_THREADS if set and positive, else the hardware concurrency.
int thread_count();

// Runs fn(i) for i in [0, n) on up to thread_count() threads. The first
// exception thrown by any task is rethrown after all tasks finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace pairq
