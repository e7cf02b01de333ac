// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "parallel.hpp"
#include "random.hpp"

namespace liyorke {

/// Items per reproducible random stream.
inline constexpr std::size_t kChunkSize = 4096;

/// Runs worker(engine, i) for i in [0, count). Item i belongs to chunk
/// i / kChunkSize, whose engine is seeded with derive_seed(seed, chunk), so
/// the draws of every item are independent of the thread count.
/// make_worker() is called once per chunk to give each chunk its own
/// scratch state.
template <class MakeWorker>
void run_chunks(std::size_t count, std::uint64_t seed, unsigned threads,
                MakeWorker&& make_worker) {
  const std::size_t chunks = (count + kChunkSize - 1) / kChunkSize;
  for_each_chunk(chunks, threads, [&](std::size_t c) {
    Engine engine(derive_seed(seed, c));
    auto worker = make_worker();
    const std::size_t begin = c * kChunkSize;
    const std::size_t end = std::min(count, begin + kChunkSize);
    for (std::size_t i = begin; i < end; ++i) worker(engine, i);
  });
}

}  // namespace liyorke
