/*
 * Copyright 2026 The eoqsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EOQSIM_RNG_HPP
#define EOQSIM_RNG_HPP

#include <cstdint>

namespace eoqsim {

/// Seedable pseudo-random stream (splitmix64 core).
///
/// Every consumer receives an explicit stream; there is no global generator.
/// Streams for independent work items are derived from (master seed, stream
/// id, substream id) so results do not depend on evaluation order. All
/// sampling is implemented on top of raw 64-bit draws, which keeps output
/// bit-identical across platforms and standard libraries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for work item `stream_id` / `substream_id` under
  /// `master_seed`. Distinct ids give statistically independent streams.
  static RngStream derive(std::uint64_t master_seed, std::uint64_t stream_id,
                          std::uint64_t substream_id = 0);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double();

  /// Standard normal via the polar (Marsaglia) method.
  double next_normal();

  /// Poisson draw with the given mean. Inversion by multiplication for
  /// small means, Hormann's PTRS transformed rejection for large ones.
  std::uint64_t next_poisson(double mean);

 private:
  std::uint64_t state_;
};

}  // namespace eoqsim

#endif
