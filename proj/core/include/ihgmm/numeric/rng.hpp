// Copyright 2026 The ihgmm Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IHGMM_NUMERIC_RNG_HPP_
#define IHGMM_NUMERIC_RNG_HPP_

#include <array>
#include <cstdint>
#include <limits>

namespace ihgmm {

// Counter-based Philox4x64-10 generator. A stream is identified by a 128-bit
// key (seed, stream id); the 256-bit counter walks through the stream. The
// output sequence for key (k0, k1) is bit-identical to
// numpy.random.Philox(key=k0 + (k1 << 64)).random_raw().
//
// Streams never share state, so draws do not depend on thread scheduling or
// on the order in which sibling streams are consumed.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  // Child stream whose key is a hash of this stream's key and `tag`. The
  // parent's position is irrelevant: split(t) always yields the same stream.
  Rng split(std::uint64_t tag) const;

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi);
  // Standard normal draw (Box-Muller, cosine branch).
  double normal();
  // +1 or -1 with equal probability.
  double rademacher();
  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  result_type operator()() { return next_u64(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  std::array<std::uint64_t, 2> key() const { return key_; }

 private:
  void refill();

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_{};
  std::array<std::uint64_t, 4> buffer_{};
  int buffer_pos_ = 4;
};

// Reproducible sub-stream for one Monte-Carlo replicate.
Rng rng_stream(std::uint64_t seed, std::uint64_t replicate);

// SplitMix64 finalizer; used to fold tags into stream keys.
std::uint64_t mix64(std::uint64_t x);

}  // namespace ihgmm

#endif  // IHGMM_NUMERIC_RNG_HPP_
