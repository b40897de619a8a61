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

#include "ihgmm/numeric/rng.hpp"

#include <cmath>
#include <numbers>

namespace ihgmm {
namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& lo,
                    std::uint64_t& hi) {
  const u128 product =
      static_cast<u128>(a) * static_cast<u128>(b);
  lo = static_cast<std::uint64_t>(product);
  hi = static_cast<std::uint64_t>(product >> 64);
}

std::array<std::uint64_t, 4> philox_block(std::array<std::uint64_t, 4> ctr,
                                          std::array<std::uint64_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint64_t lo0, hi0, lo1, hi1;
    mulhilo(kMul0, ctr[0], lo0, hi0);
    mulhilo(kMul1, ctr[2], lo1, hi1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : key_{seed, stream} {}

Rng Rng::split(std::uint64_t tag) const {
  const std::uint64_t h = mix64(mix64(key_[0]) ^ mix64(key_[1] + 0x632BE59BD9B4E019ULL) ^
                                mix64(tag ^ 0xA0761D6478BD642FULL));
  return Rng(h, mix64(h ^ tag));
}

void Rng::refill() {
  // Counter is incremented before use, matching numpy's Philox.
  for (auto& word : counter_) {
    if (++word != 0) break;
  }
  buffer_ = philox_block(counter_, key_);
  buffer_pos_ = 0;
}

std::uint64_t Rng::next_u64() {
  if (buffer_pos_ >= 4) refill();
  return buffer_[buffer_pos_++];
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::rademacher() { return (next_u64() >> 63) ? 1.0 : -1.0; }

std::uint64_t Rng::below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection; unbiased.
  u128 m = static_cast<u128>(next_u64()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>(next_u64()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

Rng rng_stream(std::uint64_t seed, std::uint64_t replicate) {
  return Rng(seed, replicate);
}

}  // namespace ihgmm
