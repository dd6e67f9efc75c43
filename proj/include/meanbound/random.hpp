// Copyright 2026 The meanbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEANBOUND_RANDOM_HPP
#define MEANBOUND_RANDOM_HPP

#include <array>
#include <cstdint>
#include <string_view>

namespace meanbound {

/// Identifier of the generator and of the stream-derivation scheme. Any change
/// to either that alters produced numbers must bump this string.
inline constexpr std::string_view kGeneratorName = "philox4x32-10/v1";

/// Philox4x32 with 10 rounds (Salmon et al., SC'11). Stateless: maps a
/// 128-bit counter and a 64-bit key to 128 random bits.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter apply(Counter counter, Key key) noexcept;
};

/// splitmix64 finalizer; used to derive independent keys from (seed, tag).
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Derives a child seed so that distinct (seed, tag) pairs get unrelated keys.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept;

/// A reproducible random stream addressed by (seed, stream index).
///
/// Draw k of stream (seed, i) depends only on (seed, i, k), so any number of
/// streams can be consumed in any order or on any thread with identical
/// results.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t index) noexcept;

  /// Uniform double in the open interval (0, 1) with 53 random bits.
  double uniform() noexcept;

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound) noexcept;

  std::uint64_t next_u64() noexcept;

 private:
  void refill() noexcept;

  Philox4x32::Key key_;
  std::uint64_t index_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  int used_ = 4;
};

}  // namespace meanbound

#endif  // MEANBOUND_RANDOM_HPP
