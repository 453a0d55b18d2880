// Copyright 2026 The Entropic Authors
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

#ifndef ENTROPIC_VARSET_H_
#define ENTROPIC_VARSET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace entropic {

inline constexpr int kMaxVariables = 16;

// A subset of the variables {X_0, ..., X_{n-1}}, bit i standing for X_i.
// The mask doubles as the canonical coordinate index; the empty set is 0.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(uint32_t bits) : bits_(bits) {}

  static constexpr VarSet Singleton(int i) { return VarSet(uint32_t{1} << i); }
  static constexpr VarSet Full(int n) {
    return VarSet(n >= 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1);
  }

  constexpr uint32_t bits() const { return bits_; }
  constexpr uint32_t index() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool IsSubsetOf(VarSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(VarSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Largest variable index plus one (0 for the empty set).
  constexpr int Span() const { return 32 - std::countl_zero(bits_); }

  std::vector<int> Members() const {
    std::vector<int> out;
    for (uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  constexpr VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
  constexpr VarSet operator&(VarSet o) const { return VarSet(bits_ & o.bits_); }
  // Set difference.
  constexpr VarSet operator-(VarSet o) const {
    return VarSet(bits_ & ~o.bits_);
  }
  constexpr auto operator<=>(const VarSet&) const = default;

 private:
  uint32_t bits_ = 0;
};

}  // namespace entropic

#endif  // ENTROPIC_VARSET_H_
