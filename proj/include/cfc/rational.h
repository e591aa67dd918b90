// Copyright 2026 The cfcolor Authors
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

#ifndef CFC_RATIONAL_H_
#define CFC_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cfc {

// Exact rational p/q with q > 0 in lowest terms. Only comparison is needed
// by the interval algorithms, so no arithmetic beyond construction.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(int64_t value) : num_(value) {}  // NOLINT: implicit on purpose
  Rational(int64_t num, int64_t den);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  // "7", "-3", "7/2". Throws InvalidArgument on anything else.
  static Rational Parse(std::string_view text);
  std::string ToString() const;

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

}  // namespace cfc

#endif  // CFC_RATIONAL_H_
