/*
   Copyright 2026 The polydiam authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLYDIAM_COMMON_HPP
#define POLYDIAM_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polydiam {

/// Exact arbitrary-precision integer used wherever 64 bits can overflow
/// (representation counters, factorial bounds, mass formulas).
using BigInt = boost::multiprecision::cpp_int;

/// A caller contract was violated (bad argument, unsupported regime).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A configured cap would be exceeded; the message names the cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed; indicates a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Default caps. Each one is a knob on the operation that enforces it and can
// be overridden per call (the CLI additionally honors POLYDIAM_* environment
// variables, see tools/).
inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;  // candidate polynomials per enumeration
inline constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t(1) << 24;  // group order for BFS / dlog tables
inline constexpr std::uint64_t kDefaultFactorCap = 1'000'000;  // largest trial divisor when factoring the group order
inline constexpr std::uint64_t kDefaultCharCap = 100'000;      // group order for full character enumeration
inline constexpr std::uint64_t kDefaultRepCountCap = std::uint64_t(1) << 20;  // group order for convolution counters

/// The moment exponent m = ceil(n/d) - 1.  It is the largest m with
/// d*m < n, so a product of m degree-d polynomials cannot reach degree n.
inline std::uint32_t moment_exponent(std::uint32_t n, std::uint32_t d) {
    if (n < 1 || d < 1) throw precondition_error("moment_exponent: n and d must be positive");
    return (n + d - 1) / d - 1;
}

inline BigInt factorial_big(std::uint32_t k) {
    BigInt r = 1;
    for (std::uint32_t i = 2; i <= k; ++i) r *= i;
    return r;
}

}  // namespace polydiam

#endif  // POLYDIAM_COMMON_HPP
