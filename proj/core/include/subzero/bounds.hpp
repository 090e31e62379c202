// Copyright 2026 The Subzero Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "subzero/numeric.hpp"

namespace subzero {

/// Parameters of the derivation-size bound f(q, n) and its helpers g, h.
///
///   f(0, n) = c1*n + c2
///   f(q, n) = K*(|Q| + 1) + |Q|*n, K the largest of
///       f(q-1, 2n) + h(2^n)*n + n^2
///       f(q-1, 2n)*(2^n + 1) + n^2
///       3*f(q-1, 2) + 1 + f(q-1, 0) + 1
///       f(q-1, 2n) + g(2^(n+|Q|))*n + n^2
///   h(0) = f(q-1, n),        h(k+1) = f(q-1, 2n) + h(k)*n + n^2
///   g(0) = f(q-1, n+|Q|),    g(k+1) = f(q-1, 2m) + g(k)*m + m^2,  m = n+|Q|
///
/// Values grow non-elementarily in q, so evaluation runs under a budget.
struct BoundParams {
    std::uint64_t c1 = 8;
    std::uint64_t c2 = 8;
    std::uint64_t size_q = 1;
    std::uint64_t max_bits = std::uint64_t{1} << 23;   // largest intermediate value
    std::uint64_t max_steps = std::uint64_t{1} << 24;  // total recurrence unfoldings
    std::uint64_t max_work = std::uint64_t{1} << 30;   // limb operations, about a second
};

/// Either a value or the reason the budget was exceeded.
struct BoundResult {
    std::optional<BigInt> value;
    std::string overflow;

    bool ok() const noexcept { return value.has_value(); }
};

/// Throws UsageError when c1, c2 or size_q is zero, or (for g, h) q == 0.
BoundResult bound_f(const BoundParams& params, std::uint64_t q, std::uint64_t n);
BoundResult bound_g(const BoundParams& params, std::uint64_t q, std::uint64_t n, std::uint64_t k);
BoundResult bound_h(const BoundParams& params, std::uint64_t q, std::uint64_t n, std::uint64_t k);

}  // namespace subzero
