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

#include "subzero/bounds.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "subzero/errors.hpp"

namespace subzero {

namespace {

struct Exhausted {
    std::string reason;
};

class Evaluator {
public:
    explicit Evaluator(const BoundParams& p) : p_(p) {
        if (p.c1 == 0 || p.c2 == 0) throw UsageError("c1 and c2 must be at least 1");
        if (p.size_q == 0) throw UsageError("|Q| must be at least 1");
    }

    BigInt f(std::uint64_t q, std::uint64_t n) {
        if (auto it = memo_.find({q, n}); it != memo_.end()) return it->second;
        BigInt value;
        if (q == 0) {
            value = BigInt(ui(p_.c1)) * ui(n) + ui(p_.c2);
        } else {
            const BigInt nn = ui(n);
            const BigInt n2 = nn * nn;
            const BigInt prev2n = f(q - 1, twice(n));
            const BigInt pow_n = power_of_two(n);
            BigInt k = prev2n + h(q, n, steps_from(pow_n)) * nn + n2;
            k = std::max(k, BigInt(prev2n * (pow_n + 1) + n2));
            k = std::max(k, BigInt(3 * f(q - 1, 2) + 1 + f(q - 1, 0) + 1));
            const BigInt pow_nq = power_of_two(sum(n, p_.size_q));
            k = std::max(k, BigInt(prev2n + g(q, n, steps_from(pow_nq)) * nn + n2));
            value = k * ui(p_.size_q + 1) + BigInt(ui(p_.size_q)) * nn;
        }
        check(value);
        memo_.emplace(std::make_pair(q, n), value);
        return value;
    }

    BigInt h(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
        return iterate(f(q - 1, n), q, n, k);
    }

    BigInt g(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
        const std::uint64_t m = sum(n, p_.size_q);
        return iterate(f(q - 1, m), q, m, k);
    }

private:
    // x(0) = start, x(i+1) = f(q-1, 2m) + x(i)*m + m^2.
    BigInt iterate(BigInt x, std::uint64_t q, std::uint64_t m, std::uint64_t k) {
        spend(k);
        const BigInt add = f(q - 1, twice(m)) + BigInt(ui(m)) * ui(m);
        const BigInt mm = ui(m);
        for (std::uint64_t i = 0; i < k; ++i) {
            x = add + x * mm;
            check(x);
            work(x);
        }
        return x;
    }

    static unsigned long ui(std::uint64_t v) { return static_cast<unsigned long>(v); }

    static std::uint64_t twice(std::uint64_t n) {
        if (n > (std::uint64_t{1} << 62)) throw Exhausted{"argument overflow"};
        return 2 * n;
    }

    static std::uint64_t sum(std::uint64_t a, std::uint64_t b) {
        if (a > (std::uint64_t{1} << 62) || b > (std::uint64_t{1} << 62)) throw Exhausted{"argument overflow"};
        return a + b;
    }

    BigInt power_of_two(std::uint64_t e) const {
        if (e >= p_.max_bits) throw Exhausted{"2^" + std::to_string(e) + " exceeds the bit budget"};
        BigInt out;
        mpz_ui_pow_ui(out.get_mpz_t(), 2, ui(e));
        return out;
    }

    // Iteration counts come from powers of two; anything beyond the step
    // budget is reported before looping.
    std::uint64_t steps_from(const BigInt& count) const {
        if (count > BigInt(ui(p_.max_steps))) {
            throw Exhausted{"recurrence needs " + count.get_str() + " steps, budget is " +
                            std::to_string(p_.max_steps)};
        }
        return count.get_ui();
    }

    void spend(std::uint64_t k) {
        if (k > p_.max_steps - steps_) {
            throw Exhausted{"step budget of " + std::to_string(p_.max_steps) + " exhausted"};
        }
        steps_ += k;
    }

    void work(const BigInt& v) {
        work_ += mpz_size(v.get_mpz_t());
        if (work_ > p_.max_work) {
            throw Exhausted{"work budget of " + std::to_string(p_.max_work) + " limb operations exhausted"};
        }
    }

    void check(const BigInt& v) const {
        if (mpz_sizeinbase(v.get_mpz_t(), 2) > p_.max_bits) {
            throw Exhausted{"value exceeds " + std::to_string(p_.max_bits) + " bits"};
        }
    }

    BoundParams p_;
    std::uint64_t steps_ = 0;
    std::uint64_t work_ = 0;
    std::map<std::pair<std::uint64_t, std::uint64_t>, BigInt> memo_;
};

template <typename Fn>
BoundResult guarded(Fn&& fn) {
    try {
        return BoundResult{fn(), {}};
    } catch (const Exhausted& e) {
        return BoundResult{std::nullopt, e.reason};
    }
}

}  // namespace

BoundResult bound_f(const BoundParams& params, std::uint64_t q, std::uint64_t n) {
    Evaluator ev(params);
    return guarded([&] { return ev.f(q, n); });
}

BoundResult bound_g(const BoundParams& params, std::uint64_t q, std::uint64_t n, std::uint64_t k) {
    if (q == 0) throw UsageError("g is defined for q >= 1");
    Evaluator ev(params);
    return guarded([&] { return ev.g(q, n, k); });
}

BoundResult bound_h(const BoundParams& params, std::uint64_t q, std::uint64_t n, std::uint64_t k) {
    if (q == 0) throw UsageError("h is defined for q >= 1");
    Evaluator ev(params);
    return guarded([&] { return ev.h(q, n, k); });
}

}  // namespace subzero
