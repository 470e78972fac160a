/*
   Copyright 2026 the maxkernel authors

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

// Classifiers and constructions for the trinomial L(x) = a x + b x^sigma - x^{sigma^d}:
// when is dim ker L equal to d?

#ifndef MAXKERNEL_TRINOMIAL_HPP
#define MAXKERNEL_TRINOMIAL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "linpoly.hpp"

namespace mk {

struct TrinomialInstance {
    int d = 3;
    Element a, b;
};

enum class Verdict { MaxKernel, NotMaxKernel };

/// rule identifies which characterization fired: one of
/// T13a, T13b, T13c, T14-system, P61-<n>, P62-<n>, BruteForce.
struct Classification {
    Verdict verdict = Verdict::NotMaxKernel;
    std::string rule;
    std::vector<std::string> witness;  // failed conditions, empty on MaxKernel

    bool is_max() const { return verdict == Verdict::MaxKernel; }
};

/// Kernel dimension of the trinomial, tolerating the degenerate d = n fold
/// (where the induced map can be identically zero; the kernel is then all of
/// F_{q^n}).
int trinomial_kernel_dim(const Field& f, const TrinomialInstance& inst);

/// n <= d(d-1): no maximum kernel unless d | n, in which case b = 0 and
/// N_{q^n/q^d}(a) = 1 characterize it. Err::RangeError outside that range.
Classification classify_small_n(const Field& f, const TrinomialInstance& inst);

/// n = d(d-1)+1: maximum kernel iff N_{q^n/q}(a) = (-1)^{d-1},
/// b = -a^{sigma f_1} with f_1 = sum_{i<d} sigma^{id}, and d-1 is a power of p.
Classification check_case_c(const Field& f, const TrinomialInstance& inst);

/// n = d(d-1)+g, 1 <= g <= d-1: evaluates the coefficient ladder
/// c_{d-1,t} at k = n-d+1 via the expansion recursion and tests the
/// characterizing system.
Classification main_system_check(const Field& f, const TrinomialInstance& inst);

/// The two necessary identities on (a, b) below a maximum kernel, built from
/// e_1 = (sigma^{d(d-1)}-1)/(sigma^d-1) and e_2 = (sigma^{d(d-1)}-sigma^{d-1})/(sigma^{d-1}-1).
bool necessary_conditions(const Field& f, const TrinomialInstance& inst);

/// The even-characteristic family at n = d^2-1: q even, d a power of 2 (>= 4),
/// N(a) = 1, b = a^{-sigma^d (sigma^{d(d-1)}-1)/(sigma^d-1)}. Guaranteed kernel
/// dimension d. Err::PreconditionFailed lists the violated bullet(s).
TrinomialInstance family_even(const Field& f, int d, const Element& a);

/// Complete d = 3 characterization for 3 <= n <= 8.
Classification d3_characterize(const Field& f, const Element& a, const Element& b);
/// Complete d = 4 characterization for 4 <= n <= 15.
Classification d4_characterize(const Field& f, const Element& a, const Element& b);

/// Dispatch to the sharpest applicable characterization, falling back to a
/// direct kernel computation (rule BruteForce) when none applies.
Classification classify(const Field& f, const TrinomialInstance& inst);

struct EnumerateOptions {
    std::uint64_t budget = 1ull << 26;
    unsigned workers = 1;
    std::optional<std::function<bool(const Element&)>> a_filter;
};

/// Every (a, b) with kernel dimension exactly d, in enumeration order
/// (a-index major, then b-index). Deterministic for any worker count.
/// Err::BudgetExceeded reports the exact number of required computations.
std::vector<TrinomialInstance> enumerate_max_kernel(const Field& f, int d,
                                                    const EnumerateOptions& opts = {});

}  // namespace mk

#endif
