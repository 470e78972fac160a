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

#include "trinomial.hpp"

#include "scan.hpp"

namespace mk {

namespace {

bool is_power_of(std::uint64_t v, std::uint64_t p) {
    if (v == 0) return false;
    while (v % p == 0) v /= p;
    return v == 1;
}

unsigned q_mod3(const Field& f) {
    std::uint64_t r = f.p() % 3;
    unsigned out = 1;
    for (unsigned i = 0; i < f.h(); ++i) out = (unsigned)((out * r) % 3);
    return out;
}

// prod_{i=0}^{count-1} sigma^i(x); zero-safe, so b = 0 evaluates literally
Element sigma_product(const Field& f, const Element& x, int count) {
    Element acc = f.one();
    for (int i = 0; i < count; ++i) acc = f.mul(acc, f.sigma_apply(x, i));
    return acc;
}

Classification max_kernel_result(const std::string& rule) {
    return Classification{Verdict::MaxKernel, rule, {}};
}

Classification not_max(const std::string& rule, std::vector<std::string> witness) {
    return Classification{Verdict::NotMaxKernel, rule, std::move(witness)};
}

// shared body of the n = d(d-1)+1 conditions
void case_c_conditions(const Field& f, const TrinomialInstance& inst,
                       std::vector<std::string>& witness) {
    const int d = inst.d;
    if (f.is_zero(inst.a)) {
        witness.push_back("a = 0 makes the norm condition unsatisfiable");
        return;
    }
    if (!(f.relative_norm(inst.a, 1) == f.sign((std::uint64_t)d - 1)))
        witness.push_back("N_{q^n/q}(a) != (-1)^(d-1)");
    FrobExponent f1 = FrobExponent::geometric(d, d);  // 1 + sigma^d + ... + sigma^{d(d-1)}
    Element expect_b = f.neg(f.power_by_exponent(inst.a, f1.shifted(1)));
    if (!(inst.b == expect_b)) witness.push_back("b != -a^{sigma f_1}");
    if (!is_power_of((std::uint64_t)d - 1, f.p()))
        witness.push_back("d-1 is not a power of p");
}

}  // namespace

int trinomial_kernel_dim(const Field& f, const TrinomialInstance& inst) {
    if (inst.d == (int)f.n()) {
        // x^{sigma^n} = x: the induced map is (a-1) x + b x^sigma
        SigmaPoly folded;
        folded.coeffs = {f.sub(inst.a, f.one()), inst.b};
        if (is_zero(f, folded)) return (int)f.n();
        return kernel_dim(f, folded);
    }
    return kernel_dim(f, make_trinomial(f, inst.a, inst.b, inst.d));
}

Classification classify_small_n(const Field& f, const TrinomialInstance& inst) {
    const int d = inst.d, n = (int)f.n();
    if (d < 3) fail(Err::RangeError, "requires d >= 3");
    if (n > d * (d - 1)) fail(Err::RangeError, "requires n <= d(d-1)");
    if (n % d != 0)
        return not_max("T13a", {"n <= d(d-1) and d does not divide n: kernel dimension < d"});
    std::vector<std::string> witness;
    if (!f.is_zero(inst.b)) witness.push_back("b != 0");
    if (!(f.relative_norm(inst.a, (unsigned)d) == f.one()))
        witness.push_back("N_{q^n/q^d}(a) != 1");
    if (witness.empty()) return max_kernel_result("T13b");
    return not_max("T13b", std::move(witness));
}

Classification check_case_c(const Field& f, const TrinomialInstance& inst) {
    const int d = inst.d, n = (int)f.n();
    if (d < 3) fail(Err::RangeError, "requires d >= 3");
    if (n != d * (d - 1) + 1) fail(Err::RangeError, "requires n = d(d-1)+1");
    std::vector<std::string> witness;
    case_c_conditions(f, inst, witness);
    if (witness.empty()) return max_kernel_result("T13c");
    return not_max("T13c", std::move(witness));
}

Classification main_system_check(const Field& f, const TrinomialInstance& inst) {
    const int d = inst.d, n = (int)f.n();
    if (d < 3) fail(Err::RangeError, "requires d >= 3");
    const int g = n - d * (d - 1);
    if (g < 1 || g > d - 1) fail(Err::RangeError, "requires n = d(d-1)+g with 1 <= g <= d-1");
    if (f.is_zero(inst.a))
        return not_max("T14-system", {"a = 0 makes the norm condition unsatisfiable"});

    const Element& a = inst.a;
    const Element& b = inst.b;
    auto row = c_row_recursive(f, a, b, d, d - 1, n - d + 1);

    std::vector<std::string> witness;
    // ladder rows t = d-g+u for u = 0..g-1:
    // c_{d-1,t} = (-1)^u (prod_{i<u} b^{sigma^i}) (prod_{i<=u} a^{-sigma^i})
    Element bprod = f.one();
    Element aprod = a;
    for (int u = 0; u <= g - 1; ++u) {
        if (u > 0) {
            bprod = f.mul(bprod, f.sigma_apply(b, u - 1));
            aprod = f.mul(aprod, f.sigma_apply(a, u));
        }
        Element expect = f.mul(f.sign((std::uint64_t)u), f.mul(bprod, f.inv(aprod)));
        if (!(row[(std::size_t)(d - g + u)] == expect))
            witness.push_back("c_{d-1," + std::to_string(d - g + u) + "} mismatch");
    }
    // c_{d-1,0} = (-1)^g b^{(sigma^g-1)/(sigma-1)} a^{-(sigma^g-1)/(sigma-1)}
    {
        Element expect = f.mul(f.sign((std::uint64_t)g),
                               f.mul(sigma_product(f, b, g), f.inv(sigma_product(f, a, g))));
        if (!(row[0] == expect)) witness.push_back("c_{d-1,0} mismatch");
    }
    for (int t = 1; t <= d - g - 1; ++t)
        if (!f.is_zero(row[(std::size_t)t]))
            witness.push_back("c_{d-1," + std::to_string(t) + "} != 0");

    if (witness.empty()) return max_kernel_result("T14-system");
    return not_max("T14-system", std::move(witness));
}

bool necessary_conditions(const Field& f, const TrinomialInstance& inst) {
    const int d = inst.d, n = (int)f.n();
    if (d < 3) fail(Err::RangeError, "requires d >= 3");
    const int g = n - d * (d - 1);
    if (g < 1 || g > d - 1) fail(Err::RangeError, "requires n = d(d-1)+g with 1 <= g <= d-1");
    if (f.is_zero(inst.a)) return false;
    const Element& a = inst.a;
    const Element& b = inst.b;
    Element inv_ag = f.inv(sigma_product(f, a, g));
    // b^{(sigma^g-1)/(sigma-1)} a^{-(sigma^g-1)/(sigma-1)} = (-1)^g a^{sigma^g e_1}
    Element lhs1 = f.mul(sigma_product(f, b, g), inv_ag);
    Element rhs1 = f.one();
    for (int i = 0; i <= d - 2; ++i) rhs1 = f.mul(rhs1, f.sigma_apply(a, g + i * d));
    rhs1 = f.mul(f.sign((std::uint64_t)g), rhs1);
    if (!(lhs1 == rhs1)) return false;
    // b^{(sigma^{g-1}-1)/(sigma-1)} a^{-(sigma^g-1)/(sigma-1)} = (-1)^{g-1} b^{sigma^{g-1} e_2}
    Element lhs2 = f.mul(sigma_product(f, b, g - 1), inv_ag);
    Element rhs2 = f.one();
    for (int i = 1; i <= d - 1; ++i) rhs2 = f.mul(rhs2, f.sigma_apply(b, (g - 1) + (d - 1) * i));
    rhs2 = f.mul(f.sign((std::uint64_t)(g - 1)), rhs2);
    return lhs2 == rhs2;
}

TrinomialInstance family_even(const Field& f, int d, const Element& a) {
    std::vector<std::string> fails;
    if (f.p() != 2) fails.push_back("q is not even");
    if (d < 4 || !is_power_of((std::uint64_t)d, 2)) fails.push_back("d is not a power of 2 with d >= 4");
    if ((int)f.n() != d * d - 1) fails.push_back("n != d^2 - 1");
    if (f.is_zero(a) || !(f.relative_norm(a, 1) == f.one())) fails.push_back("N_{q^n/q}(a) != 1");
    if (!fails.empty()) {
        std::string msg = "even-family preconditions violated:";
        for (const auto& s : fails) msg += " [" + s + "]";
        fail(Err::PreconditionFailed, msg);
    }
    FrobExponent e1 = FrobExponent::geometric(d, d - 1);
    Element b = f.power_by_exponent(a, (-e1).shifted(d));
    return TrinomialInstance{d, a, b};
}

Classification d3_characterize(const Field& f, const Element& a, const Element& b) {
    const int n = (int)f.n();
    if (n < 3 || n > 8) fail(Err::RangeError, "d = 3 characterization covers 3 <= n <= 8");
    const std::string rule = "P61-" + std::to_string(n);
    switch (n) {
        case 4:
        case 5:
            return not_max(rule, {"n <= 5 and n != 3: kernel dimension < 3"});
        case 3:
        case 6: {
            std::vector<std::string> witness;
            if (!f.is_zero(b)) witness.push_back("b != 0");
            if (!(f.relative_norm(a, 3) == f.one())) witness.push_back("N_{q^n/q^3}(a) != 1");
            if (witness.empty()) return max_kernel_result(rule);
            return not_max(rule, std::move(witness));
        }
        case 7: {
            std::vector<std::string> witness;
            case_c_conditions(f, TrinomialInstance{3, a, b}, witness);
            if (witness.empty()) return max_kernel_result(rule);
            return not_max(rule, std::move(witness));
        }
        default: {  // n = 8
            std::vector<std::string> witness;
            if (f.is_zero(a))
                return not_max(rule, {"a = 0 makes the norm condition unsatisfiable"});
            if (!(f.relative_norm(a, 1) == f.one())) witness.push_back("N_{q^8/q}(a) != 1");
            bool q_ok = q_mod3(f) != 1;
            if (!q_ok) witness.push_back("q = 1 (mod 3)");
            // b = -alpha / a^{sigma^6+sigma^3}  <=>  -b a^{sigma^6+sigma^3} solves x^2+x+1 = 0
            Element alpha = f.neg(f.mul(b, f.mul(f.sigma_apply(a, 6), f.sigma_apply(a, 3))));
            bool hit = false;
            if (q_ok)
                for (const auto& r : f.cube_roots_of_unity())
                    if (r == alpha) hit = true;
            if (!hit) witness.push_back("-b a^{sigma^6+sigma^3} is not a root of x^2+x+1");
            if (witness.empty()) return max_kernel_result(rule);
            return not_max(rule, std::move(witness));
        }
    }
}

Classification d4_characterize(const Field& f, const Element& a, const Element& b) {
    const int n = (int)f.n();
    if (n < 4 || n > 15) fail(Err::RangeError, "d = 4 characterization covers 4 <= n <= 15");
    const std::string rule = "P62-" + std::to_string(n);
    if (n <= 11 && n != 4 && n != 8)
        return not_max(rule, {"n <= 11 and n not in {4,8}: kernel dimension < 4"});
    if (n == 4 || n == 8 || n == 12) {
        std::vector<std::string> witness;
        if (!f.is_zero(b)) witness.push_back("b != 0");
        if (!(f.relative_norm(a, 4) == f.one())) witness.push_back("N_{q^n/q^4}(a) != 1");
        if (witness.empty()) return max_kernel_result(rule);
        return not_max(rule, std::move(witness));
    }
    if (n == 13) {
        std::vector<std::string> witness;
        case_c_conditions(f, TrinomialInstance{4, a, b}, witness);
        if (witness.empty()) return max_kernel_result(rule);
        return not_max(rule, std::move(witness));
    }
    if (n == 14) {
        // the displayed four-equation system in a, b, c_{3,2}, c_{3,1}
        if (f.is_zero(a)) return not_max(rule, {"a = 0 makes the norm condition unsatisfiable"});
        std::vector<std::string> witness;
        auto S = [&](const Element& x, int j) { return f.sigma_apply(x, j); };
        Element c32 = f.add(
            f.add(f.mul(S(a, 10), f.mul(S(b, 6), S(b, 3))), f.mul(S(b, 10), f.mul(S(a, 7), S(b, 3)))),
            f.mul(S(b, 10), f.mul(S(b, 7), S(a, 4))));
        Element c31 = f.add(
            f.add(f.mul(S(a, 10), f.mul(S(a, 6), S(b, 2))), f.mul(S(a, 10), f.mul(S(b, 6), S(a, 3)))),
            f.mul(S(b, 10), f.mul(S(a, 7), S(a, 3))));
        if (!(f.mul(a, c32) == f.one())) witness.push_back("a c_{3,2} != 1");
        Element lhs2 = f.mul(f.mul(a, S(a, 1)), f.mul(S(b, 6), S(b, 3)));
        if (!(lhs2 == f.neg(b))) witness.push_back("a^{1+sigma} b^{sigma^6+sigma^3} != -b");
        Element lhs3 = f.mul(f.mul(f.mul(a, S(a, 1)), f.mul(S(a, 2), S(a, 6))), S(a, 10));
        if (!(lhs3 == f.mul(b, S(b, 1))))
            witness.push_back("a^{1+sigma+sigma^2+sigma^6+sigma^10} != b^{1+sigma}");
        if (!f.is_zero(c31)) witness.push_back("c_{3,1} != 0");
        if (witness.empty()) return max_kernel_result(rule);
        return not_max(rule, std::move(witness));
    }
    // n = 15
    std::vector<std::string> witness;
    if (f.is_zero(a)) return not_max(rule, {"a = 0 makes the norm condition unsatisfiable"});
    if (!(f.relative_norm(a, 1) == f.one())) witness.push_back("N_{q^15/q}(a) != 1");
    if (f.p() != 2) witness.push_back("q is odd");
    Element apow = f.mul(f.mul(f.sigma_apply(a, 4), f.sigma_apply(a, 8)), f.sigma_apply(a, 12));
    if (!(f.mul(b, apow) == f.one())) witness.push_back("b != a^{-(sigma^4+sigma^8+sigma^12)}");
    if (witness.empty()) return max_kernel_result(rule);
    return not_max(rule, std::move(witness));
}

Classification classify(const Field& f, const TrinomialInstance& inst) {
    const int d = inst.d, n = (int)f.n();
    if (d < 3) fail(Err::RangeError, "classification requires d >= 3");
    if (d == 3 && n >= 3 && n <= 8) return d3_characterize(f, inst.a, inst.b);
    if (d == 4 && n >= 4 && n <= 15) return d4_characterize(f, inst.a, inst.b);
    if (n <= d * (d - 1)) return classify_small_n(f, inst);
    if (n <= d * (d - 1) + (d - 1)) return main_system_check(f, inst);
    if (trinomial_kernel_dim(f, inst) == d) return max_kernel_result("BruteForce");
    return not_max("BruteForce", {"kernel dimension < d"});
}

std::vector<TrinomialInstance> enumerate_max_kernel(const Field& f, int d,
                                                    const EnumerateOptions& opts) {
    if (d < 2 || d > (int)f.n() - 1) fail(Err::RangeError, "enumeration requires 2 <= d <= n-1");
    const u128 count = f.order();
    ensure_budget(count * count, opts.budget, "exhaustive pair scan");
    std::vector<std::vector<TrinomialInstance>> results(chunk_count_for(count));
    run_chunked(count, opts.workers, [&](std::size_t ci, u128 begin, u128 end) {
        TrinomialScanner scan(f, d);
        std::vector<TrinomialInstance> local;
        for (u128 ia = begin; ia < end; ++ia) {
            Element a = f.from_index(ia);
            if (opts.a_filter && !(*opts.a_filter)(a)) continue;
            scan.fix_a(a);
            for (u128 ib = 0; ib < count; ++ib) {
                Element b = f.from_index(ib);
                if (scan.kdim_with_b(b) == d) local.push_back(TrinomialInstance{d, a, b});
            }
        }
        results[ci] = std::move(local);
    });
    std::vector<TrinomialInstance> out;
    for (auto& chunk : results)
        for (auto& inst : chunk) out.push_back(std::move(inst));
    return out;
}

}  // namespace mk
