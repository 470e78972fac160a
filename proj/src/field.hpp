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

#ifndef MAXKERNEL_FIELD_HPP
#define MAXKERNEL_FIELD_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mk {

using u128 = unsigned __int128;
using i128 = __int128;
using digit = std::uint16_t;

/// Hard cap on the degree of the polynomial basis: p^m <= 2^126 implies
/// m <= 126 (attained only at p = 2), so 128 slots always suffice.
inline constexpr int kMaxDigits = 128;

enum class Err {
    NonPrimeP,
    GcdViolation,
    FieldTooLarge,
    DivisionByZero,
    NonDivisor,
    ZeroPolynomial,
    NotMonicNegated,
    IndexOutOfRange,
    HypothesisViolated,
    RangeError,
    PreconditionFailed,
    BudgetExceeded,
    NotSubspace,
    SigmaMismatch,
    MalformedShape,
    NoRoot,
    UnknownTarget,
    BadArgument,
    Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

/// An element of F_{p^m} in the polynomial basis 1, theta, ..., theta^{m-1}.
/// Digits are residues mod p, constant term first; slots at index >= m stay zero,
/// so default-constructed Element is the field zero and operator== is exact.
struct Element {
    std::array<digit, kMaxDigits> c{};
    friend bool operator==(const Element&, const Element&) = default;
};

/// Formal integer combination of sigma-powers, sum_i coeff_i * sigma^{power_i}.
/// Powers may be any integers on input; evaluation folds them mod n and the
/// total exponent mod p^m - 1.
class FrobExponent {
public:
    using Term = std::pair<std::int64_t, int>;  // (coefficient, power)

    FrobExponent() = default;
    explicit FrobExponent(std::vector<Term> terms) : terms_(std::move(terms)) {}

    static FrobExponent sigma(int power, std::int64_t coeff = 1) {
        return FrobExponent({{coeff, power}});
    }
    /// sum_{i=0}^{count-1} sigma^{ratio*i}; with ratio=1 this is (sigma^count-1)/(sigma-1).
    static FrobExponent geometric(int ratio, int count);

    FrobExponent operator+(const FrobExponent& o) const;
    FrobExponent operator-(const FrobExponent& o) const;
    FrobExponent operator-() const { return scaled(-1); }
    FrobExponent operator*(const FrobExponent& o) const;  // convolution of formal sums
    FrobExponent scaled(std::int64_t c) const;
    FrobExponent shifted(int power) const;  // multiply by sigma^power

    const std::vector<Term>& terms() const { return terms_; }
    /// Merge duplicate powers mod n, drop zero coefficients, sort by power.
    FrobExponent normalized(int n) const;

private:
    std::vector<Term> terms_;
};

/// Barrett-style reduction mod p for 64-bit intermediates; p < 2^16.
struct ModP {
    std::uint64_t p = 2;
    std::uint64_t magic = 0;  // floor(2^64 / p)

    void init(std::uint64_t prime);
    std::uint64_t reduce(std::uint64_t x) const {
        std::uint64_t q = (std::uint64_t)(((u128)x * magic) >> 64);
        std::uint64_t r = x - q * p;
        if (r >= p) r -= p;
        return r;
    }
};

/// The tower F_p c F_q = F_{p^h} c F_{q^n}, realized as the single flat
/// extension F_{p^m} with m = h*n, together with sigma: x -> x^{q^s}.
///
/// Invariants: p prime, h,n >= 1, gcd(s,n) = 1 with 1 <= s < n (s = 1 when
/// n = 1), modulus monic irreducible of degree m, and p^m <= 2^126 so that
/// exponent arithmetic mod p^m - 1 fits in 128 bits.
///
/// Immutable after construction and safe to share across threads; all
/// operations are pure functions of their arguments.
class Field {
public:
    /// Chooses the smallest monic irreducible modulus of degree m, where
    /// candidates are ordered by their packed value sum_i c_i p^i. Deterministic.
    Field(std::uint64_t p, unsigned h, unsigned n, unsigned s);
    /// Same validation, but with a caller-supplied modulus (c_0..c_m, monic).
    Field(std::uint64_t p, unsigned h, unsigned n, unsigned s, const std::vector<digit>& modulus);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    std::uint64_t p() const { return p_; }
    unsigned h() const { return h_; }
    unsigned n() const { return n_; }
    unsigned s() const { return s_; }
    unsigned m() const { return m_; }
    u128 order() const { return order_; }           // p^m
    u128 q() const { return q_; }                   // p^h
    const std::vector<digit>& modulus() const { return modulus_; }

    Element zero() const { return Element{}; }
    Element one() const;
    Element minus_one() const;
    Element theta() const;  // residue class of the modulus variable
    /// (-1)^e as a field element.
    Element sign(std::uint64_t e) const { return (e % 2 == 0) ? one() : minus_one(); }

    bool is_zero(const Element& x) const;
    Element from_digits(const std::vector<unsigned>& coeffs) const;
    /// Packed little-endian base-p value <-> element; also the enumeration order.
    Element from_index(u128 idx) const;
    u128 index_of(const Element& x) const;
    u128 element_count() const { return order_; }

    Element add(const Element& x, const Element& y) const;
    Element sub(const Element& x, const Element& y) const;
    Element neg(const Element& x) const;
    Element mul(const Element& x, const Element& y) const;
    Element inv(const Element& x) const;  // Err::DivisionByZero on 0
    Element div(const Element& x, const Element& y) const { return mul(x, inv(y)); }
    Element scalar_mul(std::uint64_t c, const Element& x) const;
    Element pow(const Element& x, u128 e) const;  // x^e, with 0^0 = 1

    /// x^{p^e}; the F_p-linear Frobenius power, table-driven.
    Element frob_p(const Element& x, unsigned e) const;
    /// x^{q^t} for any integer t (folded mod n).
    Element q_power(const Element& x, long long t) const;
    /// sigma^j(x) = x^{q^{s*j}} for any integer j (folded mod n).
    Element sigma_apply(const Element& x, long long j) const;

    /// N_{q^n/q^t}(x) = x^{(q^n-1)/(q^t-1)} for t | n; norm of 0 is 0.
    Element relative_norm(const Element& x, unsigned t) const;

    /// (sum_i c_i q^{s*e_i}) mod (p^m - 1), in [0, p^m-1).
    u128 exponent_eval(const FrobExponent& e) const;
    /// x^{exponent_eval(e)}. For x = 0 the formal integer value of e decides:
    /// positive -> 0, zero -> 1, negative -> Err::DivisionByZero.
    Element power_by_exponent(const Element& x, const FrobExponent& e) const;

    /// Roots of x^2 + x + 1 in this field, sorted by index (1 or 2 of them).
    /// Err::NoRoot when there are none.
    std::vector<Element> cube_roots_of_unity() const;
    Element find_cube_root_of_unity() const { return cube_roots_of_unity().front(); }

    /// F_p-basis of the F_q-scalars inside F_{q^n} (the fixed field of x -> x^q);
    /// h elements.
    const std::vector<Element>& q_scalar_basis() const { return q_scalar_basis_; }

    /// The test-suite formulation: x^{p^m} = x and x^{p^{m/l}} != x mod modulus
    /// for every prime l | m.
    bool modulus_irreducibility_recheck() const;

    const ModP& mod_p() const { return modp_; }
    const std::vector<digit>& inv_table() const { return inv_mod_p_; }
    digit inv_mod_p(digit a) const { return inv_mod_p_[a]; }

private:
    void validate_params();
    void precompute_tables();
    Element apply_table(const std::vector<Element>& images, const Element& x) const;

    std::uint64_t p_;
    unsigned h_, n_, s_, m_;
    u128 order_ = 0, q_ = 0;
    std::vector<digit> modulus_;           // c_0..c_m, monic
    ModP modp_;
    std::vector<digit> inv_mod_p_;         // size p
    std::vector<std::vector<Element>> frob_pow_;  // [e][i] = theta_i^{p^e}, e in [0,m)
    std::vector<Element> q_scalar_basis_;
};

/// Primality by deterministic Miller-Rabin (64-bit range).
bool is_prime_u64(std::uint64_t v);

std::string u128_to_string(u128 v);
u128 u128_from_string(const std::string& s);  // decimal

}  // namespace mk

#endif
