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

#include "field.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fp_linalg.hpp"

namespace mk {

const char* err_name(Err e) {
    switch (e) {
        case Err::NonPrimeP: return "NonPrimeP";
        case Err::GcdViolation: return "GcdViolation";
        case Err::FieldTooLarge: return "FieldTooLarge";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::NonDivisor: return "NonDivisor";
        case Err::ZeroPolynomial: return "ZeroPolynomial";
        case Err::NotMonicNegated: return "NotMonicNegated";
        case Err::IndexOutOfRange: return "IndexOutOfRange";
        case Err::HypothesisViolated: return "HypothesisViolated";
        case Err::RangeError: return "RangeError";
        case Err::PreconditionFailed: return "PreconditionFailed";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::NotSubspace: return "NotSubspace";
        case Err::SigmaMismatch: return "SigmaMismatch";
        case Err::MalformedShape: return "MalformedShape";
        case Err::NoRoot: return "NoRoot";
        case Err::UnknownTarget: return "UnknownTarget";
        case Err::BadArgument: return "BadArgument";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(char('0' + (unsigned)(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

u128 u128_from_string(const std::string& s) {
    u128 v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') fail(Err::BadArgument, "not a decimal digit in '" + s + "'");
        v = v * 10 + (u128)(ch - '0');
    }
    return v;
}

// ---------------------------------------------------------------------------
// primality

static std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (std::uint64_t)(((u128)a * b) % m);
}

static std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (v % sp == 0) return v == sp;
    }
    std::uint64_t d = v - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, v);
        if (x == 1 || x == v - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, v);
            if (x == v - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

void ModP::init(std::uint64_t prime) {
    p = prime;
    magic = (std::uint64_t)((((u128)1) << 64) / p);
}

// ---------------------------------------------------------------------------
// FrobExponent

FrobExponent FrobExponent::geometric(int ratio, int count) {
    std::vector<Term> t;
    t.reserve((std::size_t)std::max(count, 0));
    for (int i = 0; i < count; ++i)
        t.push_back({1, (int)((std::int64_t)ratio * i)});
    return FrobExponent(std::move(t));
}

FrobExponent FrobExponent::operator+(const FrobExponent& o) const {
    std::vector<Term> t = terms_;
    t.insert(t.end(), o.terms_.begin(), o.terms_.end());
    return FrobExponent(std::move(t));
}

FrobExponent FrobExponent::operator-(const FrobExponent& o) const { return *this + o.scaled(-1); }

FrobExponent FrobExponent::operator*(const FrobExponent& o) const {
    std::vector<Term> t;
    t.reserve(terms_.size() * o.terms_.size());
    for (const auto& [c1, e1] : terms_)
        for (const auto& [c2, e2] : o.terms_)
            t.push_back({c1 * c2, e1 + e2});
    return FrobExponent(std::move(t));
}

FrobExponent FrobExponent::scaled(std::int64_t c) const {
    std::vector<Term> t = terms_;
    for (auto& [coeff, power] : t) coeff *= c;
    return FrobExponent(std::move(t));
}

FrobExponent FrobExponent::shifted(int power) const {
    std::vector<Term> t = terms_;
    for (auto& [coeff, pw] : t) pw += power;
    return FrobExponent(std::move(t));
}

FrobExponent FrobExponent::normalized(int n) const {
    std::map<int, std::int64_t> acc;
    for (const auto& [c, e] : terms_) {
        int em = (int)(((e % n) + n) % n);
        acc[em] += c;
    }
    std::vector<Term> t;
    for (const auto& [e, c] : acc)
        if (c != 0) t.push_back({c, e});
    return FrobExponent(std::move(t));
}

// ---------------------------------------------------------------------------
// dense F_p[x] helpers (little-endian digit vectors, used for modulus work)

namespace {

void poly_trim(std::vector<digit>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a * b mod f, where f is monic of degree mf
std::vector<digit> poly_mul_mod(const std::vector<digit>& a, const std::vector<digit>& b,
                                const std::vector<digit>& f, const ModP& mp) {
    if (a.empty() || b.empty()) return {};
    const int mf = (int)f.size() - 1;
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j];
    }
    for (auto& v : acc) v = mp.reduce(v);
    for (int i = (int)acc.size() - 1; i >= mf; --i) {
        std::uint64_t c = mp.reduce(acc[i]);
        if (c == 0) continue;
        acc[i] = 0;
        for (int j = 0; j < mf; ++j) acc[i - mf + j] = mp.reduce(acc[i - mf + j] + c * (mp.p - f[j]));
    }
    std::vector<digit> out(std::min<std::size_t>(acc.size(), (std::size_t)mf), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (digit)mp.reduce(acc[i]);
    poly_trim(out);
    return out;
}

// x^e mod f
std::vector<digit> poly_pow_x_mod(u128 e, const std::vector<digit>& f, const ModP& mp) {
    std::vector<digit> result{1};
    std::vector<digit> base{0, 1};
    if (f.size() == 2) {  // degree 1: x = -c_0 mod f
        base = {(digit)mp.reduce(mp.p - f[0])};
        poly_trim(base);
    }
    while (e) {
        if (e & 1) result = poly_mul_mod(result, base, f, mp);
        base = poly_mul_mod(base, base, f, mp);
        e >>= 1;
    }
    return result;
}

std::vector<digit> poly_rem(std::vector<digit> a, const std::vector<digit>& b, const ModP& mp,
                            const std::vector<digit>& inv_table) {
    poly_trim(a);
    const int db = (int)b.size() - 1;
    std::uint64_t lead_inv = inv_table[b.back()];
    while ((int)a.size() - 1 >= db && !a.empty()) {
        std::uint64_t c = mp.reduce((std::uint64_t)a.back() * lead_inv);
        int shift = (int)a.size() - 1 - db;
        for (int j = 0; j <= db; ++j)
            a[(std::size_t)(shift + j)] =
                (digit)mp.reduce(a[(std::size_t)(shift + j)] + c * (mp.p - b[(std::size_t)j]));
        poly_trim(a);
    }
    return a;
}

std::vector<digit> poly_gcd(std::vector<digit> a, std::vector<digit> b, const ModP& mp,
                            const std::vector<digit>& inv_table) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        auto r = poly_rem(a, b, mp, inv_table);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<unsigned> prime_factors_of(unsigned v) {
    std::vector<unsigned> out;
    for (unsigned f = 2; f * f <= v; ++f) {
        if (v % f == 0) {
            out.push_back(f);
            while (v % f == 0) v /= f;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

// complete irreducibility test for a monic f of degree mf over F_p
bool poly_irreducible(const std::vector<digit>& f, const ModP& mp,
                      const std::vector<digit>& inv_table) {
    const int mf = (int)f.size() - 1;
    if (mf == 1) return true;
    u128 pm = 1;
    for (int i = 0; i < mf; ++i) pm *= mp.p;
    auto xs = poly_pow_x_mod(pm, f, mp);  // x^{p^m} mod f
    std::vector<digit> x{0, 1};
    if (xs != x) return false;
    for (unsigned l : prime_factors_of((unsigned)mf)) {
        u128 pe = 1;
        for (unsigned i = 0; i < (unsigned)mf / l; ++i) pe *= mp.p;
        auto g = poly_pow_x_mod(pe, f, mp);  // x^{p^{m/l}} mod f
        // gcd(g - x, f) must be constant
        std::vector<digit> diff = g;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (digit)mp.reduce(diff[1] + mp.p - 1);
        poly_trim(diff);
        auto gg = poly_gcd(f, diff, mp, inv_table);
        if ((int)gg.size() - 1 != 0) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field::Field(std::uint64_t p, unsigned h, unsigned n, unsigned s) : p_(p), h_(h), n_(n), s_(s), m_(h * n) {
    validate_params();
    // scan in packed order for the smallest irreducible modulus
    std::vector<digit> f((std::size_t)m_ + 1, 0);
    f[m_] = 1;
    bool found = false;
    for (u128 v = 0; v < order_; ++v) {
        u128 t = v;
        for (unsigned i = 0; i < m_; ++i) {
            f[i] = (digit)(t % p_);
            t /= p_;
        }
        if (poly_irreducible(f, modp_, inv_mod_p_)) {
            found = true;
            break;
        }
    }
    if (!found) fail(Err::Internal, "no irreducible modulus found");  // cannot happen
    modulus_ = f;
    precompute_tables();
}

Field::Field(std::uint64_t p, unsigned h, unsigned n, unsigned s, const std::vector<digit>& modulus)
    : p_(p), h_(h), n_(n), s_(s), m_(h * n) {
    validate_params();
    if (modulus.size() != (std::size_t)m_ + 1 || modulus.back() != 1)
        fail(Err::BadArgument, "modulus must be monic of degree m");
    for (digit d : modulus)
        if (d >= p_) fail(Err::BadArgument, "modulus coefficient out of range");
    if (!poly_irreducible(modulus, modp_, inv_mod_p_))
        fail(Err::BadArgument, "modulus is reducible");
    modulus_ = modulus;
    precompute_tables();
}

void Field::validate_params() {
    if (!is_prime_u64(p_)) fail(Err::NonPrimeP, "p = " + std::to_string(p_) + " is not prime");
    if (h_ < 1 || n_ < 1) fail(Err::BadArgument, "h and n must be positive");
    if (n_ == 1) {
        if (s_ != 1) fail(Err::GcdViolation, "n = 1 requires s = 1");
    } else if (s_ < 1 || s_ >= n_) {
        fail(Err::GcdViolation, "s must satisfy 1 <= s < n");
    }
    if (std::gcd(s_, n_) != 1) fail(Err::GcdViolation, "gcd(s, n) != 1");
    if (p_ >= 65536)
        fail(Err::FieldTooLarge, "p exceeds the uint16 digit representation cap");
    if (m_ > 126) fail(Err::FieldTooLarge, "m log2(p) > 126");
    const u128 limit = ((u128)1) << 126;
    u128 acc = 1;
    for (unsigned i = 0; i < m_; ++i) {
        if (acc > limit / p_) fail(Err::FieldTooLarge, "m log2(p) > 126");
        acc *= p_;
    }
    order_ = acc;
    q_ = 1;
    for (unsigned i = 0; i < h_; ++i) q_ *= p_;
    modp_.init(p_);
    inv_mod_p_.assign(p_, 0);
    for (std::uint64_t a = 1; a < p_; ++a)
        inv_mod_p_[a] = (digit)powmod_u64(a, p_ - 2, p_);
}

void Field::precompute_tables() {
    frob_pow_.assign(m_, std::vector<Element>(m_));
    for (unsigned i = 0; i < m_; ++i) {
        Element e;
        if (i < m_) e.c[i] = 1;
        frob_pow_[0][i] = e;
    }
    if (m_ > 1) {
        auto g = poly_pow_x_mod((u128)p_, modulus_, modp_);  // theta^p
        std::vector<digit> gi{1};
        for (unsigned i = 0; i < m_; ++i) {
            Element e;
            for (std::size_t j = 0; j < gi.size(); ++j) e.c[j] = gi[j];
            frob_pow_[1][i] = e;
            gi = poly_mul_mod(gi, g, modulus_, modp_);
        }
        for (unsigned lvl = 2; lvl < m_; ++lvl)
            for (unsigned i = 0; i < m_; ++i)
                frob_pow_[lvl][i] = apply_table(frob_pow_[1], frob_pow_[lvl - 1][i]);
    }
    // F_q scalars = fixed space of x -> x^{p^h}
    unsigned e = h_ % m_;
    std::vector<digit> mat((std::size_t)m_ * m_, 0);
    for (unsigned col = 0; col < m_; ++col)
        for (unsigned row = 0; row < m_; ++row) {
            std::uint64_t v = frob_pow_[e][col].c[row];
            if (row == col) v = modp_.reduce(v + p_ - 1);
            mat[(std::size_t)row * m_ + col] = (digit)v;
        }
    auto basis = nullspace(std::move(mat), (int)m_, (int)m_, modp_, inv_mod_p_);
    if (basis.size() != h_) fail(Err::Internal, "F_q scalar space has wrong dimension");
    q_scalar_basis_.clear();
    for (const auto& v : basis) {
        Element el;
        for (unsigned i = 0; i < m_; ++i) el.c[i] = v[i];
        q_scalar_basis_.push_back(el);
    }
}

Element Field::apply_table(const std::vector<Element>& images, const Element& x) const {
    std::array<std::uint64_t, kMaxDigits> acc{};
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t xi = x.c[i];
        if (xi == 0) continue;
        const Element& img = images[i];
        for (unsigned r = 0; r < m_; ++r) acc[r] += xi * img.c[r];
    }
    Element out;
    for (unsigned r = 0; r < m_; ++r) out.c[r] = (digit)modp_.reduce(acc[r]);
    return out;
}

Element Field::one() const {
    Element e;
    e.c[0] = 1;
    return e;
}

Element Field::minus_one() const {
    Element e;
    e.c[0] = (digit)(p_ - 1);
    return e;
}

Element Field::theta() const {
    Element e;
    if (m_ >= 2) {
        e.c[1] = 1;
    } else {
        e.c[0] = (digit)modp_.reduce(p_ - modulus_[0]);
    }
    return e;
}

bool Field::is_zero(const Element& x) const {
    for (unsigned i = 0; i < m_; ++i)
        if (x.c[i] != 0) return false;
    return true;
}

Element Field::from_digits(const std::vector<unsigned>& coeffs) const {
    if (coeffs.size() != m_) fail(Err::BadArgument, "coefficient vector must have length m");
    Element e;
    for (unsigned i = 0; i < m_; ++i) {
        if (coeffs[i] >= p_) fail(Err::BadArgument, "coefficient out of range [0, p)");
        e.c[i] = (digit)coeffs[i];
    }
    return e;
}

Element Field::from_index(u128 idx) const {
    if (idx >= order_) fail(Err::BadArgument, "element index out of range");
    Element e;
    for (unsigned i = 0; i < m_ && idx > 0; ++i) {
        e.c[i] = (digit)(idx % p_);
        idx /= p_;
    }
    return e;
}

u128 Field::index_of(const Element& x) const {
    u128 v = 0;
    for (int i = (int)m_ - 1; i >= 0; --i) v = v * p_ + x.c[(unsigned)i];
    return v;
}

Element Field::add(const Element& x, const Element& y) const {
    Element out;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint32_t v = (std::uint32_t)x.c[i] + y.c[i];
        if (v >= p_) v -= (std::uint32_t)p_;
        out.c[i] = (digit)v;
    }
    return out;
}

Element Field::sub(const Element& x, const Element& y) const {
    Element out;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint32_t v = (std::uint32_t)x.c[i] + (std::uint32_t)p_ - y.c[i];
        if (v >= p_) v -= (std::uint32_t)p_;
        out.c[i] = (digit)v;
    }
    return out;
}

Element Field::neg(const Element& x) const { return sub(Element{}, x); }

Element Field::mul(const Element& x, const Element& y) const {
    std::array<std::uint64_t, 2 * kMaxDigits> acc{};
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t xi = x.c[i];
        if (xi == 0) continue;
        for (unsigned j = 0; j < m_; ++j) acc[i + j] += xi * y.c[j];
    }
    for (unsigned i = 2 * m_ - 2 + 1; i-- > m_;) {
        std::uint64_t c = modp_.reduce(acc[i]);
        if (c == 0) {
            acc[i] = 0;
            continue;
        }
        acc[i] = 0;
        for (unsigned j = 0; j < m_; ++j) acc[i - m_ + j] += c * (p_ - modulus_[j]);
    }
    Element out;
    for (unsigned i = 0; i < m_; ++i) out.c[i] = (digit)modp_.reduce(acc[i]);
    return out;
}

Element Field::scalar_mul(std::uint64_t c, const Element& x) const {
    c = modp_.reduce(c);
    Element out;
    for (unsigned i = 0; i < m_; ++i) out.c[i] = (digit)modp_.reduce(c * x.c[i]);
    return out;
}

Element Field::inv(const Element& x) const {
    if (is_zero(x)) fail(Err::DivisionByZero, "inverse of zero");
    // extended Euclid in F_p[x] against the modulus
    std::vector<digit> r0 = modulus_;
    std::vector<digit> r1(x.c.begin(), x.c.begin() + m_);
    poly_trim(r1);
    std::vector<digit> t0, t1{1};
    while (!r1.empty()) {
        // quotient-free step: r0 = q*r1 + r2 computed by repeated leading cancel
        std::vector<digit> q;
        std::vector<digit> r2 = r0;
        const int d1 = (int)r1.size() - 1;
        std::uint64_t lead_inv = inv_mod_p_[r1.back()];
        while ((int)r2.size() - 1 >= d1 && !r2.empty()) {
            int shift = (int)r2.size() - 1 - d1;
            std::uint64_t c = modp_.reduce((std::uint64_t)r2.back() * lead_inv);
            if (q.size() < (std::size_t)shift + 1) q.resize((std::size_t)shift + 1, 0);
            q[(std::size_t)shift] = (digit)c;
            for (int j = 0; j <= d1; ++j)
                r2[(std::size_t)(shift + j)] =
                    (digit)modp_.reduce(r2[(std::size_t)(shift + j)] + c * (p_ - r1[(std::size_t)j]));
            poly_trim(r2);
        }
        // t2 = t0 - q*t1
        std::vector<digit> qt1;
        if (!q.empty() && !t1.empty()) {
            qt1.assign(q.size() + t1.size() - 1, 0);
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j < t1.size(); ++j)
                    qt1[i + j] = (digit)modp_.reduce(qt1[i + j] + (std::uint64_t)q[i] * t1[j]);
            }
        }
        std::vector<digit> t2(std::max(t0.size(), qt1.size()), 0);
        for (std::size_t i = 0; i < t2.size(); ++i) {
            std::uint64_t a = i < t0.size() ? t0[i] : 0;
            std::uint64_t b = i < qt1.size() ? qt1[i] : 0;
            t2[i] = (digit)modp_.reduce(a + p_ - modp_.reduce(b));
        }
        poly_trim(t2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant (modulus irreducible); scale t0 by its inverse
    if (r0.size() != 1) fail(Err::Internal, "gcd with modulus not constant");
    std::uint64_t scale = inv_mod_p_[r0[0]];
    Element out;
    for (std::size_t i = 0; i < t0.size() && i < m_; ++i)
        out.c[i] = (digit)modp_.reduce((std::uint64_t)t0[i] * scale);
    return out;
}

Element Field::pow(const Element& x, u128 e) const {
    if (e == 0) return one();
    if (is_zero(x)) return zero();
    Element base = x;
    Element result = one();
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Element Field::frob_p(const Element& x, unsigned e) const {
    e %= m_;
    if (e == 0) return x;
    return apply_table(frob_pow_[e], x);
}

Element Field::q_power(const Element& x, long long t) const {
    long long tm = ((t % (long long)n_) + n_) % n_;
    return frob_p(x, (unsigned)((h_ * (unsigned long long)tm) % m_));
}

Element Field::sigma_apply(const Element& x, long long j) const {
    long long jm = ((j % (long long)n_) + n_) % n_;
    return frob_p(x, (unsigned)(((unsigned long long)h_ * s_ * (unsigned long long)jm) % m_));
}

Element Field::relative_norm(const Element& x, unsigned t) const {
    if (t == 0 || n_ % t != 0) fail(Err::NonDivisor, "t does not divide n");
    if (is_zero(x)) return zero();
    Element acc = one();
    for (unsigned i = 0; i < n_ / t; ++i) acc = mul(acc, q_power(x, (long long)t * i));
    return acc;
}

static u128 addmod_u128(u128 a, u128 b, u128 m) {
    a %= m;
    b %= m;
    u128 r = a + b;  // both < m <= 2^126, no wrap
    if (r >= m) r -= m;
    return r;
}

static u128 mulmod_u128(u128 a, u128 b, u128 m) {
    a %= m;
    u128 acc = 0;
    while (b) {
        if (b & 1) acc = addmod_u128(acc, a, m);
        a = addmod_u128(a, a, m);
        b >>= 1;
    }
    return acc;
}

u128 Field::exponent_eval(const FrobExponent& e) const {
    const u128 M = order_ - 1;
    if (M == 1) return 0;
    u128 acc = 0;
    for (const auto& [c, pw] : e.terms()) {
        long long em = ((pw % (long long)n_) + n_) % n_;
        unsigned long long fe = ((unsigned long long)s_ * (unsigned long long)em) % n_;
        u128 qp = 1;
        for (unsigned long long i = 0; i < (unsigned long long)h_ * fe; ++i) qp *= p_;
        i128 cm = (i128)(c % (i128)M);
        if (cm < 0) cm += (i128)M;
        acc = addmod_u128(acc, mulmod_u128((u128)cm, qp, M), M);
    }
    return acc;
}

Element Field::power_by_exponent(const Element& x, const FrobExponent& e) const {
    if (is_zero(x)) {
        // formal integer value of the exponent decides what 0^e means
        i128 total = 0;
        for (const auto& [c, pw] : e.terms()) {
            long long em = ((pw % (long long)n_) + n_) % n_;
            unsigned long long fe = ((unsigned long long)s_ * (unsigned long long)em) % n_;
            i128 qp = 1;
            for (unsigned long long i = 0; i < (unsigned long long)h_ * fe; ++i) qp *= (i128)p_;
            i128 term = (i128)c * qp;
            if (c != 0 && term / (i128)c != qp) fail(Err::BadArgument, "exponent overflow");
            if (__builtin_add_overflow(total, term, &total)) fail(Err::BadArgument, "exponent overflow");
        }
        if (total > 0) return zero();
        if (total == 0) return one();
        fail(Err::DivisionByZero, "negative exponent applied to zero");
    }
    return pow(x, exponent_eval(e));
}

std::vector<Element> Field::cube_roots_of_unity() const {
    if (p_ == 3) return {one()};
    const u128 M = order_ - 1;
    if (M % 3 != 0) fail(Err::NoRoot, "x^2+x+1 has no root in this field");
    const u128 e = M / 3;
    for (u128 idx = 2; idx < order_; ++idx) {
        Element y = pow(from_index(idx), e);
        if (y == one()) continue;
        Element y2 = mul(y, y);
        if (!is_zero(add(add(y2, y), one()))) fail(Err::Internal, "order-3 element is not a root");
        std::vector<Element> roots{y, y2};
        if (index_of(roots[1]) < index_of(roots[0])) std::swap(roots[0], roots[1]);
        return roots;
    }
    fail(Err::Internal, "no element of order 3 found");
}

bool Field::modulus_irreducibility_recheck() const {
    u128 pm = 1;
    for (unsigned i = 0; i < m_; ++i) pm *= p_;
    std::vector<digit> x{0, 1};
    if (m_ == 1) {
        x = {(digit)modp_.reduce(p_ - modulus_[0])};
        poly_trim(x);
    }
    if (poly_pow_x_mod(pm, modulus_, modp_) != x) return false;
    for (unsigned l : prime_factors_of(m_)) {
        u128 pe = 1;
        for (unsigned i = 0; i < m_ / l; ++i) pe *= p_;
        if (poly_pow_x_mod(pe, modulus_, modp_) == x) return false;
    }
    return true;
}

}  // namespace mk
