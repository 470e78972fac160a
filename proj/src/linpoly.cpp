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

#include "linpoly.hpp"

#include <functional>

#include "fp_linalg.hpp"

namespace mk {

bool is_zero(const Field& f, const SigmaPoly& g) {
    for (const auto& c : g.coeffs)
        if (!f.is_zero(c)) return false;
    return true;
}

int sigma_degree(const Field& f, const SigmaPoly& g) {
    for (int i = (int)g.coeffs.size() - 1; i >= 0; --i)
        if (!f.is_zero(g.coeffs[(std::size_t)i])) return i;
    fail(Err::ZeroPolynomial, "zero polynomial has no sigma-degree");
}

SigmaPoly make_trinomial(const Field& f, const Element& a, const Element& b, int d) {
    if (d < 2) fail(Err::RangeError, "trinomial requires d >= 2");
    SigmaPoly g;
    g.coeffs.assign((std::size_t)d + 1, f.zero());
    g.coeffs[0] = a;
    g.coeffs[1] = b;
    g.coeffs[(std::size_t)d] = f.minus_one();
    return g;
}

Element evaluate(const Field& f, const SigmaPoly& g, const Element& x) {
    Element acc = f.zero();
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
        if (f.is_zero(g.coeffs[i])) continue;
        acc = f.add(acc, f.mul(g.coeffs[i], f.sigma_apply(x, (long long)i)));
    }
    return acc;
}

// m x m matrix over F_p of the induced linear map, columns = images of the basis
static std::vector<digit> action_matrix(const Field& f, const SigmaPoly& g) {
    const unsigned m = f.m();
    std::vector<digit> mat((std::size_t)m * m, 0);
    for (std::size_t t = 0; t < g.coeffs.size(); ++t) {
        if (f.is_zero(g.coeffs[t])) continue;
        for (unsigned i = 0; i < m; ++i) {
            Element theta_i;
            theta_i.c[i] = 1;
            Element img = f.mul(g.coeffs[t], f.sigma_apply(theta_i, (long long)t));
            for (unsigned r = 0; r < m; ++r) {
                std::uint32_t v = (std::uint32_t)mat[(std::size_t)r * m + i] + img.c[r];
                if (v >= f.p()) v -= (std::uint32_t)f.p();
                mat[(std::size_t)r * m + i] = (digit)v;
            }
        }
    }
    return mat;
}

int kernel_dim(const Field& f, const SigmaPoly& g) {
    if (is_zero(f, g)) fail(Err::ZeroPolynomial, "kernel of the zero polynomial");
    const int m = (int)f.m();
    auto mat = action_matrix(f, g);
    int rank = row_echelon(mat, m, m, f.mod_p(), f.inv_table());
    int nullity = m - rank;
    if (nullity % (int)f.h() != 0)
        fail(Err::Internal, "F_p-nullity not divisible by h; map is not F_q-linear");
    return nullity / (int)f.h();
}

std::vector<Element> kernel_basis(const Field& f, const SigmaPoly& g) {
    if (is_zero(f, g)) fail(Err::ZeroPolynomial, "kernel of the zero polynomial");
    const int m = (int)f.m();
    auto ns = nullspace(action_matrix(f, g), m, m, f.mod_p(), f.inv_table());
    std::vector<Element> out;
    out.reserve(ns.size());
    for (const auto& v : ns) {
        Element e;
        for (int i = 0; i < m; ++i) e.c[(std::size_t)i] = v[(std::size_t)i];
        out.push_back(e);
    }
    return out;
}

int weight(const Field& f, const SigmaPoly& g) { return (int)f.n() - kernel_dim(f, g); }

bool gow_norm_condition(const Field& f, const SigmaPoly& g) {
    int k = sigma_degree(f, g);
    if (k > (int)f.n() - 1) fail(Err::RangeError, "sigma-degree exceeds n-1");
    Element n0 = f.relative_norm(g.coeffs[0], 1);
    Element nk = f.relative_norm(g.coeffs[(std::size_t)k], 1);
    return n0 == f.mul(f.sign((std::uint64_t)f.n() * (std::uint64_t)k), nk);
}

bool is_monic_negated(const Field& f, const SigmaPoly& g) {
    if (is_zero(f, g)) return false;
    return g.coeffs[(std::size_t)sigma_degree(f, g)] == f.minus_one();
}

SigmaPoly normalize_monic_negated(const Field& f, const SigmaPoly& g) {
    int k = sigma_degree(f, g);
    Element factor = f.inv(f.neg(g.coeffs[(std::size_t)k]));
    SigmaPoly out;
    out.coeffs.reserve(g.coeffs.size());
    for (const auto& c : g.coeffs) out.coeffs.push_back(f.mul(c, factor));
    return out;
}

MatrixExt identity_matrix(const Field& f, int k) {
    MatrixExt out(k, k);
    for (int i = 0; i < k; ++i) out.at(i, i) = f.one();
    return out;
}

static int companion_degree(const Field& f, const SigmaPoly& g) {
    int k = sigma_degree(f, g);
    if (k < 1 || k > (int)f.n() - 1) fail(Err::RangeError, "companion criterion requires 1 <= k <= n-1");
    if (!(g.coeffs[(std::size_t)k] == f.minus_one()))
        fail(Err::NotMonicNegated, "leading coefficient must be -1");
    return k;
}

MatrixExt companion_matrix(const Field& f, const SigmaPoly& g) {
    int k = companion_degree(f, g);
    MatrixExt out(k, k);
    for (int r = 1; r < k; ++r) out.at(r, r - 1) = f.one();
    for (int r = 0; r < k; ++r) out.at(r, k - 1) = g.coeffs[(std::size_t)r];
    return out;
}

MatrixExt companion_product(const Field& f, const SigmaPoly& g) {
    int k = companion_degree(f, g);
    MatrixExt prod = companion_matrix(f, g);
    // P <- P C^{sigma^i}: columns shift left, new last column = P (a_0..a_{k-1})^{sigma^i}
    for (unsigned i = 1; i < f.n(); ++i) {
        std::vector<Element> twisted((std::size_t)k);
        for (int t = 0; t < k; ++t) twisted[(std::size_t)t] = f.sigma_apply(g.coeffs[(std::size_t)t], i);
        MatrixExt next(k, k);
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c + 1 < k; ++c) next.at(r, c) = prod.at(r, c + 1);
            Element acc = f.zero();
            for (int t = 0; t < k; ++t) acc = f.add(acc, f.mul(prod.at(r, t), twisted[(std::size_t)t]));
            next.at(r, k - 1) = acc;
        }
        prod = std::move(next);
    }
    return prod;
}

bool has_max_kernel_companion(const Field& f, const SigmaPoly& g) {
    int k = companion_degree(f, g);
    return companion_product(f, g) == identity_matrix(f, k);
}

bool has_max_kernel_vector(const Field& f, const SigmaPoly& g) {
    int k = companion_degree(f, g);
    std::vector<Element> w((std::size_t)k, f.zero());
    w[0] = f.one();
    // rightmost factor first: w <- C^{sigma^i} w for i = n-1 .. 0
    for (int i = (int)f.n() - 1; i >= 0; --i) {
        Element last = w[(std::size_t)k - 1];
        std::vector<Element> next((std::size_t)k);
        next[0] = f.mul(f.sigma_apply(g.coeffs[0], i), last);
        for (int r = 1; r < k; ++r)
            next[(std::size_t)r] =
                f.add(w[(std::size_t)r - 1], f.mul(f.sigma_apply(g.coeffs[(std::size_t)r], i), last));
        w = std::move(next);
    }
    if (!(w[0] == f.one())) return false;
    for (int r = 1; r < k; ++r)
        if (!f.is_zero(w[(std::size_t)r])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// M_{l,k} table and expansion coefficients

MEntryTable::MEntryTable(const Field& f, const Element& a, const Element& b, int d)
    : f_(f), a_(a), b_(b), d_(d) {
    if (d < 2) fail(Err::RangeError, "M-table requires d >= 2");
}

const Element& MEntryTable::at(int l, int k) {
    if (l < 1 || l > d_) fail(Err::IndexOutOfRange, "l must be in [1, d]");
    auto key = std::make_pair(l, k);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Element val;
    if (k <= 0) {
        val = (k == l - d_) ? f_.one() : f_.zero();
    } else {
        Element left = f_.mul(at(l, k - d_), f_.sigma_apply(a_, k - 1));
        Element right = f_.mul(at(l, k - d_ + 1), f_.sigma_apply(b_, k - 1));
        val = f_.add(left, right);
    }
    return memo_.emplace(key, val).first->second;
}

Element m_entry(const Field& f, const Element& a, const Element& b, int d, int l, int k) {
    MEntryTable t(f, a, b, d);
    return t.at(l, k);
}

std::vector<Element> c_row_recursive(const Field& f, const Element& a, const Element& b, int d,
                                     int j, int k) {
    if (d < 2) fail(Err::RangeError, "requires d >= 2");
    if (j < 0) fail(Err::IndexOutOfRange, "j must be nonnegative");
    std::vector<Element> row{f.one()};  // j = 0
    for (int step = 0; step < j; ++step) {
        std::vector<Element> next((std::size_t)step + 2, f.zero());
        for (int t = 0; t <= step + 1; ++t) {
            Element acc = f.zero();
            if (t <= step)
                acc = f.add(acc, f.mul(row[(std::size_t)t], f.sigma_apply(a, k - step * d + t - 1)));
            if (t >= 1)
                acc = f.add(acc, f.mul(row[(std::size_t)t - 1], f.sigma_apply(b, k - step * d + t - 2)));
            next[(std::size_t)t] = acc;
        }
        row = std::move(next);
    }
    return row;
}

Element c_coeff_closed(const Field& f, const Element& a, const Element& b, int d, int j, int t,
                       int k) {
    if (d < 2) fail(Err::RangeError, "requires d >= 2");
    if (t < 0 || t > j) fail(Err::IndexOutOfRange, "t must be in [0, j]");
    Element total = f.zero();
    std::vector<int> parts((std::size_t)t + 1, 0);
    // sum over compositions i_0 + ... + i_t = j - t of the displayed product
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == t) {
            parts[(std::size_t)t] = remaining;
            Element term = f.one();
            int prefix = 0;  // S_{r-1}
            for (int r = 0; r <= t; ++r) {
                for (int jr = 1; jr <= parts[(std::size_t)r]; ++jr)
                    term = f.mul(term, f.sigma_apply(a, k - (prefix + jr + r - 1) * d + (r - 1)));
                prefix += parts[(std::size_t)r];
            }
            int su = 0;
            for (int u = 0; u <= t - 1; ++u) {
                su += parts[(std::size_t)u];
                term = f.mul(term, f.sigma_apply(b, k - (su + u) * d + u - 1));
            }
            total = f.add(total, term);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            parts[(std::size_t)pos] = v;
            rec(pos + 1, remaining - v);
        }
    };
    rec(0, j - t);
    return total;
}

ZTable::ZTable(const Field& f, const Element& a, const Element& b, int d, int k)
    : f_(f), a_(a), b_(b), d_(d), k_(k) {
    if (d < 2) fail(Err::RangeError, "z-table requires d >= 2");
    if (k < d + 1) fail(Err::RangeError, "z-table requires k >= d+1");
    if (!(f.mul(f.sigma_apply(a, d), b) == f.mul(f.sigma_apply(a, 1), f.sigma_apply(b, d))))
        fail(Err::HypothesisViolated, "a^{sigma^d} b != a^sigma b^{sigma^d}");
}

Element ZTable::z(int j, int i) {
    if (j < 0 || i < 0 || i > j) fail(Err::IndexOutOfRange, "need 0 <= i <= j");
    if (j == 0) return f_.one();
    auto key = std::make_pair(j, i);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Element val;
    if (i == 0) {
        val = f_.mul(z(j - 1, 0), f_.sigma_apply(a_, k_ - (j - 1) * d_ - 1));
    } else if (i == j) {
        val = f_.mul(z(j - 1, j - 1), f_.sigma_apply(b_, k_ - (j - 1) * d_ + j - 2));
    } else {
        val = f_.mul(z(j - 1, i), f_.sigma_apply(a_, k_ - (j - 1) * d_ + i - 1));
    }
    memo_.emplace(key, val);
    return val;
}

Element ZTable::z_via_b(int j, int i) {
    if (j < 1 || i < 1 || i >= j) fail(Err::IndexOutOfRange, "middle case needs 0 < i < j");
    return f_.mul(z(j - 1, i - 1), f_.sigma_apply(b_, k_ - (j - 1) * d_ + i - 2));
}

Element z_recursion(const Field& f, const Element& a, const Element& b, int d, int j, int i,
                    int k) {
    ZTable t(f, a, b, d, k);
    return t.z(j, i);
}

static std::uint64_t powmod_small(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = (r * a) % p;
        a = (a * a) % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t binom_mod_p(std::uint64_t j, std::uint64_t i, std::uint64_t p) {
    if (i > j) return 0;
    std::uint64_t result = 1;
    while (j > 0 || i > 0) {
        std::uint64_t jd = j % p, id = i % p;
        if (id > jd) return 0;
        // binom(jd, id) mod p, both digits below p
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t x = 1; x <= id; ++x) {
            num = (num * ((jd - id + x) % p)) % p;
            den = (den * (x % p)) % p;
        }
        result = (result * num) % p;
        result = (result * powmod_small(den, p - 2, p)) % p;
        j /= p;
        i /= p;
    }
    return result;
}

}  // namespace mk
