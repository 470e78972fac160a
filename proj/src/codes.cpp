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

#include "codes.hpp"

#include <algorithm>

#include "fp_linalg.hpp"
#include "scan.hpp"

namespace mk {

namespace {

// reduced echelon rows of the F_p-span, returned as Elements (canonical form)
std::vector<Element> rref_span(const Field& f, const std::vector<Element>& vecs) {
    const int m = (int)f.m();
    const int rows = (int)vecs.size();
    if (rows == 0) return {};
    std::vector<digit> mat((std::size_t)rows * m, 0);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < m; ++c) mat[(std::size_t)r * m + c] = vecs[(std::size_t)r].c[(std::size_t)c];
    int rank = reduced_row_echelon(mat, rows, m, f.mod_p(), f.inv_table());
    std::vector<Element> out((std::size_t)rank);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < m; ++c) out[(std::size_t)r].c[(std::size_t)c] = mat[(std::size_t)r * m + c];
    return out;
}

// membership via pivot reduction against reduced echelon rows
bool in_rref_span(const Field& f, const std::vector<Element>& rref, const Element& x) {
    const int m = (int)f.m();
    Element r = x;
    for (const auto& row : rref) {
        int pivot = 0;
        while (pivot < m && row.c[(std::size_t)pivot] == 0) ++pivot;
        if (pivot == m) continue;
        std::uint64_t coef = r.c[(std::size_t)pivot];
        if (coef) r = f.sub(r, f.scalar_mul(coef, row));
    }
    return f.is_zero(r);
}

std::vector<Element> q_scalar_multiples(const Field& f, const Element& v) {
    std::vector<Element> out;
    out.reserve(f.q_scalar_basis().size());
    for (const auto& lam : f.q_scalar_basis()) out.push_back(f.mul(lam, v));
    return out;
}

}  // namespace

Subspace Subspace::from_generators(const Field& f, const std::vector<Element>& gens) {
    Subspace v;
    std::vector<Element> expanded;
    for (const auto& g : gens)
        for (auto& mult : q_scalar_multiples(f, g)) expanded.push_back(mult);
    v.fp_echelon_ = rref_span(f, expanded);
    if (v.fp_echelon_.size() % f.h() != 0) fail(Err::Internal, "F_q-span has non-multiple-of-h rank");
    v.k_ = (int)(v.fp_echelon_.size() / f.h());
    // extract an F_q-basis greedily
    std::vector<Element> running_vecs;
    std::vector<Element> running;
    for (const auto& g : gens) {
        if (f.is_zero(g) || in_rref_span(f, running, g)) continue;
        v.fq_basis_.push_back(g);
        for (auto& mult : q_scalar_multiples(f, g)) running_vecs.push_back(mult);
        running = rref_span(f, running_vecs);
        if ((int)v.fq_basis_.size() == v.k_) break;
    }
    if ((int)v.fq_basis_.size() != v.k_) fail(Err::Internal, "F_q-basis extraction failed");
    return v;
}

Subspace Subspace::from_fp_basis_checked(const Field& f, const std::vector<Element>& fp_basis) {
    auto rref = rref_span(f, fp_basis);
    if (rref.size() != fp_basis.size())
        fail(Err::NotSubspace, "given vectors are F_p-dependent");
    if (rref.size() % f.h() != 0)
        fail(Err::NotSubspace, "F_p-dimension not divisible by h; not an F_q-subspace");
    for (const auto& row : rref)
        for (const auto& mult : q_scalar_multiples(f, row))
            if (!in_rref_span(f, rref, mult))
                fail(Err::NotSubspace, "span is not closed under F_q-scaling");
    Subspace v = from_generators(f, fp_basis);
    if (v.fp_echelon_ != rref) fail(Err::Internal, "echelon mismatch");
    return v;
}

bool Subspace::contains(const Field& f, const Element& x) const {
    return in_rref_span(f, fp_echelon_, x);
}

std::vector<Element> Subspace::enumerate(const Field& f) const {
    const std::size_t rows = fp_echelon_.size();
    u128 total = 1;
    for (std::size_t i = 0; i < rows; ++i) total *= f.p();
    std::vector<Element> out;
    out.reserve((std::size_t)total);
    for (u128 idx = 0; idx < total; ++idx) {
        u128 t = idx;
        Element v = f.zero();
        for (std::size_t i = 0; i < rows; ++i) {
            std::uint64_t c = (std::uint64_t)(t % f.p());
            t /= f.p();
            if (c) v = f.add(v, f.scalar_mul(c, fp_echelon_[i]));
        }
        out.push_back(v);
    }
    return out;
}

Subspace kernel_subspace(const Field& f, const SigmaPoly& g) {
    return Subspace::from_fp_basis_checked(f, kernel_basis(f, g));
}

SigmaPoly subspace_polynomial(const Field& f, const Subspace& v) {
    if (f.s() != 1) fail(Err::SigmaMismatch, "subspace polynomials require s = 1");
    SigmaPoly p;
    p.coeffs = {f.one()};  // vanishes exactly on {0}
    const u128 qm1 = f.q() - 1;
    for (const auto& u : v.fq_basis()) {
        Element val = evaluate(f, p, u);
        if (f.is_zero(val)) fail(Err::Internal, "basis vector already in the kernel");
        Element c = f.pow(val, qm1);
        // P <- P^q - c P
        std::size_t deg = p.coeffs.size() - 1;
        std::vector<Element> next(deg + 2, f.zero());
        next[0] = f.neg(f.mul(c, p.coeffs[0]));
        for (std::size_t i = 1; i <= deg; ++i)
            next[i] = f.sub(f.q_power(p.coeffs[i - 1], 1), f.mul(c, p.coeffs[i]));
        next[deg + 1] = f.q_power(p.coeffs[deg], 1);
        p.coeffs = std::move(next);
    }
    return p;
}

GapInfo gap(const Field& f, const SigmaPoly& g) {
    int k = sigma_degree(f, g);
    if (k < 1) fail(Err::MalformedShape, "gap needs sigma-degree >= 1");
    if (!(g.coeffs[(std::size_t)k] == f.one()))
        fail(Err::MalformedShape, "gap is defined for monic polynomials");
    for (int i = k - 1; i >= 0; --i)
        if (!f.is_zero(g.coeffs[(std::size_t)i])) return GapInfo{k - i, false};
    return GapInfo{k, true};
}

Subspace cyclic_shift(const Field& f, const Subspace& v, const Element& alpha) {
    if (f.is_zero(alpha)) fail(Err::DivisionByZero, "cyclic shift by zero");
    std::vector<Element> gens;
    gens.reserve((std::size_t)v.dim());
    for (const auto& b : v.fq_basis()) gens.push_back(f.mul(alpha, b));
    return Subspace::from_generators(f, gens);
}

int subspace_distance(const Field& f, const Subspace& u, const Subspace& v) {
    const int m = (int)f.m();
    const int ru = (int)u.fp_echelon().size(), rv = (int)v.fp_echelon().size();
    std::vector<digit> mat((std::size_t)(ru + rv) * m, 0);
    for (int r = 0; r < ru; ++r)
        for (int c = 0; c < m; ++c)
            mat[(std::size_t)r * m + c] = u.fp_echelon()[(std::size_t)r].c[(std::size_t)c];
    for (int r = 0; r < rv; ++r)
        for (int c = 0; c < m; ++c)
            mat[(std::size_t)(ru + r) * m + c] = v.fp_echelon()[(std::size_t)r].c[(std::size_t)c];
    int rank = row_echelon(mat, ru + rv, m, f.mod_p(), f.inv_table());
    int dist_p = 2 * rank - ru - rv;  // dim U + dim V - 2 dim(U cap V)
    if (dist_p % (int)f.h() != 0) fail(Err::Internal, "distance not divisible by h");
    return dist_p / (int)f.h();
}

OrbitCode build_orbit_code(const Field& f, const Subspace& v, const OrbitOptions& opts) {
    if (v.dim() < 1) fail(Err::RangeError, "orbit code needs a nonzero generator subspace");
    OrbitCode code;
    code.generator = v;
    // stabilizer: the largest subfield F_{q^t} with F_{q^t} V = V
    unsigned t_found = 1;
    for (unsigned t = f.n(); t >= 1; --t) {
        if (f.n() % t != 0) continue;
        // F_p-basis of the fixed field of x -> x^{q^t}
        const unsigned e = (f.h() * t) % f.m();
        std::vector<digit> mat((std::size_t)f.m() * f.m(), 0);
        for (unsigned col = 0; col < f.m(); ++col) {
            Element theta_col;
            theta_col.c[col] = 1;
            Element img = f.frob_p(theta_col, e);
            for (unsigned row = 0; row < f.m(); ++row) {
                std::uint64_t val = img.c[row];
                if (row == col) val = f.mod_p().reduce(val + f.p() - 1);
                mat[(std::size_t)row * f.m() + col] = (digit)val;
            }
        }
        auto scalars = nullspace(std::move(mat), (int)f.m(), (int)f.m(), f.mod_p(), f.inv_table());
        bool closed = true;
        for (const auto& sc : scalars) {
            Element lam;
            for (unsigned i = 0; i < f.m(); ++i) lam.c[i] = sc[(std::size_t)i];
            for (const auto& bv : v.fq_basis())
                if (!v.contains(f, f.mul(lam, bv))) {
                    closed = false;
                    break;
                }
            if (!closed) break;
        }
        if (closed) {
            t_found = t;
            break;
        }
    }
    code.t = t_found;
    u128 qt = 1;
    for (unsigned i = 0; i < f.h() * t_found; ++i) qt *= f.p();
    code.size = (f.order() - 1) / (qt - 1);

    if (opts.certify) {
        ensure_budget(f.order() - 1, opts.budget, "orbit distance certification");
        const std::size_t nchunks = chunk_count_for(f.order() - 1);
        std::vector<int> chunk_min(nchunks, INT32_MAX);
        run_chunked(f.order() - 1, opts.workers, [&](std::size_t ci, u128 begin, u128 end) {
            int local = INT32_MAX;
            for (u128 off = begin; off < end; ++off) {
                Element alpha = f.from_index(off + 1);
                Subspace shifted = cyclic_shift(f, v, alpha);
                int dist = subspace_distance(f, v, shifted);
                if (dist == 0) continue;  // alpha in the stabilizer
                if (dist < local) local = dist;
            }
            chunk_min[ci] = local;
        });
        int best = INT32_MAX;
        for (int cm : chunk_min) best = std::min(best, cm);
        if (best != INT32_MAX) {
            code.min_distance = best;
            code.certified = true;
        } else {
            code.min_distance = std::nullopt;  // the orbit is {V} alone
            code.certified = true;
        }
    }
    return code;
}

u128 WeightCensus::total() const {
    u128 acc = 0;
    for (const auto& [w, c] : counts) acc += c;
    return acc;
}

u128 WeightCensus::count_at(int w) const {
    auto it = counts.find(w);
    return it == counts.end() ? 0 : it->second;
}

WeightCensus weight_census(const Field& f, int d, const CensusOptions& opts) {
    const int n = (int)f.n();
    if (d < 3 || d > n - 1) fail(Err::RangeError, "census requires 3 <= d <= n-1");
    const u128 count = f.order();
    ensure_budget(count * count * 2 - 1, opts.budget, "weight census");

    WeightCensus census;
    census.d = d;
    census.n = n;
    const std::size_t nchunks = chunk_count_for(count);
    std::vector<std::vector<u128>> partial(nchunks, std::vector<u128>((std::size_t)n + 1, 0));

    // leading stratum: monic-negated representatives, q^n - 1 scalars each
    run_chunked(count, opts.workers, [&](std::size_t ci, u128 begin, u128 end) {
        TrinomialScanner scan(f, d);
        auto& cw = partial[ci];
        for (u128 ia = begin; ia < end; ++ia) {
            scan.fix_a(f.from_index(ia));
            for (u128 ib = 0; ib < count; ++ib) {
                int w = n - scan.kdim_with_b(f.from_index(ib));
                cw[(std::size_t)w] += 1;
            }
        }
    });
    std::vector<u128> totals((std::size_t)n + 1, 0);
    for (const auto& chunk : partial)
        for (std::size_t w = 0; w <= (std::size_t)n; ++w) totals[w] += chunk[w] * (count - 1);

    // degenerate stratum: c_d = 0, direct weights of c_0 x + c_1 x^sigma
    {
        const int m = (int)f.m();
        std::vector<Element> r0((std::size_t)m), r1((std::size_t)m);
        for (int i = 0; i < m; ++i) {
            Element theta_i;
            theta_i.c[(std::size_t)i] = 1;
            r0[(std::size_t)i] = theta_i;
            r1[(std::size_t)i] = f.sigma_apply(theta_i, 1);
        }
        std::vector<digit> mat((std::size_t)m * m);
        for (u128 i0 = 0; i0 < count; ++i0) {
            Element c0 = f.from_index(i0);
            std::vector<Element> cols((std::size_t)m);
            for (int i = 0; i < m; ++i) cols[(std::size_t)i] = f.mul(c0, r0[(std::size_t)i]);
            for (u128 i1 = 0; i1 < count; ++i1) {
                if (i0 == 0 && i1 == 0) continue;
                Element c1 = f.from_index(i1);
                for (int i = 0; i < m; ++i) {
                    Element col = f.is_zero(c1)
                                      ? cols[(std::size_t)i]
                                      : f.add(cols[(std::size_t)i], f.mul(c1, r1[(std::size_t)i]));
                    for (int r = 0; r < m; ++r) mat[(std::size_t)r * m + i] = col.c[(std::size_t)r];
                }
                int rank = row_echelon(mat, m, m, f.mod_p(), f.inv_table());
                int kdim = (m - rank) / (int)f.h();
                totals[(std::size_t)(n - kdim)] += 1;
            }
        }
    }

    for (int w = 0; w <= n; ++w)
        if (totals[(std::size_t)w] != 0) census.counts[w] = totals[(std::size_t)w];
    return census;
}

namespace {

u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > (u128)~(u128)0 / a)
        fail(Err::FieldTooLarge, "closed-form count exceeds 128-bit range");
    return a * b;
}

DCount exact(u128 v) { return DCount{DCount::Kind::Exact, v}; }

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

}  // namespace

DCount d_closed_form(const Field& f, int d) {
    const int n = (int)f.n();
    if (d < 3 || n <= d) return DCount{};  // degenerate d >= n strata stay unclassified
    const u128 qn1 = f.order() - 1;  // q^n - 1
    auto q_pow_minus1 = [&](int e) {
        u128 v = 1;
        for (int i = 0; i < e * (int)f.h(); ++i) v *= f.p();
        return v - 1;
    };
    if (d == 3 && n >= 4 && n <= 8) {
        if (n == 4 || n == 5) return exact(0);
        if (n == 6) return exact(checked_mul(qn1, q_pow_minus1(3) + 2));  // (q^6-1)(q^3+1)
        if (n == 7) {
            if (f.p() == 2) return exact(checked_mul(qn1 / q_pow_minus1(1), qn1));
            return exact(0);
        }
        unsigned r = q_mod3(f);  // n = 8
        if (r == 1) return exact(0);
        u128 base = checked_mul(qn1 / q_pow_minus1(1), qn1);
        return exact(r == 0 ? base : checked_mul(2, base));
    }
    if (d == 4 && n >= 5 && n <= 15) {
        if (n <= 11 && n != 8) return exact(0);
        if (n == 8 || n == 12) return exact(checked_mul(qn1 / q_pow_minus1(4), qn1));
        if (n == 13) {
            if (f.p() == 3) return exact(checked_mul(qn1 / q_pow_minus1(1), qn1));
            return exact(0);
        }
        if (n == 15) {
            if (f.p() == 2) return exact(checked_mul(qn1 / q_pow_minus1(1), qn1));
            return exact(0);
        }
        return DCount{};  // n = 14: no closed form
    }
    if (d >= 3 && n <= d * (d - 1)) {
        if (n % d != 0) return exact(0);
        return exact(checked_mul(qn1 / q_pow_minus1(d), qn1));
    }
    if (d >= 3 && n == d * (d - 1) + 1) {
        if (is_power_of((std::uint64_t)d - 1, f.p()))
            return exact(checked_mul(qn1 / q_pow_minus1(1), qn1));
        return exact(0);
    }
    if (d >= 3 && n == d * d - 1 && f.p() == 2 && is_power_of((std::uint64_t)d, 2))
        return DCount{DCount::Kind::LowerBound, checked_mul(qn1 / q_pow_minus1(1), qn1)};
    return DCount{};
}

QuasiCheck quasi_subfield_check(const Field& f, const SigmaPoly& g) {
    if (f.s() != 1) fail(Err::SigmaMismatch, "quasi-subfield shapes are q-polynomials (s = 1)");
    if (is_zero(f, g)) fail(Err::MalformedShape, "zero polynomial");
    int k = sigma_degree(f, g);
    if (k < 1 || k > (int)f.n() - 1)
        fail(Err::MalformedShape, "requires shape x^{q^d} - lambda(x) with 1 <= d <= n-1");
    if (!(g.coeffs[(std::size_t)k] == f.one()))
        fail(Err::MalformedShape, "leading coefficient must be 1");
    QuasiCheck out;
    out.lambda_degree = -1;
    for (int i = k - 1; i >= 0; --i)
        if (!f.is_zero(g.coeffs[(std::size_t)i])) {
            out.lambda_degree = i;
            break;
        }
    out.splits = kernel_dim(f, g) == k;
    out.degree_ok =
        out.lambda_degree < 0 || (u128)out.lambda_degree * (u128)f.n() < (u128)k * (u128)k;
    out.quasi = out.splits && out.degree_ok;
    return out;
}

}  // namespace mk
