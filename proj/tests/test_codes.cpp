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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "codes.hpp"
#include "rng.hpp"
#include "trinomial.hpp"

using namespace mk;

namespace {

Subspace subfield_subspace(const Field& f, int d) {
    // F_{q^d} inside F_{q^n} as the kernel of x^{sigma^d} - x
    SigmaPoly g;
    g.coeffs.assign((std::size_t)d + 1, f.zero());
    g.coeffs[0] = f.minus_one();
    g.coeffs[(std::size_t)d] = f.one();
    return kernel_subspace(f, g);
}

}  // namespace

TEST_CASE("subspace construction and closure certificates") {
    Field f(2, 2, 3, 1);  // q = 4, h = 2
    // F_q itself as a subspace: generators {1}
    Subspace fq = Subspace::from_generators(f, {f.one()});
    CHECK(fq.dim() == 1);
    CHECK(fq.fp_echelon().size() == 2);
    CHECK(fq.contains(f, f.zero()));
    CHECK(fq.contains(f, f.one()));
    CHECK(fq.enumerate(f).size() == 4);
    for (const auto& x : fq.enumerate(f)) CHECK(f.q_power(x, 1) == x);

    // a single vector is not F_4-closed as an F_2-span
    CHECK_THROWS_AS(Subspace::from_fp_basis_checked(f, {f.one()}), Error);
    try {
        Subspace::from_fp_basis_checked(f, {f.one()});
    } catch (const Error& e) {
        CHECK(e.code() == Err::NotSubspace);
    }
    // dependent vectors are rejected
    CHECK_THROWS_AS(Subspace::from_fp_basis_checked(f, {f.one(), f.one()}), Error);

    // equality is by span, not by the generators given
    Subspace again = Subspace::from_generators(f, {f.theta()});
    Subspace same = Subspace::from_generators(
        f, {f.mul(f.theta(), f.q_scalar_basis()[1]), f.theta()});
    CHECK(again == same);
}

TEST_CASE("subspace polynomial: base cases") {
    Field f(2, 1, 6, 1);
    Subspace zero = Subspace::from_generators(f, {});
    SigmaPoly pz = subspace_polynomial(f, zero);
    REQUIRE(pz.coeffs.size() == 1);
    CHECK(pz.coeffs[0] == f.one());  // P(x) = x

    // V = F_q: P(x) = x^q - x
    Subspace fq = Subspace::from_generators(f, {f.one()});
    SigmaPoly pq = subspace_polynomial(f, fq);
    REQUIRE(pq.coeffs.size() == 2);
    CHECK(pq.coeffs[1] == f.one());
    CHECK(pq.coeffs[0] == f.minus_one());

    // same over q = 4 (h = 2): x^4 - x realized as coefficient on sigma^1
    Field f4(2, 2, 2, 1);
    Subspace fq4 = Subspace::from_generators(f4, {f4.one()});
    SigmaPoly pq4 = subspace_polynomial(f4, fq4);
    REQUIRE(pq4.coeffs.size() == 2);
    CHECK(pq4.coeffs[1] == f4.one());
    CHECK(pq4.coeffs[0] == f4.minus_one());
    for (const auto& x : fq4.enumerate(f4)) CHECK(f4.is_zero(evaluate(f4, pq4, x)));

    // s != 1 is rejected
    Field fs(2, 1, 5, 2);
    Subspace v = Subspace::from_generators(fs, {fs.one()});
    CHECK_THROWS_AS(subspace_polynomial(fs, v), Error);
}

TEST_CASE("subspace polynomial recovers the trinomial kernel") {
    Field f(2, 1, 7, 1);
    // maximum-kernel instance (a, b) = (1, 1)
    SigmaPoly tri = make_trinomial(f, f.one(), f.one(), 3);
    REQUIRE(kernel_dim(f, tri) == 3);
    Subspace v = kernel_subspace(f, tri);
    CHECK(v.dim() == 3);
    SigmaPoly pv = subspace_polynomial(f, v);
    // expect the monic normalization x^{sigma^3} - b x^sigma - a x
    SigmaPoly monic = normalize_monic_negated(f, tri);  // leading -1
    // monic-negated has leading -1; multiply by -1 for the monic form
    REQUIRE(pv.coeffs.size() == 4);
    CHECK(pv.coeffs[3] == f.one());
    CHECK(pv.coeffs[1] == f.neg(monic.coeffs[1]));
    CHECK(pv.coeffs[0] == f.neg(monic.coeffs[0]));
    CHECK(f.is_zero(pv.coeffs[2]));
    // roundtrip: kernel of P_V is V, elementwise
    CHECK(kernel_dim(f, pv) == 3);
    auto members = v.enumerate(f);
    CHECK(members.size() == 8);
    for (const auto& x : members) CHECK(f.is_zero(evaluate(f, pv, x)));
    std::set<std::string> root_set, member_set;
    for (u128 i = 0; i < f.order(); ++i) {
        Element x = f.from_index(i);
        if (f.is_zero(evaluate(f, pv, x))) root_set.insert(u128_to_string(f.index_of(x)));
    }
    for (const auto& x : members) member_set.insert(u128_to_string(f.index_of(x)));
    CHECK(root_set == member_set);
}

TEST_CASE("subspace polynomial roundtrip over an h = 2 field") {
    Field f(2, 2, 3, 1);  // q = 4, n = 3
    SplitMix64 rng(3);
    Subspace v = Subspace::from_generators(f, {rng.nonzero_element(f), rng.nonzero_element(f)});
    SigmaPoly pv = subspace_polynomial(f, v);
    CHECK(kernel_dim(f, pv) == v.dim());
    for (const auto& x : v.enumerate(f)) CHECK(f.is_zero(evaluate(f, pv, x)));
}

TEST_CASE("gap values") {
    Field f(2, 1, 7, 1);
    // x^{q^3} - b x^q - a x with b != 0: gap 2
    SigmaPoly g1 = normalize_monic_negated(f, make_trinomial(f, f.one(), f.one(), 3));
    for (auto& c : g1.coeffs) c = f.neg(c);  // monic
    auto gi1 = gap(f, g1);
    CHECK(gi1.gap == 2);
    CHECK_FALSE(gi1.all_lower_zero);
    // b = 0: gap 3
    SigmaPoly g2 = make_trinomial(f, f.one(), f.zero(), 3);
    for (auto& c : g2.coeffs) c = f.neg(c);
    auto gi2 = gap(f, g2);
    CHECK(gi2.gap == 3);
    CHECK_FALSE(gi2.all_lower_zero);
    // x^{q^k} alone: flagged convention gap = k
    SigmaPoly g3;
    g3.coeffs.assign(5, f.zero());
    g3.coeffs[4] = f.one();
    auto gi3 = gap(f, g3);
    CHECK(gi3.gap == 4);
    CHECK(gi3.all_lower_zero);
    // non-monic is rejected in odd characteristic
    Field f3(3, 1, 4, 1);
    SigmaPoly bad = make_trinomial(f3, f3.one(), f3.one(), 3);
    CHECK_THROWS_AS(gap(f3, bad), Error);
}

TEST_CASE("cyclic shift: identity, covariance, gap preservation") {
    Field f(2, 1, 7, 1);
    SigmaPoly tri = make_trinomial(f, f.one(), f.one(), 3);
    Subspace v = kernel_subspace(f, tri);
    CHECK(cyclic_shift(f, v, f.one()) == v);
    CHECK_THROWS_AS(cyclic_shift(f, v, f.zero()), Error);

    SplitMix64 rng(7);
    SigmaPoly pv = subspace_polynomial(f, v);
    const int k = v.dim();
    for (int it = 0; it < 100; ++it) {
        Element alpha = rng.nonzero_element(f);
        Subspace shifted = cyclic_shift(f, v, alpha);
        SigmaPoly ps = subspace_polynomial(f, shifted);
        // P_{alpha V}(x) = alpha^{q^k} P_V(alpha^{-1} x): coefficient j gets
        // alpha^{q^k} alpha^{-q^j}
        Element aqk = f.q_power(alpha, k);
        Element ainv = f.inv(alpha);
        REQUIRE(ps.coeffs.size() == pv.coeffs.size());
        for (std::size_t j = 0; j < pv.coeffs.size(); ++j) {
            Element expect = f.mul(aqk, f.mul(pv.coeffs[j], f.q_power(ainv, (long long)j)));
            CHECK(ps.coeffs[j] == expect);
        }
        CHECK(gap(f, ps).gap == gap(f, pv).gap);
    }
}

TEST_CASE("subspace distance: axioms and exact values") {
    Field f(2, 1, 6, 1);
    Subspace f2 = subfield_subspace(f, 1);
    Subspace f4 = subfield_subspace(f, 2);
    Subspace f8 = subfield_subspace(f, 3);
    CHECK(subspace_distance(f, f4, f4) == 0);
    // F_{q^2} and F_{q^3} meet in F_q: d = 2 + 3 - 2*1 = 3
    CHECK(subspace_distance(f, f4, f8) == 3);
    CHECK(subspace_distance(f, f2, f8) == 3 - 1);  // contained: 1 + 3 - 2
    SplitMix64 rng(11);
    for (int it = 0; it < 60; ++it) {
        Subspace u = Subspace::from_generators(f, {rng.nonzero_element(f), rng.nonzero_element(f)});
        Subspace v = Subspace::from_generators(f, {rng.nonzero_element(f)});
        Subspace w = Subspace::from_generators(f, {rng.nonzero_element(f), rng.nonzero_element(f)});
        CHECK(subspace_distance(f, u, v) == subspace_distance(f, v, u));
        CHECK(subspace_distance(f, u, u) == 0);
        CHECK(subspace_distance(f, u, w) <=
              subspace_distance(f, u, v) + subspace_distance(f, v, w));
        CHECK(subspace_distance(f, u, v) >= 0);
    }
}

TEST_CASE("orbit of a subfield has the stabilizer-reduced size") {
    Field f(2, 1, 6, 1);
    Subspace f8 = subfield_subspace(f, 3);
    OrbitOptions opts;
    opts.certify = false;
    OrbitCode code = build_orbit_code(f, f8, opts);
    CHECK(code.t == 3);
    CHECK(code.size == 9);  // (2^6-1)/(2^3-1)
    CHECK_FALSE(code.certified);
}

TEST_CASE("orbit code from the n = 7 maximum-kernel trinomial") {
    Field f(2, 1, 7, 1);
    Subspace v = kernel_subspace(f, make_trinomial(f, f.one(), f.one(), 3));
    OrbitCode code = build_orbit_code(f, v);
    CHECK(code.t == 1);
    CHECK(code.size == 127);
    REQUIRE(code.certified);
    REQUIRE(code.min_distance.has_value());
    CHECK(*code.min_distance == 4);  // 2k - 2 with k = 3
    // distance-gap bound: d(U, V) >= 2 min(gap U, gap V) on orbit pairs
    SplitMix64 rng(13);
    SigmaPoly pv = subspace_polynomial(f, v);
    int g = gap(f, pv).gap;
    for (int it = 0; it < 50; ++it) {
        Element alpha = rng.nonzero_element(f);
        Subspace shifted = cyclic_shift(f, v, alpha);
        int dist = subspace_distance(f, v, shifted);
        if (dist == 0) continue;
        CHECK(dist >= 2 * std::min(g, g));
    }
}

TEST_CASE("orbit code from the n = 8 family (three-dimensional generators)") {
    Field f(2, 1, 8, 1);
    auto roots = f.cube_roots_of_unity();
    Element a = f.one();
    Element b = f.div(roots[0], f.mul(f.sigma_apply(a, 6), f.sigma_apply(a, 3)));
    SigmaPoly tri = make_trinomial(f, a, b, 3);
    REQUIRE(kernel_dim(f, tri) == 3);
    OrbitCode code = build_orbit_code(f, kernel_subspace(f, tri));
    CHECK(code.t == 1);
    CHECK(code.size == 255);
    REQUIRE(code.min_distance.has_value());
    CHECK(*code.min_distance == 4);
    // budget too small for certification
    OrbitOptions tight;
    tight.budget = 10;
    CHECK_THROWS_AS(build_orbit_code(f, code.generator, tight), Error);
}

TEST_CASE("weight census: totals, bound, and the d | n value") {
    for (unsigned n : {4u, 5u, 6u}) {
        Field f(2, 1, n, 1);
        WeightCensus census = weight_census(f, 3);
        // all q^{3n} - 1 nonzero codewords are classified
        u128 expect_total = 1;
        for (int i = 0; i < 3; ++i) expect_total *= f.order();
        CHECK(census.total() == expect_total - 1);
        // no weight below n - d
        for (const auto& [w, c] : census.counts) CHECK(w >= (int)n - 3);
        // the minimum-weight count against the closed form
        DCount dc = d_closed_form(f, 3);
        REQUIRE(dc.kind == DCount::Kind::Exact);
        CHECK(census.count_at((int)n - 3) == dc.value);
    }
    // q = 2, n = 6 frozen value: D = 63 * 9 = 567
    Field f6(2, 1, 6, 1);
    CHECK(weight_census(f6, 3).count_at(3) == 567);
    CHECK_THROWS_AS(weight_census(f6, 6), Error);
    CensusOptions tight;
    tight.budget = 5;
    CHECK_THROWS_AS(weight_census(f6, 3, tight), Error);
}

TEST_CASE("census is worker-count invariant") {
    Field f(2, 1, 5, 1);
    WeightCensus one = weight_census(f, 3);
    CensusOptions par;
    par.workers = 4;
    WeightCensus four = weight_census(f, 3, par);
    CHECK(one.counts == four.counts);
}

TEST_CASE("closed-form counts across the documented cases") {
    // d | n inside the small range
    Field f6(2, 1, 6, 1);
    DCount v = d_closed_form(f6, 3);
    REQUIRE(v.kind == DCount::Kind::Exact);
    CHECK(v.value == 567);
    // d = 3, n = 7: even vs odd characteristic
    Field f7(2, 1, 7, 1);
    CHECK(d_closed_form(f7, 3).value == 16129);  // (2^7-1)^2
    Field f7o(3, 1, 7, 1);
    CHECK(d_closed_form(f7o, 3).value == 0);
    // d = 3, n = 8 by residue of q mod 3
    Field f8(2, 1, 8, 1);
    CHECK(d_closed_form(f8, 3).value == 130050);  // 2 (2^8-1)^2
    Field f8_3(3, 1, 8, 1);
    CHECK(d_closed_form(f8_3, 3).value == (u128)6560 * 6560 / 2);
    Field f8_4(2, 2, 8, 1);  // q = 4 = 1 mod 3
    CHECK(d_closed_form(f8_4, 3).value == 0);
    // d = 4 bullets
    Field f13(2, 1, 13, 1);
    CHECK(d_closed_form(f13, 4).value == 0);
    Field f13_3(3, 1, 13, 1);
    DCount dv = d_closed_form(f13_3, 4);
    REQUIRE(dv.kind == DCount::Kind::Exact);
    CHECK(dv.value == ((u128)1594322 / 2) * 1594322);  // (3^13-1)^2/(q-1)
    Field f12(2, 1, 12, 1);
    CHECK(d_closed_form(f12, 4).value == (u128)4095 * 4095 / 15);
    Field f5(2, 1, 5, 1);
    CHECK(d_closed_form(f5, 3).value == 0);
    // d = 4, n = 15 exact for even q; the general bullet gives a lower bound
    Field f15(2, 1, 15, 1);
    DCount e15 = d_closed_form(f15, 4);
    REQUIRE(e15.kind == DCount::Kind::Exact);
    CHECK(e15.value == (u128)32767 * 32767);
    // a generic power-of-two d beyond 4: lower bound only
    Field f63(2, 1, 63, 1);
    DCount lb = d_closed_form(f63, 8);
    REQUIRE(lb.kind == DCount::Kind::LowerBound);
    CHECK(lb.value == ((((u128)1) << 63) - 1) * ((((u128)1) << 63) - 1));
    // outside every closed-form case
    Field f22(2, 1, 22, 1);
    CHECK(d_closed_form(f22, 5).kind == DCount::Kind::Unknown);
    Field f14(2, 1, 14, 1);
    CHECK(d_closed_form(f14, 4).kind == DCount::Kind::Unknown);
    Field f3(2, 1, 3, 1);
    CHECK(d_closed_form(f3, 3).kind == DCount::Kind::Unknown);  // degenerate d = n
}

TEST_CASE("census counts match enumeration-based verdict counts") {
    // count of max-kernel pairs times (q^n - 1) equals the census entry at n-d
    Field f(2, 1, 7, 1);
    auto hits = enumerate_max_kernel(f, 3);
    WeightCensus census = weight_census(f, 3);
    CHECK(census.count_at(4) == (u128)hits.size() * (f.order() - 1));
}

TEST_CASE("quasi-subfield flags") {
    Field f(2, 1, 15, 1);
    // the even-family instance a = b = 1: x^{q^4} - x^q - x
    SigmaPoly g;
    g.coeffs.assign(5, f.zero());
    g.coeffs[4] = f.one();
    g.coeffs[1] = f.minus_one();
    g.coeffs[0] = f.minus_one();
    QuasiCheck qc = quasi_subfield_check(f, g);
    CHECK(qc.splits);
    CHECK(qc.degree_ok);
    CHECK(qc.lambda_degree == 1);
    CHECK(qc.quasi);
    // a non-splitting trinomial fails the divisibility clause
    SigmaPoly bad;
    bad.coeffs.assign(5, f.zero());
    bad.coeffs[4] = f.one();
    bad.coeffs[1] = f.one();
    bad.coeffs[0] = f.theta();
    QuasiCheck qb = quasi_subfield_check(f, bad);
    CHECK_FALSE(qb.splits);
    CHECK(qb.degree_ok);
    CHECK_FALSE(qb.quasi);
    // lambda = x case: x^{q^3} - x over n = 9, both clauses pass
    Field f9(2, 1, 9, 1);
    SigmaPoly sub;
    sub.coeffs.assign(4, f9.zero());
    sub.coeffs[3] = f9.one();
    sub.coeffs[0] = f9.minus_one();
    QuasiCheck qs = quasi_subfield_check(f9, sub);
    CHECK(qs.splits);
    CHECK(qs.degree_ok);
    CHECK(qs.lambda_degree == 0);
    CHECK(qs.quasi);
    // malformed shapes
    SigmaPoly notmonic = make_trinomial(f, f.one(), f.one(), 3);
    Field f3(3, 1, 7, 1);
    SigmaPoly nm3 = make_trinomial(f3, f3.one(), f3.one(), 3);
    CHECK_THROWS_AS(quasi_subfield_check(f3, nm3), Error);
    Field fs(2, 1, 5, 2);
    SigmaPoly anyp;
    anyp.coeffs.assign(3, fs.zero());
    anyp.coeffs[2] = fs.one();
    CHECK_THROWS_AS(quasi_subfield_check(fs, anyp), Error);  // s != 1
}

TEST_CASE("the n = 8 orbit code persists in the degree-16 extension") {
    // same generator kernel viewed inside F_{2^16} via an explicit embedding:
    // map theta (a root of the degree-8 modulus) to a root rho of that modulus
    // in the big field, then re-certify size and distance exhaustively.
    Field small(2, 1, 8, 1);
    Field big(2, 1, 16, 1);
    // find a root of small's modulus inside big
    Element rho;
    bool found = false;
    for (u128 i = 0; i < big.order() && !found; ++i) {
        Element cand = big.from_index(i);
        Element acc = big.zero();
        Element pw = big.one();
        for (digit c : small.modulus()) {
            if (c) acc = big.add(acc, big.scalar_mul(c, pw));
            pw = big.mul(pw, cand);
        }
        if (big.is_zero(acc) && !big.is_zero(cand)) {
            rho = cand;
            found = true;
        }
    }
    REQUIRE(found);
    auto embed = [&](const Element& x) {
        Element acc = big.zero();
        Element pw = big.one();
        for (unsigned i = 0; i < small.m(); ++i) {
            if (x.c[i]) acc = big.add(acc, big.scalar_mul(x.c[i], pw));
            pw = big.mul(pw, rho);
        }
        return acc;
    };
    // a maximum-kernel pair at n = 8 and its embedded trinomial
    Element a = small.one();
    Element b = small.div(small.cube_roots_of_unity()[0],
                          small.mul(small.sigma_apply(a, 6), small.sigma_apply(a, 3)));
    REQUIRE(kernel_dim(small, make_trinomial(small, a, b, 3)) == 3);
    SigmaPoly lifted = make_trinomial(big, embed(a), embed(b), 3);
    REQUIRE(kernel_dim(big, lifted) == 3);
    OrbitCode code = build_orbit_code(big, kernel_subspace(big, lifted));
    CHECK(code.t == 1);
    CHECK(code.size == 65535);
    REQUIRE(code.min_distance.has_value());
    CHECK(*code.min_distance == 4);
    CHECK(code.certified);
}

TEST_CASE("census totals and formula agreement at n = 7 and n = 8") {
    for (unsigned n : {7u, 8u}) {
        Field f(2, 1, n, 1);
        WeightCensus census = weight_census(f, 3);
        u128 expect_total = 1;
        for (int i = 0; i < 3; ++i) expect_total *= f.order();
        CHECK(census.total() == expect_total - 1);
        DCount dc = d_closed_form(f, 3);
        REQUIRE(dc.kind == DCount::Kind::Exact);
        CHECK(census.count_at((int)n - 3) == dc.value);
    }
}
