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

// Applications: minimum-weight censuses of the span of {x, x^sigma, x^{sigma^d}},
// quasi-subfield verification, and cyclic subspace codes built from kernels.

#ifndef MAXKERNEL_CODES_HPP
#define MAXKERNEL_CODES_HPP

#include <map>
#include <optional>
#include <vector>

#include "field.hpp"
#include "linpoly.hpp"

namespace mk {

/// An F_q-subspace of F_{q^n}. Stores an echelonized F_p-basis (size h*k) plus
/// an F_q-basis (size k); closure under F_q-scaling is a construction-time
/// certificate.
class Subspace {
public:
    /// F_q-span of arbitrary generators.
    static Subspace from_generators(const Field& f, const std::vector<Element>& gens);
    /// Validates that the F_p-span of the given vectors is already F_q-closed;
    /// Err::NotSubspace otherwise.
    static Subspace from_fp_basis_checked(const Field& f, const std::vector<Element>& fp_basis);

    int dim() const { return k_; }                                   // F_q-dimension
    const std::vector<Element>& fq_basis() const { return fq_basis_; }
    const std::vector<Element>& fp_echelon() const { return fp_echelon_; }
    bool contains(const Field& f, const Element& x) const;
    /// All p^{hk} members, enumerated deterministically. Test-scale only.
    std::vector<Element> enumerate(const Field& f) const;

    /// Same space: the reduced echelon bases coincide.
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.k_ == b.k_ && a.fp_echelon_ == b.fp_echelon_;
    }

private:
    int k_ = 0;
    std::vector<Element> fq_basis_;
    std::vector<Element> fp_echelon_;
};

/// The kernel of g as a subspace (g must be F_q-linear, which it is).
Subspace kernel_subspace(const Field& f, const SigmaPoly& g);

/// The monic q-polynomial of q-degree dim V vanishing exactly on V, built by
/// P_{V+<u>} = P_V^q - P_V(u)^{q-1} P_V. Requires s = 1 (Err::SigmaMismatch).
SigmaPoly subspace_polynomial(const Field& f, const Subspace& v);

struct GapInfo {
    int gap = 0;
    bool all_lower_zero = false;  // flagged convention: gap = k when only the top term exists
};

/// gap = k - i where i is the largest index below k with nonzero coefficient.
/// Requires a monic input of sigma-degree k >= 1.
GapInfo gap(const Field& f, const SigmaPoly& g);

/// alpha V = {alpha v}; Err::DivisionByZero when alpha = 0.
Subspace cyclic_shift(const Field& f, const Subspace& v, const Element& alpha);

/// dim U + dim V - 2 dim(U and V), computed over F_p and divided by h.
int subspace_distance(const Field& f, const Subspace& u, const Subspace& v);

struct OrbitCode {
    Subspace generator;
    u128 size = 0;      // (q^n-1)/(q^t-1)
    unsigned t = 1;     // stabilizer subfield F_{q^t}
    std::optional<int> min_distance;
    bool certified = false;
};

struct OrbitOptions {
    bool certify = true;
    std::uint64_t budget = 1ull << 26;
    unsigned workers = 1;
};

/// Orbit {alpha V} with exact size (stabilizer = largest subfield F_{q^t} with
/// F_{q^t} V = V) and, when certify is set, the minimum distance by exhaustive
/// one-vs-all comparison (distance is shift-invariant, so V against every
/// distinct shift covers all pairs).
OrbitCode build_orbit_code(const Field& f, const Subspace& v, const OrbitOptions& opts = {});

struct WeightCensus {
    int d = 0;
    int n = 0;
    std::map<int, u128> counts;  // weight -> number of codewords
    u128 total() const;
    u128 count_at(int w) const;
};

struct CensusOptions {
    std::uint64_t budget = 1ull << 26;
    unsigned workers = 1;
};

/// Weight distribution of the span of {x, x^sigma, x^{sigma^d}}: the leading
/// stratum is scanned over monic-negated representatives (each counted q^n - 1
/// times), the degenerate c_d = 0 stratum directly.
WeightCensus weight_census(const Field& f, int d, const CensusOptions& opts = {});

struct DCount {
    enum class Kind { Exact, LowerBound, Unknown } kind = Kind::Unknown;
    u128 value = 0;
};

/// Number of minimum-weight (n-d) codewords in closed form where one is known;
/// a lower bound at n = d^2-1 (q even, d a power of 2, d > 4); Unknown elsewhere.
DCount d_closed_form(const Field& f, int d);

struct QuasiCheck {
    bool splits = false;      // kernel dimension equals d, i.e. divides x^{q^n} - x
    bool degree_ok = false;   // log_q(deg lambda) < d^2 / n
    int lambda_degree = -1;   // q-degree of lambda, -1 when lambda = 0
    bool quasi = false;       // both clauses
};

/// For monic g = x^{q^d} - lambda(x) with deg_q(lambda) < d: per-clause flags.
/// Requires s = 1; Err::MalformedShape on other shapes.
QuasiCheck quasi_subfield_check(const Field& f, const SigmaPoly& g);

}  // namespace mk

#endif
