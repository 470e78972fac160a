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

#ifndef MAXKERNEL_LINPOLY_HPP
#define MAXKERNEL_LINPOLY_HPP

#include <map>
#include <vector>

#include "field.hpp"

namespace mk {

/// A sigma-linearized polynomial sum_i coeffs[i] x^{sigma^i}. The sigma-degree
/// is the largest index with nonzero coefficient. Indices at or above n act as
/// i mod n (sigma^n = id), which only matters for the degenerate d = n cases.
struct SigmaPoly {
    std::vector<Element> coeffs;
};

bool is_zero(const Field& f, const SigmaPoly& g);
int sigma_degree(const Field& f, const SigmaPoly& g);  // Err::ZeroPolynomial on 0

/// a x + b x^sigma - x^{sigma^d}
SigmaPoly make_trinomial(const Field& f, const Element& a, const Element& b, int d);

Element evaluate(const Field& f, const SigmaPoly& g, const Element& x);

/// dim over F_q of the root space, via the m x m matrix of the induced
/// F_p-linear map. The F_p-nullity is checked to be divisible by h.
int kernel_dim(const Field& f, const SigmaPoly& g);
/// F_p-basis of the root space (size h * kernel_dim).
std::vector<Element> kernel_basis(const Field& f, const SigmaPoly& g);
int weight(const Field& f, const SigmaPoly& g);  // n - kernel_dim

/// Necessary condition for kernel dimension = sigma-degree:
/// N(a_0) = (-1)^{nk} N(a_k) in F_q.
bool gow_norm_condition(const Field& f, const SigmaPoly& g);

bool is_monic_negated(const Field& f, const SigmaPoly& g);
/// Divide by -a_k. Callers apply this explicitly; criterion operations below
/// require the normalized shape and never rescale silently.
SigmaPoly normalize_monic_negated(const Field& f, const SigmaPoly& g);

struct MatrixExt {
    int rows = 0, cols = 0;
    std::vector<Element> e;

    MatrixExt() = default;
    MatrixExt(int r, int c) : rows(r), cols(c), e((std::size_t)r * c) {}
    Element& at(int r, int c) { return e[(std::size_t)r * cols + c]; }
    const Element& at(int r, int c) const { return e[(std::size_t)r * cols + c]; }
    friend bool operator==(const MatrixExt&, const MatrixExt&) = default;
};

MatrixExt identity_matrix(const Field& f, int k);

/// The k x k companion matrix of a_0 x + ... + a_{k-1} x^{sigma^{k-1}} - x^{sigma^k}:
/// subdiagonal ones, last column (a_0, ..., a_{k-1})^T.
/// Err::NotMonicNegated unless the leading coefficient is exactly -1.
MatrixExt companion_matrix(const Field& f, const SigmaPoly& g);

/// C C^sigma ... C^{sigma^{n-1}}, the superscript acting entrywise.
MatrixExt companion_product(const Field& f, const SigmaPoly& g);

/// Matrix criterion: the full twisted product equals I_k.
bool has_max_kernel_companion(const Field& f, const SigmaPoly& g);
/// Vector criterion: the product fixes e_0 = (1, 0, ..., 0)^T; n sweeps of
/// k-vectors instead of n products of k x k matrices.
bool has_max_kernel_vector(const Field& f, const SigmaPoly& g);

/// Entries M_{l,k} of the twisted companion powers of the trinomial
/// a x + b x^sigma - x^{sigma^d}: M_{l,l-d} = 1, M_{l,k} = 0 for other k <= 0,
/// and M_{l,k} = M_{l,k-d} a^{sigma^{k-1}} + M_{l,k-d+1} b^{sigma^{k-1}}.
/// Memoized per instance; not shareable across threads.
class MEntryTable {
public:
    MEntryTable(const Field& f, const Element& a, const Element& b, int d);
    /// Err::IndexOutOfRange unless 1 <= l <= d.
    const Element& at(int l, int k);
    int d() const { return d_; }

private:
    const Field& f_;
    Element a_, b_;
    int d_;
    std::map<std::pair<int, int>, Element> memo_;
};

Element m_entry(const Field& f, const Element& a, const Element& b, int d, int l, int k);

/// Coefficients c^k_{j,t} of the expansion M_{l,k} = sum_t c^k_{j,t} M_{l,k-jd+t},
/// computed by iterating the defining recursion j times (the reference path).
/// Returns the row (c^k_{j,0}, ..., c^k_{j,j}).
std::vector<Element> c_row_recursive(const Field& f, const Element& a, const Element& b, int d,
                                     int j, int k);

/// The closed multi-product form of c^k_{j,t}; validated against c_row_recursive.
Element c_coeff_closed(const Field& f, const Element& a, const Element& b, int d, int j, int t,
                       int k);

/// z-table under the commutation hypothesis a^{sigma^d} b = a^sigma b^{sigma^d};
/// then c^k_{j,i} = binom(j,i) z^k_{j,i}. Err::HypothesisViolated up-front.
class ZTable {
public:
    ZTable(const Field& f, const Element& a, const Element& b, int d, int k);
    Element z(int j, int i);
    /// Middle-case alternative update path z_{j-1,i-1} b^{...}; must agree with z().
    Element z_via_b(int j, int i);

private:
    const Field& f_;
    Element a_, b_;
    int d_, k_;
    std::map<std::pair<int, int>, Element> memo_;
};

Element z_recursion(const Field& f, const Element& a, const Element& b, int d, int j, int i, int k);

/// Binomial coefficient mod p by Lucas digit products.
std::uint64_t binom_mod_p(std::uint64_t j, std::uint64_t i, std::uint64_t p);

}  // namespace mk

#endif
