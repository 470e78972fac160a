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

// Chunked deterministic work splitting plus a fast kernel-dimension scanner
// for trinomial pair scans. Chunk boundaries depend only on the total, never
// on the worker count, so merged results are byte-stable.

#ifndef MAXKERNEL_SCAN_HPP
#define MAXKERNEL_SCAN_HPP

#include <atomic>
#include <mutex>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include "field.hpp"
#include "fp_linalg.hpp"

namespace mk {

inline u128 chunk_size_for(u128 total) {
    const u128 kTargetChunks = 256;
    u128 chunk = (total + kTargetChunks - 1) / kTargetChunks;
    return chunk == 0 ? 1 : chunk;
}

inline std::size_t chunk_count_for(u128 total) {
    if (total == 0) return 0;
    u128 chunk = chunk_size_for(total);
    return (std::size_t)((total + chunk - 1) / chunk);
}

inline void run_chunked(u128 total, unsigned workers,
                        const std::function<void(std::size_t, u128, u128)>& body) {
    if (total == 0) return;
    u128 chunk = chunk_size_for(total);
    std::size_t nchunks = chunk_count_for(total);
    if (workers <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c) {
            u128 begin = (u128)c * chunk;
            u128 end = begin + chunk < total ? begin + chunk : total;
            body(c, begin, end);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error = nullptr;
    std::mutex err_mutex;
    auto worker = [&]() {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            u128 begin = (u128)c * chunk;
            u128 end = begin + chunk < total ? begin + chunk : total;
            try {
                body(c, begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

inline void ensure_budget(u128 needed, std::uint64_t budget, const char* what) {
    if (needed > (u128)budget)
        fail(Err::BudgetExceeded, std::string(what) + " requires " + u128_to_string(needed) +
                                      " kernel computations, budget is " + std::to_string(budget));
}

/// Kernel dimensions of a x + b x^sigma - x^{sigma^d} over many (a, b) pairs.
/// Holds per-instance scratch; use one scanner per worker.
class TrinomialScanner {
public:
    TrinomialScanner(const Field& f, int d) : f_(f), d_(d), m_((int)f.m()) {
        if (d < 2 || d > (int)f.n() - 1) fail(Err::RangeError, "scanner requires 2 <= d <= n-1");
        sig1_.resize((std::size_t)m_);
        sigd_.resize((std::size_t)m_);
        for (int i = 0; i < m_; ++i) {
            Element theta_i;
            theta_i.c[(std::size_t)i] = 1;
            sig1_[(std::size_t)i] = f.sigma_apply(theta_i, 1);
            sigd_[(std::size_t)i] = f.sigma_apply(theta_i, d);
        }
        acols_.resize((std::size_t)m_);
        mat_.resize((std::size_t)m_ * m_);
    }

    int d() const { return d_; }

    /// Fix the constant coefficient; subsequent kdim_with_b calls reuse it.
    void fix_a(const Element& a) {
        for (int i = 0; i < m_; ++i) {
            Element theta_i;
            theta_i.c[(std::size_t)i] = 1;
            acols_[(std::size_t)i] = f_.sub(f_.mul(a, theta_i), sigd_[(std::size_t)i]);
        }
    }

    int kdim_with_b(const Element& b) {
        const bool bz = f_.is_zero(b);
        for (int i = 0; i < m_; ++i) {
            Element col = bz ? acols_[(std::size_t)i]
                             : f_.add(acols_[(std::size_t)i], f_.mul(b, sig1_[(std::size_t)i]));
            for (int r = 0; r < m_; ++r) mat_[(std::size_t)r * m_ + i] = col.c[(std::size_t)r];
        }
        int rank = row_echelon(mat_, m_, m_, f_.mod_p(), f_.inv_table());
        int nullity = m_ - rank;
        if (nullity % (int)f_.h() != 0) fail(Err::Internal, "nullity not divisible by h");
        return nullity / (int)f_.h();
    }

    int kdim(const Element& a, const Element& b) {
        fix_a(a);
        return kdim_with_b(b);
    }

private:
    const Field& f_;
    int d_, m_;
    std::vector<Element> sig1_, sigd_, acols_;
    std::vector<digit> mat_;
};

}  // namespace mk

#endif
