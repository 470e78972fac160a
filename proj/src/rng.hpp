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

// splitmix64: tiny, seed-stable across platforms. std::mt19937 would also be
// portable, but the standard distributions are not, and reports must be
// byte-identical for a given seed.

#ifndef MAXKERNEL_RNG_HPP
#define MAXKERNEL_RNG_HPP

#include <cstdint>

#include "field.hpp"

namespace mk {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    u128 next_u128() { return ((u128)next() << 64) | next(); }

    // uniform in [0, bound) by rejection
    u128 below(u128 bound) {
        const u128 span = (u128)~(u128)0;
        u128 limit = span - span % bound;
        for (;;) {
            u128 v = next_u128();
            if (v < limit) return v % bound;
        }
    }

    Element element(const Field& f) { return f.from_index(below(f.order())); }

    Element nonzero_element(const Field& f) { return f.from_index(1 + below(f.order() - 1)); }
};

}  // namespace mk

#endif
