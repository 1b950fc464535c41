// Shared helpers for the test suite: a tiny deterministic RNG and random
// word/tuple generators (kept independent of the library's enumeration
// machinery on purpose).
#pragma once

#include "deltacup/words.hpp"

#include <cstdint>
#include <vector>

namespace testutil {

struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline deltacup::Word random_reduced_word(Rng& rng, const deltacup::GroupCtx& ctx, int len) {
    deltacup::Word w;
    while (w.length() < len) {
        int gen = static_cast<int>(rng.below(static_cast<std::uint64_t>(ctx.rank))) + 1;
        int sign = rng.below(2) == 0 ? 1 : -1;
        deltacup::Letter l = deltacup::make_letter(gen, sign);
        if (!w.letters.empty() && l == w.letters.back().inverse()) continue;
        w.letters.push_back(l);
    }
    return w;
}

inline deltacup::AlignedTuple random_aligned_tuple(Rng& rng, const deltacup::GroupCtx& ctx,
                                                  int degree, int max_entry_len) {
    deltacup::AlignedTuple t;
    for (int i = 0; i < degree; ++i) {
        int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_entry_len))) + 1;
        deltacup::Word w;
        while (w.length() < len) {
            int gen = static_cast<int>(rng.below(static_cast<std::uint64_t>(ctx.rank))) + 1;
            int sign = rng.below(2) == 0 ? 1 : -1;
            deltacup::Letter l = deltacup::make_letter(gen, sign);
            if (!w.letters.empty() && l == w.letters.back().inverse()) continue;
            if (w.letters.empty() && !t.entries.empty() &&
                l == t.entries.back().letters.back().inverse())
                continue;
            w.letters.push_back(l);
        }
        t.entries.push_back(w);
    }
    return t;
}

} // namespace testutil
