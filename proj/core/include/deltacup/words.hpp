// Free-group core: letters, reduced words, group arithmetic, occurrence
// counting, selfoverlap splitting, and enumerators of reduced words and
// aligned tuples.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace deltacup {

// Number of free generators. Fixed for the lifetime of every word and tuple
// derived from it; letters are validated against it on parse.
struct GroupCtx {
    int rank;

    explicit GroupCtx(int rank_) : rank(rank_) {
        if (rank < 1 || rank > 26)
            throw std::invalid_argument("GroupCtx: rank must be in 1..26");
    }
};

// A generator or its inverse, packed as a signed index: +i is generator i,
// -i its inverse (i in 1..26). Code 0 is reserved/invalid.
struct Letter {
    std::int8_t code = 0;

    int gen() const { return code < 0 ? -code : code; }
    int sign() const { return code < 0 ? -1 : 1; }
    Letter inverse() const { return Letter{static_cast<std::int8_t>(-code)}; }

    // Canonical order: a < a^-1 < b < b^-1 < ... (generator-major, positive
    // before inverse). Enumeration and lexicographic comparisons use this.
    int ordinal() const { return 2 * (gen() - 1) + (code < 0 ? 1 : 0); }

    friend bool operator==(Letter x, Letter y) { return x.code == y.code; }
    friend bool operator!=(Letter x, Letter y) { return x.code != y.code; }
};

inline Letter make_letter(int gen, int sign) {
    return Letter{static_cast<std::int8_t>(sign < 0 ? -gen : gen)};
}

// A reduced word over the symmetric generating set; empty = identity. All
// library functions produce reduced words; `letters` is left public for
// cheap iteration, callers must keep it reduced.
struct Word {
    std::vector<Letter> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool is_identity() const { return letters.empty(); }

    friend bool operator==(const Word& g, const Word& h) { return g.letters == h.letters; }
    friend bool operator!=(const Word& g, const Word& h) { return !(g == h); }
};

bool is_reduced(const Word& g);

// Frees the letter sequence of adjacent inverse pairs (single stack pass).
Word reduce(const std::vector<Letter>& letters);

// Grammar: lowercase a..z are generators 1..26, uppercase their inverses.
// Reduces by default; strict mode rejects non-reduced input instead.
Word parse_word(std::string_view text, const GroupCtx& ctx, bool strict = false);
std::string to_string(const Word& g);

Word multiply(const Word& g, const Word& h);
Word invert(const Word& g);

// True iff the concatenation g.h is already reduced (no junction
// cancellation). Vacuously true when either word is the identity.
bool is_reduced_concat(const Word& g, const Word& h);

enum class OccMode { big, small };

// Signed factor count of w in g: occurrences of w minus occurrences of
// w^-1, where `big` counts every start position (overlaps allowed) and
// `small` counts greedy left-to-right disjoint occurrences.
long long count_occurrences(const Word& w, const Word& g, OccMode mode);

// Border (failure-function) table over the signed-letter alphabet:
// border[i] = length of the longest proper border of the length-(i+1) prefix.
std::vector<int> border_table(const Word& w);

struct SmsSplit {
    Word s;
    Word m; // may be identity when the borders touch exactly
};

// Longest non-identity border s with 2|s| <= |w|, giving the letter-level
// factorization w = s.m.s; nullopt iff w is non-selfoverlapping.
std::optional<SmsSplit> max_sms_split(const Word& w);

// A tuple of non-identity words whose consecutive junctions are reduced.
struct AlignedTuple {
    std::vector<Word> entries;

    int degree() const { return static_cast<int>(entries.size()); }
    int total_length() const;
};

bool is_aligned(const AlignedTuple& t);

// All reduced words of length <= max_len, each exactly once, in
// length-lexicographic order (letter order per Letter::ordinal).
std::vector<Word> enumerate_reduced(const GroupCtx& ctx, int max_len);

// All aligned tuples of the given degree with total length <= max_total_len,
// each exactly once; entry-wise recursive order, first entry major.
std::vector<AlignedTuple> enumerate_aligned(const GroupCtx& ctx, int degree, int max_total_len);

namespace detail {

// Appends every reduced word of length exactly `len` that extends `w`
// (without touching its existing letters) to the callback, in canonical
// letter order. `w` is used as scratch and restored before returning.
template <class F>
void extend_reduced(const GroupCtx& ctx, Word& w, int len, F&& f) {
    if (len == 0) {
        f(const_cast<const Word&>(w));
        return;
    }
    Letter last{0};
    if (!w.letters.empty()) last = w.letters.back();
    for (int gen = 1; gen <= ctx.rank; ++gen) {
        for (int sign : {+1, -1}) {
            Letter l = make_letter(gen, sign);
            if (last.code != 0 && l == last.inverse()) continue;
            w.letters.push_back(l);
            extend_reduced(ctx, w, len - 1, f);
            w.letters.pop_back();
        }
    }
}

} // namespace detail

// Streaming form of enumerate_reduced; f(const Word&) is invoked in the
// same canonical order.
template <class F>
void for_each_reduced(const GroupCtx& ctx, int max_len, F&& f) {
    Word scratch;
    for (int len = 0; len <= max_len; ++len)
        detail::extend_reduced(ctx, scratch, len, f);
}

namespace detail {

template <class F>
void extend_aligned(const GroupCtx& ctx, AlignedTuple& t, int remaining_entries, int budget, F&& f) {
    if (remaining_entries == 0) {
        f(const_cast<const AlignedTuple&>(t));
        return;
    }
    // Each remaining entry needs at least one letter.
    int max_here = budget - (remaining_entries - 1);
    Word scratch;
    if (!t.entries.empty()) {
        // Seed the junction constraint: extend_reduced never cancels into
        // the scratch prefix, so start from the previous entry's last letter.
        scratch.letters.push_back(t.entries.back().letters.back());
    }
    int prefix = scratch.length();
    for (int len = 1; len <= max_here; ++len) {
        extend_reduced(ctx, scratch, len, [&](const Word& sw) {
            Word entry;
            entry.letters.assign(sw.letters.begin() + prefix, sw.letters.end());
            t.entries.push_back(std::move(entry));
            extend_aligned(ctx, t, remaining_entries - 1, budget - len, f);
            t.entries.pop_back();
        });
    }
}

} // namespace detail

// Streaming form of enumerate_aligned.
template <class F>
void for_each_aligned(const GroupCtx& ctx, int degree, int max_total_len, F&& f) {
    if (degree < 1) throw std::invalid_argument("for_each_aligned: degree must be >= 1");
    AlignedTuple t;
    detail::extend_aligned(ctx, t, degree, max_total_len, f);
}

} // namespace deltacup
