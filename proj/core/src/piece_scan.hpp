// Internal span-based decomposition scanners. Each scanner invokes
// emit(start, end) for consecutive piece boundaries of word[0..n); shared by
// the public decompose(), the quasimorphism evaluators and the pair-scan
// engine so the hot paths never materialize piece vectors.
#pragma once

#include "deltacup/decomp.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace deltacup::detail {

using LetterSpan = std::span<const Letter>;

template <class Emit>
void scan_letters(LetterSpan word, Emit&& emit) {
    for (std::size_t i = 0; i < word.size(); ++i) emit(i, i + 1);
}

template <class Emit>
void scan_rolli(LetterSpan word, Emit&& emit) {
    std::size_t start = 0;
    for (std::size_t i = 1; i <= word.size(); ++i) {
        if (i == word.size() || word[i].code != word[start].code) {
            emit(start, i);
            start = i;
        }
    }
}

inline bool span_matches_at(LetterSpan word, std::size_t pos, const std::vector<Letter>& pattern) {
    if (pos + pattern.size() > word.size()) return false;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (word[pos + i] != pattern[i]) return false;
    return true;
}

template <class Emit>
void scan_brooks(const Word& w, const Word& winv, LetterSpan word, Emit&& emit) {
    const std::size_t wn = w.letters.size();
    std::size_t gap_start = 0;
    std::size_t pos = 0;
    while (pos + wn <= word.size()) {
        if (span_matches_at(word, pos, w.letters) || span_matches_at(word, pos, winv.letters)) {
            if (gap_start < pos) emit(gap_start, pos);
            emit(pos, pos + wn);
            pos += wn;
            gap_start = pos;
        } else {
            ++pos;
        }
    }
    if (gap_start < word.size()) emit(gap_start, word.size());
}

// One maximal s(ms)^n run candidate; dir says whether it matches (s,m) or
// their inverses.
struct SmsRun {
    std::size_t start = 0;
    std::size_t end = 0;
};

// Longest s(ms)^n extent starting at pos, or pos if s does not match there.
inline std::size_t sms_run_extent(LetterSpan word, std::size_t pos, const std::vector<Letter>& s,
                                  const std::vector<Letter>& m) {
    if (!span_matches_at(word, pos, s)) return pos;
    std::size_t end = pos + s.size();
    while (span_matches_at(word, end, m) && span_matches_at(word, end + m.size(), s))
        end += m.size() + s.size();
    return end;
}

// Collects the selected (maximal, left-greedy) runs of the sms scheme in
// word order. Maximal run candidates may overlap for unsound schemes; the
// left-greedy choice keeps the parse deterministic and the axiom checkers
// report any resulting violations.
inline void sms_select_runs(LetterSpan word, const Word& s, const Word& m, const Word& sinv,
                            const Word& minv, std::vector<SmsRun>& out) {
    out.clear();
    std::vector<SmsRun> candidates;
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        std::size_t end = sms_run_extent(word, pos, s.letters, m.letters);
        if (end == pos) end = sms_run_extent(word, pos, sinv.letters, minv.letters);
        if (end > pos) candidates.push_back({pos, end});
    }
    // Keep only maximal factors (not strictly contained in another candidate).
    std::size_t chosen_end = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < candidates.size(); ++j) {
            if (j == i) continue;
            if (candidates[j].start <= candidates[i].start && candidates[j].end >= candidates[i].end)
                contained = true;
        }
        if (contained) continue;
        if (candidates[i].start < chosen_end) continue; // left-greedy conflict skip
        out.push_back(candidates[i]);
        chosen_end = candidates[i].end;
    }
}

template <class Emit>
void scan_sms(const Word& s, const Word& m, const Word& sinv, const Word& minv, LetterSpan word,
              Emit&& emit) {
    std::vector<SmsRun> runs;
    sms_select_runs(word, s, m, sinv, minv, runs);
    std::size_t gap_start = 0;
    for (const SmsRun& run : runs) {
        if (gap_start < run.start) emit(gap_start, run.start);
        // Alternating s,m pieces across the run.
        std::size_t pos = run.start;
        bool at_s = true;
        while (pos < run.end) {
            std::size_t len = at_s ? s.letters.size() : m.letters.size();
            emit(pos, pos + len);
            pos += len;
            at_s = !at_s;
        }
        gap_start = run.end;
    }
    if (gap_start < word.size()) emit(gap_start, word.size());
}

// Dispatch by scheme kind; SchemeView caches the inverses so repeated hot
// calls avoid re-inverting.
struct SchemeView {
    const Scheme& scheme;
    Word winv, sinv, minv;

    explicit SchemeView(const Scheme& scheme_) : scheme(scheme_) {
        if (scheme.kind == Scheme::Kind::brooks) winv = invert(scheme.w);
        if (scheme.kind == Scheme::Kind::sms) {
            sinv = invert(scheme.s);
            minv = invert(scheme.m);
        }
    }

    template <class Emit>
    void scan(LetterSpan word, Emit&& emit) const {
        switch (scheme.kind) {
        case Scheme::Kind::brooks:
            scan_brooks(scheme.w, winv, word, emit);
            break;
        case Scheme::Kind::rolli:
            scan_rolli(word, emit);
            break;
        case Scheme::Kind::sms:
            scan_sms(scheme.s, scheme.m, sinv, minv, word, emit);
            break;
        case Scheme::Kind::letters:
            scan_letters(word, emit);
            break;
        }
    }
};

} // namespace deltacup::detail
