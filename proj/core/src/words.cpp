#include "deltacup/words.hpp"

#include <algorithm>

namespace deltacup {

bool is_reduced(const Word& g) {
    for (std::size_t i = 1; i < g.letters.size(); ++i)
        if (g.letters[i] == g.letters[i - 1].inverse()) return false;
    return true;
}

Word reduce(const std::vector<Letter>& letters) {
    Word out;
    out.letters.reserve(letters.size());
    for (Letter l : letters) {
        if (!out.letters.empty() && out.letters.back() == l.inverse())
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

Word parse_word(std::string_view text, const GroupCtx& ctx, bool strict) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        int gen, sign;
        if (c >= 'a' && c <= 'z') {
            gen = c - 'a' + 1;
            sign = +1;
        } else if (c >= 'A' && c <= 'Z') {
            gen = c - 'A' + 1;
            sign = -1;
        } else {
            throw std::invalid_argument(std::string("parse_word: invalid character '") + c + "'");
        }
        if (gen > ctx.rank)
            throw std::invalid_argument(std::string("parse_word: letter '") + c +
                                        "' outside rank " + std::to_string(ctx.rank));
        letters.push_back(make_letter(gen, sign));
    }
    Word w = reduce(letters);
    if (strict && w.letters.size() != letters.size())
        throw std::invalid_argument("parse_word: input is not reduced (strict mode)");
    return w;
}

std::string to_string(const Word& g) {
    std::string out;
    out.reserve(g.letters.size());
    for (Letter l : g.letters)
        out.push_back(static_cast<char>((l.sign() > 0 ? 'a' : 'A') + l.gen() - 1));
    return out;
}

Word multiply(const Word& g, const Word& h) {
    std::size_t cancel = 0;
    while (cancel < g.letters.size() && cancel < h.letters.size() &&
           h.letters[cancel] == g.letters[g.letters.size() - 1 - cancel].inverse())
        ++cancel;
    Word out;
    out.letters.reserve(g.letters.size() + h.letters.size() - 2 * cancel);
    out.letters.assign(g.letters.begin(), g.letters.end() - cancel);
    out.letters.insert(out.letters.end(), h.letters.begin() + cancel, h.letters.end());
    return out;
}

Word invert(const Word& g) {
    Word out;
    out.letters.reserve(g.letters.size());
    for (auto it = g.letters.rbegin(); it != g.letters.rend(); ++it)
        out.letters.push_back(it->inverse());
    return out;
}

bool is_reduced_concat(const Word& g, const Word& h) {
    if (g.is_identity() || h.is_identity()) return true;
    return h.letters.front() != g.letters.back().inverse();
}

namespace {

bool matches_at(const Word& pattern, const Word& text, std::size_t pos) {
    for (std::size_t i = 0; i < pattern.letters.size(); ++i)
        if (text.letters[pos + i] != pattern.letters[i]) return false;
    return true;
}

long long count_starts(const Word& pattern, const Word& text) {
    if (pattern.letters.size() > text.letters.size()) return 0;
    long long count = 0;
    for (std::size_t pos = 0; pos + pattern.letters.size() <= text.letters.size(); ++pos)
        if (matches_at(pattern, text, pos)) ++count;
    return count;
}

long long count_greedy_disjoint(const Word& pattern, const Word& text) {
    if (pattern.letters.size() > text.letters.size()) return 0;
    long long count = 0;
    std::size_t pos = 0;
    while (pos + pattern.letters.size() <= text.letters.size()) {
        if (matches_at(pattern, text, pos)) {
            ++count;
            pos += pattern.letters.size();
        } else {
            ++pos;
        }
    }
    return count;
}

} // namespace

long long count_occurrences(const Word& w, const Word& g, OccMode mode) {
    if (w.is_identity())
        throw std::invalid_argument("count_occurrences: pattern must be non-identity");
    Word winv = invert(w);
    if (mode == OccMode::big)
        return count_starts(w, g) - count_starts(winv, g);
    return count_greedy_disjoint(w, g) - count_greedy_disjoint(winv, g);
}

std::vector<int> border_table(const Word& w) {
    std::vector<int> border(w.letters.size(), 0);
    for (std::size_t i = 1; i < w.letters.size(); ++i) {
        int k = border[i - 1];
        while (k > 0 && w.letters[i] != w.letters[k])
            k = border[k - 1];
        if (w.letters[i] == w.letters[k]) ++k;
        border[i] = k;
    }
    return border;
}

std::optional<SmsSplit> max_sms_split(const Word& w) {
    if (w.is_identity())
        throw std::invalid_argument("max_sms_split: word must be non-identity");
    int n = w.length();
    std::vector<int> border = border_table(w);
    // Every border of w sits on the failure chain from the longest one.
    int b = border[n - 1];
    while (b > 0 && 2 * b > n)
        b = border[b - 1];
    if (b == 0) return std::nullopt;
    SmsSplit split;
    split.s.letters.assign(w.letters.begin(), w.letters.begin() + b);
    split.m.letters.assign(w.letters.begin() + b, w.letters.end() - b);
    return split;
}

int AlignedTuple::total_length() const {
    int total = 0;
    for (const Word& g : entries) total += g.length();
    return total;
}

bool is_aligned(const AlignedTuple& t) {
    for (const Word& g : t.entries)
        if (g.is_identity() || !is_reduced(g)) return false;
    for (std::size_t i = 1; i < t.entries.size(); ++i)
        if (!is_reduced_concat(t.entries[i - 1], t.entries[i])) return false;
    return true;
}

std::vector<Word> enumerate_reduced(const GroupCtx& ctx, int max_len) {
    std::vector<Word> out;
    for_each_reduced(ctx, max_len, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::vector<AlignedTuple> enumerate_aligned(const GroupCtx& ctx, int degree, int max_total_len) {
    std::vector<AlignedTuple> out;
    for_each_aligned(ctx, degree, max_total_len, [&](const AlignedTuple& t) { out.push_back(t); });
    return out;
}

} // namespace deltacup
