#include "deltacup/words.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

using namespace deltacup;

namespace {

const GroupCtx rank2{2};

Word W(const std::string& text) { return parse_word(text, rank2); }

// Independent occurrence oracles working on the printed string form.
long long oracle_count_big(const std::string& w, const std::string& g) {
    long long count = 0;
    for (std::size_t pos = 0; pos + w.size() <= g.size(); ++pos)
        if (g.compare(pos, w.size(), w) == 0) ++count;
    return count;
}

long long oracle_count_small(const std::string& w, const std::string& g) {
    long long count = 0;
    std::size_t pos = 0;
    while (pos + w.size() <= g.size()) {
        if (g.compare(pos, w.size(), w) == 0) {
            ++count;
            pos += w.size();
        } else {
            ++pos;
        }
    }
    return count;
}

std::string str_inverse(const std::string& w) {
    std::string out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        char c = *it;
        out.push_back(c >= 'a' ? static_cast<char>(c - 'a' + 'A') : static_cast<char>(c - 'A' + 'a'));
    }
    return out;
}

} // namespace

TEST_CASE("parse_word reduces and validates") {
    CHECK(W("") == Word{});
    CHECK(to_string(W("abB")) == "a");
    CHECK(to_string(W("aBAb")) == "aBAb");
    CHECK(to_string(W("aA")) == "");
    CHECK_THROWS_AS(parse_word("ac", rank2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("a b", rank2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("abB", rank2, /*strict=*/true), std::invalid_argument);
    CHECK(to_string(parse_word("aBAb", rank2, /*strict=*/true)) == "aBAb");
}

TEST_CASE("round-trip parse(to_string) over all short words") {
    for (const Word& g : enumerate_reduced(rank2, 5)) {
        CHECK(parse_word(to_string(g), rank2) == g);
        CHECK(is_reduced(g));
    }
}

TEST_CASE("multiply: cancellation, identity, inverse") {
    CHECK(to_string(multiply(W("ab"), W("Ba"))) == "aa");
    CHECK(multiply(W("a"), Word{}) == W("a"));
    CHECK(multiply(W("aba"), W("ABA")) == Word{});
}

TEST_CASE("multiply is associative, invert is an involution (random)") {
    testutil::Rng rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        Word g = testutil::random_reduced_word(rng, rank2, static_cast<int>(rng.below(9)));
        Word h = testutil::random_reduced_word(rng, rank2, static_cast<int>(rng.below(9)));
        Word k = testutil::random_reduced_word(rng, rank2, static_cast<int>(rng.below(9)));
        CHECK(multiply(multiply(g, h), k) == multiply(g, multiply(h, k)));
        CHECK(multiply(g, invert(g)) == Word{});
        CHECK(invert(invert(g)) == g);
    }
    CHECK(to_string(invert(W("ab"))) == "BA");
    CHECK(invert(Word{}) == Word{});
}

TEST_CASE("is_reduced_concat") {
    CHECK(is_reduced_concat(W("a"), W("a")));
    CHECK_FALSE(is_reduced_concat(W("a"), W("A")));
    CHECK_FALSE(is_reduced_concat(W("ab"), W("Ba")));
    CHECK(is_reduced_concat(Word{}, W("a")));
    CHECK(is_reduced_concat(W("a"), Word{}));
}

TEST_CASE("count_occurrences: pinned examples") {
    CHECK(count_occurrences(W("aba"), W("ababa"), OccMode::big) == 2);
    CHECK(count_occurrences(W("aba"), W("ababa"), OccMode::small) == 1);
    CHECK(count_occurrences(W("ab"), W("BA"), OccMode::big) == -1);
    CHECK_THROWS_AS(count_occurrences(Word{}, W("a"), OccMode::big), std::invalid_argument);
}

TEST_CASE("count_occurrences matches string oracle on random words") {
    testutil::Rng rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        Word w = testutil::random_reduced_word(rng, rank2, 1 + static_cast<int>(rng.below(4)));
        Word g = testutil::random_reduced_word(rng, rank2, static_cast<int>(rng.below(13)));
        std::string ws = to_string(w), gs = to_string(g), wis = str_inverse(ws);
        CHECK(count_occurrences(w, g, OccMode::big) == oracle_count_big(ws, gs) - oracle_count_big(wis, gs));
        CHECK(count_occurrences(w, g, OccMode::small) ==
              oracle_count_small(ws, gs) - oracle_count_small(wis, gs));
    }
}

TEST_CASE("count_occurrences antisymmetry under inversion") {
    testutil::Rng rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        Word w = testutil::random_reduced_word(rng, rank2, 1 + static_cast<int>(rng.below(4)));
        Word g = testutil::random_reduced_word(rng, rank2, static_cast<int>(rng.below(12)));
        for (OccMode mode : {OccMode::big, OccMode::small})
            CHECK(count_occurrences(w, g, mode) == -count_occurrences(w, invert(g), mode));
    }
}

TEST_CASE("max_sms_split: pinned examples") {
    auto split_aba = max_sms_split(W("aba"));
    REQUIRE(split_aba.has_value());
    CHECK(to_string(split_aba->s) == "a");
    CHECK(to_string(split_aba->m) == "b");

    CHECK_FALSE(max_sms_split(W("ab")).has_value());

    auto split_abba = max_sms_split(W("abba"));
    REQUIRE(split_abba.has_value());
    CHECK(to_string(split_abba->s) == "a");
    CHECK(to_string(split_abba->m) == "bb");

    // Borders touching exactly: m may be identity.
    auto split_abab = max_sms_split(W("abab"));
    REQUIRE(split_abab.has_value());
    CHECK(to_string(split_abab->s) == "ab");
    CHECK(split_abab->m.is_identity());
}

TEST_CASE("max_sms_split against brute-force border oracle, |w| <= 10") {
    // Exhaustive up to length 6, random sample beyond.
    auto check_word = [](const Word& w) {
        int n = w.length();
        int best = 0;
        for (int b = n / 2; b >= 1; --b) {
            bool is_border = std::equal(w.letters.begin(), w.letters.begin() + b,
                                        w.letters.end() - b);
            if (is_border) {
                best = b;
                break;
            }
        }
        auto split = max_sms_split(w);
        if (best == 0) {
            CHECK_FALSE(split.has_value());
        } else {
            REQUIRE(split.has_value());
            CHECK(split->s.length() == best);
            // Letter-exact recombination without cancellation.
            Word recombined = multiply(multiply(split->s, split->m), split->s);
            CHECK(recombined == w);
            CHECK(split->s.length() + split->m.length() + split->s.length() == w.length());
        }
    };
    for (const Word& w : enumerate_reduced(rank2, 6))
        if (!w.is_identity()) check_word(w);
    testutil::Rng rng(13);
    for (int trial = 0; trial < 2000; ++trial)
        check_word(testutil::random_reduced_word(rng, rank2, 7 + static_cast<int>(rng.below(4))));
}

TEST_CASE("enumerate_reduced: counts and canonical order") {
    CHECK(enumerate_reduced(rank2, 0).size() == 1);
    CHECK(enumerate_reduced(rank2, 1).size() == 5);
    CHECK(enumerate_reduced(rank2, 2).size() == 17);

    // Rank-2 count at exact length l is 4 * 3^(l-1).
    long long expected = 1;
    for (int l = 1; l <= 6; ++l) {
        expected += 4 * static_cast<long long>(std::pow(3, l - 1) + 0.5);
        CHECK(static_cast<long long>(enumerate_reduced(rank2, l).size()) == expected);
    }

    auto words = enumerate_reduced(rank2, 3);
    // Canonical letter order is a < A < b < B; length-lexicographic overall.
    CHECK(to_string(words[0]) == "");
    CHECK(to_string(words[1]) == "a");
    CHECK(to_string(words[2]) == "A");
    CHECK(to_string(words[3]) == "b");
    CHECK(to_string(words[4]) == "B");
    CHECK(to_string(words[5]) == "aa");
    for (std::size_t i = 1; i < words.size(); ++i)
        CHECK(words[i - 1].length() <= words[i].length());
    // No duplicates.
    std::set<std::string> seen;
    for (const Word& w : words) seen.insert(to_string(w));
    CHECK(seen.size() == words.size());
}

TEST_CASE("enumerate_reduced matches brute-force letter-string filter") {
    // All 4^l letter strings, kept if reduced.
    std::set<std::string> brute;
    const std::string alphabet = "aAbB";
    for (int len = 0; len <= 5; ++len) {
        std::vector<int> idx(len, 0);
        while (true) {
            std::string s;
            for (int i : idx) s.push_back(alphabet[i]);
            Word w;
            bool ok = true;
            for (char c : s) {
                Letter l = make_letter(c >= 'a' ? c - 'a' + 1 : c - 'A' + 1, c >= 'a' ? 1 : -1);
                if (!w.letters.empty() && l == w.letters.back().inverse()) {
                    ok = false;
                    break;
                }
                w.letters.push_back(l);
            }
            if (ok) brute.insert(s);
            int i = len - 1;
            while (i >= 0 && idx[i] == 3) idx[i--] = 0;
            if (i < 0) break;
            ++idx[i];
        }
        if (len == 0) brute.insert("");
    }
    std::set<std::string> enumerated;
    for (const Word& w : enumerate_reduced(rank2, 5)) enumerated.insert(to_string(w));
    CHECK(enumerated == brute);
}

TEST_CASE("enumerate_aligned: pinned examples") {
    CHECK(enumerate_aligned(rank2, 2, 2).size() == 12);

    GroupCtx rank1{1};
    auto tuples = enumerate_aligned(rank1, 2, 2);
    REQUIRE(tuples.size() == 2);
    std::set<std::string> flat;
    for (const auto& t : tuples)
        flat.insert(to_string(t.entries[0]) + "," + to_string(t.entries[1]));
    CHECK(flat == std::set<std::string>{"a,a", "A,A"});

    for (const auto& t : enumerate_aligned(rank2, 2, 4)) {
        CHECK(is_aligned(t));
        bool is_a_then_ainv = to_string(t.entries[0]) == "a" && to_string(t.entries[1]) == "A";
        CHECK_FALSE(is_a_then_ainv);
    }
}

TEST_CASE("enumerate_aligned matches brute-force cross product at total <= 5") {
    for (int degree : {1, 2, 3}) {
        auto words = enumerate_reduced(rank2, 5);
        std::set<std::vector<std::string>> brute;
        std::vector<std::string> current;
        auto rec = [&](auto&& self, int remaining, int budget) -> void {
            if (remaining == 0) {
                brute.insert(current);
                return;
            }
            for (const Word& w : words) {
                if (w.is_identity() || w.length() > budget) continue;
                if (!current.empty()) {
                    Word prev = parse_word(current.back(), rank2);
                    if (!is_reduced_concat(prev, w)) continue;
                }
                current.push_back(to_string(w));
                self(self, remaining - 1, budget - w.length());
                current.pop_back();
            }
        };
        rec(rec, degree, 5);

        std::set<std::vector<std::string>> enumerated;
        for (const auto& t : enumerate_aligned(rank2, degree, 5)) {
            std::vector<std::string> flat;
            for (const Word& w : t.entries) flat.push_back(to_string(w));
            CHECK(is_aligned(t));
            enumerated.insert(flat);
        }
        CHECK(enumerated.size() == brute.size());
        CHECK(enumerated == brute);
    }
}
