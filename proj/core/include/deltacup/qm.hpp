#pragma once

// Quasimorphism evaluators on a free group, all with exact rational values:
//   - decomposable: sum of an alternating bounded piece-weight table over a
//     decomposition scheme's pieces,
//   - sms_brooks: the triple-window evaluator attached to a selfoverlapping
//     word w = s.m.s (weights read off products of three consecutive pieces),
//   - brooks_direct: the signed occurrence count itself (counting oracle),
//   - homomorphism: letter-weight sums,
//   - zero.
// Plus the degree-1 coboundary and an exhaustive defect scan over budgets.

#include "deltacup/cochain.hpp"
#include "deltacup/decomp.hpp"
#include "deltacup/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace deltacup {

// Strict weak order on words (length, then letter codes); used for weight
// table keys.
struct WordLess {
    bool operator()(const Word& x, const Word& y) const {
        if (x.length() != y.length()) return x.length() < y.length();
        for (int i = 0; i < x.length(); ++i)
            if (x.letters[i] != y.letters[i]) return x.letters[i].code < y.letters[i].code;
        return false;
    }
};

// Alternating bounded weight table. Entries come in (p, v), (p^-1, -v)
// pairs; `set` inserts both and rejects conflicts. Queries outside the table
// fall through to `fallback` (if any), then 0. Every returned value is
// checked against the declared bound.
struct PieceWeights {
    enum class Mode { per_piece, per_triplet };

    Mode mode = Mode::per_piece;
    std::map<Word, Rational, WordLess> table;
    Rational bound{0};
    std::function<Rational(const Word&)> fallback;
    std::string source; // weights-file path when loaded from one

    void set(const Word& piece, const Rational& value);
    Rational value(const Word& key) const;
};

// Standard Brooks weights on a brooks scheme: w -> 1, w^-1 -> -1, gaps -> 0.
PieceWeights brooks_piece_weights(const Scheme& scheme);

// Default syllable weights: x^k -> sign(k).
PieceWeights default_rolli_weights();

// Line-oriented "piece<TAB>rational" table; inverse entries are filled in
// automatically and the bound is the largest magnitude seen.
PieceWeights load_piece_weights(const std::string& path, const GroupCtx& ctx);

struct Quasimorphism {
    enum class Kind { decomposable, sms_brooks, brooks_direct, homomorphism, zero };

    Kind kind;
    GroupCtx ctx;
    std::optional<Scheme> scheme;         // decomposable / sms_brooks
    PieceWeights weights;                 // decomposable (per piece) / sms_brooks (per triple)
    Word w;                               // brooks_direct
    OccMode mode = OccMode::big;          // brooks_direct
    std::vector<Rational> letter_weights; // homomorphism, one per generator
};

Quasimorphism make_zero_qm(const GroupCtx& ctx);
Quasimorphism make_homomorphism_qm(const GroupCtx& ctx, std::vector<Rational> generator_weights);
Quasimorphism make_brooks_direct_qm(const GroupCtx& ctx, const Word& w, OccMode mode = OccMode::big);
Quasimorphism make_decomposable_qm(const Scheme& scheme, PieceWeights weights);

// The triple-window quasimorphism of a selfoverlapping word (w = s.m.s with
// m non-identity): sum over consecutive piece triples (p_j, p_j+1, p_j+2) of
// the sms decomposition, scoring +1 when the product is w and -1 when it is
// w^-1.
Quasimorphism make_sms_brooks_qm(const GroupCtx& ctx, const Word& w);

// Descriptor grammar:
//   brooks:w=<word>[:small]   signed occurrence count (big unless :small)
//   rolli[:weights=<file>]    decomposable over syllables
//   sms:w=<word>              triple-window evaluator
//   hom:<letter>=<rational>,...
//   zero
Quasimorphism parse_qm(std::string_view descriptor, const GroupCtx& ctx);
std::string to_string(const Quasimorphism& qm);

Rational eval(const Quasimorphism& qm, const Word& g);

// For decomposable qms and p in the scheme's piece set: evaluates the qm at
// p (which equals the piece weight itself when the scheme parses p as one
// piece). Rejects non-pieces and non-decomposable kinds.
Rational piece_value_check(const Quasimorphism& qm, const Word& p);

// The quasimorphism as a full-domain 1-cochain g -> qm(g).
Cochain as_cochain(const Quasimorphism& qm);

// The full-domain 2-cochain (g, h) -> qm(h) - qm(gh) + qm(g).
Cochain coboundary1(const Quasimorphism& qm);

struct DefectReport {
    Rational d_hat{0};
    Word arg_g, arg_h;
    std::uint64_t pairs_scanned = 0;
};

// Max |coboundary1| over all reduced pairs with |g|, |h| <= budget; the
// witness is the first attaining pair in enumeration order. Honors
// DELTACUP_THREADS (row-chunked scan with a deterministic merge).
DefectReport defect(const Quasimorphism& qm, int budget);

} // namespace deltacup
