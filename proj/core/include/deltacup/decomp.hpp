// Decomposition schemes over free-group words (piecewise parses into a
// fixed piece set), the axiom checkers that certify them, the (g,h)-triangle
// affix algebra, and empirical estimation of the triangle remainder bound R.
#pragma once

#include "deltacup/words.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace deltacup {

// A decomposition scheme assigns every reduced word a canonical parse into
// pieces:
//   brooks(w): pieces are w, w^-1 (occurrence pieces) and occurrence-free
//              gap words; w must be non-selfoverlapping.
//   rolli:     pieces are maximal syllables x_j^m.
//   sms(s,m):  for selfoverlapping w = s.m.s; pieces are s, m (and inverses)
//              inside maximal s(ms)* runs, plus run-free gap words.
//   letters:   one piece per letter (the degenerate scheme used for
//              homomorphism quasimorphisms).
struct Scheme {
    enum class Kind { brooks, rolli, sms, letters };

    Kind kind;
    GroupCtx ctx;
    Word w; // brooks: the scanned word; sms: w = s.m.s
    Word s; // sms only
    Word m; // sms only
};

Scheme make_brooks_scheme(const GroupCtx& ctx, const Word& w);
Scheme make_rolli_scheme(const GroupCtx& ctx);
// Splits w via max_sms_split; rejects non-selfoverlapping w and splits with
// identity middle (their piece set would contain the identity).
Scheme make_sms_scheme(const GroupCtx& ctx, const Word& w);
Scheme make_letters_scheme(const GroupCtx& ctx);

// Descriptor grammar: `brooks:w=<word>`, `rolli`, `sms:w=<word>`, `letters`.
Scheme parse_scheme(std::string_view descriptor, const GroupCtx& ctx);
std::string to_string(const Scheme& scheme);

// A parse: consecutive pieces concatenate to the decomposed word with no
// cancellation at the junctions.
using PieceSeq = std::vector<Word>;

PieceSeq decompose(const Scheme& scheme, const Word& g);

// True iff `piece` belongs to the scheme's piece set.
bool piece_in_set(const Scheme& scheme, const Word& piece);

// Reconstruction / inverse-mirror / sub-range re-decomposition checks over
// every reduced word within the budget:
//   (i)   pieces are non-identity members of the piece set and multiply back
//         to g with junction-reduced concatenations;
//   (ii)  decompose(g^-1) is the reversed-inverse of decompose(g);
//   (iii) for all 1 <= i <= j <= K, re-decomposing the product of pieces
//         i..j returns exactly that sub-sequence.
struct AxiomAViolation {
    Word g;
    std::string detail;
};

struct AxiomAReport {
    long long words_checked = 0;
    std::vector<AxiomAViolation> violations;

    bool pass() const { return violations.empty(); }
};

AxiomAReport check_axiom_A(const Scheme& scheme, int budget);

// Harness self-test hook: same checks against an arbitrary parse function
// (used to confirm the checker catches corrupted scans).
using DecomposeFn = std::function<PieceSeq(const Word&)>;
AxiomAReport check_axiom_A_fn(const GroupCtx& ctx, const DecomposeFn& fn, int budget);

// Affix decomposition of a pair (g,h): with D(x) the piece sequence of x,
//   D(g)  = c1 . r1 . c2
//   D(h)  = revinv(c2) . r2 . c3
//   D(gh) = c1 . r3 . c3
// where c2 is the maximal suffix of D(g) whose reversed inverse prefixes
// D(h), c1 the maximal common prefix of the remainders of D(g) and D(gh),
// and c3 the maximal common suffix of the remainders of D(h) and D(gh).
// Stored orientations match the display above: the c1 field holds the common
// head as it appears in D(g)/D(gh), and r3 holds the middle of D(gh).
struct Triangle {
    PieceSeq c1, r1, c2; // segments of D(g)
    PieceSeq r2, c3;     // segments of D(h) after the revinv(c2) head
    PieceSeq r3;         // middle segment of D(gh)
    int K = 0;  // |D(g)|
    int Kp = 0; // |c1|
    int L = 0;  // |D(h)|
    int Lp = 0; // |r2|
    int M = 0;  // |D(gh)|

    int max_r() const {
        int r1n = static_cast<int>(r1.size());
        int r2n = static_cast<int>(r2.size());
        int r3n = static_cast<int>(r3.size());
        return r1n > r2n ? (r1n > r3n ? r1n : r3n) : (r2n > r3n ? r2n : r3n);
    }
};

Triangle triangle(const Scheme& scheme, const Word& g, const Word& h);

// Same affix algebra applied to three externally supplied parses (shared by
// triangle() and the pair-scan engines; callers guarantee the parses belong
// to g, h and gh).
Triangle triangle_from(const PieceSeq& dg, const PieceSeq& dh, const PieceSeq& dgh);

struct RMeasurement {
    int r_hat = 0;
    Word arg_g, arg_h;         // an attaining pair
    long long pairs_scanned = 0;
};

// R_hat = max over all reduced pairs |g|,|h| <= budget of the largest
// triangle r-part length. Dispatches to the optimized pair-scan engine for
// large budgets when the scheme supports it; measure_R_naive is the plain
// reference double loop.
RMeasurement measure_R(const Scheme& scheme, int budget);
RMeasurement measure_R_naive(const Scheme& scheme, int budget);

struct AxiomBViolation {
    Word g, h;
    int max_r = 0;
};

struct AxiomBReport {
    int R = 0;
    int r_hat = 0;
    bool pass = false;
    // Violating pairs, capped at max_recorded_violations; violation_count is
    // the full tally.
    std::vector<AxiomBViolation> violations;
    long long violation_count = 0;
    long long pairs_scanned = 0;

    static constexpr int max_recorded_violations = 16;
};

AxiomBReport check_axiom_B(const Scheme& scheme, int budget, int R);

} // namespace deltacup
