#include "rscan.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

// The scan visits, for every admissible g, all reduced h via depth-first
// extension one letter at a time, and maintains three things incrementally:
// the reduced product gh (a zipper: surviving prefix of g plus an appended
// tail), a letter-at-a-time parse state for h, and one for gh. Parse states
// are pure functions of the scanned prefix and are stored per word length,
// so cancelling a letter of g simply re-exposes the stored state for the
// shorter prefix. The triangle r-parts then come from integer comparisons of
// piece end positions: inside the cancelled region, equal piece lengths
// force the inverse-pair match; inside the shared head (resp. tail) of g and
// gh (resp. h and gh), equal boundary positions force piece equality, and a
// piece crossing the junction always mismatches because the words differ at
// the first letter past it. Two exact symmetry reductions cut the g loop:
// signed-letter permutations that preserve the scheme's piece structure
// (only the orbit-minimal g is scanned), and the inversion mirror
// (g,h) -> (h^-1, g^-1), which swaps the two r-parts of g and h and so lets
// the scan restrict to |h| <= |g|. pairs_scanned reports the logical pair
// count N^2 covered through these reductions.

namespace deltacup::detail {

namespace {

// ---- incremental parse state --------------------------------------------

// State after scanning a prefix of length n: Mc closed pieces whose end
// positions occupy closed[0..Mc), E the end of the last closed piece. When
// n > E the trailing open piece spans [E, n). dir/pi track sms run progress:
// dir the current run direction (0 in a gap), pi the number of letters
// matched into the next (m, s) chunk.
struct ScanState {
    int Mc = 0;
    int E = 0;
    std::int8_t dir = 0;
    std::int8_t pi = 0;
};

struct ScanConsts {
    Scheme::Kind kind;
    std::vector<std::int8_t> w, winv; // brooks
    std::int8_t s_code = 0;           // sms (|s| == 1)
    std::vector<std::int8_t> m, minv; // sms
};

std::vector<std::int8_t> codes_of(const Word& g) {
    std::vector<std::int8_t> out;
    out.reserve(g.letters.size());
    for (const Letter& l : g.letters) out.push_back(l.code);
    return out;
}

ScanConsts make_consts(const Scheme& scheme) {
    ScanConsts sc;
    sc.kind = scheme.kind;
    if (scheme.kind == Scheme::Kind::brooks) {
        sc.w = codes_of(scheme.w);
        sc.winv = codes_of(invert(scheme.w));
    } else if (scheme.kind == Scheme::Kind::sms) {
        sc.s_code = scheme.s.letters[0].code;
        sc.m = codes_of(scheme.m);
        sc.minv = codes_of(invert(scheme.m));
    }
    return sc;
}

// Extends the parse of buf[0..q) by the letter buf[q]. `closed` is truncated
// to the incoming state's piece count first, so entries left over from an
// abandoned deeper branch are overwritten consistently.
ScanState advance(const ScanState& st, const ScanConsts& sc, const Letter* buf, int q,
                  std::vector<int>& closed) {
    ScanState ns = st;
    const int n = q + 1;
    switch (sc.kind) {
    case Scheme::Kind::rolli:
        if (q > 0 && buf[q].code != buf[q - 1].code) {
            closed.resize(static_cast<std::size_t>(ns.Mc));
            closed.push_back(q);
            ++ns.Mc;
            ns.E = q;
        }
        break;
    case Scheme::Kind::letters:
        closed.resize(static_cast<std::size_t>(ns.Mc));
        closed.push_back(n);
        ++ns.Mc;
        ns.E = n;
        break;
    case Scheme::Kind::brooks: {
        const int wn = static_cast<int>(sc.w.size());
        const int s0 = n - wn;
        if (s0 >= ns.E) {
            bool direct = true;
            bool inv = true;
            for (int i = 0; i < wn && (direct || inv); ++i) {
                direct = direct && buf[s0 + i].code == sc.w[i];
                inv = inv && buf[s0 + i].code == sc.winv[i];
            }
            if (direct || inv) {
                closed.resize(static_cast<std::size_t>(ns.Mc));
                if (s0 > ns.E) {
                    closed.push_back(s0);
                    ++ns.Mc;
                }
                closed.push_back(n);
                ++ns.Mc;
                ns.E = n;
            }
        }
        break;
    }
    case Scheme::Kind::sms: {
        const std::int8_t x = buf[q].code;
        const int mlen = static_cast<int>(sc.m.size());
        if (ns.dir != 0) {
            const std::int8_t expected =
                ns.pi < mlen ? (ns.dir > 0 ? sc.m[ns.pi] : sc.minv[ns.pi])
                             : (ns.dir > 0 ? sc.s_code : static_cast<std::int8_t>(-sc.s_code));
            if (x == expected) {
                if (ns.pi == mlen) { // (m, s) chunk complete: both pieces close
                    closed.resize(static_cast<std::size_t>(ns.Mc));
                    closed.push_back(ns.E + mlen);
                    closed.push_back(n);
                    ns.Mc += 2;
                    ns.E = n;
                    ns.pi = 0;
                } else {
                    ++ns.pi;
                }
                break;
            }
            // Run over; its pending chunk letters fall into the gap.
            ns.dir = 0;
            ns.pi = 0;
        }
        if (x == sc.s_code || x == -sc.s_code) {
            closed.resize(static_cast<std::size_t>(ns.Mc));
            if (q > ns.E) {
                closed.push_back(q);
                ++ns.Mc;
            }
            closed.push_back(n);
            ++ns.Mc;
            ns.E = n;
            ns.dir = x == sc.s_code ? 1 : -1;
            ns.pi = 0;
        }
        break;
    }
    }
    return ns;
}

inline int piece_count(const ScanState& st, int n) { return st.Mc + (n > st.E ? 1 : 0); }

// End position of the i1-th piece (1-based; i1 == 0 gives 0). Pieces past
// the closed prefix form the single open piece ending at n.
inline int piece_end(const ScanState& st, const std::vector<int>& closed, int i1, int n) {
    if (i1 == 0) return 0;
    return i1 <= st.Mc ? closed[static_cast<std::size_t>(i1 - 1)] : n;
}

// ---- scheme symmetries ---------------------------------------------------

// A signed-letter permutation, indexed by code + 32.
using LetterMap = std::array<std::int8_t, 64>;

Word apply_map(const LetterMap& m, const Word& g) {
    Word out;
    out.letters.reserve(g.letters.size());
    for (const Letter& l : g.letters) out.letters.push_back(Letter{m[l.code + 32]});
    return out;
}

bool preserves_scheme(const Scheme& scheme, const LetterMap& m) {
    switch (scheme.kind) {
    case Scheme::Kind::rolli:
    case Scheme::Kind::letters:
        return true;
    case Scheme::Kind::brooks: {
        Word wi = apply_map(m, scheme.w);
        return wi == scheme.w || wi == invert(scheme.w);
    }
    case Scheme::Kind::sms: {
        Word si = apply_map(m, scheme.s);
        Word mi = apply_map(m, scheme.m);
        return (si == scheme.s && mi == scheme.m) ||
               (si == invert(scheme.s) && mi == invert(scheme.m));
    }
    }
    return false;
}

// All non-identity signed-letter permutations that map the scheme's parses
// onto parses (piece-wise). Skipped above rank 4: the factorial cost of the
// search would outweigh the orbit savings.
std::vector<LetterMap> scheme_symmetries(const Scheme& scheme) {
    std::vector<LetterMap> out;
    const int r = scheme.ctx.rank;
    if (r > 4) return out;
    std::vector<int> perm(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    do {
        for (int mask = 0; mask < (1 << r); ++mask) {
            LetterMap map{};
            bool identity = true;
            for (int i = 1; i <= r; ++i) {
                int img = perm[static_cast<std::size_t>(i - 1)];
                if ((mask >> (i - 1)) & 1) img = -img;
                if (img != i) identity = false;
                map[i + 32] = static_cast<std::int8_t>(img);
                map[-i + 32] = static_cast<std::int8_t>(-img);
            }
            if (identity) continue;
            if (preserves_scheme(scheme, map)) out.push_back(map);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool orbit_minimal(const Word& g, const std::vector<LetterMap>& syms) {
    for (const LetterMap& m : syms) {
        for (const Letter& l : g.letters) {
            const Letter mapped{m[l.code + 32]};
            if (mapped.ordinal() < l.ordinal()) return false;
            if (mapped.ordinal() > l.ordinal()) break;
        }
    }
    return true;
}

// ---- the pair scan -------------------------------------------------------

struct Engine {
    const Scheme& scheme;
    ScanConsts sc;
    int budget;
    std::vector<std::int8_t> letter_codes; // canonical iteration order

    // fixed per g
    int glen = 0;
    int K = 0;
    std::vector<int> eg; // D(g) piece ends, eg[0] = 0 .. eg[K] = |g|
    int Hmax = 0;

    // evolving
    std::vector<Letter> ghbuf;
    int n = 0; // |gh|
    int p = 0; // surviving prefix of g inside gh
    std::vector<ScanState> ghstates;
    std::vector<int> ghclosed;
    std::vector<Letter> hbuf;
    std::vector<ScanState> hstates;
    std::vector<int> hclosed;

    int best_r = 0;
    Word best_g, best_h;

    Engine(const Scheme& scheme_, int budget_)
        : scheme(scheme_), sc(make_consts(scheme_)), budget(budget_) {
        for (int gen = 1; gen <= scheme.ctx.rank; ++gen) {
            letter_codes.push_back(static_cast<std::int8_t>(gen));
            letter_codes.push_back(static_cast<std::int8_t>(-gen));
        }
        ghbuf.resize(static_cast<std::size_t>(2 * budget + 1));
        ghstates.resize(static_cast<std::size_t>(2 * budget + 2));
        hbuf.resize(static_cast<std::size_t>(budget + 1));
        hstates.resize(static_cast<std::size_t>(budget + 2));
    }

    void eval_node(int ell) {
        const ScanState& hs = hstates[static_cast<std::size_t>(ell)];
        const ScanState& gs = ghstates[static_cast<std::size_t>(n)];
        const int Lh = piece_count(hs, ell);
        const int M = piece_count(gs, n);
        const int c = glen - p;

        // Cancelled piece pairs: lengths must pair up inside the cancelled
        // region, which forces the inverse-pair piece match and vice versa.
        int t = 0;
        {
            const int cap = K < Lh ? K : Lh;
            int he_prev = 0;
            while (t < cap) {
                const int he = piece_end(hs, hclosed, t + 1, ell);
                if (he > c || he - he_prev != eg[static_cast<std::size_t>(K - t)] -
                                                  eg[static_cast<std::size_t>(K - t - 1)])
                    break;
                he_prev = he;
                ++t;
            }
        }
        // Shared head pieces of D(g) and D(gh): boundary equality inside the
        // common letter prefix [0, p).
        int kp = 0;
        {
            const int cap = std::min(K - t, M);
            while (kp < cap) {
                const int e1 = eg[static_cast<std::size_t>(kp + 1)];
                if (e1 > p || e1 != piece_end(gs, ghclosed, kp + 1, n)) break;
                ++kp;
            }
        }
        // Shared tail pieces of D(h) and D(gh): equal start offsets from the
        // word ends, inside the common letter tail.
        int cl = 0;
        {
            const int cap = std::min(Lh - t, M - kp);
            while (cl < cap) {
                const int sh = piece_end(hs, hclosed, Lh - 1 - cl, ell);
                if (sh < c) break;
                const int sgh = piece_end(gs, ghclosed, M - 1 - cl, n);
                if (ell - sh != n - sgh) break;
                ++cl;
            }
        }

        int r = K - t - kp;
        const int r2 = Lh - t - cl;
        if (r2 > r) r = r2;
        const int r3 = M - kp - cl;
        if (r3 > r) r = r3;
        if (r > best_r) {
            best_r = r;
            best_g.letters.assign(ghbuf.begin(), ghbuf.begin() + glen);
            best_h.letters.assign(hbuf.begin(), hbuf.begin() + ell);
        }
    }

    void dfs(int depth) {
        for (const std::int8_t code : letter_codes) {
            if (depth > 0 && code == -hbuf[static_cast<std::size_t>(depth - 1)].code) continue;
            const Letter x{code};
            hbuf[static_cast<std::size_t>(depth)] = x;
            hstates[static_cast<std::size_t>(depth + 1)] =
                advance(hstates[static_cast<std::size_t>(depth)], sc, hbuf.data(), depth, hclosed);

            const bool pop = n > 0 && ghbuf[static_cast<std::size_t>(n - 1)].code == -code;
            const int saved_p = p;
            if (pop) {
                --n;
                if (n < p) p = n;
            } else {
                ghbuf[static_cast<std::size_t>(n)] = x;
                ghstates[static_cast<std::size_t>(n + 1)] =
                    advance(ghstates[static_cast<std::size_t>(n)], sc, ghbuf.data(), n, ghclosed);
                ++n;
            }

            eval_node(depth + 1);
            if (depth + 1 < Hmax) dfs(depth + 1);

            if (pop) {
                // Deeper branches may have overwritten the letter and the
                // state for this length; re-derive both.
                ghbuf[static_cast<std::size_t>(n)] = Letter{static_cast<std::int8_t>(-code)};
                ghstates[static_cast<std::size_t>(n + 1)] =
                    advance(ghstates[static_cast<std::size_t>(n)], sc, ghbuf.data(), n, ghclosed);
                ++n;
                p = saved_p;
            } else {
                --n;
            }
        }
    }

    void run_for_g(const Word& g) {
        glen = g.length();
        Hmax = std::min(budget, glen);
        if (Hmax < 1) return;

        PieceSeq dg = decompose(scheme, g);
        K = static_cast<int>(dg.size());
        eg.assign(1, 0);
        for (const Word& piece : dg) eg.push_back(eg.back() + piece.length());

        ghclosed.clear();
        ghstates[0] = ScanState{};
        for (int i = 0; i < glen; ++i) {
            ghbuf[static_cast<std::size_t>(i)] = g.letters[static_cast<std::size_t>(i)];
            ghstates[static_cast<std::size_t>(i + 1)] =
                advance(ghstates[static_cast<std::size_t>(i)], sc, ghbuf.data(), i, ghclosed);
        }
        n = glen;
        p = glen;

        // The letter-at-a-time parse must reproduce decompose(g) exactly;
        // anything else means the incremental scanner diverged.
        const ScanState& seed = ghstates[static_cast<std::size_t>(glen)];
        if (piece_count(seed, glen) != K)
            throw std::logic_error("pair scan: incremental parse diverged from decompose");
        for (int k = 1; k <= K; ++k)
            if (piece_end(seed, ghclosed, k, glen) != eg[static_cast<std::size_t>(k)])
                throw std::logic_error("pair scan: incremental parse diverged from decompose");

        hclosed.clear();
        hstates[0] = ScanState{};
        dfs(0);
    }
};

} // namespace

bool fast_scan_supported(const Scheme& scheme) {
    switch (scheme.kind) {
    case Scheme::Kind::rolli:
        return true;
    case Scheme::Kind::brooks:
        // Construction guarantees a non-selfoverlapping w, which is all the
        // letter-at-a-time occurrence commit needs.
        return true;
    case Scheme::Kind::letters:
        // Every r-part is identically zero; the naive path is ample.
        return false;
    case Scheme::Kind::sms: {
        // The incremental scanner commits runs left-to-right. That matches
        // the reference parse when run regions of the two directions cannot
        // overlap and chunk-pending letters cannot start a run: |s| = 1, m
        // free of s and its inverse, and the run alphabet disjoint from its
        // own inverse alphabet.
        if (scheme.s.length() != 1) return false;
        const std::int8_t s0 = scheme.s.letters[0].code;
        for (const Letter& l : scheme.m.letters)
            if (l.code == s0 || l.code == -s0) return false;
        std::array<bool, 64> seen{};
        for (const Letter& l : scheme.w.letters) seen[l.code + 32] = true;
        for (const Letter& l : scheme.w.letters)
            if (seen[-l.code + 32]) return false;
        return true;
    }
    }
    return false;
}

PieceSeq incremental_decompose(const Scheme& scheme, const Word& g) {
    const ScanConsts sc = make_consts(scheme);
    ScanState st;
    std::vector<int> closed;
    for (int i = 0; i < g.length(); ++i)
        st = advance(st, sc, g.letters.data(), i, closed);
    PieceSeq out;
    const int total = piece_count(st, g.length());
    for (int k = 1; k <= total; ++k) {
        const int b0 = piece_end(st, closed, k - 1, g.length());
        const int b1 = piece_end(st, closed, k, g.length());
        Word piece;
        piece.letters.assign(g.letters.begin() + b0, g.letters.begin() + b1);
        out.push_back(std::move(piece));
    }
    return out;
}

RMeasurement measure_r_scan(const Scheme& scheme, int budget) {
    if (!fast_scan_supported(scheme)) return measure_R_naive(scheme, budget);
    Engine engine(scheme, budget < 0 ? 0 : budget);
    const std::vector<LetterMap> syms = scheme_symmetries(scheme);
    long long total_words = 0;
    for_each_reduced(scheme.ctx, budget, [&](const Word& g) {
        ++total_words;
        if (!orbit_minimal(g, syms)) return;
        engine.run_for_g(g);
    });
    RMeasurement out;
    out.r_hat = engine.best_r;
    out.arg_g = engine.best_g;
    out.arg_h = engine.best_h;
    out.pairs_scanned = total_words * total_words;
    return out;
}

} // namespace deltacup::detail
