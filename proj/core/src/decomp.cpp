#include "deltacup/decomp.hpp"

#include "piece_scan.hpp"
#include "rscan.hpp"

#include <algorithm>
#include <utility>

namespace deltacup {

namespace {

void require(bool cond, const char* message) {
    if (!cond) throw std::invalid_argument(message);
}

} // namespace

Scheme make_brooks_scheme(const GroupCtx& ctx, const Word& w) {
    require(!w.is_identity(), "brooks scheme: w must be non-identity");
    require(is_reduced(w), "brooks scheme: w must be reduced");
    require(!max_sms_split(w).has_value(),
            "brooks scheme: w must be non-selfoverlapping (it has a nontrivial border)");
    return Scheme{Scheme::Kind::brooks, ctx, w, Word{}, Word{}};
}

Scheme make_rolli_scheme(const GroupCtx& ctx) {
    return Scheme{Scheme::Kind::rolli, ctx, Word{}, Word{}, Word{}};
}

Scheme make_sms_scheme(const GroupCtx& ctx, const Word& w) {
    require(!w.is_identity(), "sms scheme: w must be non-identity");
    require(is_reduced(w), "sms scheme: w must be reduced");
    auto split = max_sms_split(w);
    require(split.has_value(), "sms scheme: w must be selfoverlapping (w = s.m.s with s non-identity)");
    require(!split->m.is_identity(),
            "sms scheme: the middle of the maximal split is the identity, which the piece set "
            "excludes; such words are rejected");
    return Scheme{Scheme::Kind::sms, ctx, w, split->s, split->m};
}

Scheme make_letters_scheme(const GroupCtx& ctx) {
    return Scheme{Scheme::Kind::letters, ctx, Word{}, Word{}, Word{}};
}

Scheme parse_scheme(std::string_view descriptor, const GroupCtx& ctx) {
    if (descriptor == "rolli") return make_rolli_scheme(ctx);
    if (descriptor == "letters") return make_letters_scheme(ctx);
    auto colon = descriptor.find(':');
    std::string_view head = descriptor.substr(0, colon);
    if ((head == "brooks" || head == "sms") && colon != std::string_view::npos) {
        std::string_view arg = descriptor.substr(colon + 1);
        if (arg.substr(0, 2) == "w=") {
            Word w = parse_word(arg.substr(2), ctx);
            return head == "brooks" ? make_brooks_scheme(ctx, w) : make_sms_scheme(ctx, w);
        }
    }
    throw std::invalid_argument("parse_scheme: expected brooks:w=<word>, rolli, sms:w=<word> or "
                                "letters, got '" +
                                std::string(descriptor) + "'");
}

std::string to_string(const Scheme& scheme) {
    switch (scheme.kind) {
    case Scheme::Kind::brooks:
        return "brooks:w=" + to_string(scheme.w);
    case Scheme::Kind::rolli:
        return "rolli";
    case Scheme::Kind::sms:
        return "sms:w=" + to_string(scheme.w);
    case Scheme::Kind::letters:
        return "letters";
    }
    return {};
}

PieceSeq decompose(const Scheme& scheme, const Word& g) {
    detail::SchemeView view(scheme);
    PieceSeq pieces;
    view.scan(detail::LetterSpan(g.letters), [&](std::size_t start, std::size_t end) {
        Word piece;
        piece.letters.assign(g.letters.begin() + start, g.letters.begin() + end);
        pieces.push_back(std::move(piece));
    });
    return pieces;
}

bool piece_in_set(const Scheme& scheme, const Word& piece) {
    if (piece.is_identity()) return false;
    switch (scheme.kind) {
    case Scheme::Kind::brooks: {
        Word winv = invert(scheme.w);
        if (piece == scheme.w || piece == winv) return true;
        return count_occurrences(scheme.w, piece, OccMode::big) == 0 &&
               count_occurrences(winv, piece, OccMode::big) == 0;
    }
    case Scheme::Kind::rolli: {
        for (Letter l : piece.letters)
            if (l != piece.letters.front()) return false;
        return true;
    }
    case Scheme::Kind::sms: {
        Word sinv = invert(scheme.s), minv = invert(scheme.m);
        if (piece == scheme.s || piece == sinv || piece == scheme.m || piece == minv) return true;
        // Gap pieces must avoid (sm)^n s^{+-1} factors for n >= 1; every such
        // factor contains w = s.m.s, so avoiding w and w^-1 is equivalent.
        Word winv = invert(scheme.w);
        return count_occurrences(scheme.w, piece, OccMode::big) == 0 &&
               count_occurrences(winv, piece, OccMode::big) == 0;
    }
    case Scheme::Kind::letters:
        return piece.length() == 1;
    }
    return false;
}

namespace {

// Letter-level reconstruction: pieces are non-identity, junction-reduced and
// concatenate exactly to g.
bool reconstructs(const PieceSeq& pieces, const Word& g) {
    std::size_t pos = 0;
    const Word* prev = nullptr;
    for (const Word& piece : pieces) {
        if (piece.is_identity()) return false;
        if (prev && !is_reduced_concat(*prev, piece)) return false;
        if (pos + piece.letters.size() > g.letters.size()) return false;
        if (!std::equal(piece.letters.begin(), piece.letters.end(), g.letters.begin() + pos))
            return false;
        pos += piece.letters.size();
        prev = &piece;
    }
    return pos == g.letters.size();
}

PieceSeq reversed_inverse(const PieceSeq& pieces) {
    PieceSeq out;
    out.reserve(pieces.size());
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) out.push_back(invert(*it));
    return out;
}

Word concat_range(const PieceSeq& pieces, std::size_t i, std::size_t j) {
    Word out;
    for (std::size_t k = i; k <= j; ++k)
        out.letters.insert(out.letters.end(), pieces[k].letters.begin(), pieces[k].letters.end());
    return out;
}

AxiomAReport run_axiom_A(const GroupCtx& ctx, const DecomposeFn& fn,
                         const std::function<bool(const Word&)>& in_set, int budget) {
    AxiomAReport report;
    for_each_reduced(ctx, budget, [&](const Word& g) {
        ++report.words_checked;
        PieceSeq pieces = fn(g);
        if (!reconstructs(pieces, g)) {
            report.violations.push_back({g, "(i) pieces do not reconstruct the word"});
            return;
        }
        if (in_set)
            for (const Word& piece : pieces)
                if (!in_set(piece)) {
                    report.violations.push_back(
                        {g, "(i) piece " + to_string(piece) + " outside the piece set"});
                    return;
                }
        if (fn(invert(g)) != reversed_inverse(pieces)) {
            report.violations.push_back({g, "(ii) inverse decomposition is not the reversed inverse"});
            return;
        }
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            for (std::size_t j = i; j < pieces.size(); ++j) {
                Word sub = concat_range(pieces, i, j);
                PieceSeq expected(pieces.begin() + i, pieces.begin() + j + 1);
                if (fn(sub) != expected) {
                    report.violations.push_back(
                        {g, "(iii) sub-range " + std::to_string(i + 1) + ".." + std::to_string(j + 1) +
                                " re-decomposes differently"});
                    return;
                }
            }
        }
    });
    return report;
}

} // namespace

AxiomAReport check_axiom_A(const Scheme& scheme, int budget) {
    detail::SchemeView view(scheme);
    return run_axiom_A(
        scheme.ctx, [&](const Word& g) { return decompose(scheme, g); },
        [&](const Word& piece) { return piece_in_set(scheme, piece); }, budget);
}

AxiomAReport check_axiom_A_fn(const GroupCtx& ctx, const DecomposeFn& fn, int budget) {
    return run_axiom_A(ctx, fn, nullptr, budget);
}

Triangle triangle_from(const PieceSeq& dg, const PieceSeq& dh, const PieceSeq& dgh) {
    Triangle tri;
    int K = tri.K = static_cast<int>(dg.size());
    int L = tri.L = static_cast<int>(dh.size());
    int M = tri.M = static_cast<int>(dgh.size());

    // c2: maximal suffix of D(g) whose reversed inverse prefixes D(h).
    int t = 0;
    while (t < std::min(K, L) && dh[t] == invert(dg[K - 1 - t])) ++t;
    // c1: maximal common prefix of the remainders of D(g) and D(gh).
    int kp = 0;
    while (kp < std::min(K - t, M) && dg[kp] == dgh[kp]) ++kp;
    tri.Kp = kp;
    // c3: maximal common suffix of the remainders of D(h) and D(gh).
    int c3len = 0;
    while (c3len < std::min(L - t, M - kp) && dh[L - 1 - c3len] == dgh[M - 1 - c3len]) ++c3len;
    tri.Lp = L - t - c3len;

    tri.c1.assign(dg.begin(), dg.begin() + kp);
    tri.r1.assign(dg.begin() + kp, dg.begin() + (K - t));
    tri.c2.assign(dg.begin() + (K - t), dg.end());
    tri.r2.assign(dh.begin() + t, dh.begin() + (L - c3len));
    tri.c3.assign(dh.begin() + (L - c3len), dh.end());
    tri.r3.assign(dgh.begin() + kp, dgh.begin() + (M - c3len));
    return tri;
}

Triangle triangle(const Scheme& scheme, const Word& g, const Word& h) {
    PieceSeq dg = decompose(scheme, g);
    PieceSeq dh = decompose(scheme, h);
    Word gh = multiply(g, h);
    PieceSeq dgh = decompose(scheme, gh);
    if (!reconstructs(dg, g) || !reconstructs(dh, h) || !reconstructs(dgh, gh))
        throw std::runtime_error("triangle: decomposition failed to reconstruct its word "
                                 "(scheme bug for " +
                                 to_string(scheme) + ")");
    return triangle_from(dg, dh, dgh);
}

RMeasurement measure_R_naive(const Scheme& scheme, int budget) {
    std::vector<Word> words = enumerate_reduced(scheme.ctx, budget);
    std::vector<PieceSeq> decomps;
    decomps.reserve(words.size());
    for (const Word& g : words) decomps.push_back(decompose(scheme, g));

    RMeasurement best;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            Word gh = multiply(words[i], words[j]);
            Triangle tri = triangle_from(decomps[i], decomps[j], decompose(scheme, gh));
            ++best.pairs_scanned;
            if (tri.max_r() > best.r_hat) {
                best.r_hat = tri.max_r();
                best.arg_g = words[i];
                best.arg_h = words[j];
            }
        }
    }
    return best;
}

RMeasurement measure_R(const Scheme& scheme, int budget) {
    if (budget >= 5 && detail::fast_scan_supported(scheme))
        return detail::measure_r_scan(scheme, budget);
    return measure_R_naive(scheme, budget);
}

AxiomBReport check_axiom_B(const Scheme& scheme, int budget, int R) {
    if (R < 1) throw std::invalid_argument("check_axiom_B: R must be >= 1");
    AxiomBReport report;
    report.R = R;
    RMeasurement measured = measure_R(scheme, budget);
    report.r_hat = measured.r_hat;
    report.pairs_scanned = measured.pairs_scanned;
    report.pass = measured.r_hat <= R;
    if (report.pass) return report;

    // Collect violating pairs: cheap exhaustively for small budgets, otherwise
    // report the measured witness.
    if (budget <= 6) {
        std::vector<Word> words = enumerate_reduced(scheme.ctx, budget);
        std::vector<PieceSeq> decomps;
        decomps.reserve(words.size());
        for (const Word& g : words) decomps.push_back(decompose(scheme, g));
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = 0; j < words.size(); ++j) {
                Word gh = multiply(words[i], words[j]);
                Triangle tri = triangle_from(decomps[i], decomps[j], decompose(scheme, gh));
                if (tri.max_r() > R) {
                    ++report.violation_count;
                    if (report.violations.size() <
                        static_cast<std::size_t>(AxiomBReport::max_recorded_violations))
                        report.violations.push_back({words[i], words[j], tri.max_r()});
                }
            }
        }
    } else {
        report.violation_count = 1;
        report.violations.push_back({measured.arg_g, measured.arg_h, measured.r_hat});
    }
    return report;
}

} // namespace deltacup
