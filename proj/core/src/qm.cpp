#include "deltacup/qm.hpp"

#include <cstdlib>
#include <fstream>
#include <thread>
#include <utility>

namespace deltacup {

void PieceWeights::set(const Word& piece, const Rational& value) {
    if (piece.is_identity())
        throw std::invalid_argument("PieceWeights: the identity is never a piece");
    Word inv = invert(piece);
    auto put = [&](const Word& key, const Rational& v) {
        auto [it, inserted] = table.emplace(key, v);
        if (!inserted && it->second != v)
            throw std::invalid_argument("PieceWeights: conflicting entries for " + to_string(key) +
                                        " (alternating table requires value(p^-1) = -value(p))");
    };
    put(piece, value);
    put(inv, -value);
}

Rational PieceWeights::value(const Word& key) const {
    Rational v{0};
    if (auto it = table.find(key); it != table.end())
        v = it->second;
    else if (fallback)
        v = fallback(key);
    if (rational_abs(v) > bound)
        throw std::invalid_argument("PieceWeights: value " + to_string(v) + " at " + to_string(key) +
                                    " exceeds the declared bound " + to_string(bound));
    return v;
}

PieceWeights brooks_piece_weights(const Scheme& scheme) {
    if (scheme.kind != Scheme::Kind::brooks)
        throw std::invalid_argument("brooks_piece_weights: needs a brooks scheme");
    PieceWeights weights;
    weights.bound = Rational(1);
    weights.set(scheme.w, Rational(1));
    return weights;
}

PieceWeights default_rolli_weights() {
    PieceWeights weights;
    weights.bound = Rational(1);
    weights.fallback = [](const Word& piece) {
        return Rational(piece.is_identity() ? 0 : piece.letters.front().sign());
    };
    return weights;
}

PieceWeights load_piece_weights(const std::string& path, const GroupCtx& ctx) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_piece_weights: cannot open " + path);
    PieceWeights weights;
    weights.source = path;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::invalid_argument("load_piece_weights: " + path + ":" +
                                        std::to_string(line_no) + ": expected piece<TAB>rational");
        Word piece = parse_word(std::string_view(line).substr(0, tab), ctx, /*strict=*/true);
        Rational v = parse_rational(std::string_view(line).substr(tab + 1));
        weights.set(piece, v);
        weights.bound = std::max(weights.bound, rational_abs(v));
    }
    return weights;
}

Quasimorphism make_zero_qm(const GroupCtx& ctx) {
    return Quasimorphism{Quasimorphism::Kind::zero, ctx, std::nullopt, {}, {}, OccMode::big, {}};
}

Quasimorphism make_homomorphism_qm(const GroupCtx& ctx, std::vector<Rational> generator_weights) {
    if (static_cast<int>(generator_weights.size()) != ctx.rank)
        throw std::invalid_argument("make_homomorphism_qm: need one weight per generator");
    return Quasimorphism{Quasimorphism::Kind::homomorphism, ctx,       std::nullopt, {}, {},
                         OccMode::big,                      std::move(generator_weights)};
}

Quasimorphism make_brooks_direct_qm(const GroupCtx& ctx, const Word& w, OccMode mode) {
    if (w.is_identity())
        throw std::invalid_argument("make_brooks_direct_qm: w must be non-identity");
    if (!is_reduced(w)) throw std::invalid_argument("make_brooks_direct_qm: w must be reduced");
    return Quasimorphism{Quasimorphism::Kind::brooks_direct, ctx, std::nullopt, {}, w, mode, {}};
}

Quasimorphism make_decomposable_qm(const Scheme& scheme, PieceWeights weights) {
    if (weights.mode != PieceWeights::Mode::per_piece)
        throw std::invalid_argument("make_decomposable_qm: weights must be per-piece");
    return Quasimorphism{Quasimorphism::Kind::decomposable, scheme.ctx,   scheme,
                         std::move(weights),                {},           OccMode::big,
                         {}};
}

Quasimorphism make_sms_brooks_qm(const GroupCtx& ctx, const Word& w) {
    Scheme scheme = make_sms_scheme(ctx, w); // validates the selfoverlap split
    PieceWeights weights;
    weights.mode = PieceWeights::Mode::per_triplet;
    weights.bound = Rational(1);
    weights.set(w, Rational(1));
    return Quasimorphism{Quasimorphism::Kind::sms_brooks, ctx, scheme, std::move(weights),
                         {},                              OccMode::big, {}};
}

Quasimorphism parse_qm(std::string_view descriptor, const GroupCtx& ctx) {
    if (descriptor == "zero") return make_zero_qm(ctx);
    if (descriptor == "rolli")
        return make_decomposable_qm(make_rolli_scheme(ctx), default_rolli_weights());
    if (descriptor.substr(0, 14) == "rolli:weights=")
        return make_decomposable_qm(make_rolli_scheme(ctx),
                                    load_piece_weights(std::string(descriptor.substr(14)), ctx));
    if (descriptor.substr(0, 9) == "brooks:w=") {
        std::string_view rest = descriptor.substr(9);
        OccMode mode = OccMode::big;
        if (auto colon = rest.find(':'); colon != std::string_view::npos) {
            if (rest.substr(colon + 1) != "small")
                throw std::invalid_argument("parse_qm: unknown flag '" +
                                            std::string(rest.substr(colon + 1)) + "'");
            mode = OccMode::small;
            rest = rest.substr(0, colon);
        }
        return make_brooks_direct_qm(ctx, parse_word(rest, ctx), mode);
    }
    if (descriptor.substr(0, 6) == "sms:w=")
        return make_sms_brooks_qm(ctx, parse_word(descriptor.substr(6), ctx));
    if (descriptor.substr(0, 4) == "hom:") {
        std::vector<Rational> weights(static_cast<std::size_t>(ctx.rank), Rational(0));
        std::vector<bool> seen(weights.size(), false);
        std::string_view rest = descriptor.substr(4);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string_view item = rest.substr(0, comma);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            if (item.size() < 3 || item[1] != '=' || item[0] < 'a' ||
                item[0] >= 'a' + ctx.rank)
                throw std::invalid_argument("parse_qm: expected <letter>=<rational> in hom list, "
                                            "got '" +
                                            std::string(item) + "'");
            std::size_t gen = static_cast<std::size_t>(item[0] - 'a');
            if (seen[gen])
                throw std::invalid_argument("parse_qm: duplicate hom weight for '" +
                                            std::string(1, item[0]) + "'");
            seen[gen] = true;
            weights[gen] = parse_rational(item.substr(2));
        }
        return make_homomorphism_qm(ctx, std::move(weights));
    }
    throw std::invalid_argument("parse_qm: unknown descriptor '" + std::string(descriptor) + "'");
}

std::string to_string(const Quasimorphism& qm) {
    switch (qm.kind) {
    case Quasimorphism::Kind::zero:
        return "zero";
    case Quasimorphism::Kind::homomorphism: {
        std::string out = "hom:";
        for (std::size_t i = 0; i < qm.letter_weights.size(); ++i) {
            if (i) out += ',';
            out += static_cast<char>('a' + i);
            out += '=';
            out += to_string(qm.letter_weights[i]);
        }
        return out;
    }
    case Quasimorphism::Kind::brooks_direct:
        return "brooks:w=" + to_string(qm.w) + (qm.mode == OccMode::small ? ":small" : "");
    case Quasimorphism::Kind::sms_brooks:
        return "sms:w=" + to_string(qm.scheme->w);
    case Quasimorphism::Kind::decomposable:
        if (qm.scheme->kind == Scheme::Kind::rolli)
            return qm.weights.source.empty() ? "rolli" : "rolli:weights=" + qm.weights.source;
        // No descriptor form; diagnostic only.
        return "decomposable(" + to_string(*qm.scheme) + ")";
    }
    return {};
}

Rational eval(const Quasimorphism& qm, const Word& g) {
    if (!is_reduced(g)) throw std::invalid_argument("eval: word must be reduced");
    switch (qm.kind) {
    case Quasimorphism::Kind::zero:
        return Rational(0);
    case Quasimorphism::Kind::homomorphism: {
        Rational acc{0};
        for (Letter l : g.letters) acc += Rational(l.sign()) * qm.letter_weights[l.gen() - 1];
        return acc;
    }
    case Quasimorphism::Kind::brooks_direct:
        return Rational(count_occurrences(qm.w, g, qm.mode));
    case Quasimorphism::Kind::decomposable: {
        Rational acc{0};
        for (const Word& piece : decompose(*qm.scheme, g)) acc += qm.weights.value(piece);
        return acc;
    }
    case Quasimorphism::Kind::sms_brooks: {
        PieceSeq pieces = decompose(*qm.scheme, g);
        if (pieces.size() < 3) return Rational(0);
        Rational acc{0};
        Word window;
        for (std::size_t j = 0; j + 2 < pieces.size(); ++j) {
            window.letters.clear();
            for (std::size_t i = j; i < j + 3; ++i)
                window.letters.insert(window.letters.end(), pieces[i].letters.begin(),
                                      pieces[i].letters.end());
            acc += qm.weights.value(window);
        }
        return acc;
    }
    }
    return Rational(0);
}

Rational piece_value_check(const Quasimorphism& qm, const Word& p) {
    if (qm.kind != Quasimorphism::Kind::decomposable)
        throw std::invalid_argument("piece_value_check: needs a decomposable quasimorphism");
    if (!piece_in_set(*qm.scheme, p))
        throw std::invalid_argument("piece_value_check: " + to_string(p) +
                                    " is not a piece of scheme " + to_string(*qm.scheme));
    return eval(qm, p);
}

Cochain as_cochain(const Quasimorphism& qm) {
    Cochain out;
    out.degree = 1;
    out.domain = Cochain::Domain::full;
    out.eval_fn = [qm](const Tuple& t) { return eval(qm, t[0]); };
    return out;
}

Cochain coboundary1(const Quasimorphism& qm) {
    Cochain out;
    out.degree = 2;
    out.domain = Cochain::Domain::full;
    out.eval_fn = [qm](const Tuple& t) {
        return eval(qm, t[1]) - eval(qm, multiply(t[0], t[1])) + eval(qm, t[0]);
    };
    return out;
}

namespace {

int env_thread_count() {
    const char* env = std::getenv("DELTACUP_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n < 1 ? 1 : n;
}

} // namespace

DefectReport defect(const Quasimorphism& qm, int budget) {
    if (budget < 1) throw std::invalid_argument("defect: budget must be >= 1");
    std::vector<Word> words = enumerate_reduced(qm.ctx, budget);
    const std::size_t n = words.size();
    std::vector<Rational> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = eval(qm, words[i]);

    struct Best {
        Rational d{0};
        std::size_t i = 0, j = 0;
        bool any = false;
    };
    auto scan_rows = [&](std::size_t lo, std::size_t hi) {
        Best best;
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational d = rational_abs(vals[j] - eval(qm, multiply(words[i], words[j])) + vals[i]);
                if (!best.any || d > best.d) best = Best{d, i, j, true};
            }
        }
        return best;
    };

    int threads = env_thread_count();
    Best best;
    if (threads <= 1 || n < 64) {
        best = scan_rows(0, n);
    } else {
        std::vector<Best> partial(static_cast<std::size_t>(threads));
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            std::size_t lo = n * static_cast<std::size_t>(t) / static_cast<std::size_t>(threads);
            std::size_t hi = n * static_cast<std::size_t>(t + 1) / static_cast<std::size_t>(threads);
            pool.emplace_back([&, t, lo, hi] { partial[static_cast<std::size_t>(t)] = scan_rows(lo, hi); });
        }
        for (std::thread& th : pool) th.join();
        for (const Best& b : partial) {
            if (!b.any) continue;
            if (!best.any || b.d > best.d ||
                (b.d == best.d && (b.i < best.i || (b.i == best.i && b.j < best.j))))
                best = b;
        }
    }

    DefectReport report;
    report.d_hat = best.d;
    report.arg_g = words[best.i];
    report.arg_h = words[best.j];
    report.pairs_scanned = static_cast<std::uint64_t>(n) * n;
    return report;
}

} // namespace deltacup
