#include "deltacup/primitive.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace deltacup {

namespace {

// Calibration budget for the R value recorded in bundles; criterion-level
// certificates can override it with a deeper measurement.
constexpr int r_calibration_budget = 4;

Scheme eta_scheme(const Quasimorphism& qm) {
    switch (qm.kind) {
    case Quasimorphism::Kind::decomposable:
    case Quasimorphism::Kind::sms_brooks:
        return *qm.scheme;
    case Quasimorphism::Kind::homomorphism:
        // Homomorphisms decompose over single letters with the letter
        // weights as piece weights.
        return make_letters_scheme(qm.ctx);
    default:
        throw std::logic_error("eta_scheme: quasimorphism kind has no decomposition scheme");
    }
}

Rational piece_weight(const Quasimorphism& qm, const Word& piece) {
    if (qm.kind == Quasimorphism::Kind::homomorphism) {
        if (piece.length() != 1)
            throw std::logic_error("piece_weight: homomorphism pieces are single letters");
        Letter l = piece.letters[0];
        Rational v = qm.letter_weights[static_cast<std::size_t>(l.gen() - 1)];
        return l.sign() < 0 ? -v : v;
    }
    return qm.weights.value(piece);
}

Rational weight_bound(const Quasimorphism& qm) {
    switch (qm.kind) {
    case Quasimorphism::Kind::decomposable:
    case Quasimorphism::Kind::sms_brooks:
        return qm.weights.bound;
    case Quasimorphism::Kind::homomorphism: {
        Rational m(0);
        for (const Rational& w : qm.letter_weights) {
            Rational a = rational_abs(w);
            if (a > m) m = a;
        }
        return m;
    }
    case Quasimorphism::Kind::zero:
        return Rational(0);
    default:
        throw std::logic_error("weight_bound: unsupported quasimorphism kind");
    }
}

void require_aligned_omega(const Cochain& omega, const char* who) {
    if (omega.domain != Cochain::Domain::aligned)
        throw std::invalid_argument(std::string(who) + ": omega must be an aligned cochain");
    if (omega.degree < 1)
        throw std::invalid_argument(std::string(who) + ": omega must have degree >= 1");
}

// Letter end offsets of a parse: ends[j] = total length of pieces 1..j.
std::vector<std::size_t> piece_ends(const PieceSeq& pieces) {
    std::vector<std::size_t> ends(pieces.size() + 1, 0);
    for (std::size_t i = 0; i < pieces.size(); ++i)
        ends[i + 1] = ends[i] + pieces[i].letters.size();
    return ends;
}

void assign_suffix(Word& out, const Word& g, std::size_t offset) {
    out.letters.assign(g.letters.begin() + static_cast<std::ptrdiff_t>(offset), g.letters.end());
}

} // namespace

Cochain build_eta(const Quasimorphism& qm, const Cochain& omega) {
    if (qm.kind != Quasimorphism::Kind::decomposable &&
        qm.kind != Quasimorphism::Kind::homomorphism)
        throw std::invalid_argument(
            "build_eta: quasimorphism must be decomposable (or a homomorphism over letters)");
    require_aligned_omega(omega, "build_eta");
    Scheme scheme = eta_scheme(qm);

    Cochain eta;
    eta.degree = omega.degree;
    eta.domain = Cochain::Domain::aligned;
    eta.eval_fn = [qm, omega, scheme](const Tuple& args) {
        const Word& g = args[0];
        PieceSeq pieces = decompose(scheme, g);
        Tuple inner(args.size());
        for (std::size_t i = 1; i < args.size(); ++i) inner[i] = args[i];
        Rational acc(0);
        std::size_t off = 0;
        for (const Word& piece : pieces) {
            off += piece.letters.size();
            Rational lam = piece_weight(qm, piece);
            if (lam == 0) continue;
            // z_j(g): the suffix product after piece j; identity for the
            // last piece, where omega zero-extends.
            assign_suffix(inner[0], g, off);
            acc += lam * omega(inner);
        }
        return acc;
    };
    return eta;
}

Cochain build_eta_sms(const Quasimorphism& qm, const Cochain& omega) {
    if (qm.kind != Quasimorphism::Kind::sms_brooks)
        throw std::invalid_argument("build_eta_sms: quasimorphism must be of sms kind");
    require_aligned_omega(omega, "build_eta_sms");
    Scheme scheme = *qm.scheme;

    Cochain eta;
    eta.degree = omega.degree;
    eta.domain = Cochain::Domain::aligned;
    eta.eval_fn = [qm, omega, scheme](const Tuple& args) {
        const Word& g = args[0];
        PieceSeq pieces = decompose(scheme, g);
        const int K = static_cast<int>(pieces.size());
        Rational acc(0);
        if (K < 3) return acc;
        std::vector<std::size_t> ends = piece_ends(pieces);
        Tuple inner(args.size());
        for (std::size_t i = 1; i < args.size(); ++i) inner[i] = args[i];
        Word window;
        for (int j = 1; j <= K - 2; ++j) {
            // The triple window g_j g_{j+1} g_{j+2} is the letter range
            // between the piece boundaries (junctions are reduced).
            window.letters.assign(g.letters.begin() + static_cast<std::ptrdiff_t>(ends[j - 1]),
                                  g.letters.begin() + static_cast<std::ptrdiff_t>(ends[j + 2]));
            Rational lam = qm.weights.value(window);
            if (lam == 0) continue;
            assign_suffix(inner[0], g, ends[j + 2]);
            acc += lam * omega(inner);
        }
        return acc;
    };
    return eta;
}

PrimitiveBundle build_beta(const Quasimorphism& qm, const Cochain& omega) {
    require_aligned_omega(omega, "build_beta");
    PrimitiveBundle bundle{qm, omega, {}, {}, 0};
    switch (qm.kind) {
    case Quasimorphism::Kind::zero:
        bundle.eta = make_zero_cochain(omega.degree, Cochain::Domain::aligned);
        break;
    case Quasimorphism::Kind::decomposable:
    case Quasimorphism::Kind::homomorphism:
        bundle.eta = build_eta(qm, omega);
        bundle.R_used = measure_R(eta_scheme(qm), r_calibration_budget).r_hat;
        break;
    case Quasimorphism::Kind::sms_brooks:
        bundle.eta = build_eta_sms(qm, omega);
        bundle.R_used = measure_R(*qm.scheme, r_calibration_budget).r_hat;
        break;
    case Quasimorphism::Kind::brooks_direct:
        throw std::invalid_argument(
            "build_beta: direct counting quasimorphisms carry no decomposition; use the "
            "decomposable form (non-selfoverlapping w) or the sms form (selfoverlapping w)");
    }

    Cochain cup_part = cup(restrict_cochain(as_cochain(qm)), omega);
    Cochain deta = coboundary(bundle.eta);
    bundle.beta.degree = omega.degree + 1;
    bundle.beta.domain = Cochain::Domain::aligned;
    bundle.beta.eval_fn = [cup_part, deta](const Tuple& t) { return cup_part(t) + deta(t); };
    return bundle;
}

IdentityReport verify_primitive_identity(const PrimitiveBundle& bundle, int budget) {
    Cochain dbeta = coboundary(bundle.beta);
    Cochain rhs = cup(restrict_cochain(coboundary1(bundle.qm)), bundle.omega);
    IdentityReport rep;
    for_each_aligned(bundle.qm.ctx, dbeta.degree, budget, [&](const AlignedTuple& t) {
        ++rep.tuples_checked;
        Rational r = rational_abs(dbeta(t.entries) - rhs(t.entries));
        if (r > rep.max_residual) {
            rep.max_residual = r;
            rep.witness = t.entries;
        }
    });
    return rep;
}

Rational eval_beta_reduced(const PrimitiveBundle& bundle, const AlignedTuple& tuple) {
    const int k = bundle.omega.degree;
    if (tuple.degree() != k + 1)
        throw std::invalid_argument("eval_beta_reduced: tuple degree must be omega degree + 1");
    if (!is_aligned(tuple))
        throw std::invalid_argument("eval_beta_reduced: tuple is not aligned");
    if (bundle.qm.kind == Quasimorphism::Kind::zero) return Rational(0);
    if (bundle.qm.kind == Quasimorphism::Kind::brooks_direct)
        throw std::logic_error("eval_beta_reduced: bundle holds an unreduced quasimorphism kind");

    const Word& g = tuple.entries[0];
    const Word& h = tuple.entries[1];
    const Word gh = multiply(g, h);
    Scheme scheme = eta_scheme(bundle.qm);
    PieceSeq dg = decompose(scheme, g);
    PieceSeq dh = decompose(scheme, h);
    PieceSeq dgh = decompose(scheme, gh);
    Triangle tri = triangle_from(dg, dh, dgh);
    if (!tri.c2.empty())
        throw std::logic_error("eval_beta_reduced: aligned pair produced a cancelling c2");

    const int K = tri.K, L = tri.L, M = tri.M;
    const int Kp = tri.Kp, Lp = tri.Lp;
    std::vector<std::size_t> eg = piece_ends(dg);
    std::vector<std::size_t> eh = piece_ends(dh);
    std::vector<std::size_t> egh = piece_ends(dgh);

    Tuple inner(static_cast<std::size_t>(k));
    for (int i = 1; i < k; ++i) inner[i] = tuple.entries[static_cast<std::size_t>(i) + 1];
    Rational acc(0);

    if (bundle.qm.kind == Quasimorphism::Kind::sms_brooks) {
        auto window = [](const Word& word, const std::vector<std::size_t>& ends, int j) {
            Word w;
            w.letters.assign(word.letters.begin() + static_cast<std::ptrdiff_t>(ends[j - 1]),
                             word.letters.begin() + static_cast<std::ptrdiff_t>(ends[j + 2]));
            return w;
        };
        const int lo = Kp - 1 > 1 ? Kp - 1 : 1;
        for (int j = lo; j <= K - 2; ++j) {
            Rational lam = bundle.qm.weights.value(window(g, eg, j));
            if (lam == 0) continue;
            assign_suffix(inner[0], g, eg[j + 2]);
            inner[0].letters.insert(inner[0].letters.end(), h.letters.begin(), h.letters.end());
            acc += lam * bundle.omega(inner);
        }
        const int hi2 = Lp < L - 2 ? Lp : L - 2;
        for (int j = 1; j <= hi2; ++j) {
            Rational lam = bundle.qm.weights.value(window(h, eh, j));
            if (lam == 0) continue;
            assign_suffix(inner[0], h, eh[j + 2]);
            acc += lam * bundle.omega(inner);
        }
        const int hi3 = M - 2 < M - L + Lp ? M - 2 : M - L + Lp;
        for (int j = lo; j <= hi3; ++j) {
            Rational lam = bundle.qm.weights.value(window(gh, egh, j));
            if (lam == 0) continue;
            assign_suffix(inner[0], gh, egh[j + 2]);
            acc -= lam * bundle.omega(inner);
        }
        return acc;
    }

    for (int j = Kp + 1; j <= K; ++j) {
        Rational lam = piece_weight(bundle.qm, dg[static_cast<std::size_t>(j) - 1]);
        if (lam == 0) continue;
        assign_suffix(inner[0], g, eg[j]);
        inner[0].letters.insert(inner[0].letters.end(), h.letters.begin(), h.letters.end());
        acc += lam * bundle.omega(inner);
    }
    for (int j = 1; j <= Lp; ++j) {
        Rational lam = piece_weight(bundle.qm, dh[static_cast<std::size_t>(j) - 1]);
        if (lam == 0) continue;
        assign_suffix(inner[0], h, eh[j]);
        acc += lam * bundle.omega(inner);
    }
    const int hi3 = M - L + Lp;
    for (int j = Kp + 1; j <= hi3; ++j) {
        Rational lam = piece_weight(bundle.qm, dgh[static_cast<std::size_t>(j) - 1]);
        if (lam == 0) continue;
        assign_suffix(inner[0], gh, egh[j]);
        acc -= lam * bundle.omega(inner);
    }
    return acc;
}

BoundednessReport certify_boundedness(const PrimitiveBundle& bundle, int budget, int R_override) {
    const int k = bundle.omega.degree;
    BoundednessReport rep;
    rep.R_used = R_override >= 0 ? R_override : bundle.R_used;
    SupNormResult beta_sup = sup_norm(bundle.beta, bundle.qm.ctx, EvalBudget{budget, k + 1});
    SupNormResult omega_sup = sup_norm(bundle.omega, bundle.qm.ctx, EvalBudget{budget, k});
    rep.sup_beta = beta_sup.value;
    rep.witness = beta_sup.witness;
    rep.tuples_scanned = beta_sup.tuples_scanned;
    rep.omega_norm = omega_sup.value;
    // sms triple windows overhang each r-part by at most two indices, hence
    // the R + 2 factor there.
    const int per_sum = bundle.qm.kind == Quasimorphism::Kind::sms_brooks ? rep.R_used + 2
                                                                          : rep.R_used;
    rep.bound = Rational(3 * per_sum) * weight_bound(bundle.qm) * rep.omega_norm;
    rep.pass = rep.sup_beta <= rep.bound;
    return rep;
}

} // namespace deltacup
