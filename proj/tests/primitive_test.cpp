#include "doctest.h"

#include "deltacup/primitive.hpp"
#include "test_util.hpp"

#include <numeric>
#include <vector>

using namespace deltacup;

namespace {

const GroupCtx ctx2{2};

Word w(const char* text) { return parse_word(text, ctx2); }

Rational rat(const char* text) { return parse_rational(text); }

Quasimorphism decomposable_brooks_ab() {
    Scheme scheme = parse_scheme("brooks:w=ab", ctx2);
    return make_decomposable_qm(scheme, brooks_piece_weights(scheme));
}

// Aligned constant-1 cochain (zero-extension still applies through the
// wrapper).
Cochain ones(int degree) {
    Cochain f;
    f.degree = degree;
    f.domain = Cochain::Domain::aligned;
    f.eval_fn = [](const Tuple&) { return Rational(1); };
    f.bound_hint = Rational(1);
    return f;
}

// Word length as an aligned 1-cochain: an exact (unbounded) cocycle, since
// lengths add across reduced junctions.
Cochain length_cochain() {
    Cochain f;
    f.degree = 1;
    f.domain = Cochain::Domain::aligned;
    f.eval_fn = [](const Tuple& t) { return Rational(t[0].length()); };
    return f;
}

AlignedTuple tup(std::initializer_list<const char*> words) {
    AlignedTuple t;
    for (const char* text : words) t.entries.push_back(w(text));
    return t;
}

// The three sums of the reduced form without the head/tail truncation, kept
// as term lists so the cancellation structure can be probed directly.
struct TermSums {
    std::vector<Rational> s1, s2, s3;

    Rational total() const {
        Rational acc(0);
        for (const Rational& v : s1) acc += v;
        for (const Rational& v : s2) acc += v;
        for (const Rational& v : s3) acc -= v;
        return acc;
    }
};

std::vector<std::size_t> ends_of(const PieceSeq& pieces) {
    std::vector<std::size_t> ends(pieces.size() + 1, 0);
    for (std::size_t i = 0; i < pieces.size(); ++i)
        ends[i + 1] = ends[i] + pieces[i].letters.size();
    return ends;
}

Word suffix_concat(const Word& x, std::size_t off, const Word* tail) {
    Word out;
    out.letters.assign(x.letters.begin() + static_cast<std::ptrdiff_t>(off), x.letters.end());
    if (tail)
        out.letters.insert(out.letters.end(), tail->letters.begin(), tail->letters.end());
    return out;
}

TermSums full_sums_dec(const Quasimorphism& qm, const Cochain& omega, const Word& g,
                       const Word& h) {
    const Word gh = multiply(g, h);
    const Scheme& scheme = *qm.scheme;
    TermSums out;
    auto sum_over = [&](const Word& word, std::vector<Rational>& dst, const Word* tail) {
        PieceSeq pieces = decompose(scheme, word);
        std::vector<std::size_t> ends = ends_of(pieces);
        for (std::size_t j = 1; j <= pieces.size(); ++j) {
            Rational lam = qm.weights.value(pieces[j - 1]);
            Tuple arg{suffix_concat(word, ends[j], tail)};
            dst.push_back(lam * omega(arg));
        }
    };
    sum_over(g, out.s1, &h);
    sum_over(h, out.s2, nullptr);
    sum_over(gh, out.s3, nullptr);
    return out;
}

TermSums full_sums_sms(const Quasimorphism& qm, const Cochain& omega, const Word& g,
                       const Word& h) {
    const Word gh = multiply(g, h);
    const Scheme& scheme = *qm.scheme;
    TermSums out;
    auto sum_over = [&](const Word& word, std::vector<Rational>& dst, const Word* tail) {
        PieceSeq pieces = decompose(scheme, word);
        std::vector<std::size_t> ends = ends_of(pieces);
        const int K = static_cast<int>(pieces.size());
        for (int j = 1; j <= K - 2; ++j) {
            Word window;
            window.letters.assign(word.letters.begin() + static_cast<std::ptrdiff_t>(ends[j - 1]),
                                  word.letters.begin() + static_cast<std::ptrdiff_t>(ends[j + 2]));
            Rational lam = qm.weights.value(window);
            Tuple arg{suffix_concat(word, ends[j + 2], tail)};
            dst.push_back(lam * omega(arg));
        }
    };
    sum_over(g, out.s1, &h);
    sum_over(h, out.s2, nullptr);
    sum_over(gh, out.s3, nullptr);
    return out;
}

} // namespace

TEST_CASE("transfer cochain: pinned values, degeneracies and errors") {
    Quasimorphism rolli = parse_qm("rolli", ctx2);
    Cochain omega = ones(1);
    Cochain eta = build_eta(rolli, omega);
    CHECK(eta.degree == 1);
    CHECK(eta.domain == Cochain::Domain::aligned);

    // (aa)(b): the last piece's suffix is the identity and contributes 0.
    CHECK(eta(Tuple{w("aab")}) == 1);
    CHECK(eta(Tuple{w("aB")}) == 1);
    CHECK(eta(Tuple{w("BBa")}) == -1); // weight of BB is -1, omega(a) = 1
    CHECK(eta(Tuple{w("aaa")}) == 0);  // single piece
    CHECK(eta(Tuple{Word{}}) == 0);    // zero-extension

    Cochain eta2 = build_eta(rolli, ones(2));
    CHECK(eta2(Tuple{w("aab"), w("b")}) == 1);
    CHECK(eta2(Tuple{w("aaa"), w("b")}) == 0);

    // Vanishing weights give a vanishing transfer cochain.
    Quasimorphism flat = make_decomposable_qm(parse_scheme("rolli", ctx2), PieceWeights{});
    Cochain eta0 = build_eta(flat, omega);
    for (const char* text : {"a", "aab", "abAB", "bbbb"})
        CHECK(eta0(Tuple{w(text)}) == 0);

    // Homomorphisms decompose over letters.
    Quasimorphism hom = parse_qm("hom:a=1", ctx2);
    Cochain etah = build_eta(hom, omega);
    CHECK(etah(Tuple{w("ab")}) == 1);  // weight(a)*omega(b) + weight(b)*0
    CHECK(etah(Tuple{w("Ab")}) == -1);

    Cochain full_omega = ones(1);
    full_omega.domain = Cochain::Domain::full;
    CHECK_THROWS_AS(build_eta(rolli, full_omega), std::invalid_argument);
    CHECK_THROWS_AS(build_eta(rolli, make_constant_cochain(rat("1"), Cochain::Domain::aligned)),
                    std::invalid_argument); // degree 0
    CHECK_THROWS_AS(build_eta(parse_qm("sms:w=aba", ctx2), omega), std::invalid_argument);
    CHECK_THROWS_AS(build_eta_sms(rolli, omega), std::invalid_argument);
}

TEST_CASE("transfer cochain: triple-window pins") {
    Quasimorphism sms = parse_qm("sms:w=aba", ctx2);
    Cochain omega = ones(1);
    Cochain eta = build_eta_sms(sms, omega);

    CHECK(eta(Tuple{w("ababa")}) == 1);  // window (a,b,a) at j=1, omega(ba)
    CHECK(eta(Tuple{w("ABABA")}) == -1); // inverse window
    CHECK(eta(Tuple{w("abab")}) == 1);
    CHECK(eta(Tuple{w("aa")}) == 0);   // fewer than three pieces
    CHECK(eta(Tuple{w("bbbb")}) == 0); // no scoring window

    Cochain eta2 = build_eta_sms(sms, ones(2));
    CHECK(eta2(Tuple{w("ababa"), w("b")}) == 1);
}

TEST_CASE("bundle assembly: kinds, degrees and calibrated R") {
    Cochain omega = make_test_cocycle("qmcobound:w=ba", ctx2);

    PrimitiveBundle dec = build_beta(decomposable_brooks_ab(), omega);
    CHECK(dec.eta.degree == 2);
    CHECK(dec.beta.degree == 3);
    CHECK(dec.beta.domain == Cochain::Domain::aligned);
    CHECK(dec.R_used == 3);

    CHECK(build_beta(parse_qm("rolli", ctx2), omega).R_used == 1);
    CHECK(build_beta(parse_qm("sms:w=aba", ctx2), omega).R_used == 1);
    CHECK(build_beta(parse_qm("hom:a=1", ctx2), omega).R_used == 0);

    PrimitiveBundle zero = build_beta(parse_qm("zero", ctx2), omega);
    CHECK(zero.R_used == 0);
    CHECK(zero.beta(tup({"a", "b", "a"}).entries) == 0);
    CHECK(zero.eta(Tuple{w("ab"), w("b")}) == 0);

    CHECK_THROWS_AS(build_beta(parse_qm("brooks:w=ab", ctx2), omega), std::invalid_argument);
    Cochain full_omega = ones(2);
    full_omega.domain = Cochain::Domain::full;
    CHECK_THROWS_AS(build_beta(parse_qm("rolli", ctx2), full_omega), std::invalid_argument);
}

TEST_CASE("coboundary identity: exact zero residual") {
    std::vector<Quasimorphism> qms{decomposable_brooks_ab(), parse_qm("rolli", ctx2),
                                   parse_qm("sms:w=aba", ctx2), parse_qm("hom:a=1", ctx2)};

    Cochain qmco = make_test_cocycle("qmcobound:w=ba", ctx2);
    for (const Quasimorphism& qm : qms) {
        PrimitiveBundle bundle = build_beta(qm, qmco);
        IdentityReport rep = verify_primitive_identity(bundle, 5);
        CHECK(rep.pass());
        CHECK(rep.max_residual == 0);
        CHECK(rep.tuples_checked == 1404); // aligned 4-tuples of total length <= 5
    }

    IdentityReport r1 =
        verify_primitive_identity(build_beta(parse_qm("rolli", ctx2),
                                             make_test_cocycle("cobound:k=1:seed=2", ctx2)),
                                  5);
    CHECK(r1.pass());
    CHECK(r1.tuples_checked == 2304);

    CHECK(verify_primitive_identity(build_beta(parse_qm("sms:w=aba", ctx2),
                                               make_test_cocycle("cobound:k=2:seed=7", ctx2)),
                                    5)
              .pass());
    CHECK(verify_primitive_identity(build_beta(decomposable_brooks_ab(),
                                               make_test_cocycle("zero:k=3", ctx2)),
                                    5)
              .pass());
    CHECK(verify_primitive_identity(build_beta(parse_qm("zero", ctx2), qmco), 5).pass());

    // A homomorphism has vanishing degree-1 coboundary, so its beta must
    // itself be a cocycle.
    PrimitiveBundle hom = build_beta(parse_qm("hom:a=1", ctx2), qmco);
    CHECK(is_cocycle(hom.beta, ctx2, 5).pass);
}

TEST_CASE("corrupting the transfer cochain: identity blind, reduced form detects") {
    Quasimorphism qm = parse_qm("rolli", ctx2);
    Cochain omega = make_test_cocycle("qmcobound:w=ba", ctx2);
    PrimitiveBundle bundle = build_beta(qm, omega);

    Quasimorphism corrupted = qm;
    corrupted.weights.bound = rat("2");
    corrupted.weights.set(w("aa"), rat("2")); // true syllable weight is 1

    PrimitiveBundle mutated = bundle;
    mutated.eta = build_eta(corrupted, omega);
    Cochain cup_part = cup(restrict_cochain(as_cochain(qm)), omega);
    Cochain deta = coboundary(mutated.eta);
    mutated.beta.eval_fn = [cup_part, deta](const Tuple& t) { return cup_part(t) + deta(t); };

    // The coboundary identity cannot see the corruption: the transfer term
    // enters beta as a coboundary, and the coboundary of a coboundary
    // vanishes identically.
    IdentityReport rep = verify_primitive_identity(mutated, 4);
    CHECK(rep.pass());

    // The reduced form evaluates through the true weights and disagrees.
    bool detected = false;
    AlignedTuple witness;
    for_each_aligned(ctx2, 3, 5, [&](const AlignedTuple& t) {
        if (detected) return;
        if (eval_beta_reduced(mutated, t) != mutated.beta(t.entries)) {
            detected = true;
            witness = t;
        }
    });
    CHECK(detected);
    REQUIRE(!witness.entries.empty());
    CHECK(eval_beta_reduced(bundle, witness) == bundle.beta(witness.entries));
}

TEST_CASE("reduced form equals the definitional cochain") {
    // Pinned: syllable weights against the length cocycle.
    PrimitiveBundle rolli_len = build_beta(parse_qm("rolli", ctx2), length_cochain());
    CHECK(eval_beta_reduced(rolli_len, tup({"aab", "b"})) == 1);
    CHECK(rolli_len.beta(tup({"aab", "b"}).entries) == 1);

    // Pinned: the triple-window tail range must keep the two straddling
    // windows; truncating it (as if the windows aligned with the r-part)
    // would give 0 here instead of the definitional -1.
    PrimitiveBundle sms_len = build_beta(parse_qm("sms:w=aba", ctx2), length_cochain());
    CHECK(sms_len.beta(tup({"aba", "bab"}).entries) == -1);
    CHECK(eval_beta_reduced(sms_len, tup({"aba", "bab"})) == -1);

    std::vector<Quasimorphism> qms{decomposable_brooks_ab(), parse_qm("rolli", ctx2),
                                   parse_qm("sms:w=aba", ctx2), parse_qm("hom:a=1", ctx2)};
    std::vector<const char*> omegas{"qmcobound:w=ba", "cobound:k=1:seed=2", "zero:k=3"};
    for (const Quasimorphism& qm : qms) {
        for (const char* spec : omegas) {
            Cochain omega = make_test_cocycle(spec, ctx2);
            PrimitiveBundle bundle = build_beta(qm, omega);
            for_each_aligned(ctx2, omega.degree + 1, 5, [&](const AlignedTuple& t) {
                CHECK(eval_beta_reduced(bundle, t) == bundle.beta(t.entries));
            });
        }
    }

    // Deeper pseudorandom samples for the occurrence-piece scheme.
    PrimitiveBundle brooks = build_beta(decomposable_brooks_ab(),
                                        make_test_cocycle("qmcobound:w=ba", ctx2));
    testutil::Rng rng(0xbe7au);
    for (int i = 0; i < 50; ++i) {
        AlignedTuple t = testutil::random_aligned_tuple(rng, ctx2, 3, 3);
        CHECK(eval_beta_reduced(brooks, t) == brooks.beta(t.entries));
    }

    AlignedTuple bad = tup({"a", "A"}); // cancelling junction
    CHECK_THROWS_AS(eval_beta_reduced(rolli_len, bad), std::invalid_argument);
    CHECK_THROWS_AS(eval_beta_reduced(rolli_len, tup({"a", "b", "a"})), std::invalid_argument);
}

TEST_CASE("head and tail terms cancel pairwise") {
    // The reduced form drops exactly the leading terms shared between the
    // parses of g and gh and the trailing terms shared between h and gh.
    // Those drops are valid for arbitrary omega (the paired terms agree
    // literally); matching the definitional cochain additionally needs the
    // cocycle relation, checked here with the length cocycle.
    Cochain rand_omega = make_pseudorandom_cochain(1, 3);
    Cochain len_omega = length_cochain();

    std::vector<Quasimorphism> dec_qms{decomposable_brooks_ab(), parse_qm("rolli", ctx2)};
    for (const Quasimorphism& qm : dec_qms) {
        PrimitiveBundle rb = build_beta(qm, rand_omega);
        PrimitiveBundle lb = build_beta(qm, len_omega);
        for_each_aligned(ctx2, 2, 6, [&](const AlignedTuple& t) {
            const Word& g = t.entries[0];
            const Word& h = t.entries[1];
            Triangle tri = triangle(*qm.scheme, g, h);
            TermSums sums = full_sums_dec(qm, rand_omega, g, h);
            for (int j = 1; j <= tri.Kp; ++j) CHECK(sums.s1[j - 1] == sums.s3[j - 1]);
            for (int j = tri.Lp + 1; j <= tri.L; ++j)
                CHECK(sums.s2[j - 1] == sums.s3[j - 1 + tri.M - tri.L]);
            CHECK(sums.total() == eval_beta_reduced(rb, t));

            TermSums len_sums = full_sums_dec(qm, len_omega, g, h);
            CHECK(len_sums.total() == lb.beta(t.entries));
        });
    }

    Quasimorphism sms = parse_qm("sms:w=aba", ctx2);
    PrimitiveBundle rb = build_beta(sms, rand_omega);
    PrimitiveBundle lb = build_beta(sms, len_omega);
    for_each_aligned(ctx2, 2, 6, [&](const AlignedTuple& t) {
        const Word& g = t.entries[0];
        const Word& h = t.entries[1];
        Triangle tri = triangle(*sms.scheme, g, h);
        TermSums sums = full_sums_sms(sms, rand_omega, g, h);
        for (int j = 1; j <= tri.Kp - 2; ++j) CHECK(sums.s1[j - 1] == sums.s3[j - 1]);
        for (int j = tri.Lp + 1; j <= tri.L - 2; ++j)
            CHECK(sums.s2[j - 1] == sums.s3[j - 1 + tri.M - tri.L]);
        CHECK(sums.total() == eval_beta_reduced(rb, t));

        TermSums len_sums = full_sums_sms(sms, len_omega, g, h);
        CHECK(len_sums.total() == lb.beta(t.entries));
    });
}

TEST_CASE("boundedness certificates") {
    Cochain omega = make_test_cocycle("qmcobound:w=ba", ctx2);

    BoundednessReport dec = certify_boundedness(build_beta(decomposable_brooks_ab(), omega), 5);
    CHECK(dec.pass);
    CHECK(dec.R_used == 3);
    CHECK(dec.omega_norm == 1);
    CHECK(dec.bound == 9);
    CHECK(dec.sup_beta <= dec.bound);

    BoundednessReport rolli = certify_boundedness(build_beta(parse_qm("rolli", ctx2), omega), 5);
    CHECK(rolli.pass);
    CHECK(rolli.bound == 3);

    BoundednessReport sms = certify_boundedness(build_beta(parse_qm("sms:w=aba", ctx2), omega), 5);
    CHECK(sms.pass);
    CHECK(sms.bound == 9); // 3 * (R + 2) with R = 1

    BoundednessReport hom = certify_boundedness(build_beta(parse_qm("hom:a=1", ctx2), omega), 5);
    CHECK(hom.pass);
    CHECK(hom.sup_beta == 0); // the letter-scheme bundle collapses exactly
    CHECK(hom.bound == 0);

    BoundednessReport zero = certify_boundedness(build_beta(parse_qm("zero", ctx2), omega), 5);
    CHECK(zero.pass);
    CHECK(zero.sup_beta == 0);

    BoundednessReport wide = certify_boundedness(build_beta(parse_qm("rolli", ctx2), omega), 4, 7);
    CHECK(wide.R_used == 7);
    CHECK(wide.bound == 21);
}
