#pragma once

// Inhomogeneous cochain algebra over a free group, in two flavours: cochains
// on all tuples of group elements ("full") and cochains on aligned tuples,
// i.e. tuples of non-identity reduced words with no cancellation at any
// junction ("aligned"). Aligned cochains follow the zero-extension
// convention: any tuple containing an identity entry evaluates to 0. All
// values are exact rationals; norms and cocycle checks are taken over finite
// enumeration budgets.

#include "deltacup/rational.hpp"
#include "deltacup/words.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace deltacup {

using Tuple = std::vector<Word>;

struct Cochain {
    enum class Domain { full, aligned };

    int degree = 0;
    Domain domain = Domain::full;
    std::function<Rational(const Tuple&)> eval_fn;
    std::optional<Rational> bound_hint;

    // Evaluates the cochain, enforcing arity and the zero-extension
    // convention on the aligned domain.
    Rational operator()(const Tuple& t) const;
};

Cochain make_zero_cochain(int degree, Cochain::Domain domain);

// Degree-0 cochain: a single constant.
Cochain make_constant_cochain(const Rational& value, Cochain::Domain domain);

// A 1-cochain supported on single letters: f(x) = weight for each listed
// letter x, f(g) = 0 for every other reduced word.
Cochain make_letter_supported_cochain(const std::vector<std::pair<Letter, Rational>>& weights,
                                      Cochain::Domain domain);

// (d f)(g_1,...,g_{n+1}) = f(g_2,...,g_{n+1})
//                        + sum_{j=1}^{n} (-1)^j f(g_1,...,g_j g_{j+1},...,g_{n+1})
//                        + (-1)^{n+1} f(g_1,...,g_n)
Cochain coboundary(const Cochain& f);

// (f cup g)(g_1,...,g_{n+m}) = f(g_1,...,g_n) * g(g_{n+1},...,g_{n+m}).
// Both factors must live on the same domain.
Cochain cup(const Cochain& f, const Cochain& g);

// Reinterprets a full cochain as an aligned one (same values on aligned
// tuples, zero-extension elsewhere).
Cochain restrict_cochain(const Cochain& f);

// Alternating projection on aligned n-cochains:
// A(f)(g_1,...,g_n) = 1/2 ( f(g_1,...,g_n)
//                           + (-1)^{ceil(n/2)} f(g_n^{-1},...,g_1^{-1}) ).
Cochain alternate(const Cochain& f);

struct EvalBudget {
    int max_total_len = 0;
    int degree = 0;
};

struct SupNormResult {
    Rational value{0};
    Tuple witness;
    std::uint64_t tuples_scanned = 0;
};

// Max of |f| over all domain tuples of f's degree with total length within
// budget (full domain includes identity entries; aligned does not, by
// definition). The witness is the first attaining tuple in enumeration
// order.
SupNormResult sup_norm(const Cochain& f, const GroupCtx& ctx, const EvalBudget& budget);

struct CocycleCheck {
    bool pass = true;
    Tuple witness;
    Rational residual{0};
    std::uint64_t tuples_checked = 0;
};

// True iff (d f) vanishes on every aligned tuple of degree f.degree + 1 and
// total length <= max_total_len. Requires an aligned cochain.
CocycleCheck is_cocycle(const Cochain& f, const GroupCtx& ctx, int max_total_len);

// ---- Deterministic pseudorandom bounded test cochains ----------------------
//
// Stable format contract. A tuple is encoded as a sequence of 16-bit signed
// units (conceptually serialized little-endian): the degree k, then for each
// word its length followed by one signed generator index per letter (+i for
// the i-th generator, -i for its inverse). The units are absorbed into a
// 64-bit state with the splitmix64 finalizer:
//
//   state = mix64(seed); for each unit u: state = mix64(state ^ uint16(u))
//
// and the value is table[state % 5] with table = (-1, -1/2, 0, 1/2, 1).

std::uint64_t mix64(std::uint64_t x);
std::vector<std::int16_t> encode_tuple(const Tuple& t);
Rational pseudorandom_value(const Tuple& t, std::uint64_t seed);

// Aligned degree-k cochain with pseudorandom values; bounded by 1.
Cochain make_pseudorandom_cochain(int degree, std::uint64_t seed);

// Bounded aligned cocycle from a spec string:
//   zero:k=K            zero K-cochain
//   cobound:k=K:seed=S  d(psi) for the pseudorandom (K-1)-cochain psi
//   qmcobound:w=WORD    restriction of d(phi_WORD), phi the signed
//                       occurrence count of WORD (degree 2)
//   cup:A+B             cup product of two specs (split at the last '+')
Cochain make_test_cocycle(std::string_view spec, const GroupCtx& ctx);

} // namespace deltacup
