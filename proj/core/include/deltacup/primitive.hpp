#pragma once

// Primitive construction for quasimorphism cup products. Given a
// decomposition-backed quasimorphism phi and an aligned k-cocycle omega, a
// transfer cochain eta is built from phi's piece weights so that
// beta = restrict(phi) cup omega + d(eta) satisfies d(beta) = d(phi) cup
// omega exactly. The module verifies that identity over enumeration budgets,
// re-evaluates beta through the reduced three-sum form driven by the
// (g,h1)-triangle, and certifies beta's boundedness with an explicit
// constant derived from the triangle remainder bound.

#include "deltacup/cochain.hpp"
#include "deltacup/decomp.hpp"
#include "deltacup/qm.hpp"
#include "deltacup/rational.hpp"

#include <cstdint>

namespace deltacup {

// beta = restrict(phi) cup omega + d(eta), all aligned. R_used is the
// triangle remainder bound backing the boundedness certificate; build_beta
// fills it from a calibration measure_R run on the quasimorphism's scheme.
struct PrimitiveBundle {
    Quasimorphism qm;
    Cochain omega; // aligned degree k, expected to be a cocycle
    Cochain eta;   // aligned degree k
    Cochain beta;  // aligned degree k + 1
    int R_used = 0;
};

// eta(g, h_1..h_{k-1}) = sum_{j=1}^{K} lambda(g_j) * omega(z_j(g), h_1..h_{k-1})
// where (g_1..g_K) is the scheme parse of g and z_j(g) = g_{j+1}...g_K is the
// suffix product after piece j. The j = K term has z_K(g) = id and vanishes
// by zero-extension. Accepts decomposable and homomorphism quasimorphisms
// (the latter over the single-letter scheme); omega must be aligned of
// degree >= 1.
Cochain build_eta(const Quasimorphism& qm, const Cochain& omega);

// Triple-window variant for sms quasimorphisms:
// eta(g, ...) = sum_{j=1}^{K-2} lambda3(g_j g_{j+1} g_{j+2}) * omega(z_{j+2}(g), ...),
// zero when K < 3.
Cochain build_eta_sms(const Quasimorphism& qm, const Cochain& omega);

// Assembles the bundle, selecting the eta formula by quasimorphism kind.
// Rejects brooks_direct (use the decomposable form for non-selfoverlapping
// words or the sms form for selfoverlapping ones) and non-aligned omega.
PrimitiveBundle build_beta(const Quasimorphism& qm, const Cochain& omega);

struct IdentityReport {
    Rational max_residual{0};
    Tuple witness; // empty when the residual is 0
    std::uint64_t tuples_checked = 0;

    bool pass() const { return max_residual == 0; }
};

// Exact scan of |d(beta) - restrict(d1 phi) cup omega| over every aligned
// (k+2)-tuple of total length <= budget.
IdentityReport verify_primitive_identity(const PrimitiveBundle& bundle, int budget);

// beta via the reduced three-sum form. With (g_1..g_K), (h_1..h_L) and
// ((gh)_1..(gh)_M) the parses of g = t[0], h = t[1] and gh, and K' = |c1|,
// L' = |r2| from the (g,h)-triangle:
//   decomposable:  sum_{j=K'+1}^{K}       lambda(g_j)    omega(z_j(g)h, ...)
//                + sum_{j=1}^{L'}         lambda(h_j)    omega(z_j(h), ...)
//                - sum_{j=K'+1}^{M-L+L'}  lambda((gh)_j) omega(z_j(gh), ...)
//   sms:           as above with triple-window weights lambda3(x_j x_{j+1} x_{j+2}),
//                  suffixes z_{j+2}(x), and ranges [max(1,K'-1), K-2],
//                  [1, min(L', L-2)] and [max(1,K'-1), min(M-2, M-L+L')].
// Agrees with the definitional beta on every aligned tuple when omega is a
// cocycle. Throws when the tuple is not aligned or has the wrong degree.
Rational eval_beta_reduced(const PrimitiveBundle& bundle, const AlignedTuple& tuple);

struct BoundednessReport {
    Rational sup_beta{0};
    Tuple witness;
    Rational omega_norm{0};
    Rational bound{0};
    int R_used = 0;
    bool pass = false;
    std::uint64_t tuples_scanned = 0;
};

// sup_beta = sup |beta| over aligned (k+1)-tuples within budget, compared
// against 3 * R * max|lambda| * ||omega||_budget (decomposable and
// homomorphism kinds) or 3 * (R + 2) * max|lambda3| * ||omega||_budget (sms,
// whose triple windows overhang each triangle r-part by up to two indices).
// R is bundle.R_used unless a non-negative R_override is supplied.
BoundednessReport certify_boundedness(const PrimitiveBundle& bundle, int budget,
                                      int R_override = -1);

} // namespace deltacup
