#pragma once

// Named identity checkers. Each returns an IdentityReport; inputs outside a
// checker's validated region throw DomainError.

#include <vector>

#include "ordermap/report.hpp"

namespace ordermap::identities {

/// J_{-nu} = J_nu cos(nu pi) - N_nu sin(nu pi), with N_nu from the
/// reference evaluator. Tolerance 1e-12 relative to max(1, |J|, |N|).
IdentityReport check_eq2_roundtrip(double nu, double z);

/// (H1 + H2)/2 = J and (H1 - H2)/(2i) = N. Tolerance 1e-13 relative.
IdentityReport check_eq3_closure(double nu, double z);

/// S_N = sum_{n=-N}^{N} [J_n(z)/z^n] t^{n-1} N_{n-1}(t) against
/// (2/pi)/(t^2 - z^2). Tolerance 5e-3; secondary check that the fitted
/// symmetric-tail exponent lies in [1.8, 2.2]. Needs 0 <= z < t, N >= 10.
IdentityReport check_eq11(double z, double t, int N);

/// The same sum with t^{n-1} H^(1)_{n-1}(t): the real (J) part must vanish
/// (primary, 5e-3), the imaginary part is the check_eq11 sum (secondary).
/// Also checks H_{-n} = (-1)^n H_n for n in [-5, 5].
IdentityReport check_eq9_real(double z, double t, int N);

/// lambda^j coefficient of exp(-lambda Sigma_z1)[J_n/z^n] against the
/// order-derivative target. j = 0, 1: coefficientwise over the reliable
/// powers (1e-10). j = 2: evaluation at z in {0.5, 1, 2} (1e-4).
/// Throws TruncationError when K - M < 0.
IdentityReport check_eq3prime_order(int n, int j, int K, int M);

/// Sigma kernel residual at (z, t). Tolerance 0.
IdentityReport check_eq14_kernel(double z, double t);

/// lambda^j entry of exp(lambda Sigma_t)[t^n N_n] at each probe against the
/// lambda-Taylor target of t^nu N_nu. Tolerances 1e-10, 1e-5, 1e-4 for
/// j = 0, 1, 2; secondary k_stability compares K with K - 2.
IdentityReport check_eq15_order(int n, int j, int K, int M, const std::vector<double>& probes);

/// As check_eq15_order for t^n H^(kind)_n. Secondary recombination:
/// the mapped (H1 + H2)/2 equals the mapped t^n J_n series to 1e-12.
IdentityReport check_eq18_order(int kind, int n, int j, int K, int M,
                                const std::vector<double>& probes);

/// exp(lambda Sigma_t)[t^n N_n](t) against t^{n+1} N_{n+1}(t) for each
/// J_max. observed holds the residuals; residual = last/first, tolerance 0.5.
IdentityReport check_integer_shift(int n, int K, int M, const std::vector<int>& j_max_list,
                                   double t, double lambda = 1.0);

}  // namespace ordermap::identities
