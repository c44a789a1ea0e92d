#pragma once

// Barnes multiple zeta
//   zeta(s, z, omega) = sum_{n_1..n_r >= 0} (z + n_1 omega_1 + ... + n_r omega_r)^{-s}
// continued to all s != 1..r, together with the multiple gamma
// Gamma(z, omega) = exp(d/ds zeta(s, z, omega)|_{s=0}) and the multiple sine.
//
// Continuation uses the Mellin representation
//   zeta(s, z, omega) = 1/Gamma(s) * int_0^inf x^{s-1} G(x) dx,
//   G(x) = e^{-zx} / prod_j (1 - e^{-omega_j x}),
// split at a cut c. On [0, c] G is replaced by its Bernoulli expansion
// sum_n B_n(z, omega)/n! x^{n-r}, which integrates in closed form; [c, inf) is
// integrated numerically.

#include <algorithm>
#include <cmath>

#include "hizeta/formal_series.hpp"
#include "hizeta/numerics.hpp"
#include "hizeta/weights.hpp"

namespace hizeta {

namespace detail {

/// Splitting data for one (z, omega, s) evaluation.
struct MellinSplit {
    double cut = 1.0;
    int rank = 0;
    std::vector<Complex> scaled;  // B_n(z, omega) / n!, n = 0..N
};

/// The Bernoulli series converges for |x| < 2 pi / max|omega_j|; the cut keeps
/// a factor 3 margin, and stays below 4/|z| so e^{-zx} does not inflate the
/// coefficients.
inline MellinSplit make_split(Complex s, Complex z, const WeightVector& omega,
                              const PrecisionPolicy& pol) {
    MellinSplit split;
    split.rank = int(omega.rank());
    split.cut = std::min({1.0, kTwoPi / (3.0 * omega.max_abs()), 4.0 / std::max(std::abs(z), 1e-300)});
    const int needed = split.rank + int(std::ceil(std::max(0.0, -s.real()))) + 40;
    const int order = std::min(150, std::max(pol.max_terms, needed));
    split.scaled = multiple_bernoulli(z, omega, order).scaled;
    return split;
}

inline Complex lattice_kernel(double x, Complex z, const WeightVector& omega) {
    Complex denom = 1.0;
    for (const auto& w : omega) denom *= 1.0 - std::exp(-w * x);
    return std::exp(-z * x) / denom;
}

/// int_cut^inf x^{s-1} G(x) dx.
inline Complex mellin_tail(Complex s, Complex z, const WeightVector& omega, double cut, double tol,
                           const PrecisionPolicy& pol) {
    const double decay = z.real();
    const double sigma = s.real();
    auto integrand = [&](double x) {
        return std::exp((s - 1.0) * std::log(x)) * lattice_kernel(x, z, omega);
    };
    // Bound on int_x^inf |integrand|, using |1 - e^{-w x}| >= 1 - e^{-Re(w) x}.
    auto remainder = [&](double x) {
        double lattice = 1.0;
        for (const auto& w : omega) lattice /= -std::expm1(-w.real() * x);
        const double rate = decay - std::max(0.0, sigma - 1.0) / x;
        if (rate <= 0.0) return std::numeric_limits<double>::infinity();
        return lattice * std::pow(x, sigma - 1.0) * std::exp(-decay * x) / rate;
    };
    const GaussRule rule = gauss_legendre(pol.quad_points);
    const double panel = std::min(1.0, 2.0 / (1.0 + std::abs(z.imag())));
    return integrate_to_infinity(integrand, remainder, cut, tol, rule, panel);
}

inline void check_poles(Complex s, std::size_t rank) {
    for (std::size_t k = 1; k <= rank; ++k) {
        const double dist = std::abs(s - double(k));
        if (dist == 0.0)
            throw PoleError("barnes_zeta: simple pole at s = " + std::to_string(k));
        if (dist < 1e-8)
            throw NearPoleError("barnes_zeta: s within 1e-8 of the pole at s = " +
                                std::to_string(k));
    }
}

inline double tail_tolerance(const PrecisionPolicy& pol, double scale) {
    return std::max(1e-3 * pol.eps_abs * scale, 1e-300);
}

}  // namespace detail

/// zeta(s, z, omega) for Re(z) > 0 and s off the poles 1..r.
inline Complex barnes_zeta(Complex s, Complex z, const WeightVector& omega,
                           const PrecisionPolicy& pol = {}) {
    if (omega.rank() == 0) return complex_power(z, -s);
    if (!(z.real() > 0.0)) throw DomainError("barnes_zeta: Re(z) must be > 0");
    detail::check_poles(s, omega.rank());

    const auto split = detail::make_split(s, z, omega, pol);
    const int r = split.rank;

    if (is_nonpositive_integer(s)) {
        // 1/Gamma(s) vanishes; only the n = r + m head term survives the limit.
        const int m = int(-s.real());
        double factorial = 1.0;
        for (int k = 2; k <= m; ++k) factorial *= k;
        return (m % 2 == 0 ? 1.0 : -1.0) * factorial * split.scaled[std::size_t(r + m)];
    }

    const Complex log_cut = std::log(split.cut);
    Complex head = 0.0;
    for (std::size_t n = split.scaled.size(); n-- > 0;) {
        const Complex expo = s + double(int(n) - r);
        head += split.scaled[n] * std::exp(expo * log_cut) / expo;
    }
    const Complex rgamma = reciprocal_gamma(s);
    const double scale = 1.0 / std::max(std::abs(rgamma), 1e-300);
    const Complex tail =
        detail::mellin_tail(s, z, omega, split.cut, detail::tail_tolerance(pol, scale), pol);
    return rgamma * (head + tail);
}

/// zeta(-m, z, omega) = (-1)^m m! B_{m+r}(z, omega) / (m+r)!.
inline Complex barnes_zeta_special(int m, Complex z, const WeightVector& omega) {
    if (m < 0) throw DomainError("barnes_zeta_special: m must be >= 0");
    if (!(z.real() > 0.0)) throw DomainError("barnes_zeta_special: Re(z) must be > 0");
    const int r = int(omega.rank());
    const auto table = multiple_bernoulli(z, omega, m + r);
    double factorial = 1.0;
    for (int k = 2; k <= m; ++k) factorial *= k;
    return (m % 2 == 0 ? 1.0 : -1.0) * factorial * table.scaled[std::size_t(m + r)];
}

/// d/ds zeta(s, z, omega) at s = 0, from the split representation:
/// with 1/Gamma(s) = s + gamma s^2 + O(s^3) and the pole term
/// B_r/r! c^s / s of the head,
///   zeta'(0) = B_r/r! (gamma + log c) + sum_{n != r} B_n/n! c^{n-r}/(n-r)
///              + int_c^inf G(x) dx / x.
inline Complex barnes_zeta_s_derivative_at_0(Complex z, const WeightVector& omega,
                                             const PrecisionPolicy& pol = {}) {
    if (omega.rank() == 0) {
        if (!(z.real() > 0.0)) throw DomainError("barnes_zeta_s_derivative_at_0: Re(z) must be > 0");
        return -std::log(z);
    }
    if (!(z.real() >= 1e-3))
        throw DomainError("barnes_zeta_s_derivative_at_0: Re(z) must be >= 1e-3");
    const auto split = detail::make_split(0.0, z, omega, pol);
    const int r = split.rank;
    const double log_cut = std::log(split.cut);

    Complex regular = 0.0;
    for (std::size_t n = split.scaled.size(); n-- > 0;) {
        if (int(n) == r) continue;
        const int expo = int(n) - r;
        regular += split.scaled[n] * std::exp(expo * log_cut) / double(expo);
    }
    const Complex tail =
        detail::mellin_tail(0.0, z, omega, split.cut, detail::tail_tolerance(pol, 1.0), pol);
    return split.scaled[std::size_t(r)] * (kEulerGamma + log_cut) + regular + tail;
}

namespace detail {

/// Below this real part log Gamma(z, omega) is reached through the ladder
/// Gamma(z, omega) = Gamma(z + omega_j, omega) Gamma(z, omega \ omega_j).
inline constexpr double kDirectGammaMin = 0.25;

}  // namespace detail

namespace detail {

/// log Gamma(z, omega) continued in z to the whole plane off the lattice
/// points z = -(n . omega), where it has poles; below kDirectGammaMin it is
/// reached through the ladder.
inline Complex continued_log_multiple_gamma(Complex z, const WeightVector& omega,
                                            const PrecisionPolicy& pol) {
    if (omega.rank() == 0) {
        if (std::abs(z) < 1e-14) throw PoleError("multiple_gamma: pole at z = " + to_string(z));
        return -std::log(z);
    }
    if (z.real() >= kDirectGammaMin) return barnes_zeta_s_derivative_at_0(z, omega, pol);
    const std::size_t j = omega.widest();
    return continued_log_multiple_gamma(z + omega[j], omega, pol) +
           continued_log_multiple_gamma(z, omega.without(j), pol);
}

}  // namespace detail

/// log Gamma(z, omega) = zeta'(0, z, omega) for Re(z) > 0.
inline Complex log_multiple_gamma(Complex z, const WeightVector& omega,
                                  const PrecisionPolicy& pol = {}) {
    if (!(z.real() > 0.0)) throw DomainError("multiple_gamma: Re(z) must be > 0");
    return detail::continued_log_multiple_gamma(z, omega, pol);
}

inline Complex multiple_gamma(Complex z, const WeightVector& omega,
                              const PrecisionPolicy& pol = {}) {
    return std::exp(log_multiple_gamma(z, omega, pol));
}

/// log S(z, omega) = -log Gamma(z, omega) + (-1)^r log Gamma(|omega| - z, omega).
/// Both gammas are continued in z, so S is available off its zeros and poles
/// in the whole plane; the ladder S(z, omega) = S(z, omega \ omega_j) S(z + omega_j, omega)
/// always leaves the strip 0 < Re z < Re |omega| when r = 1.
inline Complex log_multiple_sine(Complex z, const WeightVector& omega,
                                 const PrecisionPolicy& pol = {}) {
    const double sign = omega.rank() % 2 == 0 ? 1.0 : -1.0;
    return -detail::continued_log_multiple_gamma(z, omega, pol) +
           sign * detail::continued_log_multiple_gamma(omega.sum() - z, omega, pol);
}

inline Complex multiple_sine(Complex z, const WeightVector& omega,
                             const PrecisionPolicy& pol = {}) {
    return std::exp(log_multiple_sine(z, omega, pol));
}

}  // namespace hizeta
