#pragma once

// Scalar kernel: principal complex powers, Hurwitz/Riemann zeta with
// continuation, log-gamma, a prime sieve and the quadrature helpers used by
// the Mellin-split continuations.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "hizeta/error.hpp"
#include "hizeta/precision.hpp"

namespace hizeta {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// True when z is one of 0, -1, -2, ... exactly.
inline bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

inline std::string to_string(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

/// base^expo on the principal branch. Only defined for Re(base) > 0 so that
/// no evaluation ever sits on or crosses the branch cut.
inline Complex complex_power(Complex base, Complex expo) {
    if (!(base.real() > 0.0))
        throw DomainError("complex_power: Re(base) must be > 0, got " + to_string(base));
    return std::exp(expo * std::log(base));
}

/// log(1 + w) without the cancellation of std::log for tiny |w|.
inline Complex log1p(Complex w) {
    if (std::abs(w) < 1e-4) {
        Complex term = w, sum = 0.0;
        for (int k = 1; k <= 8; ++k) {
            sum += term / double(k);
            term *= -w;
        }
        return sum;
    }
    return std::log(1.0 + w);
}

/// sin(pi z) with exact zeros at the integers.
inline Complex sin_pi(Complex z) {
    double x = z.real();
    const double n = std::round(x);
    x -= n;
    Complex val = std::sin(kPi * Complex(x, z.imag()));
    if (std::fmod(std::abs(n), 2.0) == 1.0) val = -val;
    return val;
}

namespace detail {

/// B_{2k}/(2k)! for k = 0..kMaxBernoulli via 2 zeta(2k)/(2pi)^{2k}.
inline constexpr int kMaxBernoulli = 40;

inline const std::array<double, kMaxBernoulli + 1>& even_bernoulli_over_factorial() {
    static const std::array<double, kMaxBernoulli + 1> table = [] {
        std::array<double, kMaxBernoulli + 1> t{};
        t[0] = 1.0;
        for (int k = 1; k <= kMaxBernoulli; ++k) {
            long double zeta2k;
            if (k == 1) {
                zeta2k = std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 6.0L;
            } else if (k == 2) {
                zeta2k = std::pow(std::numbers::pi_v<long double>, 4) / 90.0L;
            } else if (k == 3) {
                zeta2k = std::pow(std::numbers::pi_v<long double>, 6) / 945.0L;
            } else {
                zeta2k = 0.0L;
                for (int n = 400; n >= 1; --n) zeta2k += std::pow((long double)n, -2.0L * k);
            }
            const long double mag =
                2.0L * zeta2k / std::pow(2.0L * std::numbers::pi_v<long double>, 2.0L * k);
            t[k] = double((k % 2 == 1) ? mag : -mag);
        }
        return t;
    }();
    return table;
}


/// Neumaier summation; long prime sums otherwise drop terms below half an ulp.
struct CompensatedSum {
    Complex sum = 0.0, carry = 0.0;

    static double step(double& s, double x) {
        const double t = s + x;
        const double c = std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
        s = t;
        return c;
    }
    void add(Complex x) {
        double re = sum.real(), im = sum.imag();
        const double cr = step(re, x.real()), ci = step(im, x.imag());
        sum = {re, im};
        carry += Complex(cr, ci);
    }
    Complex value() const { return sum + carry; }
};

}  // namespace detail

/// Hurwitz zeta sum_{n>=0} (a+n)^{-s}, continued to s != 1 by Euler-Maclaurin.
/// The summation point is shifted until |a+M| >= max(12, |s|); correction
/// terms run until they stop contributing at double precision (cap 30).
inline Complex hurwitz_zeta(Complex s, Complex a, const PrecisionPolicy& pol = {}) {
    (void)pol;
    if (s == Complex(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at s = 1");
    if (!(a.real() > 0.0)) throw DomainError("hurwitz_zeta: Re(a) must be > 0");

    // Left of the axis the head sum cancels down to the result, so keep it short.
    const double radius = s.real() < 0.0 ? std::max(4.0, std::abs(s) / 2.5) : std::max(12.0, std::abs(s));
    int shift = 0;
    while (std::abs(a + double(shift)) < radius) ++shift;

    Complex direct = 0.0;
    for (int n = shift - 1; n >= 0; --n) direct += complex_power(a + double(n), -s);

    const Complex base = a + double(shift);
    const Complex log_base = std::log(base);
    const Complex base_pow = std::exp(-s * log_base);  // base^{-s}
    Complex result = direct + base * base_pow / (s - 1.0) + 0.5 * base_pow;

    const auto& b2k = detail::even_bernoulli_over_factorial();
    const Complex inv_sq = 1.0 / (base * base);
    Complex rising = s;                // s (s+1) ... (s+2k-2)
    Complex power = base_pow / base;   // base^{-s-2k+1}
    double smallest = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 30; ++k) {
        const Complex term = b2k[k] * rising * power;
        if (std::abs(term) > smallest) break;  // asymptotic series turned
        smallest = std::abs(term);
        result += term;
        if (std::abs(term) <= 1e-17 * std::abs(result)) break;
        rising *= (s + double(2 * k - 1)) * (s + double(2 * k));
        power *= inv_sq;
    }
    return result;
}

inline Complex log_gamma(Complex s);

/// Riemann zeta. Uses the reflection formula only far left (Re s < -4), where
/// Euler-Maclaurin loses accuracy to cancellation.
inline Complex riemann_zeta(Complex s, const PrecisionPolicy& pol = {}) {
    if (s == Complex(1.0, 0.0)) throw PoleError("riemann_zeta: pole at s = 1");
    if (s.real() < -4.0) {
        if (s.imag() == 0.0 && std::fmod(s.real(), 2.0) == 0.0) return 0.0;
        const Complex one_minus = 1.0 - s;
        return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_gamma(one_minus)) *
               sin_pi(0.5 * s) * riemann_zeta(one_minus, pol);
    }
    return hurwitz_zeta(s, 1.0, pol);
}

/// zeta(s) - 1 without cancellation in the half-plane Re(s) > 1.
inline Complex zeta_minus_one(Complex s, const PrecisionPolicy& pol = {}) {
    if (s.real() > 1.0) {
        if (s.real() > 40.0) {
            Complex sum = 0.0;
            for (int n = 2; n <= 8; ++n) sum += std::exp(-s * std::log(double(n)));
            return sum;
        }
        return hurwitz_zeta(s, 2.0, pol);
    }
    return riemann_zeta(s, pol) - 1.0;
}

/// log Gamma(s), continuous off the negative real axis. Stirling series at
/// Re >= 15 after upward promotion by the recurrence.
inline Complex log_gamma(Complex s) {
    if (is_nonpositive_integer(s))
        throw PoleError("log_gamma: pole at s = " + to_string(s));
    Complex correction = 0.0;
    Complex x = s;
    while (x.real() < 15.0) {
        correction += std::log(x);
        x += 1.0;
    }
    const auto& b2k = detail::even_bernoulli_over_factorial();
    const Complex inv = 1.0 / x, inv_sq = inv * inv;
    Complex series = 0.0, power = inv;
    double factorial = 2.0;  // (2k)!
    for (int k = 1; k <= 14; ++k) {
        // B_{2k} / (2k (2k-1) x^{2k-1})
        series += b2k[k] * factorial / double(2 * k * (2 * k - 1)) * power;
        power *= inv_sq;
        factorial *= double(2 * k + 1) * double(2 * k + 2);
    }
    return (x - 0.5) * std::log(x) - x + 0.5 * std::log(kTwoPi) + series - correction;
}

inline Complex gamma(Complex s) { return std::exp(log_gamma(s)); }

/// 1/Gamma(s), entire; exactly zero at the non-positive integers.
inline Complex reciprocal_gamma(Complex s) {
    if (is_nonpositive_integer(s)) return 0.0;
    return std::exp(-log_gamma(s));
}

struct PrimeList {
    std::int64_t bound = 0;
    std::vector<std::uint32_t> primes;
};

/// Sieve of Eratosthenes over odd numbers.
inline PrimeList primes_up_to(std::int64_t n) {
    if (n < 2) throw DomainError("primes_up_to: bound must be >= 2");
    if (n > 4'000'000'000LL) throw CapacityError("primes_up_to: bound exceeds 4e9");
    PrimeList out;
    out.bound = n;
    const std::int64_t half = (n - 1) / 2;  // index i <-> 2i+1, i >= 1
    std::vector<bool> composite(std::size_t(half) + 1, false);
    for (std::int64_t i = 1; (2 * i + 1) * (2 * i + 1) <= n; ++i) {
        if (composite[std::size_t(i)]) continue;
        const std::int64_t p = 2 * i + 1;
        for (std::int64_t j = (p * p - 1) / 2; j <= half; j += p) composite[std::size_t(j)] = true;
    }
    out.primes.reserve(std::size_t(1.3 * double(n) / std::log(double(n))) + 8);
    out.primes.push_back(2);
    for (std::int64_t i = 1; i <= half; ++i)
        if (!composite[std::size_t(i)]) out.primes.push_back(std::uint32_t(2 * i + 1));
    return out;
}

/// Calls f(p) for every prime p <= n in increasing order. Segmented, so memory
/// stays O(sqrt n).
template <class F>
void for_each_prime(std::int64_t n, F&& f) {
    if (n < 2) throw DomainError("for_each_prime: bound must be >= 2");
    if (n > 4'000'000'000LL) throw CapacityError("for_each_prime: bound exceeds 4e9");
    std::int64_t root = std::int64_t(std::sqrt(double(n)));
    while (root * root > n) --root;
    while ((root + 1) * (root + 1) <= n) ++root;
    const auto base = primes_up_to(std::max<std::int64_t>(root, 2)).primes;

    f(std::uint32_t(2));
    constexpr std::int64_t kSegment = std::int64_t(1) << 18;  // odd numbers per segment
    std::vector<std::uint8_t> composite(std::size_t(kSegment), 0);
    for (std::int64_t lo = 3; lo <= n; lo += 2 * kSegment) {
        const std::int64_t hi = std::min(n, lo + 2 * kSegment - 2);
        std::fill(composite.begin(), composite.end(), std::uint8_t(0));
        for (std::size_t k = 1; k < base.size(); ++k) {
            const std::int64_t p = base[k];
            if (p * p > hi) break;
            std::int64_t start = std::max(p * p, (lo + p - 1) / p * p);
            if (start % 2 == 0) start += p;
            for (std::int64_t j = start; j <= hi; j += 2 * p) composite[std::size_t((j - lo) / 2)] = 1;
        }
        for (std::int64_t v = lo; v <= hi; v += 2)
            if (!composite[std::size_t((v - lo) / 2)]) f(std::uint32_t(v));
    }
}

// ---------------------------------------------------------------- quadrature

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n.
inline GaussRule gauss_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(std::size_t(n));
    rule.weights.resize(std::size_t(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[std::size_t(i)] = -x;
        rule.nodes[std::size_t(n - 1 - i)] = x;
        rule.weights[std::size_t(i)] = w;
        rule.weights[std::size_t(n - 1 - i)] = w;
    }
    return rule;
}

template <class F>
Complex apply_rule(const GaussRule& rule, F& f, double a, double b) {
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    Complex sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

namespace detail {

template <class F>
Complex adaptive_panel(const GaussRule& rule, F& f, double a, double b, Complex whole, double tol,
                       int depth) {
    const double mid = 0.5 * (a + b);
    const Complex left = apply_rule(rule, f, a, mid);
    const Complex right = apply_rule(rule, f, mid, b);
    if (std::abs(left + right - whole) <= tol || depth >= 40) return left + right;
    return adaptive_panel(rule, f, a, mid, left, 0.5 * tol, depth + 1) +
           adaptive_panel(rule, f, mid, b, right, 0.5 * tol, depth + 1);
}

}  // namespace detail

/// Adaptive Gauss-Legendre on [a, b] by bisection until halves agree to tol.
template <class F>
Complex integrate(F&& f, double a, double b, double tol, const GaussRule& rule) {
    return detail::adaptive_panel(rule, f, a, b, apply_rule(rule, f, a, b), tol, 0);
}

/// Integral over [a, inf) marched in unit panels until `remainder(x)`, an
/// upper bound on the integral of |f| over [x, inf), drops below tol/10.
template <class F, class Bound>
Complex integrate_to_infinity(F&& f, Bound&& remainder, double a, double tol,
                              const GaussRule& rule, double panel = 1.0) {
    Complex sum = 0.0;
    double x = a;
    for (long step = 0; step < 2'000'000; ++step) {
        if (remainder(x) <= 0.1 * tol) return sum;
        sum += integrate(f, x, x + panel, 0.05 * tol, rule);
        x += panel;
    }
    throw ContinuationError("integrate_to_infinity: integrand does not decay");
}

/// Value at `at` of a function analytic on the closed disc |w - center| <= radius,
/// from the trapezoidal Cauchy integral on the boundary circle. Used to fill
/// removable singularities without differencing near them.
template <class F>
Complex cauchy_value(F&& f, Complex center, double radius, Complex at, int points = 64) {
    Complex sum = 0.0;
    for (int k = 0; k < points; ++k) {
        const Complex offset = std::polar(radius, kTwoPi * (k + 0.5) / points);
        const Complex w = center + offset;
        sum += f(w) * offset / (w - at);
    }
    return sum / double(points);
}

}  // namespace hizeta
