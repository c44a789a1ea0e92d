#pragma once

// The higher Riemann zeta function
//   Z(s, Lambda) = prod_k zeta(s + lambda_k) = prod_k prod_p (1 - p^{-s-lambda_k})^{-1},
// its Dirichlet coefficients g_Lambda(n), the Tauberian constant of their
// partial sums, and for semi-lattices the completed function Z^(s, omega) and
// the functional-equation function Lambda^(s, omega).
//
// Naming: the function Lambda(s, omega) is called lambda_hat here so
// it cannot be confused with a sequence Lambda.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hizeta/barnes.hpp"
#include "hizeta/formal_series.hpp"
#include "hizeta/sequences.hpp"

namespace hizeta {

struct HigherZetaContext {
    SequenceSpec spec;
    std::int64_t prime_bound = 1000;
    PrecisionPolicy pol{};
};

namespace detail {

/// Re(s) + Re(lambda_j) must exceed 1 by this margin before a factor joins the
/// log-summed tail.
inline constexpr double kSplitMargin = 0.25;

/// For Re(w) >= 1 + kSplitMargin, |log zeta(w)| <= zeta(Re w) - 1
/// <= 2^{-Re w} (1 + 2/(Re w - 1)) <= kLogZetaFactor * 2^{-Re w}.
inline constexpr double kLogZetaFactor = 1.0 + 2.0 / kSplitMargin;

/// The lambda_k needed for Z(s, Lambda) at real part sigma, truncated where
/// the dropped tail of sum log zeta(s + lambda_k) is certified below eps/10.
inline std::vector<Complex> certified_elements(const SequenceSpec& spec, double sigma,
                                               const PrecisionPolicy& pol) {
    if (spec.is_finite()) return spec.get_if<ExplicitList>()->values;
    const double total = real_power_sum(spec, 2.0);
    double bound = std::max(1.0 + kSplitMargin - sigma, 0.0) + 16.0;
    for (int round = 0;; ++round) {
        auto elems = enumerate_up_to(spec, bound, pol);
        double head = 0.0;
        for (const auto& v : elems) head += std::exp2(-v.real());
        const double rest = std::max(total - head, 0.0);
        if (kLogZetaFactor * std::exp2(-sigma) * rest < 0.1 * pol.eps_abs || round >= 40)
            return elems;
        bound += 16.0;
    }
}

/// Z(s, {lambda_k}_{k >= skip}); `extra_split` moves the head/tail boundary
/// right by that many factors.
inline Complex higher_zeta_impl(Complex s, const SequenceSpec& spec, const PrecisionPolicy& pol,
                                std::size_t skip, std::size_t extra_split) {
    const auto elems = certified_elements(spec, s.real(), pol);
    std::size_t split = skip;
    while (split < elems.size() && !(s.real() + elems[split].real() > 1.0 + kSplitMargin)) ++split;
    split = std::min(elems.size(), split + extra_split);

    Complex head = 1.0;
    for (std::size_t k = skip; k < split; ++k) {
        const Complex w = s + elems[k];
        if (w == Complex(1.0, 0.0))
            throw PoleError("higher_zeta: s + lambda_k = 1 for lambda_k = " + to_string(elems[k]));
        head *= riemann_zeta(w, pol);
    }
    Complex log_tail = 0.0, last_term = 0.0;
    for (std::size_t k = split; k < elems.size(); ++k) {
        if (k > split && elems[k] == elems[k - 1]) {
            log_tail += last_term;
            continue;
        }
        last_term = log1p(zeta_minus_one(s + elems[k], pol));
        log_tail += last_term;
    }
    return head * std::exp(log_tail);
}

}  // namespace detail

/// Certified bound on |sum_{k >= j} x^{-lambda_k}|:
///   x^{-Re lambda_j} * sum_{k >= j} 2^{-(Re lambda_k - Re lambda_j)},
/// the second factor in closed form per sequence shape.
inline double tail_bound(const SequenceSpec& spec, std::size_t j, double x,
                         const PrecisionPolicy& pol = {}) {
    if (!(x >= 2.0)) throw DomainError("tail_bound: x must be >= 2");
    std::vector<Complex> first;
    if (auto l = spec.get_if<ExplicitList>()) {
        if (j >= l->values.size()) return 0.0;
        first.assign(l->values.begin(), l->values.begin() + std::ptrdiff_t(j + 1));
    } else {
        double bound = 8.0;
        while (true) {
            first = enumerate_up_to(spec, bound, pol);
            if (first.size() > j) break;
            bound *= 2.0;
        }
        first.resize(j + 1);
    }
    double before = 0.0;
    for (std::size_t k = 0; k < j; ++k) before += std::exp2(-first[k].real());
    const double lead = first[j].real();
    const double rest = std::max(real_power_sum(spec, 2.0) - before, 0.0);
    return std::pow(x, -lead) * rest * std::exp2(lead);
}

/// Z(s, Lambda), continued meromorphically by splitting off the finitely many
/// factors with Re(s + lambda_k) <= 1.25.
inline Complex higher_zeta(Complex s, const HigherZetaContext& ctx) {
    return detail::higher_zeta_impl(s, ctx.spec, ctx.pol, 0, 0);
}

/// Same value with the head/tail split moved `extra_split` factors right;
/// used to check that the continuation does not depend on the split.
inline Complex higher_zeta_split(Complex s, const HigherZetaContext& ctx, std::size_t extra_split) {
    return detail::higher_zeta_impl(s, ctx.spec, ctx.pol, 0, extra_split);
}

namespace detail {

/// Multiplies 1/(1 - p^{-lambda} X) into the series in place, one lambda at a time.
inline PowerSeries local_factor(std::uint32_t p, const std::vector<Complex>& lambdas, int max_power) {
    PowerSeries factor = PowerSeries::one(std::size_t(max_power) + 1);
    const double log_p = std::log(double(p));
    for (const auto& lambda : lambdas) {
        const Complex a = std::exp(-lambda * log_p);
        if (std::abs(a) < 1e-18) continue;
        for (int m = 1; m <= max_power; ++m) factor[std::size_t(m)] += a * factor[std::size_t(m - 1)];
    }
    return factor;
}

}  // namespace detail

/// Coefficients of prod_{Re lambda <= cut} (1 - p^{-lambda} X)^{-1} up to X^M,
/// i.e. g_Lambda(p^m) for m = 0..M.
inline PowerSeries dirichlet_local_factor(std::uint32_t p, const SequenceSpec& spec, int max_power,
                                          double cut, const PrecisionPolicy& pol = {}) {
    if (p < 2) throw DomainError("dirichlet_local_factor: p must be a prime >= 2");
    if (max_power < 1) throw DomainError("dirichlet_local_factor: M must be >= 1");
    return detail::local_factor(p, enumerate_up_to(spec, cut, pol), max_power);
}

/// g_Lambda(1..n_max), with Z(s, Lambda) = sum_n g_Lambda(n) n^{-s}.
struct CoeffTable {
    std::int64_t n_max = 0;
    std::vector<Complex> g;  // g[0] unused

    const Complex& operator[](std::int64_t n) const { return g[std::size_t(n)]; }
};

/// Sequence elements beyond this cut change no coefficient by more than eps_abs.
inline double local_factor_cut(std::int64_t n_max, const PrecisionPolicy& pol) {
    return (std::log(double(n_max)) + std::abs(std::log(pol.eps_abs))) / std::log(2.0);
}

inline CoeffTable dirichlet_coeffs(const HigherZetaContext& ctx, std::int64_t n_max) {
    if (n_max < 1) throw DomainError("dirichlet_coeffs: n_max must be >= 1");
    if (n_max > 100'000'000) throw CapacityError("dirichlet_coeffs: n_max must be <= 1e8");
    CoeffTable table;
    table.n_max = n_max;
    table.g.assign(std::size_t(n_max) + 1, Complex(0.0));
    table.g[1] = 1.0;
    if (n_max == 1) return table;

    // Smallest prime factor sieve.
    std::vector<std::uint32_t> spf(std::size_t(n_max) + 1, 0);
    for (std::int64_t i = 2; i <= n_max; ++i) {
        if (spf[std::size_t(i)] != 0) continue;
        for (std::int64_t j = i; j <= n_max; j += i)
            if (spf[std::size_t(j)] == 0) spf[std::size_t(j)] = std::uint32_t(i);
    }

    const double cut = local_factor_cut(n_max, ctx.pol);
    const auto lambdas = enumerate_up_to(ctx.spec, cut, ctx.pol);
    for (std::int64_t p = 2; p <= n_max; ++p) {
        if (spf[std::size_t(p)] != std::uint32_t(p)) continue;
        int max_power = 0;
        for (std::int64_t q = p; q <= n_max; q *= p) ++max_power;
        const PowerSeries factor = detail::local_factor(std::uint32_t(p), lambdas, max_power);
        std::int64_t q = p;
        for (int m = 1; m <= max_power; ++m, q *= p) table.g[std::size_t(q)] = factor[std::size_t(m)];
    }
    // Multiplicative assembly: n = p^e * rest with p the smallest prime factor.
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const std::int64_t p = spf[std::size_t(n)];
        std::int64_t prime_power = 1, rest = n;
        while (rest % p == 0) {
            rest /= p;
            prime_power *= p;
        }
        if (rest != 1) table.g[std::size_t(n)] = table.g[std::size_t(prime_power)] * table.g[std::size_t(rest)];
    }
    return table;
}

struct TauberianConstant {
    Complex c;
    int K = 0;
    double lambda0 = 0.0;
};

/// c_Lambda = Z(1 - lambda_0, {lambda_k}_{k >= K}) / (K-1)!, K the multiplicity
/// of the smallest element. Requires a real sequence.
inline TauberianConstant tauberian_constant(const HigherZetaContext& ctx) {
    if (!ctx.spec.is_real())
        throw DomainError("tauberian_constant: the sequence must be real");
    TauberianConstant out;
    out.K = 1;
    if (auto l = ctx.spec.get_if<ExplicitList>()) {
        out.lambda0 = l->values.front().real();
        out.K = int(std::count_if(l->values.begin(), l->values.end(),
                                  [&](Complex v) { return v.real() == out.lambda0; }));
    } else if (auto a = ctx.spec.get_if<ArithmeticProgression>()) {
        out.lambda0 = a->step.real() * a->offset;
    }
    double factorial = 1.0;
    for (int k = 2; k <= out.K - 1; ++k) factorial *= k;
    out.c = detail::higher_zeta_impl(1.0 - out.lambda0, ctx.spec, ctx.pol, std::size_t(out.K), 0) /
            factorial;
    return out;
}

struct TauberianCheck {
    double lhs = 0.0;  // sum_{n <= x} g(n)
    double rhs = 0.0;  // c x^{1 - lambda_0} log^{K-1} x
    TauberianConstant constant;
};

inline TauberianCheck tauberian_check(const HigherZetaContext& ctx, double x) {
    if (!(x >= 100.0)) throw DomainError("tauberian_check: x must be >= 100");
    TauberianCheck out;
    out.constant = tauberian_constant(ctx);
    const auto table = dirichlet_coeffs(ctx, std::int64_t(std::floor(x)));
    for (std::int64_t n = 1; n <= table.n_max; ++n) out.lhs += table[n].real();
    out.rhs = out.constant.c.real() * std::pow(x, 1.0 - out.constant.lambda0) *
              std::pow(std::log(x), out.constant.K - 1);
    return out;
}

/// Z(s, omega) = Z(s, Omega) for the semi-lattice of omega; rank 0 is zeta(s).
inline Complex lattice_higher_zeta(Complex s, const WeightVector& omega,
                                   const PrecisionPolicy& pol = {}) {
    if (omega.rank() == 0) return riemann_zeta(s, pol);
    return detail::higher_zeta_impl(s, SequenceSpec::lattice(omega), pol, 0, 0);
}

/// The Bernoulli exponent of the completed function:
///   -B_r(s, omega)/r! - B_r(s-1, omega)/r! + B_{r+1}(s, (2, omega))/(r+1)!.
inline Complex z_hat_exponent(Complex s, const WeightVector& omega) {
    const std::size_t r = omega.rank();
    const auto at_s = multiple_bernoulli(s, omega, int(r));
    const auto at_s1 = multiple_bernoulli(s - 1.0, omega, int(r));
    const auto widened = multiple_bernoulli(s, omega.prepend(2.0), int(r) + 1);
    return -at_s.scaled[r] - at_s1.scaled[r] + widened.scaled[r + 1];
}

/// Z^(s, omega) = (2 pi)^{exponent} Gamma(s, omega)^{-1} Gamma(s-1, omega)^{-1}
///               Gamma(s, (2, omega)) Z(s, omega).
/// The multiple gammas are continued in z by their ladder, so any s off the
/// poles of the factors is accepted.
inline Complex completed_Z_hat(Complex s, const WeightVector& omega,
                               const PrecisionPolicy& pol = {}) {
    const Complex log_factor = z_hat_exponent(s, omega) * std::log(kTwoPi) -
                               detail::continued_log_multiple_gamma(s, omega, pol) -
                               detail::continued_log_multiple_gamma(s - 1.0, omega, pol) +
                               detail::continued_log_multiple_gamma(s, omega.prepend(2.0), pol);
    return std::exp(log_factor) * lattice_higher_zeta(s, omega, pol);
}

/// Lambda^(s, omega) = Z^(s, omega) * Z^(1 + |omega| - s, omega)^{(-1)^{r+1}}.
inline Complex lambda_hat(Complex s, const WeightVector& omega, const PrecisionPolicy& pol = {}) {
    const Complex mirror = completed_Z_hat(1.0 + omega.sum() - s, omega, pol);
    const Complex direct = completed_Z_hat(s, omega, pol);
    return omega.rank() % 2 == 1 ? direct * mirror : direct / mirror;
}

}  // namespace hizeta
