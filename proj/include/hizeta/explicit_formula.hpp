#pragma once

// Sums over the nontrivial zeros rho = 1/2 + i gamma of zeta(s) and their
// prime-side counterparts:
//
//   sum_rho (z - rho)^{-s} = z^{-s} + (z-1)^{-s} - sum_{n >= 0} (z + 2n)^{-s}
//       - 1/Gamma(s) sum_{n >= 1} sum_p (log p) p^{-nz} (log p^n)^{s-1},
//
// the completed zeta
//   zhat(s) = 2^{-1/2} (2 pi)^{-2} s (s-1) pi^{-s/2} Gamma(s/2) zeta(s)
//           = the regularized product of (s - rho)/2pi over the zeros,
// and log Z(z, Lambda) as a sum over lambda, primes and prime powers.

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "hizeta/higher_zeta.hpp"
#include "hizeta/parse.hpp"

namespace hizeta {

// ------------------------------------------------------------------ zero tables

/// Imaginary parts gamma_k > 0 of zeros 1/2 + i gamma_k, ascending. Each entry
/// stands for the conjugate pair 1/2 +- i gamma_k.
struct ZeroTable {
    std::vector<double> gammas;
    std::string source;

    std::size_t count() const noexcept { return gammas.size(); }
};

/// One value per line, optionally preceded by an integer index; blank lines
/// and '#' comments are skipped.
inline ZeroTable parse_zeros(std::istream& in, std::string source) {
    ZeroTable table;
    table.source = std::move(source) + " (zeros taken on Re(s) = 1/2)";
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = detail::trim(line);
        if (text.empty() || text.front() == '#') continue;
        std::istringstream fields{std::string(text)};
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) tokens.push_back(tok);
        if (tokens.size() > 2) throw ParseError("expected '[index] value'", line_no);
        double value = 0.0;
        try {
            if (tokens.size() == 2) {
                const double index = detail::parse_real(tokens[0], "zero index");
                if (index != std::floor(index) || index < 0)
                    throw ParseError("zero index must be a nonnegative integer");
            }
            value = detail::parse_real(tokens.back(), "zero ordinate");
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
        if (!(value > 0.0) || !std::isfinite(value))
            throw ParseError("zero ordinate must be a positive finite number", line_no);
        if (!table.gammas.empty() && !(value > table.gammas.back()))
            throw OrderError("line " + std::to_string(line_no) + ": zero ordinates must ascend");
        table.gammas.push_back(value);
    }
    if (table.gammas.empty()) throw ParseError("zero table is empty");
    return table;
}

inline ZeroTable load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open zero table '" + path + "'");
    return parse_zeros(in, path);
}

/// sum over the first nz conjugate pairs of (z - rho)^{-s}.
inline Complex zero_sum(Complex z, Complex s, const ZeroTable& table, std::size_t nz) {
    if (!(z.real() > 1.0)) throw DomainError("zero_sum: Re(z) must be > 1");
    if (!(s.real() > 1.0)) throw DomainError("zero_sum: Re(s) must be > 1");
    if (nz > table.count())
        throw DomainError("zero_sum: Nz = " + std::to_string(nz) + " exceeds the table size " +
                          std::to_string(table.count()));
    Complex sum = 0.0;
    for (std::size_t k = 0; k < nz; ++k) {
        const Complex upper = z - Complex(0.5, table.gammas[k]);
        const Complex lower = z - Complex(0.5, -table.gammas[k]);
        sum += std::exp(-s * std::log(upper)) + std::exp(-s * std::log(lower));
    }
    return sum;
}

/// Estimate of sum_{gamma > T} |z - rho|^{-Re s} from the zero density
/// (1/2pi) log(t/2pi) dt:
///   (1/2pi) T^{1-sigma} (log(T/2pi)/(sigma-1) + 1/(sigma-1)^2).
inline double zero_tail_estimate(double sigma, double T) {
    if (!(sigma > 1.0) || !(T > kTwoPi)) return std::numeric_limits<double>::infinity();
    const double d = sigma - 1.0;
    return std::pow(T, -d) / kTwoPi * (std::log(T / kTwoPi) / d + 1.0 / (d * d));
}

// ---------------------------------------------------------------- prime sides

namespace detail {

/// psi(x) <= 1.03883 x for all x > 0.
inline constexpr double kChebyshevPsi = 1.03883;
/// pi(x) < 1.25506 x / log x for x > 1.
inline constexpr double kPrimeCount = 1.25506;

/// Bound on sum_{m > P} Lambda(m) m^{-sigma} (log m)^a, a >= 0, by partial
/// summation against psi(t) <= 1.03883 t.
inline double von_mangoldt_tail(double sigma, double a, double P) {
    const double log_p = std::log(P);
    const double gap = sigma - 1.0 - a / log_p;
    if (!(gap > 0.0)) return std::numeric_limits<double>::infinity();
    const double f = std::pow(P, -sigma) * std::pow(log_p, a);
    return kChebyshevPsi * (P * f + P * f / gap);
}

/// Bound on sum_{p > P} -log(1 - p^{-sigma}).
inline double log_euler_tail(double sigma, double P) {
    if (!(sigma > 1.0)) return std::numeric_limits<double>::infinity();
    const double log_p = std::log(P);
    return kPrimeCount * sigma * std::pow(P, 1.0 - sigma) / ((sigma - 1.0) * log_p) /
           (1.0 - std::pow(P, -sigma));
}

inline constexpr std::int64_t kMaxAutoPrimeBound = std::int64_t(1) << 27;

/// Smallest P = 1024 * 2^k with bound(P) <= target.
template <class Bound>
std::int64_t auto_prime_bound(Bound&& bound, double target, const char* who) {
    for (std::int64_t P = 1024; P <= kMaxAutoPrimeBound; P *= 2)
        if (bound(double(P)) <= target) return P;
    throw TruncationError(std::string(who) + ": prime tail cannot reach eps_abs below P = 2^27; "
                                             "pass an explicit prime bound");
}

}  // namespace detail

/// The four pieces of the prime side, with their truncation certificates.
struct ExplicitFormulaTerms {
    Complex pole_terms;     // z^{-s} + (z-1)^{-s}
    Complex trivial;        // sum_{n >= 0} (z + 2n)^{-s}
    Complex prime;          // 1/Gamma(s) sum_{n,p} (log p) p^{-nz} (n log p)^{s-1}
    double trivial_tail_bound = 0.0;
    double prime_tail_bound = 0.0;
    std::int64_t prime_bound = 0;
    int n_bound = 0;

    Complex total() const { return pole_terms - trivial - prime; }
};

/// The prime side runs over prime powers p^n <= prime_bound. prime_bound <= 0
/// picks the smallest power-of-two bound whose certificate meets eps_abs;
/// n_bound > 0 additionally caps the exponent; n_triv = 0 uses the Hurwitz closed form for the trivial zeros.
inline ExplicitFormulaTerms explicit_formula_terms(Complex z, Complex s, std::int64_t prime_bound,
                                                   int n_bound, int n_triv,
                                                   const PrecisionPolicy& pol = {}) {
    if (!(z.real() > 1.0)) throw DomainError("explicit_formula_rhs: Re(z) must be > 1");
    if (!(s.real() > 1.0)) throw DomainError("explicit_formula_rhs: Re(s) must be > 1");
    if (n_triv < 0) throw DomainError("explicit_formula_rhs: N_triv must be >= 0");
    ExplicitFormulaTerms out;
    const double sigma = z.real(), a = s.real() - 1.0;
    const double inv_gamma = std::abs(reciprocal_gamma(s));

    out.pole_terms = std::exp(-s * std::log(z)) + std::exp(-s * std::log(z - 1.0));

    if (n_triv == 0) {
        out.trivial = std::exp(-s * std::log(2.0)) * hurwitz_zeta(s, 0.5 * z, pol);
    } else {
        for (int n = 0; n < n_triv; ++n) out.trivial += std::exp(-s * std::log(z + 2.0 * n));
        out.trivial_tail_bound = std::pow(sigma + 2.0 * n_triv - 2.0, 1.0 - s.real()) / (2.0 * a);
    }

    if (prime_bound <= 0)
        prime_bound = detail::auto_prime_bound(
            [&](double P) { return inv_gamma * detail::von_mangoldt_tail(sigma, a, P); },
            pol.eps_abs, "explicit_formula_rhs");
    out.prime_bound = prime_bound;

    // All prime powers m = p^n <= P (and n <= n_bound when given); the omitted
    // m > P are covered by von_mangoldt_tail, exponents cut by n_bound by a
    // geometric bound per prime.
    const double P = double(prime_bound);
    const bool real_args = z.imag() == 0.0 && s.imag() == 0.0;
    detail::CompensatedSum prime_sum;
    double power_tail = 0.0;
    for_each_prime(prime_bound, [&](std::uint32_t p) {
        const double log_p = std::log(double(p));
        int n = 1;
        for (double m = p; m <= P; m *= p, ++n) {
            if (n_bound > 0 && n > n_bound) {
                const double q = std::pow(double(p), -sigma) * std::pow((n + 1.0) / n, a);
                const double next = log_p * std::exp(-sigma * n * log_p) * std::pow(n * log_p, a);
                power_tail += q < 1.0 ? next / (1.0 - q) : std::numeric_limits<double>::infinity();
                break;
            }
            const double log_m = n * log_p;
            if (real_args)
                prime_sum.add(log_p * std::exp(-sigma * log_m + a * std::log(log_m)));
            else
                prime_sum.add(log_p * std::exp(-z * log_m + (s - 1.0) * std::log(log_m)));
        }
        out.n_bound = std::max(out.n_bound, n - 1);
    });
    out.prime = reciprocal_gamma(s) * prime_sum.value();
    out.prime_tail_bound =
        inv_gamma * (detail::von_mangoldt_tail(sigma, a, double(prime_bound)) + power_tail);
    return out;
}

inline Complex explicit_formula_rhs(Complex z, Complex s, std::int64_t prime_bound, int n_bound,
                                    int n_triv, const PrecisionPolicy& pol = {}) {
    return explicit_formula_terms(z, s, prime_bound, n_bound, n_triv, pol).total();
}

struct ExplicitFormulaReport {
    Complex z, s;
    Complex lhs, rhs;
    double residual = 0.0;
    std::size_t nz = 0;
    std::int64_t prime_bound = 0;
    int n_bound = 0;
    double prime_tail_bound = 0.0;  // certified
    double zero_tail_estimate = 0.0;  // density estimate of the omitted zeros
};

inline ExplicitFormulaReport explicit_formula_report(Complex z, Complex s, const ZeroTable& table,
                                                     std::size_t nz, std::int64_t prime_bound,
                                                     int n_bound = 0,
                                                     const PrecisionPolicy& pol = {}) {
    const auto terms = explicit_formula_terms(z, s, prime_bound, n_bound, 0, pol);
    ExplicitFormulaReport r;
    r.z = z;
    r.s = s;
    r.lhs = zero_sum(z, s, table, nz);
    r.rhs = terms.total();
    r.residual = std::abs(r.lhs - r.rhs);
    r.nz = nz;
    r.prime_bound = terms.prime_bound;
    r.n_bound = terms.n_bound;
    r.prime_tail_bound = terms.prime_tail_bound;
    r.zero_tail_estimate = nz == 0 ? std::numeric_limits<double>::infinity()
                                   : 2.0 * zero_tail_estimate(s.real(), table.gammas[nz - 1]);
    return r;
}

// ------------------------------------------------------------- completed zeta

namespace detail {

inline Complex completed_zeta_direct(Complex s, const PrecisionPolicy& pol) {
    const Complex log_part = -0.5 * std::log(2.0) - 2.0 * std::log(kTwoPi) -
                             0.5 * s * std::log(kPi) + log_gamma(0.5 * s);
    return std::exp(log_part) * s * (s - 1.0) * riemann_zeta(s, pol);
}

}  // namespace detail

/// zhat(s), entire. Near the removable points s = 1, 0, -2, -4, ... of the
/// closed form the value comes from a Cauchy integral on a circle of radius 1/4.
inline Complex completed_riemann_zeta(Complex s, const PrecisionPolicy& pol = {}) {
    constexpr double near = 0.05, radius = 0.25;
    auto direct = [&](Complex w) { return detail::completed_zeta_direct(w, pol); };
    std::vector<double> points{1.0, 0.0};
    if (s.real() < -1.0) points.push_back(2.0 * std::round(0.5 * s.real()));
    for (const double point : points)
        if (std::abs(s - point) < near) return cauchy_value(direct, point, radius, s);
    return direct(s);
}

// ------------------------------------------------------------ log Z via primes

struct PrimeSum {
    Complex value;
    double tail_bound = 0.0;
    std::int64_t prime_bound = 0;
};

/// log Z(z, Lambda) = sum_lambda sum_p sum_{n >= 1} p^{-n(z + lambda)} / n.
/// n_bound <= 0 sums over n in closed form, -log(1 - p^{-(z+lambda)});
/// prime_bound <= 0 chooses the bound from the certificate.
inline PrimeSum log_Z_prime_sum_certified(Complex z, const SequenceSpec& spec,
                                          std::int64_t prime_bound, int n_bound,
                                          const PrecisionPolicy& pol = {}) {
    const auto lambdas = detail::certified_elements(spec, z.real(), pol);
    if (!(z.real() + lambdas.front().real() > 1.0))
        throw DomainError("log_Z_prime_sum: Re(z) + Re(lambda_0) must be > 1");
    auto tail = [&](double P) {
        double sum = 0.0;
        for (const auto& lambda : lambdas) sum += detail::log_euler_tail(z.real() + lambda.real(), P);
        return sum;
    };
    if (prime_bound <= 0) prime_bound = detail::auto_prime_bound(tail, 0.9 * pol.eps_abs, "log_Z_prime_sum");

    PrimeSum out;
    out.prime_bound = prime_bound;
    out.tail_bound = tail(double(prime_bound)) + (spec.is_finite() ? 0.0 : 0.1 * pol.eps_abs);
    // Distinct lambdas with multiplicities; primes in the outer loop.
    std::vector<Complex> distinct;
    std::vector<double> weight;
    for (const auto& lambda : lambdas) {
        if (!distinct.empty() && distinct.back() == lambda) {
            weight.back() += 1.0;
            continue;
        }
        distinct.push_back(lambda);
        weight.push_back(1.0);
    }
    detail::CompensatedSum total;
    for_each_prime(prime_bound, [&](std::uint32_t p) {
        const double log_p = std::log(double(p));
        for (std::size_t k = 0; k < distinct.size(); ++k) {
            const Complex x = std::exp(-(z + distinct[k]) * log_p);
            if (n_bound <= 0) {
                total.add(-weight[k] * log1p(-x));
                continue;
            }
            Complex sum = 0.0, power = x;
            for (int n = 1; n <= n_bound; ++n, power *= x) sum += power / double(n);
            total.add(weight[k] * sum);
            const double ax = std::abs(x);
            out.tail_bound += weight[k] * std::pow(ax, n_bound + 1) / ((n_bound + 1) * (1.0 - ax));
        }
    });
    out.value = total.value();
    return out;
}

inline Complex log_Z_prime_sum(Complex z, const SequenceSpec& spec, std::int64_t prime_bound,
                               int n_bound = 0, const PrecisionPolicy& pol = {}) {
    return log_Z_prime_sum_certified(z, spec, prime_bound, n_bound, pol).value;
}

// ------------------------------------------------------ regularized products

struct BBBReport {
    Complex s;
    Complex lhs;  // prod_lambda zhat(s + lambda)
    Complex rhs;  // prod_lambda of the regularized-product side
    double residual = 0.0;  // |lhs - rhs| / |rhs|
    // Second logarithmic derivative: sum over tabulated zeros of (s + lambda - rho)^{-2}
    // against -(log rhs)''. Truncation limited; informational.
    Complex curvature_zero_sum;
    Complex curvature_product;
};

namespace detail {

/// log of (w/2pi)((w-1)/2pi) * prod^_n ((w + 2n)/2pi)^{-1} * zeta(w).
inline Complex log_bbb_factor(Complex w, const PrecisionPolicy& pol) {
    static const SequenceSpec evens = SequenceSpec::lattice(WeightVector{Complex(2.0)});
    const Complex zeta_at_0 = barnes_zeta(0.0, w, WeightVector{Complex(2.0)}, pol);
    return std::log(w / kTwoPi) + std::log((w - 1.0) / kTwoPi) + zeta_at_0 * std::log(kTwoPi) -
           log_dotted_product(w, evens, pol) + std::log(riemann_zeta(w, pol));
}

}  // namespace detail

/// The regularized-product identity for a finite Lambda, factor by factor:
///   prod^_{lambda, rho} ((s + lambda - rho)/2pi)
///     = prod_lambda (s+lambda)/2pi (s+lambda-1)/2pi
///       prod^_n ((s+lambda+2n)/2pi)^{-1} zeta(s+lambda).
inline BBBReport verify_BBB(Complex s, const SequenceSpec& spec, const ZeroTable& table,
                            const PrecisionPolicy& pol = {}) {
    const auto* list = spec.get_if<ExplicitList>();
    if (!list) throw UnsupportedError("verify_BBB: only finite sequences are supported");
    if (!(s.real() > 1.0 + detail::kSplitMargin))
        throw DomainError("verify_BBB: Re(s) must be > 1.25");

    BBBReport r;
    r.s = s;
    Complex log_rhs = 0.0;
    r.lhs = 1.0;
    for (const auto& lambda : list->values) {
        r.lhs *= completed_riemann_zeta(s + lambda, pol);
        log_rhs += detail::log_bbb_factor(s + lambda, pol);
        r.curvature_zero_sum += zero_sum(s + lambda, 2.0, table, table.count());
    }
    r.rhs = std::exp(log_rhs);
    r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);

    constexpr double h = 1e-3;
    auto log_rhs_at = [&](Complex t) {
        Complex sum = 0.0;
        for (const auto& lambda : list->values) sum += detail::log_bbb_factor(t + lambda, pol);
        return sum;
    };
    r.curvature_product = -(log_rhs_at(s + h) - 2.0 * log_rhs + log_rhs_at(s - h)) / (h * h);
    return r;
}

}  // namespace hizeta
