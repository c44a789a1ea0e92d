#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "hizeta/explicit_formula.hpp"

using namespace hizeta;

namespace {

constexpr double pi = std::numbers::pi;

const ZeroTable& table() {
    static const ZeroTable t = load_zeros(HIZETA_ZEROS);
    return t;
}

ZeroTable parse(const std::string& text) {
    std::istringstream in(text);
    return parse_zeros(in, "inline");
}

}  // namespace

TEST(Zeros, ParseExamples) {
    const auto t = parse("14.134725\n21.022040\n");
    EXPECT_EQ(t.count(), 2u);
    EXPECT_DOUBLE_EQ(t.gammas[1], 21.022040);
    const auto indexed = parse("# header\n1 14.134725\n\n2 21.022040\n");
    EXPECT_EQ(indexed.count(), 2u);
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("# only comments\n"), ParseError);
    EXPECT_THROW(parse("21.0\n14.1\n"), OrderError);
    EXPECT_THROW(parse("14.1\n14.1\n"), OrderError);
    EXPECT_THROW(load_zeros("/nonexistent/zeros.txt"), ParseError);
}

TEST(Zeros, ParseErrorsCarryLineNumber) {
    for (const char* text : {"14.1\nabc\n", "14.1\n-3\n", "14.1\n1 2 3\n"}) {
        try {
            parse(text);
            FAIL() << text;
        } catch (const ParseError& e) {
            EXPECT_NE(std::string(e.what()).find("2"), std::string::npos) << e.what();
        }
    }
}

TEST(Zeros, BundledTable) {
    const auto& t = table();
    ASSERT_EQ(t.count(), 1000u);
    EXPECT_NEAR(t.gammas.front(), 14.134725, 1e-4);
    EXPECT_NEAR(t.gammas.back(), 1419.4224809, 1e-6);
    EXPECT_NE(t.source.find("1/2"), std::string::npos);
}

TEST(ZeroSum, Examples) {
    const auto& t = table();
    const Complex v = zero_sum(2.0, 2.0, t, 100);
    EXPECT_LE(std::abs(v.imag()), 1e-15 * std::abs(v));
    EXPECT_EQ(zero_sum(2.0, 2.0, t, 0), Complex(0.0));
    EXPECT_THROW(zero_sum(1.0, 2.0, t, 10), DomainError);
    EXPECT_THROW(zero_sum(2.0, 1.0, t, 10), DomainError);
    EXPECT_THROW(zero_sum(2.0, 2.0, t, 1001), DomainError);
}

TEST(ZeroSum, IncrementsShrinkLikeTheTailEstimate) {
    const auto& t = table();
    const double d1 = std::abs(zero_sum(2.0, 2.0, t, 500) - zero_sum(2.0, 2.0, t, 100));
    const double d2 = std::abs(zero_sum(2.0, 2.0, t, 1000) - zero_sum(2.0, 2.0, t, 500));
    EXPECT_LT(d2, d1);
    // increments between cutoffs against the density estimate of the same range
    const double est = 2.0 * (zero_tail_estimate(2.0, t.gammas[499]) - zero_tail_estimate(2.0, t.gammas[999]));
    EXPECT_NEAR(d2 / est, 1.0, 0.05);
}

TEST(ExplicitFormula, TrivialTermClosedForm) {
    for (Complex z : {Complex(2.0), Complex(2.5, 1.0)})
        for (Complex s : {Complex(2.0), Complex(3.0, -0.5)}) {
            const auto closed = explicit_formula_terms(z, s, 100, 0, 0);
            const auto direct = explicit_formula_terms(z, s, 100, 0, 200000);
            EXPECT_NEAR(std::abs(closed.trivial - direct.trivial), 0.0, direct.trivial_tail_bound + 1e-12);
            EXPECT_LT(direct.trivial_tail_bound, 1e-4);
        }
}

TEST(ExplicitFormula, PrimeTermBruteForce) {
    // sum over prime powers m = p^n <= 1e5 of log p * m^{-2} * log m, by trial division.
    const int P = 100000;
    double brute = 0.0;
    for (int m = 2; m <= P; ++m) {
        int p = 0;
        for (int d = 2; d * d <= m; ++d)
            if (m % d == 0) { p = d; break; }
        if (p == 0) p = m;
        int r = m;
        while (r % p == 0) r /= p;
        if (r != 1) continue;
        brute += std::log(double(p)) * std::log(double(m)) / (double(m) * m);
    }
    const auto terms = explicit_formula_terms(2.0, 2.0, P, 0, 0);
    EXPECT_NEAR(terms.prime.real(), brute, 1e-12);
    EXPECT_EQ(terms.prime.imag(), 0.0);
    // and the full sum is (zeta'/zeta)'(2), up to the certified tail
    auto log_zeta = [](Complex w) { return std::log(riemann_zeta(w)); };
    const double h = 1e-2;
    Complex second = 0.0;
    const int N = 64;
    for (int k = 0; k < N; ++k) {
        const Complex u = std::polar(1.0, 2 * pi * k / N);
        second += log_zeta(2.0 + h * u) / (u * u);
    }
    second *= 2.0 / (N * h * h);
    EXPECT_NEAR(terms.prime.real(), second.real(), terms.prime_tail_bound + 1e-8);
    EXPECT_LT(terms.prime_tail_bound, 1e-3);
}

TEST(ExplicitFormula, ComplexPathMatchesRealPath) {
    const auto real = explicit_formula_terms(2.0, 3.0, 50000, 0, 0);
    const auto cplx = explicit_formula_terms(Complex(2.0, 1e-300), 3.0, 50000, 0, 0);
    EXPECT_NEAR(std::abs(real.prime - cplx.prime), 0.0, 1e-14);
}

TEST(ExplicitFormula, ExponentCapAddsTail) {
    const auto full = explicit_formula_terms(2.0, 2.0, 100000, 0, 0);
    const auto capped = explicit_formula_terms(2.0, 2.0, 100000, 2, 0);
    EXPECT_EQ(capped.n_bound, 2);
    EXPECT_GT(capped.prime_tail_bound, full.prime_tail_bound);
    EXPECT_LE(std::abs(capped.prime - full.prime), capped.prime_tail_bound);
}

TEST(ExplicitFormula, AutomaticBound) {
    PrecisionPolicy pol;
    pol.eps_abs = 1e-6;
    const auto terms = explicit_formula_terms(3.0, 2.0, 0, 0, 0, pol);
    EXPECT_LE(terms.prime_tail_bound, 1e-6);
    pol.eps_abs = 1e-14;
    EXPECT_THROW(explicit_formula_terms(2.0, 2.0, 0, 0, 0, pol), TruncationError);
    EXPECT_THROW(explicit_formula_rhs(0.5, 2.0, 100, 0, 0), DomainError);
}

TEST(ExplicitFormula, ResidualDecreasesWithNz) {
    const auto& t = table();
    const std::int64_t P = 1 << 22;
    const auto terms = explicit_formula_terms(2.0, 2.0, P, 0, 0);
    double prev = 1e300;
    for (std::size_t nz : {100u, 500u, 1000u}) {
        const double r = std::abs(zero_sum(2.0, 2.0, t, nz) - terms.total());
        EXPECT_LT(r, prev) << nz;
        prev = r;
    }
    const auto rep = explicit_formula_report(2.0, 2.0, t, 1000, P);
    EXPECT_NEAR(rep.residual, prev, 1e-15);
    EXPECT_TRUE(std::isfinite(rep.zero_tail_estimate));
    // what is left is the zeros above the table
    EXPECT_NEAR(rep.residual / rep.zero_tail_estimate, 1.0, 0.1);
}

TEST(CompletedZeta, Examples) {
    EXPECT_NEAR(std::abs(completed_riemann_zeta(2.0) - 1.0 / (12.0 * std::sqrt(2.0) * pi)), 0.0, 1e-15);
    EXPECT_NEAR(completed_riemann_zeta(2.0).real(), 1.8757e-2, 1e-6);
    EXPECT_LE(std::abs(completed_riemann_zeta(0.5).imag()), 1e-16);
    // s(s-1) pi^{-s/2} Gamma(s/2) zeta(s) -> 1 at s = 1 and s = 0
    const double c = std::pow(2.0, -0.5) * std::pow(2 * pi, -2.0);
    EXPECT_NEAR(std::abs(completed_riemann_zeta(1.0) - c), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(completed_riemann_zeta(0.0) - c), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(completed_riemann_zeta(Complex(1.01)) - completed_riemann_zeta(Complex(-0.01))), 0.0, 1e-14);
}

TEST(CompletedZeta, SymmetryAndZero) {
    for (double re = -2.0; re <= 3.0; re += 0.5)
        for (double im = -5.0; im <= 5.0; im += 1.25) {
            const Complex s(re, im);
            const Complex a = completed_riemann_zeta(s), b = completed_riemann_zeta(1.0 - s);
            EXPECT_LE(std::abs(a - b) / (1.0 + std::abs(a)), 1e-9) << to_string(s);
        }
    EXPECT_LE(std::abs(completed_riemann_zeta(Complex(0.5, table().gammas[0]))), 1e-6);
    // even integers below zero are removable too
    EXPECT_TRUE(is_finite(completed_riemann_zeta(-4.0)));
    EXPECT_NEAR(std::abs(completed_riemann_zeta(-4.0) - completed_riemann_zeta(5.0)), 0.0, 1e-13);
}

TEST(LogZPrimeSum, Examples) {
    const std::int64_t P = 1 << 22;
    EXPECT_NEAR(std::abs(log_Z_prime_sum(3.0, SequenceSpec::list({0.0}), P) - std::log(riemann_zeta(3.0))), 0.0,
                1e-12);
    EXPECT_NEAR(std::abs(log_Z_prime_sum(3.0, SequenceSpec::list({0.0, 1.0}), P) -
                         std::log(riemann_zeta(3.0) * riemann_zeta(4.0))),
                0.0, 1e-12);
    const auto cert = log_Z_prime_sum_certified(3.0, SequenceSpec::list({0.0}), P, 0);
    EXPECT_LE(std::abs(cert.value - std::log(riemann_zeta(3.0))), cert.tail_bound);
    EXPECT_THROW(log_Z_prime_sum(1.0, SequenceSpec::list({0.0}), P), DomainError);
}

TEST(LogZPrimeSum, TruncatedExponent) {
    const auto spec = SequenceSpec::list({0.0, Complex(0.5, 1.0)});
    const auto full = log_Z_prime_sum_certified(2.5, spec, 1 << 16, 0);
    const auto cut = log_Z_prime_sum_certified(2.5, spec, 1 << 16, 3);
    EXPECT_LE(std::abs(full.value - cut.value), cut.tail_bound);
}

TEST(LogZPrimeSum, AgreesWithHigherZeta) {
    PrecisionPolicy pol;
    pol.eps_abs = 1e-8;
    for (const auto& spec : {SequenceSpec::list({0.0, 0.5, 1.0}), SequenceSpec::list({0.0, Complex(0.3, 1.0)})})
        for (Complex z : {Complex(2.0, 0.0), Complex(2.5, 3.0)}) {
            const Complex lhs = std::exp(log_Z_prime_sum(z, spec, 0, 0, pol));
            const Complex rhs = higher_zeta(z, {spec, 1000, {}});
            EXPECT_NEAR(std::abs(lhs / rhs - 1.0), 0.0, 1e-8) << spec.to_string() << " " << to_string(z);
        }
}

TEST(BBB, Examples) {
    const auto& t = table();
    const auto single = verify_BBB(2.5, SequenceSpec::list({0.0}), t);
    EXPECT_LE(single.residual, 1e-7);
    EXPECT_NEAR(std::abs(single.lhs - completed_riemann_zeta(2.5)), 0.0, 1e-15);
    const auto pair = verify_BBB(Complex(2.0, 1.0), SequenceSpec::list({0.0, 1.0}), t);
    const Complex expect = completed_riemann_zeta(Complex(2.0, 1.0)) * completed_riemann_zeta(Complex(3.0, 1.0));
    EXPECT_NEAR(std::abs(pair.lhs / expect - 1.0), 0.0, 1e-14);
    EXPECT_LE(pair.residual, 1e-7);
    EXPECT_LE(verify_BBB(2.5, SequenceSpec::list({0.0, 0.5, 1.0}), t).residual, 1e-7);
    // the tabulated zeros carry nearly all of the curvature at s = 2.5
    EXPECT_NEAR(std::abs(single.curvature_zero_sum / single.curvature_product - 1.0), 0.0, 0.05);
    EXPECT_THROW(verify_BBB(2.5, SequenceSpec::lattice(WeightVector{Complex(1.0)}), t), UnsupportedError);
    EXPECT_THROW(verify_BBB(1.1, SequenceSpec::list({0.0}), t), DomainError);
}
