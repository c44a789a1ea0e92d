#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <numbers>

#include "hizeta/higher_zeta.hpp"

using namespace hizeta;

namespace {

constexpr double pi = std::numbers::pi;

HigherZetaContext ctx(SequenceSpec spec) { return {std::move(spec), 1000, {}}; }

// sum over compositions m = m_0 + ... + m_{L-1} of prod_k p^{-m_k lambda_k}
Complex composition_sum(int p, int m, const std::vector<Complex>& lambdas, std::size_t k = 0) {
    if (k + 1 == lambdas.size()) return std::exp(-double(m) * lambdas[k] * std::log(double(p)));
    Complex sum = 0.0;
    for (int mk = 0; mk <= m; ++mk)
        sum += std::exp(-double(mk) * lambdas[k] * std::log(double(p))) *
               composition_sum(p, m - mk, lambdas, k + 1);
    return sum;
}

double sigma_over_n(int n) {
    double s = 0.0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += d;
    return s / n;
}

int divisor_count(int n) {
    int c = 0;
    for (int d = 1; d <= n; ++d) c += n % d == 0;
    return c;
}

}  // namespace

TEST(HigherZeta, Examples) {
    EXPECT_NEAR(std::abs(higher_zeta(3.0, ctx(SequenceSpec::list({0.0}))) - riemann_zeta(3.0)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(higher_zeta(3.0, ctx(SequenceSpec::list({0.0, 1.0}))) - riemann_zeta(3.0) * riemann_zeta(4.0)),
                0.0, 1e-14);
}

TEST(HigherZeta, ProgressionTwoDepths) {
    // prod_{n>=1} zeta(2+n) truncated at two depths.
    const Complex v = higher_zeta(2.0, ctx(SequenceSpec::progression(1.0, 1)));
    Complex shallow = 1.0, deep = 1.0;
    for (int n = 1; n <= 40; ++n) shallow *= riemann_zeta(2.0 + n);
    for (int n = 1; n <= 80; ++n) deep *= riemann_zeta(2.0 + n);
    EXPECT_NEAR(std::abs(shallow - deep), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(v - deep), 0.0, 1e-10);
}

TEST(HigherZeta, ContinuationIndependentOfSplit) {
    for (const auto& spec : {SequenceSpec::lattice(WeightVector{Complex(1.0)}),
                             SequenceSpec::lattice(WeightVector{Complex(1.0), Complex(0.5, 0.2)}),
                             SequenceSpec::progression(Complex(0.7, 0.1), 0), SequenceSpec::list({0.0, 0.3, 2.0})})
        for (Complex s : {Complex(0.4, 2.0), Complex(-1.3, 0.5), Complex(1.6, -0.7), Complex(3.0)}) {
            const auto c = ctx(spec);
            const Complex a = higher_zeta(s, c), b = higher_zeta_split(s, c, 1), d = higher_zeta_split(s, c, 3);
            EXPECT_NEAR(std::abs(a - b), 0.0, 1e-8 * std::abs(a)) << spec.to_string() << " " << to_string(s);
            EXPECT_NEAR(std::abs(a - d), 0.0, 1e-8 * std::abs(a));
        }
}

TEST(HigherZeta, Poles) {
    EXPECT_THROW(higher_zeta(0.0, ctx(SequenceSpec::list({0.0, 1.0}))), PoleError);
    EXPECT_THROW(higher_zeta(1.0, ctx(SequenceSpec::list({0.0}))), PoleError);
}

TEST(TailBound, Examples) {
    const auto lat = SequenceSpec::lattice(WeightVector{Complex(1.0)});
    const double b = tail_bound(lat, 0, 2.0);
    EXPECT_NEAR(b, 2.0, 1e-15);
    EXPECT_GE(b, std::abs(theta(std::log(2.0), lat)) - 1e-15);
    EXPECT_LE(tail_bound(SequenceSpec::progression(1.0, 1), 1, 10.0), 0.2 + 1e-15);
    double prev = 1e300;
    for (double x : {2.0, 3.0, 10.0, 100.0}) {
        const double v = tail_bound(SequenceSpec::lattice(WeightVector{Complex(1.0), Complex(1.5)}), 2, x);
        EXPECT_LT(v, prev);
        prev = v;
    }
    EXPECT_THROW(tail_bound(lat, 0, 1.5), DomainError);
}

TEST(TailBound, BoundsActualTail) {
    const auto spec = SequenceSpec::lattice(WeightVector{Complex(1.0), Complex(1.5, 0.5)});
    const auto elems = enumerate_up_to(spec, 120.0);
    for (std::size_t j : {0u, 3u, 7u})
        for (double x : {2.0, 5.0}) {
            Complex tail = 0.0;
            for (std::size_t k = j; k < elems.size(); ++k) tail += std::exp(-elems[k] * std::log(x));
            EXPECT_LE(std::abs(tail), tail_bound(spec, j, x) * (1 + 1e-12));
        }
}

TEST(LocalFactor, Examples) {
    const auto f = dirichlet_local_factor(2, SequenceSpec::list({0.0, 1.0}), 2, 60.0);
    EXPECT_NEAR(std::abs(f[1] - 1.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f[2] - 1.75), 0.0, 1e-15);
    const auto ones = dirichlet_local_factor(7, SequenceSpec::list({0.0}), 5, 60.0);
    for (std::size_t m = 0; m <= 5; ++m) EXPECT_EQ(ones[m], Complex(1.0));
    const auto geo = dirichlet_local_factor(2, SequenceSpec::lattice(WeightVector{Complex(1.0)}), 1,
                                            local_factor_cut(1000, {}));
    EXPECT_NEAR(std::abs(geo[1] - 2.0), 0.0, 1e-10);
    EXPECT_THROW(dirichlet_local_factor(1, SequenceSpec::list({0.0}), 2, 10.0), DomainError);
    EXPECT_THROW(dirichlet_local_factor(2, SequenceSpec::list({0.0}), 0, 10.0), DomainError);
}

TEST(DirichletCoeffs, Examples) {
    const auto sig = dirichlet_coeffs(ctx(SequenceSpec::list({0.0, 1.0})), 100);
    EXPECT_NEAR(std::abs(sig[6] - 2.0), 0.0, 1e-14);
    EXPECT_EQ(sig[1], Complex(1.0));
    const auto div = dirichlet_coeffs(ctx(SequenceSpec::list({0.0, 0.0})), 100);
    EXPECT_NEAR(std::abs(div[12] - 6.0), 0.0, 1e-14);
    for (int n = 1; n <= 100; ++n) {
        EXPECT_NEAR(std::abs(sig[n] - sigma_over_n(n)), 0.0, 1e-12) << n;
        EXPECT_NEAR(std::abs(div[n] - double(divisor_count(n))), 0.0, 1e-12) << n;
    }
    EXPECT_THROW(dirichlet_coeffs(ctx(SequenceSpec::list({0.0})), 0), DomainError);
    EXPECT_THROW(dirichlet_coeffs(ctx(SequenceSpec::list({0.0})), 200'000'000), CapacityError);
}

TEST(DirichletCoeffs, CompositionOracle) {
    for (const auto& lambdas : {std::vector<Complex>{0.0, 1.0}, std::vector<Complex>{0.0, 0.5, 1.0},
                                std::vector<Complex>{0.0, Complex(0.25, 0.5), 1.0}}) {
        const auto table = dirichlet_coeffs(ctx(SequenceSpec::list(lambdas)), 200);
        for (int p : {2, 3, 5, 7, 11, 13, 197, 199})
            for (int m = 1, q = p; q <= 200; ++m, q *= p)
                EXPECT_NEAR(std::abs(table[q] - composition_sum(p, m, lambdas)), 0.0, 1e-12) << q;
    }
}

TEST(DirichletCoeffs, Multiplicative) {
    const auto table = dirichlet_coeffs(ctx(SequenceSpec::list({0.0, Complex(0.5, 1.0), 2.0})), 3000);
    for (int m = 1; m <= 60; ++m)
        for (int n = 1; m * n <= 3000; ++n)
            if (std::gcd(m, n) == 1) {
                EXPECT_NEAR(std::abs(table[m * n] - table[m] * table[n]), 0.0, 1e-12);
            }
}

TEST(DirichletCoeffs, LatticeAgainstEulerProduct) {
    const auto c = ctx(SequenceSpec::lattice(WeightVector{Complex(1.0)}));
    const auto table = dirichlet_coeffs(c, 20000);
    Complex series = 0.0;
    for (int n = 20000; n >= 1; --n) series += table[n] * std::pow(double(n), -4.0);
    EXPECT_NEAR(std::abs(series - higher_zeta(4.0, c)), 0.0, 1e-9);
}

TEST(Tauberian, Constants) {
    const auto a = tauberian_constant(ctx(SequenceSpec::list({0.0, 1.0})));
    EXPECT_EQ(a.K, 1);
    EXPECT_NEAR(std::abs(a.c - pi * pi / 6.0), 0.0, 1e-13);
    const auto b = tauberian_constant(ctx(SequenceSpec::list({0.0, 0.0})));
    EXPECT_EQ(b.K, 2);
    EXPECT_NEAR(std::abs(b.c - 1.0), 0.0, 1e-15);
    const auto c = tauberian_constant(ctx(SequenceSpec::list({0.0})));
    EXPECT_EQ(c.K, 1);
    EXPECT_NEAR(std::abs(c.c - 1.0), 0.0, 1e-15);
    EXPECT_THROW(tauberian_constant(ctx(SequenceSpec::list({0.0, Complex(1.0, 1.0)}))), DomainError);
}

TEST(Tauberian, Check) {
    const auto one = tauberian_check(ctx(SequenceSpec::list({0.0})), 1e4);
    EXPECT_NEAR(one.lhs, 1e4, 1e-9);
    EXPECT_NEAR(one.rhs, 1e4, 1e-9);
    const auto sig = tauberian_check(ctx(SequenceSpec::list({0.0, 1.0})), 1e4);
    EXPECT_NEAR(sig.lhs / sig.rhs, 1.0, 0.05);
    const auto div = tauberian_check(ctx(SequenceSpec::list({0.0, 0.0})), 1e4);
    EXPECT_GE(div.lhs / div.rhs, 0.9);
    EXPECT_LE(div.lhs / div.rhs, 1.5);
    EXPECT_THROW(tauberian_check(ctx(SequenceSpec::list({0.0})), 50.0), DomainError);
}

TEST(LatticeHigherZeta, Examples) {
    const Complex v = lattice_higher_zeta(3.0, WeightVector{Complex(1.0)});
    Complex prod = 1.0;
    for (int n = 0; n < 80; ++n) prod *= riemann_zeta(3.0 + n);
    EXPECT_NEAR(std::abs(v - prod), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(lattice_higher_zeta(Complex(0.3, 1.0), WeightVector{}) - riemann_zeta(Complex(0.3, 1.0))),
                0.0, 1e-15);
}

TEST(LatticeHigherZeta, LadderAndTelescope) {
    const WeightVector w{Complex(1.0), Complex(2.0)};
    for (Complex s : {Complex(1.5, 0.5), Complex(2.0), Complex(3.0, -1.0)}) {
        const Complex lhs = lattice_higher_zeta(s, w);
        const Complex ladder = lattice_higher_zeta(s, WeightVector{Complex(1.0)}) * lattice_higher_zeta(s + 2.0, w);
        EXPECT_NEAR(std::abs(lhs / ladder - 1.0), 0.0, 1e-6);
        const Complex tele = lhs * lattice_higher_zeta(s + 3.0, w) /
                             (lattice_higher_zeta(s + 1.0, w) * lattice_higher_zeta(s + 2.0, w));
        EXPECT_NEAR(std::abs(tele / riemann_zeta(s) - 1.0), 0.0, 1e-6);
    }
}

TEST(CompletedZHat, RankZeroAndOne) {
    // Rank 0 is the completed Riemann zeta s(s-1) Gamma(s, (2)) (2pi)^{...} zeta(s).
    const Complex s(2.3, 0.4);
    const Complex g = std::exp(log_gamma(0.5 * s));
    const Complex zhat = std::pow(2.0, -0.5) * std::pow(2 * pi, -2.0) * s * (s - 1.0) * std::exp(-0.5 * s * std::log(pi)) *
                         g * riemann_zeta(s);
    EXPECT_NEAR(std::abs(completed_Z_hat(s, WeightVector{}) / zhat - 1.0), 0.0, 1e-10);
    EXPECT_TRUE(is_finite(completed_Z_hat(2.0, WeightVector{Complex(1.0)})));
}

TEST(CompletedZHat, ExponentMatchesSpecialValues) {
    const WeightVector one{Complex(1.0)};
    for (Complex s : {Complex(2.0), Complex(2.5, 0.7)}) {
        const Complex via_zeta = -barnes_zeta(0.0, s, one) - barnes_zeta(0.0, s - 1.0, one) +
                                 barnes_zeta(0.0, s, WeightVector{Complex(2.0), Complex(1.0)});
        EXPECT_NEAR(std::abs(z_hat_exponent(s, one) - via_zeta), 0.0, 1e-12);
    }
}

TEST(CompletedZHat, Ladder) {
    const WeightVector w{Complex(1.0), Complex(2.0)};
    for (Complex s : {Complex(1.5), Complex(2.2, 1.0), Complex(3.0, -0.5)}) {
        const Complex lhs = completed_Z_hat(s, w);
        const Complex rhs = completed_Z_hat(s, WeightVector{Complex(1.0)}) * completed_Z_hat(s + 2.0, w);
        EXPECT_NEAR(std::abs(lhs / rhs - 1.0), 0.0, 1e-6);
    }
}

TEST(LambdaHat, FunctionalProducts) {
    const WeightVector one{Complex(1.0)}, w{Complex(1.0), Complex(2.0)};
    for (Complex s : {Complex(1.5, 0.3), Complex(2.2, 0.4), Complex(2.7, -1.0)}) {
        EXPECT_NEAR(std::abs(lambda_hat(s, one) / lambda_hat(s + 1.0, one) - 1.0), 0.0, 1e-8);
        const Complex prod = lambda_hat(s, w) * lambda_hat(s + 3.0, w) / (lambda_hat(s + 1.0, w) * lambda_hat(s + 2.0, w));
        EXPECT_NEAR(std::abs(prod - 1.0), 0.0, 1e-5);
        const Complex ddd = lambda_hat(s, one) * lambda_hat(s + 2.0, w);
        EXPECT_NEAR(std::abs(lambda_hat(s, w) / ddd - 1.0), 0.0, 1e-6);
    }
}
