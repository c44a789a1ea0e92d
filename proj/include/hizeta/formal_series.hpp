#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hizeta/numerics.hpp"
#include "hizeta/weights.hpp"

namespace hizeta {

/// Truncated power series sum_{n < order} c_n x^n with complex coefficients.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : coeffs_(order, Complex(0.0)) {
        if (order == 0) throw ShapeError("power series: order must be >= 1");
    }
    explicit PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw ShapeError("power series: order must be >= 1");
    }

    static PowerSeries one(std::size_t order) {
        PowerSeries s(order);
        s.coeffs_[0] = 1.0;
        return s;
    }

    /// e^{a x}
    static PowerSeries exponential(Complex a, std::size_t order) {
        PowerSeries s(order);
        Complex term = 1.0;
        for (std::size_t n = 0; n < order; ++n) {
            s.coeffs_[n] = term;
            term *= a / double(n + 1);
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size(); }
    Complex& operator[](std::size_t n) { return coeffs_[n]; }
    const Complex& operator[](std::size_t n) const { return coeffs_[n]; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Substitution x -> a x.
    PowerSeries rescaled(Complex a) const {
        PowerSeries out(order());
        Complex power = 1.0;
        for (std::size_t n = 0; n < order(); ++n) {
            out.coeffs_[n] = coeffs_[n] * power;
            power *= a;
        }
        return out;
    }

    Complex evaluate(Complex x) const {
        Complex acc = 0.0;
        for (std::size_t n = order(); n-- > 0;) acc = acc * x + coeffs_[n];
        return acc;
    }

private:
    std::vector<Complex> coeffs_;
};

inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order())
        throw ShapeError("series_mul: order mismatch " + std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()));
    PowerSeries out(a.order());
    for (std::size_t n = 0; n < a.order(); ++n) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k <= n; ++k) acc += a[k] * b[n - k];
        out[n] = acc;
    }
    return out;
}

inline PowerSeries series_inv(const PowerSeries& a) {
    if (a[0] == Complex(0.0)) throw DomainError("series_inv: constant term is zero");
    PowerSeries out(a.order());
    const Complex inv0 = 1.0 / a[0];
    out[0] = inv0;
    for (std::size_t n = 1; n < a.order(); ++n) {
        Complex acc = 0.0;
        for (std::size_t k = 1; k <= n; ++k) acc += a[k] * out[n - k];
        out[n] = -acc * inv0;
    }
    return out;
}

/// B_0(z, omega) .. B_N(z, omega), the multiple Bernoulli polynomials defined by
///   x^r e^{-zx} / prod_j (1 - e^{-omega_j x}) = sum_n B_n(z, omega) x^n / n!.
struct BernoulliTable {
    Complex z;
    WeightVector omega;
    std::vector<Complex> values;  // B_n(z, omega)
    std::vector<Complex> scaled;  // B_n(z, omega) / n!, the raw series coefficients

    std::size_t size() const noexcept { return values.size(); }
};

inline BernoulliTable multiple_bernoulli(Complex z, const WeightVector& omega, int max_index) {
    if (max_index < 0) throw DomainError("multiple_bernoulli: N must be >= 0");
    if (max_index > 160) throw CapacityError("multiple_bernoulli: N must be <= 160");
    const std::size_t order = std::size_t(max_index) + 1;

    // (1 - e^{-y}) / y = sum (-1)^n y^n / (n+1)!, unit constant term.
    PowerSeries damped(order);
    Complex term = 1.0;
    for (std::size_t n = 0; n < order; ++n) {
        damped[n] = term;
        term *= -1.0 / double(n + 2);
    }
    const PowerSeries unit_factor = series_inv(damped);  // y / (1 - e^{-y})

    PowerSeries product = PowerSeries::exponential(-z, order);
    for (const auto& w : omega) product = series_mul(product, unit_factor.rescaled(w));

    BernoulliTable table{z, omega, {}, {}};
    table.values.resize(order);
    table.scaled.resize(order);
    const Complex inv_prod = 1.0 / omega.product();
    double factorial = 1.0;
    for (std::size_t n = 0; n < order; ++n) {
        if (n > 0) factorial *= double(n);
        table.scaled[n] = product[n] * inv_prod;
        table.values[n] = table.scaled[n] * factorial;
    }
    return table;
}

/// B_n(z, omega) for a single index.
inline Complex multiple_bernoulli_value(int n, Complex z, const WeightVector& omega) {
    return multiple_bernoulli(z, omega, n).values[std::size_t(n)];
}

}  // namespace hizeta
