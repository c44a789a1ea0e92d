#pragma once

// Identity suites: each row compares two independently computed sides at one
// point. A suite passes when every row's residual is within its tolerance.

#include <optional>
#include <string>
#include <vector>

#include "hizeta/explicit_formula.hpp"
#include "hizeta/higher_zeta.hpp"

namespace hizeta {

struct VerifyRow {
    std::string point;
    Complex lhs, rhs;
    double residual = 0.0;
    double tolerance = 0.0;

    bool ok() const { return residual <= tolerance; }
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyRow> rows;

    bool passed() const {
        for (const auto& r : rows)
            if (!r.ok()) return false;
        return !rows.empty();
    }
    double max_residual() const {
        double m = 0.0;
        for (const auto& r : rows) m = std::max(m, r.residual);
        return m;
    }
};

struct VerifyOptions {
    std::vector<Complex> points;           // s or z points; empty selects the suite default
    std::vector<WeightVector> weights;     // empty selects (1), (2), (1,2)
    std::optional<SequenceSpec> spec;
    std::optional<ZeroTable> zeros;
    std::size_t nz = 1000;
    Complex z = 2.0, s = 2.0;              // explicit formula point
    std::int64_t prime_bound = std::int64_t(1) << 24;
    std::int64_t n_max = 10000;
    PrecisionPolicy pol{};
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ladder-gamma", "ladder-sine",    "ccc",
                                                "telescope",    "ddd",            "lambda-product",
                                                "aaa",          "bbb",            "euler-dirichlet",
                                                "zhat-symmetry"};
    return names;
}

namespace detail {

inline double relative(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline std::string label(Complex x, const WeightVector* omega = nullptr) {
    std::string out = to_string(x);
    if (omega) {
        out += " omega=(";
        for (std::size_t j = 0; j < omega->rank(); ++j) out += (j ? " " : "") + to_string((*omega)[j]);
        out += ")";
    }
    return out;
}

inline std::vector<WeightVector> default_weights(const VerifyOptions& o) {
    if (!o.weights.empty()) return o.weights;
    return {WeightVector{Complex(1.0)}, WeightVector{Complex(2.0)},
            WeightVector{Complex(1.0), Complex(2.0)}};
}

/// Ten points with Re in [1.5, 3] and Im in [-1.2, 1.5].
inline std::vector<Complex> default_s_points() {
    std::vector<Complex> pts;
    for (int k = 0; k < 10; ++k) pts.emplace_back(1.5 + k / 6.0, -1.2 + 0.3 * k);
    return pts;
}

/// Ten points with Re in (0, 1) and Im in [-1, 1].
inline std::vector<Complex> default_z_points() {
    std::vector<Complex> pts;
    for (int k = 0; k < 10; ++k) pts.emplace_back(0.05 + 0.1 * k, -1.0 + 2.0 * k / 9.0);
    return pts;
}

/// Every nonempty subset I of {0..r-1}: its generator sum and (-1)^{|I|}.
inline std::vector<std::pair<Complex, int>> signed_subset_sums(const WeightVector& omega) {
    std::vector<std::pair<Complex, int>> out;
    const std::size_t r = omega.rank();
    for (std::size_t mask = 1; mask < (std::size_t(1) << r); ++mask) {
        Complex sum = 0.0;
        int sign = 1;
        for (std::size_t j = 0; j < r; ++j)
            if (mask & (std::size_t(1) << j)) {
                sum += omega[j];
                sign = -sign;
            }
        out.emplace_back(sum, sign);
    }
    return out;
}

template <class F>
void ladder_rows(VerifyReport& rep, const std::vector<Complex>& pts,
                 const std::vector<WeightVector>& weights, double tol, F&& rung) {
    for (const auto& omega : weights)
        for (const auto& x : pts)
            for (std::size_t j = 0; j < omega.rank(); ++j) {
                const auto [lhs, rhs] = rung(x, omega, j);
                rep.rows.push_back({label(x, &omega) + " j=" + std::to_string(j + 1), lhs, rhs,
                                    relative(lhs, rhs), tol});
            }
}

}  // namespace detail

/// Runs one named suite. Ladders are checked for every generator j:
///   F(x, omega) = F(x, omega \ omega_j) * F(x + omega_j, omega).
inline VerifyReport run_suite(const std::string& name, const VerifyOptions& o) {
    VerifyReport rep;
    rep.suite = name;
    const auto& pol = o.pol;
    const auto weights = detail::default_weights(o);
    const auto s_pts = o.points.empty() ? detail::default_s_points() : o.points;
    const auto z_pts = o.points.empty() ? detail::default_z_points() : o.points;

    if (name == "ladder-gamma") {
        detail::ladder_rows(rep, z_pts, weights, 1e-7, [&](Complex z, const WeightVector& w, std::size_t j) {
            return std::pair{multiple_gamma(z, w, pol),
                             multiple_gamma(z, w.without(j), pol) * multiple_gamma(z + w[j], w, pol)};
        });
    } else if (name == "ladder-sine") {
        detail::ladder_rows(rep, z_pts, weights, 1e-7, [&](Complex z, const WeightVector& w, std::size_t j) {
            return std::pair{multiple_sine(z, w, pol),
                             multiple_sine(z, w.without(j), pol) * multiple_sine(z + w[j], w, pol)};
        });
    } else if (name == "ccc") {
        detail::ladder_rows(rep, s_pts, weights, 1e-6, [&](Complex s, const WeightVector& w, std::size_t j) {
            return std::pair{lattice_higher_zeta(s, w, pol),
                             lattice_higher_zeta(s, w.without(j), pol) *
                                 lattice_higher_zeta(s + w[j], w, pol)};
        });
        detail::ladder_rows(rep, s_pts, weights, 1e-6, [&](Complex s, const WeightVector& w, std::size_t j) {
            return std::pair{completed_Z_hat(s, w, pol),
                             completed_Z_hat(s, w.without(j), pol) * completed_Z_hat(s + w[j], w, pol)};
        });
        for (std::size_t k = rep.rows.size() / 2; k < rep.rows.size(); ++k)
            rep.rows[k].point = "zhat " + rep.rows[k].point;
    } else if (name == "telescope") {
        for (const auto& w : weights)
            for (const auto& s : s_pts) {
                Complex prod = lattice_higher_zeta(s, w, pol);
                for (const auto& [shift, sign] : detail::signed_subset_sums(w)) {
                    const Complex v = lattice_higher_zeta(s + shift, w, pol);
                    prod *= sign > 0 ? v : 1.0 / v;
                }
                const Complex zeta = riemann_zeta(s, pol);
                rep.rows.push_back({detail::label(s, &w), prod, zeta, detail::relative(prod, zeta), 1e-6});
            }
    } else if (name == "ddd") {
        detail::ladder_rows(rep, s_pts, weights, 1e-6, [&](Complex s, const WeightVector& w, std::size_t j) {
            return std::pair{lambda_hat(s, w, pol),
                             lambda_hat(s, w.without(j), pol) * lambda_hat(s + w[j], w, pol)};
        });
    } else if (name == "lambda-product") {
        for (const auto& w : weights)
            for (const auto& s : s_pts) {
                Complex prod = lambda_hat(s, w, pol);
                for (const auto& [shift, sign] : detail::signed_subset_sums(w)) {
                    const Complex v = lambda_hat(s + shift, w, pol);
                    prod *= sign > 0 ? v : 1.0 / v;
                }
                rep.rows.push_back({detail::label(s, &w), prod, 1.0, std::abs(prod - 1.0), 1e-5});
            }
    } else if (name == "zhat-symmetry") {
        std::vector<Complex> grid = o.points;
        if (grid.empty())
            for (int i = 0; i < 10; ++i)
                for (int k = 0; k < 20; ++k) grid.emplace_back(-2.0 + 5.0 * i / 9.0, -5.0 + 10.0 * k / 19.0);
        for (const auto& s : grid) {
            const Complex a = completed_riemann_zeta(s, pol), b = completed_riemann_zeta(1.0 - s, pol);
            rep.rows.push_back({detail::label(s), a, b, std::abs(a - b) / (1.0 + std::abs(a)), 1e-9});
        }
    } else if (name == "aaa") {
        if (!o.zeros) throw DomainError("verify aaa: a zero table is required (--zeros)");
        const auto terms = explicit_formula_terms(o.z, o.s, o.prime_bound, 0, 0, pol);
        const Complex rhs = terms.total();
        std::vector<std::size_t> counts;
        for (std::size_t n : {std::size_t(100), std::size_t(500), std::size_t(1000)})
            if (n < o.nz) counts.push_back(n);
        counts.push_back(o.nz);
        double first = 0.0;
        for (std::size_t k = 0; k < counts.size(); ++k) {
            const Complex lhs = zero_sum(o.z, o.s, *o.zeros, counts[k]);
            const double res = std::abs(lhs - rhs);
            if (k == 0) first = res;
            const bool last = k + 1 == counts.size();
            rep.rows.push_back({"Nz=" + std::to_string(counts[k]), lhs, rhs, res,
                                last ? 1e-3 : std::numeric_limits<double>::infinity()});
        }
        if (counts.size() > 1) {
            const double last = rep.rows.back().residual;
            rep.rows.push_back({"trend residual(" + std::to_string(counts.back()) + ")*3 vs residual(" +
                                    std::to_string(counts.front()) + ")",
                                3.0 * last, first, 3.0 * last / first, 1.0});
        }
        rep.rows.push_back({"prime tail certificate P=" + std::to_string(terms.prime_bound), 0.0, 0.0,
                            terms.prime_tail_bound, std::numeric_limits<double>::infinity()});
    } else if (name == "bbb") {
        if (!o.zeros) throw DomainError("verify bbb: a zero table is required (--zeros)");
        const auto spec = o.spec.value_or(SequenceSpec::list({0.0, 0.5, 1.0}));
        for (const auto& s : o.points.empty() ? std::vector<Complex>{2.5} : o.points) {
            const auto r = verify_BBB(s, spec, *o.zeros, pol);
            rep.rows.push_back({detail::label(s), r.lhs, r.rhs, r.residual, 1e-7});
        }
    } else if (name == "euler-dirichlet") {
        const auto spec = o.spec.value_or(SequenceSpec::list({0.0}));
        const HigherZetaContext ctx{spec, 1000, pol};
        const auto table = dirichlet_coeffs(ctx, o.n_max);
        const auto pts = o.points.empty() ? std::vector<Complex>{2.5, Complex(2.5, 3.0)} : o.points;
        for (const auto& s : pts) {
            Complex series = 0.0;
            for (std::int64_t n = o.n_max; n >= 1; --n)
                series += table[n] * std::exp(-s * std::log(double(n)));
            const Complex product = higher_zeta(s, ctx);
            rep.rows.push_back({detail::label(s) + " N=" + std::to_string(o.n_max), product, series,
                                std::abs(product - series), 1e-6});
        }
    } else {
        throw DomainError("unknown verification suite '" + name + "'");
    }
    return rep;
}

}  // namespace hizeta
