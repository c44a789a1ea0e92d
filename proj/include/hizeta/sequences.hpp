#pragma once

// Sequences Lambda = {lambda_k} in the three shapes the library supports:
// a finite explicit list, an arithmetic progression l*n or l*(n+1), and the
// semi-lattice generated by a weight vector. Each is regularizable; this
// header provides enumeration, the theta function
// Theta(x, Lambda) = sum_k e^{-lambda_k x} and its small-x expansion, the
// zeta function zeta(s, z, Lambda) = sum_k (z + lambda_k)^{-s}, and the dotted
// regularized product exp(-CT_{s=0} zeta(s, z, Lambda)/s).

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hizeta/barnes.hpp"
#include "hizeta/formal_series.hpp"
#include "hizeta/parse.hpp"

namespace hizeta {

struct ExplicitList {
    std::vector<Complex> values;
};

/// lambda_n = step * (n + offset), n >= 0, offset in {0, 1}.
struct ArithmeticProgression {
    Complex step;
    int offset = 0;
};

struct SemiLattice {
    WeightVector omega;
};

inline bool real_then_imag_less(const Complex& a, const Complex& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

class SequenceSpec {
public:
    using Variant = std::variant<ExplicitList, ArithmeticProgression, SemiLattice>;

    static SequenceSpec list(std::vector<Complex> values) {
        if (values.empty()) throw DomainError("sequence: explicit list must not be empty");
        for (const auto& v : values)
            if (!(v.real() >= 0.0) || !hizeta::is_finite(v))
                throw DomainError("sequence: list entries need Re >= 0, got " + hizeta::to_string(v));
        std::stable_sort(values.begin(), values.end(), real_then_imag_less);
        return SequenceSpec(ExplicitList{std::move(values)});
    }

    static SequenceSpec progression(Complex step, int offset = 0) {
        if (!(step.real() > 0.0)) throw DomainError("sequence: progression step needs Re(l) > 0");
        if (offset != 0 && offset != 1) throw DomainError("sequence: progression offset must be 0 or 1");
        return SequenceSpec(ArithmeticProgression{step, offset});
    }

    static SequenceSpec lattice(WeightVector omega) {
        if (omega.rank() == 0) throw DomainError("sequence: lattice needs at least one generator");
        return SequenceSpec(SemiLattice{std::move(omega)});
    }

    const Variant& variant() const noexcept { return v_; }

    template <class T>
    const T* get_if() const noexcept {
        return std::get_if<T>(&v_);
    }

    bool is_finite() const noexcept { return std::holds_alternative<ExplicitList>(v_); }

    /// True when every element is real.
    bool is_real() const {
        return std::visit(
            [](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, ExplicitList>) {
                    return std::all_of(v.values.begin(), v.values.end(),
                                       [](Complex c) { return c.imag() == 0.0; });
                } else if constexpr (std::is_same_v<T, ArithmeticProgression>) {
                    return v.step.imag() == 0.0;
                } else {
                    return std::all_of(v.omega.begin(), v.omega.end(),
                                       [](Complex c) { return c.imag() == 0.0; });
                }
            },
            v_);
    }

    /// Round-trips through parse_sequence_spec.
    std::string to_string() const;

private:
    explicit SequenceSpec(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

namespace detail {

inline std::string literal(Complex c) {
    char buf[96];
    if (c.imag() == 0.0)
        std::snprintf(buf, sizeof buf, "%.17g", c.real());
    else
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
    return buf;
}

inline std::string join(const std::vector<Complex>& values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += ',';
        out += literal(values[k]);
    }
    return out;
}

}  // namespace detail

inline std::string SequenceSpec::to_string() const {
    if (auto l = get_if<ExplicitList>()) return "list:" + detail::join(l->values);
    if (auto a = get_if<ArithmeticProgression>())
        return "ap:l=" + detail::literal(a->step) + ",offset=" + std::to_string(a->offset);
    return "lattice:" + detail::join(get_if<SemiLattice>()->omega.values());
}

/// `list:a,b,c` | `ap:l=<complex>[,offset=0|1]` | `lattice:<complex>,...`
inline SequenceSpec parse_sequence_spec(std::string_view text) {
    text = detail::trim(text);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("sequence spec needs a 'list:', 'ap:' or 'lattice:' prefix");
    const auto kind = text.substr(0, colon);
    const auto body = text.substr(colon + 1);
    if (kind == "list") return SequenceSpec::list(parse_complex_list(body));
    if (kind == "lattice") return SequenceSpec::lattice(WeightVector(parse_complex_list(body)));
    if (kind == "ap") {
        Complex step;
        bool have_step = false;
        int offset = 0;
        for (auto item : detail::split(body, ',')) {
            item = detail::trim(item);
            if (item.starts_with("l=")) {
                step = parse_complex(item.substr(2));
                have_step = true;
            } else if (item == "offset=0" || item == "offset=1") {
                offset = item.back() - '0';
            } else {
                throw ParseError("unknown progression field '" + std::string(item) + "'");
            }
        }
        if (!have_step) throw ParseError("progression needs l=<complex>");
        return SequenceSpec::progression(step, offset);
    }
    throw ParseError("unknown sequence kind '" + std::string(kind) + "'");
}

/// All lambda with Re(lambda) <= bound, with multiplicity, ordered by (Re, Im).
inline std::vector<Complex> enumerate_up_to(const SequenceSpec& spec, double bound,
                                            const PrecisionPolicy& pol = {}) {
    if (!(bound >= 0.0)) throw DomainError("enumerate_up_to: bound must be >= 0");
    const double capacity = double(pol.max_terms) * 1e6;
    std::vector<Complex> out;
    if (auto l = spec.get_if<ExplicitList>()) {
        for (const auto& v : l->values)
            if (v.real() <= bound) out.push_back(v);
        return out;
    }
    if (auto a = spec.get_if<ArithmeticProgression>()) {
        for (long n = a->offset;; ++n) {
            const Complex v = a->step * double(n);
            if (v.real() > bound) break;
            if (double(out.size()) >= capacity) throw CapacityError("enumerate_up_to: too many terms");
            out.push_back(v);
        }
        return out;
    }
    const auto& omega = spec.get_if<SemiLattice>()->omega;
    auto visit = [&](auto&& self, std::size_t j, Complex partial) -> void {
        if (j == omega.rank()) {
            if (double(out.size()) >= capacity) throw CapacityError("enumerate_up_to: too many terms");
            out.push_back(partial);
            return;
        }
        for (Complex v = partial; v.real() <= bound; v += omega[j]) self(self, j + 1, v);
    };
    visit(visit, 0, 0.0);
    std::stable_sort(out.begin(), out.end(), real_then_imag_less);
    return out;
}

/// sum_k x^{-Re(lambda_k)} in closed form; finite for x > 1.
inline double real_power_sum(const SequenceSpec& spec, double x) {
    if (!(x > 1.0)) throw DomainError("real_power_sum: base must be > 1");
    const double log_x = std::log(x);
    if (auto l = spec.get_if<ExplicitList>()) {
        double sum = 0.0;
        for (const auto& v : l->values) sum += std::exp(-v.real() * log_x);
        return sum;
    }
    if (auto a = spec.get_if<ArithmeticProgression>())
        return std::exp(-a->step.real() * a->offset * log_x) / -std::expm1(-a->step.real() * log_x);
    double prod = 1.0;
    for (const auto& w : spec.get_if<SemiLattice>()->omega) prod /= -std::expm1(-w.real() * log_x);
    return prod;
}

inline Complex theta(double x, const SequenceSpec& spec) {
    if (!(x > 0.0)) throw DomainError("theta: x must be > 0");
    if (auto l = spec.get_if<ExplicitList>()) {
        Complex sum = 0.0;
        for (const auto& v : l->values) sum += std::exp(-v * x);
        return sum;
    }
    if (auto a = spec.get_if<ArithmeticProgression>())
        return std::exp(-a->step * double(a->offset) * x) / (1.0 - std::exp(-a->step * x));
    Complex prod = 1.0;
    for (const auto& w : spec.get_if<SemiLattice>()->omega) prod /= 1.0 - std::exp(-w * x);
    return prod;
}

/// Theta(x) ~ sum_n x^{t_n} T_n(log x) as x -> 0+. All supported sequences
/// give constant T_n, stored as one-coefficient polynomials.
struct ThetaExpansion {
    std::vector<double> exponents;
    std::vector<std::vector<Complex>> polys;

    Complex evaluate(double x) const {
        Complex sum = 0.0;
        const double log_x = std::log(x);
        for (std::size_t n = 0; n < exponents.size(); ++n) {
            Complex poly = 0.0;
            for (std::size_t d = polys[n].size(); d-- > 0;) poly = poly * log_x + polys[n][d];
            sum += std::pow(x, exponents[n]) * poly;
        }
        return sum;
    }
};

inline ThetaExpansion theta_expansion(const SequenceSpec& spec, int terms) {
    if (terms < 1) throw DomainError("theta_expansion: need at least one term");
    ThetaExpansion out;
    if (auto l = spec.get_if<ExplicitList>()) {
        double factorial = 1.0;
        for (int n = 0; n < terms; ++n) {
            if (n > 0) factorial *= n;
            Complex coeff = 0.0;
            for (const auto& v : l->values) coeff += std::pow(-v, n);
            out.exponents.push_back(double(n));
            out.polys.push_back({coeff / factorial});
        }
        return out;
    }
    // e^{-z x} / prod (1 - e^{-omega_j x}) = x^{-r} sum_n B_n(z, omega) x^n / n!
    Complex shift = 0.0;
    WeightVector omega;
    if (auto a = spec.get_if<ArithmeticProgression>()) {
        shift = a->step * double(a->offset);
        omega = WeightVector{a->step};
    } else {
        omega = spec.get_if<SemiLattice>()->omega;
    }
    const auto table = multiple_bernoulli(shift, omega, terms - 1);
    const int r = int(omega.rank());
    for (int n = 0; n < terms; ++n) {
        out.exponents.push_back(double(n - r));
        out.polys.push_back({table.scaled[std::size_t(n)]});
    }
    return out;
}

/// zeta(s, z, Lambda). Infinite sequences go through the Barnes continuation
/// (a progression is the rank-1 lattice shifted by step * offset).
inline Complex seq_zeta(Complex s, Complex z, const SequenceSpec& spec,
                        const PrecisionPolicy& pol = {}) {
    if (!(z.real() > 0.0)) throw DomainError("seq_zeta: Re(z) must be > 0");
    if (auto l = spec.get_if<ExplicitList>()) {
        Complex sum = 0.0;
        for (const auto& v : l->values) sum += complex_power(z + v, -s);
        return sum;
    }
    if (auto a = spec.get_if<ArithmeticProgression>())
        return barnes_zeta(s, z + a->step * double(a->offset), WeightVector{a->step}, pol);
    return barnes_zeta(s, z, spec.get_if<SemiLattice>()->omega, pol);
}

/// log of the dotted regularized product prod_k (z + lambda_k).
///
/// For every supported sequence zeta(s, z, Lambda) is regular at s = 0, so
/// CT_{s=0} zeta(s)/s = zeta'(0); the value is minus that derivative.
inline Complex log_dotted_product(Complex z, const SequenceSpec& spec,
                                  const PrecisionPolicy& pol = {}) {
    if (!(z.real() > 0.0)) throw DomainError("dotted_product: Re(z) must be > 0");
    if (auto l = spec.get_if<ExplicitList>()) {
        Complex sum = 0.0;
        for (const auto& v : l->values) sum += std::log(z + v);
        return sum;
    }
    if (auto a = spec.get_if<ArithmeticProgression>())
        return -log_multiple_gamma(z + a->step * double(a->offset), WeightVector{a->step}, pol);
    return -log_multiple_gamma(z, spec.get_if<SemiLattice>()->omega, pol);
}

inline Complex dotted_product(Complex z, const SequenceSpec& spec, const PrecisionPolicy& pol = {}) {
    return std::exp(log_dotted_product(z, spec, pol));
}

/// The sequence {a_m + b_n}, whose theta function is theta(a) * theta(b).
inline SequenceSpec sum_spec(const SequenceSpec& a, const SequenceSpec& b) {
    auto is_zero_singleton = [](const SequenceSpec& s) {
        auto l = s.get_if<ExplicitList>();
        return l && l->values.size() == 1 && l->values[0] == Complex(0.0);
    };
    if (is_zero_singleton(a)) return b;
    if (is_zero_singleton(b)) return a;

    auto la = a.get_if<ExplicitList>();
    auto lb = b.get_if<ExplicitList>();
    if (la && lb) {
        std::vector<Complex> values;
        values.reserve(la->values.size() * lb->values.size());
        for (const auto& x : la->values)
            for (const auto& y : lb->values) values.push_back(x + y);
        return SequenceSpec::list(std::move(values));
    }

    auto generators = [](const SequenceSpec& s) -> std::optional<std::vector<Complex>> {
        if (auto l = s.get_if<SemiLattice>()) return l->omega.values();
        if (auto p = s.get_if<ArithmeticProgression>(); p && p->offset == 0)
            return std::vector<Complex>{p->step};
        return std::nullopt;
    };
    auto ga = generators(a), gb = generators(b);
    if (ga && gb) {
        ga->insert(ga->end(), gb->begin(), gb->end());
        return SequenceSpec::lattice(WeightVector(std::move(*ga)));
    }
    throw UnsupportedError("sum_spec: no representation for " + a.to_string() + " + " + b.to_string());
}

}  // namespace hizeta
