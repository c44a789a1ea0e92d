#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "hizeta/numerics.hpp"

namespace hizeta {

/// Generators (omega_1, ..., omega_r) of the semi-lattice
/// { n_1 omega_1 + ... + n_r omega_r : n_j >= 0 }. Every Re(omega_j) > 0.
///
/// Rank 0 is allowed and denotes the one-point lattice {0}; it is the base
/// case of every ladder relation (zeta(s, z, ()) = z^{-s}).
class WeightVector {
public:
    WeightVector() = default;
    WeightVector(std::initializer_list<Complex> omegas) : omegas_(omegas) { validate(); }
    explicit WeightVector(std::vector<Complex> omegas) : omegas_(std::move(omegas)) { validate(); }

    std::size_t rank() const noexcept { return omegas_.size(); }
    const Complex& operator[](std::size_t j) const { return omegas_[j]; }
    auto begin() const noexcept { return omegas_.begin(); }
    auto end() const noexcept { return omegas_.end(); }
    const std::vector<Complex>& values() const noexcept { return omegas_; }

    Complex sum() const {
        Complex total = 0.0;
        for (const auto& w : omegas_) total += w;
        return total;
    }

    Complex product() const {
        Complex total = 1.0;
        for (const auto& w : omegas_) total *= w;
        return total;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& w : omegas_) m = std::max(m, std::abs(w));
        return m;
    }

    /// Index of the generator with the largest real part.
    std::size_t widest() const {
        std::size_t best = 0;
        for (std::size_t j = 1; j < omegas_.size(); ++j)
            if (omegas_[j].real() > omegas_[best].real()) best = j;
        return best;
    }

    /// The vector with generator j removed.
    WeightVector without(std::size_t j) const {
        std::vector<Complex> rest;
        rest.reserve(omegas_.size() - 1);
        for (std::size_t k = 0; k < omegas_.size(); ++k)
            if (k != j) rest.push_back(omegas_[k]);
        return WeightVector(std::move(rest));
    }

    /// The last generator dropped: (omega_1, ..., omega_{r-1}).
    WeightVector head() const { return without(omegas_.size() - 1); }

    /// (w, omega_1, ..., omega_r).
    WeightVector prepend(Complex w) const {
        std::vector<Complex> out;
        out.reserve(omegas_.size() + 1);
        out.push_back(w);
        out.insert(out.end(), omegas_.begin(), omegas_.end());
        return WeightVector(std::move(out));
    }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    void validate() const {
        for (const auto& w : omegas_)
            if (!(w.real() > 0.0) || !is_finite(w))
                throw DomainError("weight vector: every omega_j needs Re(omega_j) > 0, got " +
                                  to_string(w));
    }

    std::vector<Complex> omegas_;
};

}  // namespace hizeta
