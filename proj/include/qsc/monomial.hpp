#pragma once

/**
 * @file monomial.hpp
 * @brief Dense exponent vectors.
 */

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qsc/variable_table.hpp"

namespace qsc {

using Exponent = std::uint32_t;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
        for (Exponent e : exps_) deg_ += e;
    }

    static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1) {
        Monomial m(nvars);
        m.exps_[index] = power;
        m.deg_ = power;
        return m;
    }

    std::size_t size() const { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const { return exps_; }
    /// Plain exponent sum, ignoring the table's degree assignment.
    std::uint64_t total_degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    /// Degree under the table grading.
    long weighted_degree(const VariableTable& t) const {
        long d = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i) d += static_cast<long>(exps_[i]) * t[i].degree;
        return d;
    }

    /// Sum of exponents restricted to [first, last).
    std::uint64_t degree_in(std::size_t first, std::size_t last) const {
        std::uint64_t d = 0;
        for (std::size_t i = first; i < last; ++i) d += exps_[i];
        return d;
    }

    bool supported_in(std::size_t first, std::size_t last) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0 && (i < first || i >= last)) return false;
        return true;
    }

    /// Copy keeping only the indices in [first, last); others zeroed.
    Monomial restricted(std::size_t first, std::size_t last) const {
        Monomial m(exps_.size());
        for (std::size_t i = first; i < last; ++i) {
            m.exps_[i] = exps_[i];
            m.deg_ += exps_[i];
        }
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        assert(a.size() == b.size());
        Monomial m(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
        m.deg_ = a.deg_ + b.deg_;
        return m;
    }

    /// a / b, requires divides(b, a).
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        assert(divides(b, a));
        Monomial m(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = a.exps_[i] - b.exps_[i];
        m.deg_ = a.deg_ - b.deg_;
        return m;
    }

    friend bool divides(const Monomial& d, const Monomial& m) {
        if (d.deg_ > m.deg_) return false;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d.exps_[i] > m.exps_[i]) return false;
        return true;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
            m.deg_ += m.exps_[i];
        }
        return m;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (Exponent e : exps_) h = (h ^ e) * 1099511628211ull;
        return h;
    }

private:
    std::vector<Exponent> exps_;
    std::uint64_t deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace qsc
