#ifndef SPINGRAPHS_DIVISOR_HPP
#define SPINGRAPHS_DIVISOR_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "point.hpp"

namespace spingraphs {

/// Formal product of point labels with positive integer exponents.
/// Zero-exponent terms are never stored; the empty divisor is the unit.
class Divisor {
public:
    Divisor() = default;

    /// Multiply by p^exponent. Exponent 0 is a no-op.
    Divisor& mul(const PointLabel& p, int exponent = 1) {
        if (exponent < 0)
            throw std::invalid_argument("divisor exponents must be non-negative");
        if (exponent > 0)
            terms_[p] += exponent;
        return *this;
    }

    /// Sum of exponents.
    int degree() const {
        int d = 0;
        for (const auto& [p, m] : terms_)
            d += m;
        return d;
    }

    int multiplicity(const PointLabel& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? 0 : it->second;
    }

    bool contains(const PointLabel& p) const { return terms_.contains(p); }

    /// Number of distinct points.
    int support_size() const { return static_cast<int>(terms_.size()); }

    std::vector<PointLabel> support() const {
        std::vector<PointLabel> s;
        s.reserve(terms_.size());
        for (const auto& [p, m] : terms_)
            s.push_back(p);
        return s;
    }

    /// Replace every point by its conjugate, keeping exponents. An involution.
    Divisor conjugate() const {
        Divisor d;
        for (const auto& [p, m] : terms_)
            d.mul(p.conjugate(), m);
        return d;
    }

    const std::map<PointLabel, int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// "P1 P2^2", "Pc^3", or "1" for the unit.
    std::string to_string() const {
        if (terms_.empty())
            return "1";
        std::string s;
        for (const auto& [p, m] : terms_) {
            if (!s.empty())
                s += ' ';
            s += p.name();
            if (m > 1)
                s += '^' + std::to_string(m);
        }
        return s;
    }

    friend Divisor operator*(const Divisor& a, const Divisor& b) {
        Divisor d = a;
        for (const auto& [p, m] : b.terms_)
            d.mul(p, m);
        return d;
    }

    friend bool operator==(const Divisor&, const Divisor&) = default;

private:
    std::map<PointLabel, int> terms_;
};

/// Number of distinct points of a vertex divisor A_Q.
inline int epsilon_degree(const Divisor& a) { return a.support_size(); }

/// One divisor A_Q per vertex Q.
using DivisorFamily = std::map<PointLabel, Divisor>;

/// True iff incidence is symmetric across the family: Q appears in A_R
/// exactly when R appears in A_Q, for every pair of vertices.
inline bool mutual_incidence(const DivisorFamily& family) {
    for (const auto& [q, aq] : family)
        for (const auto& [r, ar] : family)
            if (aq.contains(r) != ar.contains(q))
                return false;
    return true;
}

} // namespace spingraphs

#endif
