#ifndef SPINGRAPHS_POINT_HPP
#define SPINGRAPHS_POINT_HPP

#include <compare>
#include <stdexcept>
#include <string>

namespace spingraphs {

/// Genus of the underlying hyperelliptic surface. Valid from 2 up.
class Genus {
public:
    explicit Genus(int g) : g_(g) {
        if (g_ < 2)
            throw std::invalid_argument("genus must be >= 2, got " + std::to_string(g_));
    }

    int value() const { return g_; }

    friend auto operator<=>(const Genus&, const Genus&) = default;

private:
    int g_;
};

/// Symbolic point on the surface. An ordinary label (index 0 is the base
/// point P, index j >= 1 is P_j) comes in a conjugate pair under the
/// hyperelliptic involution; a Weierstrass label W_j is its own conjugate.
/// No coordinates are attached: everything downstream depends only on
/// incidence and multiplicity data.
class PointLabel {
public:
    enum class Family { Ordinary, Weierstrass };

    static PointLabel base(bool conjugated = false) {
        return {Family::Ordinary, 0, conjugated};
    }

    static PointLabel indexed(int j, bool conjugated = false) {
        if (j < 1)
            throw std::invalid_argument("indexed point label needs j >= 1");
        return {Family::Ordinary, j, conjugated};
    }

    static PointLabel weierstrass(int j) {
        if (j < 0)
            throw std::invalid_argument("weierstrass point label needs j >= 0");
        return {Family::Weierstrass, j, false};
    }

    Family family() const { return family_; }
    int index() const { return index_; }
    bool is_conjugated() const { return conjugated_; }
    bool is_self_conjugate() const { return family_ == Family::Weierstrass; }

    PointLabel conjugate() const {
        if (family_ == Family::Weierstrass)
            return *this;
        return {family_, index_, !conjugated_};
    }

    /// ASCII id: "P", "Pc", "P1", "P1c", ..., "W0", "W1", ...
    std::string name() const {
        if (family_ == Family::Weierstrass)
            return "W" + std::to_string(index_);
        std::string s = "P";
        if (index_ > 0)
            s += std::to_string(index_);
        if (conjugated_)
            s += 'c';
        return s;
    }

    friend auto operator<=>(const PointLabel&, const PointLabel&) = default;

private:
    PointLabel(Family f, int j, bool c) : family_(f), index_(j), conjugated_(c) {}

    Family family_;
    int index_;
    bool conjugated_;
};

} // namespace spingraphs

#endif
