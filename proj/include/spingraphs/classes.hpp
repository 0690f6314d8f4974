#ifndef SPINGRAPHS_CLASSES_HPP
#define SPINGRAPHS_CLASSES_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partitions.hpp"
#include "point.hpp"

namespace spingraphs {

/// Isomorphism class of an exceptional spin graph at genus g, identified by
/// the ascending exponent tuple khat = (k0, ..., kr) with k0+...+kr = g+1
/// and 0 <= r <= g-1. The (i, p1, ..., pr) coordinates are derived views:
/// i = k0-1 and p_n = k_n - k_{n-1}.
class ExceptionalClass {
public:
    ExceptionalClass(Genus genus, Partition khat)
        : genus_(genus.value()), khat_(std::move(khat)) {
        if (khat_.empty() || static_cast<int>(khat_.size()) > genus_)
            throw std::invalid_argument("khat needs between 1 and g parts");
        int sum = 0;
        int prev = 1;
        for (int part : khat_) {
            if (part < prev)
                throw std::invalid_argument("khat parts must be ascending and >= 1");
            prev = part;
            sum += part;
        }
        if (sum != genus_ + 1)
            throw std::invalid_argument("khat must sum to g+1");
    }

    int genus() const { return genus_; }
    const Partition& khat() const { return khat_; }

    /// Order r: points of the head divisor other than the conjugate point.
    int order() const { return static_cast<int>(khat_.size()) - 1; }

    /// Exponent of the conjugate point in a head divisor: i = k0 - 1.
    int i() const { return khat_.front() - 1; }

    /// Consecutive jumps p_n = k_n - k_{n-1}, n = 1..r.
    std::vector<int> p() const {
        std::vector<int> out;
        out.reserve(khat_.size() - 1);
        for (std::size_t n = 1; n < khat_.size(); ++n)
            out.push_back(khat_[n] - khat_[n - 1]);
        return out;
    }

    /// Total ramification carried by a graph of this class: 2(g - r).
    int branch_number() const { return 2 * (genus_ - order()); }

    /// Vertices of the corresponding graph: the head pair plus r conjugate pairs.
    int vertex_count() const { return 2 * (order() + 1); }

    friend bool operator==(const ExceptionalClass&, const ExceptionalClass&) = default;

    /// Canonical order: genus, then r ascending, then khat lexicographic.
    friend std::strong_ordering operator<=>(const ExceptionalClass& a,
                                            const ExceptionalClass& b) {
        if (auto c = a.genus_ <=> b.genus_; c != 0)
            return c;
        if (auto c = a.khat_.size() <=> b.khat_.size(); c != 0)
            return c;
        return a.khat_ <=> b.khat_;
    }

private:
    int genus_;
    Partition khat_;
};

/// Largest admissible i at genus g and order r: floor((g-r)/(r+1)).
inline int i_max(int g, int r) {
    Genus genus(g);
    if (r < 0 || r > g - 1)
        throw std::invalid_argument("order must satisfy 0 <= r <= g-1");
    return (g - r) / (r + 1);
}

/// N(r) = sigma_{r+1}(g+1): classes of order r at genus g.
inline std::int64_t class_count(int g, int r) {
    Genus genus(g);
    if (r < 0 || r > g - 1)
        throw std::invalid_argument("order must satisfy 0 <= r <= g-1");
    return count_partitions(g + 1, r + 1, 1);
}

/// M(g): classes of every order 0..g-1.
inline std::int64_t total_class_count(int g) {
    Genus genus(g);
    std::int64_t total = 0;
    for (int r = 0; r <= g - 1; ++r)
        total += class_count(g, r);
    return total;
}

/// Every class at genus g in canonical order (r ascending, khat lexicographic).
inline std::vector<ExceptionalClass> classes_for_genus(int g) {
    Genus genus(g);
    std::vector<ExceptionalClass> out;
    for (int r = 0; r <= g - 1; ++r)
        for (Partition& khat : enumerate_partitions(g + 1, r + 1, 1))
            out.emplace_back(genus, std::move(khat));
    return out;
}

/// Classes of order r whose i is maximal, in khat-lexicographic order.
inline std::vector<ExceptionalClass> max_i_classes(int g, int r) {
    const int im = i_max(g, r);
    std::vector<ExceptionalClass> out;
    for (Partition& khat : enumerate_partitions(g + 1, r + 1, 1)) {
        ExceptionalClass c(Genus(g), std::move(khat));
        if (c.i() == im)
            out.push_back(std::move(c));
    }
    return out;
}

/// 1-based khat-lexicographic rank among the same-order classes at the same
/// genus: the s of the S^r_s naming.
inline int s_index(const ExceptionalClass& c) {
    const auto all = enumerate_partitions(c.genus() + 1, c.order() + 1, 1);
    const auto it = std::find(all.begin(), all.end(), c.khat());
    return static_cast<int>(it - all.begin()) + 1;
}

/// Display name "S^r_s".
inline std::string class_label(const ExceptionalClass& c) {
    return "S^" + std::to_string(c.order()) + "_" + std::to_string(s_index(c));
}

} // namespace spingraphs

#endif
