#ifndef SPINGRAPHS_PARTITIONS_HPP
#define SPINGRAPHS_PARTITIONS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace spingraphs {

/// Ascending tuple of positive parts.
using Partition = std::vector<int>;

namespace detail {

inline void check_partition_args(int m, int k, int min_part) {
    if (m < 0)
        throw std::invalid_argument("partition target must be >= 0");
    if (k <= 0)
        throw std::invalid_argument("part count must be >= 1");
    if (min_part <= 0)
        throw std::invalid_argument("minimum part must be >= 1");
}

inline void emit_partitions(int m, int k, int min_part, Partition& prefix,
                            std::vector<Partition>& out) {
    if (k == 1) {
        if (m >= min_part) {
            prefix.push_back(m);
            out.push_back(prefix);
            prefix.pop_back();
        }
        return;
    }
    // Smallest remaining part is a; the other k-1 parts are then >= a.
    for (int a = min_part; a * k <= m; ++a) {
        prefix.push_back(a);
        emit_partitions(m - a, k - 1, a, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All partitions of m into exactly k parts, each >= min_part, as ascending
/// tuples in lexicographic order. Empty when none exist.
inline std::vector<Partition> enumerate_partitions(int m, int k, int min_part = 1) {
    detail::check_partition_args(m, k, min_part);
    std::vector<Partition> out;
    Partition prefix;
    prefix.reserve(static_cast<std::size_t>(k));
    detail::emit_partitions(m, k, min_part, prefix, out);
    return out;
}

/// sigma_k^l(m): the number of partitions of m into exactly k parts >= l,
/// by recurrence rather than enumeration. Lowering every part by l-1 reduces
/// to the l=1 table, which satisfies
///   c(k, n) = c(k-1, n-1) + c(k, n-k)
/// (split on whether the smallest part is 1).
inline std::int64_t count_partitions(int m, int k, int min_part = 1) {
    detail::check_partition_args(m, k, min_part);
    const int n_top = m - (min_part - 1) * k;
    if (n_top < k)
        return 0;
    std::vector<std::vector<std::int64_t>> c(
        static_cast<std::size_t>(k) + 1,
        std::vector<std::int64_t>(static_cast<std::size_t>(n_top) + 1, 0));
    c[0][0] = 1;
    for (int j = 1; j <= k; ++j)
        for (int n = j; n <= n_top; ++n)
            c[j][n] = c[j - 1][n - 1] + c[j][n - j];
    return c[k][n_top];
}

/// Unrestricted partition count p(m).
inline std::int64_t total_partitions(int m) {
    if (m < 0)
        throw std::invalid_argument("partition target must be >= 0");
    std::vector<std::int64_t> p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= m; ++part)
        for (int n = part; n <= m; ++n)
            p[n] += p[n - part];
    return p[m];
}

} // namespace spingraphs

#endif
