#pragma once

#include <span>
#include <vector>

#include "quadlsq/poly.hpp"

namespace quadlsq {

/// Strictly increasing abscissas t_1 < ... < t_n (n >= 1) and the
/// integration interval. Nodes need not lie inside the interval.
class NodeSet {
public:
    /// Throws InputError("unordered nodes") unless strictly increasing.
    static NodeSet create(std::vector<double> nodes, Interval iv = {});
    /// Sorts first; duplicates are still rejected.
    static NodeSet from_unsorted(std::vector<double> nodes, Interval iv = {});

    [[nodiscard]] std::span<const double> nodes() const { return nodes_; }
    [[nodiscard]] std::size_t size() const { return nodes_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return nodes_[i]; }
    [[nodiscard]] const Interval& interval() const { return interval_; }

private:
    NodeSet(std::vector<double> nodes, Interval iv) : nodes_(std::move(nodes)), interval_(iv) {}

    std::vector<double> nodes_;
    Interval interval_;
};

/// phi_0 = 1, phi_j = phi_{j-1} (x - t_j) for j < n, then the extension
/// q_n = phi_{n-1} (x - t_n), q_j = q_{j-1} (x - t_r) with r = j mod n taken
/// in {1..n}, up to q_{2n}. Every q_j vanishes at all nodes.
struct CanonicalBasis {
    std::vector<Polynomial> phis;  ///< phi_0 .. phi_{n-1}
    std::vector<Polynomial> qs;    ///< q_n .. q_{2n}

    [[nodiscard]] std::size_t n() const { return phis.size(); }
    /// q_j for n <= j <= 2n.
    [[nodiscard]] const Polynomial& q(std::size_t j) const { return qs.at(j - n()); }
};

/// 1-based node index multiplied into q_j: j mod n, with residue 0 mapped to n.
[[nodiscard]] constexpr std::size_t cyclic_node_index(std::size_t j, std::size_t n) {
    const std::size_t r = j % n;
    return r == 0 ? n : r;
}

[[nodiscard]] CanonicalBasis build_basis(const NodeSet& ns);

}  // namespace quadlsq
