#include "quadlsq/basis.hpp"

#include <algorithm>
#include <cmath>

#include "quadlsq/errors.hpp"

namespace quadlsq {

NodeSet NodeSet::create(std::vector<double> nodes, Interval iv) {
    if (nodes.empty()) throw InputError("empty node set");
    for (double t : nodes)
        if (!std::isfinite(t)) throw InputError("non-finite node");
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (!(nodes[i - 1] < nodes[i])) throw InputError("unordered nodes");
    return NodeSet(std::move(nodes), iv);
}

NodeSet NodeSet::from_unsorted(std::vector<double> nodes, Interval iv) {
    std::sort(nodes.begin(), nodes.end());
    return create(std::move(nodes), iv);
}

CanonicalBasis build_basis(const NodeSet& ns) {
    const std::size_t n = ns.size();
    CanonicalBasis cb;
    cb.phis.reserve(n);
    cb.qs.reserve(n + 1);

    cb.phis.emplace_back(std::initializer_list<double>{1.0});
    for (std::size_t j = 1; j < n; ++j) cb.phis.push_back(mul_linear(cb.phis.back(), ns[j - 1]));

    cb.qs.push_back(mul_linear(cb.phis.back(), ns[n - 1]));
    for (std::size_t j = n + 1; j <= 2 * n; ++j)
        cb.qs.push_back(mul_linear(cb.qs.back(), ns[cyclic_node_index(j, n) - 1]));
    return cb;
}

}  // namespace quadlsq
