#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadlsq/basis.hpp"

namespace quadlsq {

enum class Family { newton_cotes, fejer1, clenshaw_curtis, gauss_legendre, custom };

/// Short CLI spelling: nc, fejer1, cc, gl, custom.
[[nodiscard]] std::string_view family_name(Family f);
/// Accepts the short names plus long forms (newton_cotes, gauss_legendre, ...).
[[nodiscard]] std::optional<Family> parse_family(std::string_view name);

/// n is the total node count for every family, so Clenshaw-Curtis with
/// n nodes uses cos(k pi / (n - 1)), k = 0..n-1.
struct FamilySpec {
    Family family = Family::custom;
    int n = 0;
    std::vector<double> custom_nodes;
    Interval interval;
};

/// Sorted node set for the family on spec.interval. Families are built
/// on [-1, 1] with exact mirror symmetry and mapped affinely to other
/// intervals. Throws InputError("unsupported count") for NC/CC below two
/// nodes or any family below one.
[[nodiscard]] NodeSet generate(const FamilySpec& spec);

/// Equispaced, endpoints included.
[[nodiscard]] std::vector<double> newton_cotes_nodes(int n);
/// Zeros of T_n.
[[nodiscard]] std::vector<double> fejer1_nodes(int n);
/// Extrema of T_{n-1}, endpoints included.
[[nodiscard]] std::vector<double> clenshaw_curtis_nodes(int n);
/// Zeros of P_n by Newton on the three-term recurrence. Throws
/// NumericalError("no convergence") after 100 iterations on any root.
[[nodiscard]] std::vector<double> legendre_nodes(int n);

/// One node literal: a decimal ("0.25", "-1e-3") or a ratio ("-1/2").
[[nodiscard]] double parse_node_literal(std::string_view text);

/// Non-empty, non-comment lines of a node file, whitespace-trimmed.
/// '#' starts a comment anywhere on a line.
[[nodiscard]] std::vector<std::string> read_node_literals(const std::filesystem::path& path);

/// Parses a node file; strictly increasing order is enforced, not repaired.
[[nodiscard]] NodeSet load_node_file(const std::filesystem::path& path, Interval iv = {});

}  // namespace quadlsq
