#ifndef DIVDIFF_IO_HPP
#define DIVDIFF_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "divdiff/core.hpp"

namespace divdiff {

/// One scalar, shortest form that round-trips binary64 (up to 17 significant
/// digits).
std::string format_scalar(double x);

/// Comma-separated list of decimal literals ("0.5,1,2"). Rejects empty input
/// and malformed entries.
std::vector<double> parse_scalar_list(const std::string& text);

/// Dataset files: one "t y" record per line, '#' starts a comment. Records
/// must be ascending in t with repeated t values adjacent; the k-th record of
/// a repeated t carries the (k-1)-st derivative. tol merges near-equal nodes
/// the same way cluster_nodes does.
HermiteDataset read_dataset(std::istream& in, double tol = 0.0);
void write_dataset(std::ostream& out, const HermiteDataset& data);

/// Newton-form files: "centers:" line then "coeffs:" line, whitespace
/// separated decimals, one more coefficient than centers.
NewtonPoly read_newton_form(std::istream& in);
void write_newton_form(std::ostream& out, const NewtonPoly& p);

}  // namespace divdiff

#endif
