#ifndef DIVDIFF_DDTABLE_HPP
#define DIVDIFF_DDTABLE_HPP

#include <cstddef>
#include <vector>

#include "divdiff/core.hpp"

namespace divdiff {

/// Triangular table of all divided differences of one dataset:
/// at(i,j) = dd of f over t_i..t_j (0-based, inclusive, i <= j).
///
/// Entries are filled column by column: at(i,i) = f(t_i); for t_i != t_j
/// at(i,j) = (at(i+1,j) - at(i,j-1)) / (t_j - t_i); for a confluent span
/// (t_i = t_j) at(i,j) = D^{j-i} f(t_i) / (j-i)!, read off the dataset. The
/// confluent branch is chosen from the stored multiplicity structure, never
/// by re-comparing floating-point values.
class DDTable {
public:
    explicit DDTable(const HermiteDataset& data);

    const NodeSequence& nodes() const { return nodes_; }
    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const;

    /// (at(0,j) : j = 0..n-1), the Newton coefficients for centers t_0..t_{n-2}.
    std::vector<double> top_row() const;

private:
    std::size_t index(std::size_t i, std::size_t j) const { return j * (j + 1) / 2 + i; }

    NodeSequence nodes_;
    std::size_t n_;
    std::vector<double> entries_;
};

DDTable build_table(const HermiteDataset& data);

/// dd of f over the full node sequence (the table's top-right corner).
double divided_difference(const HermiteDataset& data);

std::vector<double> newton_coeffs(const HermiteDataset& data);

/// The polynomial of degree < n matching the dataset in the Hermite sense:
/// D^{mu_j} r(t_j) = y(j).
NewtonPoly hermite_interpolant(const HermiteDataset& data);

/// Newton coefficients of the same interpolant with respect to centers
/// (t_{order[0]}, t_{order[1]}, ...). Each prefix of `order` (0-based) must
/// occupy a set of consecutive integers; coefficient j is then the table entry
/// spanning that prefix.
std::vector<double> table_diagonal_for_centers(const DDTable& table, const std::vector<std::size_t>& order);

}  // namespace divdiff

#endif
