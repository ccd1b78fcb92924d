#include "divdiff/ddtable.hpp"

#include <stdexcept>

namespace divdiff {

DDTable::DDTable(const HermiteDataset& data) : nodes_(data.nodes), n_(data.nodes.size()) {
    entries_.resize(n_ * (n_ + 1) / 2);
    const std::vector<double>& t = nodes_.values();
    const std::vector<int>& mu = nodes_.mult_index();
    const std::vector<double>& y = data.values;

    for (std::size_t j = 0; j < n_; ++j) {
        entries_[index(j, j)] = y[nodes_.cluster_start(j)];
        for (std::size_t i = j; i-- > 0;) {
            const std::size_t span = j - i;
            if (static_cast<std::size_t>(mu[j]) >= span) {
                // t_i = t_j: the whole span is one cluster, so the entry is a
                // scaled derivative datum rather than a 0/0 quotient.
                double entry = y[nodes_.cluster_start(i) + span];
                for (std::size_t m = 2; m <= span; ++m) entry /= static_cast<double>(m);
                entries_[index(i, j)] = entry;
            } else {
                entries_[index(i, j)] =
                    (entries_[index(i + 1, j)] - entries_[index(i, j - 1)]) / (t[j] - t[i]);
            }
        }
    }
}

double DDTable::at(std::size_t i, std::size_t j) const {
    if (j >= n_ || i > j) throw std::out_of_range("table index out of range");
    return entries_[index(i, j)];
}

std::vector<double> DDTable::top_row() const {
    std::vector<double> out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = entries_[index(0, j)];
    return out;
}

DDTable build_table(const HermiteDataset& data) { return DDTable(data); }

double divided_difference(const HermiteDataset& data) {
    return DDTable(data).at(0, data.nodes.size() - 1);
}

std::vector<double> newton_coeffs(const HermiteDataset& data) { return DDTable(data).top_row(); }

NewtonPoly hermite_interpolant(const HermiteDataset& data) {
    std::vector<double> centers(data.nodes.values().begin(), data.nodes.values().end() - 1);
    return NewtonPoly(std::move(centers), newton_coeffs(data));
}

std::vector<double> table_diagonal_for_centers(const DDTable& table, const std::vector<std::size_t>& order) {
    const std::size_t n = table.size();
    if (order.size() != n) throw std::invalid_argument("center order must list every node index once");
    if (order[0] >= n) throw std::out_of_range("center order index out of range");

    std::vector<double> out(n);
    std::size_t lo = order[0];
    std::size_t hi = order[0];
    out[0] = table.at(lo, hi);
    for (std::size_t j = 1; j < n; ++j) {
        const std::size_t idx = order[j];
        if (idx >= n) throw std::out_of_range("center order index out of range");
        if (idx + 1 == lo) {
            lo = idx;
        } else if (idx == hi + 1) {
            hi = idx;
        } else {
            throw std::invalid_argument("center order prefix is not a consecutive range");
        }
        out[j] = table.at(lo, hi);
    }
    return out;
}

}  // namespace divdiff
