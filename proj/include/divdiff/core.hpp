#ifndef DIVDIFF_CORE_HPP
#define DIVDIFF_CORE_HPP

#include <complex>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace divdiff {

/// A finite sequence of real nodes t_1..t_n with clustered multiplicities:
/// equal values always occupy consecutive positions. mult_index()[j] counts
/// the earlier positions holding the same value, so the j-th member of a
/// cluster carries derivative order mult_index()[j] in a HermiteDataset.
class NodeSequence {
public:
    /// Wraps an already-clustered sequence. Throws std::invalid_argument if
    /// the sequence is empty, non-finite, or has non-adjacent duplicates.
    explicit NodeSequence(std::vector<double> clustered_nodes);

    const std::vector<double>& values() const { return nodes_; }
    const std::vector<int>& mult_index() const { return mult_; }
    std::size_t size() const { return nodes_.size(); }
    double operator[](std::size_t i) const { return nodes_[i]; }

    /// First position of the cluster containing position j.
    std::size_t cluster_start(std::size_t j) const { return j - static_cast<std::size_t>(mult_[j]); }

    /// Largest multiplicity index present (0 when all nodes are distinct).
    int max_mult_index() const;

    bool all_distinct() const { return max_mult_index() == 0; }

    double min() const;
    double max() const;

private:
    std::vector<double> nodes_;
    std::vector<int> mult_;
};

/// Nodes paired with data y(j) = D^{mu_j} f(t_j); values are raw derivatives,
/// not divided by mu_j!.
struct HermiteDataset {
    HermiteDataset(NodeSequence nodes_in, std::vector<double> values_in);

    NodeSequence nodes;
    std::vector<double> values;
};

/// Polynomial in Newton form: p = sum_j w_{j-1}(x) coeffs[j] where
/// w_j(x) = (x-centers[0])...(x-centers[j-1]). coeffs.size() == centers.size()+1.
struct NewtonPoly {
    NewtonPoly(std::vector<double> centers_in, std::vector<double> coeffs_in);

    std::vector<double> centers;
    std::vector<double> coeffs;

    std::size_t order() const { return coeffs.size(); }  // number of coefficients
};

/// Polynomial in the monomial basis; coeffs[k] multiplies x^k. Kept normalized:
/// the trailing coefficient is nonzero unless the polynomial is zero (empty).
struct PowerPoly {
    PowerPoly() = default;
    explicit PowerPoly(std::vector<double> coeffs_in);

    std::vector<double> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

double evaluate(const PowerPoly& p, double z);
PowerPoly multiply(const PowerPoly& a, const PowerPoly& b);
PowerPoly poly_derivative(const PowerPoly& p, int times = 1);

/// Evaluator of f and its derivatives D^m f up to max_order. eval(0,z) is the
/// function value. eval_complex, when set, evaluates f itself at complex
/// arguments (used only by the contour representation).
struct SmoothFunction {
    static constexpr int unlimited = std::numeric_limits<int>::max();

    int max_order = 0;
    std::function<double(int, double)> eval;
    std::function<std::complex<double>(std::complex<double>)> eval_complex;

    double operator()(double z) const { return eval(0, z); }
};

/// Newton weight w_{i}(z) = (z-t_1)...(z-t_i) over the first i entries of t;
/// the empty product (i=0) is 1. Throws std::out_of_range if i > t.size().
double newton_weight(const std::vector<double>& t, std::size_t i, double z);
double newton_weight(const NodeSequence& t, std::size_t i, double z);
std::complex<double> newton_weight(const std::vector<double>& t, std::size_t i, std::complex<double> z);

struct Clustering {
    NodeSequence nodes;
    std::vector<std::size_t> permutation;  // nodes.values()[k] came from raw[permutation[k]]
};

/// Stably sorts raw ascending and snaps chains of nodes within tol of each
/// other (transitively) to the first chain member's value. tol = 0 merges
/// only bitwise-equal nodes.
NodeSequence cluster_nodes(const std::vector<double>& raw, double tol);

/// cluster_nodes plus the stable-sort permutation, for callers that carry data
/// alongside unsorted nodes.
Clustering cluster_nodes_indexed(const std::vector<double>& raw, double tol);

/// Builds a dataset from (node, value) points in any order: points are stably
/// sorted by node, nodes clustered with tol, and within a cluster the k-th
/// member's value is read as the (k-1)-st derivative.
HermiteDataset make_dataset(const std::vector<std::pair<double, double>>& points, double tol = 0.0);

/// Samples y(j) = D^{mu_j} f(t_j). Throws std::invalid_argument when f cannot
/// supply a needed derivative order.
HermiteDataset sample_function(const SmoothFunction& f, const NodeSequence& t);

}  // namespace divdiff

#endif
