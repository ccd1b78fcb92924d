#include "divdiff/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace divdiff {

namespace {

double parse_scalar(const std::string& token) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed number: '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("malformed number: '" + token + "'");
    return value;
}

std::string strip_comment(const std::string& line) {
    const std::size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

std::string format_scalar(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<double> parse_scalar_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(parse_scalar(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

HermiteDataset read_dataset(std::istream& in, double tol) {
    std::vector<double> t, y;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(strip_comment(line));
        std::string a, b, extra;
        if (!(fields >> a)) continue;  // blank or comment-only line
        if (!(fields >> b) || (fields >> extra)) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected exactly two numbers per record");
        }
        t.push_back(parse_scalar(a));
        y.push_back(parse_scalar(b));
    }
    if (t.empty()) throw std::invalid_argument("empty node sequence");
    for (std::size_t j = 1; j < t.size(); ++j) {
        if (t[j] < t[j - 1]) throw std::invalid_argument("nodes not clustered");
    }

    Clustering c = cluster_nodes_indexed(t, tol);  // already sorted; permutation is identity
    std::vector<double> values(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) values[k] = y[c.permutation[k]];
    return HermiteDataset(std::move(c.nodes), std::move(values));
}

void write_dataset(std::ostream& out, const HermiteDataset& data) {
    for (std::size_t j = 0; j < data.nodes.size(); ++j) {
        out << format_scalar(data.nodes[j]) << ' ' << format_scalar(data.values[j]) << '\n';
    }
}

NewtonPoly read_newton_form(std::istream& in) {
    std::vector<double> centers, coeffs;
    bool have_centers = false, have_coeffs = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(strip_comment(line));
        std::string head;
        if (!(fields >> head)) continue;
        std::vector<double>* target = nullptr;
        if (head == "centers:") {
            target = &centers;
            have_centers = true;
        } else if (head == "coeffs:") {
            target = &coeffs;
            have_coeffs = true;
        } else {
            throw std::invalid_argument("expected 'centers:' or 'coeffs:', got '" + head + "'");
        }
        std::string token;
        while (fields >> token) target->push_back(parse_scalar(token));
    }
    if (!have_centers || !have_coeffs) {
        throw std::invalid_argument("Newton form file needs a centers: and a coeffs: line");
    }
    return NewtonPoly(std::move(centers), std::move(coeffs));
}

void write_newton_form(std::ostream& out, const NewtonPoly& p) {
    out << "centers:";
    for (double c : p.centers) out << ' ' << format_scalar(c);
    out << '\n' << "coeffs:";
    for (double c : p.coeffs) out << ' ' << format_scalar(c);
    out << '\n';
}

}  // namespace divdiff
