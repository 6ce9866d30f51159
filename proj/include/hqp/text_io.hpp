// text_io.hpp - Plain-text formats for polynomials and Ising models.
#ifndef HQP_TEXT_IO_HPP
#define HQP_TEXT_IO_HPP

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hqp/ising.hpp"
#include "hqp/polynomial.hpp"

namespace hqp {

namespace detail {

inline std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace detail

// Format: header "vars <N> maxdeg <D>", then one line per term
// "coeff i1 i2 ...". The constant term carries no indices. Terms are ordered
// by tuple lexicographic order, which the underlying map already provides.
inline std::string polynomial_to_text(const BinaryPolynomial &poly) {
    std::string out = "vars " + std::to_string(poly.num_vars()) + " maxdeg " +
                      std::to_string(poly.degree()) + "\n";
    for (const auto &[vars, coeff] : poly.terms()) {
        out += detail::shortest(coeff);
        for (int v : vars)
            out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

inline BinaryPolynomial polynomial_from_text(const std::string &text) {
    std::istringstream in(text);
    std::string keyword;
    int num_vars = 0, maxdeg = 0;
    if (!(in >> keyword >> num_vars) || keyword != "vars")
        throw std::invalid_argument("polynomial parse error: expected 'vars <N>' header");
    if (!(in >> keyword >> maxdeg) || keyword != "maxdeg")
        throw std::invalid_argument("polynomial parse error: expected 'maxdeg <D>' header");
    BinaryPolynomial poly(num_vars);
    std::string line;
    std::getline(in, line); // rest of header line
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream fields(line);
        double coeff;
        if (!(fields >> coeff))
            throw std::invalid_argument("polynomial parse error: malformed coefficient");
        BinaryPolynomial::Term vars;
        int v;
        while (fields >> v)
            vars.push_back(v);
        if (!fields.eof())
            throw std::invalid_argument("polynomial parse error: malformed variable index");
        poly.add_term(std::move(vars), coeff);
    }
    return poly;
}

// Format: "spins <N>", "offset <v>", then "h <i> <v>" and "J <i> <j> <v>"
// lines in index order.
inline std::string ising_to_text(const IsingModel &model) {
    std::string out = "spins " + std::to_string(model.num_spins) + "\n";
    out += "offset " + detail::shortest(model.offset) + "\n";
    for (int i = 0; i < model.num_spins; ++i)
        if (model.field[i] != 0.0)
            out += "h " + std::to_string(i) + " " + detail::shortest(model.field[i]) + "\n";
    for (const auto &[pair, j] : model.coupling)
        out += "J " + std::to_string(pair.first) + " " + std::to_string(pair.second) + " " +
               detail::shortest(j) + "\n";
    return out;
}

inline IsingModel ising_from_text(const std::string &text) {
    std::istringstream in(text);
    std::string keyword;
    IsingModel model;
    if (!(in >> keyword >> model.num_spins) || keyword != "spins")
        throw std::invalid_argument("ising parse error: expected 'spins <N>' header");
    model.field.assign(model.num_spins, 0.0);
    while (in >> keyword) {
        if (keyword == "offset") {
            if (!(in >> model.offset))
                throw std::invalid_argument("ising parse error: malformed offset");
        } else if (keyword == "h") {
            int i;
            double v;
            if (!(in >> i >> v) || i < 0 || i >= model.num_spins)
                throw std::invalid_argument("ising parse error: malformed field line");
            model.field[i] += v;
        } else if (keyword == "J") {
            int i, j;
            double v;
            if (!(in >> i >> j >> v) || i < 0 || j < 0 || i >= model.num_spins ||
                j >= model.num_spins || i == j)
                throw std::invalid_argument("ising parse error: malformed coupling line");
            if (i > j)
                std::swap(i, j);
            model.coupling[{i, j}] += v;
        } else {
            throw std::invalid_argument("ising parse error: unknown keyword '" + keyword + "'");
        }
    }
    return model;
}

} // namespace hqp

#endif
