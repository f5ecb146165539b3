#include "semigraphoid/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace sg {

rat parse_rat(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("empty rational token");
    rat v;
    if (v.set_str(tok, 10) != 0) throw std::invalid_argument("bad rational token: '" + tok + "'");
    v.canonicalize();
    return v;
}

std::string rat_text(const rat& v) {
    return v.get_str();
}

std::string matrix_text(const rat_mat& m) {
    std::ostringstream out;
    out << m.rows << ' ' << m.cols << '\n';
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) out << ' ';
            out << rat_text(m.at(r, c));
        }
        out << '\n';
    }
    return out.str();
}

rat_mat parse_matrix(const std::string& text) {
    std::istringstream in(text);
    int rows, cols;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw std::invalid_argument("bad matrix header");
    rat_mat m(rows, cols);
    std::string tok;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (!(in >> tok)) throw std::invalid_argument("matrix data truncated");
            m.at(r, c) = parse_rat(tok);
        }
    return m;
}

rat dot(const rat_vec& a, const rat_vec& b) {
    rat acc = 0;
    for (size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
    return acc;
}

rat_vec primitive_integer_vector(const rat_vec& v) {
    mpz_class lcm_den = 1;
    for (const rat& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class gcd_num = 0;
    std::vector<mpz_class> ints(v.size());
    for (size_t k = 0; k < v.size(); ++k) {
        ints[k] = v[k].get_num() * (lcm_den / v[k].get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), ints[k].get_mpz_t());
    }
    rat_vec out(v.size(), rat(0));
    if (gcd_num == 0) return out;
    for (size_t k = 0; k < v.size(); ++k) out[k] = rat(ints[k] / gcd_num);
    return out;
}

}  // namespace sg
