#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sg {

// Exact arbitrary-precision rationals; always reduced, positive denominator.
using rat = mpq_class;
using rat_vec = std::vector<rat>;

struct rat_mat {
    int rows = 0;
    int cols = 0;
    std::vector<rat> a;

    rat_mat() = default;
    rat_mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

    rat& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const rat& at(int r, int c) const { return a[size_t(r) * cols + c]; }
};

rat parse_rat(const std::string& tok);     // "num/den" or "num"
std::string rat_text(const rat& v);        // reduced "num/den", or "num" when den == 1

// matrix text: first line "rows cols", then row-major tokens
std::string matrix_text(const rat_mat& m);
rat_mat parse_matrix(const std::string& text);

rat dot(const rat_vec& a, const rat_vec& b);

// least positive scalar multiple with integer coprime entries
rat_vec primitive_integer_vector(const rat_vec& v);

}  // namespace sg
