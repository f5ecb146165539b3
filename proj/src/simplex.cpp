#include "semigraphoid/simplex.hpp"

#include <stdexcept>

namespace sg {

namespace {

void verify_result(const feasibility_problem& p, const feasibility_result& res) {
    int m = p.E.rows, k = p.E.cols;
    if (res.status == lp_status::feasible) {
        for (int r = 0; r < m; ++r) {
            rat acc = 0;
            for (int j = 0; j < k; ++j)
                if (p.E.at(r, j) != 0) acc += p.E.at(r, j) * res.witness[j];
            if (acc != p.f[r]) throw std::logic_error("simplex internal error: witness violates a row");
        }
        for (int j = 0; j < k; ++j)
            if (p.lower[j] && res.witness[j] < *p.lower[j])
                throw std::logic_error("simplex internal error: witness violates a bound");
    } else {
        const rat_vec& y = res.certificate;
        rat rhs_part = 0;
        for (int r = 0; r < m; ++r) rhs_part += y[r] * p.f[r];
        for (int j = 0; j < k; ++j) {
            rat yej = 0;
            for (int r = 0; r < m; ++r)
                if (p.E.at(r, j) != 0) yej += y[r] * p.E.at(r, j);
            if (p.lower[j]) {
                if (yej > 0) throw std::logic_error("simplex internal error: certificate sign on bounded column");
                rhs_part -= yej * *p.lower[j];
            } else if (yej != 0) {
                throw std::logic_error("simplex internal error: certificate nonzero on free column");
            }
        }
        if (rhs_part <= 0) throw std::logic_error("simplex internal error: certificate does not separate");
    }
}

}  // namespace

feasibility_result solve_feasibility(const feasibility_problem& p) {
    int m = p.E.rows, k = p.E.cols;
    if (static_cast<int>(p.f.size()) != m || static_cast<int>(p.lower.size()) != k)
        throw std::invalid_argument("feasibility problem dimension mismatch");

    // substituted columns: bounded var -> one column at offset lower_j;
    // free var -> a +/- column pair
    std::vector<std::pair<int, int>> cols;  // (var, sign)
    for (int j = 0; j < k; ++j) {
        cols.emplace_back(j, +1);
        if (!p.lower[j]) cols.emplace_back(j, -1);
    }
    int nc = static_cast<int>(cols.size());

    rat_vec f2(p.f);
    for (int j = 0; j < k; ++j)
        if (p.lower[j] && *p.lower[j] != 0)
            for (int r = 0; r < m; ++r)
                if (p.E.at(r, j) != 0) f2[r] -= p.E.at(r, j) * *p.lower[j];

    std::vector<int> rowsign(m, 1);
    for (int r = 0; r < m; ++r)
        if (f2[r] < 0) {
            rowsign[r] = -1;
            f2[r] = -f2[r];
        }

    // tableau: m rows x (nc + m + 1) columns, artificial identity, rhs last
    int ncols = nc + m;
    rat_mat T(m, ncols + 1);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < nc; ++c) {
            auto [j, sg] = cols[c];
            if (p.E.at(r, j) != 0) T.at(r, c) = p.E.at(r, j) * (sg * rowsign[r]);
        }
        T.at(r, nc + r) = 1;
        T.at(r, ncols) = f2[r];
    }
    std::vector<int> basis(m);
    for (int r = 0; r < m; ++r) basis[r] = nc + r;

    // sigma_j = c_B B^-1 A_j - c_j for the phase-one objective (min sum of artificials)
    rat_vec sigma(ncols + 1, rat(0));
    for (int c = 0; c <= ncols; ++c) {
        rat s = 0;
        for (int r = 0; r < m; ++r) s += T.at(r, c);
        if (c >= nc && c < ncols) s -= 1;
        sigma[c] = s;
    }

    const long max_iters = 200000;
    for (long it = 0;; ++it) {
        if (it > max_iters) throw std::logic_error("simplex internal error: iteration limit");
        int enter = -1;
        for (int c = 0; c < ncols; ++c)
            if (sigma[c] > 0) { enter = c; break; }  // Bland: smallest index
        if (enter < 0) break;
        int leave = -1;
        rat best;
        for (int r = 0; r < m; ++r) {
            if (T.at(r, enter) <= 0) continue;
            rat ratio = T.at(r, ncols) / T.at(r, enter);
            if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                best = ratio;
                leave = r;
            }
        }
        if (leave < 0) throw std::logic_error("simplex internal error: phase one unbounded");
        rat pv = T.at(leave, enter);
        for (int c = 0; c <= ncols; ++c)
            if (T.at(leave, c) != 0) T.at(leave, c) /= pv;
        for (int r = 0; r < m; ++r) {
            if (r == leave) continue;
            rat f = T.at(r, enter);
            if (f == 0) continue;
            for (int c = 0; c <= ncols; ++c)
                if (T.at(leave, c) != 0) T.at(r, c) -= f * T.at(leave, c);
        }
        {
            rat f = sigma[enter];
            if (f != 0)
                for (int c = 0; c <= ncols; ++c)
                    if (T.at(leave, c) != 0) sigma[c] -= f * T.at(leave, c);
        }
        basis[leave] = enter;
    }

    feasibility_result res;
    if (sigma[ncols] == 0) {
        res.status = lp_status::feasible;
        rat_vec xsub(nc, rat(0));
        for (int r = 0; r < m; ++r)
            if (basis[r] < nc) xsub[basis[r]] = T.at(r, ncols);
        res.witness.assign(k, rat(0));
        for (int c = 0; c < nc; ++c) {
            auto [j, sg] = cols[c];
            if (xsub[c] != 0) res.witness[j] += sg * xsub[c];
        }
        for (int j = 0; j < k; ++j)
            if (p.lower[j]) res.witness[j] += *p.lower[j];
    } else {
        res.status = lp_status::infeasible;
        res.certificate.assign(m, rat(0));
        for (int r = 0; r < m; ++r) res.certificate[r] = (sigma[nc + r] + 1) * rowsign[r];
    }
    verify_result(p, res);
    return res;
}

lp_builder::lp_builder(int nvars) : nvars_(nvars), lower_(nvars, std::nullopt) {}

void lp_builder::set_lower(int var, rat lb) { lower_[var] = std::move(lb); }
void lp_builder::set_free(int var) { lower_[var] = std::nullopt; }

void lp_builder::add_eq(const row& coeffs, rat rhs) {
    rows_.push_back(coeffs);
    rel_.push_back(0);
    rhs_.push_back(std::move(rhs));
}
void lp_builder::add_ge(const row& coeffs, rat rhs) {
    rows_.push_back(coeffs);
    rel_.push_back(+1);
    rhs_.push_back(std::move(rhs));
}
void lp_builder::add_le(const row& coeffs, rat rhs) {
    rows_.push_back(coeffs);
    rel_.push_back(-1);
    rhs_.push_back(std::move(rhs));
}

feasibility_problem lp_builder::build() const {
    int m = rows();
    int nslack = 0;
    for (int r : rel_)
        if (r != 0) ++nslack;
    feasibility_problem p;
    p.E = rat_mat(m, nvars_ + nslack);
    p.f = rhs_;
    p.lower = lower_;
    p.lower.resize(nvars_ + nslack, rat(0));
    int slack = nvars_;
    for (int r = 0; r < m; ++r) {
        for (const auto& [var, coef] : rows_[r]) p.E.at(r, var) += coef;
        if (rel_[r] == +1) p.E.at(r, slack++) = -1;   // coeffs - s = rhs, s >= 0
        else if (rel_[r] == -1) p.E.at(r, slack++) = 1;
    }
    return p;
}

}  // namespace sg
