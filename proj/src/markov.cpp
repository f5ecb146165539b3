#include "semigraphoid/markov.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "semigraphoid/axioms.hpp"
#include "semigraphoid/submodular.hpp"

namespace sg {

std::vector<long long> markov_move::plus() const {
    std::vector<long long> out(v.size(), 0);
    for (size_t k = 0; k < v.size(); ++k) out[k] = std::max(v[k], 0LL);
    return out;
}
std::vector<long long> markov_move::minus() const {
    std::vector<long long> out(v.size(), 0);
    for (size_t k = 0; k < v.size(); ++k) out[k] = std::max(-v[k], 0LL);
    return out;
}
long long markov_move::degree_plus() const {
    long long d = 0;
    for (long long x : v) d += std::max(x, 0LL);
    return d;
}
bool markov_move::zero() const {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

bool in_kernel(const markov_move& m) {
    return apply_map(table_for(m.n), m.v).is_zero();
}

bool is_indispensable(const markov_move& m, int degree_cap) {
    if (m.zero()) throw std::invalid_argument("indispensability of the zero move");
    if (!in_kernel(m)) throw std::invalid_argument("move is not in the kernel");
    const statement_table& tab = table_for(m.n);
    auto fib = enumerate_fiber(apply_map(tab, m.plus()), degree_cap);
    if (fib.size() != 2) return false;
    std::vector<std::vector<long long>> expect{m.plus(), m.minus()};
    std::sort(fib.begin(), fib.end());
    std::sort(expect.begin(), expect.end());
    return fib == expect;
}

std::vector<long long> canonical_sign(std::vector<long long> v) {
    for (long long x : v) {
        if (x > 0) return v;
        if (x < 0) break;
    }
    for (long long& x : v) x = -x;
    return v;
}

std::set<std::vector<long long>> orbit(const markov_move& m) {
    const statement_table& tab = table_for(m.n);
    std::set<std::vector<long long>> out;
    permutation sigma(m.n);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        std::vector<long long> img(m.v.size(), 0);
        for (size_t c = 0; c < m.v.size(); ++c)
            if (m.v[c] != 0) img[tab.ordinal(apply_permutation(sigma, tab.at(static_cast<int>(c))))] += m.v[c];
        out.insert(canonical_sign(img));
        for (long long& x : img) x = -x;
        out.insert(canonical_sign(img));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

connectivity_report connectivity_check(const std::vector<markov_move>& basis,
                                       const std::vector<imset>& targets, int degree_cap) {
    connectivity_report report;
    for (const auto& m : basis)
        if (!in_kernel(m)) throw std::invalid_argument("basis move not in the kernel");
    for (const auto& b : targets) {
        auto fib = enumerate_fiber(b, degree_cap);
        std::map<std::vector<long long>, int> index;
        for (size_t k = 0; k < fib.size(); ++k) index[fib[k]] = static_cast<int>(k);
        std::vector<int> parent(fib.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (const auto& x : fib)
            for (const auto& m : basis)
                for (int sign : {+1, -1}) {
                    std::vector<long long> y(x);
                    bool ok = true;
                    for (size_t c = 0; c < y.size(); ++c) {
                        y[c] += sign * m.v[c];
                        if (y[c] < 0) ok = false;
                    }
                    if (!ok) continue;
                    auto it = index.find(y);
                    if (it == index.end()) continue;
                    int ra = find(index[x]), rb = find(it->second);
                    if (ra != rb) parent[ra] = rb;
                }
        std::set<int> roots;
        for (size_t k = 0; k < fib.size(); ++k) roots.insert(find(static_cast<int>(k)));
        int comps = fib.empty() ? 0 : static_cast<int>(roots.size());
        report.fibers.push_back({b, fib.size(), comps});
        if (comps > 1) report.all_connected = false;
    }
    return report;
}

bool prime_contains_axioms(const monomial_prime& p) {
    if (p.vars.count() == 0) return false;
    for (const auto& e : generate_axioms(p.n)) {
        bool lhs = p.vars.test(e.x) || p.vars.test(e.y);
        bool rhs = p.vars.test(e.z) || p.vars.test(e.w);
        if (!lhs || !rhs) return false;
    }
    return true;
}

std::pair<long, long> count_01_points(int n, int threads) {
    long sg_count = enumerate_semigraphoids(n, threads, [](std::uint32_t) {});
    long sub_count = count_submodular(n, threads);
    return {sg_count, sub_count};
}

bool zero_one_point_annihilates(const statement_set& s) {
    for (const auto& e : generate_axioms(s.n)) {
        int lhs = s.test(e.x) && s.test(e.y) ? 1 : 0;
        int rhs = s.test(e.z) && s.test(e.w) ? 1 : 0;
        if (lhs != rhs) return false;
    }
    return true;
}

std::string move_text(const markov_move& m) {
    const statement_table& tab = table_for(m.n);
    std::string plus = "+", minus = "-";
    for (size_t c = 0; c < m.v.size(); ++c) {
        if (m.v[c] == 0) continue;
        std::string tok = " " + statement_text(tab.at(static_cast<int>(c)));
        long long mag = std::llabs(m.v[c]);
        if (mag != 1) tok += "^" + std::to_string(mag);
        (m.v[c] > 0 ? plus : minus) += tok;
    }
    return plus + "\n" + minus + "\n";
}

namespace {

void parse_move_line(const std::string& line, int sign, const statement_table& tab,
                     std::vector<long long>& v) {
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        long long mult = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            mult = std::stoll(tok.substr(caret + 1));
            if (mult <= 0) throw std::invalid_argument("move multiplicity must be positive");
            tok.erase(caret);
        }
        v[tab.ordinal(parse_statement(tok))] += sign * mult;
    }
}

std::pair<std::string, std::string> split_move_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line, plus, minus;
    bool saw_plus = false, saw_minus = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string head;
        if (!(probe >> head)) continue;
        std::string rest;
        std::getline(probe, rest);
        if (head == "+") {
            plus = rest;
            saw_plus = true;
        } else if (head == "-") {
            minus = rest;
            saw_minus = true;
        } else {
            throw std::invalid_argument("move line must start with '+' or '-'");
        }
    }
    if (!saw_plus || !saw_minus) throw std::invalid_argument("move file needs a '+' line and a '-' line");
    return {plus, minus};
}

}  // namespace

markov_move parse_move(const std::string& text, int n) {
    auto [plus, minus] = split_move_lines(text);
    const statement_table& tab = table_for(n);
    markov_move m;
    m.n = n;
    m.v.assign(tab.size(), 0);
    parse_move_line(plus, +1, tab, m.v);
    parse_move_line(minus, -1, tab, m.v);
    return m;
}

int infer_move_ground_set(const std::string& text) {
    auto [plus, minus] = split_move_lines(text);
    std::string all = plus + " " + minus;
    // strip ^mult suffixes before statement inference
    std::string cleaned;
    for (size_t k = 0; k < all.size(); ++k) {
        if (all[k] == '^') {
            while (k + 1 < all.size() && std::isdigit(static_cast<unsigned char>(all[k + 1]))) ++k;
            continue;
        }
        cleaned += all[k];
    }
    return infer_ground_set(cleaned);
}

}  // namespace sg
