#include "semigraphoid/statement_set.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace sg {

int statement_set::count() const {
    int acc = 0;
    for (auto w : bits) acc += std::popcount(w);
    return acc;
}

bool statement_set::subset_of(const statement_set& o) const {
    for (size_t k = 0; k < bits.size(); ++k)
        if (bits[k] & ~o.bits[k]) return false;
    return true;
}

statement_set statement_set::operator&(const statement_set& o) const {
    statement_set r(n);
    for (size_t k = 0; k < bits.size(); ++k) r.bits[k] = bits[k] & o.bits[k];
    return r;
}

statement_set statement_set::operator|(const statement_set& o) const {
    statement_set r(n);
    for (size_t k = 0; k < bits.size(); ++k) r.bits[k] = bits[k] | o.bits[k];
    return r;
}

std::vector<int> statement_set::members() const {
    std::vector<int> out;
    int g = gamma(n);
    for (int c = 0; c < g; ++c)
        if (test(c)) out.push_back(c);
    return out;
}

statement_set full_set(int n) {
    statement_set s(n);
    for (int c = 0; c < gamma(n); ++c) s.set(c);
    return s;
}

statement_set set_of(int n, const std::vector<ci_statement>& stmts) {
    const statement_table& tab = table_for(n);
    statement_set s(n);
    for (const auto& st : stmts) s.set(tab.ordinal(st));
    return s;
}

std::string statement_set_text(const statement_set& s) {
    const statement_table& tab = table_for(s.n);
    std::string out;
    for (int c : s.members()) {
        out += statement_text(tab.at(c));
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string> statement_tokens(const std::string& text) {
    std::vector<std::string> toks;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
    }
    return toks;
}

}  // namespace

statement_set parse_statement_set(const std::string& text, int n) {
    const statement_table& tab = table_for(n);
    statement_set s(n);
    for (const auto& tok : statement_tokens(text)) s.set(tab.ordinal(parse_statement(tok)));
    return s;
}

int infer_ground_set(const std::string& text) {
    int n = 2;
    for (const auto& tok : statement_tokens(text)) {
        ci_statement st = parse_statement(tok);
        n = std::max(n, st.j);
        for (int e = 1; e <= max_ground_set; ++e)
            if (st.K >> (e - 1) & 1u) n = std::max(n, e);
    }
    return n;
}

std::uint32_t mask32(const statement_set& s) {
    if (gamma(s.n) > 32) throw std::invalid_argument("set too wide for mask32");
    return static_cast<std::uint32_t>(s.bits[0]);
}

statement_set from_mask32(int n, std::uint32_t m) {
    statement_set s(n);
    s.bits[0] = m;
    return s;
}

}  // namespace sg
