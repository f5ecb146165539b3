#include "semigraphoid/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sg::fixtures {

namespace raw {
#include "fixtures_data.inc"
}  // namespace raw

std::uint64_t fnv1a(const char* data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char* p = data; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 0x100000001b3ULL;
    }
    return h;
}

void verify_checksums() {
    struct entry {
        const char* data;
        std::uint64_t sum;
    };
    static const entry table[] = {
        {raw::axioms5_reference, 0x72b258df9ab9f02dULL},
        {raw::axioms4_reference, 0x63e53b94c0d7766fULL},
        {raw::m4_statements, 0x720fae8ffa4e2145ULL},
        {raw::gamma5_classes, 0x163f8f0d23aeffcdULL},
        {raw::gamma5_statements, 0x20c5ffd98f55a4aaULL},
        {raw::b5_imset, 0xad48d3fa34ec9979ULL},
        {raw::alpha5, 0x675b2f7ca224ded2ULL},
        {raw::beta5, 0x13e69a06af4d5566ULL},
        {raw::g5_move, 0xb1f9c22a7e40b653ULL},
        {raw::witness_2b, 0xe562493b9424c27dULL},
        {raw::polytope10, 0x1aa803e486947d28ULL},
        {raw::table4_reference, 0x51e7e44de018b86aULL},
        {raw::figure1_partition, 0xecc912f8d1c0252dULL},
        {raw::cubics4, 0xdda566dd76bdfb2dULL},
        {raw::quartic4, 0xfd0e84ac0079823fULL},
        {raw::prime_codim12, 0x56d14c371b5be897ULL},
        {raw::prime_codim15, 0x3323ea0478ad36bfULL},
        {raw::prime_codim16, 0x162889d001f2c32fULL},
    };
    for (const auto& e : table)
        if (fnv1a(e.data) != e.sum) throw std::logic_error("embedded fixture checksum mismatch");
}

namespace {

std::vector<std::string> lines_of(const char* data) {
    std::vector<std::string> out;
    std::istringstream in(data);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

std::vector<long long> parse_multiplicities(const char* data, int n) {
    const statement_table& tab = table_for(n);
    std::vector<long long> v(tab.size(), 0);
    for (const auto& line : lines_of(data)) v[tab.ordinal(parse_statement(line))] += 1;
    return v;
}

}  // namespace

const statement_set& m4() {
    static statement_set s = parse_statement_set(raw::m4_statements, 4);
    return s;
}

const std::vector<axiom_equation>& axioms5() {
    static std::vector<axiom_equation> eqs = [] {
        const statement_table& tab = table_for(5);
        std::vector<axiom_equation> out;
        for (const auto& line : lines_of(raw::axioms5_reference)) out.push_back(parse_axiom(line, tab));
        return out;
    }();
    return eqs;
}

namespace {

std::pair<std::vector<axiom_equation>, std::vector<int>> parse_axioms4() {
    const statement_table& tab = table_for(4);
    const auto& canon = generate_axioms(4);
    std::vector<axiom_equation> eqs;
    std::vector<int> marked;
    for (auto line : lines_of(raw::axioms4_reference)) {
        bool mark = line.size() > 1 && line[0] == '!';
        if (mark || line[0] == ' ') line = line.substr(2);
        axiom_equation e = parse_axiom(line, tab);
        if (mark) {
            auto it = std::find(canon.begin(), canon.end(), e);
            if (it == canon.end()) throw std::logic_error("marked axiom missing from the generated list");
            marked.push_back(static_cast<int>(it - canon.begin()));
        }
        eqs.push_back(e);
    }
    return {eqs, marked};
}

}  // namespace

const std::vector<axiom_equation>& axioms4() {
    static std::vector<axiom_equation> eqs = parse_axioms4().first;
    return eqs;
}

const std::vector<int>& marked_axioms4() {
    static std::vector<int> marked = parse_axioms4().second;
    return marked;
}

const std::vector<axiom_equation>& marked_axioms4_oriented() {
    static std::vector<axiom_equation> eqs = [] {
        const statement_table& tab = table_for(4);
        std::vector<axiom_equation> out;
        for (auto line : lines_of(raw::axioms4_reference)) {
            if (line.size() < 2 || line[0] != '!') continue;
            std::istringstream in(line.substr(2));
            std::string sa, plus1, sb, eq, sc, plus2, sd;
            if (!(in >> sa >> plus1 >> sb >> eq >> sc >> plus2 >> sd))
                throw std::logic_error("bad marked axiom line");
            out.push_back(axiom_equation{tab.ordinal(parse_statement(sa)), tab.ordinal(parse_statement(sb)),
                                         tab.ordinal(parse_statement(sc)), tab.ordinal(parse_statement(sd))});
        }
        if (out.size() != 4) throw std::logic_error("expected four marked axioms");
        return out;
    }();
    return eqs;
}

const rank_partition& gamma5_classes() {
    static rank_partition p = parse_partition(raw::gamma5_classes, 5);
    return p;
}

const statement_set& gamma5() {
    static statement_set s = parse_statement_set(raw::gamma5_statements, 5);
    return s;
}

const imset& b5() {
    static imset b = parse_imset(raw::b5_imset, 5);
    return b;
}

const std::vector<long long>& alpha5() {
    static std::vector<long long> v = parse_multiplicities(raw::alpha5, 5);
    return v;
}

const std::vector<long long>& beta5() {
    static std::vector<long long> v = parse_multiplicities(raw::beta5, 5);
    return v;
}

const markov_move& g5() {
    static markov_move m = parse_move(raw::g5_move, 5);
    return m;
}

const std::vector<long long>& witness_2b() {
    static std::vector<long long> v = parse_multiplicities(raw::witness_2b, 5);
    return v;
}

const h_polytope& polytope10() {
    static h_polytope h = parse_polytope(raw::polytope10);
    return h;
}

const std::vector<classification_row>& table4() {
    static std::vector<classification_row> rows = [] {
        std::vector<classification_row> out;
        for (const auto& line : lines_of(raw::table4_reference)) {
            classification_row r;
            std::istringstream in(line);
            std::string type;
            long nonsimp, simp, total;
            if (!(in >> r.size >> type >> nonsimp >> simp >> total))
                throw std::logic_error("bad embedded table row");
            r.non_simplicial = nonsimp;
            r.simplicial = simp;
            int v = 0;
            for (char c : type) {
                if (c >= '0' && c <= '9') v = v * 10 + (c - '0');
                if (c == ',' || c == ')') {
                    r.type.push_back(v);
                    v = 0;
                }
            }
            if (r.total() != total) throw std::logic_error("embedded table row does not add up");
            out.push_back(std::move(r));
        }
        return out;
    }();
    return rows;
}

const rank_partition& figure1_partition() {
    static rank_partition p = parse_partition(raw::figure1_partition, 4);
    return p;
}

const std::vector<markov_move>& cubics4() {
    static std::vector<markov_move> moves = [] {
        std::vector<markov_move> out;
        auto all = lines_of(raw::cubics4);
        for (size_t k = 0; k + 1 < all.size(); k += 2)
            out.push_back(parse_move(all[k] + "\n" + all[k + 1] + "\n", 4));
        return out;
    }();
    return moves;
}

const markov_move& quartic4() {
    static markov_move m = parse_move(raw::quartic4, 4);
    return m;
}

const std::vector<monomial_prime>& primes4() {
    static std::vector<monomial_prime> primes = [] {
        std::vector<monomial_prime> out;
        for (const char* data : {raw::prime_codim12, raw::prime_codim15, raw::prime_codim16}) {
            monomial_prime p;
            p.n = 4;
            p.vars = parse_statement_set(data, 4);
            out.push_back(std::move(p));
        }
        return out;
    }();
    return primes;
}

void export_fixtures(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    auto write = [&](const std::string& name, const char* data) {
        std::ofstream out(fs::path(dir) / name);
        if (!out) throw std::runtime_error("cannot write fixture file in " + dir);
        out << data;
    };
    write("axioms5_reference.txt", raw::axioms5_reference);
    write("axioms4_reference.txt", raw::axioms4_reference);
    write("m4.statements", raw::m4_statements);
    write("gamma5.classes", raw::gamma5_classes);
    write("gamma5.statements", raw::gamma5_statements);
    write("b5.imset", raw::b5_imset);
    write("alpha5.statements", raw::alpha5);
    write("beta5.statements", raw::beta5);
    write("g5.move", raw::g5_move);
    write("witness_2b.statements", raw::witness_2b);
    write("polytope10.points", raw::polytope10);
    write("table4_reference.tsv", raw::table4_reference);
    write("figure1.classes", raw::figure1_partition);
    write("cubics4.moves", raw::cubics4);
    write("quartic4.move", raw::quartic4);
    write("prime_codim12.statements", raw::prime_codim12);
    write("prime_codim15.statements", raw::prime_codim15);
    write("prime_codim16.statements", raw::prime_codim16);
}

}  // namespace sg::fixtures
