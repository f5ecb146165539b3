#include "semigraphoid/semigraphoid.hpp"

#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace sg {

bool is_semigraphoid(const statement_set& s) {
    for (const auto& e : generate_axioms(s.n)) {
        bool lhs = s.test(e.x) && s.test(e.y);
        bool rhs = s.test(e.z) && s.test(e.w);
        if (lhs != rhs) return false;
    }
    return true;
}

statement_set closure(const statement_set& s) {
    statement_set out = s;
    const auto& axioms = generate_axioms(s.n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : axioms) {
            if (out.test(e.x) && out.test(e.y) && !(out.test(e.z) && out.test(e.w))) {
                out.set(e.z);
                out.set(e.w);
                changed = true;
            }
            if (out.test(e.z) && out.test(e.w) && !(out.test(e.x) && out.test(e.y))) {
                out.set(e.x);
                out.set(e.y);
                changed = true;
            }
        }
    }
    return out;
}

bool is_coarsest(const statement_set& s) {
    if (!is_semigraphoid(s)) throw std::invalid_argument("is_coarsest: input is not a semigraphoid");
    statement_set full = full_set(s.n);
    if (s == full) return false;
    for (int c = 0; c < gamma(s.n); ++c) {
        if (s.test(c)) continue;
        statement_set ext = s;
        ext.set(c);
        if (!(closure(ext) == full)) return false;
    }
    return true;
}

std::vector<int> type_signature(const statement_set& s) {
    const statement_table& tab = table_for(s.n);
    std::vector<int> type(s.n - 1, 0);
    for (int c : s.members()) ++type[tab.level(c)];
    return type;
}

long enumerate_semigraphoids(int n, int threads,
                             const std::function<void(std::uint32_t)>& sink) {
    if (n > 4) throw std::invalid_argument("exhaustive scan supported only for n <= 4");
    const auto& axioms = generate_axioms(n);
    struct axmask {
        std::uint32_t l, r;
    };
    std::vector<axmask> masks;
    masks.reserve(axioms.size());
    for (const auto& e : axioms)
        masks.push_back({(1u << e.x) | (1u << e.y), (1u << e.z) | (1u << e.w)});

    const std::uint64_t total = std::uint64_t{1} << gamma(n);
    auto scan = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint32_t>& found) {
        for (std::uint64_t m = lo; m < hi; ++m) {
            std::uint32_t mm = static_cast<std::uint32_t>(m);
            bool good = true;
            for (const auto& a : masks)
                if (((mm & a.l) == a.l) != ((mm & a.r) == a.r)) {
                    good = false;
                    break;
                }
            if (good) found.push_back(mm);
        }
    };

    int T = std::max(1, threads);
    std::vector<std::vector<std::uint32_t>> found(T);
    if (T == 1 || total < 1 << 16) {
        scan(0, total, found[0]);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (total + T - 1) / T;
        for (int t = 0; t < T; ++t)
            pool.emplace_back([&, t] { scan(t * chunk, std::min(total, (t + 1) * chunk), found[t]); });
        for (auto& th : pool) th.join();
    }
    long count = 0;
    for (const auto& part : found) {
        count += static_cast<long>(part.size());
        for (std::uint32_t m : part) sink(m);
    }
    return count;
}

int default_thread_count() {
    if (const char* env = std::getenv("SEMIGRAPHOID_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

}  // namespace sg
