#include "semigraphoid/sweep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "semigraphoid/rank_tests.hpp"
#include "semigraphoid/submodular.hpp"

namespace sg {

namespace {

struct worker_out {
    long submodular = 0;
    long agreed = 0;
    std::map<std::pair<int, std::vector<int>>, std::pair<long, long>> rows;  // (size,type) -> (nonsimp, simp)
    std::map<std::vector<std::pair<int, int>>, bool> poset_cache;            // covers -> simplicial(primary)
    long oracle_checked = 0;
};

void classify_range(int n, const std::vector<std::uint32_t>& masks, size_t lo, size_t hi, worker_out& out) {
    for (size_t k = lo; k < hi; ++k) {
        statement_set s = from_mask32(n, masks[k]);
        bool dual = is_submodular_dual(s);
        bool primal = is_submodular_primal(s);
        if (dual != primal) throw std::logic_error("primal/dual submodularity disagreement in sweep");
        ++out.agreed;
        if (dual) {
            ++out.submodular;
            continue;
        }
        rank_partition part = rank_test(s);
        bool simp = true;
        for (const auto& cls : part.classes) {
            class_poset p = poset_of_class(n, cls);
            if (!p.preconvex) throw std::logic_error("non-pre-convex class in sweep");
            auto key = p.covers;
            std::sort(key.begin(), key.end());
            auto it = out.poset_cache.find(key);
            bool class_simp;
            if (it != out.poset_cache.end()) {
                class_simp = it->second;
            } else {
                bool primary = static_cast<int>(p.covers.size()) == n - 1 &&
                               order_cone_lineality_dim(p) == 1;
                bool oracle = simplicial_oracle(p);
                if (primary != oracle) throw std::logic_error("simpliciality oracle disagreement");
                ++out.oracle_checked;
                out.poset_cache.emplace(key, primary);
                class_simp = primary;
            }
            if (!class_simp) simp = false;
        }
        auto key = std::make_pair(s.count(), type_signature(s));
        auto& row = out.rows[key];
        (simp ? row.second : row.first) += 1;
    }
}

}  // namespace

sweep_result classification_table(int n, int threads) {
    if (n != 4) throw std::invalid_argument("classification table is defined for n = 4");
    std::vector<std::uint32_t> masks;
    enumerate_semigraphoids(n, threads, [&](std::uint32_t m) { masks.push_back(m); });

    int T = std::max(1, threads);
    T = std::min<int>(T, static_cast<int>(masks.size()));
    std::vector<worker_out> outs(T);
    if (T == 1) {
        classify_range(n, masks, 0, masks.size(), outs[0]);
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (masks.size() + T - 1) / T;
        for (int t = 0; t < T; ++t)
            pool.emplace_back([&, t] {
                classify_range(n, masks, t * chunk, std::min(masks.size(), (t + 1) * chunk), outs[t]);
            });
        for (auto& th : pool) th.join();
    }

    sweep_result res;
    res.semigraphoids = static_cast<long>(masks.size());
    std::map<std::pair<int, std::vector<int>>, std::pair<long, long>> rows;
    for (const auto& o : outs) {
        res.submodular += o.submodular;
        res.primal_dual_checked += o.agreed;
        res.oracle_classes_checked += o.oracle_checked;
        for (const auto& [key, val] : o.rows) {
            rows[key].first += val.first;
            rows[key].second += val.second;
        }
    }
    res.non_submodular = res.semigraphoids - res.submodular;
    for (const auto& [key, val] : rows)
        res.table.push_back({key.first, key.second, val.first, val.second});
    return res;
}

std::string table_text(const std::vector<classification_row>& rows) {
    std::string out = "size\ttype\tnon_simplicial\tsimplicial\ttotal\n";
    for (const auto& r : rows) {
        out += std::to_string(r.size);
        out += "\t(";
        for (size_t k = 0; k < r.type.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(r.type[k]);
        }
        out += ")\t" + std::to_string(r.non_simplicial) + "\t" + std::to_string(r.simplicial) +
               "\t" + std::to_string(r.total()) + "\n";
    }
    return out;
}

}  // namespace sg
