#pragma once

#include <string>
#include <vector>

#include "semigraphoid/statement_set.hpp"

namespace sg {

struct classification_row {
    int size = 0;
    std::vector<int> type;  // (m_0, m_1, m_2)
    long non_simplicial = 0;
    long simplicial = 0;
    long total() const { return non_simplicial + simplicial; }
    bool operator==(const classification_row&) const = default;
};

struct sweep_result {
    long semigraphoids = 0;
    long submodular = 0;
    long non_submodular = 0;
    std::vector<classification_row> table;  // non-submodular only, sorted by (size, type)
    long primal_dual_checked = 0;           // both formulations agreed on this many
    long oracle_classes_checked = 0;        // simpliciality oracle agreements
};

// Full n=4 classification: every semigraphoid gets both LP formulations;
// non-submodular ones get the rank-test simpliciality classification, with
// the order-cone oracle cross-checked on every distinct class poset.
sweep_result classification_table(int n, int threads);

// tab-separated: size, type, non_simplicial, simplicial, total
std::string table_text(const std::vector<classification_row>& rows);

}  // namespace sg
