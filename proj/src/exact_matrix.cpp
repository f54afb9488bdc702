#include "hirzewahl/exact_matrix.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace hirzewahl {

namespace {

using SparseRow = std::vector<std::pair<long, Int>>;  // (col, value), sorted by col

void divide_by_content(SparseRow& row) {
    if (row.empty()) return;
    Int g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// row_i <- p * row_i - q * row_p, content-reduced
SparseRow eliminate(const SparseRow& target, const SparseRow& pivot_row, const Int& p, const Int& q) {
    SparseRow out;
    out.reserve(target.size() + pivot_row.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot_row.size()) {
        if (j == pivot_row.size() || (i < target.size() && target[i].first < pivot_row[j].first)) {
            out.emplace_back(target[i].first, p * target[i].second);
            ++i;
        } else if (i == target.size() || pivot_row[j].first < target[i].first) {
            out.emplace_back(pivot_row[j].first, -q * pivot_row[j].second);
            ++j;
        } else {
            Int v = p * target[i].second - q * pivot_row[j].second;
            if (v != 0) out.emplace_back(target[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    divide_by_content(out);
    return out;
}

}  // namespace

long rank_exact(const ExactMatrix& m) {
    // integer rows: clear denominators, then reduce by content
    std::vector<SparseRow> rows(static_cast<std::size_t>(m.rows()));
    {
        std::vector<Int> lcm(static_cast<std::size_t>(m.rows()), 1);
        for (const auto& [rc, v] : m.entries()) {
            auto& l = lcm[static_cast<std::size_t>(rc.first)];
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        }
        for (const auto& [rc, v] : m.entries()) {
            Int scaled = v.get_num() * (lcm[static_cast<std::size_t>(rc.first)] / v.get_den());
            rows[static_cast<std::size_t>(rc.first)].emplace_back(rc.second, std::move(scaled));
        }
        for (auto& row : rows) divide_by_content(row);
    }

    std::vector<long> col_count(static_cast<std::size_t>(m.cols()), 0);
    std::vector<bool> row_done(rows.size(), false);
    for (const auto& row : rows)
        for (const auto& [c, v] : row) ++col_count[static_cast<std::size_t>(c)];

    long rank = 0;
    for (;;) {
        // Markowitz pivot: minimize (nnz(row)-1)*(nnz(col)-1), ties by column then row
        long best_r = -1, best_c = -1;
        unsigned long long best_score = std::numeric_limits<unsigned long long>::max();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (row_done[r] || rows[r].empty()) continue;
            auto row_cost = static_cast<unsigned long long>(rows[r].size() - 1);
            for (const auto& [c, v] : rows[r]) {
                auto score = row_cost * static_cast<unsigned long long>(
                                            col_count[static_cast<std::size_t>(c)] - 1);
                if (score < best_score ||
                    (score == best_score && (c < best_c || (c == best_c && static_cast<long>(r) < best_r)))) {
                    best_score = score;
                    best_r = static_cast<long>(r);
                    best_c = c;
                }
            }
        }
        if (best_r < 0) break;

        auto pr = static_cast<std::size_t>(best_r);
        Int pivot_val;
        for (const auto& [c, v] : rows[pr])
            if (c == best_c) pivot_val = v;

        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pr || row_done[r] || rows[r].empty()) continue;
            Int coeff;
            bool hit = false;
            for (const auto& [c, v] : rows[r])
                if (c == best_c) {
                    coeff = v;
                    hit = true;
                    break;
                }
            if (!hit) continue;
            for (const auto& [c, v] : rows[r]) --col_count[static_cast<std::size_t>(c)];
            rows[r] = eliminate(rows[r], rows[pr], pivot_val, coeff);
            for (const auto& [c, v] : rows[r]) ++col_count[static_cast<std::size_t>(c)];
        }

        for (const auto& [c, v] : rows[pr]) --col_count[static_cast<std::size_t>(c)];
        row_done[pr] = true;
        rows[pr].clear();
        ++rank;
    }
    return rank;
}

}  // namespace hirzewahl
