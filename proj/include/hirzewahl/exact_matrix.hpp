#pragma once

#include <map>
#include <utility>

#include "hirzewahl/numeric.hpp"

namespace hirzewahl {

/// Sparse matrix over the rationals.  Only nonzero entries are stored.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative shape");
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long nnz() const { return static_cast<long>(entries_.size()); }

    void set(long r, long c, const Rat& v) {
        check(r, c);
        if (v == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = v;
    }

    void add(long r, long c, const Rat& v) {
        check(r, c);
        auto it = entries_.find({r, c});
        if (it == entries_.end()) {
            if (v != 0) entries_.emplace(std::make_pair(r, c), v);
            return;
        }
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }

    Rat get(long r, long c) const {
        check(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Rat(0) : it->second;
    }

    const std::map<std::pair<long, long>, Rat>& entries() const { return entries_; }

private:
    void check(long r, long c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("ExactMatrix: index out of range");
    }

    long rows_ = 0;
    long cols_ = 0;
    std::map<std::pair<long, long>, Rat> entries_;
};

/// Exact rank over the rationals.  Rows are scaled to integers and reduced
/// by their content; elimination is fraction-free with pivots chosen to
/// minimize fill (Markowitz count, deterministic ties).
long rank_exact(const ExactMatrix& m);

}  // namespace hirzewahl
