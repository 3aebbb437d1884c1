#include "seqexp/seqgen/enumerate.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "seqexp/error.hpp"

namespace seqexp::seqgen {

namespace {

// ---- polyominoes ----

struct Row {
    long left;
    long right;  // inclusive
};

// Rows are stacked top to bottom, each a single interval, consecutive rows
// sharing at least one column. Fixing the first row's left end at 0 picks one
// representative per translation class.
class LConvexCounter {
public:
    explicit LConvexCounter(std::size_t max_area) : max_area_(max_area), counts_(max_area + 1, 0) {}

    void run() {
        for (long w = 1; w <= static_cast<long>(max_area_); ++w) {
            rows_.push_back({0, w - 1});
            extend(static_cast<std::size_t>(w));
            rows_.pop_back();
        }
    }

    const std::vector<std::uint64_t>& counts() const { return counts_; }

private:
    void extend(std::size_t area) {
        if (!column_convex()) return;  // hereditary: no completion can repair it
        if (l_convex()) ++counts_[area];
        const Row prev = rows_.back();
        const long remaining = static_cast<long>(max_area_ - area);
        for (long l = prev.left - remaining + 1; l <= prev.right; ++l) {
            for (long r = std::max(l, prev.left); r - l + 1 <= remaining; ++r) {
                rows_.push_back({l, r});
                extend(area + static_cast<std::size_t>(r - l + 1));
                rows_.pop_back();
            }
        }
    }

    bool contains(long row, long col) const {
        if (row < 0 || row >= static_cast<long>(rows_.size())) return false;
        const Row& r = rows_[static_cast<std::size_t>(row)];
        return col >= r.left && col <= r.right;
    }

    bool column_convex() const {
        long lo = rows_.front().left, hi = rows_.front().right;
        for (const auto& r : rows_) {
            lo = std::min(lo, r.left);
            hi = std::max(hi, r.right);
        }
        for (long c = lo; c <= hi; ++c) {
            int runs = 0;
            bool inside = false;
            for (long i = 0; i < static_cast<long>(rows_.size()); ++i) {
                bool here = contains(i, c);
                if (here && !inside) ++runs;
                inside = here;
            }
            if (runs > 1) return false;
        }
        return true;
    }

    bool horizontal_ok(long row, long c0, long c1) const {
        for (long c = std::min(c0, c1); c <= std::max(c0, c1); ++c) {
            if (!contains(row, c)) return false;
        }
        return true;
    }

    bool vertical_ok(long col, long r0, long r1) const {
        for (long r = std::min(r0, r1); r <= std::max(r0, r1); ++r) {
            if (!contains(r, col)) return false;
        }
        return true;
    }

    // Every ordered pair of cells joined by a monotone path with at most one turn.
    bool l_convex() const {
        std::vector<std::pair<long, long>> cells;
        for (long i = 0; i < static_cast<long>(rows_.size()); ++i) {
            for (long c = rows_[static_cast<std::size_t>(i)].left; c <= rows_[static_cast<std::size_t>(i)].right; ++c) {
                cells.emplace_back(i, c);
            }
        }
        for (const auto& [ra, ca] : cells) {
            for (const auto& [rb, cb] : cells) {
                bool via_row = horizontal_ok(ra, ca, cb) && vertical_ok(cb, ra, rb);
                bool via_col = vertical_ok(ca, ra, rb) && horizontal_ok(rb, ca, cb);
                if (!via_row && !via_col) return false;
            }
        }
        return true;
    }

    std::size_t max_area_;
    std::vector<std::uint64_t> counts_;
    std::vector<Row> rows_;
};

// ---- unimodal compositions ----

void count_unimodal(std::size_t total, std::size_t last, bool falling, std::size_t max_total,
                    std::vector<std::uint64_t>& counts) {
    ++counts[total];
    for (std::size_t part = 1; total + part <= max_total; ++part) {
        if (falling && part > last) break;
        count_unimodal(total + part, part, falling || part < last, max_total, counts);
    }
}

// ---- ascent sequences ----

class AscentAvoider {
public:
    AscentAvoider(const Pattern& p, std::size_t max_len, std::uint64_t budget)
        : pattern_(p.letters), max_len_(max_len), budget_(budget), counts_(max_len + 1, 0) {}

    void run() {
        counts_[0] = 1;
        if (max_len_ == 0) return;
        word_.push_back(0);
        visit(0);
        word_.pop_back();
    }

    const std::vector<std::uint64_t>& counts() const { return counts_; }

private:
    void visit(int ascents) {
        if (++nodes_ > budget_) {
            throw Error(ErrorCode::BudgetExceeded, "ascent enumeration exceeded " + std::to_string(budget_) + " nodes");
        }
        ++counts_[word_.size()];
        if (word_.size() == max_len_) return;
        const int last = word_.back();
        for (int x = 0; x <= ascents + 1; ++x) {
            word_.push_back(x);
            if (!ends_with_occurrence()) visit(ascents + (x > last ? 1 : 0));
            word_.pop_back();
        }
    }

    // Order-isomorphism of the partial assignment: letter t of the pattern is
    // placed at value v and must compare against earlier placed letters the
    // same way the pattern letters compare.
    bool consistent(std::size_t t, int v) const {
        for (std::size_t s = 0; s < t; ++s) {
            const int ps = pattern_[s], pt = pattern_[t];
            const int vs = chosen_[s];
            if ((ps < pt) != (vs < v) || (ps == pt) != (vs == v)) return false;
        }
        return true;
    }

    // Is there an occurrence whose last letter is the newest entry?
    bool ends_with_occurrence() {
        const std::size_t k = pattern_.size();
        if (word_.size() < k) return false;
        chosen_.assign(k, 0);
        chosen_[k - 1] = word_.back();
        return place_with_last(0, 0, word_.size() - 1);
    }

    bool place_with_last(std::size_t t, std::size_t from, std::size_t end) {
        const std::size_t k = pattern_.size();
        if (t + 1 == k) return consistent(k - 1, word_.back());
        for (std::size_t i = from; i < end; ++i) {
            if (end - i < k - 1 - t) break;
            if (!consistent(t, word_[i])) continue;
            chosen_[t] = word_[i];
            if (place_with_last(t + 1, i + 1, end)) return true;
        }
        return false;
    }

    std::vector<int> pattern_;
    std::size_t max_len_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::uint64_t> counts_;
    std::vector<int> word_;
    std::vector<int> chosen_;
};

Sequence from_counts(long offset, const std::vector<std::uint64_t>& counts, std::size_t first) {
    Sequence s{offset, {}};
    for (std::size_t i = first; i < counts.size(); ++i) {
        s.terms.emplace_back(static_cast<unsigned long>(counts[i]));
    }
    return s;
}

}  // namespace

Sequence enum_lconvex_bruteforce(std::size_t N, const EnumBudget& budget) {
    if (N > budget.max_area) {
        throw Error(ErrorCode::BudgetExceeded,
                    "area " + std::to_string(N) + " above the enumeration cap " + std::to_string(budget.max_area));
    }
    LConvexCounter counter(N);
    counter.run();
    return from_counts(1, counter.counts(), 1);
}

Sequence enum_stack_bruteforce(std::size_t N) {
    std::vector<std::uint64_t> counts(N + 1, 0);
    for (std::size_t first = 1; first <= N; ++first) count_unimodal(first, first, false, N, counts);
    return from_counts(1, counts, 1);
}

Sequence enum_ascent_avoiding(const Pattern& pattern, std::size_t N, const EnumBudget& budget) {
    if (pattern.letters.empty()) throw Error(ErrorCode::InvalidArgument, "empty pattern");
    AscentAvoider avoider(pattern, N, budget.max_nodes);
    avoider.run();
    return from_counts(0, avoider.counts(), 0);
}

}  // namespace seqexp::seqgen
