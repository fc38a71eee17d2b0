#include "sieve/promotion.hpp"

#include <cassert>
#include <functional>

namespace sieve {

namespace {

constexpr int kOutside = -1;
constexpr int kInner = -2;
constexpr int kHole = 0;

// Dense 0-indexed board used for all slides. Shifted shapes use absolute
// shifted columns, so row r begins at column r.
class SlideBoard {
public:
    SlideBoard(int rows, int cols) : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols, kOutside) {}

    static SlideBoard from(const StandardTableau& t) {
        SlideBoard b(t.num_rows(), t.num_rows() ? t.shape()[1] : 0);
        for (int r = 0; r < t.num_rows(); ++r) {
            for (std::size_t k = 0; k < t.rows()[r].size(); ++k) b.set(r, static_cast<int>(k), t.rows()[r][k]);
        }
        return b;
    }

    static SlideBoard from(const ShiftedStandardTableau& t) {
        SlideBoard b(t.num_rows(), t.num_rows() ? t.shape()[1] : 0);
        for (int r = 0; r < t.num_rows(); ++r) {
            for (std::size_t k = 0; k < t.rows()[r].size(); ++k) b.set(r, r + static_cast<int>(k), t.rows()[r][k]);
        }
        return b;
    }

    static SlideBoard from(const SkewShiftedStandardTableau& s) {
        const int rows = s.outer().length();
        SlideBoard b(rows, rows ? s.outer()[1] : 0);
        for (int r = 0; r < rows; ++r) {
            const int start = r + s.inner()[r];
            for (int c = r; c < start; ++c) b.set(r, c, kInner);
            for (std::size_t k = 0; k < s.rows()[r].size(); ++k) b.set(r, start + static_cast<int>(k), s.rows()[r][k]);
        }
        return b;
    }

    int get(int r, int c) const {
        if (r < 0 || c < 0 || r >= rows_ || c >= cols_) return kOutside;
        return cells_[static_cast<std::size_t>(r) * cols_ + c];
    }
    void set(int r, int c, int v) { cells_[static_cast<std::size_t>(r) * cols_ + c] = v; }

    Cell locate(int entry) const {
        for (int r = 0; r < rows_; ++r) {
            for (int c = 0; c < cols_; ++c) {
                if (get(r, c) == entry) return {r, c};
            }
        }
        throw InvalidInput("entry not on board");
    }

    void add_to_entries(int delta) {
        for (int& v : cells_) {
            if (v > 0) v += delta;
        }
    }

    // Moves the hole at `at` outward, always pulling in the smaller of the
    // right and lower neighbours. Returns the final hole position.
    Cell slide_out(Cell at) {
        set(at.row, at.col, kHole);
        for (;;) {
            const int right = get(at.row, at.col + 1);
            const int below = get(at.row + 1, at.col);
            if (right <= 0 && below <= 0) return at;
            assert(right != below);
            Cell next = at;
            if (below <= 0 || (right > 0 && right < below)) {
                next.col += 1;
            } else {
                next.row += 1;
            }
            set(at.row, at.col, get(next.row, next.col));
            set(next.row, next.col, kHole);
            at = next;
        }
    }

    // Moves the hole inward, pulling in the larger of the left and upper
    // neighbours.
    Cell slide_in(Cell at) {
        set(at.row, at.col, kHole);
        for (;;) {
            const int left = get(at.row, at.col - 1);
            const int above = get(at.row - 1, at.col);
            if (left <= 0 && above <= 0) return at;
            assert(left != above);
            Cell next = at;
            if (left > above) {
                next.col -= 1;
            } else {
                next.row -= 1;
            }
            set(at.row, at.col, get(next.row, next.col));
            set(next.row, next.col, kHole);
            at = next;
        }
    }

    std::vector<Cell> inner_corners() const {
        std::vector<Cell> corners;
        for (int r = rows_ - 1; r >= 0; --r) {
            for (int c = 0; c < cols_; ++c) {
                if (get(r, c) == kInner && get(r, c + 1) != kInner && get(r + 1, c) != kInner) {
                    corners.push_back({r, c});
                }
            }
        }
        return corners;
    }

    // Reads rows of positive entries; `shifted` requires row r to start at
    // column r, otherwise at column 0.
    Rows read_rows(bool shifted) const {
        Rows rows;
        for (int r = 0; r < rows_; ++r) {
            std::vector<int> row;
            const int start = shifted ? r : 0;
            for (int c = start; c < cols_ && get(r, c) > 0; ++c) row.push_back(get(r, c));
            if (row.empty()) break;
            rows.push_back(std::move(row));
        }
        return rows;
    }

private:
    int rows_;
    int cols_;
    std::vector<int> cells_;
};

template <class Tableau>
Tableau promote_impl(const Tableau& t, bool shifted) {
    if (t.size() == 0) return t;
    auto board = SlideBoard::from(t);
    const Cell start = board.locate(1);
    board.add_to_entries(-1);
    const Cell end = board.slide_out(start);
    board.set(end.row, end.col, t.size());
    return Tableau(board.read_rows(shifted));
}

template <class Tableau>
Tableau promote_inverse_impl(const Tableau& t, bool shifted) {
    if (t.size() == 0) return t;
    auto board = SlideBoard::from(t);
    const Cell start = board.locate(t.size());
    board.add_to_entries(1);
    const Cell end = board.slide_in(start);
    board.set(end.row, end.col, 1);
    return Tableau(board.read_rows(shifted));
}

template <class Tableau>
DeltaResult<Tableau> delta_impl(const Tableau& t, bool shifted) {
    if (t.size() == 0) throw InvalidInput("delta of an empty tableau");
    auto board = SlideBoard::from(t);
    const Cell start = board.locate(1);
    board.add_to_entries(-1);
    const Cell end = board.slide_out(start);
    board.set(end.row, end.col, kOutside);
    return {Tableau(board.read_rows(shifted)), Cell{end.row + 1, end.col + 1}};
}

ShiftedStandardTableau rectify_with(const SkewShiftedStandardTableau& s,
                                    const std::function<std::size_t(std::size_t)>& choose) {
    auto board = SlideBoard::from(s);
    for (auto corners = board.inner_corners(); !corners.empty(); corners = board.inner_corners()) {
        const Cell end = board.slide_out(corners[choose(corners.size())]);
        board.set(end.row, end.col, kOutside);
    }
    return ShiftedStandardTableau(board.read_rows(true));
}

}  // namespace

StandardTableau promote(const StandardTableau& t) { return promote_impl(t, false); }
ShiftedStandardTableau promote(const ShiftedStandardTableau& t) { return promote_impl(t, true); }

StandardTableau promote_inverse(const StandardTableau& t) { return promote_inverse_impl(t, false); }
ShiftedStandardTableau promote_inverse(const ShiftedStandardTableau& t) { return promote_inverse_impl(t, true); }

DeltaResult<StandardTableau> delta(const StandardTableau& t) { return delta_impl(t, false); }
DeltaResult<ShiftedStandardTableau> delta(const ShiftedStandardTableau& t) { return delta_impl(t, true); }

SkewShiftedStandardTableau embed_square(const StandardTableau& q) {
    if (!q.is_square()) throw InvalidInput("embed_square needs a square tableau");
    return embed_straight(q);
}

SkewShiftedStandardTableau embed_straight(const StandardTableau& q) {
    const int l = q.num_rows();
    std::vector<int> outer;
    std::vector<int> inner;
    for (int i = 1; i <= l; ++i) {
        inner.push_back(l - i);
        outer.push_back(l - i + q.shape()[i]);
    }
    return SkewShiftedStandardTableau(StrictPartition(std::move(outer)), std::move(inner), q.rows());
}

ShiftedStandardTableau rectify(const SkewShiftedStandardTableau& s) {
    // inner_corners() lists bottom rows first.
    return rectify_with(s, [](std::size_t) { return std::size_t{0}; });
}

ShiftedStandardTableau rectify_random(const SkewShiftedStandardTableau& s, std::mt19937_64& rng) {
    return rectify_with(s, [&rng](std::size_t count) {
        return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
    });
}

}  // namespace sieve
