#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sieve/bigint.hpp"

namespace sieve {

// A box position. Rows and columns are 1-indexed; for shifted shapes the
// column is the shifted column, so row r starts at column r.
struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Weakly decreasing positive parts. The empty partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }
    int operator[](int row) const { return parts_.at(row - 1); }

    bool is_rectangle() const noexcept;

    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Strictly decreasing positive parts.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }
    int operator[](int row) const { return parts_.at(row - 1); }

    friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const StrictPartition& a, const StrictPartition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition square_shape(int n);
StrictPartition doubled_staircase(int n);

using Rows = std::vector<std::vector<int>>;

/// A standard Young tableau of straight shape: a bijective filling of the
/// diagram with 1..N, strictly increasing along rows and down columns.
/// Constructing from rows validates every invariant.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(Rows rows);
    StandardTableau(std::initializer_list<std::vector<int>> rows) : StandardTableau(Rows(rows)) {}

    const Partition& shape() const noexcept { return shape_; }
    const Rows& rows() const noexcept { return rows_; }
    int size() const noexcept { return shape_.size(); }
    int num_rows() const noexcept { return shape_.length(); }

    int at(int row, int col) const { return rows_.at(row - 1).at(col - 1); }
    Cell find(int entry) const;
    bool is_square() const noexcept;

    friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) { return a.rows_ <=> b.rows_; }
    friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }

private:
    Partition shape_;
    Rows rows_;
};

/// A standard tableau of shifted shape. Row r (1-indexed) occupies shifted
/// columns r .. r + shape[r] - 1; `rows` stores only the filled cells.
class ShiftedStandardTableau {
public:
    ShiftedStandardTableau() = default;
    explicit ShiftedStandardTableau(Rows rows);
    ShiftedStandardTableau(std::initializer_list<std::vector<int>> rows) : ShiftedStandardTableau(Rows(rows)) {}

    const StrictPartition& shape() const noexcept { return shape_; }
    const Rows& rows() const noexcept { return rows_; }
    int size() const noexcept { return shape_.size(); }
    int num_rows() const noexcept { return shape_.length(); }

    // `col` is the shifted column.
    int at(int row, int col) const { return rows_.at(row - 1).at(col - row); }
    Cell find(int entry) const;

    friend auto operator<=>(const ShiftedStandardTableau& a, const ShiftedStandardTableau& b) {
        return a.rows_ <=> b.rows_;
    }
    friend bool operator==(const ShiftedStandardTableau& a, const ShiftedStandardTableau& b) {
        return a.rows_ == b.rows_;
    }

private:
    StrictPartition shape_;
    Rows rows_;
};

/// A standard filling of a skew shifted shape outer / inner. Row r holds the
/// cells at shifted columns r + inner[r] .. r + outer[r] - 1. Inner parts may
/// be zero, so `inner` is a plain vector padded to the length of `outer`.
class SkewShiftedStandardTableau {
public:
    SkewShiftedStandardTableau(StrictPartition outer, std::vector<int> inner, Rows rows);

    const StrictPartition& outer() const noexcept { return outer_; }
    const std::vector<int>& inner() const noexcept { return inner_; }
    const Rows& rows() const noexcept { return rows_; }
    int size() const noexcept { return size_; }

    // First shifted column of the filled part of row r.
    int first_col(int row) const { return row + inner_.at(row - 1); }

    friend bool operator==(const SkewShiftedStandardTableau&, const SkewShiftedStandardTableau&) = default;

private:
    StrictPartition outer_;
    std::vector<int> inner_;
    Rows rows_;
    int size_ = 0;
};

using AnyTableau = std::variant<StandardTableau, ShiftedStandardTableau>;

// Hook lengths h(i,j) = arm + leg + 1, indexed [row-1][col-1].
Rows hook_lengths(const Partition& shape);

// f^lambda from the hook-length formula.
BigInt count_syt(const Partition& shape);
// Number of shifted standard tableaux, N!/prod(l_i!) * prod_{i<j} (l_i-l_j)/(l_i+l_j).
BigInt count_shifted_syt(const StrictPartition& shape);

struct EnumerationLimit {
    // Refuse exhaustive enumeration when the predicted count is larger.
    std::uint64_t max_elements = 1'000'000;
};

// All standard tableaux of the shape in row-reading lexicographic order.
// Throws SizeGuardExceeded when the predicted count exceeds the limit.
std::vector<StandardTableau> enumerate_syt(const Partition& shape, EnumerationLimit limit = {});
std::vector<ShiftedStandardTableau> enumerate_shifted_syt(const StrictPartition& shape,
                                                          EnumerationLimit limit = {});

// Canonical JSON text: {"kind":"straight"|"shifted","shape":[...],"rows":[[...],...]}.
std::string to_json(const StandardTableau& t);
std::string to_json(const ShiftedStandardTableau& t);
std::string to_json(const AnyTableau& t);

// Parse canonical JSON. Throws InvalidInput on malformed text or on a filling
// that violates the tableau invariants.
AnyTableau parse_tableau(std::string_view text);
StandardTableau parse_straight_tableau(std::string_view text);
ShiftedStandardTableau parse_shifted_tableau(std::string_view text);

}  // namespace sieve
