#include "sieve/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "sieve/errors.hpp"

namespace sieve {

namespace {

void check_entries_are_permutation(const Rows& rows, int n) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& row : rows) {
        for (int v : row) {
            if (v < 1 || v > n || seen[v]) {
                throw InvalidInput("tableau entries must be exactly 1.." + std::to_string(n));
            }
            seen[v] = true;
        }
    }
}

void check_rows_increase(const Rows& rows) {
    for (const auto& row : rows) {
        if (row.empty()) throw InvalidInput("tableau rows must be nonempty");
        if (std::adjacent_find(row.begin(), row.end(), std::greater_equal<>()) != row.end()) {
            throw InvalidInput("tableau rows must strictly increase");
        }
    }
}

std::vector<int> row_lengths(const Rows& rows) {
    std::vector<int> lengths;
    lengths.reserve(rows.size());
    for (const auto& row : rows) lengths.push_back(static_cast<int>(row.size()));
    return lengths;
}

// Generic backtracking over diagrams described by per-row start columns and
// lengths; straight shapes start every row at column 0, shifted shapes at r.
template <class Tableau>
std::vector<Tableau> enumerate_fillings(const std::vector<int>& starts, const std::vector<int>& lengths) {
    const int rows = static_cast<int>(lengths.size());
    const int total = std::accumulate(lengths.begin(), lengths.end(), 0);
    std::vector<Tableau> out;
    Rows filling(rows);
    std::vector<int> filled(rows, 0);

    auto place = [&](auto&& self, int entry) -> void {
        if (entry > total) {
            out.emplace_back(filling);
            return;
        }
        for (int r = 0; r < rows; ++r) {
            if (filled[r] == lengths[r]) continue;
            if (r > 0 && starts[r] + filled[r] >= starts[r - 1] + filled[r - 1]) continue;
            filling[r].push_back(entry);
            ++filled[r];
            self(self, entry + 1);
            --filled[r];
            filling[r].pop_back();
        }
    };
    if (total > 0) {
        place(place, 1);
    } else {
        out.emplace_back();
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void check_guard(const BigInt& predicted, EnumerationLimit limit) {
    if (predicted > BigInt(limit.max_elements)) {
        std::ostringstream msg;
        msg << "enumeration of " << predicted << " elements exceeds the limit of " << limit.max_elements;
        throw SizeGuardExceeded(msg.str());
    }
}

using ordered_json = nlohmann::ordered_json;

Rows rows_from_json(const ordered_json& j) {
    if (!j.is_array()) throw InvalidInput("\"rows\" must be an array of arrays");
    Rows rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw InvalidInput("\"rows\" must be an array of arrays");
        auto& out = rows.emplace_back();
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw InvalidInput("tableau entries must be integers");
            out.push_back(v.get<int>());
        }
    }
    return rows;
}

std::vector<int> shape_from_json(const ordered_json& j) {
    if (!j.is_array()) throw InvalidInput("\"shape\" must be an array of integers");
    std::vector<int> shape;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InvalidInput("\"shape\" must be an array of integers");
        shape.push_back(v.get<int>());
    }
    return shape;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw InvalidInput("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must weakly decrease");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_rectangle() const noexcept {
    return std::adjacent_find(parts_.begin(), parts_.end(), std::not_equal_to<>()) == parts_.end();
}

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw InvalidInput("strict partition parts must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1]) throw InvalidInput("strict partition parts must strictly decrease");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition square_shape(int n) {
    if (n < 0) throw InvalidInput("square side must be nonnegative");
    return Partition(std::vector<int>(n, n));
}

StrictPartition doubled_staircase(int n) {
    if (n < 0) throw InvalidInput("staircase rank must be nonnegative");
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) parts.push_back(2 * (n - i) + 1);
    return StrictPartition(std::move(parts));
}

StandardTableau::StandardTableau(Rows rows) : rows_(std::move(rows)) {
    check_rows_increase(rows_);
    shape_ = Partition(row_lengths(rows_));
    check_entries_are_permutation(rows_, shape_.size());
    for (std::size_t r = 1; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (rows_[r][c] <= rows_[r - 1][c]) throw InvalidInput("tableau columns must strictly increase");
        }
    }
}

Cell StandardTableau::find(int entry) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto it = std::find(rows_[r].begin(), rows_[r].end(), entry);
        if (it != rows_[r].end()) {
            return {static_cast<int>(r) + 1, static_cast<int>(it - rows_[r].begin()) + 1};
        }
    }
    throw InvalidInput("entry " + std::to_string(entry) + " not in tableau");
}

bool StandardTableau::is_square() const noexcept {
    return shape_.is_rectangle() && shape_.length() > 0 && shape_[1] == shape_.length();
}

ShiftedStandardTableau::ShiftedStandardTableau(Rows rows) : rows_(std::move(rows)) {
    check_rows_increase(rows_);
    shape_ = StrictPartition(row_lengths(rows_));
    check_entries_are_permutation(rows_, shape_.size());
    // Row r+1 is shifted one column right, so its k-th cell sits below the
    // (k+1)-th cell of row r.
    for (std::size_t r = 1; r < rows_.size(); ++r) {
        for (std::size_t k = 0; k < rows_[r].size(); ++k) {
            if (rows_[r][k] <= rows_[r - 1][k + 1]) {
                throw InvalidInput("shifted tableau columns must strictly increase");
            }
        }
    }
}

Cell ShiftedStandardTableau::find(int entry) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto it = std::find(rows_[r].begin(), rows_[r].end(), entry);
        if (it != rows_[r].end()) {
            const int row = static_cast<int>(r) + 1;
            return {row, row + static_cast<int>(it - rows_[r].begin())};
        }
    }
    throw InvalidInput("entry " + std::to_string(entry) + " not in tableau");
}

SkewShiftedStandardTableau::SkewShiftedStandardTableau(StrictPartition outer, std::vector<int> inner, Rows rows)
    : outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {
    const auto rows_count = static_cast<std::size_t>(outer_.length());
    if (inner_.size() > rows_count) throw InvalidInput("inner shape has more rows than outer shape");
    inner_.resize(rows_count, 0);
    if (rows_.size() != rows_count) throw InvalidInput("skew tableau needs one row per outer row");
    for (std::size_t r = 0; r < rows_count; ++r) {
        if (inner_[r] < 0 || inner_[r] > outer_.parts()[r]) throw InvalidInput("inner shape must fit inside outer");
        if (r > 0 && inner_[r] > 0 && inner_[r] >= inner_[r - 1]) {
            throw InvalidInput("inner shape must be a strict partition");
        }
        if (static_cast<int>(rows_[r].size()) != outer_.parts()[r] - inner_[r]) {
            throw InvalidInput("skew row length must equal outer minus inner");
        }
        if (std::adjacent_find(rows_[r].begin(), rows_[r].end(), std::greater_equal<>()) != rows_[r].end()) {
            throw InvalidInput("skew tableau rows must strictly increase");
        }
        size_ += static_cast<int>(rows_[r].size());
    }
    check_entries_are_permutation(rows_, size_);
    for (std::size_t r = 1; r < rows_count; ++r) {
        const int row = static_cast<int>(r) + 1;
        for (std::size_t k = 0; k < rows_[r].size(); ++k) {
            const int col = first_col(row) + static_cast<int>(k);
            const int above = col - first_col(row - 1);
            if (above >= 0 && above < static_cast<int>(rows_[r - 1].size()) && rows_[r][k] <= rows_[r - 1][above]) {
                throw InvalidInput("skew tableau columns must strictly increase");
            }
        }
    }
}

Rows hook_lengths(const Partition& shape) {
    Rows hooks(shape.length());
    for (int i = 1; i <= shape.length(); ++i) {
        for (int j = 1; j <= shape[i]; ++j) {
            int leg = 0;
            while (i + leg + 1 <= shape.length() && shape[i + leg + 1] >= j) ++leg;
            const int arm = shape[i] - j;
            hooks[i - 1].push_back(arm + leg + 1);
        }
    }
    return hooks;
}

BigInt count_syt(const Partition& shape) {
    BigInt denom = 1;
    for (const auto& row : hook_lengths(shape)) {
        for (int h : row) denom *= h;
    }
    return factorial(shape.size()) / denom;
}

BigInt count_shifted_syt(const StrictPartition& shape) {
    const auto& p = shape.parts();
    BigInt num = factorial(shape.size());
    BigInt den = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        den *= factorial(p[i]);
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            num *= p[i] - p[j];
            den *= p[i] + p[j];
        }
    }
    return num / den;
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape, EnumerationLimit limit) {
    check_guard(count_syt(shape), limit);
    return enumerate_fillings<StandardTableau>(std::vector<int>(shape.length(), 0), shape.parts());
}

std::vector<ShiftedStandardTableau> enumerate_shifted_syt(const StrictPartition& shape, EnumerationLimit limit) {
    check_guard(count_shifted_syt(shape), limit);
    std::vector<int> starts(shape.length());
    std::iota(starts.begin(), starts.end(), 0);
    return enumerate_fillings<ShiftedStandardTableau>(starts, shape.parts());
}

std::string to_json(const StandardTableau& t) {
    ordered_json j;
    j["kind"] = "straight";
    j["shape"] = t.shape().parts();
    j["rows"] = t.rows();
    return j.dump();
}

std::string to_json(const ShiftedStandardTableau& t) {
    ordered_json j;
    j["kind"] = "shifted";
    j["shape"] = t.shape().parts();
    j["rows"] = t.rows();
    return j.dump();
}

std::string to_json(const AnyTableau& t) {
    return std::visit([](const auto& x) { return to_json(x); }, t);
}

AnyTableau parse_tableau(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw InvalidInput(std::string("malformed tableau JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j.contains("shape") || !j.contains("rows")) {
        throw InvalidInput("tableau JSON needs \"kind\", \"shape\" and \"rows\"");
    }
    if (!j["kind"].is_string()) throw InvalidInput("\"kind\" must be a string");
    const auto kind = j["kind"].get<std::string>();
    const auto shape = shape_from_json(j["shape"]);
    auto rows = rows_from_json(j["rows"]);
    if (kind == "straight") {
        StandardTableau t(std::move(rows));
        if (t.shape().parts() != shape) throw InvalidInput("\"shape\" does not match the row lengths");
        return t;
    }
    if (kind == "shifted") {
        ShiftedStandardTableau t(std::move(rows));
        if (t.shape().parts() != shape) throw InvalidInput("\"shape\" does not match the row lengths");
        return t;
    }
    throw InvalidInput("unknown tableau kind \"" + kind + "\"");
}

StandardTableau parse_straight_tableau(std::string_view text) {
    auto t = parse_tableau(text);
    if (auto* s = std::get_if<StandardTableau>(&t)) return std::move(*s);
    throw InvalidInput("expected a straight tableau");
}

ShiftedStandardTableau parse_shifted_tableau(std::string_view text) {
    auto t = parse_tableau(text);
    if (auto* s = std::get_if<ShiftedStandardTableau>(&t)) return std::move(*s);
    throw InvalidInput("expected a shifted tableau");
}

}  // namespace sieve
