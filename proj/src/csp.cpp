#include "sieve/csp.hpp"

#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "json.hpp"

#include "sieve/bn_words.hpp"
#include "sieve/errors.hpp"
#include "sieve/haiman.hpp"
#include "sieve/qanalog.hpp"

namespace sieve {

namespace {

using ordered_json = nlohmann::ordered_json;

void check_limit(int n, HarnessLimit limit) {
    if (n < 1) throw InvalidInput("rank must be positive");
    if (n > limit.max_n) {
        throw SizeGuardExceeded("exhaustive sets are limited to n <= " + std::to_string(limit.max_n));
    }
}

EnumerationLimit enumeration_limit(HarnessLimit limit) {
    return limit.max_n > 4 ? EnumerationLimit{UINT64_MAX} : EnumerationLimit{};
}

// Enumerated sets are built once per rank and shared read-only.
template <class T>
const std::vector<T>& cached(int n, HarnessLimit limit, std::vector<T> (*build)(int, HarnessLimit)) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const std::vector<T>>> cache;
    std::shared_ptr<const std::vector<T>> entry;
    {
        std::lock_guard lock(mutex);
        entry = cache[n];
    }
    if (!entry) {
        auto built = std::make_shared<const std::vector<T>>(build(n, limit));
        std::lock_guard lock(mutex);
        auto& slot = cache[n];
        if (!slot) slot = built;
        entry = slot;
    }
    return *entry;
}

std::vector<Word> build_words(int n, HarnessLimit limit) { return enumerate_reduced_words(n, limit.max_n); }
std::vector<StandardTableau> build_squares(int n, HarnessLimit limit) {
    return enumerate_syt(square_shape(n), enumeration_limit(limit));
}
std::vector<ShiftedStandardTableau> build_staircases(int n, HarnessLimit limit) {
    return enumerate_shifted_syt(doubled_staircase(n), enumeration_limit(limit));
}

const std::vector<Word>& words(int n, HarnessLimit limit) {
    check_limit(n, limit);
    return cached<Word>(n, limit, &build_words);
}
const std::vector<StandardTableau>& squares(int n, HarnessLimit limit) {
    check_limit(n, limit);
    return cached<StandardTableau>(n, limit, &build_squares);
}
const std::vector<ShiftedStandardTableau>& staircases(int n, HarnessLimit limit) {
    check_limit(n, limit);
    return cached<ShiftedStandardTableau>(n, limit, &build_staircases);
}

Word act(const Word& w) { return rotate(w); }
StandardTableau act(const StandardTableau& t) { return promote(t); }
ShiftedStandardTableau act(const ShiftedStandardTableau& t) { return promote(t); }

std::string serialize(const Word& w) { return to_string(w); }
std::string serialize(const StandardTableau& t) { return to_json(t); }
std::string serialize(const ShiftedStandardTableau& t) { return to_json(t); }

// Calls f with the enumerated set named by the spec.
template <class F>
decltype(auto) with_set(const CyclicActionSpec& spec, HarnessLimit limit, F&& f) {
    switch (spec.set) {
        case SetKind::ReducedWords:
            return f(words(spec.n, limit));
        case SetKind::SquareTableaux:
            return f(squares(spec.n, limit));
        case SetKind::StaircaseTableaux:
            return f(staircases(spec.n, limit));
    }
    throw InvalidInput("unknown set kind");
}

// Whether x is fixed by the d-th power. Stops at the first return to x.
template <class T>
bool fixed_by_power(const T& x, int d) {
    if (d == 0) return true;
    T y = x;
    for (int j = 1; j <= d; ++j) {
        y = act(y);
        if (y == x) return d % j == 0;
    }
    return false;
}

ordered_json bigint_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

ordered_json poly_coeffs_json(const IntPolynomial& p) {
    auto arr = ordered_json::array();
    for (const auto& c : p.coeffs()) arr.push_back(bigint_json(c));
    return arr;
}

ordered_json census_json(const OrbitCensus& c) {
    ordered_json j = ordered_json::object();
    for (const auto& [size, count] : c) j[std::to_string(size)] = count;
    return j;
}

}  // namespace

std::string_view to_string(SetKind kind) {
    switch (kind) {
        case SetKind::ReducedWords:
            return "reduced-words";
        case SetKind::SquareTableaux:
            return "square-tableaux";
        case SetKind::StaircaseTableaux:
            return "staircase-tableaux";
    }
    return "unknown";
}

SetKind parse_set_kind(std::string_view text) {
    if (text == "reduced-words") return SetKind::ReducedWords;
    if (text == "square-tableaux") return SetKind::SquareTableaux;
    if (text == "staircase-tableaux") return SetKind::StaircaseTableaux;
    throw InvalidInput("unknown set \"" + std::string(text) + "\"");
}

std::size_t set_size(const CyclicActionSpec& spec, HarnessLimit limit) {
    return with_set(spec, limit, [](const auto& set) { return set.size(); });
}

std::uint64_t fixed_points(const CyclicActionSpec& spec, int d, HarnessLimit limit) {
    if (d < 0 || d >= spec.order()) throw InvalidInput("power must lie in 0..order-1");
    return with_set(spec, limit, [d](const auto& set) {
        std::uint64_t count = 0;
        for (const auto& x : set) count += fixed_by_power(x, d) ? 1 : 0;
        return count;
    });
}

FixedPointTable fixed_point_table(const CyclicActionSpec& spec, HarnessLimit limit) {
    FixedPointTable table;
    for (int d = 0; d < spec.order(); ++d) table.counts.push_back(fixed_points(spec, d, limit));
    return table;
}

IntPolynomial csp_polynomial(const CyclicActionSpec& spec, HarnessLimit limit) {
    if (spec.n < 1) throw InvalidInput("rank must be positive");
    if (spec.set != SetKind::ReducedWords) return q_hook_rectangle(spec.n, spec.n);
    std::vector<long long> majors;
    for (const auto& w : words(spec.n, limit)) majors.push_back(descent_data(w).maj);
    const auto shift = static_cast<std::size_t>(spec.n) * spec.n * (spec.n - 1) / 2;
    return shift_down(maj_gf(majors), shift);
}

CspReport verify_csp(const CyclicActionSpec& spec, HarnessLimit limit) {
    CspReport report;
    report.spec = spec;
    report.polynomial = csp_polynomial(spec, limit);
    report.table = fixed_point_table(spec, limit);
    report.action_order_ok = with_set(spec, limit, [&spec](const auto& set) {
        for (const auto& x : set) {
            auto y = x;
            for (int j = 0; j < spec.order(); ++j) y = act(y);
            if (!(y == x)) return false;
        }
        return true;
    });
    for (int d = 0; d < spec.order(); ++d) {
        std::optional<BigInt> value;
        try {
            value = eval_at_root(report.polynomial, spec.order(), d);
        } catch (const NonIntegerValue&) {
        }
        if (!value || *value != BigInt(report.table.counts[d])) report.mismatches.push_back(d);
        report.evaluations.push_back(std::move(value));
    }
    return report;
}

OrbitCensus orbit_census(const CyclicActionSpec& spec, HarnessLimit limit) {
    return with_set(spec, limit, [](const auto& set) {
        using T = typename std::decay_t<decltype(set)>::value_type;
        return census(orbits(std::span<const T>(set), [](const T& x) { return act(x); }));
    });
}

FixedPointTable table_from_census(const OrbitCensus& c, int order) {
    FixedPointTable table;
    for (int d = 0; d < order; ++d) {
        std::uint64_t count = 0;
        for (const auto& [size, number] : c) {
            if (d % static_cast<int>(size) == 0) count += size * number;
        }
        table.counts.push_back(count);
    }
    return table;
}

std::vector<OrbitSummary> orbit_summaries(const CyclicActionSpec& spec, HarnessLimit limit) {
    return with_set(spec, limit, [](const auto& set) {
        using T = typename std::decay_t<decltype(set)>::value_type;
        std::map<std::size_t, OrbitSummary> by_size;
        for (const auto& o : orbits(std::span<const T>(set), [](const T& x) { return act(x); })) {
            auto& s = by_size[o.size()];
            s.orbit_size = o.size();
            ++s.count;
            s.representatives.push_back(serialize(o.representative()));
        }
        std::vector<OrbitSummary> out;
        for (auto& [size, s] : by_size) out.push_back(std::move(s));
        return out;
    });
}

CrossCheckReport cross_check(int n, HarnessLimit limit) {
    CrossCheckReport r;
    r.n = n;
    r.words = orbit_census({SetKind::ReducedWords, n}, limit);
    r.squares = orbit_census({SetKind::SquareTableaux, n}, limit);
    r.staircases = orbit_census({SetKind::StaircaseTableaux, n}, limit);
    r.censuses_equal = r.words == r.squares && r.squares == r.staircases;

    const auto& all_words = words(n, limit);
    std::set<Word> image;
    r.psi_equivariant = true;
    r.h_equivariant = true;
    for (const auto& t : squares(n, limit)) {
        const auto w = psi(t);
        image.insert(w);
        if (r.psi_equivariant && psi(promote(t)) != rotate(w)) {
            r.psi_equivariant = false;
            if (r.witness.empty()) r.witness = to_json(t);
        }
        if (r.h_equivariant && haiman_h(promote(t)) != promote(haiman_h(t))) {
            r.h_equivariant = false;
            if (r.witness.empty()) r.witness = to_json(t);
        }
    }
    r.psi_injective = image.size() == squares(n, limit).size();
    r.psi_image_is_r_w0 = image == std::set<Word>(all_words.begin(), all_words.end());
    if (!r.psi_image_is_r_w0 && r.witness.empty()) r.witness = "psi image differs from R(w0)";

    r.phi_equivariant = true;
    for (const auto& s : staircases(n, limit)) {
        if (phi(promote(s)) != rotate(phi(s))) {
            r.phi_equivariant = false;
            if (r.witness.empty()) r.witness = to_json(s);
            break;
        }
    }
    return r;
}

std::string to_json(const CspReport& report) {
    ordered_json j;
    j["set"] = std::string(to_string(report.spec.set));
    j["n"] = report.spec.n;
    j["poly"] = poly_coeffs_json(report.polynomial);
    j["fixed_points"] = report.table.counts;
    auto evals = ordered_json::array();
    for (const auto& v : report.evaluations) evals.push_back(v ? bigint_json(*v) : ordered_json(nullptr));
    j["evaluations"] = evals;
    j["mismatches"] = report.mismatches;
    j["verdict"] = report.pass() ? "pass" : "fail";
    return j.dump();
}

std::string to_json(const std::vector<OrbitSummary>& summaries) {
    auto arr = ordered_json::array();
    for (const auto& s : summaries) {
        ordered_json j;
        j["orbit_size"] = s.orbit_size;
        j["count"] = s.count;
        auto reps = ordered_json::array();
        for (const auto& rep : s.representatives) {
            // Tableaux are embedded as objects, words as strings.
            reps.push_back(!rep.empty() && rep.front() == '{' ? ordered_json::parse(rep) : ordered_json(rep));
        }
        j["representatives"] = reps;
        arr.push_back(j);
    }
    return arr.dump();
}

std::string to_json(const CrossCheckReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["censuses"] = {{"reduced-words", census_json(r.words)},
                     {"square-tableaux", census_json(r.squares)},
                     {"staircase-tableaux", census_json(r.staircases)}};
    j["censuses_equal"] = r.censuses_equal;
    j["psi_image_is_r_w0"] = r.psi_image_is_r_w0;
    j["psi_injective"] = r.psi_injective;
    j["psi_equivariant"] = r.psi_equivariant;
    j["phi_equivariant"] = r.phi_equivariant;
    j["h_equivariant"] = r.h_equivariant;
    if (!r.witness.empty()) j["witness"] = r.witness;
    j["verdict"] = r.pass() ? "pass" : "fail";
    return j.dump();
}

std::string to_json(const IntPolynomial& p) {
    ordered_json j;
    j["coeffs"] = poly_coeffs_json(p);
    return j.dump();
}

}  // namespace sieve
