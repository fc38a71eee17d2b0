#include "sieve/golden.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "sieve/bn_words.hpp"
#include "sieve/csp.hpp"
#include "sieve/haiman.hpp"
#include "sieve/insertion.hpp"
#include "sieve/promotion.hpp"
#include "sieve/qanalog.hpp"

namespace sieve {
namespace {

std::string set_str(const std::set<int>& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int x : s) {
        out << (first ? "" : ",") << x;
        first = false;
    }
    out << '}';
    return out.str();
}

template <class Seq>
std::string tuple_str(const Seq& v) {
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (const auto& x : v) {
        out << (first ? "" : ",") << x;
        first = false;
    }
    out << ')';
    return out.str();
}

std::string census_str(const OrbitCensus& c) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [size, count] : c) {
        out << (first ? "" : ", ") << size << ": " << count;
        first = false;
    }
    out << '}';
    return out.str();
}

std::string rows_str(const Rows& rows) {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) out << '/';
        for (int x : rows[r]) out << x;
    }
    return out.str();
}

std::string orbit_str(const std::vector<std::string>& items) {
    std::string s;
    for (const auto& x : items) s += (s.empty() ? "" : " -> ") + x;
    return s;
}

Word w(const char* s, int alphabet = 0) { return parse_word(s, alphabet); }

const StandardTableau& square_example() {
    static const StandardTableau t({{1, 2, 5}, {3, 6, 8}, {4, 7, 9}});
    return t;
}

const ShiftedStandardTableau& staircase_example() {
    static const ShiftedStandardTableau s({{1, 2, 4, 5, 8}, {3, 6, 9}, {7}});
    return s;
}

}  // namespace

std::vector<GoldenVector> golden_vectors() {
    std::vector<GoldenVector> out;
    auto add = [&out](std::string name, std::string expected, const std::function<std::string()>& run) {
        std::string actual;
        try {
            actual = run();
        } catch (const std::exception& e) {
            actual = std::string("error: ") + e.what();
        }
        out.push_back({std::move(name), std::move(expected), std::move(actual)});
    };
    const auto& Q = square_example();
    const auto& S = staircase_example();

    // Enumeration and serialization.
    add("|SYT(3,3,3)|", "42", [] { return std::to_string(enumerate_syt(square_shape(3)).size()); });
    add("|SYT'(5,3,1)|", "42", [] { return std::to_string(enumerate_shifted_syt(doubled_staircase(3)).size()); });
    add("to_json 125/368/479", R"({"kind":"straight","shape":[3,3,3],"rows":[[1,2,5],[3,6,8],[4,7,9]]})",
        [&] { return to_json(Q); });
    add("to_json 12458/369/7", R"({"kind":"shifted","shape":[5,3,1],"rows":[[1,2,4,5,8],[3,6,9],[7]]})",
        [&] { return to_json(S); });

    // Promotion.
    add("p(1248/367/5)", "1367/258/4",
        [] { return rows_str(promote(StandardTableau({{1, 2, 4, 8}, {3, 6, 7}, {5}})).rows()); });
    add("p^-1(1367/258/4)", "1248/367/5",
        [] { return rows_str(promote_inverse(StandardTableau({{1, 3, 6, 7}, {2, 5, 8}, {4}})).rows()); });
    add("square orbit of 125/368/479", "125/368/479 -> 147/258/369 -> 136/247/589", [&] {
        std::vector<std::string> items;
        const std::vector<StandardTableau> set{Q, promote(Q), promote(promote(Q))};
        const auto found = promotion_orbits<StandardTableau>(set);
        for (const auto& t : found.front().elements) items.push_back(rows_str(t.rows()));
        return orbit_str(items);
    });
    add("shifted orbit of 12458/369/7", "12458/369/7 -> 12347/568/9 -> 12369/457/8", [&] {
        std::vector<std::string> items;
        auto s = S;
        for (int i = 0; i < 3; ++i, s = promote(s)) items.push_back(rows_str(s.rows()));
        if (!(s == S)) items.push_back("(not closed)");
        return orbit_str(items);
    });
    add("SYT(3^3) census", "{3: 2, 9: 4}", [] { return census_str(orbit_census({SetKind::SquareTableaux, 3})); });

    // Rectification and the bijections.
    add("embed_square(125/368/479) filled columns", "3-5/3-5/3-5", [&] {
        const auto e = embed_square(Q);
        std::string s;
        for (int r = 1; r <= 3; ++r) {
            const int first = e.first_col(r);
            s += (r > 1 ? "/" : "") + std::to_string(first) + "-" +
                 std::to_string(first + static_cast<int>(e.rows()[r - 1].size()) - 1);
        }
        return s;
    });
    add("rectify(embed_square(125/368/479))", "12458/369/7", [&] { return rows_str(rectify(embed_square(Q)).rows()); });
    add("H(125/368/479)", "12458/369/7", [&] { return rows_str(haiman_h(Q).rows()); });
    add("H^-1(12458/369/7)", "125/368/479", [&] { return rows_str(haiman_h_inverse(S).rows()); });
    add("H carries the square orbit onto the shifted orbit", "12458/369/7 -> 12347/568/9 -> 12369/457/8", [&] {
        std::vector<std::string> items;
        auto t = Q;
        for (int i = 0; i < 3; ++i, t = promote(t)) items.push_back(rows_str(haiman_h(t).rows()));
        return orbit_str(items);
    });
    add("r(12458/369/7)", "2", [&] { return std::to_string(bottom_up_row_of_max(S)); });
    add("Phi(12458/369/7)", "132132132", [&] { return to_string(phi(S)); });
    add("Phi^-1(132132132)", "12458/369/7", [] { return rows_str(phi_inverse(w("132132132")).rows()); });
    add("Psi(125/368/479)", "132132132", [&] { return to_string(psi(Q)); });

    // Insertion and crystals.
    add("RSK(332132121) P", "111/222/333", [] { return rows_str(rsk(w("332132121")).insertion.rows()); });
    add("RSK(332132121) Q", "125/368/479", [] { return rows_str(rsk(w("332132121")).recording.rows()); });
    add("Q'(332132121)", "12458/369/7", [] { return rows_str(q_shifted(w("332132121")).rows()); });
    add("e_2(3121221332)", "3121231332", [] { return to_string(crystal_e(w("3121221332"), 2)); });
    add("332132121 is a square word", "true", [] { return is_square_word(w("332132121"), 3) ? "true" : "false"; });
    add("ebar(tail 332132121) 1 is a square word", "true", [] {
        const auto v = ebar(w("332132121").tail()).appended(1);
        return is_square_word(v, 3) ? "true" : "false";
    });

    // B_n.
    add("length of w0, n=3", "9", [] { return std::to_string(coxeter_length(SignedPermutation::longest(3))); });
    add("121323123 reduced for w0", "true", [] { return is_reduced_word_for_w0(w("121323123"), 3) ? "true" : "false"; });
    add("rotations of 121323123 reduced", "9/9", [] {
        auto x = w("121323123");
        int ok = 0;
        for (int i = 0; i < 9; ++i, x = rotate(x)) ok += is_reduced_word_for_w0(x, 3);
        return std::to_string(ok) + "/9";
    });
    add("|R(w0)|, n=3", "42", [] { return std::to_string(enumerate_reduced_words(3).size()); });
    add("orbit of 121323123",
        "121323123 -> 213231231 -> 132312312 -> 323123121 -> 231231213 -> 312312132 -> 123121323 -> 231213231 -> "
        "312132312",
        [] {
            std::vector<std::string> items;
            auto x = w("121323123");
            for (int i = 0; i < 9; ++i, x = rotate(x)) items.push_back(to_string(x));
            return orbit_str(items);
        });
    add("rotate^9(121323123)", "121323123", [] { return to_string(rotate(w("121323123"), 9)); });
    add("cyclic order of 213213213", "3", [] {
        const auto x = w("213213213");
        int k = 1;
        for (auto y = rotate(x); y != x; y = rotate(y)) ++k;
        return std::to_string(k);
    });
    add("descents of 121323123", "{2,4,6}", [] { return set_str(descent_data(w("121323123")).descents); });
    add("maj(121323123)", "12", [] { return std::to_string(descent_data(w("121323123")).maj); });
    add("cyclic D(132132132)", "{0,2,3,5,6,8}", [] { return set_str(descent_data(w("132132132")).cyclic_descents); });
    add("cyclic maj(132132132)", "24", [] {
        long long m = 0;
        for (int i : descent_data(w("132132132")).cyclic_descents) m += i;
        return std::to_string(m);
    });
    add("D(125/368/479)", "{0,2,3,5,6,8}", [&] { return set_str(tableau_descent_data(Q).cyclic_descents); });
    add("R(w0) orbits of size 3", "123123123 132132132", [] {
        for (const auto& s : orbit_summaries({SetKind::ReducedWords, 3})) {
            if (s.orbit_size == 3) return s.representatives.at(0) + " " + s.representatives.at(1);
        }
        return std::string("none");
    });

    // Polynomials.
    const std::string x3 =
        "1 + q^2 + 2q^3 + 2q^4 + 2q^5 + 4q^6 + 3q^7 + 4q^8 + 4q^9 + 4q^10 + 3q^11 + 4q^12 + 2q^13 + 2q^14 + "
        "2q^15 + q^16 + q^18";
    add("X(q), n=3 (q-hook)", x3, [] { return to_string(q_hook_rectangle(3, 3)); });
    add("kappa(3,3,3)", "9", [] { return std::to_string(kappa(square_shape(3))); });
    add("f_3(q) = q^9 X(q)", "true", [] {
        std::vector<long long> majors;
        for (const auto& x : enumerate_reduced_words(3)) majors.push_back(descent_data(x).maj);
        return maj_gf(majors) == IntPolynomial::monomial(9) * q_hook_rectangle(3, 3) ? "true" : "false";
    });
    add("shift_down(f_3, 9) (maj)", x3, [] { return to_string(csp_polynomial({SetKind::ReducedWords, 3})); });
    add("X(zeta^d), n=3", "(42,0,0,6,0,0,6,0,0)", [] {
        std::vector<BigInt> v;
        const auto x = q_hook_rectangle(3, 3);
        for (int d = 0; d < 9; ++d) v.push_back(eval_at_root(x, 9, d));
        return tuple_str(v);
    });

    // CSP harness.
    add("fixed points of c^3 on R(w0), n=3", "6", [] { return std::to_string(fixed_points({SetKind::ReducedWords, 3}, 3)); });
    add("fixed points of c^0 on R(w0), n=3", "42", [] { return std::to_string(fixed_points({SetKind::ReducedWords, 3}, 0)); });
    add("csp reduced-words n=3", "pass (42,0,0,6,0,0,6,0,0)", [] {
        const auto r = verify_csp({SetKind::ReducedWords, 3});
        return std::string(r.pass() ? "pass " : "fail ") + tuple_str(r.table.counts);
    });
    add("R(w0) census, n=3", "{3: 2, 9: 4}", [] { return census_str(orbit_census({SetKind::ReducedWords, 3})); });
    add("cross-check censuses, n=3", "{3: 2, 9: 4} x3", [] {
        const auto r = cross_check(3);
        return r.censuses_equal ? census_str(r.words) + " x3" : std::string("differ");
    });
    return out;
}

}  // namespace sieve
