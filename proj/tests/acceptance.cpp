// One line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "sieve/bn_words.hpp"
#include "sieve/csp.hpp"
#include "sieve/golden.hpp"
#include "sieve/haiman.hpp"
#include "sieve/promotion.hpp"
#include "sieve/properties.hpp"
#include "sieve/qanalog.hpp"
#include "sieve/random.hpp"

using namespace sieve;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_s > 0 && secs > budget_s) {
        o.ok = false;
        o.detail += " (over the " + std::to_string(static_cast<int>(budget_s)) + " s budget)";
    }
    failures += !o.ok;
    std::printf("[%s] %s %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
    std::fflush(stdout);
}

const IntPolynomial& expected_x3() {
    static const IntPolynomial x = [] {
        std::vector<BigInt> c;
        for (int v : {1, 0, 1, 2, 2, 2, 4, 3, 4, 4, 4, 3, 4, 2, 2, 2, 1, 0, 1}) c.emplace_back(v);
        return IntPolynomial(std::move(c));
    }();
    return x;
}

std::vector<long long> reduced_word_majors(int n) {
    std::vector<long long> majors;
    for (const auto& w : enumerate_reduced_words(n)) majors.push_back(descent_data(w).maj);
    return majors;
}

}  // namespace

int main() {
    criterion("AC1", "|R(w0)| = 42 for n=3 by DFS and by psi image", 1.0, [] {
        const auto dfs = enumerate_reduced_words(3);
        std::set<Word> image;
        for (const auto& t : enumerate_syt(square_shape(3))) image.insert(psi(t));
        const bool same = image == std::set<Word>(dfs.begin(), dfs.end());
        return Outcome{dfs.size() == 42 && image.size() == 42 && same,
                       "dfs " + std::to_string(dfs.size()) + ", psi image " + std::to_string(image.size()) +
                           (same ? ", identical" : ", differ")};
    });

    criterion("AC2", "X(q) for n=3 by q-hook and by q^-9 maj generating function", 0, [] {
        const auto hook = q_hook_rectangle(3, 3);
        const auto maj = shift_down(maj_gf(reduced_word_majors(3)), 9);
        const bool ok = hook == expected_x3() && maj == expected_x3();
        return Outcome{ok, "X(q) = " + to_string(hook)};
    });

    criterion("AC3", "root-of-unity table for n=3", 0, [] {
        std::string table;
        bool ok = true;
        const int expected[] = {42, 0, 0, 6, 0, 0, 6, 0, 0};
        for (int d = 0; d < 9; ++d) {
            const auto v = eval_at_root(expected_x3(), 9, d);
            ok = ok && v == expected[d];
            table += (d ? "," : "") + v.str();
        }
        return Outcome{ok, "(" + table + ")"};
    });

    criterion("AC4", "orbit census for n=3 on all three sets", 0, [] {
        const OrbitCensus want{{3, 2}, {9, 4}};
        bool ok = true;
        for (auto k : {SetKind::ReducedWords, SetKind::SquareTableaux, SetKind::StaircaseTableaux})
            ok = ok && orbit_census({k, 3}) == want;
        std::set<std::string> small;
        for (const auto& s : orbit_summaries({SetKind::ReducedWords, 3})) {
            if (s.orbit_size == 3) {
                for (const auto& r : s.representatives) {
                    // Collect the whole orbit of each representative.
                    auto w = parse_word(r);
                    for (int i = 0; i < 3; ++i, w = rotate(w)) small.insert(to_string(w));
                }
            }
        }
        ok = ok && small.count("123123123") && small.count("132132132");
        return Outcome{ok, "{3: 2, 9: 4} on reduced words, squares, staircases; size-3 orbits hold 123123123 and 132132132"};
    });

    criterion("AC5", "full CSP verification for n = 2, 3, 4 on all three sets", 60.0, [] {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 4; ++n) {
            for (auto k : {SetKind::ReducedWords, SetKind::SquareTableaux, SetKind::StaircaseTableaux}) {
                const auto r = verify_csp({k, n});
                ok = ok && r.pass();
                if (!r.pass()) detail += std::string(to_string(k)) + " n=" + std::to_string(n) + " failed; ";
            }
        }
        return Outcome{ok, detail.empty() ? "9/9 triples pass, n=4 has 24024 elements and order 16" : detail};
    });

    criterion("AC6", "golden vectors", 0, [] {
        const auto v = golden_vectors();
        std::size_t passed = 0;
        std::string first;
        for (const auto& g : v) {
            passed += g.pass();
            if (!g.pass() && first.empty()) first = "; first mismatch " + g.name;
        }
        return Outcome{passed == v.size(), std::to_string(passed) + "/" + std::to_string(v.size()) + " byte-exact" + first};
    });

    criterion("AC7", "property suites, exhaustive n <= 3 and sampled n = 4", 0, [] {
        bool ok = true;
        std::size_t total = 0, min_n4 = SIZE_MAX;
        std::string bad;
        for (int n = 1; n <= 4; ++n) {
            const auto results = run_property_suite({.n = n, .seed = 2024, .samples = 500, .exhaustive = n <= 3});
            for (const auto& r : results) {
                ok = ok && r.pass();
                total += r.cases;
                if (n == 4) min_n4 = std::min(min_n4, r.cases);
                if (!r.pass() && bad.empty()) bad = "; " + r.name + " failed at n=" + std::to_string(n);
            }
        }
        ok = ok && min_n4 >= 500;
        return Outcome{ok, std::to_string(total) + " cases, zero failures, at least " + std::to_string(min_n4) +
                               " per property at n=4" + bad};
    });

    criterion("AC8", "maj identities for SYT(n^n) and R(w0), hook count, n <= 4", 0, [] {
        bool ok = true;
        for (int n = 1; n <= 4; ++n) {
            const auto shape = square_shape(n);
            const auto x = q_hook_rectangle(n, n);
            std::vector<long long> tmaj;
            for (const auto& t : enumerate_syt(shape)) tmaj.push_back(tableau_descent_data(t).maj);
            const auto shift = IntPolynomial::monomial(static_cast<std::size_t>(kappa(shape)));
            ok = ok && maj_gf(tmaj) == shift * x;  // SYT side
            ok = ok && maj_gf(reduced_word_majors(n)) == shift * x;  // reduced-word side
            ok = ok && x(BigInt(1)) == count_syt(shape);
            ok = ok && x == q_hook_square_closed_form(n);
        }
        return Outcome{ok, "exact for n = 1..4"};
    });

    criterion("AC9", "n = 5 sampled promotion order and polynomial side", 0, [] {
        std::mt19937_64 rng(5);
        int good = 0;
        for (int i = 0; i < 100; ++i) {
            const auto t = random_syt(square_shape(5), rng);
            good += promote_power(t, 25) == t;
        }
        const auto x = q_hook_square_closed_form(5);
        bool poly_ok = x == q_hook_rectangle(5, 5) && x(BigInt(1)) == count_syt(square_shape(5));
        BigInt sum = 0;
        for (int d = 0; d < 25; ++d) {
            const auto v = eval_at_root(x, 25, d);
            poly_ok = poly_ok && v >= 0;
            sum += v;
        }
        poly_ok = poly_ok && sum % 25 == 0;
        return Outcome{good == 100 && poly_ok, std::to_string(good) + "/100 random SYT(5^5) fixed by p^25; X(1) = " +
                                                   x(BigInt(1)).str() + ", " + BigInt(sum / 25).str() + " predicted orbits"};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
