// sieve: command-line front end.
//
// Exit codes: 0 ok, 1 bad input, 2 size guard, 3 verification failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sieve/bn_words.hpp"
#include "sieve/csp.hpp"
#include "sieve/errors.hpp"
#include "sieve/golden.hpp"
#include "sieve/haiman.hpp"
#include "sieve/promotion.hpp"
#include "sieve/properties.hpp"
#include "sieve/qanalog.hpp"

using namespace sieve;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kGuard = 2;
constexpr int kVerifyFailed = 3;

struct CliConfig {
    int n = 0;
    std::string set = "reduced-words";
    std::string format = "text";
    std::uint64_t seed = 1;
    int max_n = 4;
    bool allow_large = false;
    std::string word;
    std::string tableau;
    std::size_t samples = 500;
    bool exhaustive = false;

    bool json() const { return format == "json"; }
    HarnessLimit limit() const { return {max_n}; }
};

// SIEVE_MAX_N overrides the default guard; --max-n overrides both.
int default_max_n() {
    if (const char* env = std::getenv("SIEVE_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw InvalidInput(std::string("SIEVE_MAX_N is not an integer: ") + env);
        }
    }
    return 4;
}

void require_rank(const CliConfig& c) {
    if (c.n < 1) throw InvalidInput("--n must be at least 1");
}

std::string tuple_str(const std::vector<std::string>& items) {
    std::string s = "(";
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i];
    return s + ")";
}

std::string big_str(const BigInt& v) { return v.str(); }

int cmd_enumerate(const CliConfig& c) {
    require_rank(c);
    const auto kind = parse_set_kind(c.set);
    if (c.n > c.max_n) throw SizeGuardExceeded("n = " + std::to_string(c.n) + " exceeds --max-n " + std::to_string(c.max_n));
    ordered_json arr = ordered_json::array();
    auto emit = [&](const std::string& text, bool is_json) {
        if (c.json()) {
            arr.push_back(is_json ? ordered_json::parse(text) : ordered_json(text));
        } else {
            std::cout << text << '\n';
        }
    };
    switch (kind) {
        case SetKind::ReducedWords:
            for (const auto& w : enumerate_reduced_words(c.n, c.max_n)) emit(to_string(w), false);
            break;
        case SetKind::SquareTableaux:
            for (const auto& t : enumerate_syt(square_shape(c.n))) emit(to_json(t), true);
            break;
        case SetKind::StaircaseTableaux:
            for (const auto& s : enumerate_shifted_syt(doubled_staircase(c.n))) emit(to_json(s), true);
            break;
    }
    if (c.json()) std::cout << arr.dump() << '\n';
    return kOk;
}

template <class T, class Act, class Show>
int print_orbit(const CliConfig& c, const T& start, int order, Act act, Show show, bool is_json) {
    std::vector<std::string> items;
    T x = start;
    do {
        items.push_back(show(x));
        x = act(x);
        if (static_cast<int>(items.size()) > order) throw InvalidInput("action does not return within its order");
    } while (!(x == start));
    if (c.json()) {
        ordered_json j;
        auto els = ordered_json::array();
        for (const auto& s : items) els.push_back(is_json ? ordered_json::parse(s) : ordered_json(s));
        j["elements"] = els;
        j["size"] = items.size();
        j["order"] = order;
        std::cout << j.dump() << '\n';
    } else {
        for (const auto& s : items) std::cout << s << '\n';
        std::cout << "size " << items.size() << " (divides " << order << ")\n";
    }
    return kOk;
}

int cmd_orbit(const CliConfig& c) {
    if (c.word.empty() == c.tableau.empty()) throw InvalidInput("give exactly one of --word or --tableau");
    if (!c.word.empty()) {
        const auto w = parse_word(c.word);
        int n = 1;
        while (n * n < static_cast<int>(w.length())) ++n;
        if (n * n != static_cast<int>(w.length()) || !is_reduced_word_for_w0(w, n))
            throw InvalidInput(c.word + " is not a reduced word for w0");
        return print_orbit(
            c, w, n * n, [](const Word& x) { return rotate(x); }, [](const Word& x) { return to_string(x); }, false);
    }
    const auto t = parse_tableau(c.tableau);
    return std::visit(
        [&](const auto& tab) {
            using T = std::decay_t<decltype(tab)>;
            return print_orbit(
                c, tab, tab.size(), [](const T& x) { return promote(x); }, [](const T& x) { return to_json(x); },
                true);
        },
        t);
}

int cmd_csp(const CliConfig& c) {
    require_rank(c);
    const auto report = verify_csp({parse_set_kind(c.set), c.n}, c.limit());
    if (c.json() || !report.pass()) {
        std::cout << to_json(report) << '\n';
    } else {
        std::vector<std::string> fixed, evals;
        for (auto f : report.table.counts) fixed.push_back(std::to_string(f));
        for (const auto& v : report.evaluations) evals.push_back(v ? big_str(*v) : "?");
        std::cout << "set " << c.set << ", n = " << c.n << ", order " << report.spec.order() << '\n'
                  << "X(q) = " << to_string(report.polynomial) << '\n'
                  << "fixed points " << tuple_str(fixed) << '\n'
                  << "X(zeta^d)    " << tuple_str(evals) << '\n'
                  << "verdict pass\n";
    }
    return report.pass() ? kOk : kVerifyFailed;
}

int cmd_poly(const CliConfig& c) {
    require_rank(c);
    const auto x = q_hook_square_closed_form(c.n);
    const auto k = kappa(square_shape(c.n));
    const auto f = IntPolynomial::monomial(static_cast<std::size_t>(k)) * x;
    const int m = c.n * c.n;
    std::vector<std::string> evals;
    for (int d = 0; d < m; ++d) evals.push_back(big_str(eval_at_root(x, m, d)));
    if (c.json()) {
        ordered_json j;
        j["n"] = c.n;
        j["X"] = ordered_json::parse(to_json(x));
        j["f"] = ordered_json::parse(to_json(f));
        j["kappa"] = k;
        auto ev = ordered_json::array();
        for (const auto& v : evals) ev.push_back(v.size() < 19 ? ordered_json(std::stoll(v)) : ordered_json(v));
        j["evaluations"] = ev;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "X(q) = " << to_string(x) << '\n'
                  << "f(q) = q^" << k << " X(q) = " << to_string(f) << '\n'
                  << "kappa = " << k << '\n'
                  << "X(zeta^d), d = 0.." << m - 1 << ": " << tuple_str(evals) << '\n';
    }
    return kOk;
}

int cmd_bijection_check(const CliConfig& c) {
    require_rank(c);
    const auto r = cross_check(c.n, c.limit());
    // Round trips through the inverse maps.
    bool round_trips = true;
    for (const auto& s : enumerate_shifted_syt(doubled_staircase(c.n))) {
        if (!(phi_inverse(phi(s)) == s) || !(haiman_h(haiman_h_inverse(s)) == s)) {
            round_trips = false;
            break;
        }
    }
    std::size_t image = 0, total = 0;
    {
        std::set<Word> seen;
        for (const auto& t : enumerate_syt(square_shape(c.n))) seen.insert(psi(t));
        image = seen.size();
        total = set_size({SetKind::ReducedWords, c.n}, c.limit());
    }
    const bool ok = r.pass() && round_trips;
    if (c.json() || !ok) {
        auto j = ordered_json::parse(to_json(r));
        j["round_trips"] = round_trips;
        j["verdict"] = ok ? "pass" : "fail";
        std::cout << j.dump() << '\n';
    } else {
        const bool equivariant = r.psi_equivariant && r.phi_equivariant && r.h_equivariant;
        std::cout << "psi image = " << image << "/" << total << " reduced words; equivariance "
                  << (equivariant ? "OK" : "FAILED") << '\n';
    }
    return ok ? kOk : kVerifyFailed;
}

int cmd_property_suite(const CliConfig& c) {
    require_rank(c);
    if (c.n > c.max_n && !c.allow_large)
        throw SizeGuardExceeded("n = " + std::to_string(c.n) + " needs --allow-large");
    if (c.exhaustive && c.n > 4) throw SizeGuardExceeded("exhaustive runs are limited to n <= 4");
    const auto results = run_property_suite({.n = c.n, .seed = c.seed, .samples = c.samples, .exhaustive = c.exhaustive});
    bool ok = true;
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
        ok = ok && r.pass();
        if (c.json()) {
            ordered_json j;
            j["name"] = r.name;
            j["cases"] = r.cases;
            j["failures"] = r.failures;
            if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
            arr.push_back(j);
        } else {
            std::cout << (r.pass() ? "[ok]   " : "[FAIL] ") << r.name << ": " << r.cases << " cases, " << r.failures
                      << " failures";
            if (!r.first_failure.empty()) std::cout << " (first: " << r.first_failure << ")";
            std::cout << '\n';
        }
    }
    if (c.json()) std::cout << arr.dump() << '\n';
    return ok ? kOk : kVerifyFailed;
}

int cmd_golden(const CliConfig& c) {
    const auto vectors = golden_vectors();
    std::size_t passed = 0;
    ordered_json arr = ordered_json::array();
    for (const auto& g : vectors) {
        passed += g.pass();
        if (c.json()) {
            ordered_json j;
            j["name"] = g.name;
            j["expected"] = g.expected;
            j["actual"] = g.actual;
            j["pass"] = g.pass();
            arr.push_back(j);
        } else if (g.pass()) {
            std::cout << "[ok]   " << g.name << " = " << g.actual << '\n';
        } else {
            std::cout << "[FAIL] " << g.name << "\n  expected: " << g.expected << "\n  actual:   " << g.actual << '\n';
        }
    }
    if (c.json()) {
        std::cout << arr.dump() << '\n';
    } else {
        std::cout << passed << "/" << vectors.size() << " golden vectors match\n";
    }
    return passed == vectors.size() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CliConfig c;
    CLI::App app{"Cyclic sieving for reduced words of the longest element of B_n"};
    app.require_subcommand(1);
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-n", c.max_n, "Largest n for exhaustive commands (default 4, or SIEVE_MAX_N)");

    auto add_rank = [&c](CLI::App* sub) { sub->add_option("--n", c.n, "Rank n")->required(); };
    auto add_set = [&c](CLI::App* sub) {
        sub->add_option("--set", c.set, "reduced-words | square-tableaux | staircase-tableaux");
    };

    auto* enumerate = app.add_subcommand("enumerate", "List every element of a set");
    add_rank(enumerate);
    add_set(enumerate);

    auto* orbit = app.add_subcommand("orbit", "Orbit of one word under rotation or one tableau under promotion");
    orbit->add_option("--word", c.word, "Reduced word, e.g. 121323123");
    orbit->add_option("--tableau", c.tableau, "Tableau as canonical JSON");

    auto* csp = app.add_subcommand("csp", "Verify the cyclic sieving phenomenon");
    add_rank(csp);
    add_set(csp);

    auto* poly = app.add_subcommand("poly", "Print X(q), f(q), kappa and root-of-unity values");
    add_rank(poly);

    auto* bijection = app.add_subcommand("bijection-check", "Check phi, H and psi exhaustively");
    add_rank(bijection);

    auto* props = app.add_subcommand("property-suite", "Seeded property checks");
    add_rank(props);
    props->add_option("--seed", c.seed, "Random seed");
    props->add_option("--samples", c.samples, "Random cases per property");
    props->add_flag("--exhaustive", c.exhaustive, "Use full enumerations (n <= 4)");
    props->add_flag("--allow-large", c.allow_large, "Permit n beyond the guard");

    auto* golden = app.add_subcommand("golden", "Replay the worked examples");

    for (auto* sub : app.get_subcommands({})) {
        // Accept the global options after the subcommand too.
        sub->fallthrough();
    }

    try {
        c.max_n = default_max_n();
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*enumerate) return cmd_enumerate(c);
        if (*orbit) return cmd_orbit(c);
        if (*csp) return cmd_csp(c);
        if (*poly) return cmd_poly(c);
        if (*bijection) return cmd_bijection_check(c);
        if (*props) return cmd_property_suite(c);
        if (*golden) return cmd_golden(c);
    } catch (const SizeGuardExceeded& e) {
        std::cerr << "size guard: " << e.what() << '\n';
        return kGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad input: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "bad input: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
