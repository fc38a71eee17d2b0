#include "sieve/properties.hpp"

#include <functional>
#include <random>

#include "sieve/bn_words.hpp"
#include "sieve/errors.hpp"
#include "sieve/haiman.hpp"
#include "sieve/insertion.hpp"
#include "sieve/promotion.hpp"
#include "sieve/random.hpp"

namespace sieve {

bool promotion_order_holds(const StandardTableau& t) { return promote_power(t, t.size()) == t; }
bool promotion_order_holds(const ShiftedStandardTableau& s) { return promote_power(s, s.size()) == s; }

bool phi_equivariant_at(const ShiftedStandardTableau& s) { return phi(promote(s)) == rotate(phi(s)); }

bool h_equivariant_at(const StandardTableau& q) { return haiman_h(promote(q)) == promote(haiman_h(q)); }

bool promotion_word_form_holds(const Word& w) {
    const auto next = ebar(w.tail()).appended(1);
    return promote(rsk(w).recording) == rsk(next).recording && promote(q_shifted(w)) == q_shifted(next);
}

bool crystal_invariance_holds(const Word& w, int i) {
    if (!crystal_e_defined(w, i)) return true;
    const auto raised = crystal_e(w, i);
    return rsk(raised).recording == rsk(w).recording && q_shifted(raised) == q_shifted(w);
}

bool recording_drop_first_holds(const Word& w) {
    const auto tail = w.tail();
    const auto q = rsk(w).recording;
    const auto q_tail = rsk(tail).recording;
    const auto d = delta(q);
    const auto qs = q_shifted(w);
    const auto ds = delta(qs);
    return d.remainder == q_tail && ds.remainder == q_shifted(tail) &&
           d.remainder.size() + 1 == q.size() && ds.remainder.size() + 1 == qs.size();
}

bool descent_sets_agree(const StandardTableau& t) {
    return tableau_descent_data(t).cyclic_descents == descent_data(psi(t)).cyclic_descents;
}

bool word_descent_shift_holds(const Word& w) {
    const auto m = static_cast<int>(w.length());
    return descent_data(rotate(w)).cyclic_descents == shift_down_mod(descent_data(w).cyclic_descents, m);
}

bool tableau_descent_shift_holds(const StandardTableau& t) {
    return tableau_descent_data(promote(t)).cyclic_descents ==
           shift_down_mod(tableau_descent_data(t).cyclic_descents, t.size());
}

namespace {

template <class T>
void record(PropertyResult& result, const T& input, bool ok) {
    ++result.cases;
    if (ok) return;
    if (result.failures++ == 0) {
        if constexpr (std::is_same_v<T, Word>) {
            result.first_failure = to_string(input);
        } else {
            result.first_failure = to_json(input);
        }
    }
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const PropertySuiteOptions& o) {
    if (o.n < 1) throw InvalidInput("rank must be positive");
    if (o.exhaustive && o.n > 4) throw SizeGuardExceeded("exhaustive property runs are limited to n <= 4");
    const int n = o.n;
    std::mt19937_64 rng(o.seed);

    std::vector<StandardTableau> squares;
    std::vector<ShiftedStandardTableau> staircases;
    if (o.exhaustive) {
        squares = enumerate_syt(square_shape(n));
        staircases = enumerate_shifted_syt(doubled_staircase(n));
    } else {
        for (std::size_t i = 0; i < o.samples; ++i) squares.push_back(random_syt(square_shape(n), rng));
        for (std::size_t i = 0; i < o.samples; ++i) staircases.push_back(random_shifted_syt(doubled_staircase(n), rng));
    }
    // Random words with length 1..n^2 for the recording and crystal identities.
    std::vector<Word> words;
    const std::size_t word_count = o.exhaustive ? std::max<std::size_t>(o.samples, 200) : o.samples;
    std::uniform_int_distribution<std::size_t> length(1, static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < word_count; ++i) words.push_back(random_word(n, length(rng), rng));

    std::vector<PropertyResult> out;
    auto add = [&out](std::string name) -> PropertyResult& {
        PropertyResult r;
        r.name = std::move(name);
        out.push_back(std::move(r));
        return out.back();
    };

    {
        auto& r = add("promotion order on squares");
        for (const auto& t : squares) record(r, t, promotion_order_holds(t));
    }
    {
        auto& r = add("promotion order on staircases");
        for (const auto& s : staircases) record(r, s, promotion_order_holds(s));
    }
    {
        auto& r = add("phi(p(S)) = c(phi(S))");
        for (const auto& s : staircases) record(r, s, phi_equivariant_at(s));
    }
    {
        auto& r = add("H(p(Q)) = p(H(Q))");
        for (const auto& q : squares) record(r, q, h_equivariant_at(q));
    }
    {
        auto& r = add("p(Q(w)) = Q(ebar(tail w) 1) on square words");
        for (const auto& q : squares) {
            const auto w = square_word_of(q);
            record(r, w, promotion_word_form_holds(w));
        }
    }
    // A one-letter alphabet has no crystal operators.
    if (n > 1) {
        auto& r = add("Q(e_i w) = Q(w), Q'(e_i w) = Q'(w)");
        for (const auto& w : words) {
            for (int i = 1; i < n; ++i) {
                if (crystal_e_defined(w, i)) record(r, w, crystal_invariance_holds(w, i));
            }
        }
    }
    {
        auto& r = add("Q(tail w) = delta Q(w), Q'(tail w) = delta Q'(w)");
        for (const auto& w : words) record(r, w, recording_drop_first_holds(w));
    }
    {
        auto& r = add("D(T) = D(psi(T))");
        for (const auto& t : squares) record(r, t, descent_sets_agree(t));
    }
    {
        auto& r = add("cyclic descents shift under rotation");
        for (const auto& q : squares) {
            const auto w = psi(q);
            record(r, w, word_descent_shift_holds(w));
        }
    }
    {
        auto& r = add("cyclic descents shift under promotion");
        for (const auto& t : squares) record(r, t, tableau_descent_shift_holds(t));
    }
    return out;
}

}  // namespace sieve
