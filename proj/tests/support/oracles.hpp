#pragma once

// Test-side oracles, deliberately independent of the chart parser's code
// path: no interning, no memoization, no chart. They recompute everything
// from first principles so the production implementations have something
// honest to be checked against.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "gcgal/lexicon.hpp"
#include "gcgal/rules.hpp"

namespace gcgal::testing {

inline bool contains_cat(const std::vector<Cat>& v, const Cat& c) {
    for (const auto& x : v)
        if (cat_equal(x, c)) return true;
    return false;
}

inline void add_unique(std::vector<Cat>& v, const Cat& c) {
    if (!contains_cat(v, c)) v.push_back(c);
}

// Permutation orbit of a category (fixpoint of apply_permutation), input
// included.
inline std::vector<Cat> oracle_unary_closure(const Cat& c) {
    std::vector<Cat> out{c};
    for (size_t i = 0; i < out.size(); ++i)
        for (const auto& p : apply_permutation(out[i])) add_unique(out, p);
    return out;
}

// Exhaustive-bracketing recogniser: enumerates every binary tree over the
// span (no memo, so the recursion literally walks all bracketings and rule
// assignments) and returns every derivable category.
inline std::vector<Cat> oracle_span_categories(const std::vector<std::vector<Cat>>& token_cats,
                                               size_t begin, size_t end) {
    std::vector<Cat> out;
    if (end - begin == 1) {
        for (const auto& c : token_cats[begin])
            for (const auto& u : oracle_unary_closure(c)) add_unique(out, u);
        return out;
    }
    static constexpr RuleKind kBinary[] = {
        RuleKind::ForwardApplication, RuleKind::BackwardApplication,
        RuleKind::ForwardComposition, RuleKind::BackwardComposition,
        RuleKind::Coordination,
    };
    for (size_t split = begin + 1; split < end; ++split) {
        auto lefts = oracle_span_categories(token_cats, begin, split);
        auto rights = oracle_span_categories(token_cats, split, end);
        for (const auto& l : lefts)
            for (const auto& r : rights)
                for (RuleKind rule : kBinary)
                    if (auto res = apply_binary(rule, l, r))
                        for (const auto& u : oracle_unary_closure(*res)) add_unique(out, u);
    }
    return out;
}

inline bool oracle_is_grammatical(const std::vector<std::string>& tokens, const Lexicon& lex) {
    std::vector<std::vector<Cat>> token_cats;
    token_cats.reserve(tokens.size());
    for (const auto& t : tokens) {
        std::vector<Cat> cats;
        for (size_t e : lex.entries_for(t)) cats.push_back(lex.entries()[e].category);
        token_cats.push_back(std::move(cats));
    }
    for (const auto& c : oracle_span_categories(token_cats, 0, tokens.size()))
        if (c->is_atom() && c->atom == AtomInventory::kS) return true;
    return false;
}

// Brute-force cyclic-rotation oracle over the argument list, written against
// the raw node fields rather than the Spine helpers.
inline std::vector<Cat> oracle_spine_rotations(const Cat& cat) {
    struct ArgStep {
        Slash dir;
        Cat arg;
    };
    std::vector<ArgStep> steps;
    Cat head = cat;
    while (head->is_functor()) {
        steps.push_back({head->dir, head->arg});
        head = head->result;
    }
    std::vector<Cat> out;
    if (steps.size() < 2) return out;
    for (size_t rot = 1; rot < steps.size(); ++rot) {
        Cat rebuilt = head;
        for (size_t i = steps.size(); i-- > 0;) {
            const ArgStep& st = steps[(i + rot) % steps.size()];
            rebuilt = make_functor(rebuilt, st.dir, st.arg);
        }
        if (rebuilt && !cat_equal(rebuilt, cat)) add_unique(out, rebuilt);
    }
    return out;
}

// Figure-1 style English-like lexicon with real words; eight entries.
inline Lexicon figure1_lexicon() {
    Lexicon lex;
    auto C = [&](const char* s) { return parse_category(s, lex.atoms()); };
    lex.add("man", C("NP"), PosClass::Noun);
    lex.add("Lisa", C("NP"), PosClass::Noun);
    lex.add("ga", C("NP_SBJ\\NP"), PosClass::SubjectMarker);
    lex.add("o", C("NP_OBJ\\NP"), PosClass::ObjectMarker);
    lex.add("met", C("(S\\NP_SBJ)/NP_OBJ"), PosClass::TransitiveVerb);
    lex.add("walked", C("S\\NP_SBJ"), PosClass::IntransitiveVerb);
    lex.add("whom", C("(NP_SBJ\\NP_SBJ)/(S/NP_OBJ)"), PosClass::Relativizer);
    lex.add("and", C("CONJ"), PosClass::Conjunction);
    return lex;
}

// Nouns, case markers and one transitive verb only.
inline Lexicon stripped_lexicon() {
    Lexicon lex;
    auto C = [&](const char* s) { return parse_category(s, lex.atoms()); };
    lex.add("man", C("NP"), PosClass::Noun);
    lex.add("ga", C("NP_SBJ\\NP"), PosClass::SubjectMarker);
    lex.add("o", C("NP_OBJ\\NP"), PosClass::ObjectMarker);
    lex.add("met", C("(S\\NP_SBJ)/NP_OBJ"), PosClass::TransitiveVerb);
    return lex;
}

}  // namespace gcgal::testing
