#pragma once

#include <optional>
#include <vector>

#include "gcgal/category.hpp"

namespace gcgal {

// The closed rule set. WeakPermutation is unary; the rest are binary.
enum class RuleKind : uint8_t {
    ForwardApplication,
    BackwardApplication,
    ForwardComposition,
    BackwardComposition,
    Coordination,
    WeakPermutation,
};

inline const char* rule_name(RuleKind r) {
    switch (r) {
        case RuleKind::ForwardApplication: return "forward-application";
        case RuleKind::BackwardApplication: return "backward-application";
        case RuleKind::ForwardComposition: return "forward-composition";
        case RuleKind::BackwardComposition: return "backward-composition";
        case RuleKind::Coordination: return "coordination";
        case RuleKind::WeakPermutation: return "weak-generalized-permutation";
    }
    return "?";
}

// Binary rule schemas:
//   forward application   X/Y  +  Y    => X
//   backward application  Y    +  X\Y  => X
//   forward composition   X/Y  +  Y/Z  => X/Z
//   backward composition  Y\Z  +  X\Y  => X\Z
//   coordination          CONJ +  X    => X\X   and   X + CONJ => X/X
// Coordination conjoins like categories via the intermediate modifier; both
// groupings of the medial conjunction are admitted (they generate the same
// strings). Conjuncts are the simple categories (nesting depth <= 2, no CONJ
// inside): noun phrases, clauses, verb phrases, adjectives and the other
// one-slash functors. Deeper conjuncts would let the intermediates feed
// themselves and the category space lose finiteness.
// Non-matching inputs (and results past max_depth) yield nullopt.
inline std::optional<Cat> apply_binary(RuleKind rule, const Cat& left, const Cat& right,
                                       int max_depth = kDefaultMaxCatDepth) {
    switch (rule) {
        case RuleKind::ForwardApplication:
            if (left->is_functor() && left->dir == Slash::Forward && cat_equal(left->arg, right))
                return left->result;
            return std::nullopt;
        case RuleKind::BackwardApplication:
            if (right->is_functor() && right->dir == Slash::Backward && cat_equal(right->arg, left))
                return right->result;
            return std::nullopt;
        case RuleKind::ForwardComposition:
            if (left->is_functor() && left->dir == Slash::Forward && right->is_functor() &&
                right->dir == Slash::Forward && cat_equal(left->arg, right->result)) {
                if (Cat c = make_functor(left->result, Slash::Forward, right->arg, max_depth))
                    return c;
            }
            return std::nullopt;
        case RuleKind::BackwardComposition:
            if (left->is_functor() && left->dir == Slash::Backward && right->is_functor() &&
                right->dir == Slash::Backward && cat_equal(right->arg, left->result)) {
                if (Cat c = make_functor(right->result, Slash::Backward, left->arg, max_depth))
                    return c;
            }
            return std::nullopt;
        case RuleKind::Coordination: {
            constexpr int kMaxConjunctDepth = 2;
            const bool left_conj = left->is_atom() && left->atom == AtomInventory::kConj;
            const bool right_conj = right->is_atom() && right->atom == AtomInventory::kConj;
            if (left_conj && right->depth <= kMaxConjunctDepth &&
                !contains_atom(right, AtomInventory::kConj)) {
                if (Cat c = make_functor(right, Slash::Backward, right, max_depth)) return c;
            } else if (right_conj && left->depth <= kMaxConjunctDepth &&
                       !contains_atom(left, AtomInventory::kConj)) {
                if (Cat c = make_functor(left, Slash::Forward, left, max_depth)) return c;
            }
            return std::nullopt;
        }
        case RuleKind::WeakPermutation:
            return std::nullopt;  // unary; see apply_permutation
    }
    return std::nullopt;
}

// Weak generalized permutation: cyclic rotations of the outermost argument
// spine, each argument keeping its own slash. Atoms and 1-argument functors
// have no non-trivial rotation. The returned set excludes the input itself
// and contains at most (spine length - 1) categories.
inline std::vector<Cat> apply_permutation(const Cat& cat, int max_depth = kDefaultMaxCatDepth) {
    std::vector<Cat> out;
    if (cat->is_atom()) return out;
    Spine s = decompose_spine(cat);
    const size_t n = s.args.size();
    if (n < 2) return out;
    for (size_t r = 1; r < n; ++r) {
        Spine rotated;
        rotated.head = s.head;
        rotated.args.reserve(n);
        for (size_t i = 0; i < n; ++i) rotated.args.push_back(s.args[(i + r) % n]);
        Cat c = rebuild_spine(rotated, max_depth);
        if (!c || cat_equal(c, cat)) continue;
        bool dup = false;
        for (const auto& prev : out)
            if (cat_equal(prev, c)) { dup = true; break; }
        if (!dup) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace gcgal
