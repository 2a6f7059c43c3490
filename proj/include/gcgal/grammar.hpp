#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gcgal/lexicon.hpp"
#include "gcgal/rules.hpp"

namespace gcgal {

struct GrammarLimits {
    int max_depth = kDefaultMaxCatDepth;
    size_t max_categories = 200000;
};

// Lexicon compiled for parsing. Categories are interned to dense ids and the
// binary/unary rule results for each id pair are memoized on first use, so a
// chart never recomputes a combination. Memoization is lazy: only category
// pairs that actually co-occur in some chart are ever tabulated (the full
// cross-product is astronomically larger thanks to coordination).
//
// A Grammar instance is mutable from the memo's point of view and therefore
// not shareable across threads; give each worker its own. ChartParser keeps
// parsing itself pure: same input, same grammar contents, same derivation,
// independent of memoization history (all tie-breaking is structural).
class Grammar {
public:
    using Limits = GrammarLimits;
    using Combo = std::pair<int32_t, RuleKind>;

    explicit Grammar(Lexicon lexicon, Limits limits = Limits())
        : lexicon_(std::move(lexicon)), limits_(limits) {
        lexical_ids_.reserve(lexicon_.entries().size());
        for (const auto& entry : lexicon_.entries()) lexical_ids_.push_back(intern(entry.category));
        sentence_id_ = intern(make_atom(AtomInventory::kS));
    }

    const Lexicon& lexicon() const { return lexicon_; }
    const Limits& limits() const { return limits_; }

    size_t category_count() const { return cats_.size(); }
    const Cat& category(int32_t id) const { return cats_[static_cast<size_t>(id)]; }
    std::string category_text(int32_t id) const {
        return print_category(category(id), lexicon_.atoms());
    }

    int32_t sentence_id() const { return sentence_id_; }
    int32_t lexical_id(size_t entry_index) const { return lexical_ids_[entry_index]; }

    int32_t intern(const Cat& c) {
        auto it = index_.find(Key{c});
        if (it != index_.end()) return it->second;
        if (cats_.size() >= limits_.max_categories)
            throw GrammarError("category closure exceeds " + std::to_string(limits_.max_categories) +
                               " categories; lexicon looks pathological");
        cats_.push_back(c);
        int32_t id = static_cast<int32_t>(cats_.size()) - 1;
        index_.emplace(Key{c}, id);
        return id;
    }

    int32_t id_of_or_minus1(const Cat& c) const {
        auto it = index_.find(Key{c});
        return it == index_.end() ? -1 : it->second;
    }

    // All binary-rule results of (left, right); empty when none combine.
    const std::vector<Combo>& combine(int32_t left, int32_t right) {
        const uint64_t key = pair_key(left, right);
        auto it = binary_.find(key);
        if (it != binary_.end()) return it->second;

        static constexpr RuleKind kBinary[] = {
            RuleKind::ForwardApplication, RuleKind::BackwardApplication,
            RuleKind::ForwardComposition, RuleKind::BackwardComposition,
            RuleKind::Coordination,
        };
        std::vector<Combo> combos;
        for (RuleKind rule : kBinary) {
            auto result = apply_binary(rule, category(left), category(right), limits_.max_depth);
            if (result) combos.emplace_back(intern(*result), rule);
        }
        return binary_.emplace(key, std::move(combos)).first->second;
    }

    // Non-identity permutation results (cyclic spine rotations).
    const std::vector<int32_t>& permutations(int32_t id) {
        auto it = unary_.find(id);
        if (it != unary_.end()) return it->second;
        std::vector<int32_t> ids;
        for (const auto& c : apply_permutation(category(id), limits_.max_depth))
            ids.push_back(intern(c));
        return unary_.emplace(id, std::move(ids)).first->second;
    }

    // Structural order on interned categories (intern-history independent).
    int compare(int32_t a, int32_t b) const {
        if (a == b) return 0;
        return cat_compare(category(a), category(b));
    }

private:
    struct Key {
        Cat cat;
        bool operator==(const Key& o) const { return cat_equal(cat, o.cat); }
    };
    struct KeyHash {
        size_t operator()(const Key& k) const { return static_cast<size_t>(cat_hash(k.cat)); }
    };

    static uint64_t pair_key(int32_t a, int32_t b) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
    }

    Lexicon lexicon_;
    Limits limits_;
    std::deque<Cat> cats_;  // stable references under growth
    std::unordered_map<Key, int32_t, KeyHash> index_;
    std::unordered_map<uint64_t, std::vector<Combo>> binary_;
    std::unordered_map<int32_t, std::vector<int32_t>> unary_;
    std::vector<int32_t> lexical_ids_;
    int32_t sentence_id_ = -1;
};

}  // namespace gcgal
