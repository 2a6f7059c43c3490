#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcgal/grammar.hpp"

namespace gcgal {

struct ParseLimits {
    int max_tokens = 32;
    int max_depth = kDefaultMaxCatDepth;  // enforced at Grammar build time
    int max_cell_categories = 256;
};

// One derivation node. Leaves carry the lexical category (rule == nullopt);
// internal nodes carry exactly the category their rule produces from their
// children. Unary (permutation) nodes have one child, binary nodes two.
struct Derivation {
    Cat category;
    std::optional<RuleKind> rule;
    std::vector<Derivation> children;
    int begin = 0;
    int end = 0;
    std::string token;  // leaves only

    bool is_sentential_root(int token_count) const {
        return category->is_atom() && category->atom == AtomInventory::kS && begin == 0 &&
               end == token_count;
    }
};

// Pre-order rule sequence (internal nodes only). Convenient for comparing a
// derivation against a printed one.
inline void rule_sequence_into(const Derivation& d, std::vector<RuleKind>& out) {
    if (d.rule) out.push_back(*d.rule);
    for (const auto& c : d.children) rule_sequence_into(c, out);
}

inline std::vector<RuleKind> rule_sequence(const Derivation& d) {
    std::vector<RuleKind> out;
    rule_sequence_into(d, out);
    return out;
}

namespace detail {

// Derivation preference: fewest permutation steps, then fewest composition
// steps, then the lexicographically smallest (kind, split, rule, children)
// decision at every node, with children compared structurally. This fixed
// total order makes parse deterministic across runs and platforms and keeps
// canonical derivations application-only wherever applications suffice.
struct ItemCost {
    uint32_t perms = 0;
    uint32_t comps = 0;
    friend bool operator<(const ItemCost& a, const ItemCost& b) {
        if (a.perms != b.perms) return a.perms < b.perms;
        return a.comps < b.comps;
    }
    friend bool operator==(const ItemCost& a, const ItemCost& b) {
        return a.perms == b.perms && a.comps == b.comps;
    }
    ItemCost operator+(const ItemCost& o) const { return {perms + o.perms, comps + o.comps}; }
};

struct Back {
    enum Kind : uint8_t { Lexical = 0, Binary = 1, Unary = 2 };
    Kind kind = Lexical;
    int32_t split = -1;  // binary: split point; lexical: entry index; unary: source id
    RuleKind rule = RuleKind::ForwardApplication;
    int32_t left = -1;  // binary: child ids; unary: left = source id
    int32_t right = -1;
};

// Tie-break rank among equal-cost candidates; ids are compared through the
// grammar's structural order so interning history cannot leak in.
inline bool back_precedes(const Grammar& g, const Back& a, const Back& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    switch (a.kind) {
        case Back::Lexical:
            return a.split < b.split;
        case Back::Binary:
            if (a.split != b.split) return a.split < b.split;
            if (a.rule != b.rule) return a.rule < b.rule;
            if (int c = g.compare(a.left, b.left)) return c < 0;
            return g.compare(a.right, b.right) < 0;
        case Back::Unary:
            return g.compare(a.left, b.left) < 0;
    }
    return false;
}

struct Item {
    ItemCost cost;
    Back back;
};

using Cell = std::unordered_map<int32_t, Item>;

inline bool offer(const Grammar& g, Cell& cell, int32_t cat, const ItemCost& cost,
                  const Back& back) {
    auto [it, inserted] = cell.try_emplace(cat, Item{cost, back});
    if (inserted) return true;
    Item& cur = it->second;
    if (cost < cur.cost || (cost == cur.cost && back_precedes(g, back, cur.back))) {
        cur = Item{cost, back};
        return true;
    }
    return false;
}

inline ItemCost rule_cost(RuleKind r) {
    switch (r) {
        case RuleKind::ForwardComposition:
        case RuleKind::BackwardComposition: return {0, 1};
        case RuleKind::WeakPermutation: return {1, 0};
        default: return {0, 0};
    }
}

// In-cell unary closure (permutation); runs to fixpoint. Rotations cycle, so
// the closure reaches at most (spine length) categories per source.
inline void close_unary(Grammar& g, Cell& cell) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<int32_t, Item>> snapshot(cell.begin(), cell.end());
        for (const auto& [src, item] : snapshot) {
            for (int32_t dst : g.permutations(src)) {
                Back b;
                b.kind = Back::Unary;
                b.rule = RuleKind::WeakPermutation;
                b.left = src;
                if (offer(g, cell, dst, ItemCost{item.cost.perms + 1, item.cost.comps}, b))
                    changed = true;
            }
        }
    }
}

}  // namespace detail

class ChartParser {
public:
    explicit ChartParser(Grammar& grammar, ParseLimits limits = ParseLimits())
        : g_(grammar), limits_(limits) {}

    const Grammar& grammar() const { return g_; }

    // Leaf alternatives per position: (category id, lexicon entry index or -1).
    using LeafItems = std::vector<std::vector<std::pair<int32_t, int32_t>>>;

    // Sentential derivation if one exists. Throws UnknownTokenError /
    // LimitError for precondition violations; absence of a parse is nullopt.
    std::optional<Derivation> parse(const std::vector<std::string>& tokens) {
        auto chart = fill_chart(lexical_leaves(tokens));
        const int n = static_cast<int>(tokens.size());
        const detail::Cell& top = chart[cell_index(0, n, n)];
        int32_t s = g_.sentence_id();
        if (!top.count(s)) return std::nullopt;
        return rebuild(chart, &tokens, n, 0, n, s);
    }

    bool is_grammatical(const std::vector<std::string>& tokens) {
        auto chart = fill_chart(lexical_leaves(tokens));
        const int n = static_cast<int>(tokens.size());
        return chart[cell_index(0, n, n)].count(g_.sentence_id()) > 0;
    }

    // Parse a pre-supplied category sequence (template slots); leaves carry
    // categories but no surface tokens.
    std::optional<Derivation> parse_categories(const LeafItems& leaves, int32_t target = -1) {
        if (target < 0) target = g_.sentence_id();
        auto chart = fill_chart(leaves);
        const int n = static_cast<int>(leaves.size());
        if (!chart[cell_index(0, n, n)].count(target)) return std::nullopt;
        return rebuild(chart, nullptr, n, 0, n, target);
    }

private:
    static size_t cell_index(int i, int j, int n) {
        // (i, j) with 0 <= i < j <= n
        return static_cast<size_t>(i) * static_cast<size_t>(n + 1) + static_cast<size_t>(j);
    }

    LeafItems lexical_leaves(const std::vector<std::string>& tokens) {
        LeafItems leaves;
        leaves.reserve(tokens.size());
        for (const auto& t : tokens) {
            std::vector<std::pair<int32_t, int32_t>> alts;
            for (size_t entry : g_.lexicon().entries_for(t))
                alts.emplace_back(g_.lexical_id(entry), static_cast<int32_t>(entry));
            leaves.push_back(std::move(alts));
        }
        return leaves;
    }

    std::vector<detail::Cell> fill_chart(const LeafItems& leaves) {
        const int n = static_cast<int>(leaves.size());
        if (n < 1) throw LimitError("min tokens", "empty input");
        if (n > limits_.max_tokens)
            throw LimitError("max tokens",
                             std::to_string(n) + " > " + std::to_string(limits_.max_tokens));

        std::vector<detail::Cell> chart(static_cast<size_t>(n) * (n + 1) + n + 1);
        for (int i = 0; i < n; ++i) {
            detail::Cell& cell = chart[cell_index(i, i + 1, n)];
            for (const auto& [cat, entry] : leaves[static_cast<size_t>(i)]) {
                detail::Back b;
                b.kind = detail::Back::Lexical;
                b.split = entry;
                detail::offer(g_, cell, cat, detail::ItemCost{}, b);
            }
            detail::close_unary(g_, cell);
            check_cell(cell);
        }
        for (int span = 2; span <= n; ++span) {
            for (int i = 0; i + span <= n; ++i) {
                const int j = i + span;
                detail::Cell& cell = chart[cell_index(i, j, n)];
                for (int k = i + 1; k < j; ++k) {
                    const detail::Cell& left = chart[cell_index(i, k, n)];
                    const detail::Cell& right = chart[cell_index(k, j, n)];
                    if (left.empty() || right.empty()) continue;
                    for (const auto& [lid, litem] : left) {
                        for (const auto& [rid, ritem] : right) {
                            for (const auto& [result, rule] : g_.combine(lid, rid)) {
                                detail::Back b;
                                b.kind = detail::Back::Binary;
                                b.split = k;
                                b.rule = rule;
                                b.left = lid;
                                b.right = rid;
                                detail::offer(g_, cell, result,
                                              litem.cost + ritem.cost + detail::rule_cost(rule), b);
                            }
                        }
                    }
                }
                detail::close_unary(g_, cell);
                check_cell(cell);
            }
        }
        return chart;
    }

    void check_cell(const detail::Cell& cell) const {
        if (static_cast<int>(cell.size()) > limits_.max_cell_categories)
            throw LimitError("max categories per cell",
                             std::to_string(cell.size()) + " > " +
                                 std::to_string(limits_.max_cell_categories));
    }

    Derivation rebuild(const std::vector<detail::Cell>& chart,
                       const std::vector<std::string>* tokens, int n, int i, int j,
                       int32_t cat) const {
        const detail::Item& item = chart[cell_index(i, j, n)].at(cat);
        Derivation d;
        d.category = g_.category(cat);
        d.begin = i;
        d.end = j;
        switch (item.back.kind) {
            case detail::Back::Lexical:
                if (tokens) d.token = (*tokens)[static_cast<size_t>(i)];
                break;
            case detail::Back::Unary:
                d.rule = RuleKind::WeakPermutation;
                d.children.push_back(rebuild(chart, tokens, n, i, j, item.back.left));
                break;
            case detail::Back::Binary:
                d.rule = item.back.rule;
                d.children.push_back(rebuild(chart, tokens, n, i, item.back.split, item.back.left));
                d.children.push_back(
                    rebuild(chart, tokens, n, item.back.split, j, item.back.right));
                break;
        }
        return d;
    }

    Grammar& g_;
    ParseLimits limits_;
};

// Convenience wrappers matching the operation contracts directly. Builders of
// many sentences should construct Grammar + ChartParser once instead.
inline std::optional<Derivation> parse(const std::vector<std::string>& tokens,
                                       const Lexicon& lexicon, ParseLimits limits = ParseLimits()) {
    Grammar g(lexicon, GrammarLimits{limits.max_depth, 200000});
    return ChartParser(g, limits).parse(tokens);
}

inline bool is_grammatical(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                           ParseLimits limits = ParseLimits()) {
    Grammar g(lexicon, GrammarLimits{limits.max_depth, 200000});
    return ChartParser(g, limits).is_grammatical(tokens);
}

}  // namespace gcgal
