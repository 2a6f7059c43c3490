#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gcgal/parser.hpp"

namespace gcgal {

enum class TemplateOrigin : uint8_t { Enumerated, Appended, Conjoined, Embedded };

inline const char* template_origin_name(TemplateOrigin o) {
    switch (o) {
        case TemplateOrigin::Enumerated: return "enumerated";
        case TemplateOrigin::Appended: return "appended";
        case TemplateOrigin::Conjoined: return "conjoined";
        case TemplateOrigin::Embedded: return "embedded";
    }
    return "?";
}

// A lexical-category slot sequence. Slots index into TemplateSpace's slot
// types; instantiating every slot with a token of the slot's class gives a
// sentence, and parsability depends only on the categories.
struct Template {
    std::vector<uint8_t> slots;
    TemplateOrigin origin = TemplateOrigin::Enumerated;

    int length() const { return static_cast<int>(slots.size()); }
    bool operator==(const Template& o) const { return slots == o.slots; }
};

// One distinct (pos_class, category) pair of the lexicon, with the tokens
// realizing it.
struct SlotType {
    PosClass pos_class;
    Cat category;
    int32_t cat_id;
    std::vector<std::string> tokens;
};

// Enumerates the valid templates of a language by materializing, bottom-up,
// every slot sequence that derives each category at each length ("fragments").
// Junk prefixes never enter the tables: only derivable fragments are stored,
// which keeps the space tractable (thousands of sentential templates per
// length at length 10).
class TemplateSpace {
public:
    static constexpr uint64_t kDefaultEnumerationCap = 5'000'000;
    static constexpr int kMaxEnumLength = 10;

    explicit TemplateSpace(Grammar& grammar, uint64_t enumeration_cap = kDefaultEnumerationCap)
        : g_(grammar), cap_(enumeration_cap) {
        // slot types ordered by (pos_class, category print): deterministic
        std::map<std::pair<int, std::string>, SlotType> ordered;
        for (const auto& e : g_.lexicon().entries()) {
            auto key = std::make_pair(static_cast<int>(e.pos_class),
                                      print_category(e.category, g_.lexicon().atoms()));
            auto it = ordered.find(key);
            if (it == ordered.end()) {
                SlotType st;
                st.pos_class = e.pos_class;
                st.category = e.category;
                st.cat_id = g_.intern(e.category);
                st.tokens.push_back(e.token);
                ordered.emplace(key, std::move(st));
            } else {
                it->second.tokens.push_back(e.token);
            }
        }
        for (auto& [key, st] : ordered) slots_.push_back(std::move(st));
        if (slots_.size() > 16)
            throw CorpusError("template space supports at most 16 slot types, lexicon has " +
                              std::to_string(slots_.size()));
        tables_.resize(1);  // index 0 unused
    }

    const std::vector<SlotType>& slot_types() const { return slots_; }

    int slot_of_class(PosClass cls, int skip = 0) const {
        for (size_t i = 0; i < slots_.size(); ++i) {
            if (slots_[i].pos_class == cls) {
                if (skip == 0) return static_cast<int>(i);
                --skip;
            }
        }
        return -1;
    }

    // All valid templates of one length, lexicographic in slot indices.
    const std::vector<Template>& enumerate(int length) {
        if (length < 1 || length > kMaxEnumLength)
            throw CorpusError("template enumeration supports lengths 1.." +
                              std::to_string(kMaxEnumLength) + ", got " + std::to_string(length));
        auto it = sentential_.find(length);
        if (it != sentential_.end()) return it->second;
        build_tables(length);

        std::vector<Template> out;
        const auto& table = tables_[static_cast<size_t>(length)];
        auto frag_it = table.find(g_.sentence_id());
        if (frag_it != table.end()) {
            out.reserve(frag_it->second.size());
            for (uint64_t packed : frag_it->second) {
                Template t;
                t.slots = unpack(packed, length);
                out.push_back(std::move(t));
            }
            std::sort(out.begin(), out.end(),
                      [](const Template& a, const Template& b) { return a.slots < b.slots; });
            for (const auto& t : out) {
                if (!is_valid(t))
                    throw CorpusError("enumerated template failed chart verification");
            }
        }
        return sentential_.emplace(length, std::move(out)).first->second;
    }

    uint64_t count(int length) { return enumerate(length).size(); }

    // Chart check of a slot sequence (authoritative validity).
    bool is_valid(const Template& t) {
        std::vector<int32_t> ids;
        ids.reserve(t.slots.size());
        for (uint8_t s : t.slots) ids.push_back(slots_[s].cat_id);
        return derivable_ids(ids, g_.sentence_id());
    }

    // Derivation over slot categories (leaves carry categories, no tokens).
    std::optional<Derivation> derive(const Template& t) {
        std::vector<std::vector<std::pair<int32_t, int32_t>>> leaves;
        leaves.reserve(t.slots.size());
        for (uint8_t s : t.slots)
            leaves.push_back({{slots_[s].cat_id, static_cast<int32_t>(s)}});
        ParseLimits limits;
        ChartParser parser(g_, limits);
        return parser.parse_categories(leaves);
    }

private:
    void build_tables(int upto) {
        for (int k = static_cast<int>(tables_.size()); k <= upto; ++k) {
            tables_.emplace_back();
            auto& table = tables_.back();
            if (k == 1) {
                for (size_t si = 0; si < slots_.size(); ++si)
                    for (int32_t c : unary_closure(slots_[si].cat_id))
                        table[c].push_back(static_cast<uint64_t>(si));
            } else {
                for (int i = 1; i < k; ++i) {
                    const int j = k - i;
                    const auto& left = tables_[static_cast<size_t>(i)];
                    const auto& right = tables_[static_cast<size_t>(j)];
                    for (const auto& [a, va] : left) {
                        for (const auto& [b, vb] : right) {
                            const auto& combos = g_.combine(a, b);
                            if (combos.empty()) continue;
                            for (const auto& [r, rule] : combos) {
                                for (int32_t rc : unary_closure(r)) {
                                    auto& out = table[rc];
                                    for (uint64_t sa : va)
                                        for (uint64_t sb : vb)
                                            out.push_back(sa | (sb << (4 * i)));
                                }
                            }
                        }
                    }
                }
            }
            uint64_t total = 0;
            for (auto& [c, v] : table) {
                std::sort(v.begin(), v.end());
                v.erase(std::unique(v.begin(), v.end()), v.end());
                total += v.size();
            }
            if (total > cap_)
                throw CorpusError("template enumeration exceeded the " + std::to_string(cap_) +
                                  "-candidate budget at length " + std::to_string(k));
        }
    }

    std::vector<int32_t> unary_closure(int32_t c) {
        std::vector<int32_t> out{c};
        for (size_t i = 0; i < out.size(); ++i)
            for (int32_t p : g_.permutations(out[i]))
                if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        return out;
    }

    bool derivable_ids(const std::vector<int32_t>& ids, int32_t target) {
        std::vector<std::vector<std::pair<int32_t, int32_t>>> leaves;
        leaves.reserve(ids.size());
        for (int32_t id : ids) leaves.push_back({{id, -1}});
        ParseLimits limits;
        ChartParser parser(g_, limits);
        auto d = parser.parse_categories(leaves, target);
        return d.has_value();
    }

    static std::vector<uint8_t> unpack(uint64_t packed, int length) {
        std::vector<uint8_t> slots(static_cast<size_t>(length));
        for (int i = 0; i < length; ++i) slots[static_cast<size_t>(i)] = (packed >> (4 * i)) & 0xF;
        return slots;
    }

    Grammar& g_;
    uint64_t cap_;
    std::vector<SlotType> slots_;
    // tables_[len]: cat id -> sorted packed slot sequences deriving it
    std::vector<std::unordered_map<int32_t, std::vector<uint64_t>>> tables_;
    std::unordered_map<int, std::vector<Template>> sentential_;
};

struct ExtendResult {
    std::vector<Template> templates;
    bool budget_met = true;
};

// Long templates (lengths 11-20) from the three extension strategies: plain
// appending, concatenation with a conjunction, and splicing "conj + second
// template" inside the first. Candidates are drawn by seeded rejection
// sampling over (strategy, pair, splice point), chart-filtered, and deduped
// until `budget` distinct valid templates are collected.
inline ExtendResult extend_templates(TemplateSpace& space, const std::vector<Template>& pool,
                                     uint64_t budget, uint64_t seed, int min_len = 11,
                                     int max_len = 20) {
    if (budget < 1) throw CorpusError("extension budget must be at least 1");
    if (pool.empty()) throw CorpusError("extension pool is empty");
    const int conj_slot = space.slot_of_class(PosClass::Conjunction);
    if (conj_slot < 0) throw CorpusError("lexicon has no conjunction; cannot extend templates");

    Rng rng(derive_seed(seed, "extend-templates"));
    std::unordered_set<uint64_t> seen;
    ExtendResult result;
    auto consider = [&](Template&& t) {
        if (t.length() < min_len || t.length() > max_len) return;
        uint64_t h = fnv1a64(t.slots.data(), t.slots.size());
        if (!seen.insert(h).second) return;
        if (!space.is_valid(t)) return;
        result.templates.push_back(std::move(t));
    };

    const uint64_t max_attempts = std::max<uint64_t>(budget * 400, 200000);
    for (uint64_t attempt = 0; attempt < max_attempts && result.templates.size() < budget;
         ++attempt) {
        const auto& t1 = pool[rng.below(pool.size())];
        const auto& t2 = pool[rng.below(pool.size())];
        Template t;
        switch (rng.below(3)) {
            case 0: {  // appended end to end
                t.origin = TemplateOrigin::Appended;
                t.slots = t1.slots;
                t.slots.insert(t.slots.end(), t2.slots.begin(), t2.slots.end());
                break;
            }
            case 1: {  // concatenated with a conjunction
                t.origin = TemplateOrigin::Conjoined;
                t.slots = t1.slots;
                t.slots.push_back(static_cast<uint8_t>(conj_slot));
                t.slots.insert(t.slots.end(), t2.slots.begin(), t2.slots.end());
                break;
            }
            default: {  // conj + second template spliced inside the first
                t.origin = TemplateOrigin::Embedded;
                size_t p = 1 + rng.below(static_cast<uint64_t>(t1.length()) - 1);
                t.slots.assign(t1.slots.begin(), t1.slots.begin() + static_cast<ptrdiff_t>(p));
                t.slots.push_back(static_cast<uint8_t>(conj_slot));
                t.slots.insert(t.slots.end(), t2.slots.begin(), t2.slots.end());
                t.slots.insert(t.slots.end(), t1.slots.begin() + static_cast<ptrdiff_t>(p),
                               t1.slots.end());
                break;
            }
        }
        consider(std::move(t));
    }
    result.budget_met = result.templates.size() >= budget;
    std::sort(result.templates.begin(), result.templates.end(),
              [](const Template& a, const Template& b) {
                  if (a.slots.size() != b.slots.size()) return a.slots.size() < b.slots.size();
                  return a.slots < b.slots;
              });
    return result;
}

}  // namespace gcgal
