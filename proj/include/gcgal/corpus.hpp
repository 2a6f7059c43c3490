#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "gcgal/language.hpp"
#include "gcgal/templates.hpp"

namespace gcgal {

// Everything needed to generate and check sentences of one language.
struct LanguageContext {
    WordOrderConfig config;
    VocabSpec vocab;
    Lexicon lexicon;
    Grammar grammar;
    TemplateSpace space;
    ChartParser parser;

    explicit LanguageContext(const WordOrderConfig& cfg, const VocabSpec& v = VocabSpec(),
                             uint64_t enumeration_cap = TemplateSpace::kDefaultEnumerationCap)
        : config(cfg),
          vocab(v),
          lexicon(build_lexicon(cfg, v)),
          grammar(lexicon),
          space(grammar, enumeration_cap),
          parser(grammar) {}
};

struct SentenceRecord {
    std::vector<std::string> tokens;
    int32_t template_index = -1;  // into the owning split's template list

    int length() const { return static_cast<int>(tokens.size()); }
    std::string joined() const {
        std::string out;
        for (size_t i = 0; i < tokens.size(); ++i) {
            if (i) out += ' ';
            out += tokens[i];
        }
        return out;
    }
};

struct CorpusSplit {
    std::string name;
    std::string config_id;
    uint64_t seed = 0;
    std::vector<Template> templates;
    std::vector<SentenceRecord> records;

    std::map<int, uint64_t> length_histogram() const {
        std::map<int, uint64_t> h;
        for (const auto& r : records) h[r.length()]++;
        return h;
    }
};

struct SplitSizes {
    uint64_t train = 80000;
    uint64_t short_test = 5000;
    uint64_t medium_test = 5000;
    uint64_t long_test = 5000;
    uint64_t long_template_budget = 20000;
};

struct LanguageCorpus {
    CorpusSplit train;
    CorpusSplit short_test;
    CorpusSplit medium_test;
    CorpusSplit long_test;
    bool long_budget_met = true;
};

namespace detail {

// total spread over [lo, hi]; earlier keys absorb the remainder.
inline std::map<int, uint64_t> spread_uniform(uint64_t total, int lo, int hi) {
    std::map<int, uint64_t> out;
    const uint64_t k = static_cast<uint64_t>(hi - lo + 1);
    uint64_t base = total / k, rem = total % k;
    for (int v = lo; v <= hi; ++v) {
        out[v] = base + (rem > 0 ? 1 : 0);
        if (rem > 0) --rem;
    }
    return out;
}

// count per template, templates equally represented (+-1): returns
// (template index -> sentence count), deterministic in rng.
inline std::vector<uint64_t> template_allocation(size_t n_templates, uint64_t need, Rng& rng) {
    std::vector<uint64_t> alloc(n_templates, 0);
    if (n_templates == 0) return alloc;
    if (need >= n_templates) {
        uint64_t base = need / n_templates, rem = need % n_templates;
        for (auto& a : alloc) a = base;
        std::vector<uint64_t> order(n_templates);
        for (size_t i = 0; i < n_templates; ++i) order[i] = i;
        rng.shuffle(order);
        for (uint64_t i = 0; i < rem; ++i) alloc[order[i]] += 1;
    } else {
        for (uint64_t idx : rng.sample_indices(n_templates, need)) alloc[idx] = 1;
    }
    return alloc;
}

class Instantiator {
public:
    Instantiator(const TemplateSpace& space, std::unordered_set<std::string>& used)
        : space_(space), used_(used) {}

    // One unique sentence for the template; retries token sampling until the
    // joined form is globally unseen.
    SentenceRecord instantiate(const Template& t, int32_t template_index, Rng& rng,
                               const std::string& where) {
        constexpr int kMaxAttempts = 4000;
        SentenceRecord rec;
        rec.template_index = template_index;
        for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
            rec.tokens.clear();
            rec.tokens.reserve(t.slots.size());
            for (uint8_t s : t.slots) {
                const auto& toks = space_.slot_types()[s].tokens;
                rec.tokens.push_back(toks[rng.below(toks.size())]);
            }
            if (used_.insert(rec.joined()).second) return rec;
        }
        throw CorpusError("could not draw a fresh sentence after " +
                          std::to_string(kMaxAttempts) + " attempts (" + where + ")");
    }

private:
    const TemplateSpace& space_;
    std::unordered_set<std::string>& used_;
};

}  // namespace detail

// Enumerated-template splits (train 3-8, short 3-8, medium 9-10) plus the
// extended long split (11-20). Sentences are unique within the whole corpus,
// which in particular makes train and short disjoint.
inline LanguageCorpus build_splits(LanguageContext& ctx, const SplitSizes& sizes, uint64_t seed) {
    LanguageCorpus corpus;
    std::unordered_set<std::string> used;
    detail::Instantiator inst(ctx.space, used);

    auto build_enumerated = [&](const std::string& name, uint64_t total, int lo, int hi) {
        CorpusSplit split;
        split.name = name;
        split.config_id = ctx.config.id;
        split.seed = seed;
        Rng rng(derive_seed(seed, ctx.config.id + ":" + name));
        auto per_length = detail::spread_uniform(total, lo, hi);
        for (int len = lo; len <= hi; ++len) {
            const auto& templates = ctx.space.enumerate(len);
            if (templates.empty())
                throw CorpusError("config " + ctx.config.id + ": no valid templates of length " +
                                  std::to_string(len));
            auto alloc = detail::template_allocation(templates.size(), per_length[len], rng);
            for (size_t ti = 0; ti < templates.size(); ++ti) {
                if (alloc[ti] == 0) continue;
                int32_t local = static_cast<int32_t>(split.templates.size());
                split.templates.push_back(templates[ti]);
                for (uint64_t c = 0; c < alloc[ti]; ++c)
                    split.records.push_back(inst.instantiate(templates[ti], local, rng,
                                                             ctx.config.id + " " + name +
                                                                 " len " + std::to_string(len)));
            }
        }
        return split;
    };

    corpus.train = build_enumerated("train", sizes.train, 3, 8);
    corpus.short_test = build_enumerated("short", sizes.short_test, 3, 8);
    corpus.medium_test = build_enumerated("medium", sizes.medium_test, 9, 10);

    // long split: extension-sampled templates, uniform over achieved lengths
    std::vector<Template> pool;
    for (int len = 3; len <= 10; ++len) {
        const auto& t = ctx.space.enumerate(len);
        pool.insert(pool.end(), t.begin(), t.end());
    }
    auto ext = extend_templates(ctx.space, pool, sizes.long_template_budget,
                                derive_seed(seed, ctx.config.id + ":long-templates"));
    corpus.long_budget_met = ext.budget_met;

    std::map<int, std::vector<size_t>> by_length;
    for (size_t i = 0; i < ext.templates.size(); ++i)
        by_length[ext.templates[i].length()].push_back(i);
    if (by_length.empty())
        throw CorpusError("config " + ctx.config.id + ": no valid templates of length 11-20");

    CorpusSplit& longs = corpus.long_test;
    longs.name = "long";
    longs.config_id = ctx.config.id;
    longs.seed = seed;
    Rng rng(derive_seed(seed, ctx.config.id + ":long"));
    uint64_t remaining = sizes.long_test;
    size_t buckets_left = by_length.size();
    for (auto& [len, idxs] : by_length) {
        uint64_t want = remaining / buckets_left;
        if (remaining % buckets_left) ++want;  // earlier lengths absorb remainder
        remaining -= want;
        --buckets_left;
        auto alloc = detail::template_allocation(idxs.size(), want, rng);
        for (size_t k = 0; k < idxs.size(); ++k) {
            if (alloc[k] == 0) continue;
            const Template& t = ext.templates[idxs[k]];
            int32_t local = static_cast<int32_t>(longs.templates.size());
            longs.templates.push_back(t);
            for (uint64_t c = 0; c < alloc[k]; ++c)
                longs.records.push_back(inst.instantiate(
                    t, local, rng, ctx.config.id + " long len " + std::to_string(len)));
        }
    }
    return corpus;
}

namespace detail {

// Targeted-construction assembly at the slot level. A clause is the base
// order's arrangement of subject chunk, object/complement chunk and verb; a
// relative clause sits between head and clause per parameter (vii); the gap
// is an omitted chunk.
struct TargetedBuilder {
    const WordOrderConfig& cfg;
    const TemplateSpace& space;
    int noun, ga, o, tv, cv, comp, rel_obj;

    explicit TargetedBuilder(const LanguageContext& ctx) : cfg(ctx.config), space(ctx.space) {
        noun = space.slot_of_class(PosClass::Noun);
        ga = space.slot_of_class(PosClass::SubjectMarker);
        o = space.slot_of_class(PosClass::ObjectMarker);
        tv = space.slot_of_class(PosClass::TransitiveVerb);
        cv = space.slot_of_class(PosClass::ClauseVerb);
        comp = space.slot_of_class(PosClass::Complementizer);
        rel_obj = find_rel_obj(ctx);
        for (int s : {noun, ga, o, tv, cv, comp, rel_obj})
            if (s < 0) throw CorpusError("config " + cfg.id + ": lexicon lacks a class needed "
                                                             "for the targeted constructions");
    }

    int find_rel_obj(const LanguageContext& ctx) const {
        const LanguageCategories cats = language_categories(cfg, ctx.lexicon.atoms());
        for (size_t i = 0; i < space.slot_types().size(); ++i) {
            const auto& st = space.slot_types()[i];
            if (st.pos_class == PosClass::Relativizer && cat_equal(st.category, cats.rel_obj_gap))
                return static_cast<int>(i);
        }
        return -1;
    }

    using Seq = std::vector<uint8_t>;

    Seq np(int marker) const { return {static_cast<uint8_t>(noun), static_cast<uint8_t>(marker)}; }

    Seq clause(const Seq& subj, const Seq& complement, int verb) const {
        Seq out;
        auto add = [&out](const Seq& s) { out.insert(out.end(), s.begin(), s.end()); };
        Seq v{static_cast<uint8_t>(verb)};
        switch (base_order(cfg)) {
            case BaseOrder::SOV: add(subj); add(complement); add(v); break;
            case BaseOrder::OSV: add(complement); add(subj); add(v); break;
            case BaseOrder::SVO: add(subj); add(v); add(complement); break;
            case BaseOrder::OVS: add(complement); add(v); add(subj); break;
            case BaseOrder::VSO: add(v); add(subj); add(complement); break;
            case BaseOrder::VOS: add(v); add(complement); add(subj); break;
        }
        return out;
    }

    Seq attach_rel(const Seq& head_np, const Seq& gap_clause) const {
        Seq out;
        auto add = [&out](const Seq& s) { out.insert(out.end(), s.begin(), s.end()); };
        if (cfg.bit(7)) {
            add(head_np);
            out.push_back(static_cast<uint8_t>(rel_obj));
            add(gap_clause);
        } else {
            add(gap_clause);
            out.push_back(static_cast<uint8_t>(rel_obj));
            add(head_np);
        }
        return out;
    }

    Seq complementize(const Seq& clause_seq) const {
        Seq out;
        if (cfg.bit(4)) {
            out.push_back(static_cast<uint8_t>(comp));
            out.insert(out.end(), clause_seq.begin(), clause_seq.end());
        } else {
            out = clause_seq;
            out.push_back(static_cast<uint8_t>(comp));
        }
        return out;
    }

    // two nested object-gap relative clauses on the matrix subject
    Template recursive_template() const {
        Seq rc2 = clause(np(ga), {}, tv);
        Seq np2 = attach_rel(np(ga), rc2);
        Seq rc1 = clause(np2, {}, tv);
        Seq np1 = attach_rel(np(ga), rc1);
        Template t;
        t.slots = clause(np1, np(o), tv);
        return t;
    }

    // a relative clause whose gap sits inside a subordinate clause
    Template embedded_template() const {
        Seq inner = clause(np(ga), {}, tv);
        Seq rc = clause(np(ga), complementize(inner), cv);
        Seq np1 = attach_rel(np(ga), rc);
        Template t;
        t.slots = clause(np1, np(o), tv);
        return t;
    }
};

}  // namespace detail

struct TargetedSets {
    CorpusSplit recursive;
    CorpusSplit embedded;
};

inline TargetedSets build_targeted(LanguageContext& ctx, uint64_t n, uint64_t seed) {
    if (n < 1) throw CorpusError("targeted set size must be >= 1");
    detail::TargetedBuilder builder(ctx);

    auto build = [&](const std::string& name, Template t) {
        if (!ctx.space.is_valid(t))
            throw CorpusError("config " + ctx.config.id + ": targeted construction '" + name +
                              "' is unsatisfiable");
        CorpusSplit split;
        split.name = name;
        split.config_id = ctx.config.id;
        split.seed = seed;
        split.templates.push_back(std::move(t));
        std::unordered_set<std::string> used;
        detail::Instantiator inst(ctx.space, used);
        Rng rng(derive_seed(seed, ctx.config.id + ":" + name));
        for (uint64_t i = 0; i < n; ++i)
            split.records.push_back(
                inst.instantiate(split.templates[0], 0, rng, ctx.config.id + " " + name));
        return split;
    };

    TargetedSets sets;
    sets.recursive = build("recursive", builder.recursive_template());
    sets.embedded = build("embedded", builder.embedded_template());
    return sets;
}

enum class JudgmentKind : uint8_t { Case, Verb };

inline const char* judgment_kind_name(JudgmentKind k) {
    return k == JudgmentKind::Case ? "case" : "verb";
}

struct JudgmentPair {
    SentenceRecord grammatical;
    SentenceRecord ungrammatical;
    JudgmentKind kind;
    int edit_position = -1;
};

struct JudgmentSuite {
    std::vector<JudgmentPair> pairs;
    JudgmentKind kind;
    bool complete = true;  // false when fewer eligible sentences than requested
};

// Minimal pairs from the medium split: case pairs swap one case marker, verb
// pairs replace a transitive verb with an intransitive one. The corrupted
// side must fail to parse; sentences with no workable edit site are skipped.
inline JudgmentSuite build_judgment_pairs(LanguageContext& ctx, const CorpusSplit& medium,
                                          JudgmentKind kind, uint64_t n, uint64_t seed) {
    JudgmentSuite suite;
    suite.kind = kind;
    Rng rng(derive_seed(seed, ctx.config.id + ":judgment:" + judgment_kind_name(kind)));

    std::vector<std::string> intransitives =
        ctx.lexicon.tokens_of_class(PosClass::IntransitiveVerb);
    if (kind == JudgmentKind::Verb && intransitives.empty())
        throw CorpusError("no intransitive verbs available for verb-type judgments");

    std::vector<size_t> order(medium.records.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);

    for (size_t idx : order) {
        if (suite.pairs.size() >= n) break;
        const SentenceRecord& rec = medium.records[idx];
        const Template& t = medium.templates[static_cast<size_t>(rec.template_index)];

        std::vector<int> sites;
        for (size_t pos = 0; pos < t.slots.size(); ++pos) {
            PosClass cls = ctx.space.slot_types()[t.slots[pos]].pos_class;
            if (kind == JudgmentKind::Case &&
                (cls == PosClass::SubjectMarker || cls == PosClass::ObjectMarker))
                sites.push_back(static_cast<int>(pos));
            if (kind == JudgmentKind::Verb && cls == PosClass::TransitiveVerb)
                sites.push_back(static_cast<int>(pos));
        }
        rng.shuffle(sites);

        for (int pos : sites) {
            SentenceRecord bad = rec;
            if (kind == JudgmentKind::Case) {
                bool is_subject = bad.tokens[static_cast<size_t>(pos)] == ctx.vocab.subject_marker;
                bad.tokens[static_cast<size_t>(pos)] =
                    is_subject ? ctx.vocab.object_marker : ctx.vocab.subject_marker;
            } else {
                bad.tokens[static_cast<size_t>(pos)] =
                    intransitives[rng.below(intransitives.size())];
            }
            if (!ctx.parser.is_grammatical(bad.tokens)) {
                suite.pairs.push_back(JudgmentPair{rec, std::move(bad), kind, pos});
                break;
            }
        }
    }
    suite.complete = suite.pairs.size() >= n;
    return suite;
}

struct DiagnosticsRow {
    int length = 0;
    std::string item;  // "category:<text>" or "rule:<name>"
    double avg_per_template = 0.0;
    uint64_t template_count = 0;
};

// Appendix-style counting over the split's templates: lexical category
// occurrences and combinatory-operation applications, averaged per template
// within each length.
inline std::vector<DiagnosticsRow> split_diagnostics(LanguageContext& ctx,
                                                     const CorpusSplit& split) {
    struct Acc {
        std::map<std::string, uint64_t> totals;
        uint64_t templates = 0;
    };
    std::map<int, Acc> by_length;

    for (const auto& t : split.templates) {
        Acc& acc = by_length[t.length()];
        acc.templates += 1;
        for (uint8_t s : t.slots) {
            const auto& st = ctx.space.slot_types()[s];
            acc.totals["category:" + print_category(st.category, ctx.lexicon.atoms())] += 1;
        }
        auto derivation = ctx.space.derive(t);
        if (!derivation)
            throw CorpusError("config " + ctx.config.id + ": split template failed to parse");
        for (RuleKind r : rule_sequence(*derivation))
            acc.totals[std::string("rule:") + rule_name(r)] += 1;
    }

    std::vector<DiagnosticsRow> rows;
    for (const auto& [len, acc] : by_length) {
        for (const auto& [item, total] : acc.totals) {
            DiagnosticsRow row;
            row.length = len;
            row.item = item;
            row.avg_per_template =
                static_cast<double>(total) / static_cast<double>(acc.templates);
            row.template_count = acc.templates;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace gcgal
