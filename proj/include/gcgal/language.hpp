#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gcgal/lexicon.hpp"
#include "gcgal/rng.hpp"

namespace gcgal {

// Table 1 column order.
enum class BaseOrder : uint8_t { SOV, OSV, SVO, OVS, VSO, VOS };

inline const char* base_order_name(BaseOrder b) {
    switch (b) {
        case BaseOrder::SOV: return "SOV";
        case BaseOrder::OSV: return "OSV";
        case BaseOrder::SVO: return "SVO";
        case BaseOrder::OVS: return "OVS";
        case BaseOrder::VSO: return "VSO";
        case BaseOrder::VOS: return "VOS";
    }
    return "?";
}

// The 7 binary word-order parameters, in id-string position order:
//   (i)   subject-verb     0: subject precedes verb        1: verb precedes subject
//   (ii)  object-verb      0: object precedes verb         1: verb precedes object
//   (iii) subject-object   0: subject precedes object      1: object precedes subject
//   (iv)  comp-clause      0: clause then complementizer   1: complementizer then clause
//   (v)   noun-adposition  0: noun then adposition         1: adposition then noun
//   (vi)  noun-adjective   0: adjective then noun          1: noun then adjective
//   (vii) relativizer      0: clause-rel-noun              1: noun-rel-clause
// Parameters (i)-(iii) must describe a consistent total order of {S, O, V};
// the two cyclic triples 011 and 100 are rejected, leaving 6 * 16 = 96 ids.
struct WordOrderConfig {
    std::array<uint8_t, 7> bits{};  // bits[0] is parameter (i)
    std::string id;

    bool bit(int param_1based) const { return bits[static_cast<size_t>(param_1based - 1)] != 0; }

    static std::optional<WordOrderConfig> from_bits(const std::array<uint8_t, 7>& bits) {
        if (!consistent_triple(bits[0], bits[1], bits[2])) return std::nullopt;
        WordOrderConfig c;
        c.bits = bits;
        c.id.resize(7);
        for (int i = 0; i < 7; ++i) c.id[static_cast<size_t>(i)] = bits[static_cast<size_t>(i)] ? '1' : '0';
        return c;
    }

    static WordOrderConfig from_id(const std::string& id) {
        if (id.size() != 7) throw ConfigError("config id must be 7 digits: '" + id + "'");
        std::array<uint8_t, 7> bits{};
        for (int i = 0; i < 7; ++i) {
            char ch = id[static_cast<size_t>(i)];
            if (ch != '0' && ch != '1') throw ConfigError("config id must be binary: '" + id + "'");
            bits[static_cast<size_t>(i)] = ch == '1' ? 1 : 0;
        }
        auto c = from_bits(bits);
        if (!c) throw ConfigError("config id '" + id + "' has an inconsistent S/O/V order");
        return *c;
    }

    static bool consistent_triple(uint8_t sv, uint8_t ov, uint8_t so) {
        // 011: S<V, V<O, O<S and 100: V<S, O<V, S<O are cyclic.
        return !(sv == 0 && ov == 1 && so == 1) && !(sv == 1 && ov == 0 && so == 0);
    }
};

// All 96 valid configurations in lexicographic id order.
inline std::vector<WordOrderConfig> enumerate_configs() {
    std::vector<WordOrderConfig> out;
    out.reserve(96);
    for (int v = 0; v < 128; ++v) {
        std::array<uint8_t, 7> bits{};
        for (int i = 0; i < 7; ++i) bits[static_cast<size_t>(i)] = (v >> (6 - i)) & 1;
        if (auto c = WordOrderConfig::from_bits(bits)) out.push_back(std::move(*c));
    }
    return out;
}

inline BaseOrder base_order(const WordOrderConfig& c) {
    const uint8_t sv = c.bits[0], ov = c.bits[1], so = c.bits[2];
    if (sv == 0 && ov == 0) return so == 0 ? BaseOrder::SOV : BaseOrder::OSV;
    if (sv == 0 && ov == 1) return BaseOrder::SVO;  // so must be 0
    if (sv == 1 && ov == 0) return BaseOrder::OVS;  // so must be 1
    return so == 0 ? BaseOrder::VSO : BaseOrder::VOS;
}

// Vocabulary layout. Pseudo-word classes plus the reserved surface forms and
// the LM bookkeeping tokens; the grand total must hit target_total.
struct VocabSpec {
    int nouns = 200;
    int transitive_verbs = 80;
    int intransitive_verbs = 80;
    int clause_verbs = 40;
    int adjectives = 60;
    int adpositions = 30;
    uint64_t seed = 1;
    int target_total = 500;

    std::string subject_marker = "ga";
    std::string object_marker = "o";
    std::string complementizer = "that";
    std::string relativizer_obj_gap = "whom";
    std::string relativizer_subj_gap = "which";
    std::string conjunction = "and";
    // LM-side specials; not lexicon entries but counted in the vocabulary.
    std::string bos = "<s>";
    std::string eos = "</s>";
    std::string pad = "<pad>";
    std::string unk = "<unk>";

    int pseudo_total() const {
        return nouns + transitive_verbs + intransitive_verbs + clause_verbs + adjectives +
               adpositions;
    }
    static constexpr int kReservedCount = 10;

    std::vector<std::string> reserved() const {
        return {subject_marker,       object_marker, complementizer, relativizer_obj_gap,
                relativizer_subj_gap, conjunction,   bos,            eos,
                pad,                  unk};
    }
};

// Unique lowercase pseudo-words, 3-8 letters, CV-syllable shaped, disjoint
// from the reserved spellings. Deterministic in the seed.
inline std::vector<std::string> make_pseudo_words(const VocabSpec& spec) {
    static const char kConsonants[] = "bdfgjklmnprstvz";
    static const char kVowels[] = "aeiou";
    std::unordered_set<std::string> taken;
    for (const auto& r : spec.reserved()) taken.insert(r);
    Rng rng(derive_seed(spec.seed, "pseudo-words"));
    std::vector<std::string> words;
    const int need = spec.pseudo_total();
    words.reserve(static_cast<size_t>(need));
    while (static_cast<int>(words.size()) < need) {
        std::string w;
        const uint64_t syllables = 2 + rng.below(3);  // 4..6 letters before trims
        for (uint64_t s = 0; s < syllables; ++s) {
            w += kConsonants[rng.below(sizeof(kConsonants) - 1)];
            w += kVowels[rng.below(sizeof(kVowels) - 1)];
        }
        if (rng.below(3) == 0) w += kConsonants[rng.below(sizeof(kConsonants) - 1)];
        if (w.size() > 8) w.resize(8);
        if (taken.insert(w).second) words.push_back(std::move(w));
    }
    return words;
}

// Per-class category templates for one configuration. dir1/dir2 are the
// subject/object seeking directions of verbs; the outermost (first-combined)
// verb argument is the linearly adjacent one, with the object outermost for
// verb-medial orders (anchored by Figure-style "0101101").
struct LanguageCategories {
    Cat noun, subj_marker, obj_marker, trans_verb, intrans_verb, clause_verb;
    Cat adjective, adposition, complementizer, rel_subj_gap, rel_obj_gap, conjunction;
};

inline LanguageCategories language_categories(const WordOrderConfig& cfg,
                                              const AtomInventory& atoms) {
    const Slash dir1 = cfg.bit(1) ? Slash::Forward : Slash::Backward;  // verb seeks subject
    const Slash dir2 = cfg.bit(2) ? Slash::Forward : Slash::Backward;  // verb seeks object

    const Cat S = make_atom(atoms.id("S"));
    const Cat NP = make_atom(atoms.id("NP"));
    const Cat SBJ = make_atom(atoms.id("NP_SBJ"));
    const Cat OBJ = make_atom(atoms.id("NP_OBJ"));
    const Cat SSUB = make_atom(atoms.id("S_SUB"));
    const Cat CONJ = make_atom(atoms.id("CONJ"));

    // Outermost argument = the one adjacent to the verb.
    //   SOV: ..O V  obj outermost    OSV: ..S V  subj outermost
    //   VSO: V S..  subj outermost   VOS: V O..  obj outermost
    //   SVO / OVS: both adjacent; object outermost by convention.
    const BaseOrder order = base_order(cfg);
    const bool subject_outermost = order == BaseOrder::OSV || order == BaseOrder::VSO;
    auto two_arg = [&](const Cat& complement) {
        if (subject_outermost)
            return make_functor(make_functor(S, dir2, complement), dir1, SBJ);
        return make_functor(make_functor(S, dir1, SBJ), dir2, complement);
    };

    LanguageCategories cats;
    cats.noun = NP;
    cats.subj_marker = make_functor(SBJ, Slash::Backward, NP);  // case markers always trail
    cats.obj_marker = make_functor(OBJ, Slash::Backward, NP);
    cats.trans_verb = two_arg(OBJ);
    cats.clause_verb = two_arg(SSUB);
    cats.intrans_verb = make_functor(S, dir1, SBJ);
    cats.adjective = cfg.bit(6) ? make_functor(NP, Slash::Backward, NP)
                                : make_functor(NP, Slash::Forward, NP);
    // Adposition phrase modifies the clause: prepositional phrases trail the
    // clause, postpositional phrases lead it.
    cats.adposition = cfg.bit(5)
                          ? make_functor(make_functor(S, Slash::Backward, S), Slash::Forward, NP)
                          : make_functor(make_functor(S, Slash::Forward, S), Slash::Backward, NP);
    cats.complementizer = cfg.bit(4) ? make_functor(SSUB, Slash::Forward, S)
                                     : make_functor(SSUB, Slash::Backward, S);
    // Relativizers modify a case-marked subject NP; the gapped clause still
    // seeks its missing argument in that argument's own direction.
    const Cat subj_gap = make_functor(S, dir1, SBJ);
    const Cat obj_gap = make_functor(S, dir2, OBJ);
    auto relativizer = [&](const Cat& gap_clause) {
        if (cfg.bit(7))
            return make_functor(make_functor(SBJ, Slash::Backward, SBJ), Slash::Forward, gap_clause);
        return make_functor(make_functor(SBJ, Slash::Forward, SBJ), Slash::Backward, gap_clause);
    };
    cats.rel_subj_gap = relativizer(subj_gap);
    cats.rel_obj_gap = relativizer(obj_gap);
    cats.conjunction = CONJ;
    return cats;
}

// Full lexicon for one configuration: function words first (stable vocabulary
// ids), then the pseudo-word classes. The pseudo-words depend only on the
// VocabSpec, so all 96 languages built from one spec share a surface
// vocabulary and differ only in categories.
inline Lexicon build_lexicon(const WordOrderConfig& cfg, const VocabSpec& vocab = VocabSpec()) {
    if (vocab.pseudo_total() + VocabSpec::kReservedCount != vocab.target_total)
        throw ConfigError("vocabulary size " +
                          std::to_string(vocab.pseudo_total() + VocabSpec::kReservedCount) +
                          " does not match declared target " + std::to_string(vocab.target_total));

    Lexicon lex;
    const LanguageCategories cats = language_categories(cfg, lex.atoms());

    lex.add(vocab.subject_marker, cats.subj_marker, PosClass::SubjectMarker);
    lex.add(vocab.object_marker, cats.obj_marker, PosClass::ObjectMarker);
    lex.add(vocab.complementizer, cats.complementizer, PosClass::Complementizer);
    lex.add(vocab.relativizer_subj_gap, cats.rel_subj_gap, PosClass::Relativizer);
    lex.add(vocab.relativizer_obj_gap, cats.rel_obj_gap, PosClass::Relativizer);
    lex.add(vocab.conjunction, cats.conjunction, PosClass::Conjunction);

    const auto words = make_pseudo_words(vocab);
    size_t w = 0;
    auto take = [&](int count, const Cat& category, PosClass cls) {
        for (int i = 0; i < count; ++i) lex.add(words[w++], category, cls);
    };
    take(vocab.nouns, cats.noun, PosClass::Noun);
    take(vocab.transitive_verbs, cats.trans_verb, PosClass::TransitiveVerb);
    take(vocab.intransitive_verbs, cats.intrans_verb, PosClass::IntransitiveVerb);
    take(vocab.clause_verbs, cats.clause_verb, PosClass::ClauseVerb);
    take(vocab.adjectives, cats.adjective, PosClass::Adjective);
    take(vocab.adpositions, cats.adposition, PosClass::Adposition);
    return lex;
}

}  // namespace gcgal
