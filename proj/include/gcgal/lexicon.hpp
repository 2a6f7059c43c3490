#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gcgal/category.hpp"
#include "gcgal/errors.hpp"

namespace gcgal {

// Lexical classes. Enumeration order is load-bearing: template slot types are
// ordered by (pos_class, category print), and that order fixes the
// deterministic template enumeration order.
enum class PosClass : uint8_t {
    Noun,
    TransitiveVerb,
    IntransitiveVerb,
    ClauseVerb,
    Adjective,
    Adposition,
    SubjectMarker,
    ObjectMarker,
    Complementizer,
    Relativizer,
    Conjunction,
};

inline const char* pos_class_name(PosClass c) {
    switch (c) {
        case PosClass::Noun: return "noun";
        case PosClass::TransitiveVerb: return "transitive-verb";
        case PosClass::IntransitiveVerb: return "intransitive-verb";
        case PosClass::ClauseVerb: return "clause-verb";
        case PosClass::Adjective: return "adjective";
        case PosClass::Adposition: return "adposition";
        case PosClass::SubjectMarker: return "subject-marker";
        case PosClass::ObjectMarker: return "object-marker";
        case PosClass::Complementizer: return "complementizer";
        case PosClass::Relativizer: return "relativizer";
        case PosClass::Conjunction: return "conjunction";
    }
    return "?";
}

inline PosClass pos_class_from_name(std::string_view name) {
    for (int i = 0; i <= static_cast<int>(PosClass::Conjunction); ++i) {
        auto c = static_cast<PosClass>(i);
        if (name == pos_class_name(c)) return c;
    }
    throw GrammarError("unknown pos class '" + std::string(name) + "'");
}

struct LexEntry {
    std::string token;
    Cat category;
    PosClass pos_class;
};

// Token -> categories map. Homography (one token, several entries) is allowed.
class Lexicon {
public:
    explicit Lexicon(AtomInventory atoms = AtomInventory()) : atoms_(std::move(atoms)) {}

    const AtomInventory& atoms() const { return atoms_; }
    AtomInventory& atoms() { return atoms_; }

    void add(std::string token, Cat category, PosClass pos_class) {
        entries_.push_back(LexEntry{std::move(token), std::move(category), pos_class});
        by_token_[entries_.back().token].push_back(entries_.size() - 1);
    }

    const std::vector<LexEntry>& entries() const { return entries_; }

    bool has_token(std::string_view token) const {
        return by_token_.count(std::string(token)) > 0;
    }

    // Entry indices for a token; throws UnknownTokenError if absent.
    const std::vector<size_t>& entries_for(const std::string& token) const {
        auto it = by_token_.find(token);
        if (it == by_token_.end()) throw UnknownTokenError(token);
        return it->second;
    }

    std::vector<std::string> tokens_of_class(PosClass c) const {
        std::vector<std::string> out;
        for (const auto& e : entries_)
            if (e.pos_class == c) out.push_back(e.token);
        return out;
    }

    size_t size() const { return entries_.size(); }

private:
    AtomInventory atoms_;
    std::vector<LexEntry> entries_;
    std::unordered_map<std::string, std::vector<size_t>> by_token_;
};

// File format: one entry per line, token<TAB>category<TAB>pos_class.
// Lines starting with '#' are comments; blank lines ignored.
inline std::string lexicon_to_text(const Lexicon& lex) {
    std::string out;
    for (const auto& e : lex.entries()) {
        out += e.token;
        out += '\t';
        out += print_category(e.category, lex.atoms());
        out += '\t';
        out += pos_class_name(e.pos_class);
        out += '\n';
    }
    return out;
}

inline Lexicon lexicon_from_text(std::string_view text, AtomInventory atoms = AtomInventory(),
                                 int max_depth = kDefaultMaxCatDepth) {
    Lexicon lex(std::move(atoms));
    size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        size_t t1 = line.find('\t');
        size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos)
            throw GrammarError("lexicon line " + std::to_string(line_no) +
                               ": expected token<TAB>category<TAB>pos_class");
        std::string token = line.substr(0, t1);
        std::string cat_text = line.substr(t1 + 1, t2 - t1 - 1);
        std::string cls_text = line.substr(t2 + 1);
        lex.add(std::move(token), parse_category(cat_text, lex.atoms(), max_depth),
                pos_class_from_name(cls_text));
    }
    return lex;
}

inline void save_lexicon(const Lexicon& lex, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << lexicon_to_text(lex);
}

inline Lexicon load_lexicon(const std::string& path, AtomInventory atoms = AtomInventory()) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return lexicon_from_text(buf.str(), std::move(atoms));
}

}  // namespace gcgal
