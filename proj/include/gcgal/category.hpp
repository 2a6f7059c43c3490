#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gcgal/errors.hpp"
#include "gcgal/rng.hpp"

namespace gcgal {

enum class Slash : uint8_t { Forward, Backward };  // '/' seeks right, '\' seeks left

inline char slash_char(Slash s) { return s == Slash::Forward ? '/' : '\\'; }

// Closed inventory of atomic category names. The six standard atoms always
// occupy the same ids; lexicons may declare further atoms before loading.
class AtomInventory {
public:
    static constexpr int kS = 0;
    static constexpr int kNP = 1;
    static constexpr int kNPSbj = 2;
    static constexpr int kNPObj = 3;
    static constexpr int kSSub = 4;
    static constexpr int kConj = 5;

    AtomInventory() {
        for (const char* n : {"S", "NP", "NP_SBJ", "NP_OBJ", "S_SUB", "CONJ"}) declare(n);
    }

    int declare(std::string_view name) {
        auto it = index_.find(std::string(name));
        if (it != index_.end()) return it->second;
        names_.emplace_back(name);
        int id = static_cast<int>(names_.size()) - 1;
        index_.emplace(names_.back(), id);
        return id;
    }

    // Throws GrammarError for names outside the declared inventory.
    int id(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end())
            throw GrammarError("unknown atom '" + std::string(name) + "' (not in declared inventory)");
        return it->second;
    }

    bool contains(std::string_view name) const { return index_.count(std::string(name)) > 0; }
    const std::string& name(int id) const { return names_.at(static_cast<size_t>(id)); }
    int size() const { return static_cast<int>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

// A grammatical category: an atom, or a directional functor result/arg
// (seeks arg to the right) respectively result\arg (seeks arg to the left).
// Immutable; shared subtrees are fine.
struct CatNode;
using Cat = std::shared_ptr<const CatNode>;

struct CatNode {
    int atom = -1;  // >= 0 iff atomic
    Cat result;
    Cat arg;
    Slash dir = Slash::Forward;
    int depth = 1;  // atoms have depth 1

    bool is_atom() const { return atom >= 0; }
    bool is_functor() const { return atom < 0; }
};

inline Cat make_atom(int atom_id) {
    auto n = std::make_shared<CatNode>();
    n->atom = atom_id;
    n->depth = 1;
    return n;
}

constexpr int kDefaultMaxCatDepth = 8;

// Returns null when the result would exceed max_depth; rule code treats that
// as a non-match rather than an error.
inline Cat make_functor(Cat result, Slash dir, Cat arg, int max_depth = kDefaultMaxCatDepth) {
    int d = 1 + std::max(result->depth, arg->depth);
    if (d > max_depth) return nullptr;
    auto n = std::make_shared<CatNode>();
    n->result = std::move(result);
    n->arg = std::move(arg);
    n->dir = dir;
    n->depth = d;
    return n;
}

inline bool cat_equal(const Cat& a, const Cat& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->atom != b->atom || a->depth != b->depth) return false;
    if (a->is_atom()) return true;
    return a->dir == b->dir && cat_equal(a->result, b->result) && cat_equal(a->arg, b->arg);
}

inline uint64_t cat_hash(const Cat& c) {
    if (c->is_atom()) return 0x9e3779b97f4a7c15ULL * (static_cast<uint64_t>(c->atom) + 2);
    uint64_t h = cat_hash(c->result) * 0x100000001b3ULL;
    h ^= cat_hash(c->arg) + 0x517cc1b727220a95ULL + (h << 6) + (h >> 2);
    return h * 31 + (c->dir == Slash::Forward ? 17 : 19);
}

inline bool contains_atom(const Cat& c, int atom_id) {
    if (c->is_atom()) return c->atom == atom_id;
    return contains_atom(c->result, atom_id) || contains_atom(c->arg, atom_id);
}

// Structural total order (atoms first, then by id; functors by result, slash,
// arg). Used for deterministic tie-breaking independent of interning order.
inline int cat_compare(const Cat& a, const Cat& b) {
    if (a.get() == b.get()) return 0;
    if (a->is_atom() != b->is_atom()) return a->is_atom() ? -1 : 1;
    if (a->is_atom()) return a->atom < b->atom ? -1 : (a->atom > b->atom ? 1 : 0);
    if (int c = cat_compare(a->result, b->result)) return c;
    if (a->dir != b->dir) return a->dir == Slash::Forward ? -1 : 1;
    return cat_compare(a->arg, b->arg);
}

inline void print_category_to(const Cat& c, const AtomInventory& atoms, std::string& out) {
    if (c->is_atom()) {
        out += atoms.name(c->atom);
        return;
    }
    auto side = [&](const Cat& part) {
        if (part->is_functor()) {
            out += '(';
            print_category_to(part, atoms, out);
            out += ')';
        } else {
            print_category_to(part, atoms, out);
        }
    };
    side(c->result);
    out += slash_char(c->dir);
    side(c->arg);
}

inline std::string print_category(const Cat& c, const AtomInventory& atoms) {
    std::string out;
    print_category_to(c, atoms, out);
    return out;
}

namespace detail {

struct CatParser {
    std::string_view text;
    size_t pos = 0;
    const AtomInventory& atoms;
    int max_depth;

    [[noreturn]] void fail(const std::string& why) const {
        throw GrammarError("bad category '" + std::string(text) + "' at offset " +
                           std::to_string(pos) + ": " + why);
    }

    bool at_end() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    static bool is_atom_char(char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    }

    Cat primary() {
        if (at_end()) fail("expected category");
        if (peek() == '(') {
            ++pos;
            Cat inner = expression();
            if (at_end() || peek() != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        size_t start = pos;
        while (!at_end() && is_atom_char(peek())) ++pos;
        if (pos == start) fail("expected atom");
        return make_atom(atoms.id(text.substr(start, pos - start)));
    }

    // Left-associative: S\NP_SBJ/NP_OBJ reads as (S\NP_SBJ)/NP_OBJ.
    Cat expression() {
        Cat left = primary();
        while (!at_end() && (peek() == '/' || peek() == '\\')) {
            Slash dir = peek() == '/' ? Slash::Forward : Slash::Backward;
            ++pos;
            Cat right = primary();
            Cat combined = make_functor(left, dir, right, max_depth);
            if (!combined) fail("nesting depth exceeds " + std::to_string(max_depth));
            left = combined;
        }
        return left;
    }
};

}  // namespace detail

inline Cat parse_category(std::string_view text, const AtomInventory& atoms,
                          int max_depth = kDefaultMaxCatDepth) {
    detail::CatParser p{text, 0, atoms, max_depth};
    Cat c = p.expression();
    if (!p.at_end()) p.fail("trailing characters");
    return c;
}

// Argument spine: the sequence of (slash, argument) pairs peeled from the
// outside in, plus the innermost head. (S\NP_SBJ)/NP_OBJ decomposes into
// head S and spine [(/,NP_OBJ), (\,NP_SBJ)], outermost first.
struct Spine {
    Cat head;
    std::vector<std::pair<Slash, Cat>> args;  // outermost first
};

inline Spine decompose_spine(Cat c) {
    Spine s;
    while (c->is_functor()) {
        s.args.emplace_back(c->dir, c->arg);
        c = c->result;
    }
    s.head = c;
    return s;
}

inline Cat rebuild_spine(const Spine& s, int max_depth = kDefaultMaxCatDepth) {
    Cat c = s.head;
    for (size_t i = s.args.size(); i-- > 0;) {
        c = make_functor(c, s.args[i].first, s.args[i].second, max_depth);
        if (!c) return nullptr;
    }
    return c;
}

}  // namespace gcgal
