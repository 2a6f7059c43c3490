#include <catch2/catch_amalgamated.hpp>

#include "gcgal/category.hpp"
#include "gcgal/rng.hpp"

using namespace gcgal;

TEST_CASE("standard atoms have fixed ids") {
    AtomInventory atoms;
    CHECK(atoms.id("S") == AtomInventory::kS);
    CHECK(atoms.id("NP") == AtomInventory::kNP);
    CHECK(atoms.id("NP_SBJ") == AtomInventory::kNPSbj);
    CHECK(atoms.id("NP_OBJ") == AtomInventory::kNPObj);
    CHECK(atoms.id("S_SUB") == AtomInventory::kSSub);
    CHECK(atoms.id("CONJ") == AtomInventory::kConj);
}

TEST_CASE("unknown atom names are rejected") {
    AtomInventory atoms;
    CHECK_THROWS_AS(atoms.id("VP"), GrammarError);
    CHECK_THROWS_AS(parse_category("S/VP", atoms), GrammarError);
    atoms.declare("VP");
    CHECK_NOTHROW(parse_category("S/VP", atoms));
}

TEST_CASE("printing round-trips parsing") {
    AtomInventory atoms;
    for (const char* text : {
             "S",
             "NP_SBJ\\NP",
             "(S\\NP_SBJ)/NP_OBJ",
             "(S\\NP_SBJ)\\NP_OBJ",
             "(NP_SBJ\\NP_SBJ)/(S/NP_OBJ)",
             "((S/S)\\NP)/(S_SUB\\S)",
         }) {
        Cat c = parse_category(text, atoms);
        CHECK(print_category(c, atoms) == text);
        CHECK(cat_equal(parse_category(print_category(c, atoms), atoms), c));
    }
}

TEST_CASE("slashes are left-associative without parentheses") {
    AtomInventory atoms;
    CHECK(cat_equal(parse_category("S\\NP_SBJ/NP_OBJ", atoms),
                    parse_category("(S\\NP_SBJ)/NP_OBJ", atoms)));
}

TEST_CASE("malformed category text throws") {
    AtomInventory atoms;
    CHECK_THROWS_AS(parse_category("", atoms), GrammarError);
    CHECK_THROWS_AS(parse_category("(S", atoms), GrammarError);
    CHECK_THROWS_AS(parse_category("S)", atoms), GrammarError);
    CHECK_THROWS_AS(parse_category("S/", atoms), GrammarError);
    CHECK_THROWS_AS(parse_category("S NP", atoms), GrammarError);
}

TEST_CASE("nesting depth is capped at construction") {
    AtomInventory atoms;
    Cat c = make_atom(AtomInventory::kS);
    for (int i = 0; i < 7; ++i) {
        c = make_functor(c, Slash::Forward, make_atom(AtomInventory::kNP));
        REQUIRE(c != nullptr);
    }
    CHECK(c->depth == 8);
    CHECK(make_functor(c, Slash::Forward, make_atom(AtomInventory::kNP)) == nullptr);

    std::string deep = "S";
    for (int i = 0; i < 8; ++i) deep = "(" + deep + ")/NP";
    CHECK_THROWS_AS(parse_category(deep, atoms), GrammarError);
}

TEST_CASE("structural equality ignores sharing, respects shape") {
    AtomInventory atoms;
    Cat a = parse_category("(S\\NP_SBJ)/NP_OBJ", atoms);
    Cat b = parse_category("(S\\NP_SBJ)/NP_OBJ", atoms);
    Cat c = parse_category("(S/NP_OBJ)\\NP_SBJ", atoms);
    CHECK(cat_equal(a, b));
    CHECK(cat_hash(a) == cat_hash(b));
    CHECK_FALSE(cat_equal(a, c));
    CHECK(cat_compare(a, b) == 0);
    CHECK(cat_compare(a, c) != 0);
    CHECK(cat_compare(a, c) == -cat_compare(c, a));
}

namespace {

Cat random_category(Rng& rng, int max_depth) {
    if (max_depth <= 1 || rng.below(3) == 0)
        return make_atom(static_cast<int>(rng.below(6)));
    Cat result = random_category(rng, max_depth - 1);
    Cat arg = random_category(rng, max_depth - 1);
    return make_functor(result, rng.below(2) ? Slash::Forward : Slash::Backward, arg);
}

}  // namespace

TEST_CASE("round-trip property on random categories") {
    AtomInventory atoms;
    Rng rng(20260810);
    for (int i = 0; i < 300; ++i) {
        Cat c = random_category(rng, 4);
        REQUIRE(c != nullptr);
        Cat back = parse_category(print_category(c, atoms), atoms);
        CHECK(cat_equal(c, back));
        CHECK(cat_hash(c) == cat_hash(back));
    }
}
