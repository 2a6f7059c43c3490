#include <catch2/catch_amalgamated.hpp>

#include "gcgal/rng.hpp"
#include "gcgal/rules.hpp"
#include "support/oracles.hpp"

using namespace gcgal;
using gcgal::testing::contains_cat;
using gcgal::testing::oracle_spine_rotations;
using gcgal::testing::oracle_unary_closure;

namespace {
AtomInventory g_atoms = [] {
    AtomInventory a;
    a.declare("A");
    a.declare("B");
    a.declare("C");
    return a;
}();

Cat C(const char* s) { return parse_category(s, g_atoms); }
}  // namespace

TEST_CASE("forward application") {
    auto r = apply_binary(RuleKind::ForwardApplication, C("(S\\NP_SBJ)/NP_OBJ"), C("NP_OBJ"));
    REQUIRE(r.has_value());
    CHECK(cat_equal(*r, C("S\\NP_SBJ")));  // the "met Lisa o" combining step

    CHECK_FALSE(apply_binary(RuleKind::ForwardApplication, C("NP_OBJ"), C("NP")).has_value());
    CHECK_FALSE(apply_binary(RuleKind::ForwardApplication, C("S\\NP_SBJ"), C("NP_SBJ")).has_value());
}

TEST_CASE("backward application") {
    auto r = apply_binary(RuleKind::BackwardApplication, C("NP"), C("NP_SBJ\\NP"));
    REQUIRE(r.has_value());
    CHECK(cat_equal(*r, C("NP_SBJ")));  // the "man ga" combining step

    CHECK_FALSE(apply_binary(RuleKind::BackwardApplication, C("NP_SBJ\\NP"), C("NP")).has_value());
}

TEST_CASE("forward composition") {
    auto r = apply_binary(RuleKind::ForwardComposition, C("S_SUB/S"), C("S/NP_OBJ"));
    REQUIRE(r.has_value());
    CHECK(cat_equal(*r, C("S_SUB/NP_OBJ")));

    auto r2 = apply_binary(RuleKind::ForwardComposition, C("(S\\NP_SBJ)/S_SUB"), C("S_SUB/NP_OBJ"));
    REQUIRE(r2.has_value());
    CHECK(cat_equal(*r2, C("(S\\NP_SBJ)/NP_OBJ")));

    CHECK_FALSE(apply_binary(RuleKind::ForwardComposition, C("S_SUB/S"), C("NP/NP")).has_value());
    CHECK_FALSE(apply_binary(RuleKind::ForwardComposition, C("S_SUB\\S"), C("S/NP_OBJ")).has_value());
}

TEST_CASE("backward composition") {
    // Y\Z + X\Y => X\Z
    auto r = apply_binary(RuleKind::BackwardComposition, C("S\\NP_OBJ"), C("S_SUB\\S"));
    REQUIRE(r.has_value());
    CHECK(cat_equal(*r, C("S_SUB\\NP_OBJ")));

    CHECK_FALSE(apply_binary(RuleKind::BackwardComposition, C("S_SUB\\S"), C("S\\NP_OBJ")).has_value());
}

TEST_CASE("coordination builds the conj-marked modifier") {
    auto left = apply_binary(RuleKind::Coordination, C("CONJ"), C("NP"));
    REQUIRE(left.has_value());
    CHECK(cat_equal(*left, C("NP\\NP")));

    auto right = apply_binary(RuleKind::Coordination, C("NP"), C("CONJ"));
    REQUIRE(right.has_value());
    CHECK(cat_equal(*right, C("NP/NP")));

    auto adj = apply_binary(RuleKind::Coordination, C("CONJ"), C("NP/NP"));
    REQUIRE(adj.has_value());
    CHECK(cat_equal(*adj, C("(NP/NP)\\(NP/NP)")));

    // conjunct containing CONJ, or too deep, is not a conjunct
    CHECK_FALSE(apply_binary(RuleKind::Coordination, C("CONJ"), C("CONJ")).has_value());
    CHECK_FALSE(apply_binary(RuleKind::Coordination, C("CONJ"), C("NP\\CONJ")).has_value());
    CHECK_FALSE(apply_binary(RuleKind::Coordination, C("CONJ"), C("(S\\NP_SBJ)/NP_OBJ")).has_value());
    CHECK_FALSE(apply_binary(RuleKind::Coordination, C("NP"), C("NP")).has_value());

    // and the combining step is plain application
    auto np = apply_binary(RuleKind::BackwardApplication, C("NP"), *left);
    REQUIRE(np.has_value());
    CHECK(cat_equal(*np, C("NP")));
}

TEST_CASE("permutation of the two-argument verb") {
    auto rots = apply_permutation(C("(S\\NP_SBJ)/NP_OBJ"));
    REQUIRE(rots.size() == 1);  // exactly one new category
    CHECK(cat_equal(rots[0], C("(S/NP_OBJ)\\NP_SBJ")));
}

TEST_CASE("permutation of atoms and one-argument functors is empty") {
    CHECK(apply_permutation(C("NP")).empty());
    CHECK(apply_permutation(C("S\\NP_SBJ")).empty());
}

TEST_CASE("three-argument spine matches the rotation oracle") {
    Cat c = C("((S\\A)/B)/C");
    auto rots = apply_permutation(c);
    auto expected = oracle_spine_rotations(c);
    REQUIRE(rots.size() == expected.size());
    for (const auto& e : expected) CHECK(contains_cat(rots, e));
    // spot-check one rotation by hand
    CHECK(contains_cat(rots, C("((S/C)\\A)/B")));
    CHECK(contains_cat(rots, C("((S/B)/C)\\A")));
}

TEST_CASE("permutation closure stays within spine-argument count") {
    Rng rng(7);
    AtomInventory atoms = g_atoms;
    for (int trial = 0; trial < 200; ++trial) {
        // random spine: head atom plus up to 5 arguments
        Cat c = make_atom(static_cast<int>(rng.below(6)));
        uint64_t args = 1 + rng.below(5);
        for (uint64_t i = 0; i < args; ++i)
            c = make_functor(c, rng.below(2) ? Slash::Forward : Slash::Backward,
                             make_atom(static_cast<int>(rng.below(6))));
        REQUIRE(c != nullptr);
        auto closure = oracle_unary_closure(c);
        CHECK(closure.size() <= args);
        // closed: permuting any member stays inside the closure
        for (const auto& m : closure)
            for (const auto& p : apply_permutation(m)) CHECK(contains_cat(closure, p));
    }
}

TEST_CASE("arguments keep their own slash under permutation") {
    for (const auto& rot : apply_permutation(C("(S\\NP_SBJ)/NP_OBJ"))) {
        Spine s = decompose_spine(rot);
        for (const auto& [dir, arg] : s.args) {
            if (cat_equal(arg, C("NP_SBJ"))) CHECK(dir == Slash::Backward);
            if (cat_equal(arg, C("NP_OBJ"))) CHECK(dir == Slash::Forward);
        }
    }
}
