#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "deductio/formula.hpp"
#include "deductio/substitution.hpp"
#include "generators.hpp"

using namespace deductio;
using testgen::prop_lang;
using testgen::unary_lang;

namespace {
Formula P(const Language& lang, const std::string& text) {
    return parse_formula(lang, text);
}
} // namespace

TEST_CASE("parse_formula reads the prefix grammar") {
    Language lang = prop_lang();
    Formula f = P(lang, "imp(x1, imp(x2, x1))");
    REQUIRE(f.is_application());
    REQUIRE(f.conn() == "imp");
    REQUIRE(f.children()[0] == Formula::variable(1));
    REQUIRE(f.children()[1] == P(lang, "imp(x2,x1)"));

    REQUIRE(P(lang, "x7") == Formula::variable(7));
    REQUIRE(P(lang, "  not ( x1 ) ") == P(lang, "not(x1)"));

    REQUIRE_THROWS_AS(P(lang, "imp(x1)"), parse_error);       // arity mismatch
    REQUIRE_THROWS_AS(P(lang, "xor(x1,x2)"), parse_error);    // unknown connective
    REQUIRE_THROWS_AS(P(lang, "imp(x1,x2"), parse_error);     // malformed
    REQUIRE_THROWS_AS(P(lang, "imp(x1,x2) x3"), parse_error); // trailing input
    REQUIRE_THROWS_AS(P(lang, "x0"), parse_error);            // no variable x0
}

TEST_CASE("constants parse and print without parentheses") {
    Language lang{"cl", {{"top", 0}, {"f", 1}}};
    Formula c = P(lang, "top");
    REQUIRE(c.is_application());
    REQUIRE(c.children().empty());
    REQUIRE(print_formula(P(lang, "f(top)")) == "f(top)");
}

TEST_CASE("print then parse is the identity on generated formulas") {
    Language lang = prop_lang();
    auto all = generate_formulas(lang, {1, 2}, 2);
    for (const auto& f : all) {
        REQUIRE(parse_formula(lang, print_formula(f)) == f);
        REQUIRE(f.well_formed(lang));
    }
}

TEST_CASE("generate_formulas counts and canonical order") {
    SECTION("single unary connective, one variable, depth 2") {
        auto fs = generate_formulas(unary_lang(), {1}, 2);
        REQUIRE(fs.size() == 3); // x1, f(x1), f(f(x1))
        REQUIRE(print_formula(fs[0]) == "x1");
        REQUIRE(print_formula(fs[1]) == "f(x1)");
        REQUIRE(print_formula(fs[2]) == "f(f(x1))");
    }
    SECTION("depth 0 is variables plus constants") {
        Language lang{"l", {{"c", 0}, {"g", 2}}};
        auto fs = generate_formulas(lang, {3, 5}, 0);
        REQUIRE(fs.size() == 3);
        REQUIRE(print_formula(fs[0]) == "x3");
        REQUIRE(print_formula(fs[1]) == "x5");
        REQUIRE(print_formula(fs[2]) == "c");
    }
    SECTION("one binary connective, two variables, depth 1") {
        Language lang{"l", {{"imp", 2}}};
        auto fs = generate_formulas(lang, {1, 2}, 1);
        REQUIRE(fs.size() == 6); // 2 variables + 2^2 implications
    }
    SECTION("cap guard") {
        REQUIRE_THROWS_AS(generate_formulas(prop_lang(), {1, 2, 3}, 3, 1000),
                          cap_exceeded);
    }
    SECTION("deterministic order is by depth then structure") {
        auto fs = generate_formulas(prop_lang(), {1, 2}, 1);
        auto again = generate_formulas(prop_lang(), {1, 2}, 1);
        REQUIRE(fs == again);
        for (size_t i = 1; i < fs.size(); ++i) REQUIRE(fs[i - 1] < fs[i]);
    }
}

TEST_CASE("apply_substitution") {
    Language lang = prop_lang();
    Formula f = P(lang, "imp(x1,x2)");
    REQUIRE(Substitution::identity()(f) == f);

    Substitution s;
    s.set(1, P(lang, "not(x1)"));
    REQUIRE(s(P(lang, "imp(x1,x1)")) == P(lang, "imp(not(x1),not(x1))"));
}

TEST_CASE("action law: applying a composite equals applying in stages") {
    Language lang = prop_lang();
    std::mt19937_64 rng(20120921);
    for (int i = 0; i < 1000; ++i) {
        Substitution s1 = testgen::random_substitution(rng, lang, 2);
        Substitution s2 = testgen::random_substitution(rng, lang, 2);
        Formula f = testgen::random_formula(rng, lang, 3);
        REQUIRE(compose(s2, s1)(f) == s2(s1(f)));
    }
}

TEST_CASE("substitutions form a monoid") {
    Language lang = prop_lang();
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        Substitution s1 = testgen::random_substitution(rng, lang, 2);
        Substitution s2 = testgen::random_substitution(rng, lang, 2);
        Substitution s3 = testgen::random_substitution(rng, lang, 2);
        REQUIRE(compose(Substitution::identity(), s1) == s1);
        REQUIRE(compose(s1, Substitution::identity()) == s1);
        REQUIRE(compose(compose(s3, s2), s1) == compose(s3, compose(s2, s1)));
    }
}

TEST_CASE("composition matches the pointwise oracle and the golden file") {
    Language lang = prop_lang();
    auto S = [&](std::initializer_list<std::pair<int, const char*>> entries) {
        Substitution s;
        for (auto& [v, text] : entries) s.set(v, P(lang, text));
        return s;
    };
    struct Case {
        const char* tag;
        Substitution s1, s2;
    };
    std::vector<Case> cases = {
        {"A", S({{2, "x1"}}), S({{1, "x2"}})},
        {"B", S({{1, "imp(x1,x2)"}}), S({{2, "not(x1)"}})},
        {"C", S({{1, "x2"}, {2, "x1"}}), S({{1, "not(x1)"}})},
        {"D", S({{1, "not(x1)"}}), S({{1, "not(x1)"}})},
    };

    std::string rendered;
    for (const auto& c : cases) {
        Substitution comp = compose(c.s2, c.s1);
        // oracle: evaluate both stages pointwise on the window x1..x4
        for (int v = 1; v <= 4; ++v) REQUIRE(comp(v) == c.s2(c.s1(v)));
        rendered += std::string(c.tag) + "|" + print_substitution(c.s1) + "|" +
                    print_substitution(c.s2) + "|" + print_substitution(comp) + "\n";
    }

    std::ifstream golden(std::string(DEDUCTIO_TEST_DATA_DIR) + "/golden/compose_golden.txt");
    REQUIRE(golden.good());
    std::string expected((std::istreambuf_iterator<char>(golden)),
                         std::istreambuf_iterator<char>());
    REQUIRE(rendered == expected);
}

TEST_CASE("is_variable_renaming") {
    Language lang = prop_lang();
    REQUIRE(is_variable_renaming(Substitution::identity()));
    Substitution swap;
    swap.set(1, Formula::variable(2));
    swap.set(2, Formula::variable(1));
    REQUIRE(is_variable_renaming(swap));
    Substitution s;
    s.set(1, P(lang, "not(x1)"));
    REQUIRE_FALSE(is_variable_renaming(s));
}

TEST_CASE("well-formedness is preserved by substitution and composition") {
    Language lang = prop_lang();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        Substitution s1 = testgen::random_substitution(rng, lang, 2);
        Substitution s2 = testgen::random_substitution(rng, lang, 2);
        Formula f = testgen::random_formula(rng, lang, 3);
        REQUIRE(s1(f).well_formed(lang));
        Substitution comp = compose(s2, s1);
        for (const auto& [v, img] : comp.support()) REQUIRE(img.well_formed(lang));
    }
}

TEST_CASE("idempotency window check") {
    Language lang = prop_lang();
    Substitution constant; // x1 -> not(x2): idempotent (x2 untouched)
    constant.set(1, P(lang, "not(x2)"));
    REQUIRE(is_idempotent_on_window(constant));
    Substitution grow; // x1 -> not(x1): not idempotent
    grow.set(1, P(lang, "not(x1)"));
    REQUIRE_FALSE(is_idempotent_on_window(grow));
    Substitution swap;
    swap.set(1, Formula::variable(2));
    swap.set(2, Formula::variable(1));
    REQUIRE_FALSE(is_idempotent_on_window(swap));
}
