#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <functional>

#include "pnc/hornnc.hpp"
#include "pnc/parser.hpp"
#include "pnc/semantics.hpp"
#include "testgen.hpp"

using namespace pnc;

namespace {

base load(const std::string& name) {
    std::ifstream in(std::string(PNC_TEST_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    return parse_base(in);
}

} // namespace

TEST_CASE("negative formulas have only negative literals") {
    CHECK(is_negative(parse_formula("-P")));
    CHECK(is_negative(parse_formula("(or (and -P -R) (and -S (or -P -Q)))")));
    CHECK_FALSE(is_negative(parse_formula("(or -P Q)")));
    CHECK_THROWS_AS(is_negative(parse_formula("(and true -P)")), constant_error);
}

TEST_CASE("Horn-NC recognition on the worked formulas") {
    // One non-negative disjunct, recursively Horn-NC.
    CHECK(is_horn_nc(parse_formula("(or (and -Q -S) (and R P))")));
    // Two non-negative disjuncts.
    CHECK_FALSE(is_horn_nc(parse_formula("(or (and -Q S) (and R -P))")));
    // Switching a single polarity breaks the property.
    formula::ptr phi = parse_formula("(or -P (and (or -P R) (and Q (or P -S))))");
    CHECK(is_horn_nc(phi));
    formula::ptr phi_prime = parse_formula("(or P (and (or -P R) (and Q (or P -S))))");
    CHECK_FALSE(is_horn_nc(phi_prime));
    // Horn clauses are non-recursive Horn-NC disjunctions.
    CHECK(is_horn_nc(parse_formula("(or -P -Q R)")));
    // Single-disjunct wrappers delegate to the child.
    CHECK(is_horn_nc(parse_formula("(or (and P Q))")));
    CHECK_FALSE(is_horn_nc(parse_formula("(or (or P Q))")));
    CHECK_THROWS_AS(is_horn_nc(parse_formula("false")), constant_error);
}

TEST_CASE("Horn-NC bases") {
    CHECK(is_horn_nc_base(load("inconsistent_simple.pnc")));
    CHECK(is_horn_nc_base(load("consistent_simple.pnc")));
    CHECK(is_horn_nc_base(load("cut_chain.pnc")));
    CHECK_FALSE(is_horn_nc_base(load("nonhorn.pnc")));
    // Items collapsing to a constant are tolerated.
    CHECK(is_horn_nc_base(parse_base("(or true P Q) : 0.5")));
    CHECK(is_horn_nc_base(parse_base("(and false P Q) : 0.5")));
    CHECK(is_horn_nc_base(base{}));
}

TEST_CASE("recognizer matches the clausal transform exhaustively") {
    // Every binary formula with at most two connective levels over 3 props.
    auto pool = testgen::enumerate_binary_formulas(testgen::props(3), 2);
    for (const auto& f : pool)
        CHECK(is_horn_nc(f) == is_horn_clausal(cl_transform(f)));
}

TEST_CASE("recognizer matches the clausal transform on random formulas") {
    testgen::rng g(5150);
    std::vector<std::string> ps = testgen::props(4);
    for (int i = 0; i < 2000; ++i) {
        formula::ptr f = testgen::random_nc(g, ps, 3);
        CHECK(is_horn_nc(f) == is_horn_clausal(cl_transform(f)));
    }
}

TEST_CASE("all sub-formulas of a Horn-NC formula are Horn-NC") {
    testgen::rng g(31337);
    std::vector<std::string> ps = testgen::props(4);
    std::function<void(const formula::ptr&)> check_subs = [&](const formula::ptr& f) {
        CHECK(is_horn_nc(f));
        for (const auto& c : f->children())
            check_subs(c);
    };
    for (int i = 0; i < 300; ++i)
        check_subs(testgen::random_horn_nc(g, ps, 3));
}

TEST_CASE("negative formulas are Horn-NC") {
    testgen::rng g(2);
    std::vector<std::string> ps = testgen::props(4);
    for (int i = 0; i < 300; ++i) {
        formula::ptr f = testgen::random_negative(g, ps, 3);
        CHECK(is_negative(f));
        CHECK(is_horn_nc(f));
    }
}

TEST_CASE("each Horn-NC formula has an equivalent Horn clausal form") {
    testgen::rng g(11);
    std::vector<std::string> ps = testgen::props(3);
    for (int i = 0; i < 200; ++i) {
        formula::ptr f = testgen::random_horn_nc(g, ps, 3);
        clausal_formula c = cl_transform(f);
        CHECK(is_horn_clausal(c));
        auto names = propositions(f);
        std::vector<std::string> vars(names.begin(), names.end());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars.size()); ++mask) {
            interpretation w;
            for (std::size_t v = 0; v < vars.size(); ++v)
                w.set(vars[v], (mask >> v) & 1);
            CHECK(evaluate(w, f) == evaluate_clausal(w, c));
        }
    }
}

TEST_CASE("recognition is linear in the formula size") {
    testgen::rng g(8080);
    std::vector<std::string> ps = testgen::props(6);
    for (int i = 0; i < 100; ++i) {
        formula::ptr f = testgen::random_nc(g, ps, 5);
        hornnc_stats stats;
        is_horn_nc(f, &stats);
        CHECK(stats.nodes_visited <= 2 * size(f));
    }
}
