#include "catch_amalgamated.hpp"
#include "syllogen/logic.hpp"
#include "syllogen/rng.hpp"

using namespace syllogen;

namespace {
constexpr int F = 0, G = 1, H = 2;
FormulaPtr pv(int p) { return atom(p, var()); }
FormulaPtr pa(int p) { return atom(p, cons(0)); }
}  // namespace

TEST_CASE("modus ponens form is entailed") {
    std::vector<FormulaPtr> premises = {forall(implies(pv(F), pv(G))), pa(F)};
    CHECK(entails(premises, pa(G), 8));
}

TEST_CASE("affirming the consequent is refuted with a one-element countermodel") {
    std::vector<FormulaPtr> premises = {forall(implies(pv(F), pv(G))), pa(G)};
    auto witness = find_countermodel(premises, pa(F), 8);
    REQUIRE(witness.has_value());
    // Smallest countermodel: domain {0}, F empty, G = {0}, a = 0.
    CHECK(witness->interpretation.domain_size == 1);
    CHECK(witness->interpretation.extensions[F] == 0u);
    CHECK(witness->interpretation.extensions[G] == 1u);
    CHECK(witness->interpretation.constant_values[0] == 0);
}

TEST_CASE("excluded middle holds from no premises") {
    CHECK(entails({}, lor(pa(F), lnot(pa(F))), 2));
}

TEST_CASE("conclusion identical to a premise is entailed") {
    std::vector<FormulaPtr> premises = {forall(implies(pv(F), pv(G))), pa(F)};
    CHECK(entails(premises, premises[0], 8));
}

TEST_CASE("a countermodel satisfies the premises and falsifies the conclusion") {
    std::vector<FormulaPtr> premises = {forall(implies(pv(F), lor(pv(G), pv(H)))),
                                        land(pa(F), lnot(pa(G)))};
    FormulaPtr bogus = lnot(pa(H));
    auto witness = find_countermodel(premises, bogus, 8);
    REQUIRE(witness.has_value());
    for (const auto& p : premises) CHECK(eval_formula(p, witness->interpretation));
    CHECK_FALSE(eval_formula(bogus, witness->interpretation));
}

TEST_CASE("unbound variable is rejected") {
    CHECK_THROWS_AS(entails({pv(F)}, pa(G), 4), std::invalid_argument);
    CHECK_THROWS_AS(entails({land(pa(F), pv(G))}, pa(G), 4), std::invalid_argument);
}

TEST_CASE("formula json round-trips structurally") {
    FormulaPtr f = forall(implies(land(pv(F), lnot(pv(G))), pv(H)));
    auto j = formula_to_json(f);
    CHECK(structurally_equal(f, formula_from_json(j)));
    FormulaPtr g = implies(lnot(pa(G)), lnot(land(pa(F), pa(H))));
    CHECK(structurally_equal(g, formula_from_json(formula_to_json(g))));
    CHECK_FALSE(structurally_equal(f, g));
}

TEST_CASE("entailment is monotone under extra premises") {
    // Pool of well-formed side formulas over the same placeholders.
    std::vector<FormulaPtr> pool = {
        forall(implies(pv(G), pv(H))), pa(G), lnot(pa(H)),
        lor(pa(F), pa(G)), forall(lnot(land(pv(F), lnot(pv(G))))),
        land(pa(F), pa(G)), forall(implies(lnot(pv(H)), lnot(pv(F))))};
    std::vector<FormulaPtr> premises = {forall(implies(pv(F), pv(G))), pa(F)};
    FormulaPtr conclusion = pa(G);
    REQUIRE(entails(premises, conclusion, 8));

    Rng rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<FormulaPtr> extended = premises;
        std::uint64_t picks = rng.below(3) + 1;
        for (std::uint64_t i = 0; i < picks; ++i)
            extended.push_back(pool[rng.below(pool.size())]);
        CHECK(entails(extended, conclusion, 8));
    }
}

TEST_CASE("scheme codes parse and print") {
    auto id = parse_scheme_code("ds:complex");
    REQUIRE(id.has_value());
    CHECK(id->base == SchemeBase::DisjunctiveSyllogism);
    CHECK(id->variant == SchemeVariant::ComplexPredicates);
    CHECK(scheme_code(*id) == "ds:complex");
    CHECK_FALSE(parse_scheme_code("nope").has_value());
    CHECK_FALSE(parse_scheme_code("gmp:bogus").has_value());
}
