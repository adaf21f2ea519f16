#include <set>

#include "catch_amalgamated.hpp"
#include "syllogen/catalog.hpp"

using namespace syllogen;

TEST_CASE("catalog has 28 schemes, one per id") {
    auto catalog = scheme_catalog();
    REQUIRE(catalog.size() == 28);
    std::set<std::string> codes;
    for (const auto& s : catalog) codes.insert(scheme_code(s.id));
    CHECK(codes.size() == 28);
    for (int b = 0; b < kSchemeBaseCount; ++b)
        for (int v = 0; v < kSchemeVariantCount; ++v) {
            SchemeId id{static_cast<SchemeBase>(b), static_cast<SchemeVariant>(v)};
            CHECK(codes.count(scheme_code(id)) == 1);
        }
}

TEST_CASE("modus ponens base form matches the canonical statement") {
    const auto* e = find_entry({SchemeBase::GeneralizedModusPonens,
                                SchemeVariant::Base});
    REQUIRE(e != nullptr);
    REQUIRE(e->scheme.premises.size() == 2);
    CHECK(formula_key(e->scheme.premises[0]) ==
          formula_key(forall(implies(atom(0, var()), atom(1, var())))));
    CHECK(formula_key(e->scheme.premises[1]) == formula_key(atom(0, cons(0))));
    CHECK(formula_key(e->scheme.conclusion) == formula_key(atom(1, cons(0))));
}

TEST_CASE("every catalog scheme is valid and its negated control is not") {
    for (const auto& s : scheme_catalog()) {
        INFO(scheme_code(s.id));
        auto report = validate_scheme(s);
        CHECK(report.entailed);
        CHECK_FALSE(report.witness.has_value());

        FormalScheme corrupted = s;
        corrupted.conclusion = lnot(s.conclusion);
        auto control = validate_scheme(corrupted);
        CHECK_FALSE(control.entailed);
        REQUIRE(control.witness.has_value());
        // The serialized witness must satisfy every premise and refute the
        // corrupted conclusion.
        for (const auto& p : corrupted.premises)
            CHECK(eval_formula(p, control.witness->interpretation));
        CHECK_FALSE(eval_formula(corrupted.conclusion,
                                 control.witness->interpretation));
        CHECK_FALSE(countermodel_to_json(*control.witness).empty());
    }
}

TEST_CASE("scheme invariants hold") {
    for (const auto& s : scheme_catalog()) {
        INFO(scheme_code(s.id));
        CHECK(s.premises.size() >= 2);
        CHECK(s.predicate_count <= 3);  // keeps the oracle sweep tractable
        // Predicate placeholders in the conclusion occur in some premise.
        Signature concl = signature_of({s.conclusion});
        Signature prem = signature_of(
            std::vector<FormulaPtr>(s.premises.begin(), s.premises.end()));
        for (int p : concl.predicates)
            CHECK(std::find(prem.predicates.begin(), prem.predicates.end(), p) !=
                  prem.predicates.end());
    }
}

TEST_CASE("the four variants of each base are structurally distinct") {
    auto catalog = scheme_catalog();
    auto key_of = [](const FormalScheme& s) {
        std::string k;
        for (const auto& p : s.premises) k += formula_key(p) + "|";
        k += "=>" + formula_key(s.conclusion);
        return k;
    };
    for (int b = 0; b < kSchemeBaseCount; ++b) {
        std::set<std::string> keys;
        for (const auto& s : catalog)
            if (s.id.base == static_cast<SchemeBase>(b)) keys.insert(key_of(s));
        CHECK(keys.size() == 4);
    }
}

TEST_CASE("disjunctive syllogism complex variant present and valid") {
    const auto* e = find_entry({SchemeBase::DisjunctiveSyllogism,
                                SchemeVariant::ComplexPredicates});
    REQUIRE(e != nullptr);
    CHECK(validate_scheme(e->scheme).entailed);
}

TEST_CASE("grounding plans reference declared placeholders only") {
    for (const auto& e : catalog_entries()) {
        INFO(scheme_code(e.scheme.id));
        std::set<int> constrained;
        for (const auto& c : e.grounding.constraints) {
            CHECK(c.pathway_a >= 0);
            CHECK(c.pathway_a < e.scheme.predicate_count);
            if (c.kind == GroundConstraint::Kind::Edge) {
                CHECK(c.pathway_b >= 0);
                CHECK(c.pathway_b < e.scheme.predicate_count);
                constrained.insert(c.pathway_b);
            }
            if (c.constant >= 0) CHECK(c.constant < e.scheme.constant_count);
            constrained.insert(c.pathway_a);
        }
        // Every pathway placeholder is mentioned by the plan.
        CHECK(static_cast<int>(constrained.size()) == e.scheme.predicate_count);
    }
}

TEST_CASE("catalog exports as prefix-notation json") {
    auto j = catalog_to_json();
    REQUIRE(j.size() == 28);
    CHECK(j[0]["scheme"] == "gmp:base");
    CHECK(j[0]["premises"][0][0] == "forall");
    CHECK(j[0]["conclusion"][0] == "G");
}
