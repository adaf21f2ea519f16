#include <set>

#include "catch_amalgamated.hpp"
#include "syllogen/catalog.hpp"
#include "syllogen/templates.hpp"

using namespace syllogen;

namespace {
constexpr int F = 0, G = 1, H = 2;
FormulaPtr pv(int p) { return atom(p, var()); }
FormulaPtr pa(int p) { return atom(p, cons(0)); }

RenderBinding demo_binding() {
    RenderBinding b;
    b.pathway_names = {"Diseases of hemostasis", "Disease", "Metabolic disease"};
    b.gene_symbols = {"GP1BB"};
    return b;
}
}  // namespace

TEST_CASE("universal implication renders as the membership sentence") {
    CHECK(render(forall(implies(pv(F), pv(G))), demo_binding()) ==
          "Every member of Diseases of hemostasis pathway is a member of "
          "Disease pathway");
}

TEST_CASE("atomic membership renders with the gene prefix") {
    CHECK(render(pa(F), demo_binding()) ==
          "Gene GP1BB is a member of Diseases of hemostasis pathway");
}

TEST_CASE("negated atomic renders with is-not-a-member") {
    RenderBinding b;
    b.pathway_names = {"Disorders of transmembrane transporters"};
    b.gene_symbols = {"AXZY"};
    CHECK(render(lnot(pa(F)), b) ==
          "Gene AXZY is not a member of Disorders of transmembrane "
          "transporters pathway");
}

TEST_CASE("conclusion wrappers") {
    std::string s = "Gene X is a member of P pathway";
    CHECK(wrap_conclusion(s, Polarity::AssertTrue) ==
          "It is true that Gene X is a member of P pathway");
    CHECK(wrap_conclusion(s, Polarity::AssertFalse) ==
          "It is false that Gene X is a member of P pathway");
    CHECK(wrap_conclusion(s, Polarity::None) == s);
}

TEST_CASE("wrapped twins differ only in the single true/false token") {
    std::string s = "Gene PSMC5 is a member of ABC transporter disorders pathway";
    std::string yes = wrap_conclusion(s, Polarity::AssertTrue);
    std::string no = wrap_conclusion(s, Polarity::AssertFalse);
    REQUIRE(no.size() == yes.size() + 1);  // "false" is one char longer
    // Align: the only difference is the word true/false.
    CHECK(yes.substr(0, 6) == no.substr(0, 6));
    CHECK(yes.substr(6, 4) == "true");
    CHECK(no.substr(6, 5) == "false");
    CHECK(yes.substr(10) == no.substr(11));
}

TEST_CASE("unbound placeholders are rejected") {
    RenderBinding empty;
    CHECK_THROWS_AS(render(pa(F), empty), std::invalid_argument);
    RenderBinding partial;
    partial.pathway_names = {"Disease"};
    CHECK_THROWS_AS(render(land(pa(F), pa(G)), partial), std::invalid_argument);
}

TEST_CASE("unsupported shapes are rejected") {
    // Nested quantifier bodies outside the catalog have no pattern.
    auto weird = forall(forall(implies(pv(F), pv(G))));
    CHECK_THROWS_AS(render(weird, demo_binding()), std::invalid_argument);
}

TEST_CASE("every catalog formula has a sentence pattern") {
    RenderBinding b;
    b.pathway_names = {"Alpha branch", "Beta branch", "Gamma branch"};
    b.gene_symbols = {"QQQZ"};
    for (const auto& s : scheme_catalog()) {
        INFO(scheme_code(s.id));
        for (const auto& p : s.premises) CHECK_FALSE(render(p, b).empty());
        CHECK_FALSE(render(s.conclusion, b).empty());
    }
}

TEST_CASE("render is injective over distinct bindings per shape") {
    std::vector<std::string> names = {"Viral infection", "Bacterial infection",
                                      "Transporter disorders", "Disease"};
    std::vector<std::string> genes = {"AAAA", "BBBB"};
    for (const auto& s : scheme_catalog()) {
        std::set<std::string> rendered;
        std::size_t count = 0;
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = 0; j < names.size(); ++j)
                for (std::size_t k = 0; k < names.size(); ++k) {
                    if (i == j || j == k || i == k) continue;
                    for (const auto& g : genes) {
                        RenderBinding b;
                        b.pathway_names = {names[i], names[j], names[k]};
                        b.gene_symbols = {g};
                        rendered.insert(render(s.conclusion, b));
                        ++count;
                    }
                }
        // Conclusions that use fewer placeholders collapse some tuples, so
        // compute the expected count from the placeholders actually used.
        Signature sig = signature_of({s.conclusion});
        std::size_t perms = 1;
        for (std::size_t used = 0; used < sig.predicates.size(); ++used)
            perms *= (names.size() - used);
        std::size_t expected = perms * (sig.constants.empty() ? 1 : genes.size());
        CHECK(rendered.size() == expected);
    }
}

TEST_CASE("rendered sentences parse back to their bindings") {
    RenderBinding b;
    b.pathway_names = {"HIV infection", "Viral infection", "Infectious disease"};
    b.gene_symbols = {"TAT3"};
    for (const auto& s : scheme_catalog()) {
        INFO(scheme_code(s.id));
        std::vector<FormulaPtr> formulas = s.premises;
        formulas.push_back(s.conclusion);
        for (const auto& f : formulas) {
            std::string sentence = render(f, b);
            auto parsed = parse_rendered(sentence);
            REQUIRE(parsed.has_value());
            auto m = match_shape(f);
            REQUIRE(m.has_value());
            CHECK(parsed->key == m->pattern->key);
            REQUIRE(parsed->pathway_names.size() == m->predicate_slots.size());
            for (std::size_t i = 0; i < parsed->pathway_names.size(); ++i)
                CHECK(parsed->pathway_names[i] ==
                      b.pathway_names[m->predicate_slots[i]]);
            if (!m->constant_slots.empty()) CHECK(parsed->gene_symbol == "TAT3");
        }
    }
}

TEST_CASE("pattern table exports as json") {
    auto j = pattern_table_to_json();
    CHECK(j.size() == sentence_patterns().size());
    CHECK(j[0].contains("key"));
    CHECK(j[0].contains("pattern"));
}
