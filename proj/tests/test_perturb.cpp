#include <sstream>

#include "catch_amalgamated.hpp"
#include "syllogen/corpus.hpp"
#include "test_util.hpp"

using namespace syllogen;

namespace {

const CatalogEntry& entry_for(const std::string& code) {
    auto id = parse_scheme_code(code);
    REQUIRE(id.has_value());
    const auto* e = find_entry(*id);
    REQUIRE(e != nullptr);
    return *e;
}

ArgumentInstance sample_instance(const std::string& code, const Ontology& o,
                                 std::uint64_t seed) {
    const auto& e = entry_for(code);
    auto bindings = enumerate_bindings(e, o, 1, seed);
    REQUIRE_FALSE(bindings.empty());
    return make_positive(e, o, bindings[0], code + "/pos/0", seed);
}

}  // namespace

TEST_CASE("identity permutation leaves order and gold set unchanged") {
    auto o = testutil::toy_ontology();
    auto inst = sample_instance("gmp:base", o, 3);
    // Find a seed whose derived permutation is the identity.
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        auto permuted = permute_premises(inst, seed);
        if (permuted.premises[0].text == inst.premises[0].text &&
            permuted.premises[1].text == inst.premises[1].text) {
            CHECK(permuted.gold_premises == inst.gold_premises);
            CHECK(permuted.perturbation.permutation == std::vector<int>{0, 1});
            return;
        }
    }
    FAIL("no identity permutation among 64 seeds");
}

TEST_CASE("two-premise swap keeps the gold set {P1, P2}") {
    auto o = testutil::toy_ontology();
    auto inst = sample_instance("gmp:base", o, 3);
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        auto permuted = permute_premises(inst, seed);
        if (permuted.premises[0].text == inst.premises[1].text) {
            CHECK(permuted.gold_premises == std::set<int>{1, 2});
            CHECK(permuted.perturbation.permutation == std::vector<int>{1, 0});
            return;
        }
    }
    FAIL("no swapping permutation among 64 seeds");
}

TEST_CASE("gold premise numbers track their sentences through permutation") {
    auto o = testutil::toy_ontology();
    auto inst = sample_instance("gd:base", o, 17);
    inst = add_distractors(inst, 2, o, 17);  // five premises total
    std::set<std::string> gold_sentences;
    for (int number : inst.gold_premises)
        gold_sentences.insert(inst.premises[number - 1].text);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto permuted = permute_premises(inst, seed);
        std::set<std::string> remapped;
        for (int number : permuted.gold_premises)
            remapped.insert(permuted.premises[number - 1].text);
        CHECK(remapped == gold_sentences);
    }
}

TEST_CASE("zero distractors is the identity") {
    auto o = testutil::toy_ontology();
    auto inst = sample_instance("gmp:base", o, 5);
    auto unchanged = add_distractors(inst, 0, o, 5);
    CHECK(instance_to_json(unchanged).dump() == instance_to_json(inst).dump());
}

TEST_CASE("distractors share no pathway or gene with the binding") {
    auto o = testutil::toy_ontology();
    auto& cache = shared_entailment_cache();
    for (const auto& code : {"gmp:base", "gmt:complex", "ds:base", "gd:demorgan"}) {
        auto inst = sample_instance(code, o, 23);
        for (int n = 1; n <= 5; ++n) {
            auto perturbed = add_distractors(inst, n, o, 23 + n);
            CHECK(perturbed.perturbation.n_distractors == n);
            CHECK(perturbed.premises.size() == inst.premises.size() + n);
            std::set<std::string> bound_paths(inst.binding.pathway_ids.begin(),
                                              inst.binding.pathway_ids.end());
            std::set<std::string> bound_genes(inst.binding.gene_symbols.begin(),
                                              inst.binding.gene_symbols.end());
            for (const auto& d : perturbed.perturbation.distractor_sources) {
                if (d.kind == "universal") {
                    CHECK_FALSE(bound_paths.count(d.subject));
                    CHECK_FALSE(bound_paths.count(d.object));
                } else {
                    CHECK_FALSE(bound_genes.count(d.subject));
                    CHECK_FALSE(bound_paths.count(d.object));
                }
            }
            CHECK(verify_instance(perturbed, o, cache).empty());
            CHECK(perturbed.gold_premises == inst.gold_premises);
        }
    }
}

TEST_CASE("distractor injection preserves labels across sampled instances") {
    auto o = testutil::toy_ontology();
    auto& cache = shared_entailment_cache();
    CorpusConfig config;
    config.cap_per_polarity = 2;
    config.distractor_counts = {0};
    config.seed = 31;
    auto corpus = build_corpus(o, config);
    REQUIRE(corpus.problems.empty());
    int checked = 0;
    for (const auto& inst : corpus.instances) {
        for (int n = 1; n <= 3; ++n) {
            ArgumentInstance perturbed;
            try {
                perturbed = add_distractors(inst, n, o, 1000 + n);
            } catch (const DistractorError&) {
                continue;
            }
            bool entailed = cache.entails(perturbed.core_formulas(),
                                          perturbed.conclusion);
            CHECK(entailed == inst.gold_label);
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("distractors fail cleanly when no disjoint facts exist") {
    std::istringstream in(
        R"({"kind":"pathway","id":"Disease","name":"Disease","parents":[]})"
        "\n"
        R"({"kind":"pathway","id":"Infectious disease","name":"Infectious disease","parents":["Disease"]})"
        "\n"
        R"({"kind":"gene","symbol":"PKQQ","pathways":["Infectious disease"]})"
        "\n");
    auto o = Ontology::ingest_jsonl(in);
    const auto& e = entry_for("gmp:base");
    auto bindings = enumerate_bindings(e, o, 1, 7);
    auto inst = make_positive(e, o, bindings[0], "x", 7);
    CHECK_THROWS_AS(add_distractors(inst, 2, o, 7), DistractorError);
}

TEST_CASE("synthetic names are consistent, fresh, and structure-preserving") {
    auto o = testutil::toy_ontology();
    auto inst = sample_instance("gmp:complex", o, 41);
    auto synth = synthesize_gene_names(inst, o, 41);
    REQUIRE(synth.synthetic_names);
    const auto& mapping = synth.perturbation.synthetic_name_map;
    REQUIRE_FALSE(mapping.empty());
    for (const auto& [from, to] : mapping) {
        CHECK(to.size() == 4);
        for (char ch : to) CHECK((ch >= 'A' && ch <= 'Z'));
        CHECK_FALSE(o.has_gene(to));
        CHECK(from != to);
        // Consistency: the original symbol is gone from every sentence.
        for (const auto& p : synth.premises)
            CHECK(p.text.find("Gene " + from) == std::string::npos);
        CHECK(synth.conclusion_text.find("Gene " + from) == std::string::npos);
    }
    // Formal side unchanged.
    REQUIRE(synth.premises.size() == inst.premises.size());
    for (std::size_t i = 0; i < synth.premises.size(); ++i)
        CHECK(formula_key(synth.premises[i].formula) ==
              formula_key(inst.premises[i].formula));
    CHECK(formula_key(synth.conclusion) == formula_key(inst.conclusion));
    CHECK(synth.gold_premises == inst.gold_premises);
    CHECK(synth.gold_label == inst.gold_label);
}

TEST_CASE("renaming is a bijection on the instance symbol set") {
    auto o = testutil::toy_ontology();
    auto inst = sample_instance("gmp:complex", o, 43);
    auto neg = make_negative(entry_for("gmp:base"), o,
                             enumerate_bindings(entry_for("gmp:base"), o, 1, 43)[0],
                             NegativeStrategy::EntitySwap, "x", 43);
    auto synth = synthesize_gene_names(neg, o, 43);
    const auto& mapping = synth.perturbation.synthetic_name_map;
    CHECK(mapping.size() == 2);  // original gene + near-miss symbol
    std::set<std::string> images;
    for (const auto& [from, to] : mapping) images.insert(to);
    CHECK(images.size() == mapping.size());
}

TEST_CASE("synthetic draws avoid ontology collisions at scale") {
    auto o = testutil::toy_ontology();
    auto inst = sample_instance("gmp:base", o, 47);
    int draws = 0;
    for (std::uint64_t seed = 0; draws < 10000; ++seed) {
        auto synth = synthesize_gene_names(inst, o, seed);
        for (const auto& [from, to] : synth.perturbation.synthetic_name_map) {
            CHECK_FALSE(o.has_gene(to));
            ++draws;
        }
    }
}
