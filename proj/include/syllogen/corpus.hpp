#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "syllogen/perturb.hpp"
#include "syllogen/sha256.hpp"

namespace syllogen {

struct CorpusConfig {
    std::vector<SchemeId> schemes;  // empty = all 28
    std::size_t cap_per_polarity = 200;
    std::vector<int> distractor_counts = {0, 1, 2, 3, 4, 5};
    bool permute = true;
    bool synthetic_names = false;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const {
        nlohmann::json schemes_json = nlohmann::json::array();
        for (const auto& s : schemes) schemes_json.push_back(scheme_code(s));
        return {{"schemes", schemes_json},
                {"cap_per_polarity", cap_per_polarity},
                {"distractor_counts", distractor_counts},
                {"permute", permute},
                {"synthetic_names", synthetic_names},
                {"seed", seed}};
    }
    std::string hash() const { return Sha256::of(to_json().dump()); }
};

// ---------------------------------------------------------------------------
// Instance verification: the label invariant re-checked from scratch. The
// formal side goes through the oracle; the material side re-checks every
// stated fact against the ontology (skipped for synthetic-name corpora whose
// facts are deliberately fictional).
// ---------------------------------------------------------------------------

inline std::vector<std::string> verify_instance(const ArgumentInstance& inst,
                                                const Ontology& o,
                                                EntailmentCache& cache) {
    std::vector<std::string> problems;
    auto complain = [&](const std::string& what) {
        problems.push_back(inst.instance_id + ": " + what);
    };

    const auto core = inst.core_formulas();
    bool formally_entailed = cache.entails(core, inst.conclusion);
    if (inst.gold_label && !formally_entailed)
        complain("positive instance is not entailed by its core premises");
    if (!inst.gold_label && formally_entailed)
        complain("negative instance is still entailed");

    std::map<int, std::string> pathway_ids;
    for (std::size_t i = 0; i < inst.binding.pathway_ids.size(); ++i)
        pathway_ids[static_cast<int>(i)] = inst.binding.pathway_ids[i];
    if (!inst.swap_pathway_id.empty())
        pathway_ids[kSwapPredicate] = inst.swap_pathway_id;

    if (!inst.synthetic_names) {
        for (std::size_t i = 0; i < inst.premises.size(); ++i) {
            if (inst.premises[i].is_distractor) continue;
            if (!premise_grounded_true(inst.premises[i].formula, inst, o,
                                       pathway_ids))
                complain("premise P" + std::to_string(i + 1) +
                         " is not backed by the ontology");
        }
        for (const auto& d : inst.perturbation.distractor_sources) {
            bool ok = d.kind == "universal" ? o.is_ancestor(d.subject, d.object)
                                            : o.is_member(d.subject, d.object);
            if (!ok) complain("distractor fact is not true in the ontology");
        }
        if (inst.strategy == NegativeStrategy::PathwaySwap &&
            !inst.swap_pathway_id.empty() && !inst.binding.gene_symbols.empty() &&
            detail::references_constant(*inst.conclusion) &&
            o.is_member(inst.binding.gene_symbols[0], inst.swap_pathway_id))
            complain("swapped conclusion fact is accidentally true");
    }

    try {
        auto gold = compute_gold_premises(inst, cache);
        if (gold != inst.gold_premises) complain("stored gold premises are stale");
    } catch (const GoldPremisesError& e) {
        complain(e.what());
    }
    for (std::size_t i = 0; i < inst.premises.size(); ++i)
        if (inst.premises[i].is_distractor &&
            inst.gold_premises.count(static_cast<int>(i) + 1))
            complain("gold premises include a distractor");
    return problems;
}

// ---------------------------------------------------------------------------
// Corpus building: deterministic in (ontology, catalog, config, seed).
// Negatives are corrupted twins of the positive bindings, cycling through
// the three strategies with fallback when one does not apply to a scheme.
// ---------------------------------------------------------------------------

struct SchemeYield {
    SchemeId scheme;
    std::size_t positives = 0;
    std::size_t negatives = 0;
    std::size_t bindings = 0;
};

struct Corpus {
    CorpusConfig config;
    std::vector<ArgumentInstance> instances;
    std::vector<SchemeYield> yields;
    std::vector<std::string> problems;
};

inline Corpus build_corpus(const Ontology& o, const CorpusConfig& config,
                           EntailmentCache& cache = shared_entailment_cache()) {
    if (o.genes().empty())
        throw std::invalid_argument("ontology has no genes to instantiate");
    Corpus corpus;
    corpus.config = config;

    std::vector<const CatalogEntry*> selected;
    for (const auto& e : catalog_entries()) {
        if (config.schemes.empty()) {
            selected.push_back(&e);
        } else {
            for (const auto& want : config.schemes)
                if (e.scheme.id == want) {
                    selected.push_back(&e);
                    break;
                }
        }
    }
    if (selected.empty()) throw std::invalid_argument("no schemes selected");

    int ordinal = -1;
    for (const auto* entry : selected) {
        ++ordinal;
        std::uint64_t scheme_seed = Rng::derive(config.seed, 1009 + ordinal);
        auto bindings =
            enumerate_bindings(*entry, o, config.cap_per_polarity, scheme_seed);
        SchemeYield yield;
        yield.scheme = entry->scheme.id;
        yield.bindings = bindings.size();

        auto expand = [&](const ArgumentInstance& base, const std::string& stem,
                          std::uint64_t instance_seed) {
            for (int n : config.distractor_counts) {
                std::uint64_t variant_seed = Rng::derive(instance_seed, 77 + n);
                ArgumentInstance v = base;
                try {
                    if (n > 0) v = add_distractors(v, n, o, variant_seed);
                } catch (const DistractorError&) {
                    continue;  // not enough disjoint facts; skip this variant
                }
                if (config.permute) v = permute_premises(v, variant_seed);
                if (config.synthetic_names)
                    v = synthesize_gene_names(v, o, variant_seed);
                v.instance_id = stem + "/d" + std::to_string(n);
                v.seed = variant_seed;
                auto problems = verify_instance(v, o, cache);
                corpus.problems.insert(corpus.problems.end(), problems.begin(),
                                       problems.end());
                corpus.instances.push_back(std::move(v));
            }
        };

        const std::string code = scheme_code(entry->scheme.id);
        for (std::size_t i = 0; i < bindings.size(); ++i) {
            std::uint64_t instance_seed =
                Rng::derive(scheme_seed, 2 * i);
            std::string stem = code + "/pos/" + std::to_string(i);
            ArgumentInstance base = make_positive(*entry, o, bindings[i],
                                                  stem, instance_seed, cache);
            expand(base, stem, instance_seed);
            ++yield.positives;
        }
        const NegativeStrategy cycle[3] = {NegativeStrategy::WrapperFlip,
                                           NegativeStrategy::EntitySwap,
                                           NegativeStrategy::PathwaySwap};
        for (std::size_t i = 0; i < bindings.size(); ++i) {
            std::uint64_t instance_seed = Rng::derive(scheme_seed, 2 * i + 1);
            std::string stem = code + "/neg/" + std::to_string(i);
            bool made = false;
            for (int attempt = 0; attempt < 3 && !made; ++attempt) {
                NegativeStrategy strategy = cycle[(i + attempt) % 3];
                try {
                    ArgumentInstance base =
                        make_negative(*entry, o, bindings[i], strategy, stem,
                                      instance_seed, cache);
                    expand(base, stem, instance_seed);
                    made = true;
                } catch (const StrategyInapplicable&) {
                }
            }
            if (made) ++yield.negatives;
        }
        corpus.yields.push_back(yield);
    }
    return corpus;
}

// ---------------------------------------------------------------------------
// Corpus JSONL: a meta line with provenance hashes, then one instance per
// line.
// ---------------------------------------------------------------------------

constexpr int kCorpusSchemaVersion = 1;

inline nlohmann::json instance_to_json(const ArgumentInstance& inst) {
    nlohmann::json premises = nlohmann::json::array();
    for (const auto& p : inst.premises)
        premises.push_back({{"text", p.text},
                            {"formula", formula_to_json(p.formula)},
                            {"distractor", p.is_distractor}});
    nlohmann::json pathway_names = nlohmann::json::object();
    for (const auto& [slot, name] : inst.pathway_names)
        pathway_names[std::to_string(slot)] = name;
    nlohmann::json gene_names = nlohmann::json::object();
    for (const auto& [slot, name] : inst.gene_names)
        gene_names[std::to_string(slot)] = name;
    nlohmann::json sources = nlohmann::json::array();
    for (const auto& d : inst.perturbation.distractor_sources)
        sources.push_back(
            {{"kind", d.kind}, {"subject", d.subject}, {"object", d.object}});
    nlohmann::json j{
        {"kind", "instance"},
        {"instance_id", inst.instance_id},
        {"scheme", scheme_code(inst.scheme)},
        {"gold_label", inst.gold_label},
        {"negative_strategy", negative_strategy_code(inst.strategy)},
        {"seed", inst.seed},
        {"binding",
         {{"pathways", inst.binding.pathway_ids},
          {"genes", inst.binding.gene_symbols}}},
        {"pathway_names", pathway_names},
        {"gene_names", gene_names},
        {"premises", premises},
        {"conclusion",
         {{"text", inst.conclusion_text},
          {"formula", formula_to_json(inst.conclusion)}}},
        {"gold_premises", std::vector<int>(inst.gold_premises.begin(),
                                           inst.gold_premises.end())},
        {"perturbation",
         {{"permutation", inst.perturbation.permutation},
          {"n_distractors", inst.perturbation.n_distractors},
          {"distractor_sources", sources},
          {"synthetic_name_map", inst.perturbation.synthetic_name_map}}},
        {"synthetic_names", inst.synthetic_names}};
    if (!inst.swap_pathway_id.empty()) j["swap_pathway_id"] = inst.swap_pathway_id;
    return j;
}

inline ArgumentInstance instance_from_json(const nlohmann::json& j) {
    ArgumentInstance inst;
    inst.instance_id = j.at("instance_id").get<std::string>();
    auto id = parse_scheme_code(j.at("scheme").get<std::string>());
    if (!id) throw std::invalid_argument("unknown scheme in corpus record");
    inst.scheme = *id;
    inst.gold_label = j.at("gold_label").get<bool>();
    auto strategy =
        parse_negative_strategy(j.at("negative_strategy").get<std::string>());
    if (!strategy) throw std::invalid_argument("unknown negative strategy");
    inst.strategy = *strategy;
    inst.seed = j.at("seed").get<std::uint64_t>();
    inst.binding.pathway_ids =
        j.at("binding").at("pathways").get<std::vector<std::string>>();
    inst.binding.gene_symbols =
        j.at("binding").at("genes").get<std::vector<std::string>>();
    for (const auto& [key, value] : j.at("pathway_names").items())
        inst.pathway_names[std::stoi(key)] = value.get<std::string>();
    for (const auto& [key, value] : j.at("gene_names").items())
        inst.gene_names[std::stoi(key)] = value.get<std::string>();
    for (const auto& p : j.at("premises"))
        inst.premises.push_back({p.at("text").get<std::string>(),
                                 formula_from_json(p.at("formula")),
                                 p.at("distractor").get<bool>()});
    inst.conclusion_text = j.at("conclusion").at("text").get<std::string>();
    inst.conclusion = formula_from_json(j.at("conclusion").at("formula"));
    for (const auto& g : j.at("gold_premises")) inst.gold_premises.insert(g.get<int>());
    const auto& pert = j.at("perturbation");
    inst.perturbation.permutation = pert.at("permutation").get<std::vector<int>>();
    inst.perturbation.n_distractors = pert.at("n_distractors").get<int>();
    for (const auto& d : pert.at("distractor_sources"))
        inst.perturbation.distractor_sources.push_back(
            {d.at("kind").get<std::string>(), d.at("subject").get<std::string>(),
             d.at("object").get<std::string>()});
    inst.perturbation.synthetic_name_map =
        pert.at("synthetic_name_map").get<std::map<std::string, std::string>>();
    inst.synthetic_names = j.at("synthetic_names").get<bool>();
    if (j.contains("swap_pathway_id"))
        inst.swap_pathway_id = j.at("swap_pathway_id").get<std::string>();
    return inst;
}

inline void write_corpus_jsonl(const Corpus& corpus, const std::string& config_hash,
                               const std::string& ontology_hash,
                               std::ostream& out) {
    nlohmann::json meta{{"kind", "meta"},
                        {"schema", "syllogen-corpus"},
                        {"schema_version", kCorpusSchemaVersion},
                        {"config", corpus.config.to_json()},
                        {"config_hash", config_hash},
                        {"upstream_hash", ontology_hash}};
    out << meta.dump() << "\n";
    for (const auto& inst : corpus.instances)
        out << instance_to_json(inst).dump() << "\n";
}

struct CorpusFile {
    nlohmann::json meta;
    std::vector<ArgumentInstance> instances;
};

inline CorpusFile read_corpus_jsonl(std::istream& in) {
    CorpusFile file;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw IngestError(line_no, std::string("invalid json: ") + e.what());
        }
        const std::string kind = j.value("kind", "");
        if (kind == "meta") {
            if (j.value("schema", "") != "syllogen-corpus" ||
                j.value("schema_version", -1) != kCorpusSchemaVersion)
                throw IngestError(line_no, "corpus schema version mismatch");
            file.meta = j;
        } else if (kind == "instance") {
            file.instances.push_back(instance_from_json(j));
        } else {
            throw IngestError(line_no, "unknown corpus record kind");
        }
    }
    return file;
}

}  // namespace syllogen
