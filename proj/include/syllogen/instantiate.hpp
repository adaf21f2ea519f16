#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "syllogen/catalog.hpp"
#include "syllogen/ontology.hpp"
#include "syllogen/rng.hpp"
#include "syllogen/templates.hpp"

namespace syllogen {

// ---------------------------------------------------------------------------
// Bindings map the scheme placeholders onto ontology terms: predicate
// placeholders to pathway ids (injectively) and constant placeholders to
// gene symbols.
// ---------------------------------------------------------------------------

struct Binding {
    std::vector<std::string> pathway_ids;
    std::vector<std::string> gene_symbols;

    bool operator==(const Binding&) const = default;

    std::string key() const {
        std::string k;
        for (const auto& p : pathway_ids) k += p + "|";
        k += "/";
        for (const auto& g : gene_symbols) k += g + "|";
        return k;
    }
};

enum class NegativeStrategy { None, WrapperFlip, EntitySwap, PathwaySwap };

inline std::string negative_strategy_code(NegativeStrategy s) {
    switch (s) {
        case NegativeStrategy::None: return "none";
        case NegativeStrategy::WrapperFlip: return "wrapper_flip";
        case NegativeStrategy::EntitySwap: return "entity_swap";
        case NegativeStrategy::PathwaySwap: return "pathway_swap";
    }
    return "?";
}
inline std::optional<NegativeStrategy> parse_negative_strategy(const std::string& s) {
    if (s == "none") return NegativeStrategy::None;
    if (s == "wrapper_flip") return NegativeStrategy::WrapperFlip;
    if (s == "entity_swap") return NegativeStrategy::EntitySwap;
    if (s == "pathway_swap") return NegativeStrategy::PathwaySwap;
    return std::nullopt;
}

struct DistractorSource {
    std::string kind;     // "universal" or "membership"
    std::string subject;  // child pathway id / gene symbol
    std::string object;   // ancestor pathway id / pathway id
};

struct PerturbationRecord {
    std::vector<int> permutation;  // position -> original premise index
    int n_distractors = 0;
    std::vector<DistractorSource> distractor_sources;
    std::map<std::string, std::string> synthetic_name_map;
};

struct Premise {
    std::string text;
    FormulaPtr formula;
    bool is_distractor = false;
};

struct ArgumentInstance {
    std::string instance_id;
    SchemeId scheme;
    Binding binding;
    std::vector<Premise> premises;
    std::string conclusion_text;
    FormulaPtr conclusion;
    bool gold_label = true;
    std::set<int> gold_premises;  // 1-based premise numbers (P1 = 1)
    NegativeStrategy strategy = NegativeStrategy::None;
    std::string swap_pathway_id;  // PathwaySwap target, when used
    std::uint64_t seed = 0;
    PerturbationRecord perturbation;
    bool synthetic_names = false;

    // Display names for every placeholder index used by the formulas,
    // including swapped terms and distractor vocabulary.
    std::map<int, std::string> pathway_names;
    std::map<int, std::string> gene_names;

    RenderBinding render_binding() const {
        RenderBinding b;
        for (const auto& [slot, name] : pathway_names) {
            if (static_cast<int>(b.pathway_names.size()) <= slot)
                b.pathway_names.resize(slot + 1);
            b.pathway_names[slot] = name;
        }
        for (const auto& [slot, name] : gene_names) {
            if (static_cast<int>(b.gene_symbols.size()) <= slot)
                b.gene_symbols.resize(slot + 1);
            b.gene_symbols[slot] = name;
        }
        return b;
    }

    std::vector<FormulaPtr> core_formulas() const {
        std::vector<FormulaPtr> fs;
        for (const auto& p : premises)
            if (!p.is_distractor) fs.push_back(p.formula);
        return fs;
    }
};

// Placeholder index reserved for PathwaySwap targets; distractor vocabulary
// starts above it.
constexpr int kSwapPredicate = 3;
constexpr int kSwapConstant = 1;
constexpr int kDistractorPredicateBase = 4;
constexpr int kDistractorConstantBase = 2;

// ---------------------------------------------------------------------------
// Memoized entailment. The formal side of an instance depends only on the
// scheme (bindings swap names, not structure), so a small cache makes
// corpus-scale verification cheap while every answer still comes from the
// exhaustive oracle.
// ---------------------------------------------------------------------------

class EntailmentCache {
public:
    bool entails(const std::vector<FormulaPtr>& premises,
                 const FormulaPtr& conclusion) {
        std::vector<FormulaPtr> all = premises;
        all.push_back(conclusion);
        int k = static_cast<int>(signature_of(all).predicates.size());
        int bound = std::max(8, 1 << k);
        std::string key;
        for (const auto& p : premises) key += formula_key(p) + ";";
        key += "|=" + formula_key(conclusion) + "@" + std::to_string(bound);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        bool result = syllogen::entails(premises, conclusion, bound);
        std::lock_guard<std::mutex> lock(mutex_);
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    std::mutex mutex_;
    std::unordered_map<std::string, bool> memo_;
};

inline EntailmentCache& shared_entailment_cache() {
    static EntailmentCache cache;
    return cache;
}

// ---------------------------------------------------------------------------
// Grounded truth of catalog formulas against the ontology. Universal shapes
// are accepted when backed by subsumption; ground shapes evaluate membership
// facts directly.
// ---------------------------------------------------------------------------

namespace detail {

inline bool grounded_eval_ground(const FormulaPtr& f, const ArgumentInstance& inst,
                                 const Ontology& o,
                                 const std::map<int, std::string>& pathway_ids) {
    switch (f->kind) {
        case Connective::Atom: {
            auto g = inst.gene_names.find(f->term.constant);
            auto p = pathway_ids.find(f->predicate);
            if (g == inst.gene_names.end() || p == pathway_ids.end()) return false;
            if (!o.has_gene(g->second) || !o.has_node(p->second)) return false;
            return o.is_member(g->second, p->second);
        }
        case Connective::Not:
            return !grounded_eval_ground(f->children[0], inst, o, pathway_ids);
        case Connective::And:
            return grounded_eval_ground(f->children[0], inst, o, pathway_ids) &&
                   grounded_eval_ground(f->children[1], inst, o, pathway_ids);
        case Connective::Or:
            return grounded_eval_ground(f->children[0], inst, o, pathway_ids) ||
                   grounded_eval_ground(f->children[1], inst, o, pathway_ids);
        case Connective::Implies:
            return !grounded_eval_ground(f->children[0], inst, o, pathway_ids) ||
                   grounded_eval_ground(f->children[1], inst, o, pathway_ids);
        case Connective::ForAll:
            return false;  // handled by the caller
    }
    return false;
}

}  // namespace detail

// True when the premise states an ontology-backed fact: a subsumption-backed
// universal or a membership literal combination that holds.
inline bool premise_grounded_true(const FormulaPtr& f, const ArgumentInstance& inst,
                                  const Ontology& o,
                                  const std::map<int, std::string>& pathway_ids) {
    auto shape = match_shape(f);
    if (!shape) return false;
    auto path = [&](int pos) -> std::string {
        int slot = shape->predicate_slots[pos];
        auto it = pathway_ids.find(slot);
        return it == pathway_ids.end() ? std::string() : it->second;
    };
    auto anc = [&](int child_pos, int parent_pos) {
        std::string c = path(child_pos), p = path(parent_pos);
        return !c.empty() && !p.empty() && o.has_node(c) && o.has_node(p) &&
               o.is_ancestor(c, p);
    };
    const std::string& key = shape->pattern->key;
    if (key == "universal_implication") return anc(0, 1);
    if (key == "universal_contrapositive") return anc(1, 0);
    if (key == "universal_conjunctive_antecedent") return anc(0, 2) || anc(1, 2);
    if (key == "universal_no_conjunction") return anc(0, 1);
    if (key == "universal_disjunctive_consequent") return anc(0, 1) || anc(0, 2);
    if (key == "universal_negative_disjunctive") return anc(2, 0) || anc(2, 1);
    if (key == "universal_mixed_antecedent") return anc(0, 2);
    if (key == "universal_conjunctive_consequent") return anc(0, 1) && anc(0, 2);
    return detail::grounded_eval_ground(f, inst, o, pathway_ids);
}

// ---------------------------------------------------------------------------
// Binding enumeration: a deterministic seeded backtracking search over the
// scheme's grounding plan. Pools are shuffled once per level so results are
// stable for a fixed (ontology, scheme, cap, seed).
// ---------------------------------------------------------------------------

inline std::vector<Binding> enumerate_bindings(const CatalogEntry& entry,
                                               const Ontology& o, std::size_t cap,
                                               std::uint64_t seed) {
    if (cap == 0) return {};
    const int n_preds = entry.scheme.predicate_count;
    const int n_consts = entry.scheme.constant_count;

    std::vector<std::string> pathway_slots(n_preds);
    std::vector<std::string> gene_slots(n_consts);
    std::vector<Binding> out;
    Rng rng(Rng::derive(seed, 0x6269'6e64ULL));

    auto taken = [&](const std::string& id) {
        return std::find(pathway_slots.begin(), pathway_slots.end(), id) !=
               pathway_slots.end();
    };

    const auto& cs = entry.grounding.constraints;

    std::function<void(std::size_t)> solve = [&](std::size_t ci) {
        if (out.size() >= cap) return;
        if (ci == cs.size()) {
            for (const auto& s : pathway_slots)
                if (s.empty()) return;
            for (const auto& s : gene_slots)
                if (s.empty()) return;
            Binding b{pathway_slots, gene_slots};
            out.push_back(std::move(b));
            return;
        }
        const auto& c = cs[ci];
        switch (c.kind) {
            case GroundConstraint::Kind::Edge: {
                std::string& child = pathway_slots[c.pathway_a];
                std::string& parent = pathway_slots[c.pathway_b];
                if (!child.empty() && !parent.empty()) {
                    if (o.is_ancestor(child, parent)) solve(ci + 1);
                    return;
                }
                if (!child.empty()) {
                    std::vector<std::string> anc = o.ancestors(child);
                    rng.shuffle(anc);
                    for (const auto& p : anc) {
                        if (out.size() >= cap) return;
                        if (taken(p)) continue;
                        parent = p;
                        solve(ci + 1);
                        parent.clear();
                    }
                    return;
                }
                if (!parent.empty()) {
                    std::vector<std::size_t> order(o.subsumption_edges().size());
                    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
                    rng.shuffle(order);
                    for (std::size_t i : order) {
                        if (out.size() >= cap) return;
                        const auto& [ec, ep] = o.subsumption_edges()[i];
                        if (ep != parent || taken(ec)) continue;
                        child = ec;
                        solve(ci + 1);
                        child.clear();
                    }
                    return;
                }
                std::vector<std::size_t> order(o.subsumption_edges().size());
                for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
                rng.shuffle(order);
                for (std::size_t i : order) {
                    if (out.size() >= cap) return;
                    const auto& [ec, ep] = o.subsumption_edges()[i];
                    if (taken(ec) || taken(ep) || ec == ep) continue;
                    child = ec;
                    parent = ep;
                    solve(ci + 1);
                    child.clear();
                    parent.clear();
                }
                return;
            }
            case GroundConstraint::Kind::Member: {
                std::string& gene = gene_slots[c.constant];
                std::string& pathway = pathway_slots[c.pathway_a];
                if (!gene.empty() && !pathway.empty()) {
                    if (o.is_member(gene, pathway)) solve(ci + 1);
                    return;
                }
                if (!pathway.empty()) {
                    std::vector<std::string> candidates = o.members_of(pathway);
                    if (candidates.empty()) return;
                    rng.shuffle(candidates);
                    for (const auto& g : candidates) {
                        if (out.size() >= cap) return;
                        gene = g;
                        solve(ci + 1);
                        gene.clear();
                    }
                    return;
                }
                if (!gene.empty()) {
                    // Pathway open: any pathway the gene belongs to.
                    std::set<std::string> closure;
                    for (const auto& d : o.gene(gene).direct_memberships) {
                        closure.insert(d);
                        for (const auto& anc : o.ancestors(d)) closure.insert(anc);
                    }
                    std::vector<std::string> candidates(closure.begin(),
                                                        closure.end());
                    rng.shuffle(candidates);
                    for (const auto& p : candidates) {
                        if (out.size() >= cap) return;
                        if (taken(p)) continue;
                        pathway = p;
                        solve(ci + 1);
                        pathway.clear();
                    }
                    return;
                }
                // Both open: iterate genes then their pathways.
                std::vector<std::string> genes = o.gene_list();
                rng.shuffle(genes);
                for (const auto& g : genes) {
                    if (out.size() >= cap) return;
                    gene = g;
                    solve(ci);  // re-enter with gene fixed
                    gene.clear();
                }
                return;
            }
            case GroundConstraint::Kind::NonMember: {
                std::string& gene = gene_slots[c.constant];
                std::string& pathway = pathway_slots[c.pathway_a];
                if (!gene.empty() && !pathway.empty()) {
                    if (!o.is_member(gene, pathway)) solve(ci + 1);
                    return;
                }
                if (!pathway.empty()) {
                    std::vector<std::string> genes = o.gene_list();
                    rng.shuffle(genes);
                    for (const auto& g : genes) {
                        if (out.size() >= cap) return;
                        if (o.is_member(g, pathway)) continue;
                        gene = g;
                        solve(ci + 1);
                        gene.clear();
                    }
                    return;
                }
                if (!gene.empty()) {
                    std::vector<std::string> paths = o.pathway_list();
                    rng.shuffle(paths);
                    for (const auto& p : paths) {
                        if (out.size() >= cap) return;
                        if (taken(p) || o.is_member(gene, p)) continue;
                        pathway = p;
                        solve(ci + 1);
                        pathway.clear();
                    }
                    return;
                }
                std::vector<std::string> genes = o.gene_list();
                rng.shuffle(genes);
                for (const auto& g : genes) {
                    if (out.size() >= cap) return;
                    gene = g;
                    solve(ci);
                    gene.clear();
                }
                return;
            }
            case GroundConstraint::Kind::FreePathway: {
                std::string& pathway = pathway_slots[c.pathway_a];
                if (!pathway.empty()) {
                    solve(ci + 1);
                    return;
                }
                std::vector<std::string> paths = o.pathway_list();
                rng.shuffle(paths);
                for (const auto& p : paths) {
                    if (out.size() >= cap) return;
                    if (taken(p)) continue;
                    pathway = p;
                    solve(ci + 1);
                    pathway.clear();
                }
                return;
            }
        }
    };
    solve(0);
    return out;
}

// Soundness of a binding: injective pathway assignment plus every grounding
// constraint satisfied.
inline bool binding_is_sound(const CatalogEntry& entry, const Ontology& o,
                             const Binding& b) {
    if (static_cast<int>(b.pathway_ids.size()) != entry.scheme.predicate_count)
        return false;
    if (static_cast<int>(b.gene_symbols.size()) != entry.scheme.constant_count)
        return false;
    for (std::size_t i = 0; i < b.pathway_ids.size(); ++i) {
        if (!o.has_node(b.pathway_ids[i])) return false;
        for (std::size_t j = i + 1; j < b.pathway_ids.size(); ++j)
            if (b.pathway_ids[i] == b.pathway_ids[j]) return false;
    }
    for (const auto& g : b.gene_symbols)
        if (!o.has_gene(g)) return false;
    for (const auto& c : entry.grounding.constraints) {
        switch (c.kind) {
            case GroundConstraint::Kind::Edge:
                if (!o.is_ancestor(b.pathway_ids[c.pathway_a],
                                   b.pathway_ids[c.pathway_b]))
                    return false;
                break;
            case GroundConstraint::Kind::Member:
                if (!o.is_member(b.gene_symbols[c.constant],
                                 b.pathway_ids[c.pathway_a]))
                    return false;
                break;
            case GroundConstraint::Kind::NonMember:
                if (o.is_member(b.gene_symbols[c.constant],
                                b.pathway_ids[c.pathway_a]))
                    return false;
                break;
            case GroundConstraint::Kind::FreePathway:
                break;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Gold premises: brute force over premise subsets. Distractors are drawn
// from vocabulary disjoint with the scheme formulas, so a subset entails the
// conclusion exactly when its non-distractor part does; each sufficiency
// check goes through the exhaustive oracle.
// ---------------------------------------------------------------------------

struct GoldPremisesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::set<int> compute_gold_premises(const ArgumentInstance& inst,
                                           EntailmentCache& cache) {
    if (!inst.gold_label) return {};  // negatives cite no supporting premises
    const int n = static_cast<int>(inst.premises.size());
    if (n > 10) throw GoldPremisesError("too many premises for subset search");
    std::vector<bool> sufficient(std::size_t(1) << n, false);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        std::vector<FormulaPtr> formulas;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) {
                if (inst.premises[i].is_distractor) continue;
                formulas.push_back(inst.premises[i].formula);
            }
        sufficient[mask] = cache.entails(formulas, inst.conclusion);
    }
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        if (!sufficient[mask]) continue;
        bool is_minimal = true;
        for (int i = 0; i < n && is_minimal; ++i)
            if (((mask >> i) & 1u) && sufficient[mask & ~(std::uint32_t(1) << i)])
                is_minimal = false;
        if (is_minimal) minimal.push_back(mask);
    }
    if (minimal.empty())
        throw GoldPremisesError("no sufficient premise subset for instance " +
                                inst.instance_id);
    if (minimal.size() > 1)
        throw GoldPremisesError("gold premise set is not unique for instance " +
                                inst.instance_id);
    std::set<int> gold;
    for (int i = 0; i < n; ++i)
        if ((minimal[0] >> i) & 1u) gold.insert(i + 1);
    return gold;
}

// ---------------------------------------------------------------------------
// Instance construction.
// ---------------------------------------------------------------------------

struct SoundnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StrategyInapplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline FormulaPtr negate_simplified(const FormulaPtr& f) {
    if (f->kind == Connective::Not) return f->children[0];
    return lnot(f);
}

inline FormulaPtr substitute_predicate(const FormulaPtr& f, int from, int to) {
    if (f->kind == Connective::Atom) {
        if (f->predicate != from) return f;
        return atom(to, f->term);
    }
    auto copy = std::make_shared<Formula>();
    copy->kind = f->kind;
    for (const auto& c : f->children)
        copy->children.push_back(substitute_predicate(c, from, to));
    return copy;
}

inline FormulaPtr substitute_constant(const FormulaPtr& f, int from, int to) {
    if (f->kind == Connective::Atom) {
        if (f->term.kind != TermKind::Constant || f->term.constant != from)
            return f;
        return atom(f->predicate, cons(to));
    }
    auto copy = std::make_shared<Formula>();
    copy->kind = f->kind;
    for (const auto& c : f->children)
        copy->children.push_back(substitute_constant(c, from, to));
    return copy;
}

inline ArgumentInstance base_instance(const CatalogEntry& entry, const Ontology& o,
                                      const Binding& b, const std::string& id,
                                      std::uint64_t seed) {
    if (!binding_is_sound(entry, o, b))
        throw SoundnessError("binding violates the grounding plan for " +
                             scheme_code(entry.scheme.id));
    ArgumentInstance inst;
    inst.instance_id = id;
    inst.scheme = entry.scheme.id;
    inst.binding = b;
    inst.seed = seed;
    for (std::size_t i = 0; i < b.pathway_ids.size(); ++i)
        inst.pathway_names[static_cast<int>(i)] = o.node(b.pathway_ids[i]).name;
    for (std::size_t i = 0; i < b.gene_symbols.size(); ++i)
        inst.gene_names[static_cast<int>(i)] = b.gene_symbols[i];
    RenderBinding rb = inst.render_binding();
    for (const auto& p : entry.scheme.premises)
        inst.premises.push_back({render(p, rb), p, false});
    inst.conclusion = entry.scheme.conclusion;
    inst.conclusion_text = render(entry.scheme.conclusion, rb);
    inst.perturbation.permutation.resize(inst.premises.size());
    for (std::size_t i = 0; i < inst.premises.size(); ++i)
        inst.perturbation.permutation[i] = static_cast<int>(i);
    return inst;
}

}  // namespace detail

inline ArgumentInstance make_positive(const CatalogEntry& entry, const Ontology& o,
                                      const Binding& b, const std::string& id,
                                      std::uint64_t seed,
                                      EntailmentCache& cache =
                                          shared_entailment_cache()) {
    ArgumentInstance inst = detail::base_instance(entry, o, b, id, seed);
    inst.gold_label = true;
    inst.strategy = NegativeStrategy::None;
    inst.gold_premises = compute_gold_premises(inst, cache);
    return inst;
}

inline ArgumentInstance make_negative(const CatalogEntry& entry, const Ontology& o,
                                      const Binding& b, NegativeStrategy strategy,
                                      const std::string& id, std::uint64_t seed,
                                      EntailmentCache& cache =
                                          shared_entailment_cache()) {
    if (strategy == NegativeStrategy::None)
        throw std::invalid_argument("a negative instance needs a strategy");
    ArgumentInstance inst = detail::base_instance(entry, o, b, id, seed);
    inst.gold_label = false;
    inst.strategy = strategy;
    inst.gold_premises.clear();
    Rng rng(Rng::derive(seed, 0x6e65'67ULL));

    const auto core = inst.core_formulas();
    switch (strategy) {
        case NegativeStrategy::WrapperFlip: {
            FormulaPtr negated = detail::negate_simplified(inst.conclusion);
            if (cache.entails(core, negated))
                throw StrategyInapplicable("negated conclusion still entailed");
            std::string text;
            if (match_shape(negated)) {
                text = render(negated, inst.render_binding());
            } else {
                text = wrap_conclusion(inst.conclusion_text, Polarity::AssertFalse);
            }
            inst.conclusion = negated;
            inst.conclusion_text = text;
            break;
        }
        case NegativeStrategy::EntitySwap: {
            if (entry.scheme.constant_count == 0 ||
                !detail::references_constant(*inst.conclusion))
                throw StrategyInapplicable("conclusion names no gene");
            FormulaPtr swapped =
                detail::substitute_constant(inst.conclusion, 0, kSwapConstant);
            if (cache.entails(core, swapped))
                throw StrategyInapplicable(
                    "conclusion with a fresh gene is still entailed");
            const std::string& original = b.gene_symbols[0];
            std::string near_miss;
            for (int attempt = 0; attempt < 1000; ++attempt) {
                std::string candidate = original;
                std::size_t pos = rng.below(candidate.size());
                char replacement = static_cast<char>('A' + rng.below(26));
                candidate[pos] = replacement;
                if (candidate != original && !o.has_gene(candidate)) {
                    near_miss = candidate;
                    break;
                }
            }
            if (near_miss.empty())
                throw StrategyInapplicable("no collision-free near-miss symbol");
            inst.conclusion = swapped;
            inst.gene_names[kSwapConstant] = near_miss;
            inst.conclusion_text = render(swapped, inst.render_binding());
            break;
        }
        case NegativeStrategy::PathwaySwap: {
            Signature concl_sig = signature_of({inst.conclusion});
            std::vector<int> targets(concl_sig.predicates.rbegin(),
                                     concl_sig.predicates.rend());
            for (int slot : targets) {
                FormulaPtr swapped =
                    detail::substitute_predicate(inst.conclusion, slot,
                                                 kSwapPredicate);
                if (cache.entails(core, swapped)) continue;
                // Pick a replacement unrelated to the bound pathways and, when
                // the conclusion names a gene, not containing it.
                std::vector<std::string> candidates = o.pathway_list();
                rng.shuffle(candidates);
                for (const auto& t : candidates) {
                    bool ok = true;
                    for (const auto& bound : b.pathway_ids)
                        if (t == bound || o.is_ancestor(bound, t)) {
                            ok = false;
                            break;
                        }
                    if (ok && !b.gene_symbols.empty() &&
                        detail::references_constant(*inst.conclusion) &&
                        o.is_member(b.gene_symbols[0], t))
                        ok = false;
                    if (!ok) continue;
                    inst.conclusion = swapped;
                    inst.pathway_names[kSwapPredicate] = o.node(t).name;
                    inst.swap_pathway_id = t;
                    inst.conclusion_text = render(swapped, inst.render_binding());
                    return inst;
                }
            }
            throw StrategyInapplicable("no pathway swap breaks the entailment");
        }
        case NegativeStrategy::None:
            break;
    }
    return inst;
}

}  // namespace syllogen
