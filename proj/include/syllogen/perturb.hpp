#pragma once

#include <set>
#include <string>
#include <vector>

#include "syllogen/instantiate.hpp"

namespace syllogen {

struct DistractorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_symbol_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9');
}

// Replaces the token "Gene <old>" by "Gene <new>" everywhere, respecting
// symbol boundaries.
inline std::string replace_gene_token(const std::string& text,
                                      const std::string& from,
                                      const std::string& to) {
    const std::string needle = "Gene " + from;
    std::string out;
    std::size_t pos = 0;
    while (true) {
        std::size_t found = text.find(needle, pos);
        if (found == std::string::npos) {
            out += text.substr(pos);
            return out;
        }
        std::size_t after = found + needle.size();
        if (after < text.size() && is_symbol_char(text[after])) {
            out += text.substr(pos, after - pos);
            pos = after;
            continue;
        }
        out += text.substr(pos, found - pos);
        out += "Gene " + to;
        pos = after;
    }
}

}  // namespace detail

// Reorders premises by a seed-derived uniform permutation; gold premise
// numbers are remapped so they keep pointing at the same sentences.
inline ArgumentInstance permute_premises(const ArgumentInstance& inst,
                                         std::uint64_t seed) {
    ArgumentInstance out = inst;
    const std::size_t n = inst.premises.size();
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    Rng rng(Rng::derive(seed, 0x7065'726dULL));
    rng.shuffle(perm);

    out.premises.clear();
    for (std::size_t i = 0; i < n; ++i) out.premises.push_back(inst.premises[perm[i]]);

    std::vector<int> composed(n);
    for (std::size_t i = 0; i < n; ++i)
        composed[i] = inst.perturbation.permutation[perm[i]];
    out.perturbation.permutation = composed;

    out.gold_premises.clear();
    for (int number : inst.gold_premises) {
        for (std::size_t i = 0; i < n; ++i)
            if (perm[i] == number - 1) {
                out.gold_premises.insert(static_cast<int>(i) + 1);
                break;
            }
    }
    return out;
}

// Appends n true-but-irrelevant premises drawn from ontology regions sharing
// no pathway and no gene with the instance. The gold label and gold premise
// sentences are unchanged; distractor vocabulary uses fresh placeholders so
// the formal argument is untouched.
inline ArgumentInstance add_distractors(const ArgumentInstance& inst, int n,
                                        const Ontology& o, std::uint64_t seed) {
    if (n < 0 || n > 5)
        throw std::invalid_argument("distractor count must be between 0 and 5");
    ArgumentInstance out = inst;
    if (n == 0) return out;

    std::set<std::string> forbidden_pathways(inst.binding.pathway_ids.begin(),
                                             inst.binding.pathway_ids.end());
    if (!inst.swap_pathway_id.empty())
        forbidden_pathways.insert(inst.swap_pathway_id);
    std::set<std::string> forbidden_genes(inst.binding.gene_symbols.begin(),
                                          inst.binding.gene_symbols.end());
    for (const auto& [slot, name] : inst.gene_names) forbidden_genes.insert(name);

    Rng rng(Rng::derive(seed, 0x6469'7374ULL));
    std::set<std::string> used_sentences;
    for (const auto& p : out.premises) used_sentences.insert(p.text);

    int next_pred = kDistractorPredicateBase;
    for (const auto& [slot, name] : out.pathway_names)
        next_pred = std::max(next_pred, slot + 1);
    int next_const = kDistractorConstantBase;
    for (const auto& [slot, name] : out.gene_names)
        next_const = std::max(next_const, slot + 1);

    int added = 0;
    int attempts = 0;
    const int max_attempts = 2000 * n;
    while (added < n) {
        if (++attempts > max_attempts)
            throw DistractorError(
                "ontology lacks enough disjoint facts for the requested "
                "distractors");
        bool universal = rng.below(2) == 0;
        if (universal) {
            if (o.subsumption_edges().empty()) continue;
            const auto& [child, parent] = o.subsumption_edges()[rng.below(o.subsumption_edges().size())];
            if (forbidden_pathways.count(child) || forbidden_pathways.count(parent))
                continue;
            int pc = next_pred, pp = next_pred + 1;
            FormulaPtr f = forall(implies(atom(pc, var()), atom(pp, var())));
            ArgumentInstance probe = out;
            probe.pathway_names[pc] = o.node(child).name;
            probe.pathway_names[pp] = o.node(parent).name;
            std::string text = render(f, probe.render_binding());
            if (used_sentences.count(text)) continue;
            out.pathway_names[pc] = o.node(child).name;
            out.pathway_names[pp] = o.node(parent).name;
            out.premises.push_back({text, f, true});
            out.perturbation.distractor_sources.push_back(
                {"universal", child, parent});
            next_pred += 2;
            used_sentences.insert(text);
        } else {
            if (o.gene_list().empty()) continue;
            const std::string& gene = o.gene_list()[rng.below(o.gene_list().size())];
            if (forbidden_genes.count(gene)) continue;
            std::set<std::string> closure;
            for (const auto& d : o.gene(gene).direct_memberships) {
                closure.insert(d);
                for (const auto& anc : o.ancestors(d)) closure.insert(anc);
            }
            std::vector<std::string> options;
            for (const auto& p : closure)
                if (!forbidden_pathways.count(p)) options.push_back(p);
            if (options.empty()) continue;
            const std::string& pathway = options[rng.below(options.size())];
            int pc = next_pred, cc = next_const;
            FormulaPtr f = atom(pc, cons(cc));
            ArgumentInstance probe = out;
            probe.pathway_names[pc] = o.node(pathway).name;
            probe.gene_names[cc] = gene;
            std::string text = render(f, probe.render_binding());
            if (used_sentences.count(text)) continue;
            out.pathway_names[pc] = o.node(pathway).name;
            out.gene_names[cc] = gene;
            out.premises.push_back({text, f, true});
            out.perturbation.distractor_sources.push_back(
                {"membership", gene, pathway});
            next_pred += 1;
            next_const += 1;
            used_sentences.insert(text);
        }
        out.perturbation.permutation.push_back(
            static_cast<int>(out.perturbation.permutation.size()));
        ++added;
    }
    out.perturbation.n_distractors += added;
    return out;
}

// Consistently replaces every gene symbol by a fresh synthetic name:
// uppercase letters, length 4, absent from the ontology. The formal
// structure, labels and gold premises are untouched.
inline ArgumentInstance synthesize_gene_names(const ArgumentInstance& inst,
                                              const Ontology& o,
                                              std::uint64_t seed) {
    ArgumentInstance out = inst;
    Rng rng(Rng::derive(seed, 0x7379'6eULL));

    std::set<std::string> in_use;
    for (const auto& [slot, name] : inst.gene_names) in_use.insert(name);

    std::map<std::string, std::string> mapping;
    std::set<std::string> assigned;
    for (const auto& symbol : in_use) {
        std::string fresh;
        for (int attempt = 0; attempt < 10000; ++attempt) {
            std::string candidate;
            for (int i = 0; i < 4; ++i)
                candidate.push_back(static_cast<char>('A' + rng.below(26)));
            if (!o.has_gene(candidate) && !assigned.count(candidate) &&
                !in_use.count(candidate)) {
                fresh = candidate;
                break;
            }
        }
        if (fresh.empty())
            throw std::runtime_error("could not draw a collision-free synthetic name");
        mapping[symbol] = fresh;
        assigned.insert(fresh);
    }

    for (auto& [slot, name] : out.gene_names) name = mapping.at(name);
    for (auto& p : out.premises)
        for (const auto& [from, to] : mapping)
            p.text = detail::replace_gene_token(p.text, from, to);
    for (const auto& [from, to] : mapping)
        out.conclusion_text = detail::replace_gene_token(out.conclusion_text, from, to);
    for (const auto& [from, to] : mapping)
        out.perturbation.synthetic_name_map[from] = to;
    out.synthetic_names = true;
    return out;
}

}  // namespace syllogen
