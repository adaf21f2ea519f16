#pragma once

#include <vector>

#include "syllogen/logic.hpp"

namespace syllogen {

// ---------------------------------------------------------------------------
// How a scheme's premises are made true against the pathway hierarchy. Every
// universal premise in the catalog reduces to one or two subsumption edges
// ("every gene in the child pathway is in the ancestor"), and every ground
// premise to membership facts about the bound gene. A pathway slot with no
// semantic constraint still participates in the injectivity requirement.
// ---------------------------------------------------------------------------

struct GroundConstraint {
    enum class Kind { Edge, Member, NonMember, FreePathway };
    Kind kind = Kind::Edge;
    int pathway_a = -1;  // Edge: descendant slot; Member/NonMember/Free: slot
    int pathway_b = -1;  // Edge: ancestor slot
    int constant = -1;   // Member/NonMember: constant slot
};

struct GroundingPlan {
    std::vector<GroundConstraint> constraints;
};

namespace plan {
inline GroundConstraint edge(int child, int parent) {
    return {GroundConstraint::Kind::Edge, child, parent, -1};
}
inline GroundConstraint member(int constant, int pathway) {
    return {GroundConstraint::Kind::Member, pathway, -1, constant};
}
inline GroundConstraint non_member(int constant, int pathway) {
    return {GroundConstraint::Kind::NonMember, pathway, -1, constant};
}
inline GroundConstraint free_pathway(int pathway) {
    return {GroundConstraint::Kind::FreePathway, pathway, -1, -1};
}
}  // namespace plan

struct CatalogEntry {
    FormalScheme scheme;
    GroundingPlan grounding;
};

namespace detail {

// Placeholder indices used throughout the catalog.
constexpr int F = 0, G = 1, H = 2;
constexpr int A = 0;

inline FormulaPtr pv(int p) { return atom(p, var()); }
inline FormulaPtr pa(int p) { return atom(p, cons(A)); }

inline CatalogEntry make_entry(SchemeBase base, SchemeVariant variant,
                               std::vector<FormulaPtr> premises,
                               FormulaPtr conclusion,
                               std::vector<GroundConstraint> constraints) {
    CatalogEntry e;
    e.scheme.id = {base, variant};
    e.scheme.premises = std::move(premises);
    e.scheme.conclusion = std::move(conclusion);
    std::vector<FormulaPtr> all = e.scheme.premises;
    all.push_back(e.scheme.conclusion);
    Signature sig = signature_of(all);
    e.scheme.predicate_count = static_cast<int>(sig.predicates.size());
    e.scheme.constant_count = static_cast<int>(sig.constants.size());
    e.grounding.constraints = std::move(constraints);
    return e;
}

inline std::vector<CatalogEntry> build_catalog() {
    using namespace plan;
    std::vector<CatalogEntry> entries;
    entries.reserve(28);

    auto add = [&](SchemeBase b, SchemeVariant v,
                   std::vector<FormulaPtr> prem, FormulaPtr concl,
                   std::vector<GroundConstraint> cs) {
        entries.push_back(make_entry(b, v, std::move(prem), std::move(concl),
                                     std::move(cs)));
    };

    const auto GMP = SchemeBase::GeneralizedModusPonens;
    const auto GC = SchemeBase::GeneralizedContraposition;
    const auto HS1 = SchemeBase::HypotheticalSyllogism1;
    const auto HS3 = SchemeBase::HypotheticalSyllogism3;
    const auto GMT = SchemeBase::GeneralizedModusTollens;
    const auto DS = SchemeBase::DisjunctiveSyllogism;
    const auto GD = SchemeBase::GeneralizedDilemma;
    const auto VB = SchemeVariant::Base;
    const auto VN = SchemeVariant::Negation;
    const auto VC = SchemeVariant::ComplexPredicates;
    const auto VD = SchemeVariant::DeMorgan;

    // generalized modus ponens
    add(GMP, VB, {forall(implies(pv(F), pv(G))), pa(F)}, pa(G),
        {edge(F, G), member(A, F)});
    add(GMP, VN, {forall(implies(lnot(pv(G)), lnot(pv(F)))), pa(F)}, pa(G),
        {edge(F, G), member(A, F)});
    add(GMP, VC, {forall(implies(land(pv(F), pv(G)), pv(H))), land(pa(F), pa(G))},
        pa(H), {edge(F, H), member(A, F), member(A, G)});
    add(GMP, VD, {forall(lnot(land(pv(F), lnot(pv(G))))), pa(F)}, pa(G),
        {edge(F, G), member(A, F)});

    // generalized contraposition
    add(GC, VB, {forall(implies(pv(F), pv(G))), lnot(pa(G))},
        implies(lnot(pa(G)), lnot(pa(F))), {edge(F, G), non_member(A, G)});
    add(GC, VN, {forall(implies(lnot(pv(G)), lnot(pv(F)))), lnot(pa(G))},
        implies(lnot(pa(G)), lnot(pa(F))), {edge(F, G), non_member(A, G)});
    add(GC, VC, {forall(implies(land(pv(F), pv(H)), pv(G))), lnot(pa(G))},
        implies(lnot(pa(G)), lnot(land(pa(F), pa(H)))),
        {edge(F, G), free_pathway(H), non_member(A, G)});
    add(GC, VD, {forall(lnot(land(pv(F), lnot(pv(G))))), lnot(pa(G))},
        implies(lnot(pa(G)), lnot(pa(F))), {edge(F, G), non_member(A, G)});

    // hypothetical syllogism 1 (universal conclusion)
    add(HS1, VB, {forall(implies(pv(F), pv(G))), forall(implies(pv(G), pv(H)))},
        forall(implies(pv(F), pv(H))), {edge(F, G), edge(G, H)});
    add(HS1, VN,
        {forall(implies(lnot(pv(G)), lnot(pv(F)))),
         forall(implies(lnot(pv(H)), lnot(pv(G))))},
        forall(implies(pv(F), pv(H))), {edge(F, G), edge(G, H)});
    add(HS1, VC, {forall(implies(pv(F), pv(G))), forall(implies(pv(G), pv(H)))},
        forall(implies(pv(F), land(pv(G), pv(H)))), {edge(F, G), edge(G, H)});
    add(HS1, VD,
        {forall(lnot(land(pv(F), lnot(pv(G))))),
         forall(lnot(land(pv(G), lnot(pv(H)))))},
        forall(implies(pv(F), pv(H))), {edge(F, G), edge(G, H)});

    // hypothetical syllogism 3 (conclusion instantiated at a)
    add(HS3, VB, {forall(implies(pv(F), pv(G))), forall(implies(pv(G), pv(H)))},
        implies(pa(F), pa(H)), {edge(F, G), edge(G, H), member(A, F)});
    add(HS3, VN,
        {forall(implies(lnot(pv(G)), lnot(pv(F)))),
         forall(implies(lnot(pv(H)), lnot(pv(G))))},
        implies(pa(F), pa(H)), {edge(F, G), edge(G, H), member(A, F)});
    add(HS3, VC, {forall(implies(pv(F), pv(G))), forall(implies(pv(G), pv(H)))},
        implies(pa(F), land(pa(G), pa(H))),
        {edge(F, G), edge(G, H), member(A, F)});
    add(HS3, VD,
        {forall(lnot(land(pv(F), lnot(pv(G))))),
         forall(lnot(land(pv(G), lnot(pv(H)))))},
        implies(pa(F), pa(H)), {edge(F, G), edge(G, H), member(A, F)});

    // generalized modus tollens
    add(GMT, VB, {forall(implies(pv(F), pv(G))), lnot(pa(G))}, lnot(pa(F)),
        {edge(F, G), non_member(A, G)});
    add(GMT, VN, {forall(implies(lnot(pv(G)), lnot(pv(F)))), lnot(pa(G))},
        lnot(pa(F)), {edge(F, G), non_member(A, G)});
    add(GMT, VC, {forall(implies(land(pv(F), pv(G)), pv(H))), lnot(pa(H))},
        lnot(land(pa(F), pa(G))),
        {edge(F, H), free_pathway(G), non_member(A, H)});
    add(GMT, VD, {forall(implies(land(pv(F), pv(G)), pv(H))), lnot(pa(H))},
        lor(lnot(pa(F)), lnot(pa(G))),
        {edge(F, H), free_pathway(G), non_member(A, H)});

    // disjunctive syllogism
    add(DS, VB, {forall(implies(pv(F), lor(pv(G), pv(H)))), land(pa(F), lnot(pa(G)))},
        pa(H), {edge(F, H), member(A, F), non_member(A, G)});
    add(DS, VN,
        {forall(implies(land(lnot(pv(G)), lnot(pv(H))), lnot(pv(F)))),
         land(pa(F), lnot(pa(G)))},
        pa(H), {edge(F, H), member(A, F), non_member(A, G)});
    add(DS, VC, {forall(implies(pv(F), lor(pv(G), pv(H)))), land(pa(F), lnot(pa(G)))},
        land(pa(F), pa(H)), {edge(F, H), member(A, F), non_member(A, G)});
    add(DS, VD, {forall(implies(pv(F), lor(pv(G), pv(H)))), lnot(lor(lnot(pa(F)), pa(G)))},
        pa(H), {edge(F, H), member(A, F), non_member(A, G)});

    // generalized dilemma
    add(GD, VB,
        {forall(implies(pv(F), pv(H))), forall(implies(pv(G), pv(H))),
         lor(pa(F), pa(G))},
        pa(H), {edge(F, H), edge(G, H), member(A, F)});
    add(GD, VN,
        {forall(implies(lnot(pv(H)), lnot(pv(F)))),
         forall(implies(lnot(pv(H)), lnot(pv(G)))), lor(pa(F), pa(G))},
        pa(H), {edge(F, H), edge(G, H), member(A, F)});
    add(GD, VC,
        {forall(implies(land(pv(F), pv(G)), pv(H))),
         forall(implies(land(pv(F), lnot(pv(G))), pv(H))), pa(F)},
        pa(H), {edge(F, H), free_pathway(G), member(A, F)});
    add(GD, VD,
        {forall(implies(pv(F), pv(H))), forall(implies(pv(G), pv(H))),
         lnot(land(lnot(pa(F)), lnot(pa(G))))},
        pa(H), {edge(F, H), edge(G, H), member(A, F)});

    return entries;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = detail::build_catalog();
    return entries;
}

inline std::vector<FormalScheme> scheme_catalog() {
    std::vector<FormalScheme> out;
    out.reserve(catalog_entries().size());
    for (const auto& e : catalog_entries()) out.push_back(e.scheme);
    return out;
}

inline const CatalogEntry* find_entry(const SchemeId& id) {
    for (const auto& e : catalog_entries())
        if (e.scheme.id == id) return &e;
    return nullptr;
}

inline nlohmann::json catalog_to_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : catalog_entries()) {
        nlohmann::json prem = nlohmann::json::array();
        for (const auto& p : e.scheme.premises) prem.push_back(formula_to_json(p));
        arr.push_back({{"scheme", scheme_code(e.scheme.id)},
                       {"premises", prem},
                       {"conclusion", formula_to_json(e.scheme.conclusion)}});
    }
    return arr;
}

}  // namespace syllogen
