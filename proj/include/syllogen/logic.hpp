#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

namespace syllogen {

// ---------------------------------------------------------------------------
// Formula AST: monadic first-order logic with unary predicate placeholders
// (F, G, H, ...), constant placeholders (a, b, ...), a single bound variable
// per quantifier, and the connectives not/and/or/implies/forall.
// ---------------------------------------------------------------------------

enum class TermKind { Variable, Constant };

struct Term {
    TermKind kind = TermKind::Variable;
    int constant = -1;  // constant placeholder index when kind == Constant
};

inline Term var() { return Term{TermKind::Variable, -1}; }
inline Term cons(int index) { return Term{TermKind::Constant, index}; }

enum class Connective { Atom, Not, And, Or, Implies, ForAll };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    Connective kind = Connective::Atom;
    int predicate = -1;  // Atom only
    Term term;           // Atom only
    std::vector<FormulaPtr> children;
};

inline FormulaPtr atom(int predicate, Term t) {
    auto f = std::make_shared<Formula>();
    f->kind = Connective::Atom;
    f->predicate = predicate;
    f->term = t;
    return f;
}
inline FormulaPtr lnot(FormulaPtr a) {
    auto f = std::make_shared<Formula>();
    f->kind = Connective::Not;
    f->children = {std::move(a)};
    return f;
}
inline FormulaPtr land(FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = Connective::And;
    f->children = {std::move(a), std::move(b)};
    return f;
}
inline FormulaPtr lor(FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = Connective::Or;
    f->children = {std::move(a), std::move(b)};
    return f;
}
inline FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = Connective::Implies;
    f->children = {std::move(a), std::move(b)};
    return f;
}
inline FormulaPtr forall(FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = Connective::ForAll;
    f->children = {std::move(body)};
    return f;
}

inline std::string predicate_name(int index) {
    static const char* names[] = {"F", "G", "H", "I", "J", "K"};
    if (index >= 0 && index < 6) return names[index];
    return "P" + std::to_string(index);
}
inline std::string constant_name(int index) {
    static const char* names[] = {"a", "b", "c", "d"};
    if (index >= 0 && index < 4) return names[index];
    return "k" + std::to_string(index);
}

namespace detail {
inline void collect(const FormulaPtr& f, std::vector<int>& preds,
                    std::vector<int>& consts, int quantifier_depth,
                    bool* unbound) {
    if (f->kind == Connective::Atom) {
        if (std::find(preds.begin(), preds.end(), f->predicate) == preds.end())
            preds.push_back(f->predicate);
        if (f->term.kind == TermKind::Constant) {
            if (std::find(consts.begin(), consts.end(), f->term.constant) ==
                consts.end())
                consts.push_back(f->term.constant);
        } else if (quantifier_depth == 0) {
            *unbound = true;
        }
        return;
    }
    int depth = quantifier_depth + (f->kind == Connective::ForAll ? 1 : 0);
    for (const auto& c : f->children) collect(c, preds, consts, depth, unbound);
}
}  // namespace detail

// Predicate / constant placeholder indices occurring in a formula set.
struct Signature {
    std::vector<int> predicates;
    std::vector<int> constants;
};

inline Signature signature_of(const std::vector<FormulaPtr>& formulas) {
    Signature sig;
    bool unbound = false;
    for (const auto& f : formulas)
        detail::collect(f, sig.predicates, sig.constants, 0, &unbound);
    if (unbound)
        throw std::invalid_argument("formula has a variable outside any quantifier");
    std::sort(sig.predicates.begin(), sig.predicates.end());
    std::sort(sig.constants.begin(), sig.constants.end());
    return sig;
}

// ---------------------------------------------------------------------------
// Finite interpretations. Extensions are bitmasks over domain elements, so a
// quantifier body evaluates to the mask of satisfying elements with pure
// bitwise operations.
// ---------------------------------------------------------------------------

struct Interpretation {
    int domain_size = 1;
    std::vector<std::uint32_t> extensions;   // indexed by predicate placeholder
    std::vector<int> constant_values;        // indexed by constant placeholder

    std::uint32_t full_mask() const {
        return domain_size >= 32 ? 0xffffffffu
                                 : ((std::uint32_t(1) << domain_size) - 1);
    }
};

namespace detail {
// Mask of domain elements e such that f holds with the bound variable = e.
inline std::uint32_t eval_mask(const Formula& f, const Interpretation& m) {
    const std::uint32_t full = m.full_mask();
    switch (f.kind) {
        case Connective::Atom: {
            std::uint32_t ext = f.predicate < int(m.extensions.size())
                                    ? m.extensions[f.predicate]
                                    : 0;
            if (f.term.kind == TermKind::Variable) return ext;
            int e = m.constant_values.at(f.term.constant);
            return (ext >> e) & 1u ? full : 0;
        }
        case Connective::Not:
            return ~eval_mask(*f.children[0], m) & full;
        case Connective::And:
            return eval_mask(*f.children[0], m) & eval_mask(*f.children[1], m);
        case Connective::Or:
            return eval_mask(*f.children[0], m) | eval_mask(*f.children[1], m);
        case Connective::Implies:
            return (~eval_mask(*f.children[0], m) & full) |
                   eval_mask(*f.children[1], m);
        case Connective::ForAll:
            return eval_mask(*f.children[0], m) == full ? full : 0;
    }
    return 0;
}

inline bool references_constant(const Formula& f) {
    if (f.kind == Connective::Atom)
        return f.term.kind == TermKind::Constant;
    for (const auto& c : f.children)
        if (references_constant(*c)) return true;
    return false;
}
}  // namespace detail

inline bool eval_formula(const FormulaPtr& f, const Interpretation& m) {
    return detail::eval_mask(*f, m) == m.full_mask();
}

namespace detail {

// Flat postfix form of a formula; the enumeration loop evaluates it with a
// tiny mask stack instead of walking shared_ptr nodes.
struct CompiledFormula {
    enum class Op : std::uint8_t {
        AtomVar,    // push extension[a]
        AtomConst,  // push full/empty by constant b of predicate a
        Not,
        And,
        Or,
        Implies,
        ForAll,
    };
    struct Step {
        Op op;
        int a = 0;
        int b = 0;
    };
    std::vector<Step> steps;
    bool has_constant = false;

    static void emit(const Formula& f, CompiledFormula& out) {
        switch (f.kind) {
            case Connective::Atom:
                if (f.term.kind == TermKind::Variable) {
                    out.steps.push_back({Op::AtomVar, f.predicate, 0});
                } else {
                    out.steps.push_back({Op::AtomConst, f.predicate,
                                         f.term.constant});
                    out.has_constant = true;
                }
                return;
            case Connective::Not:
                emit(*f.children[0], out);
                out.steps.push_back({Op::Not});
                return;
            case Connective::And:
            case Connective::Or:
            case Connective::Implies:
                emit(*f.children[0], out);
                emit(*f.children[1], out);
                out.steps.push_back({f.kind == Connective::And ? Op::And
                                     : f.kind == Connective::Or ? Op::Or
                                                                : Op::Implies});
                return;
            case Connective::ForAll:
                emit(*f.children[0], out);
                out.steps.push_back({Op::ForAll});
                return;
        }
    }

    static CompiledFormula compile(const FormulaPtr& f) {
        CompiledFormula c;
        emit(*f, c);
        return c;
    }

    bool eval(const std::uint32_t* extensions, const int* constants,
              std::uint32_t full) const {
        std::uint32_t stack[32];
        int top = -1;
        for (const auto& s : steps) {
            switch (s.op) {
                case Op::AtomVar:
                    stack[++top] = extensions[s.a];
                    break;
                case Op::AtomConst:
                    stack[++top] =
                        (extensions[s.a] >> constants[s.b]) & 1u ? full : 0;
                    break;
                case Op::Not:
                    stack[top] = ~stack[top] & full;
                    break;
                case Op::And:
                    stack[top - 1] &= stack[top];
                    --top;
                    break;
                case Op::Or:
                    stack[top - 1] |= stack[top];
                    --top;
                    break;
                case Op::Implies:
                    stack[top - 1] = (~stack[top - 1] & full) | stack[top];
                    --top;
                    break;
                case Op::ForAll:
                    stack[top] = stack[top] == full ? full : 0;
                    break;
            }
        }
        return stack[0] == full;
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Entailment by exhaustive enumeration: every domain size up to max_domain,
// every predicate extension, every constant assignment. Sound and complete
// for this fragment when max_domain >= 2^k, k = number of predicates.
// ---------------------------------------------------------------------------

struct Countermodel {
    Interpretation interpretation;
    std::vector<int> predicates;  // placeholder indices the extensions refer to
    std::vector<int> constants;
};

inline std::optional<Countermodel> find_countermodel(
    const std::vector<FormulaPtr>& premises, const FormulaPtr& conclusion,
    int max_domain) {
    std::vector<FormulaPtr> all = premises;
    all.push_back(conclusion);
    Signature sig = signature_of(all);
    const int k = static_cast<int>(sig.predicates.size());
    const int c = static_cast<int>(sig.constants.size());

    int max_pred = -1, max_const = -1;
    for (int p : sig.predicates) max_pred = std::max(max_pred, p);
    for (int q : sig.constants) max_const = std::max(max_const, q);

    // Premises whose truth does not depend on constants can be rejected
    // before assignments are enumerated.
    std::vector<detail::CompiledFormula> free_premises, ground_premises;
    for (const auto& p : premises) {
        auto compiled = detail::CompiledFormula::compile(p);
        (compiled.has_constant ? ground_premises : free_premises)
            .push_back(std::move(compiled));
    }
    auto compiled_conclusion = detail::CompiledFormula::compile(conclusion);

    for (int n = 1; n <= max_domain; ++n) {
        if (std::uint64_t(n) * k > 30)
            throw std::invalid_argument(
                "extension search space exceeds 2^30; reduce max_domain or "
                "the number of predicates");
        const std::uint64_t ext_count = std::uint64_t(1) << (n * k);
        std::uint64_t assignments = 1;
        for (int i = 0; i < c; ++i) assignments *= n;

        // Scans [lo, hi) and reports the lowest (ext, asg) countermodel, so a
        // parallel split returns the same witness as a sequential scan.
        struct Hit {
            std::uint64_t ext = 0, asg = 0;
            Interpretation model;
        };
        std::atomic<std::uint64_t> best_ext{UINT64_MAX};
        auto scan = [&](std::uint64_t lo, std::uint64_t hi,
                        std::optional<Hit>& result) {
            Interpretation m;
            m.domain_size = n;
            m.extensions.assign(max_pred + 1, 0);
            m.constant_values.assign(max_const + 1, 0);
            const std::uint32_t elem_mask = m.full_mask();
            std::uint32_t* ext_data = m.extensions.data();
            int* const_data = m.constant_values.data();
            for (std::uint64_t ext = lo; ext < hi; ++ext) {
                if (ext >= best_ext.load(std::memory_order_relaxed)) return;
                std::uint64_t bits = ext;
                for (int i = 0; i < k; ++i) {
                    ext_data[sig.predicates[i]] =
                        static_cast<std::uint32_t>(bits) & elem_mask;
                    bits >>= n;
                }
                bool free_ok = true;
                for (const auto& p : free_premises)
                    if (!p.eval(ext_data, const_data, elem_mask)) {
                        free_ok = false;
                        break;
                    }
                if (!free_ok) continue;

                for (std::uint64_t asg = 0; asg < assignments; ++asg) {
                    std::uint64_t rest = asg;
                    for (int i = 0; i < c; ++i) {
                        const_data[sig.constants[i]] = static_cast<int>(rest % n);
                        rest /= n;
                    }
                    bool premises_ok = true;
                    for (const auto& p : ground_premises)
                        if (!p.eval(ext_data, const_data, elem_mask)) {
                            premises_ok = false;
                            break;
                        }
                    if (!premises_ok) continue;
                    if (!compiled_conclusion.eval(ext_data, const_data,
                                                  elem_mask)) {
                        result = Hit{ext, asg, m};
                        std::uint64_t seen = best_ext.load(std::memory_order_relaxed);
                        while (ext < seen &&
                               !best_ext.compare_exchange_weak(seen, ext)) {
                        }
                        return;
                    }
                }
            }
        };

        unsigned threads = std::thread::hardware_concurrency();
        if (threads == 0) threads = 1;
        threads = std::min<unsigned>({threads, 8u});
        if (ext_count < (std::uint64_t(1) << 16)) threads = 1;

        std::vector<std::optional<Hit>> hits(threads);
        if (threads == 1) {
            scan(0, ext_count, hits[0]);
        } else {
            std::vector<std::thread> workers;
            std::uint64_t chunk = (ext_count + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                std::uint64_t lo = t * chunk;
                std::uint64_t hi = std::min(ext_count, lo + chunk);
                workers.emplace_back(scan, lo, hi, std::ref(hits[t]));
            }
            for (auto& w : workers) w.join();
        }
        const Hit* best = nullptr;
        for (const auto& h : hits)
            if (h && (!best || h->ext < best->ext ||
                      (h->ext == best->ext && h->asg < best->asg)))
                best = &*h;
        if (best)
            return Countermodel{best->model, sig.predicates, sig.constants};
    }
    return std::nullopt;
}

inline bool entails(const std::vector<FormulaPtr>& premises,
                    const FormulaPtr& conclusion, int max_domain) {
    return !find_countermodel(premises, conclusion, max_domain).has_value();
}

// ---------------------------------------------------------------------------
// Scheme identifiers and the formal scheme record.
// ---------------------------------------------------------------------------

enum class SchemeBase {
    GeneralizedModusPonens,
    GeneralizedContraposition,
    HypotheticalSyllogism1,
    HypotheticalSyllogism3,
    GeneralizedModusTollens,
    DisjunctiveSyllogism,
    GeneralizedDilemma,
};

enum class SchemeVariant { Base, Negation, ComplexPredicates, DeMorgan };

constexpr int kSchemeBaseCount = 7;
constexpr int kSchemeVariantCount = 4;

struct SchemeId {
    SchemeBase base = SchemeBase::GeneralizedModusPonens;
    SchemeVariant variant = SchemeVariant::Base;

    bool operator==(const SchemeId&) const = default;
};

inline std::string base_code(SchemeBase b) {
    switch (b) {
        case SchemeBase::GeneralizedModusPonens: return "gmp";
        case SchemeBase::GeneralizedContraposition: return "gc";
        case SchemeBase::HypotheticalSyllogism1: return "hs1";
        case SchemeBase::HypotheticalSyllogism3: return "hs3";
        case SchemeBase::GeneralizedModusTollens: return "gmt";
        case SchemeBase::DisjunctiveSyllogism: return "ds";
        case SchemeBase::GeneralizedDilemma: return "gd";
    }
    return "?";
}
inline std::string base_display_name(SchemeBase b) {
    switch (b) {
        case SchemeBase::GeneralizedModusPonens: return "generalized modus ponens";
        case SchemeBase::GeneralizedContraposition: return "generalized contraposition";
        case SchemeBase::HypotheticalSyllogism1: return "hypothetical syllogism 1";
        case SchemeBase::HypotheticalSyllogism3: return "hypothetical syllogism 3";
        case SchemeBase::GeneralizedModusTollens: return "generalized modus tollens";
        case SchemeBase::DisjunctiveSyllogism: return "disjunctive syllogism";
        case SchemeBase::GeneralizedDilemma: return "generalized dilemma";
    }
    return "?";
}
inline std::string variant_code(SchemeVariant v) {
    switch (v) {
        case SchemeVariant::Base: return "base";
        case SchemeVariant::Negation: return "negation";
        case SchemeVariant::ComplexPredicates: return "complex";
        case SchemeVariant::DeMorgan: return "demorgan";
    }
    return "?";
}
inline std::string scheme_code(const SchemeId& id) {
    return base_code(id.base) + ":" + variant_code(id.variant);
}

inline std::optional<SchemeBase> parse_base_code(const std::string& s) {
    for (int i = 0; i < kSchemeBaseCount; ++i) {
        auto b = static_cast<SchemeBase>(i);
        if (base_code(b) == s) return b;
    }
    return std::nullopt;
}
inline std::optional<SchemeVariant> parse_variant_code(const std::string& s) {
    for (int i = 0; i < kSchemeVariantCount; ++i) {
        auto v = static_cast<SchemeVariant>(i);
        if (variant_code(v) == s) return v;
    }
    return std::nullopt;
}
inline std::optional<SchemeId> parse_scheme_code(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return std::nullopt;
    auto b = parse_base_code(s.substr(0, colon));
    auto v = parse_variant_code(s.substr(colon + 1));
    if (!b || !v) return std::nullopt;
    return SchemeId{*b, *v};
}

struct FormalScheme {
    SchemeId id;
    std::vector<FormulaPtr> premises;
    FormulaPtr conclusion;
    int predicate_count = 0;  // placeholders F.. are 0..predicate_count-1
    int constant_count = 0;   // placeholders a.. are 0..constant_count-1
};

struct ValidityReport {
    SchemeId scheme;
    bool entailed = false;
    std::optional<Countermodel> witness;
};

inline ValidityReport validate_premises(const SchemeId& id,
                                        const std::vector<FormulaPtr>& premises,
                                        const FormulaPtr& conclusion) {
    std::vector<FormulaPtr> all = premises;
    all.push_back(conclusion);
    int k = static_cast<int>(signature_of(all).predicates.size());
    int bound = std::max(8, 1 << k);
    ValidityReport report;
    report.scheme = id;
    report.witness = find_countermodel(premises, conclusion, bound);
    report.entailed = !report.witness.has_value();
    return report;
}

inline ValidityReport validate_scheme(const FormalScheme& s) {
    return validate_premises(s.id, s.premises, s.conclusion);
}

// ---------------------------------------------------------------------------
// JSON serialization (prefix notation) for audit and for the corpus files.
// ---------------------------------------------------------------------------

inline nlohmann::json formula_to_json(const FormulaPtr& f) {
    using nlohmann::json;
    switch (f->kind) {
        case Connective::Atom: {
            json term = f->term.kind == TermKind::Variable
                            ? json("x")
                            : json(constant_name(f->term.constant));
            return json::array({predicate_name(f->predicate), term});
        }
        case Connective::Not:
            return nlohmann::json::array({"not", formula_to_json(f->children[0])});
        case Connective::And:
            return nlohmann::json::array({"and", formula_to_json(f->children[0]),
                                          formula_to_json(f->children[1])});
        case Connective::Or:
            return nlohmann::json::array({"or", formula_to_json(f->children[0]),
                                          formula_to_json(f->children[1])});
        case Connective::Implies:
            return nlohmann::json::array({"implies",
                                          formula_to_json(f->children[0]),
                                          formula_to_json(f->children[1])});
        case Connective::ForAll:
            return nlohmann::json::array(
                {"forall", "x", formula_to_json(f->children[0])});
    }
    return nullptr;
}

inline FormulaPtr formula_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("malformed formula json");
    const std::string head = j.at(0).get<std::string>();
    if (head == "not") return lnot(formula_from_json(j.at(1)));
    if (head == "and")
        return land(formula_from_json(j.at(1)), formula_from_json(j.at(2)));
    if (head == "or")
        return lor(formula_from_json(j.at(1)), formula_from_json(j.at(2)));
    if (head == "implies")
        return implies(formula_from_json(j.at(1)), formula_from_json(j.at(2)));
    if (head == "forall") return forall(formula_from_json(j.at(2)));
    // atom: [predicate, term]
    int pred = -1;
    for (int i = 0; i < 64; ++i)
        if (predicate_name(i) == head) {
            pred = i;
            break;
        }
    if (pred < 0) throw std::invalid_argument("unknown predicate " + head);
    const std::string t = j.at(1).get<std::string>();
    if (t == "x") return atom(pred, var());
    for (int i = 0; i < 64; ++i)
        if (constant_name(i) == t) return atom(pred, cons(i));
    throw std::invalid_argument("unknown term " + t);
}

inline std::string formula_key(const FormulaPtr& f) {
    return formula_to_json(f).dump();
}

inline bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
    return formula_key(a) == formula_key(b);
}

inline nlohmann::json countermodel_to_json(const Countermodel& w) {
    nlohmann::json ext = nlohmann::json::object();
    for (int p : w.predicates) {
        std::vector<int> elems;
        for (int e = 0; e < w.interpretation.domain_size; ++e)
            if ((w.interpretation.extensions[p] >> e) & 1u) elems.push_back(e);
        ext[predicate_name(p)] = elems;
    }
    nlohmann::json consts = nlohmann::json::object();
    for (int q : w.constants)
        consts[constant_name(q)] = w.interpretation.constant_values[q];
    return nlohmann::json{{"domain_size", w.interpretation.domain_size},
                          {"extensions", ext},
                          {"constants", consts}};
}

}  // namespace syllogen
