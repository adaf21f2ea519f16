#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syllogen/logic.hpp"

namespace syllogen {

// ---------------------------------------------------------------------------
// English rendering of catalog formulas. Each supported formula shape has a
// pattern string whose slots are pathway positions {0},{1},{2} (in order of
// first occurrence in the formula) and the gene {a}. Pathways render as
// "<name> pathway", genes as "Gene <symbol>".
// ---------------------------------------------------------------------------

struct SentencePattern {
    std::string key;        // shape name
    std::string signature;  // positional-renamed formula, prefix notation
    std::string pattern;
};

struct RenderBinding {
    // Indexed by placeholder id; empty string means unbound.
    std::vector<std::string> pathway_names;
    std::vector<std::string> gene_symbols;

    const std::string& pathway(int slot) const {
        static const std::string empty;
        if (slot < 0 || slot >= static_cast<int>(pathway_names.size()))
            return empty;
        return pathway_names[slot];
    }
    const std::string& gene(int slot) const {
        static const std::string empty;
        if (slot < 0 || slot >= static_cast<int>(gene_symbols.size()))
            return empty;
        return gene_symbols[slot];
    }
};

enum class Polarity { None, AssertTrue, AssertFalse };

inline std::string wrap_conclusion(const std::string& sentence, Polarity p) {
    switch (p) {
        case Polarity::None: return sentence;
        case Polarity::AssertTrue: return "It is true that " + sentence;
        case Polarity::AssertFalse: return "It is false that " + sentence;
    }
    return sentence;
}

namespace detail {

// Rebuilds a formula with predicates/constants renamed to their order of
// first occurrence, so structurally identical shapes share one signature.
inline FormulaPtr rename_positional(const FormulaPtr& f, std::vector<int>& preds,
                                    std::vector<int>& consts) {
    if (f->kind == Connective::Atom) {
        auto it = std::find(preds.begin(), preds.end(), f->predicate);
        int p;
        if (it == preds.end()) {
            p = static_cast<int>(preds.size());
            preds.push_back(f->predicate);
        } else {
            p = static_cast<int>(it - preds.begin());
        }
        Term t = f->term;
        if (t.kind == TermKind::Constant) {
            auto ct = std::find(consts.begin(), consts.end(), t.constant);
            int c;
            if (ct == consts.end()) {
                c = static_cast<int>(consts.size());
                consts.push_back(t.constant);
            } else {
                c = static_cast<int>(ct - consts.begin());
            }
            t.constant = c;
        }
        return atom(p, t);
    }
    auto copy = std::make_shared<Formula>();
    copy->kind = f->kind;
    for (const auto& ch : f->children)
        copy->children.push_back(rename_positional(ch, preds, consts));
    return copy;
}

}  // namespace detail

struct ShapeMatch {
    const SentencePattern* pattern = nullptr;
    std::vector<int> predicate_slots;  // global placeholder per position
    std::vector<int> constant_slots;
};

inline const std::vector<SentencePattern>& sentence_patterns() {
    static const std::vector<SentencePattern> table = [] {
        auto pv = [](int p) { return atom(p, var()); };
        auto pa = [](int p) { return atom(p, cons(0)); };
        auto sig = [](const FormulaPtr& f) { return formula_key(f); };
        std::vector<SentencePattern> t;
        auto add = [&](const std::string& key, const FormulaPtr& skeleton,
                       const std::string& pattern) {
            t.push_back({key, sig(skeleton), pattern});
        };

        add("universal_implication", forall(implies(pv(0), pv(1))),
            "Every member of {0} pathway is a member of {1} pathway");
        add("universal_contrapositive",
            forall(implies(lnot(pv(0)), lnot(pv(1)))),
            "Every gene that is not a member of {0} pathway is not a member "
            "of {1} pathway");
        add("universal_conjunctive_antecedent",
            forall(implies(land(pv(0), pv(1)), pv(2))),
            "Every gene that is a member of {0} pathway and a member of {1} "
            "pathway is a member of {2} pathway");
        add("universal_no_conjunction", forall(lnot(land(pv(0), lnot(pv(1))))),
            "No gene is a member of {0} pathway and not a member of {1} "
            "pathway");
        add("universal_disjunctive_consequent",
            forall(implies(pv(0), lor(pv(1), pv(2)))),
            "Every member of {0} pathway is a member of {1} pathway or a "
            "member of {2} pathway");
        add("universal_negative_disjunctive",
            forall(implies(land(lnot(pv(0)), lnot(pv(1))), lnot(pv(2)))),
            "Every gene that is not a member of {0} pathway and not a member "
            "of {1} pathway is not a member of {2} pathway");
        add("universal_mixed_antecedent",
            forall(implies(land(pv(0), lnot(pv(1))), pv(2))),
            "Every gene that is a member of {0} pathway and not a member of "
            "{1} pathway is a member of {2} pathway");
        add("universal_conjunctive_consequent",
            forall(implies(pv(0), land(pv(1), pv(2)))),
            "Every member of {0} pathway is a member of {1} pathway and a "
            "member of {2} pathway");
        add("atomic", pa(0), "Gene {a} is a member of {0} pathway");
        add("negated_atomic", lnot(pa(0)),
            "Gene {a} is not a member of {0} pathway");
        add("conjunction", land(pa(0), pa(1)),
            "Gene {a} is a member of {0} pathway and Gene {a} is a member of "
            "{1} pathway");
        add("conjunction_mixed", land(pa(0), lnot(pa(1))),
            "Gene {a} is a member of {0} pathway and Gene {a} is not a member "
            "of {1} pathway");
        add("disjunction", lor(pa(0), pa(1)),
            "Gene {a} is a member of {0} pathway or Gene {a} is a member of "
            "{1} pathway");
        add("negated_disjunction_mixed", lnot(lor(lnot(pa(0)), pa(1))),
            "It is not the case that Gene {a} is not a member of {0} pathway "
            "or Gene {a} is a member of {1} pathway");
        add("negated_conjunction_negatives", lnot(land(lnot(pa(0)), lnot(pa(1)))),
            "It is not the case that Gene {a} is not a member of {0} pathway "
            "and Gene {a} is not a member of {1} pathway");
        add("negated_conjunction", lnot(land(pa(0), pa(1))),
            "It is not the case that Gene {a} is a member of {0} pathway and "
            "Gene {a} is a member of {1} pathway");
        add("negated_disjunction_negatives", lnot(lor(lnot(pa(0)), lnot(pa(1)))),
            "It is not the case that Gene {a} is not a member of {0} pathway "
            "or Gene {a} is not a member of {1} pathway");
        add("disjunction_negatives", lor(lnot(pa(0)), lnot(pa(1))),
            "Gene {a} is not a member of {0} pathway or Gene {a} is not a "
            "member of {1} pathway");
        add("conditional", implies(pa(0), pa(1)),
            "If Gene {a} is a member of {0} pathway, then Gene {a} is a "
            "member of {1} pathway");
        add("conditional_negatives", implies(lnot(pa(0)), lnot(pa(1))),
            "If Gene {a} is not a member of {0} pathway, then Gene {a} is not "
            "a member of {1} pathway");
        add("conditional_negated_conjunction",
            implies(lnot(pa(0)), lnot(land(pa(1), pa(2)))),
            "If Gene {a} is not a member of {0} pathway, then it is not the "
            "case that Gene {a} is a member of {1} pathway and Gene {a} is a "
            "member of {2} pathway");
        add("conditional_conjunctive_consequent",
            implies(pa(0), land(pa(1), pa(2))),
            "If Gene {a} is a member of {0} pathway, then Gene {a} is a "
            "member of {1} pathway and Gene {a} is a member of {2} pathway");
        return t;
    }();
    return table;
}

inline std::optional<ShapeMatch> match_shape(const FormulaPtr& f) {
    std::vector<int> preds, consts;
    FormulaPtr renamed = detail::rename_positional(f, preds, consts);
    std::string sig = formula_key(renamed);
    for (const auto& p : sentence_patterns())
        if (p.signature == sig) return ShapeMatch{&p, preds, consts};
    return std::nullopt;
}

// Deterministic English sentence for a bound catalog formula.
inline std::string render(const FormulaPtr& f, const RenderBinding& binding) {
    auto m = match_shape(f);
    if (!m)
        throw std::invalid_argument("no sentence pattern for formula " +
                                    formula_key(f));
    std::string out = m->pattern->pattern;
    auto substitute = [&out](const std::string& slot, const std::string& value) {
        std::size_t pos = 0;
        while ((pos = out.find(slot, pos)) != std::string::npos) {
            out.replace(pos, slot.size(), value);
            pos += value.size();
        }
    };
    for (std::size_t i = 0; i < m->predicate_slots.size(); ++i) {
        const std::string& name = binding.pathway(m->predicate_slots[i]);
        if (name.empty())
            throw std::invalid_argument("unbound pathway placeholder " +
                                        predicate_name(m->predicate_slots[i]));
        substitute("{" + std::to_string(i) + "}", name);
    }
    if (!m->constant_slots.empty()) {
        const std::string& symbol = binding.gene(m->constant_slots[0]);
        if (symbol.empty())
            throw std::invalid_argument("unbound gene placeholder " +
                                        constant_name(m->constant_slots[0]));
        substitute("{a}", symbol);
    }
    return out;
}

// Recovers the slot values of a rendered sentence; used to audit that
// rendering is invertible. More specific patterns are tried first.
struct ParsedSentence {
    std::string key;
    std::vector<std::string> pathway_names;  // by pattern position
    std::string gene_symbol;
};

inline std::optional<ParsedSentence> parse_rendered(const std::string& sentence) {
    struct Piece {
        bool literal;
        std::string text;  // literal text or slot name
    };
    auto split_pattern = [](const std::string& pattern) {
        std::vector<Piece> pieces;
        std::size_t pos = 0;
        while (pos < pattern.size()) {
            std::size_t open = pattern.find('{', pos);
            if (open == std::string::npos) {
                pieces.push_back({true, pattern.substr(pos)});
                break;
            }
            if (open > pos) pieces.push_back({true, pattern.substr(pos, open - pos)});
            std::size_t close = pattern.find('}', open);
            pieces.push_back({false, pattern.substr(open + 1, close - open - 1)});
            pos = close + 1;
        }
        return pieces;
    };

    std::vector<const SentencePattern*> ordered;
    for (const auto& p : sentence_patterns()) ordered.push_back(&p);
    std::sort(ordered.begin(), ordered.end(),
              [](const SentencePattern* a, const SentencePattern* b) {
                  return a->pattern.size() > b->pattern.size();
              });

    for (const auto* p : ordered) {
        auto pieces = split_pattern(p->pattern);
        std::map<std::string, std::string> captures;
        std::size_t pos = 0;
        bool ok = true;
        std::optional<std::string> pending_slot;
        auto take = [&](const std::string& slot, std::size_t end) {
            std::string value = sentence.substr(pos, end - pos);
            auto prev = captures.find(slot);
            if (value.empty() || (prev != captures.end() && prev->second != value))
                return false;
            captures[slot] = value;
            return true;
        };
        for (std::size_t i = 0; i < pieces.size() && ok; ++i) {
            const auto& piece = pieces[i];
            if (piece.literal) {
                if (!pending_slot) {
                    if (sentence.compare(pos, piece.text.size(), piece.text) != 0)
                        ok = false;
                    else
                        pos += piece.text.size();
                } else {
                    std::size_t end;
                    if (i + 1 == pieces.size()) {
                        if (sentence.size() < pos + piece.text.size() ||
                            sentence.compare(sentence.size() - piece.text.size(),
                                             piece.text.size(), piece.text) != 0) {
                            ok = false;
                            break;
                        }
                        end = sentence.size() - piece.text.size();
                    } else {
                        end = sentence.find(piece.text, pos);
                        if (end == std::string::npos) {
                            ok = false;
                            break;
                        }
                    }
                    ok = take(*pending_slot, end);
                    pending_slot.reset();
                    pos = end + piece.text.size();
                }
            } else {
                pending_slot = piece.text;
                if (i + 1 == pieces.size()) {
                    ok = take(*pending_slot, sentence.size());
                    pending_slot.reset();
                    pos = sentence.size();
                }
            }
        }
        if (!ok || pos != sentence.size() || pending_slot) continue;
        ParsedSentence result;
        result.key = p->key;
        if (captures.count("a")) result.gene_symbol = captures["a"];
        for (int s = 0; s < 3; ++s) {
            auto it = captures.find(std::to_string(s));
            if (it == captures.end()) break;
            result.pathway_names.push_back(it->second);
        }
        return result;
    }
    return std::nullopt;
}

inline nlohmann::json pattern_table_to_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : sentence_patterns())
        arr.push_back({{"key", p.key},
                       {"signature", nlohmann::json::parse(p.signature)},
                       {"pattern", p.pattern}});
    return arr;
}

}  // namespace syllogen
