#pragma once

#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

namespace syllogen {

struct IngestError : std::runtime_error {
    IngestError(std::size_t line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " +
                             message),
          line(line_number) {}
    explicit IngestError(const std::string& message)
        : std::runtime_error(message), line(0) {}
    std::size_t line;
};

struct PathwayNode {
    std::string id;
    std::string name;
    std::vector<std::string> parents;  // sorted, unique
    int level = -1;                    // shortest parent chain to a root
};

struct GeneRecord {
    std::string symbol;
    std::vector<std::string> direct_memberships;  // sorted, unique
};

struct LevelStats {
    int level = 0;
    std::size_t unique_pathway_names = 0;
    std::size_t unique_gene_symbols = 0;
};

// Immutable after ingest; all queries are read-only.
class Ontology {
public:
    std::string version_tag;

    const std::map<std::string, PathwayNode>& nodes() const { return nodes_; }
    const std::map<std::string, GeneRecord>& genes() const { return genes_; }
    const std::vector<std::string>& roots() const { return roots_; }

    bool has_node(const std::string& id) const { return nodes_.count(id) > 0; }
    bool has_gene(const std::string& symbol) const {
        return genes_.count(symbol) > 0;
    }

    const PathwayNode& node(const std::string& id) const {
        auto it = nodes_.find(id);
        if (it == nodes_.end())
            throw std::out_of_range("unknown pathway id: " + id);
        return it->second;
    }
    const GeneRecord& gene(const std::string& symbol) const {
        auto it = genes_.find(symbol);
        if (it == genes_.end())
            throw std::out_of_range("unknown gene symbol: " + symbol);
        return it->second;
    }

    // Transitive parents, deduplicated, nearest parent first, root last.
    const std::vector<std::string>& ancestors(const std::string& id) const {
        auto it = ancestor_order_.find(id);
        if (it == ancestor_order_.end())
            throw std::out_of_range("unknown pathway id: " + id);
        return it->second;
    }

    bool is_ancestor(const std::string& descendant,
                     const std::string& ancestor) const {
        auto it = ancestor_set_.find(descendant);
        if (it == ancestor_set_.end())
            throw std::out_of_range("unknown pathway id: " + descendant);
        return it->second.count(ancestor) > 0;
    }

    // Derived read-only indexes for samplers: all (descendant, ancestor)
    // pairs, sorted id/symbol lists, and the per-pathway transitive member
    // list.
    const std::vector<std::pair<std::string, std::string>>& subsumption_edges()
        const {
        return edges_;
    }
    const std::vector<std::string>& pathway_list() const { return pathway_ids_; }
    const std::vector<std::string>& gene_list() const { return gene_symbols_; }
    const std::vector<std::string>& members_of(const std::string& pathway) const {
        static const std::vector<std::string> empty;
        auto it = members_closure_.find(pathway);
        return it == members_closure_.end() ? empty : it->second;
    }

    // True iff the pathway is a direct membership of the gene or an ancestor
    // of one (closure evaluated on demand over the stored facts).
    bool is_member(const std::string& symbol, const std::string& pathway) const {
        const GeneRecord& g = gene(symbol);
        if (!has_node(pathway))
            throw std::out_of_range("unknown pathway id: " + pathway);
        for (const auto& direct : g.direct_memberships) {
            if (direct == pathway) return true;
            if (is_ancestor(direct, pathway)) return true;
        }
        return false;
    }

    std::vector<LevelStats> dictionary_stats() const {
        std::map<int, std::set<std::string>> names;
        std::map<int, std::set<std::string>> symbols;
        for (const auto& [id, n] : nodes_) names[n.level].insert(n.name);
        for (const auto& [sym, g] : genes_)
            for (const auto& p : g.direct_memberships)
                symbols[node(p).level].insert(sym);
        std::vector<LevelStats> rows;
        for (const auto& [level, nameset] : names) {
            LevelStats row;
            row.level = level;
            row.unique_pathway_names = nameset.size();
            auto it = symbols.find(level);
            row.unique_gene_symbols = it == symbols.end() ? 0 : it->second.size();
            rows.push_back(row);
        }
        return rows;
    }

    void export_jsonl(std::ostream& out) const {
        for (const auto& [id, n] : nodes_) {
            nlohmann::json j{{"kind", "pathway"},
                             {"id", n.id},
                             {"name", n.name},
                             {"parents", n.parents}};
            out << j.dump() << "\n";
        }
        for (const auto& [sym, g] : genes_) {
            nlohmann::json j{{"kind", "gene"},
                             {"symbol", g.symbol},
                             {"pathways", g.direct_memberships}};
            out << j.dump() << "\n";
        }
    }

    // Restricts to the subtree rooted at the pathway whose id or name equals
    // `root`. Genes keep only memberships inside the subtree; genes with no
    // remaining membership are dropped. Levels are recomputed from the new
    // root.
    Ontology filter_root(const std::string& root) const {
        std::string root_id;
        if (has_node(root)) {
            root_id = root;
        } else {
            for (const auto& [id, n] : nodes_)
                if (n.name == root) {
                    root_id = id;
                    break;
                }
        }
        if (root_id.empty())
            throw std::out_of_range("unknown root pathway: " + root);

        std::unordered_set<std::string> keep;
        keep.insert(root_id);
        for (const auto& [id, n] : nodes_)
            if (id == root_id || is_ancestor(id, root_id)) keep.insert(id);

        Ontology filtered;
        filtered.version_tag = version_tag;
        for (const auto& [id, n] : nodes_) {
            if (!keep.count(id)) continue;
            PathwayNode copy = n;
            std::vector<std::string> kept_parents;
            for (const auto& p : copy.parents)
                if (keep.count(p) && p != id) kept_parents.push_back(p);
            if (id == root_id) kept_parents.clear();
            copy.parents = kept_parents;
            filtered.nodes_[id] = copy;
        }
        for (const auto& [sym, g] : genes_) {
            GeneRecord copy;
            copy.symbol = sym;
            for (const auto& p : g.direct_memberships)
                if (keep.count(p)) copy.direct_memberships.push_back(p);
            if (!copy.direct_memberships.empty()) filtered.genes_[sym] = copy;
        }
        filtered.finalize();
        return filtered;
    }

    static Ontology ingest_jsonl(std::istream& in) {
        Ontology o;
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
            if (!j.is_object() || !j.contains("kind"))
                throw IngestError(line_no, "record missing \"kind\"");
            const std::string kind = j["kind"].get<std::string>();
            if (kind == "pathway") {
                if (!j.contains("id") || !j.contains("name"))
                    throw IngestError(line_no, "pathway record missing id or name");
                PathwayNode n;
                n.id = j["id"].get<std::string>();
                n.name = j["name"].get<std::string>();
                if (n.id.empty()) throw IngestError(line_no, "empty pathway id");
                if (o.nodes_.count(n.id))
                    throw IngestError(line_no, "duplicate pathway id: " + n.id);
                if (j.contains("parents"))
                    for (const auto& p : j["parents"])
                        n.parents.push_back(p.get<std::string>());
                o.nodes_[n.id] = n;
            } else if (kind == "gene") {
                if (!j.contains("symbol"))
                    throw IngestError(line_no, "gene record missing symbol");
                GeneRecord g;
                g.symbol = j["symbol"].get<std::string>();
                if (g.symbol.empty()) throw IngestError(line_no, "empty gene symbol");
                if (o.genes_.count(g.symbol))
                    throw IngestError(line_no, "duplicate gene symbol: " + g.symbol);
                if (j.contains("pathways"))
                    for (const auto& p : j["pathways"])
                        g.direct_memberships.push_back(p.get<std::string>());
                o.genes_[g.symbol] = g;
            } else {
                throw IngestError(line_no, "unknown record kind: " + kind);
            }
        }
        o.finalize();
        return o;
    }

    // Reactome-style pair: a relation file `parent_id<TAB>child_id` and a
    // membership file `gene_symbol<TAB>pathway_id<TAB>pathway_name`.
    static Ontology ingest_reactome(std::istream& relations,
                                    std::istream& memberships) {
        Ontology o;
        std::string line;
        std::size_t line_no = 0;
        auto ensure_node = [&](const std::string& id) -> PathwayNode& {
            auto it = o.nodes_.find(id);
            if (it == o.nodes_.end()) {
                PathwayNode n;
                n.id = id;
                n.name = id;  // display name may be filled from memberships
                it = o.nodes_.emplace(id, n).first;
            }
            return it->second;
        };
        while (std::getline(relations, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            auto tab = line.find('\t');
            if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
                throw IngestError(line_no, "expected parent<TAB>child");
            std::string parent = line.substr(0, tab);
            std::string child = line.substr(tab + 1);
            if (child.find('\t') != std::string::npos)
                throw IngestError(line_no, "too many columns");
            ensure_node(parent);
            ensure_node(child).parents.push_back(parent);
        }
        line_no = 0;
        while (std::getline(memberships, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            auto t1 = line.find('\t');
            auto t2 = t1 == std::string::npos ? std::string::npos
                                              : line.find('\t', t1 + 1);
            if (t1 == std::string::npos || t2 == std::string::npos)
                throw IngestError(line_no,
                                  "expected gene<TAB>pathway_id<TAB>pathway_name");
            std::string symbol = line.substr(0, t1);
            std::string pathway = line.substr(t1 + 1, t2 - t1 - 1);
            std::string name = line.substr(t2 + 1);
            if (symbol.empty() || pathway.empty())
                throw IngestError(line_no, "empty gene symbol or pathway id");
            if (!o.nodes_.count(pathway))
                throw IngestError(line_no, "membership references unknown pathway " +
                                               pathway);
            if (!name.empty()) o.nodes_[pathway].name = name;
            o.genes_[symbol].symbol = symbol;
            o.genes_[symbol].direct_memberships.push_back(pathway);
        }
        o.finalize();
        return o;
    }

    static Ontology ingest_file(const std::string& path, const std::string& format,
                                const std::string& membership_path = "") {
        if (format == "jsonl") {
            std::ifstream in(path);
            if (!in) throw IngestError("cannot open " + path);
            return ingest_jsonl(in);
        }
        if (format == "reactome-tsv") {
            std::ifstream rel(path);
            if (!rel) throw IngestError("cannot open " + path);
            std::ifstream mem(membership_path);
            if (!mem) throw IngestError("cannot open " + membership_path);
            return ingest_reactome(rel, mem);
        }
        throw IngestError("unknown ontology format: " + format);
    }

private:
    void finalize() {
        // Normalize parent and membership lists.
        for (auto& [id, n] : nodes_) {
            std::sort(n.parents.begin(), n.parents.end());
            n.parents.erase(std::unique(n.parents.begin(), n.parents.end()),
                            n.parents.end());
            for (const auto& p : n.parents) {
                if (p == id) throw IngestError("pathway " + id + " is its own parent");
                if (!nodes_.count(p))
                    throw IngestError("dangling parent reference " + p + " in " + id);
            }
        }
        for (auto& [sym, g] : genes_) {
            std::sort(g.direct_memberships.begin(), g.direct_memberships.end());
            g.direct_memberships.erase(std::unique(g.direct_memberships.begin(),
                                                   g.direct_memberships.end()),
                                       g.direct_memberships.end());
            for (const auto& p : g.direct_memberships)
                if (!nodes_.count(p))
                    throw IngestError("gene " + sym +
                                      " references unknown pathway " + p);
        }
        if (nodes_.empty()) throw IngestError("ontology has no pathway nodes");

        // Cycle check (Kahn) over parent edges and child adjacency.
        std::map<std::string, std::vector<std::string>> children;
        std::map<std::string, std::size_t> pending;  // unprocessed parents
        roots_.clear();
        for (const auto& [id, n] : nodes_) {
            pending[id] = n.parents.size();
            for (const auto& p : n.parents) children[p].push_back(id);
            if (n.parents.empty()) roots_.push_back(id);
        }
        if (roots_.empty()) throw IngestError("cyclic hierarchy: no root pathway");
        std::deque<std::string> queue(roots_.begin(), roots_.end());
        std::size_t seen = 0;
        while (!queue.empty()) {
            std::string id = queue.front();
            queue.pop_front();
            ++seen;
            for (const auto& c : children[id])
                if (--pending[c] == 0) queue.push_back(c);
        }
        if (seen != nodes_.size())
            throw IngestError("cyclic hierarchy detected among pathway relations");

        // Levels: shortest chain from a root, BFS layer by layer.
        for (auto& [id, n] : nodes_) n.level = -1;
        std::deque<std::string> bfs;
        for (const auto& r : roots_) {
            nodes_[r].level = 0;
            bfs.push_back(r);
        }
        while (!bfs.empty()) {
            std::string id = bfs.front();
            bfs.pop_front();
            for (const auto& c : children[id])
                if (nodes_[c].level < 0) {
                    nodes_[c].level = nodes_[id].level + 1;
                    bfs.push_back(c);
                }
        }

        // Ancestor orderings: BFS over parents, nearest first; ties resolved
        // by the sorted parent lists.
        ancestor_order_.clear();
        ancestor_set_.clear();
        for (const auto& [id, n] : nodes_) {
            std::vector<std::string> order;
            std::unordered_set<std::string> seen_ids;
            std::deque<std::string> q(n.parents.begin(), n.parents.end());
            for (const auto& p : n.parents) seen_ids.insert(p);
            while (!q.empty()) {
                std::string p = q.front();
                q.pop_front();
                order.push_back(p);
                for (const auto& gp : nodes_[p].parents)
                    if (seen_ids.insert(gp).second) q.push_back(gp);
            }
            ancestor_set_[id] =
                std::unordered_set<std::string>(order.begin(), order.end());
            ancestor_order_[id] = std::move(order);
        }

        edges_.clear();
        pathway_ids_.clear();
        gene_symbols_.clear();
        members_closure_.clear();
        for (const auto& [id, n] : nodes_) {
            pathway_ids_.push_back(id);
            for (const auto& anc : ancestor_order_[id]) edges_.emplace_back(id, anc);
        }
        for (const auto& [sym, g] : genes_) {
            gene_symbols_.push_back(sym);
            std::set<std::string> closure;
            for (const auto& d : g.direct_memberships) {
                closure.insert(d);
                const auto& anc = ancestor_order_[d];
                closure.insert(anc.begin(), anc.end());
            }
            for (const auto& p : closure) members_closure_[p].push_back(sym);
        }
    }

    std::map<std::string, PathwayNode> nodes_;
    std::map<std::string, GeneRecord> genes_;
    std::vector<std::string> roots_;
    std::unordered_map<std::string, std::vector<std::string>> ancestor_order_;
    std::unordered_map<std::string, std::unordered_set<std::string>> ancestor_set_;
    std::vector<std::pair<std::string, std::string>> edges_;
    std::vector<std::string> pathway_ids_;
    std::vector<std::string> gene_symbols_;
    std::unordered_map<std::string, std::vector<std::string>> members_closure_;
};

}  // namespace syllogen
