#include "credence/graph.hpp"

#include <algorithm>
#include <map>

#include "credence/errors.hpp"

namespace credence {

std::optional<std::size_t> CliqueGraph::statement_index(const std::string& id) const {
    auto it = std::lower_bound(statement_ids.begin(), statement_ids.end(), id);
    if (it == statement_ids.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - statement_ids.begin());
}

std::optional<std::size_t> CliqueGraph::user_index(const std::string& id) const {
    auto it = std::lower_bound(user_ids.begin(), user_ids.end(), id);
    if (it == user_ids.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - user_ids.begin());
}

std::string CliqueGraph::dump_tsv() const {
    std::string out = "clique_index\tstatement_id\tpost_id\tuser_id\n";
    for (const Clique& c : cliques) {
        out += std::to_string(c.index);
        out += '\t';
        out += c.statement_id;
        out += '\t';
        out += c.post_id;
        out += '\t';
        out += c.user_id;
        out += '\n';
    }
    return out;
}

CliqueGraph build_graph(const Corpus& corpus, const CliqueFeatures& features) {
    if (features.by_instance.size() != corpus.instances.size()) {
        throw ValidationError("feature table has " + std::to_string(features.by_instance.size()) +
                              " rows but corpus has " + std::to_string(corpus.instances.size()) +
                              " statement instances");
    }

    CliqueGraph graph;
    graph.layout = features.layout;

    // (statement_id, post_id, user_id, instance row)
    struct Row {
        std::string statement_id, post_id, user_id;
        std::size_t source = 0;
    };
    std::vector<Row> rows;
    rows.reserve(corpus.instances.size());
    for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
        const StatementInstance& inst = corpus.instances[i];
        const Post* post = corpus.post(inst.post_id);
        if (post == nullptr) {
            throw ValidationError("statement instance references unknown post '" + inst.post_id + "'");
        }
        rows.push_back({inst.statement_id, inst.post_id, post->user_id, i});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.statement_id != b.statement_id) return a.statement_id < b.statement_id;
        if (a.post_id != b.post_id) return a.post_id < b.post_id;
        return a.user_id < b.user_id;
    });

    std::map<std::string, std::size_t> statement_index;
    std::map<std::string, std::size_t> user_index;
    for (const Row& r : rows) {
        statement_index.emplace(r.statement_id, 0);
        user_index.emplace(r.user_id, 0);
    }
    for (auto& [id, idx] : statement_index) {
        idx = graph.statement_ids.size();
        graph.statement_ids.push_back(id);
    }
    for (auto& [id, idx] : user_index) {
        idx = graph.user_ids.size();
        graph.user_ids.push_back(id);
    }

    graph.statement_cliques.resize(graph.statement_ids.size());
    graph.user_cliques.resize(graph.user_ids.size());
    graph.cliques.reserve(rows.size());
    for (const Row& r : rows) {
        Clique c;
        c.index = graph.cliques.size();
        c.statement = statement_index.at(r.statement_id);
        c.user = user_index.at(r.user_id);
        c.statement_id = r.statement_id;
        c.post_id = r.post_id;
        c.user_id = r.user_id;
        c.features = features.by_instance[r.source];
        graph.statement_cliques[c.statement].push_back(c.index);
        graph.user_cliques[c.user].push_back(c.index);
        graph.cliques.push_back(std::move(c));
    }
    return graph;
}

Partition make_partition(const CliqueGraph& graph, const LabelPartition& labels) {
    Partition part;
    part.clamped.assign(graph.n_statements(), -1);
    for (const auto& [id, value] : labels) {
        std::optional<std::size_t> idx = graph.statement_index(id);
        if (!idx) {
            part.ignored_label_ids.push_back(id);
            continue;
        }
        part.clamped[*idx] = value ? 1 : 0;
    }
    for (std::size_t i = 0; i < part.clamped.size(); ++i) {
        (part.clamped[i] < 0 ? part.unknown : part.labeled).push_back(i);
    }
    return part;
}

}  // namespace credence
