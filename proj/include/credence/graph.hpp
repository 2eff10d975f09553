#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "credence/corpus.hpp"
#include "credence/features.hpp"

namespace credence {

// One triangle (statement, post, user) with its fused feature vector.
// Statement and user indexes are graph-local and dense.
struct Clique {
    std::size_t index = 0;
    std::size_t statement = 0;
    std::size_t user = 0;
    std::string statement_id;
    std::string post_id;
    std::string user_id;
    Eigen::VectorXd features;  // raw (unstandardized)
};

class CliqueGraph {
public:
    std::vector<Clique> cliques;                         // sorted by (statement, post, user) ids
    std::vector<std::string> statement_ids;              // sorted; dense statement index space
    std::vector<std::string> user_ids;                   // sorted; users with >= 1 clique
    std::vector<std::vector<std::size_t>> statement_cliques;  // per statement
    std::vector<std::vector<std::size_t>> user_cliques;       // per user
    FeatureLayout layout;

    std::size_t n_statements() const { return statement_ids.size(); }
    std::size_t n_users() const { return user_ids.size(); }
    std::size_t n_cliques() const { return cliques.size(); }

    std::optional<std::size_t> statement_index(const std::string& id) const;
    std::optional<std::size_t> user_index(const std::string& id) const;

    std::string dump_tsv() const;
};

// One clique per statement instance; statements never matched in any post do
// not appear (no evidence, nothing to infer).
CliqueGraph build_graph(const Corpus& corpus, const CliqueFeatures& features);

// Expert-label split over the graph's statements. clamped[i] is -1 for
// unknown, else 0/1.
struct Partition {
    std::vector<int> clamped;
    std::vector<std::size_t> labeled;   // sorted statement indexes
    std::vector<std::size_t> unknown;   // sorted statement indexes
    std::vector<std::string> ignored_label_ids;  // labels naming statements absent from the graph
};

Partition make_partition(const CliqueGraph& graph, const LabelPartition& labels);

}  // namespace credence
