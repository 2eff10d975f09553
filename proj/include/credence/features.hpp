#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "credence/corpus.hpp"
#include "credence/lexicon.hpp"

namespace credence {

struct TokenizedPost {
    std::vector<std::string> tokens;  // lowercase alphanumeric runs
    // Per token: raw form started with an uppercase letter / was the first
    // token of its sentence. Used only by the proper-noun feature.
    std::vector<bool> capitalized;
    std::vector<bool> sentence_initial;
    std::size_t sentence_count = 0;
};

TokenizedPost tokenize_post(std::string_view text);

// Public tokenizer contract: lowercase tokens + sentence count.
std::pair<std::vector<std::string>, std::size_t> tokenize(std::string_view text);

// Names of the per-user feature block, in layout order.
const std::vector<std::string>& user_feature_names();

struct FeatureLayout {
    std::vector<std::string> stylistic;
    std::vector<std::string> affective;
    std::vector<std::string> user;

    std::size_t dim() const { return stylistic.size() + affective.size() + user.size(); }
    std::size_t post_block_dim() const { return stylistic.size() + affective.size(); }
    // Prefixed dimension names: sty:..., aff:..., usr:...
    std::vector<std::string> names() const;

    bool operator==(const FeatureLayout&) const = default;
};

// Integer category counts for one post; exact, so pooled user aggregates are
// sums of counts over sums of lengths rather than means of ratios.
std::vector<long> stylistic_counts(const TokenizedPost& post, const StylisticLexicon& lex);
std::vector<long> affective_counts(const TokenizedPost& post, const AffectiveLexicon& lex);

struct PostVectors {
    Eigen::VectorXd stylistic;
    Eigen::VectorXd affective;
};

PostVectors extract_post_features(std::string_view text, const StylisticLexicon& sty,
                                  const AffectiveLexicon& aff);

// Pooled per-user language profile over the user's posts:
// sum(category counts) / sum(post lengths).
PostVectors aggregate_user_language(const std::vector<std::string>& post_texts,
                                    const StylisticLexicon& sty, const AffectiveLexicon& aff);

// Engagement ratios, gender encoding, and post-length moments (mean, population
// variance, standardized skewness; in words and in sentences).
Eigen::VectorXd user_features(const User& user, const std::vector<std::string>& post_texts);

// Per-clique vectors for every statement instance in the corpus, in corpus
// instance order. Post and user blocks are computed once per post / user.
class FeatureExtractor {
public:
    FeatureExtractor(StylisticLexicon sty, AffectiveLexicon aff);

    const FeatureLayout& layout() const { return layout_; }
    const StylisticLexicon& stylistic_lexicon() const { return sty_; }
    const AffectiveLexicon& affective_lexicon() const { return aff_; }

    Eigen::VectorXd clique_vector(const Post& post, const User& user,
                                  const std::vector<std::string>& user_post_texts) const;

private:
    StylisticLexicon sty_;
    AffectiveLexicon aff_;
    FeatureLayout layout_;
};

struct CliqueFeatures {
    FeatureLayout layout;
    std::vector<Eigen::VectorXd> by_instance;  // aligned with corpus.instances
    std::vector<Eigen::VectorXd> by_post;      // full vectors with user block zeroed
};

CliqueFeatures build_clique_features(const Corpus& corpus, const FeatureExtractor& extractor,
                                     int workers = 1);

// Per-dimension z-scoring fit on training cliques; zero-variance dimensions
// map to 0. Persisted with the model and applied to every scored vector.
class Standardizer {
public:
    static Standardizer fit(const std::vector<Eigen::VectorXd>& vectors);
    static Standardizer identity(std::size_t dim);

    Eigen::VectorXd apply(const Eigen::VectorXd& v) const;
    std::size_t dim() const { return static_cast<std::size_t>(mean_.size()); }
    const Eigen::VectorXd& mean() const { return mean_; }
    const Eigen::VectorXd& stddev() const { return std_; }

    Standardizer() = default;
    Standardizer(Eigen::VectorXd mean, Eigen::VectorXd std);

private:
    Eigen::VectorXd mean_;
    Eigen::VectorXd std_;  // 0 marks a constant dimension
};

struct RidgeFit {
    Eigen::VectorXd weights;
    double intercept = 0.0;
};

// L2-regularized least squares with unpenalized intercept. Exploratory
// helpfulness analysis only; the CRF never uses these weights.
RidgeFit helpfulness_regression(const std::vector<Eigen::VectorXd>& per_user_vectors,
                                const std::vector<double>& response, double lambda);

}  // namespace credence
