#include "credence/features.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <Eigen/Dense>

#include "credence/errors.hpp"
#include "credence/util.hpp"

namespace credence {

namespace {

bool is_alnum(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool is_upper(char c) {
    return c >= 'A' && c <= 'Z';
}

}  // namespace

TokenizedPost tokenize_post(std::string_view text) {
    TokenizedPost out;
    bool at_sentence_start = true;
    bool sentence_has_tokens = false;
    std::string cur;
    bool cur_capitalized = false;
    bool cur_initial = false;

    auto flush_token = [&] {
        if (cur.empty()) return;
        out.tokens.push_back(util::to_lower_ascii(cur));
        out.capitalized.push_back(cur_capitalized);
        out.sentence_initial.push_back(cur_initial);
        if (!sentence_has_tokens) {
            ++out.sentence_count;
            sentence_has_tokens = true;
        }
        cur.clear();
    };

    for (char c : text) {
        if (is_alnum(c)) {
            if (cur.empty()) {
                cur_capitalized = is_upper(c);
                cur_initial = at_sentence_start;
                at_sentence_start = false;
            }
            cur.push_back(c);
        } else {
            flush_token();
            if (c == '.' || c == '!' || c == '?') {
                at_sentence_start = true;
                sentence_has_tokens = false;
            }
        }
    }
    flush_token();
    return out;
}

std::pair<std::vector<std::string>, std::size_t> tokenize(std::string_view text) {
    auto tp = tokenize_post(text);
    return {std::move(tp.tokens), tp.sentence_count};
}

const std::vector<std::string>& user_feature_names() {
    static const std::vector<std::string> kNames = {
        "replies_per_question", "gender",         "num_posts",
        "num_thanks",           "thanks_per_post", "words_mean",
        "words_var",            "words_skew",      "sentences_mean",
        "sentences_var",        "sentences_skew",
    };
    return kNames;
}

std::vector<std::string> FeatureLayout::names() const {
    std::vector<std::string> out;
    out.reserve(dim());
    for (const auto& n : stylistic) out.push_back("sty:" + n);
    for (const auto& n : affective) out.push_back("aff:" + n);
    for (const auto& n : user) out.push_back("usr:" + n);
    return out;
}

std::vector<long> stylistic_counts(const TokenizedPost& post, const StylisticLexicon& lex) {
    std::vector<long> counts(lex.size(), 0);
    const int pn = lex.proper_noun_category();
    for (std::size_t t = 0; t < post.tokens.size(); ++t) {
        const std::string& tok = post.tokens[t];
        for (std::size_t c = 0; c < lex.size(); ++c) {
            if (static_cast<int>(c) == pn) continue;
            if (lex.words(c).count(tok)) ++counts[c];
        }
        if (pn >= 0) {
            // Mid-sentence capitalization stands in for proper-noun detection;
            // single letters ("I", "A") are excluded.
            bool capitalized = post.capitalized[t] && !post.sentence_initial[t] && tok.size() >= 2;
            bool listed = lex.words(static_cast<std::size_t>(pn)).count(tok) > 0 ||
                          lex.is_alias_token(normalize_match_token(tok));
            if (capitalized || listed) ++counts[pn];
        }
    }
    return counts;
}

std::vector<long> affective_counts(const TokenizedPost& post, const AffectiveLexicon& lex) {
    std::vector<long> counts(lex.size(), 0);
    for (const auto& tok : post.tokens) {
        if (const auto* cats = lex.lookup(tok)) {
            for (int c : *cats) ++counts[static_cast<std::size_t>(c)];
        }
    }
    return counts;
}

namespace {

PostVectors ratios(const std::vector<long>& sty_counts, const std::vector<long>& aff_counts,
                   double denom) {
    PostVectors out;
    out.stylistic = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(sty_counts.size()));
    out.affective = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(aff_counts.size()));
    if (denom <= 0) return out;
    for (std::size_t i = 0; i < sty_counts.size(); ++i)
        out.stylistic[static_cast<Eigen::Index>(i)] = static_cast<double>(sty_counts[i]) / denom;
    for (std::size_t i = 0; i < aff_counts.size(); ++i)
        out.affective[static_cast<Eigen::Index>(i)] = static_cast<double>(aff_counts[i]) / denom;
    return out;
}

}  // namespace

PostVectors extract_post_features(std::string_view text, const StylisticLexicon& sty,
                                  const AffectiveLexicon& aff) {
    auto tp = tokenize_post(text);
    return ratios(stylistic_counts(tp, sty), affective_counts(tp, aff),
                  static_cast<double>(tp.tokens.size()));
}

PostVectors aggregate_user_language(const std::vector<std::string>& post_texts,
                                    const StylisticLexicon& sty, const AffectiveLexicon& aff) {
    std::vector<long> sty_total(sty.size(), 0);
    std::vector<long> aff_total(aff.size(), 0);
    long length_total = 0;
    for (const auto& text : post_texts) {
        auto tp = tokenize_post(text);
        auto sc = stylistic_counts(tp, sty);
        auto ac = affective_counts(tp, aff);
        for (std::size_t i = 0; i < sc.size(); ++i) sty_total[i] += sc[i];
        for (std::size_t i = 0; i < ac.size(); ++i) aff_total[i] += ac[i];
        length_total += static_cast<long>(tp.tokens.size());
    }
    return ratios(sty_total, aff_total, static_cast<double>(length_total));
}

namespace {

struct Moments {
    double mean = 0, variance = 0, skewness = 0;
};

Moments length_moments(const std::vector<double>& xs) {
    Moments m;
    if (xs.empty()) return m;
    double n = static_cast<double>(xs.size());
    for (double x : xs) m.mean += x;
    m.mean /= n;
    double m2 = 0, m3 = 0;
    for (double x : xs) {
        double d = x - m.mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    m.variance = m2;
    m.skewness = m2 > 0 ? m3 / std::pow(m2, 1.5) : 0.0;
    return m;
}

}  // namespace

Eigen::VectorXd user_features(const User& user, const std::vector<std::string>& post_texts) {
    std::vector<double> words, sentences;
    words.reserve(post_texts.size());
    sentences.reserve(post_texts.size());
    for (const auto& text : post_texts) {
        auto tp = tokenize_post(text);
        words.push_back(static_cast<double>(tp.tokens.size()));
        sentences.push_back(static_cast<double>(tp.sentence_count));
    }
    Moments w = length_moments(words);
    Moments s = length_moments(sentences);

    double gender = 0.5;
    if (user.gender == Gender::female) gender = 1.0;
    else if (user.gender == Gender::male) gender = 0.0;

    Eigen::VectorXd v(11);
    v << static_cast<double>(user.num_replies) / (static_cast<double>(user.num_questions) + 1.0),
        gender, static_cast<double>(user.num_posts), static_cast<double>(user.num_thanks),
        static_cast<double>(user.num_thanks) / (static_cast<double>(user.num_posts) + 1.0),
        w.mean, w.variance, w.skewness, s.mean, s.variance, s.skewness;
    return v;
}

FeatureExtractor::FeatureExtractor(StylisticLexicon sty, AffectiveLexicon aff)
    : sty_(std::move(sty)), aff_(std::move(aff)) {
    layout_.stylistic = sty_.categories();
    layout_.affective = aff_.categories();
    layout_.user = user_feature_names();
}

Eigen::VectorXd FeatureExtractor::clique_vector(
    const Post& post, const User& user, const std::vector<std::string>& user_post_texts) const {
    auto pv = extract_post_features(post.text, sty_, aff_);
    auto uv = user_features(user, user_post_texts);
    Eigen::VectorXd out(static_cast<Eigen::Index>(layout_.dim()));
    out << pv.stylistic, pv.affective, uv;
    return out;
}

CliqueFeatures build_clique_features(const Corpus& corpus, const FeatureExtractor& extractor,
                                     int workers) {
    CliqueFeatures out;
    out.layout = extractor.layout();
    const auto& layout = out.layout;

    // per-post language vectors (parallel; slots are disjoint)
    std::vector<PostVectors> post_vecs(corpus.posts.size());
    auto extract_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            post_vecs[i] = extract_post_features(corpus.posts[i].text,
                                                 extractor.stylistic_lexicon(),
                                                 extractor.affective_lexicon());
        }
    };
    int n_workers = std::max(1, workers);
    if (n_workers == 1 || corpus.posts.size() < 64) {
        extract_range(0, corpus.posts.size());
    } else {
        std::vector<std::thread> threads;
        std::size_t chunk = (corpus.posts.size() + n_workers - 1) / n_workers;
        for (int w = 0; w < n_workers; ++w) {
            std::size_t begin = static_cast<std::size_t>(w) * chunk;
            std::size_t end = std::min(begin + chunk, corpus.posts.size());
            if (begin >= end) break;
            threads.emplace_back(extract_range, begin, end);
        }
        for (auto& t : threads) t.join();
    }

    // per-user engagement vectors
    std::vector<std::vector<std::string>> texts_by_user(corpus.users.size());
    for (const auto& post : corpus.posts)
        texts_by_user[corpus.user_index.at(post.user_id)].push_back(post.text);
    std::vector<Eigen::VectorXd> user_vecs(corpus.users.size());
    for (std::size_t u = 0; u < corpus.users.size(); ++u)
        user_vecs[u] = user_features(corpus.users[u], texts_by_user[u]);

    out.by_instance.resize(corpus.instances.size());
    for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
        const auto& inst = corpus.instances[i];
        const auto& pv = post_vecs[corpus.post_index.at(inst.post_id)];
        const auto& uv = user_vecs[corpus.user_index.at(inst.user_id)];
        Eigen::VectorXd v(static_cast<Eigen::Index>(layout.dim()));
        v << pv.stylistic, pv.affective, uv;
        out.by_instance[i] = std::move(v);
    }

    out.by_post.resize(corpus.posts.size());
    for (std::size_t p = 0; p < corpus.posts.size(); ++p) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(layout.dim()));
        v.head(static_cast<Eigen::Index>(layout.post_block_dim()))
            << post_vecs[p].stylistic, post_vecs[p].affective;
        out.by_post[p] = std::move(v);
    }
    return out;
}

Standardizer::Standardizer(Eigen::VectorXd mean, Eigen::VectorXd std)
    : mean_(std::move(mean)), std_(std::move(std)) {}

Standardizer Standardizer::fit(const std::vector<Eigen::VectorXd>& vectors) {
    if (vectors.size() < 2)
        throw ValidationError("standardizer needs at least 2 training vectors");
    const Eigen::Index dim = vectors.front().size();
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(dim);
    for (const auto& v : vectors) mean += v;
    mean /= static_cast<double>(vectors.size());
    Eigen::VectorXd var = Eigen::VectorXd::Zero(dim);
    for (const auto& v : vectors) var += (v - mean).cwiseProduct(v - mean);
    var /= static_cast<double>(vectors.size());
    Eigen::VectorXd std = var.cwiseSqrt();
    return Standardizer(std::move(mean), std::move(std));
}

Standardizer Standardizer::identity(std::size_t dim) {
    return Standardizer(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim)),
                        Eigen::VectorXd::Ones(static_cast<Eigen::Index>(dim)));
}

Eigen::VectorXd Standardizer::apply(const Eigen::VectorXd& v) const {
    if (v.size() != mean_.size()) throw ValidationError("standardizer dimension mismatch");
    Eigen::VectorXd out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out[i] = std_[i] > 0 ? (v[i] - mean_[i]) / std_[i] : 0.0;
    }
    return out;
}

RidgeFit helpfulness_regression(const std::vector<Eigen::VectorXd>& per_user_vectors,
                                const std::vector<double>& response, double lambda) {
    if (per_user_vectors.size() < 2)
        throw ValidationError("helpfulness regression needs at least 2 users");
    if (per_user_vectors.size() != response.size())
        throw ValidationError("regression: vectors and response differ in length");
    if (lambda < 0) throw ValidationError("regression: lambda must be >= 0");

    const Eigen::Index n = static_cast<Eigen::Index>(per_user_vectors.size());
    const Eigen::Index d = per_user_vectors.front().size();
    Eigen::MatrixXd design(n, d + 1);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        design.row(i).head(d) = per_user_vectors[static_cast<std::size_t>(i)].transpose();
        design(i, d) = 1.0;  // intercept column, unpenalized
        y[i] = response[static_cast<std::size_t>(i)];
    }
    Eigen::MatrixXd normal = design.transpose() * design;
    for (Eigen::Index j = 0; j < d; ++j) normal(j, j) += lambda;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(normal);
    if (!lu.isInvertible()) {
        throw NumericError("regression system is singular; use lambda > 0");
    }
    Eigen::VectorXd solution = lu.solve(design.transpose() * y);
    RidgeFit fit;
    fit.weights = solution.head(d);
    fit.intercept = solution[d];
    return fit;
}

}  // namespace credence
