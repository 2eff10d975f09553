#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace credence {

enum class Gender { female, male, unknown };

const char* gender_name(Gender g);

struct User {
    std::string id;
    Gender gender = Gender::unknown;
    std::optional<int> age;
    long long num_questions = 0;
    long long num_replies = 0;
    long long num_posts = 0;
    long long num_thanks = 0;
    std::optional<std::string> member_type;
};

struct Post {
    std::string id;
    std::string user_id;
    std::string text;
    std::optional<std::string> thread_id;
};

// A (drug, effect) assertion. The id is derived deterministically from the
// normalized pair so that independent runs and the synthesizer agree on ids.
struct Statement {
    std::string id;
    std::string drug;
    std::string effect;
};

std::string statement_id_for(std::string_view drug, std::string_view effect);

struct StatementInstance {
    std::string statement_id;
    std::string post_id;
    std::string user_id;
};

// Expert labels over statement ids; the complement is the unknown set.
class LabelPartition {
public:
    void set(const std::string& statement_id, bool credible) { labels_[statement_id] = credible; }
    std::optional<bool> get(const std::string& statement_id) const;
    bool contains(const std::string& statement_id) const { return labels_.count(statement_id) > 0; }
    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::map<std::string, bool>& all() const { return labels_; }

private:
    std::map<std::string, bool> labels_;
};

// Stands in for an external statement-extraction tool: a transparent list of
// drug and effect surface forms, each mapping to one canonical form.
class StatementCatalog {
public:
    void add_drug(const std::string& canonical, const std::vector<std::string>& aliases = {});
    void add_effect(const std::string& canonical, const std::vector<std::string>& aliases = {});

    static StatementCatalog load(const std::string& path);
    std::string to_tsv() const;

    bool empty() const { return drugs_.empty() && effects_.empty(); }
    const std::map<std::string, std::vector<std::string>>& drugs() const { return drugs_; }
    const std::map<std::string, std::vector<std::string>>& effects() const { return effects_; }

    // All alias token sequences with their canonical form and kind.
    struct AliasEntry {
        std::vector<std::string> tokens;  // normalized
        std::string canonical;
        bool is_effect = false;
    };
    std::vector<AliasEntry> alias_entries() const;

    // Normalized single tokens of every alias (length >= 3), used by the
    // proper-noun stylistic feature.
    std::vector<std::string> alias_tokens() const;

private:
    void add(bool effect, const std::string& canonical, const std::vector<std::string>& aliases);

    // canonical -> aliases (canonical itself always included)
    std::map<std::string, std::vector<std::string>> drugs_;
    std::map<std::string, std::vector<std::string>> effects_;
    std::map<std::string, std::string> drug_alias_owner_;    // normalized alias key -> canonical
    std::map<std::string, std::string> effect_alias_owner_;
};

struct LoadReport {
    std::size_t n_users = 0;
    std::size_t n_posts = 0;
    std::size_t n_labels = 0;
    std::vector<std::string> warnings;
};

struct Corpus {
    std::vector<User> users;    // sorted by id
    std::vector<Post> posts;    // sorted by id
    LabelPartition labels;
    std::vector<Statement> statements;          // sorted by id; filled by matching
    std::vector<StatementInstance> instances;   // sorted by (post, statement); filled by matching

    std::unordered_map<std::string, std::size_t> user_index;
    std::unordered_map<std::string, std::size_t> post_index;
    std::unordered_map<std::string, std::size_t> statement_index;

    const User& user(const std::string& id) const;
    const Post& post(const std::string& id) const;
    const Statement& statement(const std::string& id) const;
    std::vector<std::size_t> posts_of_user(const std::string& user_id) const;

    void rebuild_indexes();
    void validate() const;  // throws ValidationError

    // Canonical serialization: users.jsonl, posts.jsonl, labels.tsv under dir.
    void save(const std::string& dir) const;
};

Corpus load_corpus(const std::string& users_path, const std::string& posts_path,
                   const std::string& labels_path, LoadReport* report = nullptr);

struct MatchReport {
    std::size_t n_instances_added = 0;
    std::size_t n_statements_added = 0;
};

// Adds one StatementInstance per (post, drug, effect) whose aliases both occur
// in the post under matcher normalization. Idempotent.
MatchReport match_statements(Corpus& corpus, const StatementCatalog& catalog);

// Matcher normalization: lowercase, split on non-alphanumeric runs, strip one
// trailing 's' from tokens of length >= 4.
std::string normalize_match_token(std::string_view token);
std::vector<std::string> normalize_match_phrase(std::string_view phrase);

// Sentences split on '.', '!', '?'; each entry is the normalized token list
// of one non-empty sentence.
std::vector<std::vector<std::string>> match_sentences(std::string_view text);

}  // namespace credence
