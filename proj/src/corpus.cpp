#include "credence/corpus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "credence/errors.hpp"
#include "credence/util.hpp"

namespace credence {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const char* gender_name(Gender g) {
    switch (g) {
        case Gender::female: return "female";
        case Gender::male: return "male";
        case Gender::unknown: return "unknown";
    }
    return "unknown";
}

std::string statement_id_for(std::string_view drug, std::string_view effect) {
    std::string id;
    id.reserve(drug.size() + effect.size() + 1);
    id.append(drug);
    id.push_back('+');
    for (char c : effect) id.push_back(c == ' ' ? '_' : c);
    return id;
}

std::optional<bool> LabelPartition::get(const std::string& statement_id) const {
    auto it = labels_.find(statement_id);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// matcher normalization

std::string normalize_match_token(std::string_view token) {
    std::string t = util::to_lower_ascii(token);
    if (t.size() >= 4 && t.back() == 's') t.pop_back();
    return t;
}

namespace {

bool is_alnum(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

std::vector<std::string> raw_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (is_alnum(c)) {
            cur.push_back(c);
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

// True when `needle` occurs in `haystack` as an ordered (not necessarily
// contiguous) subsequence.
bool is_subsequence(const std::vector<std::string>& needle,
                    const std::vector<std::string>& haystack) {
    std::size_t i = 0;
    for (const auto& tok : haystack) {
        if (i < needle.size() && tok == needle[i]) ++i;
        if (i == needle.size()) return true;
    }
    return i == needle.size();
}

}  // namespace

std::vector<std::string> normalize_match_phrase(std::string_view phrase) {
    std::vector<std::string> out;
    for (auto& t : raw_tokens(phrase)) out.push_back(normalize_match_token(t));
    return out;
}

std::vector<std::vector<std::string>> match_sentences(std::string_view text) {
    std::vector<std::vector<std::string>> sentences;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        auto toks = normalize_match_phrase(text.substr(start, end - start));
        if (!toks.empty()) sentences.push_back(std::move(toks));
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.' || c == '!' || c == '?') {
            flush(i);
            start = i + 1;
        }
    }
    flush(text.size());
    return sentences;
}

// ---------------------------------------------------------------------------
// StatementCatalog

void StatementCatalog::add(bool effect, const std::string& canonical,
                           const std::vector<std::string>& aliases) {
    std::string canon = util::to_lower_ascii(util::trim(canonical));
    if (canon.empty()) throw ValidationError("catalog: empty canonical form");
    auto& table = effect ? effects_ : drugs_;
    auto& owners = effect ? effect_alias_owner_ : drug_alias_owner_;
    auto& list = table[canon];
    auto insert_alias = [&](const std::string& alias) {
        std::string a = util::to_lower_ascii(util::trim(alias));
        if (a.empty()) return;
        std::string key = util::join(normalize_match_phrase(a), " ");
        auto it = owners.find(key);
        if (it != owners.end() && it->second != canon) {
            throw ValidationError("catalog: alias '" + a + "' maps to both '" + it->second +
                                  "' and '" + canon + "'");
        }
        owners[key] = canon;
        if (std::find(list.begin(), list.end(), a) == list.end()) list.push_back(a);
    };
    insert_alias(canon);
    for (const auto& a : aliases) insert_alias(a);
}

void StatementCatalog::add_drug(const std::string& canonical,
                                const std::vector<std::string>& aliases) {
    add(false, canonical, aliases);
}

void StatementCatalog::add_effect(const std::string& canonical,
                                  const std::vector<std::string>& aliases) {
    add(true, canonical, aliases);
}

StatementCatalog StatementCatalog::load(const std::string& path) {
    StatementCatalog cat;
    auto lines = util::split_lines(util::read_file(path));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty() || line[0] == '#') continue;
        auto cols = util::split(line, '\t');
        if (cols.size() < 2 || cols.size() > 3) {
            throw ParseError(path + ":" + std::to_string(i + 1) +
                             ": expected kind<TAB>canonical[<TAB>aliases]");
        }
        std::string kind = util::trim(cols[0]);
        std::vector<std::string> aliases;
        if (cols.size() == 3) {
            for (auto& a : util::split(cols[2], ',')) {
                auto t = util::trim(a);
                if (!t.empty()) aliases.push_back(t);
            }
        }
        if (kind == "drug") {
            cat.add_drug(cols[1], aliases);
        } else if (kind == "effect") {
            cat.add_effect(cols[1], aliases);
        } else {
            throw ParseError(path + ":" + std::to_string(i + 1) + ": unknown kind '" + kind +
                             "' (want drug|effect)");
        }
    }
    return cat;
}

std::string StatementCatalog::to_tsv() const {
    std::ostringstream out;
    for (const auto& [canon, aliases] : drugs_) {
        out << "drug\t" << canon << '\t' << util::join(aliases, ",") << '\n';
    }
    for (const auto& [canon, aliases] : effects_) {
        out << "effect\t" << canon << '\t' << util::join(aliases, ",") << '\n';
    }
    return out.str();
}

std::vector<StatementCatalog::AliasEntry> StatementCatalog::alias_entries() const {
    std::vector<AliasEntry> out;
    auto collect = [&](const std::map<std::string, std::vector<std::string>>& table,
                       bool is_effect) {
        for (const auto& [canon, aliases] : table) {
            for (const auto& alias : aliases) {
                AliasEntry e;
                e.tokens = normalize_match_phrase(alias);
                e.canonical = canon;
                e.is_effect = is_effect;
                if (!e.tokens.empty()) out.push_back(std::move(e));
            }
        }
    };
    collect(drugs_, false);
    collect(effects_, true);
    return out;
}

std::vector<std::string> StatementCatalog::alias_tokens() const {
    std::set<std::string> toks;
    for (const auto& entry : alias_entries()) {
        for (const auto& t : entry.tokens) {
            if (t.size() >= 3) toks.insert(t);
        }
    }
    return {toks.begin(), toks.end()};
}

// ---------------------------------------------------------------------------
// Corpus

const User& Corpus::user(const std::string& id) const {
    auto it = user_index.find(id);
    if (it == user_index.end()) throw ValidationError("unknown user id: " + id);
    return users[it->second];
}

const Post& Corpus::post(const std::string& id) const {
    auto it = post_index.find(id);
    if (it == post_index.end()) throw ValidationError("unknown post id: " + id);
    return posts[it->second];
}

const Statement& Corpus::statement(const std::string& id) const {
    auto it = statement_index.find(id);
    if (it == statement_index.end()) throw ValidationError("unknown statement id: " + id);
    return statements[it->second];
}

std::vector<std::size_t> Corpus::posts_of_user(const std::string& user_id) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < posts.size(); ++i) {
        if (posts[i].user_id == user_id) out.push_back(i);
    }
    return out;
}

void Corpus::rebuild_indexes() {
    std::sort(users.begin(), users.end(), [](const User& a, const User& b) { return a.id < b.id; });
    std::sort(posts.begin(), posts.end(), [](const Post& a, const Post& b) { return a.id < b.id; });
    std::sort(statements.begin(), statements.end(),
              [](const Statement& a, const Statement& b) { return a.id < b.id; });
    std::sort(instances.begin(), instances.end(),
              [](const StatementInstance& a, const StatementInstance& b) {
                  if (a.post_id != b.post_id) return a.post_id < b.post_id;
                  return a.statement_id < b.statement_id;
              });
    user_index.clear();
    post_index.clear();
    statement_index.clear();
    for (std::size_t i = 0; i < users.size(); ++i) user_index[users[i].id] = i;
    for (std::size_t i = 0; i < posts.size(); ++i) post_index[posts[i].id] = i;
    for (std::size_t i = 0; i < statements.size(); ++i) statement_index[statements[i].id] = i;
}

void Corpus::validate() const {
    if (user_index.size() != users.size()) throw ValidationError("duplicate user id");
    if (post_index.size() != posts.size()) throw ValidationError("duplicate post id");
    if (statement_index.size() != statements.size()) throw ValidationError("duplicate statement id");
    for (const auto& u : users) {
        if (u.id.empty()) throw ValidationError("user with empty id");
        if (u.num_questions < 0 || u.num_replies < 0 || u.num_posts < 0 || u.num_thanks < 0)
            throw ValidationError("user '" + u.id + "' has a negative count");
        if (u.age && *u.age < 0) throw ValidationError("user '" + u.id + "' has negative age");
    }
    for (const auto& p : posts) {
        if (p.id.empty()) throw ValidationError("post with empty id");
        if (!user_index.count(p.user_id))
            throw ValidationError("post '" + p.id + "' references absent user '" + p.user_id + "'");
        if (util::trim(p.text).empty())
            throw ValidationError("post '" + p.id + "' has empty text");
    }
    std::set<std::pair<std::string, std::string>> seen_pairs;
    for (const auto& s : statements) {
        if (!seen_pairs.insert({s.drug, s.effect}).second)
            throw ValidationError("duplicate statement pair (" + s.drug + ", " + s.effect + ")");
    }
    std::set<std::tuple<std::string, std::string, std::string>> seen_triples;
    for (const auto& inst : instances) {
        if (!statement_index.count(inst.statement_id))
            throw ValidationError("instance references absent statement '" + inst.statement_id + "'");
        auto pit = post_index.find(inst.post_id);
        if (pit == post_index.end())
            throw ValidationError("instance references absent post '" + inst.post_id + "'");
        if (!user_index.count(inst.user_id))
            throw ValidationError("instance references absent user '" + inst.user_id + "'");
        if (posts[pit->second].user_id != inst.user_id)
            throw ValidationError("instance user '" + inst.user_id + "' is not the author of post '" +
                                  inst.post_id + "'");
        if (!seen_triples.insert({inst.statement_id, inst.post_id, inst.user_id}).second)
            throw ValidationError("duplicate statement instance for post '" + inst.post_id + "'");
    }
}

namespace {

long long get_count(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || obj[key].is_null()) return 0;
    if (!obj[key].is_number_integer())
        throw ParseError(where + ": field '" + std::string(key) + "' must be an integer");
    return obj[key].get<long long>();
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_string())
        throw ParseError(where + ": missing string field '" + std::string(key) + "'");
    return obj[key].get<std::string>();
}

}  // namespace

Corpus load_corpus(const std::string& users_path, const std::string& posts_path,
                   const std::string& labels_path, LoadReport* report) {
    Corpus corpus;
    LoadReport local;
    LoadReport& rep = report ? *report : local;

    auto user_lines = util::split_lines(util::read_file(users_path));
    for (std::size_t i = 0; i < user_lines.size(); ++i) {
        if (util::trim(user_lines[i]).empty()) continue;
        std::string where = users_path + ":" + std::to_string(i + 1);
        json obj;
        try {
            obj = json::parse(user_lines[i]);
        } catch (const json::exception& e) {
            throw ParseError(where + ": " + e.what());
        }
        User u;
        u.id = get_string(obj, "id", where);
        if (obj.contains("gender") && obj["gender"].is_string()) {
            std::string g = obj["gender"].get<std::string>();
            if (g == "female") u.gender = Gender::female;
            else if (g == "male") u.gender = Gender::male;
            else if (g == "unknown") u.gender = Gender::unknown;
            else throw ParseError(where + ": bad gender '" + g + "'");
        }
        if (obj.contains("age") && !obj["age"].is_null()) {
            if (!obj["age"].is_number_integer()) throw ParseError(where + ": age must be an integer");
            u.age = obj["age"].get<int>();
        }
        u.num_questions = get_count(obj, "num_questions", where);
        u.num_replies = get_count(obj, "num_replies", where);
        u.num_posts = get_count(obj, "num_posts", where);
        u.num_thanks = get_count(obj, "num_thanks", where);
        if (obj.contains("member_type") && obj["member_type"].is_string())
            u.member_type = obj["member_type"].get<std::string>();
        corpus.users.push_back(std::move(u));
    }

    auto post_lines = util::split_lines(util::read_file(posts_path));
    for (std::size_t i = 0; i < post_lines.size(); ++i) {
        if (util::trim(post_lines[i]).empty()) continue;
        std::string where = posts_path + ":" + std::to_string(i + 1);
        json obj;
        try {
            obj = json::parse(post_lines[i]);
        } catch (const json::exception& e) {
            throw ParseError(where + ": " + e.what());
        }
        Post p;
        p.id = get_string(obj, "id", where);
        p.user_id = get_string(obj, "user_id", where);
        p.text = get_string(obj, "text", where);
        if (obj.contains("thread_id") && obj["thread_id"].is_string())
            p.thread_id = obj["thread_id"].get<std::string>();
        corpus.posts.push_back(std::move(p));
    }

    auto label_lines = util::split_lines(util::read_file(labels_path));
    for (std::size_t i = 0; i < label_lines.size(); ++i) {
        const std::string& line = label_lines[i];
        if (util::trim(line).empty() || line[0] == '#') continue;
        auto cols = util::split(line, '\t');
        if (cols.size() != 2)
            throw ParseError(labels_path + ":" + std::to_string(i + 1) +
                             ": expected statement_id<TAB>true|false");
        std::string value = util::trim(cols[1]);
        bool credible;
        if (value == "true") credible = true;
        else if (value == "false") credible = false;
        else
            throw ParseError(labels_path + ":" + std::to_string(i + 1) + ": bad label '" + value +
                             "' (want true|false)");
        corpus.labels.set(util::trim(cols[0]), credible);
    }
    if (corpus.labels.empty())
        rep.warnings.push_back("labels file '" + labels_path + "' contains no labels");

    corpus.rebuild_indexes();
    corpus.validate();
    rep.n_users = corpus.users.size();
    rep.n_posts = corpus.posts.size();
    rep.n_labels = corpus.labels.size();
    return corpus;
}

MatchReport match_statements(Corpus& corpus, const StatementCatalog& catalog) {
    if (catalog.empty()) throw ValidationError("statement catalog is empty");
    MatchReport report;

    auto entries = catalog.alias_entries();
    // first-token index keeps the per-sentence scan near-linear
    std::unordered_map<std::string, std::vector<const StatementCatalog::AliasEntry*>> by_first;
    for (const auto& e : entries) by_first[e.tokens.front()].push_back(&e);

    std::set<std::tuple<std::string, std::string, std::string>> existing;
    for (const auto& inst : corpus.instances)
        existing.insert({inst.statement_id, inst.post_id, inst.user_id});

    std::vector<StatementInstance> added;
    std::map<std::pair<std::string, std::string>, std::string> new_statements;

    for (const auto& post : corpus.posts) {
        std::set<std::string> drugs_found;
        std::set<std::string> effects_found;
        for (const auto& sentence : match_sentences(post.text)) {
            std::set<const StatementCatalog::AliasEntry*> candidates;
            for (const auto& tok : sentence) {
                auto it = by_first.find(tok);
                if (it == by_first.end()) continue;
                for (const auto* e : it->second) candidates.insert(e);
            }
            for (const auto* e : candidates) {
                if (is_subsequence(e->tokens, sentence)) {
                    (e->is_effect ? effects_found : drugs_found).insert(e->canonical);
                }
            }
        }
        for (const auto& drug : drugs_found) {
            for (const auto& effect : effects_found) {
                std::string sid = statement_id_for(drug, effect);
                if (!corpus.statement_index.count(sid)) {
                    new_statements[{drug, effect}] = sid;
                }
                if (existing.insert({sid, post.id, post.user_id}).second) {
                    added.push_back({sid, post.id, post.user_id});
                }
            }
        }
    }

    for (const auto& [pair, sid] : new_statements) {
        corpus.statements.push_back({sid, pair.first, pair.second});
        report.n_statements_added++;
    }
    for (auto& inst : added) corpus.instances.push_back(std::move(inst));
    report.n_instances_added = added.size();

    corpus.rebuild_indexes();
    corpus.validate();
    return report;
}

void Corpus::save(const std::string& dir) const {
    util::ensure_dir(dir);
    std::ostringstream users_out;
    for (const auto& u : users) {
        ordered_json obj;
        obj["id"] = u.id;
        obj["gender"] = gender_name(u.gender);
        if (u.age) obj["age"] = *u.age;
        obj["num_questions"] = u.num_questions;
        obj["num_replies"] = u.num_replies;
        obj["num_posts"] = u.num_posts;
        obj["num_thanks"] = u.num_thanks;
        if (u.member_type) obj["member_type"] = *u.member_type;
        users_out << obj.dump() << '\n';
    }
    util::write_file(dir + "/users.jsonl", users_out.str());

    std::ostringstream posts_out;
    for (const auto& p : posts) {
        ordered_json obj;
        obj["id"] = p.id;
        obj["user_id"] = p.user_id;
        obj["text"] = p.text;
        if (p.thread_id) obj["thread_id"] = *p.thread_id;
        posts_out << obj.dump() << '\n';
    }
    util::write_file(dir + "/posts.jsonl", posts_out.str());

    std::ostringstream labels_out;
    for (const auto& [sid, credible] : labels.all()) {
        labels_out << sid << '\t' << (credible ? "true" : "false") << '\n';
    }
    util::write_file(dir + "/labels.tsv", labels_out.str());
}

}  // namespace credence
