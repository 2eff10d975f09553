#include "credence/lexicon.hpp"

#include <algorithm>

#include "credence/corpus.hpp"
#include "credence/errors.hpp"
#include "credence/util.hpp"

namespace credence {

StylisticLexicon StylisticLexicon::parse(std::string_view tsv, const std::string& origin) {
    StylisticLexicon lex;
    auto lines = util::split_lines(tsv);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty() || line[0] == '#') continue;
        auto cols = util::split(line, '\t');
        if (cols.size() != 2)
            throw ParseError(origin + ":" + std::to_string(i + 1) +
                             ": expected category<TAB>word1,word2,...");
        std::string name = util::trim(cols[0]);
        if (name.empty())
            throw ParseError(origin + ":" + std::to_string(i + 1) + ": empty category name");
        if (std::find(lex.categories_.begin(), lex.categories_.end(), name) !=
            lex.categories_.end())
            throw ParseError(origin + ":" + std::to_string(i + 1) + ": duplicate category '" +
                             name + "'");
        std::set<std::string> words;
        for (auto& w : util::split(cols[1], ',')) {
            std::string t = util::to_lower_ascii(util::trim(w));
            if (!t.empty()) words.insert(t);
        }
        if (name == "proper_nouns") lex.proper_noun_category_ = static_cast<int>(lex.categories_.size());
        lex.categories_.push_back(name);
        lex.words_.push_back(std::move(words));
    }
    if (lex.categories_.empty()) throw ParseError(origin + ": stylistic lexicon has no categories");
    return lex;
}

StylisticLexicon StylisticLexicon::load(const std::string& path) {
    return parse(util::read_file(path), path);
}

void StylisticLexicon::attach_catalog(const StatementCatalog& catalog) {
    for (const auto& t : catalog.alias_tokens()) alias_tokens_.insert(t);
}

AffectiveLexicon AffectiveLexicon::parse(std::string_view tsv, const std::string& origin) {
    std::map<std::string, std::vector<std::string>> raw;
    std::set<std::string> all_categories;
    auto lines = util::split_lines(tsv);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty() || line[0] == '#') continue;
        auto cols = util::split(line, '\t');
        if (cols.size() != 2)
            throw ParseError(origin + ":" + std::to_string(i + 1) +
                             ": expected word<TAB>cat1,cat2,...");
        std::string word = util::to_lower_ascii(util::trim(cols[0]));
        if (word.empty())
            throw ParseError(origin + ":" + std::to_string(i + 1) + ": empty word");
        std::vector<std::string> cats;
        for (auto& c : util::split(cols[1], ',')) {
            std::string t = util::trim(c);
            if (t.empty()) continue;
            cats.push_back(t);
            all_categories.insert(t);
        }
        if (cats.empty())
            throw ParseError(origin + ":" + std::to_string(i + 1) + ": word '" + word +
                             "' has no categories");
        auto& existing = raw[word];
        existing.insert(existing.end(), cats.begin(), cats.end());
    }

    AffectiveLexicon lex;
    lex.categories_.assign(all_categories.begin(), all_categories.end());
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < lex.categories_.size(); ++i)
        index[lex.categories_[i]] = static_cast<int>(i);
    for (auto& [word, cats] : raw) {
        std::set<int> ids;
        for (const auto& c : cats) ids.insert(index.at(c));
        lex.word_categories_[word] = std::vector<int>(ids.begin(), ids.end());
    }
    return lex;
}

AffectiveLexicon AffectiveLexicon::load(const std::string& path) {
    return parse(util::read_file(path), path);
}

const std::vector<int>* AffectiveLexicon::lookup(const std::string& word) const {
    auto it = word_categories_.find(word);
    if (it == word_categories_.end()) return nullptr;
    return &it->second;
}

StylisticLexicon default_stylistic_lexicon() {
    return StylisticLexicon::parse(default_stylistic_tsv(), "<builtin stylistic>");
}

AffectiveLexicon demo_affective_lexicon() {
    return AffectiveLexicon::parse(demo_affective_tsv(), "<builtin affective>");
}

}  // namespace credence
