#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace credence {

class StatementCatalog;

// Word-class lexicon for the stylistic feature vector. Category order is the
// file order and fixes the vector layout. A category named "proper_nouns" is
// special-cased: besides its own word list it also matches catalog alias
// tokens and mid-sentence capitalized tokens (no POS tagger in this pipeline).
class StylisticLexicon {
public:
    static StylisticLexicon parse(std::string_view tsv, const std::string& origin = "<string>");
    static StylisticLexicon load(const std::string& path);

    // Merges normalized drug/effect alias tokens into the proper-noun match set.
    void attach_catalog(const StatementCatalog& catalog);

    const std::vector<std::string>& categories() const { return categories_; }
    std::size_t size() const { return categories_.size(); }
    const std::set<std::string>& words(std::size_t category) const { return words_[category]; }
    int proper_noun_category() const { return proper_noun_category_; }
    bool is_alias_token(const std::string& normalized_token) const {
        return alias_tokens_.count(normalized_token) > 0;
    }

private:
    std::vector<std::string> categories_;
    std::vector<std::set<std::string>> words_;  // lowercase surface forms
    std::set<std::string> alias_tokens_;        // matcher-normalized catalog tokens
    int proper_noun_category_ = -1;
};

// Maps lowercase surface words to affect categories. The global category list
// is the sorted union of all categories in the file, so the vector layout does
// not depend on row order.
class AffectiveLexicon {
public:
    static AffectiveLexicon parse(std::string_view tsv, const std::string& origin = "<string>");
    static AffectiveLexicon load(const std::string& path);

    const std::vector<std::string>& categories() const { return categories_; }
    std::size_t size() const { return categories_.size(); }
    // Category indices for a lowercase token; empty if not in the lexicon.
    const std::vector<int>* lookup(const std::string& word) const;
    const std::map<std::string, std::vector<int>>& entries() const { return word_categories_; }

private:
    std::vector<std::string> categories_;
    std::map<std::string, std::vector<int>> word_categories_;
};

// Bundled defaults; the same content ships as data/stylistic_default.tsv and
// data/affective_demo.tsv.
std::string_view default_stylistic_tsv();
std::string_view demo_affective_tsv();
StylisticLexicon default_stylistic_lexicon();
AffectiveLexicon demo_affective_lexicon();

}  // namespace credence
