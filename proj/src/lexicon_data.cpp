#include "credence/lexicon.hpp"

namespace credence {

// Default stylistic lexicon. Rows are the fixed 15 categories; the word lists
// are the published example values plus a few common function words (marked
// below) so the defaults are usable out of the box. Override with --stylistic.
// Multi-word entries are stored token-wise ("in spite" -> "spite"; hyphenated
// names are split), since the extractor matches single tokens.
std::string_view default_stylistic_tsv() {
    static const char* kTsv =
        "# category<TAB>comma-separated lowercase words\n"
        "# additions beyond the core examples: unless; cannot; hence, consequently;\n"
        "# although; nevertheless; most; ours, myself; yourself; they, them, their,\n"
        "# theirs; how, whom; perhaps, apparently, possibly\n"
        "strong_modals\tmight,could,can,would,may\n"
        "weak_modals\tshould,ought,need,shall,will\n"
        "conditionals\tif,unless\n"
        "negation\tno,not,neither,nor,never,cannot\n"
        "inferential_conjunctions\ttherefore,thus,furthermore,hence,consequently\n"
        "contrasting_conjunctions\tuntil,despite,spite,though,although\n"
        "following_conjunctions\tbut,however,otherwise,yet,nevertheless\n"
        "definite_determiners\tthe,this,that,those,these,most\n"
        "first_person\ti,we,me,my,mine,us,our,ours,myself\n"
        "second_person\tyou,your,yours,yourself\n"
        "third_person\the,she,him,her,his,it,its,they,them,their,theirs\n"
        "question_particles\twhy,what,when,which,who,how,whom\n"
        "adjectives\tcorrect,extreme,long,visible\n"
        "adverbs\tmaybe,about,probably,much,perhaps,apparently,possibly\n"
        "proper_nouns\txanax,zoloft,depo,provera\n";
    return kTsv;
}

// Small demo affective lexicon: lowercase surface word -> affect categories.
// A stand-in for a full affect resource; supply your own with --affective.
std::string_view demo_affective_tsv() {
    static const char* kTsv =
        "# word<TAB>comma-separated affect categories\n"
        "depression\tdepression\n"
        "depressed\tdepression\n"
        "depressing\tdepression\n"
        "anxious\tanxiousness\n"
        "anxiety\tanxiousness\n"
        "nervous\tanxiousness,edginess\n"
        "worried\tanxiousness,distress\n"
        "worry\tanxiousness\n"
        "sad\tdownheartedness\n"
        "hopeless\tdownheartedness,resignation\n"
        "miserable\tmisery\n"
        "misery\tmisery\n"
        "distress\tdistress\n"
        "distressed\tdistress\n"
        "upset\tdistress,edginess\n"
        "confident\tconfidence\n"
        "confidence\tconfidence\n"
        "certain\tconfidence\n"
        "sure\tconfidence\n"
        "calm\tcontentment,coolness\n"
        "content\tcontentment\n"
        "happy\tcontentment,levitygaiety\n"
        "cheerful\tlevity,levitygaiety\n"
        "love\taffection,fondness\n"
        "caring\taffection\n"
        "hate\tantipathy,malice\n"
        "angry\tantipathy\n"
        "guilt\tguilt\n"
        "guilty\tguilt,compunction\n"
        "embarrassed\tembarrassment\n"
        "scared\tcreeps\n"
        "panic\thysteria\n"
        "jittery\tjitteriness\n"
        "insecure\tinsecurity\n"
        "proud\tselfesteem,triumph\n"
        "pride\tselfesteem\n"
        "surprised\tsurprise\n"
        "amazed\tsurprise,stupefaction\n"
        "wonder\twonder\n"
        "wonderful\twonder\n"
        "thankful\tapproval\n"
        "grateful\tapproval\n"
        "supportive\tencouragement\n"
        "encouraged\tencouragement\n"
        "encouraging\tencouragement\n"
        "hopeful\teagerness\n"
        "eager\teagerness\n"
        "edgy\tedginess\n"
        "sympathy\tsympathy\n"
        "sympathetic\tsympathy\n"
        "devoted\tdevotion\n"
        "humble\thumility\n"
        "resigned\tresignation\n"
        "helpless\tresignation\n";
    return kTsv;
}

}  // namespace credence
