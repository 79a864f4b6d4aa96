// Copyright 2026 The faithcheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexicon.h"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace faithcheck::lexicon {
namespace {

using WordSet = std::unordered_set<std::string_view>;

bool in(const WordSet& set, std::string_view w) { return set.contains(w); }

const WordSet& articles() {
  static const WordSet s = {"a", "an", "the"};
  return s;
}

const WordSet& determiners() {
  static const WordSet s = {"a",     "an",   "the",   "this",  "that",
                            "these", "those", "his",  "her",   "its",
                            "their", "our",  "my",    "your",  "another",
                            "every", "each"};
  return s;
}

const WordSet& auxiliaries() {
  static const WordSet s = {"is",    "are",   "was",   "were", "am",
                            "has",   "have",  "had",   "do",   "does",
                            "did",   "will",  "would", "can",  "could",
                            "shall", "should", "may",  "might", "must"};
  return s;
}

const WordSet& closed_class() {
  static const WordSet s = {
      // pronouns
      "i", "you", "he", "she", "it", "we", "they", "me", "him", "us", "them",
      "who", "whom", "which", "what", "whose", "when", "where", "why", "how",
      "himself", "herself", "itself", "themselves", "there", "here",
      "someone", "something", "anyone", "anything", "everyone", "everything",
      "nobody", "nothing",
      // prepositions
      "in", "on", "at", "of", "for", "with", "from", "to", "by", "about",
      "into", "over", "after", "before", "since", "during", "under",
      "between", "through", "against", "without", "within", "near", "across",
      "around", "than", "as", "per", "like", "upon", "onto", "off", "out",
      "up", "down", "among", "toward", "towards", "until", "despite",
      // conjunctions
      "and", "or", "but", "nor", "so", "yet", "if", "because", "while",
      "although", "though", "whether", "unless",
      // auxiliaries and non-finite be
      "be", "been", "being", "having",
      // adverbs and discourse markers
      "not", "never", "no", "also", "just", "however", "meanwhile",
      "yesterday", "today", "tomorrow", "later", "then", "now", "still",
      "already", "almost", "only", "even", "very", "too", "more", "most",
      "all", "both", "such", "some", "any", "other", "many", "much", "few",
      "several", "last", "next", "first", "again", "ago", "instead",
      "recently", "currently", "previously", "earlier", "furthermore",
      "moreover", "nevertheless", "thus", "therefore", "indeed"};
  return s;
}

const WordSet& wh_words() {
  static const WordSet s = {"who", "whom", "whose", "what", "which",
                            "when", "where", "why", "how"};
  return s;
}

const WordSet& honorifics() {
  static const WordSet s = {"mr",   "mrs",  "ms",    "miss",   "dr",
                            "sir",  "lady", "lord",  "dame",   "mister",
                            "madam", "prof", "mme",  "mlle"};
  return s;
}

const WordSet& role_titles() {
  static const WordSet s = {
      "winger",     "striker",   "midfielder", "defender",  "goalkeeper",
      "captain",    "coach",     "manager",    "president", "senator",
      "governor",   "chancellor", "minister",  "officer",   "professor",
      "judge",      "king",      "queen",      "prince",    "princess",
      "chairman",   "chairwoman", "chief",     "general",   "detective",
      "sergeant",   "inspector", "constable",  "bishop",    "pope",
      "mayor",      "secretary", "spokesman",  "spokeswoman", "director",
      "ceo",        "boss",      "star",       "actor",     "actress",
      "singer",     "player",    "forward",    "skipper",   "rep",
      "sen",        "gov"};
  return s;
}

const WordSet& org_keywords() {
  static const WordSet s = {
      "league",     "club",       "united",     "fc",        "inc",
      "corp",       "corporation", "company",   "ltd",       "university",
      "college",    "school",     "party",      "council",   "association",
      "committee",  "bank",       "group",      "ministry",  "department",
      "agency",     "court",      "police",     "church",    "airport",
      "hospital",   "times",      "news",       "institute", "foundation",
      "commission", "government", "parliament", "congress",  "senate",
      "army",       "navy",       "airlines",   "network",   "team",
      "board",      "society",    "union",      "organization",
      "organisation", "fund",     "service",    "office",    "federation",
      "museum",     "post",       "journal",    "press",     "club"};
  return s;
}

const WordSet& location_keywords() {
  static const WordSet s = {"street", "road",     "avenue",  "river",
                            "lake",   "mountain", "island",  "county",
                            "province", "states", "kingdom", "republic",
                            "city",   "valley",   "beach",   "bay",
                            "park",   "square",   "bridge",  "coast"};
  return s;
}

const WordSet& location_prepositions() {
  static const WordSet s = {"in",     "at",         "near",   "across",
                            "from",   "throughout", "inside", "outside",
                            "toward", "towards"};
  return s;
}

const WordSet& months() {
  static const WordSet s = {
      "january", "february", "march",    "april",    "may",     "june",
      "july",    "august",   "september", "october", "november", "december",
      "jan",     "feb",      "mar",      "apr",      "jun",     "jul",
      "aug",     "sep",      "sept",     "oct",      "nov",     "dec"};
  return s;
}

const WordSet& weekdays() {
  static const WordSet s = {"monday", "tuesday",  "wednesday", "thursday",
                            "friday", "saturday", "sunday"};
  return s;
}

const WordSet& time_units() {
  static const WordSet s = {
      "second",  "seconds", "minute", "minutes", "hour",    "hours",
      "day",     "days",    "week",   "weeks",   "month",   "months",
      "year",    "years",   "decade", "decades", "century", "centuries",
      "fortnight", "fortnights"};
  return s;
}

const WordSet& number_words() {
  static const WordSet s = {
      "one",     "two",      "three",    "four",     "five",    "six",
      "seven",   "eight",    "nine",     "ten",      "eleven",  "twelve",
      "thirteen", "fourteen", "fifteen", "sixteen",  "seventeen",
      "eighteen", "nineteen", "twenty",  "thirty",   "forty",   "fifty",
      "sixty",   "seventy",  "eighty",   "ninety",   "hundred", "thousand",
      "million", "billion",  "trillion", "dozen",    "dozens",  "hundreds",
      "thousands", "millions"};
  return s;
}

const WordSet& number_multipliers() {
  static const WordSet s = {"hundred", "thousand", "million", "billion",
                            "trillion"};
  return s;
}

const WordSet& currencies() {
  static const WordSet s = {"$",      "£",      "€",     "¥",    "dollars",
                            "dollar", "pounds", "pound", "euros", "euro",
                            "cents",  "yen",    "pence"};
  return s;
}

struct IrregularVerb {
  std::string_view lemma;
  std::string_view past;
  std::string_view participle;
};

constexpr IrregularVerb kIrregularVerbs[] = {
    {"be", "was", "been"},          {"be", "were", "been"},
    {"have", "had", "had"},         {"do", "did", "done"},
    {"go", "went", "gone"},         {"eat", "ate", "eaten"},
    {"see", "saw", "seen"},         {"meet", "met", "met"},
    {"take", "took", "taken"},      {"give", "gave", "given"},
    {"make", "made", "made"},       {"say", "said", "said"},
    {"tell", "told", "told"},       {"find", "found", "found"},
    {"leave", "left", "left"},      {"win", "won", "won"},
    {"run", "ran", "run"},          {"come", "came", "come"},
    {"get", "got", "gotten"},       {"know", "knew", "known"},
    {"think", "thought", "thought"}, {"buy", "bought", "bought"},
    {"bring", "brought", "brought"}, {"become", "became", "become"},
    {"begin", "began", "begun"},    {"write", "wrote", "written"},
    {"lead", "led", "led"},         {"hold", "held", "held"},
    {"keep", "kept", "kept"},       {"lose", "lost", "lost"},
    {"pay", "paid", "paid"},        {"sell", "sold", "sold"},
    {"send", "sent", "sent"},       {"spend", "spent", "spent"},
    {"stand", "stood", "stood"},    {"build", "built", "built"},
    {"feel", "felt", "felt"},       {"speak", "spoke", "spoken"},
    {"break", "broke", "broken"},   {"choose", "chose", "chosen"},
    {"drive", "drove", "driven"},   {"fall", "fell", "fallen"},
    {"fly", "flew", "flown"},       {"forget", "forgot", "forgotten"},
    {"grow", "grew", "grown"},      {"hide", "hid", "hidden"},
    {"ride", "rode", "ridden"},     {"rise", "rose", "risen"},
    {"sing", "sang", "sung"},       {"sink", "sank", "sunk"},
    {"steal", "stole", "stolen"},   {"swim", "swam", "swum"},
    {"throw", "threw", "thrown"},   {"wear", "wore", "worn"},
    {"draw", "drew", "drawn"},      {"drink", "drank", "drunk"},
    {"shake", "shook", "shaken"},   {"teach", "taught", "taught"},
    {"catch", "caught", "caught"},  {"fight", "fought", "fought"},
    {"seek", "sought", "sought"},   {"sleep", "slept", "slept"},
    {"sit", "sat", "sat"},          {"hear", "heard", "heard"},
    {"mean", "meant", "meant"},     {"lend", "lent", "lent"},
    {"deal", "dealt", "dealt"},     {"dig", "dug", "dug"},
    {"feed", "fed", "fed"},         {"flee", "fled", "fled"},
    {"hang", "hung", "hung"},       {"lay", "laid", "laid"},
    {"light", "lit", "lit"},        {"shoot", "shot", "shot"},
    {"stick", "stuck", "stuck"},    {"strike", "struck", "struck"},
    {"swing", "swung", "swung"},    {"understand", "understood", "understood"},
    {"withdraw", "withdrew", "withdrawn"}, {"arise", "arose", "arisen"},
    {"bear", "bore", "born"},       {"bite", "bit", "bitten"},
    {"blow", "blew", "blown"},      {"forgive", "forgave", "forgiven"},
    {"freeze", "froze", "frozen"},  {"tear", "tore", "torn"},
    {"wake", "woke", "woken"},      {"undertake", "undertook", "undertaken"},
    {"rebuild", "rebuilt", "rebuilt"}, {"overcome", "overcame", "overcome"},
    {"slide", "slid", "slid"},      {"spin", "spun", "spun"},
};

// Present-tense forms that suffix stripping gets wrong.
constexpr std::pair<std::string_view, std::string_view> kIrregularPresent[] = {
    {"is", "be"},   {"are", "be"},   {"am", "be"},
    {"has", "have"}, {"does", "do"}, {"goes", "go"},
};

const std::unordered_map<std::string_view, std::string_view>& lemma_table() {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::string_view, std::string_view>();
    for (const auto& v : kIrregularVerbs) {
      t->emplace(v.past, v.lemma);
      t->emplace(v.participle, v.lemma);
    }
    for (const auto& [form, lemma] : kIrregularPresent) t->emplace(form, lemma);
    return t;
  }();
  return *table;
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() && w.ends_with(suffix);
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Stems that lost a silent e before -ed ("scor" -> "score", "decid" ->
// "decide"), judged from the consonant-vowel-consonant tail. Vowel sets per
// final consonant keep common e-less verbs intact ("visit", "develop",
// "abandon", "open").
bool needs_silent_e(std::string_view stem) {
  const std::size_t n = stem.size();
  if (n < 3) return false;
  const char last = stem[n - 1];
  const char v = stem[n - 2];
  const bool cvc = is_vowel(v) && !is_vowel(stem[n - 3]);
  auto vowel_in = [v](std::string_view set) {
    return set.find(v) != std::string_view::npos;
  };
  switch (last) {
    case 's':
      return is_vowel(v) && !ends_with(stem, "cus");
    case 't':
      return cvc && vowel_in("aou");
    case 'd':
    case 'k':
    case 'l':
    case 'm':
      return cvc && vowel_in("aiou");
    case 'n':
      return cvc && vowel_in("aiu");
    case 'b':
      return cvc && vowel_in("iou");
    case 'p':
      return cvc && vowel_in("ai");
    case 'r':
      return cvc && (vowel_in("aiu") || n <= 4 || ends_with(stem, "plor") ||
                     ends_with(stem, "gnor") || ends_with(stem, "stor"));
    default:
      return false;
  }
}

}  // namespace

bool is_article(std::string_view w) { return in(articles(), w); }
bool is_determiner(std::string_view w) { return in(determiners(), w); }
bool is_closed_class(std::string_view w) {
  return in(closed_class(), w) || in(determiners(), w) ||
         in(auxiliaries(), w);
}
bool is_auxiliary(std::string_view w) { return in(auxiliaries(), w); }
bool is_have_form(std::string_view w) {
  return w == "has" || w == "have" || w == "had";
}
bool is_wh_word(std::string_view w) { return in(wh_words(), w); }
bool is_honorific(std::string_view w) { return in(honorifics(), w); }
bool is_role_title(std::string_view w) { return in(role_titles(), w); }
bool is_org_keyword(std::string_view w) { return in(org_keywords(), w); }
bool is_location_keyword(std::string_view w) {
  return in(location_keywords(), w);
}
bool is_location_preposition(std::string_view w) {
  return in(location_prepositions(), w);
}
bool is_month(std::string_view w) { return in(months(), w); }
bool is_weekday(std::string_view w) { return in(weekdays(), w); }
bool is_time_unit(std::string_view w) { return in(time_units(), w); }
bool is_number_word(std::string_view w) { return in(number_words(), w); }
bool is_number_multiplier(std::string_view w) {
  return in(number_multipliers(), w);
}
bool is_currency(std::string_view w) { return in(currencies(), w); }

bool is_irregular_past(std::string_view w) {
  return std::any_of(std::begin(kIrregularVerbs), std::end(kIrregularVerbs),
                     [&](const IrregularVerb& v) { return v.past == w; });
}

bool is_irregular_participle(std::string_view w) {
  return std::any_of(std::begin(kIrregularVerbs), std::end(kIrregularVerbs),
                     [&](const IrregularVerb& v) { return v.participle == w; });
}

bool is_irregular_verb_form(std::string_view w) {
  return is_irregular_past(w) || is_irregular_participle(w);
}

std::string verb_lemma(std::string_view w) {
  const auto& table = lemma_table();
  if (auto it = table.find(w); it != table.end()) {
    return std::string(it->second);
  }
  if (w.size() > 4 && (ends_with(w, "ies") || ends_with(w, "ied"))) {
    return std::string(w.substr(0, w.size() - 3)) + "y";
  }
  if (w.size() > 4 && ends_with(w, "eed")) {
    return std::string(w.substr(0, w.size() - 1));
  }
  if (w.size() > 4 && ends_with(w, "ed")) {
    std::string stem(w.substr(0, w.size() - 2));
    const char last = stem.back();
    const char before = stem[stem.size() - 2];
    if (last == before && !is_vowel(last) && last != 'l' && last != 's' &&
        last != 'z' && last != 'f') {
      stem.pop_back();
    } else if (last == 'v' || last == 'c' || last == 'g' || last == 'u' ||
               last == 'z' || needs_silent_e(stem)) {
      stem.push_back('e');
    }
    return stem;
  }
  if (w.size() > 4 &&
      (ends_with(w, "ches") || ends_with(w, "shes") || ends_with(w, "sses") ||
       ends_with(w, "xes") || ends_with(w, "zes") || ends_with(w, "oes"))) {
    return std::string(w.substr(0, w.size() - 2));
  }
  if (w.size() > 3 && ends_with(w, "s") && !ends_with(w, "ss") &&
      !ends_with(w, "us") && !ends_with(w, "is")) {
    return std::string(w.substr(0, w.size() - 1));
  }
  return std::string(w);
}

std::string match_key(std::string_view w) { return verb_lemma(w); }

bool is_numeral(std::string_view w) {
  if (w.empty() || !(w.front() >= '0' && w.front() <= '9') ||
      !(w.back() >= '0' && w.back() <= '9')) {
    return false;
  }
  return std::all_of(w.begin(), w.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == ',' || c == '.';
  });
}

bool is_alpha_word(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '\'' ||
           u >= 0x80;
  });
}

}  // namespace faithcheck::lexicon
