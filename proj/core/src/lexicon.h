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

// Closed word lists and suffix rules shared by span extraction, question
// generation and the lexical QA baseline. All lookups take lowercase words.

#ifndef FAITHCHECK_SRC_LEXICON_H_
#define FAITHCHECK_SRC_LEXICON_H_

#include <string>
#include <string_view>

namespace faithcheck::lexicon {

bool is_article(std::string_view w);
bool is_determiner(std::string_view w);
// Pronouns, prepositions, conjunctions, auxiliaries, determiners and
// discourse adverbs.
bool is_closed_class(std::string_view w);
// Finite auxiliaries, modals and copulas that can front a question.
bool is_auxiliary(std::string_view w);
bool is_have_form(std::string_view w);
bool is_wh_word(std::string_view w);
bool is_honorific(std::string_view w);
bool is_role_title(std::string_view w);
bool is_org_keyword(std::string_view w);
bool is_location_keyword(std::string_view w);
bool is_location_preposition(std::string_view w);
bool is_month(std::string_view w);
bool is_weekday(std::string_view w);
bool is_time_unit(std::string_view w);
bool is_number_word(std::string_view w);
bool is_number_multiplier(std::string_view w);
bool is_currency(std::string_view w);

// Irregular past tense or past participle ("ate", "eaten").
bool is_irregular_verb_form(std::string_view w);
bool is_irregular_past(std::string_view w);
bool is_irregular_participle(std::string_view w);

// Base form of a verb: irregular table first, then -ies/-es/-s/-ed rules.
std::string verb_lemma(std::string_view w);

// Key used for loose lexical matching: irregular forms map to their lemma,
// regular -ies/-ed/-s endings are stripped.
std::string match_key(std::string_view w);

// Plain ASCII digits with optional internal ',' or '.' ("60,000", "3.5").
bool is_numeral(std::string_view w);

bool is_alpha_word(std::string_view w);

}  // namespace faithcheck::lexicon

#endif  // FAITHCHECK_SRC_LEXICON_H_
