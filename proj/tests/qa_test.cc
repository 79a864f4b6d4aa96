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


#include <gtest/gtest.h>

#include "faithcheck/qa_backend.h"
#include "faithcheck/text.h"

namespace faithcheck {
namespace {

constexpr char kInjuryNews[] =
    "Winger Ross Wallace (knee) and right-back Steven Reid (calf) could return "
    "for the Premier League match against Barclays rivals. The club confirmed "
    "the news on Tuesday.";

TEST(LexicalQaTest, AnswersPersonQuestion) {
  LexicalQaBackend qa;
  const QaAnswer a = qa.answer("Who and Steven Reid could return for the premier league match?", kInjuryNews);
  EXPECT_FALSE(a.unanswerable);
  EXPECT_EQ(a.answer_text, "Ross Wallace");
  EXPECT_GT(a.confidence, 0.0);
  EXPECT_LE(a.confidence, 1.0);
}

TEST(LexicalQaTest, AnswersDateQuestion) {
  LexicalQaBackend qa;
  EXPECT_EQ(qa.answer("When did the club confirm the news?", kInjuryNews).answer_text, "Tuesday");
  EXPECT_EQ(qa.answer("When was Sally born?",
                      "Sally was born in 1958. She grew up in Ohio and studied law.")
                .answer_text,
            "1958");
}

TEST(LexicalQaTest, EmptyContextIsUnanswerable) {
  LexicalQaBackend qa;
  const QaAnswer a = qa.answer("Who won?", "");
  EXPECT_TRUE(a.unanswerable);
  EXPECT_TRUE(a.answer_text.empty());
  EXPECT_EQ(a.confidence, 0.0);
}

TEST(LexicalQaTest, NoTypedCandidateIsUnanswerable) {
  LexicalQaBackend qa;
  EXPECT_TRUE(qa.answer("When did it rain?", "It rained.").unanswerable);
}

TEST(LexicalQaTest, AnswerIsContextSubstringAndDeterministic) {
  LexicalQaBackend qa;
  const char* questions[] = {"Who could return?", "What did the club confirm?",
                             "Where did Ross Wallace play?", "How long was he out?"};
  for (const char* q : questions) {
    const QaAnswer first = qa.answer(q, kInjuryNews);
    EXPECT_EQ(first.answer_text.empty(), first.unanswerable) << q;
    if (!first.unanswerable) {
      EXPECT_NE(std::string(kInjuryNews).find(first.answer_text), std::string::npos) << q;
    }
    for (int i = 0; i < 3; ++i) EXPECT_EQ(qa.answer(q, kInjuryNews), first) << q;
    EXPECT_EQ(answer_question(qa, q, kInjuryNews), first);
  }
  EXPECT_EQ(qa.name(), "lexical");
}

}  // namespace
}  // namespace faithcheck
