// Copyright 2026 The Anticart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anticart/pregroup.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <json.hpp>

#include "anticart/error.hpp"
#include "anticart/semantics.hpp"
#include "test_support.hpp"

namespace anticart {
namespace {

using nlohmann::json;
using testing::data_path;
using testing::read_text;

Lexicon demo() { return Lexicon::from_json(read_text(data_path("demo.json"))); }

Tensor meaning(const Lexicon& lex, const std::string& sentence, const std::string& target = "s",
               Doubling doubling = Doubling::Thin) {
  const auto r = parse(lex, tokenize(sentence), parse_types(target));
  if (r.witnesses.size() != 1) throw std::runtime_error("expected one parse of '" + sentence + "'");
  return evaluate(grammar_diagram(lex, r.witnesses[0]), lex.model(doubling));
}

TEST(Tokenize, SplitsOnWhitespace) {
  EXPECT_EQ(tokenize("  Alice\thates  Bob "), (std::vector<std::string>{"Alice", "hates", "Bob"}));
  EXPECT_TRUE(tokenize("   ").empty());
}

TEST(Parse, AliceHatesBob) {
  const auto r = parse(demo(), tokenize("Alice hates Bob"), parse_types("s"));
  ASSERT_EQ(r.witnesses.size(), 1u);
  const auto& w = r.witnesses[0];
  EXPECT_EQ(w.links, (std::vector<std::pair<int, int>>{{0, 1}, {3, 4}}));
  EXPECT_EQ(w.residual, std::vector<int>{2});
  EXPECT_EQ(w.word_start, (std::vector<int>{0, 1, 4, 5}));
  EXPECT_TRUE(replay_witness(w, parse_types("s")));
  EXPECT_FALSE(replay_witness(w, parse_types("n")));
}

TEST(Parse, SentenceVectorMatchesDirectSum) {
  Rng rng(4);
  Lexicon lex({{"n", 2}, {"s", 2}});
  const Tensor alice = random_real_tensor({2}, rng);
  const Tensor bob = random_real_tensor({2}, rng);
  const Tensor hates = random_real_tensor({2, 2, 2}, rng);
  lex.add("Alice", {parse_types("n"), PayloadKind::Pure, "", alice, ""});
  lex.add("Bob", {parse_types("n"), PayloadKind::Pure, "", bob, ""});
  lex.add("hates", {parse_types("n.L s n.R"), PayloadKind::Pure, "", hates, ""});
  const Tensor t = meaning(lex, "Alice hates Bob");
  ASSERT_EQ(t.shape(), std::vector<int>{2});
  for (int s = 0; s < 2; ++s) {
    Complex sum = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sum += alice.values()[i] * hates.values()[(i * 2 + s) * 2 + j] * bob.values()[j];
    EXPECT_NEAR(std::abs(t.values()[s] - sum), 0.0, 1e-12);
  }
}

TEST(Parse, NoParseReportsResiduals) {
  const auto r = parse(demo(), tokenize("Alice Bob"), parse_types("s"));
  EXPECT_TRUE(r.witnesses.empty());
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].residual, parse_types("n n"));
}

TEST(Parse, UnknownWordThrows) {
  EXPECT_THROW(parse(demo(), tokenize("Alice frobs Bob"), parse_types("s")), UnknownWord);
}

TEST(Parse, ReadingCombinationsAreBounded) {
  Lexicon lex({{"n", 2}});
  for (int k = 0; k < 3; ++k) lex.add("x", {parse_types(k == 0 ? "n" : "n n.R n"), PayloadKind::Pure, "", {}, ""});
  const auto r = parse(lex, tokenize("x x x x x"), parse_types("n"), {.max_combinations = 10});
  EXPECT_TRUE(r.truncated);
}

TEST(Parse, MatchesBruteForceOnRandomLexicons) {
  Rng rng(17);
  int parsed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_grammar(rng);
    const auto r = parse(g.lexicon, g.sentence, g.target);
    const auto oracle = testing::brute_force_parse(g.lexicon, g.sentence, g.target);
    ASSERT_EQ(r.witnesses, oracle) << "trial " << trial;
    for (const auto& w : r.witnesses) EXPECT_TRUE(replay_witness(w, g.target));
    parsed += !oracle.empty();
  }
  EXPECT_GT(parsed, 60);
}

TEST(Parse, AmbiguitySurfacesAsSeveralWitnesses) {
  // n n.R n n.L n reduces to n as {(1,4),(2,3)} or as {(0,3),(1,2)}.
  Lexicon lex({{"n", 2}});
  lex.add("a", {parse_types("n n.R"), PayloadKind::Pure, "", {}, ""});
  lex.add("b", {parse_types("n n.L"), PayloadKind::Pure, "", {}, ""});
  lex.add("c", {parse_types("n"), PayloadKind::Pure, "", {}, ""});
  const auto r = parse(lex, tokenize("a b c"), parse_types("n"));
  ASSERT_EQ(r.witnesses.size(), 2u);
  EXPECT_EQ(r.witnesses[0].links, (std::vector<std::pair<int, int>>{{0, 3}, {1, 2}}));
  EXPECT_EQ(r.witnesses[1].links, (std::vector<std::pair<int, int>>{{1, 4}, {2, 3}}));
  EXPECT_EQ(r.witnesses[0].residual, std::vector<int>{4});
  EXPECT_EQ(r.witnesses[1].residual, std::vector<int>{0});
}

json random_negation_lexicon(Rng& rng) {
  json doc = json::parse(read_text(data_path("demo.json")));
  std::normal_distribution<double> gauss;
  std::vector<double> likes;
  for (auto& e : doc["words"]) {
    const std::string w = e["word"];
    if (w == "Alice" || w == "Bob" || w == "likes" || w == "not") {
      std::vector<double> data(e["data"].size());
      for (auto& x : data) x = gauss(rng);
      e["data"] = data;
      if (w == "likes") likes = data;
    }
  }
  for (auto& e : doc["words"]) {
    if (e["word"] == "like") e["data"] = likes;
  }
  return doc;
}

TEST(Meaning, NegationAppliesTheMatrix) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const json doc = random_negation_lexicon(rng);
    std::vector<double> n;
    for (const auto& e : doc["words"]) {
      if (e["word"] == "not") n = e["data"].get<std::vector<double>>();
    }
    const Lexicon lex = Lexicon::from_json(doc.dump());
    const Tensor pos = meaning(lex, "Alice likes Bob");
    const Tensor neg = meaning(lex, "Alice does not like Bob");
    const Tensor aux = meaning(lex, "Alice does like Bob");
    const auto p = pos.values();
    ASSERT_EQ(neg.shape(), std::vector<int>{2});
    for (int i = 0; i < 2; ++i) {
      const Complex expected = n[i * 2 + 0] * p[0] + n[i * 2 + 1] * p[1];
      EXPECT_NEAR(std::abs(neg.values()[i] - expected), 0.0, 1e-9);
    }
    EXPECT_LT(max_abs_diff(aux, pos), 1e-12);
  }
}

TEST(Meaning, QueenIsMaximallyAmbiguous) {
  const Tensor rho = density_matrix(meaning(demo(), "queen", "n", Doubling::Thick));
  EXPECT_NEAR(entropy(rho), std::log2(3.0), 1e-6);
}

TEST(Meaning, ShippedContextsDisambiguate) {
  const json cases = json::parse(read_text(data_path("disambiguation.json")));
  ASSERT_FALSE(cases.empty());
  for (const auto& c : cases) {
    const Lexicon lex = Lexicon::from_json(read_text(data_path(c["lexicon"])));
    const std::string word = c["word"];
    const auto& entry = lex.entries(word)[0];
    const double before = entropy(density_matrix(meaning(lex, word, to_string(entry.type), Doubling::Thick)));
    const double after = entropy(density_matrix(
        meaning(lex, word + " " + c["context"].get<std::string>(), c["target"], Doubling::Thick)));
    EXPECT_LT(after, before - 1e-6) << word << " " << c["context"];
  }
}

TEST(Meaning, RelativePronounCopiesTheNoun) {
  // "Alice who sings" = Alice ⊙ (sum over s of sings), thin semantics.
  const Lexicon lex = demo();
  const json doc = json::parse(read_text(data_path("demo.json")));
  std::vector<double> alice, sings;
  for (const auto& e : doc["words"]) {
    if (e["word"] == "Alice") alice = e["data"].get<std::vector<double>>();
    if (e["word"] == "sings") sings = e["data"].get<std::vector<double>>();
  }
  const Tensor t = meaning(lex, "Alice who sings", "n");
  ASSERT_EQ(t.shape(), std::vector<int>{4});
  for (int i = 0; i < 4; ++i) {
    const double expected = alice[i] * (sings[i * 2] + sings[i * 2 + 1]);
    EXPECT_NEAR(std::abs(t.values()[i] - expected), 0.0, 1e-12);
  }
}

TEST(Meaning, GrammarDiagramsAreValid) {
  const Lexicon lex = demo();
  for (const char* s : {"Alice hates Bob", "Alice does not like Bob", "queen rocks the stage"}) {
    const auto r = parse(lex, tokenize(s), parse_types("s"));
    ASSERT_EQ(r.witnesses.size(), 1u) << s;
    EXPECT_TRUE(validate(grammar_diagram(lex, r.witnesses[0])).empty()) << s;
  }
}

TEST(Lexicon, RejectsBadEntries) {
  EXPECT_THROW(Lexicon::from_json("{"), FormatError);
  EXPECT_THROW(Lexicon::from_json(R"({"bases": {"n": 2}, "words": [{"word": "x", "type": "q", "payload": "dense"}]})"),
               UnknownBase);
  EXPECT_THROW(Lexicon::from_json(
                   R"({"bases": {"n": 2}, "words": [{"word": "x", "type": "n", "payload": "dense", "data": [1]}]})"),
               DimensionMismatch);
  Lexicon lex({{"n", 2}, {"s", 2}});
  EXPECT_THROW(lex.add("not", {parse_types("n.L s s.R"), PayloadKind::Structural, "negation", {}, ""}), FormatError);
  EXPECT_THROW(lex.add("not", {parse_types("n.L s s.R n"), PayloadKind::Structural, "negation", {}, ""}),
               PayloadMissing);
  EXPECT_THROW(lex.entries("ghost"), UnknownWord);
}

}  // namespace
}  // namespace anticart
