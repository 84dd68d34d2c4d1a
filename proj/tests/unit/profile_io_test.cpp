#include <gtest/gtest.h>

#include <filesystem>

#include "scx/error.hpp"
#include "scx/random.hpp"
#include "scx/rules.hpp"
#include "scx/variable_states.hpp"
#include "support.hpp"

namespace scx {
namespace {

int parse_error_line(std::string_view text) {
  try {
    parse_profile_document(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(Parse, Unanimous) {
  const Profile p = parse_profile("3 2\nx x\ny y\nz z");
  EXPECT_EQ(p, test::unanimous_xyz(2));
}

TEST(Parse, Example5Document) {
  const Profile p = parse_profile("4 5\nx x y z w\ny y z w z\nw z w y y\nz w x x x\n");
  EXPECT_EQ(p, reference::example5());
  EXPECT_EQ(eval_plurality(p, false), ChoiceSet::singleton(p.alternatives().index_of("x")));
}

TEST(Parse, CommentsAndWhitespace) {
  const Profile p = parse_profile("# leading comment\n3  2\n\n x\tx \n# mid\ny y\nz z\n");
  EXPECT_EQ(p, test::unanimous_xyz(2));
}

TEST(Parse, DeclaredOrderWins) {
  const Profile p = parse_profile("3 2\n# alternatives: z y x\nx x\ny y\nz z\n");
  EXPECT_EQ(p.alternatives().names(), (std::vector<std::string>{"z", "y", "x"}));
  EXPECT_EQ(p.state(0).top(), 2);
}

TEST(Parse, FirstAppearanceOrder) {
  const Profile p = parse_profile("3 2\nb a\na c\nc b\n");
  EXPECT_EQ(p.alternatives().names(), (std::vector<std::string>{"b", "a", "c"}));
}

TEST(Parse, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("3 2\nx x\ny z\nz z"), 4);
  EXPECT_EQ(parse_error_line("3 2\nx x\ny y z\nz z"), 3);
  EXPECT_EQ(parse_error_line("3 1\nx\ny\nz"), 1);
  EXPECT_EQ(parse_error_line("three 2\n"), 1);
  EXPECT_EQ(parse_error_line("3 2\nx x\ny y\n"), 3);
  EXPECT_EQ(parse_error_line(""), 1);
  EXPECT_EQ(parse_error_line("# c\nmulti 3 2\n1 1\nx x\ny y\nz z\n"), 2);  // duplicate columns
  EXPECT_EQ(parse_error_line("multi 3 2\n1 0\nx y\ny x\nz z\n"), 2);
  EXPECT_EQ(parse_error_line("multi 3 1\n1\nx\ny\nz\n"), 1);
  EXPECT_EQ(parse_error_line("3 2\nx x\ny y\nz z\nw w\n"), 5);
}

TEST(Parse, NonPermutationColumnIsParseError) {
  EXPECT_THROW(parse_profile("3 2\nx x\ny z\nz z"), ParseError);
}

TEST(Parse, MultiDocument) {
  const auto d = parse_profile_document("multi 3 2\n2 1\nx y\ny x\nz z\n");
  ASSERT_TRUE(std::holds_alternative<MultiProfile>(d));
  const MultiProfile& mp = std::get<MultiProfile>(d);
  EXPECT_EQ(mp.n(), 3);
  EXPECT_EQ(parse_profile("multi 3 2\n2 1\nx y\ny x\nz z\n").n(), 3);
}

TEST(Format, RoundTripRandomProfiles) {
  Rng rng(31);
  for (int t = 0; t < 500; ++t) {
    const int m = 2 + rng.below(8);
    const Profile p = random_profile(AlternativeSet::standard(m), 2 + rng.below(9), rng);
    const std::string text = format_profile(p);
    EXPECT_EQ(parse_profile(text), p) << text;
    EXPECT_EQ(format_profile(parse_profile(text)), text);
    const MultiProfile mp = convert(p);
    const auto back = parse_profile_document(format_multi_profile(mp));
    ASSERT_TRUE(std::holds_alternative<MultiProfile>(back));
    EXPECT_EQ(std::get<MultiProfile>(back), mp);
  }
}

TEST(Format, KeepsDeclaredOrderForTieBreaks) {
  // y appears first in the body, but x is declared first.
  const Profile p = parse_profile("3 2\n# alternatives: x y z\ny x\nx y\nz z\n");
  const Profile q = parse_profile(format_profile(p));
  EXPECT_EQ(eval_plurality(q, true), eval_plurality(p, true));
  EXPECT_EQ(q.alternatives(), p.alternatives());
}

TEST(DataFiles, MatchReferenceProfiles) {
  const std::filesystem::path dir = SCX_DATA_DIR;
  const std::pair<const char*, Profile (*)()> files[] = {
      {"example2_r1.prof", &reference::example2_r1},   {"example2_r2.prof", &reference::example2_r2},
      {"note_pair_profile.prof", &reference::note_pair_profile},
      {"note_giia_r.prof", &reference::note_giia_r},   {"note_giia_r_prime.prof", &reference::note_giia_r_prime},
      {"example3_r.prof", &reference::example3_r},     {"example3_r_prime.prof", &reference::example3_r_prime},
      {"prop2_r1.prof", &reference::prop2_r1},         {"prop2_r2.prof", &reference::prop2_r2},
      {"example4_r.prof", &reference::example4_r},     {"example4_r_prime.prof", &reference::example4_r_prime},
      {"example5.prof", &reference::example5},         {"example6.prof", &reference::example6},
  };
  for (const auto& [name, make] : files) {
    const auto d = load_profile_document((dir / name).string());
    ASSERT_TRUE(std::holds_alternative<Profile>(d)) << name;
    EXPECT_EQ(std::get<Profile>(d), make()) << name;
  }
  const auto multi = load_profile_document((dir / "example6_multi.prof").string());
  ASSERT_TRUE(std::holds_alternative<MultiProfile>(multi));
  EXPECT_EQ(std::get<MultiProfile>(multi), convert(reference::example6()));
  EXPECT_THROW(load_profile_document((dir / "missing.prof").string()), InputError);
}

}  // namespace
}  // namespace scx
