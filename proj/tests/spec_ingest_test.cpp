#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "efpm/spec_ingest.hpp"
#include "generators.hpp"

using namespace efpm;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(EFPM_FIXTURE_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<ParseError> errors_of(std::string_view src) {
  auto parsed = parse_spec(src);
  EXPECT_FALSE(parsed.ok()) << src;
  return parsed.ok() ? std::vector<ParseError>{} : parsed.errors();
}

}  // namespace

TEST(ParseSpec, SingleDataFunction) {
  auto parsed = parse_spec("project \"A\"\nilf \"Customers\" rets=2 dets=25\n");
  ASSERT_TRUE(parsed.ok());
  const Project& p = parsed.value();
  EXPECT_EQ(p.name(), "A");
  ASSERT_EQ(p.data_functions().size(), 1u);
  EXPECT_EQ(p.data_functions()[0], DataFunction("Customers", FunctionKind::ILF, 2, 25));
}

TEST(ParseSpec, MissingAttributeNamesIt) {
  const auto errs = errors_of("project \"A\"\nilf \"X\" rets=2\n");
  ASSERT_EQ(errs.size(), 1u);
  EXPECT_EQ(errs[0].line, 2);
  EXPECT_NE(errs[0].message.find("dets"), std::string::npos);
}

TEST(ParseSpec, CountersFromFile) {
  auto parsed = parse_spec(
      "project \"C\"\n"
      "ilf \"a\" rets=1 dets=1\nilf \"b\" rets=1 dets=1\neif \"c\" rets=1 dets=1\n"
      "ei \"d\" ftrs=0 dets=1\nei \"e\" ftrs=0 dets=1\nei \"f\" ftrs=0 dets=1\n");
  ASSERT_TRUE(parsed.ok());
  EXPECT_EQ(derive_counters(parsed.value()), (Counters{2, 3, 3}));
}

TEST(ParseSpec, BillingFixture) {
  auto parsed = parse_spec(fixture("billing.fps"));
  ASSERT_TRUE(parsed.ok());
  const auto count = count_project(parsed.value());
  // ILF 10+10, EIF 5, EI 3+6+3, EO 7, EQ 3
  EXPECT_EQ(count.total_ufp, 47);
  EXPECT_EQ(count.counters, (Counters{2, 3, 5}));
}

TEST(ParseSpec, CommentsBlankLinesAndCrlf) {
  auto parsed = parse_spec(
      "\xEF\xBB\xBF# header comment\r\n\r\n  project \"X\"  # trailing\r\n"
      "\teq \"a # not a comment\" dets=4 ftrs=0\r\n");
  ASSERT_TRUE(parsed.ok());
  ASSERT_EQ(parsed.value().transactional_functions().size(), 1u);
  const auto& f = parsed.value().transactional_functions()[0];
  EXPECT_EQ(f.name(), "a # not a comment");
  EXPECT_EQ(f.ftrs(), 0);
  EXPECT_EQ(f.dets(), 4);
}

TEST(ParseSpec, MissingHeaderReportsFirstDeclaration) {
  const auto errs = errors_of(fixture("broken.fps"));
  ASSERT_FALSE(errs.empty());
  EXPECT_EQ(errs[0].line, 1);
  EXPECT_EQ(errs[0].column, 1);
  EXPECT_NE(errs[0].message.find("missing project header"), std::string::npos);

  const auto empty = errors_of("");
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].line, 1);

  const auto comments_only = errors_of("# nothing\n\n");
  ASSERT_EQ(comments_only.size(), 1u);
  EXPECT_EQ(comments_only[0].line, 1);
}

TEST(ParseSpec, CollectsEveryErrorWithPositions) {
  const std::string src =
      "project \"P\"\n"                        // 1
      "ilf \"ok\" rets=1 dets=1\n"             // 2
      "xyz \"a\" rets=1 dets=1\n"              // 3 unknown keyword
      "ilf \"b\" rets=1 rets=2 dets=3\n"       // 4 duplicate attribute
      "eo \"c\" ftrs=two dets=3\n"             // 5 non-integer
      "eq \"d\" ftrs=-1 dets=3\n"              // 6 out of range
      "ilf \"ok\" rets=1 dets=1\n"             // 7 duplicate name
      "ei \"e\" rets=1 dets=2\n"               // 8 wrong attribute for kind
      "eif \"f\" rets=0 dets=2\n"              // 9 out of range
      "project \"Q\"\n"                        // 10 duplicate header
      "ei \"unterminated ftrs=1 dets=2\n"      // 11 unterminated name
      "ei noquote ftrs=1 dets=2\n"             // 12 name not quoted
      "eq \"g\" ftrs=1 dets=99999999999\n";    // 13 overflow
  const auto errs = errors_of(src);
  ASSERT_EQ(errs.size(), 12u);
  const std::vector<std::pair<int, int>> expected_positions{
      {3, 1}, {4, 16}, {5, 8}, {6, 8}, {7, 5}, {8, 8}, {8, 1}, {9, 9}, {10, 1}, {11, 4}, {12, 4}, {13, 15}};
  for (std::size_t i = 0; i < errs.size(); ++i) {
    EXPECT_EQ(errs[i].line, expected_positions[i].first) << to_string(errs[i]);
    EXPECT_EQ(errs[i].column, expected_positions[i].second) << to_string(errs[i]);
  }
  EXPECT_NE(errs[0].message.find("unknown keyword"), std::string::npos);
  EXPECT_NE(errs[1].message.find("duplicate attribute"), std::string::npos);
  EXPECT_NE(errs[2].message.find("not an integer"), std::string::npos);
  EXPECT_NE(errs[3].message.find("out of range"), std::string::npos);
  EXPECT_NE(errs[4].message.find("duplicate function name"), std::string::npos);
  EXPECT_NE(errs[5].message.find("unknown attribute 'rets'"), std::string::npos);
  EXPECT_NE(errs[6].message.find("missing attribute 'ftrs'"), std::string::npos);
  EXPECT_EQ(errs[9].offending_text, "\"unterminated ftrs=1 dets=2");
}

TEST(ParseSpec, ColumnsCountCodePoints) {
  const auto errs = errors_of("project \"P\"\nilf \"\xC3\xA9\xC3\xA9\" rets=x dets=1\n");
  ASSERT_EQ(errs.size(), 1u);
  EXPECT_EQ(errs[0].column, 10);
}

TEST(ParseSpec, EveryMalformedLineGetsAnError) {
  const std::vector<std::string> bad_lines{
      "ilf", "ilf \"\" rets=1 dets=1", "ilf \"a\"", "eq \"a\" ftrs=1", "eq \"a\" dets=1",
      "ei \"a\" ftrs=1 dets=1 extra", "ILF \"a\" rets=1 dets=1", "\"a\" rets=1",
      "eo \"a\"ftrs=1 dets=1", "eo \"a\" ftrs= dets=1", "eo \"a\" ftrs=1.5 dets=1",
      "eo \"a\" ftrs=1 dets=0", "ei \"a\" ftrs=+1 dets=2"};
  for (const auto& line : bad_lines) {
    const std::string src = "project \"P\"\n" + line + "\nilf \"fine\" rets=1 dets=1\n";
    const auto errs = errors_of(src);
    ASSERT_FALSE(errs.empty()) << line;
    for (const auto& e : errs) EXPECT_EQ(e.line, 2) << line << " -> " << to_string(e);
  }
}

TEST(ParseSpec, NeverThrowsOnGarbage) {
  std::mt19937 rng(7);
  const std::string chars = "project ilfeqo\"=#\n\r\t 0123456789abc-\xC3\xA9";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string src;
    const int len = static_cast<int>(rng() % 120);
    for (int i = 0; i < len; ++i) src += chars[rng() % chars.size()];
    EXPECT_NO_THROW({
      auto parsed = parse_spec(src);
      if (!parsed.ok()) {
        for (const auto& e : parsed.errors()) {
          EXPECT_GE(e.line, 1);
          EXPECT_GE(e.column, 1);
        }
      }
    });
  }
}

TEST(RenderSpec, CanonicalForm) {
  EXPECT_EQ(render_spec(Project("P")), "project \"P\"\n");
  auto parsed = parse_spec("project \"A\"\nilf \"Customers\"   dets=25   rets=2\n");
  ASSERT_TRUE(parsed.ok());
  EXPECT_EQ(render_spec(parsed.value()), "project \"A\"\nilf \"Customers\" rets=2 dets=25\n");

  Project p("Mixed");
  p.add(TransactionalFunction("q", FunctionKind::EQ, 0, 7));
  p.add(DataFunction("e", FunctionKind::EIF, 3, 9));
  EXPECT_EQ(render_spec(p), "project \"Mixed\"\neif \"e\" rets=3 dets=9\neq \"q\" ftrs=0 dets=7\n");
}

TEST(RenderSpec, RoundTripOnGeneratedProjects) {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 500; ++trial) {
    const Project p = gen::project(rng, 30);
    const std::string text = render_spec(p);
    auto parsed = parse_spec(text);
    ASSERT_TRUE(parsed.ok()) << text << to_string(parsed.errors().front());
    EXPECT_EQ(parsed.value(), p) << text;
    EXPECT_EQ(render_spec(parsed.value()), text);
  }
}
