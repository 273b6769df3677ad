#include <gtest/gtest.h>

#include <braidthom/errors.hpp>
#include <braidthom/named.hpp>
#include <braidthom/random.hpp>
#include <braidthom/svg.hpp>
#include <braidthom/text.hpp>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

using namespace braidthom;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

std::size_t syntax_position(const char* text) {
  try {
    parse_element(text);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST(Text, ParseExamples) {
  EXPECT_TRUE(identical(parse_element("[10100 | e | 11000]"), named("x0")));
  EXPECT_TRUE(identical(parse_element("[0 | e | 0]"), Element::identity()));
  EXPECT_TRUE(identical(parse_element("[0||0]"), Element::identity()));
  EXPECT_TRUE(identical(parse_element("[11000 | s1^-1 s2^-1 (0,0,-2) | 10100]"), named("t1")));
  const Element g = parse_element(" [ 100|s1^3(1 , -1)|100 ] ");
  EXPECT_EQ(g.braid().length(), 3u);
  EXPECT_EQ(g.twists(), (Twists{1, -1}));
}

TEST(Text, SyntaxErrorsCarryPositions) {
  EXPECT_EQ(syntax_position("10100 | e | 11000]"), 0u);
  EXPECT_EQ(syntax_position("[10 | e | 0]"), 1u);
  EXPECT_EQ(syntax_position("[100 | s1 x | 100]"), 10u);
  EXPECT_EQ(syntax_position("[100 | s1 (1,) | 100]"), 13u);
  EXPECT_EQ(syntax_position("[100 | s1 | 100] junk"), 17u);
  EXPECT_EQ(syntax_position("[100 | s^2 | 100]"), 8u);
}

TEST(Text, ArityErrorsAreDomainErrors) {
  EXPECT_THROW(parse_element("[100 | e | 0]"), DomainError);
  EXPECT_THROW(parse_element("[100 | s2 | 100]"), DomainError);
  EXPECT_THROW(parse_element("[100 | e (1) | 100]"), DomainError);
  EXPECT_THROW(parse_element("[100 | s0 | 100]"), DomainError);
}

TEST(Text, RoundTrip) {
  Rng rng(16, 0);
  const GenConfig cfg;
  for (int t = 0; t < 100; ++t) {
    const Element g = random_element(cfg, rng);
    EXPECT_TRUE(identical(parse_element(format_element(g)), g));
    EXPECT_TRUE(identical(element_from_json(element_to_json(g)), g));
  }
  EXPECT_EQ(format_element(named("t1")), "[11000 | s1^-1 s2^-1 (0,0,-2) | 10100]");
  EXPECT_EQ(element_to_json(named("g_comm")),
            R"({"left":"10100","right":"10100","twists":[0,0,0],"word":[[1,1]]})");
}

TEST(Text, BadJson) {
  EXPECT_THROW(element_from_json("{"), SyntaxError);
  EXPECT_THROW(element_from_json(R"({"left":"0"})"), SyntaxError);
  EXPECT_THROW(element_from_json(R"({"left":"100","right":"100","word":[[5,1]]})"), DomainError);
}

TEST(Svg, IdentityHasOneStraightStrand) {
  const std::string s = render_svg(Element::identity());
  EXPECT_EQ(count(s, "class=\"strand\""), 1u);
  EXPECT_EQ(count(s, "class=\"crossing\""), 0u);
  EXPECT_EQ(count(s, "class=\"tree-edge\""), 0u);
  EXPECT_EQ(count(s, "class=\"twist\""), 0u);
  // all x coordinates of the strand agree
  const std::regex poly("points=\"([^\"]*)\"");
  std::smatch m;
  ASSERT_TRUE(std::regex_search(s, m, poly));
  std::istringstream pts(m[1].str());
  std::string pt;
  std::set<std::string> xs;
  while (pts >> pt) xs.insert(pt.substr(0, pt.find(',')));
  EXPECT_EQ(xs.size(), 1u);
}

TEST(Svg, CommutatorWitness) {
  const std::string s = render_svg(named("g_comm"));
  EXPECT_EQ(count(s, "class=\"strand\""), 3u);
  EXPECT_EQ(count(s, "class=\"crossing\""), 1u);
  // two carets per tree, two edges per caret
  EXPECT_EQ(count(s, "class=\"tree-edge\""), 8u);
  EXPECT_EQ(count(s, "<g class=\"range-tree\">"), 1u);
  EXPECT_EQ(count(s, "<g class=\"domain-tree\">"), 1u);
}

TEST(Svg, TwistAnnotation) {
  const std::string s = render_svg(named("t1"));
  EXPECT_EQ(count(s, "class=\"crossing\""), 2u);
  EXPECT_EQ(count(s, "class=\"twist\""), 1u);
  EXPECT_NE(s.find("class=\"twist\" data-strand=\"3\""), std::string::npos);
  EXPECT_NE(s.find(">-2</text>"), std::string::npos);
}

TEST(Svg, CrossingCountIsWordLength) {
  Rng rng(17, 0);
  const GenConfig cfg;
  for (int t = 0; t < 30; ++t) {
    const Element g = random_element(cfg, rng);
    const std::string s = render_svg(g);
    EXPECT_EQ(count(s, "class=\"crossing\""), g.braid().length());
    EXPECT_EQ(count(s, "class=\"strand\""), static_cast<std::size_t>(g.strands()));
    EXPECT_EQ(s, render_svg(g));
  }
}

TEST(Svg, WriteFile) {
  const auto path = std::filesystem::temp_directory_path() / "braidthom_svg_test.svg";
  write_svg(named("t1"), path);
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  EXPECT_EQ(buf.str(), render_svg(named("t1")));
  std::filesystem::remove(path);
  EXPECT_THROW(write_svg(named("t1"), "/nonexistent-dir/x.svg"), std::runtime_error);
}
