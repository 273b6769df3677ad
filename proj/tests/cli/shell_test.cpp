#include <gtest/gtest.h>

#include <braidthom/errors.hpp>
#include <braidthom/named.hpp>

#include <filesystem>
#include <sstream>

#include "shell.hpp"

using namespace braidthom;
using braidthom::shell::Shell;

namespace {

std::string run(Shell& sh, const std::string& script) {
  std::ostringstream out;
  sh.run(script, out);
  return out.str();
}

std::string run(const std::string& script) {
  Shell sh;
  return run(sh, script);
}

}  // namespace

TEST(Shell, Examples) {
  EXPECT_EQ(run("a = named x0; b = inv a; eq (mul a b) [0|e|0]"), "true\n");
  EXPECT_EQ(run("chi1 (named x0)"), "1\n");
  EXPECT_EQ(run("member bP (named g_comm)"), "false\n");
}

TEST(Shell, EveryCommand) {
  EXPECT_EQ(run("reduce [100 | s1 (1,1) | 100]"), "[0 | e (1) | 0]\n");
  EXPECT_EQ(run("expand 1 [0 | e (1) | 0]"), "[100 | s1 (1,1) | 100]\n");
  EXPECT_EQ(run("chi0 (mul (mul (inv (named psi)) (named x0)) (named psi))"), "1\n");
  EXPECT_EQ(run("project (named x0)"), "(10100, [1 2 3], 11000)\n");
  EXPECT_EQ(run("hnn (named x0)"), "shift=1 k=0 base=[0 | e | 0]\n");
  EXPECT_EQ(run("leftpart [11000 | s1^2 | 11000]"), "[100 | s1^2 | 100]\n");
  EXPECT_EQ(run("inv (named x0)"), "[11000 | e | 10100]\n");
  EXPECT_EQ(run("verify fig5_conventions 1 0"),
            "fig5_conventions: PASS (1 trials, seed 0, 0 failures)\n");
  const auto path = std::filesystem::temp_directory_path() / "braidthom_shell.svg";
  EXPECT_EQ(run("svg \"" + path.string() + "\" (named t1)"), "wrote " + path.string() + "\n");
  EXPECT_TRUE(std::filesystem::exists(path));
  std::filesystem::remove(path);
}

TEST(Shell, MultiLineScriptsAndComments) {
  EXPECT_EQ(run("# setup\nx = named x0\n\ny = mul x x  # square\nchi1 y\n"), "2\n");
}

TEST(Shell, Errors) {
  EXPECT_THROW(run("inv nothere"), DomainError);
  EXPECT_THROW(run("chi1 (named psi)"), DomainError);
  EXPECT_THROW(run("member bW (named x0)"), DomainError);
  EXPECT_THROW(run("x = chi1 (named x0)"), DomainError);
  EXPECT_THROW(run("expand 4 (named x0)"), DomainError);
  EXPECT_THROW(run("verify nosuch"), DomainError);
  EXPECT_THROW(run("mul (named x0)"), SyntaxError);
  EXPECT_THROW(run("inv (named x0"), SyntaxError);
  EXPECT_THROW(run("expand k (named x0)"), SyntaxError);
  EXPECT_THROW(run("mul = named x0"), SyntaxError);
  EXPECT_THROW(run("inv [100 | s1 | 100"), SyntaxError);
  EXPECT_THROW(run("named x0 extra"), SyntaxError);
}

TEST(Shell, SyntaxErrorsAreReportedBeforeAnythingRuns) {
  Shell sh;
  EXPECT_THROW(run(sh, "a = named x0\ninv ("), SyntaxError);
  EXPECT_TRUE(sh.env().empty());
}

TEST(Shell, LiteralErrorPositionIsScriptRelative) {
  try {
    run("inv [10 | e | 0]");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Shell, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "braidthom_session.json";
  {
    Shell sh;
    run(sh, "a = named t1; b = inv a; save \"" + path.string() + "\"");
    EXPECT_EQ(sh.history().size(), 3u);
  }
  Shell sh;
  run(sh, "load \"" + path.string() + "\"");
  EXPECT_EQ(sh.env().size(), 2u);
  EXPECT_EQ(run(sh, "eq a (named t1)"), "true\n");
  EXPECT_EQ(run(sh, "eq (mul a b) [0|e|0]"), "true\n");
  EXPECT_GE(sh.history().size(), 4u);
  std::filesystem::remove(path);
  EXPECT_THROW(run(sh, "load \"" + path.string() + "\""), std::runtime_error);
}

TEST(Shell, Repl) {
  std::istringstream in("a = named x0\nchi1 a\nchi1 (named psi)\nchi1 (inv a)\nquit\nchi1 a\n");
  std::ostringstream out, err;
  shell::repl(in, out, err, false);
  EXPECT_EQ(out.str(), "1\n-1\n");
  EXPECT_NE(err.str().find("not in bVhat"), std::string::npos);
}

TEST(Shell, ExitCodes) {
  EXPECT_EQ(shell::exit_code(SyntaxError("x", 0)), 2);
  EXPECT_EQ(shell::exit_code(DomainError("x")), 1);
  EXPECT_EQ(shell::exit_code(ResourceError("x")), 1);
}
