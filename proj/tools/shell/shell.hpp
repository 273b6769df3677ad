#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <braidthom/element.hpp>

namespace braidthom::shell {

// Script grammar (statements end at ';' or newline, '#' starts a comment):
//   stmt := name "=" expr | "save" path | "load" path | expr
//   expr := "(" expr ")" | element-literal | name
//         | "mul" expr expr | "inv" expr | "eq" expr expr | "reduce" expr
//         | "member" tag expr | "chi1" expr | "chi0" expr | "project" expr
//         | "hnn" expr | "leftpart" expr | "named" tag | "expand" k expr
//         | "svg" path expr | "verify" suite [trials [seed]]
// Paths may be double-quoted.

struct Expr {
  enum class Kind { Literal, Variable, Op };
  Kind kind;
  std::string text;                // literal text, variable or op name
  std::vector<std::string> words;  // tag / k / path / suite arguments
  std::vector<Expr> args;
  std::size_t position;
};

struct Statement {
  enum class Kind { Eval, Bind, Save, Load };
  Kind kind;
  std::string name;  // Bind target or Save/Load path
  std::optional<Expr> expr;
  std::string source;
};

/// Throws SyntaxError (byte offset into `script`) on malformed input.
std::vector<Statement> parse_script(std::string_view script);

using Value = std::variant<Element, bool, std::int64_t, std::string>;
std::string to_string(const Value& v);

class Shell {
 public:
  /// Evaluates one statement; bindings, save and load return nullopt.
  std::optional<Value> execute(const Statement& s);
  Value evaluate(const Expr& e);

  /// Parses all of `script` first, then runs it, printing each value on
  /// its own line. Errors propagate.
  void run(std::string_view script, std::ostream& out);

  void save(const std::string& path) const;
  void load(const std::string& path);

  const std::map<std::string, Element>& env() const { return env_; }
  const std::vector<std::string>& history() const { return history_; }

 private:
  Element element(const Expr& e);

  std::map<std::string, Element> env_;
  std::vector<std::string> history_;
};

/// Process exit status for an exception escaping the shell or the core:
/// 2 for SyntaxError, 1 for everything else.
int exit_code(const std::exception& e);

/// Line-oriented loop; errors are reported on `err` and the loop carries on.
void repl(std::istream& in, std::ostream& out, std::ostream& err, bool prompt);

}  // namespace braidthom::shell
