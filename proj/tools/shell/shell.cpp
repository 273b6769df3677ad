#include "shell.hpp"

#include <braidthom/decompose.hpp>
#include <braidthom/errors.hpp>
#include <braidthom/named.hpp>
#include <braidthom/subgroups.hpp>
#include <braidthom/svg.hpp>
#include <braidthom/text.hpp>
#include <braidthom/verify.hpp>

#include <fmt/format.h>

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

namespace braidthom::shell {
namespace {

struct Token {
  enum class Kind { Word, Literal, LParen, RParen, Equals, End };
  Kind kind;
  std::string text;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (c == '\n' || c == ';') {
      out.push_back({Token::Kind::End, "", i++});
    } else if (c == '(') {
      out.push_back({Token::Kind::LParen, "(", i++});
    } else if (c == ')') {
      out.push_back({Token::Kind::RParen, ")", i++});
    } else if (c == '=') {
      out.push_back({Token::Kind::Equals, "=", i++});
    } else if (c == '[') {
      const std::size_t close = s.find(']', i);
      if (close == std::string_view::npos) throw SyntaxError("unterminated element literal", i);
      out.push_back({Token::Kind::Literal, std::string(s.substr(i, close - i + 1)), i});
      i = close + 1;
    } else if (c == '"') {
      const std::size_t close = s.find('"', i + 1);
      if (close == std::string_view::npos) throw SyntaxError("unterminated string", i);
      out.push_back({Token::Kind::Word, std::string(s.substr(i + 1, close - i - 1)), i});
      i = close + 1;
    } else {
      const std::size_t start = i;
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
             std::string_view("();=[]#\"").find(s[i]) == std::string_view::npos) {
        ++i;
      }
      if (i == start) throw SyntaxError(std::string("unexpected '") + c + "'", i);
      out.push_back({Token::Kind::Word, std::string(s.substr(start, i - start)), start});
    }
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

struct OpShape {
  std::string_view name;
  int words;
  int exprs;
};

constexpr std::array<OpShape, 14> kOps = {{{"mul", 0, 2},
                                           {"inv", 0, 1},
                                           {"eq", 0, 2},
                                           {"reduce", 0, 1},
                                           {"member", 1, 1},
                                           {"chi1", 0, 1},
                                           {"chi0", 0, 1},
                                           {"project", 0, 1},
                                           {"hnn", 0, 1},
                                           {"leftpart", 0, 1},
                                           {"named", 1, 0},
                                           {"expand", 1, 1},
                                           {"svg", 1, 1},
                                           {"verify", 1, 0}}};

const OpShape* find_op(std::string_view w) {
  for (const OpShape& op : kOps) {
    if (op.name == w) return &op;
  }
  return nullptr;
}

bool is_identifier(std::string_view w) {
  if (w.empty() || !(std::isalpha(static_cast<unsigned char>(w[0])) || w[0] == '_')) return false;
  for (char c : w) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

template <class Int>
std::optional<Int> to_int(std::string_view w) {
  Int v{};
  const auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || p != w.data() + w.size()) return std::nullopt;
  return v;
}

class Parser {
 public:
  Parser(const std::vector<Token>& toks, std::size_t begin, std::size_t end)
      : toks_(toks), pos_(begin), end_(end) {}

  bool at_end() const { return pos_ >= end_; }
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() {
    if (at_end()) fail("unexpected end of statement");
    return toks_[pos_++];
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, toks_[std::min(pos_, end_)].position);
  }

  std::string word(const char* what) {
    if (at_end() || peek().kind != Token::Kind::Word) fail(std::string("expected ") + what);
    return take().text;
  }

  Expr expr() {
    if (at_end()) fail("expected an expression");
    const Token& t = take();
    switch (t.kind) {
      case Token::Kind::LParen: {
        Expr inner = expr();
        if (at_end() || peek().kind != Token::Kind::RParen) fail("expected ')'");
        take();
        return inner;
      }
      case Token::Kind::Literal:
        return {Expr::Kind::Literal, t.text, {}, {}, t.position};
      case Token::Kind::Word:
        break;
      default:
        throw SyntaxError("expected an expression", t.position);
    }
    const OpShape* op = find_op(t.text);
    if (op == nullptr) {
      if (!is_identifier(t.text)) throw SyntaxError("bad name '" + t.text + "'", t.position);
      return {Expr::Kind::Variable, t.text, {}, {}, t.position};
    }
    Expr e{Expr::Kind::Op, t.text, {}, {}, t.position};
    for (int w = 0; w < op->words; ++w) e.words.push_back(word("an argument"));
    if (op->name == "expand" && !to_int<int>(e.words[0])) {
      throw SyntaxError("expand: leaf index must be an integer", t.position);
    }
    if (op->name == "verify") {
      while (e.words.size() < 3 && !at_end() && peek().kind == Token::Kind::Word) {
        if (!to_int<std::uint64_t>(peek().text)) fail("verify: trials and seed must be integers");
        e.words.push_back(take().text);
      }
    }
    for (int a = 0; a < op->exprs; ++a) e.args.push_back(expr());
    return e;
  }

 private:
  const std::vector<Token>& toks_;
  std::size_t pos_;
  std::size_t end_;
};

Statement statement(const std::vector<Token>& toks, std::size_t begin, std::size_t end,
                    std::string_view script) {
  Parser p(toks, begin, end);
  Statement s{Statement::Kind::Eval, "", std::nullopt,
              std::string(script.substr(toks[begin].position,
                                        toks[end].position - toks[begin].position))};
  const Token& first = toks[begin];
  if (first.kind == Token::Kind::Word && begin + 1 < end &&
      toks[begin + 1].kind == Token::Kind::Equals) {
    if (!is_identifier(first.text) || find_op(first.text) || first.text == "save" ||
        first.text == "load") {
      throw SyntaxError("cannot bind '" + first.text + "'", first.position);
    }
    p.take();
    p.take();
    s.kind = Statement::Kind::Bind;
    s.name = first.text;
    s.expr = p.expr();
  } else if (first.kind == Token::Kind::Word && (first.text == "save" || first.text == "load")) {
    p.take();
    s.kind = first.text == "save" ? Statement::Kind::Save : Statement::Kind::Load;
    s.name = p.word("a path");
  } else {
    s.expr = p.expr();
  }
  if (!p.at_end()) p.fail("unexpected '" + p.peek().text + "'");
  while (!s.source.empty() && std::isspace(static_cast<unsigned char>(s.source.back()))) {
    s.source.pop_back();
  }
  return s;
}

std::string describe(const HnnDecomposition& d) {
  return fmt::format("shift={} k={} base={}", d.shift, d.k, format_element(d.base));
}

std::string describe(const SuiteReport& r) {
  std::string out = fmt::format("{}: {} ({} trials, seed {}, {} failures)", r.name,
                                r.passed() ? "PASS" : "FAIL", r.trials, r.config.seed,
                                r.failures.size());
  if (!r.passed()) out += fmt::format("; first: trial {}: {}", r.failures[0].trial,
                                      r.failures[0].message);
  return out;
}

}  // namespace

std::vector<Statement> parse_script(std::string_view script) {
  const std::vector<Token> toks = tokenize(script);
  std::vector<Statement> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind != Token::Kind::End) continue;
    if (i > begin) out.push_back(statement(toks, begin, i, script));
    begin = i + 1;
  }
  return out;
}

std::string to_string(const Value& v) {
  struct {
    std::string operator()(const Element& g) const { return format_element(g); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t n) const { return std::to_string(n); }
    std::string operator()(const std::string& s) const { return s; }
  } visit;
  return std::visit(visit, v);
}

Element Shell::element(const Expr& e) {
  Value v = evaluate(e);
  if (auto* g = std::get_if<Element>(&v)) return std::move(*g);
  throw DomainError(fmt::format("'{}' at position {} is not an element", to_string(v), e.position));
}

Value Shell::evaluate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      try {
        return parse_element(e.text);
      } catch (const SyntaxError& err) {
        throw SyntaxError(std::string("bad element literal (") + err.what() + ")",
                          e.position + err.position());
      }
    case Expr::Kind::Variable: {
      const auto it = env_.find(e.text);
      if (it == env_.end()) throw DomainError("unbound variable '" + e.text + "'");
      return it->second;
    }
    case Expr::Kind::Op:
      break;
  }
  const std::string& op = e.text;
  if (op == "mul") return mul(element(e.args[0]), element(e.args[1]));
  if (op == "inv") return inv(element(e.args[0]));
  if (op == "eq") return equal(element(e.args[0]), element(e.args[1]));
  if (op == "reduce") return normalize(element(e.args[0]));
  if (op == "member") {
    const auto tag = parse_subgroup(e.words[0]);
    if (!tag) throw DomainError("unknown subgroup '" + e.words[0] + "'");
    return member(element(e.args[0]), *tag);
  }
  if (op == "chi1") return chi1(element(e.args[0]));
  if (op == "chi0") return chi0(element(e.args[0]));
  if (op == "project") return braidthom::to_string(project_to_v(element(e.args[0])));
  if (op == "hnn") return describe(hnn_decompose(element(e.args[0])));
  if (op == "leftpart") return left_part(element(e.args[0]));
  if (op == "named") return named(e.words[0]);
  if (op == "expand") {
    const Element g = element(e.args[0]);
    const int k = *to_int<int>(e.words[0]);
    if (k < 1 || k > g.strands()) {
      throw DomainError(fmt::format("expand: leaf {} out of range 1..{}", k, g.strands()));
    }
    return expand(g, k);
  }
  if (op == "svg") {
    write_svg(element(e.args[0]), e.words[0]);
    return "wrote " + e.words[0];
  }
  if (op == "verify") {
    GenConfig cfg;
    std::uint64_t trials = 100;
    if (e.words.size() > 1) trials = *to_int<std::uint64_t>(e.words[1]);
    if (e.words.size() > 2) cfg.seed = *to_int<std::uint64_t>(e.words[2]);
    return describe(run_suite(e.words[0], trials, cfg));
  }
  throw InternalError("unhandled op " + op);
}

std::optional<Value> Shell::execute(const Statement& s) {
  std::optional<Value> out;
  switch (s.kind) {
    case Statement::Kind::Eval:
      out = evaluate(*s.expr);
      break;
    case Statement::Kind::Bind:
      env_.insert_or_assign(s.name, element(*s.expr));
      break;
    case Statement::Kind::Save:
      history_.push_back(s.source);
      save(s.name);
      return std::nullopt;
    case Statement::Kind::Load:
      load(s.name);
      break;
  }
  history_.push_back(s.source);
  return out;
}

void Shell::run(std::string_view script, std::ostream& out) {
  for (const Statement& s : parse_script(script)) {
    if (auto v = execute(s)) out << to_string(*v) << '\n';
  }
}

void Shell::save(const std::string& path) const {
  nlohmann::json j;
  j["env"] = nlohmann::json::object();
  for (const auto& [name, g] : env_) j["env"][name] = nlohmann::json::parse(element_to_json(g));
  j["history"] = history_;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << j.dump(2) << '\n';
  if (!f) throw std::runtime_error("failed writing " + path);
}

void Shell::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(path + ": malformed session file", e.byte);
  }
  std::map<std::string, Element> loaded;
  try {
    for (const auto& [name, g] : j.at("env").items()) {
      if (!is_identifier(name)) throw DomainError("session file binds bad name '" + name + "'");
      loaded.insert_or_assign(name, element_from_json(g.dump()));
    }
    for (const auto& line : j.value("history", nlohmann::json::array())) {
      history_.push_back(line.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(path + ": " + e.what(), 0);
  }
  for (auto& [name, g] : loaded) env_.insert_or_assign(name, std::move(g));
}

int exit_code(const std::exception& e) {
  return dynamic_cast<const SyntaxError*>(&e) != nullptr ? 2 : 1;
}

void repl(std::istream& in, std::ostream& out, std::ostream& err, bool prompt) {
  Shell sh;
  std::string line;
  while (true) {
    if (prompt) out << "braidthom> " << std::flush;
    if (!std::getline(in, line)) break;
    if (line == "quit" || line == "exit") break;
    try {
      sh.run(line, out);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
    }
    out << std::flush;
  }
  if (prompt) out << '\n';
}

}  // namespace braidthom::shell
