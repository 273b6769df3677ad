#include "braidthom/text.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <json.hpp>

#include "braidthom/errors.hpp"

namespace braidthom {
namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string bits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) ++pos_;
    const std::string_view out = text_.substr(start, pos_ - start);
    if (!Tree::is_valid_encoding(out)) fail_at(start, "invalid tree encoding");
    return std::string(out);
  }
  long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    long value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      fail_at(start, "expected an integer");
    }
    return value;
  }
  std::size_t position() const { return base_ + pos_; }

  [[noreturn]] void fail(const std::string& what) { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) {
    throw SyntaxError(what, base_ + at);
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

struct RawLetter {
  long index;
  long exponent;
  std::size_t position;
};

std::vector<RawLetter> braid_letters(Cursor& in) {
  std::vector<RawLetter> out;
  if (in.accept('e')) return out;
  while (in.peek() == 's') {
    const std::size_t at = in.position();
    in.expect('s');
    const long index = in.integer();
    long exponent = 1;
    if (in.accept('^')) exponent = in.integer();
    out.push_back({index, exponent, at});
  }
  return out;
}

BraidWord build_braid(const std::vector<RawLetter>& raw, int strands) {
  std::vector<Letter> letters;
  for (const RawLetter& r : raw) {
    if (r.index < 1 || r.index >= strands) {
      throw DomainError("generator s" + std::to_string(r.index) + " at position " +
                        std::to_string(r.position) + " does not exist in B_" +
                        std::to_string(strands));
    }
    const int sign = r.exponent < 0 ? -1 : 1;
    for (long c = 0; c < std::labs(r.exponent); ++c) {
      letters.push_back({static_cast<int>(r.index), sign});
    }
  }
  return BraidWord(strands, std::move(letters));
}

std::string join_twists(const Twists& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(t[i]);
  }
  return out + ")";
}

}  // namespace

Element parse_element(std::string_view text) {
  Cursor in(text, 0);
  in.expect('[');
  const Tree left(in.bits());
  in.expect('|');
  const auto raw = braid_letters(in);
  Twists twists;
  const std::size_t twist_at = in.position();
  if (in.accept('(')) {
    do {
      twists.push_back(in.integer());
    } while (in.accept(','));
    in.expect(')');
  }
  in.expect('|');
  const Tree right(in.bits());
  in.expect(']');
  if (!in.done()) in.fail("trailing text after element");

  const int n = left.leaf_count();
  if (right.leaf_count() != n) {
    throw DomainError("trees have " + std::to_string(n) + " and " +
                      std::to_string(right.leaf_count()) + " leaves");
  }
  if (twists.empty()) twists.assign(static_cast<std::size_t>(n), 0);
  if (twists.size() != static_cast<std::size_t>(n)) {
    throw DomainError("twist vector at position " + std::to_string(twist_at) + " has " +
                      std::to_string(twists.size()) + " entries for " + std::to_string(n) +
                      " strands");
  }
  return Element(left, RibbonBraid(build_braid(raw, n), std::move(twists)), right);
}

BraidWord parse_braid(std::string_view text, int strands) {
  Cursor in(text, 0);
  const auto raw = braid_letters(in);
  if (!in.done()) in.fail("unexpected character in braid word");
  return build_braid(raw, strands);
}

std::string format_element(const Element& g) {
  std::string out = "[" + g.left.bits() + " | " + to_string(g.braid());
  if (!g.rb.untwisted()) out += " " + join_twists(g.twists());
  return out + " | " + g.right.bits() + "]";
}

std::string element_to_json(const Element& g) {
  nlohmann::json word = nlohmann::json::array();
  const auto& ls = g.braid().letters();
  for (std::size_t p = 0; p < ls.size();) {
    std::size_t q = p;
    while (q < ls.size() && ls[q] == ls[p]) ++q;
    word.push_back({ls[p].index, static_cast<long>(q - p) * ls[p].sign});
    p = q;
  }
  nlohmann::json j;
  j["left"] = g.left.bits();
  j["word"] = std::move(word);
  j["twists"] = g.twists();
  j["right"] = g.right.bits();
  return j.dump();
}

Element element_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  try {
    const Tree left(j.at("left").get<std::string>());
    const Tree right(j.at("right").get<std::string>());
    std::vector<RawLetter> raw;
    for (const auto& pair : j.at("word")) {
      raw.push_back({pair.at(0).get<long>(), pair.at(1).get<long>(), 0});
    }
    Twists twists = j.contains("twists") ? j.at("twists").get<Twists>() : Twists{};
    if (twists.empty()) twists.assign(static_cast<std::size_t>(left.leaf_count()), 0);
    return Element(left, RibbonBraid(build_braid(raw, left.leaf_count()), std::move(twists)),
                   right);
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("bad element JSON: ") + e.what(), 0);
  }
}

}  // namespace braidthom
