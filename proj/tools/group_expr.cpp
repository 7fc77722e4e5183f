#include "group_expr.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "agroup/constructions.hpp"

namespace agroup::cli {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const Limits& limits) : text_(text), limits_(limits) {}

  FiniteGroup parse() {
    skip_ws();
    FiniteGroup g = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::uint64_t number() {
    skip_ws();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("expected a non-negative integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  std::vector<std::uint64_t> numbers(std::size_t count) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i) expect(',');
      out.push_back(number());
    }
    return out;
  }

  unsigned small(std::uint64_t v) {
    if (v > 64) fail("degree too large");
    return static_cast<unsigned>(v);
  }

  FiniteGroup expr() {
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      auto v = numbers(5);
      return build_family_group({v[0], v[1], v[2], small(v[3]), small(v[4])}, limits_);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    expect('(');
    FiniteGroup g = call(name);
    expect(')');
    return g;
  }

  FiniteGroup call(std::string_view name) {
    if (name == "cyclic") return cyclic(numbers(1)[0], limits_);
    if (name == "field") {
      auto v = numbers(2);
      return field_additive(make_field(v[0], small(v[1]), limits_.element_cap), limits_);
    }
    if (name == "direct") {
      FiniteGroup left = expr();
      expect(',');
      FiniteGroup right = expr();
      return direct_product(left, right, limits_);
    }
    if (name == "scalar") {
      auto v = numbers(3);
      return scalar_semidirect(v[0], small(v[1]), v[2], limits_);
    }
    if (name == "metacyclic") {
      auto v = numbers(3);
      const FiniteGroup cn = cyclic(v[0], limits_);
      const FiniteGroup cm = cyclic(v[1], limits_);
      return semidirect_product(cn, cm, power_action(cn, cm, v[2]), limits_);
    }
    if (name == "component") {
      auto v = numbers(3);
      return build_family_component(v[0], v[1], small(v[2]), limits_);
    }
    if (name == "pair") {
      auto v = numbers(4);
      return build_two_prime_pair(v[0], v[1], small(v[2]), small(v[3]), limits_);
    }
    if (name == "family") {
      auto v = numbers(5);
      return build_family_group({v[0], v[1], v[2], small(v[3]), small(v[4])}, limits_);
    }
    fail("unknown constructor '" + std::string(name) + "'");
  }

  std::string_view text_;
  const Limits& limits_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup parse_group(std::string_view text, const Limits& limits) {
  return Parser(text, limits).parse();
}

std::string grammar_help() {
  return "Group expressions:\n"
         "  cyclic(n)              cyclic group of order n\n"
         "  field(p,a)             additive group of F_{p^a}\n"
         "  direct(X,Y)            direct product\n"
         "  scalar(p,a,m)          F_{p^a}^+ x| C_m (unit of order m)\n"
         "  metacyclic(n,m,k)      C_n x| C_m, generator acts by x -> k*x\n"
         "  component(p,q,a)       F_{p^a}^+ x| C_q\n"
         "  pair(p,q,a,b)          (F_{p^a}^+ x| C_q) x (F_{q^b}^+ x| C_p)\n"
         "  family(p,q,r,a,b)      family group; bare \"p,q,r,a,b\" is the same\n";
}

}  // namespace agroup::cli
