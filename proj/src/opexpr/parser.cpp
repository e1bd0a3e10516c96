#include "bvkit/opexpr/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace bvkit {

namespace {

const std::map<std::string, std::string, std::less<>>& aliases() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"μ", "mu"},   {"η", "eta"},   {"λ", "lambda"}, {"ε", "epsilon"}, {"Δ", "Delta"},
      {"τ", "tau"},  {"σ", "sigma"}, {"σ²", "sigma2"}, {"ω", "omega"},   {"β", "beta"},
      {"γ", "gamma"}, {"1", "id"},   {"𝟙", "id"},
  };
  return table;
}

constexpr std::string_view kBeta = "(Delta . mu - mu . (Delta (x) id) - mu . (id (x) Delta))";
constexpr std::string_view kGamma = "((Delta (x) id) . lambda + (id (x) Delta) . lambda + lambda . Delta)";

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OpExpr parse_all() {
    OpExpr e = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(text_.substr(pos_, 1)) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  bool at_tensor() {
    skip_space();
    return text_.substr(pos_, 3) == "(x)" || text_.substr(pos_, 3) == "⊗";
  }

  // "-" or the unicode minus sign.
  bool accept_minus() { return accept("-") || accept("−"); }

  OpExpr parse_sum() {
    std::vector<OpExpr> terms;
    bool negative = accept_minus();
    if (!negative) accept("+");
    while (true) {
      OpExpr t = parse_term();
      terms.push_back(negative ? OpExpr::scale(Scalar(-1), std::move(t)) : std::move(t));
      if (accept("+")) {
        negative = false;
      } else if (accept_minus()) {
        negative = true;
      } else {
        break;
      }
    }
    return OpExpr::sum(std::move(terms));
  }

  std::optional<Scalar> try_scalar() {
    skip_space();
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == pos_) return std::nullopt;
    std::size_t num_end = end;
    if (end < text_.size() && text_[end] == '/') {
      std::size_t den = end + 1;
      while (den < text_.size() && std::isdigit(static_cast<unsigned char>(text_[den]))) ++den;
      if (den == end + 1) {
        pos_ = end + 1;
        fail("expected denominator");
      }
      end = den;
    }
    std::size_t after = end;
    while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
    if (after >= text_.size() || text_[after] != '*') {
      if (num_end == end) return std::nullopt;  // a bare integer is an operation name such as "1"
      pos_ = after;
      fail("expected '*' after scalar");
    }
    Scalar c;
    try {
      c = Scalar::parse(text_.substr(pos_, end - pos_));
    } catch (const std::exception& ex) {
      fail(ex.what());
    }
    pos_ = after + 1;
    return c;
  }

  OpExpr parse_term() {
    if (auto c = try_scalar()) return OpExpr::scale(*c, parse_tensor());
    return parse_tensor();
  }

  OpExpr parse_tensor() {
    std::vector<OpExpr> parts{parse_compose()};
    while (at_tensor()) {
      pos_ += 3;
      parts.push_back(parse_compose());
    }
    return OpExpr::tensor(std::move(parts));
  }

  OpExpr parse_compose() {
    std::vector<OpExpr> parts{parse_atom()};
    while (accept(".") || accept("∘")) parts.push_back(parse_atom());
    return OpExpr::compose(std::move(parts));
  }

  OpExpr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (!at_tensor() && accept("(")) {
      OpExpr inner = parse_sum();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    const std::size_t start = pos_;
    std::string name = read_name();
    if (name.empty()) fail("expected an operation name");
    if (name == "dual") {
      if (!accept("(")) fail("expected '(' after dual");
      OpExpr inner = parse_sum();
      if (!accept(")")) fail("expected ')'");
      return OpExpr::dual(std::move(inner));
    }
    if (auto it = aliases().find(name); it != aliases().end()) name = it->second;
    if (name == "beta") return Parser(kBeta).parse_all();
    if (name == "gamma") return Parser(kGamma).parse_all();
    const auto& known = generator_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      pos_ = start;
      fail("unknown operation '" + name + "'");
    }
    return OpExpr::gen(name);
  }

  std::string read_name() {
    // Multi-byte aliases first so that "σ²" is not cut after "σ".
    for (const auto& [alias, canonical] : aliases()) {
      if (static_cast<unsigned char>(alias[0]) < 0x80) continue;
      if (text_.substr(pos_, alias.size()) == alias &&
          !(alias == "σ" && text_.substr(pos_, std::string_view("σ²").size()) == "σ²")) {
        pos_ += alias.size();
        return alias;
      }
    }
    std::size_t end = pos_;
    while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
    std::string name(text_.substr(pos_, end - pos_));
    pos_ = end;
    return name;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OpExpr parse_expr(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace bvkit
