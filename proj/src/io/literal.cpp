#include "bvkit/io/literal.hpp"

#include "bvkit/opexpr/parser.hpp"

#include <cctype>

namespace bvkit {

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, const GradedBasis& basis, const Field& field)
      : text_(text), basis_(basis), field_(field) {}

  Element parse(std::optional<int> arity) {
    skip_space();
    if (arity && *arity == 0) return parse_scalar_only();
    std::optional<Element> out;
    bool negative = accept('-') || accept_unicode_minus();
    if (!negative) accept('+');
    while (true) {
      auto [coeff, key] = parse_term();
      if (negative) coeff = -coeff;
      if (!out) {
        if (arity && static_cast<int>(key.size()) != *arity) {
          fail("expected a tensor of " + std::to_string(*arity) + " factors, got " + std::to_string(key.size()));
        }
        out.emplace(static_cast<int>(key.size()));
      }
      if (static_cast<int>(key.size()) != out->arity()) fail("terms have different numbers of tensor factors");
      out->add_term(key, coeff);
      skip_space();
      if (pos_ == text_.size()) break;
      if (accept('+')) {
        negative = false;
      } else if (accept('-') || accept_unicode_minus()) {
        negative = true;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return *out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_literal(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  bool accept_unicode_minus() { return accept_literal("−"); }

  Element parse_scalar_only() {
    Element out(0);
    std::string body(text_);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.pop_back();
    body.erase(0, pos_);
    if (body.empty()) body = "1";
    try {
      out.add_term({}, Scalar::in(field_, Scalar::parse(body).value()));
    } catch (const std::exception& ex) {
      fail(std::string("expected a scalar: ") + ex.what());
    }
    return out;
  }

  // Length of a leading "n" or "n/d" followed by '*', or 0.
  std::size_t coefficient_length() const {
    std::size_t i = pos_;
    while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
    if (i == pos_) return 0;
    if (i < text_.size() && text_[i] == '/') {
      std::size_t j = i + 1;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      if (j == i + 1) return 0;
      i = j;
    }
    if (i + 1 >= text_.size() || text_[i] != '*') return 0;
    const char next = text_[i + 1];
    if (std::isspace(static_cast<unsigned char>(next)) || next == '(' || next == ')' || next == '+' || next == '-') {
      return 0;
    }
    return i - pos_;
  }

  std::pair<Scalar, Key> parse_term() {
    skip_space();
    Scalar coeff = Scalar::in(field_, 1);
    if (std::size_t len = coefficient_length()) {
      try {
        coeff = Scalar::in(field_, Scalar::parse(text_.substr(pos_, len)).value());
      } catch (const std::exception& ex) {
        fail(std::string("bad coefficient: ") + ex.what());
      }
      pos_ += len + 1;
    }
    Key key{parse_name()};
    while (accept_literal("(x)") || accept_literal("⊗")) key.push_back(parse_name());
    return {coeff, key};
  }

  Generator parse_name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '(' || c == ')') break;
      if (text_.substr(pos_, std::string_view("⊗").size()) == "⊗") break;
      ++pos_;
    }
    if (pos_ == start) fail("expected a basis element name");
    std::string name(text_.substr(start, pos_ - start));
    auto g = basis_.find(name);
    if (!g) {
      pos_ = start;
      fail("unknown basis element '" + name + "'");
    }
    return *g;
  }

  std::string_view text_;
  const GradedBasis& basis_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, const GradedBasis& basis, int arity, const Field& field) {
  return LiteralParser(text, basis, field).parse(arity);
}

Element parse_element(std::string_view text, const GradedBasis& basis, const Field& field) {
  return LiteralParser(text, basis, field).parse(std::nullopt);
}

}  // namespace bvkit
