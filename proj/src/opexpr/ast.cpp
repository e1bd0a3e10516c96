#include "bvkit/opexpr/ast.hpp"

namespace bvkit {

OpExpr OpExpr::gen(std::string name) {
  OpExpr e;
  e.kind = Kind::generator;
  e.name = std::move(name);
  return e;
}

OpExpr OpExpr::compose(std::vector<OpExpr> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  OpExpr e;
  e.kind = Kind::compose;
  e.children = std::move(parts);
  return e;
}

OpExpr OpExpr::tensor(std::vector<OpExpr> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  OpExpr e;
  e.kind = Kind::tensor;
  e.children = std::move(parts);
  return e;
}

OpExpr OpExpr::scale(Scalar c, OpExpr inner) {
  if (inner.kind == Kind::scale) {
    inner.coeff *= c;
    return inner;
  }
  OpExpr e;
  e.kind = Kind::scale;
  e.coeff = std::move(c);
  e.children.push_back(std::move(inner));
  return e;
}

OpExpr OpExpr::sum(std::vector<OpExpr> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  OpExpr e;
  e.kind = Kind::sum;
  e.children = std::move(parts);
  return e;
}

OpExpr OpExpr::dual(OpExpr inner) {
  OpExpr e;
  e.kind = Kind::dual;
  e.children.push_back(std::move(inner));
  return e;
}

bool operator==(const OpExpr& a, const OpExpr& b) {
  if (a.kind != b.kind || a.children != b.children) return false;
  switch (a.kind) {
    case OpExpr::Kind::generator:
      return a.name == b.name;
    case OpExpr::Kind::scale:
      return a.coeff == b.coeff && a.coeff.to_string() == b.coeff.to_string();
    default:
      return true;
  }
}

namespace {

// Binding strength: sum 0 < tensor 1 < compose 2 < atom 3. A scale node
// prints like a sum term, so it needs parentheses anywhere inside a product.
int strength(const OpExpr& e) {
  switch (e.kind) {
    case OpExpr::Kind::sum:
    case OpExpr::Kind::scale:
      return 0;
    case OpExpr::Kind::tensor:
      return 1;
    case OpExpr::Kind::compose:
      return 2;
    default:
      return 3;
  }
}

std::string print_at(const OpExpr& e, int needed) {
  std::string body = print(e);
  return strength(e) < needed ? "(" + body + ")" : body;
}

std::string print_scaled(const Scalar& c, const OpExpr& inner, bool leading) {
  std::string coeff = c.to_string();
  bool negative = coeff[0] == '-';
  if (negative) coeff.erase(0, 1);
  std::string out = leading ? (negative ? "-" : "") : (negative ? " - " : " + ");
  if (coeff != "1" || inner.kind == OpExpr::Kind::scale) {
    out += coeff + "*";
    return out + print_at(inner, 1);
  }
  if (!negative) out += "1*";
  return out + print_at(inner, 1);
}

}  // namespace

std::string print(const OpExpr& e) {
  switch (e.kind) {
    case OpExpr::Kind::generator:
      return e.name;
    case OpExpr::Kind::dual:
      return "dual(" + print(e.children[0]) + ")";
    case OpExpr::Kind::compose:
    case OpExpr::Kind::tensor: {
      const bool comp = e.kind == OpExpr::Kind::compose;
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += comp ? " . " : " (x) ";
        // Nested nodes of the same kind are kept as written, so they need brackets.
        out += print_at(e.children[i], comp ? 3 : 2);
      }
      return out;
    }
    case OpExpr::Kind::scale:
      return print_scaled(e.coeff, e.children[0], true);
    case OpExpr::Kind::sum: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const auto& c = e.children[i];
        if (c.kind == OpExpr::Kind::scale) {
          out += print_scaled(c.coeff, c.children[0], i == 0);
        } else {
          out += (i ? " + " : "") + print_at(c, 1);
        }
      }
      return out;
    }
  }
  return {};
}

std::vector<std::pair<Scalar, OpExpr>> signed_terms(const OpExpr& e) {
  std::vector<std::pair<Scalar, OpExpr>> out;
  auto push = [&out](const OpExpr& t) {
    if (t.kind == OpExpr::Kind::scale) {
      out.emplace_back(t.coeff, t.children[0]);
    } else {
      out.emplace_back(Scalar(1), t);
    }
  };
  if (e.kind == OpExpr::Kind::sum) {
    for (const auto& c : e.children) push(c);
  } else {
    push(e);
  }
  return out;
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names = {"id",  "mu", "eta", "lambda", "epsilon", "Delta",
                                                 "tau", "sigma", "sigma2", "s", "omega", "E",
                                                 "M",   "ev", "coev"};
  return names;
}

}  // namespace bvkit
