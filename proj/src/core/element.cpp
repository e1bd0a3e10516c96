#include "bvkit/core/element.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace bvkit {

namespace {

struct Registry {
  std::mutex mutex;
  std::deque<detail::GeneratorRecord> records;
  std::map<std::tuple<std::string, Degree, int, int>, const detail::GeneratorRecord*> index;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Generator Generator::make(std::string_view name, Degree degree, int order, SpaceTag tag) {
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  auto id = std::make_tuple(std::string(name), degree, order, static_cast<int>(tag));
  auto it = reg.index.find(id);
  if (it != reg.index.end()) return Generator(it->second);
  reg.records.push_back({std::string(name), degree, order, tag});
  const auto* rec = &reg.records.back();
  reg.index.emplace(std::move(id), rec);
  return Generator(rec);
}

bool operator<(Generator a, Generator b) {
  if (a.rec_ == b.rec_) return false;
  if (a.tag() != b.tag()) return a.tag() < b.tag();
  if (a.order() != b.order()) return a.order() < b.order();
  if (a.name() != b.name()) return a.name() < b.name();
  return a.degree() < b.degree();
}

Degree degree_of(const Key& key) {
  Degree d = 0;
  for (const auto& g : key) d += g.degree();
  return d;
}

std::string key_to_string(const Key& key) {
  if (key.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out += "(x)";
    out += key[i].name();
  }
  return out;
}

bool KeyLess::operator()(const Key& a, const Key& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Element Element::basis(Key key, Scalar coeff) {
  Element e(static_cast<int>(key.size()));
  e.add_term(key, coeff);
  return e;
}

Element Element::unit(Scalar coeff) {
  Element e(0);
  e.add_term({}, coeff);
  return e;
}

Scalar Element::coefficient(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const Key& key, const Scalar& coeff) {
  if (static_cast<int>(key.size()) != arity_) {
    throw std::invalid_argument("tensor arity mismatch: key " + key_to_string(key) + " in element of arity " +
                                std::to_string(arity_));
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::check_arity(const Element& rhs) const {
  if (arity_ != rhs.arity_) {
    throw std::invalid_argument("cannot combine elements of arity " + std::to_string(arity_) + " and " +
                                std::to_string(rhs.arity_));
  }
}

Element& Element::operator+=(const Element& rhs) {
  check_arity(rhs);
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  check_arity(rhs);
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  r *= Scalar(-1);
  return r;
}

Element Element::tensor(const Element& rhs) const {
  Element out(arity_ + rhs.arity_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : rhs.terms_) {
      Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.add_term(k, ca * cb);
    }
  }
  return out;
}

std::optional<Degree> Element::degree() const {
  std::optional<Degree> d;
  for (const auto& [k, c] : terms_) {
    Degree kd = degree_of(k);
    if (d && *d != kd) return std::nullopt;
    d = kd;
  }
  return d;
}

std::map<Degree, Element> Element::homogeneous_parts() const {
  std::map<Degree, Element> parts;
  for (const auto& [k, c] : terms_) {
    auto [it, _] = parts.try_emplace(degree_of(k), arity_);
    it->second.add_term(k, c);
  }
  return parts;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string coeff = c.to_display_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (k.empty()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += key_to_string(k);
    }
  }
  return out;
}

bool operator==(const Element& a, const Element& b) {
  if (a.arity_ != b.arity_) return false;
  return (a - b).is_zero();
}

}  // namespace bvkit
