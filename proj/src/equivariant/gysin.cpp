#include "bvkit/equivariant/gysin.hpp"

#include "bvkit/core/linalg.hpp"
#include "bvkit/models/models.hpp"
#include "bvkit/opexpr/parser.hpp"
#include "bvkit/structures/catalog.hpp"

namespace bvkit {

namespace {

Generator quotient_generator(Generator g) {
  return Generator::make("[" + g.name() + "]", g.degree(), g.order(), SpaceTag::quotient);
}

std::optional<std::string> strip_brackets(std::string_view name) {
  if (name.size() < 3 || name.front() != '[' || name.back() != ']') return std::nullopt;
  return std::string(name.substr(1, name.size() - 2));
}

GysinData sphere_gysin(const Instance& inst) {
  auto a = inst.basis.find("A");
  if (!a) throw GysinError("canonical Gysin data for rule-based spaces is only available for sphere models");
  const int n = -a->degree();
  auto cls = [n](int k) { return quotient_generator(sphere_generator(n, {true, k})); };
  GradedBasis b = GradedBasis::rule(
      "sphere:" + std::to_string(n) + " quotient basis [AU^k], k >= 1",
      [cls](int bound) {
        std::vector<Generator> out;
        for (int k = 1; k <= bound; ++k) out.push_back(cls(k));
        return out;
      },
      [cls](std::string_view name) -> std::optional<Generator> {
        auto inner = strip_brackets(name);
        if (!inner) return std::nullopt;
        auto key = parse_sphere_name(*inner);
        if (!key || !key->has_a || key->k < 1) return std::nullopt;
        return cls(key->k);
      });
  const GradedMap delta = inst.Delta;
  GradedMap e("E", 1, 1, 0, [delta, cls](const Key& k) {
    auto key = parse_sphere_name(k[0].name());
    if (!key || !key->has_a || key->k < 1 || delta.apply(k).is_zero()) return Element(1);
    return Element::basis({cls(key->k)});
  });
  GradedMap m("M", 1, 1, 1, [delta, n](const Key& k) {
    auto inner = strip_brackets(k[0].name());
    auto key = inner ? parse_sphere_name(*inner) : std::nullopt;
    if (!key) throw std::invalid_argument("M: not a quotient class: " + k[0].name());
    return delta.apply({sphere_generator(n, *key)});
  });
  return {std::move(b), std::move(e), std::move(m)};
}

GysinData finite_gysin(const Instance& inst) {
  const auto& basis = inst.basis.elements();
  SpanReducer images;
  std::vector<Generator> classes;
  std::map<int, Generator> class_of;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (images.add(inst.Delta.apply({basis[j]}), static_cast<int>(j))) {
      classes.push_back(quotient_generator(basis[j]));
      class_of.emplace(static_cast<int>(j), classes.back());
    }
  }
  std::map<Key, Element, KeyLess> e_table, m_table;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto coords = images.express(inst.Delta.apply({basis[i]}));
    Element out(1);
    for (const auto& [j, c] : *coords) out.add_term({class_of.at(j)}, c);
    e_table.emplace(Key{basis[i]}, std::move(out));
  }
  for (const auto& [j, cls] : class_of) m_table.emplace(Key{cls}, inst.Delta.apply({basis[j]}));
  return {GradedBasis::finite(classes), GradedMap::from_table("E", 1, 1, 0, std::move(e_table)),
          GradedMap::from_table("M", 1, 1, 1, std::move(m_table))};
}

Instance attach(const Instance& inst, GysinData g) {
  Instance out = inst;
  out.gysin = std::make_shared<const GysinData>(std::move(g));
  return out;
}

RelationSpec gysin_spec(std::string name, const std::string& text, bool from_b) {
  RelationSpec r = RelationSpec::from_text(std::move(name), {text}, RelationSpec::gysin);
  r.inputs_from_gysin_space = from_b;
  return r;
}

const std::string kBracket = "(E . mu . (M (x) M))";
const std::string kCobracket = "((E (x) E) . lambda . M)";

OpExpr repeated_tensor(const std::string& name, int count) {
  std::vector<OpExpr> parts(count, OpExpr::gen(name));
  return OpExpr::tensor(std::move(parts));
}

}  // namespace

GysinData canonical_gysin(const Instance& inst, const Window& window) {
  CheckReport sq = relation_residual(builtin_relation(RelationId::DeltaSquared), inst, window);
  if (!sq.passed()) throw GysinError("canonical Gysin data needs Delta^2 = 0: " + sq.summary());
  return inst.basis.is_finite() ? finite_gysin(inst) : sphere_gysin(inst);
}

GysinData zero_gysin(const Instance& inst) {
  GradedBasis b = inst.basis.is_finite()
                      ? [&] {
                          std::vector<Generator> classes;
                          for (auto g : inst.basis.elements()) classes.push_back(quotient_generator(g));
                          return GradedBasis::finite(classes);
                        }()
                      : GradedBasis::rule(
                            "copy of " + inst.basis.description(),
                            [src = inst.basis](int bound) {
                              std::vector<Generator> out;
                              for (auto g : src.window(bound)) out.push_back(quotient_generator(g));
                              return out;
                            },
                            [src = inst.basis](std::string_view name) -> std::optional<Generator> {
                              auto inner = strip_brackets(name);
                              if (!inner) return std::nullopt;
                              auto g = src.find(*inner);
                              if (!g) return std::nullopt;
                              return quotient_generator(*g);
                            });
  return {std::move(b), GradedMap::zero("E", 1, 1, 0), GradedMap::zero("M", 1, 1, 1)};
}

std::vector<CheckReport> validate_gysin(const Instance& inst, const GysinData& g, const Window& window) {
  Instance with = attach(inst, g);
  std::vector<CheckReport> out;
  out.push_back(relation_residual(gysin_spec("GysinME", "M . E - Delta", false), with, window));
  out.push_back(relation_residual(gysin_spec("GysinEM", "E . M", true), with, window));
  out.push_back(relation_residual(gysin_spec("GysinDeltaM", "Delta . M", true), with, window));
  out.push_back(relation_residual(gysin_spec("GysinEDelta", "E . Delta", false), with, window));
  return out;
}

Instance with_gysin(const Instance& inst, GysinData g, const Window& window) {
  for (const auto& r : validate_gysin(inst, g, window)) {
    if (r.failed()) throw GysinError("invalid Gysin data: " + r.summary());
  }
  return attach(inst, std::move(g));
}

GradedMap string_bracket(const Instance& inst, const GysinData& g) {
  Instance with = attach(inst, g);
  return resolve(parse_expr(kBracket), Context(with)).relabeled("string bracket");
}

GradedMap string_cobracket(const Instance& inst, const GysinData& g) {
  Instance with = attach(inst, g);
  return resolve(parse_expr(kCobracket), Context(with)).relabeled("string cobracket");
}

RelationSpec string_jacobi() {
  const std::string t = kBracket + " . (id (x) " + kBracket + ")";
  return gysin_spec("StringJacobi", t + " + " + t + " . sigma + " + t + " . sigma2", true);
}

RelationSpec string_cojacobi() {
  const std::string t = "(" + kCobracket + " (x) id) . " + kCobracket;
  return gysin_spec("StringCoJacobi", t + " + sigma . " + t + " + sigma2 . " + t, true);
}

RelationSpec string_drinfeld() {
  const std::string left = "(" + kBracket + " (x) id) . (id (x) " + kCobracket + ")";
  const std::string right = "(id (x) " + kBracket + ") . (" + kCobracket + " (x) id)";
  return gysin_spec("StringDrinfeld",
                    kCobracket + " . " + kBracket + " - " + left + " + " + left + " . tau - " + right + " + " + right +
                        " . tau",
                    true);
}

std::vector<CheckReport> check_lie_bialgebra(const Instance& inst, const Window& window, unsigned threads) {
  if (!inst.gysin) throw GysinError(inst.name + " carries no Gysin data");
  return {relation_residual(string_jacobi(), inst, window, threads),
          relation_residual(string_cojacobi(), inst, window, threads),
          relation_residual(string_drinfeld(), inst, window, threads)};
}

RelationSpec transport_to_gysin(const RelationSpec& spec, int inputs, int outputs) {
  RelationSpec out = spec;
  out.name = "E." + spec.name + ".M";
  out.requires_ |= RelationSpec::gysin;
  out.inputs_from_gysin_space = true;
  const OpExpr e = repeated_tensor("E", outputs);
  const OpExpr m = repeated_tensor("M", inputs);
  for (auto& eq : out.equations) {
    for (auto& term : eq) term.expr = OpExpr::compose({e, term.expr, m});
  }
  return out;
}

std::vector<CheckReport> check_transported_relations(const Instance& inst, const Window& window, unsigned threads) {
  if (!inst.gysin) throw GysinError(inst.name + " carries no Gysin data");
  return {relation_residual(transport_to_gysin(builtin_relation(RelationId::SevenTermMu), 3, 1), inst, window, threads),
          relation_residual(transport_to_gysin(builtin_relation(RelationId::SevenTermLambda), 1, 3), inst, window,
                            threads),
          relation_residual(transport_to_gysin(builtin_relation(RelationId::NineTerm), 2, 2), inst, window, threads)};
}

}  // namespace bvkit
