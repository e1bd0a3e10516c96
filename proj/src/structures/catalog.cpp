#include "bvkit/structures/catalog.hpp"

#include <map>
#include <stdexcept>

namespace bvkit {

namespace {

struct Entry {
  RelationId id;
  const char* name;
  std::vector<std::string> equations;
  unsigned requires_ = RelationSpec::none;
};

// (1 + sigma + sigma2) applied on the right of every listed term.
std::string cyclic_right(const std::vector<std::pair<char, std::string>>& terms) {
  std::string out;
  for (const char* perm : {"", " . sigma", " . sigma2"}) {
    for (const auto& [sign, t] : terms) out += std::string(" ") + sign + " " + t + perm;
  }
  return out;
}

std::string cyclic_left(const std::vector<std::pair<char, std::string>>& terms) {
  std::string out;
  for (const char* perm : {"", "sigma . ", "sigma2 . "}) {
    for (const auto& [sign, t] : terms) out += std::string(" ") + sign + " " + perm + t;
  }
  return out;
}

const std::string kEta = "(id (x) lambda . eta (x) id)";

std::vector<Entry> entries() {
  const std::string nine =
      "lambda . Delta . mu - lambda . mu . (Delta (x) id) - lambda . mu . (id (x) Delta)"
      " + (Delta (x) id) . lambda . mu + (id (x) Delta) . lambda . mu"
      " - (mu (x) id) . (id (x) Delta (x) id) . (id (x) lambda)"
      " - (mu (x) id) . (id (x) Delta (x) id) . (id (x) lambda) . tau"
      " - (id (x) mu) . (id (x) Delta (x) id) . (lambda (x) id)"
      " - (id (x) mu) . (id (x) Delta (x) id) . (lambda (x) id) . tau";
  const std::string eta_terms = " + (mu (x) mu) . (id (x) id (x) Delta (x) id) . " + kEta +
                                " + (mu (x) mu) . (id (x) id (x) Delta (x) id) . " + kEta + " . tau";
  const std::string copairing_sym = "(Delta (x) id) . lambda . eta - (id (x) Delta) . lambda . eta";
  const std::string eps_mu = "epsilon . mu";

  return {
      {RelationId::Assoc, "Assoc", {"mu . (mu (x) id) - mu . (id (x) mu)"}},
      {RelationId::Comm, "Comm", {"mu . tau - mu"}},
      {RelationId::Unit, "Unit", {"mu . (eta (x) id) - id", "mu . (id (x) eta) - id"}},
      {RelationId::Coassoc, "Coassoc", {"(lambda (x) id) . lambda + (id (x) lambda) . lambda"}},
      {RelationId::Cocomm, "Cocomm", {"tau . lambda + lambda"}},
      {RelationId::Counit,
       "Counit",
       {"(epsilon (x) id) . lambda - id", "(id (x) epsilon) . lambda + id"},
       RelationSpec::counit},
      {RelationId::DeltaSquared, "DeltaSquared", {"Delta . Delta"}},
      {RelationId::UnitalInfinitesimal,
       "UnitalInfinitesimal",
       {"lambda . mu - (id (x) mu) . (lambda (x) id) - (mu (x) id) . (id (x) lambda) + (mu (x) mu) . " + kEta}},
      {RelationId::SevenTermMu,
       "SevenTermMu",
       {"Delta . mu . (mu (x) id)" +
        cyclic_right({{'-', "mu . (Delta . mu (x) id)"}, {'+', "mu . (mu (x) id) . (Delta (x) id (x) id)"}})}},
      {RelationId::SevenTermLambda,
       "SevenTermLambda",
       {"(lambda (x) id) . lambda . Delta" + cyclic_left({{'+', "(Delta (x) id (x) id) . (lambda (x) id) . lambda"},
                                                          {'+', "(lambda . Delta (x) id) . lambda"}})}},
      {RelationId::ElevenTerm, "ElevenTerm", {nine + eta_terms}},
      {RelationId::NineTerm, "NineTerm", {nine}, RelationSpec::trivial_copairing_delta},
      {RelationId::DeltaEta, "DeltaEta", {"Delta . eta"}},
      {RelationId::BVCopairingSym, "BVCopairingSym", {copairing_sym}},
      {RelationId::Frobenius,
       "Frobenius",
       {"lambda . mu - (mu (x) id) . (id (x) lambda)", "lambda . mu - (id (x) mu) . (lambda (x) id)"}},
      {RelationId::FrobeniusEta,
       "FrobeniusEta",
       {"lambda - (mu (x) id) . (id (x) lambda . eta)", "lambda - (id (x) mu) . (lambda . eta (x) id)"}},
      {RelationId::FrobeniusEpsilon,
       "FrobeniusEpsilon",
       {"mu - (" + eps_mu + " (x) id) . (id (x) lambda)", "mu + (id (x) " + eps_mu + ") . (lambda (x) id)"},
       RelationSpec::counit},
      {RelationId::BVFrobenius, "BVFrobenius", {copairing_sym}},
      {RelationId::BVFrobeniusCounit,
       "BVFrobeniusCounit",
       {eps_mu + " . (Delta (x) id) - " + eps_mu + " . (id (x) Delta)"},
       RelationSpec::counit},
      {RelationId::EpsilonDelta, "EpsilonDelta", {"epsilon . Delta"}, RelationSpec::counit},
      {RelationId::Jacobi, "Jacobi", {cyclic_right({{'+', "beta . (id (x) beta)"}})}},
      {RelationId::CoJacobi, "CoJacobi", {cyclic_left({{'+', "(gamma (x) id) . gamma"}})}},
      {RelationId::Poisson,
       "Poisson",
       {"beta . (mu (x) id) - mu . (id (x) beta) - mu . (beta (x) id) . (id (x) tau)"}},
      {RelationId::CoPoisson,
       "CoPoisson",
       {"(lambda (x) id) . gamma - (id (x) gamma) . lambda - (id (x) tau) . (gamma (x) id) . lambda"}},
      {RelationId::MixedLemma,
       "MixedLemma",
       {"gamma . mu - lambda . beta - (beta (x) id) . (id (x) lambda) - (mu (x) id) . (id (x) gamma)"
        " - (id (x) mu) . (gamma (x) id) - (id (x) beta) . (lambda (x) id) + (mu (x) beta) . " +
        kEta + " + (beta (x) mu) . " + kEta + " + (mu (x) mu) . (id (x) gamma . eta (x) id)"}},
      {RelationId::PermMu,
       "PermMu",
       {"mu . (mu (x) id) . sigma - mu . (mu (x) id)",
        "mu . (mu (x) id) . (Delta (x) id (x) id) . sigma - mu . (mu (x) id) . (id (x) id (x) Delta)",
        "mu . (mu (x) id) . (Delta (x) id (x) id) . sigma2 - mu . (mu (x) id) . (id (x) Delta (x) id)"}},
      {RelationId::PermLambda,
       "PermLambda",
       {"sigma . (lambda (x) id) . lambda - (lambda (x) id) . lambda",
        "sigma . (Delta (x) id (x) id) . (lambda (x) id) . lambda - (id (x) Delta (x) id) . (lambda (x) id) . lambda",
        "sigma2 . (Delta (x) id (x) id) . (lambda (x) id) . lambda - (id (x) id (x) Delta) . (lambda (x) id) . "
        "lambda"}},
      {RelationId::BracketSymmetry, "BracketSymmetry", {"beta . tau - beta"}},
      {RelationId::CobracketAntisymmetry, "CobracketAntisymmetry", {"tau . gamma + gamma"}},
      {RelationId::CounitEleven,
       "CounitEleven",
       {eps_mu + " . (Delta (x) id) + " + eps_mu + " . (id (x) Delta) - (" + eps_mu + " (x) " + eps_mu +
        ") . (id (x) id (x) Delta (x) id) . " + kEta + " - (" + eps_mu + " (x) " + eps_mu +
        ") . (id (x) id (x) Delta (x) id) . " + kEta + " . tau"},
       RelationSpec::counit},
  };
}

struct Catalog {
  std::map<RelationId, RelationSpec> specs;
  std::map<std::string, RelationId, std::less<>> by_name;
  std::vector<RelationId> order;
};

const Catalog& catalog() {
  static const Catalog c = [] {
    Catalog out;
    for (auto& e : entries()) {
      out.specs.emplace(e.id, RelationSpec::from_text(e.name, e.equations, e.requires_));
      out.by_name.emplace(e.name, e.id);
      out.order.push_back(e.id);
    }
    return out;
  }();
  return c;
}

}  // namespace

std::string_view relation_name(RelationId id) { return builtin_relation(id).name; }

std::optional<RelationId> relation_from_name(std::string_view name) {
  const auto& by_name = catalog().by_name;
  auto it = by_name.find(name);
  if (it == by_name.end()) return std::nullopt;
  return it->second;
}

const std::vector<RelationId>& all_relations() { return catalog().order; }

const RelationSpec& builtin_relation(RelationId id) {
  const auto& specs = catalog().specs;
  auto it = specs.find(id);
  if (it == specs.end()) throw std::invalid_argument("unknown relation id");
  return it->second;
}

const std::vector<RelationId>& bvui_full() {
  static const std::vector<RelationId> suite = {
      RelationId::Assoc,        RelationId::Comm,         RelationId::Unit,
      RelationId::Coassoc,      RelationId::Cocomm,       RelationId::DeltaSquared,
      RelationId::UnitalInfinitesimal, RelationId::SevenTermMu, RelationId::SevenTermLambda,
      RelationId::ElevenTerm,
  };
  return suite;
}

const std::vector<RelationId>& frobenius_full() {
  static const std::vector<RelationId> suite = [] {
    std::vector<RelationId> s = bvui_full();
    for (auto id : {RelationId::Counit, RelationId::Frobenius, RelationId::FrobeniusEta, RelationId::FrobeniusEpsilon,
                    RelationId::BVFrobenius, RelationId::BVFrobeniusCounit, RelationId::EpsilonDelta}) {
      s.push_back(id);
    }
    return s;
  }();
  return suite;
}

const std::vector<RelationId>& consequence_suite() {
  static const std::vector<RelationId> suite = {
      RelationId::Jacobi,     RelationId::CoJacobi, RelationId::Poisson,        RelationId::CoPoisson,
      RelationId::MixedLemma, RelationId::DeltaEta, RelationId::BVCopairingSym, RelationId::PermMu,
      RelationId::PermLambda, RelationId::BracketSymmetry, RelationId::CobracketAntisymmetry,
  };
  return suite;
}

std::vector<RelationSpec> single_sign_mutations(const RelationSpec& spec) {
  std::vector<RelationSpec> out;
  for (std::size_t e = 0; e < spec.equations.size(); ++e) {
    for (std::size_t t = 0; t < spec.equations[e].size(); ++t) {
      RelationSpec m = spec;
      m.equations[e][t].coeff = -m.equations[e][t].coeff;
      m.name = spec.name + "~flip" + std::to_string(out.size() + 1);
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace bvkit
