#include "bvkit/opexpr/relation.hpp"

#include "bvkit/opexpr/parser.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace bvkit {

RelationSpec RelationSpec::from_text(std::string name, const std::vector<std::string>& equations, unsigned requires_) {
  RelationSpec spec;
  spec.name = std::move(name);
  spec.requires_ = requires_;
  for (const auto& text : equations) {
    std::vector<SignedTerm> terms;
    for (auto& [c, e] : signed_terms(parse_expr(text))) terms.push_back({c, e});
    spec.equations.push_back(std::move(terms));
  }
  return spec;
}

std::size_t RelationSpec::term_count() const {
  std::size_t n = 0;
  for (const auto& eq : equations) n += eq.size();
  return n;
}

std::vector<std::string> RelationSpec::texts() const {
  std::vector<std::string> out;
  for (const auto& eq : equations) {
    std::vector<OpExpr> parts;
    for (const auto& t : eq) parts.push_back(t.coeff.is_one() ? t.expr : OpExpr::scale(t.coeff, t.expr));
    out.push_back(print(OpExpr::sum(std::move(parts))));
  }
  return out;
}

const char* to_string(CheckReport::Status s) {
  switch (s) {
    case CheckReport::Status::pass:
      return "pass";
    case CheckReport::Status::fail:
      return "fail";
    case CheckReport::Status::skipped:
      return "skipped";
  }
  return "?";
}

std::string CheckReport::summary() const {
  std::string out = relation + " on " + instance + " [" + window + "]: " + to_string(status) + " (" +
                    std::to_string(tuples) + " tuples";
  if (failed()) out += ", " + std::to_string(failing_tuples) + " failing";
  out += ")";
  if (!witnesses.empty()) {
    const auto& w = witnesses.front();
    out += "; first witness " + key_to_string(w.input);
    if (w.equation > 0) out += " (equation " + std::to_string(w.equation + 1) + ")";
    out += " -> " + w.residual.to_string();
  }
  if (!note.empty()) out += "; " + note;
  return out;
}

std::optional<std::string> applicability_problem(const RelationSpec& rel, const Instance& inst) {
  if ((rel.requires_ & RelationSpec::counit) && !inst.epsilon) return "requires a counit epsilon";
  if ((rel.requires_ & RelationSpec::gysin) && !inst.gysin) return "requires Gysin data";
  if (rel.requires_ & RelationSpec::copairing_zero) {
    Element c = inst.copairing();
    if (!c.is_zero()) return "requires lambda . eta = 0, but lambda . eta = " + c.to_string();
  }
  if (rel.requires_ & RelationSpec::trivial_copairing_delta) {
    GradedMap f = tensor_maps(GradedMap::identity(), inst.Delta);
    Element c = f(inst.copairing());
    if (!c.is_zero()) return "requires (id (x) Delta) . lambda . eta = 0, but it is " + c.to_string();
  }
  return std::nullopt;
}

namespace {

struct TupleOutcome {
  bool failed = false;
  int equation = 0;
  Element residual{0};
};

}  // namespace

CheckReport relation_residual(const RelationSpec& rel, const Instance& inst, const Window& window,
                              unsigned threads) {
  CheckReport report;
  report.relation = rel.name;
  report.instance = inst.name;
  report.window = window.describe();
  if (auto problem = applicability_problem(rel, inst)) {
    report.status = CheckReport::Status::skipped;
    report.note = *problem;
    return report;
  }

  Context ctx(inst);
  std::vector<GradedMap> equations;
  for (const auto& eq : rel.equations) {
    std::optional<GradedMap> acc;
    for (const auto& term : eq) {
      GradedMap m = scale_map(term.coeff, resolve(term.expr, ctx));
      acc = acc ? add_maps(*acc, m) : m;
    }
    equations.push_back(*acc);
  }
  const int arity = equations.front().source_arity();
  for (const auto& m : equations) {
    if (m.source_arity() != arity) throw std::invalid_argument(rel.name + ": equations have different input arities");
  }

  const GradedBasis& space = rel.inputs_from_gysin_space ? inst.gysin->basis : inst.basis;
  const std::vector<Generator> slot = space.window(window.bound_for(arity));
  std::vector<std::vector<Generator>> slots(arity, slot);
  const std::vector<Key> tuples = enumerate_tuples(slots);
  report.tuples = arity > 0 && slot.empty() ? 0 : tuples.size();
  if (report.tuples == 0) {
    report.status = CheckReport::Status::skipped;
    report.note = "empty window";
    return report;
  }

  std::vector<TupleOutcome> outcomes(tuples.size());
  std::vector<std::exception_ptr> errors(tuples.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        for (std::size_t e = 0; e < equations.size(); ++e) {
          Element r = reduce_into(equations[e].apply(tuples[i]), inst.field);
          if (!r.is_zero()) {
            outcomes[i] = {true, static_cast<int>(e), std::move(r)};
            break;
          }
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, tuples.size()));
  if (workers == 1) {
    work(0, tuples.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (tuples.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t begin = w * chunk, end = std::min(tuples.size(), begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (!outcomes[i].failed) continue;
    if (report.failing_tuples++ == 0) {
      report.witnesses.push_back({tuples[i], outcomes[i].equation, outcomes[i].residual});
    }
  }
  report.status = report.failing_tuples ? CheckReport::Status::fail : CheckReport::Status::pass;
  return report;
}

}  // namespace bvkit
