#include "bvkit/structures/check.hpp"

#include "bvkit/opexpr/parser.hpp"

#include <algorithm>

namespace bvkit {

Window default_window(const Instance& inst) {
  return inst.basis.is_finite() ? Window::all() : Window::up_to(4, 3);
}

std::vector<CheckReport> check_structure(const Instance& inst, const std::vector<RelationId>& suite,
                                         const Window& window, unsigned threads) {
  std::vector<CheckReport> out;
  out.reserve(suite.size());
  for (auto id : suite) out.push_back(relation_residual(builtin_relation(id), inst, window, threads));
  return out;
}

std::vector<CheckReport> check_consequences(const Instance& inst, const Window& window, unsigned threads) {
  return check_structure(inst, consequence_suite(), window, threads);
}

GradedMap derived_bracket(const Instance& inst) {
  Context ctx(inst);
  return resolve(parse_expr("beta"), ctx).relabeled("beta");
}

GradedMap derived_cobracket(const Instance& inst) {
  Context ctx(inst);
  return resolve(parse_expr("gamma"), ctx).relabeled("gamma");
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
}

}  // namespace bvkit
