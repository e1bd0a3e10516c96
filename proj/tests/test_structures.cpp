#include "bvkit/dual/double.hpp"
#include "bvkit/structures/check.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace bvkit;
using namespace testsupport;

namespace {

std::string failures(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    if (!r.passed()) out += r.summary() + "\n";
  }
  return out;
}

CheckReport check_one(const Instance& inst, RelationId id, const Window& w) {
  return relation_residual(builtin_relation(id), inst, w);
}

}  // namespace

TEST(Catalog, NamesRoundTrip) {
  std::set<std::string> seen;
  for (RelationId id : all_relations()) {
    std::string name(relation_name(id));
    EXPECT_TRUE(seen.insert(name).second) << name;
    EXPECT_EQ(relation_from_name(name), std::optional<RelationId>(id));
    EXPECT_EQ(builtin_relation(id).name, name);
  }
  EXPECT_FALSE(relation_from_name("NoSuchRelation").has_value());
  EXPECT_FALSE(relation_from_name("").has_value());
}

TEST(Catalog, SuitesContainExpectedRelations) {
  auto has = [](const std::vector<RelationId>& suite, RelationId id) {
    return std::find(suite.begin(), suite.end(), id) != suite.end();
  };
  EXPECT_TRUE(has(bvui_full(), RelationId::ElevenTerm));
  EXPECT_TRUE(has(bvui_full(), RelationId::SevenTermLambda));
  EXPECT_FALSE(has(bvui_full(), RelationId::Counit));
  EXPECT_TRUE(has(frobenius_full(), RelationId::Frobenius));
  EXPECT_TRUE(has(frobenius_full(), RelationId::BVFrobenius));
  EXPECT_TRUE(has(frobenius_full(), RelationId::Counit));
  for (RelationId id : {RelationId::Jacobi, RelationId::CoJacobi, RelationId::Poisson, RelationId::CoPoisson,
                        RelationId::MixedLemma, RelationId::DeltaEta, RelationId::BVCopairingSym,
                        RelationId::PermMu, RelationId::PermLambda}) {
    EXPECT_TRUE(has(consequence_suite(), id)) << relation_name(id);
  }
}

TEST(Catalog, SingleSignMutationsFlipExactlyOneTerm) {
  const RelationSpec& nine = builtin_relation(RelationId::NineTerm);
  auto mutations = single_sign_mutations(nine);
  ASSERT_EQ(mutations.size(), nine.term_count());
  for (std::size_t m = 0; m < mutations.size(); ++m) {
    std::size_t flipped = 0;
    std::size_t index = 0;
    for (std::size_t e = 0; e < nine.equations.size(); ++e) {
      for (std::size_t t = 0; t < nine.equations[e].size(); ++t, ++index) {
        const auto& a = nine.equations[e][t];
        const auto& b = mutations[m].equations[e][t];
        EXPECT_EQ(a.expr, b.expr);
        if (a.coeff == -b.coeff) {
          ++flipped;
          EXPECT_EQ(index, m);
        } else {
          EXPECT_EQ(a.coeff, b.coeff);
        }
      }
    }
    EXPECT_EQ(flipped, 1u);
  }
}

TEST(DefaultWindow, FiniteVersusRuleBased) {
  Window f = default_window(trivial_model());
  EXPECT_LT(f.max_index, 0);
  Window s = default_window(sphere_model(3));
  EXPECT_EQ(s.max_index, 4);
  EXPECT_EQ(s.max_index_ternary, 3);
  EXPECT_EQ(Window::up_to(4, 3).bound_for(2), 4);
  EXPECT_EQ(Window::up_to(4, 3).bound_for(3), 3);
}

TEST(CheckStructure, SphereBvuiFull) {
  auto reports = check_structure(sphere_model(3), bvui_full(), Window::up_to(4, 3));
  EXPECT_TRUE(all_passed(reports)) << failures(reports);
  EXPECT_EQ(reports.size(), bvui_full().size());
}

TEST(CheckStructure, TrivialBvuiFull) {
  auto reports = check_structure(trivial_model(), bvui_full(), Window::all());
  EXPECT_TRUE(all_passed(reports)) << failures(reports);
}

TEST(CheckStructure, AllPassedTreatsSkipAsNotPassed) {
  auto reports = check_structure(sphere_model(3), {RelationId::Assoc, RelationId::Counit}, Window::up_to(2));
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_TRUE(reports[0].passed());
  EXPECT_EQ(reports[1].status, CheckReport::Status::skipped);
  EXPECT_FALSE(all_passed(reports));
}

TEST(CheckStructure, ThreadCountDoesNotChangeReports) {
  Instance s = sphere_model(3);
  auto one = check_structure(s, bvui_full(), Window::up_to(3, 2), 1);
  auto four = check_structure(s, bvui_full(), Window::up_to(3, 2), 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i].summary(), four[i].summary());
}

TEST(Consequences, SpherePasses) {
  for (int n : {3, 5}) {
    auto reports = check_consequences(sphere_model(n), Window::up_to(4, 3));
    EXPECT_TRUE(all_passed(reports)) << failures(reports);
  }
}

TEST(Consequences, PoissonAndMixedLemmaOnSphere) {
  Instance s = sphere_model(3);
  EXPECT_TRUE(check_one(s, RelationId::Poisson, Window::up_to(3)).passed());
  EXPECT_TRUE(check_one(s, RelationId::MixedLemma, Window::up_to(3)).passed());
}

TEST(Consequences, EpsilonDeltaOnFrobeniusModel) {
  EXPECT_TRUE(check_one(sphere_frobenius_model(3), RelationId::EpsilonDelta, Window::all()).passed());
}

TEST(Consequences, DerivedIdentitiesFollowFromBvuiFull) {
  std::vector<Instance> instances = finite_bvui_examples();
  for (const auto& a : finite_bvui_examples()) instances.push_back(forget_frobenius_to_bvui(build_double(a)));
  instances.push_back(forget_frobenius_to_bvui(sphere_frobenius_model(3)));
  for (const auto& inst : instances) {
    ASSERT_TRUE(all_passed(check_structure(inst, bvui_full(), Window::all()))) << inst.name;
    EXPECT_TRUE(check_one(inst, RelationId::DeltaEta, Window::all()).passed()) << inst.name;
    EXPECT_TRUE(check_one(inst, RelationId::BVCopairingSym, Window::all()).passed()) << inst.name;
    EXPECT_TRUE(check_one(inst, RelationId::PermMu, Window::all()).passed()) << inst.name;
    EXPECT_TRUE(check_one(inst, RelationId::PermLambda, Window::all()).passed()) << inst.name;
  }
}

TEST(DerivedOperations, BracketIsSymmetricAndCobracketAntisymmetric) {
  std::vector<Instance> instances{sphere_model(3), sphere_model(5), three_dim_model(),
                                  build_double(three_dim_model())};
  const GradedMap tau = GradedMap::permutation({1, 0});
  for (const auto& inst : instances) {
    auto basis = inst.basis.is_finite() ? inst.basis.elements() : inst.basis.window(4);
    std::vector<std::vector<Generator>> two{basis, basis};
    std::vector<std::vector<Generator>> one{basis};
    GradedMap beta = derived_bracket(inst);
    GradedMap gamma = derived_cobracket(inst);
    EXPECT_TRUE(maps_agree(compose(beta, tau), beta, two)) << inst.name;
    EXPECT_TRUE(maps_agree(compose(tau, gamma), scale_map(Scalar(-1), gamma), one)) << inst.name;
    EXPECT_EQ(beta.degree(), 1);
    EXPECT_EQ(gamma.degree(), inst.lambda_degree + 1);
  }
}

TEST(DerivedOperations, AgreeWithParsedMacros) {
  Instance s = sphere_model(3);
  Context ctx(s);
  auto basis = s.basis.window(4);
  std::vector<std::vector<Generator>> two{basis, basis};
  std::vector<std::vector<Generator>> one{basis};
  EXPECT_TRUE(maps_agree(derived_bracket(s), resolve(parse_expr("beta"), ctx), two));
  EXPECT_TRUE(maps_agree(derived_cobracket(s), resolve(parse_expr("gamma"), ctx), one));
  GradedMap by_hand = resolve(
      parse_expr("Delta . mu - mu . (Delta (x) id) - mu . (id (x) Delta)"), ctx);
  EXPECT_TRUE(maps_agree(derived_bracket(s), by_hand, two));
}

TEST(CounitEleven, HoldsOnFrobeniusInstances) {
  EXPECT_TRUE(check_one(sphere_frobenius_model(3), RelationId::CounitEleven, Window::all()).passed());
  for (const auto& a : finite_bvui_examples()) {
    EXPECT_TRUE(check_one(build_double(a), RelationId::CounitEleven, Window::all()).passed()) << a.name;
  }
  EXPECT_EQ(check_one(sphere_model(3), RelationId::CounitEleven, Window::up_to(1)).status,
            CheckReport::Status::skipped);
}
