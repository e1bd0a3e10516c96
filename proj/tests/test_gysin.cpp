#include "bvkit/equivariant/gysin.hpp"
#include "bvkit/structures/check.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace bvkit;
using namespace testsupport;

namespace {

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return false;
  }
  return !reports.empty();
}

/// Finite space {1, x, y} with |x| = -1, |y| = -2, Delta(y) = x and only the
/// unit products; enough structure to exercise the finite quotient path.
Instance small_delta_instance() {
  Generator one = Generator::make("1", 0, 0);
  Generator x = Generator::make("x", -1, 1);
  Generator y = Generator::make("y", -2, 2);
  std::map<Key, Element, KeyLess> mu;
  for (auto g : {one, x, y}) {
    mu.emplace(Key{one, g}, Element::basis({g}));
    mu.emplace(Key{g, one}, Element::basis({g}));
  }
  std::map<Key, Element, KeyLess> delta;
  delta.emplace(Key{y}, Element::basis({x}));
  Instance inst{
      .name = "small",
      .field = Field::rationals(),
      .lambda_degree = -1,
      .basis = GradedBasis::finite({one, x, y}),
      .mu = GradedMap::from_table("mu", 2, 1, 0, mu),
      .lambda = GradedMap::zero("lambda", 1, 2, -1),
      .Delta = GradedMap::from_table("Delta", 1, 1, 1, delta),
      .eta = Element::basis({one}),
      .epsilon = std::nullopt,
      .gysin = nullptr,
  };
  return inst;
}

}  // namespace

TEST(CanonicalGysin, SphereQuotientBasisAndMark) {
  Instance s = sphere_model(3);
  GysinData g = canonical_gysin(s, Window::up_to(5));
  auto b = g.basis.window(4);
  ASSERT_EQ(b.size(), 4u);
  EXPECT_EQ(b[0].name(), "[AU]");
  EXPECT_EQ(b[3].name(), "[AU^4]");
  for (int k = 1; k <= 4; ++k) {
    Generator cls = b[k - 1];
    EXPECT_EQ(g.M.apply({cls}), Element::basis({sphere_generator(3, {false, k - 1})}, k));
    EXPECT_EQ(g.E.apply({sphere_generator(3, {true, k})}), Element::basis({cls}));
    EXPECT_TRUE(g.E.apply({sphere_generator(3, {false, k})}).is_zero());
  }
  EXPECT_TRUE(g.E.apply({sphere_generator(3, {true, 0})}).is_zero());
  EXPECT_EQ(g.M.degree(), 1);
  EXPECT_EQ(g.E.degree(), 0);
}

TEST(CanonicalGysin, ValidatesOnSphere) {
  for (int n : {3, 5}) {
    Instance s = sphere_model(n);
    GysinData g = canonical_gysin(s, Window::up_to(5));
    auto reports = validate_gysin(s, g, Window::up_to(5));
    ASSERT_EQ(reports.size(), 4u);
    for (const auto& r : reports) EXPECT_TRUE(r.passed()) << r.summary();
  }
}

TEST(CanonicalGysin, TrivialDeltaGivesEmptySpace) {
  for (const auto& inst : finite_bvui_examples()) {
    GysinData g = canonical_gysin(inst, Window::all());
    EXPECT_TRUE(g.basis.elements().empty()) << inst.name;
    for (const auto& x : inst.basis.elements()) EXPECT_TRUE(g.E.apply({x}).is_zero());
  }
}

TEST(CanonicalGysin, FinitePivotPath) {
  Instance inst = small_delta_instance();
  GysinData g = canonical_gysin(inst, Window::all());
  ASSERT_EQ(g.basis.elements().size(), 1u);
  Generator cls = g.basis.elements()[0];
  EXPECT_EQ(g.M.apply({cls}), Element::basis({*inst.basis.find("x")}));
  EXPECT_EQ(g.E.apply({*inst.basis.find("y")}), Element::basis({cls}));
  for (const auto& r : validate_gysin(inst, g, Window::all())) EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(CanonicalGysin, RejectsNonSquareZeroDelta) {
  Instance bad = small_delta_instance();
  std::map<Key, Element, KeyLess> delta;
  Generator one = *bad.basis.find("1");
  Generator x = *bad.basis.find("x");
  Generator y = *bad.basis.find("y");
  delta.emplace(Key{y}, Element::basis({x}));
  delta.emplace(Key{x}, Element::basis({one}));
  bad.Delta = GradedMap::from_table("Delta", 1, 1, 1, delta);
  EXPECT_THROW(canonical_gysin(bad, Window::all()), GysinError);
}

TEST(ZeroGysin, ValidExactlyWhenDeltaVanishes) {
  Instance e = exterior_model();
  auto ok = validate_gysin(e, zero_gysin(e), Window::all());
  EXPECT_TRUE(all_pass(ok));
  Instance s = sphere_model(3);
  auto bad = validate_gysin(s, zero_gysin(s), Window::up_to(3));
  EXPECT_TRUE(bad[0].failed());
  EXPECT_THROW(with_gysin(s, zero_gysin(s), Window::up_to(3)), GysinError);
}

TEST(ZeroGysin, BracketsVanishAndLieBialgebraPasses) {
  for (const auto& inst : finite_bvui_examples()) {
    GysinData g = zero_gysin(inst);
    auto b = g.basis.elements();
    std::vector<std::vector<Generator>> two{b, b};
    std::vector<std::vector<Generator>> one{b};
    GradedMap bracket = string_bracket(inst, g);
    GradedMap cobracket = string_cobracket(inst, g);
    for (const auto& k : enumerate_tuples(two)) EXPECT_TRUE(bracket.apply(k).is_zero());
    for (const auto& k : enumerate_tuples(one)) EXPECT_TRUE(cobracket.apply(k).is_zero());
    Instance with = with_gysin(inst, g, Window::all());
    EXPECT_TRUE(all_pass(check_lie_bialgebra(with, Window::all()))) << inst.name;
  }
}

TEST(UserGysin, FailingEMIsRejected) {
  Instance s = sphere_model(3);
  GysinData copy = zero_gysin(s);
  // E the identity onto the copy, M induced by Delta: ME = Delta but EM != 0.
  GradedMap E("E", 1, 1, 0, [](const Key& k) {
    return Element::basis({Generator::make("[" + k[0].name() + "]", k[0].degree(), k[0].order(), SpaceTag::quotient)});
  });
  GradedMap M("M", 1, 1, 1, [s](const Key& k) {
    auto inner = k[0].name().substr(1, k[0].name().size() - 2);
    return s.Delta.apply({*s.basis.find(inner)});
  });
  GysinData bad{copy.basis, E, M};
  auto reports = validate_gysin(s, bad, Window::up_to(3));
  ASSERT_EQ(reports.size(), 4u);
  EXPECT_TRUE(reports[0].passed()) << reports[0].summary();
  EXPECT_TRUE(reports[1].failed());
  EXPECT_THROW(with_gysin(s, bad, Window::up_to(3)), GysinError);
}

TEST(StringOperations, SphereBracketAndCobracketVanish) {
  Instance s = sphere_model(3);
  GysinData g = canonical_gysin(s, Window::up_to(5));
  auto b = g.basis.window(5);
  GradedMap bracket = string_bracket(s, g);
  GradedMap cobracket = string_cobracket(s, g);
  for (const auto& x : g.basis.window(4)) {
    for (const auto& y : g.basis.window(4)) EXPECT_TRUE(bracket.apply({x, y}).is_zero());
  }
  for (const auto& x : b) EXPECT_TRUE(cobracket.apply({x}).is_zero());
  // Before E is applied the intermediate values are nonzero.
  Element inner = s.mu(g.M.apply({b[1]}).tensor(g.M.apply({b[2]})));
  EXPECT_FALSE(inner.is_zero());
}

TEST(StringOperations, LieBialgebraAndTransportOnSphere) {
  Instance s = sphere_model(3);
  Instance with = with_gysin(s, canonical_gysin(s, Window::up_to(5)), Window::up_to(5));
  auto lie = check_lie_bialgebra(with, Window::up_to(4, 3));
  ASSERT_EQ(lie.size(), 3u);
  for (const auto& r : lie) EXPECT_TRUE(r.passed()) << r.summary();
  auto transported = check_transported_relations(with, Window::up_to(4, 3));
  ASSERT_EQ(transported.size(), 3u);
  for (const auto& r : transported) EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(StringOperations, EmptySpaceIsSkippedNotPassed) {
  Instance c = three_dim_model();
  Instance with = with_gysin(c, canonical_gysin(c, Window::all()), Window::all());
  for (const auto& r : check_lie_bialgebra(with, Window::all())) {
    EXPECT_EQ(r.status, CheckReport::Status::skipped) << r.summary();
  }
}

TEST(StringOperations, RequiresGysinData) {
  EXPECT_THROW(check_lie_bialgebra(sphere_model(3), Window::up_to(2)), std::invalid_argument);
  RelationSpec jacobi = string_jacobi();
  EXPECT_EQ(relation_residual(jacobi, sphere_model(3), Window::up_to(2)).status, CheckReport::Status::skipped);
}

TEST(Transport, WrapsEveryTerm) {
  RelationSpec nine = builtin_relation(RelationId::NineTerm);
  RelationSpec t = transport_to_gysin(nine, 2, 2);
  EXPECT_TRUE(t.inputs_from_gysin_space);
  EXPECT_EQ(t.term_count(), nine.term_count());
  for (const auto& text : t.texts()) {
    EXPECT_NE(text.find("M (x) M"), std::string::npos);
    EXPECT_NE(text.find("E (x) E"), std::string::npos);
  }
}

TEST(Transport, SphereNineTermResidualZero) {
  Instance s = sphere_model(3);
  Instance with = with_gysin(s, canonical_gysin(s, Window::up_to(5)), Window::up_to(5));
  auto r = relation_residual(transport_to_gysin(builtin_relation(RelationId::NineTerm), 2, 2), with,
                             Window::up_to(4));
  EXPECT_TRUE(r.passed()) << r.summary();
  EXPECT_EQ(r.tuples, 16u);
}
