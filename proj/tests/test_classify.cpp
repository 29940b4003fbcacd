#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perfcong/classify.hpp"
#include "perfcong/errors.hpp"

using namespace perfcong;

static BrContext z4_doubling() {
  auto g = GroupContext::finite_cayley(
      4, {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2}, 0);
  return make_br_context(g, make_endo_finite(g, {0, 2, 0, 2}));
}

static BrContext trivial_br() {
  auto g = GroupContext::finite_cayley(1, {0}, 0);
  return make_br_context(g, make_endo_finite(g, {0}));
}

static BrContext int_doubling() {
  auto g = GroupContext::free_abelian(1);
  return make_br_context(g, make_endo_abelian(g, {{Int(2)}}));
}

TEST_CASE("coset coverage on the integers") {
  auto s = int_doubling();
  auto r = coset_coverage(s, trivial_subgroup(s.group));
  CHECK(!r.holds);
  REQUIRE(r.gap.has_value());
  CHECK(r.gap->n == 1);
  CHECK(r.gap->x == s.group.element(Col{1}));

  auto three = subgroup_from_basis(s.group, {Col{3}});
  CHECK(coset_coverage(s, three).holds);
  CHECK(!coset_coverage(s, three).gap.has_value());
}

TEST_CASE("coset coverage on finite groups") {
  auto s = z4_doubling();
  CHECK(coset_coverage(s, full_subgroup(s.group)).holds);
  auto gap = coset_coverage(s, trivial_subgroup(s.group));
  CHECK(!gap.holds);
  REQUIRE(gap.gap.has_value());
  CHECK(gap.gap->x == s.group.element(1));
}

TEST_CASE("idempotent-separating congruences are perfect") {
  auto s = z4_doubling();
  auto v = classify(s, validate_is(s, subgroup_from_elements(s.group, {0, 2})));
  CHECK(v.perfect());
  CHECK(v.reason == VerdictReason::IdempotentSeparating);
  CHECK(!v.evidence.has_value());
}

TEST_CASE("the minimum group congruence never is") {
  for (auto s : {z4_doubling(), trivial_br()}) {
    auto v = classify(s, sigma_spec(s));
    CHECK(!v.perfect());
    CHECK(v.reason == VerdictReason::KZero);
  }
  auto z = int_doubling();
  CHECK(classify(z, sigma_spec(z)).reason == VerdictReason::KZero);
}

TEST_CASE("positive branch for k >= 1") {
  auto s = int_doubling();
  auto spec = validate_gc(s, subgroup_from_basis(s.group, {Col{3}}),
                          s.group.identity(), 2);
  auto v = classify(s, spec);
  CHECK(v.perfect());
  CHECK(v.reason == VerdictReason::CosetCover);
}

TEST_CASE("the classical chain over the trivial group") {
  auto s = trivial_br();
  auto e = s.group.identity();
  auto triv = trivial_subgroup(s.group);
  CHECK(!classify(s, validate_gc(s, triv, e, 0)).perfect());
  for (long long k = 1; k <= 3; ++k) {
    auto v = classify(s, validate_gc(s, triv, e, k));
    CHECK(v.perfect());
    CHECK(v.reason == VerdictReason::CosetCover);
  }
}

TEST_CASE("reason tags round-trip") {
  for (auto r : {VerdictReason::IdempotentSeparating, VerdictReason::KZero,
                 VerdictReason::CosetCover, VerdictReason::CosetGap})
    CHECK(reason_from_tag(reason_tag(r)) == r);
  CHECK(reason_tag(VerdictReason::KZero) == "k-zero");
  CHECK_THROWS_AS(reason_from_tag("nonsense"), Error);
}

TEST_CASE("witnesses over the trivial group") {
  auto s = trivial_br();
  auto e = s.group.identity();
  auto zeta2 = validate_gc(s, trivial_subgroup(s.group), e, 2);
  auto w = class_witnesses(s, zeta2, {3, e, 0});
  CHECK(w.left == BrElement{0, e, 1});
  CHECK(w.left.m == 0);
  auto w2 = class_witnesses(s, zeta2, {0, e, 3});
  CHECK(w2.right == BrElement{1, e, 0});
  CHECK(w2.right.n == 0);
}

TEST_CASE("witnesses are fixed points at the grid edge") {
  auto s = trivial_br();
  auto e = s.group.identity();
  auto zeta1 = validate_gc(s, trivial_subgroup(s.group), e, 1);
  auto w = class_witnesses(s, zeta1, {0, e, 2});
  CHECK(w.left == BrElement{0, e, 2});
}

TEST_CASE("witnesses stay in the class") {
  auto s = z4_doubling();
  auto spec = validate_gc(s, full_subgroup(s.group), s.group.identity(), 2);
  for (long long m = 0; m <= 3; ++m)
    for (long long n = 0; n <= 3; ++n)
      for (int i = 0; i < 4; ++i) {
        BrElement x{m, s.group.element(i), n};
        auto w = class_witnesses(s, spec, x);
        CHECK(w.left.m == 0);
        CHECK(w.right.n == 0);
        CHECK(contains(s, spec, x, w.left));
        CHECK(contains(s, spec, x, w.right));
      }
}

TEST_CASE("witnesses on the abelian backend") {
  auto s = int_doubling();
  auto g = s.group;
  auto spec = validate_gc(s, subgroup_from_basis(g, {Col{3}}),
                          g.identity(), 2);
  for (long long m = 0; m <= 2; ++m)
    for (long long n = 0; n <= 2; ++n)
      for (long long c = -2; c <= 2; ++c) {
        BrElement x{m, g.element(Col{c}), n};
        auto w = class_witnesses(s, spec, x);
        CHECK(w.left.m == 0);
        CHECK(w.right.n == 0);
        CHECK(contains(s, spec, x, w.left));
        CHECK(contains(s, spec, x, w.right));
      }
}

TEST_CASE("witnesses require a perfect group congruence") {
  auto s = trivial_br();
  auto e = s.group.identity();
  auto zeta0 = validate_gc(s, trivial_subgroup(s.group), e, 0);
  CHECK_THROWS_AS(class_witnesses(s, zeta0, {1, e, 0}), Error);
}
