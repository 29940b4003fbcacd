#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "perfcong/bruck_reilly.hpp"

using namespace perfcong;

static BrContext z4_doubling() {
  auto g = GroupContext::finite_cayley(
      4, {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2}, 0);
  auto alpha = make_endo_finite(g, {0, 2, 0, 2});
  return make_br_context(g, alpha);
}

static std::vector<BrElement> window_elements(const BrContext& s,
                                              long long w) {
  std::vector<BrElement> out;
  for (long long m = 0; m <= w; ++m)
    for (long long n = 0; n <= w; ++n)
      for (int i = 0; i < s.group.order(); ++i)
        out.push_back({m, s.group.element(i), n});
  return out;
}

TEST_CASE("multiplication with the twisting endomorphism") {
  auto s = z4_doubling();
  BrElement x{2, s.group.element(1), 3};
  BrElement y{1, s.group.element(1), 4};
  CHECK(br_mul(s, x, y) == BrElement{2, s.group.element(1), 6});
}

TEST_CASE("identity element") {
  auto s = z4_doubling();
  auto e = br_idempotent(s, 0);
  CHECK(e == BrElement{0, s.group.identity(), 0});
  for (const auto& x : window_elements(s, 2)) {
    CHECK(br_mul(s, e, x) == x);
    CHECK(br_mul(s, x, e) == x);
  }
}

TEST_CASE("inverses") {
  auto s = z4_doubling();
  BrElement x{2, s.group.element(3), 5};
  CHECK(br_inv(s, x) == BrElement{5, s.group.element(1), 2});
  CHECK(br_inv(s, br_inv(s, x)) == x);
  // idempotents are self-inverse
  CHECK(br_inv(s, br_idempotent(s, 4)) == br_idempotent(s, 4));
  // the inverse laws x x' x = x and x' x x' = x'
  for (const auto& a : window_elements(s, 2)) {
    auto ai = br_inv(s, a);
    CHECK(br_mul(s, br_mul(s, a, ai), a) == a);
    CHECK(br_mul(s, br_mul(s, ai, a), ai) == ai);
  }
}

TEST_CASE("idempotent chain") {
  auto s = z4_doubling();
  auto e3 = br_idempotent(s, 3);
  CHECK(br_mul(s, e3, e3) == e3);
  CHECK(br_mul(s, e3, br_idempotent(s, 1)) == e3);
  for (long long i = 0; i <= 3; ++i)
    for (long long j = 0; j <= 3; ++j)
      CHECK(br_mul(s, br_idempotent(s, i), br_idempotent(s, j)) ==
            br_idempotent(s, std::max(i, j)));
}

TEST_CASE("associativity on a window") {
  auto s = z4_doubling();
  auto win = window_elements(s, 2);
  for (const auto& x : win)
    for (const auto& y : win)
      for (const auto& z : win)
        REQUIRE(br_mul(s, br_mul(s, x, y), z) ==
                br_mul(s, x, br_mul(s, y, z)));
}

TEST_CASE("group-forgetful map is a homomorphism") {
  auto s = z4_doubling();
  BrElement x{2, s.group.element(1), 3};
  BrElement y{1, s.group.element(1), 4};
  CHECK(forgetful(x) == BicyclicElement{2, 3});
  CHECK(forgetful(br_idempotent(s, 0)) == BicyclicElement{0, 0});
  CHECK(b_mul(forgetful(x), forgetful(y)) == BicyclicElement{2, 6});
  auto win = window_elements(s, 3);
  for (const auto& a : win)
    for (const auto& b : win)
      REQUIRE(forgetful(br_mul(s, a, b)) ==
              b_mul(forgetful(a), forgetful(b)));
}

TEST_CASE("abelian backend multiplication") {
  auto g = GroupContext::free_abelian(1);
  auto s = make_br_context(g, make_endo_abelian(g, {{Int(2)}}));
  BrElement x{0, g.element(Col{1}), 1};
  BrElement y{0, g.element(Col{1}), 0};
  // r = min(1, 0) = 0: alpha acts on y's coordinate
  CHECK(br_mul(s, x, y) == BrElement{0, g.element(Col{3}), 1});
  CHECK(br_inv(s, x) == BrElement{1, g.element(Col{-1}), 0});
}

TEST_CASE("element ordering and formatting") {
  auto s = z4_doubling();
  BrElement a{0, s.group.element(3), 1};
  BrElement b{1, s.group.element(0), 0};
  CHECK(br_less(s, a, b));
  CHECK(!br_less(s, b, a));
  CHECK(br_less(s, BrElement{1, s.group.element(0), 0},
                BrElement{1, s.group.element(2), 0}));
  CHECK(format_br(s, BrElement{2, s.group.element(1), 6}) == "(2,1,6)");
}
