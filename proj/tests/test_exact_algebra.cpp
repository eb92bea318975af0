#include <random>

#include "abelroot/error.hpp"
#include "abelroot/exact/bipoly.hpp"
#include "abelroot/exact/ratfunc.hpp"
#include "abelroot/exact/real_roots.hpp"
#include "abelroot/exact/resultant.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace abelroot;
using abelroot::testing::bx;
using abelroot::testing::px;
using abelroot::testing::pq;

namespace {

bool is_canonical(const UPoly& p) { return p.coeffs().empty() || !p.coeffs().back().is_zero(); }

// Resultant through the Euclidean remainder sequence over Q; independent
// of the Sylvester/Bareiss route.
Rat euclid_resultant(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) return Rat(0);
  if (b.degree() == 0) return pow(b.lead(), static_cast<unsigned>(std::max(a.degree(), 0)));
  if (a.degree() < b.degree()) {
    Rat r = euclid_resultant(b, a);
    return (a.degree() * b.degree()) % 2 ? -r : r;
  }
  const UPoly r = divrem(a, b).second;
  if (r.is_zero()) return Rat(0);
  Rat sub = euclid_resultant(b, r);
  Rat out = pow(b.lead(), static_cast<unsigned>(a.degree() - r.degree())) * sub;
  return (a.degree() * b.degree()) % 2 ? -out : out;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("canonical form") {
    CHECK(Rat(6, -4).str() == "-3/2");
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(0, 7).denominator() == 1);
    CHECK(Rat::parse("27/4") == Rat(27, 4));
    CHECK(Rat::parse("-12/8").str() == "-3/2");
    CHECK(Rat::parse("+5") == Rat(5));
    CHECK(Rat::from_double(0.5) == Rat(1, 2));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(Rat(1, 0), Error);
    CHECK_THROWS_AS(Rat::parse("1/0"), Error);
    CHECK_THROWS_AS(Rat::parse("1.5"), Error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
  }
}

TEST_SUITE("upoly") {
  TEST_CASE("arithmetic examples") {
    CHECK(px({1, 1}) * px({-1, 1}) == px({-1, 0, 1}));
    CHECK(px({0, 1, 1}) + px({0, 1}) == px({0, 2, 1}));
    CHECK((px({1, 0, 3}) * px({})).is_zero());
    CHECK((px({0, 1}) - px({0, 1})).coeffs().empty());
  }

  TEST_CASE("variable mismatch is rejected") {
    try {
      (void)(px({1}) + pq({1}));
      FAIL("expected a mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::VariableMismatch);
    }
  }

  TEST_CASE("divrem examples") {
    auto [q1, r1] = divrem(px({0, 0, 0, 1}), px({-1, 1}));
    CHECK(q1 == px({1, 1, 1}));
    CHECK(r1 == px({1}));
    auto [q2, r2] = divrem(px({-1, 0, 1}), px({-1, 1}));
    CHECK(q2 == px({1, 1}));
    CHECK(r2.is_zero());
    CHECK_THROWS_AS(divrem(px({1, 1}), px({})), Error);
  }

  TEST_CASE("gcd examples") {
    CHECK(gcd(px({-1, 0, 1}), px({-1, 1})) == px({-1, 1}));
    CHECK(gcd(px({1, 0, 1}), px({2, 1})) == px({1}));
    CHECK(gcd(px({2, 4}), px({})) == UPoly(Var::X, {Rat(1, 2), Rat(1)}));
    CHECK_THROWS_AS(gcd(px({}), px({})), Error);
  }

  TEST_CASE("derivative and evaluation") {
    CHECK(derivative(px({0, 1, 0, 1})) == px({1, 0, 3}));
    CHECK(pq({1, 4}).eval(Rat(0)) == Rat(1));
    CHECK(derivative(px({7})).is_zero());
    CHECK(px({1, 2, 3}).eval(2.0) == doctest::Approx(17.0));
  }

  TEST_CASE("compose_q examples") {
    CHECK(compose_q(pq({0, 0, 1}), px({1, 1})) == px({1, 2, 1}));
    // p^2 + 4q at p = 1, r = x^2 + x.
    CHECK(compose_q(pq({1, 4}), px({0, 1, 1})) == pow(px({1, 2}), 2));
    // -(4 + 27 q^2), r = x^3 + x.
    CHECK(compose_q(pq({-4, 0, -27}), px({0, 1, 0, 1})) == -(px({4, 0, 3}) * pow(px({1, 0, 3}), 2)));
    CHECK_THROWS_AS(compose_q(px({1}), px({1})), Error);
  }

  TEST_CASE("square split") {
    // 125 x^2 (x^2+5)^2 (x^6+4x^4-8x^2+12)
    const UPoly sextic = px({12, 0, -8, 0, 4, 0, 1});
    const UPoly u = px({0, 0, 125}) * pow(px({5, 0, 1}), 2) * sextic;
    const auto split = square_split(u);
    CHECK(split.square == px({0, 5, 0, 1}));
    CHECK(split.rest == sextic * Rat(125));
    CHECK(split.square * split.square * split.rest == u);
  }

  TEST_CASE("integer content") {
    const UPoly p(Var::Q, {Rat(-1, 2), Rat(0), Rat(-3, 4)});
    const Rat c = integer_content(p);
    CHECK(c == Rat(-1, 4));
    CHECK(p * (Rat(1) / c) == pq({2, 0, 3}));
  }

  TEST_CASE("ring laws on random triples") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
      const UPoly a = testing::random_poly(rng, Var::X, 6);
      const UPoly b = testing::random_poly(rng, Var::X, 6);
      const UPoly c = testing::random_poly(rng, Var::X, 6);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(is_canonical(a * b - b * a));
    }
  }

  TEST_CASE("divrem identity on 500 random pairs") {
    std::mt19937 rng(11);
    int checked = 0;
    while (checked < 500) {
      const UPoly a = testing::random_poly(rng, Var::X, 8);
      const UPoly b = testing::random_poly(rng, Var::X, 5);
      if (b.is_zero()) continue;
      auto [quot, rem] = divrem(a, b);
      CHECK(quot * b + rem == a);
      CHECK(rem.degree() < b.degree());
      CHECK(is_canonical(quot));
      CHECK(is_canonical(rem));
      ++checked;
    }
  }

  TEST_CASE("gcd divides both inputs") {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
      const UPoly common = testing::random_poly(rng, Var::X, 2);
      const UPoly a = testing::random_poly(rng, Var::X, 4) * common;
      const UPoly b = testing::random_poly(rng, Var::X, 4) * common;
      if (a.is_zero() && b.is_zero()) continue;
      const UPoly g = gcd(a, b);
      CHECK(g.lead() == Rat(1));
      CHECK(divrem(a, g).second.is_zero());
      CHECK(divrem(b, g).second.is_zero());
      if (!common.is_zero() && !a.is_zero() && !b.is_zero()) CHECK(divrem(g, monic(common)).second.is_zero());
    }
  }
}

TEST_SUITE("bipoly") {
  TEST_CASE("divrem in x for the cubic trinomial") {
    // R'U for x^3 + x - q is -(9x^4 + 15x^2 + 4).
    const BiPoly c1 = BiPoly::from_main(px({-4, 0, -15, 0, -9}));
    const BiPoly p = BiPoly::shifted(px({0, 1, 0, 1}));
    auto [quot, rem] = divrem_main(c1, p);
    CHECK(quot == BiPoly::from_main(px({0, -9})));
    CHECK(rem == bx({{-4}, {0, -9}, {-6}}));
    CHECK(quot * p + rem == c1);
  }

  TEST_CASE("divrem in x for the quartic trinomial") {
    // R'U for x^4 + x - q is -(64x^9 + 176x^6 + 148x^3 + 27).
    const BiPoly c1 = BiPoly::from_main(px({-27, 0, 0, -148, 0, 0, -176, 0, 0, -64}));
    const BiPoly p = BiPoly::shifted(px({0, 1, 0, 0, 1}));
    auto [quot, rem] = divrem_main(c1, p);
    CHECK(rem == -bx({{27}, {0, 0, 64}, {0, 48}, {36}}));
    CHECK(quot == -bx({{0}, {0, 64}, {112}, {}, {}, {64}}));
  }

  TEST_CASE("trivial division and non-monic divisor") {
    const BiPoly x2 = bx({{}, {}, {1}});
    const BiPoly x1 = bx({{}, {1}});
    auto [quot, rem] = divrem_main(x2, x1);
    CHECK(quot == x1);
    CHECK(rem.is_zero());
    try {
      (void)divrem_main(x2, bx({{1}, {0, 1}}));
      FAIL("expected NonMonicDivisor");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonMonicDivisor);
    }
  }

  TEST_CASE("partial derivatives") {
    const BiPoly a = bx({{1, 2}, {0, 0, 3}});  // (1 + 2q) + 3q^2 x
    CHECK(derivative_main(a) == bx({{0, 0, 3}}));
    CHECK(derivative_coeff(a) == bx({{2}, {0, 6}}));
    CHECK(a.at(Rat(1)) == px({3, 3}));
  }
}

TEST_SUITE("ratfunc") {
  TEST_CASE("canonicalisation") {
    const RatFunc f(pq({-1, 0, 1}), pq({-2, 2}));  // (q^2-1)/(2q-2) = (q+1)/2
    CHECK(f.den() == pq({1}));
    CHECK(f.num() == UPoly(Var::Q, {Rat(1, 2), Rat(1, 2)}));
    const RatFunc z(pq({}), pq({3, 1}));
    CHECK(z.den() == pq({1}));
    CHECK_THROWS_AS(RatFunc(pq({1}), pq({})), Error);
  }

  TEST_CASE("field operations") {
    const RatFunc a(pq({1}), pq({1, 1}));
    const RatFunc b(pq({1}), pq({-1, 1}));
    const RatFunc s = a + b;  // 2q / (q^2 - 1)
    CHECK(s.num() == pq({0, 2}));
    CHECK(s.den() == pq({-1, 0, 1}));
    CHECK((s - b) == a);
    CHECK((a * b) / b == a);
  }
}

TEST_SUITE("resultant") {
  TEST_CASE("quadratic against its derivative") {
    const BiPoly p = BiPoly::shifted(px({0, 1, 1}));
    CHECK(resultant(p, derivative_main(p)) == pq({-1, -4}));
  }

  TEST_CASE("linear factors") {
    CHECK(resultant(px({-3, 1}), px({-7, 1})) == Rat(-4));
    // lc(a)^deg(b) * b(1/2) = 2 * 1/2.
    CHECK(resultant(px({-1, 2}), px({0, 1})) == Rat(1));
  }

  TEST_CASE("bi-cubic resolvent certificate") {
    // S(x, w) = (2xw+1)^2 + 1 - 2w^3 in w over Q[x]; T = -w^6 + 4 q0 w^4 + 1.
    const BiPoly s(Var::X, {px({2}), px({0, 4}), px({0, 0, 4}), px({-2})});
    for (long q0 : {0L, 1L, -2L, 5L}) {
      const BiPoly t(Var::X, {px({1}), px({}), px({}), px({}), px({4 * q0}), px({}), px({-1})});
      const UPoly expected = pow(px({-q0, 1, 0, 0, 1}), 3) * Rat(-4096);
      CHECK(resultant(s, t) == expected);
    }
    // A fractional q keeps the exact identity.
    const Rat q0(1, 3);
    const BiPoly t(Var::X, {px({1}), px({}), px({}), px({}), UPoly::constant(Var::X, q0 * Rat(4)), px({}), px({-1})});
    const UPoly base = UPoly(Var::X, {-q0, Rat(1), Rat(0), Rat(0), Rat(1)});
    CHECK(resultant(s, t) == pow(base, 3) * Rat(-4096));
  }

  TEST_CASE("zero input") {
    CHECK_THROWS_AS(resultant(px({}), px({1, 1})), Error);
  }

  TEST_CASE("agrees with the Euclidean remainder-sequence resultant") {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
      const UPoly a = testing::random_poly(rng, Var::X, 6);
      const UPoly b = testing::random_poly(rng, Var::X, 6);
      if (a.is_zero() || b.is_zero()) continue;
      CHECK(resultant(a, b) == euclid_resultant(a, b));
    }
  }

  TEST_CASE("multiplicativity Res(ab, c) = Res(a, c) Res(b, c)") {
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
      const UPoly a = testing::random_poly(rng, Var::X, 4);
      const UPoly b = testing::random_poly(rng, Var::X, 4);
      const UPoly c = testing::random_poly(rng, Var::X, 4);
      if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
      CHECK(resultant(a * b, c) == resultant(a, c) * resultant(b, c));
    }
  }
}

TEST_SUITE("discriminant") {
  TEST_CASE("trinomials at p = 1") {
    CHECK(discriminant(BiPoly::shifted(px({0, 1, 1}))) == pq({1, 4}));
    CHECK(discriminant(BiPoly::shifted(px({0, 1, 0, 1}))) == pq({-4, 0, -27}));
    CHECK(discriminant(BiPoly::shifted(px({0, 1, 0, 0, 1}))) == pq({-27, 0, 0, -256}));
  }

  TEST_CASE("quartic x^4-2x^3+2x^2-x") {
    // Standard normalisation gives the negative of the sign-normalised form.
    const UPoly d = discriminant(BiPoly::shifted(px({0, -1, 2, -2, 1})));
    CHECK(d == -(pow(pq({1, 4}), 2) * pq({3, 16})));
  }

  TEST_CASE("univariate discriminant") {
    CHECK(discriminant(px({-1, 0, 1})) == Rat(4));
    CHECK(discriminant(px({1, 2, 1})) == Rat(0));
  }

  TEST_CASE("degenerate leading coefficient") {
    try {
      (void)discriminant(bx({{0}, {1}, {0, 1}}));
      FAIL("expected DegenerateLeading");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegenerateLeading);
    }
  }

  TEST_CASE("degree n-1 in q for random R") {
    std::mt19937 rng(17);
    for (int i = 0; i < 60; ++i) {
      const int n = 2 + i % 6;
      const UPoly r = testing::random_problem_poly(rng, n, i % 2 == 0);
      CHECK(discriminant(BiPoly::shifted(r)).degree() == n - 1);
    }
  }
}

TEST_SUITE("real roots") {
  TEST_CASE("isolation of 4p^3+27q^2 at p=-1") {
    const UPoly d = pq({-4, 0, 27});
    const auto roots = isolate_real_roots(d, Rat(0), Rat(10), Rat(1, 1000000000));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].midpoint() == doctest::Approx(std::sqrt(4.0 / 27.0)).epsilon(1e-9));
  }

  TEST_CASE("multiple roots counted once") {
    const UPoly p = pow(pq({-1, 1}), 2) * pq({2, 1});
    const auto chain = sturm_chain(p);
    CHECK(count_real_roots(chain, Rat(-5), Rat(5)) == 2);
    CHECK(count_real_roots(chain, Rat(1), Rat(5)) == 0);
    CHECK(count_real_roots(chain, Rat(0), Rat(1)) == 1);
  }

  TEST_CASE("Cauchy bound") {
    const UPoly p = pq({-6, 11, -6, 1});
    CHECK(root_bound(p) == Rat(12));
    CHECK(isolate_real_roots(p, -root_bound(p), root_bound(p), Rat(1, 1000)).size() == 3);
  }
}
