#include <random>

#include "abelroot/derive/integrands.hpp"
#include "abelroot/derive/linear_ode.hpp"
#include "abelroot/derive/trinomial.hpp"
#include "abelroot/error.hpp"
#include "abelroot/exact/resultant.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace abelroot;
using abelroot::testing::bx;
using abelroot::testing::pq;
using abelroot::testing::px;

namespace {

LinearODE make_ode(std::initializer_list<UPoly> b) {
  LinearODE ode;
  ode.b = b;
  ode.order = static_cast<int>(ode.b.size()) - 2;
  return ode;
}

// x^3 + s x^2 + p x
ProblemSpec cubic_with_square_term(long s, long p) { return ProblemSpec(px({0, p, s, 1})); }

}  // namespace

TEST_SUITE("problem") {
  TEST_CASE("validation") {
    CHECK_NOTHROW(ProblemSpec(px({0, 1, 0, 1})));
    CHECK_THROWS_AS(ProblemSpec(px({1, 0, 1})), Error);
    CHECK_THROWS_AS(ProblemSpec(px({0, 1})), Error);
    CHECK_THROWS_AS(ProblemSpec(pq({0, 1, 1})), Error);
    CHECK(trinomial(4, Rat(2)).r() == px({0, 2, 0, 0, 1}));
  }
}

TEST_SUITE("factorize") {
  TEST_CASE("quadratic") {
    const auto f = factorize(ProblemSpec(px({0, 1, 1})));
    CHECK(f.d == pq({1, 4}));
    CHECK(f.u == px({1}));
    CHECK(f.script_u == px({1}));
    CHECK(f.sign_r_prime0 == 1);
  }

  TEST_CASE("cubic") {
    const auto f = factorize(ProblemSpec(px({0, 1, 0, 1})));
    CHECK(f.d == pq({-4, 0, -27}));
    CHECK(f.u == -px({4, 0, 3}));
    CHECK(f.script_d == pq({4, 0, 27}));
    CHECK(f.script_u == px({4, 0, 3}));
    CHECK(f.sign_d == -1);
  }

  TEST_CASE("quartic x^4-2x^3+2x^2-x") {
    const auto f = factorize(ProblemSpec(px({0, -1, 2, -2, 1})));
    CHECK(f.script_d == pow(pq({1, 4}), 2) * pq({3, 16}));
    CHECK(f.script_u == pow(px({1, -2, 2}), 2) * px({3, -4, 4}));
    CHECK(f.d == -f.script_d);
    CHECK(f.sign_r_prime0 == -1);
  }

  TEST_CASE("quintic x^5+5x^3 with R'(0) = 0") {
    const auto f = factorize(ProblemSpec(px({0, 0, 0, 5, 0, 1})));
    CHECK(f.script_d == pq({0, 0, 3125}) * pq({108, 0, 1}));
    CHECK(f.script_u == px({0, 0, 125}) * pow(px({5, 0, 1}), 2) * px({12, 0, -8, 0, 4, 0, 1}));
    CHECK_FALSE(f.simple_roots);
    CHECK(f.sign_r_prime0 == 0);
    CHECK(f.sign_d == 1);
    CHECK(f.degree_ok);
  }

  TEST_CASE("exact division certificate on 200 random R") {
    std::mt19937 rng(2024);
    int done = 0;
    while (done < 200) {
      const int n = 2 + done % 7;
      const UPoly r = testing::random_problem_poly(rng, n, done % 3 != 0);
      if (discriminant(r).is_zero()) continue;
      const ProblemSpec spec(r);
      const auto f = factorize(spec);
      CHECK(compose_q(f.d, r) == f.r_prime * f.r_prime * f.u);
      CHECK(f.u.degree() == (n - 1) * (n - 2));
      CHECK_FALSE(f.u.coeff(0).is_zero());
      CHECK(f.script_d.coeff(0).sign() > 0);
      ++done;
    }
  }
}

TEST_SUITE("integrands") {
  TEST_CASE("quadratic with G = 1") {
    const ProblemSpec spec(px({0, 1, 1}));
    const auto in = build_integrands(spec, factorize(spec), pq({1}), IntegrandKind::Theorem1);
    CHECK(in.lhs.sign == 1);
    CHECK(in.lhs.numerator == px({1}));
    CHECK(in.lhs.rational_den == px({1}));
    CHECK(in.lhs.radicand == px({1}));
    CHECK(in.rhs.radicand == pq({1, 4}));
    CHECK(in.rhs.eval(2.0) == doctest::Approx(1.0 / 3.0));
    CHECK(in.invertible);
  }

  TEST_CASE("quartic with G = -2") {
    const ProblemSpec spec(px({0, -1, 2, -2, 1}));
    const auto in = build_integrands(spec, factorize(spec), pq({-2}), IntegrandKind::Theorem1);
    // 2 / ((2s^2 - 2s + 1) sqrt(4s^2 - 4s + 3))
    CHECK(in.lhs.sign * in.lhs.numerator.coeff(0) == Rat(2));
    CHECK(in.lhs.rational_den == px({1, -2, 2}));
    CHECK(in.lhs.radicand == px({3, -4, 4}));
    const double s = 0.3;
    CHECK(in.lhs.eval(s) == doctest::Approx(2.0 / ((2 * s * s - 2 * s + 1) * std::sqrt(4 * s * s - 4 * s + 3))));
    // -2 / ((4t + 1) sqrt(16t + 3))
    CHECK(in.rhs.rational_den == pq({1, 4}));
    CHECK(in.rhs.radicand == pq({3, 16}));
  }

  TEST_CASE("rational form on the quadratic with H = 1") {
    const ProblemSpec spec(px({0, 1, 1}));
    const auto in = build_integrands(spec, factorize(spec), pq({1}), IntegrandKind::Corollary2);
    CHECK_FALSE(in.lhs.radical);
    CHECK(in.lhs.rational_den == px({1, 2}));
    CHECK(in.rhs.rational_den == pq({1, 4}));
    CHECK(in.lhs.eval(1.0) == doctest::Approx(1.0 / 3.0));
  }

  TEST_CASE("weight vanishing at the origin") {
    const ProblemSpec spec(px({0, 1, 0, 1}));
    const auto f = factorize(spec);
    try {
      (void)build_integrands(spec, f, pq({0, 1}), IntegrandKind::Theorem1);
      FAIL("expected WeightZeroAtOrigin");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::WeightZeroAtOrigin);
    }
    IntegrandOptions opts;
    opts.degenerate_ok = true;
    const auto in = build_integrands(spec, f, pq({0, 1}), IntegrandKind::Theorem1, opts);
    CHECK_FALSE(in.invertible);
  }

  TEST_CASE("quintic with a surd weight uses the interval sign rule") {
    const ProblemSpec spec(px({0, 0, 0, 5, 0, 1}));
    IntegrandOptions opts;
    opts.degenerate_ok = true;
    opts.scale = Surd{Rat(5), Rat(5)};
    const auto in = build_integrands(spec, factorize(spec), pq({0, 1}), IntegrandKind::Theorem1, opts);
    CHECK(in.lhs.sign_rule == SignRule::DerivativeOnInterval);
    CHECK(in.lhs.rational_den == px({0, 5, 0, 1}));
    CHECK(in.lhs.radicand == px({12, 0, -8, 0, 4, 0, 1}) * Rat(125));
    // Reduces to s^2 / sqrt(s^6 + 4s^4 - 8s^2 + 12) for s > 0.
    const double s = 0.7;
    const double expected = s * s / std::sqrt(std::pow(s, 6) + 4 * std::pow(s, 4) - 8 * s * s + 12);
    CHECK(in.lhs.eval(s, 1) == doctest::Approx(expected));
    // And the t-side to 1 / (5 sqrt(t^2 + 108)) for t > 0.
    CHECK(in.rhs.eval(0.9) == doctest::Approx(1.0 / (5.0 * std::sqrt(0.81 + 108.0))));
  }
}

TEST_SUITE("abel") {
  TEST_CASE("linear ODE for n = 2") {
    const auto ode = abel_ode(trinomial(2, Rat(1)));
    CHECK(ode.a[1] == RatFunc(pq({2}), pq({1, 4})));
    CHECK(ode.a[0] == RatFunc(pq({1}), pq({1, 4})));
  }

  TEST_CASE("Riccati ODE for n = 3") {
    const auto ode = abel_ode(trinomial(3, Rat(1)));
    const UPoly den = pq({4, 0, 27});
    CHECK(ode.a[2] == RatFunc(pq({6}), den));
    CHECK(ode.a[1] == RatFunc(pq({0, 9}), den));
    CHECK(ode.a[0] == RatFunc(pq({4}), den));
    CHECK(ode.quotient == BiPoly::from_main(px({0, -9})));
  }

  TEST_CASE("Abel ODE for n = 4") {
    const auto ode = abel_ode(trinomial(4, Rat(1)));
    const UPoly den = pq({27, 0, 0, 256});
    CHECK(ode.a[3] == RatFunc(pq({36}), den));
    CHECK(ode.a[2] == RatFunc(pq({0, 48}), den));
    CHECK(ode.a[1] == RatFunc(pq({0, 0, 64}), den));
    CHECK(ode.a[0] == RatFunc(pq({27}), den));
  }

  TEST_CASE("reconstruction R'U = QP + W on random R") {
    std::mt19937 rng(99);
    for (int i = 0; i < 40; ++i) {
      const int n = 2 + i % 5;
      const ProblemSpec spec(testing::random_problem_poly(rng, n, i % 2 == 0));
      const auto f = factorize(spec);
      const auto ode = abel_ode(spec, f);
      CHECK(ode.quotient * spec.p() + ode.w == BiPoly::from_main(f.r_prime * f.u));
      CHECK(ode.w.degree() <= n - 1);
    }
  }
}

TEST_SUITE("tower") {
  TEST_CASE("second derivative for the cubic") {
    const auto t = derivative_tower(trinomial(3, Rat(1)), 2);
    const UPoly den = pow(pq({4, 0, 27}), 2);
    CHECK(t.rows[1][2] == RatFunc(pq({0, -162}), den));
    CHECK(t.rows[1][1] == RatFunc(pq({12, 0, -162}), den));
    CHECK(t.rows[1][0] == RatFunc(pq({0, -108}), den));
  }

  TEST_CASE("row 1 is the Abel ODE") {
    const auto spec = trinomial(4, Rat(3));
    const auto abel = abel_ode(spec);
    const auto t = derivative_tower(spec, abel, 3);
    CHECK(t.rows[0] == abel.a);
    CHECK(derivative_tower(trinomial(2, Rat(1)), 1).height() == 1);
  }

  TEST_CASE("matches the unreduced C_k recursion") {
    std::mt19937 rng(31);
    for (int i = 0; i < 12; ++i) {
      const int n = 2 + i % 3;
      const ProblemSpec spec(testing::random_problem_poly(rng, n, i % 2 == 0));
      const auto f = factorize(spec);
      const BiPoly c1 = BiPoly::from_main(f.r_prime * f.u);
      const auto t = derivative_tower(spec, n - 1 + 1);
      BiPoly c = c1;
      for (int k = 1; k <= t.height(); ++k) {
        if (k > 1) c = tower_step(c, k - 1, c1, f.d);
        CHECK(divrem_main(c, spec.p()).second == t.numerators[static_cast<std::size_t>(k - 1)]);
      }
    }
  }
}

TEST_SUITE("linear ode") {
  TEST_CASE("n = 3 and n = 4 trinomials") {
    CHECK(linear_ode(trinomial(3, Rat(1))) == make_ode({pq({-3}), pq({0, 27}), pq({4, 0, 27}), pq({})}));
    CHECK(linear_ode(trinomial(4, Rat(1))) ==
          make_ode({pq({-40}), pq({0, 688}), pq({0, 0, 1152}), pq({27, 0, 0, 256}), pq({})}));
  }

  TEST_CASE("quadratic is inhomogeneous") {
    // (1 + 4q) x' - 2x - 1 = 0
    CHECK(linear_ode(trinomial(2, Rat(1))) == make_ode({pq({-2}), pq({1, 4}), pq({-1})}));
  }

  TEST_CASE("cubic with a square term") {
    CHECK(linear_ode(cubic_with_square_term(1, 1)) ==
          make_ode({pq({-3}), pq({7, 27}), pq({3, 14, 27}), pq({-1})}));
    CHECK(linear_ode(cubic_with_square_term(2, 1)) ==
          make_ode({pq({-3}), pq({2, 27}), pq({0, 4, 27}), pq({-2})}));
    CHECK(linear_ode(cubic_with_square_term(0, 1)) == linear_ode(trinomial(3, Rat(1))));
    for (long s : {-2L, 1L, 3L})
      for (long p : {-1L, 1L, 2L}) {
        INFO("s=", s, " p=", p);
        CHECK(linear_ode(cubic_with_square_term(s, p)) == reference_cubic_ode(Rat(s), Rat(p)));
      }
  }

  TEST_CASE("trinomial table n = 3..6") {
    for (int n = 3; n <= 6; ++n)
      for (const Rat& p : {Rat(1), Rat(2), Rat(1, 2), Rat(-1)}) {
        const auto check = verify_trinomial_table(n, p);
        INFO(check.report);
        CHECK(check.match);
        CHECK_FALSE(check.derived.ambiguous_kernel);
      }
  }

  TEST_CASE("n = 3 at p = 2 instantiated by hand") {
    CHECK(linear_ode(trinomial(3, Rat(2))) == make_ode({pq({-3}), pq({0, 27}), pq({32, 0, 27}), pq({})}));
  }

  TEST_CASE("n = 5 and n = 6 reference values") {
    CHECK(reference_trinomial_ode(5, Rat(1)) ==
          make_ode({pq({-1155}), pq({0, 31875}), pq({0, 0, 73125}), pq({0, 0, 0, 31250}),
                    pq({256, 0, 0, 0, 3125}), pq({})}));
    CHECK(reference_trinomial_ode(6, Rat(1)).coeff(5) == pq({3125, 0, 0, 0, 0, 46656}));
    CHECK_THROWS_AS(reference_trinomial_ode(7, Rat(1)), Error);
  }

  TEST_CASE("kernel substitution vanishes on random R") {
    std::mt19937 rng(77);
    for (int i = 0; i < 30; ++i) {
      const int n = 2 + i % 4;
      const ProblemSpec spec(testing::random_problem_poly(rng, n, i % 2 == 0));
      const auto tower = derivative_tower(spec, n - 1);
      const auto ode = linear_ode(spec, tower);
      for (const auto& r : tower_residual(ode, tower)) CHECK(r.is_zero());
      CHECK(ode.coeff(n - 1).lead().sign() > 0);
    }
  }

  TEST_CASE("normalisation is idempotent") {
    LinearODE raw = make_ode({UPoly(Var::Q, {Rat(-3, 2), Rat(-3, 2)}), pq({0, 6, 6}), pq({-9, -18, -9})});
    const LinearODE once = normalize(raw);
    CHECK(normalize(once) == once);
    CHECK(once == make_ode({pq({-1}), pq({0, 4}), pq({-6, -6})}));
  }
}
