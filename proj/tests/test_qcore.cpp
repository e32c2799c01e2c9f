#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mqhahn/qcore.hpp"

using namespace mqhahn;

namespace {

ParamContext sample_ctx(int n = 2) {
  return ParamContext(Rational(2), Rational(8), Rational(4), Rational(2), n,
                      ParamContext::ones(n));
}

Rational draw(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 19) - 9;
  long den = 1 + static_cast<long>(rng() % 7);
  return Rational(num, den);
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-4, -8).str() == "1/2");
  CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
  CHECK(Rational::from_string(" 7 ") == Rational(7));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(5).pow(-2) == Rational(1, 25));
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inv(), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).pow(-1), DivisionByZero);
  CHECK_THROWS_AS(Rational::from_string("x/y"), Error);
}

TEST_CASE("param context validation") {
  CHECK_THROWS_AS(ParamContext(Rational(0), 1, 1, 1, 1, ParamContext::ones(1)),
                  DegenerateContext);
  CHECK_THROWS_AS(ParamContext(Rational(1), 1, 1, 1, 1, ParamContext::ones(1)),
                  DegenerateContext);
  CHECK_THROWS_AS(ParamContext(Rational(-1), 1, 1, 1, 1, ParamContext::ones(1)),
                  DegenerateContext);
  CHECK_THROWS_AS(ParamContext(Rational(2), 0, 1, 1, 1, ParamContext::ones(1)),
                  DegenerateContext);
  CHECK_THROWS_AS(ParamContext(Rational(2), 1, 1, 1, 2, {Rational(1), Rational(0)}),
                  DegenerateContext);
  CHECK_THROWS_AS(ParamContext(Rational(2), 1, 1, 1, 2, ParamContext::ones(1)),
                  DegenerateContext);
  ParamContext ctx = sample_ctx();
  CHECK(ctx.a(-1).is_zero());
  CHECK(ctx.a(2).is_zero());
  CHECK(ctx.a(0).is_one());
}

TEST_CASE("q-power evaluation on the exponent lattice") {
  ParamContext ctx = sample_ctx();
  // alpha - 1 evaluates through the stored value of q^alpha
  CHECK(eval_q_power(ctx, Exponent(Rational(-1), 1)) == Rational(4));
  CHECK(eval_q_power(ctx, Exponent(Rational(0))) == Rational(1));
  // 2 beta + 1
  CHECK(eval_q_power(ctx, Exponent(Rational(1), 0, 2)) == Rational(32));
  CHECK_THROWS_AS(eval_q_power(ctx, Exponent(Rational(1, 2))), NonIntegralExponent);

  // homomorphism: eval(e1 + e2) = eval(e1) * eval(e2)
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Exponent e1(Rational(static_cast<long>(rng() % 9) - 4), static_cast<long>(rng() % 5) - 2,
                static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2);
    Exponent e2(Rational(static_cast<long>(rng() % 9) - 4), static_cast<long>(rng() % 5) - 2,
                static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2);
    CHECK(eval_q_power(ctx, e1 + e2) == eval_q_power(ctx, e1) * eval_q_power(ctx, e2));
  }
}

TEST_CASE("q-bracket values and addition law") {
  ParamContext ctx = sample_ctx();
  CHECK(q_bracket(ctx, Exponent(Rational(3))) == Rational(7));
  CHECK(q_bracket(ctx, Exponent(Rational(0))).is_zero());
  CHECK(q_bracket(ctx, Exponent(Rational(-2))) == Rational(-3, 4));
  CHECK(q_int_bracket(Rational(3, 2), 2) == Rational(5, 2));

  // [x+y] = [x] + q^x [y]
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    Exponent x(Rational(static_cast<long>(rng() % 7) - 3), static_cast<long>(rng() % 3) - 1,
               static_cast<long>(rng() % 3) - 1, 0);
    Exponent y(Rational(static_cast<long>(rng() % 7) - 3), 0, static_cast<long>(rng() % 3) - 1,
               static_cast<long>(rng() % 3) - 1);
    CHECK(q_bracket(ctx, x + y) ==
          q_bracket(ctx, x) + eval_q_power(ctx, x) * q_bracket(ctx, y));
  }
}

TEST_CASE("q-Pochhammer") {
  Rational q(2);
  CHECK(q_pochhammer(q, Rational(7, 3), 0).is_one());
  CHECK(q_pochhammer(q, Rational(1, 4), 2) == Rational(3, 8));
  CHECK(q_pochhammer(q, Rational(1), 3).is_zero());
  CHECK(q_pochhammer_multi(q, {}, 5).is_one());
  CHECK(q_pochhammer_multi(q, {Rational(1, 4), Rational(1, 2)}, 1) == Rational(3, 8));
  CHECK(q_pochhammer_multi(q, {Rational(3), Rational(1), Rational(5)}, 2).is_zero());

  // (a;q)_{l+k} = (a;q)_l (a q^l; q)_k
  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    Rational a = draw(rng);
    long l = static_cast<long>(rng() % 5), k = static_cast<long>(rng() % 5);
    CHECK(q_pochhammer(q, a, l + k) ==
          q_pochhammer(q, a, l) * q_pochhammer(q, a * q.pow(l), k));
  }

  // signed index: (a;q)_{-k} (a q^{-k};q)_k = 1
  for (long k = 1; k <= 4; ++k) {
    Rational a(3, 7);
    CHECK(q_pochhammer_signed(q, a, -k) * q_pochhammer(q, a * q.pow(-k), k) == Rational(1));
  }
  CHECK_THROWS_AS(q_pochhammer_signed(q, Rational(2), -1), DegenerateContext);
}

TEST_CASE("terminating 3phi2") {
  Rational q(2);
  // terminating parameter q^0 = 1: only the k=0 term
  CHECK(phi32_terminating(q, {Rational(1), Rational(5), Rational(7)},
                          {Rational(3), Rational(9)}, Rational(4), 0) == Rational(1));
  // a numerator parameter equal to 1 kills everything past k=0
  CHECK(phi32_terminating(q, {Rational(1, 4), Rational(1), Rational(7)},
                          {Rational(3), Rational(9)}, Rational(4), 0) == Rational(1));

  // two-term hand sum: 1 + (1-q^{-1})(1-b)(1-c) z / ((1-d)(1-e)(1-q))
  // with q=2, b=c=0, d=e=1/4, z=1:  1 + (1/2) / ((3/4)(3/4)(-1)) = 1/9
  {
    Rational expected = Rational(1) + (Rational(1) - q.pow(-1)) /
                                          ((Rational(1) - Rational(1, 4)) *
                                           (Rational(1) - Rational(1, 4)) * (Rational(1) - q));
    CHECK(expected == Rational(1, 9));
    CHECK(phi32_terminating(q, {q.pow(-1), Rational(0), Rational(0)},
                            {Rational(1, 4), Rational(1, 4)}, Rational(1), 0) == expected);
  }

  // denominator pole before termination
  CHECK_THROWS_AS(phi32_terminating(q, {q.pow(-2), Rational(3), Rational(5)},
                                    {q.pow(-1), Rational(7)}, Rational(1), 0),
                  DenominatorPoleBeforeTermination);

  // q-Chu-Vandermonde: 2phi1(a, q^{-n}; c; q, q) = (c/a;q)_n a^n / (c;q)_n
  std::mt19937_64 rng(14);
  for (int i = 0; i < 40; ++i) {
    Rational a = draw(rng);
    Rational c = draw(rng);
    long n = static_cast<long>(rng() % 5);
    if (a.is_zero() || c.is_zero() || q_pochhammer(q, c, n).is_zero()) continue;
    bool pole = false;
    for (long k = 0; k < n; ++k)
      if ((c * q.pow(k)).is_one()) pole = true;
    if (pole) continue;
    Rational lhs = phi32_terminating(q, {a, q.pow(-n), Rational(0)}, {c, Rational(0)}, q, 1);
    CHECK(lhs == q_pochhammer(q, c / a, n) * a.pow(n) / q_pochhammer(q, c, n));
  }
}

TEST_CASE("pochhammer identity suite") {
  // hand instance: (3;2)_2 = (1-3)(1-6) = 10 and the base-inversion rewrite
  {
    Rational q(2), a(3);
    CHECK(q_pochhammer(q, a, 2) == Rational(10));
    CHECK((-a).pow(2) * q.pow(1) * q_pochhammer(q, q.pow(-1) / a, 2) == Rational(10));
  }
  for (const Rational& q : {Rational(2), Rational(3, 2), Rational(-2)}) {
    Report r = pochhammer_identity_suite(
        q, {Rational(3), Rational(1, 4), Rational(-2, 3), Rational(7, 5)}, 6);
    for (const auto& c : r.checks) {
      INFO(c.name, " ", c.detail);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("sears and 3phi2 transform suite") {
  std::vector<std::array<Rational, 4>> draws = {
      {Rational(3), Rational(1, 5), Rational(2, 7), Rational(5, 3)},
      {Rational(-2), Rational(3, 4), Rational(1, 7), Rational(-3, 5)}};
  for (const Rational& q : {Rational(2), Rational(1, 2), Rational(-3)}) {
    Report r = sears_and_32_transform_suite(q, draws, 4, Rational(7, 10), Rational(1, 70), 3);
    for (const auto& c : r.checks) {
      INFO(c.name, " ", c.detail);
      CHECK(c.passed);
    }
  }
}
