#pragma once

#include <array>
#include <string>
#include <vector>

#include "mqhahn/rational.hpp"
#include "mqhahn/report.hpp"

namespace mqhahn {

// Exponent on the lattice c0 + c_alpha*alpha + c_beta*beta + c_mu*mu.
// The constant part may be built up as a rational (triangular numbers
// and the like) but must be an integer by evaluation time.
struct Exponent {
  Rational c0;
  long c_alpha = 0;
  long c_beta = 0;
  long c_mu = 0;

  Exponent() = default;
  Exponent(Rational c, long ca = 0, long cb = 0, long cm = 0)
      : c0(std::move(c)), c_alpha(ca), c_beta(cb), c_mu(cm) {}

  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    return {a.c0 + b.c0, a.c_alpha + b.c_alpha, a.c_beta + b.c_beta, a.c_mu + b.c_mu};
  }
  friend Exponent operator-(const Exponent& a, const Exponent& b) {
    return {a.c0 - b.c0, a.c_alpha - b.c_alpha, a.c_beta - b.c_beta, a.c_mu - b.c_mu};
  }
  friend Exponent operator*(long k, const Exponent& e) {
    return {Rational(k) * e.c0, k * e.c_alpha, k * e.c_beta, k * e.c_mu};
  }
  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.c0 == b.c0 && a.c_alpha == b.c_alpha && a.c_beta == b.c_beta && a.c_mu == b.c_mu;
  }
};

// Representation parameters: q, the stored values of q^alpha, q^beta, q^mu,
// the dimension parameter N, and the normalization constants a_0..a_{N-1}
// (a_{-1} and a_N are fixed to zero).
struct ParamContext {
  Rational q;
  Rational t_alpha;  // value of q^alpha
  Rational t_beta;   // value of q^beta
  Rational t_mu;     // value of q^mu
  int N = 0;
  std::vector<Rational> a_seq;

  ParamContext(Rational q_, Rational ta, Rational tb, Rational tm, int n,
               std::vector<Rational> a);

  static std::vector<Rational> ones(int n) { return std::vector<Rational>(n, Rational(1)); }

  // a_n with the truncation convention a_{-1} = a_N = 0.
  const Rational& a(int i) const;

  // Product a_lo * a_{lo+1} * ... * a_hi (empty product = 1). Requires the
  // range to stay inside [0, N-1].
  Rational a_prod(int lo, int hi) const;

  // q^{c0} * t_alpha^{ca} * t_beta^{cb} * t_mu^{cm}.
  Rational qpow(long c0, long ca = 0, long cb = 0, long cm = 0) const;

  // [c0 + ca*alpha + cb*beta + cm*mu]_q.
  Rational brk(long c0, long ca = 0, long cb = 0, long cm = 0) const;

  ParamContext with_a_seq(std::vector<Rational> a) const {
    return ParamContext(q, t_alpha, t_beta, t_mu, N, std::move(a));
  }

  std::string str() const;
};

Rational eval_q_power(const ParamContext& ctx, const Exponent& e);
Rational q_bracket(const ParamContext& ctx, const Exponent& e);

// [n]_q for integer n.
Rational q_int_bracket(const Rational& q, long n);

// [x]_q given the value of q^x.
Rational bracket_of_power(const Rational& q, const Rational& q_to_x);

// (a;q)_k for k >= 0.
Rational q_pochhammer(const Rational& q, const Rational& a, long k);

// (a;q)_k extended to negative k by (a;q)_{-k} = 1 / ((a q^{-k}; q)_k).
Rational q_pochhammer_signed(const Rational& q, const Rational& a, long k);

// (a1, a2, ..., ar; q)_k = product of (ai;q)_k.
Rational q_pochhammer_multi(const Rational& q, const std::vector<Rational>& bases, long k);

// Terminating 3phi2(a1,a2,a3; b1,b2; q, z). The parameter at
// `terminator_index` must equal q^{-n} for some integer n >= 0; the sum runs
// k = 0..n (or stops earlier if another numerator factor vanishes). Throws
// DenominatorPoleBeforeTermination if a denominator factor vanishes while the
// series is still alive. Pass 0 for unused parameters ((0;q)_k = 1), which
// turns the sum into a 2phi1 or lower.
Rational phi32_terminating(const Rational& q, const std::array<Rational, 3>& num,
                           const std::array<Rational, 2>& den, const Rational& z,
                           int terminator_index);

// Sweeps the q-Pochhammer rewrite identities used throughout the derivations
// (inversion of the base, q^{-l} evaluation, q -> 1/q flip, shifted and
// split indices) over k, l <= max_k and the supplied bases.
Report pochhammer_identity_suite(const Rational& q, const std::vector<Rational>& bases,
                                 long max_k);

// Sears' transformation and the 3phi2(...;q,q) transformation on terminating
// series, swept over n <= max_n with the supplied parameter draws, plus the
// q-Chu-Vandermonde summation and the specific instance the S~ derivation
// rests on (parameters built from hat_a, hat_b).
Report sears_and_32_transform_suite(const Rational& q,
                                    const std::vector<std::array<Rational, 4>>& draws,
                                    long max_n, const Rational& hat_a, const Rational& hat_b,
                                    int grid_n);

}  // namespace mqhahn
