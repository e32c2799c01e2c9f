#pragma once

#include "mqhahn/bases.hpp"

namespace mqhahn {

// q-Hahn polynomial parameters: hat(a) = q^{mu-beta-1}, hat(b) = q^{-mu-beta-1}.
struct HatParams {
  Rational q;
  Rational a_hat;
  Rational b_hat;
  int N = 0;

  static HatParams from_context(const ParamContext& ctx) {
    return {ctx.q, ctx.qpow(-1, 0, -1, 1), ctx.qpow(-1, 0, -1, -1), ctx.N};
  }
};

// Q_m(q^{-x}; hat(a), hat(b), N; q), a terminating 3phi2 with argument q.
Rational qhahn_poly(const HatParams& hp, int m, int x);

// R_m(mu(x); hat(a), hat(b), N; q) with mu(x) = q^{-x} + hat(a)hat(b)q^{x+1}.
Rational dual_qhahn_poly(const HatParams& hp, int m, int x);

// Rational-function parameters: stored values of q^a and q^b with
// a = alpha - beta and b = N - 2beta - 1.
struct RationalParams {
  Rational q;
  Rational qa;  // value of q^a
  Rational qb;  // value of q^b
  int N = 0;

  static RationalParams from_context(const ParamContext& ctx) {
    return {ctx.q, ctx.qpow(0, 1, -1), ctx.qpow(ctx.N - 1, 0, -2), ctx.N};
  }

  // The V-side parameters: q -> 1/q, a -> b-a+2, b -> b.
  RationalParams inverted() const {
    return {q.inv(), qa / (qb * q * q), qb.inv(), N};
  }
  // a -> a+1 (contiguity shift).
  RationalParams shifted_a() const { return {q, qa * q, qb, N}; }

  Rational qpow_ab(long c0, long ca = 0, long cb = 0) const {
    return q.pow(c0) * qa.pow(ca) * qb.pow(cb);
  }
  // [c0 + ca*a + cb*b]_q
  Rational brk(long c0, long ca = 0, long cb = 0) const {
    return (Rational(1) - qpow_ab(c0, ca, cb)) / (Rational(1) - q);
  }
};

// U_m(x; a,b,N;q). Defined for m = 0..N+1: at m = N+1 the prefactor
// (q^{-N};q)_m vanishes and the value is an exact 0 (the 3phi2 is not
// evaluated there). x must be in 0..N.
Rational rational_U(const RationalParams& rp, int m, int x);

// Same series with a general value for q^{-x} (untested against the grid
// identities, which only evaluate at integer x).
Rational rational_U_at(const RationalParams& rp, int m, const Rational& q_to_minus_x);

// V_m(x; a,b,N;q) = U_m(N-x; b-a+2, b, N; q^{-1}).
Rational rational_V(const RationalParams& rp, int m, int x);

// Second evaluation route for V_m(n): the 3phi2(...; q, q^{2-a}) sum that the
// U~ reduction produces, with its Pochhammer prefactor.
Rational rational_V_sum_path(const RationalParams& rp, int m, int n);

enum class OverlapKind { S, Stilde, U, Utilde };

// Exact inner-product grid: S = <e_m|f*_n>, S~ = <e*_m|f_n>, U = <e_m|d*_n>,
// U~ = <e*_m|Z|d_n>.
Matrix overlap_matrix(const Representation& rep, OverlapKind kind);

// Identity verification suites; each check covers the full (m,n) grid and a
// failure carries the first offending indices and both exact sides.
Report verify_poly_identification(const Representation& rep);
Report verify_orthogonality_qhahn(const Representation& rep);
Report verify_bispectrality_qhahn(const Representation& rep);
Report verify_rational_identification(const Representation& rep);
Report verify_biorthogonality(const Representation& rep);
Report verify_bispectrality_rational(const Representation& rep);
Report verify_contiguity(const Representation& rep);
Report verify_normalization_limit(const RationalParams& rp);

}  // namespace mqhahn
