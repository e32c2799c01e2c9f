#include "mqhahn/repr.hpp"

#include <string>

namespace mqhahn {

Matrix Representation::w_pencil() const {
  return X - (ctx.brk(0, 0, 0, 1) * Z);  // X - [mu]_q Z
}

Representation build_representation(const ParamContext& ctx) {
  const int N = ctx.N;
  Matrix X(N + 1), V(N + 1), Z(N + 1);
  for (int n = 0; n <= N; ++n) {
    // Z|n> = -|n> + a_n |n+1>
    Z.at(n, n) = Rational(-1);
    // X|n> = -[alpha-n]|n> + a_n [beta-n] |n+1>
    X.at(n, n) = -ctx.brk(-n, 1);
    if (n < N) {
      Z.at(n + 1, n) = ctx.a(n);
      X.at(n + 1, n) = ctx.a(n) * ctx.brk(-n, 0, 1);
    }
    // V|n> = [n-beta][beta-n+1]|n> - q^{alpha-N}[n][N+1-n]/a_{n-1} |n-1>
    V.at(n, n) = ctx.brk(n, 0, -1) * ctx.brk(1 - n, 0, 1);
    if (n > 0) {
      V.at(n - 1, n) = -(ctx.qpow(-N, 1) * q_int_bracket(ctx.q, n) *
                         q_int_bracket(ctx.q, N + 1 - n) / ctx.a(n - 1));
    }
  }
  Representation rep{ctx, std::move(X), std::move(V), std::move(Z), Rational(0), Rational(0)};
  // xi = q^{alpha+1}[-beta-1][beta-N],  eta = q[alpha] + [alpha-N]
  rep.xi = ctx.qpow(1, 1) * ctx.brk(-1, 0, -1) * ctx.brk(-N, 0, 1);
  rep.eta = ctx.q * ctx.brk(0, 1) + ctx.brk(-N, 1);
  return rep;
}

Matrix q_commutator(const Matrix& a, const Matrix& b, const Rational& s) {
  return a * b - s * (b * a);
}

Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

namespace {

void add_zero_check(Report& rep, const std::string& suite, const std::string& name,
                    const Matrix& residual) {
  rep.add(suite, name, residual.is_zero(),
          residual.is_zero() ? "" : "residual " + residual.first_nonzero());
}

}  // namespace

Report verify_defining_relations(const Representation& rep) {
  Report out;
  const Rational& q = rep.ctx.q;
  const Matrix I = Matrix::identity(rep.dim());
  const Matrix &X = rep.X, &V = rep.V, &Z = rep.Z;
  const Rational one(1);

  // [Z,X]_q = Z^2 + Z - (1-q)X
  add_zero_check(out, "algebra", "defining_relation_zx",
                 q_commutator(Z, X, q) - (Z * Z + Z - (one - q) * X));
  // [X,V]_q = {V,Z} + V + xi
  add_zero_check(out, "algebra", "defining_relation_xv",
                 q_commutator(X, V, q) -
                     (anticommutator(V, Z) + V + Matrix::scalar(rep.dim(), rep.xi)));
  // [V,Z]_q = (1+q)X - (1-q)V + eta
  add_zero_check(out, "algebra", "defining_relation_vz",
                 q_commutator(V, Z, q) -
                     ((one + q) * X - (one - q) * V + Matrix::scalar(rep.dim(), rep.eta)));
  return out;
}

std::pair<Matrix, Rational> casimir(const Representation& rep) {
  const Rational& q = rep.ctx.q;
  const Matrix &X = rep.X, &V = rep.V, &Z = rep.Z;
  const Rational one(1);
  Matrix Q = (q * rep.eta - one) * X + (one - q) * V + (q * rep.xi - rep.eta) * Z +
             q * (X * X) - (q * (one - q)) * (X * V) - (one + q) * (X * Z) +
             (Rational(2) - q) * (V * Z) - (q * (one - q)) * (X * V * Z) + V * (Z * Z);
  Rational c;
  if (!Q.is_scalar(&c))
    throw NonScalarCasimir("Casimir is not a scalar multiple of identity; context " +
                           rep.ctx.str());
  return {Q, c};
}

Report verify_casimir(const Representation& rep) {
  Report out;
  auto [Q, c] = casimir(rep);
  add_zero_check(out, "algebra", "casimir_commutes_x", q_commutator(Q, rep.X, Rational(1)));
  add_zero_check(out, "algebra", "casimir_commutes_v", q_commutator(Q, rep.V, Rational(1)));
  add_zero_check(out, "algebra", "casimir_commutes_z", q_commutator(Q, rep.Z, Rational(1)));
  out.add("algebra", "casimir_scalar", true, "");
  // Same scalar from two independent diagonal entries
  bool cross = Q.at(0, 0) == c && Q.at(rep.ctx.N, rep.ctx.N) == c;
  out.add("algebra", "casimir_entry_crosscheck", cross,
          cross ? "" : "Q(0,0)=" + Q.at(0, 0).str() + " Q(N,N)=" + Q.at(rep.ctx.N, rep.ctx.N).str());
  return out;
}

Report verify_qhahn_embedding(const Representation& rep, const Rational& mu_scalar) {
  Report out;
  const Rational& q = rep.ctx.q;
  const Rational one(1);
  const Rational two_q = one + q;  // [2]_q
  const Rational& mu = mu_scalar;
  const int dim = rep.dim();

  Rational c = casimir(rep).second;

  Matrix K1 = rep.X + mu * rep.Z;
  const Matrix& K2 = rep.V;

  Rational r1 = one + mu * (one - q);
  Rational r2 = two_q;
  Rational r3 = rep.xi * (one - q) + Rational(2) * rep.eta +
                mu * (two_q + rep.eta * (one - q));
  Rational r4(0);
  Rational r5 = two_q * mu * rep.xi;
  Rational r6 = q.pow(-2) * (one + mu * (one - q)) *
                (rep.eta * (one + q * q * mu) - q * rep.xi - two_q * c);

  Matrix C = q_commutator(K1, K2, q);
  std::string tag = " mu=" + mu.str();

  Matrix lhs1 = q_commutator(K2, C, q);
  Matrix rhs1 = (r1 * (q - one)) * (K2 * K2) + r2 * anticommutator(K1, K2) + r3 * K2 +
                r4 * K1 + Matrix::scalar(dim, r5);
  Matrix res1 = lhs1 - rhs1;
  out.add("embedding", "qhahn_relation_1", res1.is_zero(),
          res1.is_zero() ? "" : "residual " + res1.first_nonzero() + tag);

  Matrix lhs2 = q_commutator(C, K1, q);
  Matrix rhs2 = (r1 * (q - one)) * anticommutator(K1, K2) + r2 * (K1 * K1) -
                (r1 * r1) * K2 + r3 * K1 + Matrix::scalar(dim, r6);
  Matrix res2 = lhs2 - rhs2;
  out.add("embedding", "qhahn_relation_2", res2.is_zero(),
          res2.is_zero() ? "" : "residual " + res2.first_nonzero() + tag);
  return out;
}

Report verify_bidiagonal_structure(const Representation& rep) {
  Report out;
  const ParamContext& ctx = rep.ctx;
  const int N = ctx.N;

  bool sparsity = true;
  std::string detail;
  for (int i = 0; i <= N && sparsity; ++i)
    for (int j = 0; j <= N && sparsity; ++j) {
      bool lower_band = (i == j || i == j + 1);
      bool upper_band = (i == j || i + 1 == j);
      if ((!lower_band && (!rep.X.at(i, j).is_zero() || !rep.Z.at(i, j).is_zero())) ||
          (!upper_band && !rep.V.at(i, j).is_zero())) {
        sparsity = false;
        detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  out.add("algebra", "bidiagonal_sparsity", sparsity, detail);

  // Transposed actions: Z^T|n> = -|n> + a_{n-1}|n-1>, and companions.
  Matrix Zt(N + 1), Xt(N + 1), Vt(N + 1);
  for (int n = 0; n <= N; ++n) {
    Zt.at(n, n) = Rational(-1);
    Xt.at(n, n) = -ctx.brk(-n, 1);
    Vt.at(n, n) = ctx.brk(n, 0, -1) * ctx.brk(1 - n, 0, 1);
    if (n > 0) {
      Zt.at(n - 1, n) = ctx.a(n - 1);
      Xt.at(n - 1, n) = ctx.a(n - 1) * ctx.brk(1 - n, 0, 1);
    }
    if (n < N) {
      Vt.at(n + 1, n) = -(ctx.qpow(-N, 1) * q_int_bracket(ctx.q, n + 1) *
                          q_int_bracket(ctx.q, N - n) / ctx.a(n));
    }
  }
  bool t_ok = Zt == rep.Z.transpose() && Xt == rep.X.transpose() && Vt == rep.V.transpose();
  out.add("algebra", "transposed_actions", t_ok,
          t_ok ? "" : "transposed closed forms disagree with matrix transposes");
  return out;
}

}  // namespace mqhahn
