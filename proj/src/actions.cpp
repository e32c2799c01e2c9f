#include "mqhahn/actions.hpp"

#include <map>

namespace mqhahn {

const char* op_name(OpName op) {
  switch (op) {
    case OpName::Z_e: return "Z_e";
    case OpName::X_e: return "X_e";
    case OpName::W_e: return "W_e";
    case OpName::V_f: return "V_f";
    case OpName::Z_d: return "Z_d";
    case OpName::X_d: return "X_d";
    case OpName::V_d: return "V_d";
    case OpName::Zt_dstar: return "Zt_dstar";
    case OpName::Xt_dstar: return "Xt_dstar";
    case OpName::Vt_dstar: return "Vt_dstar";
    case OpName::VtZt_dstar: return "VtZt_dstar";
    case OpName::VZ_d: return "VZ_d";
    case OpName::Z_f: return "Z_f";
    case OpName::X_f: return "X_f";
  }
  return "?";
}

Matrix matrix_in_basis(const Representation& rep, const Matrix& m, const BasisFamily& fam) {
  (void)rep;
  Matrix c = fam.coefficient_matrix();
  return c.solve(m * c);  // solves C X = M C
}

namespace {

Rational div_checked(const Rational& num, const Rational& den, const std::string& what) {
  if (den.is_zero()) throw DegenerateContext("vanishing denominator in " + what);
  return num / den;
}

// Off-diagonal tail shared by Z and X on the f basis:
// (-1)^{j+n+1} a_n..a_{j-1} q^{-(j-n-1)(2alpha-2mu-n-j)/2}  for j > n.
Rational f_tail(const ParamContext& ctx, int n, int j) {
  long e2 = static_cast<long>(j - n - 1) * (n + j);
  if (e2 % 2 != 0) throw Error("internal: odd tail exponent");
  Rational sign((j + n + 1) % 2 == 0 ? 1 : -1);
  return sign * ctx.a_prod(n, j - 1) * ctx.qpow(e2 / 2, -(j - n - 1), 0, j - n - 1);
}

}  // namespace

BasisMatrix closed_form_entries(const ParamContext& ctx, OpName op) {
  const int N = ctx.N;
  const Rational& q = ctx.q;
  const Rational one(1);
  Matrix m(N + 1);

  auto zd_diag = [&](Matrix& mm) {
    for (int n = 0; n <= N; ++n) {
      mm.at(n, n) = Rational(-1);
      if (n < N) mm.at(n + 1, n) = ctx.a(n);
    }
  };

  // Z^(e) subdiagonal/diag/superdiagonal; X^(e) couples through the same
  // superdiagonal factor.
  auto z_e_super = [&](int n) {
    Rational num = ctx.qpow(-1, 2, -2) * ctx.brk(n) * ctx.brk(n - N - 1) *
                   ctx.brk(2 - n, 0, 2) * ctx.brk(1 - n - N, 0, 2);
    Rational den = ctx.a(n - 1) * ctx.brk(2 * n - 2, 0, -2).pow(2) * ctx.brk(1 - 2 * n, 0, 2) *
                   ctx.brk(3 - 2 * n, 0, 2);
    return div_checked(num, den, "Z^(e)_{n-1,n}");
  };

  switch (op) {
    case OpName::Z_e:
      for (int n = 0; n <= N; ++n) {
        if (n < N) m.at(n + 1, n) = ctx.a(n);
        Rational num = ctx.qpow(-2 * n, 1, 1) *
                       (q * ctx.brk(n) * ctx.brk(-n - N, 0, 2) +
                        ctx.brk(n - N) * ctx.brk(2 - n, 0, 2));
        Rational den = ctx.brk(-2 * n, 0, 2) * ctx.brk(2 - 2 * n, 0, 2);
        m.at(n, n) = Rational(-1) - div_checked(num, den, "Z^(e)_{n,n}");
        if (n > 0) m.at(n - 1, n) = z_e_super(n);
      }
      return {op, Label::e, m};

    case OpName::X_e:
      for (int n = 0; n <= N; ++n) {
        if (n < N) m.at(n + 1, n) = ctx.brk(-n, 0, 1) * ctx.a(n);
        Rational num = ctx.qpow(-n, 1) * (one + ctx.qpow(-N, 0, 1)) * (one + ctx.qpow(1, 0, 1));
        Rational den = (one + ctx.qpow(-n, 0, 1)) * (one + ctx.qpow(1 - n, 0, 1));
        m.at(n, n) = Rational(-1) / (one - q) * (one - div_checked(num, den, "X^(e)_{n,n}"));
        if (n > 0) m.at(n - 1, n) = ctx.brk(n - 1, 0, -1) * z_e_super(n);
      }
      return {op, Label::e, m};

    case OpName::W_e:
      // Simplified pencil entries; equivalent to X^(e) - [mu]_q Z^(e).
      for (int n = 0; n <= N; ++n) {
        if (n < N) m.at(n + 1, n) = ctx.qpow(0, 0, 0, 1) * ctx.brk(-n, 0, 1, -1) * ctx.a(n);
        Rational t1 = div_checked(
            ctx.qpow(-n, 1) * ctx.brk(n) * ctx.brk(1 - n - N, 0, 2) * ctx.brk(1 - n, 0, 1, 1),
            ctx.brk(1 - 2 * n, 0, 2) * ctx.brk(2 - 2 * n, 0, 2), "W^(e)_{m,m}");
        Rational t2 = div_checked(
            ctx.qpow(-n, 1) * ctx.brk(n - N) * ctx.brk(1 - n, 0, 2) * ctx.brk(n, 0, -1, 1),
            ctx.brk(2 * n, 0, -2) * ctx.brk(1 - 2 * n, 0, 2), "W^(e)_{m,m}");
        m.at(n, n) = t1 - t2 + ctx.qpow(0, 1) * ctx.brk(0, -1, 0, 1);
        if (n > 0) {
          Rational num = ctx.qpow(-1, 2, -2, 1) * ctx.brk(n) * ctx.brk(n - N - 1) *
                         ctx.brk(2 - n, 0, 2) * ctx.brk(1 - n - N, 0, 2) *
                         ctx.brk(n - 1, 0, -1, -1);
          Rational den = ctx.a(n - 1) * ctx.brk(2 * n - 2, 0, -2).pow(2) *
                         ctx.brk(1 - 2 * n, 0, 2) * ctx.brk(3 - 2 * n, 0, 2);
          m.at(n - 1, n) = div_checked(num, den, "W^(e)_{m-1,m}");
        }
      }
      return {op, Label::e, m};

    case OpName::V_f:
      for (int n = 0; n <= N; ++n) {
        if (n < N)
          m.at(n + 1, n) =
              ctx.a(n) * ctx.qpow(n + 1, -1) * ctx.brk(n, 0, -1, 1) * ctx.brk(n - N + 1, 0, 1, 1);
        m.at(n, n) = ctx.brk(n) * ctx.brk(n - N, 0, 0, 1) +
                     q * ctx.brk(n - N, 0, 1) * ctx.brk(n, 0, -1, 1) +
                     q.pow(n) * ctx.brk(0, 0, -1) * ctx.brk(1, 0, 0, 1);
        if (n > 0)
          m.at(n - 1, n) =
              div_checked(ctx.qpow(1 - n, 1) * ctx.brk(n) * ctx.brk(n - N - 1), ctx.a(n - 1),
                          "V^(f)_{n-1,n}");
      }
      return {op, Label::f, m};

    case OpName::Z_d:
      zd_diag(m);
      return {op, Label::d, m};

    case OpName::X_d:
      for (int n = 0; n <= N; ++n) {
        Rational lam = ctx.brk(-n, 1);
        m.at(n, n) = -lam;
        if (n < N) m.at(n + 1, n) = lam * ctx.a(n);
      }
      return {op, Label::d, m};

    case OpName::V_d:
      for (int n = 0; n <= N; ++n) {
        if (n > 0)
          m.at(n - 1, n) =
              div_checked(ctx.qpow(1 - n, 1) * ctx.brk(n) * ctx.brk(n - N - 1), ctx.a(n - 1),
                          "V^(d)_{n-1,n}");
        Rational head = ctx.brk(0, 1, -1) * ctx.brk(1 - N, 1, 1);
        m.at(n, n) = ctx.qpow(n, -1) * (head - ctx.brk(1 - n, 1) * ctx.brk(-n, 1));
        for (int j = n + 1; j <= N; ++j)
          m.at(j, n) = ctx.qpow(j, -1) * head * ctx.a_prod(n, j - 1);
      }
      return {op, Label::d, m};

    case OpName::Zt_dstar:
      for (int n = 0; n <= N; ++n) {
        m.at(n, n) = Rational(-1);
        if (n > 0) m.at(n - 1, n) = ctx.a(n - 1);
      }
      return {op, Label::dstar, m};

    case OpName::Xt_dstar:
      for (int n = 0; n <= N; ++n) {
        Rational lam = ctx.brk(-n, 1);
        m.at(n, n) = -lam;
        if (n > 0) m.at(n - 1, n) = lam * ctx.a(n - 1);
      }
      return {op, Label::dstar, m};

    case OpName::Vt_dstar:
      for (int n = 0; n <= N; ++n) {
        if (n < N)
          m.at(n + 1, n) = div_checked(ctx.qpow(-n, 1) * ctx.brk(n + 1) * ctx.brk(n - N),
                                       ctx.a(n), "V^T(d*)_{n+1,n}");
        Rational head = ctx.brk(-1, 1, -1) * ctx.brk(-N, 1, 1);
        m.at(n, n) = ctx.qpow(n + 1, -1) * (head - ctx.brk(-n, 1) * ctx.brk(-n - 1, 1));
        for (int j = 0; j < n; ++j)
          m.at(j, n) = ctx.qpow(j + 1, -1) * head * ctx.a_prod(j, n - 1);
      }
      return {op, Label::dstar, m};

    case OpName::VtZt_dstar:
      for (int n = 0; n <= N; ++n) {
        if (n < N)
          m.at(n + 1, n) = div_checked(ctx.qpow(-N, 1) * ctx.brk(n + 1) * ctx.brk(N - n),
                                       ctx.a(n), "(V^T Z^T)(d*)_{n+1,n}");
        m.at(n, n) = ctx.qpow(n, 0, -1) * ctx.brk(0, 0, 1) * ctx.brk(1 - N, 0, 1) -
                     ctx.brk(n) * ctx.brk(1 - n, 1) - q * ctx.brk(n - N) * ctx.brk(-n - 1, 1);
        if (n > 0) m.at(n - 1, n) = ctx.a(n - 1) * q * ctx.brk(-n, 1) * ctx.brk(n - 1, -1);
      }
      return {op, Label::dstar, m};

    case OpName::VZ_d: {
      // (VZ)^(d)_{j,n} = (V^T Z^T)^(d*)_{n,j}
      BasisMatrix vtzt = closed_form_entries(ctx, OpName::VtZt_dstar);
      return {op, Label::d, vtzt.entries.transpose()};
    }

    case OpName::Z_f:
      for (int n = 0; n <= N; ++n) {
        m.at(n, n) = Rational(-1);
        for (int j = n + 1; j <= N; ++j) m.at(j, n) = f_tail(ctx, n, j);
      }
      return {op, Label::f, m};

    case OpName::X_f: {
      Rational mu_b = ctx.brk(0, 0, 0, 1);
      for (int n = 0; n <= N; ++n) {
        m.at(n, n) = -ctx.brk(-n, 1);
        for (int j = n + 1; j <= N; ++j) m.at(j, n) = mu_b * f_tail(ctx, n, j);
      }
      return {op, Label::f, m};
    }
  }
  throw Error("unknown operator name");
}

namespace {

enum class Band { tridiagonal, lower_bidiagonal, upper_bidiagonal, lower_plus_super, upper_plus_sub, lower_triangular };

bool band_allows(Band b, int i, int j) {
  switch (b) {
    case Band::tridiagonal: return i - j <= 1 && j - i <= 1;
    case Band::lower_bidiagonal: return i == j || i == j + 1;
    case Band::upper_bidiagonal: return i == j || i + 1 == j;
    case Band::lower_plus_super: return i >= j - 1;
    case Band::upper_plus_sub: return i <= j + 1;
    case Band::lower_triangular: return i >= j;
  }
  return true;
}

Band band_of(OpName op) {
  switch (op) {
    case OpName::Z_e:
    case OpName::X_e:
    case OpName::W_e:
    case OpName::V_f:
    case OpName::VtZt_dstar:
    case OpName::VZ_d: return Band::tridiagonal;
    case OpName::Z_d:
    case OpName::X_d: return Band::lower_bidiagonal;
    case OpName::Zt_dstar:
    case OpName::Xt_dstar: return Band::upper_bidiagonal;
    case OpName::V_d: return Band::lower_plus_super;
    case OpName::Vt_dstar: return Band::upper_plus_sub;
    case OpName::Z_f:
    case OpName::X_f: return Band::lower_triangular;
  }
  return Band::tridiagonal;
}

}  // namespace

Report verify_actions_suite(const Representation& rep) {
  Report out;
  const ParamContext& ctx = rep.ctx;
  const int N = ctx.N;
  Matrix W = rep.w_pencil();

  std::map<Label, BasisFamily> fams;
  for (Label l : {Label::d, Label::dstar, Label::e, Label::estar, Label::f, Label::fstar})
    fams.emplace(l, closed_form_basis(ctx, l));

  auto operator_matrix = [&](OpName op) -> Matrix {
    switch (op) {
      case OpName::Z_e:
      case OpName::Z_d:
      case OpName::Z_f: return rep.Z;
      case OpName::X_e:
      case OpName::X_d:
      case OpName::X_f: return rep.X;
      case OpName::W_e: return W;
      case OpName::V_f:
      case OpName::V_d: return rep.V;
      case OpName::Zt_dstar: return rep.Z.transpose();
      case OpName::Xt_dstar: return rep.X.transpose();
      case OpName::Vt_dstar: return rep.V.transpose();
      case OpName::VtZt_dstar: return (rep.Z * rep.V).transpose();  // V^T Z^T
      case OpName::VZ_d: return rep.V * rep.Z;
    }
    throw Error("unknown operator name");
  };

  for (OpName op : {OpName::Z_e, OpName::X_e, OpName::W_e, OpName::V_f, OpName::Z_d,
                    OpName::X_d, OpName::V_d, OpName::Zt_dstar, OpName::Xt_dstar,
                    OpName::Vt_dstar, OpName::VtZt_dstar, OpName::VZ_d, OpName::Z_f,
                    OpName::X_f}) {
    BasisMatrix closed = closed_form_entries(ctx, op);
    Matrix oracle = matrix_in_basis(rep, operator_matrix(op), fams.at(closed.basis));
    bool same = closed.entries == oracle;
    std::string tag = op_name(op);
    out.add("actions", "closed_vs_oracle_" + tag, same,
            same ? "" : "residual " + (closed.entries - oracle).first_nonzero());

    bool band_ok = true;
    std::string band_detail;
    Band band = band_of(op);
    for (int i = 0; i <= N && band_ok; ++i)
      for (int j = 0; j <= N && band_ok; ++j)
        if (!band_allows(band, i, j) && !oracle.at(i, j).is_zero()) {
          band_ok = false;
          band_detail = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ")=" + oracle.at(i, j).str();
        }
    out.add("actions", "band_structure_" + tag, band_ok, band_detail);
  }

  // O^T in the star basis has the transposed entries of O in the plain basis.
  struct NamedOp { const char* name; Matrix mat; };
  const std::vector<NamedOp> ops = {
      {"Z", rep.Z}, {"X", rep.X}, {"V", rep.V}, {"W", W}};
  for (auto [plain, star] : {std::pair{Label::e, Label::estar}, std::pair{Label::f, Label::fstar}}) {
    for (const auto& nop : ops) {
      Matrix lhs = matrix_in_basis(rep, nop.mat.transpose(), fams.at(star));
      Matrix rhs = matrix_in_basis(rep, nop.mat, fams.at(plain)).transpose();
      bool same = lhs == rhs;
      out.add("actions",
              std::string("transpose_duality_") + nop.name + "_" + label_name(plain), same,
              same ? "" : "residual " + (lhs - rhs).first_nonzero());
    }
  }

  // The simplified pencil entries must agree with X^(e) - [mu]_q Z^(e).
  {
    Matrix we = closed_form_entries(ctx, OpName::W_e).entries;
    Matrix xz = closed_form_entries(ctx, OpName::X_e).entries -
                ctx.brk(0, 0, 0, 1) * closed_form_entries(ctx, OpName::Z_e).entries;
    bool same = we == xz;
    out.add("actions", "pencil_entries_crosscheck", same,
            same ? "" : "residual " + (we - xz).first_nonzero());
  }

  return out;
}

Report leonard_pair_check(const Representation& rep) {
  Report out;
  const ParamContext& ctx = rep.ctx;
  const int N = ctx.N;
  Matrix W = rep.w_pencil();
  BasisFamily e = closed_form_basis(ctx, Label::e);
  BasisFamily f = closed_form_basis(ctx, Label::f);

  auto check_diagonal = [&](const char* name, const Matrix& m, SpectralKind kind) {
    bool ok = true;
    std::string detail;
    for (int i = 0; i <= N && ok; ++i)
      for (int j = 0; j <= N && ok; ++j) {
        Rational want = (i == j) ? spectral_value(ctx, kind, i) : Rational(0);
        if (m.at(i, j) != want) {
          ok = false;
          detail = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                   ")=" + m.at(i, j).str();
        }
      }
    out.add("actions", name, ok, detail);
  };

  auto check_irreducible_tridiagonal = [&](const char* name, const Matrix& m) {
    bool ok = true;
    std::string detail;
    for (int i = 0; i <= N && ok; ++i)
      for (int j = 0; j <= N && ok; ++j)
        if ((i - j > 1 || j - i > 1) && !m.at(i, j).is_zero()) {
          ok = false;
          detail = "outside band at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    for (int i = 0; i < N && ok; ++i)
      if (m.at(i + 1, i).is_zero() || m.at(i, i + 1).is_zero()) {
        ok = false;
        detail = "vanishing off-diagonal at " + std::to_string(i);
      }
    out.add("actions", name, ok, detail);
  };

  check_diagonal("leonard_v_diagonal_in_e", matrix_in_basis(rep, rep.V, e), SpectralKind::nu);
  check_irreducible_tridiagonal("leonard_w_tridiagonal_in_e", matrix_in_basis(rep, W, e));
  check_diagonal("leonard_w_diagonal_in_f", matrix_in_basis(rep, W, f), SpectralKind::rho);
  check_irreducible_tridiagonal("leonard_v_tridiagonal_in_f", matrix_in_basis(rep, rep.V, f));
  return out;
}

}  // namespace mqhahn
