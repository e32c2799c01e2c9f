#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mqhahn/actions.hpp"

using namespace mqhahn;

namespace {

ParamContext generic_ctx(int n, std::vector<Rational> a = {}) {
  if (a.empty()) a = ParamContext::ones(n);
  return ParamContext(Rational(2), Rational(3), Rational(5), Rational(7), n, std::move(a));
}

}  // namespace

TEST_CASE("identity expands trivially in any basis") {
  ParamContext ctx = generic_ctx(3);
  Representation rep = build_representation(ctx);
  for (Label l : {Label::d, Label::e, Label::fstar}) {
    BasisFamily fam = closed_form_basis(ctx, l);
    CHECK(matrix_in_basis(rep, Matrix::identity(4), fam) == Matrix::identity(4));
  }
}

TEST_CASE("diagonal operators in their own eigenbases") {
  ParamContext ctx = generic_ctx(3);
  Representation rep = build_representation(ctx);
  BasisFamily e = closed_form_basis(ctx, Label::e);
  BasisFamily f = closed_form_basis(ctx, Label::f);
  Matrix ve = matrix_in_basis(rep, rep.V, e);
  Matrix wf = matrix_in_basis(rep, rep.w_pencil(), f);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      CHECK(ve.at(i, j) == (i == j ? spectral_value(ctx, SpectralKind::nu, i) : Rational(0)));
      CHECK(wf.at(i, j) == (i == j ? spectral_value(ctx, SpectralKind::rho, i) : Rational(0)));
    }
}

TEST_CASE("spot values of closed-form entries") {
  ParamContext ctx = generic_ctx(3, {Rational(3, 2), Rational(-2), Rational(5, 7)});
  // Z^(e) subdiagonal is a_n; Z^(d) is bidiagonal with -1 diagonal
  Matrix ze = closed_form_entries(ctx, OpName::Z_e).entries;
  Matrix zd = closed_form_entries(ctx, OpName::Z_d).entries;
  for (int n = 0; n < 3; ++n) {
    CHECK(ze.at(n + 1, n) == ctx.a(n));
    CHECK(zd.at(n + 1, n) == ctx.a(n));
    CHECK(zd.at(n, n) == Rational(-1));
  }
  // V^(f)_{1,0} = a_0 q^{1-alpha} [mu-beta][beta+mu-N+1]
  Matrix vf = closed_form_entries(ctx, OpName::V_f).entries;
  CHECK(vf.at(1, 0) ==
        ctx.a(0) * ctx.qpow(1, -1) * ctx.brk(0, 0, -1, 1) * ctx.brk(1 - 3, 0, 1, 1));
}

TEST_CASE("V^(f) entry at the small sample point") {
  // q=2, q^alpha=8, q^beta=4, q^mu=2, N=2:
  // V^(f)_{1,0} = a_0 q^{1-alpha}[mu-beta][beta+mu-1] = (1/4)(-1/2)(3) = -3/8
  ParamContext ctx(Rational(2), Rational(8), Rational(4), Rational(2), 2,
                   ParamContext::ones(2));
  Matrix vf = closed_form_entries(ctx, OpName::V_f).entries;
  CHECK(vf.at(1, 0) == Rational(-3, 8));
}

TEST_CASE("every closed form equals the change-of-basis oracle") {
  for (int n : {1, 2, 4, 6}) {
    for (auto a : {ParamContext::ones(n), std::vector<Rational>(n, Rational(2, 3))}) {
      Representation rep = build_representation(generic_ctx(n, a));
      Report r = verify_actions_suite(rep);
      for (const auto& c : r.checks) {
        INFO("N=", n, " ", c.name, " ", c.detail);
        CHECK(c.passed);
      }
    }
  }
}

TEST_CASE("expansion coefficients equal dual-basis pairings on e and f") {
  ParamContext ctx = generic_ctx(3);
  Representation rep = build_representation(ctx);
  for (auto [plain, star] :
       {std::pair{Label::e, Label::estar}, std::pair{Label::f, Label::fstar}}) {
    BasisFamily b = closed_form_basis(ctx, plain);
    BasisFamily bs = closed_form_basis(ctx, star);
    for (const Matrix& m : {rep.X, rep.V, rep.Z}) {
      Matrix coeffs = matrix_in_basis(rep, m, b);
      for (int j = 0; j <= 3; ++j)
        for (int n = 0; n <= 3; ++n)
          CHECK(coeffs.at(j, n) ==
                dot(bs.vectors[static_cast<std::size_t>(j)],
                    m * b.vectors[static_cast<std::size_t>(n)]));
    }
  }
}

TEST_CASE("composite operators tie together") {
  ParamContext ctx = generic_ctx(4);
  Representation rep = build_representation(ctx);
  Matrix vz = closed_form_entries(ctx, OpName::VZ_d).entries;
  Matrix vtzt = closed_form_entries(ctx, OpName::VtZt_dstar).entries;
  // (VZ)^(d)_{j,n} = (V^T Z^T)^(d*)_{n,j}, in particular equal diagonals
  CHECK(vz == vtzt.transpose());
  for (int n = 0; n <= 4; ++n) CHECK(vz.at(n, n) == vtzt.at(n, n));
}

TEST_CASE("leonard pair structure") {
  for (int n : {1, 2, 5}) {
    Representation rep = build_representation(generic_ctx(n));
    Report r = leonard_pair_check(rep);
    for (const auto& c : r.checks) {
      INFO("N=", n, " ", c.name, " ", c.detail);
      CHECK(c.passed);
    }
  }
  // N=1: irreducibility is exactly two nonzero off-diagonal entries
  Representation rep = build_representation(generic_ctx(1));
  Matrix we = matrix_in_basis(rep, rep.w_pencil(), closed_form_basis(rep.ctx, Label::e));
  CHECK_FALSE(we.at(0, 1).is_zero());
  CHECK_FALSE(we.at(1, 0).is_zero());
}
