#include "mqhahn/bases.hpp"

#include <sstream>

namespace mqhahn {

const char* label_name(Label l) {
  switch (l) {
    case Label::d: return "d";
    case Label::dstar: return "d*";
    case Label::e: return "e";
    case Label::estar: return "e*";
    case Label::f: return "f";
    case Label::fstar: return "f*";
  }
  return "?";
}

SpectralKind spectral_kind_of(Label l) {
  switch (l) {
    case Label::d:
    case Label::dstar: return SpectralKind::lambda;
    case Label::e:
    case Label::estar: return SpectralKind::nu;
    default: return SpectralKind::rho;
  }
}

Rational spectral_value(const ParamContext& ctx, SpectralKind kind, int n) {
  switch (kind) {
    case SpectralKind::lambda: return ctx.brk(-n, 1);                       // [alpha-n]
    case SpectralKind::nu: return ctx.brk(n, 0, -1) * ctx.brk(1 - n, 0, 1);  // [n-b][b-n+1]
    case SpectralKind::rho: return -ctx.brk(-n, 1) + ctx.brk(0, 0, 0, 1);   // -[alpha-n]+[mu]
  }
  throw Error("bad spectral kind");
}

Matrix BasisFamily::coefficient_matrix() const {
  Matrix c(static_cast<int>(vectors.size()));
  for (int n = 0; n < c.dim(); ++n) c.set_column(n, vectors[static_cast<std::size_t>(n)]);
  return c;
}

namespace {

// (base;q)_{k_num} / (base;q)_{k_den}; a vanishing denominator is a
// degenerate context, a vanishing numerator is an honest zero.
Rational poch_ratio(const Rational& q, const Rational& base, long k_num, long k_den) {
  Rational den = q_pochhammer(q, base, k_den);
  if (den.is_zero())
    throw DegenerateContext("vanishing q-Pochhammer denominator (" + base.str() + ";q)_" +
                            std::to_string(k_den));
  return q_pochhammer(q, base, k_num) / den;
}

}  // namespace

BasisFamily closed_form_basis(const ParamContext& ctx, Label label) {
  const int N = ctx.N;
  const Rational& q = ctx.q;
  BasisFamily fam;
  fam.label = label;
  fam.vectors.assign(static_cast<std::size_t>(N + 1), Vec(static_cast<std::size_t>(N + 1), Rational(0)));
  SpectralKind kind = spectral_kind_of(label);
  for (int n = 0; n <= N; ++n) fam.spectral.push_back(spectral_value(ctx, kind, n));

  for (int n = 0; n <= N; ++n) {
    Vec& v = fam.vectors[static_cast<std::size_t>(n)];
    v[static_cast<std::size_t>(n)] = Rational(1);
    switch (label) {
      case Label::d:
        // <l|d_n> = a_n..a_{l-1} (q^{n-N};q)_{N-l}/(q^{n-N};q)_{N-n}
        //           * (q^{n-N-alpha+beta+1};q)_{N-n}/(q^{n-N-alpha+beta+1};q)_{N-l}
        for (int l = n + 1; l <= N; ++l) {
          Rational w = ctx.qpow(n - N + 1, -1, 1);
          v[static_cast<std::size_t>(l)] = ctx.a_prod(n, l - 1) *
                                           poch_ratio(q, ctx.qpow(n - N), N - l, N - n) *
                                           poch_ratio(q, w, N - n, N - l);
        }
        break;
      case Label::dstar:
        // <l|d*_n> = a_l..a_{n-1} q^{(beta-alpha)(n-l)} (q^{-n};q)_l/(q^{-n};q)_n
        //            * (q^{-n+alpha-beta};q)_n/(q^{-n+alpha-beta};q)_l
        for (int l = 0; l < n; ++l) {
          Rational w = ctx.qpow(-n, 1, -1);
          v[static_cast<std::size_t>(l)] = ctx.a_prod(l, n - 1) *
                                           ctx.qpow(0, -1, 1).pow(n - l) *
                                           poch_ratio(q, ctx.qpow(-n), l, n) *
                                           poch_ratio(q, w, n, l);
        }
        break;
      case Label::e:
        // <l|e_n> = 1/(a_l..a_{n-1}) q^{(alpha-beta-1)(n-l)} (q^{-n};q)_l/(q^{-n};q)_n
        //           * (q;q)_n/(q;q)_l (q^{-N};q)_n/(q^{-N};q)_l
        //           * (q^{n-2beta-1};q)_l/(q^{n-2beta-1};q)_n
        for (int l = 0; l < n; ++l) {
          Rational w = ctx.qpow(n - 1, 0, -2);
          v[static_cast<std::size_t>(l)] = ctx.qpow(-1, 1, -1).pow(n - l) / ctx.a_prod(l, n - 1) *
                                           poch_ratio(q, ctx.qpow(-n), l, n) *
                                           poch_ratio(q, q, n, l) *
                                           poch_ratio(q, ctx.qpow(-N), n, l) *
                                           poch_ratio(q, w, l, n);
        }
        break;
      case Label::estar:
        // <l|e*_n> = 1/(a_n..a_{l-1}) q^{(alpha+beta-N)(l-n)}
        //            * (q^{n-N};q)_{N-l}/(q^{n-N};q)_{N-n}
        //            * (q;q)_{N-n}/(q;q)_{N-l} (q^{-N};q)_{N-n}/(q^{-N};q)_{N-l}
        //            * (q^{-N-n+2beta+1};q)_{N-l}/(q^{-N-n+2beta+1};q)_{N-n}
        for (int l = n + 1; l <= N; ++l) {
          Rational w = ctx.qpow(-N - n + 1, 0, 2);
          v[static_cast<std::size_t>(l)] = ctx.qpow(-N, 1, 1).pow(l - n) / ctx.a_prod(n, l - 1) *
                                           poch_ratio(q, ctx.qpow(n - N), N - l, N - n) *
                                           poch_ratio(q, q, N - n, N - l) *
                                           poch_ratio(q, ctx.qpow(-N), N - n, N - l) *
                                           poch_ratio(q, w, N - l, N - n);
        }
        break;
      case Label::f:
        // <l|f_n> = a_n..a_{l-1} q^{(alpha-mu-n)(n-l)} (q^{n-N};q)_{N-l}/(q^{n-N};q)_{N-n}
        //           * (q^{beta-mu-N+1};q)_{N-n}/(q^{beta-mu-N+1};q)_{N-l}
        for (int l = n + 1; l <= N; ++l) {
          Rational w = ctx.qpow(1 - N, 0, 1, -1);
          v[static_cast<std::size_t>(l)] = ctx.a_prod(n, l - 1) *
                                           ctx.qpow(-n, 1, 0, -1).pow(n - l) *
                                           poch_ratio(q, ctx.qpow(n - N), N - l, N - n) *
                                           poch_ratio(q, w, N - n, N - l);
        }
        break;
      case Label::fstar:
        // <l|f*_n> = a_l..a_{n-1} q^{(beta-alpha)(n-l)} (q^{-n};q)_l/(q^{-n};q)_n
        //            * (q^{mu-beta};q)_n/(q^{mu-beta};q)_l
        for (int l = 0; l < n; ++l) {
          Rational w = ctx.qpow(0, 0, -1, 1);
          v[static_cast<std::size_t>(l)] = ctx.a_prod(l, n - 1) *
                                           ctx.qpow(0, -1, 1).pow(n - l) *
                                           poch_ratio(q, ctx.qpow(-n), l, n) *
                                           poch_ratio(q, w, n, l);
        }
        break;
    }
  }
  return fam;
}

namespace {

// Kernel vector of the bidiagonal matrix M (one-dimensional for generic
// spectra), normalized to v[n] = 1. `upward` walks the support l = n..N using
// the subdiagonal; otherwise l = n..0 using the superdiagonal.
Vec kernel_bidiagonal(const Matrix& m, int n, bool upward) {
  const int dim = m.dim();
  Vec v(static_cast<std::size_t>(dim), Rational(0));
  v[static_cast<std::size_t>(n)] = Rational(1);
  if (upward) {
    for (int l = n + 1; l < dim; ++l) {
      if (m.at(l, l).is_zero())
        throw DegenerateEigenvalues("spectral collision at index " + std::to_string(l));
      v[static_cast<std::size_t>(l)] =
          -(m.at(l, l - 1) * v[static_cast<std::size_t>(l - 1)]) / m.at(l, l);
    }
  } else {
    for (int l = n - 1; l >= 0; --l) {
      if (m.at(l, l).is_zero())
        throw DegenerateEigenvalues("spectral collision at index " + std::to_string(l));
      v[static_cast<std::size_t>(l)] =
          -(m.at(l, l + 1) * v[static_cast<std::size_t>(l + 1)]) / m.at(l, l);
    }
  }
  return v;
}

}  // namespace

BasisFamily solve_by_recurrence(const Representation& rep, Label label) {
  const ParamContext& ctx = rep.ctx;
  const int N = ctx.N;
  BasisFamily fam;
  fam.label = label;
  SpectralKind kind = spectral_kind_of(label);
  for (int n = 0; n <= N; ++n) fam.spectral.push_back(spectral_value(ctx, kind, n));

  Matrix W = rep.w_pencil();
  for (int n = 0; n <= N; ++n) {
    const Rational& s = fam.spectral[static_cast<std::size_t>(n)];
    Matrix m(0);
    bool upward = false;
    switch (label) {
      case Label::d:     m = rep.X - s * rep.Z; upward = true; break;
      case Label::dstar: m = (rep.X - s * rep.Z).transpose(); upward = false; break;
      case Label::e:     m = rep.V - Matrix::scalar(N + 1, s); upward = false; break;
      case Label::estar: m = rep.V.transpose() - Matrix::scalar(N + 1, s); upward = true; break;
      case Label::f:     m = W - Matrix::scalar(N + 1, s); upward = true; break;
      case Label::fstar: m = W.transpose() - Matrix::scalar(N + 1, s); upward = false; break;
    }
    fam.vectors.push_back(kernel_bidiagonal(m, n, upward));
  }
  return fam;
}

std::vector<Vec> z_on_d_closed_form(const ParamContext& ctx) {
  const int N = ctx.N;
  const Rational& q = ctx.q;
  std::vector<Vec> out;
  for (int n = 0; n <= N; ++n) {
    Vec v(static_cast<std::size_t>(N + 1), Rational(0));
    // Z|d_n> = -sum_l a_n..a_{l-1} (q^{n-N};q)_{N-l}(q^{n-N-alpha+beta+2};q)_{N-n}
    //          / ((q^{n-N};q)_{N-n}(q^{n-N-alpha+beta+2};q)_{N-l}) q^{n-l} |l>
    for (int l = n; l <= N; ++l) {
      Rational w = ctx.qpow(n - N + 2, -1, 1);
      v[static_cast<std::size_t>(l)] = -(ctx.a_prod(n, l - 1) *
                                         poch_ratio(q, ctx.qpow(n - N), N - l, N - n) *
                                         poch_ratio(q, w, N - n, N - l) * q.pow(n - l));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<BasisFamily> all_families(const ParamContext& ctx) {
  std::vector<BasisFamily> fams;
  for (Label l : {Label::d, Label::dstar, Label::e, Label::estar, Label::f, Label::fstar})
    fams.push_back(closed_form_basis(ctx, l));
  return fams;
}

Report verify_orthogonality(const Representation& rep, const std::vector<BasisFamily>& fams) {
  Report out;
  const int N = rep.ctx.N;
  const BasisFamily& d = fams[0];
  const BasisFamily& ds = fams[1];
  const BasisFamily& e = fams[2];
  const BasisFamily& es = fams[3];
  const BasisFamily& f = fams[4];
  const BasisFamily& fs = fams[5];

  auto pair_check = [&](const char* name, const BasisFamily& left, const BasisFamily& right,
                        const Matrix* insert, const Rational& diag) {
    bool ok = true;
    std::string detail;
    for (int m = 0; m <= N && ok; ++m)
      for (int n = 0; n <= N && ok; ++n) {
        Vec rv = right.vectors[static_cast<std::size_t>(n)];
        if (insert) rv = (*insert) * rv;
        Rational val = dot(left.vectors[static_cast<std::size_t>(m)], rv);
        Rational want = (m == n) ? diag : Rational(0);
        if (val != want) {
          ok = false;
          std::ostringstream os;
          os << "m=" << m << " n=" << n << " got=" << val << " want=" << want;
          detail = os.str();
        }
      }
    out.add("bases", name, ok, detail);
  };

  pair_check("orthogonality_estar_e", es, e, nullptr, Rational(1));
  pair_check("orthogonality_fstar_f", fs, f, nullptr, Rational(1));
  pair_check("orthogonality_dstar_z_d", ds, d, &rep.Z, Rational(-1));
  return out;
}

Report verify_resolutions_of_identity(const Representation& rep,
                                      const std::vector<BasisFamily>& fams) {
  Report out;
  const int dim = rep.dim();
  const Matrix I = Matrix::identity(dim);
  const BasisFamily& d = fams[0];
  const BasisFamily& ds = fams[1];
  const BasisFamily& e = fams[2];
  const BasisFamily& es = fams[3];
  const BasisFamily& f = fams[4];
  const BasisFamily& fs = fams[5];

  auto sum_outer = [&](const BasisFamily& u, const BasisFamily& v) {
    Matrix s(dim);
    for (int n = 0; n < dim; ++n)
      s += Matrix::outer(u.vectors[static_cast<std::size_t>(n)],
                         v.vectors[static_cast<std::size_t>(n)]);
    return s;
  };

  auto check = [&](const char* name, const Matrix& s) {
    Matrix res = s - I;
    out.add("bases", name, res.is_zero(), res.is_zero() ? "" : "residual " + res.first_nonzero());
  };

  check("resolution_e_estar", sum_outer(e, es));
  check("resolution_estar_e", sum_outer(es, e));
  check("resolution_f_fstar", sum_outer(f, fs));
  check("resolution_fstar_f", sum_outer(fs, f));

  Matrix s1(dim), s2(dim);
  for (int n = 0; n < dim; ++n) {
    Vec zd = rep.Z * d.vectors[static_cast<std::size_t>(n)];
    s1 += Matrix::outer(zd, ds.vectors[static_cast<std::size_t>(n)]);
    s2 += Matrix::outer(ds.vectors[static_cast<std::size_t>(n)], zd);
  }
  check("resolution_zd_dstar", Rational(-1) * s1);
  check("resolution_dstar_dz", Rational(-1) * s2);
  return out;
}

Report verify_bases_suite(const Representation& rep) {
  Report out;
  const ParamContext& ctx = rep.ctx;
  const int N = ctx.N;
  Matrix W = rep.w_pencil();

  std::vector<BasisFamily> fams = all_families(ctx);
  for (const BasisFamily& fam : fams) {
    std::string ln = label_name(fam.label);
    BasisFamily oracle = solve_by_recurrence(rep, fam.label);
    bool same = fam.vectors == oracle.vectors && fam.spectral == oracle.spectral;
    out.add("bases", "closed_vs_recurrence_" + ln, same,
            same ? "" : "closed form and recurrence oracle disagree");

    // Defining (G)EVP equation, triangularity and normalization
    bool eq_ok = true, tri_ok = true, norm_ok = true;
    for (int n = 0; n <= N; ++n) {
      const Vec& v = fam.vectors[static_cast<std::size_t>(n)];
      const Rational& s = fam.spectral[static_cast<std::size_t>(n)];
      Vec lhs, rhs;
      switch (fam.label) {
        case Label::d:     lhs = rep.X * v; rhs = s * (rep.Z * v); break;
        case Label::dstar: lhs = rep.X.transpose() * v; rhs = s * (rep.Z.transpose() * v); break;
        case Label::e:     lhs = rep.V * v; rhs = s * v; break;
        case Label::estar: lhs = rep.V.transpose() * v; rhs = s * v; break;
        case Label::f:     lhs = W * v; rhs = s * v; break;
        case Label::fstar: lhs = W.transpose() * v; rhs = s * v; break;
      }
      if (lhs != rhs) eq_ok = false;
      bool support_high = fam.label == Label::d || fam.label == Label::estar || fam.label == Label::f;
      for (int l = 0; l <= N; ++l) {
        bool must_vanish = support_high ? (l < n) : (l > n);
        if (must_vanish && !v[static_cast<std::size_t>(l)].is_zero()) tri_ok = false;
      }
      if (!v[static_cast<std::size_t>(n)].is_one()) norm_ok = false;
    }
    out.add("bases", "defining_equation_" + ln, eq_ok);
    out.add("bases", "triangularity_" + ln, tri_ok);
    out.add("bases", "normalization_" + ln, norm_ok);
  }

  // Z|d_n> closed form vs matrix product
  {
    std::vector<Vec> zd = z_on_d_closed_form(ctx);
    bool ok = true;
    for (int n = 0; n <= N; ++n)
      if (zd[static_cast<std::size_t>(n)] != rep.Z * fams[0].vectors[static_cast<std::size_t>(n)])
        ok = false;
    out.add("bases", "z_on_d_closed_form", ok);
  }

  out.merge(verify_orthogonality(rep, fams));
  out.merge(verify_resolutions_of_identity(rep, fams));
  return out;
}

namespace {

struct ConditionLog {
  bool ok = true;
  std::ostringstream viol;
  void fail(const std::string& what) {
    if (!ok) viol << "; ";
    ok = false;
    viol << what;
  }
};

}  // namespace

Report validate_genericity(const ParamContext& ctx) {
  Report out;
  const std::string suite = "genericity";
  const int N = ctx.N;

  // Pairwise-distinct spectra
  for (auto kind : {SpectralKind::lambda, SpectralKind::nu, SpectralKind::rho}) {
    const char* kn = kind == SpectralKind::lambda ? "lambda"
                     : kind == SpectralKind::nu   ? "nu"
                                                  : "rho";
    ConditionLog log;
    std::vector<Rational> vals;
    for (int n = 0; n <= N; ++n) vals.push_back(spectral_value(ctx, kind, n));
    for (int m = 0; m <= N; ++m)
      for (int n = m + 1; n <= N; ++n)
        if (vals[static_cast<std::size_t>(m)] == vals[static_cast<std::size_t>(n)])
          log.fail("indices " + std::to_string(m) + "," + std::to_string(n));
    out.add(suite, std::string(kn) + "_distinct", log.ok, log.viol.str());
  }

  // [2beta + k]_q != 0 for k = -2N..3 (tridiagonal e-basis entry denominators,
  // [N-2m-b-1], [2m+b-N-1], and all 2beta-shifted basis denominators)
  {
    ConditionLog log;
    for (int k = -2 * N; k <= 3; ++k)
      if (ctx.qpow(k, 0, 2).is_one())
        log.fail("q^{2beta" + std::string(k < 0 ? "" : "+") + std::to_string(k) + "} = 1");
    out.add(suite, "two_beta_brackets", log.ok, log.viol.str());
  }

  // hat(a) hat(b) q^k != 1 for k = 1..2N+2, with hat(a)hat(b) = q^{-2beta-2}
  {
    ConditionLog log;
    Rational ab = ctx.qpow(-2, 0, -2);
    for (int k = 1; k <= 2 * N + 2; ++k)
      if ((ab * ctx.q.pow(k)).is_one()) log.fail("k=" + std::to_string(k));
    out.add(suite, "hat_ab_powers", log.ok, log.viol.str());
  }

  // (hat(a) q;q)_N != 0: q^{mu-beta+i} != 1, i = 0..N-1 (also the f/f*-basis
  // denominators); (hat(b) q;q)_N != 0: q^{-mu-beta+i} != 1
  {
    ConditionLog log;
    for (int i = 0; i < N; ++i)
      if (ctx.qpow(i, 0, -1, 1).is_one()) log.fail("q^{mu-beta+" + std::to_string(i) + "} = 1");
    out.add(suite, "hat_a_pochhammer", log.ok, log.viol.str());
  }
  {
    ConditionLog log;
    for (int i = 0; i < N; ++i)
      if (ctx.qpow(i, 0, -1, -1).is_one())
        log.fail("q^{-mu-beta+" + std::to_string(i) + "} = 1");
    out.add(suite, "hat_b_pochhammer", log.ok, log.viol.str());
  }

  // [alpha-beta-j]_q != 0 for j = 1-N..N (contiguity divisor, the U-prefactor
  // (q^{1-a};q)_n, and the d/d*-basis and Z|d_n> denominators)
  {
    ConditionLog log;
    for (int j = 1 - N; j <= N; ++j)
      if (ctx.qpow(-j, 1, -1).is_one()) log.fail("[a-" + std::to_string(j) + "]_q = 0");
    out.add(suite, "rational_a_brackets", log.ok, log.viol.str());
  }

  // [N-2m-b-1]_q and [2m+b-N-1]_q != 0 for m = 0..N (recurrence coefficient
  // denominators of the rational functions; b = N-2beta-1)
  {
    ConditionLog log;
    for (int m = 0; m <= N; ++m) {
      if (ctx.qpow(-2 * m, 0, 2).is_one()) log.fail("[N-2m-b-1]_q = 0 at m=" + std::to_string(m));
      if (ctx.qpow(2 * m - 2, 0, -2).is_one())
        log.fail("[2m+b-N-1]_q = 0 at m=" + std::to_string(m));
    }
    out.add(suite, "rational_b_brackets", log.ok, log.viol.str());
  }

  // q^{alpha+beta} != q^j for j = 1..N: the inverted-base series defining
  // V_m(n) has denominator factors 1 - q^{a-b-...} that vanish exactly on
  // this set (where the matching identification prefactor also vanishes).
  {
    ConditionLog log;
    for (int j = 1; j <= N; ++j)
      if (ctx.qpow(-j, 1, 1).is_one()) log.fail("q^{alpha+beta-" + std::to_string(j) + "} = 1");
    out.add(suite, "alpha_beta_products", log.ok, log.viol.str());
  }

  return out;
}

bool is_generic(const ParamContext& ctx) { return validate_genericity(ctx).all_passed(); }

}  // namespace mqhahn
