#include "mqhahn/qcore.hpp"

#include <sstream>

namespace mqhahn {

ParamContext::ParamContext(Rational q_, Rational ta, Rational tb, Rational tm, int n,
                           std::vector<Rational> a)
    : q(std::move(q_)),
      t_alpha(std::move(ta)),
      t_beta(std::move(tb)),
      t_mu(std::move(tm)),
      N(n),
      a_seq(std::move(a)) {
  if (N < 0) throw DegenerateContext("N must be non-negative");
  if (q.is_zero() || q.is_one()) throw DegenerateContext("q must not be 0 or 1");
  if (q == Rational(-1))
    throw DegenerateContext("q = -1 is a root of unity; (q;q)_k vanishes for k >= 2");
  if (t_alpha.is_zero() || t_beta.is_zero() || t_mu.is_zero())
    throw DegenerateContext("q^alpha, q^beta, q^mu must be nonzero");
  if (static_cast<int>(a_seq.size()) != N)
    throw DegenerateContext("a_seq must have exactly N entries (a_0..a_{N-1})");
  for (int i = 0; i < N; ++i)
    if (a_seq[i].is_zero())
      throw DegenerateContext("a_" + std::to_string(i) + " must be nonzero");
}

const Rational& ParamContext::a(int i) const {
  static const Rational kZero(0);
  if (i < 0 || i >= N) return kZero;  // a_{-1} = a_N = 0
  return a_seq[static_cast<std::size_t>(i)];
}

Rational ParamContext::a_prod(int lo, int hi) const {
  Rational p(1);
  for (int i = lo; i <= hi; ++i) {
    if (i < 0 || i >= N) throw Error("a_prod index out of range");
    p *= a_seq[static_cast<std::size_t>(i)];
  }
  return p;
}

Rational ParamContext::qpow(long c0, long ca, long cb, long cm) const {
  return q.pow(c0) * t_alpha.pow(ca) * t_beta.pow(cb) * t_mu.pow(cm);
}

Rational ParamContext::brk(long c0, long ca, long cb, long cm) const {
  return (Rational(1) - qpow(c0, ca, cb, cm)) / (Rational(1) - q);
}

std::string ParamContext::str() const {
  std::ostringstream os;
  os << "q=" << q << " t_alpha=" << t_alpha << " t_beta=" << t_beta << " t_mu=" << t_mu
     << " N=" << N << " a=";
  for (int i = 0; i < N; ++i) {
    if (i) os << ",";
    os << a_seq[static_cast<std::size_t>(i)];
  }
  if (N == 0) os << "-";
  return os.str();
}

Rational eval_q_power(const ParamContext& ctx, const Exponent& e) {
  if (!e.c0.is_integer())
    throw NonIntegralExponent("exponent constant part " + e.c0.str() + " is not an integer");
  return ctx.qpow(e.c0.to_long(), e.c_alpha, e.c_beta, e.c_mu);
}

Rational q_bracket(const ParamContext& ctx, const Exponent& e) {
  return (Rational(1) - eval_q_power(ctx, e)) / (Rational(1) - ctx.q);
}

Rational q_int_bracket(const Rational& q, long n) {
  return (Rational(1) - q.pow(n)) / (Rational(1) - q);
}

Rational bracket_of_power(const Rational& q, const Rational& q_to_x) {
  return (Rational(1) - q_to_x) / (Rational(1) - q);
}

Rational q_pochhammer(const Rational& q, const Rational& a, long k) {
  if (k < 0) throw Error("q_pochhammer needs k >= 0; use q_pochhammer_signed");
  Rational p(1);
  Rational aqi = a;  // a * q^i
  for (long i = 0; i < k; ++i) {
    p *= Rational(1) - aqi;
    aqi *= q;
  }
  return p;
}

Rational q_pochhammer_signed(const Rational& q, const Rational& a, long k) {
  if (k >= 0) return q_pochhammer(q, a, k);
  // (a;q)_{-k} = 1 / ((a q^{-k}; q)_k)
  Rational denom = q_pochhammer(q, a * q.pow(k), -k);
  if (denom.is_zero())
    throw DegenerateContext("negative-index q-Pochhammer hit a vanishing factor");
  return denom.inv();
}

Rational q_pochhammer_multi(const Rational& q, const std::vector<Rational>& bases, long k) {
  Rational p(1);
  for (const auto& a : bases) p *= q_pochhammer(q, a, k);
  return p;
}

Rational phi32_terminating(const Rational& q, const std::array<Rational, 3>& num,
                           const std::array<Rational, 2>& den, const Rational& z,
                           int terminator_index) {
  if (terminator_index < 0 || terminator_index > 2)
    throw Error("terminator_index must be 0, 1, or 2");
  const Rational& t = num[static_cast<std::size_t>(terminator_index)];
  if (t.is_zero())
    throw Error("terminating parameter must be q^{-n}, got 0");
  long order = 0;
  {
    Rational u = t;
    const long kMaxOrder = 10000;
    while (!u.is_one()) {
      u *= q;
      if (++order > kMaxOrder)
        throw Error("terminating parameter " + t.str() + " is not q^{-n} for small n >= 0");
    }
  }
  Rational sum(0);
  Rational term(1);
  Rational qk(1);       // q^k
  Rational qk1 = q;     // q^{k+1}
  for (long k = 0;; ++k) {
    sum += term;
    if (k == order) break;
    Rational numer = (Rational(1) - num[0] * qk) * (Rational(1) - num[1] * qk) *
                     (Rational(1) - num[2] * qk) * z;
    if (numer.is_zero()) break;  // a numerator factor died; all later terms vanish
    Rational d0 = Rational(1) - den[0] * qk;
    Rational d1 = Rational(1) - den[1] * qk;
    Rational dq = Rational(1) - qk1;
    if (d0.is_zero() || d1.is_zero() || dq.is_zero())
      throw DenominatorPoleBeforeTermination(
          "denominator q-Pochhammer vanished at k=" + std::to_string(k + 1) +
          " before termination at n=" + std::to_string(order));
    term *= numer / (d0 * d1 * dq);
    qk = qk1;
    qk1 *= q;
  }
  return sum;
}

namespace {

std::string dump_kl(const Rational& q, const Rational& a, long k, long l) {
  std::ostringstream os;
  os << "q=" << q << " a=" << a << " k=" << k << " l=" << l;
  return os.str();
}

Rational minus1_pow(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

Report pochhammer_identity_suite(const Rational& q, const std::vector<Rational>& bases,
                                 long max_k) {
  Report rep;
  const std::string suite = "qcore";

  bool inv_ok = true, flip_ok = true, shift_ok = true, split_ok = true, lower_ok = true;
  std::string inv_d, flip_d, shift_d, split_d, lower_d;
  for (const auto& a : bases) {
    if (a.is_zero()) continue;
    for (long k = 0; k <= max_k; ++k) {
      // (a;q)_k = (-a)^k q^{k(k-1)/2} (q^{1-k}/a; q)_k
      {
        Rational lhs = q_pochhammer(q, a, k);
        Rational rhs = (-a).pow(k) * q.pow(k * (k - 1) / 2) *
                       q_pochhammer(q, q.pow(1 - k) / a, k);
        if (lhs != rhs && inv_ok) {
          inv_ok = false;
          inv_d = dump_kl(q, a, k, 0) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
        }
      }
      // (a;q^{-1})_k = (1/a;q)_k (-a)^k q^{-k(k-1)/2}
      {
        Rational lhs = q_pochhammer(q.inv(), a, k);
        Rational rhs = q_pochhammer(q, a.inv(), k) * (-a).pow(k) * q.pow(-k * (k - 1) / 2);
        if (lhs != rhs && flip_ok) {
          flip_ok = false;
          flip_d = dump_kl(q, a, k, 0) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
        }
      }
      for (long l = 0; l <= max_k; ++l) {
        // (a;q)_{l+k} = (a;q)_l (a q^l; q)_k
        {
          Rational lhs = q_pochhammer(q, a, l + k);
          Rational rhs = q_pochhammer(q, a, l) * q_pochhammer(q, a * q.pow(l), k);
          if (lhs != rhs && split_ok) {
            split_ok = false;
            split_d = dump_kl(q, a, k, l) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
          }
        }
        // (a;q)_{k-l} = (a;q)_k / (q^{1-k}/a;q)_l * (-q/a)^l q^{l(l-1)/2 - kl}
        {
          Rational den = q_pochhammer(q, q.pow(1 - k) / a, l);
          if (!den.is_zero()) {
            Rational lhs = q_pochhammer_signed(q, a, k - l);
            Rational rhs = q_pochhammer(q, a, k) / den * (-(q / a)).pow(l) *
                           q.pow(l * (l - 1) / 2 - k * l);
            if (lhs != rhs && shift_ok) {
              shift_ok = false;
              shift_d = dump_kl(q, a, k, l) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
            }
          }
        }
        // (a q^{-l}; q)_k = (a;q)_k (q/a;q)_l q^{-lk} / (q^{1-k}/a;q)_l
        {
          Rational den = q_pochhammer(q, q.pow(1 - k) / a, l);
          if (!den.is_zero()) {
            Rational lhs = q_pochhammer(q, a * q.pow(-l), k);
            Rational rhs =
                q_pochhammer(q, a, k) * q_pochhammer(q, q / a, l) * q.pow(-l * k) / den;
            if (lhs != rhs && lower_ok) {
              lower_ok = false;
              lower_d = dump_kl(q, a, k, l) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
            }
          }
        }
      }
    }
  }
  rep.add(suite, "poch_base_inversion", inv_ok, inv_d);
  rep.add(suite, "poch_q_inversion", flip_ok, flip_d);
  rep.add(suite, "poch_index_shift", shift_ok, shift_d);
  rep.add(suite, "poch_index_split", split_ok, split_d);
  rep.add(suite, "poch_base_lowering", lower_ok, lower_d);

  // (q^{-l};q)_k = (-1)^k q^{k(k-1)/2 - lk} (q;q)_l / (q;q)_{l-k}  (k <= l; zero above)
  {
    bool ok = true;
    std::string d;
    for (long l = 0; l <= max_k; ++l) {
      for (long k = 0; k <= max_k; ++k) {
        Rational lhs = q_pochhammer(q, q.pow(-l), k);
        Rational rhs =
            (k <= l) ? minus1_pow(k) * q.pow(k * (k - 1) / 2 - l * k) *
                           q_pochhammer(q, q, l) / q_pochhammer(q, q, l - k)
                     : Rational(0);
        if (lhs != rhs && ok) {
          ok = false;
          d = dump_kl(q, Rational(0), k, l) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
        }
      }
    }
    rep.add(suite, "poch_qminusl", ok, d);
  }

  // (w q^{2m+2};q)_{N-m} (w q^{m+1};q)_m
  //   = (w q^2;q)_N (w q^{N+2};q)_m / (w q;q)_m * (1 - w q)/(1 - w q^{2m+1})
  {
    bool ok = true;
    std::string d;
    for (const auto& w : bases) {
      if (w.is_zero()) continue;
      long nmax = max_k;
      for (long n = 0; n <= nmax && ok; ++n) {
        for (long m = 0; m <= n && ok; ++m) {
          Rational dd = q_pochhammer(q, w * q, m) * (Rational(1) - w * q.pow(2 * m + 1));
          if (dd.is_zero()) continue;
          Rational lhs = q_pochhammer(q, w * q.pow(2 * m + 2), n - m) *
                         q_pochhammer(q, w * q.pow(m + 1), m);
          Rational rhs = q_pochhammer(q, w * q.pow(2), n) *
                         q_pochhammer(q, w * q.pow(n + 2), m) / q_pochhammer(q, w * q, m) *
                         (Rational(1) - w * q) / (Rational(1) - w * q.pow(2 * m + 1));
          if (lhs != rhs) {
            ok = false;
            d = "w=" + w.str() + " N=" + std::to_string(n) + " m=" + std::to_string(m) +
                " lhs=" + lhs.str() + " rhs=" + rhs.str();
          }
        }
      }
    }
    rep.add(suite, "poch_norm_rearrangement", ok, d);
  }

  // (q;q)_N / (q^{m+1};q)_{N-m} = (q;q)_m
  // (q;q)_{N-n} / (q;q)_N = (-1)^n q^{n(n-2N-1)/2} / (q^{-N};q)_n
  {
    bool ok1 = true, ok2 = true;
    std::string d1, d2;
    for (long n = 0; n <= max_k; ++n) {
      for (long m = 0; m <= n; ++m) {
        Rational lhs = q_pochhammer(q, q, n) / q_pochhammer(q, q.pow(m + 1), n - m);
        Rational rhs = q_pochhammer(q, q, m);
        if (lhs != rhs && ok1) {
          ok1 = false;
          d1 = "N=" + std::to_string(n) + " m=" + std::to_string(m) + " lhs=" + lhs.str() +
               " rhs=" + rhs.str();
        }
        Rational lhs2 = q_pochhammer(q, q, n - m) / q_pochhammer(q, q, n);
        Rational rhs2 = minus1_pow(m) * q.pow(m * (m - 2 * n - 1) / 2) /
                        q_pochhammer(q, q.pow(-n), m);
        if (lhs2 != rhs2 && ok2) {
          ok2 = false;
          d2 = "N=" + std::to_string(n) + " n=" + std::to_string(m) + " lhs=" + lhs2.str() +
               " rhs=" + rhs2.str();
        }
      }
    }
    rep.add(suite, "poch_head_cancellation", ok1, d1);
    rep.add(suite, "poch_tail_reversal", ok2, d2);
  }

  return rep;
}

Report sears_and_32_transform_suite(const Rational& q,
                                    const std::vector<std::array<Rational, 4>>& draws,
                                    long max_n, const Rational& hat_a, const Rational& hat_b,
                                    int grid_n) {
  Report rep;
  const std::string suite = "qcore";

  auto poch_ok_upto = [&](const Rational& base, long n) {
    // true if (base;q)_k is nonzero for all k <= n
    Rational v = base;
    for (long i = 0; i < n; ++i) {
      if (v.is_one()) return false;
      v *= q;
    }
    return true;
  };

  // Sears: 3phi2(q^{-n}, A, B; D, E; q, DEq^n/(AB))
  //      = (E/A;q)_n / (E;q)_n * 3phi2(q^{-n}, A, D/B; D, A q^{1-n}/E; q, q)
  {
    bool ok = true;
    std::string d;
    int ran = 0;
    for (const auto& dr : draws) {
      const Rational &A = dr[0], &B = dr[1], &D = dr[2], &E = dr[3];
      if (A.is_zero() || B.is_zero() || E.is_zero()) continue;
      for (long n = 0; n <= max_n; ++n) {
        if (!poch_ok_upto(D, n) || !poch_ok_upto(E, n) ||
            !poch_ok_upto(A * q.pow(1 - n) / E, n) || q_pochhammer(q, E, n).is_zero())
          continue;
        Rational z = D * E * q.pow(n) / (A * B);
        Rational lhs = phi32_terminating(q, {q.pow(-n), A, B}, {D, E}, z, 0);
        Rational rhs = q_pochhammer(q, E / A, n) / q_pochhammer(q, E, n) *
                       phi32_terminating(q, {q.pow(-n), A, D / B}, {D, A * q.pow(1 - n) / E},
                                         q, 0);
        ++ran;
        if (lhs != rhs && ok) {
          ok = false;
          d = "A=" + A.str() + " B=" + B.str() + " D=" + D.str() + " E=" + E.str() +
              " n=" + std::to_string(n) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
        }
      }
    }
    rep.add(suite, "sears_transform", ok && ran > 0,
            ok ? (ran > 0 ? "" : "no admissible instances") : d);
  }

  // 3phi2(q^{-n}, B, C; D, E; q, q)
  //   = (DE/BC;q)_n / (E;q)_n * (BC/D)^n * 3phi2(q^{-n}, D/B, D/C; D, DE/BC; q, q)
  {
    bool ok = true;
    std::string d;
    int ran = 0;
    for (const auto& dr : draws) {
      const Rational &B = dr[0], &C = dr[1], &D = dr[2], &E = dr[3];
      if (B.is_zero() || C.is_zero() || D.is_zero() || E.is_zero()) continue;
      for (long n = 0; n <= max_n; ++n) {
        Rational DEBC = D * E / (B * C);
        if (!poch_ok_upto(D, n) || !poch_ok_upto(E, n) || !poch_ok_upto(DEBC, n) ||
            q_pochhammer(q, E, n).is_zero())
          continue;
        Rational lhs = phi32_terminating(q, {q.pow(-n), B, C}, {D, E}, q, 0);
        Rational rhs = q_pochhammer(q, DEBC, n) / q_pochhammer(q, E, n) *
                       (B * C / D).pow(n) *
                       phi32_terminating(q, {q.pow(-n), D / B, D / C}, {D, DEBC}, q, 0);
        ++ran;
        if (lhs != rhs && ok) {
          ok = false;
          d = "B=" + B.str() + " C=" + C.str() + " D=" + D.str() + " E=" + E.str() +
              " n=" + std::to_string(n) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
        }
      }
    }
    rep.add(suite, "phi32_q_transform", ok && ran > 0,
            ok ? (ran > 0 ? "" : "no admissible instances") : d);
  }

  // q-Chu-Vandermonde: 2phi1(A, q^{-n}; C; q, q) = (C/A;q)_n A^n / (C;q)_n
  {
    bool ok = true;
    std::string d;
    int ran = 0;
    for (const auto& dr : draws) {
      const Rational &A = dr[0], &C = dr[2];
      if (A.is_zero() || C.is_zero()) continue;
      for (long n = 0; n <= max_n; ++n) {
        if (!poch_ok_upto(C, n) || q_pochhammer(q, C, n).is_zero()) continue;
        Rational lhs = phi32_terminating(q, {A, q.pow(-n), Rational(0)}, {C, Rational(0)}, q, 1);
        Rational rhs = q_pochhammer(q, C / A, n) * A.pow(n) / q_pochhammer(q, C, n);
        ++ran;
        if (lhs != rhs && ok) {
          ok = false;
          d = "A=" + A.str() + " C=" + C.str() + " n=" + std::to_string(n) +
              " lhs=" + lhs.str() + " rhs=" + rhs.str();
        }
      }
    }
    rep.add(suite, "q_chu_vandermonde", ok && ran > 0,
            ok ? (ran > 0 ? "" : "no admissible instances") : d);
  }

  // The Sears instance the S~ reduction rests on, on the (m,n) grid:
  // 3phi2(q^{m-N}, q^{n-N}, (ab)^{-1}q^{-N-m-1}; q^{-N}, a^{-1}q^{-N}; q, b q^{N-n+1})
  //  = (a^{-1}q^{-m};q)_{N-n} / (a^{-1}q^{-N};q)_{N-n}
  //    * 3phi2(q^{m-N}, q^{n-N}, ab q^{m+1}; q^{-N}, a q^{m+n-N+1}; q, q)
  // followed by the double (…;q,q) transformation down to the series with
  // numerator (q^{-m}, q^{-n}, ab q^{m+1}) and denominator (q^{-N}, a q).
  // Grid points where a transform intermediate is undefined (its own
  // denominator Pochhammer vanishes) are skipped: the identities hold
  // wherever both sides exist.
  {
    bool ok1 = true, ok2 = true;
    std::string d1, d2;
    int ran1 = 0, ran2 = 0;
    const long N = grid_n;
    const Rational ab = hat_a * hat_b;
    for (long m = 0; m <= N; ++m) {
      for (long n = 0; n <= N; ++n) {
        try {
          Rational lhs = phi32_terminating(
              q, {q.pow(m - N), q.pow(n - N), ab.inv() * q.pow(-N - m - 1)},
              {q.pow(-N), hat_a.inv() * q.pow(-N)}, hat_b * q.pow(N - n + 1), 0);
          Rational mid = phi32_terminating(
              q, {q.pow(m - N), q.pow(n - N), ab * q.pow(m + 1)},
              {q.pow(-N), hat_a * q.pow(m + n - N + 1)}, q, 0);
          Rational den = q_pochhammer(q, hat_a.inv() * q.pow(-N), N - n);
          if (den.is_zero()) continue;
          Rational rhs = q_pochhammer(q, hat_a.inv() * q.pow(-m), N - n) / den * mid;
          ++ran1;
          if (lhs != rhs && ok1) {
            ok1 = false;
            d1 = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " lhs=" + lhs.str() +
                 " rhs=" + rhs.str();
          }
          Rational fin = phi32_terminating(q, {q.pow(-m), q.pow(-n), ab * q.pow(m + 1)},
                                           {q.pow(-N), hat_a * q}, q, 0);
          Rational den2 = q_pochhammer(q, hat_a * q.pow(m + n - N + 1), N - n) *
                          q_pochhammer(q, hat_b.inv() * q.pow(n - m - N), m);
          if (den2.is_zero()) continue;
          Rational rhs2 = (ab * q.pow(m + 1)).pow(N - m - n) *
                          q_pochhammer(q, hat_b.inv() * q.pow(n - m - N), N - n) *
                          q_pochhammer(q, hat_a * q, m) / den2 * fin;
          ++ran2;
          if (mid != rhs2 && ok2) {
            ok2 = false;
            d2 = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " lhs=" + mid.str() +
                 " rhs=" + rhs2.str();
          }
        } catch (const DenominatorPoleBeforeTermination&) {
          continue;
        }
      }
    }
    rep.add(suite, "sears_overlap_instance", ok1 && ran1 > 0,
            ok1 ? (ran1 > 0 ? "" : "no admissible instances") : d1);
    rep.add(suite, "double_transform_overlap_instance", ok2 && ran2 > 0,
            ok2 ? (ran2 > 0 ? "" : "no admissible instances") : d2);
  }

  return rep;
}

}  // namespace mqhahn
