// Acceptance suite: every criterion is an exact-equality property check at
// desk scale, run over 25 seeded-random generic contexts plus a fixed small
// context, with one pass/fail line per criterion.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mqhahn/actions.hpp"
#include "mqhahn/bases.hpp"
#include "mqhahn/repr.hpp"
#include "mqhahn/runner.hpp"
#include "mqhahn/specfun.hpp"

using namespace mqhahn;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label;
  if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

struct Tally {
  bool ok = true;
  std::string detail;
  void absorb(const Report& r, const std::string& ctx_tag) {
    for (const auto& c : r.checks)
      if (!c.passed && ok) {
        ok = false;
        detail = ctx_tag + " " + c.suite + "/" + c.name + " " + c.detail;
      }
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& cli, const std::string& args) {
  int rc = std::system((cli + " " + args).c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::uint64_t seed = 20250810;

  // The fixed context plus 25 seeded-random generic contexts, N <= 8.
  ParamContext fixed(Rational(2), Rational(3), Rational(5), Rational(7), 2,
                     ParamContext::ones(2));
  std::vector<ParamContext> contexts = {fixed};
  for (ParamContext& ctx : sample_contexts({seed, 25, 8})) contexts.push_back(std::move(ctx));
  std::cout << "contexts: fixed " << fixed.str() << " plus " << contexts.size() - 1
            << " sampled (seed " << seed << ", N <= 8)\n";

  std::vector<Representation> reps;
  reps.reserve(contexts.size());
  for (const ParamContext& ctx : contexts) reps.push_back(build_representation(ctx));

  // 1. Defining relations and Casimir
  {
    Tally t;
    for (const Representation& rep : reps) {
      t.absorb(verify_defining_relations(rep), rep.ctx.str());
      t.absorb(verify_casimir(rep), rep.ctx.str());
      t.absorb(verify_bidiagonal_structure(rep), rep.ctx.str());
    }
    criterion(1, "defining relations hold and the Casimir is central and scalar", t.ok,
              t.detail);
  }

  // 2. q-Hahn embedding for 12 pencil scalars per context (0, the W pencil,
  //    and 10 seeded draws)
  {
    Tally t;
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (const Rational& mu : embedding_pencil_scalars(contexts[i], seed + i))
        t.absorb(verify_qhahn_embedding(reps[i], mu), contexts[i].str() + " mu=" + mu.str());
    criterion(2, "q-Hahn algebra embedding holds for random pencils and the W pencil", t.ok,
              t.detail);
  }

  // 3. Six bases: closed form = recurrence, (G)EVP equations, orthogonality,
  //    resolutions of identity
  {
    Tally t;
    for (const Representation& rep : reps) t.absorb(verify_bases_suite(rep), rep.ctx.str());
    criterion(3, "all six bases: two routes agree, eigen-equations, orthogonality, resolutions",
              t.ok, t.detail);
  }

  // 4. Closed-form matrix elements vs the change-of-basis oracle; duality;
  //    Leonard pair structure
  {
    Tally t;
    for (const Representation& rep : reps) {
      t.absorb(verify_actions_suite(rep), rep.ctx.str());
      t.absorb(leonard_pair_check(rep), rep.ctx.str());
    }
    criterion(4, "all displayed matrix elements match the oracle; Leonard pair confirmed",
              t.ok, t.detail);
  }

  // 5. q-Hahn identification, duality, both standard orthogonalities
  {
    Tally t;
    for (const Representation& rep : reps) {
      t.absorb(verify_poly_identification(rep), rep.ctx.str());
      t.absorb(verify_orthogonality_qhahn(rep), rep.ctx.str());
    }
    criterion(5, "q-Hahn identification, duality, and orthogonality relations exact", t.ok,
              t.detail);
  }

  // 6. q-Hahn recurrence and difference equation with boundary assertions
  {
    Tally t;
    for (const Representation& rep : reps)
      t.absorb(verify_bispectrality_qhahn(rep), rep.ctx.str());
    criterion(6, "q-Hahn recurrence/difference equations exact incl. boundary coefficients",
              t.ok, t.detail);
  }

  // 7. Rational functions: identification, biorthogonality with h_0 = h*_0 = 1,
  //    bispectral identities, contiguity, the q -> 1/q path, normalization
  {
    Tally t;
    for (const Representation& rep : reps) {
      t.absorb(verify_rational_identification(rep), rep.ctx.str());
      t.absorb(verify_biorthogonality(rep), rep.ctx.str());
      t.absorb(verify_bispectrality_rational(rep), rep.ctx.str());
      t.absorb(verify_contiguity(rep), rep.ctx.str());
      t.absorb(verify_normalization_limit(RationalParams::from_context(rep.ctx)),
               rep.ctx.str());
    }
    criterion(7, "biorthogonal rational functions: all displayed identities exact", t.ok,
              t.detail);
  }

  // 8. Proof-level Pochhammer / Sears / transform sweeps, k, l, n <= 6
  {
    Tally t;
    std::vector<std::array<Rational, 4>> draws = {
        {Rational(3), Rational(1, 5), Rational(2, 7), Rational(5, 3)},
        {Rational(-2), Rational(3, 4), Rational(1, 7), Rational(-3, 5)},
        {Rational(1, 3), Rational(-5, 2), Rational(4, 9), Rational(7, 2)}};
    for (const Rational& q : {Rational(2), Rational(3, 2), Rational(1, 2), Rational(-2)}) {
      t.absorb(pochhammer_identity_suite(
                   q, {Rational(3), Rational(1, 4), Rational(-2, 3), Rational(7, 5)}, 6),
               "q=" + q.str());
      HatParams hp = HatParams::from_context(fixed);
      t.absorb(sears_and_32_transform_suite(q, draws, 6, hp.a_hat, hp.b_hat, 4),
               "q=" + q.str());
    }
    criterion(8, "Pochhammer, Sears, and 3phi2-transform identity sweeps exact", t.ok,
              t.detail);
  }

  // 9. Gauge invariance: criteria 5-7 rerun with seeded-random nonzero a_seq
  {
    Tally t;
    std::mt19937_64 rng(seed * 3 + 1);
    for (const ParamContext& base : contexts) {
      std::vector<Rational> a;
      for (int k = 0; k < base.N; ++k) {
        long num = static_cast<long>(rng() % 9) - 4;
        if (num == 0) num = 7;
        a.push_back(Rational(num, 1 + static_cast<long>(rng() % 5)));
      }
      Representation rep = build_representation(base.with_a_seq(std::move(a)));
      t.absorb(verify_poly_identification(rep), rep.ctx.str());
      t.absorb(verify_orthogonality_qhahn(rep), rep.ctx.str());
      t.absorb(verify_bispectrality_qhahn(rep), rep.ctx.str());
      t.absorb(verify_rational_identification(rep), rep.ctx.str());
      t.absorb(verify_biorthogonality(rep), rep.ctx.str());
      t.absorb(verify_bispectrality_rational(rep), rep.ctx.str());
      t.absorb(verify_contiguity(rep), rep.ctx.str());
    }
    criterion(9, "identifications and function identities are gauge invariant", t.ok, t.detail);
  }

  // 10. CLI determinism and the exit-code contract
  {
    bool ok = true;
    std::string detail;
    if (!cli.empty()) {
      auto tmp = std::filesystem::temp_directory_path();
      std::string run_a = (tmp / "mqhahn_acc_run_a.txt").string();
      std::string run_b = (tmp / "mqhahn_acc_run_b.txt").string();
      std::string degen = (tmp / "mqhahn_acc_degenerate.cfg").string();
      int rc1 = run_cli(cli, "verify --seed 31 --contexts 4 --max-n 5 --format structured "
                             "--out " + run_a + " >/dev/null");
      int rc2 = run_cli(cli, "verify --seed 31 --contexts 4 --max-n 5 --format structured "
                             "--out " + run_b + " >/dev/null");
      if (rc1 != 0 || rc2 != 0) {
        ok = false;
        detail = "verify exit codes " + std::to_string(rc1) + "," + std::to_string(rc2);
      } else if (read_file(run_a) != read_file(run_b) || read_file(run_a).empty()) {
        ok = false;
        detail = "reports differ between identical runs";
      }
      {
        std::ofstream cfg(degen);
        cfg << "[context]\nq = 2\nt_alpha = 8\nt_beta = 4\nt_mu = 2\nN = 2\na_seq = ones\n";
      }
      int rc3 = run_cli(cli, "verify --config " + degen + " --contexts 0 2>/dev/null");
      if (rc3 != 2) {
        ok = false;
        detail = "degenerate context gave exit " + std::to_string(rc3) + ", want 2";
      }
      std::filesystem::remove(run_a);
      std::filesystem::remove(run_b);
      std::filesystem::remove(degen);
    } else {
      RunConfig cfg;
      cfg.sample = {31, 4, 5};
      cfg.format = OutputFormat::structured;
      VerifyResult a = run_verify(cfg), b = run_verify(cfg);
      ok = a.exit_code == 0 && a.rendered == b.rendered;
      if (!ok) detail = "in-process determinism check failed";
    }
    criterion(10, "CLI: fixed seed gives byte-identical reports; exit codes per contract", ok,
              detail);
  }

  if (g_failures == 0) {
    std::cout << "acceptance: all 10 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
  return 1;
}
