#pragma once

#include <string>
#include <vector>

#include "mqhahn/matrix.hpp"
#include "mqhahn/report.hpp"
#include "mqhahn/repr.hpp"

namespace mqhahn {

enum class Label { d, dstar, e, estar, f, fstar };

const char* label_name(Label l);

enum class SpectralKind { lambda, nu, rho };

// lambda_n = [alpha-n], nu_n = [n-beta][beta-n+1], rho_n = -[alpha-n]+[mu].
Rational spectral_value(const ParamContext& ctx, SpectralKind kind, int n);
SpectralKind spectral_kind_of(Label l);

// One of the six (generalized) eigenbases. vectors[n] holds the standard-basis
// coordinates of the n-th vector, normalized to <n|b_n> = 1.
struct BasisFamily {
  Label label;
  std::vector<Vec> vectors;
  std::vector<Rational> spectral;

  // Coefficient matrix with column n = vectors[n].
  Matrix coefficient_matrix() const;
};

// Closed-form q-Pochhammer expansions.
BasisFamily closed_form_basis(const ParamContext& ctx, Label label);

// Independent oracle: solves the two-term recurrence that the bidiagonal
// matrix entries impose on the coefficients, normalized by <n|b_n> = 1.
BasisFamily solve_by_recurrence(const Representation& rep, Label label);

// Closed form of Z|d_n> for n = 0..N.
std::vector<Vec> z_on_d_closed_form(const ParamContext& ctx);

// All six families built by closed form, in enum order d, d*, e, e*, f, f*.
std::vector<BasisFamily> all_families(const ParamContext& ctx);

// <e*_m|e_n> = delta, <f*_m|f_n> = delta, <d*_m|Z|d_n> = -delta.
Report verify_orthogonality(const Representation& rep, const std::vector<BasisFamily>& fams);

// The six resolutions of identity.
Report verify_resolutions_of_identity(const Representation& rep,
                                      const std::vector<BasisFamily>& fams);

// Triangularity, normalization, and the defining (G)EVP equation per family,
// plus agreement of the two construction routes.
Report verify_bases_suite(const Representation& rep);

// Exact non-degeneracy conditions: pairwise-distinct spectra and the
// nonvanishing of every denominator family appearing in the closed forms.
// Each failed condition is one failed check naming the violating indices.
Report validate_genericity(const ParamContext& ctx);

bool is_generic(const ParamContext& ctx);

}  // namespace mqhahn
