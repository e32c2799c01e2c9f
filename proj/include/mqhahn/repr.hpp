#pragma once

#include <utility>

#include "mqhahn/matrix.hpp"
#include "mqhahn/qcore.hpp"
#include "mqhahn/report.hpp"

namespace mqhahn {

// Bidiagonal representation of the meta q-Hahn algebra on the (N+1)-dimensional
// standard basis: X, Z lower bidiagonal (raising), V upper bidiagonal
// (lowering), with the central parameters xi and eta fixed by the context.
struct Representation {
  ParamContext ctx;
  Matrix X, V, Z;
  Rational xi, eta;

  int dim() const { return ctx.N + 1; }
  // The linear pencil W = X - [mu]_q Z.
  Matrix w_pencil() const;
};

Representation build_representation(const ParamContext& ctx);

// AB - s BA.
Matrix q_commutator(const Matrix& a, const Matrix& b, const Rational& s);
// AB + BA.
Matrix anticommutator(const Matrix& a, const Matrix& b);

// The three defining relations as exact matrix identities.
Report verify_defining_relations(const Representation& rep);

// Casimir operator of the algebra evaluated in the representation, plus its
// scalar value. Throws NonScalarCasimir if it is not a multiple of identity.
std::pair<Matrix, Rational> casimir(const Representation& rep);

// Casimir centrality, scalarity and the two-entry cross-check as a report.
Report verify_casimir(const Representation& rep);

// q-Hahn algebra relations for K1 = X + mu_scalar*Z, K2 = V under the central
// element mapping (which involves the Casimir scalar).
Report verify_qhahn_embedding(const Representation& rep, const Rational& mu_scalar);

// Sparsity of X, Z (lower bidiagonal) and V (upper bidiagonal), and agreement
// of the transposed matrices with the transposed bidiagonal actions.
Report verify_bidiagonal_structure(const Representation& rep);

}  // namespace mqhahn
