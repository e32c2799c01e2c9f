#pragma once

#include <string>

#include "mqhahn/bases.hpp"

namespace mqhahn {

// The (operator, basis) pairs with a closed-form entry list.
enum class OpName {
  Z_e, X_e, W_e, V_f,           // tridiagonal actions on eigenbases
  Z_d, X_d, V_d,                 // actions on the GEVP basis d
  Zt_dstar, Xt_dstar, Vt_dstar,  // transposed actions on d*
  VtZt_dstar, VZ_d,              // the composite operators
  Z_f, X_f                       // actions on the pencil eigenbasis f
};

const char* op_name(OpName op);

// Matrix of expansion coefficients: M |b_n> = sum_j entries(j,n) |b_j>.
struct BasisMatrix {
  OpName op;
  Label basis;
  Matrix entries;
};

// Generic change of basis: expands M over the family by solving the linear
// system of the basis coefficient matrix (the oracle for every closed form).
Matrix matrix_in_basis(const Representation& rep, const Matrix& m, const BasisFamily& fam);

// Closed-form entries for the named (operator, basis) pair.
BasisMatrix closed_form_entries(const ParamContext& ctx, OpName op);

// Closed form == oracle for all pairs, band structure, transposed-entry
// duality on the e/f bases, and the pencil cross-check for W^(e).
Report verify_actions_suite(const Representation& rep);

// V diagonal + W irreducible tridiagonal in basis e; W diagonal + V
// irreducible tridiagonal in basis f.
Report leonard_pair_check(const Representation& rep);

}  // namespace mqhahn
