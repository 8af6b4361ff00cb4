#pragma once

#include <functional>
#include <map>
#include <string>

#include "equiline/bounds.hpp"

namespace equiline {

// Mechanical certificates for the coefficient claims behind equi_six and
// equi_four. Each proof adds inequalities/identities linear in t_{i,j}; the
// resulting coefficient alpha_{i,j} must have one sign everywhere except on a
// short list of cells. Cells with i + j up to a window are enumerated; the
// infinite remainder is covered by an analytic tail bound on alpha as a
// function of s = i + j.

enum class ExceptionalSign { negative, positive };

struct SignClaim {
  ExceptionalSign exceptional_sign{};
  std::map<Cell, Rational> exceptional;  // cells with the exceptional sign and their exact values
};

struct ProofTemplate {
  BoundTheorem theorem{};
  std::function<Rational(int, int)> coefficient;
  SignClaim claim;
  // For s >= tail_from, alpha_{i,j} >= tail_bound(s) >= 0 (negative claims)
  // or alpha_{i,j} <= tail_bound(s) <= 0 (positive claims).
  int tail_from = 0;
  std::function<Rational(int)> tail_bound;
  std::string tail_certificate;
};

// h(s): coefficient of t_{i,j} in the Hirzebruch linear inequality moved to
// "<= -N" form; -1 for s in {2,3}, 0 for s = 4, s - 4 beyond.
Rational hirzebruch_rewrite_coefficient(int s);
// C(i,2) + C(j,2) - ij: monochromatic minus bichromatic pair weight.
Rational pair_difference_coefficient(int i, int j);

const ProofTemplate& proof_template(BoundTheorem theorem);

struct CoefficientTable {
  BoundTheorem theorem{};
  int window = 0;
  std::map<Cell, Rational> entries;  // all (i, j) with 2 <= i + j <= window
};

// window >= 4; throws InputError for theorems without a certificate.
CoefficientTable build_table(BoundTheorem theorem, int window);
CoefficientTable build_table(const ProofTemplate& proof, int window);

struct Certificate {
  BoundTheorem theorem{};
  int window = 0;
  std::size_t cells_checked = 0;
  ExceptionalSign exceptional_sign{};
  std::map<Cell, Rational> exceptional;  // found by enumeration; equals the claim
  int tail_from = 0;
  std::string tail_certificate;
  bool verified = false;
};

// Throws InputError if window < tail_from, ClaimRefutedError at the first cell
// (ordered by s, then i) that contradicts the claim.
Certificate verify_sign_claim(const ProofTemplate& proof, int window);
Certificate verify_sign_claim(BoundTheorem theorem, int window);

// C(i,2) + C(j,2) - ij == ((i-j)^2 - (i+j))/2 for all 0 <= i, j <= window.
bool verify_identity_simplification(int window);

struct RhsCheck {
  Rational combined_rhs;     // summed right-hand sides of the combined relations
  Rational closed_form_rhs;  // the simplified closed form
  Rational bound;            // resulting lower bound on the counted lines
  bool consistent = false;   // combined == closed form
};

RhsCheck rhs_check(BoundTheorem theorem, long n, long k);

}  // namespace equiline
