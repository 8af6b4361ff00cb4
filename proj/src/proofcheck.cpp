#include "equiline/proofcheck.hpp"

#include "equiline/errors.hpp"

namespace equiline {

Rational hirzebruch_rewrite_coefficient(int s) {
  if (s <= 3) return -1;
  return s - 4;
}

Rational pair_difference_coefficient(int i, int j) {
  return Rational(choose2(i) + choose2(j) - Integer(i) * j);
}

namespace {

ProofTemplate make_equi_six() {
  ProofTemplate p;
  p.theorem = BoundTheorem::equi_six;
  p.coefficient = [](int i, int j) -> Rational {
    return pair_difference_coefficient(i, j) + hirzebruch_rewrite_coefficient(i + j);
  };
  p.claim.exceptional_sign = ExceptionalSign::negative;
  for (Cell c : {Cell{1, 1}, Cell{1, 2}, Cell{2, 1}, Cell{2, 2}}) p.claim.exceptional[c] = -2;
  for (Cell c : {Cell{2, 3}, Cell{3, 2}, Cell{3, 3}}) p.claim.exceptional[c] = -1;
  p.tail_from = 8;
  p.tail_bound = [](int s) -> Rational { return fraction(s, 2) - 4; };
  p.tail_certificate =
      "for s = i+j >= 5: alpha = ((i-j)^2 - s)/2 + (s - 4) = (i-j)^2/2 + s/2 - 4 >= s/2 - 4, "
      "which is >= 0 once s >= 8; cells with s <= 7 are enumerated";
  return p;
}

ProofTemplate make_equi_four() {
  ProofTemplate p;
  p.theorem = BoundTheorem::equi_four;
  p.coefficient = [](int i, int j) -> Rational {
    const int s = i + j;
    const int d = i - j;
    return Rational(5 * s - d * d - s * s);
  };
  p.claim.exceptional_sign = ExceptionalSign::positive;
  p.claim.exceptional[{0, 2}] = 2;
  p.claim.exceptional[{2, 0}] = 2;
  p.claim.exceptional[{1, 1}] = 6;
  p.claim.exceptional[{1, 2}] = 5;
  p.claim.exceptional[{2, 1}] = 5;
  p.claim.exceptional[{2, 2}] = 4;
  p.tail_from = 5;
  p.tail_bound = [](int s) -> Rational { return Rational(5 * s - s * s); };
  p.tail_certificate =
      "for s = i+j >= 5: 5s - s^2 = s(5 - s) <= 0 and -(i-j)^2 <= 0, so alpha <= 0; "
      "cells with s <= 4 are enumerated";
  return p;
}

int cell_sum(const Cell& c) { return c.green + c.red; }

std::string cell_text(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

const ProofTemplate& proof_template(BoundTheorem theorem) {
  static const ProofTemplate equi_six = make_equi_six();
  static const ProofTemplate equi_four = make_equi_four();
  if (theorem == BoundTheorem::equi_six) return equi_six;
  if (theorem == BoundTheorem::equi_four) return equi_four;
  throw InputError("no coefficient certificate for theorem " + std::string(name(theorem)));
}

CoefficientTable build_table(const ProofTemplate& proof, int window) {
  if (window < 4) throw InputError("coefficient tables need window >= 4");
  CoefficientTable table;
  table.theorem = proof.theorem;
  table.window = window;
  for (int s = 2; s <= window; ++s) {
    for (int i = 0; i <= s; ++i) table.entries[{i, s - i}] = proof.coefficient(i, s - i);
  }
  return table;
}

CoefficientTable build_table(BoundTheorem theorem, int window) { return build_table(proof_template(theorem), window); }

Certificate verify_sign_claim(const ProofTemplate& proof, int window) {
  if (window < proof.tail_from) {
    throw InputError("window " + std::to_string(window) + " is below the tail-certificate threshold " +
                     std::to_string(proof.tail_from) + " for " + std::string(name(proof.theorem)));
  }
  for (const auto& [cell, value] : proof.claim.exceptional) {
    if (cell_sum(cell) > window) throw InputError("claimed cell outside the window");
  }

  const bool negative = proof.claim.exceptional_sign == ExceptionalSign::negative;
  Certificate cert;
  cert.theorem = proof.theorem;
  cert.window = window;
  cert.exceptional_sign = proof.claim.exceptional_sign;
  cert.tail_from = proof.tail_from;
  cert.tail_certificate = proof.tail_certificate;

  for (int s = 2; s <= window; ++s) {
    // The analytic tail bound itself must have the right sign from tail_from on.
    if (s >= proof.tail_from) {
      const int sign = sgn(proof.tail_bound(s));
      if (negative ? sign < 0 : sign > 0) {
        throw ClaimRefutedError("tail bound has the wrong sign at s = " + std::to_string(s), -1, -1);
      }
    }
    for (int i = 0; i <= s; ++i) {
      const int j = s - i;
      const Rational alpha = proof.coefficient(i, j);
      ++cert.cells_checked;
      if (s >= proof.tail_from) {
        const Rational gap = alpha - proof.tail_bound(s);
        if (negative ? sgn(gap) < 0 : sgn(gap) > 0) {
          throw ClaimRefutedError("coefficient at " + cell_text(i, j) + " = " + to_fraction_string(alpha) +
                                      " breaks the tail bound",
                                  i, j);
        }
      }
      const bool exceptional = negative ? sgn(alpha) < 0 : sgn(alpha) > 0;
      auto claimed = proof.claim.exceptional.find({i, j});
      if (claimed != proof.claim.exceptional.end()) {
        if (alpha != claimed->second) {
          throw ClaimRefutedError("coefficient at " + cell_text(i, j) + " is " + to_fraction_string(alpha) +
                                      ", claimed " + to_fraction_string(claimed->second),
                                  i, j);
        }
      } else if (exceptional) {
        throw ClaimRefutedError("unclaimed " + std::string(negative ? "negative" : "positive") + " coefficient " +
                                    to_fraction_string(alpha) + " at " + cell_text(i, j),
                                i, j);
      }
      if (exceptional) cert.exceptional[{i, j}] = alpha;
    }
  }
  cert.verified = true;
  return cert;
}

Certificate verify_sign_claim(BoundTheorem theorem, int window) {
  return verify_sign_claim(proof_template(theorem), window);
}

bool verify_identity_simplification(int window) {
  for (int i = 0; i <= window; ++i) {
    for (int j = 0; j <= window; ++j) {
      const Rational closed = fraction((i - j) * (i - j) - (i + j), 2);
      if (pair_difference_coefficient(i, j) != closed) return false;
    }
  }
  return true;
}

RhsCheck rhs_check(BoundTheorem theorem, long n_in, long k_in) {
  if (n_in < 1 || k_in < 0 || k_in > n_in) throw InputError("rhs_check needs n >= 1 and 0 <= k <= n");
  const Rational n(n_in);
  const Rational k(k_in);
  RhsCheck check;
  switch (theorem) {
    case BoundTheorem::equi_six:
      // Hirzebruch linear form (<= -(2n-k)) plus the pair-difference identity.
      check.combined_rhs = -(2 * n - k) - n + (k * k + k) / 2;
      check.closed_form_rhs = (-6 * n + k * (k + 3)) / 2;
      // Every counted coefficient is >= -2, so -2 * count <= rhs.
      check.bound = check.closed_form_rhs / -2;
      break;
    case BoundTheorem::equi_four:
      // Bojanowski-Pokora form (>= 4(2n-k)) plus the balance identity.
      check.combined_rhs = 4 * (2 * n - k) + 2 * n - (k * k + k);
      check.closed_form_rhs = 10 * n - k * (k + 5);
      check.bound = check.closed_form_rhs / 6;
      break;
    default:
      throw InputError("no right-hand-side derivation for theorem " + std::string(name(theorem)));
  }
  check.consistent = check.combined_rhs == check.closed_form_rhs;
  return check;
}

}  // namespace equiline
