#pragma once

#include <array>
#include <string>

#include "wheelzeta/bigint.hpp"

namespace wheelzeta {

/// Label [d; j1, j2] of an elementary induced representation of SU(2,2):
/// d is the scale dimension, (j1, j2) the Lorentz weights (half-integers).
struct EIRTriple {
  Rational d;
  Rational j1;
  Rational j2;

  /// Validates that 2*j1 and 2*j2 are non-negative integers.
  EIRTriple(Rational d_, Rational j1_, Rational j2_);

  friend bool operator==(const EIRTriple&, const EIRTriple&) = default;
};

std::string to_string(const EIRTriple& chi);

/// Twist d - j1 - j2.
Rational twist(const EIRTriple& chi);

/// True iff the twist is an integer (the globally-conformal-invariant case).
bool is_gci(const EIRTriple& chi);

/// [4 - d; j2, j1]; an involution.
EIRTriple dual(const EIRTriple& chi);

/// The six partially equivalent representations attached to labels
/// (nu, ell, n): chi_{-nu}, chi_0, chi_n and their duals, forming two exact
/// sequences with differential intertwiners of orders (nu, n, 2 ell + 2 - n).
struct Sextuplet {
  int nu = 0;
  int ell = 0;
  int n_label = 0;
  EIRTriple chi_minus_nu;
  EIRTriple chi_zero;
  EIRTriple chi_n;
  EIRTriple chi_minus_nu_dual;
  EIRTriple chi_zero_dual;
  EIRTriple chi_n_dual;
  std::array<int, 3> intertwiner_orders{};
  std::array<Rational, 3> casimirs;  // shared by all six members
};

/// Requires nu >= 1, ell >= 0, 1 <= n <= 2 ell + 1.
Sextuplet sextuplet(int nu, int ell, int n_label);

/// (C_2, C_3, C_4) in the (nu, ell, n) parametrization; exact rationals.
/// For nu = 1, n = ell + 1 this reduces to (2 ell (ell + 3), 0, 0).
std::array<Rational, 3> casimirs(int nu, int ell, int n_label);

}  // namespace wheelzeta
