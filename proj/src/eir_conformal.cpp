#include "wheelzeta/eir_conformal.hpp"

#include <string>
#include <utility>

#include "wheelzeta/errors.hpp"

namespace wheelzeta {

namespace {

bool is_nonneg_half_integer(const Rational& j) {
  const Rational doubled = j * 2;
  return j >= 0 && boost::multiprecision::denominator(doubled) == 1;
}

void check_labels(int nu, int ell, int n) {
  if (nu < 1) throw DomainError("sextuplet: nu must be >= 1");
  if (ell < 0) throw DomainError("sextuplet: ell must be >= 0");
  if (n < 1 || n > 2 * ell + 1)
    throw DomainError("sextuplet: n must satisfy 1 <= n <= 2 ell + 1");
}

Rational half(int v) { return Rational(v, 2); }

}  // namespace

EIRTriple::EIRTriple(Rational d_, Rational j1_, Rational j2_)
    : d(std::move(d_)), j1(std::move(j1_)), j2(std::move(j2_)) {
  if (!is_nonneg_half_integer(j1) || !is_nonneg_half_integer(j2))
    throw DomainError("EIR weights must be non-negative half-integers");
}

std::string to_string(const EIRTriple& chi) {
  return "[" + to_string(chi.d) + "; " + to_string(chi.j1) + ", " +
         to_string(chi.j2) + "]";
}

Rational twist(const EIRTriple& chi) { return chi.d - chi.j1 - chi.j2; }

bool is_gci(const EIRTriple& chi) {
  return boost::multiprecision::denominator(twist(chi)) == 1;
}

EIRTriple dual(const EIRTriple& chi) {
  return EIRTriple(Rational(4) - chi.d, chi.j2, chi.j1);
}

std::array<Rational, 3> casimirs(int nu, int ell, int n) {
  check_labels(nu, ell, n);
  const Rational c2 = Rational((ell + 1 - n) * (ell + 1 - n)) +
                      Rational(ell * (ell + 2)) +
                      Rational((ell + nu + 3) * (ell + nu - 1));
  const Rational c3 = Rational(-(ell + 1)) * (ell + 1 - n) * (ell + 1 + nu);
  const long long nn = n, tt = 2 * ell + 2 - n;
  const long long a = (ell + 1) * (ell + 1) + (ell + 1 - n) * (ell + 1 - n);
  const long long b = (ell + nu + 1) * (ell + nu + 1);
  const Rational c4 = Rational(nn * nn * tt * tt + 1) -
                      Rational(2 * a) * (b + 1) + Rational(b) * (b - 2);
  return {c2, c3, c4};
}

Sextuplet sextuplet(int nu, int ell, int n) {
  check_labels(nu, ell, n);
  EIRTriple chi_minus(Rational(1 - ell - nu), Rational(ell) - half(n - 1),
                      half(n - 1));
  EIRTriple chi_zero(Rational(1 - ell), Rational(ell) + half(nu - n + 1),
                     half(nu + n - 1));
  EIRTriple chi_n(Rational(1 - ell + n), half(nu + 1), half(nu - 1));
  Sextuplet s{nu,
              ell,
              n,
              chi_minus,
              chi_zero,
              chi_n,
              dual(chi_minus),
              dual(chi_zero),
              dual(chi_n),
              {nu, n, 2 * ell + 2 - n},
              casimirs(nu, ell, n)};
  return s;
}

}  // namespace wheelzeta
