#pragma once

#include <string>
#include <vector>

#include "qsip/mpoly.hpp"

namespace qsip {

/// Approximate complex root with a certified error radius: exactly one root
/// of the input lies in the disk |z - (re + i·im)| ≤ radius. re, im and
/// radius are dyadic rationals taken from the working floats.
struct ApproxRoot {
  Rational re;
  Rational im;
  Rational radius;
  std::string re_text;
  std::string im_text;
  bool real = false;  // the disk meets the real axis
  unsigned multiplicity = 1;
};

/// All roots of a squarefree polynomial of degree ≥ 1, by Aberth iteration
/// at `precision_bits`. The disks are verified pairwise separated by more
/// than twice the largest radius; NumericSeparationFailure otherwise.
std::vector<ApproxRoot> approximate_roots(const UPoly& squarefree, unsigned precision_bits = 256);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Rational& q, unsigned digits);

}  // namespace qsip
