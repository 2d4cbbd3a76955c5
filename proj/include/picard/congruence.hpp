#pragma once

// Reduction of matrices modulo the primes i*sqrt7 and tau, the finite image of
// the group and the torsion-free certificates for the kernel.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "picard/checks.hpp"
#include "picard/hermitian.hpp"
#include "picard/torsion.hpp"

namespace picard {

struct ResidueMap {
  std::string name;  // "isqrt7" or "tau"
  int p = 0;
  int tau_image = 0;

  static ResidueMap isqrt7();  // F_7, tau -> 4
  static ResidueMap tau();     // F_2, tau -> 0
  static ResidueMap by_name(const std::string& name);
};

using FpMat = std::array<std::uint8_t, 9>;

int reduce_mod(const OInt& x, const ResidueMap& r);
FpMat reduce_mod(const Mat3& m, const ResidueMap& r);
FpMat fp_mul(const FpMat& x, const FpMat& y, int p);
FpMat fp_identity();
bool fp_is_scalar(const FpMat& m);
// Signed residues in (-p/2, p/2], row-major.
std::string fp_to_string(const FpMat& m, int p);

// Orders of m and of its class modulo scalars.
int fp_order(const FpMat& m, int p);
int fp_projective_order(const FpMat& m, int p);

struct FpMatGroup {
  int p = 0;
  std::vector<FpMat> elements;  // sorted
  std::vector<FpMat> center;
  std::size_t scalars = 0;  // scalar matrices in the group

  std::size_t order() const { return elements.size(); }
  std::size_t projective_order() const { return elements.size() / scalars; }
};
// Throws CapExceeded past cap elements.
FpMatGroup image_group(const std::vector<Mat3>& gens, const ResidueMap& r, std::size_t cap = 100000);

struct ClassImage {
  std::string word;
  int proj_order = 0;
  int image_proj_order = 0;
  int image_order = 0, image_order_neg = 0;  // images of M and -M
  bool passed = false;
};

struct Certificate {
  ResidueMap map;
  FpMatGroup image;
  std::vector<ClassImage> classes;
  CheckList cusp;  // torsion at infinity
  int tv_order = 0;
  bool torsion_free = false;
  bool torsion_free_at_infinity = false;
};
Certificate torsion_free_certificate(const ResidueMap& r, const std::vector<TorsionClass>& classes);

}  // namespace picard
