#pragma once

// The two-generator presentation <a, b> of the Picard group, its torsion
// table and the catalog of class representatives as words in T1, Tt, R, I.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "picard/checks.hpp"
#include "picard/hermitian.hpp"
#include "picard/torsion.hpp"

namespace picard {

std::pair<GroupElt, GroupElt> ab_matrices();
// The same generators with their matrix signs as fixed by the presentation.
std::pair<Mat3, Mat3> ab_linear();

// Relators in a, b, c = ab, d = ba.
const std::vector<std::string>& presentation_relators();
CheckList verify_relators();

// Conjugations showing there are two classes of complex reflections. rhs is
// a word, or a matrix when rhs_matrix is set.
struct WordIdentity {
  std::string lhs, rhs;
  bool rhs_matrix = false;
  bool printed = true;  // false for a corrected reading of a printed identity
};
const std::vector<WordIdentity>& reflection_identities();
CheckList verify_reflection_identities();

// A row of the torsion table of the presentation.
struct TorsionRow {
  int table = 0, row = 0;
  int order = 0;
  std::string word;                  // in a, b
  std::vector<std::string> aliases;  // in c, d
  std::optional<std::string> fixed;  // polar vector or fixed point, when rational
  std::optional<std::int64_t> norm;
  std::string other;  // the same element in T1, Tt, R, I, J
};
const std::vector<TorsionRow>& torsion_rows();

struct RowResult {
  const TorsionRow* row = nullptr;
  CheckList checks;
  CheckList alias_checks;
};
std::vector<RowResult> verify_rows();

// A representative of one class from the classification, with its matrix and
// stabilizer data.
struct ClassRow {
  int table = 0, row = 0;
  int order = 0;
  bool reflection = false;
  std::string word;
  std::string matrix;  // nine entries separated by commas
  std::optional<std::string> fixed;
  std::optional<std::int64_t> norm;
  std::size_t stab_order = 0;  // isolated rows only
  int one_lines = 0, two_lines = 0;
  std::vector<int> two_line_orbits;  // checked when nonempty
};
const std::vector<ClassRow>& class_rows();

struct ClassRowResult {
  const ClassRow* row = nullptr;
  CheckList checks;
};
std::vector<ClassRowResult> verify_class_rows();

// Each enumerated class matched to the catalog row generating a conjugate
// cyclic group, with the conjugator as witness.
struct ClassMatch {
  const ClassRow* row = nullptr;
  PowerConjugacy witness;
};
std::vector<std::optional<ClassMatch>> match_class_rows(const std::vector<TorsionClass>& classes);

// Each torsion class conjugated into the cyclic group of some table row.
struct CoverageItem {
  std::size_t class_index = 0;
  bool found = false;
  const TorsionRow* row = nullptr;
  int power = 1;
  GroupElt conjugator;
};
std::vector<CoverageItem> torsion_coverage(const std::vector<TorsionClass>& classes);

}  // namespace picard
