#pragma once

// Words over named matrices: juxtaposition, powers x^n / x^{-n}, parentheses
// and commutators [x,y] = x y x^-1 y^-1. Symbols are matched longest first.

#include <map>
#include <string>

#include "picard/hermitian.hpp"

namespace picard {

using Alphabet = std::map<std::string, Mat3>;

// T1, Tt, Ttb, Tv, R, I, J, M, A1..A14, a, b, c, d, Id.
const Alphabet& standard_alphabet();

Mat3 eval_word(const std::string& word, const Alphabet& alphabet = standard_alphabet());
GroupElt eval_group(const std::string& word, const Alphabet& alphabet = standard_alphabet());

// Comma-separated entries such as "tau,1,taubar".
Vec3O parse_vector(const std::string& text);
Mat3 parse_matrix(const std::string& text);

}  // namespace picard
