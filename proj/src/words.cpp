#include "picard/words.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "picard/errors.hpp"
#include "picard/ford.hpp"
#include "picard/heisenberg.hpp"
#include "picard/presentation.hpp"

namespace picard {

const Alphabet& standard_alphabet() {
  static const Alphabet alphabet = [] {
    Alphabet a;
    a["Id"] = Mat3::identity();
    a["T1"] = T1();
    a["Tt"] = Ttau();
    a["Ttb"] = Ttaubar();
    a["Tv"] = Tv();
    a["R"] = Rmat();
    const auto& gens = generator_table();
    a["I"] = gens[0].elt.matrix();
    a["M"] = gens[5].elt.matrix();
    a["J"] = Rmat() * a["I"];
    for (const auto& g : gens) a[g.name] = g.elt.matrix();
    auto [A, B] = ab_matrices();
    a["a"] = A.matrix();
    a["b"] = B.matrix();
    a["c"] = A.matrix() * B.matrix();
    a["d"] = B.matrix() * A.matrix();
    return a;
  }();
  return alphabet;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

OInt parse_entry(const std::string& s) { return OInt::from_knum(parse_knum(s)); }

class WordParser {
 public:
  WordParser(const std::string& s, const Alphabet& a) : s_(s), a_(a) {}

  Mat3 parse() {
    Mat3 m = word();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return m;
  }

 private:
  const std::string& s_;
  const Alphabet& a_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("cannot parse word '" + s_ + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*' || s_[pos_] == '.')) {
      ++pos_;
    }
  }

  bool at_factor_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || c == '[' || std::isalpha(static_cast<unsigned char>(c));
  }

  Mat3 word() {
    Mat3 m = Mat3::identity();
    while (at_factor_start()) m = m * factor();
    return m;
  }

  Mat3 factor() {
    Mat3 base = primary();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      return base.pow(exponent());
    }
    return base;
  }

  long exponent() {
    skip();
    char close = 0;
    if (pos_ < s_.size() && (s_[pos_] == '{' || s_[pos_] == '(')) {
      close = s_[pos_] == '{' ? '}' : ')';
      ++pos_;
      skip();
    }
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent expected");
    long e = std::stol(s_.substr(start, pos_ - start));
    if (close) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] != close) fail("unclosed exponent");
      ++pos_;
    }
    return neg ? -e : e;
  }

  Mat3 primary() {
    skip();
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Mat3 m = word();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return m;
    }
    if (c == '[') {
      ++pos_;
      Mat3 x = word();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ',') fail("missing ',' in commutator");
      ++pos_;
      Mat3 y = word();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ']') fail("missing ']'");
      ++pos_;
      return x * y * x.unitary_inverse() * y.unitary_inverse();
    }
    // longest symbol match
    std::size_t best = 0;
    const Mat3* m = nullptr;
    for (const auto& [name, mat] : a_) {
      if (name.size() > best && s_.compare(pos_, name.size(), name) == 0) {
        best = name.size();
        m = &mat;
      }
    }
    if (m == nullptr) fail("unknown symbol at position " + std::to_string(pos_));
    pos_ += best;
    return *m;
  }
};

}  // namespace

Mat3 eval_word(const std::string& word, const Alphabet& alphabet) { return WordParser(word, alphabet).parse(); }

GroupElt eval_group(const std::string& word, const Alphabet& alphabet) {
  return GroupElt(eval_word(word, alphabet), word);
}

Vec3O parse_vector(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 3) throw InvalidArgument("expected three entries: " + text);
  return {parse_entry(parts[0]), parse_entry(parts[1]), parse_entry(parts[2])};
}

Mat3 parse_matrix(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 9) throw InvalidArgument("expected nine entries: " + text);
  Mat3 m;
  for (int i = 0; i < 9; ++i) m.e[i] = parse_entry(parts[i]);
  return m;
}

}  // namespace picard
