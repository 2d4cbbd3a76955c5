#pragma once

// JSON documents for every pipeline, shared by the command-line tool and the
// Python module.

#include <cstdint>
#include <string>

#include "json.hpp"
#include "picard/checks.hpp"
#include "picard/hermitian.hpp"

namespace picard {

using Json = nlohmann::ordered_json;

struct Config {
  int max_reduce_iters = 1000;
  long precision_bits = 128;
  std::size_t closure_cap = 10000;
  int word_search_len = 12;
  std::int64_t height_bound = 20;

  // Throws InvalidArgument unless every field is positive and the precision
  // is at most 4096 bits.
  void validate() const;
  // Installs the precision policy.
  void install() const;
};

Json to_json(const CheckList& checks);
Json to_json(const GroupElt& g);
Json to_json(const Mat3& m);
Json to_json(const ProjPoint& p);

// "[a,b,c]" with entries such as -1, tau, "1-isqrt7"; also "a,b,c".
Vec3K parse_point(const std::string& text);

Json ford_reduce_report(const Vec3K& point, const Config& cfg);
Json ford_spheres_report();
Json cusp_overlaps_report();
Json cusp_torsion_report();
Json torsion_enumerate_report(const Config& cfg);
Json torsion_stabilizer_report(const Vec3K& point, const Config& cfg);
Json mirror_verify_report(const std::string& which, const Config& cfg);
Json mirror_search_report(const std::string& which, std::int64_t norm, std::int64_t height);
Json presentation_report(const Config& cfg);
Json congruence_report(const std::string& ideal, const Config& cfg);
Json depth_report(std::int64_t max_depth);
Json full_report(const Config& cfg);

}  // namespace picard
