#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "picard/errors.hpp"
#include "picard/report.hpp"

using picard::Json;

int main(int argc, char** argv) {
  CLI::App app{"Ford domain, torsion and presentation checks for PU(2,1,O7)"};
  app.require_subcommand(1);
  app.fallthrough();

  picard::Config cfg;
  app.add_option("--max-reduce-iters", cfg.max_reduce_iters)->envname("PICARD_MAX_REDUCE_ITERS");
  app.add_option("--precision-bits", cfg.precision_bits)->envname("PICARD_PRECISION_BITS");
  app.add_option("--closure-cap", cfg.closure_cap)->envname("PICARD_CLOSURE_CAP");
  app.add_option("--word-search-len", cfg.word_search_len)->envname("PICARD_WORD_SEARCH_LEN");
  app.add_option("--height-bound", cfg.height_bound)->envname("PICARD_HEIGHT_BOUND");
  int indent = 2;
  app.add_option("--indent", indent, "JSON indentation, -1 for one line");

  Json result;
  auto emit = [&result](Json j) { result = std::move(j); };

  auto* ford = app.add_subcommand("ford", "Isometric spheres and reduction to the domain");
  ford->require_subcommand(1);
  std::string point;
  auto* reduce = ford->add_subcommand("reduce", "Reduce a negative point into the domain");
  reduce->add_option("--point", point, "e.g. '[-1,0,1]' or '[\"-taubar\",0,1]'")->required();
  reduce->callback([&] { emit(picard::ford_reduce_report(picard::parse_point(point), cfg)); });
  ford->add_subcommand("spheres", "Generators and the sphere catalog")->callback([&] { emit(picard::ford_spheres_report()); });
  std::int64_t max_depth = 16;
  auto* depths = ford->add_subcommand("depths", "Depths realized by primitive null vectors");
  depths->add_option("--max", max_depth);
  depths->callback([&] { emit(picard::depth_report(max_depth)); });

  auto* cusp = app.add_subcommand("cusp", "The cusp stabilizer");
  cusp->require_subcommand(1);
  cusp->add_subcommand("overlaps", "Cusp elements g with g(P) meeting P")->callback([&] { emit(picard::cusp_overlaps_report()); });
  cusp->add_subcommand("torsion", "Torsion among the overlaps")->callback([&] { emit(picard::cusp_torsion_report()); });

  auto* torsion = app.add_subcommand("torsion", "Conjugacy classes of torsion elements");
  torsion->require_subcommand(1);
  torsion->add_subcommand("enumerate", "All classes with stabilizer data")->callback([&] {
    emit(picard::torsion_enumerate_report(cfg));
  });
  auto* stab = torsion->add_subcommand("stabilizer", "Stabilizer of a negative point");
  stab->add_option("--point", point)->required();
  stab->callback([&] { emit(picard::torsion_stabilizer_report(picard::parse_point(point), cfg)); });

  auto* mirror = app.add_subcommand("mirror", "Stabilizers of the mirrors of R and Tt R");
  mirror->require_subcommand(1);
  std::string which = "R";
  std::int64_t norm = 2, height = 5;
  auto* mverify = mirror->add_subcommand("verify", "Check generators and relators");
  mverify->add_option("--which", which)->check(CLI::IsMember({"R", "L"}));
  mverify->callback([&] { emit(picard::mirror_verify_report(which, cfg)); });
  auto* msearch = mirror->add_subcommand("search", "Primitive vectors orthogonal to the polar");
  msearch->add_option("--which", which)->check(CLI::IsMember({"R", "L"}));
  msearch->add_option("--norm", norm)->check(CLI::IsMember({1, 2}));
  msearch->add_option("--height", height);
  msearch->callback([&] { emit(picard::mirror_search_report(which, norm, height)); });

  auto* pres = app.add_subcommand("presentation", "The presentation in a, b");
  pres->require_subcommand(1);
  pres->add_subcommand("verify", "Relators, torsion rows and class coverage")->callback([&] {
    emit(picard::presentation_report(cfg));
  });

  auto* cong = app.add_subcommand("congruence", "Reduction modulo a prime");
  cong->require_subcommand(1);
  std::string ideal = "isqrt7";
  auto* check = cong->add_subcommand("check", "Image order and torsion-free certificate");
  check->add_option("--ideal", ideal)->check(CLI::IsMember({"isqrt7", "tau"}));
  check->callback([&] { emit(picard::congruence_report(ideal, cfg)); });

  auto* report = app.add_subcommand("report", "Everything in one document");
  report->require_subcommand(1);
  report->add_subcommand("all")->callback([&] { emit(picard::full_report(cfg)); });

  app.parse_complete_callback([&] { cfg.install(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const picard::PrecisionError& e) {
    std::cout << Json{{"error", "precision"}, {"message", e.what()}}.dump(indent) << "\n";
    return 2;
  } catch (const picard::CapExceeded& e) {
    std::cout << Json{{"error", "cap"}, {"message", e.what()}, {"cap", e.cap}}.dump(indent) << "\n";
    return 2;
  } catch (const picard::InvalidArgument& e) {
    std::cout << Json{{"error", "invalid_argument"}, {"message", e.what()}}.dump(indent) << "\n";
    return 1;
  }
  std::cout << result.dump(indent) << "\n";
  return 0;
}
