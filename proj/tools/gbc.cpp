// Batch runner: every law suite, conversion, factorization and convolution
// check as a subcommand with reproducible, machine-readable reports.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or fixture
// error, 3 a cap was exceeded and the report is incomplete.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gbc/coherent.hpp"
#include "gbc/convolution_laws.hpp"
#include "gbc/fixtures.hpp"
#include "gbc/poly_instance.hpp"
#include "gbc/poly_laws.hpp"
#include "gbc/span_laws.hpp"
#include "gbc/thm_laws.hpp"

namespace {

struct CommonOpts {
  int max_size = 2;
  unsigned seed = 12345;
  std::string format = "text";
  std::string out;
  bool timings = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_out = true) {
  cmd->add_option("--max-size", o.max_size, "object/apex size bound")->check(CLI::Range(0, 4));
  cmd->add_option("--seed", o.seed, "seed for sampled checks and negative controls");
  cmd->add_option("--format", o.format, "report format: text | structured")
      ->check(CLI::IsMember({"text", "structured"}));
  if (with_out) cmd->add_option("--out", o.out, "write the report to this path instead of stdout");
  cmd->add_flag("--timings", o.timings, "include wall-clock timings in the report");
}

int emit(const gbc::Report& rep, const CommonOpts& o) {
  std::string body = o.format == "structured" ? rep.to_json(o.timings).dump(2) + "\n"
                                              : rep.to_text(o.timings);
  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return 2;
    }
    f << body;
  }
  if (!rep.complete()) return 3;
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"executable generic-bicategory checks over finite sets"};
  app.require_subcommand(1);

  CommonOpts span_o, poly_o, class_o, thm_o, trans_o, conv_o, convolve_o;
  std::string class_instance = "span", thm_instance = "span", convolve_instance = "span";
  std::string convert_functor = "identity", convert_fixture, convert_out;
  int convert_w = 2;
  bool convert_verify = false;
  std::vector<std::string> convolve_fixtures;
  std::string convolve_cell;
  int convolve_bound = 2;

  auto* check = app.add_subcommand("check", "run a law suite");
  check->require_subcommand(1);

  auto* span_laws_cmd = check->add_subcommand("span-laws",
                                              "bicategory axioms, hom decomposition, fillers, "
                                              "sub-terminality and the coherence lemmas for spans");
  add_common(span_laws_cmd, span_o);

  auto* poly_laws_cmd = check->add_subcommand("poly-laws",
                                              "factorization round trips, septuple equivalence and "
                                              "the composition oracle for polynomials");
  add_common(poly_laws_cmd, poly_o);

  auto* class_cmd = check->add_subcommand("coherent-class",
                                          "validate the chosen class of generics and augmentations");
  class_cmd->add_option("--instance", class_instance, "span | species | cartesian")
      ->check(CLI::IsMember({"span", "species", "cartesian"}));
  add_common(class_cmd, class_o);

  auto* thm_cmd = check->add_subcommand("thm-laws",
                                        "both law suites, both round trips and the negative controls");
  thm_cmd->add_option("--instance", thm_instance, "span | cartesian | species")
      ->check(CLI::IsMember({"span", "cartesian", "species"}));
  add_common(thm_cmd, thm_o);

  auto* trans_cmd = check->add_subcommand("transformation",
                                          "oplax transformation and icon conditions with controls");
  add_common(trans_cmd, trans_o);

  auto* convert = app.add_subcommand("convert", "convert between the two constraint presentations");
  convert->require_subcommand(1);
  auto* o2c = convert->add_subcommand("oplax-to-comonadic",
                                      "materialize comultiplication/counit tables from a named functor");
  o2c->add_option("--functor", convert_functor, "identity | reversal | product")
      ->check(CLI::IsMember({"identity", "reversal", "product"}));
  o2c->add_option("--w", convert_w, "parameter of the product functor");
  o2c->add_option("--out", convert_out, "output fixture path")->required();
  add_common(o2c, conv_o, false);
  auto* c2o = convert->add_subcommand("comonadic-to-oplax",
                                      "rebuild binary constraint tables from comonadic tables");
  c2o->add_option("--fixture", convert_fixture, "comonadic fixture path")->required();
  c2o->add_option("--out", convert_out, "output fixture path")->required();
  c2o->add_flag("--verify-roundtrip", convert_verify,
                "check the rebuilt constraints against the named functor");
  add_common(c2o, conv_o, false);

  auto* convolve = app.add_subcommand("convolve", "compare reduced and brute-force Day convolution");
  convolve->add_option("--instance", convolve_instance, "span | species")
      ->check(CLI::IsMember({"span", "species"}));
  convolve->add_option("--fixture", convolve_fixtures, "presheaf fixtures (F then G)")->expected(2);
  convolve->add_option("--cell", convolve_cell, "the 1-cell fixture")->required();
  convolve->add_option("--bound", convolve_bound, "truncation bound N");
  add_common(convolve, convolve_o);

  CLI11_PARSE(app, argc, argv);

  try {
    using namespace gbc;
    if (span_laws_cmd->parsed()) {
      Report rep = bicategory_axiom_suite(SpanBicat{span_o.max_size, span_o.max_size});
      check_subterminality(span_o.max_size, span_o.max_size, rep);
      check_famrep_and_fillers(span_o.max_size, span_o.max_size, rep);
      check_sampled_squares(span_o.max_size, span_o.max_size, span_o.seed, 100, rep);
      check_unique_filler_transport(span_o.max_size, span_o.max_size, span_o.seed, 20, rep);
      check_unitor_lemma(std::min(span_o.max_size, 2), std::min(span_o.max_size, 2), rep);
      check_pasting_lemma(std::min(span_o.max_size, 2), std::min(span_o.max_size, 2), rep);
      return emit(rep, span_o);
    }
    if (poly_laws_cmd->parsed()) {
      Report rep;
      check_weber_roundtrip(poly_o.max_size, poly_o.max_size, poly_o.max_size, rep);
      check_composition_oracle(poly_o.max_size, poly_o.max_size, poly_o.max_size, poly_o.max_size, rep);
      auto axioms = bicategory_axiom_suite(PolyBicat{1, 1, 1});
      for (auto& c : axioms.checks) rep.checks.push_back(std::move(c));
      return emit(rep, poly_o);
    }
    if (class_cmd->parsed()) {
      Report rep;
      if (class_instance == "span") {
        SpanBicat bb{class_o.max_size, class_o.max_size};
        auto cls = default_coherent_class(bb);
        rep = validate_coherent_class(bb, cls);
        auto broken = cls;
        broken.generics.erase(broken.generics.begin() +
                              static_cast<long>(class_o.seed % broken.generics.size()));
        auto& r = rep.add("control.dropped-generator",
                          "removing one generator produces a reported failure", bb.bound_description());
        ++r.instances;
        if (validate_coherent_class(bb, broken).all_passed())
          detail::flag(r, nlohmann::json{{"undetected", true}});
      } else if (class_instance == "species") {
        SpeciesBicat bb{std::max(class_o.max_size, 2)};
        auto cls = default_coherent_class(bb);
        rep = validate_coherent_class(bb, cls);
        auto& counits = rep.add("class.augmentations", "the only augmentation is at the empty set",
                                bb.bound_description());
        ++counits.instances;
        if (cls.augmentations.size() != 1)
          detail::flag(counits, nlohmann::json{{"count", cls.augmentations.size()}});
        auto broken = cls;
        broken.generics.erase(broken.generics.begin() +
                              static_cast<long>(class_o.seed % broken.generics.size()));
        auto& r = rep.add("control.dropped-generator",
                          "removing one generator produces a reported failure", bb.bound_description());
        ++r.instances;
        if (validate_coherent_class(bb, broken).all_passed())
          detail::flag(r, nlohmann::json{{"undetected", true}});
      } else {
        CartesianBicat bb{class_o.max_size};
        rep = validate_coherent_class(bb, default_coherent_class(bb));
      }
      return emit(rep, class_o);
    }
    if (thm_cmd->parsed()) {
      Report rep;
      if (thm_instance == "span")
        rep = run_thm_suite(SpanBicat{thm_o.max_size, thm_o.max_size}, thm_o.seed);
      else if (thm_instance == "cartesian")
        rep = run_thm_suite_cartesian(CartesianBicat{thm_o.max_size}, thm_o.seed);
      else
        rep = run_thm_suite_species(SpeciesBicat{std::max(thm_o.max_size, 2)}, thm_o.seed);
      return emit(rep, thm_o);
    }
    if (trans_cmd->parsed()) {
      Report rep = run_transformation_suite(SpanBicat{trans_o.max_size, trans_o.max_size}, trans_o.seed);
      return emit(rep, trans_o);
    }
    if (o2c->parsed()) {
      SpanBicat bb{conv_o.max_size, conv_o.max_size};
      auto tables = materialize_comonadic(bb, convert_functor, convert_w);
      std::ofstream f(convert_out);
      if (!f) {
        std::cerr << "cannot write " << convert_out << "\n";
        return 2;
      }
      f << to_json(tables).dump(2) << "\n";
      Report rep;
      auto& r = rep.add("convert.oplax-to-comonadic", "materialized comultiplication and counit tables",
                        bb.bound_description());
      r.instances = static_cast<long long>(tables.comult.size() + tables.counit.size());
      return emit(rep, conv_o);
    }
    if (c2o->parsed()) {
      auto j = fixture::load_file(convert_fixture);
      auto tables = parse_comonadic_tables(j);
      SpanBicat bb{tables.obj_bound, tables.apex_bound};
      auto d = comonadic_from_tables(bb, tables);
      auto L = comonadic_to_oplax(d, false);
      auto out_tables = materialize_oplax(bb, L, tables.functor, tables.w);
      std::ofstream f(convert_out);
      if (!f) {
        std::cerr << "cannot write " << convert_out << "\n";
        return 2;
      }
      f << to_json(out_tables).dump(2) << "\n";
      Report rep;
      auto& r = rep.add("convert.comonadic-to-oplax", "rebuilt binary constraint tables",
                        bb.bound_description());
      r.instances = static_cast<long long>(out_tables.phi.size() + out_tables.lambda.size());
      if (convert_verify) {
        auto& rv = rep.add("convert.roundtrip", "rebuilt constraints equal the named functor's",
                           bb.bound_description());
        auto named = named_span_functor(bb, tables.functor, tables.w);
        for (const auto& [a, b, cell] : out_tables.phi) {
          ++rv.instances;
          if (!(named.phi(a, b) == cell)) detail::flag(rv, nlohmann::json{{"entry", "phi"}});
        }
        for (const auto& [x, cell] : out_tables.lambda) {
          ++rv.instances;
          if (!(named.lambda(FinSet{x}) == cell)) detail::flag(rv, nlohmann::json{{"entry", "lambda"}});
        }
      }
      return emit(rep, conv_o);
    }
    if (convolve->parsed()) {
      Report rep;
      if (convolve_instance == "span") {
        Span c = fixture::parse_span(fixture::load_file(convolve_cell), "cell");
        auto fj = fixture::load_file(convolve_fixtures[0]);
        auto gj = fixture::load_file(convolve_fixtures[1]);
        // the middle object is part of the presheaf fixtures
        int middle = fixture::field(fj, "middle", "F").get<int>();
        if (fixture::field(gj, "middle", "G").get<int>() != middle)
          fail(errc::invalid_fixture, "F and G disagree on the middle object");
        auto lcat = build_span_homcat(c.src(), FinSet{middle}, convolve_bound);
        auto rcat = build_span_homcat(FinSet{middle}, c.tgt(), convolve_bound);
        auto F = fixture::parse_span_presheaf(fj, lcat, "F");
        auto G = fixture::parse_span_presheaf(gj, rcat, "G");
        auto iso = verify_convolution_iso(lcat, rcat, F, G, c);
        auto& r = rep.add("convolve.span", "reduced sum vs brute-force coend",
                          "N=" + std::to_string(convolve_bound));
        r.instances = 1;
        r.details = nlohmann::json{{"reduced", iso.reduced_count},
                                   {"coend", iso.coend_count},
                                   {"forward", iso.forward},
                                   {"inverse", iso.inverse}};
        if (!iso.bijective)
          detail::flag(r, nlohmann::json{{"reduced", iso.reduced_count}, {"coend", iso.coend_count}});
      } else {
        int n = fixture::field(fixture::load_file(convolve_cell), "n", "cell").get<int>();
        auto sk = build_species_skeleton(std::max(convolve_bound, n));
        auto F = fixture::parse_species_presheaf(fixture::load_file(convolve_fixtures[0]), sk, "F");
        auto G = fixture::parse_species_presheaf(fixture::load_file(convolve_fixtures[1]), sk, "G");
        auto iso = verify_convolution_iso_species(sk, F, G, n);
        auto& r = rep.add("convolve.species", "reduced sum vs brute-force coend",
                          "N=" + std::to_string(std::max(convolve_bound, n)));
        r.instances = 1;
        r.details = nlohmann::json{{"reduced", iso.reduced_count},
                                   {"coend", iso.coend_count},
                                   {"forward", iso.forward},
                                   {"inverse", iso.inverse}};
        if (!iso.bijective)
          detail::flag(r, nlohmann::json{{"reduced", iso.reduced_count}, {"coend", iso.coend_count}});
      }
      return emit(rep, convolve_o);
    }
  } catch (const gbc::error& e) {
    if (e.kind() == gbc::errc::enumeration_too_large) {
      std::cerr << "incomplete: " << e.what() << "\n";
      return 3;
    }
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
