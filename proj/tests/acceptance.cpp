// Acceptance suite: one line per criterion, aggregated from the exhaustive
// law sweeps.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "gbc/coherent.hpp"
#include "gbc/convolution_laws.hpp"
#include "gbc/poly_instance.hpp"
#include "gbc/poly_laws.hpp"
#include "gbc/span_laws.hpp"
#include "gbc/thm_laws.hpp"

using namespace gbc;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const Report& rep, const std::string& extra = "") {
  bool ok = rep.all_passed();
  long long instances = 0;
  for (const auto& c : rep.checks) instances += c.instances;
  std::printf("[%s] %s — %lld instances%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), instances,
              extra.empty() ? "" : "; ", extra.c_str());
  if (!ok) {
    ++g_failures;
    for (const auto& c : rep.checks)
      if (!c.passed)
        std::printf("       failing check: %s — witness %s\n", c.id.c_str(),
                    c.counterexample.dump().c_str());
  }
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  const unsigned seed = 12345;
  auto start = std::chrono::steady_clock::now();

  // 1 + 2: the filler-uniqueness and hom-decomposition sweeps share one pass
  {
    auto t0 = std::chrono::steady_clock::now();
    Report famrep;
    auto stats = check_famrep_and_fillers(3, 3, famrep);
    check_sampled_squares(3, 3, seed, 100, famrep);
    check_unique_filler_transport(3, 3, seed, 10, famrep);
    Report fillers, counts;
    for (auto& c : famrep.checks) {
      if (c.id == "span.generic-filler-uniqueness" || c.id == "span.sampled-filler-squares" ||
          c.id == "span.orbit-transport")
        fillers.checks.push_back(c);
      else
        counts.checks.push_back(c);
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "sizes<=3, %lld gammas over %lld orbit representatives, %.0fs",
                  stats.gammas, stats.reps, seconds_since(t0));
    criterion("span-generic-filler-uniqueness", fillers, buf);
    criterion("span-hom-decomposition-bijection", counts, "sizes<=3, counts and mutually inverse maps");
  }

  // 3: sub-terminality of identity spans
  {
    Report rep;
    check_subterminality(3, 3, rep);
    criterion("span-identity-subterminal", rep, "sizes<=3, exact");
  }

  // 4: the two coherence lemmas
  {
    Report rep;
    check_unitor_lemma(2, 2, rep);
    check_pasting_lemma(2, 2, rep);
    criterion("span-coherence-lemmas", rep, "unitor factorization + pasting genericity, sizes<=2");
  }

  // 5: coherent classes validate; removing any generator is detected
  {
    Report rep;
    SpanBicat span{2, 2};
    auto span_class = default_coherent_class(span);
    for (auto& c : validate_coherent_class(span, span_class).checks) rep.checks.push_back(std::move(c));
    SpeciesBicat species{4};
    auto species_class = default_coherent_class(species);
    for (auto& c : validate_coherent_class(species, species_class).checks) rep.checks.push_back(std::move(c));
    auto& neg = rep.add("control.drop-every-generator",
                        "every single-generator removal is reported", "span 2,2; species 4");
    for (std::size_t k = 0; k < span_class.generics.size(); ++k) {
      auto broken = span_class;
      broken.generics.erase(broken.generics.begin() + static_cast<long>(k));
      ++neg.instances;
      if (validate_coherent_class(span, broken).all_passed())
        detail::flag(neg, nlohmann::json{{"instance", "span"}, {"generator", k}});
    }
    for (std::size_t k = 0; k < species_class.generics.size(); ++k) {
      auto broken = species_class;
      broken.generics.erase(broken.generics.begin() + static_cast<long>(k));
      ++neg.instances;
      if (validate_coherent_class(species, broken).all_passed())
        detail::flag(neg, nlohmann::json{{"instance", "species"}, {"generator", k}});
    }
    criterion("coherent-class-validation", rep, "span at 2/2, species at 4, with removal controls");
  }

  // 6: the conversion theorem round trips, axioms (a)-(e), negative controls
  {
    auto t0 = std::chrono::steady_clock::now();
    Report rep = run_thm_suite(SpanBicat{2, 2}, seed);
    for (auto& c : run_thm_suite_cartesian(CartesianBicat{2}, seed).checks) rep.checks.push_back(std::move(c));
    for (auto& c : run_thm_suite_species(SpeciesBicat{3}, seed).checks) rep.checks.push_back(std::move(c));
    for (auto& c : run_transformation_suite(SpanBicat{2, 2}, seed).checks) rep.checks.push_back(std::move(c));
    char buf[96];
    std::snprintf(buf, sizeof(buf), "span objects<=2 + cartesian + species, %.0fs", seconds_since(t0));
    criterion("conversion-roundtrips-and-axioms", rep, buf);
  }

  // 7: Weber factorization round trip and septuple equivalence
  {
    Report rep;
    auto stats = check_weber_roundtrip(2, 2, 2, rep);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%lld cells over %lld tracked composites", stats.cells,
                  stats.composites);
    criterion("weber-factorization-roundtrip", rep, buf);
  }

  // 8: polynomial composition against the evaluation oracle
  {
    Report rep;
    check_composition_oracle(2, 2, 2, 2, rep);
    criterion("polynomial-composition-oracle", rep, "sizes<=2 including the x^2+x^4 instance");
  }

  // 9: convolution comparison and truncation stability
  {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    run_convolution_suite_span(2, 2, rep);
    run_convolution_suite_species(4, rep);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "span sizes<=2 pointwise<=2, species |c|<=4, %.0fs",
                  seconds_since(t0));
    criterion("convolution-reduced-iso", rep, buf);
  }

  // 10: the bicategory axiom sanity gate
  {
    Report rep = bicategory_axiom_suite(SpanBicat{2, 2});
    criterion("span-bicategory-axioms", rep, "pentagon, triangle, interchange at sizes<=2");
  }

  std::printf("%s (total %.0fs)\n", g_failures == 0 ? "acceptance: all criteria passed"
                                                    : "acceptance: FAILURES", seconds_since(start));
  return g_failures == 0 ? 0 : 1;
}
