#pragma once

// Sweeps for the convolution comparison: the reduced sum agrees with the
// brute-force coend for span instances (over a generated presheaf family
// with pointwise values <= 2) and for species instances, plus truncation
// stability in the span case.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gbc/coend.hpp"
#include "gbc/report.hpp"

namespace gbc {

// constants of size 1 and 2 plus the representables whose values stay
// pointwise small
inline std::vector<TablePresheaf> span_presheaf_family(const SpanHomCat& hc, int max_pointwise,
                                                       int max_representables) {
  std::vector<TablePresheaf> out{constant_presheaf(hc.cat, 1), constant_presheaf(hc.cat, 2)};
  int reps = 0;
  for (const auto& at : hc.objects) {
    if (reps >= max_representables) break;
    auto p = representable_presheaf(hc, at);
    int mx = 0;
    for (int s : p.sizes) mx = std::max(mx, s);
    if (mx <= max_pointwise && mx > 0) {
      out.push_back(std::move(p));
      ++reps;
    }
  }
  return out;
}

inline void run_convolution_suite_span(int max_obj, int max_apex, Report& report) {
  const std::string bound = "objects<=" + std::to_string(max_obj) + ", apexes<=" +
                            std::to_string(max_apex) + ", pointwise<=2";
  std::size_t ii = report.checks.size();
  report.add("convolution.span-reduced-iso",
             "the generic-indexed sum is isomorphic to the Day coend on every span instance", bound);
  std::size_t is = report.checks.size();
  report.add("convolution.span-truncation-stability",
             "enlarging the truncation never changes the coend cardinality",
             bound + "; apex+1 for all instances, sampled at the top bound");

  std::map<std::pair<std::pair<int, int>, int>, SpanHomCat> cache;
  auto homcat = [&](int x, int y, int n) -> const SpanHomCat& {
    auto key = std::make_pair(std::make_pair(x, y), n);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, build_span_homcat(FinSet{x}, FinSet{y}, n)).first;
    return it->second;
  };

  for (int xs = 0; xs <= max_obj; ++xs)
    for (int ys = 0; ys <= max_obj; ++ys)
      for (int zs = 0; zs <= max_obj; ++zs) {
        const auto& left = homcat(xs, ys, max_apex);
        const auto& right = homcat(ys, zs, max_apex);
        auto lf = span_presheaf_family(left, 2, 2);
        auto rf = span_presheaf_family(right, 2, 2);
        bool sampled_top = false;
        for (const auto& c : enumerate_spans(FinSet{xs}, FinSet{zs}, max_apex))
          for (std::size_t fi = 0; fi < lf.size(); ++fi)
            for (std::size_t gi = 0; gi < rf.size(); ++gi) {
              auto& r = report.checks[ii];
              ++r.instances;
              auto iso = verify_convolution_iso(left, right, lf[fi], rf[gi], c);
              if (!iso.bijective)
                detail::flag(r, nlohmann::json{{"x", xs},
                                               {"y", ys},
                                               {"z", zs},
                                               {"cell_apex", c.apex().size},
                                               {"reduced", iso.reduced_count},
                                               {"coend", iso.coend_count}});
              // stability: recompute at a strictly larger truncation for the
              // constant presheaves (they restrict trivially); representables
              // are bound to their home category
              bool constants = fi < 2 && gi < 2;
              if (!constants) continue;
              int n2 = c.apex().size + 1;
              if (n2 > max_apex + 1) continue;
              if (n2 == max_apex + 1 && sampled_top) continue;
              if (n2 == max_apex + 1) sampled_top = true;
              const auto& l2 = homcat(xs, ys, n2);
              const auto& r2cat = homcat(ys, zs, n2);
              auto day_small = day_convolve_bruteforce(
                  homcat(xs, ys, std::max(c.apex().size, 0)), homcat(ys, zs, std::max(c.apex().size, 0)),
                  constant_presheaf(homcat(xs, ys, std::max(c.apex().size, 0)).cat, fi == 0 ? 1 : 2),
                  constant_presheaf(homcat(ys, zs, std::max(c.apex().size, 0)).cat, gi == 0 ? 1 : 2), c);
              auto day_big = day_convolve_bruteforce(l2, r2cat,
                                                     constant_presheaf(l2.cat, fi == 0 ? 1 : 2),
                                                     constant_presheaf(r2cat.cat, gi == 0 ? 1 : 2), c);
              auto& rs = report.checks[is];
              ++rs.instances;
              if (day_small.classes != day_big.classes)
                detail::flag(rs, nlohmann::json{{"x", xs},
                                                {"y", ys},
                                                {"z", zs},
                                                {"small", day_small.classes},
                                                {"big", day_big.classes}});
            }
      }
}

inline void run_convolution_suite_species(int max_c, Report& report) {
  auto sk = build_species_skeleton(max_c);
  std::vector<TablePresheaf> family{constant_species(sk, 1), constant_species(sk, 2), sign_species(sk)};
  for (int k = 0; k <= max_c; ++k) {
    auto rep = representable_species(sk, k);
    int mx = 0;
    for (int s : rep.sizes) mx = std::max(mx, s);
    if (mx <= 2 && mx > 0) family.push_back(std::move(rep));
  }
  auto& r = report.add("convolution.species-reduced-iso",
                       "the decomposition-indexed sum is isomorphic to the Day coend for species",
                       "|c|<=" + std::to_string(max_c));
  for (int n = 0; n <= max_c; ++n)
    for (const auto& f : family)
      for (const auto& g : family) {
        ++r.instances;
        auto iso = verify_convolution_iso_species(sk, f, g, n);
        if (!iso.bijective)
          detail::flag(r, nlohmann::json{{"n", n}, {"reduced", iso.reduced_count}, {"coend", iso.coend_count}});
      }
  // the pinned instance: constant singletons at n = 2 give one element per
  // decomposition of a 2-set
  auto& r2 = report.add("convolution.species-singleton-at-2",
                        "the singleton convolution at a 2-set has four elements", "|c|=2");
  auto one = constant_species(sk, 1);
  auto day = day_convolve_bruteforce_species(sk, one, one, 2);
  ++r2.instances;
  if (day.classes != 4) detail::flag(r2, nlohmann::json{{"expected", 4}, {"got", day.classes}});
}

}  // namespace gbc
