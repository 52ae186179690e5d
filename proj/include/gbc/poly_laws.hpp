#pragma once

// Exhaustive polynomial-side suites: the factor/recompose round trip for
// cartesian 2-cells into tracked composites, the equivalence-relation laws
// for septuple identification, and the agreement of composition with the
// evaluation oracle.

#include <string>
#include <vector>

#include "gbc/poly.hpp"
#include "gbc/report.hpp"

namespace gbc {

// Enumerates the cartesian 2-cells into a tracked composite whose source
// B-part has size at most max_b and E-part at most max_e, by choosing g and
// then relabeling the forced pullback E.
inline std::vector<CartPolyMor> cells_into_composite(const ComposedPoly& cp, int max_e, int max_b) {
  std::vector<CartPolyMor> out;
  const Polynomial& comp = cp.composite;
  for (int bn = 0; bn <= max_b; ++bn) {
    FinSet bset{bn};
    for (const auto& g : enumerate_functions(bset, comp.b_set())) {
      FinFunction t = compose(g, comp.t);
      auto pb = pullback(comp.p, g);  // pairs (e'', b)
      if (pb.apex.size > max_e) continue;
      for (const auto& rel : enumerate_bijections(pb.apex, pb.apex)) {
        // source E is the pullback relabeled along rel
        FinFunction f = compose(rel, pb.proj1);
        FinFunction p = compose(rel, pb.proj2);
        FinFunction s = compose(f, comp.s);
        out.emplace_back(Polynomial(s, p, t), comp, f, g);
      }
    }
  }
  return out;
}

struct WeberStats {
  long long composites = 0;
  long long cells = 0;
  long long septuples = 0;
};

// factor-then-recompose is the identity on every enumerated cartesian 2-cell
// into every tracked composite at the bound, and septuple equivalence is an
// equivalence relation on the septuples that arise.
inline WeberStats check_weber_roundtrip(int max_obj, int max_e, int max_b, Report& report) {
  WeberStats stats;
  std::string bound = "objects<=" + std::to_string(max_obj) + ", E<=" + std::to_string(max_e) +
                      ", B<=" + std::to_string(max_b);
  std::size_t ir = report.checks.size();
  report.add("poly.weber-roundtrip", "factoring and recomposing returns the original 2-cell", bound);
  std::size_t ie = report.checks.size();
  report.add("poly.septuple-equivalence-relation",
             "septuple identification is reflexive, symmetric, and transitive", bound);

  for (int xn = 0; xn <= max_obj; ++xn)
    for (int yn = 0; yn <= max_obj; ++yn)
      for (int zn = 0; zn <= max_obj; ++zn)
        for (const auto& p1 : enumerate_polynomials(FinSet{xn}, FinSet{yn}, max_e, max_b))
          for (const auto& p2 : enumerate_polynomials(FinSet{yn}, FinSet{zn}, max_e, max_b)) {
            auto cp = compose_polys(p1, p2);
            ++stats.composites;
            std::vector<Septuple> seen;
            std::vector<CartPolyMor> seen_cells;
            for (const auto& phi : cells_into_composite(cp, max_e, max_b)) {
              ++stats.cells;
              auto& rr = report.checks[ir];
              ++rr.instances;
              Septuple sep = factor_cartesian_2cell(phi, cp);
              if (!(recompose_septuple(sep, phi.src, cp) == phi))
                detail::flag(rr, nlohmann::json{{"composite", stats.composites}});
              seen.push_back(std::move(sep));
              seen_cells.push_back(phi);
            }
            // equivalence-relation laws on the collected septuples
            auto& re = report.checks[ie];
            for (std::size_t i = 0; i < seen.size(); ++i) {
              ++re.instances;
              ++stats.septuples;
              auto self = septuples_equivalent(seen[i], seen[i]);
              if (!self || !self->alpha.is_identity())
                detail::flag(re, nlohmann::json{{"law", "reflexivity"}});
              for (std::size_t j = 0; j < seen.size(); ++j) {
                if (seen_cells[i].src != seen_cells[j].src) continue;
                auto ij = septuples_equivalent(seen[i], seen[j]);
                auto ji = septuples_equivalent(seen[j], seen[i]);
                if (ij.has_value() != ji.has_value())
                  detail::flag(re, nlohmann::json{{"law", "symmetry"}});
                if (ij && ji && !(ij->alpha.inverse() == ji->alpha))
                  detail::flag(re, nlohmann::json{{"law", "symmetry-inverse"}});
                if (!ij) continue;
                for (std::size_t k = 0; k < seen.size(); ++k) {
                  if (seen_cells[j].src != seen_cells[k].src) continue;
                  auto jk = septuples_equivalent(seen[j], seen[k]);
                  if (!jk) continue;
                  auto ik = septuples_equivalent(seen[i], seen[k]);
                  if (!ik || !(compose(ij->alpha, jk->alpha) == ik->alpha))
                    detail::flag(re, nlohmann::json{{"law", "transitivity"}});
                }
              }
            }
          }
  return stats;
}

// extension of the composite agrees with the composite of extensions,
// per-fiber over the target.
inline void check_composition_oracle(int max_obj, int max_e, int max_b, int max_input, Report& report) {
  auto& r = report.add("poly.composition-extension-oracle",
                       "the composite's extension matches the composite of extensions fiberwise",
                       "objects<=" + std::to_string(max_obj) + ", E<=" + std::to_string(max_e) +
                           ", B<=" + std::to_string(max_b) + ", inputs<=" + std::to_string(max_input));
  auto fibers = [](const FinFunction& f) {
    std::vector<int> c(static_cast<std::size_t>(f.cod.size), 0);
    for (int i = 0; i < f.dom.size; ++i) ++c[static_cast<std::size_t>(f(i))];
    return c;
  };
  for (int xn = 0; xn <= max_obj; ++xn)
    for (int yn = 0; yn <= max_obj; ++yn)
      for (int zn = 0; zn <= max_obj; ++zn)
        for (const auto& p1 : enumerate_polynomials(FinSet{xn}, FinSet{yn}, max_e, max_b))
          for (const auto& p2 : enumerate_polynomials(FinSet{yn}, FinSet{zn}, max_e, max_b)) {
            auto cp = compose_polys(p1, p2);
            for (int an = 0; an <= max_input; ++an)
              for (const auto& input : enumerate_functions(FinSet{an}, FinSet{xn})) {
                ++r.instances;
                auto lhs = extension_eval(cp.composite, input);
                auto rhs = extension_eval(p2, extension_eval(p1, input).out);
                if (fibers(lhs.out) != fibers(rhs.out))
                  detail::flag(r, nlohmann::json{{"x", xn}, {"y", yn}, {"z", zn}, {"input", an}});
              }
          }

  // the pinned arithmetic instance: (x |-> x + x^2) after (x |-> x^2) has
  // extension x^2 + x^4, with 20 elements at |x| = 2
  auto& r2 = report.add("poly.squared-sum-instance",
                        "x^2 + x^4 has twenty elements at a two-element input", "|x|=2");
  FinSet one{1};
  Polynomial p_sum(FinFunction::constant(FinSet{3}, one, 0), FinFunction(FinSet{3}, FinSet{2}, {0, 1, 1}),
                   FinFunction::constant(FinSet{2}, one, 0));
  Polynomial q_sq(FinFunction::constant(FinSet{2}, one, 0), FinFunction::constant(FinSet{2}, one, 0),
                  FinFunction::identity(one));
  auto cp = compose_polys(q_sq, p_sum);
  auto out = extension_eval(cp.composite, FinFunction::constant(FinSet{2}, one, 0));
  ++r2.instances;
  if (out.out.dom.size != 20)
    detail::flag(r2, nlohmann::json{{"expected", 20}, {"got", out.out.dom.size}});
}

}  // namespace gbc
