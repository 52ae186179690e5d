#include "doctest.h"
#include "gbc/coend.hpp"

using namespace gbc;

namespace {

// a two-object category with one arrow between them (plus identities)
FiniteCategory arrow_category() {
  FiniteCategory c;
  c.n_objects = 2;
  c.mors = {{0, 0}, {1, 1}, {0, 1}};
  c.identity = {0, 1};
  c.comp = {{0, -1, 2}, {-1, 1, -1}, {-1, 2, -1}};
  c.validate();
  return c;
}

}  // namespace

TEST_CASE("coend: connected base collapses a constant functor to a point") {
  auto cat = arrow_category();
  TwoVarFunctor h;
  h.base = &cat;
  h.size = [](int, int) { return 1; };
  h.act_contra = [](int, int, int) { return 0; };
  h.act_cova = [](int, int, int) { return 0; };
  auto r = coend(h);
  CHECK(r.classes == 1);
}

TEST_CASE("coend: discrete base gives the plain disjoint sum") {
  FiniteCategory c;
  c.n_objects = 3;
  c.mors = {{0, 0}, {1, 1}, {2, 2}};
  c.identity = {0, 1, 2};
  c.comp = {{0, -1, -1}, {-1, 1, -1}, {-1, -1, 2}};
  c.validate();
  TwoVarFunctor h;
  h.base = &c;
  h.size = [](int a, int) { return a + 1; };
  h.act_contra = [](int, int, int x) { return x; };
  h.act_cova = [](int, int, int x) { return x; };
  auto r = coend(h);
  CHECK(r.classes == 1 + 2 + 3);
}

TEST_CASE("coend: canonical representatives are deterministic") {
  auto cat = arrow_category();
  TwoVarFunctor h;
  h.base = &cat;
  h.size = [](int, int) { return 2; };
  h.act_contra = [](int, int, int x) { return x; };
  h.act_cova = [](int, int, int x) { return x; };
  auto r1 = coend(h);
  auto r2 = coend(h);
  CHECK(r1.class_of == r2.class_of);
  // class ids appear in first-occurrence order
  int seen = 0;
  for (int cls : r1.class_of) {
    CHECK(cls <= seen);
    if (cls == seen) ++seen;
  }
}

TEST_CASE("co-Yoneda: Hom(l,-) weighted coend collapses to F(l)") {
  // over truncated span hom-categories at apex <= 2, for the generated
  // presheaf family
  for (int xs = 1; xs <= 2; ++xs) {
    auto hc = build_span_homcat(FinSet{xs}, FinSet{1}, 2);
    std::vector<TablePresheaf> family{constant_presheaf(hc.cat, 1), constant_presheaf(hc.cat, 2),
                                      representable_presheaf(hc, hc.objects.back())};
    for (int li = 0; li < hc.cat.n_objects; ++li)
      for (const auto& f : family) {
        // H(a-, a+) = Hom(l, a+) x F(a-)
        std::vector<std::vector<SpanMor>> homs;
        for (const auto& a : hc.objects)
          homs.push_back(span_two_cells(hc.objects[static_cast<std::size_t>(li)], a));
        TwoVarFunctor h;
        h.base = &hc.cat;
        h.size = [&](int a, int b) {
          return static_cast<int>(homs[static_cast<std::size_t>(b)].size()) *
                 f.sizes[static_cast<std::size_t>(a)];
        };
        // x encodes (gamma, u) with u fastest
        h.act_contra = [&](int m, int b, int x) {
          int fa = f.sizes[static_cast<std::size_t>(hc.cat.mors[static_cast<std::size_t>(m)].tgt)];
          int gamma = x / fa;
          int u = x % fa;
          int fa2 = f.sizes[static_cast<std::size_t>(hc.cat.mors[static_cast<std::size_t>(m)].src)];
          (void)b;
          return gamma * fa2 + f.act(m, u);
        };
        h.act_cova = [&](int m, int a, int x) {
          int fa = f.sizes[static_cast<std::size_t>(a)];
          int gamma = x / fa;
          int u = x % fa;
          int src_obj = hc.cat.mors[static_cast<std::size_t>(m)].src;
          SpanMor post = vcompose(homs[static_cast<std::size_t>(src_obj)][static_cast<std::size_t>(gamma)],
                                  hc.cells[static_cast<std::size_t>(m)]);
          int gi2 = -1;
          const auto& bucket = homs[static_cast<std::size_t>(hc.cat.mors[static_cast<std::size_t>(m)].tgt)];
          for (std::size_t k = 0; k < bucket.size(); ++k)
            if (bucket[k] == post) gi2 = static_cast<int>(k);
          return gi2 * fa + u;
        };
        auto r = coend(h);
        CHECK(r.classes == f.sizes[static_cast<std::size_t>(li)]);
      }
  }
}

TEST_CASE("day convolution of representables is a hom-set") {
  FinSet x{1}, y{2}, z{1}, t{2};
  auto left = build_span_homcat(x, y, 2);
  auto right = build_span_homcat(y, z, 2);
  FinFunction s = FinFunction::constant(t, x, 0);
  FinFunction h(t, y, {0, 1});
  FinFunction tt = FinFunction::constant(t, z, 0);
  Span lspan(s, h), rspan(h, tt);
  auto cs = compose_spans(lspan, rspan);

  auto f = representable_presheaf(left, lspan);
  auto g = representable_presheaf(right, rspan);
  auto day = day_convolve_bruteforce(left, right, f, g, cs.composite);
  CHECK(day.classes == static_cast<int>(span_two_cells(cs.composite, cs.composite).size()));
}

TEST_CASE("day convolution: species constant singletons count decompositions") {
  auto sk = build_species_skeleton(3);
  auto one = constant_species(sk, 1);
  auto day = day_convolve_bruteforce_species(sk, one, one, 2);
  CHECK(day.classes == 4);
  // and in general 2^n
  for (int n = 0; n <= 3; ++n)
    CHECK(day_convolve_bruteforce_species(sk, one, one, n).classes == (1 << n));
}

TEST_CASE("day convolution: empty support gives the empty coend") {
  FinSet x{1}, y{1};
  auto left = build_span_homcat(x, y, 1);
  auto right = build_span_homcat(y, x, 1);
  Span c = Span::identity(x);
  auto f = constant_presheaf(left.cat, 1);
  // G is the representable at the empty span: no 2-cell from any (h,t) with
  // a nonempty apex, and c's factorizations all have apex 1
  auto g = representable_presheaf(right, right.objects.front());
  REQUIRE(right.objects.front().apex().size == 0);
  auto day = day_convolve_bruteforce(left, right, f, g, c);
  CHECK(day.classes == 0);
}

TEST_CASE("reduced convolution: witness counts") {
  // apex 2, middle object of size 3, constant singletons: 9 summands
  FinSet x{1}, y{3}, z{1}, t{2};
  auto left = build_span_homcat(x, y, 2);
  auto right = build_span_homcat(y, z, 2);
  Span c(FinFunction::constant(t, x, 0), FinFunction::constant(t, z, 0));
  auto f = constant_presheaf(left.cat, 1);
  auto g = constant_presheaf(right.cat, 1);
  auto red = day_convolve_reduced(left, right, f, g, c);
  CHECK(red.elements.size() == 9);

  // species: n = 0 has exactly the empty decomposition
  auto sk = build_species_skeleton(2);
  auto one = constant_species(sk, 1);
  CHECK(day_convolve_reduced_species(sk, one, one, 0).elements.size() == 1);
}

TEST_CASE("verify_convolution_iso: span instances at small sizes") {
  for (int xs = 1; xs <= 2; ++xs)
    for (int ys = 1; ys <= 2; ++ys) {
      auto left = build_span_homcat(FinSet{xs}, FinSet{ys}, 1);
      auto right = build_span_homcat(FinSet{ys}, FinSet{xs}, 1);
      std::vector<TablePresheaf> lf{constant_presheaf(left.cat, 1),
                                    representable_presheaf(left, left.objects.back())};
      std::vector<TablePresheaf> rf{constant_presheaf(right.cat, 2),
                                    representable_presheaf(right, right.objects.front())};
      for (int ci = 0; ci < 2; ++ci) {
        Span c = ci == 0 ? Span(FinFunction::constant(FinSet{1}, FinSet{xs}, 0),
                                FinFunction::constant(FinSet{1}, FinSet{xs}, 0))
                         : Span(FinFunction(FinSet{0}, FinSet{xs}, {}),
                                FinFunction(FinSet{0}, FinSet{xs}, {}));
        for (const auto& f : lf)
          for (const auto& g : rf) {
            auto rep = verify_convolution_iso(left, right, f, g, c);
            CHECK(rep.bijective);
            CHECK(rep.reduced_count == rep.coend_count);
          }
      }
    }
}

TEST_CASE("verify_convolution_iso: species instances up to |c| = 3") {
  auto sk = build_species_skeleton(3);
  std::vector<TablePresheaf> family{constant_species(sk, 1), constant_species(sk, 2),
                                    sign_species(sk), representable_species(sk, 2)};
  for (int n = 0; n <= 3; ++n)
    for (const auto& f : family)
      for (const auto& g : family) {
        auto rep = verify_convolution_iso_species(sk, f, g, n);
        CHECK(rep.bijective);
      }
}

TEST_CASE("truncation stability: enlarging the bound never changes the coend") {
  FinSet x{1}, y{2}, z{1};
  Span c(FinFunction::constant(FinSet{1}, x, 0), FinFunction::constant(FinSet{1}, z, 0));
  auto l1 = build_span_homcat(x, y, 1);
  auto r1 = build_span_homcat(y, z, 1);
  auto l2 = build_span_homcat(x, y, 2);
  auto r2 = build_span_homcat(y, z, 2);
  // the same presheaf data restricted/extended: constants are stable
  auto day1 = day_convolve_bruteforce(l1, r1, constant_presheaf(l1.cat, 2), constant_presheaf(r1.cat, 1), c);
  auto day2 = day_convolve_bruteforce(l2, r2, constant_presheaf(l2.cat, 2), constant_presheaf(r2.cat, 1), c);
  CHECK(day1.classes == day2.classes);

  // too small a truncation is refused
  Span big(FinFunction::constant(FinSet{2}, x, 0), FinFunction::constant(FinSet{2}, z, 0));
  CHECK_THROWS_AS(day_convolve_bruteforce(l1, r1, constant_presheaf(l1.cat, 1),
                                          constant_presheaf(r1.cat, 1), big),
                  error);
}

TEST_CASE("species convolution is associative at small sizes") {
  auto sk = build_species_skeleton(3);
  auto one = constant_species(sk, 1);
  auto two = constant_species(sk, 2);
  // (one * two) * one vs one * (two * one) by cardinality at each n: compute
  // by the reduced formula, which the iso check ties to the coend
  auto conv_card = [&](const TablePresheaf& f, const TablePresheaf& g, int n) {
    return static_cast<long>(day_convolve_reduced_species(sk, f, g, n).elements.size());
  };
  // |((one*two)*one)[n]| vs |(one*(two*one))[n]|, expanding the outer sum
  // over decompositions of [n]
  for (int n = 0; n <= 3; ++n) {
    long left_assoc = 0, right_assoc = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
      int a = 0;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) ++a;
      left_assoc += conv_card(one, two, a) * 1;
      right_assoc += 1 * conv_card(two, one, n - a);
    }
    CHECK(left_assoc == right_assoc);
  }
}
