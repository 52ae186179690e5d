#include "doctest.h"
#include "gbc/finset.hpp"

using namespace gbc;

TEST_CASE("compose: identity laws and direct tables") {
  FinSet three{3}, two{2};
  FinFunction id3 = FinFunction::identity(three);
  FinFunction g(three, two, {0, 1, 0});
  CHECK(compose(id3, g) == g);
  CHECK(compose(g, FinFunction::identity(two)) == g);

  FinFunction f(two, three, {1, 2});
  CHECK(compose(f, g) == FinFunction(two, two, {1, 0}));

  CHECK_THROWS_AS(compose(g, g), error);
}

TEST_CASE("compose: associativity, exhaustive on sets of size <= 3") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d)
          for (const auto& f : enumerate_functions(FinSet{a}, FinSet{b}))
            for (const auto& g : enumerate_functions(FinSet{b}, FinSet{c}))
              for (const auto& h : enumerate_functions(FinSet{c}, FinSet{d}))
                CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
}

TEST_CASE("pullback: canonical apexes") {
  FinSet one{1};
  // over the terminal set the pullback is the product
  auto pb = pullback(FinFunction::constant(FinSet{2}, one, 0), FinFunction::constant(FinSet{3}, one, 0));
  CHECK(pb.apex.size == 6);
  CHECK(pb.pairs.front() == std::pair<int, int>{0, 0});
  CHECK(pb.pairs.back() == std::pair<int, int>{1, 2});

  // pullback along an identity leg is (isomorphic to) the other domain
  FinFunction g(FinSet{3}, FinSet{2}, {0, 0, 1});
  auto pb2 = pullback(FinFunction::identity(FinSet{2}), g);
  CHECK(pb2.apex.size == 3);
  CHECK(pb2.proj2.is_bijection());

  // agreeing pairs under f = g with fibers of sizes 2 and 1
  auto pb3 = pullback(g, g);
  CHECK(pb3.apex.size == 5);

  CHECK_THROWS_AS(pullback(g, FinFunction::identity(FinSet{3})), error);
}

TEST_CASE("mediate: universal property") {
  FinFunction f(FinSet{3}, FinSet{2}, {0, 0, 1});
  auto pb = pullback(f, f);
  CHECK(mediate(pb, pb.proj1, pb.proj2) == FinFunction::identity(pb.apex));

  // cone from the terminal set picking a commuting pair
  FinSet one{1};
  FinFunction c1(one, FinSet{3}, {1});
  FinFunction c2(one, FinSet{3}, {0});
  CHECK(mediate(pb, c1, c2)(0) == pb.pair_index(1, 0));

  // non-commuting cone is rejected
  FinFunction d2(one, FinSet{3}, {2});
  CHECK_THROWS_AS(mediate(pb, c1, d2), error);
}

TEST_CASE("mediate: uniqueness by exhaustive search at sizes <= 3") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (const auto& f : enumerate_functions(FinSet{a}, FinSet{c}))
          for (const auto& g : enumerate_functions(FinSet{b}, FinSet{c})) {
            auto pb = pullback(f, g);
            for (int t = 0; t <= 2; ++t)
              for (const auto& c1 : enumerate_functions(FinSet{t}, FinSet{a}))
                for (const auto& c2 : enumerate_functions(FinSet{t}, FinSet{b})) {
                  bool commutes = true;
                  for (int i = 0; i < t && commutes; ++i) commutes = f(c1(i)) == g(c2(i));
                  if (!commutes) continue;
                  FinFunction u = mediate(pb, c1, c2);
                  CHECK(compose(u, pb.proj1) == c1);
                  CHECK(compose(u, pb.proj2) == c2);
                  int count = 0;
                  for (const auto& cand : enumerate_functions(FinSet{t}, pb.apex))
                    if (compose(cand, pb.proj1) == c1 && compose(cand, pb.proj2) == c2) ++count;
                  CHECK(count == 1);
                }
          }
}

TEST_CASE("dependent_product: section counts") {
  // p : E -> 1, q : A -> E; sections over the point = product of q-fibers
  FinSet one{1};
  FinFunction p(FinSet{2}, one, {0, 0});
  FinFunction q(FinSet{3}, FinSet{2}, {0, 0, 1});  // fibers of sizes 2 and 1
  auto dp = dependent_product(p, q);
  CHECK(dp.map.dom.size == 2 * 1);

  // empty fiber of p contributes exactly one (empty) section
  FinFunction p2(FinSet{0}, one, {});
  FinFunction q2(FinSet{0}, FinSet{0}, {});
  auto dp2 = dependent_product(p2, q2);
  CHECK(dp2.map.dom.size == 1);

  CHECK_THROWS_AS(dependent_product(p, FinFunction::identity(FinSet{3})), error);
}

namespace {

// number of slice morphisms  (a : A -> B)  ->  (b : C -> B)  over B
int count_slice_homs(const FinFunction& a, const FinFunction& b) {
  int n = 0;
  for (const auto& m : enumerate_functions(a.dom, b.dom))
    if (compose(m, b) == a) ++n;
  return n;
}

}  // namespace

TEST_CASE("dependent_product: adjunction cardinality at sizes <= 2") {
  // |Hom_/E(Delta_p x, q)| = |Hom_/B(x, Pi_p q)| for p : E -> B
  for (int e = 0; e <= 2; ++e)
    for (int b = 0; b <= 2; ++b)
      for (const auto& p : enumerate_functions(FinSet{e}, FinSet{b}))
        for (int aa = 0; aa <= 2; ++aa)
          for (const auto& q : enumerate_functions(FinSet{aa}, FinSet{e}))
            for (int xx = 0; xx <= 2; ++xx)
              for (const auto& x : enumerate_functions(FinSet{xx}, FinSet{b})) {
                auto dp = dependent_product(p, q);
                auto delta_px = pullback(x, p);  // Delta_p x as object over E via proj2
                FinFunction pulled(delta_px.apex, FinSet{e}, delta_px.proj2.table);
                CHECK(count_slice_homs(pulled, q) == count_slice_homs(x, dp.map));
              }
}

TEST_CASE("enumerate_functions: counts, order, cap") {
  CHECK(enumerate_functions(FinSet{2}, FinSet{3}).size() == 9);
  CHECK(enumerate_functions(FinSet{2}, FinSet{0}).empty());
  CHECK(enumerate_functions(FinSet{0}, FinSet{0}).size() == 1);
  auto fs = enumerate_functions(FinSet{2}, FinSet{2});
  CHECK(fs.front().table == std::vector<int>{0, 0});
  CHECK(fs[1].table == std::vector<int>{0, 1});
  CHECK(fs.back().table == std::vector<int>{1, 1});
  CHECK_THROWS_AS(enumerate_functions(FinSet{30}, FinSet{30}, 1000), error);
}

TEST_CASE("determinism: repeated construction gives bit-equal tables") {
  FinFunction f(FinSet{3}, FinSet{2}, {0, 0, 1});
  auto pb1 = pullback(f, f);
  auto pb2 = pullback(f, f);
  CHECK(pb1.proj1 == pb2.proj1);
  CHECK(pb1.proj2 == pb2.proj2);
  CHECK(pb1.pairs == pb2.pairs);
}
