#pragma once

// Canonical finite sets {0,...,n-1}, functions between them, and the
// locally cartesian closed structure (pullbacks, dependent products)
// that every higher layer of the library is built on.  All values are
// immutable after construction and all operations are pure; canonical
// representatives are chosen deterministically so that equality of
// derived data is plain table equality.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gbc {

// ---------------------------------------------------------------------------
// errors

enum class errc {
  boundary_mismatch,
  invalid_table,
  invalid_cone,
  invalid_square,
  enumeration_too_large,
  missing_composite_structure,
  internal_consistency,
  law_violation,
  truncation_too_small,
  unsupported_instance,
  invalid_fixture,
};

inline const char* errc_name(errc k) {
  switch (k) {
    case errc::boundary_mismatch: return "boundary-mismatch";
    case errc::invalid_table: return "invalid-table";
    case errc::invalid_cone: return "invalid-cone";
    case errc::invalid_square: return "invalid-square";
    case errc::enumeration_too_large: return "enumeration-too-large";
    case errc::missing_composite_structure: return "missing-composite-structure";
    case errc::internal_consistency: return "internal-consistency";
    case errc::law_violation: return "law-violation";
    case errc::truncation_too_small: return "truncation-too-small";
    case errc::unsupported_instance: return "unsupported-instance";
    case errc::invalid_fixture: return "invalid-fixture";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& msg)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + msg), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw error(kind, msg); }

// Hard cap on enumerations so a mistyped bound fails fast instead of hanging.
inline constexpr std::size_t default_enumeration_cap = 1'000'000;

// ---------------------------------------------------------------------------
// FinSet / FinFunction

struct FinSet {
  int size = 0;

  friend auto operator<=>(const FinSet&, const FinSet&) = default;
};

inline FinSet finset(int n) {
  if (n < 0) fail(errc::invalid_table, "finite set with negative size");
  return FinSet{n};
}

struct FinFunction {
  FinSet dom;
  FinSet cod;
  std::vector<int> table;  // table[i] in [0, cod.size)

  FinFunction() = default;
  FinFunction(FinSet d, FinSet c, std::vector<int> t)
      : dom(d), cod(c), table(std::move(t)) {
    if (static_cast<int>(table.size()) != dom.size)
      fail(errc::invalid_table, "function table length differs from domain size");
    for (int v : table)
      if (v < 0 || v >= cod.size)
        fail(errc::invalid_table, "function table entry outside codomain");
  }

  static FinFunction identity(FinSet a) {
    std::vector<int> t(static_cast<std::size_t>(a.size));
    for (int i = 0; i < a.size; ++i) t[static_cast<std::size_t>(i)] = i;
    return FinFunction(a, a, std::move(t));
  }

  static FinFunction constant(FinSet d, FinSet c, int value) {
    if (value < 0 || value >= c.size) fail(errc::invalid_table, "constant outside codomain");
    return FinFunction(d, c, std::vector<int>(static_cast<std::size_t>(d.size), value));
  }

  int operator()(int i) const { return table[static_cast<std::size_t>(i)]; }

  bool is_identity() const {
    if (dom != cod) return false;
    for (int i = 0; i < dom.size; ++i)
      if (table[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  bool is_bijection() const {
    if (dom.size != cod.size) return false;
    std::vector<char> seen(static_cast<std::size_t>(cod.size), 0);
    for (int v : table) {
      if (seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
  }

  FinFunction inverse() const {
    if (!is_bijection()) fail(errc::internal_consistency, "inverse of a non-bijection");
    std::vector<int> t(static_cast<std::size_t>(cod.size));
    for (int i = 0; i < dom.size; ++i) t[static_cast<std::size_t>(table[static_cast<std::size_t>(i)])] = i;
    return FinFunction(cod, dom, std::move(t));
  }

  friend auto operator<=>(const FinFunction&, const FinFunction&) = default;
};

// Diagrammatic composition f;g.
inline FinFunction compose(const FinFunction& f, const FinFunction& g) {
  if (f.cod != g.dom) fail(errc::boundary_mismatch, "compose: f.cod differs from g.dom");
  std::vector<int> t(f.table.size());
  for (std::size_t i = 0; i < f.table.size(); ++i)
    t[i] = g.table[static_cast<std::size_t>(f.table[i])];
  return FinFunction(f.dom, g.cod, std::move(t));
}

// ---------------------------------------------------------------------------
// pullbacks

// Canonical pullback of a cospan f : A -> C <- B : g.  The apex is the set of
// pairs (i, j) with f(i) = g(j) in lexicographic order; this canonical choice
// is what makes 2-cell equality decidable higher up.
struct PullbackResult {
  FinSet apex;
  FinFunction proj1;  // apex -> f.dom
  FinFunction proj2;  // apex -> g.dom
  FinFunction f;      // retained cospan legs
  FinFunction g;
  std::vector<std::pair<int, int>> pairs;  // apex element -> (i, j)
  std::vector<int> index;                  // i * g.dom.size + j -> apex element or -1

  int pair_index(int i, int j) const {
    if (i < 0 || i >= f.dom.size || j < 0 || j >= g.dom.size) return -1;
    return index[static_cast<std::size_t>(i) * static_cast<std::size_t>(g.dom.size) +
                 static_cast<std::size_t>(j)];
  }
};

inline PullbackResult pullback(const FinFunction& f, const FinFunction& g) {
  if (f.cod != g.cod) fail(errc::boundary_mismatch, "pullback: cospan codomains differ");
  PullbackResult r;
  r.f = f;
  r.g = g;
  r.index.assign(static_cast<std::size_t>(f.dom.size) * static_cast<std::size_t>(g.dom.size), -1);
  std::vector<int> p1, p2;
  for (int i = 0; i < f.dom.size; ++i)
    for (int j = 0; j < g.dom.size; ++j)
      if (f(i) == g(j)) {
        r.index[static_cast<std::size_t>(i) * static_cast<std::size_t>(g.dom.size) +
                static_cast<std::size_t>(j)] = static_cast<int>(r.pairs.size());
        r.pairs.emplace_back(i, j);
        p1.push_back(i);
        p2.push_back(j);
      }
  r.apex = FinSet{static_cast<int>(r.pairs.size())};
  r.proj1 = FinFunction(r.apex, f.dom, std::move(p1));
  r.proj2 = FinFunction(r.apex, g.dom, std::move(p2));
  return r;
}

// Unique mediating map into a pullback apex from a commuting cone (c1, c2).
inline FinFunction mediate(const PullbackResult& pb, const FinFunction& c1, const FinFunction& c2) {
  if (c1.dom != c2.dom) fail(errc::boundary_mismatch, "mediate: cone legs have different domains");
  if (c1.cod != pb.f.dom || c2.cod != pb.g.dom)
    fail(errc::boundary_mismatch, "mediate: cone legs do not target the cospan feet");
  std::vector<int> t(static_cast<std::size_t>(c1.dom.size));
  for (int i = 0; i < c1.dom.size; ++i) {
    if (pb.f(c1(i)) != pb.g(c2(i))) fail(errc::invalid_cone, "mediate: cone does not commute");
    int k = pb.pair_index(c1(i), c2(i));
    if (k < 0) fail(errc::internal_consistency, "mediate: commuting pair missing from apex");
    t[static_cast<std::size_t>(i)] = k;
  }
  return FinFunction(c1.dom, pb.apex, std::move(t));
}

// Binary product as the pullback over the terminal set, so pairs come out in
// the same canonical lexicographic order used everywhere else.
inline PullbackResult product(FinSet a, FinSet b) {
  FinSet one{1};
  return pullback(FinFunction::constant(a, one, 0), FinFunction::constant(b, one, 0));
}

// ---------------------------------------------------------------------------
// enumeration helpers

// Product of candidate-list sizes, guarded by the cap.
inline std::size_t count_choices(const std::vector<std::vector<int>>& cand,
                                 std::size_t cap = default_enumeration_cap) {
  std::size_t total = 1;
  for (const auto& c : cand) {
    if (c.empty()) return 0;
    if (total > cap / c.size() + 1) fail(errc::enumeration_too_large, "choice space exceeds cap");
    total *= c.size();
    if (total > cap) fail(errc::enumeration_too_large, "choice space exceeds cap");
  }
  return total;
}

// Complete enumeration of one pick per position, lexicographic with the last
// position varying fastest.  Positions with empty candidate lists make the
// whole space empty; zero positions yield exactly one empty pick.
template <typename Fn>
inline void for_each_choice(const std::vector<std::vector<int>>& cand, Fn&& fn) {
  const std::size_t n = cand.size();
  for (const auto& c : cand)
    if (c.empty()) return;
  std::vector<std::size_t> pos(n, 0);
  std::vector<int> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = cand[i][0];
  while (true) {
    fn(static_cast<const std::vector<int>&>(pick));
    bool advanced = false;
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++pos[k] < cand[k].size()) {
        pick[k] = cand[k][pos[k]];
        advanced = true;
        break;
      }
      pos[k] = 0;
      pick[k] = cand[k][0];
    }
    if (!advanced) return;
  }
}

// All functions A -> B in lexicographic table order.
inline std::vector<FinFunction> enumerate_functions(FinSet a, FinSet b,
                                                    std::size_t cap = default_enumeration_cap) {
  if (a.size > 0 && b.size == 0) return {};
  std::vector<std::vector<int>> cand(static_cast<std::size_t>(a.size));
  std::vector<int> all(static_cast<std::size_t>(b.size));
  for (int j = 0; j < b.size; ++j) all[static_cast<std::size_t>(j)] = j;
  for (auto& c : cand) c = all;
  count_choices(cand, cap);
  std::vector<FinFunction> out;
  for_each_choice(cand, [&](const std::vector<int>& pick) { out.emplace_back(a, b, pick); });
  return out;
}

inline std::vector<FinFunction> enumerate_bijections(FinSet a, FinSet b) {
  std::vector<FinFunction> out;
  if (a.size != b.size) return out;
  std::vector<int> perm(static_cast<std::size_t>(a.size));
  for (int i = 0; i < a.size; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    out.emplace_back(a, b, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---------------------------------------------------------------------------
// dependent product (right adjoint to pullback along p)

// For p : E -> B and q : A -> E, the fiber of Pi_p(q) over b is the set of
// sections of q over p^-1(b).  Elements are ordered b-major and then
// lexicographically in the fiber enumeration order, so results are canonical.
struct DependentProduct {
  FinFunction map;                          // Pi_p(q) -> B
  std::vector<std::vector<int>> p_fibers;   // b -> elements of p^-1(b), ascending
  std::vector<int> elem_base;               // b -> index of b's first section
  std::vector<std::vector<int>> sections;   // element -> chosen a per fiber slot
};

inline DependentProduct dependent_product(const FinFunction& p, const FinFunction& q,
                                          std::size_t cap = default_enumeration_cap) {
  if (q.cod != p.dom) fail(errc::boundary_mismatch, "dependent_product: q.cod differs from p.dom");
  DependentProduct r;
  r.p_fibers.assign(static_cast<std::size_t>(p.cod.size), {});
  for (int e = 0; e < p.dom.size; ++e) r.p_fibers[static_cast<std::size_t>(p(e))].push_back(e);

  std::vector<std::vector<int>> q_fibers(static_cast<std::size_t>(q.cod.size));
  for (int a = 0; a < q.dom.size; ++a) q_fibers[static_cast<std::size_t>(q(a))].push_back(a);

  std::vector<int> map_table;
  for (int b = 0; b < p.cod.size; ++b) {
    r.elem_base.push_back(static_cast<int>(r.sections.size()));
    std::vector<std::vector<int>> cand;
    for (int e : r.p_fibers[static_cast<std::size_t>(b)]) cand.push_back(q_fibers[static_cast<std::size_t>(e)]);
    count_choices(cand, cap);
    for_each_choice(cand, [&](const std::vector<int>& pick) {
      r.sections.push_back(pick);
      map_table.push_back(b);
    });
    if (r.sections.size() > cap) fail(errc::enumeration_too_large, "dependent product exceeds cap");
  }
  r.map = FinFunction(FinSet{static_cast<int>(r.sections.size())}, p.cod, std::move(map_table));
  return r;
}

}  // namespace gbc
