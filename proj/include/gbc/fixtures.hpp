#pragma once

// JSON fixture formats: plain integer-sequence records for functions, spans,
// 2-cells, and polynomials; presheaf specifications for the convolution
// commands; and materialized constraint tables for the conversion commands.
// Parse errors name the offending field.

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gbc/coend.hpp"
#include "gbc/generated.hpp"
#include "gbc/oplax.hpp"
#include "gbc/poly.hpp"
#include "gbc/span_instance.hpp"

namespace gbc {

using nlohmann::json;

inline json to_json(const FinFunction& f) {
  return json{{"dom", f.dom.size}, {"cod", f.cod.size}, {"table", f.table}};
}
inline json to_json(const Span& s) { return json{{"left", to_json(s.left)}, {"right", to_json(s.right)}}; }
inline json to_json(const SpanMor& m) {
  return json{{"src", to_json(m.src)}, {"dst", to_json(m.dst)}, {"map", to_json(m.map)}};
}
inline json to_json(const Polynomial& p) {
  return json{{"s", to_json(p.s)}, {"p", to_json(p.p)}, {"t", to_json(p.t)}};
}
inline json to_json(const CartPolyMor& m) {
  return json{{"src", to_json(m.src)}, {"dst", to_json(m.dst)}, {"f", to_json(m.f)}, {"g", to_json(m.g)}};
}

namespace fixture {

inline const json& field(const json& j, const char* name, const std::string& context) {
  if (!j.is_object() || !j.contains(name))
    fail(errc::invalid_fixture, context + ": missing field '" + name + "'");
  return j.at(name);
}

inline FinFunction parse_fin_function(const json& j, const std::string& context) {
  try {
    return FinFunction(FinSet{field(j, "dom", context).get<int>()},
                       FinSet{field(j, "cod", context).get<int>()},
                       field(j, "table", context).get<std::vector<int>>());
  } catch (const json::exception& e) {
    fail(errc::invalid_fixture, context + ": " + e.what());
  } catch (const error& e) {
    if (e.kind() == errc::invalid_fixture) throw;
    fail(errc::invalid_fixture, context + ": " + e.what());
  }
}

inline Span parse_span(const json& j, const std::string& context) {
  return Span(parse_fin_function(field(j, "left", context), context + ".left"),
              parse_fin_function(field(j, "right", context), context + ".right"));
}

inline SpanMor parse_span_mor(const json& j, const std::string& context) {
  try {
    return SpanMor(parse_span(field(j, "src", context), context + ".src"),
                   parse_span(field(j, "dst", context), context + ".dst"),
                   parse_fin_function(field(j, "map", context), context + ".map"));
  } catch (const error& e) {
    if (e.kind() == errc::invalid_fixture) throw;
    fail(errc::invalid_fixture, context + ": " + e.what());
  }
}

inline Polynomial parse_polynomial(const json& j, const std::string& context) {
  try {
    return Polynomial(parse_fin_function(field(j, "s", context), context + ".s"),
                      parse_fin_function(field(j, "p", context), context + ".p"),
                      parse_fin_function(field(j, "t", context), context + ".t"));
  } catch (const error& e) {
    if (e.kind() == errc::invalid_fixture) throw;
    fail(errc::invalid_fixture, context + ": " + e.what());
  }
}

inline json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_fixture, "cannot open fixture file " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(errc::invalid_fixture, path + ": " + e.what());
  }
}

// presheaf specifications ---------------------------------------------------

inline TablePresheaf parse_span_presheaf(const json& j, const SpanHomCat& hc, const std::string& context) {
  std::string kind = field(j, "kind", context).get<std::string>();
  if (kind == "constant") return constant_presheaf(hc.cat, field(j, "size", context).get<int>());
  if (kind == "representable")
    return representable_presheaf(hc, parse_span(field(j, "at", context), context + ".at"));
  fail(errc::invalid_fixture, context + ": unknown presheaf kind '" + kind + "'");
}

inline TablePresheaf parse_species_presheaf(const json& j, const SpeciesSkeleton& sk,
                                            const std::string& context) {
  std::string kind = field(j, "kind", context).get<std::string>();
  if (kind == "constant") return constant_species(sk, field(j, "size", context).get<int>());
  if (kind == "sign") return sign_species(sk);
  if (kind == "representable") return representable_species(sk, field(j, "at", context).get<int>());
  fail(errc::invalid_fixture, context + ": unknown presheaf kind '" + kind + "'");
}

}  // namespace fixture

// ---------------------------------------------------------------------------
// materialized conversion tables over the span instance

// The local functor is named (the constraint data is what the conversion is
// about); constraint cells are stored as explicit tables.
inline OplaxFunctorData<SpanBicat, SpanBicat> named_span_functor(const SpanBicat& bb,
                                                                 const std::string& name, int w) {
  if (name == "identity") return identity_oplax(bb);
  if (name == "reversal") return reversal_oplax(bb);
  if (name == "product") return product_oplax(bb, FinSet{w});
  fail(errc::invalid_fixture, "unknown functor '" + name + "'");
}

struct SpanComonadicTables {
  int obj_bound = 0;
  int apex_bound = 0;
  std::string functor;
  int w = 2;
  std::vector<std::pair<GenericWitnessSpan, SpanMor>> comult;
  std::vector<std::pair<FinFunction, SpanMor>> counit;
};

// Comultiplication entries cover the class generics of every enumerated cell
// and of every pairwise composite, so binary constraints can be rebuilt.
inline SpanComonadicTables materialize_comonadic(const SpanBicat& bb, const std::string& functor, int w) {
  auto L = named_span_functor(bb, functor, w);
  auto d = oplax_to_comonadic(L, false);
  SpanComonadicTables t;
  t.obj_bound = bb.obj_bound;
  t.apex_bound = bb.apex_bound;
  t.functor = functor;
  t.w = w;
  std::vector<Span> domains;
  auto push_domain = [&](const Span& s) {
    for (const auto& d0 : domains)
      if (d0 == s) return;
    domains.push_back(s);
  };
  for (const auto& x : bb.objects())
    for (const auto& z : bb.objects())
      for (const auto& c : bb.one_cells(x, z)) push_domain(c);
  for (const auto& x : bb.objects())
    for (const auto& y : bb.objects())
      for (const auto& z : bb.objects())
        for (const auto& a : bb.one_cells(x, y))
          for (const auto& b : bb.one_cells(y, z)) push_domain(bb.hcomp(a, b));
  for (const auto& c : domains) {
    for (const auto& g : bb.class_generics(c)) t.comult.emplace_back(g, d.comult(g));
    for (const auto& e : bb.class_augmentations(c)) t.counit.emplace_back(e, d.counit(e));
  }
  return t;
}

inline json to_json(const SpanComonadicTables& t) {
  json comult = json::array();
  for (const auto& [g, cell] : t.comult)
    comult.push_back(json{{"base", to_json(g.base)}, {"h", to_json(g.h)}, {"cell", to_json(cell)}});
  json counit = json::array();
  for (const auto& [h, cell] : t.counit)
    counit.push_back(json{{"h", to_json(h)}, {"cell", to_json(cell)}});
  return json{{"schema", "gbc-comonadic/1"}, {"instance", "span"},
              {"obj_bound", t.obj_bound},   {"apex_bound", t.apex_bound},
              {"functor", t.functor},       {"w", t.w},
              {"comult", comult},           {"counit", counit}};
}

inline SpanComonadicTables parse_comonadic_tables(const json& j) {
  SpanComonadicTables t;
  t.obj_bound = fixture::field(j, "obj_bound", "comonadic").get<int>();
  t.apex_bound = fixture::field(j, "apex_bound", "comonadic").get<int>();
  t.functor = fixture::field(j, "functor", "comonadic").get<std::string>();
  t.w = j.value("w", 2);
  for (const auto& e : fixture::field(j, "comult", "comonadic")) {
    GenericWitnessSpan g(fixture::parse_span(fixture::field(e, "base", "comult"), "comult.base"),
                         fixture::parse_fin_function(fixture::field(e, "h", "comult"), "comult.h"));
    t.comult.emplace_back(g, fixture::parse_span_mor(fixture::field(e, "cell", "comult"), "comult.cell"));
  }
  for (const auto& e : fixture::field(j, "counit", "comonadic"))
    t.counit.emplace_back(fixture::parse_fin_function(fixture::field(e, "h", "counit"), "counit.h"),
                          fixture::parse_span_mor(fixture::field(e, "cell", "counit"), "counit.cell"));
  return t;
}

// function-backed comonadic data whose constraints look up the tables
inline ComonadicFunctorData<SpanBicat, SpanBicat> comonadic_from_tables(const SpanBicat& bb,
                                                                        const SpanComonadicTables& t) {
  auto L = named_span_functor(bb, t.functor, t.w);
  ComonadicFunctorData<SpanBicat, SpanBicat> d;
  d.src = bb;
  d.tgt = bb;
  d.obj = L.obj;
  d.one = L.one;
  d.two = L.two;
  auto comult = t.comult;
  auto counit = t.counit;
  d.comult = [comult](const GenericWitnessSpan& g) -> SpanMor {
    for (const auto& [key, cell] : comult)
      if (key == g) return cell;
    fail(errc::invalid_fixture, "comultiplication entry missing from the fixture tables");
  };
  d.counit = [counit](const FinFunction& h) -> SpanMor {
    for (const auto& [key, cell] : counit)
      if (key == h) return cell;
    fail(errc::invalid_fixture, "counit entry missing from the fixture tables");
  };
  return d;
}

struct SpanOplaxTables {
  int obj_bound = 0;
  int apex_bound = 0;
  std::string functor;
  int w = 2;
  std::vector<std::tuple<Span, Span, SpanMor>> phi;
  std::vector<std::pair<int, SpanMor>> lambda;  // object size -> cell
};

inline SpanOplaxTables materialize_oplax(const SpanBicat& bb, const OplaxFunctorData<SpanBicat, SpanBicat>& L,
                                         const std::string& functor, int w) {
  SpanOplaxTables t;
  t.obj_bound = bb.obj_bound;
  t.apex_bound = bb.apex_bound;
  t.functor = functor;
  t.w = w;
  for (const auto& x : bb.objects()) {
    t.lambda.emplace_back(x.size, L.lambda(x));
    for (const auto& y : bb.objects())
      for (const auto& z : bb.objects())
        for (const auto& a : bb.one_cells(x, y))
          for (const auto& b : bb.one_cells(y, z)) t.phi.emplace_back(a, b, L.phi(a, b));
  }
  return t;
}

inline json to_json(const SpanOplaxTables& t) {
  json phi = json::array();
  for (const auto& [a, b, cell] : t.phi)
    phi.push_back(json{{"a", to_json(a)}, {"b", to_json(b)}, {"cell", to_json(cell)}});
  json lambda = json::array();
  for (const auto& [x, cell] : t.lambda) lambda.push_back(json{{"object", x}, {"cell", to_json(cell)}});
  return json{{"schema", "gbc-oplax/1"}, {"instance", "span"},
              {"obj_bound", t.obj_bound}, {"apex_bound", t.apex_bound},
              {"functor", t.functor},     {"w", t.w},
              {"phi", phi},               {"lambda", lambda}};
}

inline SpanOplaxTables parse_oplax_tables(const json& j) {
  SpanOplaxTables t;
  t.obj_bound = fixture::field(j, "obj_bound", "oplax").get<int>();
  t.apex_bound = fixture::field(j, "apex_bound", "oplax").get<int>();
  t.functor = fixture::field(j, "functor", "oplax").get<std::string>();
  t.w = j.value("w", 2);
  for (const auto& e : fixture::field(j, "phi", "oplax"))
    t.phi.emplace_back(fixture::parse_span(fixture::field(e, "a", "phi"), "phi.a"),
                       fixture::parse_span(fixture::field(e, "b", "phi"), "phi.b"),
                       fixture::parse_span_mor(fixture::field(e, "cell", "phi"), "phi.cell"));
  for (const auto& e : fixture::field(j, "lambda", "oplax"))
    t.lambda.emplace_back(fixture::field(e, "object", "lambda").get<int>(),
                          fixture::parse_span_mor(fixture::field(e, "cell", "lambda"), "lambda.cell"));
  return t;
}

inline OplaxFunctorData<SpanBicat, SpanBicat> oplax_from_tables(const SpanBicat& bb,
                                                                const SpanOplaxTables& t) {
  auto base = named_span_functor(bb, t.functor, t.w);
  OplaxFunctorData<SpanBicat, SpanBicat> L;
  L.src = bb;
  L.tgt = bb;
  L.obj = base.obj;
  L.one = base.one;
  L.two = base.two;
  auto phi = t.phi;
  auto lambda = t.lambda;
  L.phi = [phi](const Span& a, const Span& b) -> SpanMor {
    for (const auto& [ka, kb, cell] : phi)
      if (ka == a && kb == b) return cell;
    fail(errc::invalid_fixture, "phi entry missing from the fixture tables");
  };
  L.lambda = [lambda](const FinSet& x) -> SpanMor {
    for (const auto& [kx, cell] : lambda)
      if (kx == x.size) return cell;
    fail(errc::invalid_fixture, "lambda entry missing from the fixture tables");
  };
  return L;
}

}  // namespace gbc
