#include "ladder/ladder.h"

#include "ladder/cohomology.hpp"
#include "ladder/serialize.hpp"
#include "ladder/suite.hpp"
#include "ladder/text.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

struct ladder_element {
  ladder::ParsedElement value;
};

namespace {

using ladder::Json;

thread_local std::string last_error;

struct KindError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NullArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
ladder_status guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ladder::ParseError& e) {
    last_error = e.what();
    return LADDER_ERR_PARSE;
  } catch (const Json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return LADDER_ERR_PARSE;
  } catch (const KindError& e) {
    last_error = e.what();
    return LADDER_ERR_KIND;
  } catch (const NullArgument& e) {
    last_error = e.what();
    return LADDER_ERR_NULL;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return LADDER_ERR_INVALID;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return LADDER_ERR_DOMAIN;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return LADDER_ERR_INTERNAL;
  } catch (...) {
    last_error = "internal error";
    return LADDER_ERR_INTERNAL;
  }
}

template <class T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw NullArgument(std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ladder_element* wrap(ladder::ParsedElement v) { return new ladder_element{std::move(v)}; }

const char* kind_name(std::size_t index) {
  static const char* names[] = {"Lie", "gl", "quotient", "polynomial"};
  return names[index];
}

template <class T>
const T& as(const ladder_element* e, const char* role) {
  require(e, role);
  if (const T* v = std::get_if<T>(&e->value)) return *v;
  const std::size_t want = ladder::ParsedElement(T{}).index();
  throw KindError(std::string(role) + " must be a " + kind_name(want) + " element, got " + kind_name(e->value.index()));
}

bool is_zero(const ladder::ParsedElement& v) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ladder::LadderPoly>)
          return x.empty();
        else
          return x.is_zero();
      },
      v);
}

ladder::ParsedElement zero_of(ladder_kind kind) {
  switch (kind) {
    case LADDER_KIND_LIE: return ladder::LieElement{};
    case LADDER_KIND_GL: return ladder::GlElement{};
    case LADDER_KIND_C: return ladder::CElement{};
    case LADDER_KIND_POLY: return ladder::LadderPoly{};
  }
  throw std::invalid_argument("unknown element kind");
}

Json element_json(const ladder::ParsedElement& v) {
  return std::visit([](const auto& x) { return ladder::to_json(x); }, v);
}

Json report(const char* status, const std::string& summary, Json payload = nullptr, Json counterexample = nullptr) {
  Json r;
  r["schema"] = ladder::kSchemaVersion;
  r["status"] = status;
  r["summary"] = summary;
  r["payload"] = std::move(payload);
  r["counterexample"] = std::move(counterexample);
  return r;
}

ladder_status emit(const Json& r, char** out) {
  *out = copy_string(r.dump());
  return r["status"] == "fail" ? LADDER_FAIL : LADDER_OK;
}

ladder::Mutation mutation_named(const char* name) {
  if (name == nullptr || *name == '\0') return {};
  auto m = ladder::find_mutation(name);
  if (!m) throw std::invalid_argument(std::string("unknown mutation '") + name + "'");
  return *m;
}

ladder::Alphabet alphabet_from(const char* json) {
  require(json, "alphabet");
  return ladder::alphabet_from_json(Json::parse(json));
}

Json outcome_json(const std::string& name, bool passed, std::size_t cases, const std::string& counterexample) {
  Json j{{"name", name}, {"status", passed ? "pass" : "fail"}, {"cases", cases}};
  j["counterexample"] = passed ? Json(nullptr) : Json(counterexample);
  return j;
}

Json items_report(const std::string& what, const Json& items) {
  std::size_t failures = 0;
  Json first = nullptr;
  for (const auto& item : items)
    if (item["status"] == "fail") {
      if (failures++ == 0) first = item["name"].get<std::string>() + ": " + item["counterexample"].get<std::string>();
    }
  const std::string summary =
      failures == 0 ? what + ": all " + std::to_string(items.size()) + " checks passed"
                    : what + ": " + std::to_string(failures) + " of " + std::to_string(items.size()) + " checks failed";
  return report(failures == 0 ? "pass" : "fail", summary, Json{{"items", items}}, first);
}

std::string join_counts(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

extern "C" {

const char* ladder_version(void) { return "1.0.0"; }

const char* ladder_last_error(void) { return last_error.c_str(); }

const char* ladder_status_name(ladder_status status) {
  switch (status) {
    case LADDER_OK: return "ok";
    case LADDER_FAIL: return "verification failed";
    case LADDER_ERR_PARSE: return "parse error";
    case LADDER_ERR_INVALID: return "invalid argument";
    case LADDER_ERR_DOMAIN: return "domain error";
    case LADDER_ERR_NULL: return "null argument";
    case LADDER_ERR_KIND: return "wrong element kind";
    case LADDER_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ladder_string_free(char* s) { std::free(s); }

ladder_status ladder_parse(const char* text, ladder_element** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(ladder::parse_element(text));
    return LADDER_OK;
  });
}

ladder_status ladder_parse_kind(const char* text, ladder_kind kind, ladder_element** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    auto v = ladder::parse_element(text);
    if (v.index() != static_cast<std::size_t>(kind)) {
      if (!is_zero(v)) throw KindError(std::string("expected a ") + kind_name(kind) + " element");
      v = zero_of(kind);
    }
    *out = wrap(std::move(v));
    return LADDER_OK;
  });
}

ladder_status ladder_from_json(const char* json, ladder_kind kind, ladder_element** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    const auto j = Json::parse(json);
    switch (kind) {
      case LADDER_KIND_LIE: *out = wrap(ladder::lie_from_json(j)); break;
      case LADDER_KIND_GL: *out = wrap(ladder::gl_from_json(j)); break;
      case LADDER_KIND_C: *out = wrap(ladder::c_from_json(j)); break;
      case LADDER_KIND_POLY: *out = wrap(ladder::poly_from_json(j)); break;
      default: throw std::invalid_argument("unknown element kind");
    }
    return LADDER_OK;
  });
}

void ladder_element_free(ladder_element* e) { delete e; }

ladder_status ladder_element_kind(const ladder_element* e, ladder_kind* out) {
  return guard([&] {
    require(e, "element");
    require(out, "out");
    *out = static_cast<ladder_kind>(e->value.index());
    return LADDER_OK;
  });
}

ladder_status ladder_element_is_zero(const ladder_element* e, int* out) {
  return guard([&] {
    require(e, "element");
    require(out, "out");
    *out = is_zero(e->value) ? 1 : 0;
    return LADDER_OK;
  });
}

ladder_status ladder_element_equal(const ladder_element* a, const ladder_element* b, int* out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = a->value == b->value ? 1 : 0;
    return LADDER_OK;
  });
}

ladder_status ladder_to_text(const ladder_element* e, char** out) {
  return guard([&] {
    require(e, "element");
    require(out, "out");
    *out = copy_string(ladder::to_text(e->value));
    return LADDER_OK;
  });
}

ladder_status ladder_to_json(const ladder_element* e, char** out) {
  return guard([&] {
    require(e, "element");
    require(out, "out");
    *out = copy_string(element_json(e->value).dump());
    return LADDER_OK;
  });
}

ladder_status ladder_bracket(const ladder_element* a, const ladder_element* b, ladder_element** out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    if (a->value.index() != b->value.index()) throw KindError("bracket operands must be of the same kind");
    if (std::holds_alternative<ladder::LieElement>(a->value)) {
      *out = wrap(ladder::bracket(as<ladder::LieElement>(a, "a"), as<ladder::LieElement>(b, "b")));
    } else if (std::holds_alternative<ladder::GlElement>(a->value)) {
      *out = wrap(ladder::bracket_ee(as<ladder::GlElement>(a, "a"), as<ladder::GlElement>(b, "b")));
    } else if (std::holds_alternative<ladder::CElement>(a->value)) {
      *out = wrap(ladder::CElement{});
    } else {
      throw KindError("ladder polynomials carry no bracket");
    }
    return LADDER_OK;
  });
}

ladder_status ladder_degree(const ladder_element* e, int64_t* out, int* homogeneous) {
  return guard([&] {
    require(out, "out");
    require(homogeneous, "homogeneous");
    const auto d = ladder::degree(as<ladder::LieElement>(e, "element"));
    *homogeneous = d ? 1 : 0;
    if (d) *out = *d;
    return LADDER_OK;
  });
}

ladder_status ladder_decompose(uint32_t n, uint32_t m, char** out) {
  return guard([&] {
    require(out, "report");
    const auto dec = ladder::decompose_generator(n, m);
    const auto value = dec.evaluate();
    const bool ok = value == ladder::LieElement::generator(n, m);
    Json payload{{"formal", dec.formal()},
                 {"left", {{"n", dec.left.n}, {"m", dec.left.m}}},
                 {"right", {{"n", dec.right.n}, {"m", dec.right.m}}},
                 {"correction", ladder::to_json(dec.correction)},
                 {"value", ladder::to_text(value)}};
    const std::string target = "Z[" + std::to_string(n) + "," + std::to_string(m) + "]";
    return emit(ok ? report("value", target + " = " + dec.formal(), payload)
                   : report("fail", "decomposition of " + target + " evaluates to " + ladder::to_text(value), payload,
                            ladder::to_text(value)),
                out);
  });
}

ladder_status ladder_triangular_split(const ladder_element* e, ladder_element** plus, ladder_element** zero,
                                      ladder_element** minus) {
  return guard([&] {
    require(plus, "plus");
    require(zero, "zero");
    require(minus, "minus");
    auto parts = ladder::triangular_split(as<ladder::LieElement>(e, "element"));
    *plus = wrap(std::move(parts.plus));
    *zero = wrap(std::move(parts.zero));
    *minus = wrap(std::move(parts.minus));
    return LADDER_OK;
  });
}

ladder_status ladder_act(const ladder_element* lie, const ladder_element* poly, ladder_element** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(ladder::act(as<ladder::LieElement>(lie, "generator"), as<ladder::LadderPoly>(poly, "polynomial")));
    return LADDER_OK;
  });
}

ladder_status ladder_coproduct(const ladder_element* poly, char** out) {
  return guard([&] {
    require(out, "out");
    *out = copy_string(ladder::to_text(ladder::coproduct(as<ladder::LadderPoly>(poly, "polynomial"))));
    return LADDER_OK;
  });
}

ladder_status ladder_to_e(const ladder_element* lie, ladder_element** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    const auto& e = as<ladder::LieElement>(lie, "element");
    auto g = ladder::express_in_e(e);
    if (!g) {
      last_error = ladder::to_text(e) + " is not in gl_+";
      return LADDER_FAIL;
    }
    *out = wrap(std::move(*g));
    return LADDER_OK;
  });
}

ladder_status ladder_from_e(const ladder_element* gl, ladder_element** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(ladder::embed_to_z(as<ladder::GlElement>(gl, "element")));
    return LADDER_OK;
  });
}

ladder_status ladder_trace(const ladder_element* gl, char** out) {
  return guard([&] {
    require(out, "out");
    *out = copy_string(ladder::to_string(ladder::trace_functional(as<ladder::GlElement>(gl, "element"))));
    return LADDER_OK;
  });
}

ladder_status ladder_project(const ladder_element* lie, ladder_element** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(ladder::project_to_c(as<ladder::LieElement>(lie, "element")));
    return LADDER_OK;
  });
}

ladder_status ladder_section(const ladder_element* c, ladder_element** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(ladder::section_s(as<ladder::CElement>(c, "element")));
    return LADDER_OK;
  });
}

ladder_status ladder_extension_verify(uint32_t bound, const char* mutation, char** out) {
  return guard([&] {
    require(out, "report");
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    const auto m = mutation_named(mutation);
    Json items = Json::array();
    const auto cocycle = ladder::verify_cocycle_conditions(bound, m.extension);
    items.push_back(outcome_json("extension.cocycle", cocycle.passed, cocycle.cases, cocycle.counterexample));
    const auto alpha = ladder::verify_alpha_agreement(bound, m.bracket);
    items.push_back(outcome_json("extension.alpha_agreement", alpha.passed, alpha.cases, alpha.counterexample));
    const auto rebuilt = ladder::verify_reconstruction(bound, m.bracket, m.extension);
    items.push_back(outcome_json("extension.reconstruction", rebuilt.passed, rebuilt.cases, rebuilt.counterexample));
    return emit(items_report("extension at bound " + std::to_string(bound), items), out);
  });
}

ladder_status ladder_extension_obstruct(const ladder_element* b_plus, const ladder_element* b_minus, char** out) {
  return guard([&] {
    require(out, "report");
    const auto value =
        ladder::nonsplit_obstruction(as<ladder::GlElement>(b_plus, "b_plus"), as<ladder::GlElement>(b_minus, "b_minus"));
    Json payload{{"obstruction", ladder::to_json(value)}, {"text", ladder::to_text(value)}, {"vanishes", value.is_zero()}};
    std::string shown = ladder::to_text(value);
    if (const auto g = ladder::express_in_e(value)) {
      payload["in_e"] = ladder::to_json(*g);
      shown = ladder::to_text(*g);
    }
    return emit(report("value", "[(s+b)(C[1]), (s+b)(C[-1])] = " + shown, payload), out);
  });
}

ladder_status ladder_extension_infeasible(uint32_t top, char** out) {
  return guard([&] {
    require(out, "report");
    const auto sys = ladder::nonsplit_system(top);
    const auto cert = ladder::nonsplit_infeasibility(top);
    if (!cert)
      return emit(report("fail", "the splitting system with L = " + std::to_string(top) + " is solvable", nullptr,
                         "L = " + std::to_string(top)),
                  out);
    const bool verified = ladder::certifies_infeasible(sys.matrix, sys.rhs, cert->certificate);
    Json payload = ladder::to_json(*cert);
    payload["L"] = top;
    payload["verified"] = verified;
    const std::string summary = "no splitting up to E[" + std::to_string(top + 1) + "," + std::to_string(top + 1) +
                                "]; certificate " + (verified ? "verified" : "REJECTED");
    return emit(verified ? report("value", summary, payload) : report("fail", summary, payload, "certificate rejected"),
                out);
  });
}

ladder_status ladder_extension_grid(uint32_t support_bound, int32_t coeff_bound, char** out) {
  return guard([&] {
    require(out, "report");
    if (coeff_bound < 0) throw std::invalid_argument("coefficient bound must be >= 0");
    const auto g = ladder::obstruction_grid(support_bound, coeff_bound);
    Json payload{{"cases", g.cases}, {"vanishing", g.vanishing}};
    const std::string summary = std::to_string(g.cases) + " graded maps, " + std::to_string(g.vanishing) + " split";
    return emit(g.vanishing == 0 ? report("pass", summary, payload) : report("fail", summary, payload, g.first_vanishing),
                out);
  });
}

ladder_status ladder_words_bracket(const char* alphabet_json, const char* a, const char* b, char** out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "report");
    const auto alphabet = alphabet_from(alphabet_json);
    const auto value = ladder::bracket_words(ladder::parse_word_lie(a, alphabet), ladder::parse_word_lie(b, alphabet));
    auto payload = ladder::to_json(value, alphabet);
    payload["text"] = ladder::to_text(value, alphabet);
    return emit(report("value", ladder::to_text(value, alphabet), payload), out);
  });
}

ladder_status ladder_words_act(const char* alphabet_json, const char* generator, const char* word, char** out) {
  return guard([&] {
    require(generator, "generator");
    require(word, "word");
    require(out, "report");
    const auto alphabet = alphabet_from(alphabet_json);
    const auto g = ladder::parse_word_lie(generator, alphabet);
    const auto value = ladder::act_word(g, ladder::WordCombination::unit(ladder::parse_word(word, alphabet)));
    return emit(report("value", ladder::to_text(value, alphabet), ladder::to_json(value, alphabet)), out);
  });
}

ladder_status ladder_words_iota(const char* alphabet_json, uint32_t n, uint32_t m, char** out) {
  return guard([&] {
    require(out, "report");
    const auto alphabet = alphabet_from(alphabet_json);
    const auto value = ladder::iota_l(alphabet, n, m);
    return emit(report("value", ladder::to_text(value, alphabet), ladder::to_json(value, alphabet)), out);
  });
}

ladder_status ladder_words_iota_h(const char* alphabet_json, uint32_t k, char** out) {
  return guard([&] {
    require(out, "report");
    const auto alphabet = alphabet_from(alphabet_json);
    const auto value = ladder::iota_h(alphabet, k);
    return emit(report("value", ladder::to_text(value, alphabet), ladder::to_json(value, alphabet)), out);
  });
}

ladder_status ladder_words_check_iota(const char* alphabet_json, uint32_t n, uint32_t m, uint32_t k, char** out) {
  return guard([&] {
    require(out, "report");
    const auto alphabet = alphabet_from(alphabet_json);
    const auto rep = ladder::check_iota_compat(alphabet, n, m, k);
    Json payload{{"lhs", ladder::to_json(rep.lhs, alphabet)}, {"rhs", ladder::to_json(rep.rhs, alphabet)}};
    const std::string what = "iota compatibility for Z[" + std::to_string(n) + "," + std::to_string(m) + "] on t[" +
                             std::to_string(k) + "]";
    return emit(rep.passed ? report("pass", what + " holds", payload)
                           : report("fail", what + " fails", payload,
                                    ladder::to_text(rep.lhs, alphabet) + " vs " + ladder::to_text(rep.rhs, alphabet)),
                out);
  });
}

ladder_status ladder_dse_expand(const char* alphabet_json, uint32_t order, char** out) {
  return guard([&] {
    require(out, "report");
    const auto alphabet = alphabet_from(alphabet_json);
    const auto x = ladder::dse_expand(alphabet, order);
    std::vector<std::size_t> counts;
    for (const auto& c : x.c) counts.push_back(c.size());
    return emit(report("value", "words per alpha-order " + join_counts(counts), ladder::to_json(x, alphabet)), out);
  });
}

ladder_status ladder_cohomology_betti_gl(uint32_t n, char** out) {
  return guard([&] {
    require(out, "report");
    if (n < 1) throw std::invalid_argument("gl(n) needs n >= 1");
    if (n > 4) throw std::invalid_argument("gl(n) Betti tables are limited to n <= 4");
    const auto table = ladder::betti_numbers(ladder::truncate_gl(n));
    auto payload = ladder::to_json(table);
    payload["exterior_poincare"] = ladder::exterior_poincare(n);
    return emit(report("value", "gl(" + std::to_string(n) + ") Betti numbers " + join_counts(table.betti), payload), out);
  });
}

ladder_status ladder_cohomology_betti_json(const char* algebra_json, char** out) {
  return guard([&] {
    require(algebra_json, "algebra");
    require(out, "report");
    const auto algebra = ladder::algebra_from_json(Json::parse(algebra_json));
    if (algebra.dim() > 16) throw std::invalid_argument("algebras above dimension 16 are not supported");
    const auto table = ladder::betti_numbers(algebra);
    return emit(report("value", "Betti numbers " + join_counts(table.betti), ladder::to_json(table)), out);
  });
}

ladder_status ladder_cohomology_h1(uint32_t bound, int with_y, char** out) {
  return guard([&] {
    require(out, "report");
    const auto h1 = ladder::h1_degree_functional(bound, with_y != 0);
    Json payload{{"dimension", h1.dimension}, {"bound", h1.bound}, {"with_y", h1.with_y}, {"free_degrees", h1.free_degrees}};
    if (h1.with_y) payload["note"] = "the value on Y itself is not an unknown";
    return emit(report("value",
                       "dim H^1 on the window n,m <= " + std::to_string(bound) + (with_y ? " with Y" : "") + ": " +
                           std::to_string(h1.dimension),
                       payload),
                out);
  });
}

ladder_status ladder_cohomology_stability(uint32_t n, uint32_t p, char** out) {
  return guard([&] {
    require(out, "report");
    const auto s = ladder::stability_check(n, p);
    Json payload{{"n", n}, {"p", p}, {"applicable", s.applicable}, {"betti_n", s.betti_n}, {"betti_n_minus_1", s.betti_n_minus_1}};
    const std::string what = "b_" + std::to_string(p) + "(gl(" + std::to_string(n) + ")) = " + std::to_string(s.betti_n) +
                             ", b_" + std::to_string(p) + "(gl(" + std::to_string(n - 1) + ")) = " +
                             std::to_string(s.betti_n_minus_1);
    if (!s.applicable) return emit(report("value", what + " (p >= n, no stability claim)", payload), out);
    return emit(s.passed ? report("pass", what, payload) : report("fail", what, payload, what), out);
  });
}

ladder_status ladder_verify(uint32_t bound, const char* mutation, char** out) {
  return guard([&] {
    require(out, "report");
    const auto m = mutation_named(mutation);
    const auto suite = ladder::run_verify_suite(bound, m);
    Json items = Json::array();
    for (const auto& item : suite.items)
      items.push_back(outcome_json(item.name, item.passed, item.cases, item.counterexample));
    auto r = items_report("suite at bound " + std::to_string(bound) + " (mutation " + m.name + ")", items);
    r["payload"]["bound"] = bound;
    r["payload"]["mutation"] = m.name;
    return emit(r, out);
  });
}

ladder_status ladder_mutation_names(char** out) {
  return guard([&] {
    require(out, "out");
    Json names = Json::array();
    for (const auto& m : ladder::known_mutations()) names.push_back(m.name);
    *out = copy_string(names.dump());
    return LADDER_OK;
  });
}

}  // extern "C"
