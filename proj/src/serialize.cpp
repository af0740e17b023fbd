#include "ladder/serialize.hpp"

#include <stdexcept>

namespace ladder {

namespace {

Scalar read_scalar(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw std::invalid_argument("coefficient must be a \"p/q\" string");
}

template <class T>
T read_index(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("missing integer field '") + key + "'");
  auto v = j.at(key).get<std::int64_t>();
  if constexpr (std::is_unsigned_v<T>) {
    if (v < 0) throw std::invalid_argument(std::string("field '") + key + "' must be non-negative");
  }
  return static_cast<T>(v);
}

const Json& array_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw std::invalid_argument(std::string("missing array field '") + key + "'");
  return j.at(key);
}

Json word_json(const Word& w, const Alphabet& alphabet) {
  Json out = Json::array();
  for (auto l : w.letters) out.push_back(alphabet.letter(l).name);
  return out;
}

Word word_from_json(const Json& j, const Alphabet& alphabet) {
  if (!j.is_array()) throw std::invalid_argument("word must be an array of letter names");
  Word w;
  for (const auto& name : j) {
    auto l = alphabet.find(name.get<std::string>());
    if (!l) throw std::invalid_argument("unknown letter '" + name.get<std::string>() + "'");
    w.letters.push_back(*l);
  }
  return w;
}

Json monomial_json(const Monomial& m) { return Json(m.factors); }

}  // namespace

Json to_json(const LieElement& e) {
  Json z = Json::array();
  for (const auto& [idx, c] : e.z) z.push_back({{"n", idx.n}, {"m", idx.m}, {"c", to_string(c)}});
  return Json{{"y", to_string(e.y)}, {"z", z}};
}

Json to_json(const GlElement& g) {
  Json terms = Json::array();
  for (const auto& [idx, c] : g.e) terms.push_back({{"i", idx.i}, {"j", idx.j}, {"c", to_string(c)}});
  return Json{{"e", terms}};
}

Json to_json(const CElement& c) {
  Json terms = Json::array();
  for (const auto& [d, coeff] : c.terms) terms.push_back({{"d", d}, {"c", to_string(coeff)}});
  return Json{{"terms", terms}};
}

Json to_json(const LadderPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p) terms.push_back({{"monomial", monomial_json(m)}, {"c", to_string(c)}});
  return Json{{"t", terms}};
}

Json to_json(const TensorPoly& t) {
  Json terms = Json::array();
  for (const auto& [legs, c] : t)
    terms.push_back({{"left", monomial_json(legs.first)}, {"right", monomial_json(legs.second)}, {"c", to_string(c)}});
  return Json{{"tensor", terms}};
}

Json to_json(const ExtElement& v) { return Json{{"xi", to_json(v.xi)}, {"x", to_json(v.x)}}; }

Json to_json(const WordLieElement& e, const Alphabet& alphabet) {
  Json terms = Json::array();
  for (const auto& [pair, c] : e)
    terms.push_back(
        {{"left", word_json(pair.first, alphabet)}, {"right", word_json(pair.second, alphabet)}, {"c", to_string(c)}});
  return Json{{"words", terms}};
}

Json to_json(const WordCombination& c, const Alphabet& alphabet) {
  Json out = Json::array();
  for (const auto& [w, coeff] : c)
    out.push_back({{"word", word_json(w, alphabet)}, {"c", to_string(coeff)}, {"alpha_order", alpha_order(alphabet, w)}});
  return out;
}

Json to_json(const DseExpansion& x, const Alphabet& alphabet) {
  Json c = Json::array(), d = Json::array();
  for (std::size_t j = 0; j < x.c.size(); ++j) c.push_back({{"alpha_order", j}, {"terms", to_json(x.c[j], alphabet)}});
  for (std::size_t j = 0; j < x.d.size(); ++j) d.push_back({{"letters", j}, {"terms", to_json(x.d[j], alphabet)}});
  return Json{{"order", x.order}, {"c", c}, {"d", d}};
}

Json to_json(const Alphabet& alphabet) {
  Json letters = Json::array();
  for (const auto& l : alphabet.letters())
    letters.push_back({{"name", l.name}, {"degree", l.degree}, {"sym", to_string(l.sym)}});
  return Json{{"letters", letters}};
}

Json to_json(const BettiTable& t) {
  return Json{{"betti", t.betti}, {"cochain_dims", t.cochain_dims}, {"ranks", t.ranks}};
}

Json to_json(const FiniteLieAlgebra& algebra) {
  Json brackets = Json::array();
  for (const auto& [key, value] : algebra.structure()) {
    Json terms = Json::array();
    for (const auto& [k, c] : value) terms.push_back({{"index", k}, {"c", to_string(c)}});
    brackets.push_back({{"left", key.first}, {"right", key.second}, {"terms", terms}});
  }
  return Json{{"labels", algebra.labels()}, {"brackets", brackets}};
}

Json to_json(const Infeasibility& cert) {
  Json y = Json::array();
  for (const auto& v : cert.certificate) y.push_back(to_string(v));
  return Json{{"certificate", y}};
}

LieElement lie_from_json(const Json& j) {
  LieElement e;
  for (const auto& t : array_field(j, "z")) e.z.add({read_index<std::uint32_t>(t, "n"), read_index<std::uint32_t>(t, "m")}, read_scalar(t.at("c")));
  if (j.contains("y")) e.y = read_scalar(j.at("y"));
  return e;
}

GlElement gl_from_json(const Json& j) {
  GlElement g;
  for (const auto& t : array_field(j, "e")) g.e.add({read_index<std::uint32_t>(t, "i"), read_index<std::uint32_t>(t, "j")}, read_scalar(t.at("c")));
  return g;
}

CElement c_from_json(const Json& j) {
  CElement c;
  for (const auto& t : array_field(j, "terms")) c.terms.add(read_index<std::int64_t>(t, "d"), read_scalar(t.at("c")));
  return c;
}

LadderPoly poly_from_json(const Json& j) {
  LadderPoly p;
  for (const auto& t : array_field(j, "t")) {
    std::vector<std::uint32_t> factors;
    for (const auto& k : t.at("monomial")) {
      if (!k.is_number_integer() || k.get<std::int64_t>() < 0) throw std::invalid_argument("monomial entries must be non-negative integers");
      factors.push_back(k.get<std::uint32_t>());
    }
    p.add(Monomial(std::move(factors)), read_scalar(t.at("c")));
  }
  return p;
}

Alphabet alphabet_from_json(const Json& j) {
  std::vector<Letter> letters;
  for (const auto& l : array_field(j, "letters")) {
    if (!l.contains("name") || !l.at("name").is_string()) throw std::invalid_argument("letter needs a string 'name'");
    auto degree = read_index<std::int64_t>(l, "degree");
    if (degree < 1) throw std::invalid_argument("letter degree must be >= 1");
    Scalar sym = l.contains("sym") ? read_scalar(l.at("sym")) : Scalar(1);
    letters.push_back({l.at("name").get<std::string>(), static_cast<std::uint32_t>(degree), sym});
  }
  return Alphabet(std::move(letters));
}

WordLieElement word_lie_from_json(const Json& j, const Alphabet& alphabet) {
  WordLieElement e;
  for (const auto& t : array_field(j, "words"))
    e.add({word_from_json(t.at("left"), alphabet), word_from_json(t.at("right"), alphabet)}, read_scalar(t.at("c")));
  return e;
}

FiniteLieAlgebra algebra_from_json(const Json& j) {
  std::vector<std::string> labels;
  for (const auto& l : array_field(j, "labels")) labels.push_back(l.get<std::string>());
  FiniteLieAlgebra::Structure structure;
  if (j.contains("brackets")) {
    for (const auto& b : array_field(j, "brackets")) {
      auto left = read_index<std::size_t>(b, "left");
      auto right = read_index<std::size_t>(b, "right");
      SparseVector<std::size_t> value;
      for (const auto& t : array_field(b, "terms")) value.add(read_index<std::size_t>(t, "index"), read_scalar(t.at("c")));
      // Accept either orientation; store with left < right.
      if (left > right) {
        std::swap(left, right);
        value *= Scalar(-1);
      } else if (left == right) {
        if (!value.empty()) throw std::invalid_argument("[x, x] must be zero");
        continue;
      }
      structure[{left, right}] += value;
    }
  }
  return FiniteLieAlgebra(std::move(labels), std::move(structure));
}

}  // namespace ladder
