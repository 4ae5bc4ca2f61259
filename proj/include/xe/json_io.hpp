#ifndef XE_JSON_IO_HPP
#define XE_JSON_IO_HPP

#include "xe/beilinson.hpp"

#include <json.hpp>

#include <limits>
#include <string>

namespace xe {

using json = nlohmann::json;

/// Integers that fit in int64 are numbers, larger ones decimal strings.
inline json to_json_int(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Integer int_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline long long_from_json(const json& j) {
  const Integer v = int_from_json(j);
  if (v < std::numeric_limits<long>::min() || v > std::numeric_limits<long>::max())
    throw std::out_of_range("integer out of range: " + v.str());
  return static_cast<long>(v);
}

// ChowClass -----------------------------------------------------------------

inline const char* const kChowKeys[6] = {"1", "xi", "f", "xif", "ff", "pt"};

inline json to_json(const ChowClass& x) {
  json c = json::object();
  for (int k = 0; k < 6; ++k) c[kChowKeys[k]] = to_json_int(x[static_cast<ChowClass::Basis>(k)]);
  return {{"e", x.e()}, {"coeffs", c}};
}

inline ChowClass chow_from_json(const json& j) {
  ChowClass x(long_from_json(j.at("e")));
  const auto& c = j.at("coeffs");
  for (int k = 0; k < 6; ++k)
    if (c.contains(kChowKeys[k])) x[static_cast<ChowClass::Basis>(k)] = int_from_json(c.at(kChowKeys[k]));
  return x;
}

inline json to_json(const ChernData& d) {
  return {{"rank", d.rank}, {"c1", to_json(d.c1)}, {"c2", to_json(d.c2)}, {"c3", to_json(d.c3)}};
}

inline ChernData chern_from_json(const json& j) {
  return ChernData(long_from_json(j.at("rank")), chow_from_json(j.at("c1")), chow_from_json(j.at("c2")),
                   chow_from_json(j.at("c3")));
}

// Sheaves --------------------------------------------------------------------

inline json to_json(const Summand& s) {
  return {{"kind", s.is_line() ? "line" : "omega"}, {"a", s.a}, {"b", s.b}};
}

inline Summand summand_from_json(const json& j) {
  const std::string k = j.at("kind").get<std::string>();
  if (k != "line" && k != "omega") throw std::invalid_argument("unknown summand kind: " + k);
  return {k == "line" ? Summand::Kind::Line : Summand::Kind::Omega, long_from_json(j.at("a")),
          long_from_json(j.at("b"))};
}

inline json terms_to_json(const FormalSheaf& F) {
  json t = json::array();
  for (const auto& x : F.terms()) {
    json s = to_json(x.summand);
    s["mult"] = to_json_int(x.mult);
    t.push_back(s);
  }
  return t;
}

inline FormalSheaf terms_from_json(long e, const json& t) {
  FormalSheaf F(e);
  for (const auto& x : t) {
    const Integer m = int_from_json(x.at("mult"));
    if (m <= 0) throw std::invalid_argument("multiplicities must be positive");
    F.add(summand_from_json(x), m);
  }
  return F;
}

inline json to_json(const FormalSheaf& F) { return {{"e", F.e()}, {"terms", terms_to_json(F)}}; }

inline FormalSheaf sheaf_from_json(const json& j) { return terms_from_json(long_from_json(j.at("e")), j.at("terms")); }

inline json to_json(const CohVector& v) {
  json h = json::array();
  for (int i = 0; i < 4; ++i) h.push_back(to_json_int(v[i]));
  return {{"h", h}, {"chi", to_json_int(v.chi())}};
}

inline CohVector coh_from_json(const json& j) {
  CohVector v;
  for (int i = 0; i < 4; ++i) v[i] = int_from_json(j.at("h").at(i));
  return v;
}

// Monads ---------------------------------------------------------------------

inline json to_json(const Monad& m, const MonadChecks& c) {
  json j = {{"e", m.e},          {"alpha", m.alpha},         {"beta", m.beta},
            {"variant", m.variant}, {"A", terms_to_json(m.A)}, {"B", terms_to_json(m.B)},
            {"C", terms_to_json(m.C)}};
  if (m.C1) j["C1"] = terms_to_json(*m.C1);
  if (m.extra)
    j["extra"] = {{"gamma", to_json_int((*m.extra)[0])},
                  {"delta", to_json_int((*m.extra)[1])},
                  {"eta", to_json_int((*m.extra)[2])}};
  j["checks"] = {{"rank", c.rank}, {"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}, {"chi", c.chi}};
  return j;
}

inline json to_json(const Monad& m) { return to_json(m, monad_consistency(m)); }

inline Monad monad_from_json(const json& j) {
  Monad m;
  m.e = long_from_json(j.at("e"));
  m.alpha = long_from_json(j.at("alpha"));
  m.beta = long_from_json(j.at("beta"));
  m.variant = static_cast<int>(long_from_json(j.at("variant")));
  m.A = terms_from_json(m.e, j.at("A"));
  m.B = terms_from_json(m.e, j.at("B"));
  m.C = terms_from_json(m.e, j.at("C"));
  if (j.contains("C1")) m.C1 = terms_from_json(m.e, j.at("C1"));
  if (j.contains("extra")) {
    const auto& x = j.at("extra");
    m.extra = std::array<Integer, 3>{int_from_json(x.at("gamma")), int_from_json(x.at("delta")),
                                     int_from_json(x.at("eta"))};
  }
  return m;
}

// Existence ------------------------------------------------------------------

inline json to_json(const ExistenceReport& r) {
  json j = {{"status", to_string(r.status)}, {"route", r.route}};
  if (r.ext1) j["ext1"] = to_json_int(*r.ext1);
  if (r.ext2) j["ext2"] = to_json_int(*r.ext2);
  if (r.ext3) j["ext3"] = to_json_int(*r.ext3);
  if (r.earnest) j["earnest"] = *r.earnest;
  if (r.moduli_dim) j["moduli_dim"] = to_json_int(*r.moduli_dim);
  return j;
}

inline ExistenceStatus status_from_string(const std::string& s) {
  if (s == "exists") return ExistenceStatus::Exists;
  if (s == "exists_pullback") return ExistenceStatus::ExistsPullback;
  if (s == "inadmissible") return ExistenceStatus::Inadmissible;
  if (s == "unknown") return ExistenceStatus::Unknown;
  throw std::invalid_argument("unknown existence status: " + s);
}

inline ExistenceReport existence_from_json(const json& j) {
  ExistenceReport r;
  r.status = status_from_string(j.at("status").get<std::string>());
  r.route = j.at("route").get<std::string>();
  if (j.contains("ext1")) r.ext1 = int_from_json(j.at("ext1"));
  if (j.contains("ext2")) r.ext2 = int_from_json(j.at("ext2"));
  if (j.contains("ext3")) r.ext3 = int_from_json(j.at("ext3"));
  if (j.contains("earnest")) r.earnest = j.at("earnest").get<bool>();
  if (j.contains("moduli_dim")) r.moduli_dim = int_from_json(j.at("moduli_dim"));
  return r;
}

// Tables ---------------------------------------------------------------------

inline json to_json(const Cell& c) {
  static const char* kinds[] = {"star", "value", "zero", "symbol"};
  json j = {{"kind", kinds[static_cast<int>(c.kind)]}};
  if (c.kind == Cell::Kind::Star) return j;
  j["degree"] = c.degree;
  if (c.kind == Cell::Kind::Value || c.kind == Cell::Kind::Symbol) j["value"] = to_json_int(c.value);
  if (!c.symbol.empty()) j["symbol"] = c.symbol;
  if (!c.tag.empty()) j["tag"] = c.tag;
  return j;
}

inline json to_json(const BeilinsonTable& t) {
  json cols = json::array();
  for (int c = 0; c < 6; ++c) {
    const int j = BeilinsonTable::j_of_col(c);
    cols.push_back({{"index", j},
                    {"E", to_json(t.E.objects[j].sheaf)},
                    {"shift", t.E.objects[j].shift},
                    {"F", to_json(t.F.objects[j].sheaf)}});
  }
  json rows = json::array();
  for (int r = 0; r < 6; ++r) {
    json row = json::array();
    for (int c = 0; c < 6; ++c) row.push_back(to_json(t.cells[r][c]));
    rows.push_back({{"q", BeilinsonTable::q_of_row(r)}, {"cells", row}});
  }
  return {{"e", t.e},         {"alpha", t.alpha}, {"beta", t.beta}, {"variant", t.variant},
          {"gamma_zero", t.gamma_zero}, {"columns", cols}, {"rows", rows}};
}

}  // namespace xe

#endif  // XE_JSON_IO_HPP
