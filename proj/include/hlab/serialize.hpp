#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "hlab/cohomology.hpp"
#include "hlab/hankel.hpp"
#include "hlab/matrix.hpp"

namespace hlab {

using Json = nlohmann::json;  // std::map-backed, so object keys come out sorted

inline constexpr const char* kConventionsVersion = "hlab-conventions/1";

// Matrices: {"field", "rows", "cols", "entries": [[row, col, numerator, denominator], ...]}
// with entries sorted by (row, col). Numerators and denominators are decimal strings.
inline Json to_json(const ExactMatrix& m) {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t = m.triples();
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  Json entries = Json::array();
  for (const auto& [r, c, v] : t) entries.push_back({r, c, v.numerator().get_str(), v.denominator().get_str()});
  return {{"field", m.field().characteristic()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline ExactMatrix matrix_from_json(const Json& j) {
  Field f = Field::from_characteristic(j.at("field").get<std::uint64_t>());
  MatrixBuilder b(f, j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    mpq_class q(mpz_class(e.at(2).get<std::string>()), mpz_class(e.at(3).get<std::string>()));
    b.add(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), Scalar(f, q));
  }
  return b.build();
}

inline Json to_json(const BettiTable& b) {
  Json out = Json::array();
  for (const auto& [ij, v] : b.entries) out.push_back({ij.first, ij.second, v});
  return out;
}

inline BettiTable betti_from_json(const Json& j) {
  BettiTable b;
  for (const auto& e : j) b.set(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::int64_t>());
  return b;
}

inline Json to_json(const HilbertSeries& h) { return {{"numerator", h.numerator}, {"denom_power", h.denom_power}}; }

inline Json to_json(const CohomologyVector& h) {
  Json out = Json::object();
  for (const auto& [j, v] : h) out[std::to_string(j)] = v;
  return out;
}

// CSV: header "i,j,beta", one line per nonzero entry in (i, j) order.
inline std::string betti_to_csv(const BettiTable& b) {
  std::ostringstream os;
  os << "i,j,beta\n";
  for (const auto& [ij, v] : b.entries) os << ij.first << ',' << ij.second << ',' << v << '\n';
  return os.str();
}

inline BettiTable betti_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "i,j,beta") throw InvalidParameter("betti csv: expected header i,j,beta");
  BettiTable b;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, c, v;
    if (!std::getline(ls, a, ',') || !std::getline(ls, c, ',') || !std::getline(ls, v))
      throw InvalidParameter("betti csv: malformed line '" + line + "'");
    b.set(std::stoi(a), std::stoi(c), std::stoll(v));
  }
  return b;
}

// CSV for cohomology tables: "t,j,h", one line per nonzero h^j(t).
inline std::string cohomology_to_csv(const std::vector<CohTable>& tables) {
  std::ostringstream os;
  os << "t,j,h\n";
  for (const auto& c : tables)
    for (const auto& [j, v] : c.h) os << c.t << ',' << j << ',' << v << '\n';
  return os.str();
}

inline std::map<int, CohomologyVector> cohomology_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "t,j,h") throw InvalidParameter("cohomology csv: expected header t,j,h");
  std::map<int, CohomologyVector> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string t, j, h;
    if (!std::getline(ls, t, ',') || !std::getline(ls, j, ',') || !std::getline(ls, h))
      throw InvalidParameter("cohomology csv: malformed line '" + line + "'");
    out[std::stoi(t)][std::stoi(j)] = std::stoll(h);
  }
  return out;
}

}  // namespace hlab
