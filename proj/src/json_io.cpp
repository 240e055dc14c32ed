#include "vecint/json_io.hpp"

#include <fstream>
#include <sstream>

namespace vecint {

using nlohmann::json;

json array_to_json(const VectorArray& array) {
  json node;
  node["n"] = array.n();
  node["D"] = array.dim();
  node["alphabet"] = array.alphabet();
  std::vector<double> scaling(array.scaling().data(),
                              array.scaling().data() + array.scaling().size());
  node["scaling"] = scaling;
  json vectors = json::object();
  for (int i = 0; i < array.n(); ++i)
    for (int j = 0; j < array.num_letters(); ++j) {
      const IntVec& v = array.entry(i, j);
      std::vector<long long> values(v.data(), v.data() + v.size());
      vectors[std::to_string(i + 1) + "," + array.alphabet()[j]] = values;
    }
  node["vectors"] = vectors;
  return node;
}

VectorArray array_from_json(const json& node) {
  if (node.contains("kind")) {
    std::string kind = node.at("kind").get<std::string>();
    if (kind == "kalai") return kalai_array(node.at("n").get<int>());
    throw std::invalid_argument("unknown array kind: " + kind);
  }
  int n = node.at("n").get<int>();
  int dim = node.at("D").get<int>();
  std::vector<std::string> alphabet = node.at("alphabet").get<std::vector<std::string>>();
  std::vector<double> scaling_values = node.at("scaling").get<std::vector<double>>();
  if (static_cast<int>(scaling_values.size()) != dim)
    throw std::invalid_argument("array json: scaling size != D");
  Vec scaling(dim);
  for (int d = 0; d < dim; ++d) scaling[d] = scaling_values[d];

  std::vector<std::vector<IntVec>> entries(n,
                                           std::vector<IntVec>(alphabet.size(), IntVec()));
  std::vector<std::vector<char>> seen(n, std::vector<char>(alphabet.size(), 0));
  for (const auto& [key, value] : node.at("vectors").items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("array json: bad vector key " + key);
    int i = std::stoi(key.substr(0, comma)) - 1;
    std::string label = key.substr(comma + 1);
    if (i < 0 || i >= n) throw std::invalid_argument("array json: coordinate out of range");
    int j = -1;
    for (std::size_t idx = 0; idx < alphabet.size(); ++idx)
      if (alphabet[idx] == label) j = static_cast<int>(idx);
    if (j < 0) throw std::invalid_argument("array json: unknown letter " + label);
    std::vector<long long> values = value.get<std::vector<long long>>();
    if (static_cast<int>(values.size()) != dim)
      throw std::invalid_argument("array json: vector dimension != D");
    IntVec v(dim);
    for (int d = 0; d < dim; ++d) v[d] = values[d];
    entries[i][j] = v;
    seen[i][j] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (std::size_t j = 0; j < alphabet.size(); ++j)
      if (!seen[i][j])
        throw std::invalid_argument("array json: missing vector for coordinate " +
                                    std::to_string(i + 1) + ", letter " + alphabet[j]);
  return VectorArray(n, std::move(alphabet), dim, std::move(entries), std::move(scaling));
}

VectorArray load_array(const std::string& spec) {
  if (spec.rfind("kalai:", 0) == 0) return kalai_array(std::stoi(spec.substr(6)));
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open array file: " + spec);
  json node;
  in >> node;
  return array_from_json(node);
}

json measure_to_json(const ProductMeasure& mu) {
  json rows = json::array();
  for (int i = 0; i < mu.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < mu.num_letters(); ++j) row.push_back(mu.p(i, j));
    rows.push_back(row);
  }
  return json{{"p", rows}};
}

ProductMeasure measure_from_json(const json& node) {
  const json& rows = node.contains("p") ? node.at("p") : node;
  int n = static_cast<int>(rows.size());
  if (n == 0) throw std::invalid_argument("measure json: empty");
  int letters = static_cast<int>(rows.at(0).size());
  Mat p(n, letters);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < letters; ++j) p(i, j) = rows.at(i).at(j).get<double>();
  return ProductMeasure(std::move(p));
}

json pair_measure_to_json(const PairMeasure& mu) {
  json rows = json::array();
  for (int i = 0; i < mu.n(); ++i) {
    json row = json::array();
    for (int a = 0; a < mu.num_letters1(); ++a)
      for (int b = 0; b < mu.num_letters2(); ++b) row.push_back(mu.q(i, a, b));
    rows.push_back(row);
  }
  return json{{"q", rows}, {"J1", mu.num_letters1()}, {"J2", mu.num_letters2()}};
}

IntVec parse_int_vector(const std::string& text) {
  std::vector<long long> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(std::stoll(item));
  IntVec v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<int>(i)] = values[i];
  return v;
}

Vec parse_real_vector(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(std::stod(item));
  Vec v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<int>(i)] = values[i];
  return v;
}

}  // namespace vecint
