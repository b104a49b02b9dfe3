#include "tpplab/serial.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tpplab {
namespace {

nlohmann::json subset_to_json(const Subset& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const GroupElement& e : s.elements()) arr.push_back(s.group().format(e));
  return arr;
}

Subset subset_from_json(const Group& g, const nlohmann::json& arr, const char* name) {
  if (!arr.is_array()) throw invalid_spec_error(std::string(name) + " must be an array");
  std::vector<GroupElement> elems;
  elems.reserve(arr.size());
  for (const auto& item : arr) elems.push_back(g.parse_element(item.get<std::string>()));
  return Subset(g, std::move(elems));
}

IndexTriple triple_from_json(const Group& g, const nlohmann::json& j) {
  return IndexTriple(subset_from_json(g, j.at("S"), "S"), subset_from_json(g, j.at("T"), "T"),
                     subset_from_json(g, j.at("U"), "U"));
}

nlohmann::json triple_body(const IndexTriple& t) {
  Tensor ten = t.tensor();
  return nlohmann::json{{"S", subset_to_json(t.s())},
                        {"T", subset_to_json(t.t())},
                        {"U", subset_to_json(t.u())},
                        {"tensor", {ten.n, ten.m, ten.p}}};
}

}  // namespace

nlohmann::json triple_to_json(const IndexTriple& t) {
  nlohmann::json j = triple_body(t);
  j["group"] = t.group().spec().to_string();
  return j;
}

nlohmann::json family_to_json(const TripleFamily& f) {
  nlohmann::json triples = nlohmann::json::array();
  for (const IndexTriple& t : f.triples()) triples.push_back(triple_body(t));
  return nlohmann::json{{"group", f.group().spec().to_string()}, {"triples", triples}};
}

TripleDocument triple_document_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("group"))
    throw invalid_spec_error("triple document needs a \"group\" field");
  Group g(GroupSpec::parse(j.at("group").get<std::string>()));
  if (j.contains("triples")) {
    std::vector<IndexTriple> triples;
    for (const auto& t : j.at("triples")) triples.push_back(triple_from_json(g, t));
    return TripleFamily(g, std::move(triples));
  }
  return triple_from_json(g, j);
}

nlohmann::json matrix_to_json(const ExactMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix exact_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw invalid_spec_error("matrix JSON must be an array of rows");
  std::size_t rows = j.size(), cols = j[0].size();
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw invalid_spec_error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = j[i][c].get<std::int64_t>();
  }
  return m;
}

ExactMatrix read_exact_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_spec_error("cannot open matrix file: " + path);
  // JSON if the first non-space character opens an array, CSV otherwise.
  char c = 0;
  while (in.get(c) && std::isspace(static_cast<unsigned char>(c))) {
  }
  in.unget();
  if (c == '[') {
    nlohmann::json j;
    in >> j;
    return exact_matrix_from_json(j);
  }
  std::vector<std::vector<std::int64_t>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    std::vector<std::int64_t> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stoll(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw invalid_spec_error("empty matrix file: " + path);
  ExactMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw invalid_spec_error("ragged CSV matrix: " + path);
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void write_exact_matrix_csv(std::ostream& out, const ExactMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
}

nlohmann::json make_envelope(const std::string& command, nlohmann::json params,
                             nlohmann::json results) {
  return nlohmann::json{{"tool_version", kToolVersion},
                        {"command", command},
                        {"params", std::move(params)},
                        {"results", std::move(results)}};
}

}  // namespace tpplab
