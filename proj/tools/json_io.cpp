#include "json_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>

namespace pht::cli {

namespace {

Complex complex_from_json(const Json& pair, const std::string& where) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
    throw InputError(where + ": expected a [re, im] pair of numbers");
  }
  const double re = pair[0].get<double>();
  const double im = pair[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) throw InputError(where + ": entry is not finite");
  return {re, im};
}

Eigen::Index dim_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("document must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw InputError("\"dim\" must be an integer");
  if (!doc.contains("entries") || !doc["entries"].is_array()) throw InputError("\"entries\" must be an array");
  const auto dim = doc["dim"].get<long long>();
  if (dim < 1) throw InputError("\"dim\" must be positive");
  if (doc["entries"].size() != static_cast<std::size_t>(dim)) {
    throw InputError("\"entries\" has " + std::to_string(doc["entries"].size()) + " rows, expected " +
                     std::to_string(dim));
  }
  return static_cast<Eigen::Index>(dim);
}

}  // namespace

Matrix matrix_from_json(const Json& doc) {
  const Eigen::Index dim = dim_from_json(doc);
  Matrix m(dim, dim);
  const Json& rows = doc["entries"];
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      throw InputError("row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    }
    for (Eigen::Index j = 0; j < dim; ++j) {
      m(i, j) = complex_from_json(row[static_cast<std::size_t>(j)],
                                  "entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  return m;
}

Json complex_to_json(Complex z) {
  return Json::array({z.real(), z.imag()});
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

Vector vector_from_json(const Json& doc) {
  const Eigen::Index dim = dim_from_json(doc);
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = complex_from_json(doc["entries"][static_cast<std::size_t>(i)], "entry " + std::to_string(i));
  }
  return v;
}

Json vector_to_json(const Vector& v) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) entries.push_back(complex_to_json(v(i)));
  return Json{{"dim", v.size()}, {"entries", std::move(entries)}};
}

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {  // parse errors and number overflow
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace pht::cli
