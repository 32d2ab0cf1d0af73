#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pht/spectral.hpp"

namespace pht::cli {

using Json = nlohmann::ordered_json;

/// Malformed user input: bad JSON, wrong shape, non-numeric entries.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// {"dim": D, "entries": [[[re, im], ...], ...]}
Matrix matrix_from_json(const Json& doc);
Json matrix_to_json(const Matrix& m);

/// {"dim": D, "entries": [[re, im], ...]}
Vector vector_from_json(const Json& doc);
Json vector_to_json(const Vector& v);

Json complex_to_json(Complex z);

/// Reads and parses a JSON file; "-" reads standard input.
Json read_json_file(const std::string& path);

}  // namespace pht::cli
