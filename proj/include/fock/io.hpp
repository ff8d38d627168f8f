#pragma once

#include <string>

#include "json.hpp"

#include "fock/gallery.hpp"
#include "fock/hermite.hpp"
#include "fock/multiplier.hpp"
#include "fock/operator.hpp"
#include "fock/spectral.hpp"
#include "fock/symbol.hpp"

namespace fock {

using Json = nlohmann::ordered_json;

/// "%.17g": shortest form guaranteed to round-trip a double.
std::string format_double(double v);

Json complex_to_json(cplx v);
cplx complex_from_json(const Json& j);

/// {n, N, coeffs: [[re, im], ...]} in basis order.
Json to_json(const FockVector& f);
FockVector fock_vector_from_json(const Json& j);

/// {"kind":"named","name":...,params} | {"kind":"grid",...} | {"kind":"product",...}.
/// A bare string is read as a named multiplier without parameters.
Multiplier multiplier_from_json(const Json& j);
/// Parses text that is either a JSON document or a bare multiplier name.
Multiplier multiplier_from_text(const std::string& text);

/// {n, N, coeffs} or {closed_form: name, params}.
Symbol symbol_from_json(const Json& j);
Json symbol_to_json(const FockVector& coeffs);

/// {n, N, order, source, entries: row-major [[re, im], ...]}.
Json to_json(const OperatorMatrix& m);
OperatorMatrix matrix_from_json(const Json& j);

/// Raw little-endian interleaved re/im, row-major, plus a JSON sidecar at
/// `path + ".json"`.
void write_matrix_binary(const OperatorMatrix& m, const std::string& path);
OperatorMatrix read_matrix_binary(const std::string& path);

Json to_json(const SpectrumReport& r);
Json to_json(const Report& r);
Json to_json(const CompactnessReport& r);

/// Reads a whole file; throws ParameterError when it cannot be opened.
std::string read_text_file(const std::string& path);
Json read_json_file(const std::string& path);

}  // namespace fock
