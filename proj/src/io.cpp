#include "fock/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "detail.hpp"

namespace fock {
namespace {

// Every parse error surfaces as ParameterError so the CLI can map it to exit 2.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string(what) + ": " + e.what());
  }
}

const Json& require(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw ParameterError(std::string(what) + ": missing field '" + key + "'");
  return j.at(key);
}

double bound_from_json(const Json& v, double infinity) {
  if (v.is_null()) return infinity;
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw ParameterError("box bound: expected a number, null, \"inf\" or \"-inf\"");
  }
  return v.get<double>();
}

Box box_from_json(const Json& j) {
  Box b;
  const double inf = std::numeric_limits<double>::infinity();
  for (const Json& v : require(j, "lo", "box")) b.lo.push_back(bound_from_json(v, -inf));
  for (const Json& v : require(j, "hi", "box")) b.hi.push_back(bound_from_json(v, inf));
  return b;
}

NamedParams params_from_json(const Json& j) {
  NamedParams p;
  if (j.contains("a")) p.a = j.at("a").get<double>();
  if (j.contains("c0") && !j.at("c0").is_null()) p.c0 = j.at("c0").get<double>();
  if (j.contains("j")) p.j = j.at("j").get<int>();
  if (j.contains("n")) p.n = j.at("n").get<int>();
  if (j.contains("k")) p.k = j.at("k").get<int>();
  if (j.contains("value")) {
    const Json& v = j.at("value");
    p.value = v.is_array() ? complex_from_json(v) : cplx(v.get<double>());
  }
  if (j.contains("boxes")) {
    for (const Json& b : j.at("boxes")) p.boxes.push_back(box_from_json(b));
  }
  return p;
}

// Parameters may sit at the top level or inside a "params" object.
NamedParams named_params(const Json& j) {
  NamedParams p = params_from_json(j);
  if (j.contains("params")) {
    Json merged = j.at("params");
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() != "params" && !merged.contains(it.key())) merged[it.key()] = it.value();
    }
    p = params_from_json(merged);
  }
  return p;
}

Json complex_list(const std::vector<cplx>& vs) {
  Json out = Json::array();
  for (const cplx& v : vs) out.push_back(complex_to_json(v));
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json complex_to_json(cplx v) { return Json::array({v.real(), v.imag()}); }

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ParameterError("complex value: expected [re, im]");
  return guarded("complex value", [&] { return cplx(j[0].get<double>(), j[1].get<double>()); });
}

Json to_json(const FockVector& f) {
  Json out;
  out["n"] = f.basis.n();
  out["N"] = f.basis.max_degree();
  Json coeffs = Json::array();
  for (Eigen::Index i = 0; i < f.coeffs.size(); ++i) coeffs.push_back(complex_to_json(f.coeffs[i]));
  out["coeffs"] = std::move(coeffs);
  return out;
}

FockVector fock_vector_from_json(const Json& j) {
  return guarded("FockVector", [&] {
    const int n = require(j, "n", "FockVector").get<int>();
    const int N = require(j, "N", "FockVector").get<int>();
    if (n < 1 || N < 0) throw ParameterError("FockVector: need n >= 1 and N >= 0");
    TruncationBasis basis(n, N);
    const Json& c = require(j, "coeffs", "FockVector");
    if (!c.is_array() || c.size() != basis.size()) {
      throw ParameterError("FockVector: expected " + std::to_string(basis.size()) + " coefficients");
    }
    FockVector f(basis);
    for (std::size_t i = 0; i < c.size(); ++i) f.coeffs[static_cast<Eigen::Index>(i)] = complex_from_json(c[i]);
    return f;
  });
}

Multiplier multiplier_from_json(const Json& j) {
  return guarded("multiplier", [&]() -> Multiplier {
    if (j.is_string()) return named_multiplier(j.get<std::string>());
    if (!j.is_object()) throw ParameterError("multiplier: expected an object or a name");
    const std::string kind = j.value("kind", std::string("named"));
    if (kind == "named") return named_multiplier(require(j, "name", "multiplier").get<std::string>(), named_params(j));
    if (kind == "grid") {
      std::vector<std::vector<double>> axes;
      const Json& ax = require(j, "axes", "grid multiplier");
      if (!ax.is_array() || ax.empty()) throw ParameterError("grid multiplier: axes must be a non-empty array");
      if (ax[0].is_number()) {
        axes.push_back(ax.get<std::vector<double>>());
      } else {
        for (const Json& a : ax) axes.push_back(a.get<std::vector<double>>());
      }
      std::vector<cplx> values;
      for (const Json& v : require(j, "values", "grid multiplier")) values.push_back(complex_from_json(v));
      const std::string interp = j.value("interp", std::string("linear"));
      if (interp != "linear" && interp != "nearest") throw ParameterError("grid multiplier: interp must be linear or nearest");
      return grid_multiplier(std::move(axes), std::move(values), interp == "linear" ? Interp::linear : Interp::nearest);
    }
    if (kind == "product") {
      std::vector<Multiplier> factors;
      for (const Json& f : require(j, "factors", "product multiplier")) factors.push_back(multiplier_from_json(f));
      return product_multiplier(std::move(factors));
    }
    throw ParameterError("multiplier: unknown kind '" + kind + "'");
  });
}

Multiplier multiplier_from_text(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParameterError("multiplier: empty specification");
  if (text[first] == '{' || text[first] == '"' || text[first] == '[') {
    return guarded("multiplier", [&] { return multiplier_from_json(Json::parse(text)); });
  }
  return named_multiplier(text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1));
}

Symbol symbol_from_json(const Json& j) {
  return guarded("symbol", [&]() -> Symbol {
    if (j.contains("closed_form")) {
      const std::string name = j.at("closed_form").get<std::string>();
      const Json params = j.value("params", Json::object());
      NamedOperator op;
      if (name == "identity") op = identity_pair();
      else if (name == "hilbert") op = hilbert_pair();
      else if (name == "sin") op = sin_pair();
      else if (name == "cos") op = cos_pair();
      else if (name == "gaussian") op = gaussian_pair(params.value("a", 0.25));
      else if (name == "modulation") {
        std::optional<double> c0;
        if (params.contains("c0") && !params.at("c0").is_null()) c0 = params.at("c0").get<double>();
        op = modulation_pair(params.value("a", 0.25), c0);
      } else {
        throw ParameterError("symbol: no closed form named '" + name + "'");
      }
      return op.symbol();
    }
    return symbol_from_coeffs(fock_vector_from_json(j), j.value("provenance", std::string("external")));
  });
}

Json symbol_to_json(const FockVector& coeffs) { return to_json(coeffs); }

Json to_json(const OperatorMatrix& m) {
  Json out;
  out["n"] = m.basis.n();
  out["N"] = m.basis.max_degree();
  out["order"] = m.order;
  out["source"] = m.source;
  out["rows"] = m.entries.rows();
  out["cols"] = m.entries.cols();
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.entries.cols(); ++c) entries.push_back(complex_to_json(m.entries(r, c)));
  }
  out["entries"] = std::move(entries);
  return out;
}

OperatorMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const int n = require(j, "n", "matrix").get<int>();
    const int N = require(j, "N", "matrix").get<int>();
    if (n < 1 || N < 0) throw ParameterError("matrix: need n >= 1 and N >= 0");
    OperatorMatrix m;
    m.basis = TruncationBasis(n, N);
    const auto K = static_cast<Eigen::Index>(m.basis.size());
    const Json& e = require(j, "entries", "matrix");
    if (!e.is_array() || static_cast<Eigen::Index>(e.size()) != K * K) {
      throw ParameterError("matrix: expected " + std::to_string(K * K) + " entries");
    }
    m.entries.resize(K, K);
    for (Eigen::Index r = 0; r < K; ++r) {
      for (Eigen::Index c = 0; c < K; ++c) m.entries(r, c) = complex_from_json(e[static_cast<std::size_t>(r * K + c)]);
    }
    m.order = j.value("order", 0);
    m.source = j.value("source", std::string("external"));
    m.source_hash = detail::fnv1a(m.source);
    return m;
  });
}

void write_matrix_binary(const OperatorMatrix& m, const std::string& path) {
  static_assert(std::endian::native == std::endian::little, "binary matrix format assumes a little-endian host");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot open '" + path + "' for writing");
  for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.entries.cols(); ++c) {
      const double v[2] = {m.entries(r, c).real(), m.entries(r, c).imag()};
      out.write(reinterpret_cast<const char*>(v), sizeof v);
    }
  }
  Json side;
  side["n"] = m.basis.n();
  side["N"] = m.basis.max_degree();
  side["rows"] = m.entries.rows();
  side["cols"] = m.entries.cols();
  side["format"] = "c128-rowmajor-le";
  side["order"] = m.order;
  side["source"] = m.source;
  std::ofstream hdr(path + ".json");
  if (!hdr) throw ParameterError("cannot open '" + path + ".json' for writing");
  hdr << side.dump(2) << '\n';
}

OperatorMatrix read_matrix_binary(const std::string& path) {
  const Json side = read_json_file(path + ".json");
  return guarded("binary matrix", [&] {
    if (side.value("format", std::string()) != "c128-rowmajor-le") throw ParameterError("binary matrix: unknown format");
    OperatorMatrix m;
    m.basis = TruncationBasis(side.at("n").get<int>(), side.at("N").get<int>());
    const auto rows = side.at("rows").get<Eigen::Index>();
    const auto cols = side.at("cols").get<Eigen::Index>();
    if (rows != static_cast<Eigen::Index>(m.basis.size()) || cols != rows) {
      throw ParameterError("binary matrix: shape does not match the basis");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterError("cannot open '" + path + "'");
    m.entries.resize(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (Eigen::Index c = 0; c < cols; ++c) {
        double v[2];
        if (!in.read(reinterpret_cast<char*>(v), sizeof v)) throw ParameterError("binary matrix: file is truncated");
        m.entries(r, c) = {v[0], v[1]};
      }
    }
    m.order = side.value("order", 0);
    m.source = side.value("source", std::string("external"));
    m.source_hash = detail::fnv1a(m.source);
    return m;
  });
}

Json to_json(const SpectrumReport& r) {
  Json out;
  out["N"] = r.N;
  out["order"] = r.order;
  out["classification"] = to_string(r.classification);
  out["caveat"] = r.caveat ? "eigenvalues are Rayleigh quotients of a non-normal compression" : "";
  out["hausdorff"] = r.hausdorff;
  out["reference_resolution"] = r.reference_resolution;
  out["eigenvalues"] = complex_list(r.eigenvalues);
  out["reference"] = complex_list(r.reference);
  Json probes = Json::array();
  for (const ResolventProbe& p : r.probes) {
    Json q;
    q["mu"] = complex_to_json(p.mu);
    q["min_singular_value"] = p.min_singular_value;
    probes.push_back(std::move(q));
  }
  out["probes"] = std::move(probes);
  return out;
}

Json to_json(const Report& r) {
  Json out;
  out["name"] = r.name;
  out["N"] = r.N;
  out["order"] = r.order;
  out["pass"] = r.passed();
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    Json q;
    q["id"] = c.id;
    q["value"] = c.value;
    q["reference"] = c.reference;
    q["tolerance"] = c.tolerance;
    q["relation"] = c.relation;
    q["hard"] = c.hard;
    q["pass"] = c.pass;
    checks.push_back(std::move(q));
  }
  out["checks"] = std::move(checks);
  return out;
}

Json to_json(const CompactnessReport& r) {
  Json out;
  out["zero_operator"] = r.zero_operator;
  out["low_degree"] = r.low_degree;
  Json rows = Json::array();
  for (const CompactnessRow& row : r.rows) {
    Json q;
    q["N"] = row.N;
    q["k"] = row.k;
    q["bump_norm"] = row.bump_norm;
    q["image_norm"] = row.image_norm;
    q["ratio"] = row.ratio;
    q["max_low_inner"] = row.max_low_inner;
    rows.push_back(std::move(q));
  }
  out["rows"] = std::move(rows);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  return guarded(path.c_str(), [&] { return Json::parse(text); });
}

}  // namespace fock
