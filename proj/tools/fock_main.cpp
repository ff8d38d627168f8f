// fock: command-line front end for the Fock-space multiplier toolkit.
//
// Exit codes: 0 success, 2 bad input, 3 numeric failure, 4 a verification
// suite reported a hard failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fock/bargmann.hpp"
#include "fock/errors.hpp"
#include "fock/gallery.hpp"
#include "fock/io.hpp"
#include "fock/operator.hpp"
#include "fock/spectral.hpp"
#include "fock/symbol.hpp"
#include "fock/verify.hpp"

using namespace fock;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitSuite = 4;

// Flag values as parsed; anything left unset falls back to the config file,
// then to the built-in default.
struct RunConfig {
  int n = 1;
  int N = 32;
  int order = 0;  // 0: default_matrix_order(N), or 200 for pointwise work
  std::uint64_t seed = 0x5eedULL;
  GridSpec grid;
  double cluster_radius = 0.05;
  double cluster_fraction = 0.9;
  double hausdorff_bound = 0.05;
  std::string output;
};

RunConfig load_config(const std::string& path) {
  RunConfig rc;
  if (path.empty()) return rc;
  const Json j = read_json_file(path);
  try {
    rc.n = j.value("n", rc.n);
    rc.N = j.value("N", rc.N);
    rc.order = j.value("order", rc.order);
    rc.seed = j.value("seed", rc.seed);
    rc.output = j.value("output", rc.output);
    if (j.contains("grid")) {
      const Json& g = j.at("grid");
      rc.grid.R = g.value("R", rc.grid.R);
      rc.grid.points = g.value("points", rc.grid.points);
      rc.grid.eps_cluster = g.value("eps_cluster", rc.grid.eps_cluster);
    }
    if (j.contains("tolerances")) {
      const Json& t = j.at("tolerances");
      rc.cluster_radius = t.value("cluster_radius", rc.cluster_radius);
      rc.cluster_fraction = t.value("cluster_fraction", rc.cluster_fraction);
      rc.hausdorff_bound = t.value("hausdorff", rc.hausdorff_bound);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("config: ") + e.what());
  }
  return rc;
}

void validate(const RunConfig& rc) {
  if (rc.n < 1) throw ParameterError("n must be >= 1");
  if (rc.N < 0) throw ParameterError("N must be >= 0");
  if (rc.order < 0) throw ParameterError("order must be positive");
  if (!(rc.grid.R > 0.0) || rc.grid.points < 1) throw ParameterError("grid R and points must be positive");
  const double floor = 100.0 * std::numeric_limits<double>::epsilon();
  if (!(rc.cluster_radius >= floor) || !(rc.hausdorff_bound >= floor) || !(rc.grid.eps_cluster >= floor)) {
    throw ParameterError("tolerances must be at least 100 machine epsilons");
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot open '" + path + "' for writing");
  out << text;
}

void emit_json(const Json& j, const std::string& path) { emit(j.dump(2) + "\n", path); }

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ParameterError("not a number: '" + item + "'");
    }
    if (item.find_first_not_of(" \t\r", used) != std::string::npos) throw ParameterError("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// "a:b:k" -> k evenly spaced values from a to b inclusive.
std::vector<double> parse_range(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(parse_numbers(item).at(0));
  if (parts.size() != 3 || parts[2] < 1 || parts[2] != std::floor(parts[2])) {
    throw ParameterError("range must look like start:stop:count");
  }
  const int k = static_cast<int>(parts[2]);
  std::vector<double> out;
  for (int i = 0; i < k; ++i) out.push_back(k == 1 ? parts[0] : parts[0] + (parts[1] - parts[0]) * i / (k - 1));
  return out;
}

// Either literal text (JSON or a bare name) or @path to a file holding it.
Multiplier read_multiplier(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return multiplier_from_text(read_text_file(spec.substr(1)));
  return multiplier_from_text(spec);
}

// Points given as "re,im[,re,im...]" strings, or as lines of such a file.
std::vector<std::vector<cplx>> read_points(const std::vector<std::string>& literal, const std::string& file,
                                           const std::string& re_range, const std::string& im_range, int n) {
  std::vector<std::string> rows = literal;
  if (!file.empty()) {
    std::stringstream ss(read_text_file(file));
    std::string line;
    while (std::getline(ss, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      rows.push_back(line);
    }
  }
  std::vector<std::vector<cplx>> pts;
  for (const std::string& r : rows) {
    const std::vector<double> v = parse_numbers(r);
    if (static_cast<int>(v.size()) != 2 * n) {
      throw ParameterError("point '" + r + "' needs " + std::to_string(2 * n) + " numbers (re,im per axis)");
    }
    std::vector<cplx> z(n);
    for (int j = 0; j < n; ++j) z[j] = {v[2 * j], v[2 * j + 1]};
    pts.push_back(std::move(z));
  }
  if (!re_range.empty() || !im_range.empty()) {
    if (n != 1) throw ParameterError("range flags describe one complex axis; use --z or --z-file for n > 1");
    const std::vector<double> re = re_range.empty() ? std::vector<double>{0.0} : parse_range(re_range);
    const std::vector<double> im = im_range.empty() ? std::vector<double>{0.0} : parse_range(im_range);
    for (double a : re) {
      for (double b : im) pts.push_back({cplx(a, b)});
    }
  }
  if (pts.empty()) throw ParameterError("no evaluation points given");
  return pts;
}

std::string csv_row(const std::vector<double>& values) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += format_double(values[i]);
  }
  return line + "\n";
}

OperatorMatrix matrix_for(const Multiplier& m, const RunConfig& rc) {
  if (m.n != rc.n) throw ParameterError("multiplier dimension " + std::to_string(m.n) + " does not match n = " + std::to_string(rc.n));
  const int order = rc.order > 0 ? rc.order : default_matrix_order(rc.N);
  return build_matrix(m, TruncationBasis(rc.n, rc.N), gauss_hermite(order));
}

NamedOperator pair_by_name(const std::string& name, double a) {
  if (name == "identity") return identity_pair();
  if (name == "hilbert") return hilbert_pair();
  if (name == "sin") return sin_pair();
  if (name == "cos") return cos_pair();
  if (name == "gaussian") return gaussian_pair(a);
  if (name == "modulation") return modulation_pair(a);
  throw ParameterError("unknown gallery entry '" + name + "'");
}

std::string verify_table(const std::vector<Report>& reports) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-14s %-40s %-6s %-5s %-8s %24s %24s %10s\n", "suite", "check", "result", "kind",
                "relation", "value", "reference", "tolerance");
  out += line;
  for (const Report& r : reports) {
    for (const Check& c : r.checks) {
      std::snprintf(line, sizeof line, "%-14s %-40s %-6s %-5s %-8s %24.17g %24.17g %10.3g\n", r.name.c_str(),
                    c.id.c_str(), c.pass ? "PASS" : "FAIL", c.hard ? "hard" : "soft", c.relation.c_str(), c.value,
                    c.reference, c.tolerance);
      out += line;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier multipliers, entire symbols and their operators on the Fock space"};
  app.require_subcommand(1);

  // Shared options are accepted before or after the subcommand name.
  std::string config_path;
  std::optional<int> n_flag, N_flag, order_flag;
  std::optional<std::uint64_t> seed_flag;
  std::optional<std::string> out_flag;
  auto add_common = [&](CLI::App* a) {
    a->add_option("--config", config_path, "JSON config file (flags override it)");
    a->add_option("-n,--dim", n_flag, "dimension n");
    a->add_option("-N,--degree", N_flag, "truncation degree N");
    a->add_option("--order", order_flag, "Gauss-Hermite order");
    a->add_option("--seed", seed_flag, "seed for randomized checks");
    a->add_option("-o,--output", out_flag, "output file (default stdout)");
  };
  add_common(&app);

  // symbol
  auto* sym = app.add_subcommand("symbol", "synthesize phi from a multiplier");
  std::string sym_m;
  std::vector<std::string> sym_z;
  std::string sym_zfile, sym_re, sym_im;
  bool sym_json = false, sym_coeffs = false;
  sym->add_option("-m,--multiplier", sym_m, "multiplier JSON, name, or @file")->required();
  sym->add_option("--z", sym_z, "point re,im[,re,im...] (repeatable)");
  sym->add_option("--z-file", sym_zfile, "file with one point per line");
  sym->add_option("--re-range", sym_re, "start:stop:count for Re z");
  sym->add_option("--im-range", sym_im, "start:stop:count for Im z");
  sym->add_flag("--json", sym_json, "JSON instead of CSV");
  sym->add_flag("--coeffs", sym_coeffs, "emit the coefficient vector up to degree N instead of point values");

  // recover
  auto* rec = app.add_subcommand("recover", "recover m from symbol coefficients");
  std::string rec_symbol;
  std::vector<std::string> rec_x;
  std::string rec_xrange;
  bool rec_oracle = false;
  rec->add_option("-s,--symbol", rec_symbol, "symbol JSON file ({n,N,coeffs} or {closed_form,params})")->required();
  rec->add_option("--x", rec_x, "point x1[,x2...] (repeatable)");
  rec->add_option("--x-range", rec_xrange, "start:stop:count (n = 1)");
  rec->add_flag("--integral-oracle", rec_oracle, "cross-check up to 5 points with the double integral");

  // matrix
  auto* mat = app.add_subcommand("matrix", "truncated matrix of S");
  std::string mat_m, mat_binary;
  mat->add_option("-m,--multiplier", mat_m, "multiplier JSON, name, or @file")->required();
  mat->add_option("--binary", mat_binary, "also write raw c128 entries here (sidecar <path>.json)");

  // apply
  auto* app_cmd = app.add_subcommand("apply", "apply S to a Fock vector");
  std::string apply_m, apply_matrix, apply_input;
  app_cmd->add_option("-m,--multiplier", apply_m, "multiplier JSON, name, or @file");
  app_cmd->add_option("--matrix", apply_matrix, "matrix JSON file instead of a multiplier");
  app_cmd->add_option("-i,--input", apply_input, "FockVector JSON file")->required();

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "truncated spectrum against the essential range");
  std::string spec_m;
  std::optional<double> grid_R, grid_eps;
  std::optional<int> grid_points;
  int max_probes = 64;
  spec->add_option("-m,--multiplier", spec_m, "multiplier JSON, name, or @file")->required();
  spec->add_option("--grid-R", grid_R, "sampling half-width");
  spec->add_option("--grid-points", grid_points, "samples per axis");
  spec->add_option("--grid-eps", grid_eps, "clustering resolution");
  spec->add_option("--max-probes", max_probes, "resolvent probes");

  // gallery
  auto* gal = app.add_subcommand("gallery", "report on a named example");
  std::string gal_name;
  double gal_a = 0.25;
  int gal_k = 1;
  gal->add_option("--name", gal_name, "identity|hilbert|sin|cos|gaussian|modulation|riesz|beurling|counterexample")
      ->required();
  gal->add_option("--a", gal_a, "parameter a (gaussian, modulation)");
  gal->add_option("--k", gal_k, "beurling power");

  // verify
  auto* ver = app.add_subcommand("verify", "run invariant suites");
  std::vector<std::string> suites;
  std::string ver_json;
  ver->add_option("--suite", suites, "suite name (repeatable); default all");
  ver->add_option("--json", ver_json, "also write the reports as JSON here");

  for (CLI::App* sub : {sym, rec, mat, app_cmd, spec, gal, ver}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    RunConfig rc = load_config(config_path);
    if (n_flag) rc.n = *n_flag;
    if (N_flag) rc.N = *N_flag;
    if (order_flag) rc.order = *order_flag;
    if (seed_flag) rc.seed = *seed_flag;
    if (out_flag) rc.output = *out_flag;
    if (grid_R) rc.grid.R = *grid_R;
    if (grid_points) rc.grid.points = *grid_points;
    if (grid_eps) rc.grid.eps_cluster = *grid_eps;
    validate(rc);

    if (*sym) {
      const Multiplier m = read_multiplier(sym_m);
      if (sym_coeffs) {
        const int order = rc.order > 0 ? rc.order : default_matrix_order(rc.N);
        const FockVector c = symbol_coeffs(m, TruncationBasis(m.n, rc.N), gauss_hermite(order));
        Json j = symbol_to_json(c);
        j["order"] = order;
        j["source"] = m.description;
        emit_json(j, rc.output);
        return 0;
      }
      const int order = rc.order > 0 ? rc.order : 200;
      const QuadratureRule rule = gauss_hermite(order);
      const auto pts = read_points(sym_z, sym_zfile, sym_re, sym_im, m.n);
      if (sym_json) {
        Json j;
        j["n"] = m.n;
        j["order"] = order;
        j["source"] = m.description;
        Json rows = Json::array();
        for (const auto& z : pts) {
          Json row;
          Json zj = Json::array();
          for (const cplx& v : z) zj.push_back(complex_to_json(v));
          row["z"] = std::move(zj);
          row["phi"] = complex_to_json(symbol_point(m, z, rule));
          rows.push_back(std::move(row));
        }
        j["points"] = std::move(rows);
        emit_json(j, rc.output);
      } else {
        std::string csv = "# n=" + std::to_string(m.n) + ",order=" + std::to_string(order) + "\n";
        std::string header;
        for (int j = 1; j <= m.n; ++j) {
          const std::string s = m.n == 1 ? "" : std::to_string(j);
          header += "re_z" + s + ",im_z" + s + ",";
        }
        csv += header + "re_phi,im_phi\n";
        for (const auto& z : pts) {
          std::vector<double> row;
          for (const cplx& v : z) {
            row.push_back(v.real());
            row.push_back(v.imag());
          }
          const cplx phi = symbol_point(m, z, rule);
          row.push_back(phi.real());
          row.push_back(phi.imag());
          csv += csv_row(row);
        }
        emit(csv, rc.output);
      }
      return 0;
    }

    if (*rec) {
      const Json sj = read_json_file(rec_symbol);
      const Symbol phi = symbol_from_json(sj);
      std::optional<FockVector> coeffs = phi.coeffs;
      int provenance_N = coeffs ? coeffs->basis.max_degree() : rc.N;
      if (!coeffs) {
        // A closed form: expand it in coefficients by quadrature of its multiplier.
        const std::string name = sj.at("closed_form").get<std::string>();
        const Json params = sj.value("params", Json::object());
        const NamedOperator op = pair_by_name(name, params.value("a", 0.25));
        const int order = rc.order > 0 ? rc.order : default_matrix_order(rc.N);
        coeffs = symbol_coeffs(op.multiplier, TruncationBasis(1, rc.N), gauss_hermite(order));
      }
      const int n = coeffs->basis.n();
      std::vector<std::vector<double>> xs;
      for (const std::string& s : rec_x) {
        std::vector<double> v = parse_numbers(s);
        if (static_cast<int>(v.size()) != n) throw ParameterError("point '" + s + "' needs " + std::to_string(n) + " coordinates");
        xs.push_back(std::move(v));
      }
      if (!rec_xrange.empty()) {
        if (n != 1) throw ParameterError("--x-range needs n = 1");
        for (double x : parse_range(rec_xrange)) xs.push_back({x});
      }
      if (xs.empty()) throw ParameterError("no recovery points given");
      if (rec_oracle && n != 1) throw ParameterError("--integral-oracle needs n = 1");

      std::string csv = "# n=" + std::to_string(n) + ",N=" + std::to_string(provenance_N) + "\n";
      for (int j = 1; j <= n; ++j) csv += (n == 1 ? std::string("x") : "x" + std::to_string(j)) + ",";
      csv += "re_m,im_m";
      if (rec_oracle) csv += ",re_m_integral,im_m_integral";
      csv += "\n";
      const QuadratureRule oracle_rule = gauss_hermite(40);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const cplx m = multiplier_from_symbol_coeffs(*coeffs, xs[i]);
        std::vector<double> row = xs[i];
        row.push_back(m.real());
        row.push_back(m.imag());
        std::string line = csv_row(row);
        if (rec_oracle) {
          line.pop_back();
          if (i < 5) {
            const cplx mi = multiplier_from_symbol_integral(phi, xs[i][0], oracle_rule);
            line += "," + format_double(mi.real()) + "," + format_double(mi.imag());
          } else {
            line += ",,";
          }
          line += "\n";
        }
        csv += line;
      }
      emit(csv, rc.output);
      return 0;
    }

    if (*mat) {
      const OperatorMatrix s = matrix_for(read_multiplier(mat_m), rc);
      if (!mat_binary.empty()) write_matrix_binary(s, mat_binary);
      emit_json(to_json(s), rc.output);
      return 0;
    }

    if (*app_cmd) {
      if (apply_m.empty() == apply_matrix.empty()) throw ParameterError("apply needs exactly one of --multiplier or --matrix");
      const FockVector f = fock_vector_from_json(read_json_file(apply_input));
      rc.n = f.basis.n();
      rc.N = f.basis.max_degree();
      const OperatorMatrix s =
          apply_matrix.empty() ? matrix_for(read_multiplier(apply_m), rc) : matrix_from_json(read_json_file(apply_matrix));
      const FockVector g = apply(s, f);
      Json j = to_json(g);
      j["order"] = s.order;
      j["source"] = s.source;
      j["norm"] = g.norm();
      emit_json(j, rc.output);
      return 0;
    }

    if (*spec) {
      const Multiplier m = read_multiplier(spec_m);
      if (m.n != rc.n) rc.n = m.n;
      SpectrumOptions opt;
      opt.grid = rc.grid;
      opt.max_probes = max_probes;
      const int order = rc.order > 0 ? rc.order : default_matrix_order(rc.N);
      const SpectrumReport r = spectrum_estimate(m, TruncationBasis(rc.n, rc.N), gauss_hermite(order), opt);
      Json j = to_json(r);
      j["source"] = m.description;
      j["within_radius_fraction"] = fraction_within(r.eigenvalues, r.reference, rc.cluster_radius);
      j["cluster_radius"] = rc.cluster_radius;
      emit_json(j, rc.output);
      return 0;
    }

    if (*gal) {
      Report r;
      if (gal_name == "riesz") {
        r = riesz_suite(rc.n < 2 ? 2 : rc.n, rc.N, rc.order);
      } else if (gal_name == "beurling") {
        r = beurling_suite(gal_k, rc.N, {}, rc.order);
      } else if (gal_name == "counterexample") {
        const int Ns[3] = {16, 64, 256};
        r = counterexample_suite(Ns, rc.order);
      } else {
        r = gallery_report(pair_by_name(gal_name, gal_a), rc.N, rc.order, rc.seed);
      }
      emit_json(to_json(r), rc.output);
      return r.passed() ? 0 : kExitSuite;
    }

    if (*ver) {
      VerifyConfig vc;
      vc.seed = rc.seed;
      vc.N = N_flag ? *N_flag : 0;
      vc.order = order_flag ? *order_flag : 0;
      vc.grid = rc.grid;
      vc.cluster_radius = rc.cluster_radius;
      vc.cluster_fraction = rc.cluster_fraction;
      vc.hausdorff_bound = rc.hausdorff_bound;
      if (suites.empty()) suites = suite_names();
      std::vector<Report> reports;
      for (const std::string& s : suites) {
        std::vector<Report> part = run_suite(s, vc);
        reports.insert(reports.end(), part.begin(), part.end());
      }
      emit(verify_table(reports), rc.output);
      if (!ver_json.empty()) {
        Json all = Json::array();
        for (const Report& r : reports) all.push_back(to_json(r));
        emit_json(all, ver_json);
      }
      for (const Report& r : reports) {
        if (!r.passed()) return kExitSuite;
      }
      return 0;
    }
  } catch (const ParameterError& e) {
    std::fprintf(stderr, "fock: %s\n", e.what());
    return kExitInput;
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "fock: %s (last value %.17g after %d iterations)\n", e.what(), e.last_value(), e.iterations());
    return kExitNumeric;
  } catch (const EvaluationError& e) {
    std::fprintf(stderr, "fock: %s\n", e.what());
    return kExitNumeric;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "fock: %s\n", e.what());
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fock: %s\n", e.what());
    return kExitNumeric;
  }
  return 0;
}
