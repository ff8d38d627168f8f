#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "fock/io.hpp"
#include "fock/parallel.hpp"

using namespace fock;

TEST_SUITE("io") {

TEST_CASE("Fock vectors round-trip through JSON exactly") {
  std::mt19937_64 gen(77);
  std::normal_distribution<double> normal;
  FockVector f(TruncationBasis(2, 4));
  for (Eigen::Index i = 0; i < f.coeffs.size(); ++i) f.coeffs[i] = cplx(normal(gen), normal(gen));
  const Json j = to_json(f);
  CHECK(j.at("n") == 2);
  CHECK(j.at("N") == 4);
  const FockVector g = fock_vector_from_json(Json::parse(j.dump()));
  CHECK(g.basis == f.basis);
  CHECK((g.coeffs - f.coeffs).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(fock_vector_from_json(Json::parse(R"({"n":1,"N":2,"coeffs":[[1,0]]})")), ParameterError);
}

TEST_CASE("multiplier specifications") {
  CHECK(multiplier_from_text("hilbert").at(1.0) == cplx(0.0, -1.0));
  CHECK(multiplier_from_text(R"({"kind":"named","name":"identity"})").at(5.0) == cplx(1.0));
  CHECK(multiplier_from_text(R"({"kind":"named","name":"gaussian","params":{"a":0.25}})").at(0.5).real() ==
        doctest::Approx(std::exp(-0.5)));
  const Multiplier grid =
      multiplier_from_text(R"({"kind":"grid","axes":[[0,1]],"values":[[0,0],[2,2]],"interp":"linear"})");
  CHECK(std::abs(grid.at(0.5) - cplx(1.0, 1.0)) < 1e-15);
  const Multiplier prod = multiplier_from_text(R"({"kind":"product","factors":["hilbert",{"name":"halfline"}]})");
  CHECK(prod.at(1.0) == cplx(0.0, -1.0));
  CHECK(prod.at(-1.0) == cplx(0.0));
  const Multiplier ind = multiplier_from_text(R"({"name":"indicator","boxes":[{"lo":[0],"hi":[null]}]})");
  CHECK(ind.at(1e6) == cplx(1.0));
  CHECK(ind.at(-1.0) == cplx(0.0));

  CHECK_THROWS_AS(multiplier_from_text(R"({"kind":"named","name":"nope"})"), ParameterError);
  CHECK_THROWS_AS(multiplier_from_text(R"({"kind":"weird"})"), ParameterError);
  CHECK_THROWS_AS(multiplier_from_text(R"({"kind":"named",)"), ParameterError);
  CHECK_THROWS_AS(multiplier_from_text(R"({"kind":"grid","axes":[[0,1]],"values":[[0,0]]})"), ParameterError);
}

TEST_CASE("symbols from JSON") {
  const Symbol h = symbol_from_json(Json::parse(R"({"closed_form":"hilbert"})"));
  CHECK(std::abs(h.at(cplx(0.7, 0.3)) - hilbert_symbol(cplx(0.7, 0.3))) == 0.0);
  const Symbol c = symbol_from_json(Json::parse(R"({"n":1,"N":1,"coeffs":[[1,0],[0,1]]})"));
  CHECK(std::abs(c.at(2.0) - cplx(1.0, 2.0)) < 1e-15);
  CHECK_THROWS_AS(symbol_from_json(Json::parse(R"({"closed_form":"tanh"})")), ParameterError);
}

TEST_CASE("matrices round-trip through JSON and raw binary") {
  const OperatorMatrix s = build_matrix(named_multiplier("hilbert"), TruncationBasis(1, 6), gauss_hermite(40));
  const OperatorMatrix j = matrix_from_json(Json::parse(to_json(s).dump()));
  CHECK((j.entries - s.entries).cwiseAbs().maxCoeff() == 0.0);
  CHECK(j.order == 40);

  const auto path = (std::filesystem::temp_directory_path() / "fock_io_matrix.bin").string();
  write_matrix_binary(s, path);
  CHECK(std::filesystem::file_size(path) == 7u * 7u * 16u);
  const Json side = read_json_file(path + ".json");
  CHECK(side.at("format") == "c128-rowmajor-le");
  CHECK(side.at("rows") == 7);
  const OperatorMatrix b = read_matrix_binary(path);
  CHECK((b.entries - s.entries).cwiseAbs().maxCoeff() == 0.0);
  std::filesystem::remove(path);
  std::filesystem::remove(path + ".json");
}

TEST_CASE("reports serialize with provenance") {
  Report r;
  r.name = "demo";
  r.N = 12;
  r.order = 200;
  r.add(check_close("x", 1.0, 1.0, 1e-9));
  r.add(soft(check_at_most("y", 2.0, 1.0)));
  const Json j = to_json(r);
  CHECK(j.at("name") == "demo");
  CHECK(j.at("N") == 12);
  CHECK(j.at("pass") == true);
  CHECK(j.at("checks").size() == 2u);
  CHECK(j.at("checks")[1].at("pass") == false);
  CHECK(j.at("checks")[1].at("hard") == false);

  SpectrumReport sr;
  sr.N = 3;
  sr.order = 40;
  sr.eigenvalues = {cplx(1.0, 0.0)};
  sr.probes = {{cplx(0.5, 0.0), 0.5}};
  const Json js = to_json(sr);
  for (const char* key : {"eigenvalues", "reference", "hausdorff", "N", "order", "classification", "probes"}) {
    CHECK(js.contains(key));
  }
  CHECK(js.at("probes")[0].at("mu")[0] == 0.5);
}

TEST_CASE("identical inputs give byte-identical JSON") {
  const auto a = to_json(build_matrix(named_multiplier("tanh"), TruncationBasis(1, 10), gauss_hermite(60))).dump();
  const auto b = to_json(build_matrix(named_multiplier("tanh"), TruncationBasis(1, 10), gauss_hermite(60))).dump();
  CHECK(a == b);
}

TEST_CASE("thread cap does not change results") {
  const Multiplier m = named_multiplier("tanh");
  ::setenv("FOCK_THREADS", "1", 1);
  CHECK(thread_count() == 1u);
  const Eigen::MatrixXcd one = build_matrix(m, TruncationBasis(1, 30), gauss_hermite(128)).entries;
  ::setenv("FOCK_THREADS", "3", 1);
  CHECK(thread_count() == 3u);
  const Eigen::MatrixXcd three = build_matrix(m, TruncationBasis(1, 30), gauss_hermite(128)).entries;
  ::unsetenv("FOCK_THREADS");
  CHECK((one - three).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("doubles print with 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

}  // TEST_SUITE
