#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "rosenau/errors.hpp"
#include "rosenau/io.hpp"

using namespace rosenau;

TEST_CASE("shortest round-trip numbers") {
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(-2.5) == "-2.5");
  CHECK(io::format_double(1e-300) == "1e-300");
  CHECK(io::format_double(NAN) == "nan");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = d(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    REQUIRE(std::stod(io::format_double(v)) == v);
  }
}

TEST_CASE("profile CSV round trip") {
  const Grid g = make_grid(-7.5, 12.5, 64);
  const Field q = sample(g, [](double x) { return std::exp(-x * x) / 3.0; });
  const auto path = std::filesystem::temp_directory_path() / "rosenau_io_test" / "profile.csv";
  io::write_text(path, io::profile_csv(q));
  const Field back = io::read_profile_csv(path);
  CHECK(back.grid.size() == 64);
  CHECK(back.grid.a() == doctest::Approx(-7.5));
  CHECK(back.grid.b() == doctest::Approx(12.5));
  CHECK(back.values == q.values);
  std::filesystem::remove_all(path.parent_path());
}

TEST_CASE("read errors") {
  CHECK_THROWS_AS(io::read_profile_csv("/nonexistent/dir/profile.csv"), IoError);
  const auto path = std::filesystem::temp_directory_path() / "rosenau_io_bad.csv";
  io::write_text(path, "x,Q\n0,1\n1,2\n3,3\n4,1\n5,0\n");
  CHECK_THROWS_AS(io::read_profile_csv(path), ConfigError);
  io::write_text(path, "x,Q\n0,abc\n");
  CHECK_THROWS_AS(io::read_profile_csv(path), IoError);
  std::filesystem::remove(path);
}

TEST_CASE("CSV layouts") {
  const auto table = make_convergence_table({10, 20}, {0.5, 0.03125});
  CHECK(io::convergence_csv(table) == "resolution,Linf_error,observed_order\n10,0.5,\n20,0.03125,4\n");
  const std::string curve = io::curve_csv({0.0, 1.0}, {RealOrPole::of(2.0), RealOrPole::at_pole()});
  CHECK(curve == "x,u,pole\n0,2,0\n1,inf,1\n");
  const Grid g = make_grid(0.0, 4.0, 4);
  const EvolutionRecord rec{{0.0, 0.5},
                            {Field(g, {1, 2, 3, 4}), Field(g, {0, 0, 0, 0.25})},
                            {1.0, 1.0},
                            SpectralField(g)};
  const std::string csv = io::snapshots_csv(rec);
  CHECK(csv.rfind("t,x,u\n0,0,1\n", 0) == 0);
  CHECK(csv.find("0.5,3,0.25\n") != std::string::npos);
}

TEST_CASE("JSON sidecars carry a schema version") {
  const auto doc = io::with_schema(io::to_json(derive_case_params(EllipticCase::IIb, 1, 1, -1, 1, 0)));
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["case"] == "IIb");
  CHECK(doc["a0"] == 56.0);
  CHECK(doc["has_poles"] == false);
  const auto one = io::to_json(derive_case_params(EllipticCase::I, 1, 1, 0, 1, 0));
  CHECK(one["modulus"].is_null());
}
