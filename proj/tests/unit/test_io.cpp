#include <doctest.h>

#include <filesystem>

#include "pdrb/io.hpp"

using namespace pdrb;

TEST_SUITE("io") {
  TEST_CASE("number formatting round-trips") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(3.0) == "3");
    CHECK(format_number(0.1) == "0.1");
    const double x = 1.0 / 3.0;
    CHECK(std::stod(format_number(x)) == x);
  }

  TEST_CASE("diagram CSV") {
    const auto d = parse_diagram_csv("birth,death\n1,3\n\n0,5\n", "t");
    CHECK(d == PersistenceDiagram({{1, 3}, {0, 5}}));
    CHECK(parse_diagram_csv("1, 3\r\n", "t") == PersistenceDiagram({{1, 3}}));
    CHECK(parse_diagram_csv("", "t").empty());
    CHECK(diagram_csv(d) == "birth,death\n1,3\n0,5\n");
    CHECK(diagram_csv(PersistenceDiagram()) == "birth,death\n");
    CHECK(parse_diagram_csv(diagram_csv(d), "t") == d);
  }

  TEST_CASE("diagram CSV errors carry the line number") {
    CHECK_THROWS_WITH_AS((void)parse_diagram_csv("birth,death\n3,1\n", "f.csv"), "f.csv:2: death is smaller than birth",
                         IoError);
    CHECK_THROWS_WITH_AS((void)parse_diagram_csv("1\n", "f.csv"), "f.csv:1: expected two comma-separated values",
                         IoError);
    CHECK_THROWS_AS((void)parse_diagram_csv("1,x\n", "f"), IoError);
    CHECK_THROWS_AS((void)parse_diagram_csv("1,2,3\n", "f"), IoError);
    CHECK_THROWS_AS((void)parse_diagram_csv("1,inf\n", "f"), IoError);
    CHECK_THROWS_AS((void)parse_diagram_csv("0,1\nbirth,death\n", "f"), IoError);
  }

  TEST_CASE("grid text") {
    const auto g = parse_grid("dims: 2 3\n1 2 3\n4 5 6\n", "g");
    CHECK(g.dims() == std::vector<std::size_t>{2, 3});
    CHECK(g.values() == std::vector<double>{1, 2, 3, 4, 5, 6});
    CHECK(grid_text(g) == "dims: 2 3\n1 2 3\n4 5 6\n");
    CHECK(parse_grid("dims: 5\n0 3 1\n5 2", "g").values() == std::vector<double>{0, 3, 1, 5, 2});
    CHECK_THROWS_AS((void)parse_grid("1 2 3\n", "g"), IoError);
    CHECK_THROWS_AS((void)parse_grid("dims: 2 2\n1 2 3\n", "g"), IoError);
    CHECK_THROWS_AS((void)parse_grid("dims: 0\n", "g"), IoError);
    CHECK_THROWS_AS((void)parse_grid("dims: 1 1 1 1\n1\n", "g"), IoError);
    CHECK_THROWS_AS((void)parse_grid("", "g"), IoError);
  }

  TEST_CASE("labels and matrices") {
    CHECK(parse_labels("0\n2\n\n1\n", "l") == std::vector<std::size_t>{0, 2, 1});
    CHECK_THROWS_AS((void)parse_labels("a\n", "l"), IoError);
    CHECK(labels_csv({0, 2}) == "0\n2\n");
    CHECK(distance_matrix_csv(DistanceMatrix{2, {0, 2, 2, 0}, 2.0}) == "0,2\n2,0\n");
    CHECK(number_array_json({2, 1, 0.5}) == "[2, 1, 0.5]\n");
  }

  TEST_CASE("ensemble spec JSON") {
    const auto spec = default_outlier_spec();
    const auto back = parse_ensemble_spec(ensemble_spec_json(spec), "s");
    CHECK(back.dims == spec.dims);
    REQUIRE(back.clusters.size() == spec.clusters.size());
    CHECK(back.clusters[2].bumps == 4);
    CHECK(back.clusters[1].amplitude_max == spec.clusters[1].amplitude_max);
    CHECK(back.outliers.size() == 2);
    CHECK(back.margin == spec.margin);
    const auto partial = parse_ensemble_spec(R"({"margin": 0.5})", "s");
    CHECK(partial.margin == 0.5);
    CHECK(partial.clusters.size() == 3);
    CHECK_THROWS_AS((void)parse_ensemble_spec("{", "s"), IoError);
    CHECK_THROWS_AS((void)parse_ensemble_spec(R"({"clusters": [{"count": "x"}]})", "s"), IoError);
  }

  TEST_CASE("encoding bundle JSON") {
    EncodingBundle b{1.5, {"atom_0.csv", "atom_1.csv"}, {"a.csv"}, {{0.25, 0.75}}, {3, 2}};
    const auto back = parse_bundle(bundle_json(b), "b");
    CHECK(back.q == 1.5);
    CHECK(back.atom_files == b.atom_files);
    CHECK(back.inputs == b.inputs);
    CHECK(back.coefficients == b.coefficients);
    CHECK(back.energy_trace == b.energy_trace);
    CHECK_THROWS_AS((void)parse_bundle(R"({"q": 2, "atoms": [], "inputs": ["a"], "coefficients": []})", "b"), IoError);
  }

  TEST_CASE("manifest JSON has a version") {
    RunManifest m{"dist", {{"q", "2"}}, {"a.csv"}, {"out.csv"}, {}};
    const auto text = manifest_json(m);
    CHECK(text.find("\"version\": \"" + std::string(version()) + "\"") != std::string::npos);
    CHECK(text.find("\"results\"") == std::string::npos);
  }

  TEST_CASE("files") {
    const auto dir = std::filesystem::temp_directory_path() / "pdrb_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "diag.csv";
    write_file_atomic(path, "0,5\n");
    CHECK_FALSE(std::filesystem::exists(dir / "diag.csv.tmp"));
    const auto d = read_diagram_csv(path);
    CHECK(d.label() == std::optional<std::string>("diag"));
    CHECK(d == PersistenceDiagram({{0, 5}}));
    CHECK_THROWS_AS((void)read_text_file(dir / "missing.csv"), IoError);
    std::filesystem::remove_all(dir);
  }
}
