#include <doctest.h>

#include <filesystem>

#include "visidim/error.hpp"
#include "visidim/render.hpp"
#include "visidim/scenarios.hpp"

using namespace visidim;

namespace {

std::size_t occurrences(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("scenarios") {

TEST_CASE("shipped spec files match the builtin library") {
  for (const auto& name : scenario_names()) {
    const IFSystem file = load_spec(std::filesystem::path(VISIDIM_SPEC_DIR) / (name + ".json"));
    const IFSystem builtin = parse_spec(*builtin_spec(name));
    CHECK(file.name() == name);
    REQUIRE(file.size() == builtin.size());
    for (std::size_t i = 0; i < file.size(); ++i) {
      CHECK(file[i].ratio == builtin[i].ratio);
      CHECK(file[i].ortho == builtin[i].ortho);
      CHECK(file[i].exact_translation == builtin[i].exact_translation);
    }
    CHECK(file.declared_open_set() == builtin.declared_open_set());
  }
}

TEST_CASE("short names resolve") {
  CHECK(resolve_spec("meng").name() == "meng-3.1");
  CHECK(builtin_spec("integral-3.4").has_value());
  CHECK_FALSE(builtin_spec("nothing").has_value());
  try {
    verify_example("nothing");
    FAIL("expected UnknownScenario");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownScenario);
  }
  CHECK_THROWS_AS(resolve_spec("/no/such/file.json"), Error);
}

TEST_CASE("attractor svg: 64 squares at 3^-3, byte-identical reruns") {
  const IFSystem f = resolve_spec("fourcorner");
  const std::string a = attractor_svg(f, Rational(1, 27));
  CHECK(occurrences(a, "<polygon") == 64);
  CHECK(a == attractor_svg(f, Rational(1, 27)));
  CHECK(occurrences(attractor_svg(resolve_spec("meng"), Rational(1, 9)), "<polygon") == 25);
}

TEST_CASE("projection svg marks the components") {
  const IFSystem f = resolve_spec("ville");
  const std::string s = projection_svg(f, Direction::from_vector(0, -1), Rational(1, 64));
  CHECK(occurrences(s, "<rect") >= 6);
  CHECK(s.find("fill=\"black\"") != std::string::npos);
  CHECK(s == projection_svg(f, Direction::from_vector(0, -1), Rational(1, 64)));
}

TEST_CASE("envelope pgm has one mark per defined column") {
  const IFSystem f = resolve_spec("fourcorner");
  const std::string p = envelope_pgm(f, Direction::from_vector(2, 1), Rational(1, 256));
  REQUIRE(p.rfind("P5\n", 0) == 0);
  CHECK(occurrences(p, std::string(1, '\0')) > 256);
  CHECK(p == envelope_pgm(f, Direction::from_vector(2, 1), Rational(1, 256)));
  CHECK_THROWS_AS(parse_render_kind("movie"), Error);
}

TEST_CASE("render writes files and reports io errors") {
  const IFSystem f = resolve_spec("fourcorner");
  RenderOptions opt;
  const auto path = std::filesystem::temp_directory_path() / "visidim-render-test.svg";
  render(f, opt, path);
  CHECK(std::filesystem::file_size(path) > 0);
  std::filesystem::remove(path);
  try {
    render(f, opt, "/no/such/dir/out.svg");
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
  }
}

}
