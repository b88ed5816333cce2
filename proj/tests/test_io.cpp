#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "updown/errors.hpp"
#include "updown/family.hpp"
#include "updown/io.hpp"
#include "updown/phi.hpp"
#include "updown/witness.hpp"

using namespace updown;
namespace ts = testsupport;

namespace {

Family parse(const std::string& text) {
  std::istringstream in(text);
  return read_family(in);
}

std::string render(const Family& f) {
  std::ostringstream out;
  write_family(out, f);
  return out.str();
}

// substring occurrence count, for structural checks on SVG output
std::size_t occurrences(const std::string& hay, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("family text format") {
  const Family f(3, {make_mask({1, 2}), make_mask({3}), 0u});
  CHECK(render(f) == "n=3\n{}\n{1,2}\n{3}\n");
  CHECK(render(Family(2)) == "n=2\n");

  CHECK(parse("n=3\n{}\n{1,2}\n{3}\n") == f);
  CHECK(parse("n=2\n") == Family(2));
  CHECK(parse("\n  n=2  \n\n {1} \n") == Family(2, {make_mask({1})}));
  CHECK(parse("n=2\r\n{1}\r\n") == Family(2, {make_mask({1})}));
  CHECK(parse("n=2\n{ 1 , 2 }\n") == Family(2, {make_mask({1, 2})}));

  std::mt19937_64 rng(2024u);
  for (int n = 0; n <= 6; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      const Family g = ts::random_family(rng, n);
      REQUIRE(parse(render(g)) == g);
    }
  }
}

TEST_CASE("family parse errors name the offending line") {
  auto message = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };

  CHECK(message("").find("header") != std::string::npos);
  CHECK(message("m=3\n{1}\n").find("line 1") != std::string::npos);
  CHECK(message("n=abc\n").find("line 1") != std::string::npos);
  CHECK(message("n=25\n").find("line 1") != std::string::npos);
  CHECK(message("n=-1\n").find("line 1") != std::string::npos);
  CHECK(message("n=3\n{0}\n").find("line 2") != std::string::npos);
  CHECK(message("n=3\n{4}\n").find("line 2") != std::string::npos);
  CHECK(message("n=3\n{1,1}\n").find("line 2") != std::string::npos);
  CHECK(message("n=3\n{1,}\n").find("line 2") != std::string::npos);
  CHECK(message("n=3\n1,2\n").find("line 2") != std::string::npos);
  CHECK(message("n=3\n{1,2\n").find("line 2") != std::string::npos);
  CHECK(message("n=3\n{1}\n\n{1}\n").find("line 4") != std::string::npos);
  CHECK(message("n=3\n{1}\n{1}\n").find("twice") != std::string::npos);
}

TEST_CASE("json forms") {
  CHECK(family_json(Family(3, {make_mask({1, 2}), make_mask({3})})) ==
        R"({"n":3,"sets":[[1,2],[3]]})");
  CHECK(family_json(Family(2)) == R"({"n":2,"sets":[]})");
  CHECK(family_json(Family(2, {0u})) == R"({"n":2,"sets":[[]]})");

  CHECK(phi_table_json(phi_table(2)) == R"({"n":2,"phi":[0,3,4,4,4]})");
}

TEST_CASE("phi table tsv") {
  std::ostringstream out;
  write_phi_table_tsv(out, phi_table(2));
  CHECK(out.str() == "m\tphi\n0\t0\n1\t3\n2\t4\n3\t4\n4\t4\n");
}

TEST_CASE("chain document") {
  std::ostringstream out;
  write_chain(out, canonical_chain(2));
  CHECK(out.str() ==
        "n=2\n"
        "m=0\n"
        "m=1\n{1}\n"
        "m=2\n{}\n{1}\n"
        "m=3\n{}\n{1}\n{2}\n"
        "m=4\n{}\n{1}\n{2}\n{1,2}\n");
}

TEST_CASE("diagram coordinates") {
  std::ostringstream out;
  write_ferrers_tsv(out, phi_table(2));
  const std::string text = out.str();
  CHECK(text.substr(0, 4) == "x\ty\n");
  // columns have heights 3, 4, 4, 4: fifteen dots in all
  CHECK(occurrences(text, "\n") == 16);
  CHECK(text.find("1\t3") != std::string::npos);
  CHECK(text.find("1\t4") == std::string::npos);
  CHECK(text.find("4\t4") != std::string::npos);
}

TEST_CASE("diagram svg") {
  const PhiTable table = phi_table(2);
  std::ostringstream first;
  write_ferrers_svg(first, table);
  const std::string svg = first.str();

  // deterministic bytes
  std::ostringstream second;
  write_ferrers_svg(second, table);
  CHECK(svg == second.str());

  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") != std::string::npos);
  CHECK(svg.find("width=\"60.00\"") != std::string::npos);
  CHECK(svg.find("height=\"60.00\"") != std::string::npos);
  CHECK(occurrences(svg, "<circle") == 15);
  CHECK(occurrences(svg, "<polyline") == 1);
  // the largest square of dots is 3 wide here
  CHECK(svg.find("width=\"30.00\" height=\"30.00\"") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);

  // a custom layout rescales the canvas
  FerrersLayout big;
  big.unit = 20.0;
  std::ostringstream scaled;
  write_ferrers_svg(scaled, table, big);
  CHECK(scaled.str().find("width=\"120.00\"") != std::string::npos);
}
