#include <regex>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "acx4/classify.hpp"
#include "acx4/document.hpp"
#include "acx4/generate.hpp"
#include "acx4/invariants.hpp"
#include "acx4/reduce.hpp"
#include "acx4/render.hpp"

using namespace acx4;
using testing_util::code_of;
using testing_util::cp2;
using testing_util::error_of;
using testing_util::minimal;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

Document random_document(SeededRng& rng) {
  const auto fam = oracle::random_family(rng);
  switch (rng.below(4)) {
    case 0: return {fam};
    case 1: return {family_to_graph(fam)};
    case 2: return {reduce_to_minimal(fam).log};
    default: return {chi_y_report(fam)};
  }
}

}  // namespace

TEST_CASE("family document") {
  const std::string text =
      R"({"format":"acx4-fans/1","fans":[{"vectors":[[1,0],[-1,1],[0,-1]]}]})";
  const auto d = parse_document(text);
  CHECK(d.format() == "acx4-fans/1");
  CHECK(std::get<MultiFanFamily>(d.payload) == MultiFanFamily({cp2()}));
  CHECK(emit_document(d) == text + "\n");
  // Field order is irrelevant.
  CHECK(parse_document(R"({"fans":[{"vectors":[[1,0],[-1,1],[0,-1]]}],"format":"acx4-fans/1"})") == d);
}

TEST_CASE("parse errors carry a location") {
  auto e = error_of([] { parse_document(R"({"format":"acx4-fans/1","fans":[{"vectors":[[1]]}]})"); });
  CHECK(e.code() == ErrorCode::kParseError);
  CHECK(std::string(e.what()).find("fans[0].vectors[0]") != std::string::npos);
  e = error_of([] { parse_document(R"({"format":"acx4-fans/1","fans":[{"vectors":[[1,0],[0,1.5]]}]})"); });
  CHECK(std::string(e.what()).find("fans[0].vectors[1][1]") != std::string::npos);
  e = error_of([] { parse_document("{\"format\": \"acx4-fans/1\",\n \"fans\": [}"); });
  CHECK(e.code() == ErrorCode::kParseError);
  CHECK(std::string(e.what()).find("byte") != std::string::npos);
  CHECK(code_of([] { parse_document(R"({"format":"acx4-fans/9","fans":[]})"); }) == ErrorCode::kUnknownFormat);
  CHECK(code_of([] { parse_document(R"([1,2])"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_document(R"({"format":"acx4-report/1","a":[1,1,1],"euler":4,"todd":1,"signature":1,"c1_sq":9,"c2":3})"); }) ==
        ErrorCode::kParseError);
  // Well-formed but inadmissible content reports the validator's error.
  CHECK(code_of([] { parse_document(R"({"format":"acx4-fans/1","fans":[{"vectors":[[1,0],[1,2],[0,-1]]}]})"); }) ==
        ErrorCode::kNotABasis);
  CHECK(code_of([] { parse_document(R"({"format":"acx4-fans/1","fans":[]})"); }) == ErrorCode::kEmptyFamily);
}

TEST_CASE("large integers are written as strings") {
  // Always blowing up the heaviest adjacent pair grows coordinates like
  // Fibonacci numbers, well past 2^53 after 90 steps.
  MultiFan f = minimal();
  for (int s = 0; s < 90; ++s) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < f.size(); ++i) {
      if (norm_sq(f[i]) + norm_sq(f.cyclic(static_cast<std::ptrdiff_t>(i) + 1)) >
          norm_sq(f[best]) + norm_sq(f.cyclic(static_cast<std::ptrdiff_t>(best) + 1))) {
        best = i;
      }
    }
    f = blow_up_fan(f, best);
  }
  Integer largest = 0;
  for (const auto& v : f.vectors()) largest = std::max(largest, norm_sq(v));
  CHECK(largest > Integer(1) << 106);
  const Document d{MultiFanFamily({f})};
  const auto text = emit_document(d);
  CHECK(text.find('"', text.find("vectors")) != std::string::npos);
  CHECK(parse_document(text) == d);
  // Exactly 2^53 - 1 stays numeric; 2^53 does not.
  const Integer edge = (Integer(1) << 53) - 1;
  const Document g{MultiFanFamily({MultiFan::validate({{1, 0}, {edge, 1}, {-edge - 1, -1}})})};
  const auto gt = emit_document(g);
  CHECK(gt.find("9007199254740991") != std::string::npos);
  CHECK(gt.find("\"-9007199254740992\"") != std::string::npos);
  CHECK(parse_document(gt) == g);
}

TEST_CASE("round trip on random documents of every kind") {
  SeededRng rng(1000);
  for (int t = 0; t < 1000; ++t) {
    const auto d = random_document(rng);
    const auto text = emit_document(d);
    REQUIRE(parse_document(text) == d);
    REQUIRE(emit_document(parse_document(text)) == text);
  }
}

TEST_CASE("log documents accept an optional nested format tag") {
  const auto log = reduce_to_minimal(MultiFanFamily({cp2()})).log;
  std::string text = emit_document({log});
  const auto tagged = std::regex_replace(text, std::regex(R"("initial":\{)"),
                                         R"("initial":{"format":"acx4-fans/1",)");
  CHECK(parse_document(tagged) == Document{log});
  const auto wrong = std::regex_replace(text, std::regex(R"("final":\{)"),
                                        R"("final":{"format":"acx4-graph/1",)");
  CHECK(code_of([&] { parse_document(wrong); }) == ErrorCode::kParseError);
}

TEST_CASE("renderers") {
  const MultiFanFamily fam({cp2()});
  const auto svg = render_fan_svg(fam);
  CHECK(count(svg, "<line class=\"vector\"") == 3);
  CHECK(count(svg, "marker-end=\"url(#arrow)\"") == 3);
  CHECK(svg.find("(-1,1)") != std::string::npos);
  CHECK(svg == render_fan_svg(fam));
  CHECK(count(render_fan_svg(MultiFanFamily({cp2(), minimal()})), "<line class=\"vector\"") == 7);

  const auto g = family_to_graph(fam);
  const auto dot = render_graph_dot(g);
  CHECK(count(dot, "->") == 3);
  CHECK(count(dot, "[label=\"(") == 3);
  CHECK(count(dot, ";\n") == 6);
  CHECK(dot.find("label=\"(-1,1)\"") != std::string::npos);
  CHECK(dot == render_graph_dot(g));

  const auto tikz = render_graph_tikz(g);
  CHECK(count(tikz, "\\node[vertex") == 3);
  CHECK(count(tikz, "\\draw[->]") == 3);
  CHECK(tikz == render_graph_tikz(g));
}

TEST_CASE("random generation") {
  const auto one = gen_random_family(1, 1, 0);
  CHECK(one.size() == 1);
  CHECK(is_minimal_fan(one[0]));
  CHECK(one[0].size() == 4);
  CHECK(gen_random_family(77, 3, 40) == gen_random_family(77, 3, 40));
  CHECK(gen_random_family(1, 2, 5, std::vector<int>{1, -1})[1].orientation() == Orientation::kClockwise);
  CHECK(code_of([] { gen_random_family(1, 0, 3); }) == ErrorCode::kPreconditionViolated);
  CHECK(code_of([] { gen_random_family(1, 2, 3, std::vector<int>{1}); }) == ErrorCode::kPreconditionViolated);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t m = 1 + seed % 4;
    const std::size_t n = seed % 37;
    const auto fam = gen_random_family(seed, m, n);
    REQUIRE(fam.size() == m);
    REQUIRE(todd_genus(fam) == static_cast<std::int64_t>(m));
    REQUIRE(fixed_point_count(fam) == static_cast<std::int64_t>(4 * m + n));
  }
}

TEST_CASE("seeded draws are uniform and reproducible") {
  SeededRng a(5), b(5);
  std::array<int, 6> hist{};
  for (int t = 0; t < 60000; ++t) {
    const auto x = a.below(6);
    REQUIRE(x == b.below(6));
    ++hist[x];
  }
  for (int h : hist) CHECK(std::abs(h - 10000) < 500);
  for (int t = 0; t < 1000; ++t) {
    const auto v = a.between(-3, 4);
    REQUIRE((v >= -3 && v <= 4));
  }
}
