#include <catch_amalgamated.hpp>

#include <linkalt/classify.hpp>
#include <linkalt/obstruction.hpp>
#include <linkalt/skein.hpp>
#include <linkalt/table.hpp>

using namespace linkalt;

namespace {

const std::vector<LinkTableEntry>& table() {
  static const auto t = load_table();
  return t;
}
SkeinPolynomial P(const char* s) { return SkeinPolynomial::parse(s); }

}  // namespace

TEST_CASE("L9n18{1}: 9 > 2 * 3", "[obstruction]") {
  auto r = cromwell_test(P("z^3 + 4*z"), {9, BoundProvenance::Table});
  CHECK(r.applicable);
  CHECK(r.maxdeg == 3);
  CHECK(r.bound == 6);
  CHECK(r.verdict == Verdict::NonHomogeneous);
  auto text = report_text(r, "L9n18{1}");
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring(
                       "if L9n18{1} were homogeneous its crossing number would be at most 2 * 3 = 6, but 9 > 6"));
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("verdict: NonHomogeneous"));
}

TEST_CASE("10_145: 10 > 2 * 4", "[obstruction]") {
  auto r = cromwell_test(P("z^4 + 5*z^2 + 1"), {10, BoundProvenance::Table});
  CHECK(r.bound == 8);
  CHECK(r.verdict == Verdict::NonHomogeneous);
  auto j = to_json(r, "10_145");
  CHECK(j["verdict"] == "NonHomogeneous");
  CHECK(j["non_alternative"] == true);
  CHECK(j["provenance"] == "table");
}

TEST_CASE("no contradiction for small knots", "[obstruction]") {
  CHECK(cromwell_test(P("z^2 + 1"), {3, BoundProvenance::Table}).verdict == Verdict::Inconclusive);
  CHECK(cromwell_test(P("-z^2 + 1"), {4, BoundProvenance::Table}).verdict == Verdict::Inconclusive);
}

TEST_CASE("leading coefficient other than +-1", "[obstruction]") {
  auto r = cromwell_test(P("2*z^2 + 1"), {100, BoundProvenance::UserAsserted});
  CHECK_FALSE(r.applicable);
  CHECK(r.verdict == Verdict::Inconclusive);
  CHECK_THAT(report_text(r), Catch::Matchers::ContainsSubstring("not applicable"));
}

TEST_CASE("a diagram never supplies a lower bound", "[obstruction]") {
  for (int n : {7, 9, 50, 1000}) {
    auto r = cromwell_test(P("z^3 + 4*z"), {n, BoundProvenance::DiagramUpperBoundOnly});
    CHECK(r.verdict == Verdict::Inconclusive);
  }
  auto r = cromwell_test(P("z^4 + 5*z^2 + 1"), {10, BoundProvenance::DiagramUpperBoundOnly});
  CHECK_THAT(report_text(r), Catch::Matchers::ContainsSubstring("only an upper bound"));
}

TEST_CASE("bad obstruction input", "[obstruction]") {
  CHECK_THROWS_AS(cromwell_test(SkeinPolynomial(), {9, BoundProvenance::Table}), ObstructionError);
  CHECK_THROWS_AS(cromwell_test(P("v*z"), {9, BoundProvenance::Table}), ObstructionError);
  CHECK_THROWS_AS(cromwell_test(P("z"), {0, BoundProvenance::Table}), ObstructionError);
  CHECK(parse_provenance("table") == BoundProvenance::Table);
  CHECK(parse_provenance("user") == BoundProvenance::UserAsserted);
  CHECK_THROWS(parse_provenance("vibes"));
}

TEST_CASE("homogeneous table entries respect the bound", "[obstruction][property]") {
  int checked = 0;
  for (const auto& e : table()) {
    if (!e.crossing_number || e.diagram.crossing_count() == 0) continue;
    if (!is_homogeneous(e.diagram)) continue;
    auto c = conway(e.diagram);
    if (c.is_zero()) continue;
    auto lead = leading_coefficient(c);
    if (lead != 1 && lead != -1) continue;
    INFO(e.name);
    CHECK(e.crossing_number->value <= 2 * maxdeg(c));
    CHECK(cromwell_test(c, *e.crossing_number).verdict == Verdict::Inconclusive);
    ++checked;
  }
  CHECK(checked >= 5);
}

TEST_CASE("table entries that trip the bound are not homogeneous diagrams", "[obstruction][property]") {
  for (const auto& e : table()) {
    if (!e.crossing_number || !e.expected_conway || e.expected_conway->is_zero()) continue;
    if (cromwell_test(*e.expected_conway, *e.crossing_number).verdict != Verdict::NonHomogeneous) continue;
    INFO(e.name);
    CHECK_FALSE(is_homogeneous(e.diagram));
    CHECK_FALSE(is_alternative(e.diagram));
  }
}
