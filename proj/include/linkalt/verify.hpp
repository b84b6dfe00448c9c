#pragma once

// The one-shot check suite behind `linkalt verify-paper`: the concrete
// claims about the bundled diagrams and surfaces, each reported as pass,
// fail, or resource limit (skein budget exhausted).

#include <linkalt/classify.hpp>
#include <linkalt/flatsurf.hpp>
#include <linkalt/obstruction.hpp>
#include <linkalt/seifert.hpp>
#include <linkalt/skein.hpp>
#include <linkalt/table.hpp>

#include <nlohmann/json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace linkalt {

enum class CheckStatus { Pass, Fail, ResourceLimit };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::ResourceLimit: return "LIMIT";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  std::string title;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  int passed = 0, failed = 0, limited = 0;

  int exit_code() const { return failed ? 1 : limited ? 2 : 0; }
};

struct VerifyOptions {
  std::string table_path = default_table_path();
  std::string surface_dir = default_surface_dir();
  SkeinOptions skein{skein_budget_from_env(), true};
};

namespace detail {

struct CheckOutcome {
  bool ok = false;
  std::string detail;
};

}  // namespace detail

inline VerifyReport verify_all(const VerifyOptions& opt = {}) {
  VerifyReport rep;
  auto run = [&](std::string id, std::string title, const std::function<detail::CheckOutcome()>& body) {
    CheckResult r{std::move(id), std::move(title), CheckStatus::Fail, {}};
    try {
      auto out = body();
      r.status = out.ok ? CheckStatus::Pass : CheckStatus::Fail;
      r.detail = std::move(out.detail);
    } catch (const SkeinBudgetExceeded& ex) {
      r.status = CheckStatus::ResourceLimit;
      r.detail = ex.what();
    } catch (const std::exception& ex) {
      r.detail = std::string("error: ") + ex.what();
    }
    (r.status == CheckStatus::Pass ? rep.passed : r.status == CheckStatus::Fail ? rep.failed : rep.limited)++;
    rep.checks.push_back(std::move(r));
  };

  std::vector<LinkTableEntry> table;
  run("table", "bundled table loads", [&] {
    table = load_table(opt.table_path);
    return detail::CheckOutcome{true, std::to_string(table.size()) + " entries"};
  });
  auto entry = [&](const std::string& name) -> const LinkTableEntry& { return find_entry(table, name); };
  auto conway_of = [&](const LinkDiagram& d) { return conway(d, opt.skein); };
  auto poly_is = [&](const LinkDiagram& d, const std::string& want) {
    auto got = conway_of(d);
    return detail::CheckOutcome{got == SkeinPolynomial::parse(want), "conway = " + got.to_string()};
  };
  auto load_surface = [&](const std::string& file) {
    return parse_surface(read_file(opt.surface_dir + "/" + file));
  };

  run("conway-L9n18", "conway(L9n18_1) = z^3 + 4z", [&] { return poly_is(entry("L9n18_1").diagram, "z^3 + 4*z"); });
  run("conway-10_145", "conway(10_145) = z^4 + 5z^2 + 1",
      [&] { return poly_is(entry("10_145").diagram, "z^4 + 5*z^2 + 1"); });

  auto obstruct = [&](const std::string& name, int bound) {
    const auto& e = entry(name);
    auto v = cromwell_test(conway_of(e.diagram), *e.crossing_number);
    std::string text = report_text(v, name);
    const bool ok = v.verdict == Verdict::NonHomogeneous && v.bound == bound;
    return detail::CheckOutcome{ok, text.substr(text.find("if ") == std::string::npos ? 0 : text.find("if "))};
  };
  run("obstruct-L9n18", "L9n18_1 is not homogeneous: 9 > 2 * 3", [&] { return obstruct("L9n18_1", 6); });
  run("obstruct-10_145", "10_145 is not homogeneous: 10 > 2 * 4", [&] { return obstruct("10_145", 8); });

  run("9_43-D", "9_43 diagram D: homogeneous, not alternative", [&] {
    auto c = classify(entry("9_43").diagram);
    return detail::CheckOutcome{c.homogeneous && !c.alternative,
                                "homogeneous=" + std::to_string(c.homogeneous) + " alternative=" +
                                    std::to_string(c.alternative)};
  });
  run("9_43-D'", "9_43 diagram D': alternative", [&] {
    auto c = classify(entry("9_43p").diagram);
    return detail::CheckOutcome{c.alternative, "alternative=" + std::to_string(c.alternative)};
  });
  run("8_19", "8_19: positive, alternative, not alternating", [&] {
    auto c = classify(entry("8_19").diagram);
    return detail::CheckOutcome{c.positive && c.alternative && !c.alternating,
                                "positive=" + std::to_string(c.positive) + " alternative=" +
                                    std::to_string(c.alternative) + " alternating=" +
                                    std::to_string(c.alternating)};
  });
  run("L9n18-reversed", "L9n18_1 with one component reversed is negative", [&] {
    auto c = classify(entry("L9n18_1r").diagram);
    return detail::CheckOutcome{c.negative && c.alternative, "negative=" + std::to_string(c.negative)};
  });
  run("unknot", "P(unknot) = 1", [&] {
    auto p = homflypt(entry("unknot").diagram, opt.skein);
    return detail::CheckOutcome{p == SkeinPolynomial::one(), "P = " + p.to_string()};
  });
  run("10_145-genus", "10_145 diagram: canonical surface has beta 4, genus 2", [&] {
    auto st = surface_stats(entry("10_145").diagram);
    return detail::CheckOutcome{st.betti == 4 && st.genus == 2,
                                "beta=" + std::to_string(st.betti) + " genus=" + std::to_string(st.genus)};
  });

  run("beta-additive", "beta(S1 * S2) = 1 + 4 = 5", [&] {
    auto s = load_surface("beta5.surf");
    int b1 = s.pieces.at(0).surface.betti(), b2 = s.pieces.at(1).surface.betti();
    return detail::CheckOutcome{b1 == 1 && b2 == 4 && s.betti() == 5,
                                std::to_string(b1) + " + " + std::to_string(b2) + " = " + std::to_string(s.betti())};
  });
  run("annuli-alternate", "two positive annuli with alternating ends: beta 2, one component", [&] {
    auto A = from_primitive(twisted_annulus(2, 1), "s1"), B = from_primitive(twisted_annulus(2, 1), "s2");
    auto ab = plumb(A, 0, B, 0, pattern_shuffle(A, 0, B, 0, "ABAB"));
    auto aabb = plumb(A, 0, B, 0, pattern_shuffle(A, 0, B, 0, "AABB"));
    int mu = boundary(ab).components, mu3 = boundary(aabb).components;
    return detail::CheckOutcome{ab.betti() == 2 && mu == 1 && mu3 == 3,
                                "alternating mu=" + std::to_string(mu) + ", adjacent mu=" + std::to_string(mu3)};
  });
  run("pretzel-odd", "P(-5,-3,-5) bounds a primitive flat surface, one component", [&] {
    auto s = pretzel_surface({-5, -3, -5});
    auto b = boundary(s);
    auto d = overturn_boundary_diagram(s);
    bool same = conway_of(d) == conway_of(pretzel_diagram({-5, -3, -5}));
    return detail::CheckOutcome{s.piece_count() == 1 && b.components == 1 && same,
                                "mu=" + std::to_string(b.components) + " conway match=" + std::to_string(same)};
  });
  run("pretzel-even", "boundary of the (-6; 1,1,1,1) surface is P(-6,1,1,1,1)", [&] {
    auto s = pretzel_surface({-6, 1, 1, 1, 1});
    auto b = boundary(s);
    auto got = conway_of(overturn_boundary_diagram(s));
    auto want = conway_of(pretzel_diagram({-6, 1, 1, 1, 1}));
    return detail::CheckOutcome{b.components == 1 && got == want,
                                "surface " + got.to_string() + ", pretzel " + want.to_string()};
  });
  run("surface-L9n18", "boundary of S1 * S2 * S3 (three annuli) has conway z^3 + 4z", [&] {
    auto s = load_surface("l9n18_1.surf");
    auto out = poly_is(overturn_boundary_diagram(s), "z^3 + 4*z");
    out.ok = out.ok && boundary(s).components == 2 && s.betti() == 3;
    return out;
  });
  run("surface-10_145", "boundary of the three-piece surface on d has conway z^4 + 5z^2 + 1", [&] {
    auto s = load_surface("k10_145.surf");
    auto out = poly_is(overturn_boundary_diagram(s), "z^4 + 5*z^2 + 1");
    out.ok = out.ok && boundary(s).components == 1 && s.betti() == 4;
    return out;
  });

  for (const auto& e : table) {
    if (!e.expected_conway) continue;
    run("table:" + e.name, "conway(" + e.name + ") = " + e.expected_conway->to_string(), [&] {
      auto got = conway_of(e.diagram);
      return detail::CheckOutcome{got == *e.expected_conway, "conway = " + got.to_string()};
    });
  }
  return rep;
}

inline std::string report_text(const VerifyReport& rep) {
  std::string out;
  for (const auto& c : rep.checks) {
    out += to_string(c.status) + "  " + c.id + ": " + c.title;
    if (!c.detail.empty()) {
      std::string d = c.detail;
      while (!d.empty() && d.back() == '\n') d.pop_back();
      std::string indented;
      for (char ch : d) indented += ch == '\n' ? std::string("\n        ") : std::string(1, ch);
      out += "\n        " + indented;
    }
    out += "\n";
  }
  out += std::to_string(rep.passed) + " passed, " + std::to_string(rep.failed) + " failed, " +
         std::to_string(rep.limited) + " hit the resource limit\n";
  return out;
}

inline nlohmann::ordered_json to_json(const VerifyReport& rep) {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks)
    j["checks"].push_back({{"id", c.id}, {"title", c.title}, {"status", to_string(c.status)}, {"detail", c.detail}});
  j["passed"] = rep.passed;
  j["failed"] = rep.failed;
  j["resource_limited"] = rep.limited;
  return j;
}

}  // namespace linkalt
