#pragma once

// Cromwell's bound for homogeneous links: when the leading coefficient of
// the Conway polynomial is +-1, the crossing number is at most
// 2 * maxdeg. A known crossing number above that bound certifies the link is
// not homogeneous, hence not alternative.

#include <linkalt/poly.hpp>

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace linkalt {

// Where a crossing-number lower bound comes from. A diagram's crossing count
// is only an upper bound and never counts as evidence.
enum class BoundProvenance { UserAsserted, Table, DiagramUpperBoundOnly };

inline std::string to_string(BoundProvenance p) {
  switch (p) {
    case BoundProvenance::UserAsserted: return "user-asserted";
    case BoundProvenance::Table: return "table";
    case BoundProvenance::DiagramUpperBoundOnly: return "diagram-upper-bound-only";
  }
  return "?";
}

inline BoundProvenance parse_provenance(const std::string& s) {
  if (s == "user" || s == "user-asserted") return BoundProvenance::UserAsserted;
  if (s == "table") return BoundProvenance::Table;
  if (s == "diagram" || s == "diagram-upper-bound-only") return BoundProvenance::DiagramUpperBoundOnly;
  throw std::invalid_argument("unknown provenance '" + s + "'");
}

struct CrossingBound {
  int value = 0;
  BoundProvenance provenance = BoundProvenance::UserAsserted;
};

enum class Verdict { NonHomogeneous, Inconclusive };

inline std::string to_string(Verdict v) {
  return v == Verdict::NonHomogeneous ? "NonHomogeneous" : "Inconclusive";
}

struct ObstructionVerdict {
  SkeinPolynomial conway;
  BigInt leading;
  int maxdeg = 0;
  bool applicable = false;  // |leading| == 1
  int bound = 0;            // 2 * maxdeg
  CrossingBound crossing_lower_bound;
  Verdict verdict = Verdict::Inconclusive;
};

class ObstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline ObstructionVerdict cromwell_test(const SkeinPolynomial& conway, CrossingBound lower) {
  if (conway.is_zero()) throw ObstructionError("Conway polynomial is zero");
  if (conway.depends_on_v()) throw ObstructionError("expected a polynomial in z only");
  if (lower.value <= 0) throw ObstructionError("crossing-number lower bound must be positive");
  ObstructionVerdict r;
  r.conway = conway;
  r.maxdeg = maxdeg(conway);
  r.leading = leading_coefficient(conway);
  r.applicable = (r.leading == 1 || r.leading == -1);
  r.bound = 2 * r.maxdeg;
  r.crossing_lower_bound = lower;
  const bool trusted = lower.provenance != BoundProvenance::DiagramUpperBoundOnly;
  r.verdict = (r.applicable && trusted && lower.value > r.bound) ? Verdict::NonHomogeneous
                                                                  : Verdict::Inconclusive;
  return r;
}

inline std::string report_text(const ObstructionVerdict& r, const std::string& name = {}) {
  std::string out;
  const std::string who = name.empty() ? "L" : name;
  out += "link: " + who + "\n";
  out += "conway: " + r.conway.to_string() + "\n";
  out += "leading coefficient: " + r.leading.str() + "\n";
  out += "maxdeg: " + std::to_string(r.maxdeg) + "\n";
  out += "bound: 2 * " + std::to_string(r.maxdeg) + " = " + std::to_string(r.bound) + "\n";
  out += "crossing number >= " + std::to_string(r.crossing_lower_bound.value) + " (" +
         to_string(r.crossing_lower_bound.provenance) + ")\n";
  if (!r.applicable) {
    out += "criterion not applicable: leading coefficient is not +-1\n";
  } else if (r.crossing_lower_bound.provenance == BoundProvenance::DiagramUpperBoundOnly) {
    out += "criterion not applied: a diagram's crossing count is only an upper bound\n";
  } else if (r.verdict == Verdict::NonHomogeneous) {
    out += "if " + who + " were homogeneous its crossing number would be at most 2 * " +
           std::to_string(r.maxdeg) + " = " + std::to_string(r.bound) + ", but " +
           std::to_string(r.crossing_lower_bound.value) + " > " + std::to_string(r.bound) + "\n";
    out += "non-homogeneous => non-alternative\n";
  } else {
    out += std::to_string(r.crossing_lower_bound.value) + " <= " + std::to_string(r.bound) +
           ": no contradiction\n";
  }
  out += "verdict: " + to_string(r.verdict) + "\n";
  return out;
}

inline nlohmann::ordered_json to_json(const ObstructionVerdict& r, const std::string& name = {}) {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["conway"] = r.conway.to_string();
  j["leading_coefficient"] = r.leading.str();
  j["maxdeg"] = r.maxdeg;
  j["applicable"] = r.applicable;
  j["bound"] = r.bound;
  j["crossing_lower_bound"] = r.crossing_lower_bound.value;
  j["provenance"] = to_string(r.crossing_lower_bound.provenance);
  j["verdict"] = to_string(r.verdict);
  j["non_alternative"] = r.verdict == Verdict::NonHomogeneous;
  return j;
}

}  // namespace linkalt
