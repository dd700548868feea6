#pragma once

#include <map>
#include <string>
#include <vector>

namespace rxch {

/// A receptor state: unique numeric label plus a property tag (e.g. open/closed).
struct StateInfo {
  int id = 0;
  std::string property;
};

/// Directed transition with a base rate in s^-1. For sensitive edges the
/// effective rate is base_rate * x; for insensitive edges it is base_rate.
/// Diagonal (self) entries are never stored; they are derived as negative
/// row sums when a generator is built.
struct Edge {
  int from = 0;
  int to = 0;
  double base_rate = 0.0;
  bool sensitive = false;
};

/// A receptor model: a labeled directed graph with input-modulated rates.
/// State labels follow the source material (1-based for ChR2/ACh, 0-based
/// for CaM); computations use dense indices 0..k-1 in ascending label order.
struct ReceptorModel {
  std::vector<StateInfo> states;     // kept sorted by id
  std::vector<Edge> edges;           // kept sorted by (from, to); labels, not indices
  double x_min = 0.0;
  double x_max = 0.0;
  std::map<int, std::string> lump;   // optional state label -> output tag (Z = f(Y))

  int size() const { return static_cast<int>(states.size()); }
  bool has_lump() const { return !lump.empty(); }
  int index_of(int label) const;     // throws std::out_of_range on unknown label
  int label_of(int index) const;
  void normalize();                  // sort states by id and edges by (from, to)
};

struct ValidationIssue {
  std::string code;    // machine-readable, e.g. "duplicate_edge"
  std::string detail;
};

/// Errors make the model unusable; warnings (currently only
/// "empty_sensitive_set") flag structurally legal but information-free models.
struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;
  bool valid() const { return errors.empty(); }
};

ValidationReport validate(const ReceptorModel& model);

/// The sensitive non-self edges S', sorted by (from, to).
std::vector<Edge> sensitive_edges(const ReceptorModel& model);

/// Built-in models: "chr2", "ach", "cam". Throws std::invalid_argument on
/// unknown names.
ReceptorModel builtin(const std::string& name);

}  // namespace rxch
