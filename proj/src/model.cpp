#include "rxch/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace rxch {

int ReceptorModel::index_of(int label) const {
  for (int i = 0; i < size(); ++i)
    if (states[i].id == label) return i;
  throw std::out_of_range("unknown state label " + std::to_string(label));
}

int ReceptorModel::label_of(int index) const {
  if (index < 0 || index >= size()) throw std::out_of_range("state index out of range");
  return states[index].id;
}

void ReceptorModel::normalize() {
  std::sort(states.begin(), states.end(),
            [](const StateInfo& a, const StateInfo& b) { return a.id < b.id; });
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair{a.from, a.to} < std::pair{b.from, b.to};
  });
}

namespace {

// Strong connectivity of the edge graph active at x = x_max: all edges if
// x_max > 0, insensitive edges only otherwise.
bool strongly_connected(const ReceptorModel& m) {
  const int k = m.size();
  if (k <= 1) return true;
  std::vector<std::vector<int>> fwd(k), bwd(k);
  for (const Edge& e : m.edges) {
    if (e.sensitive && m.x_max <= 0.0) continue;
    int u, v;
    try {
      u = m.index_of(e.from);
      v = m.index_of(e.to);
    } catch (const std::out_of_range&) {
      continue;  // reported separately
    }
    fwd[u].push_back(v);
    bwd[v].push_back(u);
  }
  auto reach_all = [k](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(k, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
    }
    return count == k;
  };
  return reach_all(fwd) && reach_all(bwd);
}

}  // namespace

ValidationReport validate(const ReceptorModel& model) {
  ValidationReport report;
  auto err = [&report](const std::string& code, const std::string& detail) {
    report.errors.push_back({code, detail});
  };

  if (model.states.empty()) err("empty_model", "model has no states");

  std::set<int> labels;
  for (const StateInfo& s : model.states)
    if (!labels.insert(s.id).second)
      err("duplicate_state", "state id " + std::to_string(s.id) + " repeated");

  if (!(model.x_min < model.x_max))
    err("bad_range", "input_range requires x_min < x_max");
  if (!std::isfinite(model.x_min) || !std::isfinite(model.x_max))
    err("bad_range", "input_range must be finite");

  std::set<std::pair<int, int>> seen;
  bool any_sensitive = false;
  for (const Edge& e : model.edges) {
    const std::string name =
        "(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
    if (e.from == e.to) err("self_loop", "edge " + name + " is a self-loop");
    if (!(e.base_rate > 0.0) || !std::isfinite(e.base_rate))
      err("nonpositive_rate", "edge " + name + " has non-positive rate");
    if (!seen.insert({e.from, e.to}).second)
      err("duplicate_edge", "edge " + name + " repeated");
    if (!labels.count(e.from) || !labels.count(e.to))
      err("unknown_state_ref", "edge " + name + " references an undeclared state");
    if (e.sensitive) any_sensitive = true;
  }

  if (!model.lump.empty()) {
    for (const StateInfo& s : model.states)
      if (!model.lump.count(s.id))
        err("bad_lump", "lump map misses state " + std::to_string(s.id));
    for (const auto& [id, tag] : model.lump)
      if (!labels.count(id))
        err("bad_lump", "lump map names undeclared state " + std::to_string(id));
  }

  if (report.errors.empty() && !strongly_connected(model))
    err("reducible", "transition graph is not a single communicating class at x_max");

  if (!any_sensitive)
    report.warnings.push_back(
        {"empty_sensitive_set", "no sensitive edges; the model carries no information"});

  return report;
}

std::vector<Edge> sensitive_edges(const ReceptorModel& model) {
  std::vector<Edge> out;
  for (const Edge& e : model.edges)
    if (e.sensitive && e.from != e.to) out.push_back(e);
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
    return std::pair{a.from, a.to} < std::pair{b.from, b.to};
  });
  return out;
}

ReceptorModel builtin(const std::string& name) {
  ReceptorModel m;
  if (name == "chr2") {
    m.states = {{1, "C"}, {2, "O"}, {3, "C"}};
    m.edges = {{1, 2, 5e3, true}, {2, 3, 50.0, false}, {3, 1, 17.0, false}};
    m.x_min = 0.0;
    m.x_max = 1.0;
    m.lump = {{1, "C"}, {2, "O"}, {3, "C"}};
  } else if (name == "ach") {
    m.states = {{1, "O"}, {2, "O"}, {3, "C"}, {4, "C"}, {5, "C"}};
    m.edges = {
        {1, 2, 5e8, true},  {1, 4, 3e3, false},   {2, 1, 0.66, false},
        {2, 3, 5e2, false}, {3, 2, 1.5e4, false}, {3, 4, 4e3, false},
        {4, 1, 15.0, false}, {4, 3, 5e8, true},   {4, 5, 2e3, false},
        {5, 4, 1e8, true},
    };
    m.x_min = 1e-7;
    m.x_max = 1e-5;
    m.lump = {{1, "O"}, {2, "O"}, {3, "C"}, {4, "C"}, {5, "C"}};
  } else if (name == "cam") {
    // State s = 3*c + n, with n (resp. c) calcium ions bound on the N
    // (resp. C) end; the tag marks which ends are completely bound.
    const double kon_t_n = 7.7e8, koff_t_n = 1.6e5;
    const double kon_r_n = 3.2e10, koff_r_n = 2.2e4;
    const double kon_t_c = 8.4e7, koff_t_c = 2.6e3;
    const double kon_r_c = 2.5e7, koff_r_c = 6.5;
    for (int s = 0; s < 9; ++s) {
      const int n = s % 3, c = s / 3;
      std::string tag = "none";
      if (n == 2 && c == 2) tag = "NC";
      else if (n == 2) tag = "N";
      else if (c == 2) tag = "C";
      m.states.push_back({s, tag});
      m.lump[s] = tag;
    }
    for (int c = 0; c < 3; ++c) {
      m.edges.push_back({3 * c + 0, 3 * c + 1, kon_t_n, true});
      m.edges.push_back({3 * c + 1, 3 * c + 0, koff_t_n, false});
      m.edges.push_back({3 * c + 1, 3 * c + 2, kon_r_n, true});
      m.edges.push_back({3 * c + 2, 3 * c + 1, koff_r_n, false});
    }
    for (int n = 0; n < 3; ++n) {
      m.edges.push_back({n, n + 3, kon_t_c, true});
      m.edges.push_back({n + 3, n, koff_t_c, false});
      m.edges.push_back({n + 3, n + 6, kon_r_c, true});
      m.edges.push_back({n + 6, n + 3, koff_r_c, false});
    }
    m.x_min = 1e-7;
    m.x_max = 1e-6;
  } else {
    throw std::invalid_argument("unknown built-in model: " + name);
  }
  m.normalize();
  return m;
}

}  // namespace rxch
