#include <algorithm>
#include <string>

#include "planar5/catalog.hpp"
#include "planar5/error.hpp"

namespace planar5 {

std::string_view status_name(ScenarioStatus s) {
  switch (s) {
    case ScenarioStatus::Pass: return "PASS";
    case ScenarioStatus::Fail: return "FAIL";
    case ScenarioStatus::Unreachable: return "UNREACHABLE";
  }
  return "?";
}

bool ValidationReport::passed() const { return first_failure() == nullptr; }

const ScenarioOutcome* ValidationReport::first_failure() const {
  for (const auto& s : scenarios) {
    if (s.status == ScenarioStatus::Fail) return &s;
  }
  return nullptr;
}

PeelResult blocked_peel(const std::vector<std::vector<int>>& adjacency, const std::vector<int>& caps,
                        const std::vector<bool>& deleted, const std::vector<int>& lowering) {
  const std::size_t n = adjacency.size();
  std::vector<bool> gone = deleted;
  std::vector<int> eff(n);
  for (std::size_t v = 0; v < n; ++v) {
    eff[v] = caps[v] - lowering[v];
    for (int u : adjacency[v]) {
      if (deleted[static_cast<std::size_t>(u)]) --eff[v];
    }
  }
  PeelResult r;
  for (;;) {
    std::size_t next = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!gone[v] && eff[v] <= 4) {
        next = v;
        break;
      }
    }
    if (next == n) break;
    gone[next] = true;
    r.order.push_back(static_cast<int>(next));
    for (int u : adjacency[next]) --eff[static_cast<std::size_t>(u)];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!gone[v]) r.stuck.push_back(static_cast<int>(v));
  }
  r.ok = r.stuck.empty();
  return r;
}

namespace {

std::string vertex_list(const ConfigurationSpec& spec, const std::vector<int>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += spec.vertices[static_cast<std::size_t>(vs[i])].label;
  }
  return out + "}";
}

// Runs one scenario: `fifth` (if any) is deleted, `lowering` already holds
// every reduction in effective degree. Unreachable when some lowering
// exceeds the halfedges that could carry it.
ScenarioOutcome run_scenario(const ConfigurationSpec& spec, std::string name, std::optional<int> fifth,
                             std::vector<int> blocked, const std::vector<int>& lowering) {
  ScenarioOutcome out;
  out.name = std::move(name);
  out.fifth = fifth;
  out.blocked = std::move(blocked);
  for (int v = 0; v < spec.size(); ++v) {
    if (lowering[static_cast<std::size_t>(v)] > spec.vertices[static_cast<std::size_t>(v)].halfedges()) {
      out.status = ScenarioStatus::Unreachable;
      return out;
    }
  }
  std::vector<bool> deleted(static_cast<std::size_t>(spec.size()), false);
  if (fifth) deleted[static_cast<std::size_t>(*fifth)] = true;
  out.peel = blocked_peel(spec.adjacency(), spec.caps(), deleted, lowering);
  out.status = out.peel.ok ? ScenarioStatus::Pass : ScenarioStatus::Fail;
  return out;
}

void validate_trials(const ConfigurationSpec& spec, ValidationReport& report) {
  const auto n = static_cast<std::size_t>(spec.size());
  std::vector<int> lowering(n, 0);
  std::vector<int> blocked;
  for (int t : spec.trial) {
    const auto& label = spec.vertices[static_cast<std::size_t>(t)].label;
    report.scenarios.push_back(
        run_scenario(spec, "fifth=" + label + "/blocked=" + vertex_list(spec, blocked), t, blocked, lowering));
    lowering[static_cast<std::size_t>(t)]++;
    blocked.push_back(t);
  }
  report.scenarios.push_back(run_scenario(spec, "all-blocked", std::nullopt, blocked, lowering));
}

void validate_hub(const ConfigurationSpec& spec, const std::string& prefix, ValidationReport& report) {
  const int d = spec.hub_degree;
  const auto n = static_cast<std::size_t>(spec.size());
  // Link slot -> template vertex, -1 for separators.
  std::vector<int> slot(static_cast<std::size_t>(d), -1);
  for (std::size_t i = 0; i < spec.leaf_positions.size(); ++i) {
    slot[static_cast<std::size_t>(spec.leaf_positions[i])] = static_cast<int>(i) + 1;
  }
  std::vector<int> separators;
  for (int p = 0; p < d; ++p) {
    if (slot[static_cast<std::size_t>(p)] < 0) separators.push_back(p);
  }
  auto at = [&](int p) { return slot[static_cast<std::size_t>(((p % d) + d) % d)]; };

  int components = 0;
  for (int p = 0; p < d; ++p) {
    if (at(p) >= 0 && at(p - 1) < 0) ++components;
  }
  if (separators.empty()) components = 1;

  const std::size_t subsets = std::size_t{1} << separators.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<bool> in_s(static_cast<std::size_t>(d), false);
    std::string s_name = "S={";
    int s_size = 0;
    for (std::size_t k = 0; k < separators.size(); ++k) {
      if (mask >> k & 1) {
        in_s[static_cast<std::size_t>(separators[k])] = true;
        if (s_size++) s_name += ",";
        s_name += std::to_string(separators[k]);
      }
    }
    s_name += "}";
    const std::string base = prefix + s_name;

    if (s_size == 0) {
      auto sc = run_scenario(spec, base + "/fifth=hub", 0, {}, std::vector<int>(n, 0));
      sc.components = components;
      report.scenarios.push_back(std::move(sc));
      continue;
    }

    std::vector<int> lowering(n, 0);
    lowering[0] = s_size;
    auto s_adjacent = [&](int p) {
      return in_s[static_cast<std::size_t>(((p - 1) % d + d) % d)] || in_s[static_cast<std::size_t>((p + 1) % d)];
    };
    for (int p : spec.leaf_positions) {
      int hits = 0;
      if (in_s[static_cast<std::size_t>(((p - 1) % d + d) % d)]) ++hits;
      if (in_s[static_cast<std::size_t>((p + 1) % d)]) ++hits;
      lowering[static_cast<std::size_t>(at(p))] = hits;
    }

    // A leaf run touches S when either separator bounding it is in S.
    auto run_touches_s = [&](int p) {
      int a = p;
      while (at(a - 1) >= 0 && ((a - 1 - p) % d + d) % d != 0) --a;
      int b = p;
      while (at(b + 1) >= 0 && ((b + 1 - p) % d + d) % d != 0) ++b;
      return in_s[static_cast<std::size_t>(((a - 1) % d + d) % d)] || in_s[static_cast<std::size_t>(((b + 1) % d + d) % d)];
    };
    std::vector<int> candidates;
    for (int pass = 0; pass < 2; ++pass) {
      for (int p : spec.leaf_positions) {
        if (s_adjacent(p)) continue;
        if ((pass == 0) == run_touches_s(p)) continue;
        candidates.push_back(at(p));
      }
    }

    std::vector<int> blocked;
    for (int c : candidates) {
      auto sc = run_scenario(spec, base + "/fifth=" + spec.vertices[static_cast<std::size_t>(c)].label +
                                       "/blocked=" + vertex_list(spec, blocked),
                             c, blocked, lowering);
      sc.components = components;
      report.scenarios.push_back(std::move(sc));
      lowering[static_cast<std::size_t>(c)]++;
      blocked.push_back(c);
    }
    auto sc = run_scenario(spec, base + "/all-blocked", std::nullopt, blocked, lowering);
    sc.components = components;
    report.scenarios.push_back(std::move(sc));
  }
}

}  // namespace

ValidationReport validate_entry(const ConfigurationSpec& spec) {
  ValidationReport report;
  report.entry_id = spec.id;
  check_well_formed(spec);
  switch (spec.scheme) {
    case Scheme::PlainZero:
      report.scenarios.push_back(
          run_scenario(spec, "plain", std::nullopt, {}, std::vector<int>(static_cast<std::size_t>(spec.size()), 0)));
      break;
    case Scheme::TrialSequence:
      validate_trials(spec, report);
      break;
    case Scheme::NinePattern:
      validate_hub(spec, "", report);
      break;
    case Scheme::VirtualHub:
      if (!spec.parametric()) {
        validate_hub(spec, "", report);
        break;
      }
      // Every separator triple for the hub degrees that occur in practice up
      // to ten; larger hubs only add leaves that peel first.
      for (int d = 8; d <= 10; ++d) {
        for (int a = 0; a < d; ++a) {
          for (int b = a + 1; b < d; ++b) {
            for (int c = b + 1; c < d; ++c) {
              std::vector<int> leaves;
              for (int p = 0; p < d; ++p) {
                if (p != a && p != b && p != c) leaves.push_back(p);
              }
              const auto concrete = hub_configuration(d, leaves);
              const std::size_t first = report.scenarios.size();
              validate_hub(concrete,
                           "d=" + std::to_string(d) + "/sep={" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + "}/",
                           report);
              std::vector<std::string> labels;
              for (const auto& v : concrete.vertices) labels.push_back(v.label);
              for (std::size_t i = first; i < report.scenarios.size(); ++i) report.scenarios[i].labels = labels;
            }
          }
        }
      }
      break;
  }
  return report;
}

void certify(const ConfigurationSpec& spec) {
  const auto report = validate_entry(spec);
  const auto* fail = report.first_failure();
  if (!fail) return;
  auto label = [&](int v) {
    const auto i = static_cast<std::size_t>(v);
    return fail->labels.empty() ? spec.vertices[i].label : fail->labels[i];
  };
  std::string msg = "entry " + spec.id + " fails scenario " + fail->name + "; peeled";
  for (int v : fail->peel.order) msg += " " + label(v);
  msg += "; stuck";
  for (int v : fail->peel.stuck) msg += " " + label(v);
  throw Error(ErrorCode::ValidationFailure, msg);
}

}  // namespace planar5
