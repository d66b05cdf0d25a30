#include <algorithm>
#include <map>
#include <queue>

#include "cpg/passes.hpp"

namespace cpg {

std::string_view to_string(DfgMode mode) {
  return mode == DfgMode::FlowSensitive ? "flow" : "decl";
}

bool PassContext::done(std::string_view pass) const {
  return std::find(completed.begin(), completed.end(), pass) != completed.end();
}

namespace {

std::string describe_cycle(std::span<const Pass> passes, const std::map<std::string, std::size_t, std::less<>>& index,
                           const std::vector<bool>& placed) {
  // Walk dependencies among unplaced passes until a pass repeats.
  std::size_t current = 0;
  while (placed[current]) ++current;
  std::vector<std::size_t> trail;
  std::vector<int> seen_at(passes.size(), -1);
  while (seen_at[current] < 0) {
    seen_at[current] = static_cast<int>(trail.size());
    trail.push_back(current);
    for (const auto& dep : passes[current].depends_on) {
      const std::size_t d = index.at(dep);
      if (!placed[d]) {
        current = d;
        break;
      }
    }
  }
  std::string text;
  for (std::size_t i = static_cast<std::size_t>(seen_at[current]); i < trail.size(); ++i) {
    text += passes[trail[i]].name + " -> ";
  }
  return text + passes[current].name;
}

}  // namespace

std::vector<std::size_t> order_passes(std::span<const Pass> registered) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < registered.size(); ++i) {
    if (!index.emplace(registered[i].name, i).second) {
      throw ConfigurationError("pass registered twice: " + registered[i].name);
    }
  }
  std::vector<std::size_t> missing(registered.size(), 0);
  std::vector<std::vector<std::size_t>> dependents(registered.size());
  for (std::size_t i = 0; i < registered.size(); ++i) {
    for (const auto& dep : registered[i].depends_on) {
      auto it = index.find(dep);
      if (it == index.end()) {
        throw ConfigurationError("pass '" + registered[i].name + "' depends on unknown pass '" + dep + "'");
      }
      ++missing[i];
      dependents[it->second].push_back(i);
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < registered.size(); ++i) {
    if (missing[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> order;
  std::vector<bool> placed(registered.size(), false);
  while (!ready.empty()) {
    const std::size_t next = ready.top();
    ready.pop();
    order.push_back(next);
    placed[next] = true;
    for (std::size_t d : dependents[next]) {
      if (--missing[d] == 0) ready.push(d);
    }
  }
  if (order.size() != registered.size()) {
    throw ConfigurationError("pass dependency cycle: " + describe_cycle(registered, index, placed));
  }
  return order;
}

std::vector<Pass> default_passes() {
  return {
      {"symbols", {}, symbol_pass},
      {"eog", {"symbols"}, eog_pass},
      {"calls", {"symbols"}, call_pass},
      {"types", {"symbols", "calls"}, type_pass},
      {"inference", {"calls", "types"}, inference_pass},
      {"dfg", {"eog", "inference"}, dfg_pass},
  };
}

void run_passes(PassContext& context, std::span<const Pass> passes,
                const std::function<void(const Pass&)>& between) {
  for (std::size_t i : order_passes(passes)) {
    if (between) between(passes[i]);
    passes[i].run(context);
    context.completed.push_back(passes[i].name);
  }
}

}  // namespace cpg
