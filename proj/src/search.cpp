#include "knotgenus/search.hpp"

#include "knotgenus/genus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>
#include <unordered_map>

namespace knotgenus {

namespace {

struct Node {
  GaussCode code; // canonical
  std::string key;
  std::size_t genus = 0;
  std::size_t parent = 0;
  SearchStep step;
};

bool better(const Node& a, const Node& b) {
  return std::tuple(a.genus, a.code.crossings(), std::string_view(a.key)) <
         std::tuple(b.genus, b.code.crossings(), std::string_view(b.key));
}

std::vector<Node> expand(const Node& node, const SearchConfig& config) {
  std::vector<Node> children;
  for (const auto& bridge : enumerate_bridges(node.code, BridgeKind::both, config.min_bridge_len)) {
    if (config.only_strict && !strictly_decreases(node.code, bridge))
      continue;
    auto move = bridge_replace(node.code, bridge);
    SearchStep step;
    step.bridge_kind = bridge.kind;
    step.bridge_labels = bridge.labels;
    step.pattern_labels = move.pattern_labels;
    step.genus_after_move = genus(move.result);
    GaussCode reduced = std::move(move.result);
    if (config.apply_rii) {
      auto rii = rii_reduce_traced(reduced);
      reduced = std::move(rii.result);
      step.rii_cancelled = std::move(rii.cancelled);
    }
    Node child;
    child.code = canonical_form(reduced);
    child.key = serialize(child.code);
    child.genus = genus(child.code);
    step.code = child.code;
    step.genus = child.genus;
    if (child.genus > node.genus)
      throw InvariantViolation("bridge-replacing move increased genus of " + node.key);
    child.step = std::move(step);
    children.push_back(std::move(child));
  }
  return children;
}

std::vector<std::vector<Node>> expand_all(const std::vector<Node>& nodes, std::span<const std::size_t> frontier,
                                          const SearchConfig& config) {
  std::vector<std::vector<Node>> out(frontier.size());
  std::size_t workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  workers = std::min(workers, frontier.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < frontier.size(); ++i)
      out[i] = expand(nodes[frontier[i]], config);
    return out;
  }

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
          try {
            out[i] = expand(nodes[frontier[i]], config);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
              failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  return out;
}

} // namespace

void validate(const SearchConfig& config) {
  if (config.max_depth < 1)
    throw InvalidInput("search depth must be at least 1");
  if (config.beam_width && *config.beam_width < 1)
    throw InvalidInput("beam width must be at least 1");
  if (config.min_bridge_len < 1)
    throw InvalidInput("minimum bridge length must be at least 1");
}

SearchResult search(const GaussCode& code, const SearchConfig& config) {
  validate(config);
  if (!code.is_signed())
    throw InvalidInput("search requires a signed code");

  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  {
    Node root;
    root.code = canonical_form(code);
    root.key = serialize(root.code);
    root.genus = genus(root.code);
    seen.emplace(root.key, 0);
    nodes.push_back(std::move(root));
  }

  SearchResult result;
  result.input_genus = nodes.front().genus;
  std::size_t best = 0;
  std::vector<std::size_t> frontier{0};

  for (std::size_t depth = 0; depth < config.max_depth && !frontier.empty(); ++depth) {
    auto expanded = expand_all(nodes, frontier, config);
    result.nodes_expanded += frontier.size();

    std::vector<std::size_t> fresh;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      for (auto& child : expanded[f]) {
        if (seen.contains(child.key)) {
          ++result.duplicates_pruned;
          continue;
        }
        child.parent = frontier[f];
        seen.emplace(child.key, nodes.size());
        fresh.push_back(nodes.size());
        nodes.push_back(std::move(child));
      }
    }

    for (std::size_t id : fresh)
      if (better(nodes[id], nodes[best]))
        best = id;

    if (config.strategy == SearchStrategy::greedy) {
      std::sort(fresh.begin(), fresh.end(), [&](std::size_t a, std::size_t b) { return better(nodes[a], nodes[b]); });
      if (config.beam_width && fresh.size() > *config.beam_width)
        fresh.resize(*config.beam_width);
    }
    frontier = std::move(fresh);
  }

  result.best_code = nodes[best].code;
  result.best_genus = nodes[best].genus;
  for (std::size_t id = best; id != 0; id = nodes[id].parent)
    result.move_trace.push_back(nodes[id].step);
  std::reverse(result.move_trace.begin(), result.move_trace.end());
  result.exhausted = frontier.empty();
  return result;
}

} // namespace knotgenus
