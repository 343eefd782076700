#pragma once

#include "knotgenus/code.hpp"
#include "knotgenus/moves.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace knotgenus {

enum class SearchStrategy { greedy, breadth_first };

struct SearchConfig {
  SearchStrategy strategy = SearchStrategy::greedy;
  std::size_t max_depth = 1;
  std::optional<std::size_t> beam_width; // unlimited when empty
  std::size_t min_bridge_len = 2;
  bool apply_rii = true;
  bool only_strict = false;
  /// Worker threads for expanding a level; 0 picks the hardware count.
  std::size_t threads = 1;
};

/// Throws InvalidInput when a field is out of range.
void validate(const SearchConfig& config);

/// One move on the path from the input to the best code.
struct SearchStep {
  Pass bridge_kind = Pass::over;
  std::vector<Label> bridge_labels;    // as seen in the parent's canonical form
  std::vector<Label> pattern_labels;
  std::size_t genus_after_move = 0;
  std::vector<RiiPair> rii_cancelled;
  GaussCode code;                      // canonical form after move and reduction
  std::size_t genus = 0;
};

struct SearchResult {
  GaussCode best_code; // canonical form
  std::size_t best_genus = 0;
  std::size_t input_genus = 0;
  std::vector<SearchStep> move_trace;
  std::size_t nodes_expanded = 0;
  std::size_t duplicates_pruned = 0;
  /// The frontier emptied before the depth limit. For breadth-first search
  /// this means every reachable code was seen.
  bool exhausted = false;
};

/// Minimizes canonical genus over sequences of bridge-replacing moves, each
/// followed by Reidemeister II reduction when enabled. The result does not
/// depend on the thread count.
SearchResult search(const GaussCode& code, const SearchConfig& config);

} // namespace knotgenus
