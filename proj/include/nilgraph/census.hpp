#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nilgraph/families.hpp"
#include "nilgraph/spectra.hpp"

namespace nilgraph {

enum class CensusFamily { SingleLabelCycle, MultiLabelCycle, Star, DoubleStar, Path };

// Accepts "cycle1", "cycle", "star", "double-star", "path".
std::optional<CensusFamily> parse_census_family(std::string_view name);
std::string to_string(CensusFamily family);

struct CensusOptions {
  CensusFamily family = CensusFamily::SingleLabelCycle;
  // Cycles and paths: largest vertex count. Stars: largest k and m_i.
  std::size_t max_n = 6;
  std::size_t label_alphabet = 3;   // multi-label cycles
  std::size_t deltas_per_spec = 2;  // stars: random delta draws per multiplicity vector
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::size_t max_rows = 200000;
  bool classify = true;
  bool verify = true;
  std::size_t samples = kDefaultSampleCount;
};

struct DoubleStarTask {
  StarSpec first;
  StarSpec second;
  std::string bridge_label;
  int bridge_dir = 1;
};

struct PathTask {
  std::size_t n = 0;
  std::vector<int> directions;
};

using CensusTask = std::variant<CycleSpec, StarSpec, DoubleStarTask, PathTask>;

struct CensusRow {
  std::string descriptor;
  std::size_t abelian_dim = 0;
  std::optional<SingularityStatus> status;
  std::optional<std::size_t> script_a_size;  // simple graphs only
  bool agreement = true;
  std::vector<std::string> disagreements;
};

struct CensusResult {
  std::vector<CensusRow> rows;

  std::size_t disagreement_count() const;
  bool all_agree() const { return disagreement_count() == 0; }
};

// Multiplicity vectors m_1 >= ... >= m_k with 1 <= k <= max_k, m_i <= max_m,
// in lexicographic order.
std::vector<std::vector<std::size_t>> multiplicity_vectors(std::size_t max_k, std::size_t max_m);

// All 2^n sign vectors, the all-plus vector first.
std::vector<std::vector<int>> all_orientations(std::size_t n);

// Sequences over Z1..Z<alphabet> using at least two labels, keeping the
// lexicographically least member of each rotation class.
std::vector<std::vector<std::string>> label_sequences_up_to_rotation(std::size_t n,
                                                                     std::size_t alphabet);

// Uniform random delta for the given multiplicities.
StarSpec random_star_spec(std::vector<std::size_t> multiplicities, std::uint64_t seed,
                          std::uint64_t index, const std::string& prefix = "v");

std::string describe(const CensusTask& task);

std::size_t census_estimate(const CensusOptions& options);

// Enumerated in deterministic order. Throws CensusTooLarge.
std::vector<CensusTask> census_tasks(const CensusOptions& options);

CensusRow evaluate_task(const CensusTask& task, const CensusOptions& options);

// Rows come back in task order regardless of the thread count.
CensusResult run_census(const CensusOptions& options);

}  // namespace nilgraph
