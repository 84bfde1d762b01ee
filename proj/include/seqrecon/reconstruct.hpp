#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "seqrecon/search.hpp"
#include "seqrecon/word.hpp"
#include "seqrecon/word_set.hpp"

namespace seqrecon {

// Codebook whose distinct members are pairwise at deletion distance >= d_min.
struct Code {
  int q;
  int n;
  int d_min;
  WordSet codewords;
};

inline constexpr double kDefaultCodeBudget = 1e10;

// Greedy lexicographic code: scan Z_q^n in order and keep a word iff it is
// at distance >= d_min from every word kept so far.
Code build_code(int q, int n, int d_min, double budget = kDefaultCodeBudget);

struct ChannelRequirement {
  std::int64_t max_intersection;  // N_q(n, d, t)
  std::int64_t channels;          // N_q(n, d, t) + 1
  std::string source;             // "closed_form:<id>" or "search"
};

struct RequirementOptions {
  int workers = 0;
  double budget = kDefaultSearchBudget;
};

// N_q(n,d_min,t) + 1 from a closed form when one covers the point, otherwise
// from exhaustive search (which may throw BudgetExceeded).
ChannelRequirement required_channels(int q, int n, int t, int d_min,
                                     const RequirementOptions& opts = {});

// mt19937_64 behind a portable bounded draw. std::uniform_int_distribution is
// implementation-defined, so it is not used; the same seed gives the same
// stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Seed of the index-th independent stream derived from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

enum class ChannelMode { kRandom, kAdversarial };

struct ChannelBatch {
  Word source;
  int t;
  WordSet outputs;
  ChannelMode mode;
  std::uint64_t seed;
  std::uint64_t draws;  // channel uses consumed (random mode)
};

using OutputFilter = std::function<bool(const Word&)>;

inline constexpr std::uint64_t kRetriesPerOutput = 10000;

// Random mode deletes a uniformly random t-subset of positions per draw
// until `target_distinct` distinct outputs are seen, giving up after
// kRetriesPerOutput * target_distinct draws. Adversarial mode takes the first
// `target_distinct` members of D_t(c), in lexicographic order, that pass
// `filter`.
ChannelBatch channel_outputs(const Word& c, int t, ChannelMode mode,
                             std::uint64_t seed, std::uint64_t target_distinct,
                             const OutputFilter& filter = {});

enum class Verdict { kUnique, kAmbiguous, kInconsistent };
std::string_view to_string(Verdict v);

struct ReconstructionOutcome {
  WordSet candidates;
  Verdict verdict;
};

// Candidates are the codewords whose t-deletion ball contains every output.
ReconstructionOutcome decode(const Code& code, std::span<const Word> outputs,
                             int t);
ReconstructionOutcome decode(const Code& code, const WordSet& outputs, int t);

struct AmbiguityWitness {
  Word first;
  Word second;
  WordSet outputs;
};

struct SimulationReport {
  int q;
  int n;
  int t;
  int d_min;
  std::uint64_t trials;
  std::uint64_t seed;
  std::int64_t threshold;  // required channel count
  std::int64_t channels;   // outputs actually requested per trial
  std::string threshold_source;
  std::size_t code_size;
  // Codewords whose ball has at least `channels` members; trials draw only
  // from these since distinct outputs beyond the ball size do not exist.
  std::size_t eligible_codewords;
  std::uint64_t unique = 0;
  std::uint64_t ambiguous = 0;
  std::uint64_t inconsistent = 0;
  // Two codewords sharing `channels` outputs, decoded from exactly those
  // outputs; nullopt when no code pair shares that many.
  std::optional<AmbiguityWitness> ambiguity_witness;
};

struct SimulationOptions {
  std::optional<std::int64_t> channels;  // defaults to the threshold
  RequirementOptions requirement;
};

SimulationReport simulate(int q, int n, int t, int d_min, std::uint64_t trials,
                          std::uint64_t seed,
                          const SimulationOptions& opts = {});

struct SharpnessReport {
  std::int64_t threshold;
  std::size_t code_size;
  std::size_t codewords_checked;  // balls with at least `threshold` members
  std::uint64_t subsets_checked;
  std::uint64_t failures;
  std::uint64_t max_pair_intersection;  // over distinct codeword pairs
};

// Decodes every threshold-sized subset of every codeword's ball and counts
// the subsets that do not decode uniquely to their source.
SharpnessReport exhaustive_sharpness(int q, int n, int t, int d_min,
                                     const RequirementOptions& opts = {});

}  // namespace seqrecon
