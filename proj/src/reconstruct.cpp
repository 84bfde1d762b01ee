#include "seqrecon/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "seqrecon/closed_forms.hpp"
#include "seqrecon/deletion_balls.hpp"
#include "seqrecon/error.hpp"

namespace seqrecon {

Code build_code(int q, int n, int d_min, double budget) {
  validate_alphabet(q);
  if (n < 1 || n > kMaxWordLength) {
    throw Error(ErrorCode::kDomain, "code length must be in 1..64");
  }
  if (d_min < 1) throw Error(ErrorCode::kDomain, "d_min must be >= 1");
  const double words = std::pow(static_cast<double>(q), n);
  const double estimate = words * words * n * n;
  if (estimate > budget) {
    std::ostringstream msg;
    msg << "greedy code over Z_" << q << "^" << n << " needs ~" << estimate
        << " operations, budget is " << budget;
    throw BudgetExceeded(estimate, budget, msg.str());
  }
  const std::uint64_t count = word_count(q, n);
  std::vector<Word> kept;
  PairCounter counter;
  for (std::uint64_t r = 0; r < count; ++r) {
    const Word w = unrank(q, n, r);
    counter.set_first(w.symbols(), q);
    const bool far = std::all_of(kept.begin(), kept.end(), [&](const Word& c) {
      return n - counter.lcs(c.symbols()) >= d_min;
    });
    if (far) kept.push_back(w);
  }
  return Code{q, n, d_min,
              WordSet::from_sorted_unchecked(q, n, std::move(kept))};
}

ChannelRequirement required_channels(int q, int n, int t, int d_min,
                                     const RequirementOptions& opts) {
  validate_alphabet(q);
  auto from = [](const FormulaValue& v) {
    return ChannelRequirement{v.value, v.value + 1,
                              "closed_form:" + std::string(to_string(v.id))};
  };
  if (d_min == 1 && t >= 0 && n >= t + 1) return from(n_single(q, n, t));
  if (q == 3 && d_min == 2) {
    try {
      return from(n3_double(n, t));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kOutsideTheoremRange) throw;
    }
  }
  if (q == 2 && d_min == 2 && t >= 2 && n >= std::max(8, 2 * t + 1)) {
    return from(n2_double(n, t));
  }
  if (q == 2 && d_min == t && t >= 1 && n >= 4 * t - 2) {
    return from(n2_dd(t, n));
  }
  SearchSpec spec;
  spec.q = q;
  spec.n = n;
  spec.t = t;
  spec.d = d_min;
  spec.witness_cap = 0;
  spec.workers = opts.workers;
  spec.budget = opts.budget;
  const SearchReport report = max_intersection(spec);
  const auto value = static_cast<std::int64_t>(report.maximum);
  return ChannelRequirement{value, value + 1, "search"};
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the low residue band so the modulus is exactly uniform.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over master + golden-ratio stride.
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ChannelBatch channel_outputs(const Word& c, int t, ChannelMode mode,
                             std::uint64_t seed, std::uint64_t target_distinct,
                             const OutputFilter& filter) {
  const int n = c.size();
  if (t < 0 || t > n) {
    throw Error(ErrorCode::kDomain, "channel deletions must be in 0..|c|");
  }
  const std::uint64_t available = ball_size(c, t);
  if (target_distinct > available) {
    throw Error(ErrorCode::kDomain,
                "requested " + std::to_string(target_distinct) +
                    " distinct outputs but the ball has " +
                    std::to_string(available));
  }
  ChannelBatch batch{c, t, WordSet(c.q(), n - t), mode, seed, 0};
  std::vector<Word> outputs;
  if (mode == ChannelMode::kAdversarial) {
    for (const Word& w : enumerate_ball(c, t)) {
      if (outputs.size() == target_distinct) break;
      if (!filter || filter(w)) outputs.push_back(w);
    }
    if (outputs.size() < target_distinct) {
      throw Error(ErrorCode::kDomain,
                  "filter admits only " + std::to_string(outputs.size()) +
                      " outputs");
    }
  } else {
    Rng rng(seed);
    std::set<Word> seen;
    std::vector<int> positions(n);
    std::vector<Symbol> kept;
    const std::uint64_t max_draws = kRetriesPerOutput * std::max<std::uint64_t>(target_distinct, 1);
    while (seen.size() < target_distinct) {
      if (batch.draws == max_draws) {
        throw Error(ErrorCode::kRetryExhausted,
                    "collected " + std::to_string(seen.size()) + " of " +
                        std::to_string(target_distinct) +
                        " distinct outputs in " + std::to_string(max_draws) +
                        " draws");
      }
      ++batch.draws;
      // Partial Fisher-Yates: the first t entries become the deleted set.
      std::iota(positions.begin(), positions.end(), 0);
      for (int i = 0; i < t; ++i) {
        const auto j = i + static_cast<int>(rng.below(n - i));
        std::swap(positions[i], positions[j]);
      }
      std::vector<bool> deleted(n, false);
      for (int i = 0; i < t; ++i) deleted[positions[i]] = true;
      kept.clear();
      for (int i = 0; i < n; ++i) {
        if (!deleted[i]) kept.push_back(c[i]);
      }
      seen.insert(Word::from_symbols_unchecked(c.q(), kept));
    }
    outputs.assign(seen.begin(), seen.end());
  }
  for (const Word& w : outputs) {
    if (!is_subsequence(w, c)) {
      throw std::logic_error("channel emitted " + w.str() +
                             " outside the deletion ball of " + c.str());
    }
  }
  batch.outputs = WordSet(c.q(), n - t, std::move(outputs));
  return batch;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kUnique: return "unique";
    case Verdict::kAmbiguous: return "ambiguous";
    case Verdict::kInconsistent: return "inconsistent";
  }
  return "?";
}

ReconstructionOutcome decode(const Code& code, std::span<const Word> outputs,
                             int t) {
  for (const Word& w : outputs) {
    if (w.size() != code.n - t) {
      throw Error(ErrorCode::kLengthMismatch,
                  "output " + w.str() + " does not have length n - t = " +
                      std::to_string(code.n - t));
    }
    if (w.q() != code.q) {
      throw Error(ErrorCode::kAlphabetMismatch,
                  "output " + w.str() + " is not over Z_" +
                      std::to_string(code.q));
    }
  }
  std::vector<Word> candidates;
  for (const Word& c : code.codewords) {
    const bool consistent =
        std::all_of(outputs.begin(), outputs.end(),
                    [&](const Word& w) { return is_subsequence(w, c); });
    if (consistent) candidates.push_back(c);
  }
  const Verdict verdict = candidates.empty()       ? Verdict::kInconsistent
                          : candidates.size() == 1 ? Verdict::kUnique
                                                   : Verdict::kAmbiguous;
  return ReconstructionOutcome{
      WordSet::from_sorted_unchecked(code.q, code.n, std::move(candidates)),
      verdict};
}

ReconstructionOutcome decode(const Code& code, const WordSet& outputs, int t) {
  return decode(code, std::span<const Word>(outputs.members()), t);
}

namespace {

std::optional<AmbiguityWitness> find_ambiguity(const Code& code, int t,
                                               std::int64_t channels) {
  const auto& words = code.codewords.members();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (static_cast<std::int64_t>(intersection_size(words[i], t, words[j], t)) <
          channels) {
        continue;
      }
      const WordSet shared = intersect_balls(words[i], t, words[j], t);
      std::vector<Word> outputs(shared.begin(), shared.begin() + channels);
      return AmbiguityWitness{
          words[i], words[j],
          WordSet::from_sorted_unchecked(code.q, code.n - t, std::move(outputs))};
    }
  }
  return std::nullopt;
}

}  // namespace

SimulationReport simulate(int q, int n, int t, int d_min, std::uint64_t trials,
                          std::uint64_t seed, const SimulationOptions& opts) {
  const Code code = build_code(q, n, d_min);
  const ChannelRequirement req = required_channels(q, n, t, d_min, opts.requirement);
  const std::int64_t channels = opts.channels.value_or(req.channels);
  if (channels < 1) throw Error(ErrorCode::kDomain, "channels must be >= 1");

  std::vector<Word> eligible;
  for (const Word& c : code.codewords) {
    if (static_cast<std::int64_t>(ball_size(c, t)) >= channels) eligible.push_back(c);
  }
  if (eligible.empty()) {
    throw Error(ErrorCode::kDomain, "no codeword has " +
                                        std::to_string(channels) +
                                        " distinct outputs");
  }

  SimulationReport report{q, n, t, d_min, trials, seed, req.channels, channels,
                          req.source, code.codewords.size(), eligible.size(),
                          0, 0, 0, std::nullopt};
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    const Word& c = eligible[rng.below(eligible.size())];
    const ChannelBatch batch = channel_outputs(
        c, t, ChannelMode::kRandom, rng.next(), static_cast<std::uint64_t>(channels));
    const ReconstructionOutcome outcome = decode(code, batch.outputs, t);
    switch (outcome.verdict) {
      case Verdict::kUnique: ++report.unique; break;
      case Verdict::kAmbiguous: ++report.ambiguous; break;
      case Verdict::kInconsistent: ++report.inconsistent; break;
    }
  }
  report.ambiguity_witness = find_ambiguity(code, t, channels);
  return report;
}

SharpnessReport exhaustive_sharpness(int q, int n, int t, int d_min,
                                     const RequirementOptions& opts) {
  const Code code = build_code(q, n, d_min);
  const ChannelRequirement req = required_channels(q, n, t, d_min, opts);
  const std::int64_t k = req.channels;
  SharpnessReport report{k, code.codewords.size(), 0, 0, 0, 0};

  const auto& words = code.codewords.members();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      report.max_pair_intersection = std::max(
          report.max_pair_intersection, intersection_size(words[i], t, words[j], t));
    }
  }

  std::vector<Word> subset(static_cast<std::size_t>(k));
  for (const Word& c : words) {
    const WordSet ball = enumerate_ball(c, t);
    const auto m = static_cast<std::int64_t>(ball.size());
    if (m < k) continue;
    ++report.codewords_checked;
    // Lexicographic walk over k-combinations of ball indices.
    std::vector<std::int64_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      for (std::int64_t s = 0; s < k; ++s) subset[s] = ball.members()[idx[s]];
      const ReconstructionOutcome out = decode(code, subset, t);
      ++report.subsets_checked;
      if (out.verdict != Verdict::kUnique || out.candidates.members().front() != c) {
        ++report.failures;
      }
      std::int64_t pos = k - 1;
      while (pos >= 0 && idx[pos] == m - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::int64_t s = pos + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
    }
  }
  return report;
}

}  // namespace seqrecon
