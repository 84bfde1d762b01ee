// seqrecon: command-line front end for the deletion-ball toolkit.
//
// Exit status: 0 success, 1 failed verification, 2 usage error, 3 refusal
// (work budget or enumeration cap).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqrecon/claims.hpp"
#include "seqrecon/closed_forms.hpp"
#include "seqrecon/deletion_balls.hpp"
#include "seqrecon/error.hpp"
#include "seqrecon/extremal.hpp"
#include "seqrecon/reconstruct.hpp"
#include "seqrecon/search.hpp"
#include "seqrecon/serialize.hpp"

namespace {

using namespace seqrecon;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;

enum class Format { kText, kJson, kCsv };

struct Globals {
  Format format = Format::kText;
  std::string output;
  int workers = 0;
  double budget = kDefaultSearchBudget;
};

// "a..b" (inclusive) or a single integer.
IntRange parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    std::size_t used_hi = 0;
    const IntRange r{std::stoi(lo, &used), std::stoi(hi, &used_hi)};
    if (used != lo.size() || used_hi != hi.size()) throw std::invalid_argument(text);
    if (r.lo > r.hi) {
      throw Error(ErrorCode::kParse, flag + " range " + text + " is empty");
    }
    return r;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParse,
                flag + " expects an integer or a..b range, got '" + text + "'");
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kResourceCap:
      return kExitRefused;
    case ErrorCode::kRetryExhausted:
      return kExitFailed;
    default:
      return kExitUsage;
  }
}

std::string format_relation(const VerificationRecord& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS " : "FAIL ") << r.claim << " q=" << r.params.q
      << " n=" << r.params.n << " t=" << r.params.t << " d=" << r.params.d
      << ": observed " << r.observed << ' ' << to_string(r.relation)
      << " expected " << r.expected;
  if (!r.detail.empty()) out << " (" << r.detail << ')';
  return out.str();
}

std::string words_text(const WordSet& s) {
  std::string out;
  for (const Word& w : s) {
    out += "  ";
    out += w.empty() ? std::string("(empty)") : w.str();
    out += '\n';
  }
  return out;
}

class Cli {
 public:
  int run(int argc, char** argv);

 private:
  void emit(const std::string& text) { out_ += text; }
  void emit(const json& j) { out_ += j.dump(2) + "\n"; }
  int flush();

  void define_ball();
  void define_intersect();
  void define_dist();
  void define_formula();
  void define_table();
  void define_search();
  void define_verify();
  void define_pair();
  void define_code();
  void define_channels();
  void define_decode();
  void define_simulate();

  CLI::App app_{"Deletion-ball intersections, closed forms and reconstruction"};
  Globals g_;
  std::string format_name_ = "text";
  std::string out_;
  int status_ = kExitOk;
  std::function<void()> action_;

  // Shared option storage; each subcommand binds the ones it uses.
  int q_ = 3;
  int n_ = 0;
  int t_ = 0;
  int d_ = 0;
  int k_ = 0;
  int tx_ = 0;
  int ty_ = 0;
  std::string word_;
  std::string word2_;
  std::string id_;
  std::string n_range_;
  std::string t_range_;
  std::vector<std::string> outputs_;
  bool count_only_ = false;
  bool no_symmetry_ = false;
  bool desk_ = false;
  int witness_cap_ = kDefaultWitnessCap;
  std::uint64_t trials_ = 100;
  std::uint64_t seed_ = 0;
  std::int64_t channels_ = 0;
};

void Cli::define_ball() {
  auto* c = app_.add_subcommand("ball", "Enumerate or count the deletion ball D_t(x)");
  c->add_option("word", word_, "Center as a digit string")->required();
  c->add_option("--q", q_, "Alphabet size")->check(CLI::Range(kMinAlphabet, kMaxAlphabet));
  c->add_option("--t", t_, "Deletions")->required();
  c->add_flag("--count", count_only_, "Print only the size");
  c->callback([this] {
    action_ = [this] {
      const Word x = parse_word(word_, q_);
      const std::uint64_t size = ball_size(x, t_);
      if (count_only_) {
        if (g_.format == Format::kJson) {
          emit(json{{"word", x}, {"t", t_}, {"size", size}});
        } else {
          emit(std::to_string(size) + "\n");
        }
        return;
      }
      const WordSet ball = enumerate_ball(x, t_);
      switch (g_.format) {
        case Format::kJson:
          emit(json{{"word", x}, {"t", t_}, {"size", size}, {"members", ball}});
          break;
        case Format::kCsv: emit("word\n" + to_lines(ball)); break;
        case Format::kText:
          emit("D_" + std::to_string(t_) + "(" + x.str() + ") has " +
               std::to_string(size) + " members\n" + words_text(ball));
          break;
      }
    };
  });
}

void Cli::define_intersect() {
  auto* c = app_.add_subcommand("intersect", "Intersect D_tx(x) with D_ty(y)");
  c->add_option("x", word_)->required();
  c->add_option("y", word2_)->required();
  c->add_option("--q", q_, "Alphabet size")->check(CLI::Range(kMinAlphabet, kMaxAlphabet));
  c->add_option("--tx", tx_, "Deletions on x")->required();
  c->add_option("--ty", ty_, "Deletions on y")->required();
  c->add_flag("--count", count_only_, "Print only the size");
  c->callback([this] {
    action_ = [this] {
      const Word x = parse_word(word_, q_);
      const Word y = parse_word(word2_, q_);
      const std::uint64_t size = intersection_size(x, tx_, y, ty_);
      json j{{"x", x}, {"y", y}, {"tx", tx_}, {"ty", ty_}, {"size", size}};
      std::optional<WordSet> members;
      if (!count_only_) {
        members = intersect_balls(x, tx_, y, ty_);
        j["members"] = *members;
      }
      switch (g_.format) {
        case Format::kJson: emit(j); break;
        case Format::kCsv:
          emit(members ? "word\n" + to_lines(*members) : "size\n" + std::to_string(size) + "\n");
          break;
        case Format::kText:
          emit("size " + std::to_string(size) + "\n" +
               (members ? words_text(*members) : std::string()));
          break;
      }
    };
  });
}

void Cli::define_dist() {
  auto* c = app_.add_subcommand("dist", "Deletion distance and LCS length");
  c->add_option("x", word_)->required();
  c->add_option("y", word2_)->required();
  c->add_option("--q", q_, "Alphabet size")->check(CLI::Range(kMinAlphabet, kMaxAlphabet));
  c->callback([this] {
    action_ = [this] {
      const Word x = parse_word(word_, q_);
      const Word y = parse_word(word2_, q_);
      const int d = deletion_distance(x, y);
      const int lcs = lcs_length(x, y);
      if (g_.format == Format::kJson) {
        emit(json{{"x", x}, {"y", y}, {"distance", d}, {"lcs", lcs}});
      } else if (g_.format == Format::kCsv) {
        emit("x,y,distance,lcs\n" + x.str() + "," + y.str() + "," +
             std::to_string(d) + "," + std::to_string(lcs) + "\n");
      } else {
        emit("distance " + std::to_string(d) + " (lcs " + std::to_string(lcs) + ")\n");
      }
    };
  });
}

FormulaId parse_formula(const std::string& id) {
  const auto f = formula_from_string(id);
  if (!f) throw Error(ErrorCode::kParse, "unknown formula id '" + id + "'");
  return *f;
}

void Cli::define_formula() {
  auto* c = app_.add_subcommand("formula", "Evaluate one closed form");
  c->add_option("id", id_, "dq, n_single, n2_double, n2_dd, m0, m1, f, n3_double, n3_cross, n_aux")
      ->required();
  c->add_option("--n", n_)->required();
  c->add_option("--t", t_)->required();
  c->add_option("--q", q_);
  c->add_option("--d", d_);
  c->callback([this] {
    action_ = [this] {
      const FormulaValue v = evaluate(parse_formula(id_), FormulaPoint{q_, n_, t_, d_});
      if (g_.format == Format::kJson) {
        emit(json(v));
      } else if (g_.format == Format::kCsv) {
        emit(formula_table_csv({v}));
      } else {
        emit(std::string(to_string(v.id)) + "(n=" + std::to_string(n_) + ", t=" +
             std::to_string(t_) + ") = " + std::to_string(v.value) + "\n");
      }
    };
  });
}

void Cli::define_table() {
  auto* c = app_.add_subcommand("table", "Evaluate a closed form over an (n,t) grid");
  c->add_option("id", id_)->required();
  c->add_option("--n-range", n_range_, "a..b")->required();
  c->add_option("--t-range", t_range_, "a..b")->required();
  c->add_option("--q", q_);
  c->add_option("--d", d_);
  c->callback([this] {
    action_ = [this] {
      const auto rows = formula_table(parse_formula(id_), parse_range(n_range_, "--n-range"),
                                      parse_range(t_range_, "--t-range"), q_, d_);
      if (g_.format == Format::kJson) {
        emit(formula_table_json(rows));
      } else {
        emit(formula_table_csv(rows));
      }
    };
  });
}

void Cli::define_search() {
  auto* c = app_.add_subcommand("search", "Exhaustive maximum of |D_{t+k}(x) ∩ D_t(y)|");
  c->add_option("--q", q_)->check(CLI::Range(kMinAlphabet, kMaxAlphabet));
  c->add_option("--n", n_range_, "Length of y, or a..b")->required();
  c->add_option("--t", t_range_, "Deletions on y, or a..b")->required();
  c->add_option("--k", k_, "Extra length (and deletions) of x");
  c->add_option("--d", d_, "Minimum deletion distance");
  c->add_option("--witness-cap", witness_cap_, "Witnesses listed per report");
  c->add_flag("--no-symmetry", no_symmetry_, "Scan every x, not only canonical ones");
  c->callback([this] {
    action_ = [this] {
      const IntRange nr = parse_range(n_range_, "--n");
      const IntRange tr = parse_range(t_range_, "--t");
      std::vector<SearchReport> reports;
      for (int n = nr.lo; n <= nr.hi; ++n) {
        for (int t = tr.lo; t <= tr.hi && t <= n; ++t) {
          SearchSpec spec;
          spec.q = q_;
          spec.n = n;
          spec.k = k_;
          spec.t = t;
          spec.d = d_;
          spec.symmetry_reduction = !no_symmetry_;
          spec.witness_cap = witness_cap_;
          spec.workers = g_.workers;
          spec.budget = g_.budget;
          reports.push_back(max_intersection(spec));
        }
      }
      if (g_.format == Format::kJson) {
        emit(reports.size() == 1 ? json(reports.front()) : json(reports));
      } else if (g_.format == Format::kCsv) {
        std::string out = search_csv_header();
        for (const auto& r : reports) out += search_csv_row(r);
        emit(out);
      } else {
        for (const auto& r : reports) {
          std::ostringstream o;
          o << "q=" << r.spec.q << " n=" << r.spec.n << " k=" << r.spec.k
            << " t=" << r.spec.t << " d=" << r.spec.d << ": maximum " << r.maximum
            << ", " << r.witness_count << " maximizing pairs, " << r.pairs_examined
            << " pairs examined, " << r.elapsed_ms << " ms\n";
          for (const Witness& w : r.witnesses) {
            o << "  " << w.x.str() << ' ' << w.y.str() << ' ' << w.size << '\n';
          }
          emit(o.str());
        }
      }
    };
  });
}

void Cli::define_verify() {
  auto* c = app_.add_subcommand("verify", "Check a registered claim against search or enumeration");
  c->add_option("claim", id_, "Claim id, or 'all'")->required();
  c->add_option("--q", q_);
  c->add_option("--n", n_range_, "n or a..b");
  c->add_option("--t", t_range_, "t or a..b (default: every valid t)");
  c->add_option("--d", d_, "Minimum distance (reconstruction)")->default_val(2);
  c->add_flag("--desk", desk_, "With 'all': run the fixed desk-scale grid");
  c->callback([this] {
    action_ = [this] {
      const ClaimOptions opts{g_.workers, g_.budget};
      std::vector<VerificationRecord> rows;
      if (id_ == "all") {
        if (!desk_) throw Error(ErrorCode::kParse, "'verify all' requires --desk");
        for (const SweepEntry& e : desk_sweep()) {
          auto part = verify_sweep(e.claim, e.q, e.n_range, e.t_range, e.d, opts);
          rows.insert(rows.end(), part.begin(), part.end());
        }
      } else {
        if (!is_claim(id_)) {
          throw Error(ErrorCode::kUnknownClaim, "unknown claim '" + id_ + "'");
        }
        if (n_range_.empty()) throw Error(ErrorCode::kParse, "verify " + id_ + " needs --n");
        const IntRange nr = parse_range(n_range_, "--n");
        const IntRange tr = t_range_.empty() ? IntRange{0, nr.hi} : parse_range(t_range_, "--t");
        if (nr.lo == nr.hi && tr.lo == tr.hi) {
          rows.push_back(verify_claim(id_, ClaimParams{q_, nr.lo, tr.lo, d_}, opts));
        } else {
          rows = verify_sweep(id_, q_, nr, tr, d_, opts);
          if (rows.empty()) {
            throw Error(ErrorCode::kDomain, id_ + " does not cover any point of the given ranges");
          }
        }
      }
      std::size_t failed = 0;
      for (const auto& r : rows) failed += r.pass ? 0 : 1;
      if (failed > 0) status_ = kExitFailed;
      if (g_.format == Format::kJson) {
        emit(json{{"records", rows}, {"total", rows.size()}, {"failed", failed}});
      } else if (g_.format == Format::kCsv) {
        std::string out = verification_csv_header();
        for (const auto& r : rows) out += verification_csv_row(r);
        emit(out);
      } else {
        std::string out;
        for (const auto& r : rows) out += format_relation(r) + "\n";
        out += std::to_string(rows.size()) + " checks, " + std::to_string(failed) + " failed\n";
        emit(out);
      }
    };
  });
}

void Cli::define_pair() {
  auto* c = app_.add_subcommand("pair", "Print an explicit extremal pair");
  c->add_option("family", id_, "m1, m0, thm1 or conjecture")->required();
  c->add_option("--n", n_)->required();
  c->add_option("--q", q_);
  c->add_option("--t", t_, "Also evaluate the pair's intersection at this t");
  c->callback([this] {
    action_ = [this] {
      ExtremalPair p = id_ == "m1"           ? pair_m1(n_)
                       : id_ == "m0"         ? pair_m0(n_)
                       : id_ == "thm1"       ? pair_thm1(q_, n_)
                       : id_ == "conjecture" ? pair_conjecture(q_, n_)
                                             : throw Error(ErrorCode::kParse,
                                                           "unknown pair family '" + id_ + "'");
      json j = p;
      const bool with_t = app_.get_subcommand("pair")->count("--t") > 0;
      if (with_t) {
        j["t"] = t_;
        j["size"] = intersection_size(p.x, t_ + p.k, p.y, t_);
        const auto claimed = claimed_intersection(p, t_);
        j["claimed_size"] = claimed ? json(*claimed) : json(nullptr);
      }
      if (g_.format == Format::kJson) {
        emit(j);
      } else {
        std::string out = "x " + p.x.str() + "\ny " + p.y.str() + "\nclaimed distance " +
                          std::to_string(p.claimed_distance) + ", formula " +
                          std::string(to_string(p.formula)) + "\n";
        if (with_t) out += "intersection at t=" + std::to_string(t_) + ": " + j["size"].dump() + "\n";
        emit(out);
      }
    };
  });
}

void Cli::define_code() {
  auto* c = app_.add_subcommand("code", "Build the greedy lexicographic code");
  c->add_option("--q", q_)->check(CLI::Range(kMinAlphabet, kMaxAlphabet));
  c->add_option("--n", n_)->required();
  c->add_option("--d", d_, "Minimum deletion distance")->required();
  c->callback([this] {
    action_ = [this] {
      const Code code = build_code(q_, n_, d_, g_.budget);
      if (g_.format == Format::kJson) {
        emit(json(code));
      } else if (g_.format == Format::kCsv) {
        emit("codeword\n" + to_lines(code.codewords));
      } else {
        emit(std::to_string(code.codewords.size()) + " codewords\n" + words_text(code.codewords));
      }
    };
  });
}

void Cli::define_channels() {
  auto* c = app_.add_subcommand("channels", "Channels needed for guaranteed reconstruction");
  c->add_option("--q", q_)->check(CLI::Range(kMinAlphabet, kMaxAlphabet));
  c->add_option("--n", n_)->required();
  c->add_option("--t", t_)->required();
  c->add_option("--d", d_)->required();
  c->callback([this] {
    action_ = [this] {
      const ChannelRequirement r = required_channels(q_, n_, t_, d_, {g_.workers, g_.budget});
      if (g_.format == Format::kJson) {
        emit(json(r));
      } else {
        emit(std::to_string(r.channels) + " channels (maximum intersection " +
             std::to_string(r.max_intersection) + ", " + r.source + ")\n");
      }
    };
  });
}

void Cli::define_decode() {
  auto* c = app_.add_subcommand("decode", "Decode channel outputs against the greedy code");
  c->add_option("outputs", outputs_, "Distinct channel outputs")->required();
  c->add_option("--q", q_)->check(CLI::Range(kMinAlphabet, kMaxAlphabet));
  c->add_option("--n", n_)->required();
  c->add_option("--t", t_)->required();
  c->add_option("--d", d_)->required();
  c->callback([this] {
    action_ = [this] {
      const Code code = build_code(q_, n_, d_, g_.budget);
      std::vector<Word> outs;
      for (const auto& s : outputs_) outs.push_back(parse_word(s, q_));
      const ReconstructionOutcome o = decode(code, outs, t_);
      if (g_.format == Format::kJson) {
        emit(json(o));
      } else {
        emit(std::string(to_string(o.verdict)) + "\n" + words_text(o.candidates));
      }
    };
  });
}

void Cli::define_simulate() {
  auto* c = app_.add_subcommand("simulate", "Random channel trials against the greedy code");
  c->add_option("--q", q_)->check(CLI::Range(kMinAlphabet, kMaxAlphabet));
  c->add_option("--n", n_)->required();
  c->add_option("--t", t_)->required();
  c->add_option("--d", d_)->required();
  c->add_option("--trials", trials_)->default_val(100);
  c->add_option("--seed", seed_)->default_val(0);
  c->add_option("--channels", channels_, "Outputs per trial (default: the threshold)");
  c->callback([this] {
    action_ = [this] {
      SimulationOptions opts;
      opts.requirement = {g_.workers, g_.budget};
      if (app_.get_subcommand("simulate")->count("--channels") > 0) opts.channels = channels_;
      const SimulationReport r = simulate(q_, n_, t_, d_, trials_, seed_, opts);
      if (g_.format == Format::kJson) {
        emit(json(r));
      } else {
        std::ostringstream o;
        o << r.trials << " trials, " << r.channels << " outputs each (threshold "
          << r.threshold << ", " << r.threshold_source << "): " << r.unique << " unique, "
          << r.ambiguous << " ambiguous, " << r.inconsistent << " inconsistent\n";
        if (r.ambiguity_witness) {
          o << "ambiguity witness: " << r.ambiguity_witness->first.str() << " and "
            << r.ambiguity_witness->second.str() << " share " << r.channels << " outputs\n";
        } else {
          o << "no ambiguity witnessed\n";
        }
        emit(o.str());
      }
    };
  });
}

int Cli::flush() {
  if (g_.output.empty()) {
    std::cout << out_;
    std::cout.flush();
    return std::cout ? status_ : kExitUsage;
  }
  std::ofstream file(g_.output);
  file << out_;
  if (!file) {
    std::cerr << "error: cannot write " << g_.output << "\n";
    return kExitUsage;
  }
  return status_;
}

int Cli::run(int argc, char** argv) {
  if (const char* env = std::getenv("SEQRECON_BUDGET")) {
    try {
      g_.budget = std::stod(env);
    } catch (const std::logic_error&) {
      std::cerr << "error: SEQRECON_BUDGET is not a number\n";
      return kExitUsage;
    }
  }
  app_.add_option("--format", format_name_, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app_.add_option("--output,-o", g_.output, "Write to a file instead of standard output");
  app_.add_option("--workers", g_.workers, "Worker threads (0: all cores)")
      ->check(CLI::NonNegativeNumber);
  app_.add_option("--budget", g_.budget, "Work budget in DP cell operations (env SEQRECON_BUDGET)")
      ->check(CLI::PositiveNumber);
  app_.require_subcommand(1);
  app_.fallthrough();

  define_ball();
  define_intersect();
  define_dist();
  define_formula();
  define_table();
  define_search();
  define_verify();
  define_pair();
  define_code();
  define_channels();
  define_decode();
  define_simulate();

  bool json_mode = false;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--format" && std::string(argv[i + 1]) == "json") json_mode = true;
  }

  try {
    app_.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app_.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app_.exit(e);
  } catch (const CLI::ParseError& e) {
    if (json_mode) {
      std::cout << error_json(ErrorCode::kParse, e.what()).dump(2) << "\n";
    } else {
      std::cerr << "usage error: " << e.what() << "\n";
    }
    return kExitUsage;
  }
  g_.format = format_name_ == "json" ? Format::kJson
              : format_name_ == "csv" ? Format::kCsv
                                      : Format::kText;

  try {
    action_();
  } catch (const BudgetExceeded& e) {
    out_.clear();
    if (g_.format == Format::kJson) {
      json j = error_json(e.code(), e.what());
      j["error"]["estimate"] = e.estimate();
      j["error"]["budget"] = e.budget();
      emit(j);
      flush();
    } else {
      std::cerr << "refused: " << e.what() << "\n";
    }
    return kExitRefused;
  } catch (const Error& e) {
    out_.clear();
    if (g_.format == Format::kJson) {
      emit(error_json(e.code(), e.what()));
      flush();
    } else {
      std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    }
    return exit_code_for(e.code());
  }
  return flush();
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  return cli.run(argc, argv);
}
