#include "seqrecon/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "seqrecon/deletion_balls.hpp"
#include "seqrecon/error.hpp"

namespace seqrecon {

namespace {

struct Partial {
  std::uint64_t maximum = 0;
  bool any = false;
  std::uint64_t count = 0;
  std::vector<Witness> witnesses;
  std::uint64_t pairs_examined = 0;
  std::uint64_t pairs_scored = 0;
};

double factorial(int q) {
  double f = 1;
  for (int i = 2; i <= q; ++i) f *= i;
  return f;
}

bool uses_reversal(const SearchSpec& spec) {
  return spec.symmetry_reduction && spec.k == 0;
}

void scan_block(const SearchSpec& spec, std::span<const std::uint64_t> xs,
                Partial& out) {
  const int q = spec.q;
  const int nx = spec.n + spec.k;
  const int ny = spec.n;
  const int length = spec.n - spec.t;
  const std::uint64_t y_count = word_count(q, ny);
  PairCounter counter;
  std::vector<Symbol> y(ny);
  for (std::uint64_t xr : xs) {
    const Word x = unrank(q, nx, xr);
    counter.set_first(x.symbols(), q);
    std::fill(y.begin(), y.end(), 0);
    for (std::uint64_t yi = 0; yi < y_count; ++yi) {
      if (yi > 0) {
        int pos = ny - 1;
        while (y[pos] == q - 1) y[pos--] = 0;
        ++y[pos];
      }
      ++out.pairs_examined;
      if (spec.d > 0 && ny - counter.lcs(y) < spec.d) continue;
      ++out.pairs_scored;
      const std::uint64_t size = counter.count(y, length);
      if (!out.any || size > out.maximum) {
        out.any = true;
        out.maximum = size;
        out.count = 0;
        out.witnesses.clear();
      }
      if (size == out.maximum) {
        ++out.count;
        if (out.witnesses.size() < static_cast<std::size_t>(spec.witness_cap)) {
          out.witnesses.push_back(
              Witness{x, Word::from_symbols_unchecked(q, y), size});
        }
      }
    }
  }
}

}  // namespace

void validate(const SearchSpec& spec) {
  validate_alphabet(spec.q);
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kDomain, "invalid search spec: " + what);
  };
  if (spec.n < 1) fail("n must be >= 1");
  if (spec.t < 0) fail("t must be >= 0");
  if (spec.k < 0) fail("k must be >= 0");
  if (spec.d < 0) fail("d must be >= 0");
  if (spec.n + spec.k > kMaxWordLength) fail("n + k exceeds 64");
  if (spec.witness_cap < 0) fail("witness cap must be >= 0");
  if (spec.workers < 0) fail("workers must be >= 0");
}

double estimate_work(const SearchSpec& spec) {
  const double nx = spec.n + spec.k;
  const double ny = spec.n;
  double classes = std::pow(static_cast<double>(spec.q), nx);
  if (spec.symmetry_reduction) {
    classes = std::max(1.0, classes / (factorial(spec.q) *
                                       (uses_reversal(spec) ? 2.0 : 1.0)));
  }
  const double pairs = classes * std::pow(static_cast<double>(spec.q), ny);
  const double length = std::max(0, spec.n - spec.t);
  const double per_pair = (nx + 1) * (ny + 1) * (length * spec.q + 1);
  return pairs * per_pair;
}

bool is_canonical(const Word& x, bool with_reversal) {
  const Word normal = relabel_normal_form(x);
  if (normal != x) return false;
  return !with_reversal || x <= relabel_normal_form(reverse(x));
}

SearchReport max_intersection(const SearchSpec& spec) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.spec = spec;
  if (spec.n - spec.t < 0) return report;

  const double estimate = estimate_work(spec);
  if (estimate > spec.budget) {
    std::ostringstream msg;
    msg << "search q=" << spec.q << " n=" << spec.n << " k=" << spec.k
        << " t=" << spec.t << " d=" << spec.d << " needs ~" << estimate
        << " cell operations, budget is " << spec.budget;
    throw BudgetExceeded(estimate, spec.budget, msg.str());
  }

  const int nx = spec.n + spec.k;
  const std::uint64_t x_count = word_count(spec.q, nx);
  std::vector<std::uint64_t> xs;
  const bool with_reversal = uses_reversal(spec);
  for (std::uint64_t r = 0; r < x_count; ++r) {
    if (!spec.symmetry_reduction || is_canonical(unrank(spec.q, nx, r), with_reversal)) {
      xs.push_back(r);
    }
  }
  report.classes_examined = xs.size();

  int workers = spec.workers > 0
                    ? spec.workers
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const std::size_t block =
      std::max<std::size_t>(1, xs.size() / (static_cast<std::size_t>(workers) * 8));
  const std::size_t blocks = (xs.size() + block - 1) / block;
  workers = static_cast<int>(std::min<std::size_t>(workers, std::max<std::size_t>(blocks, 1)));

  std::vector<Partial> partials(blocks);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t b = next++; b < blocks; b = next++) {
      const std::size_t lo = b * block;
      const std::size_t hi = std::min(xs.size(), lo + block);
      scan_block(spec, std::span(xs).subspan(lo, hi - lo), partials[b]);
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  }

  // Sequential merge in block order keeps witnesses lexicographic.
  bool any = false;
  for (const Partial& p : partials) {
    report.pairs_examined += p.pairs_examined;
    report.pairs_scored += p.pairs_scored;
    if (!p.any) continue;
    if (!any || p.maximum > report.maximum) {
      any = true;
      report.maximum = p.maximum;
      report.witness_count = 0;
      report.witnesses.clear();
    }
    if (p.maximum == report.maximum) {
      report.witness_count += p.count;
      for (const Witness& w : p.witnesses) {
        if (report.witnesses.size() >= static_cast<std::size_t>(spec.witness_cap)) break;
        report.witnesses.push_back(w);
      }
    }
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace seqrecon
