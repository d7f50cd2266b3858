#include "tspectra/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

#include <Eigen/Dense>

namespace tspectra {

i64 eigenvalue(const Partition& p) {
  i64 total = 0;
  i64 row = 1;
  for (i64 part : p.parts()) {
    total += triangular(part) - part * row;
    ++row;
  }
  return total;
}

i64 content_sum(const Partition& p) {
  TableauView tableau{p};
  i64 total = 0;
  for (i64 row = 1; row <= p.count(); ++row) {
    for (i64 col = 1; tableau.contains(row, col); ++col) {
      total += tableau.entry(row, col);
    }
  }
  return total;
}

std::vector<ArmLeg> arm_leg_decomposition(const Partition& p) {
  const Partition conj = p.conjugate();
  std::vector<ArmLeg> pairs;
  for (i64 i = 1; i <= p.count(); ++i) {
    i64 row_len = p.parts()[static_cast<size_t>(i - 1)];
    if (row_len < i) break;  // past the diagonal
    i64 col_len = conj.parts()[static_cast<size_t>(i - 1)];
    pairs.push_back({triangular(row_len - i), -triangular(col_len - i)});
  }
  return pairs;
}

bool lift_identity_check(const Partition& p) {
  if (p.empty()) return true;
  std::vector<i64> tail(p.parts().begin() + 1, p.parts().end());
  Partition rest = Partition::unchecked(std::move(tail));
  return eigenvalue(p) ==
         eigenvalue(rest) + choose2(p.first()) - (p.n() - p.first());
}

Result<i64> hook_dimension(const Partition& p) {
  if (p.n() > 20) {
    return make_error(Errc::ResourceLimit,
                      "hook_dimension supports n <= 20, got n = " +
                          std::to_string(p.n()));
  }
  if (p.empty()) return i64{1};
  const Partition conj = p.conjugate();
  unsigned long long hooks = 1;
  for (i64 i = 1; i <= p.count(); ++i) {
    i64 row_len = p.parts()[static_cast<size_t>(i - 1)];
    for (i64 j = 1; j <= row_len; ++j) {
      i64 hook = (row_len - j) + (conj.parts()[static_cast<size_t>(j - 1)] - i) + 1;
      hooks *= static_cast<unsigned long long>(hook);
    }
  }
  unsigned long long fact = 1;
  for (i64 k = 2; k <= p.n(); ++k) fact *= static_cast<unsigned long long>(k);
  return static_cast<i64>(fact / hooks);
}

namespace {

i64 eigenvalue_from_row(std::span<const i64> parts, i64 start_row) {
  i64 total = 0;
  i64 row = start_row;
  for (i64 part : parts) {
    total += triangular(part) - part * row;
    ++row;
  }
  return total;
}

struct ChunkResult {
  std::vector<uint8_t> present;               // offset by C(n,2)
  std::vector<std::vector<i64>> witness;      // empty = none
};

// All partitions with first part exactly m: m prepended to the partitions of
// n - m with parts <= m, which the generator already yields in order.
void scan_chunk(i64 n, i64 m, bool with_witnesses, ChunkResult& out) {
  const i64 bound = choose2(n);
  out.present.assign(static_cast<size_t>(2 * bound + 1), 0);
  if (with_witnesses) out.witness.assign(static_cast<size_t>(2 * bound + 1), {});
  const i64 head = choose2(m);
  PartitionGenerator gen(n - m, m);
  while (const std::vector<i64>* tail = gen.next()) {
    i64 value = head + eigenvalue_from_row(*tail, 2);
    auto slot = static_cast<size_t>(value + bound);
    if (!out.present[slot]) {
      out.present[slot] = 1;
      if (with_witnesses) {
        std::vector<i64> parts;
        parts.reserve(tail->size() + 1);
        parts.push_back(m);
        parts.insert(parts.end(), tail->begin(), tail->end());
        out.witness[slot] = std::move(parts);
      }
    }
  }
}

}  // namespace

Result<SpectrumReport> brute_spectrum(i64 n, const BruteOptions& opts) {
  if (n < 1) return make_error(Errc::BadArgument, "n must be >= 1");
  if (!opts.limit_override && n > opts.ceiling) {
    return make_error(Errc::ResourceLimit,
                      "n = " + std::to_string(n) + " exceeds the ceiling of " +
                          std::to_string(opts.ceiling) +
                          "; pass the override flag to proceed");
  }
  // p(n) outgrows any budget long before 64-bit arithmetic does; refuse
  // rather than start a scan that cannot finish
  if (n > 400) {
    return make_error(Errc::ResourceLimit,
                      "full enumeration beyond n = 400 is not supported");
  }
  const i64 bound = choose2(n);
  const int threads = std::max(1, opts.threads);

  // One chunk per first part, processed largest-first so merged witnesses
  // are the first in enumeration order.
  std::vector<ChunkResult> chunks(static_cast<size_t>(n));
  if (threads == 1 || n < 4) {
    for (i64 m = n; m >= 1; --m) {
      scan_chunk(n, m, opts.with_witnesses, chunks[static_cast<size_t>(n - m)]);
    }
  } else {
    std::atomic<i64> next_m{n};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          i64 m = next_m.fetch_sub(1);
          if (m < 1) return;
          scan_chunk(n, m, opts.with_witnesses,
                     chunks[static_cast<size_t>(n - m)]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  SpectrumReport report;
  report.n = n;
  std::vector<uint8_t> present(static_cast<size_t>(2 * bound + 1), 0);
  std::optional<std::map<i64, Partition>> witnesses;
  if (opts.with_witnesses) witnesses.emplace();
  for (const ChunkResult& chunk : chunks) {
    for (size_t slot = 0; slot < chunk.present.size(); ++slot) {
      if (chunk.present[slot] && !present[slot]) {
        present[slot] = 1;
        if (opts.with_witnesses) {
          i64 value = static_cast<i64>(slot) - bound;
          witnesses->emplace(value, Partition::unchecked(chunk.witness[slot]));
        }
      }
    }
  }
  for (size_t slot = 0; slot < present.size(); ++slot) {
    if (present[slot]) report.values.push_back(static_cast<i64>(slot) - bound);
  }
  report.witnesses = std::move(witnesses);
  return report;
}

Result<SpectrumReport> spectrum_with_multiplicity(i64 n) {
  if (n < 1) return make_error(Errc::BadArgument, "n must be >= 1");
  if (n > 12) {
    return make_error(Errc::ResourceLimit,
                      "spectrum_with_multiplicity supports n <= 12");
  }
  SpectrumReport report;
  report.n = n;
  std::map<i64, i64> mult;
  PartitionGenerator gen(n);
  while (const std::vector<i64>* parts = gen.next()) {
    Partition p = Partition::unchecked(*parts);
    i64 dim = hook_dimension(p).value();
    mult[eigenvalue(p)] += dim * dim;
  }
  for (const auto& [value, count] : mult) report.values.push_back(value);
  report.multiplicities = std::move(mult);
  return report;
}

namespace {

// Permutations of [0,n) in lexicographic order; rank via the Lehmer code.
std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return perms;
}

int permutation_rank(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (perm[j] < perm[i]) ++smaller;
    }
    int fact = 1;
    for (int k = 2; k <= n - 1 - i; ++k) fact *= k;
    rank += smaller * fact;
  }
  return rank;
}

}  // namespace

Result<SpectrumReport> cayley_adjacency_spectrum(i64 n) {
  if (n < 2 || n > 6) {
    return make_error(Errc::ResourceLimit,
                      "cayley_adjacency_spectrum supports 2 <= n <= 6");
  }
  const auto perms = all_permutations(static_cast<int>(n));
  const auto order = static_cast<Eigen::Index>(perms.size());

  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(order, order);
  std::vector<int> neighbor(static_cast<size_t>(n));
  for (Eigen::Index v = 0; v < order; ++v) {
    const auto& perm = perms[static_cast<size_t>(v)];
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        // left-multiplying by the transposition (i j) swaps the two values
        for (int x = 0; x < n; ++x) {
          int y = perm[static_cast<size_t>(x)];
          if (y == i) y = j;
          else if (y == j) y = i;
          neighbor[static_cast<size_t>(x)] = y;
        }
        adjacency(v, permutation_rank(neighbor)) = 1.0;
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    return make_error(Errc::RoundingFailure, "eigensolver did not converge");
  }
  const Eigen::VectorXd raw = solver.eigenvalues();

  SpectrumReport report;
  report.n = n;
  std::map<i64, i64> counts;
  for (Eigen::Index i = 0; i < raw.size(); ++i) {
    double x = raw(i);
    double rounded = std::round(x);
    if (std::abs(x - rounded) > 1e-6) {
      return make_error(Errc::RoundingFailure,
                        "eigenvalue " + std::to_string(x) +
                            " is not within 1e-6 of an integer");
    }
    counts[static_cast<i64>(rounded)] += 1;
  }
  for (const auto& [value, count] : counts) report.values.push_back(value);
  if (n <= 5) report.multiplicities = std::move(counts);
  return report;
}

}  // namespace tspectra
