#include "wtspec/ensemble/independence.hpp"

#include <algorithm>
#include <string>

#include "wtspec/error.hpp"
#include "wtspec/exact.hpp"

namespace wtspec::ensemble {

using algebra::Elem;

bool IndependenceReport::passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const IndependenceEntry& e) { return e.independent_failures == 0; });
}

IndependenceReport independence_audit(const algebra::FieldPtr& field, std::size_t k, std::size_t n,
                                      std::optional<std::size_t> weight) {
  const algebra::Field& f = *field;
  const std::uint32_t q = f.q();
  if (k < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "need k, n >= 1");
  if (weight && *weight > n) throw Error(ErrorCode::WeightOutOfRange, "weight exceeds n");
  std::uint64_t matrices = 0;
  if (!pow_within(q, k * n, kMaxExhaustiveMatrices, &matrices)) {
    throw Error(ErrorCode::TooLargeForExhaustive,
                std::to_string(q) + "^" + std::to_string(k * n) + " matrices exceed 10^7");
  }
  std::uint64_t messages_total = 1;
  for (std::size_t i = 0; i < k; ++i) messages_total *= q;
  const std::size_t messages = static_cast<std::size_t>(messages_total) - 1;  // nonzero only

  // Nonzero messages as digit vectors; message index i encodes i + 1.
  std::vector<std::vector<Elem>> msg(messages, std::vector<Elem>(k));
  for (std::size_t i = 0; i < messages; ++i) {
    std::uint64_t v = i + 1;
    for (std::size_t j = 0; j < k; ++j) {
      msg[i][j] = Elem{static_cast<std::uint32_t>(v % q)};
      v /= q;
    }
  }

  const std::size_t weights = n + 1;
  std::vector<std::uint64_t> single(messages * weights, 0);
  const std::size_t pairs = messages * (messages - 1) / 2;
  std::vector<std::uint64_t> joint(pairs * weights, 0);
  auto pair_index = [messages](std::size_t a, std::size_t b) {  // a < b
    return a * messages - a * (a + 1) / 2 + (b - a - 1);
  };

  std::vector<Elem> g(k * n);
  std::vector<std::size_t> wt(messages);
  for (std::uint64_t idx = 0; idx < matrices; ++idx) {
    for (std::size_t i = 0; i < messages; ++i) {
      std::size_t w = 0;
      for (std::size_t c = 0; c < n; ++c) {
        Elem acc{0};
        for (std::size_t r = 0; r < k; ++r) acc = f.add(acc, f.mul(msg[i][r], g[r * n + c]));
        w += acc.value != 0;
      }
      wt[i] = w;
      ++single[i * weights + w];
    }
    for (std::size_t a = 0; a < messages; ++a)
      for (std::size_t b = a + 1; b < messages; ++b)
        if (wt[a] == wt[b]) ++joint[pair_index(a, b) * weights + wt[a]];

    // Odometer step over the kn entries.
    for (auto& e : g) {
      if (++e.value < q) break;
      e.value = 0;
    }
  }

  auto proportional = [&](std::size_t a, std::size_t b) {
    for (std::uint32_t s = 1; s < q; ++s) {
      bool same = true;
      for (std::size_t j = 0; j < k && same; ++j) same = f.mul(Elem{s}, msg[b][j]) == msg[a][j];
      if (same) return true;
    }
    return false;
  };

  IndependenceReport report;
  report.q = q;
  report.k = k;
  report.n = n;
  report.matrices = matrices;
  const BigInt total = BigInt(static_cast<unsigned long>(matrices));
  for (std::size_t w = 0; w <= n; ++w) {
    if (weight && *weight != w) continue;
    IndependenceEntry e;
    e.w = w;
    for (std::size_t a = 0; a < messages; ++a) {
      for (std::size_t b = a + 1; b < messages; ++b) {
        const BigInt lhs = BigInt(static_cast<unsigned long>(joint[pair_index(a, b) * weights + w])) * total;
        const BigInt rhs = BigInt(static_cast<unsigned long>(single[a * weights + w])) *
                           BigInt(static_cast<unsigned long>(single[b * weights + w]));
        const bool equal = lhs == rhs;
        if (proportional(a, b)) {
          ++e.dependent_pairs;
          e.dependent_unequal += !equal;
        } else {
          ++e.independent_pairs;
          e.independent_failures += !equal;
        }
      }
    }
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace wtspec::ensemble
