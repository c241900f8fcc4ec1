#pragma once

#include <compare>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "tanint/sym_value.hpp"

namespace tanint {

/// Names the integral of x^p tan^n x over [0, pi/4].
struct IntegralId {
  int n = 0;  // tangent power
  int p = 0;  // monomial power
  friend bool operator==(const IntegralId&, const IntegralId&) = default;
  friend auto operator<=>(const IntegralId&, const IntegralId&) = default;
};

/// Write-once cache of exact values. Entries are never mutated once stored;
/// concurrent readers are safe and insertion is atomic at entry granularity,
/// so results are identical regardless of interleaving.
class MemoTable {
 public:
  MemoTable() = default;
  MemoTable(const MemoTable&) = delete;
  MemoTable& operator=(const MemoTable&) = delete;

  std::optional<SymValue> find(const IntegralId& id) const {
    std::shared_lock lock(mu_);
    const auto it = entries_.find(id);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  /// Stores the value unless the entry already exists; first write wins.
  /// Returns the stored value.
  SymValue insert(const IntegralId& id, SymValue value) {
    std::unique_lock lock(mu_);
    const auto [it, inserted] = entries_.emplace(id, std::move(value));
    (void)inserted;
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return entries_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<IntegralId, SymValue> entries_;
};

/// Harmonic number H_n = 1 + 1/2 + ... + 1/n as an exact rational (n >= 1).
/// Realizes the digamma identity psi(n) + gamma = H_{n-1} exactly.
Rational harmonic(int n);

/// (pi/4)^p as an exact value: 1 for p = 0, else a single pi^p term.
SymValue pi_quarter_pow(int p);

/// I_0^(p) = (pi/4)^(p+1) / (p+1).
SymValue base_i0(int p);

/// Seed S_q = I_1^(q), the n = 1 base case:
///   S_0 = (1/2) ln 2,
///   S_1 = G/2 - (pi/8) ln 2,
///   S_q = opaque seed atom for q >= 2.
SymValue seed_s(int q);

/// The p = 0 integral of tan^n x in closed form (finite alternating sums):
///   I_{2k}   = (-1)^k pi/4   + sum_{l=1..k} (-1)^(l+k) / (2l-1)
///   I_{2k+1} = (-1)^k ln 2/2 + sum_{l=1..k} (-1)^(l+k) / (2l)
/// Equals compute(n, 0) and provides the independent second route for p = 0.
SymValue tan_power_integral(int n);

/// Exact value of I_n^(p) via the recurrence
///   I_n^(p) = (pi/4)^p / (n-1) - (p/(n-1)) I_{n-1}^(p-1) - I_{n-2}^(p),  n >= 2,
/// memoized in `memo`. Total over n, p >= 0; throws std::invalid_argument on
/// negative arguments.
SymValue compute(int n, int p, MemoTable& memo);

/// All pairs (n, p) with n <= n_max, p <= p_max in (p, n) lexicographic order.
std::vector<std::pair<IntegralId, SymValue>> table(int n_max, int p_max, MemoTable& memo);

}  // namespace tanint
