#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "tanint/const_atom.hpp"
#include "tanint/engine.hpp"
#include "tanint/real.hpp"
#include "tanint/sym_value.hpp"

namespace tanint {

/// Integrand descriptors for the quadrature oracle. All are smooth on the
/// intervals they are used with ([0, pi/4] or [0, 1]).
struct PowTanIntegrand {
  int n = 0;
  int p = 0;
};  // x^p tan^n x

struct TanPowOverOneMinusX {
  int n = 0;
};  // tan^n x / (1 - x)

struct ArctanPowIntegrand {
  int n = 0;
};  // arctan^n x

struct LnCosIntegrand {};  // ln(cos x)

using Integrand =
    std::variant<PowTanIntegrand, TanPowOverOneMinusX, ArctanPowIntegrand, LnCosIntegrand>;

Real eval_integrand(const Integrand& f, const Real& x);

/// Node-doubling refinement failed to stabilize within the level budget.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shared numeric state for oracle evaluations: a decimal precision target,
/// a memoized table of constant values, and cached tanh-sinh quadrature
/// nodes. Safe for concurrent use; cache entries are computed at most once
/// per value and never mutated afterwards.
class NumericContext {
 public:
  /// digits must be >= 15.
  explicit NumericContext(int digits);
  NumericContext(const NumericContext&) = delete;
  NumericContext& operator=(const NumericContext&) = delete;

  int digits() const { return digits_; }
  /// Working binary precision (carries guard digits beyond `digits`).
  mpfr_prec_t prec() const { return prec_; }

  /// Numeric value of a basis constant, correct to `digits`; memoized.
  Real const_numeric(const ConstAtom& atom);
  /// pi at working precision (cached).
  Real pi();

 private:
  friend Real quad(const Integrand&, const Real&, const Real&, NumericContext&);

  struct Node {
    Real u;  // abscissa in (0, 1)
    Real w;  // weight
  };

  /// Nodes introduced at refinement level m (positive half-axis only);
  /// builds and caches levels up to m on first use.
  const std::vector<Node>& level_nodes(int m);
  Real center_weight();
  Real compute_atom(const ConstAtom& atom);

  int digits_;
  mpfr_prec_t prec_;
  double t_max_;

  std::mutex const_mu_;
  std::map<ConstAtom, Real> const_cache_;

  std::mutex node_mu_;
  std::deque<std::vector<Node>> levels_;
  Real center_w_;
  bool center_ready_ = false;
};

/// Integral of f over [a, b], correct to about ctx.digits() (at most 5 guard
/// digits short); deterministic for a fixed context. Throws QuadratureError
/// if node doubling fails to stabilize.
Real quad(const Integrand& f, const Real& a, const Real& b, NumericContext& ctx);

Real const_numeric(const ConstAtom& atom, NumericContext& ctx);

/// rational_part + sum of coeff * const_numeric(atom) at working precision.
Real eval_numeric(const SymValue& v, NumericContext& ctx);

struct VerifyReport {
  IntegralId id;
  Real exact_numeric;
  Real quadrature;
  Real abs_diff;
  Real tolerance;
  bool pass = false;
};

/// Compares the exact engine value against quadrature for every (n, p) with
/// n <= n_max, p <= p_max; one report each, in (p, n) order. Failures are
/// reported, not thrown. Requires tol > 10 * 10^(-ctx.digits()).
std::vector<VerifyReport> verify(int n_max, int p_max, NumericContext& ctx, const Real& tol);
std::vector<VerifyReport> verify(int n_max, int p_max, NumericContext& ctx, const Real& tol,
                                 MemoTable& memo);

}  // namespace tanint
