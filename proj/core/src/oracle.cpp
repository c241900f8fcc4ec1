#include "tanint/oracle.hpp"

#include <cmath>
#include <string>

namespace tanint {

namespace {

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};

constexpr int kMaxLevel = 12;
constexpr int kGuardDigits = 10;

}  // namespace

Real eval_integrand(const Integrand& f, const Real& x) {
  return std::visit(
      Overload{
          [&](const PowTanIntegrand& g) {
            Real r = pow_si(tan(x), g.n);
            if (g.p != 0) r *= pow_si(x, g.p);
            return r;
          },
          [&](const TanPowOverOneMinusX& g) {
            return pow_si(tan(x), g.n) / (Real(1L, x.prec()) - x);
          },
          [&](const ArctanPowIntegrand& g) { return pow_si(atan(x), g.n); },
          [&](const LnCosIntegrand&) { return log(cos(x)); },
      },
      f);
}

NumericContext::NumericContext(int digits)
    : digits_(digits), prec_(prec_for_digits(digits + kGuardDigits)) {
  if (digits < 15) {
    throw std::invalid_argument("NumericContext: digits must be >= 15, got " +
                                std::to_string(digits));
  }
  // Truncation point for the tanh-sinh node tail: the weight decays like
  // exp(-(pi/2)e^t), so e^{t_max} ~ (2/pi)(D ln 10 + 25) pushes the last
  // weight well below the working target of digits + kGuardDigits decimals.
  const double target = (digits_ + kGuardDigits + 2) * std::log(10.0) + 25.0;
  t_max_ = std::log(target * 2.0 / 3.141592653589793) + 0.1;
}

Real NumericContext::center_weight() {
  std::lock_guard<std::mutex> lock(node_mu_);
  if (!center_ready_) {
    center_w_ = mul_2si(Real::pi(prec_), -1);
    center_ready_ = true;
  }
  return center_w_;
}

const std::vector<NumericContext::Node>& NumericContext::level_nodes(int m) {
  std::lock_guard<std::mutex> lock(node_mu_);
  while (static_cast<int>(levels_.size()) <= m) {
    const int level = static_cast<int>(levels_.size());
    const Real half_pi = mul_2si(Real::pi(prec_), -1);
    std::vector<Node> nodes;
    // Level 0 holds the integer abscissas t = 1..t_max; level m > 0 holds the
    // odd multiples of 2^-m, which are exactly the points new at that level.
    const long step = (level == 0) ? 1 : 2;
    const long start = 1;
    for (long k = start;; k += step) {
      const double t_approx = std::ldexp(static_cast<double>(k), -level);
      if (t_approx > t_max_) break;
      const Real t = mul_2si(Real(k, prec_), -level);
      const Real q = half_pi * sinh(t);
      const Real ch = cosh(q);
      Node node{tanh(q), half_pi * cosh(t) / (ch * ch)};
      nodes.push_back(std::move(node));
    }
    levels_.push_back(std::move(nodes));
  }
  return levels_[static_cast<size_t>(m)];
}

Real quad(const Integrand& f, const Real& a, const Real& b, NumericContext& ctx) {
  const mpfr_prec_t P = ctx.prec();
  const Real aw = Real(0L, P) + a;
  const Real bw = Real(0L, P) + b;
  const Real c = mul_2si(aw + bw, -1);
  const Real s = mul_2si(bw - aw, -1);
  if (s.is_zero()) return Real(0L, P);

  const Real one(1L, P);
  const Real tol = pow_si(Real(10L, P), -(ctx.digits() + 5));

  Real acc = ctx.center_weight() * eval_integrand(f, c);
  for (const auto& node : ctx.level_nodes(0)) {
    const Real d = s * node.u;
    acc += node.w * (eval_integrand(f, c + d) + eval_integrand(f, c - d));
  }
  Real prev = s * acc;

  for (int m = 1; m <= kMaxLevel; ++m) {
    for (const auto& node : ctx.level_nodes(m)) {
      const Real d = s * node.u;
      acc += node.w * (eval_integrand(f, c + d) + eval_integrand(f, c - d));
    }
    Real cur = mul_2si(s * acc, -m);
    const Real diff = abs(cur - prev);
    const Real scale = abs(cur) > one ? abs(cur) : one;
    if (m >= 3 && diff <= tol * scale) return cur;
    prev = std::move(cur);
  }
  throw QuadratureError("quad: node doubling failed to stabilize at " +
                        std::to_string(ctx.digits()) + " digits after " +
                        std::to_string(kMaxLevel) + " levels");
}

Real NumericContext::compute_atom(const ConstAtom& atom) {
  switch (atom.kind()) {
    case ConstAtom::Kind::PiPow:
      return pow_si(Real::pi(prec_), atom.arg());
    case ConstAtom::Kind::Ln2:
      return Real::ln2(prec_);
    case ConstAtom::Kind::PiLn2:
      return Real::pi(prec_) * Real::ln2(prec_);
    case ConstAtom::Kind::Catalan:
      // MPFR's accelerated series; the slowly converging alternating sum
      // over odd squares is exercised separately in tests as a sanity
      // bracket.
      return Real::catalan(prec_);
    case ConstAtom::Kind::Seed: {
      const Real zero(0L, prec_);
      const Real quarter_pi = mul_2si(Real::pi(prec_), -2);
      return quad(PowTanIntegrand{1, atom.arg()}, zero, quarter_pi, *this);
    }
  }
  throw std::logic_error("NumericContext::compute_atom: unreachable");
}

Real NumericContext::const_numeric(const ConstAtom& atom) {
  {
    std::lock_guard<std::mutex> lock(const_mu_);
    auto it = const_cache_.find(atom);
    if (it != const_cache_.end()) return it->second;
  }
  Real value = compute_atom(atom);
  std::lock_guard<std::mutex> lock(const_mu_);
  auto [it, inserted] = const_cache_.emplace(atom, std::move(value));
  return it->second;
}

Real NumericContext::pi() { return const_numeric(ConstAtom::pi_pow(1)); }

Real const_numeric(const ConstAtom& atom, NumericContext& ctx) { return ctx.const_numeric(atom); }

Real eval_numeric(const SymValue& v, NumericContext& ctx) {
  Real r(v.rational_part(), ctx.prec());
  for (const auto& [atom, coeff] : v.terms()) {
    r += Real(coeff, ctx.prec()) * ctx.const_numeric(atom);
  }
  return r;
}

std::vector<VerifyReport> verify(int n_max, int p_max, NumericContext& ctx, const Real& tol,
                                 MemoTable& memo) {
  if (n_max < 0 || p_max < 0) {
    throw std::invalid_argument("verify: n_max and p_max must be >= 0");
  }
  const Real floor = pow_si(Real(10L, ctx.prec()), 1 - ctx.digits());
  if (!(tol > floor)) {
    throw std::invalid_argument("verify: tol must exceed 10 * 10^(-digits)");
  }
  const Real zero(0L, ctx.prec());
  const Real quarter_pi = mul_2si(ctx.pi(), -2);

  std::vector<VerifyReport> reports;
  reports.reserve(static_cast<size_t>(n_max + 1) * static_cast<size_t>(p_max + 1));
  for (int p = 0; p <= p_max; ++p) {
    for (int n = 0; n <= n_max; ++n) {
      VerifyReport r;
      r.id = IntegralId{n, p};
      r.exact_numeric = eval_numeric(compute(n, p, memo), ctx);
      r.quadrature = quad(PowTanIntegrand{n, p}, zero, quarter_pi, ctx);
      r.abs_diff = abs(r.exact_numeric - r.quadrature);
      r.tolerance = Real(0L, ctx.prec()) + tol;
      r.pass = r.abs_diff <= r.tolerance;
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

std::vector<VerifyReport> verify(int n_max, int p_max, NumericContext& ctx, const Real& tol) {
  MemoTable memo;
  return verify(n_max, p_max, ctx, tol, memo);
}

}  // namespace tanint
