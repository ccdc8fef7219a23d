#include <gkw/pseudozeta.hpp>

#include <gkw/errors.hpp>
#include <gkw/zeta.hpp>

#include <cmath>
#include <limits>
#include <vector>

namespace gkw {

namespace {

struct Enumeration {
  std::vector<BigFloat> level;  // [d-1]: enumerated mass at depth d
  std::vector<BigFloat> cut;    // [d-1]: bound on mass omitted at depth d by cuts there
  unsigned long long nodes = 0;
};

class Enumerator {
 public:
  Enumerator(const BigFloat& s, int k_max, long max_entry, const PseudoZetaOptions& opt)
      : kmax_(k_max), max_entry_(max_entry), opt_(opt), wp_(opt.prec + 32),
        s_(s.with_precision(wp_)) {
    sd_ = s.to_double();
    s_int_ = 0;
    double si = std::nearbyint(sd_);
    if (std::abs(sd_ - si) == 0.0 && si >= 2 && si < 1e9) s_int_ = static_cast<long>(si);
    res_.level.assign(static_cast<size_t>(kmax_), BigFloat(0, wp_));
    res_.cut.assign(static_cast<size_t>(kmax_), BigFloat(0, wp_));
  }

  // Cut thresholds as continuant bounds per depth: past qcut[d] a node at
  // depth d is pruned. Scaling them by lambda^(1/s) per level keeps the
  // omitted fraction roughly depth-independent.
  void set_thresholds(double eps0, double level_ratio) {
    qcut_.assign(static_cast<size_t>(kmax_) + 1, 0);
    double eps = eps0;
    for (int d = 1; d <= kmax_; ++d) {
      double q = std::pow(eps, -1.0 / sd_);
      double cap = 4.0e18;
      qcut_[static_cast<size_t>(d)] =
          q >= cap ? static_cast<long long>(cap) : static_cast<long long>(q) + 1;
      eps *= level_ratio;
    }
  }

  Enumeration run() {
    dfs(1, 1, 0);
    return std::move(res_);
  }

 private:
  // parent state: depth-d node will have continuant a*q + qp.
  void dfs(int depth, long long q, long long qp) {
    const long long cut = qcut_[static_cast<size_t>(depth)];
    long long a = 1;
    for (; a <= max_entry_; ++a) {
      if (q > (std::numeric_limits<long long>::max() - qp) / a) break;  // far past any cut
      long long qc = a * q + qp;
      if (qc > cut) break;
      if (++res_.nodes > opt_.node_budget)
        throw BudgetExceeded("pseudozeta: node budget exhausted");
      BigFloat term = pow_minus_s(qc);
      res_.level[static_cast<size_t>(depth - 1)] += term;
      if (depth < kmax_) dfs(depth + 1, qc, q);
    }
    // Children from `astart` on were omitted (threshold cut or the spec'd
    // max_entry cap); their level-`depth` mass is at most
    // q^-s * (astart^-s + astart^{1-s}/(s-1)).
    long long astart = a <= max_entry_ ? a : max_entry_ + 1;
    BigFloat bound = pow_minus_s_of(BigFloat(q, wp_)) * range_tail(astart);
    res_.cut[static_cast<size_t>(depth - 1)] += bound;
  }

  // sum_{b >= a} b^-s <= a^-s + a^{1-s}/(s-1)
  BigFloat range_tail(long long a) {
    BigFloat af(a, wp_);
    BigFloat am = pow_minus_s_of(af);
    return am + am * af / (s_ - BigFloat(1, wp_));
  }

  BigFloat pow_minus_s(long long q) { return pow_minus_s_of(BigFloat(q, wp_)); }

  BigFloat pow_minus_s_of(const BigFloat& q) {
    BigFloat r(wp_);
    if (s_int_ > 0) {
      mpfr_pow_si(r.raw(), q.raw(), -s_int_, MPFR_RNDN);
    } else {
      r = (-(s_ * q.log())).exp();
    }
    return r;
  }

  int kmax_;
  long long max_entry_;
  PseudoZetaOptions opt_;
  long wp_;
  BigFloat s_;
  double sd_;
  long s_int_;
  std::vector<long long> qcut_;
  Enumeration res_;
};

struct Tails {
  std::vector<BigFloat> bound;  // per level
};

// tail[d] = sum_{e <= d} cut[e] * zeta(s)^(d-e): a cut at level e removes
// at most cut[e] mass there and at most cut[e]*zeta^(m) at m levels below
// (continuants of concatenations are at least products).
Tails total_tails(const BigFloat& s, const Enumeration& e, long wp) {
  BigFloat z1 = zeta_minus_one(s, wp) + BigFloat(1, wp);
  Tails t;
  int k = static_cast<int>(e.level.size());
  t.bound.assign(static_cast<size_t>(k), BigFloat(0, wp));
  for (int d = 1; d <= k; ++d) {
    BigFloat acc(0, wp);
    BigFloat zpow(1, wp);
    for (int ee = d; ee >= 1; --ee) {
      acc += e.cut[static_cast<size_t>(ee - 1)] * zpow;
      zpow = zpow * z1;
    }
    t.bound[static_cast<size_t>(d - 1)] = acc;
  }
  return t;
}

Enumeration run_scaled(const BigFloat& s, int k_max, long max_entry,
                       const PseudoZetaOptions& opt) {
  // Shallow pre-pass measures the dominant ratio so the cut thresholds can
  // track it per level.
  double level_ratio = 1.0;
  if (k_max > 3) {
    Enumerator pre(s, std::min(k_max, 5), max_entry, opt);
    pre.set_thresholds(std::max(opt.prune_eps, 1e-10), 1.0);
    Enumeration e = pre.run();
    size_t last = e.level.size() - 1;
    double a = e.level[last].to_double(), b = e.level[last - 1].to_double();
    if (b > 0 && a > 0 && a < b) level_ratio = a / b;
  }
  Enumerator en(s, k_max, max_entry, opt);
  en.set_thresholds(opt.prune_eps, level_ratio);
  return en.run();
}

}  // namespace

PseudoZetaSum pseudozeta_sum(const BigFloat& s, int k, long max_entry,
                             const PseudoZetaOptions& options) {
  if (!(s > BigFloat(1, s.precision()))) throw DomainError("pseudozeta: need s > 1");
  if (k < 1 || max_entry < 2) throw DomainError("pseudozeta: need k >= 1, max_entry >= 2");
  long wp = options.prec + 32;
  Enumeration e = run_scaled(s, k, max_entry, options);
  Tails t = total_tails(s, e, wp);
  PseudoZetaSum out;
  out.sum = e.level[static_cast<size_t>(k - 1)].with_precision(options.prec);
  out.tail_bound = t.bound[static_cast<size_t>(k - 1)].with_precision(options.prec);
  out.nodes = e.nodes;
  return out;
}

PseudoZetaEstimate pseudozeta_estimate(const BigFloat& s, int kMax, long max_entry,
                                       const PseudoZetaOptions& options) {
  if (!(s > BigFloat(1, s.precision()))) throw DomainError("pseudozeta: need s > 1");
  if (kMax < 1 || max_entry < 2) throw DomainError("pseudozeta: need kMax >= 1, max_entry >= 2");
  long wp = options.prec + 32;
  Enumeration e = run_scaled(s, kMax, max_entry, options);
  Tails t = total_tails(s, e, wp);
  PseudoZetaEstimate out;
  out.nodes = e.nodes;
  for (int d = 1; d <= kMax; ++d) {
    BigFloat z = e.level[static_cast<size_t>(d - 1)];
    out.level_sums.push_back(z.with_precision(options.prec));
    out.tail_bounds.push_back(t.bound[static_cast<size_t>(d - 1)].with_precision(options.prec));
    // z^(1/d) = exp(log(z)/d)
    BigFloat root = (z.log() / BigFloat(d, wp)).exp();
    out.root_estimates.push_back(root.with_precision(options.prec));
    if (d >= 2) {
      BigFloat ratio = e.level[static_cast<size_t>(d - 1)] / e.level[static_cast<size_t>(d - 2)];
      out.ratio_estimates.push_back(ratio.with_precision(options.prec));
    }
  }
  return out;
}

}  // namespace gkw
