#ifndef GKW_ENGINE_HPP
#define GKW_ENGINE_HPP

#include <gkw/cache.hpp>
#include <gkw/ratfunc.hpp>

#include <optional>
#include <vector>

namespace gkw {

// GKW keeps the polynomial binomial C(X+k-i-1, t-i-j) in the first sum;
// MR replaces it with the integer binomial C(k-i, t-i-j).
enum class Variant { GKW, MR };

const char* variant_name(Variant v);

// The computed triangular grid {A_{p,t}} (or {B_{p,t}}) together with the
// list {Psi_j} (or {Lambda_j}), all canonical rational functions. Frozen
// after build; safe to share across threads.
struct CoeffTable {
  Variant variant = Variant::GKW;
  int N = 0;
  std::vector<RatFunc2> psi;                // index 0..N
  std::vector<std::vector<RatFunc2>> grid;  // [p][t], 0..N x 0..N

  const RatFunc2& cell(int p, int t) const { return grid[static_cast<size_t>(p)][static_cast<size_t>(t)]; }
};

// Incremental construction with explicit dependency checking; build_table
// drives it in the canonical order (per column P: t = 0..P-1, the psi solve
// at (P,P), then t = P+1..N).
class TableBuilder {
 public:
  TableBuilder(Variant v, int N);

  // Solves one cell from the recurrence. At p == t (p >= 1) this solves for
  // Psi_p instead and sets the cell to zero. Throws MissingDependency if a
  // required earlier cell is absent, InternalInconsistency if the isolated
  // coefficient degenerates anywhere other than p == t.
  void solve_cell(int p, int t);

  bool cell_filled(int p, int t) const;
  bool psi_filled(int j) const;
  void set_cell(int p, int t, RatFunc2 f);
  void set_psi(int j, RatFunc2 f);
  const RatFunc2& cell(int p, int t) const;
  const RatFunc2& psi(int j) const;
  Variant variant() const { return variant_; }
  int N() const { return n_; }

  CoeffTable freeze();

 private:
  Variant variant_;
  int n_;
  std::vector<std::optional<RatFunc2>> psi_;
  std::vector<std::vector<std::optional<RatFunc2>>> grid_;
};

// Runs the full procedure up to order N. With a cache, previously computed
// entries are loaded instead of recomputed and new ones are persisted.
CoeffTable build_table(Variant v, int N, CacheStore* cache = nullptr);

// Substitutes every filled value back into the recurrence (self term
// included) and returns whether LHS - RHS is exactly zero.
bool residual_zero(const CoeffTable& table, int p, int t);

// Same cell assembly but with the second sum's lower bound relaxed from
// max(0, k+t-p) to 0; the out-of-range binomial convention must make this
// identical to the written bounds (property check).
bool relaxed_bound_matches(const CoeffTable& table, int p, int t);

}  // namespace gkw

#endif
