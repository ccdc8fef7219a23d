#ifndef GKW_CACHE_HPP
#define GKW_CACHE_HPP

#include <gkw/ratfunc.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace gkw {

enum class Variant;

// One rational function per file under
//   <dir>/<variant>/psi_<j>.rf
//   <dir>/<variant>/col_<p>/a_<p>_<t>.rf
// Header line: "RATFUNC v1 variant=<GKW|MR> kind=<PSI|A|LAMBDA|B> idx=..."
// Writes go to a temp file first and are renamed into place, so concurrent
// invocations cannot leave a torn file behind.
class CacheStore {
 public:
  explicit CacheStore(std::filesystem::path dir);

  std::optional<RatFunc2> load_psi(Variant v, int j) const;
  std::optional<RatFunc2> load_cell(Variant v, int p, int t) const;
  void save_psi(Variant v, int j, const RatFunc2& f) const;
  void save_cell(Variant v, int p, int t, const RatFunc2& f) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::filesystem::path psi_path(Variant v, int j) const;
  std::filesystem::path cell_path(Variant v, int p, int t) const;
  std::optional<RatFunc2> load_file(const std::filesystem::path& path,
                                    const std::string& want_header) const;
  void save_file(const std::filesystem::path& path, const std::string& header,
                 const RatFunc2& f) const;
};

// Canonical linear factors the recurrence can introduce into denominators
// (used to restore the factored view after parsing a cache file).
std::vector<LinFactor> engine_factor_candidates(int N);

}  // namespace gkw

#endif
