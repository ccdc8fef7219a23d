#include <gkw/cache.hpp>

#include <gkw/engine.hpp>
#include <gkw/errors.hpp>

#include <fstream>
#include <sstream>

namespace gkw {

namespace {

const char* kind_name(Variant v, bool is_psi) {
  if (v == Variant::GKW) return is_psi ? "PSI" : "A";
  return is_psi ? "LAMBDA" : "B";
}

std::string header_line(Variant v, bool is_psi, const std::string& idx) {
  std::ostringstream os;
  os << "RATFUNC v1 variant=" << variant_name(v) << " kind=" << kind_name(v, is_psi)
     << " idx=" << idx;
  return os.str();
}

}  // namespace

CacheStore::CacheStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path CacheStore::psi_path(Variant v, int j) const {
  return dir_ / variant_name(v) / ("psi_" + std::to_string(j) + ".rf");
}

std::filesystem::path CacheStore::cell_path(Variant v, int p, int t) const {
  return dir_ / variant_name(v) / ("col_" + std::to_string(p)) /
         ("a_" + std::to_string(p) + "_" + std::to_string(t) + ".rf");
}

std::optional<RatFunc2> CacheStore::load_file(const std::filesystem::path& path,
                                              const std::string& want_header) const {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  size_t eol = text.find('\n');
  if (eol == std::string::npos) throw ParseError("missing header line in " + path.string(), 1);
  if (text.substr(0, eol) != want_header)
    throw ParseError("unexpected header '" + text.substr(0, eol) + "' in " + path.string() +
                         "', wanted '" + want_header + "'",
                     1);
  return rf_parse_body(text, eol + 1, 2);
}

void CacheStore::save_file(const std::filesystem::path& path, const std::string& header,
                           const RatFunc2& f) const {
  std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << header << '\n' << rf_serialize(f);
    if (!out) throw Error("cache write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<RatFunc2> CacheStore::load_psi(Variant v, int j) const {
  return load_file(psi_path(v, j), header_line(v, true, std::to_string(j)));
}

std::optional<RatFunc2> CacheStore::load_cell(Variant v, int p, int t) const {
  return load_file(cell_path(v, p, t),
                   header_line(v, false, std::to_string(p) + "," + std::to_string(t)));
}

void CacheStore::save_psi(Variant v, int j, const RatFunc2& f) const {
  save_file(psi_path(v, j), header_line(v, true, std::to_string(j)), f);
}

void CacheStore::save_cell(Variant v, int p, int t, const RatFunc2& f) const {
  save_file(cell_path(v, p, t), header_line(v, false, std::to_string(p) + "," + std::to_string(t)),
            f);
}

std::vector<LinFactor> engine_factor_candidates(int N) {
  std::vector<LinFactor> out;
  out.push_back({BigInt(1), BigInt(0), 1});  // Y
  for (int m = 1; m <= N; ++m) {
    BigInt a = pow2z(static_cast<unsigned long>(m)) + 1;
    out.push_back({a, BigInt(-2), 1});                                        // p - t = m
    out.push_back({a, BigInt(-2) * pow2z(static_cast<unsigned long>(m)), 1});  // t - p = m
  }
  return out;
}

}  // namespace gkw
