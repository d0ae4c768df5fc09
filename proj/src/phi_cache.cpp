#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "richwords/json_io.hpp"
#include "richwords/phi_search.hpp"

namespace richwords {

void cache_store(const PhiResult& record, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file " + path.string());
  out << to_json(record).dump() << '\n';
  if (!out) throw std::runtime_error("failed writing cache file " + path.string());
}

std::optional<PhiResult> cache_lookup(std::size_t n, std::size_t q, const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read cache file " + path.string());
  std::optional<PhiResult> newest;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      PhiResult r = phi_result_from_json(nlohmann::json::parse(line));
      if (r.n == n && r.q == q) newest = std::move(r);
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "warning: " << path.string() << ":" << line_no << ": skipping malformed cache line ("
                << e.what() << ")\n";
    }
  }
  if (in.bad()) throw std::runtime_error("failed reading cache file " + path.string());
  return newest;
}

}  // namespace richwords
