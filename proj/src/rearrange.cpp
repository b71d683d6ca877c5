#include "nlm/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace nlm {

const std::vector<std::uint32_t>& radial_cell_order(const Grid& grid) {
  static std::map<std::tuple<int, int, double>, std::vector<std::uint32_t>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(grid.dim(), grid.n(), grid.half_width());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const std::size_t count = grid.cell_count();
  std::vector<double> radius(count);
  for (std::size_t i = 0; i < count; ++i) radius[i] = grid.min_image_radius(grid.unflat(i));
  std::vector<std::uint32_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = static_cast<std::uint32_t>(i);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (radius[a] != radius[b]) return radius[a] < radius[b];
    return a < b;  // lexicographic tie-break, deterministic
  });
  return cache.emplace(key, std::move(order)).first->second;
}

ScalarField schwarz_rearrange(const ScalarField& f) {
  const auto& order = radial_cell_order(f.grid());
  std::vector<double> vals(f.size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = std::abs(f[i]);
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  ScalarField out(f.grid());
  for (std::size_t i = 0; i < vals.size(); ++i) out[order[i]] = vals[i];
  return out;
}

}  // namespace nlm
