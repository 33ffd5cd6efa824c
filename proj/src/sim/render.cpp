#include "billiard/sim/render.hpp"

#include <fstream>
#include <stdexcept>

namespace billiard::sim {

Grid32 render_frame(const WorldState& world, const WorldConfig& cfg) {
  Grid32 g;
  const double scale = cfg.arena_side / kGridSize;
  const int n = static_cast<int>(world.balls.size());
  // Descending index so the ego (index 0) wins overlaps.
  for (int b = n - 1; b >= 0; --b) {
    const Vec2& c = world.balls[static_cast<std::size_t>(b)].pos;
    const std::uint8_t intensity = static_cast<std::uint8_t>(255 - 40 * b);
    for (int row = 0; row < kGridSize; ++row) {
      for (int col = 0; col < kGridSize; ++col) {
        double wx = (col + 0.5) * scale;
        double wy = (kGridSize - 1 - row + 0.5) * scale;
        double dx = wx - c.x();
        double dy = wy - c.y();
        if (dx * dx + dy * dy <= cfg.ball_radius * cfg.ball_radius)
          g.at(row, col) = intensity;
      }
    }
  }
  return g;
}

void write_pgm(const Grid32& frame, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_pgm: cannot open " + path.string());
  out << "P5\n32 32\n255\n";
  out.write(reinterpret_cast<const char*>(frame.pixels.data()),
            static_cast<std::streamsize>(frame.pixels.size()));
  if (!out) throw std::runtime_error("write_pgm: write failed for " + path.string());
}

}  // namespace billiard::sim
