#pragma once

#include <array>
#include <cstdint>
#include <filesystem>

#include "billiard/sim/types.hpp"

namespace billiard::sim {

inline constexpr int kGridSize = 32;

/// 32x32 grayscale frame, row-major, row 0 at the top (high y).
struct Grid32 {
  std::array<std::uint8_t, kGridSize * kGridSize> pixels{};

  std::uint8_t& at(int row, int col) { return pixels[static_cast<std::size_t>(row * kGridSize + col)]; }
  std::uint8_t at(int row, int col) const { return pixels[static_cast<std::size_t>(row * kGridSize + col)]; }
  bool operator==(const Grid32&) const = default;
};

/// Rasterizes the world: a pixel is lit with intensity 255 - 40 * ball_index
/// when its center lies inside that ball's disc; the ego is drawn last.
Grid32 render_frame(const WorldState& world, const WorldConfig& cfg);

/// Binary PGM, header exactly "P5\n32 32\n255\n".
void write_pgm(const Grid32& frame, const std::filesystem::path& path);

}  // namespace billiard::sim
