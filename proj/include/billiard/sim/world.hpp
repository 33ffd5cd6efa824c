#pragma once

#include <cstdint>
#include <vector>

#include "billiard/sim/types.hpp"

namespace billiard::sim {

/// Pre/post pair states of one resolved ball-ball contact, for diagnostics
/// and conservation checks.
struct ContactEvent {
  int i = 0;
  int j = 0;
  BallState pre_i, pre_j;
  BallState post_i, post_j;
  bool degenerate = false;  // coincident centers, fallback normal used
};

struct StepEvents {
  std::vector<ContactEvent> contacts;
};

/// Places cfg.n_balls at rejection-sampled positions (pairwise center
/// distance > 2r) with per-component velocities uniform in [-1, 1].
/// Deterministic given seed. Throws std::runtime_error when cfg leaves no
/// room (or after 10,000 rejected position draws).
WorldState init_world(const WorldConfig& cfg, std::uint64_t seed);

/// Index 0 is rest; 1..8 are unit vectors at compass headings
/// E, NE, N, NW, W, SW, S, SE scaled by cfg.accel_magnitude.
Vec2 discrete_to_accel(int index, const WorldConfig& cfg);

struct CollisionOutcome {
  BallState a, b;
  bool degenerate = false;
};

/// Frictionless elastic impulse along the center normal plus positional
/// separation to center distance exactly 2r. Coincident centers fall back
/// to normal (1, 0) and set the degenerate flag.
CollisionOutcome resolve_ball_collision(const BallState& bi, const BallState& bj,
                                        double mi, double mj, double radius);

/// Reflects any out-of-band position component into [r, L-r] and negates the
/// matching velocity component. In-band balls are returned unchanged.
BallState resolve_wall(const BallState& b, const WorldConfig& cfg);

/// One environment step: symplectic Euler over cfg.substeps sub-intervals,
/// wall + pairwise collision resolution each substep, speed clamped to
/// cfg.max_speed. Reward is -1 iff the ego overlapped any ball during any
/// substep. Throws on non-finite inputs.
StepResult step(const WorldState& world, const Action& action, const WorldConfig& cfg,
                StepEvents* events = nullptr);

}  // namespace billiard::sim
