#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace billiard::sim {

using Vec2 = Eigen::Vector2d;

/// One row per ball, columns (x, y, vx, vy).
using StateMatrix = Eigen::Matrix<double, Eigen::Dynamic, 4>;

struct BallState {
  Vec2 pos{0.0, 0.0};
  Vec2 vel{0.0, 0.0};
};

struct WorldConfig {
  double arena_side = 10.0;
  double ball_radius = 1.0;
  double ball_mass = 2.0;
  double dt = 0.1;
  int substeps = 4;
  int n_balls = 3;
  double accel_magnitude = 2.0;
  double max_speed = 6.0;
  // When set, the action vector is a force: the ego acceleration is a/m.
  // Default off: actions are accelerations and mass only enters impulses.
  bool force_mode = false;

  void validate() const;
};

struct WorldState {
  std::vector<BallState> balls;  // index 0 is the ego ball
  std::int64_t t = 0;
};

inline constexpr double kActionLow = -2.0;
inline constexpr double kActionHigh = 2.0;
inline constexpr int kNumDiscreteActions = 9;

class Action {
 public:
  enum class Kind { Discrete, Continuous };

  static Action discrete(int index) {
    if (index < 0 || index >= kNumDiscreteActions)
      throw std::invalid_argument("discrete action index out of range [0, 8]");
    Action a;
    a.kind_ = Kind::Discrete;
    a.index_ = index;
    return a;
  }

  static Action continuous(const Vec2& accel) {
    Action a;
    a.kind_ = Kind::Continuous;
    a.accel_ = Vec2(std::clamp(accel.x(), kActionLow, kActionHigh),
                    std::clamp(accel.y(), kActionLow, kActionHigh));
    return a;
  }

  static Action continuous(double ax, double ay) { return continuous(Vec2(ax, ay)); }

  Kind kind() const { return kind_; }
  bool is_discrete() const { return kind_ == Kind::Discrete; }

  int index() const {
    if (kind_ != Kind::Discrete) throw std::logic_error("not a discrete action");
    return index_;
  }

  const Vec2& accel() const {
    if (kind_ != Kind::Continuous) throw std::logic_error("not a continuous action");
    return accel_;
  }

 private:
  Action() = default;
  Kind kind_ = Kind::Discrete;
  int index_ = 0;
  Vec2 accel_{0.0, 0.0};
};

struct StepResult {
  WorldState next;
  double reward = 0.0;  // 0 or -1; -1 iff ego_collided
  bool ego_collided = false;
};

inline StateMatrix to_state_matrix(const WorldState& w) {
  StateMatrix m(static_cast<Eigen::Index>(w.balls.size()), 4);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const BallState& b = w.balls[static_cast<std::size_t>(i)];
    m.row(i) << b.pos.x(), b.pos.y(), b.vel.x(), b.vel.y();
  }
  return m;
}

inline WorldState from_state_matrix(const StateMatrix& m, std::int64_t t = 0) {
  WorldState w;
  w.t = t;
  w.balls.resize(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    w.balls[static_cast<std::size_t>(i)].pos = Vec2(m(i, 0), m(i, 1));
    w.balls[static_cast<std::size_t>(i)].vel = Vec2(m(i, 2), m(i, 3));
  }
  return w;
}

}  // namespace billiard::sim
