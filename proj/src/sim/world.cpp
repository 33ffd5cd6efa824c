#include "billiard/sim/world.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "billiard/rng.hpp"

namespace billiard::sim {

namespace {

constexpr int kMaxRejectionAttempts = 10000;

bool finite(const Vec2& v) { return std::isfinite(v.x()) && std::isfinite(v.y()); }

}  // namespace

void WorldConfig::validate() const {
  if (!(arena_side > 4.0 * ball_radius))
    throw std::runtime_error("world config: arena_side must exceed 4 * ball_radius");
  if (!(ball_radius > 0.0)) throw std::runtime_error("world config: ball_radius must be > 0");
  if (!(ball_mass > 0.0)) throw std::runtime_error("world config: ball_mass must be > 0");
  if (!(dt > 0.0)) throw std::runtime_error("world config: dt must be > 0");
  if (substeps < 1) throw std::runtime_error("world config: substeps must be >= 1");
  if (n_balls < 1) throw std::runtime_error("world config: n_balls must be >= 1");
  if (!(accel_magnitude >= 0.0))
    throw std::runtime_error("world config: accel_magnitude must be >= 0");
  if (!(max_speed > 0.0)) throw std::runtime_error("world config: max_speed must be > 0");
}

WorldState init_world(const WorldConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const double r = cfg.ball_radius;
  const double lo = r;
  const double hi = cfg.arena_side - r;

  Rng rng(seed);
  WorldState w;
  w.t = 0;
  w.balls.resize(static_cast<std::size_t>(cfg.n_balls));

  int attempts = 0;
  for (int i = 0; i < cfg.n_balls; ++i) {
    for (;;) {
      if (attempts >= kMaxRejectionAttempts)
        throw std::runtime_error("init_world: could not place balls after " +
                                 std::to_string(kMaxRejectionAttempts) +
                                 " attempts; arena too small");
      ++attempts;
      Vec2 cand(rng.uniform(lo, hi), rng.uniform(lo, hi));
      bool clear = true;
      for (int k = 0; k < i; ++k) {
        if ((cand - w.balls[static_cast<std::size_t>(k)].pos).norm() <= 2.0 * r) {
          clear = false;
          break;
        }
      }
      if (clear) {
        w.balls[static_cast<std::size_t>(i)].pos = cand;
        break;
      }
    }
  }
  for (int i = 0; i < cfg.n_balls; ++i) {
    w.balls[static_cast<std::size_t>(i)].vel =
        Vec2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  }
  return w;
}

Vec2 discrete_to_accel(int index, const WorldConfig& cfg) {
  if (index < 0 || index >= kNumDiscreteActions)
    throw std::invalid_argument("discrete action index out of range [0, 8]");
  if (index == 0) return Vec2(0.0, 0.0);
  static const double s = 1.0 / std::sqrt(2.0);
  // E, NE, N, NW, W, SW, S, SE
  static const double dirs[8][2] = {{1, 0}, {s, s},   {0, 1},  {-s, s},
                                    {-1, 0}, {-s, -s}, {0, -1}, {s, -s}};
  return cfg.accel_magnitude * Vec2(dirs[index - 1][0], dirs[index - 1][1]);
}

CollisionOutcome resolve_ball_collision(const BallState& bi, const BallState& bj,
                                        double mi, double mj, double radius) {
  CollisionOutcome out{bi, bj, false};

  Vec2 d = bj.pos - bi.pos;
  double dist = d.norm();
  Vec2 n;
  if (dist > 0.0) {
    n = d / dist;
  } else {
    n = Vec2(1.0, 0.0);
    out.degenerate = true;
  }

  const double wi = 1.0 / mi;
  const double wj = 1.0 / mj;

  // Impulse only when approaching along the normal; separation always.
  double vn = (bj.vel - bi.vel).dot(n);
  if (vn < 0.0) {
    double impulse = -2.0 * vn / (wi + wj);
    out.a.vel = bi.vel - (impulse * wi) * n;
    out.b.vel = bj.vel + (impulse * wj) * n;
  }

  double overlap = 2.0 * radius - dist;
  if (overlap > 0.0) {
    out.a.pos = bi.pos - n * (overlap * wi / (wi + wj));
    out.b.pos = bj.pos + n * (overlap * wj / (wi + wj));
  }
  return out;
}

BallState resolve_wall(const BallState& b, const WorldConfig& cfg) {
  const double lo = cfg.ball_radius;
  const double hi = cfg.arena_side - cfg.ball_radius;
  BallState out = b;
  for (int c = 0; c < 2; ++c) {
    double p = out.pos[c];
    if (p < lo) {
      out.pos[c] = 2.0 * lo - p;
      out.vel[c] = -out.vel[c];
    } else if (p > hi) {
      out.pos[c] = 2.0 * hi - p;
      out.vel[c] = -out.vel[c];
    }
    // Reflection cannot overshoot for sane speeds; clamp guards odd configs.
    if (out.pos[c] < lo || out.pos[c] > hi) out.pos[c] = std::clamp(out.pos[c], lo, hi);
  }
  return out;
}

StepResult step(const WorldState& world, const Action& action, const WorldConfig& cfg,
                StepEvents* events) {
  for (const BallState& b : world.balls)
    if (!finite(b.pos) || !finite(b.vel))
      throw std::runtime_error("step: non-finite world state");

  Vec2 accel = action.is_discrete() ? discrete_to_accel(action.index(), cfg) : action.accel();
  if (!finite(accel)) throw std::runtime_error("step: non-finite action");
  if (cfg.force_mode) accel /= cfg.ball_mass;

  const int n = static_cast<int>(world.balls.size());
  const double h = cfg.dt / cfg.substeps;
  const double r = cfg.ball_radius;

  StepResult res;
  res.next = world;
  std::vector<BallState>& balls = res.next.balls;

  for (int s = 0; s < cfg.substeps; ++s) {
    balls[0].vel += accel * h;
    for (BallState& b : balls) b.pos += b.vel * h;
    for (BallState& b : balls) b = resolve_wall(b, cfg);

    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        BallState& bi = balls[static_cast<std::size_t>(i)];
        BallState& bj = balls[static_cast<std::size_t>(j)];
        if ((bj.pos - bi.pos).norm() > 2.0 * r) continue;
        CollisionOutcome c = resolve_ball_collision(bi, bj, cfg.ball_mass, cfg.ball_mass, r);
        if (events)
          events->contacts.push_back({i, j, bi, bj, c.a, c.b, c.degenerate});
        if (i == 0) res.ego_collided = true;
        bi = c.a;
        bj = c.b;
      }
    }
    // Separation can push a ball past a wall; contain once more.
    for (BallState& b : balls) b = resolve_wall(b, cfg);

    for (BallState& b : balls) {
      double speed = b.vel.norm();
      if (speed > cfg.max_speed) b.vel *= cfg.max_speed / speed;
    }
  }

  res.reward = res.ego_collided ? -1.0 : 0.0;
  res.next.t = world.t + 1;
  return res;
}

}  // namespace billiard::sim
