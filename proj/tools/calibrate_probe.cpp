// Throwaway probe: random-policy mean episode reward vs physics constants.
#include <cstdio>

#include "billiard/rng.hpp"
#include "billiard/sim/world.hpp"

using namespace billiard;
using namespace billiard::sim;

static double mean_episode_reward(const WorldConfig& cfg, bool discrete, int episodes,
                                  int steps, std::uint64_t seed) {
  double total = 0.0;
  for (int e = 0; e < episodes; ++e) {
    std::uint64_t ep_seed = derive_seed(seed, static_cast<std::uint64_t>(e));
    WorldState w = init_world(cfg, ep_seed);
    Rng arng(splitmix64(ep_seed));
    double ep = 0.0;
    for (int t = 0; t < steps; ++t) {
      Action a = discrete ? Action::discrete(arng.uniform_index(9))
                          : Action::continuous(arng.uniform(-2.0, 2.0), arng.uniform(-2.0, 2.0));
      StepResult r = step(w, a, cfg);
      ep += r.reward;
      w = r.next;
    }
    total += ep;
  }
  return total / episodes;
}

int main() {
  const int E = 300, T = 100;
  for (double dt : {0.1, 0.15, 0.2, 0.25, 0.3}) {
    for (double A : {1.0, 1.2, 1.5, 2.0}) {
      for (double ms : {4.0, 6.0}) {
        WorldConfig cfg;
        cfg.dt = dt;
        cfg.accel_magnitude = A;
        cfg.max_speed = ms;
        double d = mean_episode_reward(cfg, true, E, T, 42);
        double c = mean_episode_reward(cfg, false, E, T, 42);
        std::printf("dt=%.2f A=%.1f vmax=%.0f  discrete=%8.3f  continuous=%8.3f  %s\n", dt, A,
                    ms, d, c, (c <= d ? "cont<=disc" : "ORDER-FLIP"));
      }
    }
  }
  return 0;
}
