#include "kiss4d/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace kiss4d {

void SearchParams::validate() const {
  if (point_count < 2) throw DomainError("search: point_count must be at least 2");
  if (restarts < 1) throw DomainError("search: restarts must be at least 1");
  if (!(repulsion_exponent > 0)) throw DomainError("search: repulsion exponent must be positive");
  if (!(step_size > 0)) throw DomainError("search: step size must be positive");
  if (antipodal && point_count % 2 != 0) throw DomainError("search: antipodal mode needs an even point_count");
  if (descent_steps < 1 || maximin_refine_steps < 1) throw DomainError("search: step counts must be positive");
  if (threads < 1) throw DomainError("search: threads must be at least 1");
}

double repulsion_energy(const Eigen::Matrix4Xd& points, double exponent) {
  double energy = 0;
  const auto m = points.cols();
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      energy += std::pow((points.col(i) - points.col(j)).norm(), -exponent);
    }
  }
  return energy;
}

Eigen::Matrix4Xd repulsion_gradient(const Eigen::Matrix4Xd& points, double exponent) {
  const auto m = points.cols();
  Eigen::Matrix4Xd grad = Eigen::Matrix4Xd::Zero(4, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const Eigen::Vector4d diff = points.col(i) - points.col(j);
      const double d = diff.norm();
      // d/dp_i d^{-s} = -s d^{-s-2} (p_i - p_j)
      const Eigen::Vector4d g = -exponent * std::pow(d, -exponent - 2) * diff;
      grad.col(i) += g;
      grad.col(j) -= g;
    }
  }
  return grad;
}

Eigen::Matrix4Xd random_unit_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Matrix4Xd points(4, static_cast<Eigen::Index>(count));
  for (Eigen::Index k = 0; k < points.cols(); ++k) {
    Eigen::Vector4d v;
    do {
      for (int r = 0; r < 4; ++r) v(r) = normal(rng);
    } while (v.norm() < 1e-8);
    points.col(k) = v.normalized();
  }
  return points;
}

namespace {

double min_chord(const Eigen::Matrix4Xd& points) {
  double best = 2.0;
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < points.cols(); ++j) {
      best = std::min(best, (points.col(i) - points.col(j)).norm());
    }
  }
  return best;
}

void normalize_columns(Eigen::Matrix4Xd& points) { points.colwise().normalize(); }

// Component of each column of `grad` tangent to the sphere at the matching point.
Eigen::Matrix4Xd tangent(const Eigen::Matrix4Xd& points, const Eigen::Matrix4Xd& grad) {
  Eigen::Matrix4Xd out = grad;
  for (Eigen::Index k = 0; k < points.cols(); ++k) {
    out.col(k) -= points.col(k).dot(grad.col(k)) * points.col(k);
  }
  return out;
}

double max_column_norm(const Eigen::Matrix4Xd& m) { return m.colwise().norm().maxCoeff(); }

// Smooth minimum of the pairwise chords, -(1/beta) log sum exp(-beta d_ij), and its gradient.
double soft_min(const Eigen::Matrix4Xd& points, double beta, Eigen::Matrix4Xd* grad) {
  const auto m = points.cols();
  const double floor = min_chord(points);
  double z = 0;
  if (grad) grad->setZero(4, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const Eigen::Vector4d diff = points.col(i) - points.col(j);
      const double d = diff.norm();
      const double w = std::exp(-beta * (d - floor));
      z += w;
      if (grad) {
        const Eigen::Vector4d g = w * diff / d;
        grad->col(i) += g;
        grad->col(j) -= g;
      }
    }
  }
  if (grad) *grad /= z;
  return floor - std::log(z) / beta;
}

class Trajectory {
 public:
  explicit Trajectory(bool enabled) : enabled_(enabled) {}
  void record(std::size_t step, int phase, const Eigen::Matrix4Xd& points, double energy = 0) {
    if (enabled_ && step % 10 == 0) samples_.push_back({step, phase, min_chord(points), energy});
  }
  std::optional<std::vector<TrajectoryPoint>> take() {
    if (!enabled_) return std::nullopt;
    return std::move(samples_);
  }

 private:
  bool enabled_;
  std::vector<TrajectoryPoint> samples_;
};

// Free state of a restart. In antipodal mode only half the points are free and the rest are
// their negatives; gradients are folded back onto the free half.
struct State {
  Eigen::Matrix4Xd free;
  bool antipodal = false;

  Eigen::Matrix4Xd full() const {
    if (!antipodal) return free;
    Eigen::Matrix4Xd out(4, 2 * free.cols());
    out << free, -free;
    return out;
  }
  Eigen::Matrix4Xd fold(const Eigen::Matrix4Xd& grad) const {
    if (!antipodal) return grad;
    return grad.leftCols(free.cols()) - grad.rightCols(free.cols());
  }
};

// Phase 1: backtracking descent on the repulsion energy, re-projecting onto S^3 after each step.
// Accepted steps never increase the energy.
void repulsion_descent(State& state, const SearchParams& params, Trajectory& trajectory) {
  const double s = params.repulsion_exponent;
  double energy = repulsion_energy(state.full(), s);
  double eta = std::max(params.step_size, 1e-2);
  for (std::size_t step = 0; step < params.descent_steps && eta > 1e-12; ++step) {
    const Eigen::Matrix4Xd dir = tangent(state.free, state.fold(repulsion_gradient(state.full(), s)));
    const double scale = max_column_norm(dir);
    if (!(scale > 0) || !std::isfinite(scale)) break;
    State trial{state.free - (eta / scale) * dir, state.antipodal};
    normalize_columns(trial.free);
    const double trial_energy = repulsion_energy(trial.full(), s);
    if (std::isfinite(trial_energy) && trial_energy <= energy) {
      state = std::move(trial);
      energy = trial_energy;
      eta *= 1.2;
    } else {
      eta *= 0.5;
    }
    trajectory.record(step, 1, state.full(), energy);
  }
}

// Phase 2: ascent on an annealed soft minimum. A step is accepted only if it raises the soft
// minimum without lowering the exact minimum chord.
void maximin_refine(State& state, const SearchParams& params, Trajectory& trajectory) {
  double beta = 20.0;
  constexpr double kMaxBeta = 1e6;
  double eta = params.step_size;
  double current_min = min_chord(state.full());
  Eigen::Matrix4Xd grad;
  double value = soft_min(state.full(), beta, &grad);
  for (std::size_t step = 0; step < params.maximin_refine_steps; ++step) {
    if (eta < 1e-12) {
      if (beta >= kMaxBeta) break;
      beta = std::min(kMaxBeta, beta * 4);
      eta = params.step_size;
      value = soft_min(state.full(), beta, &grad);
    }
    const Eigen::Matrix4Xd dir = tangent(state.free, state.fold(grad));
    const double scale = max_column_norm(dir);
    if (!(scale > 0)) {
      eta = 0;
      continue;
    }
    State trial{state.free + (eta / scale) * dir, state.antipodal};
    normalize_columns(trial.free);
    const Eigen::Matrix4Xd trial_full = trial.full();
    const double trial_min = min_chord(trial_full);
    Eigen::Matrix4Xd trial_grad;
    const double trial_value = soft_min(trial_full, beta, &trial_grad);
    if (trial_value > value && trial_min >= current_min) {
      state = std::move(trial);
      grad = std::move(trial_grad);
      value = trial_value;
      current_min = trial_min;
      eta *= 1.5;
    } else {
      eta *= 0.5;
    }
    trajectory.record(params.descent_steps + step, 2, state.full());
  }
}

}  // namespace

SearchResult maximin_restart(const SearchParams& params, std::size_t restart_index) {
  params.validate();
  constexpr int kRetries = 5;
  const std::uint64_t restart_seed = split_seed(params.seed, restart_index);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    const std::size_t free_count = params.antipodal ? params.point_count / 2 : params.point_count;
    State state{random_unit_points(free_count, split_seed(restart_seed, static_cast<std::uint64_t>(attempt))),
                params.antipodal};
    if (!std::isfinite(repulsion_energy(state.full(), params.repulsion_exponent))) continue;

    Trajectory trajectory(params.record_trajectory);
    repulsion_descent(state, params, trajectory);
    maximin_refine(state, params, trajectory);
    const Eigen::Matrix4Xd points = state.full();

    std::vector<R4Point> out;
    out.reserve(params.point_count);
    for (Eigen::Index k = 0; k < points.cols(); ++k) out.push_back(points.col(k).normalized());
    SearchResult result;
    result.configuration = Configuration(std::move(out));
    result.min_distance = verify_kissing(result.configuration).min_distance;
    result.restart_index = restart_index;
    result.trajectory = trajectory.take();
    return result;
  }
  throw SearchError("search: starting states stayed degenerate after retries");
}

SearchResult maximin_optimize(const SearchParams& params) {
  params.validate();
  std::vector<std::optional<SearchResult>> results(params.restarts);
  const std::size_t workers = std::min(params.threads, params.restarts);
  if (workers <= 1) {
    for (std::size_t r = 0; r < params.restarts; ++r) results[r] = maximin_restart(params, r);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t r = w; r < params.restarts; r += workers) results[r] = maximin_restart(params, r);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  // Best minimum chord, ties to the lowest restart index.
  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r) {
    if (results[r]->min_distance > results[best]->min_distance) best = r;
  }
  return std::move(*results[best]);
}

double gradient_check(const SearchParams& params, std::uint64_t probe_seed) {
  constexpr double h = 1e-6;
  const double s = params.repulsion_exponent;
  Eigen::Matrix4Xd points = random_unit_points(params.point_count, probe_seed);
  const Eigen::Matrix4Xd analytic = repulsion_gradient(points, s);
  const double floor = 1e-3 * analytic.cwiseAbs().maxCoeff();
  double worst = 0;
  for (Eigen::Index k = 0; k < points.cols(); ++k) {
    for (int r = 0; r < 4; ++r) {
      const double saved = points(r, k);
      points(r, k) = saved + h;
      const double up = repulsion_energy(points, s);
      points(r, k) = saved - h;
      const double down = repulsion_energy(points, s);
      points(r, k) = saved;
      const double numeric = (up - down) / (2 * h);
      const double a = analytic(r, k);
      const double denom = std::max({std::abs(a), std::abs(numeric), floor});
      worst = std::max(worst, std::abs(a - numeric) / denom);
    }
  }
  return worst;
}

}  // namespace kiss4d
