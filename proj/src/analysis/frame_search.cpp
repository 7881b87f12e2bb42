#include "qbath/analysis/frame_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qbath/core/eigen.hpp"
#include "qbath/core/errors.hpp"
#include "qbath/dynamics/pt_generator.hpp"

namespace qbath {

namespace {

using Point = std::vector<double>;

constexpr int kMaxGridSide = 6;

class Objective {
 public:
  Objective(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c, const FrameSearchOptions& opts)
      : a_(a), b_(b), c_(c), opts_(opts) {}

  bool exhausted() const { return used_ >= opts_.budget; }
  int used() const { return used_; }

  FrameAngles angles(const Point& p) const {
    FrameAngles fa;
    fa.first = {p[0], p[1], 0.0};
    fa.second = opts_.same_state ? fa.first : Vec3{p[2], p[3], 0.0};
    return fa;
  }

  double operator()(const Point& p) {
    ++used_;
    return evaluate_creation_condition(a_, b_, c_, InitialStateFrame::from_angles(angles(p)), opts_.margin).margin();
  }

 private:
  const ComplexMatrix& a_;
  const ComplexMatrix& b_;
  const ComplexMatrix& c_;
  const FrameSearchOptions& opts_;
  int used_ = 0;
};

struct Scored {
  Point point;
  double value;
};

// Nelder-Mead with standard coefficients; stops at the first point below -margin.
Scored nelder_mead(Objective& f, const Point& start, double step, int iterations, double margin) {
  const std::size_t n = start.size();
  std::vector<Scored> simplex;
  simplex.push_back({start, f(start)});
  for (std::size_t i = 0; i < n && !f.exhausted(); ++i) {
    Point p = start;
    p[i] += step;
    simplex.push_back({p, f(p)});
  }
  const auto best_of = [&] {
    return *std::min_element(simplex.begin(), simplex.end(),
                             [](const Scored& x, const Scored& y) { return x.value < y.value; });
  };
  if (simplex.size() < n + 1) return best_of();

  for (int it = 0; it < iterations && !f.exhausted(); ++it) {
    std::stable_sort(simplex.begin(), simplex.end(), [](const Scored& x, const Scored& y) { return x.value < y.value; });
    if (simplex.front().value < -margin) break;

    Point centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k].point[i] / static_cast<double>(n);
    const auto along = [&](double coef) {
      Point p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = centroid[i] + coef * (simplex.back().point[i] - centroid[i]);
      return p;
    };

    Scored reflected{along(-1.0), 0.0};
    reflected.value = f(reflected.point);
    if (reflected.value < simplex.front().value) {
      if (f.exhausted()) {
        simplex.back() = reflected;
        break;
      }
      Scored expanded{along(-2.0), 0.0};
      expanded.value = f(expanded.point);
      simplex.back() = expanded.value < reflected.value ? expanded : reflected;
      continue;
    }
    if (reflected.value < simplex[n - 1].value) {
      simplex.back() = reflected;
      continue;
    }
    if (f.exhausted()) break;
    const bool outside = reflected.value < simplex.back().value;
    Scored contracted{along(outside ? -0.5 : 0.5), 0.0};
    contracted.value = f(contracted.point);
    if (contracted.value < std::min(reflected.value, simplex.back().value)) {
      simplex.back() = contracted;
      continue;
    }
    for (std::size_t k = 1; k <= n && !f.exhausted(); ++k) {
      for (std::size_t i = 0; i < n; ++i)
        simplex[k].point[i] = simplex[0].point[i] + 0.5 * (simplex[k].point[i] - simplex[0].point[i]);
      simplex[k].value = f(simplex[k].point);
    }
  }
  return best_of();
}

}  // namespace

int frame_grid_side(int budget, bool same_state) {
  const int qubits = same_state ? 1 : 2;
  for (int k = kMaxGridSide; k >= 1; --k) {
    const double per_qubit = 2.0 * k * k;
    if (std::pow(per_qubit, qubits) <= budget / 2.0) return k;
  }
  return 1;
}

FrameSearchResult search_entangling_frame(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                          const FrameSearchOptions& options) {
  if (options.budget < 1) throw UsageError("frame search budget must be at least 1");
  FrameSearchResult result;
  result.d_tilde_psd = is_psd(build_d_tilde(a, b, c));

  Objective f(a, b, c, options);
  const std::size_t dims = options.same_state ? 2 : 4;
  const auto succeed = [&](const Point& p, double value) {
    result.angles = f.angles(p);
    result.frame = InitialStateFrame::from_angles(*result.angles);
    result.best_margin = value;
    result.evaluations = f.used();
    return result;
  };

  const Point canonical(dims, 0.0);
  const double canonical_value = f(canonical);
  if (canonical_value < -options.margin) return succeed(canonical, canonical_value);

  // Coarse grid, first qubit slowest.
  const int k = frame_grid_side(options.budget, options.same_state);
  const int azimuths = 2 * k;
  const int polars = k;
  const double d_az = 2.0 * std::numbers::pi / azimuths;
  const double d_pol = std::numbers::pi / polars;
  std::vector<std::pair<double, double>> cells;
  for (int i = 0; i < azimuths; ++i)
    for (int j = 0; j < polars; ++j) cells.emplace_back(i * d_az, (j + 0.5) * d_pol);

  std::vector<Scored> seen{{canonical, canonical_value}};
  const std::size_t combos = options.same_state ? cells.size() : cells.size() * cells.size();
  for (std::size_t idx = 0; idx < combos && !f.exhausted(); ++idx) {
    Point p;
    if (options.same_state) {
      p = {cells[idx].first, cells[idx].second};
    } else {
      const auto& c1 = cells[idx / cells.size()];
      const auto& c2 = cells[idx % cells.size()];
      p = {c1.first, c1.second, c2.first, c2.second};
    }
    const double value = f(p);
    if (value < -options.margin) return succeed(p, value);
    seen.push_back({std::move(p), value});
  }

  std::stable_sort(seen.begin(), seen.end(), [](const Scored& x, const Scored& y) { return x.value < y.value; });
  Scored best = seen.front();
  const double step = 0.5 * std::min(d_az, d_pol);
  for (std::size_t start = 0; start < seen.size() && !f.exhausted(); ++start) {
    const Scored local = nelder_mead(f, seen[start].point, step, options.refine_iterations, options.margin);
    if (local.value < best.value) best = local;
    if (best.value < -options.margin) return succeed(best.point, best.value);
  }

  result.best_margin = best.value;
  result.evaluations = f.used();
  return result;
}

}  // namespace qbath
