#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace uavcover {

// Largest x in [lo, hi] with pred(x) true, for a monotone predicate that is
// true on a prefix of the interval. pred(lo) must be true. Plain bisection;
// both residuals this library feeds it are monotone, so convergence is
// unconditional.
template <class Pred>
double bisect_last_true(Pred&& pred, double lo, double hi, double xtol,
                        int max_iters = 200) {
  if (pred(hi)) return hi;
  for (int i = 0; i < max_iters && hi - lo > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// Bisection counterpart that reports the iteration count through *iters.
template <class Pred>
double bisect_last_true_counted(Pred&& pred, double lo, double hi, double xtol,
                                std::int64_t* iters, int max_iters = 200) {
  if (pred(hi)) return hi;
  int i = 0;
  for (; i < max_iters && hi - lo > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid))
      lo = mid;
    else
      hi = mid;
  }
  if (iters) *iters += i;
  return lo;
}

// Smallest x in [lo, hi] with pred(x) true, for a monotone predicate that is
// false on a prefix. pred(hi) must be true.
template <class Pred>
double bisect_first_true(Pred&& pred, double lo, double hi, double xtol,
                         int max_iters = 200) {
  if (pred(lo)) return lo;
  for (int i = 0; i < max_iters && hi - lo > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

// Root of an increasing function f on [lo, hi], assuming f(lo) <= 0 <= f(hi).
template <class F>
double bisect_root_increasing(F&& f, double lo, double hi, double xtol,
                              int max_iters = 200) {
  for (int i = 0; i < max_iters && hi - lo > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Golden-section maximization of a unimodal f over [lo, hi]. Returns the best
// (x, f(x)) seen, endpoints included, so boundary maxima are not lost.
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double xtol,
                                     int max_iters = 200) {
  constexpr double inv_phi = 0.6180339887498949;
  double best_x = lo;
  double best_v = f(lo);
  const double v_hi = f(hi);
  if (v_hi > best_v) {
    best_x = hi;
    best_v = v_hi;
  }
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < max_iters && b - a > xtol; ++i) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  if (f1 > best_v) {
    best_x = x1;
    best_v = f1;
  }
  if (f2 > best_v) {
    best_x = x2;
    best_v = f2;
  }
  return {best_x, best_v};
}

// Golden-section maximization preceded by a coarse scan: evaluates
// `samples + 1` evenly spaced points, then refines around the best one.
// Robust when f has flat invalid regions next to the mode.
template <class F>
std::pair<double, double> sampled_golden_max(F&& f, double lo, double hi,
                                             int samples, double xtol) {
  if (!(hi > lo)) return {lo, f(lo)};
  double best_x = lo, best_v = f(lo);
  for (int i = 1; i <= samples; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / samples;
    const double v = f(x);
    if (v > best_v) {
      best_v = v;
      best_x = x;
    }
  }
  const double step = (hi - lo) / samples;
  const double bl = std::max(lo, best_x - step);
  const double bh = std::min(hi, best_x + step);
  auto [gx, gv] = golden_max(f, bl, bh, xtol);
  if (gv > best_v) return {gx, gv};
  return {best_x, best_v};
}

// Largest index k in [1, k_max] with pred(k) true, 0 if none. pred is
// monotone (true on a prefix).
template <class Pred>
std::int64_t largest_true_index(Pred&& pred, std::int64_t k_max,
                                std::int64_t* probes = nullptr) {
  std::int64_t n_probes = 0;
  auto check = [&](std::int64_t k) {
    ++n_probes;
    return pred(k);
  };
  std::int64_t result = 0;
  if (check(1)) {
    std::int64_t lo = 1, hi = k_max;
    if (check(k_max)) {
      result = k_max;
    } else {
      // invariant: pred(lo) true, pred(hi) false
      while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (check(mid))
          lo = mid;
        else
          hi = mid;
      }
      result = lo;
    }
  }
  if (probes) *probes += n_probes;
  return result;
}

}  // namespace uavcover
