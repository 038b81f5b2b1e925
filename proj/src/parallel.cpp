#include "mtp/parallel.hpp"

#include <omp.h>

#include <exception>

namespace mtp {

int worker_count() { return omp_get_max_threads(); }

std::optional<std::size_t> first_success_serial(std::size_t n, const std::function<bool(std::size_t)>& attempt) {
  for (std::size_t i = 0; i < n; ++i)
    if (attempt(i)) return i;
  return std::nullopt;
}

std::optional<std::size_t> first_success_parallel(std::size_t n, const std::function<bool(std::size_t)>& attempt) {
  const std::size_t batch = static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
  for (std::size_t start = 0; start < n; start += batch) {
    const std::size_t end = std::min(n, start + batch);
    std::vector<char> ok(end - start, 0);
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = start; i < end; ++i) {
      try {
        ok[i - start] = attempt(i) ? 1 : 0;
      } catch (...) {
#pragma omp critical(mtp_first_success)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    for (std::size_t i = start; i < end; ++i)
      if (ok[i - start]) return i;
  }
  return std::nullopt;
}

std::vector<Enclosure> eval_grid_serial(const MtpFunction& f, const std::vector<Rational>& xs, unsigned digits) {
  std::vector<Enclosure> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(eval_enclosure(f, x, digits));
  return out;
}

std::vector<Enclosure> eval_grid_parallel(const MtpFunction& f, const std::vector<Rational>& xs, unsigned digits) {
  std::vector<Enclosure> out(xs.size());
  const long n = static_cast<long>(xs.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = eval_enclosure(f, xs[k], digits);
    } catch (...) {
#pragma omp critical(mtp_eval_grid)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace mtp
