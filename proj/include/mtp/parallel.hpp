#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mtp/enclosure.hpp"
#include "mtp/mtp.hpp"

namespace mtp {

/// Smallest i < n for which attempt(i) returns true. The parallel version
/// runs attempts in batches of the OpenMP team size and still returns the
/// smallest successful index, so the answer never depends on scheduling.
/// attempt must be safe to call concurrently for distinct i.
std::optional<std::size_t> first_success_serial(std::size_t n, const std::function<bool(std::size_t)>& attempt);
std::optional<std::size_t> first_success_parallel(std::size_t n, const std::function<bool(std::size_t)>& attempt);

/// f evaluated at every point of a grid.
std::vector<Enclosure> eval_grid_serial(const MtpFunction& f, const std::vector<Rational>& xs, unsigned digits);
std::vector<Enclosure> eval_grid_parallel(const MtpFunction& f, const std::vector<Rational>& xs, unsigned digits);

/// Number of OpenMP threads available to the parallel kernels.
int worker_count();

}  // namespace mtp
