#pragma once

namespace tangles {

/// Number of OpenMP workers used by the parallel kernels. Results never
/// depend on this value; every kernel merges in canonical order.
int jobs() noexcept;
void set_jobs(int n) noexcept;

}  // namespace tangles
