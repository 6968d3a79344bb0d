#pragma once

#include <cstddef>
#include <functional>

namespace zdlab {

unsigned default_jobs();

// Runs fn(i) for every i in [0, count) across up to `jobs` worker threads.
// Callers must write results into per-index slots; merged output is then
// independent of scheduling, which keeps reports byte-identical whatever the
// job count.  The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& fn);

}  // namespace zdlab
