#ifndef EXCHLIST_PARALLEL_HPP
#define EXCHLIST_PARALLEL_HPP

#include <functional>

namespace exchlist {

/// Runs task(0) .. task(n-1) on up to `workers` threads.
///
/// Tasks are assigned by a static interleaved schedule (worker w takes
/// indices w, w+W, w+2W, ...). Each task must write only to its own output
/// slots; under that contract results are identical for any worker count.
/// workers <= 1 runs inline.
void parallel_for(int n, int workers, const std::function<void(int)>& task);

/// Worker count actually used given a request: 0 means "all hardware
/// threads", otherwise the request itself (minimum 1).
int resolve_workers(int requested);

}  // namespace exchlist

#endif
