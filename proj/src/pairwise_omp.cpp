#include "grasspack/pairwise.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cstdint>
#include <vector>

namespace grasspack {

namespace {

int worker_count(int jobs) {
#ifdef _OPENMP
    return jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
    return 1;
#endif
}

// Each worker reduces into its own slot; slots are merged in worker order so
// the result does not depend on scheduling.
template <class Stats, class Fn>
Stats reduce_pairs(std::uint64_t count, std::span<const IndexPair> pairs, const Fn& d2, int jobs) {
    const int workers = worker_count(jobs);
    std::vector<Stats> partial(static_cast<std::size_t>(workers));
    if (!pairs.empty()) {
        const auto total = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for num_threads(workers) schedule(static)
        for (std::int64_t j = 0; j < total; ++j) {
#ifdef _OPENMP
            auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
            auto& mine = partial[0];
#endif
            const auto& ab = pairs[static_cast<std::size_t>(j)];
            record(mine, ab, d2(ab.first, ab.second));
        }
    } else {
        const auto rows = static_cast<std::int64_t>(count);
#pragma omp parallel for num_threads(workers) schedule(dynamic, 4)
        for (std::int64_t a = 0; a < rows; ++a) {
#ifdef _OPENMP
            auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
            auto& mine = partial[0];
#endif
            const auto ua = static_cast<std::uint64_t>(a);
            for (std::uint64_t b = ua + 1; b < count; ++b) record(mine, {ua, b}, d2(ua, b));
        }
    }
    Stats out;
    for (const auto& p : partial) merge_into(out, p);
    return out;
}

}  // namespace

ExactPairStats exact_pairs_parallel(std::uint64_t count, std::span<const IndexPair> pairs,
                                    const ExactPairFn& d2, int jobs) {
    return reduce_pairs<ExactPairStats>(count, pairs, d2, jobs);
}

FloatPairStats float_pairs_parallel(std::uint64_t count, std::span<const IndexPair> pairs,
                                    const FloatPairFn& d2, int jobs) {
    return reduce_pairs<FloatPairStats>(count, pairs, d2, jobs);
}

}  // namespace grasspack
