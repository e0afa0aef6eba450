#pragma once

#include "radic/bigint.hpp"
#include "radic/radic.hpp"

#include <vector>

namespace radic {

struct Chunk {
    BigInt start;
    BigInt count;

    friend bool operator==(const Chunk&, const Chunk&) = default;
};

/// Contiguous split of the rank space [0, C(n,m)) over a fixed number of workers.
///
/// The first C(n,m) mod k chunks carry one extra term. Workers beyond C(n,m)
/// get no chunk at all.
struct ChunkPlan {
    BigInt total_terms;
    std::vector<Chunk> chunks;
    unsigned workers = 1;
};

/// Throws UsageError when workers == 0 or the shape is negative.
ChunkPlan plan_chunks(int n, int m, unsigned workers);

/// 0 resolves to the hardware concurrency (at least 1).
unsigned resolve_workers(unsigned requested) noexcept;

/// Chunked evaluation: each worker unranks its chunk start once and then
/// steps by successor; partial sums are merged in chunk order on the caller's
/// thread. Exact results match the sequential path; float results are
/// reproducible for a given worker count.
RadicResult<BigInt> radic_det_parallel(const ExactMatrix& a, unsigned workers,
                                       const TermCap& cap = {});
RadicResult<double> radic_det_parallel(const FloatMatrix& a, unsigned workers,
                                       const TermCap& cap = {});

} // namespace radic
