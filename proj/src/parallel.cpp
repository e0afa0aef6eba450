#include "radic/parallel.hpp"

#include "radic/errors.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

namespace radic {

ChunkPlan plan_chunks(int n, int m, unsigned workers)
{
    if (workers == 0)
        throw UsageError("chunk plan needs at least one worker");
    if (n < 0 || m < 0)
        throw UsageError("negative shape n=" + std::to_string(n) + " m=" + std::to_string(m));

    ChunkPlan plan;
    plan.workers = workers;
    plan.total_terms = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m));

    const BigInt k = workers;
    const BigInt base = plan.total_terms / k;
    const BigInt extra = plan.total_terms % k;
    BigInt start = 0;
    for (unsigned w = 0; w < workers; ++w) {
        BigInt count = base;
        if (BigInt(w) < extra)
            ++count;
        if (sgn(count) == 0)
            break;
        plan.chunks.push_back({start, count});
        start += count;
    }
    return plan;
}

unsigned resolve_workers(unsigned requested) noexcept
{
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

template <typename T>
RadicResult<T> parallel(const Matrix<T>& a, unsigned workers, const TermCap& cap, ScalarKind mode)
{
    RadicResult<T> out;
    out.mode = mode;
    out.workers = resolve_workers(workers);
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    out.term_count = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    if (m > n) {
        out.value = T(0);
        return out;
    }
    if (m == 0) {
        out.value = T(1);
        return out;
    }
    cap.check(out.term_count);

    const BinomialTable table(m, n);
    const ChunkPlan plan = plan_chunks(n, m, out.workers);
    std::vector<T> partial(plan.chunks.size());
    std::vector<std::exception_ptr> failure(plan.chunks.size());
    {
        std::vector<std::jthread> pool;
        pool.reserve(plan.chunks.size());
        for (std::size_t w = 0; w < plan.chunks.size(); ++w) {
            pool.emplace_back([&, w] {
                try {
                    partial[w] =
                        detail::accumulate_terms(a, plan.chunks[w].start, plan.chunks[w].count, table);
                } catch (...) {
                    failure[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& f : failure)
        if (f)
            std::rethrow_exception(f);

    T acc = T(0);
    for (const T& p : partial)
        acc += p;
    out.value = acc;
    return out;
}

} // namespace

RadicResult<BigInt> radic_det_parallel(const ExactMatrix& a, unsigned workers, const TermCap& cap)
{
    return parallel(a, workers, cap, ScalarKind::exact);
}

RadicResult<double> radic_det_parallel(const FloatMatrix& a, unsigned workers, const TermCap& cap)
{
    return parallel(a, workers, cap, ScalarKind::floating);
}

} // namespace radic
