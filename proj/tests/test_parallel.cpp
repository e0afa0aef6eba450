#include "oracle/oracle.hpp"
#include "support.hpp"

#include "radic/errors.hpp"
#include "radic/parallel.hpp"

#include <doctest.h>

#include <functional>
#include <random>
#include <set>

using namespace radic;

namespace {

std::vector<std::pair<long, long>> as_pairs(const ChunkPlan& p)
{
    std::vector<std::pair<long, long>> out;
    for (const auto& c : p.chunks)
        out.emplace_back(c.start.get_si(), c.count.get_si());
    return out;
}

} // namespace

TEST_CASE("plan_chunks examples")
{
    using V = std::vector<std::pair<long, long>>;
    CHECK(as_pairs(plan_chunks(8, 5, 4)) == V{{0, 14}, {14, 14}, {28, 14}, {42, 14}});
    CHECK(as_pairs(plan_chunks(8, 5, 1)) == V{{0, 56}});
    CHECK(as_pairs(plan_chunks(8, 5, 5)) == V{{0, 12}, {12, 11}, {23, 11}, {34, 11}, {45, 11}});
    CHECK(plan_chunks(8, 5, 4).total_terms == 56);

    // fewer terms than workers: no empty chunks
    CHECK(as_pairs(plan_chunks(3, 2, 8)) == V{{0, 1}, {1, 1}, {2, 1}});
    CHECK(plan_chunks(2, 3, 4).chunks.empty());
    CHECK_THROWS_AS(plan_chunks(8, 5, 0), UsageError);
}

TEST_CASE("plan_chunks invariants")
{
    for (int n = 0; n <= 14; ++n)
        for (int m = 0; m <= n + 1; ++m)
            for (unsigned k = 1; k <= 9; ++k) {
                const ChunkPlan p = plan_chunks(n, m, k);
                REQUIRE(p.chunks.size() <= k);
                BigInt next = 0, lo = p.total_terms, hi = 0;
                for (const auto& c : p.chunks) {
                    REQUIRE(c.start == next);
                    REQUIRE(sgn(c.count) > 0);
                    next += c.count;
                    lo = std::min(lo, c.count);
                    hi = std::max(hi, c.count);
                }
                REQUIRE(next == p.total_terms);
                if (!p.chunks.empty())
                    REQUIRE(hi - lo <= 1);
            }
}

TEST_CASE("chunk traversals cover the order exactly once")
{
    for (unsigned k : {1u, 2u, 3u, 4u, 7u, 8u}) {
        const int n = 11, m = 4;
        const ChunkPlan p = plan_chunks(n, m, k);
        std::size_t rolling = 0, count = 0;
        std::set<std::vector<int>> seen;
        std::vector<int> previous;
        for (const auto& c : p.chunks) {
            for (Enumerator e(c.start, c.count, n, m); !e.done(); e.next()) {
                std::vector<int> cur(e.current().begin(), e.current().end());
                if (!previous.empty())
                    REQUIRE(previous < cur);
                for (int v : cur)
                    rolling = rolling * 1000003u + std::hash<int>{}(v);
                REQUIRE(seen.insert(cur).second);
                previous = std::move(cur);
                ++count;
            }
        }
        std::size_t expected_hash = 0;
        for (const auto& cols : oracle::combinations_bruteforce(n, m))
            for (int v : cols)
                expected_hash = expected_hash * 1000003u + std::hash<int>{}(v);
        CHECK(count == 330);
        CHECK(rolling == expected_hash);
    }
}

TEST_CASE("parallel examples")
{
    const ExactMatrix e{{1, 0, 0}, {0, 1, 0}};
    CHECK(radic_det_parallel(e, 3).value == 1);
    const auto tall = radic_det_parallel(ExactMatrix{{1, 2}, {3, 4}, {5, 6}}, 4);
    CHECK(tall.value == 0);
    CHECK(tall.term_count == 0);
    CHECK(radic_det_parallel(e, 0).workers >= 1);
    CHECK(radic_det_parallel(e, 5).workers == 5);
}

TEST_CASE("parallel equals sequential")
{
    std::mt19937_64 rng(0x5eed21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto [m, n] = testing::random_shape(rng, 10);
        const ExactMatrix a = testing::random_exact(rng, m, n);
        const BigInt want = radic_det_sequential(a).value;
        const FloatMatrix fa = testing::as_float(a);
        for (unsigned k : {1u, 2u, 3u, 4u, 7u, 8u}) {
            REQUIRE(radic_det_parallel(a, k).value == want);
            const double first = radic_det_parallel(fa, k).value;
            REQUIRE(radic_det_parallel(fa, k).value == first);
            REQUIRE(testing::close_relative(first, want.get_d(), 1e-9));
        }
    }
}

TEST_CASE("parallel honours the term cap")
{
    std::mt19937_64 rng(3);
    const ExactMatrix a = testing::random_exact(rng, 3, 12);
    TermCap cap;
    cap.max_terms = 219;
    CHECK_THROWS_AS(radic_det_parallel(a, 4, cap), CapacityError);
    cap.force = true;
    CHECK(radic_det_parallel(a, 4, cap).value == radic_det_sequential(a).value);
}
