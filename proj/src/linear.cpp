#include "ordkit/linear.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace ordkit {

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads) {
    if (threads == 0)
        threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> stop_at{std::numeric_limits<std::size_t>::max()};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::size_t error_index = std::numeric_limits<std::size_t>::max();

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n || i > stop_at.load())
                return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                    stop_at.store(i);
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

simd::BitMatrix relation_matrix(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less,
                                unsigned threads) {
    simd::BitMatrix m(n);
    // Rows are disjoint word ranges, so workers never share a word.
    parallel_for(
        n,
        [&](std::size_t i) {
            for (std::size_t j = 0; j < n; ++j)
                if (less(i, j))
                    m.set(i, j);
        },
        threads);
    return m;
}

LinearityResult check_linear(const simd::BitMatrix& m, simd::Level level) {
    LinearityResult r;
    const std::size_t n = m.size();
    r.terms = n;
    r.pairs = n * n;
    r.triples = n * n * n;
    if (auto i = simd::find_reflexive(m)) {
        r.pass = false;
        r.property = "irreflexivity";
        r.witness = {*i};
        return r;
    }
    const simd::BitMatrix mt = m.transposed();
    if (auto p = simd::find_trichotomy_violation(m, mt, level)) {
        r.pass = false;
        r.property = "trichotomy";
        r.witness = {p->i, p->j};
        return r;
    }
    if (auto t = simd::find_transitivity_violation(m, level)) {
        r.pass = false;
        r.property = "transitivity";
        r.witness = {t->r, t->s, t->t};
        return r;
    }
    r.rank.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        r.rank[i] = mt.row_count(i);
    return r;
}

LinearityResult check_linear(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less,
                             unsigned threads, simd::Level level) {
    return check_linear(relation_matrix(n, less, threads), level);
}

} // namespace ordkit
