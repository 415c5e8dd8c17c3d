#pragma once

#include "ordkit/term.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ordkit::detail {

/// A pool of terms with their lengths, sorted by length ascending.
struct Pool {
    std::vector<Term> terms;
    std::vector<std::size_t> lengths;

    void add(Term t, std::size_t len) {
        terms.push_back(std::move(t));
        lengths.push_back(len);
    }
    std::size_t size() const noexcept { return terms.size(); }
};

/// Calls emit(chain) for every non-empty sequence c0, c1, ... of pool
/// members with allowed(c_i, c_{i+1}) and total length in [min_total,
/// max_total]. The pool must be sorted by length.
template <class Allowed, class Emit>
void for_each_chain(const Pool& pool, std::size_t min_total, std::size_t max_total, Allowed allowed, Emit emit) {
    std::vector<Term> chain;
    auto extend = [&](auto& self, std::size_t used) -> void {
        for (std::size_t i = 0; i < pool.size(); ++i) {
            const std::size_t len = pool.lengths[i];
            if (used + len > max_total)
                break;
            const Term& c = pool.terms[i];
            if (!chain.empty() && !allowed(chain.back(), c))
                continue;
            chain.push_back(c);
            if (used + len >= min_total)
                emit(static_cast<const std::vector<Term>&>(chain));
            self(self, used + len);
            chain.pop_back();
        }
    };
    extend(extend, 0);
}

} // namespace ordkit::detail
