#include "ordkit/linear.hpp"
#include "ordkit/simd/kernels.hpp"

#include <doctest.h>

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

using namespace ordkit;
using namespace ordkit::simd;

namespace {

std::vector<Level> available_levels() {
    std::vector<Level> out;
    for (Level l : {Level::scalar, Level::avx2, Level::neon})
        if (level_available(l))
            out.push_back(l);
    return out;
}

BitMatrix random_matrix(std::size_t n, double density, std::mt19937_64& rng) {
    BitMatrix m(n);
    std::bernoulli_distribution bit(density);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (bit(rng))
                m.set(i, j);
    return m;
}

// The strict order i < j, with a few bits flipped.
BitMatrix perturbed_chain(std::size_t n, std::size_t flips, std::mt19937_64& rng) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            m.set(i, j);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < flips; ++k) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j)
            continue;
        if (m.get(i, j))
            m.row(i)[j / 64] &= ~(std::uint64_t{1} << (j % 64));
        else
            m.set(i, j);
    }
    return m;
}

std::optional<Triple> brute_transitivity(const BitMatrix& m) {
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t s = 0; s < m.size(); ++s)
            if (m.get(r, s))
                for (std::size_t t = 0; t < m.size(); ++t)
                    if (m.get(s, t) && !m.get(r, t))
                        return Triple{r, s, t};
    return std::nullopt;
}

std::optional<IndexPair> brute_trichotomy(const BitMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m.get(i, j) == m.get(j, i))
                return IndexPair{i, j};
    return std::nullopt;
}

} // namespace

TEST_CASE("bit matrix basics") {
    BitMatrix m(300);
    CHECK(m.words_per_row() % 4 == 0);
    m.set(1, 299);
    m.set(1, 0);
    CHECK(m.get(1, 299));
    CHECK_FALSE(m.get(299, 1));
    CHECK(m.row_count(1) == 2);
    auto t = m.transposed();
    CHECK(t.get(299, 1));
    CHECK(t.get(0, 1));
    CHECK(t.row_count(1) == 0);
}

TEST_CASE("scalar level is always available") {
    CHECK(level_available(Level::scalar));
    CHECK(level_available(active_level()));
    CHECK(level_name(Level::avx2) == "avx2");
}

TEST_CASE("row kernels agree across levels") {
    std::mt19937_64 rng(7);
    const auto& ref = kernels(Level::scalar);
    for (Level level : available_levels()) {
        const auto& k = kernels(level);
        for (int round = 0; round < 300; ++round) {
            const std::size_t words = 4 * (1 + rng() % 6);
            std::vector<std::uint64_t> a(words), b(words), mask(words);
            for (std::size_t w = 0; w < words; ++w) {
                // sparse differences so that the first hit lands anywhere
                a[w] = rng();
                b[w] = rng() % 4 == 0 ? rng() : a[w] | (rng() % 2 ? 0 : rng());
                mask[w] = rng() % 3 == 0 ? rng() : 0;
            }
            const std::size_t begin = rng() % (words + 1);
            CHECK(k.first_andnot_word(a.data(), b.data(), begin, words) ==
                  ref.first_andnot_word(a.data(), b.data(), begin, words));
            CHECK(k.first_equal_word(a.data(), b.data(), mask.data(), begin, words) ==
                  ref.first_equal_word(a.data(), b.data(), mask.data(), begin, words));
        }
    }
}

TEST_CASE("violation searches match brute force on every level") {
    std::mt19937_64 rng(11);
    for (Level level : available_levels()) {
        for (int round = 0; round < 60; ++round) {
            const std::size_t n = 1 + rng() % 140;
            auto m = round % 2 ? random_matrix(n, 0.5, rng) : perturbed_chain(n, round % 5, rng);
            CHECK(find_transitivity_violation(m, level) == brute_transitivity(m));
            CHECK(find_trichotomy_violation(m, m.transposed(), level) == brute_trichotomy(m));
        }
    }
}

TEST_CASE("check_linear on a chain and on broken chains") {
    auto r = check_linear(50, [](std::size_t i, std::size_t j) { return i < j; });
    CHECK(r.pass);
    CHECK(r.pairs == 2500);
    CHECK(r.rank[7] == 7);

    auto refl = check_linear(5, [](std::size_t i, std::size_t j) { return i <= j; });
    CHECK(refl.property == "irreflexivity");
    CHECK(refl.witness == std::vector<std::size_t>{0});

    // 0 < 1 < 2 < 0
    auto cyc = check_linear(3, [](std::size_t i, std::size_t j) { return (i + 1) % 3 == j; });
    CHECK_FALSE(cyc.pass);
    CHECK(cyc.property == "transitivity");
    CHECK(cyc.witness == std::vector<std::size_t>{0, 1, 2});

    auto partial = check_linear(4, [](std::size_t i, std::size_t j) { return i < j && !(i == 1 && j == 2); });
    CHECK(partial.property == "trichotomy");
    CHECK(partial.witness == std::vector<std::size_t>{1, 2});
}

TEST_CASE("check_linear is independent of the thread count") {
    std::mt19937_64 rng(3);
    auto m = perturbed_chain(90, 3, rng);
    auto less = [&](std::size_t i, std::size_t j) { return m.get(i, j); };
    auto one = check_linear(90, less, 1);
    for (unsigned threads : {2U, 5U}) {
        auto many = check_linear(90, less, threads);
        CHECK(many.pass == one.pass);
        CHECK(many.property == one.property);
        CHECK(many.witness == one.witness);
    }
}

TEST_CASE("parallel_for rethrows the first failure") {
    std::vector<int> hit(100, 0);
    parallel_for(100, [&](std::size_t i) { hit[i] = 1; }, 4);
    CHECK(std::count(hit.begin(), hit.end(), 1) == 100);
    try {
        parallel_for(
            100,
            [](std::size_t i) {
                if (i % 10 == 3)
                    throw std::runtime_error(std::to_string(i));
            },
            4);
        FAIL("no exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "3");
    }
}
