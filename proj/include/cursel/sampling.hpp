#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dense_matrix.hpp"
#include "error.hpp"

namespace cursel {

using Rng = std::mt19937_64;

/// Independent, reproducible substream `stream` of a base seed.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

//
// how_many distinct indices drawn uniformly without replacement from
// {0, ..., extent-1} minus exclude, in draw order. Axis follows exclude.
//
inline IndexSet uniform_indices(std::size_t extent, std::size_t how_many, const IndexSet& exclude, Rng& rng)
{
    std::vector<char> taken(extent, 0);
    for (std::size_t i : exclude) {
        require(i < extent, ErrorKind::IndexError, "excluded index out of range");
        taken[i] = 1;
    }
    std::vector<std::size_t> pool;
    pool.reserve(extent);
    for (std::size_t i = 0; i < extent; ++i)
        if (!taken[i])
            pool.push_back(i);
    require(how_many <= pool.size(), ErrorKind::InvalidInput,
            "cannot draw " + std::to_string(how_many) + " indices from " + std::to_string(pool.size()) +
                " available");

    // partial Fisher-Yates
    for (std::size_t i = 0; i < how_many; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    pool.resize(how_many);
    return IndexSet(exclude.axis(), std::move(pool));
}

inline IndexSet uniform_indices(Axis axis, std::size_t extent, std::size_t how_many, Rng& rng)
{
    return uniform_indices(extent, how_many, IndexSet(axis, std::vector<std::size_t>{}), rng);
}

} // namespace cursel
