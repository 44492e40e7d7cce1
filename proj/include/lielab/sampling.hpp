#pragma once

#include "lielab/exact_linalg.hpp"
#include "lielab/matrix_units.hpp"

#include <cstdint>
#include <random>

namespace lielab {

// std::mt19937_64 output is fixed by the standard; the draws below use only
// raw engine output, so sequences are identical across platforms.
using Rng = std::mt19937_64;

/// Integer uniform in [lo, hi].
inline long draw_int(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Each coordinate zero with probability 1/2, otherwise uniform in
/// {-2, -1, 1, 2}. Never returns the zero vector.
Vec random_sparse_vector(Index n, Rng& rng);

/// Entries uniform in {-2..2} with occasional denominators 2 or 3.
Vec random_vector(Index n, Rng& rng);

/// A matrix over `rows` x `cols` with roughly `density` of the positions
/// filled with small rationals.
FinMatrix random_fin_matrix(const IndexSet& rows, const IndexSet& cols, Rng& rng, double density = 0.5);

}  // namespace lielab
