#include "lielab/sampling.hpp"

namespace lielab {

Vec random_sparse_vector(Index n, Rng& rng) {
  static constexpr long values[] = {-2, -1, 1, 2};
  Vec v = zero_vector<Rational>(n);
  while (n > 0 && is_zero_vector(v)) {
    for (Index i = 0; i < n; ++i) {
      v[i] = (rng() & 1U) ? Rational(values[rng() % 4]) : Rational(0);
    }
  }
  return v;
}

Vec random_vector(Index n, Rng& rng) {
  Vec v(n);
  for (Index i = 0; i < n; ++i) {
    const long num = draw_int(rng, -2, 2);
    const long den = draw_int(rng, 1, 6) <= 4 ? 1 : draw_int(rng, 2, 3);
    v[i] = Rational(num, den);
  }
  return v;
}

FinMatrix random_fin_matrix(const IndexSet& rows, const IndexSet& cols, Rng& rng, double density) {
  const auto threshold = static_cast<std::uint64_t>(density * 1000.0);
  FinMatrix x;
  for (const auto& i : rows) {
    for (const auto& j : cols) {
      if (rng() % 1000 >= threshold) continue;
      const long num = draw_int(rng, -3, 3);
      const long den = draw_int(rng, 1, 2);
      x.set(i, j, Rational(num, den));
    }
  }
  return x;
}

}  // namespace lielab
