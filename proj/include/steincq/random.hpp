#pragma once

#include <random>

#include "steincq/channel.hpp"
#include "steincq/state.hpp"

namespace steincq {

// Deterministic pseudo-random quantum objects for tests and sweeps.

Matrix random_ginibre(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

// G G^dagger / Tr (full rank almost surely).
DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng);

// Random rank-one state.
DensityMatrix random_pure(std::size_t dim, std::mt19937_64& rng);

// Haar-ish unitary via Gram-Schmidt on a Ginibre matrix.
Matrix random_unitary(std::size_t dim, std::mt19937_64& rng);

std::vector<double> random_distribution(std::size_t n, std::mt19937_64& rng);

// Commuting pair: common random eigenbasis, independent spectra.
void random_commuting_pair(std::size_t dim, std::mt19937_64& rng, DensityMatrix* rho,
                           DensityMatrix* sigma);

CqChannel random_channel(std::size_t alphabet, std::size_t out_dim, std::mt19937_64& rng);

}  // namespace steincq
