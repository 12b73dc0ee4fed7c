#pragma once

// Shared fixtures for the test suites: deterministic RNG and random
// matrix / subspace generators.

#include <random>
#include <vector>

#include "orbitcodes/matrix_fq.hpp"
#include "orbitcodes/subspace.hpp"

namespace testutil {

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed);
    return gen;
}

inline orbitcodes::MatrixFq random_matrix(const orbitcodes::BaseFieldPtr& f, int rows, int cols) {
    std::uniform_int_distribution<int> dist(0, f->order() - 1);
    orbitcodes::MatrixFq m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, dist(rng()));
    return m;
}

inline orbitcodes::MatrixFq random_invertible(const orbitcodes::BaseFieldPtr& f, int n) {
    for (;;) {
        orbitcodes::MatrixFq m = random_matrix(f, n, n);
        if (m.rank() == n) return m;
    }
}

inline orbitcodes::Subspace random_subspace(const orbitcodes::BaseFieldPtr& f, int n, int k) {
    for (;;) {
        orbitcodes::Subspace s = orbitcodes::Subspace::from_rows(random_matrix(f, k, n));
        if (s.dim() == k) return s;
    }
}

}  // namespace testutil
