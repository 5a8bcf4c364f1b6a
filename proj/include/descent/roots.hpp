#pragma once

#include "descent/bigfloat.hpp"
#include "descent/cyclo.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace descent {

struct PrecisionConfig {
    unsigned start_bits = 128;
    unsigned max_bits = 4096;

    // Reads DESCENT_KIT_MAX_PRECISION (bits) if set.
    static PrecisionConfig from_env();
};

// A complex embedding of an element of K, together with the precision it
// was computed at.  Used to propose candidates only.
struct EmbeddingApprox {
    BigComplex value;
    unsigned bits;
};

EmbeddingApprox embed_approx(const Cyclo& x, int j, unsigned bits);

// All roots in K of sum_i coeffs[i] X^i (coefficients listed from the
// constant term up), sorted by Cyclo ordering, without multiplicity.  Every
// returned root is verified exactly.  Roots are complete: a root in K that
// is missing would contradict an a posteriori error bound; when that bound
// cannot be made small enough below the ceiling, Inconclusive is thrown.
std::vector<Cyclo> k_roots(const std::vector<Cyclo>& coeffs, const PrecisionConfig& cfg = {});

// Some r in K with r^p = x, or nothing if there is none.
std::optional<Cyclo> is_pth_power(const Cyclo& x, const PrecisionConfig& cfg = {});

// Double-precision helpers for search loops that pre-screen candidates
// before exact verification.
std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs);
// Elements x of K with D*x integral whose embeddings j = 1..(p-1)/2 are
// (approximately) one of the listed values each; coordinates of D*x must
// lie within tol of integers.
std::vector<Cyclo> candidates_from_embeddings(int p, const std::vector<std::vector<std::complex<double>>>& values,
                                              const Integer& D, double tol);

// Evaluates sum_i coeffs[i] X^i at x exactly.
Cyclo eval_poly(const std::vector<Cyclo>& coeffs, const Cyclo& x);

} // namespace descent
