#pragma once

#include <vector>

#include "pshf/jordan.hpp"
#include "pshf/matrix.hpp"
#include "pshf/poly.hpp"

namespace pshf {

// A list of linearly independent vectors in R^{2n}, coordinates ordered
// (x_1..x_n, y_1..y_n).
struct SubspaceBasis {
    int dim = 0;
    std::vector<RatVec> vectors;

    int ambient() const { return vectors.empty() ? 0 : static_cast<int>(vectors[0].size()); }
    void check_independent() const;
    bool pairwise_orthogonal() const;
};

// Squared Euclidean distance to an n-dimensional subspace of R^{2n} as
// d(w) = w^T Q w; Q is the orthogonal projector onto the complement.
struct QuadraticForm {
    int n = 0;
    RatMatrix Q;  // 2n x 2n, symmetric, idempotent, trace n

    Rat eval(const RatVec& w) const;
    double eval(const std::vector<double>& w) const;
    RationalPoly to_poly() const;  // in 2n variables
    void validate_projector() const;
};

// Defining basis of M(A) = (A+iI)R^n: vector j is (A e_j, e_j).
SubspaceBasis subspace_basis(const RatMatrix& A);

// Exact orthogonal (not normalized) basis of the complement, built by
// Gram-Schmidt over the kernel basis in construction order.
SubspaceBasis orthogonal_complement(const SubspaceBasis& basis);

QuadraticForm distance_form(const SubspaceBasis& basis);

// Direct assembly of the semisimple closed form; requires every block
// degenerate or delta = 0.
QuadraticForm closed_form_distance(const JordanSpec& spec);

// d_N for N = R^n: d(w) = sum y_j^2.
QuadraticForm distance_form_N(int n);

// q_delta = Q_{A_delta} - Q_{A_0} for each delta in the list.
std::vector<QuadraticForm> perturbation_residual(const JordanSpec& spec,
                                                 const std::vector<Rat>& delta_values);

QuadraticForm distance_form_for(const JordanSpec& spec);  // semisimple fast path or generic

}  // namespace pshf
