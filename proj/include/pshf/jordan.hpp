#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pshf/matrix.hpp"
#include "pshf/rational.hpp"

#include <json.hpp>

namespace pshf {

// One Jordan block with real eigenvalue a (size x size, delta on the
// superdiagonal when size > 1).
struct RealBlock {
    Rat a;
    int size = 1;
    Rat delta = 1;
};

// One block of `pairs` copies of C = [[c,-b],[b,c]] with delta*I2 on the
// block superdiagonal when pairs > 1.
struct ComplexBlock {
    Rat c;
    Rat b;
    int pairs = 1;
    Rat delta = 1;
};

using BlockSpec = std::variant<RealBlock, ComplexBlock>;

inline int block_dim(const BlockSpec& b) {
    if (const auto* r = std::get_if<RealBlock>(&b)) return r->size;
    return std::get<ComplexBlock>(b).pairs * 2;
}

inline bool block_degenerate(const BlockSpec& b) {
    if (const auto* r = std::get_if<RealBlock>(&b)) return r->size == 1;
    return std::get<ComplexBlock>(b).pairs == 1;
}

struct JordanSpec {
    int n = 0;
    std::vector<BlockSpec> blocks;

    void validate() const;

    // Diagonalizable over C: every block is degenerate or has delta = 0.
    bool is_semisimple() const;
    bool has_nondegenerate() const;

    JordanSpec with_delta(const Rat& d) const;   // sets delta on every non-degenerate block
    JordanSpec with_delta_zero() const { return with_delta(0); }

    // Real parts of the eigenvalues in coordinate order: a for each row of a
    // real block, c twice per pair of a complex block.
    std::vector<Rat> eigen_real_parts() const;

    // One of "diag-uniform", "diag-pair", "complex-2x2", "general".
    std::string case_tag() const;

    // max_{j<=r} |a_j| / sqrt(1+a_j^2) over the leading r eigenvalue real parts.
    double theta_r(int r) const;

    static JordanSpec from_json(const nlohmann::json& j);
    static JordanSpec from_file(const std::string& path);
    nlohmann::ordered_json to_json() const;
};

// Block-diagonal assembly of the spec into an exact n x n matrix.
RatMatrix jordan_matrix(const JordanSpec& spec);

}  // namespace pshf
