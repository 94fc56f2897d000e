#include "pshf/subspace.hpp"

namespace pshf {

void SubspaceBasis::check_independent() const {
    if (vectors.empty()) return;
    RatMatrix m(dim, ambient());
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < ambient(); ++j) m(i, j) = vectors[i][j];
    if (m.rank() != dim) throw MathError("degenerate basis: vectors are linearly dependent");
}

bool SubspaceBasis::pairwise_orthogonal() const {
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j)
            if (dot(vectors[i], vectors[j]) != 0) return false;
    return true;
}

Rat QuadraticForm::eval(const RatVec& w) const {
    RatVec qw = Q.apply(w);
    return dot(w, qw);
}

double QuadraticForm::eval(const std::vector<double>& w) const {
    const int d = Q.rows();
    if (static_cast<int>(w.size()) != d) throw MathError("eval: length mismatch");
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
        double row = 0.0;
        for (int j = 0; j < d; ++j) row += rat_to_double(Q(i, j)) * w[j];
        s += w[i] * row;
    }
    return s;
}

RationalPoly QuadraticForm::to_poly() const {
    const int d = Q.rows();
    std::vector<RationalPoly::Term> terms;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (Q(i, j) == 0) continue;
            Monomial m = Monomial::var(i) * Monomial::var(j);
            terms.emplace_back(m, Q(i, j));
        }
    return RationalPoly::from_terms(d, std::move(terms));
}

void QuadraticForm::validate_projector() const {
    if (Q.rows() != 2 * n || Q.cols() != 2 * n) throw MathError("quadratic form: bad shape");
    if (!(Q == Q.transposed())) throw MathError("quadratic form: not symmetric");
    if (!(Q * Q == Q)) throw MathError("quadratic form: not idempotent");
    if (Q.trace() != n) throw MathError("quadratic form: trace != n");
    if (Q.rank() != n) throw MathError("quadratic form: rank != n");
}

SubspaceBasis subspace_basis(const RatMatrix& A) {
    if (A.rows() != A.cols()) throw SpecError("subspace_basis: A must be square");
    const int n = A.rows();
    SubspaceBasis b;
    b.dim = n;
    for (int j = 0; j < n; ++j) {
        RatVec v(2 * n);
        for (int i = 0; i < n; ++i) v[i] = A(i, j);
        v[n + j] = 1;
        b.vectors.push_back(std::move(v));
    }
    return b;
}

SubspaceBasis orthogonal_complement(const SubspaceBasis& basis) {
    basis.check_independent();
    const int amb = basis.ambient();
    RatMatrix rows(basis.dim, amb);
    for (int i = 0; i < basis.dim; ++i)
        for (int j = 0; j < amb; ++j) rows(i, j) = basis.vectors[i][j];
    std::vector<RatVec> kernel = rows.nullspace();

    // Gram-Schmidt in construction order, no normalization.
    std::vector<RatVec> ortho;
    for (auto& g : kernel) {
        RatVec v = g;
        for (const auto& prev : ortho) {
            const Rat f = dot(g, prev) / dot(prev, prev);
            if (f == 0) continue;
            for (int j = 0; j < amb; ++j) v[j] -= f * prev[j];
        }
        ortho.push_back(std::move(v));
    }
    SubspaceBasis out;
    out.dim = static_cast<int>(ortho.size());
    out.vectors = std::move(ortho);
    for (const auto& g : out.vectors)
        for (const auto& m : basis.vectors)
            if (dot(g, m) != 0) throw MathError("complement not orthogonal to input basis");
    if (!out.pairwise_orthogonal()) throw MathError("complement basis not orthogonal");
    return out;
}

QuadraticForm distance_form(const SubspaceBasis& basis) {
    const int amb = basis.ambient();
    if (amb != 2 * basis.dim) throw SpecError("distance_form: basis must span half the ambient dimension");
    SubspaceBasis comp = orthogonal_complement(basis);
    QuadraticForm f;
    f.n = basis.dim;
    f.Q = RatMatrix(amb, amb);
    for (const auto& g : comp.vectors) {
        const Rat n2 = dot(g, g);
        for (int i = 0; i < amb; ++i) {
            if (g[i] == 0) continue;
            for (int j = 0; j < amb; ++j) {
                if (g[j] == 0) continue;
                f.Q(i, j) += g[i] * g[j] / n2;
            }
        }
    }
    f.validate_projector();
    for (const auto& m : basis.vectors)
        if (f.eval(m) != 0) throw MathError("distance form does not vanish on the subspace");
    return f;
}

QuadraticForm closed_form_distance(const JordanSpec& spec) {
    spec.validate();
    if (!spec.is_semisimple())
        throw SpecError("closed_form_distance: spec is not semisimple; use distance_form");
    const int n = spec.n;
    QuadraticForm f;
    f.n = n;
    f.Q = RatMatrix(2 * n, 2 * n);
    // Each orthogonal complement direction ell contributes ell ell^T / |ell|^2.
    auto add_form = [&](const std::vector<std::pair<int, Rat>>& ell, const Rat& norm2) {
        for (const auto& [i, ci] : ell)
            for (const auto& [j, cj] : ell) f.Q(i, j) += ci * cj / norm2;
    };
    int off = 0;
    for (const auto& blk : spec.blocks) {
        if (const auto* r = std::get_if<RealBlock>(&blk)) {
            const Rat norm2 = 1 + r->a * r->a;
            for (int i = 0; i < r->size; ++i) {
                const int j = off + i;
                add_form({{j, Rat(1)}, {n + j, -r->a}}, norm2);  // (x_j - a y_j)^2/(1+a^2)
            }
            off += r->size;
        } else {
            const auto& cb = std::get<ComplexBlock>(blk);
            const Rat norm2 = 1 + cb.b * cb.b + cb.c * cb.c;
            for (int p = 0; p < cb.pairs; ++p) {
                const int j1 = off + 2 * p, j2 = off + 2 * p + 1;
                // (x_{j1} - c y_{j1} + b y_{j2})^2 / (1+b^2+c^2)
                add_form({{j1, Rat(1)}, {n + j1, -cb.c}, {n + j2, cb.b}}, norm2);
                // (x_{j2} - c y_{j2} - b y_{j1})^2 / (1+b^2+c^2)
                add_form({{j2, Rat(1)}, {n + j2, -cb.c}, {n + j1, -cb.b}}, norm2);
            }
            off += 2 * cb.pairs;
        }
    }
    f.validate_projector();
    return f;
}

QuadraticForm distance_form_N(int n) {
    QuadraticForm f;
    f.n = n;
    f.Q = RatMatrix(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) f.Q(n + j, n + j) = 1;
    return f;
}

QuadraticForm distance_form_for(const JordanSpec& spec) {
    if (spec.is_semisimple()) return closed_form_distance(spec);
    return distance_form(subspace_basis(jordan_matrix(spec)));
}

std::vector<QuadraticForm> perturbation_residual(const JordanSpec& spec,
                                                 const std::vector<Rat>& delta_values) {
    spec.validate();
    if (!spec.has_nondegenerate())
        throw SpecError("perturbation_residual: spec has no non-degenerate block");
    const QuadraticForm base = distance_form(subspace_basis(jordan_matrix(spec.with_delta_zero())));
    std::vector<QuadraticForm> out;
    out.reserve(delta_values.size());
    for (const Rat& d : delta_values) {
        const QuadraticForm qd =
            distance_form(subspace_basis(jordan_matrix(spec.with_delta(d))));
        QuadraticForm q;
        q.n = spec.n;
        q.Q = qd.Q - base.Q;
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace pshf
