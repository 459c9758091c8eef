#include "qps/phase_space.hpp"

#include <cmath>
#include <stdexcept>

namespace qps {

PhaseSpace::PhaseSpace(Gf2Field field, GfBasis sd_basis)
    : field_(std::move(field)), sd_(std::move(sd_basis)) {
    if (!field_.is_self_dual(sd_))
        throw std::invalid_argument("phase space requires self-dual basis");
    idx_of_.assign(field_.order(), 0);
    elem_at_.assign(field_.order(), GfElem{});
    for (uint32_t bits = 0; bits < field_.order(); ++bits) {
        const GfElem nu{bits};
        const std::vector<int> a = field_.expand_in_basis(nu, sd_);
        int idx = 0;
        for (int i = 0; i < field_.degree(); ++i) idx = idx << 1 | a[size_t(i)];
        idx_of_[bits] = idx;
        elem_at_[size_t(idx)] = nu;
    }
}

PhaseSpace::PhaseSpace(const Gf2Field& field) : PhaseSpace(field, find_self_dual_basis(field)) {}

std::string PhaseSpace::ket_label(int index) const {
    std::string s;
    for (int i = field_.degree() - 1; i >= 0; --i) s += (index >> i & 1) ? '1' : '0';
    return s;
}

PauliString PhaseSpace::displacement_string(GfElem alpha, GfElem beta) const {
    return qps::displacement_string(field_, sd_, alpha, beta);
}

void PhaseSpace::require_dense_dim(int cap) const {
    if (field_.degree() > cap) throw std::invalid_argument("dense oracle limit exceeded");
}

CMat PhaseSpace::z_dense(GfElem alpha) const {
    require_dense_dim(10);
    CMat m(dim());
    for (uint32_t bits = 0; bits < field_.order(); ++bits) {
        const GfElem nu{bits};
        m.at(index_of(nu), index_of(nu)) = field_.character(field_.mul(alpha, nu));
    }
    return m;
}

CMat PhaseSpace::x_dense(GfElem beta) const {
    require_dense_dim(10);
    CMat m(dim());
    for (uint32_t bits = 0; bits < field_.order(); ++bits) {
        const GfElem nu{bits};
        m.at(index_of(field_.add(nu, beta)), index_of(nu)) = 1.0;
    }
    return m;
}

CMat PhaseSpace::displacement_dense(GfElem alpha, GfElem beta) const {
    require_dense_dim(10);
    const cplx phi = phase_phi(field_, alpha, beta);
    CMat m(dim());
    // D|nu> = Phi chi(alpha (nu + beta)) |nu + beta>, one entry per column.
    for (uint32_t bits = 0; bits < field_.order(); ++bits) {
        const GfElem nu{bits};
        const GfElem shifted = field_.add(nu, beta);
        m.at(index_of(shifted), index_of(nu)) =
            phi * double(field_.character(field_.mul(alpha, shifted)));
    }
    return m;
}

CMat PhaseSpace::fourier_dense() const {
    require_dense_dim(10);
    const double scale = 1.0 / std::sqrt(double(dim()));
    CMat m(dim());
    for (uint32_t r = 0; r < field_.order(); ++r)
        for (uint32_t c = 0; c < field_.order(); ++c) {
            const GfElem nu{r}, nup{c};
            m.at(index_of(nu), index_of(nup)) =
                scale * double(field_.character(field_.mul(nu, nup)));
        }
    return m;
}

CMat PhaseSpace::pauli_dense(const PauliString& p) const {
    if (p.size() != field_.degree())
        throw std::invalid_argument("Pauli string length does not match qubit count");
    require_dense_dim(10);
    static const cplx iphase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    CMat m(dim());
    const int n = p.size();
    for (int col = 0; col < dim(); ++col) {
        int row = 0;
        cplx v = iphase[((p.phase_power % 4) + 4) % 4];
        for (int q = 0; q < n; ++q) {
            const int cb = col >> (n - 1 - q) & 1;
            int rb = cb;
            switch (p.letters[size_t(q)]) {
                case Pauli::I: break;
                case Pauli::X: rb = cb ^ 1; break;
                case Pauli::Y:
                    rb = cb ^ 1;
                    v *= cb ? cplx{0, -1} : cplx{0, 1};
                    break;
                case Pauli::Z:
                    if (cb) v = -v;
                    break;
            }
            row = row << 1 | rb;
        }
        m.at(row, col) = v;
    }
    return m;
}

CMat PhaseSpace::cnot_dense(const CnotGate& g) const {
    const int n = field_.degree();
    if (g.control < 1 || g.control > n || g.target < 1 || g.target > n ||
        g.control == g.target)
        throw std::invalid_argument("CNOT qubit index out of range");
    require_dense_dim(10);
    CMat m(dim());
    const int cbit = n - g.control, tbit = n - g.target;
    for (int col = 0; col < dim(); ++col) {
        const int row = (col >> cbit & 1) ? col ^ (1 << tbit) : col;
        m.at(row, col) = 1.0;
    }
    return m;
}

std::vector<Slope> PhaseSpace::all_slopes() const {
    std::vector<Slope> slopes;
    for (GfElem lambda : field_.elements_power_order()) slopes.push_back(Slope::finite(lambda));
    slopes.push_back(Slope::inf());
    return slopes;
}

std::vector<std::pair<GfElem, GfElem>> PhaseSpace::ray_points(Slope s) const {
    std::vector<std::pair<GfElem, GfElem>> pts;
    for (GfElem e : field_.elements_power_order())
        pts.emplace_back(s.infinite ? field_.zero() : e,
                         s.infinite ? e : field_.mul(s.value, e));
    return pts;
}

std::vector<DisplacementLabel> PhaseSpace::ray_labels(Slope s) const {
    std::vector<DisplacementLabel> labels;
    for (auto [alpha, beta] : ray_points(s))
        if (alpha.bits != 0 || beta.bits != 0) labels.push_back({alpha, beta});
    return labels;
}

CMat PhaseSpace::line_projector(const LineId& line) const {
    require_dense_dim(10);
    CMat ray(dim());
    const double scale = 1.0 / double(dim());
    for (auto [alpha, beta] : ray_points(line.slope))
        ray.axpy(scale, displacement_dense(alpha, beta));
    if (line.intercept.bits == 0) return ray;
    const CMat shift = line.slope.infinite ? displacement_dense(line.intercept, field_.zero())
                                           : displacement_dense(field_.zero(), line.intercept);
    return shift * ray * shift.adjoint();
}

CMat PhaseSpace::line_projector_weighted(const LineId& line) const {
    require_dense_dim(10);
    CMat m(dim());
    const double scale = 1.0 / double(dim());
    for (auto [alpha, beta] : ray_points(line.slope)) {
        const GfElem arg = line.slope.infinite ? beta : alpha;
        const double w = scale * field_.character(field_.mul(line.intercept, arg));
        m.axpy(w, displacement_dense(alpha, beta));
    }
    return m;
}

MubTable PhaseSpace::mub_table() const {
    if (field_.degree() > 10)
        throw std::invalid_argument("MUB table limited to degree <= 10");
    MubTable table;
    for (Slope s : all_slopes()) table.columns.push_back({s, ray_labels(s)});
    return table;
}

EigenSystem PhaseSpace::eigensystem(Slope s) const {
    require_dense_dim(8);
    EigenSystem sys;
    sys.slope = s;
    for (GfElem gamma : field_.elements_power_order()) {
        const CMat p = line_projector({s, gamma});
        // Rank-one projector: every nonzero column is proportional to the
        // eigenvector. Pick the largest one, then fix the global phase by
        // making the first significant amplitude real positive.
        int best = 0;
        double best_norm = -1.0;
        for (int j = 0; j < dim(); ++j) {
            double nrm = 0.0;
            for (int i = 0; i < dim(); ++i) nrm += std::norm(p.at(i, j));
            if (nrm > best_norm + 1e-12) {
                best_norm = nrm;
                best = j;
            }
        }
        std::vector<cplx> v(static_cast<size_t>(dim()));
        double nrm = 0.0;
        for (int i = 0; i < dim(); ++i) {
            v[size_t(i)] = p.at(i, best);
            nrm += std::norm(v[size_t(i)]);
        }
        nrm = std::sqrt(nrm);
        for (cplx& c : v) c /= nrm;
        for (cplx& c : v)
            if (std::abs(c) > 1e-9) {
                const cplx u = std::conj(c) / std::abs(c);
                for (cplx& w : v) w *= u;
                break;
            }
        std::vector<int> signs;
        for (const DisplacementLabel& lab : ray_labels(s)) {
            const GfElem arg = s.infinite ? lab.beta : lab.alpha;
            signs.push_back(field_.character(field_.mul(gamma, arg)));
        }
        sys.vectors.push_back(std::move(v));
        sys.signs.push_back(std::move(signs));
    }
    return sys;
}

}  // namespace qps
