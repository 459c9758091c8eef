#include "qps/wigner.hpp"

#include <cmath>
#include <stdexcept>

namespace qps {
namespace {

constexpr int kKernelDegreeCap = 8;

void require_kernel_dim(const PhaseSpace& ps) {
    if (ps.qubits() > kKernelDegreeCap)
        throw std::invalid_argument("dense oracle limit exceeded");
}

CMat checked_density(const PhaseSpace& ps, const QuantumState& state) {
    if (state.dim() != ps.dim())
        throw std::invalid_argument("state dimension does not match the field");
    CMat rho = state.density_matrix();
    if (!rho.is_hermitian(1e-8))
        throw std::invalid_argument("non-Hermitian state beyond tolerance");
    return rho;
}

std::vector<std::string> fine_labels(const PhaseSpace& ps) {
    std::vector<std::string> labels;
    for (int i = 0; i < ps.dim(); ++i) labels.push_back(ps.ket_label(i));
    return labels;
}

std::vector<std::string> coarse_labels(const CosetPartition& pt) {
    std::vector<std::string> labels;
    for (GfElem rep : pt.representatives) labels.push_back(pt.field.label(rep));
    return labels;
}

}  // namespace

double WignerTable::sum() const {
    double s = 0.0;
    for (const auto& row : values)
        for (double v : row) s += v;
    return s;
}

CMat kernel_dense(const PhaseSpace& ps, GfElem alpha, GfElem beta) {
    require_kernel_dim(ps);
    const Gf2Field& f = ps.field();
    CMat sum(ps.dim());
    const double scale = 1.0 / double(ps.dim());
    for (GfElem ap : f.elements_power_order())
        for (GfElem bp : f.elements_power_order()) {
            const int chi = f.character(f.add(f.mul(alpha, ap), f.mul(beta, bp)));
            sum.axpy(scale * chi, ps.displacement_dense(ap, bp));
        }
    return sum;
}

WignerTable wigner_of_state(const PhaseSpace& ps, const QuantumState& state) {
    require_kernel_dim(ps);
    const Gf2Field& f = ps.field();
    const CMat rho = checked_density(ps, state);
    const int dim = ps.dim();

    // d(a', b') = Tr[rho D(a', b')], taken through the one-entry-per-column
    // structure of the displacement operators.
    std::vector<std::vector<cplx>> dvals(static_cast<size_t>(dim),
                                         std::vector<cplx>(static_cast<size_t>(dim)));
    for (int ai = 0; ai < dim; ++ai)
        for (int bi = 0; bi < dim; ++bi) {
            const GfElem ap = ps.element_at(ai), bp = ps.element_at(bi);
            const cplx phi = phase_phi(f, ap, bp);
            cplx t{};
            for (uint32_t bits = 0; bits < f.order(); ++bits) {
                const GfElem nu{bits};
                const GfElem shifted = f.add(nu, bp);
                t += rho.at(ps.index_of(nu), ps.index_of(shifted)) *
                     (phi * double(f.character(f.mul(ap, shifted))));
            }
            dvals[size_t(ai)][size_t(bi)] = t;
        }

    WignerTable w;
    w.coarse = false;
    w.dim = dim;
    w.labels = fine_labels(ps);
    w.values.assign(size_t(dim), std::vector<double>(size_t(dim), 0.0));
    const double scale = 1.0 / (double(dim) * double(dim));
    for (int col = 0; col < dim; ++col)
        for (int row = 0; row < dim; ++row) {
            const GfElem alpha = ps.element_at(col), beta = ps.element_at(row);
            cplx acc{};
            for (int ai = 0; ai < dim; ++ai)
                for (int bi = 0; bi < dim; ++bi) {
                    const GfElem ap = ps.element_at(ai), bp = ps.element_at(bi);
                    const int chi = f.character(f.add(f.mul(alpha, ap), f.mul(beta, bp)));
                    acc += double(chi) * dvals[size_t(ai)][size_t(bi)];
                }
            acc *= scale;
            if (std::abs(acc.imag()) > 1e-9)
                throw std::logic_error("Wigner value acquired an imaginary part");
            w.values[size_t(row)][size_t(col)] = acc.real();
        }
    return w;
}

QuantumState reconstruct_state(const PhaseSpace& ps, const WignerTable& w) {
    require_kernel_dim(ps);
    if (w.coarse || w.dim != ps.dim() || int(w.values.size()) != ps.dim())
        throw std::invalid_argument("wrong table shape");
    for (const auto& row : w.values)
        if (int(row.size()) != ps.dim()) throw std::invalid_argument("wrong table shape");
    CMat rho(ps.dim());
    for (int col = 0; col < ps.dim(); ++col)
        for (int row = 0; row < ps.dim(); ++row) {
            const GfElem alpha = ps.element_at(col), beta = ps.element_at(row);
            rho.axpy(w.values[size_t(row)][size_t(col)], kernel_dense(ps, alpha, beta));
        }
    return QuantumState::density(std::move(rho));
}

CMat coarse_kernel(const PhaseSpace& ps, const CosetPartition& pt, int tau_index, int xi_index) {
    require_kernel_dim(ps);
    if (!(ps.field() == pt.field)) throw std::invalid_argument("partition/field mismatch");
    if (tau_index < 0 || tau_index >= pt.coset_count() || xi_index < 0 ||
        xi_index >= pt.coset_count())
        throw std::invalid_argument("coset index out of range");
    CMat sum(ps.dim());
    for (GfElem alpha : pt.cosets[size_t(tau_index)])
        for (GfElem beta : pt.cosets[size_t(xi_index)]) sum += kernel_dense(ps, alpha, beta);
    return sum;
}

WignerTable coarse_wigner(const PhaseSpace& ps, const CosetPartition& pt,
                          const QuantumState& state) {
    require_kernel_dim(ps);
    if (!(ps.field() == pt.field)) throw std::invalid_argument("partition/field mismatch");
    const CMat rho = checked_density(ps, state);
    const int k = pt.coset_count();

    WignerTable w;
    w.coarse = true;
    w.dim = k;
    w.labels = coarse_labels(pt);
    w.values.assign(size_t(k), std::vector<double>(size_t(k), 0.0));
    const double scale = 1.0 / double(ps.dim());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const CMat kern = coarse_kernel(ps, pt, i, j);
            cplx acc{};
            for (int r = 0; r < ps.dim(); ++r)
                for (int c = 0; c < ps.dim(); ++c) acc += rho.at(r, c) * kern.at(c, r);
            acc *= scale;
            if (std::abs(acc.imag()) > 1e-9)
                throw std::logic_error("Wigner value acquired an imaginary part");
            w.values[size_t(j)][size_t(i)] = acc.real();
        }
    return w;
}

WignerTable coarse_by_block_sum(const PhaseSpace& ps, const CosetPartition& pt,
                                const WignerTable& fine) {
    if (fine.coarse || fine.dim != ps.dim()) throw std::invalid_argument("wrong table shape");
    if (!(ps.field() == pt.field)) throw std::invalid_argument("partition/field mismatch");
    const int k = pt.coset_count();
    WignerTable w;
    w.coarse = true;
    w.dim = k;
    w.labels = coarse_labels(pt);
    w.values.assign(size_t(k), std::vector<double>(size_t(k), 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            double s = 0.0;
            for (GfElem alpha : pt.cosets[size_t(i)])
                for (GfElem beta : pt.cosets[size_t(j)])
                    s += fine.values[size_t(ps.index_of(beta))][size_t(ps.index_of(alpha))];
            w.values[size_t(j)][size_t(i)] = s;
        }
    return w;
}

}  // namespace qps
