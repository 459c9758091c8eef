#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "qps/phase_space.hpp"

using namespace qps;

TEST_CASE("index mapping is a bijection consistent with the self-dual basis") {
    for (int n : {1, 2, 3, 4}) {
        Gf2Field f = Gf2Field::with_default_modulus(n);
        PhaseSpace ps(f);
        std::set<int> seen;
        for (GfElem nu : f.elements_power_order()) {
            const int idx = ps.index_of(nu);
            CHECK(seen.insert(idx).second);
            CHECK(ps.element_at(idx) == nu);
        }
        CHECK(ps.index_of(f.zero()) == 0);
    }
    // GF(4), sd basis {s, s2}: sigma has expansion (1, 0) so index 2 = |10>.
    Gf2Field f(2, 0b111);
    PhaseSpace ps(f);
    CHECK(ps.index_of(f.sigma()) == 2);
    CHECK(ps.ket_label(2) == "10");
}

TEST_CASE("dense displacement equals the dense realization of its Pauli string") {
    for (int n : {1, 2, 3}) {
        Gf2Field f = Gf2Field::with_default_modulus(n);
        PhaseSpace ps(f);
        for (GfElem a : f.elements_power_order())
            for (GfElem b : f.elements_power_order()) {
                const CMat direct = ps.displacement_dense(a, b);
                const CMat via_string = ps.pauli_dense(ps.displacement_string(a, b));
                CHECK(direct.approx_equal(via_string, 1e-12));
            }
    }
}

TEST_CASE("displacement operators are Hermitian involutions") {
    for (int n : {1, 2, 3}) {
        Gf2Field f = Gf2Field::with_default_modulus(n);
        PhaseSpace ps(f);
        const CMat id = CMat::identity(ps.dim());
        for (GfElem a : f.elements_power_order())
            for (GfElem b : f.elements_power_order()) {
                const CMat d = ps.displacement_dense(a, b);
                CHECK(d.is_hermitian(1e-12));
                CHECK((d * d).approx_equal(id, 1e-12));
            }
    }
}

TEST_CASE("Weyl commutation: Z_a X_b = chi(ab) X_b Z_a") {
    for (int n : {1, 2, 3}) {
        Gf2Field f = Gf2Field::with_default_modulus(n);
        PhaseSpace ps(f);
        for (GfElem a : f.elements_power_order())
            for (GfElem b : f.elements_power_order()) {
                const CMat zx = ps.z_dense(a) * ps.x_dense(b);
                const CMat xz = ps.x_dense(b) * ps.z_dense(a);
                CHECK(zx.approx_equal(xz.scaled(double(f.character(f.mul(a, b)))), 1e-12));
            }
    }
}

TEST_CASE("D(1,1) = i Z X at one qubit") {
    Gf2Field f(1, 0b11);
    PhaseSpace ps(f);
    const CMat d = ps.displacement_dense(f.one(), f.one());
    CHECK(std::abs(d.at(0, 1) - cplx{0, 1}) < 1e-15);
    CHECK(std::abs(d.at(1, 0) - cplx{0, -1}) < 1e-15);
    CHECK(std::abs(d.at(0, 0)) < 1e-15);
    CHECK(ps.displacement_string(f.one(), f.one()).same_letters(PauliString::parse("Y")));
}

TEST_CASE("Fourier transform: Hadamard at N=1, unitary, maps Z to X") {
    Gf2Field f1(1, 0b11);
    PhaseSpace ps1(f1);
    const CMat h = ps1.fourier_dense();
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(h.at(0, 0) - r) < 1e-12);
    CHECK(std::abs(h.at(0, 1) - r) < 1e-12);
    CHECK(std::abs(h.at(1, 0) - r) < 1e-12);
    CHECK(std::abs(h.at(1, 1) + r) < 1e-12);

    for (int n : {1, 2, 3}) {
        Gf2Field f = Gf2Field::with_default_modulus(n);
        PhaseSpace ps(f);
        const CMat fr = ps.fourier_dense();
        CHECK((fr * fr.adjoint()).approx_equal(CMat::identity(ps.dim()), 1e-12));
        for (GfElem a : f.elements_power_order())
            CHECK((fr * ps.z_dense(a) * fr.adjoint()).approx_equal(ps.x_dense(a), 1e-12));
    }
}

TEST_CASE("ray points") {
    Gf2Field f(2, 0b111);
    PhaseSpace ps(f);
    for (auto [a, b] : ps.ray_points(Slope::finite(f.zero()))) CHECK(b == f.zero());
    for (auto [a, b] : ps.ray_points(Slope::inf())) CHECK(a == f.zero());
    CHECK(ps.ray_points(Slope::finite(f.sigma())).size() == 4);
    CHECK(ps.all_slopes().size() == 5);
}

TEST_CASE("lines of one slope partition the grid, N <= 4") {
    for (int n : {2, 3, 4}) {
        Gf2Field f = Gf2Field::with_default_modulus(n);
        PhaseSpace ps(f);
        for (Slope s : ps.all_slopes()) {
            std::set<std::pair<uint32_t, uint32_t>> seen;
            for (GfElem gamma : f.elements_power_order())
                for (auto [a, b] : ps.ray_points(s)) {
                    const GfElem bb = s.infinite ? b : f.add(b, gamma);
                    const GfElem aa = s.infinite ? f.add(a, gamma) : a;
                    CHECK(seen.insert({aa.bits, bb.bits}).second);
                }
            CHECK(seen.size() == f.order() * f.order());
        }
    }
}

TEST_CASE("line projectors are rank-one: P^2 = P, P = P^dag, Tr P = 1") {
    for (int n : {1, 2, 3}) {
        Gf2Field f = Gf2Field::with_default_modulus(n);
        PhaseSpace ps(f);
        for (Slope s : ps.all_slopes())
            for (GfElem gamma : f.elements_power_order()) {
                const CMat p = ps.line_projector({s, gamma});
                CHECK(p.is_hermitian(1e-12));
                CHECK((p * p).approx_equal(p, 1e-12));
                CHECK(std::abs(p.trace() - cplx{1, 0}) < 1e-12);
            }
    }
}

TEST_CASE("conjugated line projector equals the character-weighted sum") {
    for (int n : {1, 2, 3}) {
        Gf2Field f = Gf2Field::with_default_modulus(n);
        PhaseSpace ps(f);
        for (Slope s : ps.all_slopes())
            for (GfElem gamma : f.elements_power_order()) {
                const LineId line{s, gamma};
                CHECK(ps.line_projector(line).approx_equal(ps.line_projector_weighted(line),
                                                           1e-12));
            }
    }
}

TEST_CASE("line projectors of one slope resolve the identity") {
    for (int n : {1, 2, 3}) {
        Gf2Field f = Gf2Field::with_default_modulus(n);
        PhaseSpace ps(f);
        for (Slope s : ps.all_slopes()) {
            CMat sum(ps.dim());
            for (GfElem gamma : f.elements_power_order()) sum += ps.line_projector({s, gamma});
            CHECK(sum.approx_equal(CMat::identity(ps.dim()), 1e-12));
        }
    }
}

TEST_CASE("rays project onto the +1 eigenspace of their displacement set") {
    for (int n : {1, 2, 3}) {
        Gf2Field f = Gf2Field::with_default_modulus(n);
        PhaseSpace ps(f);
        for (Slope s : ps.all_slopes()) {
            const CMat p0 = ps.line_projector({s, f.zero()});
            for (const DisplacementLabel& lab : ps.ray_labels(s))
                CHECK((ps.displacement_dense(lab.alpha, lab.beta) * p0).approx_equal(p0, 1e-12));
        }
    }
}

TEST_CASE("slope-0 ray projects onto |0...0>") {
    Gf2Field f(2, 0b111);
    PhaseSpace ps(f);
    const CMat p = ps.line_projector({Slope::finite(f.zero()), f.zero()});
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(std::abs(p.at(r, c) - (r == 0 && c == 0 ? cplx{1, 0} : cplx{})) < 1e-12);
}

TEST_CASE("displacements shift lines covariantly (N = 2 exhaustive)") {
    Gf2Field f(2, 0b111);
    PhaseSpace ps(f);
    for (GfElem lambda : f.elements_power_order())
        for (GfElem g : f.elements_power_order())
            for (GfElem d : f.elements_power_order()) {
                const CMat u = ps.displacement_dense(g, d);
                const CMat moved = u * ps.line_projector({Slope::finite(lambda), f.zero()}) *
                                   u.adjoint();
                // (a, la) -> (a+g, la+d): intercept becomes d + lambda g.
                const GfElem intercept = f.add(d, f.mul(lambda, g));
                CHECK(moved.approx_equal(ps.line_projector({Slope::finite(lambda), intercept}),
                                         1e-12));
            }
    for (GfElem g : f.elements_power_order())
        for (GfElem d : f.elements_power_order()) {
            const CMat u = ps.displacement_dense(g, d);
            const CMat moved = u * ps.line_projector({Slope::inf(), f.zero()}) * u.adjoint();
            CHECK(moved.approx_equal(ps.line_projector({Slope::inf(), g}), 1e-12));
        }
}

TEST_CASE("MUB table shape and frozen N=1 columns") {
    Gf2Field f1(1, 0b11);
    PhaseSpace ps1(f1);
    const MubTable t1 = ps1.mub_table();
    REQUIRE(t1.columns.size() == 3);
    CHECK(ps1.displacement_string(t1.columns[0].labels[0].alpha, t1.columns[0].labels[0].beta)
              .same_letters(PauliString::parse("Z")));
    CHECK(ps1.displacement_string(t1.columns[1].labels[0].alpha, t1.columns[1].labels[0].beta)
              .same_letters(PauliString::parse("Y")));
    CHECK(ps1.displacement_string(t1.columns[2].labels[0].alpha, t1.columns[2].labels[0].beta)
              .same_letters(PauliString::parse("X")));

    Gf2Field f2(2, 0b111);
    PhaseSpace ps2(f2);
    const MubTable t2 = ps2.mub_table();
    CHECK(t2.columns.size() == 5);
    for (const MubColumn& col : t2.columns) CHECK(col.labels.size() == 3);
}

TEST_CASE("every non-identity label appears in exactly one MUB column") {
    for (int n : {2, 3}) {
        Gf2Field f = Gf2Field::with_default_modulus(n);
        PhaseSpace ps(f);
        std::set<std::pair<uint32_t, uint32_t>> seen;
        size_t total = 0;
        for (const MubColumn& col : ps.mub_table().columns)
            for (const DisplacementLabel& lab : col.labels) {
                CHECK(seen.insert({lab.alpha.bits, lab.beta.bits}).second);
                ++total;
            }
        CHECK(total == (f.order() - 1) * (f.order() + 1));
    }
}

TEST_CASE("operators in one MUB column commute") {
    for (int n : {2, 3}) {
        Gf2Field f = Gf2Field::with_default_modulus(n);
        PhaseSpace ps(f);
        for (const MubColumn& col : ps.mub_table().columns)
            for (size_t i = 0; i < col.labels.size(); ++i)
                for (size_t j = i + 1; j < col.labels.size(); ++j) {
                    const PauliString a =
                        ps.displacement_string(col.labels[i].alpha, col.labels[i].beta);
                    const PauliString b =
                        ps.displacement_string(col.labels[j].alpha, col.labels[j].beta);
                    CHECK(a.commutes_with(b));
                }
    }
}

TEST_CASE("eigensystem: computational basis at slope 0, Fourier at infinity") {
    Gf2Field f(2, 0b111);
    PhaseSpace ps(f);
    const EigenSystem zero = ps.eigensystem(Slope::finite(f.zero()));
    for (size_t k = 0; k < zero.vectors.size(); ++k) {
        const GfElem gamma = f.elements_power_order()[k];
        for (int i = 0; i < ps.dim(); ++i)
            CHECK(std::abs(zero.vectors[k][size_t(i)] -
                           (i == ps.index_of(gamma) ? cplx{1, 0} : cplx{})) < 1e-12);
    }
    const EigenSystem inf = ps.eigensystem(Slope::inf());
    const CMat fr = ps.fourier_dense();
    for (size_t k = 0; k < inf.vectors.size(); ++k) {
        const GfElem gamma = f.elements_power_order()[k];
        // Column of the Fourier matrix, up to the fixed global phase.
        cplx ratio{};
        for (int i = 0; i < ps.dim(); ++i) {
            const cplx expect = fr.at(i, ps.index_of(gamma));
            if (std::abs(expect) > 1e-9 && ratio == cplx{})
                ratio = inf.vectors[k][size_t(i)] / expect;
            CHECK(std::abs(inf.vectors[k][size_t(i)] - ratio * expect) < 1e-12);
        }
        CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-12);
    }
}

TEST_CASE("eigensystem satisfies the eigenvalue relation") {
    for (int n : {1, 2, 3}) {
        Gf2Field f = Gf2Field::with_default_modulus(n);
        PhaseSpace ps(f);
        for (Slope s : ps.all_slopes()) {
            const EigenSystem sys = ps.eigensystem(s);
            const auto labels = ps.ray_labels(s);
            for (size_t k = 0; k < sys.vectors.size(); ++k)
                for (size_t g = 0; g < labels.size(); ++g) {
                    const CMat d = ps.displacement_dense(labels[g].alpha, labels[g].beta);
                    const auto dv = apply(d, sys.vectors[k]);
                    for (size_t i = 0; i < dv.size(); ++i)
                        CHECK(std::abs(dv[i] - double(sys.signs[k][g]) * sys.vectors[k][i]) <
                              1e-12);
                }
        }
    }
}

TEST_CASE("mutually unbiased bases: the overlap law at N = 2 and 3") {
    for (int n : {2, 3}) {
        Gf2Field f = Gf2Field::with_default_modulus(n);
        PhaseSpace ps(f);
        std::vector<EigenSystem> systems;
        for (Slope s : ps.all_slopes()) systems.push_back(ps.eigensystem(s));
        const double unbiased = 1.0 / double(ps.dim());
        for (size_t s1 = 0; s1 < systems.size(); ++s1)
            for (size_t s2 = 0; s2 < systems.size(); ++s2)
                for (size_t v1 = 0; v1 < systems[s1].vectors.size(); ++v1)
                    for (size_t v2 = 0; v2 < systems[s2].vectors.size(); ++v2) {
                        const double overlap =
                            std::norm(inner(systems[s1].vectors[v1], systems[s2].vectors[v2]));
                        const double expect =
                            s1 == s2 ? (v1 == v2 ? 1.0 : 0.0) : unbiased;
                        CHECK(std::abs(overlap - expect) < 1e-12);
                    }
    }
}

TEST_CASE("dense caps reject oversized requests") {
    Gf2Field f = Gf2Field::with_default_modulus(11);
    PhaseSpace ps(f);
    CHECK_THROWS_WITH_AS(ps.displacement_dense(f.zero(), f.zero()),
                         doctest::Contains("dense oracle limit"), std::invalid_argument);
}
