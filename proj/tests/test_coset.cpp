#include <doctest.h>

#include <set>
#include <stdexcept>

#include "qps/coset.hpp"

using namespace qps;

namespace {

std::set<int> exponent_set(const Gf2Field& f, const std::vector<GfElem>& elems) {
    std::set<int> out;
    for (GfElem e : elems) out.insert(e.bits == 0 ? -1 : f.log(e));
    return out;
}

void check_invariants(const CosetPartition& pt) {
    const Gf2Field& f = pt.field;
    CHECK(pt.coset_size() == 1 << (pt.m * (pt.n - 1)));
    CHECK(pt.coset_count() == 1 << pt.m);
    // Disjoint cover of the whole field.
    std::set<uint32_t> seen;
    for (const auto& coset : pt.cosets) {
        CHECK(int(coset.size()) == pt.coset_size());
        for (GfElem e : coset) CHECK(seen.insert(e.bits).second);
    }
    CHECK(seen.size() == f.order());
    // C_0 is additively closed.
    std::set<uint32_t> c0;
    for (GfElem e : pt.initial_coset) c0.insert(e.bits);
    for (GfElem a : pt.initial_coset)
        for (GfElem b : pt.initial_coset) CHECK(c0.count(f.add(a, b).bits) == 1);
    CHECK(pt.representatives[0] == f.zero());
}

}  // namespace

TEST_CASE("GF(4), general basis {1, s}: C0 = {0, s}, C1 = {1, s2}") {
    Gf2Field f(2, 0b111);
    CosetPartition pt = coset_decompose_general(f, 1, {f.one(), f.sigma()});
    check_invariants(pt);
    CHECK(exponent_set(f, pt.cosets[0]) == std::set<int>{-1, 1});
    CHECK(exponent_set(f, pt.cosets[1]) == std::set<int>{0, 2});
    CHECK(pt.representatives[1] == f.one());
}

TEST_CASE("GF(4), subfield partition: C0 = {0, 1}, C_s = {s, s2}") {
    Gf2Field f(2, 0b111);
    CosetPartition pt = coset_decompose_subfield(f, 1);
    check_invariants(pt);
    CHECK(exponent_set(f, pt.cosets[0]) == std::set<int>{-1, 0});
    CHECK(exponent_set(f, pt.cosets[1]) == std::set<int>{1, 2});
    CHECK(pt.representatives[1] == f.sigma());
}

TEST_CASE("GF(8), polynomial basis: cosets and their traces") {
    Gf2Field f(3, 0b1011);
    CosetPartition pt = coset_decompose_general(f, 1, {f.one(), f.sigma(), f.sigma_pow(2)});
    check_invariants(pt);
    CHECK(exponent_set(f, pt.cosets[0]) == std::set<int>{-1, 1, 2, 4});
    CHECK(exponent_set(f, pt.cosets[1]) == std::set<int>{0, 3, 5, 6});
    for (GfElem e : pt.cosets[0]) CHECK(f.trace(e) == 0);
    for (GfElem e : pt.cosets[1]) CHECK(f.trace(e) == 1);
}

TEST_CASE("GF(8), basis {s, s4, s5}: C0 = {0, 1, s4, s5}") {
    Gf2Field f(3, 0b1011);
    CosetPartition pt =
        coset_decompose_general(f, 1, {f.sigma(), f.sigma_pow(4), f.sigma_pow(5)});
    check_invariants(pt);
    CHECK(exponent_set(f, pt.cosets[0]) == std::set<int>{-1, 0, 4, 5});
    CHECK(exponent_set(f, pt.cosets[1]) == std::set<int>{1, 2, 3, 6});
    CHECK(pt.representatives[1] == f.sigma());
}

TEST_CASE("GF(16), general basis {1, s} over GF(4): the four cosets") {
    Gf2Field f(4, 0b10011);
    CosetPartition pt = coset_decompose_general(f, 2, {f.one(), f.sigma()});
    check_invariants(pt);
    CHECK(exponent_set(f, pt.subfield) == std::set<int>{-1, 5, 10, 0});
    CHECK(exponent_set(f, pt.cosets[0]) == std::set<int>{-1, 1, 6, 11});
    CHECK(exponent_set(f, pt.cosets[1]) == std::set<int>{5, 2, 9, 3});
    CHECK(exponent_set(f, pt.cosets[2]) == std::set<int>{10, 8, 7, 14});
    CHECK(exponent_set(f, pt.cosets[3]) == std::set<int>{0, 4, 13, 12});
    // Representative order follows the embedded subfield in power order.
    CHECK(pt.representatives[1] == f.sigma_pow(5));
    CHECK(pt.representatives[2] == f.sigma_pow(10));
    CHECK(pt.representatives[3] == f.one());
}

TEST_CASE("GF(16), subfield partition: cosets and representatives") {
    Gf2Field f(4, 0b10011);
    CosetPartition pt = coset_decompose_subfield(f, 2);
    check_invariants(pt);
    CHECK(exponent_set(f, pt.cosets[0]) == std::set<int>{-1, 0, 5, 10});
    CHECK(exponent_set(f, pt.cosets[1]) == std::set<int>{1, 4, 2, 8});
    CHECK(exponent_set(f, pt.cosets[2]) == std::set<int>{6, 13, 9, 7});
    CHECK(exponent_set(f, pt.cosets[3]) == std::set<int>{11, 12, 3, 14});
    CHECK(pt.representatives[1] == f.sigma());
    CHECK(pt.representatives[2] == f.sigma_pow(6));
    CHECK(pt.representatives[3] == f.sigma_pow(11));
    // The coset listings follow offset + C_0 order exactly.
    CHECK(pt.cosets[1][0] == f.sigma());
    CHECK(pt.cosets[1][1] == f.sigma_pow(4));
    CHECK(pt.cosets[1][2] == f.sigma_pow(2));
    CHECK(pt.cosets[1][3] == f.sigma_pow(8));
}

TEST_CASE("invariants hold for larger splits") {
    Gf2Field f6 = Gf2Field::with_default_modulus(6);
    for (int m : {1, 2, 3}) {
        std::vector<GfElem> basis;
        for (int i = 0; i < 6 / m; ++i) basis.push_back(f6.sigma_pow(i));
        check_invariants(coset_decompose_general(f6, m, basis));
    }
    check_invariants(coset_decompose_subfield(f6, 3));
    check_invariants(coset_decompose_subfield(Gf2Field::with_default_modulus(8), 4));
}

TEST_CASE("coset_index_of locates every element") {
    Gf2Field f(4, 0b10011);
    CosetPartition pt = coset_decompose_subfield(f, 2);
    for (int i = 0; i < pt.coset_count(); ++i)
        for (GfElem e : pt.cosets[size_t(i)]) CHECK(pt.coset_index_of(e) == i);
}

TEST_CASE("degenerate and invalid partitions") {
    Gf2Field f(2, 0b111);
    CHECK_THROWS_WITH_AS(coset_decompose_general(f, 1, {f.one(), f.one()}),
                         doctest::Contains("not a relative basis"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(coset_decompose_general(f, 1, {f.one()}),
                         doctest::Contains("not a relative basis"), std::invalid_argument);
    Gf2Field f3(3, 0b1011);
    CHECK_THROWS_WITH_AS(coset_decompose_subfield(f3, 1),
                         doctest::Contains("not a quadratic extension"), std::invalid_argument);
    CHECK_THROWS_AS(coset_decompose_general(f3, 2, {f3.one()}), std::invalid_argument);
    // n = 1 is allowed and gives singleton cosets.
    CosetPartition trivial = coset_decompose_general(f, 2, {f.one()});
    CHECK(trivial.coset_size() == 1);
    CHECK(trivial.coset_count() == 4);
}
