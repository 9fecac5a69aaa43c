// ============================================================================
// Exact integer linear algebra: HNF / SNF / kernels / lattice calculus.
// ============================================================================

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "df/lattice.hpp"

#include <random>

using namespace df;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, int lo, int hi) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> ent(lo, hi);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = ent(rng);
    return m;
}

bool is_column_hnf(const IntMatrix& h) {
    // pivot rows strictly increasing, pivots positive, left-of-pivot entries
    // reduced into [0, pivot), zero columns trailing
    std::size_t last_pivot_row = 0;
    bool seen_zero = false, first = true;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        std::size_t pr = 0;
        while (pr < h.rows() && h.at(pr, j) == 0) ++pr;
        if (pr == h.rows()) { seen_zero = true; continue; }
        if (seen_zero) return false;
        if (!first && pr <= last_pivot_row) return false;
        if (h.at(pr, j) <= 0) return false;
        for (std::size_t l = 0; l < j; ++l)
            if (h.at(pr, l) < 0 || h.at(pr, l) >= h.at(pr, j)) return false;
        last_pivot_row = pr;
        first = false;
    }
    return true;
}

bool is_diagonal_chain(const IntMatrix& d) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d.at(i, j) != 0) return false;
    Int prev = -1;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
        const Int& x = d.at(i, i);
        if (x < 0) return false;
        if (prev >= 0) {
            if (prev == 0 && x != 0) return false;
            if (prev != 0 && x % prev != 0) return false;
        }
        prev = x;
    }
    return true;
}

Lattice random_lattice(std::mt19937& rng, std::size_t n, std::size_t k, int lo, int hi) {
    std::uniform_int_distribution<int> ent(lo, hi);
    IntMatrix g(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) g.at(i, j) = ent(rng);
    return Lattice(n, g);
}

}  // namespace

TEST_CASE("hermite normal form: pinned cases") {
    auto idr = hermite_normal_form(IntMatrix::identity(2));
    CHECK(idr.h == IntMatrix::identity(2));
    CHECK(idr.u == IntMatrix::identity(2));

    auto zr = hermite_normal_form(IntMatrix(3, 2));
    CHECK(zr.h == IntMatrix(3, 2));
    CHECK(abs(zr.u.det()) == 1);

    IntMatrix m{{2, 4}, {0, 3}};
    auto r = hermite_normal_form(m);
    CHECK(abs(r.h.det()) == 6);
    CHECK(m * r.u == r.h);
    CHECK(abs(r.u.det()) == 1);
    CHECK(is_column_hnf(r.h));
}

TEST_CASE("smith normal form: pinned cases") {
    IntMatrix d23{{2, 0}, {0, 3}};
    auto r = smith_normal_form(d23);
    CHECK(r.d == IntMatrix{{1, 0}, {0, 6}});
    CHECK(r.u * d23 * r.v == r.d);

    auto ri = smith_normal_form(IntMatrix::identity(3));
    CHECK(ri.d == IntMatrix::identity(3));

    IntMatrix d22{{2, 0}, {0, 2}};
    CHECK(smith_normal_form(d22).d == d22);
}

TEST_CASE("kernel basis is exact and saturated") {
    // x + y = 0 in Z^2
    IntMatrix m{{1, 1}};
    IntMatrix k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    CHECK(abs(k.at(0, 0)) == 1);

    // 2x + 4y = 0: kernel generated by (2,-1), primitive
    IntMatrix m2{{2, 4}};
    IntMatrix k2 = kernel_basis(m2);
    REQUIRE(k2.cols() == 1);
    CHECK((m2 * k2).is_zero());
    Lattice kl(2, k2);
    CHECK(saturation(kl) == kl);

    // empty matrix edge: kernel of 0 x n is everything
    IntMatrix k3 = kernel_basis(IntMatrix(0, 3));
    CHECK(Lattice(3, k3) == Lattice::full(3));
}

TEST_CASE("lattice sum and intersection: pinned cases") {
    auto e0 = Lattice::span(2, {{1, 0}});
    auto e1 = Lattice::span(2, {{0, 1}});
    CHECK(lattice_sum(e0, e1) == Lattice::full(2));
    CHECK(lattice_intersection(e0, e1).is_zero());

    auto a = Lattice::span(2, {{2, -2}});
    auto b = Lattice::span(2, {{1, -1}});
    auto s = lattice_sum(a, b);
    CHECK(s == b);
    CHECK(s.rank() == 1);
}

TEST_CASE("saturation: pinned cases") {
    CHECK(saturation(Lattice::span(2, {{2, 0}})) == Lattice::span(2, {{1, 0}}));
    auto prim = Lattice::span(3, {{1, 0, 2}, {0, 1, -1}});
    CHECK(saturation(prim) == prim);
    CHECK(saturation(Lattice::span(2, {{2, 0}, {0, 1}})) == Lattice::full(2));
}

TEST_CASE("membership and solving") {
    auto l = Lattice::span(3, {{2, 0, 0}, {1, 3, 0}});
    CHECK(l.contains({Int(2), Int(0), Int(0)}));
    CHECK(l.contains({Int(3), Int(3), Int(0)}));
    CHECK_FALSE(l.contains({Int(1), Int(0), Int(0)}));
    CHECK_FALSE(l.contains({Int(0), Int(0), Int(1)}));
    auto c = l.solve({Int(4), Int(6), Int(0)});
    REQUIRE(c.has_value());
    std::vector<Int> got(3, Int(0));
    for (std::size_t j = 0; j < l.rank(); ++j)
        for (std::size_t i = 0; i < 3; ++i) got[i] += (*c)[j] * l.generators().at(i, j);
    CHECK(got == std::vector<Int>{Int(4), Int(6), Int(0)});
    CHECK_FALSE(l.solve({Int(1), Int(1), Int(0)}).has_value());
}

TEST_CASE("property: HNF/SNF transformations are unimodular and exact") {
    std::mt19937 rng(20260823);
    for (int it = 0; it < 1200; ++it) {
        IntMatrix m = random_matrix(rng, 4, -5, 5);
        auto hr = hermite_normal_form(m);
        CHECK(abs(hr.u.det()) == 1);
        CHECK(m * hr.u == hr.h);
        CHECK(is_column_hnf(hr.h));
        auto sr = smith_normal_form(m);
        CHECK(abs(sr.u.det()) == 1);
        CHECK(abs(sr.v.det()) == 1);
        CHECK(sr.u * m * sr.v == sr.d);
        CHECK(is_diagonal_chain(sr.d));
        // kernel columns really annihilate
        IntMatrix k = kernel_basis(m);
        CHECK((m * k).is_zero());
        CHECK(k.cols() == m.cols() - m.rank_q());
    }
}

TEST_CASE("property: canonical form is generator-independent") {
    std::mt19937 rng(7151);
    for (int it = 0; it < 400; ++it) {
        std::uniform_int_distribution<std::size_t> nd(1, 4), kd(1, 4);
        std::size_t n = nd(rng), k = kd(rng);
        Lattice l = random_lattice(rng, n, k, -5, 5);
        // re-present by shuffled / augmented generators: same lattice
        IntMatrix g = l.generators();
        IntMatrix g2 = g.hstack(g);  // duplicates
        CHECK(Lattice(n, g2) == l);
        if (g.cols() >= 2) {
            IntMatrix g3 = g;
            for (std::size_t i = 0; i < n; ++i) g3.at(i, 0) += 3 * g3.at(i, 1);
            CHECK(Lattice(n, g3) == l);
        }
    }
}

TEST_CASE("property: saturation is a closure operator") {
    std::mt19937 rng(424242);
    for (int it = 0; it < 400; ++it) {
        std::uniform_int_distribution<std::size_t> nd(1, 4), kd(0, 4);
        std::size_t n = nd(rng);
        Lattice l = random_lattice(rng, n, kd(rng), -5, 5);
        Lattice s = saturation(l);
        CHECK(s.contains(l));                  // extensive
        CHECK(saturation(s) == s);             // idempotent
        CHECK(s.rank() == l.rank());           // rank preserved
        Lattice bigger = lattice_sum(l, random_lattice(rng, n, 1, -5, 5));
        CHECK(saturation(bigger).contains(s)); // monotone
    }
}

TEST_CASE("property: rank is modular over sum and intersection") {
    std::mt19937 rng(99173);
    for (int it = 0; it < 400; ++it) {
        std::uniform_int_distribution<std::size_t> nd(1, 4), kd(0, 3);
        std::size_t n = nd(rng);
        Lattice a = random_lattice(rng, n, kd(rng), -5, 5);
        Lattice b = random_lattice(rng, n, kd(rng), -5, 5);
        Lattice s = lattice_sum(a, b);
        Lattice i = lattice_intersection(a, b);
        CHECK(s.rank() + i.rank() == a.rank() + b.rank());
        CHECK(s == lattice_sum(b, a));
        CHECK(i == lattice_intersection(b, a));
        CHECK(a.contains(i));
        CHECK(b.contains(i));
        CHECK(s.contains(a));
        CHECK(s.contains(b));
        // intersection members lie in both; spot check each generator
        for (std::size_t j = 0; j < i.rank(); ++j) {
            auto v = as_vector(i.generators().col(j));
            CHECK(a.contains(v));
            CHECK(b.contains(v));
        }
    }
}
