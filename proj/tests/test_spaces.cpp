// ============================================================================
// Simplicial complexes and reduced homology, toric characteristic
// arrangements and their omega pipelines, Brieskorn / Seifert invariants.
// ============================================================================

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "df/spaces.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

using namespace df;

namespace {

std::mt19937 rng(20260823);

long long rnd(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

TorsionCharacter chr(const FgAbGroup& h, std::vector<long long> num, long long den) {
    std::vector<Rat> v;
    for (long long x : num) v.emplace_back(x, den);
    return TorsionCharacter(h, v);
}

Subgroup span_of(const FgAbGroup& h, const std::vector<std::vector<long long>>& vecs) {
    IntMatrix m(h.preimage_rank(), vecs.size());
    for (std::size_t j = 0; j < vecs.size(); ++j) {
        REQUIRE(vecs[j].size() == h.preimage_rank());
        for (std::size_t i = 0; i < vecs[j].size(); ++i) m.at(i, j) = vecs[j][i];
    }
    return Subgroup(h, m);
}

Homomorphism epi_of(const FgAbGroup& h, const FgAbGroup& a,
                    const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(a.preimage_rank(), h.preimage_rank());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    Homomorphism nu(h, a, m);
    REQUIRE(nu.is_epi());
    return nu;
}

Homomorphism random_epi(const FgAbGroup& h, const FgAbGroup& a) {
    for (int tries = 0; tries < 400; ++tries) {
        IntMatrix m(a.preimage_rank(), h.preimage_rank());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rnd(-2, 2);
        try {
            Homomorphism nu(h, a, m);
            if (nu.is_epi()) return nu;
        } catch (const input_error&) {
        }
    }
    REQUIRE(false);
    throw internal_error("unreachable");
}

SimplicialComplex random_complex(std::size_t n, bool all_vertices) {
    std::vector<std::vector<int>> facets;
    if (all_vertices)
        for (std::size_t v = 0; v < n; ++v) facets.push_back({static_cast<int>(v)});
    long long k = rnd(0, 4);
    for (long long t = 0; t < k; ++t) {
        std::vector<int> f;
        for (std::size_t v = 0; v < n; ++v)
            if (rnd(0, 1)) f.push_back(static_cast<int>(v));
        facets.push_back(f);
    }
    return SimplicialComplex(n, facets);
}

SimplicialComplex cone_over(const SimplicialComplex& k) {
    std::size_t n = k.vertex_count();
    std::vector<std::vector<int>> facets;
    for (std::uint32_t m : k.facet_masks()) {
        std::vector<int> f{static_cast<int>(n)};
        for (std::size_t v = 0; v < n; ++v)
            if (m >> v & 1u) f.push_back(static_cast<int>(v));
        facets.push_back(f);
    }
    if (facets.empty()) facets.push_back({static_cast<int>(n)});
    return SimplicialComplex(n + 1, facets);
}

std::set<Subgroup> component_subgroups(const Arrangement& w) {
    std::set<Subgroup> out;
    for (const auto& c : w.components) {
        CHECK(c.eta.is_trivial());
        out.insert(c.xi);
    }
    return out;
}

}  // namespace

TEST_CASE("simplicial complex structure") {
    SimplicialComplex l(3, {{0, 1}, {1}, {0, 1}});
    CHECK(l.vertex_count() == 3);
    CHECK(l.facet_masks() == std::vector<std::uint32_t>{0b011u});
    CHECK(l.has_face(0));
    CHECK(l.has_face(0b010u));
    CHECK(l.has_face(0b011u));
    CHECK_FALSE(l.has_face(0b100u));
    CHECK_FALSE(l.has_face(0b110u));
    CHECK(l.faces() == std::vector<std::uint32_t>{0u, 0b001u, 0b010u, 0b011u});

    SimplicialComplex tri(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri.faces().size() == 7);  // everything except the full triangle
    CHECK_FALSE(tri.has_face(0b111u));

    // induced subcomplexes and links of the path a-b-c
    SimplicialComplex path(3, {{0, 1}, {1, 2}});
    CHECK(path.induced(0b101u).facet_masks() == std::vector<std::uint32_t>{0b001u, 0b100u});
    CHECK(path.induced(0b011u).facet_masks() == std::vector<std::uint32_t>{0b011u});
    CHECK(path.link(0b010u).facet_masks() == std::vector<std::uint32_t>{0b001u, 0b100u});
    CHECK(path.link(0b001u).facet_masks() == std::vector<std::uint32_t>{0b010u});
    CHECK(path.link(0b101u).facet_masks().empty());  // not a face
    CHECK(path.link(0b101u).faces() == std::vector<std::uint32_t>{0u});
    CHECK(path.link(0u).facet_masks() == path.facet_masks());

    CHECK_THROWS_AS(SimplicialComplex(2, {{2}}), input_error);
    CHECK_THROWS_AS(SimplicialComplex(2, {{-1}}), input_error);
    CHECK_THROWS_AS(SimplicialComplex(33, {}), input_error);
}

TEST_CASE("reduced homology of small complexes") {
    SimplicialComplex empty(0, {});
    CHECK(reduced_homology_rank(empty, -1) == 1);
    CHECK(reduced_homology_rank(empty, 0) == 0);
    CHECK(reduced_homology_rank(empty, -2) == 0);

    // declared vertices that never appear as faces leave the complex empty
    SimplicialComplex ghost(2, {});
    CHECK(reduced_homology_rank(ghost, -1) == 1);

    SimplicialComplex point(1, {{0}});
    CHECK(reduced_homology_rank(point, -1) == 0);
    CHECK(reduced_homology_rank(point, 0) == 0);

    SimplicialComplex two_points(2, {{0}, {1}});
    CHECK(reduced_homology_rank(two_points, -1) == 0);
    CHECK(reduced_homology_rank(two_points, 0) == 1);
    CHECK(reduced_homology_rank(two_points, 1) == 0);

    SimplicialComplex edge(2, {{0, 1}});
    CHECK(reduced_homology_rank(edge, 0) == 0);
    CHECK(reduced_homology_rank(edge, 1) == 0);

    SimplicialComplex circle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(reduced_homology_rank(circle, 0) == 0);
    CHECK(reduced_homology_rank(circle, 1) == 1);
    CHECK(reduced_homology_rank(circle, 2) == 0);

    SimplicialComplex disk(3, {{0, 1, 2}});
    CHECK(reduced_homology_rank(disk, 0) == 0);
    CHECK(reduced_homology_rank(disk, 1) == 0);
    CHECK(reduced_homology_rank(disk, 2) == 0);

    SimplicialComplex sphere(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(reduced_homology_rank(sphere, 0) == 0);
    CHECK(reduced_homology_rank(sphere, 1) == 0);
    CHECK(reduced_homology_rank(sphere, 2) == 1);

    SimplicialComplex two_edges(4, {{0, 1}, {2, 3}});
    CHECK(reduced_homology_rank(two_edges, 0) == 1);
    CHECK(reduced_homology_rank(two_edges, 1) == 0);

    CHECK(reduced_homology_rank(sphere, 9) == 0);
}

TEST_CASE("homology properties on random complexes") {
    for (int trial = 0; trial < 40; ++trial) {
        SimplicialComplex k = random_complex(static_cast<std::size_t>(rnd(0, 6)), rnd(0, 1));

        // alternating face count equals alternating homology rank
        long long euler = 0;
        for (std::uint32_t f : k.faces())
            euler += std::popcount(f) % 2 == 0 ? -1 : 1;
        long long hsum = 0;
        for (long long j = -1; j <= static_cast<long long>(k.vertex_count()); ++j) {
            long long r = reduced_homology_rank(k, j);
            CHECK(r >= 0);
            hsum += j % 2 == 0 ? r : -r;
        }
        CHECK(euler == hsum);

        // cones are acyclic in every degree
        SimplicialComplex c = cone_over(k);
        for (long long j = -1; j <= static_cast<long long>(c.vertex_count()); ++j)
            CHECK(reduced_homology_rank(c, j) == 0);
    }
}

TEST_CASE("toric characteristic arrangements") {
    // two isolated vertices: the wedge of two circles, whole torus in degree 1;
    // proper subsets of the vertex set contribute redundant subtori
    SimplicialComplex two(2, {{0}, {1}});
    FgAbGroup h2 = FgAbGroup::free_group(2);
    Arrangement w2 = toric_char_variety(two, 1);
    CHECK(w2.points.empty());
    std::set<Subgroup> expect2{span_of(h2, {}), span_of(h2, {{1, 0}}), span_of(h2, {{0, 1}})};
    CHECK(component_subgroups(w2) == expect2);

    // a single edge: the 2-torus, nothing in degree 1 or 2
    SimplicialComplex edge(2, {{0, 1}});
    CHECK(toric_char_variety(edge, 1).components.empty());
    CHECK(toric_char_variety(edge, 2).components.empty());

    // path a-b-c: the subtorus {t_b = 1} and its redundant coordinate axes
    SimplicialComplex path(3, {{0, 1}, {1, 2}});
    FgAbGroup h3 = FgAbGroup::free_group(3);
    Arrangement wp = toric_char_variety(path, 1);
    Subgroup mid = span_of(h3, {{0, 1, 0}});
    std::set<Subgroup> expectp{mid, span_of(h3, {{0, 1, 0}, {0, 0, 1}}),
                               span_of(h3, {{1, 0, 0}, {0, 1, 0}})};
    CHECK(component_subgroups(wp) == expectp);
    for (const auto& c : wp.components) CHECK(subgroup_sum(mid, c.xi) == c.xi);

    // full simplices carry no jump loci in any degree
    SimplicialComplex simplex(4, {{0, 1, 2, 3}});
    for (long long i = 0; i <= 5; ++i)
        CHECK(toric_char_variety(simplex, i).components.empty());

    // monotone in the degree
    for (int trial = 0; trial < 10; ++trial) {
        SimplicialComplex k = random_complex(static_cast<std::size_t>(rnd(1, 4)), true);
        std::set<Subgroup> prev;
        for (long long i = 1; i <= 3; ++i) {
            std::set<Subgroup> cur = component_subgroups(toric_char_variety(k, i));
            CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
            prev = cur;
        }
    }

    CHECK(toric_char_variety(two, 0).components.empty());
    CHECK_THROWS_AS(toric_char_variety(two, -1), input_error);
    CHECK_THROWS_AS(toric_char_variety(SimplicialComplex(3, {{0, 1}}), 1), input_error);
    CHECK_THROWS_AS(toric_char_variety(random_complex(5, true), 1, 4), bound_error);
}

TEST_CASE("toric omega pipelines") {
    FgAbGroup z = FgAbGroup::free_group(1);
    FgAbGroup z2 = FgAbGroup::free_group(2);
    FgAbGroup z12(1, {2});

    // wedge of two circles: every free or mixed abelian cover has infinite
    // Betti numbers, so omega is empty whenever A has positive rank
    SimplicialComplex two(2, {{0}, {1}});
    Arrangement w2 = toric_char_variety(two, 1);
    ObstructionReport r2 = toric_omega(two, 1, z);
    for (long long x = -2; x <= 2; ++x)
        for (long long y = -2; y <= 2; ++y) {
            if (gcd(Int(x), Int(y)) != 1) continue;
            Homomorphism nu = epi_of(z2, z, {{x, y}});
            CHECK(r2.excluded(nu));
            CHECK_FALSE(omega_member(nu, w2));
        }
    ObstructionReport r2t = toric_omega(two, 1, z12);
    for (int t = 0; t < 10; ++t) CHECK(r2t.excluded(random_epi(z2, z12)));

    // a single edge: omega is everything, no obstruction constituents
    SimplicialComplex edge(2, {{0, 1}});
    ObstructionReport re = toric_omega(edge, 1, z);
    CHECK(re.constituents.empty());
    Arrangement we = toric_char_variety(edge, 1);
    for (int t = 0; t < 10; ++t) {
        Homomorphism nu = random_epi(z2, z);
        CHECK_FALSE(re.excluded(nu));
        CHECK(omega_member(nu, we));
    }

    // path a-b-c over A = Z: excluded exactly when nu kills the middle vertex
    SimplicialComplex path(3, {{0, 1}, {1, 2}});
    FgAbGroup h3 = FgAbGroup::free_group(3);
    Arrangement wp = toric_char_variety(path, 1);
    ObstructionReport rp = toric_omega(path, 1, z);
    CHECK(rp.mode == ReportMode::rank1_exact);
    REQUIRE(rp.constituents.size() == 1);
    CHECK(rp.constituents[0].xi == span_of(h3, {{0, 1, 0}}));
    CHECK(rp.constituents[0].kind == ConstituentKind::u_set);
    for (long long x = -2; x <= 2; ++x)
        for (long long y = -2; y <= 2; ++y)
            for (long long zc = -2; zc <= 2; ++zc) {
                if (gcd(gcd(Int(x), Int(y)), Int(zc)) != 1) continue;
                Homomorphism nu = epi_of(h3, z, {{x, y, zc}});
                CHECK(rp.excluded(nu) == (y == 0));
                CHECK(omega_member(nu, wp) == (y != 0));
            }

    // untranslated arrangements always pull back along finite quotients
    CHECK(pullback_diagnostics(wp, z).verdict == PullbackVerdict::guaranteed_pullback);
    CHECK(pullback_diagnostics(wp, FgAbGroup(1, {2})).verdict ==
          PullbackVerdict::guaranteed_pullback);
    CHECK(pullback_diagnostics(w2, FgAbGroup(1, {6})).verdict ==
          PullbackVerdict::guaranteed_pullback);
}

TEST_CASE("brieskorn invariants") {
    BrieskornInvariants b = brieskorn_invariants({2, 4, 8}, {4});
    CHECK(b.seifert.genus == 1);
    CHECK(b.seifert.euler == Rat(-1));
    CHECK(b.torsion_order == 4);
    CHECK(b.alpha == 2);
    REQUIRE(b.seifert.orbits.size() == 1);
    CHECK(b.seifert.orbits[0].alpha == 2);
    CHECK(b.seifert.orbits[0].beta == 0);
    CHECK(b.seifert.orbits[0].s == 2);
    CHECK(b.h.free_rank() == 2);
    CHECK(b.h.torsion_factors() == std::vector<Int>{4});

    // without supplied torsion the group defaults to its free part
    BrieskornInvariants bf = brieskorn_invariants({2, 4, 8});
    CHECK(bf.h.free_rank() == 2);
    CHECK(bf.h.torsion_count() == 0);

    BrieskornInvariants p = brieskorn_invariants({2, 3, 5});
    CHECK(p.seifert.genus == 0);
    CHECK(p.seifert.euler == Rat(-1, 30));
    CHECK(p.torsion_order == 1);
    CHECK(p.alpha == 1);
    REQUIRE(p.seifert.orbits.size() == 3);
    CHECK(p.seifert.orbits[0].alpha == 2);
    CHECK(p.seifert.orbits[1].alpha == 3);
    CHECK(p.seifert.orbits[2].alpha == 5);
    for (const auto& o : p.seifert.orbits) {
        CHECK(o.beta == 0);
        CHECK(o.s == 1);
    }

    BrieskornInvariants t = brieskorn_invariants({3, 3, 3}, {3});
    CHECK(t.seifert.genus == 1);
    CHECK(t.seifert.euler == Rat(-3));
    CHECK(t.torsion_order == 3);
    CHECK(t.alpha == 1);
    CHECK(t.seifert.orbits.empty());

    BrieskornInvariants q = brieskorn_invariants({4, 4, 4}, {4});
    CHECK(q.seifert.genus == 3);
    CHECK(q.seifert.euler == Rat(-4));
    CHECK(q.torsion_order == 4);
    CHECK(q.alpha == 1);
    CHECK(q.h.free_rank() == 6);

    CHECK_THROWS_AS(brieskorn_invariants({}), input_error);
    CHECK_THROWS_AS(brieskorn_invariants({2, 1, 3}), input_error);
    CHECK_THROWS_AS(brieskorn_invariants({0}), input_error);
    CHECK_THROWS_AS(brieskorn_invariants({2, 4, 8}, {2}), input_error);
    CHECK_THROWS_AS(brieskorn_invariants({2, 4, 8}, {1, 4}), input_error);
}

TEST_CASE("brieskorn invariant properties") {
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Int> a;
        long long n = rnd(1, 4);
        for (long long j = 0; j < n; ++j) a.push_back(rnd(2, 9));
        BrieskornInvariants b = brieskorn_invariants(a);

        CHECK(b.seifert.genus >= 0);
        CHECK(b.torsion_order >= 1);
        CHECK(b.alpha >= 1);
        CHECK(Int(b.h.free_rank()) == 2 * b.seifert.genus);

        // orbit data with multiplicity 1 is dropped; what remains still
        // reconstructs the torsion order together with the euler number
        Rat tors = -b.seifert.euler;
        for (const auto& o : b.seifert.orbits) {
            CHECK(o.alpha >= 2);
            CHECK(o.beta == 0);
            CHECK(o.s >= 1);
            for (Int k = 0; k < o.s; ++k) tors *= Rat(o.alpha);
        }
        CHECK(tors == Rat(b.torsion_order));
    }
}

TEST_CASE("brieskorn v1 arrangements") {
    BrieskornInvariants b = brieskorn_invariants({2, 4, 8}, {4});
    Arrangement w = brieskorn_v1(b);
    REQUIRE(w.points.size() == 1);
    CHECK(w.points[0].is_trivial());
    REQUIRE(w.components.size() == 1);
    Subgroup tors = span_of(b.h, {{0, 0, 1}});
    CHECK(w.components[0] == TranslatedSubgroup(tors, chr(b.h, {0, 0, 1}, 2)));

    // the default torsion element is the order-2 one; naming it explicitly,
    // or any representative of it, gives the same arrangement
    CHECK(brieskorn_v1(b, {{2}}).components == w.components);
    CHECK(brieskorn_v1(b, {{6}}).components == w.components);
    CHECK(brieskorn_v1(b, {{-2}}).components == w.components);
    Arrangement w1 = brieskorn_v1(b, {{1}});
    CHECK(w1.components[0] == TranslatedSubgroup(tors, chr(b.h, {0, 0, 1}, 4)));

    // genus one with a single fiber class: only the isolated identity
    BrieskornInvariants t = brieskorn_invariants({3, 3, 3}, {3});
    Arrangement wt = brieskorn_v1(t);
    CHECK(wt.components.empty());
    CHECK(wt.points.size() == 1);

    // higher genus keeps the untranslated subtorus
    BrieskornInvariants q = brieskorn_invariants({4, 4, 4}, {4});
    Arrangement wq = brieskorn_v1(q);
    REQUIRE(wq.components.size() == 1);
    CHECK(wq.components[0] == v_of(span_of(q.h, {{0, 0, 0, 0, 0, 0, 1}})));
    BrieskornInvariants q22 = brieskorn_invariants({4, 4, 4}, {2, 2});
    CHECK(brieskorn_v1(q22).components.size() == 1);

    CHECK_THROWS_AS(brieskorn_v1(brieskorn_invariants({2, 3, 5})), input_error);
    CHECK_THROWS_AS(brieskorn_v1(brieskorn_invariants({2, 4, 8})), input_error);
    CHECK_THROWS_AS(brieskorn_v1(b, {{0}}), input_error);
    CHECK_THROWS_AS(brieskorn_v1(b, {{4}}), input_error);
    CHECK_THROWS_AS(brieskorn_v1(b, {{1}, {2}}), input_error);
    CHECK_THROWS_AS(brieskorn_v1(b, {{1, 2}}), input_error);

    // several translated copies: distinct after reduction, in order
    SeifertData sd;
    sd.genus = 1;
    sd.euler = Rat(-1);
    BrieskornInvariants synth{sd, FgAbGroup(2, {4}), 4, 3};
    Arrangement ws = brieskorn_v1(synth, {{1}, {3}});
    CHECK(ws.components.size() == 2);
    CHECK_THROWS_AS(brieskorn_v1(synth, {{1}, {5}}), input_error);
    CHECK_THROWS_AS(brieskorn_v1(synth), input_error);

    // an odd torsion factor has no default order-2 element
    BrieskornInvariants odd{sd, FgAbGroup(2, {3}), 3, 2};
    CHECK_THROWS_AS(brieskorn_v1(odd), input_error);
    CHECK(brieskorn_v1(odd, {{1}}).components.size() == 1);
}

TEST_CASE("brieskorn omega") {
    // the (2,4,8) manifold: finite Betti numbers over the free abelianization,
    // infinite over the full one
    BrieskornInvariants b = brieskorn_invariants({2, 4, 8}, {4});
    Arrangement w = brieskorn_v1(b);
    FgAbGroup z2 = FgAbGroup::free_group(2);
    Homomorphism nu_bar = epi_of(b.h, z2, {{1, 0, 0}, {0, 1, 0}});
    CHECK(omega_member(nu_bar, w));
    FgAbGroup full(2, {4});
    Homomorphism ident = epi_of(b.h, full, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_FALSE(omega_member(ident, w));

    // over A = Z + Z4, membership is governed by where the torsion generator
    // goes: only the classes killing it survive
    FgAbGroup a14(1, {4});
    ObstructionReport rep = brieskorn_omega(b, a14);
    for (long long t = 0; t <= 3; ++t) {
        Homomorphism nu = epi_of(b.h, a14, {{1, 0, 0}, {0, 1, t}});
        CHECK(omega_member(nu, w) == (t == 0));
        CHECK(rep.excluded(nu) == (t != 0));
    }
    Homomorphism swap = epi_of(b.h, a14, {{1, 0, 0}, {0, 0, 1}});
    CHECK_FALSE(omega_member(swap, w));

    // killing only the order-2 element h1 = 2 e3 is not enough: this class
    // kills h1 but is still excluded
    Homomorphism half = epi_of(b.h, a14, {{1, 0, 0}, {0, 1, 2}});
    CHECK(half.apply({0, 0, 2}) == std::vector<Int>{0, 0});
    CHECK_FALSE(omega_member(half, w));

    // genus one, no translated copies: omega is everything
    BrieskornInvariants t333 = brieskorn_invariants({3, 3, 3}, {3});
    Arrangement wt = brieskorn_v1(t333);
    FgAbGroup z = FgAbGroup::free_group(1);
    for (int k = 0; k < 8; ++k) CHECK(omega_member(random_epi(t333.h, z), wt));
    CHECK(brieskorn_omega(t333, z).constituents.empty());

    // higher genus: every positive-rank quotient fails
    BrieskornInvariants q = brieskorn_invariants({4, 4, 4}, {4});
    Arrangement wq = brieskorn_v1(q);
    ObstructionReport rq = brieskorn_omega(q, z);
    for (int k = 0; k < 8; ++k) {
        Homomorphism nu = random_epi(q.h, z);
        CHECK_FALSE(omega_member(nu, wq));
        CHECK(rq.excluded(nu));
    }
    Homomorphism proj3 = epi_of(q.h, FgAbGroup::free_group(3),
                                {{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0}});
    CHECK_FALSE(omega_member(proj3, wq));
}
