#include <hlb/ffield.hpp>
#include <hlb/measures.hpp>

#include <doctest.h>

using namespace hlb;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}

TEST_CASE("omega point validation") {
    Rational t(1, 3);
    CHECK_NOTHROW(OmegaPoint({Rational(1, 2)}, {Rational(1, 8)}, t));
    CHECK_THROWS(OmegaPoint({Rational(1, 2), Rational(2, 3)}, {}, t)); // not nonincreasing
    CHECK_THROWS(OmegaPoint({Rational(2)}, {}, t));                    // mass > 1
    CHECK_THROWS(OmegaPoint({}, {Rational(1)}, t));                    // beta/(1-t) > 1
    CHECK_THROWS(OmegaPoint({Rational(-1, 2)}, {}, t));
    CHECK_THROWS(OmegaPoint({}, {}, Rational(2)));
    CHECK(OmegaPoint::plancherel(t).gamma_tilde() == 1);
    CHECK(OmegaPoint({Rational(1, 2)}, {Rational(1, 3)}, t).gamma_tilde() == Rational(0));
    CHECK(OmegaPoint::haar(t).gamma_tilde() == 0);
    CHECK(OmegaPoint::haar(t).p_value(2) == rat_pow(1 - t, 2) / (1 - t * t));
}

TEST_CASE("gl harmonic values") {
    Rational t(1, 3);
    auto haar = OmegaPoint::haar(t);
    CHECK(gl_harmonic(P({}), haar) == 1);
    for (int n = 0; n <= 5; ++n)
        for (const auto& lam : enumerate_partitions(n))
            CHECK(gl_harmonic(lam, haar) == rat_pow(t, lam.n_stat()));
    CHECK(gl_harmonic(P({2}), OmegaPoint::plancherel(t)) == Rational(1, 2));

    // the Dirac point at the zero matrix: beta = (1 - t)
    OmegaPoint dirac({}, {1 - t}, t);
    for (int n = 0; n <= 4; ++n)
        for (const auto& lam : enumerate_partitions(n))
            CHECK(gl_harmonic(lam, dirac) ==
                  Rational(lam == Partition(std::vector<int>(n, 1)) ? 1 : 0));
}

TEST_CASE("gl cylinder masses") {
    int q = 3;
    auto haar = OmegaPoint::haar(Rational(1, q));
    for (int n = 0; n <= 4; ++n)
        for (const auto& lam : enumerate_partitions(n))
            CHECK(gl_cylinder_mass(lam, haar, q) ==
                  rat_pow(Rational(q), -(long)n * (n - 1) / 2));
    CHECK(gl_cylinder_mass(P({}), haar, q) == 1);
    CHECK(gl_cylinder_mass(P({2}), OmegaPoint::plancherel(Rational(1, q)), q) == Rational(1, 6));
    CHECK_THROWS(gl_cylinder_mass(P({1}), haar, 5)); // t mismatch
}

TEST_CASE("consistency of cylinder masses across one level") {
    int q = 3;
    std::vector<OmegaPoint> omegas = {OmegaPoint::haar(Rational(1, q)),
                                      OmegaPoint::plancherel(Rational(1, q)),
                                      OmegaPoint({Rational(1, 2)}, {Rational(1, 8)},
                                                 Rational(1, q))};
    for (const auto& w : omegas)
        for (int n = 0; n <= 4; ++n)
            for (const auto& mu : enumerate_partitions(n)) {
                Rational total(0);
                for (const auto& lam : enumerate_partitions(n + 1))
                    total += Rational(L_formula(mu, lam, q)) * gl_cylinder_mass(lam, w, q);
                CHECK(total == gl_cylinder_mass(mu, w, q));
            }
}

TEST_CASE("gl level masses") {
    int q = 3;
    auto haar = OmegaPoint::haar(Rational(1, q));
    CHECK(gl_level_mass(0, haar, q) == 1);
    // Haar level mass is q^{n(n-1)/2}: the flat cylinder mass times the census total
    for (int n = 0; n <= 4; ++n)
        CHECK(gl_level_mass(n, haar, q) == rat_pow(Rational(q), (long)n * (n - 1) / 2));
    // strictly increasing from level 1 on
    for (int n = 1; n < 4; ++n)
        CHECK(gl_level_mass(n + 1, haar, q) > gl_level_mass(n, haar, q));

    // cross-route: series route vs census route
    std::vector<OmegaPoint> omegas = {haar, OmegaPoint::plancherel(Rational(1, q)),
                                      OmegaPoint({Rational(1, 2)}, {Rational(1, 8)},
                                                 Rational(1, q))};
    for (const auto& w : omegas)
        for (int n = 0; n <= 3; ++n) {
            Rational total(0);
            for (const auto& lam : enumerate_partitions(n))
                total += Rational(class_size(lam, q)) * gl_cylinder_mass(lam, w, q);
            CHECK(gl_level_mass(n, w, q) == total);
        }
}

TEST_CASE("unitary harmonic values") {
    Rational t(-1, 3);
    auto fe = plancherel_functional(HLFunctional::Even, t);
    CHECK(unitary_harmonic(P({}), fe, t) == 1);
    CHECK(unitary_harmonic(P({2}), fe, t) == Rational(1, 2));
    CHECK_THROWS(unitary_harmonic(P({1}), fe, t)); // parity mismatch
    auto fo = plancherel_functional(HLFunctional::Odd, t);
    CHECK(unitary_harmonic(P({1}), fo, t) == 1);

    auto finf = principal_functional(0, t);
    CHECK(unitary_harmonic(P({}), finf, t) == 1);
    CHECK(unitary_harmonic(P({1}), finf, t) == 1);
    CHECK(unitary_harmonic(P({1, 1}), finf, t) == Rational(1, 3)); // |t|
    for (int n = 0; n <= 4; ++n)
        for (const auto& lam : enumerate_partitions(n))
            CHECK(unitary_harmonic(lam, finf, t) == rat_pow(-t, lam.n_stat()));

    auto f2 = principal_functional(2, t);
    CHECK(unitary_harmonic(P({1, 1, 1}), f2, t) == 0); // three rows exceed rank 2
}

TEST_CASE("unitary cylinder masses") {
    int q = 3;
    Rational t(-1, q);
    auto finf = principal_functional(0, t);
    for (int n = 0; n <= 4; ++n)
        for (const auto& lam : enumerate_partitions(n))
            CHECK(unitary_cylinder_mass(lam, finf, q) ==
                  rat_pow(Rational(q), -(long)n * (n - 1) / 2));
    auto fe = plancherel_functional(HLFunctional::Even, t);
    CHECK(unitary_cylinder_mass(P({2}), fe, q) == Rational(1, 6));

    // one-level consistency with the two-box counts
    auto fo = plancherel_functional(HLFunctional::Odd, t);
    for (const HLFunctional* f : {&fe, &fo, &finf}) {
        int start = f == &fo ? 1 : 0;
        for (int n = start; n <= 4; n += 2)
            for (const auto& mu : enumerate_partitions(n)) {
                Rational total(0);
                for (const auto& lam : enumerate_partitions(n + 2))
                    total += Rational(Ltilde_formula(mu, lam, q)) *
                             unitary_cylinder_mass(lam, *f, q);
                CHECK(total == unitary_cylinder_mass(mu, *f, q));
            }
    }
}

TEST_CASE("markov growth determinism and distribution") {
    Rational t(1, 3);
    auto g = BranchingGraph::build(GraphKind::HL, 3, t);
    auto haar = OmegaPoint::haar(t);
    VertexFunction phi = [haar](const Partition& lam) { return gl_harmonic(lam, haar); };

    auto p1 = markov_growth(g, phi, 3, 42);
    auto p2 = markov_growth(g, phi, 3, 42);
    CHECK(p1 == p2);
    CHECK(p1.size() == 4);
    CHECK(p1[0] == P({}));
    CHECK(p1[1] == P({1}));
    CHECK_THROWS(markov_growth(g, phi, 5, 0)); // beyond graph depth

    std::vector<std::vector<Partition>> paths;
    for (uint64_t s = 0; s < 3000; ++s) paths.push_back(markov_growth(g, phi, 2, s));
    auto rep = empirical_check(paths, g, phi, P({1}));
    CHECK(rep.visits == 3000);
    REQUIRE(rep.edges.size() == 2);
    CHECK(rep.edges[0].prob == Rational(2, 3)); // psi * phi ratio for (1) -> (2)
    CHECK(rep.edges[1].prob == Rational(1, 3));
    CHECK(rep.all_within());

    auto empty = empirical_check({}, g, phi, P({1}));
    CHECK(empty.visits == 0);

    // single-edge vertex: frequency exactly 1
    auto rep0 = empirical_check(paths, g, phi, P({}));
    REQUIRE(rep0.edges.size() == 1);
    CHECK(rep0.edges[0].count == rep0.visits);
    CHECK(rep0.all_within());
}

TEST_CASE("non-harmonic input is rejected") {
    Rational t(1, 3);
    auto g = BranchingGraph::build(GraphKind::HL, 2, t);
    CHECK_THROWS(markov_growth(g, [](const Partition&) { return Rational(1); }, 2, 0));
    CHECK_THROWS(markov_growth(g, [](const Partition&) { return Rational(0); }, 2, 0));
}
