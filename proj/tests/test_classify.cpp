#include <catch2/catch_amalgamated.hpp>

#include "radford/classify.hpp"

using namespace radford;

TEST_CASE("dynkin diagrams for n = 2") {
    {
        const Dynkin2 D = dynkin(2, 3, 1);
        CHECK(D.edge_exp == 1);   // xi^{-1-6} = xi^{-7} = xi mod 4
        CHECK(D.q22_exp == 3);
        CHECK(D.q11 == Cyc::integer(-1));
        CHECK(D.connected);
    }
    {
        const Dynkin2 D = dynkin(2, 1, 2);
        CHECK(D.edge.is_one());
        CHECK(!D.connected);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(dynkin(2, i, j).q11 == Cyc::integer(-1));
}

TEST_CASE("rank-one reduction") {
    CHECK(rank1_finite(2, 1, 2) == std::optional<bool>(true));
    CHECK(rank1_finite(2, 0, 0) == std::optional<bool>(false));
    CHECK(rank1_finite(2, 2, 2) == std::optional<bool>(false));
    CHECK(!rank1_finite(2, 3, 1).has_value());  // connected diagram

    // general-n branch at (3,2): V_{1,4} has a disconnected diagram and
    // 3 does not divide i j/m = 2, so B is finite (= k[v]/(v^3))
    CHECK(rank1_finite_general(3, 2, 1, 4) == std::optional<bool>(true));
    CHECK(rank1_finite_general(3, 2, 0, 0) == std::optional<bool>(false));
    {
        const Transport tr(3, 2);
        const GradedDims g = graded_dims_derivation(braiding_of(tr.transport(build_simple(3, 2, 1, 4))), 6);
        CHECK(g.truncated);
        CHECK(g.total() == 3);
    }
}

TEST_CASE("table matching") {
    {
        const auto match = heck_match(2, 3, 1);
        REQUIRE(match.has_value());
        CHECK(match->row.row_id == 1);
        CHECK(match->row.kl == std::vector<std::pair<int, int>>{{2, 1}});
        CHECK(match->m1 == 2);
        CHECK(match->m2 == 1);
        CHECK(match->a == 1);
        CHECK(match->b == 1);
    }
    {
        const auto match = heck_match(3, 2, 2);
        REQUIRE(match.has_value());
        CHECK(match->row.kl == std::vector<std::pair<int, int>>{{4, 1}, {4, 2}});
        CHECK(match->m1 == 3);
        CHECK(match->a == 1);
    }
    CHECK(!heck_match(2, 1, 1).has_value());
}

TEST_CASE("dual symmetry of the table") {
    for (int m : {2, 3, 4, 6}) {
        CAPTURE(m);
        CHECK(dual_symmetry_holds(m));
    }
    // orders that reach the table rows with m1 in {5, 9, 10, 12, 15}
    for (int m : {5, 9, 10, 12, 15}) {
        CAPTURE(m);
        CHECK(dual_symmetry_holds(m));
    }
}

TEST_CASE("presentations instantiate at the examples") {
    {
        // (2,2,1): mixed-commutation family with v0 v1 - xi v1 v0 = 0
        const auto spec = presentation_for(2, 2, 1);
        REQUIRE(spec.has_value());
        CHECK(spec->expected_dim == 8);
        CHECK(spec->pbw_bounds == std::vector<long long>{2, 4});
        // the mixed relation has coefficient xi^{-1} = -xi on v1 v0
        const Params P(2, 2);
        bool found = false;
        for (const auto& [deg, elem] : spec->relations)
            for (const auto& [w, c] : elem)
                if (deg == 2 && w == 2) {
                    found = true;
                    CHECK(c == P.xi(-1));
                    CHECK(c == -P.xi(1));
                }
        CHECK(found);
    }
    {
        const auto spec = presentation_for(3, 2, 2);
        REQUIRE(spec.has_value());
        CHECK(spec->expected_dim == 36);
        CHECK(spec->hilbert_factors ==
              std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {6, 1}});
    }
    {
        const auto spec = presentation_for(3, 2, 1);
        REQUIRE(spec.has_value());
        CHECK(spec->expected_dim == 18);
        CHECK(spec->expected_hilbert().coeffs ==
              std::vector<long long>{1, 2, 4, 4, 4, 2, 1});
    }
    CHECK(!presentation_for(2, 1, 1).has_value());

    // a pair matching a later table row has no presented Nichols algebra
    {
        const auto match = heck_match(6, 9, 1);
        REQUIRE(match.has_value());
        CHECK(match->row.row_id == 6);
        CHECK(!presentation_for(6, 9, 1).has_value());
    }
}

TEST_CASE("verify presented Nichols algebras at m = 2 and 3") {
    {
        const Transport tr(2, 2);
        for (auto [i, j] : std::vector<std::pair<int, int>>{{3, 1}, {3, 3}, {2, 1}, {2, 3}}) {
            CAPTURE(i, j);
            const auto spec = presentation_for(2, i, j);
            REQUIRE(spec.has_value());
            const BraidedSpace B = braiding_of(tr.F1(build_simple(2, 2, i, j)));
            const PresentationReport rep = verify_presentation(*spec, B);
            for (const auto& e : rep.report.entries) INFO(e);
            CHECK(rep.report.ok);
            CHECK(rep.braiding_matched);
        }
    }
    {
        const Transport tr(2, 3);
        // one witness from each presented family at m = 3
        for (auto [i, j] : std::vector<std::pair<int, int>>{{4, 2}, {3, 1}, {2, 2}, {5, 1}, {2, 1}}) {
            CAPTURE(i, j);
            const auto spec = presentation_for(3, i, j);
            REQUIRE(spec.has_value());
            const BraidedSpace B = braiding_of(tr.F1(build_simple(2, 3, i, j)));
            const PresentationReport rep = verify_presentation(*spec, B);
            for (const auto& e : rep.report.entries) INFO(e);
            CHECK(rep.report.ok);
            CHECK(rep.braiding_matched);
        }
    }
}

TEST_CASE("dimension-18 instance has the stated graded dimensions") {
    const Transport tr(2, 3);
    const BraidedSpace B = braiding_of(tr.F1(build_simple(2, 3, 2, 1)));
    const GradedDims g = graded_dims_derivation(B, 7);
    CHECK(g.truncated);
    CHECK(g.dims == std::vector<long long>{1, 2, 4, 4, 4, 2, 1, 0});
}

TEST_CASE("is_finite certificates and probes") {
    const Transport tr(2, 2);
    {
        const FiniteResult r = is_finite(tr, 3, 3);
        CHECK(r.finite);
        CHECK(r.certificate.find("row 1") != std::string::npos);
        CHECK(r.probe == 0);
    }
    {
        const FiniteResult r = is_finite(tr, 0, 1);
        CHECK(!r.finite);
        CHECK(r.probe == 1);
    }
    {
        const FiniteResult r = is_finite(tr, 1, 2);
        CHECK(r.finite);
        CHECK(r.dim_module == 1);
    }
    int finite_count = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) finite_count += is_finite(tr, i, j).finite ? 1 : 0;
    CHECK(finite_count == 6);

    {
        // connected diagram matching no row, probe sees no truncation
        const Transport tr23(2, 3);
        const FiniteResult r = is_finite(tr23, 0, 1);
        CHECK(!r.finite);
        CHECK(r.probe == 1);
    }
}

TEST_CASE("theorem reproduction at m = 2") {
    const TheoremReport rep = reproduce_thm22();
    INFO(rep.detail);
    CHECK(rep.ok);
    CHECK(rep.finite_pairs.size() == 6);
}
