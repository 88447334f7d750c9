#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibrack/fixtures.hpp"
#include "leibrack/rack.hpp"

#include <cmath>

using namespace leibrack;

namespace {

/// Independent rotation oracle: v cosθ + (k×v) sinθ + k (k·v)(1-cosθ).
DVec rodrigues(const DVec& axis, double theta, const DVec& v) {
    DVec k = axis;
    double norm = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
    for (double& x : k) x /= norm;
    DVec cross{k[1] * v[2] - k[2] * v[1], k[2] * v[0] - k[0] * v[2], k[0] * v[1] - k[1] * v[0]};
    double dot = k[0] * v[0] + k[1] * v[1] + k[2] * v[2];
    DVec r(3);
    for (int i = 0; i < 3; ++i) {
        r[i] = v[i] * std::cos(theta) + cross[i] * std::sin(theta) +
               k[i] * dot * (1.0 - std::cos(theta));
    }
    return r;
}

}  // namespace

TEST_CASE("rack axiom checker") {
    CHECK(check_rack(one_element_rack()).ok());
    CHECK(check_rack(trivial_rack(4)).ok());
    CHECK(check_rack(conjugation_rack(symmetric_group_3())).ok());

    SUBCASE("one transposed entry is located") {
        FiniteRack q = conjugation_rack(symmetric_group_3());
        REQUIRE(q.table[1][4] != q.table[4][1]);
        q.table[1][4] = q.table[4][1];
        RackReport r = check_rack(q);
        CHECK_FALSE(r.distrib_violations.empty());
        CHECK(r.non_permutation_rows == std::vector<std::size_t>{1});
        CHECK(r.point_left_violations.empty());
        CHECK(r.point_right_violations.empty());
    }
    SUBCASE("breaking the point column is located") {
        FiniteRack q = conjugation_rack(symmetric_group_3());
        q.table[2][0] = 2;  // x∘point must stay at the point
        RackReport r = check_rack(q);
        CHECK(r.point_right_violations == std::vector<std::size_t>{2});
    }
}

TEST_CASE("conjugation racks") {
    SUBCASE("abelian groups give the trivial rack") {
        CHECK(conjugation_rack(cyclic_group(4)).table == trivial_rack(4).table);
        FiniteRack z2 = conjugation_rack(cyclic_group(2));
        CHECK(z2.size == 2);
        CHECK(z2.table == trivial_rack(2).table);
    }
    SUBCASE("the S3 rack row of a transposition has order two") {
        FiniteRack q = conjugation_rack(symmetric_group_3());
        CHECK(q.size == 6);
        // frozen by hand from the catalog order id,(01),(02),(12),(012),(021)
        CHECK(phi(q, 1) == std::vector<std::size_t>{0, 1, 3, 2, 5, 4});
        std::vector<std::size_t> p = phi(q, 1);
        for (std::size_t y = 0; y < 6; ++y) CHECK(p[p[y]] == y);
    }
    SUBCASE("invalid group is rejected") {
        FiniteGroup g = cyclic_group(3);
        g.table[1][1] = 1;
        CHECK_THROWS_AS(conjugation_rack(g), std::invalid_argument);
    }
}

TEST_CASE("left translations") {
    FiniteRack q = conjugation_rack(symmetric_group_3());
    SUBCASE("the point translates trivially and is fixed by everyone") {
        std::vector<std::size_t> id{0, 1, 2, 3, 4, 5};
        CHECK(phi(q, q.point) == id);
        for (std::size_t x = 0; x < q.size; ++x) CHECK(phi(q, x)[q.point] == q.point);
    }
    SUBCASE("translation composition identity") {
        for (std::size_t x = 0; x < q.size; ++x)
            for (std::size_t y = 0; y < q.size; ++y)
                for (std::size_t z = 0; z < q.size; ++z) {
                    CHECK(q.op(x, q.op(y, z)) == q.op(q.op(x, y), q.op(x, z)));
                }
    }
    SUBCASE("each translation is a rack automorphism") {
        for (std::size_t x = 0; x < q.size; ++x) {
            std::vector<std::size_t> p = phi(q, x);
            for (std::size_t a = 0; a < q.size; ++a)
                for (std::size_t b = 0; b < q.size; ++b) CHECK(p[q.op(a, b)] == q.op(p[a], p[b]));
        }
    }
}

TEST_CASE("conjugation racks commute with relabeling") {
    const FiniteGroup s3 = symmetric_group_3();
    std::vector<std::size_t> p{0, 2, 3, 1, 5, 4};  // fixes the unit
    FiniteGroup relabeled = relabel_group(s3, p);
    CHECK(check_group(relabeled).ok());
    FiniteRack lhs = conjugation_rack(relabeled);
    FiniteRack rhs = relabel_rack(conjugation_rack(s3), p);
    CHECK(lhs.table == rhs.table);
    CHECK(lhs.point == rhs.point);
}

TEST_CASE("exponential-of-ad rack operation") {
    SUBCASE("zero acts as the identity") {
        FloatAlgebra f = to_float(so3_lie());
        DVec y{0.3, -0.7, 0.2};
        CHECK(vec_max_abs_diff(exp_ad_rack_op(f, DVec(3, 0.0), y), y) == 0.0);
    }
    SUBCASE("twisted Heisenberg has the exact nilpotent closed form") {
        FloatAlgebra f = to_float(heisenberg_dtwist_algebra());
        Rng rng(7);
        for (int t = 0; t < 50; ++t) {
            DVec x = rng.unit(3), y = rng.unit(3);
            DVec expect = y;
            expect[2] -= x[1] * y[1];
            CHECK(vec_max_abs_diff(exp_ad_rack_op(f, x, y), expect) < 1e-15);
        }
    }
    SUBCASE("so3 matches the rotation oracle") {
        FloatAlgebra f = to_float(so3_lie());
        const double theta = 3.14159265358979323846 / 2;
        DVec x{0.0, 0.0, theta};
        DVec y{1.0, 0.0, 0.0};
        DVec got = exp_ad_rack_op(f, x, y);
        DVec expect = rodrigues({0.0, 0.0, 1.0}, theta, y);
        CHECK(vec_max_abs_diff(got, expect) < 1e-12);
        CHECK(std::fabs(got[1] - 1.0) < 1e-12);  // quarter turn sends e_x to e_y

        Rng rng(11);
        for (int t = 0; t < 20; ++t) {
            DVec ax = rng.unit(3), v = rng.unit(3);
            double angle = rng.uniform();
            DVec arg = vec_scaled(ax, angle);
            CHECK(vec_max_abs_diff(exp_ad_rack_op(f, arg, v), rodrigues(ax, angle, v)) < 1e-12);
        }
    }
    SUBCASE("left distributivity holds to rounding on unit inputs") {
        for (const LeibnizAlgebra& g : {so3_lie(), heisenberg_dtwist_algebra()}) {
            FloatAlgebra f = to_float(g);
            Rng rng(kDefaultSeed);
            double worst = 0.0;
            for (int t = 0; t < 100; ++t) {
                DVec x = rng.unit(3), y = rng.unit(3), z = rng.unit(3);
                DVec lhs = exp_ad_rack_op(f, x, exp_ad_rack_op(f, y, z));
                DVec rhs = exp_ad_rack_op(f, exp_ad_rack_op(f, x, y), exp_ad_rack_op(f, x, z));
                worst = std::max(worst, vec_max_abs_diff(lhs, rhs));
            }
            CHECK(worst < kTolRack);
        }
    }
    SUBCASE("conjugation chain identity for the exponentials of ad") {
        FloatAlgebra f = to_float(so3_lie());
        Rng rng(3);
        for (int t = 0; t < 50; ++t) {
            DVec x = rng.unit(3), y = rng.unit(3);
            DMatrix lhs = expm(f.ad(x)) * expm(f.ad(y));
            DMatrix rhs = expm(f.ad(exp_ad_rack_op(f, x, y))) * expm(f.ad(x));
            CHECK(max_abs_diff(lhs, rhs) < kTolRack);
        }
    }
    SUBCASE("non-Leibniz float input is rejected") {
        FloatAlgebra f(2);
        f.set(0, 0, 1, 1.0);
        f.set(1, 1, 0, 1.0);
        REQUIRE(max_leibniz_residual(f) > kTolRack);
        CHECK_THROWS_AS(exp_ad_rack_op(f, DVec(2, 0.5), DVec(2, 0.5)), std::invalid_argument);
    }
}

TEST_CASE("tangent bundle conjugation") {
    DMatrix lz(3, 3);
    lz.at(0, 1) = -1.0;
    lz.at(1, 0) = 1.0;
    DMatrix lx(3, 3);
    lx.at(1, 2) = -1.0;
    lx.at(2, 1) = 1.0;

    SUBCASE("unit group parts reduce to the vector formula") {
        DMatrix id = DMatrix::identity(3);
        auto [first, second] = tangent_bundle_rack_op(lx, id, lz, id);
        CHECK(max_abs_diff(first, lz) == 0.0);  // X + Y - X
        CHECK(max_abs_diff(second, id) == 0.0);
    }
    SUBCASE("second component is group conjugation") {
        DMatrix a = expm(lz.scaled(0.7)), b = expm(lx.scaled(-0.3));
        auto [first, second] = tangent_bundle_rack_op(lx, a, lz, b);
        auto ainv = inverse(a);
        REQUIRE(ainv.has_value());
        CHECK(max_abs_diff(second, a * b * (*ainv)) == 0.0);
    }
    SUBCASE("the exponential graph is closed under the operation") {
        Rng rng(kDefaultSeed);
        DMatrix ly(3, 3);
        ly.at(0, 2) = 1.0;
        ly.at(2, 0) = -1.0;
        const std::vector<DMatrix> basis{lx, ly, lz};
        auto elem = [&](const DVec& c) {
            DMatrix m(3, 3);
            for (int i = 0; i < 3; ++i) m = m + basis[i].scaled(c[i]);
            return m;
        };
        for (int t = 0; t < 100; ++t) {
            DMatrix x = elem(rng.unit(3)), y = elem(rng.unit(3));
            auto [first, second] = tangent_bundle_rack_op(x, expm(x), y, expm(y));
            auto einv = inverse(expm(x));
            REQUIRE(einv.has_value());
            DMatrix ad_y = expm(x) * y * (*einv);
            CHECK(max_abs_diff(first, ad_y) < 1e-10);
            CHECK(max_abs_diff(second, expm(ad_y)) < 1e-10);
        }
    }
    SUBCASE("singular group element is rejected") {
        CHECK_THROWS_AS(tangent_bundle_rack_op(lx, DMatrix(3, 3), lz, DMatrix::identity(3)),
                        std::invalid_argument);
    }
}

TEST_CASE("group catalog sanity") {
    for (std::size_t order = 1; order <= 8; ++order) {
        std::vector<FiniteGroup> groups = small_groups(order);
        for (const FiniteGroup& g : groups) CHECK(check_group(g).ok());
        for (std::size_t a = 0; a < groups.size(); ++a)
            for (std::size_t b = a + 1; b < groups.size(); ++b)
                CHECK_FALSE(groups_isomorphic(groups[a], groups[b]));
    }
    CHECK(small_groups(4).size() == 2);
    CHECK(small_groups(6).size() == 2);
    CHECK(small_groups(8).size() == 5);
    CHECK(groups_isomorphic(symmetric_group_3(),
                            relabel_group(symmetric_group_3(), {3, 4, 0, 5, 2, 1})));
    CHECK_FALSE(groups_isomorphic(cyclic_group(6), symmetric_group_3()));
    CHECK_FALSE(groups_isomorphic(dihedral_group_8(), quaternion_group()));
    CHECK_FALSE(groups_isomorphic(cyclic_group(8), dihedral_group_8()));
}
