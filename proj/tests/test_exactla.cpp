#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibrack/matrix.hpp"
#include "leibrack/subspace.hpp"

#include <cstdint>

using namespace leibrack;

namespace {

// Small deterministic generator for exact-arithmetic property tests.
struct IntRng {
    std::uint64_t state = 0x2545F4914F6CDD1Dull;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long small(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
    Rational rational() { return Rational(small(-4, 4), small(1, 3)); }
    Matrix matrix(std::size_t r, std::size_t c) {
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rational();
        return m;
    }
    Vec vec(std::size_t n) {
        Vec v(n);
        for (auto& x : v) x = rational();
        return v;
    }
};

/// Independent sum/intersection oracle: row-reduce [U U; W 0]; rows with a
/// nonzero left half give U+W on the left, rows with zero left half give
/// U∩W on the right.
std::pair<Subspace, Subspace> zassenhaus(const Subspace& u, const Subspace& w) {
    const std::size_t n = u.ambient_dim();
    std::vector<Vec> rows;
    for (const Vec& b : u.basis()) {
        Vec r(2 * n);
        for (std::size_t i = 0; i < n; ++i) r[i] = r[n + i] = b[i];
        rows.push_back(std::move(r));
    }
    for (const Vec& b : w.basis()) {
        Vec r(2 * n);
        for (std::size_t i = 0; i < n; ++i) r[i] = b[i];
        rows.push_back(std::move(r));
    }
    if (rows.empty()) return {Subspace::zero(n), Subspace::zero(n)};
    Rref red = rref(Matrix::from_rows(rows));
    std::vector<Vec> sum_gens, inter_gens;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
        Vec row = red.m.row(r);
        Vec left(row.begin(), row.begin() + n);
        Vec right(row.begin() + n, row.end());
        if (is_zero_vec(left)) {
            inter_gens.push_back(std::move(right));
        } else {
            sum_gens.push_back(std::move(left));
        }
    }
    // rows beyond the pivot count are zero rows
    return {Subspace::span(n, sum_gens), Subspace::span(n, inter_gens)};
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational("4/6").str() == "2/3");
    CHECK(Rational("-12").str() == "-12");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
    CHECK(Rational(1, 7).inv() == Rational(7));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational("banana"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rref on the named cases") {
    SUBCASE("identity is fixed with full pivots") {
        Matrix id = Matrix::identity(3);
        Rref r = rref(id);
        CHECK(r.m == id);
        CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
    }
    SUBCASE("zero matrix has no pivots") {
        Matrix z(2, 2);
        Rref r = rref(z);
        CHECK(r.m == z);
        CHECK(r.pivots.empty());
    }
    SUBCASE("rank-1 matrix reduces to a single row") {
        // by hand: R2 <- R2 - 2 R1 kills the second row
        Matrix m = Matrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
        Rref r = rref(m);
        CHECK(r.m == Matrix::from_rows({{Rational(1), Rational(2)}, {Rational(0), Rational(0)}}));
        CHECK(r.pivots == std::vector<std::size_t>{0});
    }
}

TEST_CASE("rref is idempotent on random matrices") {
    IntRng rng;
    for (int trial = 0; trial < 25; ++trial) {
        Matrix m = rng.matrix(1 + trial % 5, 1 + (trial * 7) % 6);
        Rref once = rref(m);
        Rref twice = rref(once.m);
        CHECK(once.m == twice.m);
        CHECK(once.pivots == twice.pivots);
    }
}

TEST_CASE("nullspace on the named cases") {
    CHECK(nullspace(Matrix::identity(4)).dim() == 0);
    CHECK(nullspace(Matrix(3, 3)) == Subspace::full(3));

    // solved by hand: x2 = 0, x1 and x3 free
    Matrix m = Matrix::from_rows({{Rational(0), Rational(1), Rational(0)}});
    Subspace ns = nullspace(m);
    CHECK(ns.dim() == 2);
    CHECK(ns == Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 2)}));
}

TEST_CASE("nullspace vectors satisfy m by x = 0 exactly") {
    IntRng rng;
    for (int trial = 0; trial < 25; ++trial) {
        Matrix m = rng.matrix(2 + trial % 4, 2 + (trial * 3) % 5);
        Subspace ns = nullspace(m);
        CHECK(ns.dim() == m.cols() - rank(m));
        for (const Vec& x : ns.basis()) CHECK(is_zero_vec(m.apply(x)));
    }
}

TEST_CASE("solve on the named cases") {
    SUBCASE("identity system returns the rhs") {
        Vec b{Rational(3), Rational(-7), Rational(1, 2)};
        auto x = solve(Matrix::identity(3), b);
        REQUIRE(x.has_value());
        CHECK(*x == b);
    }
    SUBCASE("zero system with nonzero rhs is inconsistent") {
        CHECK_FALSE(solve(Matrix(2, 2), Vec{Rational(1), Rational(0)}).has_value());
    }
    SUBCASE("upper triangular by back-substitution") {
        // by hand: x2 = 1, then x1 = 3 - x2 = 2
        Matrix a = Matrix::from_rows({{Rational(1), Rational(1)}, {Rational(0), Rational(1)}});
        auto x = solve(a, Vec{Rational(3), Rational(1)});
        REQUIRE(x.has_value());
        CHECK(*x == Vec{Rational(2), Rational(1)});
    }
}

TEST_CASE("solve results satisfy the system exactly") {
    IntRng rng;
    int consistent = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Matrix a = rng.matrix(2 + trial % 4, 2 + (trial * 5) % 4);
        Vec b = rng.vec(a.rows());
        auto x = solve(a, b);
        if (x) {
            ++consistent;
            Vec ax = a.apply(*x);
            CHECK(ax == b);
        }
    }
    CHECK(consistent > 0);  // the sample must exercise the success path
}

TEST_CASE("sum and intersection on the named cases") {
    SUBCASE("equal subspaces") {
        Subspace u = Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)});
        auto [sum, inter] = sum_and_intersection(u, u);
        CHECK(sum == u);
        CHECK(inter == u);
    }
    SUBCASE("complementary lines in the plane") {
        Subspace u = Subspace::span(2, {unit_vec(2, 0)});
        Subspace v = Subspace::span(2, {unit_vec(2, 1)});
        auto [sum, inter] = sum_and_intersection(u, v);
        CHECK(sum == Subspace::full(2));
        CHECK(inter.dim() == 0);
    }
    SUBCASE("skew lines in R3") {
        Vec e1e2{Rational(1), Rational(1), Rational(0)};
        Subspace u = Subspace::span(3, {e1e2});
        Subspace v = Subspace::span(3, {unit_vec(3, 1)});
        auto [sum, inter] = sum_and_intersection(u, v);
        CHECK(sum == Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)}));
        CHECK(inter.dim() == 0);
    }
}

TEST_CASE("sum and intersection agree with the row-reduction oracle") {
    IntRng rng;
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 3 + trial % 3;
        std::vector<Vec> ug, vg;
        for (int i = 0; i < 2 + trial % 2; ++i) ug.push_back(rng.vec(n));
        for (int i = 0; i < 2 + (trial / 2) % 2; ++i) vg.push_back(rng.vec(n));
        Subspace u = Subspace::span(n, ug);
        Subspace v = Subspace::span(n, vg);

        auto [sum, inter] = sum_and_intersection(u, v);
        auto [osum, ointer] = zassenhaus(u, v);
        CHECK(sum == osum);
        CHECK(inter == ointer);
        CHECK(u.dim() + v.dim() == sum.dim() + inter.dim());  // Grassmann identity
        CHECK(sum.contains(u));
        CHECK(sum.contains(v));
        CHECK(u.contains(inter));
        CHECK(v.contains(inter));
    }
}

TEST_CASE("exact inverse") {
    SUBCASE("inverts an invertible matrix exactly") {
        Matrix m = Matrix::from_rows({{Rational(2), Rational(1)}, {Rational(7), Rational(4)}});
        auto inv = inverse(m);
        REQUIRE(inv.has_value());
        CHECK(m * *inv == Matrix::identity(2));
        CHECK(*inv * m == Matrix::identity(2));
    }
    SUBCASE("reports singular matrices") {
        CHECK_FALSE(inverse(Matrix(3, 3)).has_value());
        Matrix m = Matrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
        CHECK_FALSE(inverse(m).has_value());
    }
    SUBCASE("random invertible products invert") {
        IntRng rng;
        int inverted = 0;
        for (int trial = 0; trial < 20; ++trial) {
            Matrix m = rng.matrix(3, 3);
            auto inv = inverse(m);
            if (inv) {
                ++inverted;
                CHECK(m * *inv == Matrix::identity(3));
            }
        }
        CHECK(inverted > 0);
    }
}

TEST_CASE("subspace canonical form makes equality structural") {
    Vec a{Rational(1), Rational(2), Rational(3)};
    Vec b{Rational(0), Rational(1), Rational(1)};
    Vec mixed{Rational(2), Rational(5), Rational(7)};  // = 2a + b
    Subspace s1 = Subspace::span(3, {a, b});
    Subspace s2 = Subspace::span(3, {mixed, b, a});
    CHECK(s1 == s2);
    CHECK(s1.contains(mixed));
    CHECK_FALSE(s1.contains(unit_vec(3, 0)));
}
