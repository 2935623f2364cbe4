#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptd/grass.hpp"

#include <random>

using namespace ptd;

static Matrix from_rows(std::vector<std::vector<int>> rows) {
    Matrix m(int(rows.size()), int(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m(int(r), int(c)) = rows[r][c];
    return m;
}

static GrassPoint point_from_rows(int k, int n, std::vector<std::vector<int>> rows) {
    GrassPoint p(k, n);
    p.m = from_rows(std::move(rows));
    return p;
}

TEST_CASE("determinant basics") {
    CHECK(det(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
    CHECK(det(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(det(from_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(det(Matrix(0, 0)) == 1);
    CHECK(det_bareiss({{Int(2), Int(7)}, {Int(1), Int(9)}}) == 11);
}

TEST_CASE("plucker coordinates") {
    GrassPoint p = point_from_rows(2, 4, {{1, 0, 1, 0}, {0, 1, 1, 2}});
    CHECK(plucker(p, {1, 2}) == 1);
    CHECK(plucker(p, {1, 4}) == 2);
    CHECK_THROWS(plucker(p, {1, 2, 3}));
    // swapping two columns flips every minor containing both
    GrassPoint q = p;
    for (int r = 0; r < 2; ++r) std::swap(q.m(r, 0), q.m(r, 3));
    CHECK(plucker(q, {1, 4}) == -plucker(p, {1, 4}));
}

TEST_CASE("generalized cross product") {
    // k=3: cross(e1,e2) = e3
    auto w = cross({{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}}, 3);
    CHECK(w == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
    // k=2: cross((a,b)) = (-b,a)
    auto u = cross({{Rat(3), Rat(5)}}, 2);
    CHECK(u == std::vector<Rat>{Rat(-5), Rat(3)});
    // k=1: empty product is (1)
    CHECK(cross({}, 1) == std::vector<Rat>{Rat(1)});
    CHECK_THROWS(cross({{Rat(1), Rat(0)}}, 3));
}

TEST_CASE("contraction formula, k <= 5") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int k = 2; k <= 5; ++k)
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<std::vector<Rat>> us(k - 1, std::vector<Rat>(k)), vs(k - 1, std::vector<Rat>(k));
            for (auto& v : us)
                for (auto& x : v) x = d(rng);
            for (auto& v : vs)
                for (auto& x : v) x = d(rng);
            Matrix gram(k - 1, k - 1);
            for (int a = 0; a < k - 1; ++a)
                for (int b = 0; b < k - 1; ++b) gram(a, b) = dot(us[a], vs[b]);
            CHECK(dot(cross(us, k), cross(vs, k)) == det(gram));
        }
}

TEST_CASE("twist matrix") {
    // k=1: all-ones row
    GrassPoint p1 = point_from_rows(1, 5, {{3, -2, 7, 1, 4}});
    GrassPoint t1 = twist(p1);
    for (int j = 0; j < 5; ++j) CHECK(t1.m(0, j) == 1);
    // k=2 hand instance
    GrassPoint p = point_from_rows(2, 4, {{1, 0, 1, 0}, {0, 1, 1, 2}});
    GrassPoint t = twist(p);
    CHECK(t.col(1) == std::vector<Rat>{Rat(2), Rat(0)});
    CHECK(t.col(2) == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(t.col(3) == std::vector<Rat>{Rat(-1), Rat(0)});
    CHECK(t.col(4) == std::vector<Rat>{Rat(-1), Rat(1)});
    CHECK(twist_plucker(p, {1, 2}) == 2);
    CHECK(plucker(p, {1, 4}) == 2);
}

TEST_CASE("GL-equivariance and rank preservation") {
    std::mt19937_64 rng(102);
    for (int k = 2; k <= 4; ++k) {
        int n = k + 3;
        GrassPoint p = random_generic_point(k, n, rng);
        CHECK(rank(twist(p).m) == k);
        // random invertible g
        std::uniform_int_distribution<int> d(-4, 4);
        Matrix g(k, k);
        do {
            for (auto& x : g.a) x = d(rng);
        } while (det(g) == 0);
        GrassPoint gp = p;
        gp.m = g * p.m;
        Matrix expect = scale(inverse(g).transpose() * twist(p).m, det(g));
        CHECK(twist(gp).m == expect);
    }
}

TEST_CASE("twisted Plucker coordinates, k=2 shift rule and coefficient rule") {
    std::mt19937_64 rng(103);
    int n = 6;
    GrassPoint p = random_generic_point(2, n, rng);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            CHECK(twist_plucker(p, {a, b}) ==
                  plucker(p, make_subset({sigma(a, n), sigma(b, n)}, n)));
    for (int k = 2; k <= 4; ++k) {
        GrassPoint q = random_generic_point(k, 7, rng);
        for (int i = 1; i <= 7; ++i) {
            Rat prod(1);
            for (int r = 1; r <= k - 1; ++r) prod *= plucker(q, coeff_subset(k, 7, sigma(i, 7, r)));
            CHECK(twist_plucker(q, coeff_subset(k, 7, i)) == prod);
        }
    }
}

TEST_CASE("double twist diagonal") {
    std::mt19937_64 rng(104);
    // k=2: pure signs
    GrassPoint p2 = random_generic_point(2, 5, rng);
    auto h2 = double_twist_diagonal(p2);
    for (int i = 1; i <= 5; ++i)
        CHECK(h2[i - 1] == twist_sign(2, sigma(i, 5)) * twist_sign(2, i));
    // columnwise identity: twist^2(p)_i = (-1)^{k-1} h_i p_{sigma^k(i)}
    for (auto [k, n] : {std::pair{3, 6}, {4, 7}, {2, 6}}) {
        GrassPoint p = random_generic_point(k, n, rng);
        GrassPoint tt = twist(twist(p));
        auto h = double_twist_diagonal(p);
        int sgn = (k - 1) % 2 == 0 ? 1 : -1;
        for (int i = 1; i <= n; ++i) {
            auto expect = p.col(sigma(i, n, k));
            for (auto& x : expect) x *= sgn * h[i - 1];
            CHECK(tt.col(i) == expect);
        }
    }
}

TEST_CASE("rotation map rho") {
    std::mt19937_64 rng(105);
    int k = 3, n = 6;
    GrassPoint p = random_generic_point(k, n, rng);
    GrassPoint r = rho(p);
    std::vector<KSubset> subs{{2, 3, 4}, {1, 2, 3}, {1, 4, 6}, {4, 5, 6}};
    for (auto& I : subs) {
        int sgn = contains(I, 1) ? ((k - 1) % 2 ? -1 : 1) : 1;
        CHECK(plucker(r, I) == sgn * plucker(p, sigma_shift(I, n)));
    }
    GrassPoint q = p;
    for (int t = 0; t < n; ++t) q = rho(q);
    CHECK(q.m == p.m);
}

TEST_CASE("short Plucker relations for plucker and twist_plucker") {
    std::mt19937_64 rng(106);
    for (auto [k, n] : {std::pair{3, 6}, {4, 8}, {2, 5}}) {
        GrassPoint p = random_generic_point(k, n, rng);
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<int> perm(n);
            for (int x = 0; x < n; ++x) perm[x] = x + 1;
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<int> J(perm.begin(), perm.begin() + (k - 2));
            std::vector<int> abcd(perm.begin() + (k - 2), perm.begin() + (k + 2));
            std::sort(abcd.begin(), abcd.end());
            auto ext = [&](int x, int y) {
                auto s = J;
                s.push_back(x);
                s.push_back(y);
                return make_subset(s, n);
            };
            auto [a, b, c, d] = std::tuple{abcd[0], abcd[1], abcd[2], abcd[3]};
            CHECK(plucker(p, ext(a, c)) * plucker(p, ext(b, d)) ==
                  plucker(p, ext(a, b)) * plucker(p, ext(c, d)) +
                      plucker(p, ext(a, d)) * plucker(p, ext(b, c)));
            CHECK(twist_plucker(p, ext(a, c)) * twist_plucker(p, ext(b, d)) ==
                  twist_plucker(p, ext(a, b)) * twist_plucker(p, ext(c, d)) +
                      twist_plucker(p, ext(a, d)) * twist_plucker(p, ext(b, c)));
        }
    }
}

TEST_CASE("generic point sampling") {
    std::mt19937_64 rng(107);
    GrassPoint p = random_generic_point(3, 6, rng);
    CHECK(rank(p.m) == 3);
    std::vector<KSubset> subs;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c) CHECK(plucker(p, {a, b, c}) != 0);
}
