#include "caplink/unipoly.hpp"

#include "caplink/rng.hpp"

#include <doctest.h>

#include <algorithm>

using namespace caplink;

namespace {

UniPoly from_roots(const std::vector<Rational>& roots) {
    UniPoly p = UniPoly::constant(rat(1));
    for (const auto& r : roots) p = p * UniPoly({-r, rat(1)});
    return p;
}

// independent resultant oracle: Sylvester matrix determinant by fraction-free
// elimination over the rationals
Rational sylvester_resultant(const UniPoly& f, const UniPoly& g) {
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return rat(0);
    if (m == 0 && n == 0) return rat(1);
    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size, rat(0)));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k) a[static_cast<size_t>(row)][static_cast<size_t>(row + k)] = f.c[static_cast<size_t>(m - k)];
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k) a[static_cast<size_t>(n + row)][static_cast<size_t>(row + k)] = g.c[static_cast<size_t>(n - k)];
    Rational det(1);
    for (size_t col = 0; col < size; ++col) {
        size_t piv = col;
        while (piv < size && sgn(a[piv][col]) == 0) ++piv;
        if (piv == size) return rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t i = col + 1; i < size; ++i) {
            if (sgn(a[i][col]) == 0) continue;
            Rational fac = a[i][col] / a[col][col];
            for (size_t j = col; j < size; ++j) a[i][j] -= fac * a[col][j];
        }
    }
    return det;
}

} // namespace

TEST_CASE("arithmetic and division") {
    UniPoly f({rat(-1), rat(0), rat(1)}); // t^2 - 1
    UniPoly g({rat(1), rat(1)});          // t + 1
    auto [q, r] = f.divmod(g);
    CHECK(r.is_zero());
    CHECK(q == UniPoly({rat(-1), rat(1)}));
    CHECK(f.eval(rat(3)) == rat(8));
    CHECK(gcd(f, g) == g.monic());
}

TEST_CASE("squarefree decomposition finds multiplicities") {
    // (t-1)^3 (t+2)^2 (t-5)
    UniPoly f = from_roots({rat(1), rat(1), rat(1), rat(-2), rat(-2), rat(5)});
    auto decomp = squarefree_decomposition(f);
    int total = 0;
    for (const auto& [fac, mult] : decomp) total += mult * fac.degree();
    CHECK(total == 6);
    CHECK(root_multiplicity(f, RootLoc{rat(1), rat(1)}) == 3);
    CHECK(root_multiplicity(f, RootLoc{rat(-2), rat(-2)}) == 2);
    CHECK(root_multiplicity(f, RootLoc{rat(5), rat(5)}) == 1);
    RootLoc near_one{rat(1, 2), rat(3, 2)};
    CHECK(root_multiplicity(f, near_one) == 3);
}

TEST_CASE("root isolation matches constructed roots") {
    uint64_t state = 42;
    for (int trial = 0; trial < 60; ++trial) {
        int k = static_cast<int>(rand_range(state, 1, 5));
        std::vector<Rational> roots;
        for (int i = 0; i < k; ++i)
            roots.push_back(rat(rand_range(state, -40, 40), rand_range(state, 1, 12)));
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        UniPoly f = from_roots(roots);
        // sprinkle a multiplicity
        if (trial % 3 == 0) f = f * UniPoly({-roots[0], rat(1)});

        IsolatedRoots iso = isolate_real_roots(f);
        REQUIRE(iso.roots.size() == roots.size());
        for (size_t i = 0; i < roots.size(); ++i) {
            CHECK(iso.roots[i].lo <= roots[i]);
            CHECK(roots[i] <= iso.roots[i].hi);
        }
        // closures pairwise disjoint
        for (size_t i = 0; i + 1 < iso.roots.size(); ++i)
            CHECK(iso.roots[i].hi < iso.roots[i + 1].lo);
    }
}

TEST_CASE("isolation handles irrational roots") {
    // t^2 - 2: two irrational roots
    UniPoly f({rat(-2), rat(0), rat(1)});
    IsolatedRoots iso = isolate_real_roots(f);
    REQUIRE(iso.roots.size() == 2);
    for (auto& r : iso.roots) {
        CHECK_FALSE(r.exact());
        refine_root(iso.squarefree, r, rat(1, 1000000));
        CHECK(r.width() <= rat(1, 1000000));
    }
    // the refined boxes bracket +-sqrt(2)
    CHECK(iso.roots[0].hi < rat(-14142, 10000) + rat(1, 100));
    CHECK(iso.roots[1].lo > rat(14142, 10000) - rat(1, 100));
}

TEST_CASE("refinement keeps containment and reaches width") {
    UniPoly f = from_roots({rat(1, 3), rat(7, 2)});
    IsolatedRoots iso = isolate_real_roots(f);
    REQUIRE(iso.roots.size() == 2);
    for (auto& r : iso.roots) {
        RootLoc before = r;
        refine_root(iso.squarefree, r, rat(1, 1 << 20));
        CHECK(r.lo >= before.lo);
        CHECK(r.hi <= before.hi);
        CHECK((r.exact() || r.width() <= rat(1, 1 << 20)));
    }
}

TEST_CASE("sturm chain counts real roots") {
    UniPoly f = from_roots({rat(-3), rat(0), rat(2), rat(9, 4)});
    SturmChain ch = SturmChain::of(squarefree_part(f));
    CHECK(ch.count_roots_real_line() == 4);
    CHECK(ch.count_roots(rat(-4), rat(1)) == 2);
    CHECK(ch.count_roots(rat(1), rat(3)) == 2);
}

TEST_CASE("resultant agrees with the Sylvester oracle") {
    uint64_t state = 7;
    for (int trial = 0; trial < 50; ++trial) {
        int m = static_cast<int>(rand_range(state, 1, 5));
        int n = static_cast<int>(rand_range(state, 1, 5));
        std::vector<Rational> fc, gc;
        for (int i = 0; i <= m; ++i) fc.push_back(rat(rand_range(state, -6, 6)));
        for (int i = 0; i <= n; ++i) gc.push_back(rat(rand_range(state, -6, 6)));
        fc.back() = rat(rand_range(state, 1, 6));
        gc.back() = rat(rand_range(state, 1, 6));
        UniPoly f(fc), g(gc);
        CHECK(resultant(f, g) == sylvester_resultant(f, g));
    }
}

TEST_CASE("resultant vanishes exactly on shared roots") {
    UniPoly f = from_roots({rat(2), rat(-1)});
    UniPoly g = from_roots({rat(2), rat(5)});
    CHECK(sgn(resultant(f, g)) == 0);
    UniPoly h = from_roots({rat(3), rat(5)});
    CHECK(sgn(resultant(f, h)) != 0);
    // product formula for monic f: res(f, g) = prod g(alpha_i)
    CHECK(resultant(f, h) == h.eval(rat(2)) * h.eval(rat(-1)));
}

TEST_CASE("cauchy index over the real line") {
    // Ind(1/t) = +1, Ind(-1/t) = -1, Ind(t/1) = 0
    UniPoly one = UniPoly::constant(rat(1));
    UniPoly t({rat(0), rat(1)});
    CHECK(SturmChain::pair(t, one).cauchy_index_real_line() == 1);
    CHECK(SturmChain::pair(t, rat(-1) * one).cauchy_index_real_line() == -1);
    CHECK(SturmChain::pair(one, t).cauchy_index_real_line() == 0);
    // classic: Ind(f'/f) counts distinct real roots
    UniPoly f = from_roots({rat(-2), rat(1), rat(4)});
    CHECK(SturmChain::pair(f, f.derivative()).cauchy_index_real_line() == 3);
}
