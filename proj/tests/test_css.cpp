#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "foldgate/constructors.hpp"
#include "foldgate/css.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace foldgate;
using css::CssCode;

namespace {

CssCode toy_422() {
    CssCode c;
    c.n = 4;
    c.hx = f2::BitMatrix(1, 4);
    c.hz = f2::BitMatrix(1, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        c.hx.set(0, j, true);
        c.hz.set(0, j, true);
    }
    c.label = "toy-422";
    return c;
}

}  // namespace

TEST_CASE("validate") {
    CssCode zero;
    zero.n = 3;
    zero.hx = f2::BitMatrix(2, 3);
    zero.hz = f2::BitMatrix(2, 3);
    CHECK(css::validate(zero).ok);

    CssCode bad;
    bad.n = 1;
    bad.hx = f2::BitMatrix(1, 1);
    bad.hz = f2::BitMatrix(1, 1);
    bad.hx.set(0, 0, true);
    bad.hz.set(0, 0, true);
    auto rep = css::validate(bad);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0] == std::pair<std::size_t, std::size_t>{0, 0});

    CHECK(css::validate(testutil::load_code("bring_reference.json").code).ok);
}

TEST_CASE("logical bases and k") {
    auto bring = testutil::load_code("bring_reference.json");
    CHECK(css::logical_count(bring.code) == 8);
    auto basis = css::logical_bases(bring.code);
    CHECK(basis.k() == 8);
    CHECK(css::basis_valid(bring.code, basis));

    // the shipped fixture basis is valid too
    REQUIRE(bring.basis.has_value());
    CHECK(css::basis_valid(bring.code, *bring.basis));

    CssCode empty_checks;
    empty_checks.n = 2;
    empty_checks.hx = f2::BitMatrix(0, 2);
    empty_checks.hz = f2::BitMatrix(0, 2);
    auto b2 = css::logical_bases(empty_checks);
    CHECK(b2.k() == 2);
    CHECK(b2.zbasis == f2::BitMatrix::identity(2));
    CHECK(b2.xbasis == f2::BitMatrix::identity(2));
}

TEST_CASE("gram against the reference matrix") {
    auto bring = testutil::load_code("bring_reference.json");
    auto extras = testutil::load_json("bring_reference_data.json");
    auto phi = testutil::parse_bits(extras["phi"].get<std::vector<std::string>>());
    CHECK(css::gram(bring.code, *bring.basis) == phi);

    // primed basis is symplectic
    css::LogicalBasis prime;
    prime.zbasis = testutil::sparse_matrix(extras["zbasis_prime"], bring.code.n);
    prime.xbasis = testutil::sparse_matrix(extras["xbasis_prime"], bring.code.n);
    CHECK(css::gram(bring.code, prime) == f2::BitMatrix::identity(8));

    CssCode trivial;
    trivial.n = 1;
    trivial.hx = f2::BitMatrix(1, 1);
    trivial.hz = f2::BitMatrix(0, 1);
    trivial.hx.set(0, 0, true);
    css::LogicalBasis none;
    none.zbasis = f2::BitMatrix(0, 1);
    none.xbasis = f2::BitMatrix(0, 1);
    CHECK(css::gram(trivial, none).rows() == 0);
}

TEST_CASE("symplectify") {
    auto bring = testutil::load_code("bring_reference.json");
    auto sympl = css::symplectify(bring.code, *bring.basis);
    CHECK(css::gram(bring.code, sympl) == f2::BitMatrix::identity(8));
    CHECK(css::basis_valid(bring.code, sympl));
    CHECK(sympl.zbasis == bring.basis->zbasis);  // z sector untouched

    // already symplectic stays symplectic (and unchanged under the Phi^-1 rule)
    auto again = css::symplectify(bring.code, sympl);
    CHECK(again.zbasis == sympl.zbasis);
    CHECK(again.xbasis == sympl.xbasis);

    auto surf = constructors::surface_code(3);
    auto sb = css::symplectify(surf.code, css::logical_bases(surf.code));
    CHECK(css::gram(surf.code, sb) == f2::BitMatrix::identity(1));
}

TEST_CASE("distance") {
    auto bring = testutil::load_code("bring_reference.json");
    CHECK(css::distance(bring.code, 3) == 3);

    auto block = testutil::load_code("block_code.json");
    CHECK(css::distance(block.code, 4) == 4);

    CssCode k0;
    k0.n = 2;
    k0.hx = f2::BitMatrix::identity(2);
    k0.hz = f2::BitMatrix(0, 2);
    CHECK_FALSE(css::distance(k0, 2).has_value());
}

TEST_CASE("distance agrees with the full-enumeration oracle on small codes") {
    std::vector<CssCode> cases;
    cases.push_back(toy_422());
    cases.push_back(constructors::surface_code(2).code);
    cases.push_back(constructors::surface_code(3).code);
    cases.push_back(testutil::load_code("block_code.json").code);
    for (const auto& code : cases) {
        REQUIRE(code.n <= 20);
        auto expect = oracles::naive_css_distance(code);
        auto got = css::distance(code, code.n);
        CHECK(got == expect);
        // meet-in-the-middle and plain enumeration agree when forced past 6
        if (expect && code.n <= 16) CHECK(css::distance(code, 7) == expect);
    }
}

TEST_CASE("direct sum") {
    auto bring = testutil::load_code("bring_reference.json").code;
    CssCode empty;
    empty.n = 0;
    empty.hx = f2::BitMatrix(0, 0);
    empty.hz = f2::BitMatrix(0, 0);
    auto same = css::direct_sum(bring, empty);
    CHECK(same.n == bring.n);
    CHECK(same.hx.rows() == bring.hx.rows());

    auto doubled = css::direct_sum(bring, bring);
    CHECK(doubled.n == 60);
    CHECK(css::logical_count(doubled) == 16);

    auto toy2 = css::direct_sum(toy_422(), toy_422());
    CHECK(css::logical_count(toy2) == 4);
    CHECK(css::distance(toy2, 4) == css::distance(toy_422(), 4));
}

TEST_CASE("json round trip is bit exact") {
    auto bring = testutil::load_code("bring_reference.json");
    std::string out = css::to_json(bring.code, &*bring.basis);
    auto back = css::from_json(out);
    CHECK(back.code.hx == bring.code.hx);
    CHECK(back.code.hz == bring.code.hz);
    CHECK(back.basis->zbasis == bring.basis->zbasis);
    CHECK(css::to_json(back.code, &*back.basis) == out);

    CHECK_THROWS(css::from_json("{\"n\": 2, \"hx\": [[1,0]], \"hz\": []}"));  // not increasing
}
