#include <doctest.h>

#include <set>

#include "opext/corpus.hpp"
#include "opext/formats.hpp"
#include "opext/homology.hpp"

using namespace opext;

TEST_CASE("parse then serialize is stable") {
    for (auto& name : corpus::names()) {
        auto text = corpus::quiver_text(name);
        auto alg = algebra_from_text(text);
        auto canon = serialize_algebra(*alg);
        auto again = algebra_from_text(canon);
        CHECK(serialize_algebra(*again) == canon);
        CHECK(algebra_fingerprint(*alg) == algebra_fingerprint(*again));
    }
}

TEST_CASE("frozen fingerprints") {
    CHECK(algebra_fingerprint(*corpus::algebra("a2")) == "24243ab1e7a10c5a");
    auto ctx = corpus::extension("a2-ext-p1");
    CHECK(algebra_fingerprint(*ctx.extended) == "871bae422b495876");
    // Fingerprints separate the corpus algebras.
    std::set<std::string> fps;
    for (auto& alg : corpus::all_algebras()) fps.insert(algebra_fingerprint(*alg));
    CHECK(fps.size() == 6);
}

TEST_CASE("parse errors carry line information") {
    CHECK_THROWS_AS(parse_quiver_text("field Q\nvertex 1\narrow a 1 2\n"), const ParseError&);
    CHECK_THROWS_AS(parse_quiver_text("field F 6\n"), const ParseError&);
    CHECK_THROWS_AS(parse_quiver_text("vertex 1\nvertex 1\n"), const ParseError&);
    try {
        parse_quiver_text("field Q\nbogus line\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
}

TEST_CASE("relations parse with signs and coefficients") {
    std::string text =
        "field Q\n"
        "vertex 1\nvertex 2\nvertex 3\n"
        "arrow a 1 2\narrow b 2 3\narrow c 1 2\n"
        "relation 1*a.b - 2/3*c.b\n";
    auto alg = algebra_from_text(text);
    REQUIRE(alg->relations().size() == 1);
    CHECK(alg->relations()[0].terms.size() == 2);
    // One of a.b, c.b is rewritten into the other: only one survives in basis.
    CHECK(alg->dim() == 7);  // 3 lazy + 3 arrows + 1 length-two class
}

TEST_CASE("module round-trip") {
    auto a3 = corpus::algebra("a3");
    auto p1 = projective_module(a3, 0);
    auto text = serialize_rep(p1);
    auto back = parse_rep_text(text, a3);
    CHECK(back.dims() == p1.dims());
    CHECK(back.arrow_maps() == p1.arrow_maps());
    CHECK(serialize_rep(back) == text);
}

TEST_CASE("module files are validated") {
    auto a2 = corpus::algebra("a2");
    auto other = corpus::algebra("a3");
    auto good = serialize_rep(simple_module(a2, 0));
    CHECK_THROWS_AS(parse_rep_text(good, other), const ParseError&);  // fingerprint mismatch

    auto ab = corpus::algebra("abzero");
    std::string bad =
        "module over " + algebra_fingerprint(*ab) + "\n" +
        "dim 1=1\ndim 2=1\ndim 3=1\n" +
        "map a = [[1]]\nmap b = [[1]]\n";  // a.b acts by 1, violating the relation
    CHECK_THROWS_AS(parse_rep_text(bad, ab), const RelationViolation&);
}

TEST_CASE("shipped quiver files match the embedded corpus") {
    for (auto& name : corpus::names()) {
        auto from_file = read_text_file(std::string(OPEXT_DATA_DIR) + "/" + name + ".quiver");
        CHECK(from_file == corpus::quiver_text(name));
    }
    CHECK_THROWS_AS(read_text_file("/nonexistent/file.quiver"), const ParseError&);
}
