#include <doctest.h>

#include "opext/corpus.hpp"
#include "opext/enumerate.hpp"
#include "opext/functors.hpp"

using namespace opext;

namespace {
RecollementView view(const std::string& name) { return RecollementView(corpus::extension(name)); }
}  // namespace

TEST_CASE("structural facts at the extension vertex") {
    for (auto& spec : corpus::extensions()) {
        auto rv = view(spec.name);
        auto& ctx = rv.ctx();
        CHECK(is_injective_module(rv.s()));
        auto pd = projective_dimension(rv.s());
        REQUIRE(pd.has_value());
        CHECK(*pd <= 1);
        // rad P_omega restricts to P0.
        auto pw = projective_module(ctx.extended, ctx.omega);
        auto r = restrict_module(ctx, radical(pw).rep);
        std::vector<int> p0_dims = ctx.p0_dims();
        CHECK(r.dims() == p0_dims);
    }
}

TEST_CASE("restrict then extend on projectives") {
    auto rv = view("a2-ext-p1");
    auto& ctx = rv.ctx();
    // R P_omega = P0 = P_1 over the base.
    auto pw = projective_module(ctx.extended, ctx.omega);
    CHECK(is_isomorphic(restrict_module(ctx, pw), projective_module(ctx.base, 0), 1));
    // E(P0) recovers P_omega.
    auto e = extend_module(ctx, projective_module(ctx.base, 0));
    CHECK(is_isomorphic(e, pw, 1));
    // L is zero at the extension vertex, identity elsewhere.
    auto l = embed_module(ctx, projective_module(ctx.base, 1));
    CHECK(l.dim(ctx.omega) == 0);
}

TEST_CASE("adjunction on hom dimensions") {
    auto rv = view("abzero-ext-p1");
    auto& ctx = rv.ctx();
    std::mt19937_64 rng(23);
    for (int i = 0; i < 6; ++i) {
        auto m = random_module(ctx.base, rng);       // over B
        auto x = random_module(ctx.extended, rng);   // over A
        // L left adjoint to R: Hom_A(L M, X) = Hom_B(M, R X).
        CHECK(hom_dim(embed_module(ctx, m), x) == hom_dim(m, restrict_module(ctx, x)));
        // E right adjoint to R: Hom_A(X, E M) = Hom_B(R X, M).
        CHECK(hom_dim(x, extend_module(ctx, m)) == hom_dim(restrict_module(ctx, x), m));
    }
}

TEST_CASE("canonical sequences") {
    auto rv = view("a2-ext-p2");
    auto& ctx = rv.ctx();
    std::mt19937_64 rng(31);
    for (int i = 0; i < 6; ++i) {
        auto x = random_module(ctx.extended, rng);
        auto rs = restriction_sequence(ctx, x);
        validate_ses(rs.seq);
        CHECK(rs.s_multiplicity == u_dim(ctx, x));
        CHECK(is_isomorphic(rs.seq.incl.source(), embed_module(ctx, restrict_module(ctx, x)), 37));

        auto m = random_module(ctx.base, rng);
        auto es = extension_sequence(ctx, m);
        validate_ses(es.seq);
        CHECK(es.s_multiplicity == static_cast<int>(hom_dim(
            restrict_module(ctx, projective_module(ctx.extended, ctx.omega)), m)));
    }
}

TEST_CASE("unit delta criteria") {
    auto rv = view("a2-ext-p1");
    auto& ctx = rv.ctx();
    for (auto& x : enumerate_indecomposables(ctx.extended, 12)) {
        auto d = unit_delta(ctx, x);
        CHECK(d.vertex_map(ctx.omega).rows() == static_cast<std::size_t>(
            extend_module(ctx, restrict_module(ctx, x)).dim(ctx.omega)));
        bool mono = d.is_injective();
        bool epi = d.is_surjective();
        CHECK(mono == (hom_dim(rv.s(), x) == 0));
        CHECK(epi == (ext_dim(1, rv.s(), x) == 0));
        CHECK(in_s_perp(rv, x) == (mono && epi));
    }
}

TEST_CASE("ext transport report is clean on the corpus") {
    auto rv = view("abzero-ext-p1");
    auto& ctx = rv.ctx();
    std::mt19937_64 rng(41);
    for (int i = 0; i < 4; ++i) {
        auto x = random_module(ctx.extended, rng);
        auto y = random_module(ctx.extended, rng);
        auto m = random_module(ctx.base, rng);
        for (auto& item : ext_transport_report(rv, x, y, m, 3))
            if (item.applicable) CHECK_MESSAGE(item.pass, item.label, ": ", item.detail);
    }
}

TEST_CASE("inflate builds powers of S") {
    auto rv = view("a2-ext-p1");
    auto s3 = inflate(rv.ctx(), 3);
    CHECK(s3.dim(rv.ctx().omega) == 3);
    CHECK(s3.total_dim() == 3);
    CHECK(v_dim(rv.ctx(), s3) == 3);
    CHECK(u_dim(rv.ctx(), s3) == 3);
}
