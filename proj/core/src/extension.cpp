#include "opext/extension.hpp"

#include <set>

namespace opext {

std::vector<int> ExtensionContext::p0_dims() const {
    auto pd = base->projective_dims();
    int n = base->num_vertices();
    std::vector<int> d(n, 0);
    for (int i = 0; i < n; ++i)
        for (int w = 0; w < n; ++w) d[w] += p0_multiplicities[i] * pd[i][w];
    return d;
}

std::size_t ExtensionContext::p0_dim() const {
    std::size_t s = 0;
    for (int d : p0_dims()) s += d;
    return s;
}

ExtensionContext one_point_extension(const AlgebraPtr& base, const std::vector<int>& mult) {
    if (mult.size() != base->quiver().vertices.size())
        throw UnknownVertex("multiplicity vector length does not match the vertex count");
    for (int m : mult)
        if (m < 0) throw ParseError("negative multiplicity");

    ExtensionContext ctx;
    ctx.base = base;
    ctx.p0_multiplicities = mult;

    Quiver q = base->quiver();
    std::set<std::string> taken(q.vertices.begin(), q.vertices.end());
    for (const auto& a : q.arrows) taken.insert(a.id);
    std::string omega_name = "w";
    while (taken.count(omega_name)) omega_name += "_";
    int omega = static_cast<int>(q.vertices.size());
    q.vertices.push_back(omega_name);

    for (int i = 0; i < base->num_vertices(); ++i)
        for (int c = 0; c < mult[i]; ++c) {
            std::string id = "al_" + base->quiver().vertices[i] + "_" + std::to_string(c);
            while (taken.count(id)) id += "_";
            taken.insert(id);
            ctx.new_arrows.push_back({static_cast<int>(q.arrows.size()), i, c});
            q.arrows.push_back({id, omega, i});
        }

    ctx.omega = omega;
    ctx.extended = std::make_shared<Algebra>(Algebra::build(base->field(), q, base->relations(), base->bound() + 1));

    if (ctx.extended->dim() != base->dim() + ctx.p0_dim() + 1)
        throw Error("one-point extension dimension invariant violated");
    return ctx;
}

ExtensionContext context_from_extended(const AlgebraPtr& extended, int omega) {
    const Quiver& q = extended->quiver();
    if (omega < 0 || omega >= extended->num_vertices()) throw UnknownVertex("extension vertex out of range");
    for (const auto& a : q.arrows)
        if (a.tgt == omega) throw ParseError("extension vertex has incoming arrows");

    // Base quiver: drop omega and its arrows; omega must be last for the
    // index maps used by the functor layer to stay trivial.
    if (omega != extended->num_vertices() - 1)
        throw ParseError("extension vertex must be the last declared vertex");

    Quiver bq;
    bq.vertices.assign(q.vertices.begin(), q.vertices.end() - 1);
    std::vector<int> arrow_map(q.arrows.size(), -1);
    std::vector<ExtensionContext::NewArrow> new_arrows;
    std::vector<int> mult(bq.vertices.size(), 0);
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        if (a.src == omega) {
            new_arrows.push_back({static_cast<int>(ai), a.tgt, mult[a.tgt]});
            mult[a.tgt]++;
        } else {
            arrow_map[ai] = static_cast<int>(bq.arrows.size());
            bq.arrows.push_back(a);
        }
    }
    std::vector<Relation> brels;
    for (const auto& r : extended->relations()) {
        Relation br;
        for (const auto& t : r.terms) {
            Path p = t.path;
            if (p.source == omega) throw ParseError("relation passes through the extension vertex");
            for (int& a : p.arrows) {
                if (arrow_map[a] < 0) throw ParseError("relation uses an extension arrow");
                a = arrow_map[a];
            }
            br.terms.push_back({t.coeff, p});
        }
        brels.push_back(std::move(br));
    }

    ExtensionContext ctx;
    ctx.base = std::make_shared<Algebra>(Algebra::build(extended->field(), bq, brels, extended->bound()));
    ctx.p0_multiplicities = mult;
    ctx.extended = extended;
    ctx.omega = omega;
    ctx.new_arrows = std::move(new_arrows);
    if (ctx.extended->dim() != ctx.base->dim() + ctx.p0_dim() + 1)
        throw Error("extension context dimension invariant violated");
    return ctx;
}

}  // namespace opext
