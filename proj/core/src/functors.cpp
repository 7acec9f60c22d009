#include "opext/functors.hpp"

namespace opext {

namespace {

// Extended-quiver arrow indices of the base arrows, in base declaration order.
std::vector<int> old_arrow_indices(const ExtensionContext& ctx) {
    std::vector<char> is_new(ctx.extended->quiver().arrows.size(), 0);
    for (const auto& na : ctx.new_arrows) is_new[na.arrow] = 1;
    std::vector<int> out;
    for (std::size_t a = 0; a < is_new.size(); ++a)
        if (!is_new[a]) out.push_back(static_cast<int>(a));
    return out;
}

void require_extended(const ExtensionContext& ctx, const Representation& x) {
    if (x.algebra() != ctx.extended && !x.algebra()->same_presentation(*ctx.extended))
        throw AlgebraMismatch("module does not live over the extended algebra");
}

void require_base(const ExtensionContext& ctx, const Representation& m) {
    if (m.algebra() != ctx.base && !m.algebra()->same_presentation(*ctx.base))
        throw AlgebraMismatch("module does not live over the base algebra");
}

// Block offsets of oplus_j M_{i_j} (the extension-vertex component of E M).
std::vector<int> block_offsets(const ExtensionContext& ctx, const Representation& m) {
    std::vector<int> off{0};
    for (const auto& na : ctx.new_arrows) off.push_back(off.back() + m.dim(na.base_vertex));
    return off;
}

}  // namespace

Representation restrict_module(const ExtensionContext& ctx, const Representation& x) {
    require_extended(ctx, x);
    int nb = ctx.base->num_vertices();
    std::vector<int> dims(x.dims().begin(), x.dims().begin() + nb);
    std::vector<Matrix> maps;
    for (int a : old_arrow_indices(ctx)) maps.push_back(x.arrow_map(a));
    return Representation(ctx.base, std::move(dims), std::move(maps));
}

ModuleMap restrict_map(const ExtensionContext& ctx, const ModuleMap& f) {
    int nb = ctx.base->num_vertices();
    std::vector<Matrix> maps(f.vertex_maps().begin(), f.vertex_maps().begin() + nb);
    return ModuleMap(restrict_module(ctx, f.source()), restrict_module(ctx, f.target()), std::move(maps));
}

Representation extend_module(const ExtensionContext& ctx, const Representation& m) {
    require_base(ctx, m);
    auto ea = ctx.extended;
    int nb = ctx.base->num_vertices();
    auto off = block_offsets(ctx, m);
    std::vector<int> dims = m.dims();
    dims.push_back(off.back());

    std::vector<Matrix> maps(ea->quiver().arrows.size(), Matrix());
    auto old_idx = old_arrow_indices(ctx);
    for (std::size_t k = 0; k < old_idx.size(); ++k) maps[old_idx[k]] = m.arrow_map(k);
    for (std::size_t j = 0; j < ctx.new_arrows.size(); ++j) {
        int i = ctx.new_arrows[j].base_vertex;
        Matrix p = Matrix::zero(ea->field(), m.dim(i), off.back());
        for (int r = 0; r < m.dim(i); ++r) p.set(r, off[j] + r, 1);
        maps[ctx.new_arrows[j].arrow] = std::move(p);
    }
    (void)nb;
    return Representation(ea, std::move(dims), std::move(maps));
}

ModuleMap extend_map(const ExtensionContext& ctx, const ModuleMap& f) {
    auto offs = block_offsets(ctx, f.source());
    auto offt = block_offsets(ctx, f.target());
    std::vector<Matrix> maps = f.vertex_maps();
    Matrix w = Matrix::zero(ctx.extended->field(), offt.back(), offs.back());
    for (std::size_t j = 0; j < ctx.new_arrows.size(); ++j) {
        const Matrix& b = f.vertex_map(ctx.new_arrows[j].base_vertex);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) w.set(offt[j] + r, offs[j] + c, b.at(r, c));
    }
    maps.push_back(std::move(w));
    return ModuleMap(extend_module(ctx, f.source()), extend_module(ctx, f.target()), std::move(maps));
}

Representation embed_module(const ExtensionContext& ctx, const Representation& m) {
    require_base(ctx, m);
    auto ea = ctx.extended;
    std::vector<int> dims = m.dims();
    dims.push_back(0);
    std::vector<Matrix> maps(ea->quiver().arrows.size(), Matrix());
    auto old_idx = old_arrow_indices(ctx);
    for (std::size_t k = 0; k < old_idx.size(); ++k) maps[old_idx[k]] = m.arrow_map(k);
    for (const auto& na : ctx.new_arrows)
        maps[na.arrow] = Matrix::zero(ea->field(), m.dim(na.base_vertex), 0);
    return Representation(ea, std::move(dims), std::move(maps));
}

ModuleMap embed_map(const ExtensionContext& ctx, const ModuleMap& f) {
    std::vector<Matrix> maps = f.vertex_maps();
    maps.push_back(Matrix::zero(ctx.extended->field(), 0, 0));
    return ModuleMap(embed_module(ctx, f.source()), embed_module(ctx, f.target()), std::move(maps));
}

int u_dim(const ExtensionContext& ctx, const Representation& x) {
    require_extended(ctx, x);
    return x.dim(ctx.omega);
}

int v_dim(const ExtensionContext& ctx, const Representation& x) {
    require_extended(ctx, x);
    Matrix stack = Matrix::zero(ctx.extended->field(), 0, x.dim(ctx.omega));
    for (const auto& na : ctx.new_arrows) stack = stack.vstack(x.arrow_map(na.arrow));
    return x.dim(ctx.omega) - static_cast<int>(rank(stack));
}

Representation inflate(const ExtensionContext& ctx, int n) {
    auto ea = ctx.extended;
    std::vector<int> dims(ea->num_vertices(), 0);
    dims[ctx.omega] = n;
    std::vector<Matrix> maps;
    for (const auto& a : ea->quiver().arrows)
        maps.push_back(Matrix::zero(ea->field(), dims[a.tgt], dims[a.src]));
    return Representation(ea, std::move(dims), std::move(maps));
}

CanonicalSequence restriction_sequence(const ExtensionContext& ctx, const Representation& x) {
    Representation lrx = embed_module(ctx, restrict_module(ctx, x));
    int u = u_dim(ctx, x);
    Representation su = inflate(ctx, u);

    std::vector<Matrix> in, pr;
    for (int v = 0; v < ctx.extended->num_vertices(); ++v) {
        if (v == ctx.omega) {
            in.push_back(Matrix::zero(ctx.extended->field(), x.dim(v), 0));
            pr.push_back(Matrix::identity(ctx.extended->field(), u));
        } else {
            in.push_back(Matrix::identity(ctx.extended->field(), x.dim(v)));
            pr.push_back(Matrix::zero(ctx.extended->field(), 0, x.dim(v)));
        }
    }
    CanonicalSequence out;
    out.kind = CanonicalSequence::Kind::RestrictionSeq;
    out.seq.incl = ModuleMap(lrx, x, std::move(in));
    out.seq.proj = ModuleMap(x, su, std::move(pr));
    out.s_multiplicity = u;
    validate_ses(out.seq);
    return out;
}

CanonicalSequence extension_sequence(const ExtensionContext& ctx, const Representation& m) {
    Representation em = extend_module(ctx, m);
    Representation lm = embed_module(ctx, m);
    int h = em.dim(ctx.omega);
    Representation sh = inflate(ctx, h);

    std::vector<Matrix> in, pr;
    for (int v = 0; v < ctx.extended->num_vertices(); ++v) {
        if (v == ctx.omega) {
            in.push_back(Matrix::zero(ctx.extended->field(), h, 0));
            pr.push_back(Matrix::identity(ctx.extended->field(), h));
        } else {
            in.push_back(Matrix::identity(ctx.extended->field(), m.dim(v)));
            pr.push_back(Matrix::zero(ctx.extended->field(), 0, m.dim(v)));
        }
    }
    CanonicalSequence out;
    out.kind = CanonicalSequence::Kind::ExtensionSeq;
    out.seq.incl = ModuleMap(lm, em, std::move(in));
    out.seq.proj = ModuleMap(em, sh, std::move(pr));
    out.s_multiplicity = h;
    validate_ses(out.seq);
    return out;
}

ModuleMap unit_delta(const ExtensionContext& ctx, const Representation& x) {
    require_extended(ctx, x);
    Representation erx = extend_module(ctx, restrict_module(ctx, x));
    std::vector<Matrix> maps;
    for (int v = 0; v < ctx.extended->num_vertices(); ++v) {
        if (v == ctx.omega) {
            Matrix stack = Matrix::zero(ctx.extended->field(), 0, x.dim(ctx.omega));
            for (const auto& na : ctx.new_arrows) stack = stack.vstack(x.arrow_map(na.arrow));
            maps.push_back(std::move(stack));
        } else {
            maps.push_back(Matrix::identity(ctx.extended->field(), x.dim(v)));
        }
    }
    return ModuleMap(x, erx, std::move(maps));
}

RecollementView::RecollementView(ExtensionContext ctx) : ctx_(std::move(ctx)) {
    s_ = simple_module(ctx_.extended, ctx_.omega);
    if (!is_injective_module(s_)) throw Error("extension-vertex simple is not injective");
    auto pd = projective_dimension(s_);
    if (!pd || *pd > 1) throw Error("extension-vertex simple has projective dimension > 1");
    // rad of the projective at the extension vertex restricts to P0
    Representation ptilde = projective_module(ctx_.extended, ctx_.omega);
    Representation radp = restrict_module(ctx_, radical(ptilde).rep);
    std::vector<int> p0v;
    for (int i = 0; i < ctx_.base->num_vertices(); ++i)
        for (int c = 0; c < ctx_.p0_multiplicities[i]; ++c) p0v.push_back(i);
    Representation p0 = projective_sum(ctx_.base, p0v).rep;
    if (!is_isomorphic(radp, p0, 17)) throw Error("radical of the extension projective is not P0");
}

bool in_s_perp(const RecollementView& rv, const Representation& x) {
    const ExtensionContext& ctx = rv.ctx();
    ModuleMap d = unit_delta(ctx, x);
    const Matrix& w = d.vertex_map(ctx.omega);
    bool bij = w.rows() == w.cols() && rank(w) == w.rows();
    bool direct = hom_dim(rv.s(), x) == 0 && ext_dim(1, rv.s(), x) == 0;
    if (bij != direct) throw Error("S-perp criteria disagree");
    return bij;
}

std::vector<ExtTransportItem> ext_transport_report(const RecollementView& rv,
                                                   const Representation& x,
                                                   const Representation& y,
                                                   const Representation& m, int j_max) {
    const ExtensionContext& ctx = rv.ctx();
    std::vector<ExtTransportItem> out;
    Representation em = extend_module(ctx, m);
    Representation rx = restrict_module(ctx, x);
    Representation ry = restrict_module(ctx, y);

    {
        ExtTransportItem it;
        it.label = "ext(EM,X)=ext(M,RX) for X in S-perp";
        it.applicable = in_s_perp(rv, x);
        if (it.applicable)
            for (int j = 0; j <= j_max; ++j) {
                std::size_t a = ext_dim(j, em, x), b = ext_dim(j, m, rx);
                if (a != b) {
                    it.pass = false;
                    it.detail = "degree " + std::to_string(j) + ": " + std::to_string(a) +
                                " != " + std::to_string(b);
                    break;
                }
            }
        out.push_back(it);
    }
    {
        ExtTransportItem it;
        it.label = "ext(X,EM)=ext(RX,M)";
        for (int j = 0; j <= j_max; ++j) {
            std::size_t a = ext_dim(j, x, em), b = ext_dim(j, rx, m);
            if (a != b) {
                it.pass = false;
                it.detail = "degree " + std::to_string(j) + ": " + std::to_string(a) +
                            " != " + std::to_string(b);
                break;
            }
        }
        out.push_back(it);
    }
    {
        ExtTransportItem it;
        it.label = "ext1(X,Y)->ext1(RX,RY) surjective";
        Ext1Setup sb = ext1_setup(rx, ry);
        if (!sb.cocycles.empty()) {
            Ext1Setup sa = ext1_setup(x, y);
            std::size_t flat = sb.cocycle_flats.rows();
            Matrix imgs = Matrix::zero(x.algebra()->field(), sb.cocycles.size(), 0);
            for (std::size_t i = 0; i < sa.cocycles.size(); ++i) {
                std::vector<mpq_class> e(sa.cocycles.size(), 0);
                e[i] = 1;
                ShortExact ses = realize_ext1(sa, e);
                ShortExact rses{restrict_map(ctx, ses.incl), restrict_map(ctx, ses.proj)};
                auto coords = classify_ext1(sb, rses);
                Matrix col = Matrix::zero(x.algebra()->field(), coords.size(), 1);
                for (std::size_t k = 0; k < coords.size(); ++k) col.set(k, 0, coords[k]);
                imgs = imgs.hstack(col);
            }
            (void)flat;
            if (rank(imgs) != sb.cocycles.size()) {
                it.pass = false;
                it.detail = "image rank " + std::to_string(rank(imgs)) + " < " +
                            std::to_string(sb.cocycles.size());
            }
        }
        out.push_back(it);
    }
    {
        ExtTransportItem it;
        it.label = "ext_j(X,Y)=ext_j(RX,RY) for j>=2";
        for (int j = 2; j <= j_max; ++j) {
            std::size_t a = ext_dim(j, x, y), b = ext_dim(j, rx, ry);
            if (a != b) {
                it.pass = false;
                it.detail = "degree " + std::to_string(j) + ": " + std::to_string(a) +
                            " != " + std::to_string(b);
                break;
            }
        }
        out.push_back(it);
    }
    return out;
}

}  // namespace opext
