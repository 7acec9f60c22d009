#include "opext/rep.hpp"

#include <sstream>

namespace opext {

Representation::Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> maps)
    : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(maps)) {
    validate();
}

std::size_t Representation::total_dim() const {
    std::size_t s = 0;
    for (int d : dims_) s += d;
    return s;
}

bool Representation::is_zero() const { return total_dim() == 0; }

Matrix Representation::evaluate(const Path& p) const {
    const Quiver& q = alg_->quiver();
    Matrix m = Matrix::identity(alg_->field(), dims_[p.source]);
    for (int a : p.arrows) m = maps_[a] * m;
    (void)q;
    return m;
}

Matrix Representation::evaluate(const PathCombo& c, int src, int tgt) const {
    Matrix m = Matrix::zero(alg_->field(), dims_[tgt], dims_[src]);
    for (const auto& t : c) {
        if (t.path.source != src || t.path.target(alg_->quiver()) != tgt)
            throw AlgebraMismatch("path combination is not parallel to the requested shape");
        m = m + evaluate(t.path).scaled(t.coeff);
    }
    return m;
}

void Representation::validate() const {
    if (!alg_) throw AlgebraMismatch("representation without an algebra");
    const Quiver& q = alg_->quiver();
    if (dims_.size() != q.vertices.size() || maps_.size() != q.arrows.size())
        throw AlgebraMismatch("representation shape does not match the quiver");
    for (int d : dims_)
        if (d < 0) throw AlgebraMismatch("negative dimension");
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const Matrix& m = maps_[a];
        if (static_cast<int>(m.rows()) != dims_[q.arrows[a].tgt] ||
            static_cast<int>(m.cols()) != dims_[q.arrows[a].src])
            throw AlgebraMismatch("arrow matrix has the wrong shape");
    }
    for (const auto& r : alg_->relations()) {
        int src = r.terms.front().path.source;
        int tgt = r.terms.front().path.target(q);
        if (!evaluate(r.terms, src, tgt).is_zero())
            throw RelationViolation("a defining relation does not act by zero");
    }
}

std::string Representation::sort_key() const {
    std::ostringstream os;
    os << total_dim() << '|';
    for (int d : dims_) os << d << ',';
    os << '|';
    for (const auto& m : maps_) os << m.str() << ';';
    return os.str();
}

Representation Representation::zero(AlgebraPtr alg) {
    std::vector<int> dims(alg->num_vertices(), 0);
    std::vector<Matrix> maps;
    for (const auto& a : alg->quiver().arrows) {
        (void)a;
        maps.push_back(Matrix::zero(alg->field(), 0, 0));
    }
    return Representation(std::move(alg), std::move(dims), std::move(maps));
}

void require_same_algebra(const Representation& m, const Representation& n) {
    if (m.algebra() == n.algebra()) return;
    if (!m.algebra() || !n.algebra() || !m.algebra()->same_presentation(*n.algebra()))
        throw AlgebraMismatch("modules live over different algebras");
}

ModuleMap::ModuleMap(Representation source, Representation target, std::vector<Matrix> maps)
    : src_(std::move(source)), tgt_(std::move(target)), maps_(std::move(maps)) {
    validate();
}

void ModuleMap::validate() const {
    require_same_algebra(src_, tgt_);
    const Quiver& q = src_.algebra()->quiver();
    if (maps_.size() != q.vertices.size()) throw AlgebraMismatch("map shape does not match the quiver");
    for (std::size_t v = 0; v < maps_.size(); ++v)
        if (static_cast<int>(maps_[v].rows()) != tgt_.dim(v) || static_cast<int>(maps_[v].cols()) != src_.dim(v))
            throw AlgebraMismatch("vertex matrix has the wrong shape");
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        if (!(tgt_.arrow_map(a) * maps_[s] == maps_[t] * src_.arrow_map(a)))
            throw AlgebraMismatch("vertex matrices do not commute with an arrow action");
    }
}

bool ModuleMap::is_zero() const {
    for (const auto& m : maps_)
        if (!m.is_zero()) return false;
    return true;
}

bool ModuleMap::is_injective() const {
    for (std::size_t v = 0; v < maps_.size(); ++v)
        if (rank(maps_[v]) != static_cast<std::size_t>(src_.dim(v))) return false;
    return true;
}

bool ModuleMap::is_surjective() const {
    for (std::size_t v = 0; v < maps_.size(); ++v)
        if (rank(maps_[v]) != static_cast<std::size_t>(tgt_.dim(v))) return false;
    return true;
}

bool ModuleMap::is_isomorphism() const {
    for (std::size_t v = 0; v < maps_.size(); ++v)
        if (src_.dim(v) != tgt_.dim(v)) return false;
    return is_injective();
}

ModuleMap ModuleMap::zero(const Representation& source, const Representation& target) {
    std::vector<Matrix> maps;
    for (int v = 0; v < source.algebra()->num_vertices(); ++v)
        maps.push_back(Matrix::zero(source.algebra()->field(), target.dim(v), source.dim(v)));
    return ModuleMap(source, target, std::move(maps));
}

ModuleMap ModuleMap::identity(const Representation& m) {
    std::vector<Matrix> maps;
    for (int v = 0; v < m.algebra()->num_vertices(); ++v)
        maps.push_back(Matrix::identity(m.algebra()->field(), m.dim(v)));
    return ModuleMap(m, m, std::move(maps));
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < f.vertex_maps().size(); ++v) maps.push_back(g.vertex_map(v) * f.vertex_map(v));
    return ModuleMap(f.source(), g.target(), std::move(maps));
}

ModuleMap add(const ModuleMap& f, const ModuleMap& g) {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < f.vertex_maps().size(); ++v) maps.push_back(f.vertex_map(v) + g.vertex_map(v));
    return ModuleMap(f.source(), f.target(), std::move(maps));
}

ModuleMap scale(const mpq_class& c, const ModuleMap& f) {
    std::vector<Matrix> maps;
    for (const auto& m : f.vertex_maps()) maps.push_back(m.scaled(c));
    return ModuleMap(f.source(), f.target(), std::move(maps));
}

DirectSum direct_sum(const std::vector<Representation>& parts) {
    if (parts.empty()) throw AlgebraMismatch("direct sum of an empty family needs an algebra");
    AlgebraPtr alg = parts.front().algebra();
    for (const auto& p : parts) require_same_algebra(parts.front(), p);
    Field f = alg->field();
    int nv = alg->num_vertices();

    std::vector<int> dims(nv, 0);
    std::vector<std::vector<int>> offsets(parts.size(), std::vector<int>(nv, 0));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int v = 0; v < nv; ++v) {
            offsets[i][v] = dims[v];
            dims[v] += parts[i].dim(v);
        }

    std::vector<Matrix> maps;
    const Quiver& q = alg->quiver();
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        Matrix m = Matrix::zero(f, dims[q.arrows[a].tgt], dims[q.arrows[a].src]);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const Matrix& b = parts[i].arrow_map(a);
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    m.set(offsets[i][q.arrows[a].tgt] + r, offsets[i][q.arrows[a].src] + c, b.at(r, c));
        }
        maps.push_back(std::move(m));
    }

    DirectSum out;
    out.sum = Representation(alg, dims, std::move(maps));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<Matrix> inc, prj;
        for (int v = 0; v < nv; ++v) {
            Matrix in = Matrix::zero(f, dims[v], parts[i].dim(v));
            Matrix pr = Matrix::zero(f, parts[i].dim(v), dims[v]);
            for (int r = 0; r < parts[i].dim(v); ++r) {
                in.set(offsets[i][v] + r, r, 1);
                pr.set(r, offsets[i][v] + r, 1);
            }
            inc.push_back(std::move(in));
            prj.push_back(std::move(pr));
        }
        out.inclusions.emplace_back(parts[i], out.sum, std::move(inc));
        out.projections.emplace_back(out.sum, parts[i], std::move(prj));
    }
    return out;
}

Matrix flatten_map(const ModuleMap& f) {
    std::size_t n = 0;
    for (const auto& m : f.vertex_maps()) n += m.rows() * m.cols();
    Matrix col = Matrix::zero(f.source().algebra()->field(), n, 1);
    std::size_t k = 0;
    for (const auto& m : f.vertex_maps())
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) col.set(k++, 0, m.at(r, c));
    return col;
}

}  // namespace opext
