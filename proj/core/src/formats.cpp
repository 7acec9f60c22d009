#include "opext/formats.hpp"

#include <fstream>
#include <sstream>

namespace opext {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokenize(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int find_vertex(const Quiver& q, const std::string& name) {
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
        if (q.vertices[i] == name) return static_cast<int>(i);
    return -1;
}

int find_arrow(const Quiver& q, const std::string& name) {
    for (std::size_t i = 0; i < q.arrows.size(); ++i)
        if (q.arrows[i].id == name) return static_cast<int>(i);
    return -1;
}

mpq_class parse_rational(const std::string& s, std::size_t line) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) fail(line, "bad rational '" + s + "'");
    if (q.get_den() == 0) fail(line, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

Path parse_path(const std::string& s, const Quiver& q, std::size_t line) {
    Path p;
    std::string name;
    std::vector<int> arrows;
    std::istringstream in(s);
    while (std::getline(in, name, '.')) {
        int a = find_arrow(q, name);
        if (a < 0) fail(line, "unknown arrow '" + name + "'");
        arrows.push_back(a);
    }
    if (arrows.empty()) fail(line, "empty path");
    p.source = q.arrows[arrows.front()].src;
    p.arrows = std::move(arrows);
    return p;
}

std::string rational_str(const mpq_class& x) { return x.get_str(); }

std::string path_str(const Path& p, const Quiver& q) {
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i)
        s += (i ? "." : "") + q.arrows[p.arrows[i]].id;
    return s;
}

std::string matrix_str(const Matrix& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) s += ",";
        s += "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += ",";
            s += rational_str(m.at(r, c));
        }
        s += "]";
    }
    return s + "]";
}

Matrix parse_matrix(const std::string& s, const Field& field, std::size_t line) {
    std::vector<std::vector<mpq_class>> rows;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c) fail(line, std::string("expected '") + c + "' in matrix");
        ++i;
    };
    expect('[');
    skip_ws();
    while (i < s.size() && s[i] != ']') {
        expect('[');
        std::vector<mpq_class> row;
        skip_ws();
        while (i < s.size() && s[i] != ']') {
            std::size_t start = i;
            while (i < s.size() && s[i] != ',' && s[i] != ']') ++i;
            std::string entry = s.substr(start, i - start);
            while (!entry.empty() && std::isspace(static_cast<unsigned char>(entry.back())))
                entry.pop_back();
            row.push_back(parse_rational(entry, line));
            skip_ws();
            if (i < s.size() && s[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        expect(']');
        rows.push_back(std::move(row));
        skip_ws();
        if (i < s.size() && s[i] == ',') {
            ++i;
            skip_ws();
        }
    }
    expect(']');
    skip_ws();
    if (i != s.size()) fail(line, "trailing characters after matrix");

    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) fail(line, "ragged matrix rows");
    Matrix m(field, rows.size(), cols);
    FieldOps ops(field);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, ops.canon(rows[r][c]));
    return m;
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

QuiverFile parse_quiver_text(const std::string& text) {
    QuiverFile out;
    bool field_seen = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "field") {
            if (field_seen) fail(lineno, "duplicate field line");
            field_seen = true;
            if (toks.size() == 2 && toks[1] == "Q") {
                out.field = Field::rationals();
            } else if (toks.size() == 3 && toks[1] == "F") {
                unsigned long p = 0;
                try {
                    p = std::stoul(toks[2]);
                } catch (const std::exception&) {
                    fail(lineno, "bad modulus '" + toks[2] + "'");
                }
                if (!is_prime(p)) fail(lineno, "modulus " + toks[2] + " is not prime");
                out.field = Field::prime(p);
            } else {
                fail(lineno, "expected 'field Q' or 'field F <p>'");
            }
        } else if (kw == "vertex") {
            if (toks.size() != 2) fail(lineno, "expected 'vertex <id>'");
            if (find_vertex(out.quiver, toks[1]) >= 0) fail(lineno, "duplicate vertex '" + toks[1] + "'");
            out.quiver.vertices.push_back(toks[1]);
        } else if (kw == "arrow") {
            if (toks.size() != 4) fail(lineno, "expected 'arrow <id> <src> <tgt>'");
            if (find_arrow(out.quiver, toks[1]) >= 0) fail(lineno, "duplicate arrow '" + toks[1] + "'");
            int s = find_vertex(out.quiver, toks[2]);
            int t = find_vertex(out.quiver, toks[3]);
            if (s < 0) fail(lineno, "unknown vertex '" + toks[2] + "'");
            if (t < 0) fail(lineno, "unknown vertex '" + toks[3] + "'");
            out.quiver.arrows.push_back({toks[1], s, t});
        } else if (kw == "relation") {
            if (toks.size() < 2 || toks.size() % 2 != 0)
                fail(lineno, "expected 'relation <coeff>*<path> [+|- <coeff>*<path> ...]'");
            Relation rel;
            FieldOps ops(out.field);
            for (std::size_t i = 1; i < toks.size();) {
                mpq_class sign = 1;
                if (i > 1) {
                    if (toks[i] == "+") {
                        sign = 1;
                    } else if (toks[i] == "-") {
                        sign = -1;
                    } else {
                        fail(lineno, "expected '+' or '-' between relation terms");
                    }
                    if (++i >= toks.size()) fail(lineno, "dangling sign in relation");
                }
                const std::string& term = toks[i++];
                auto star = term.find('*');
                if (star == std::string::npos) fail(lineno, "expected <coeff>*<path>");
                mpq_class coeff = sign * parse_rational(term.substr(0, star), lineno);
                Path p = parse_path(term.substr(star + 1), out.quiver, lineno);
                rel.terms.push_back({ops.canon(coeff), p});
            }
            rel.validate(out.quiver);
            out.relations.push_back(std::move(rel));
        } else {
            fail(lineno, "unknown directive '" + kw + "'");
        }
    }
    if (!field_seen) throw ParseError("missing 'field' line");
    out.quiver.validate();
    return out;
}

AlgebraPtr algebra_from_text(const std::string& text, std::size_t max_path_length) {
    QuiverFile f = parse_quiver_text(text);
    return std::make_shared<const Algebra>(
        Algebra::build(f.field, std::move(f.quiver), std::move(f.relations), max_path_length));
}

std::string serialize_algebra(const Algebra& a) {
    std::string s;
    if (a.field().is_rational())
        s += "field Q\n";
    else
        s += "field F " + std::to_string(a.field().p) + "\n";
    for (const auto& v : a.quiver().vertices) s += "vertex " + v + "\n";
    for (const auto& ar : a.quiver().arrows)
        s += "arrow " + ar.id + " " + a.quiver().vertices[ar.src] + " " +
             a.quiver().vertices[ar.tgt] + "\n";
    for (const auto& rel : a.relations()) {
        s += "relation";
        bool first = true;
        for (const auto& term : rel.terms) {
            mpq_class c = term.coeff;
            if (first) {
                s += " ";
            } else if (c < 0) {
                s += " - ";
                c = -c;
            } else {
                s += " + ";
            }
            s += rational_str(c) + "*" + path_str(term.path, a.quiver());
            first = false;
        }
        s += "\n";
    }
    return s;
}

std::string algebra_fingerprint(const Algebra& a) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(serialize_algebra(a))));
    return buf;
}

Representation parse_rep_text(const std::string& text, const AlgebraPtr& alg) {
    const Quiver& q = alg->quiver();
    std::vector<int> dims(q.vertices.size(), -1);
    std::vector<Matrix> maps(q.arrows.size(), Matrix(alg->field(), 0, 0));
    std::vector<char> have_map(q.arrows.size(), 0);
    bool header_seen = false;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "module") {
            if (toks.size() != 3 || toks[1] != "over") fail(lineno, "expected 'module over <hash>'");
            if (toks[2] != algebra_fingerprint(*alg))
                fail(lineno, "module written for a different algebra (fingerprint " + toks[2] +
                                 ", expected " + algebra_fingerprint(*alg) + ")");
            header_seen = true;
        } else if (toks[0] == "dim") {
            std::string rest;
            for (std::size_t i = 1; i < toks.size(); ++i) rest += toks[i];
            auto eq = rest.find('=');
            if (eq == std::string::npos) fail(lineno, "expected 'dim <vertex>=<n>'");
            int v = find_vertex(q, rest.substr(0, eq));
            if (v < 0) fail(lineno, "unknown vertex '" + rest.substr(0, eq) + "'");
            int n = -1;
            try {
                n = std::stoi(rest.substr(eq + 1));
            } catch (const std::exception&) {
                n = -1;
            }
            if (n < 0) fail(lineno, "bad dimension '" + rest.substr(eq + 1) + "'");
            dims[v] = n;
        } else if (toks[0] == "map") {
            if (toks.size() < 4 || toks[2] != "=") fail(lineno, "expected 'map <arrow> = [[...]]'");
            int a = find_arrow(q, toks[1]);
            if (a < 0) fail(lineno, "unknown arrow '" + toks[1] + "'");
            std::string body;
            for (std::size_t i = 3; i < toks.size(); ++i) body += toks[i];
            maps[a] = parse_matrix(body, alg->field(), lineno);
            have_map[a] = 1;
        } else {
            fail(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!header_seen) throw ParseError("missing 'module over <hash>' line");
    for (std::size_t v = 0; v < dims.size(); ++v)
        if (dims[v] < 0) throw ParseError("missing 'dim " + q.vertices[v] + "=...' line");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        std::size_t rows = static_cast<std::size_t>(dims[q.arrows[a].tgt]);
        std::size_t cols = static_cast<std::size_t>(dims[q.arrows[a].src]);
        if (!have_map[a]) {
            if (rows != 0 && cols != 0)
                throw ParseError("missing 'map " + q.arrows[a].id + " = ...' line");
            maps[a] = Matrix(alg->field(), rows, cols);
        } else if (maps[a].rows() != rows || maps[a].cols() != cols) {
            // A serialized zero-row or zero-column matrix carries no shape;
            // resize silently when one side is empty, reject otherwise.
            if (maps[a].rows() == 0 || maps[a].cols() == 0) {
                if (rows == 0 || cols == 0 || (maps[a].rows() == 0 && maps[a].cols() == 0))
                    maps[a] = Matrix(alg->field(), rows, cols);
            }
            if (maps[a].rows() != rows || maps[a].cols() != cols)
                throw ParseError("map " + q.arrows[a].id + " has shape " +
                                 std::to_string(maps[a].rows()) + "x" +
                                 std::to_string(maps[a].cols()) + ", expected " +
                                 std::to_string(rows) + "x" + std::to_string(cols));
        }
    }
    Representation m(alg, std::move(dims), std::move(maps));
    m.validate();  // RelationViolation if the relations fail
    return m;
}

std::string serialize_rep(const Representation& m) {
    const Quiver& q = m.algebra()->quiver();
    std::string s = "module over " + algebra_fingerprint(*m.algebra()) + "\n";
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        s += "dim " + q.vertices[v] + "=" + std::to_string(m.dim(static_cast<int>(v))) + "\n";
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const Matrix& mat = m.arrow_map(static_cast<int>(a));
        if (mat.rows() == 0 || mat.cols() == 0) continue;
        s += "map " + q.arrows[a].id + " = " + matrix_str(mat) + "\n";
    }
    return s;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace opext
