#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "opext/decompose.hpp"
#include "opext/enumerate.hpp"
#include "opext/verify.hpp"

using namespace opext;

namespace {

Field parse_field(const std::string& s) {
    if (s == "Q" || s.empty()) return Field::rationals();
    if (s.size() >= 2 && s[0] == 'F') return Field::prime(std::stoul(s.substr(1)));
    throw ParseError("bad field '" + s + "' (expected Q or F<p>)");
}

std::vector<int> parse_p0(const std::string& spec, const Quiver& q) {
    std::vector<int> mult(q.vertices.size(), 0);
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("bad --p0 entry '" + item + "'");
        int v = q.vertex_index(item.substr(0, colon));  // throws UnknownVertex
        mult[v] = std::stoi(item.substr(colon + 1));
        if (mult[v] < 0) throw ParseError("negative multiplicity in '" + item + "'");
    }
    return mult;
}

AlgebraPtr load_algebra(const std::string& path, const std::string& field_flag,
                        std::size_t max_len) {
    QuiverFile f = parse_quiver_text(read_text_file(path));
    Field fld = field_flag.empty() ? f.field : parse_field(field_flag);
    return std::make_shared<const Algebra>(
        Algebra::build(fld, std::move(f.quiver), std::move(f.relations), max_len));
}

ExtensionContext context_for(const AlgebraPtr& extended, const std::string& omega_name) {
    int omega = omega_name.empty() ? extended->num_vertices() - 1
                                   : extended->quiver().vertex_index(omega_name);
    return context_from_extended(extended, omega);
}

std::string dims_str(const Representation& m) {
    std::string s = "(";
    for (std::size_t v = 0; v < m.dims().size(); ++v)
        s += (v ? "," : "") + std::to_string(m.dim(v));
    return s + ")";
}

void print_verdict(const std::string& label, const Verdict& v) {
    std::cout << label << ": " << (v.pass ? "yes" : "no") << "\n";
    for (const auto& c : v.clauses) {
        std::cout << "  [" << (c.checked ? (c.pass ? "pass" : "FAIL") : "auto") << "] " << c.name;
        if (!c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"one-point extension algebra workbench"};
    app.require_subcommand(1);

    // ------------------------------------------------------------ algebra
    auto* alg_cmd = app.add_subcommand("algebra", "presentation-level operations");
    alg_cmd->require_subcommand(1);
    std::string alg_file, p0_spec, field_flag;
    std::size_t max_len = 12;

    auto* alg_check = alg_cmd->add_subcommand("check", "parse, validate, re-serialize");
    alg_check->add_option("file", alg_file)->required();
    alg_check->add_option("--max-path-length", max_len);
    alg_check->callback([&] {
        AlgebraPtr a = load_algebra(alg_file, "", max_len);
        std::cout << serialize_algebra(*a);
        std::cout << "# dim " << a->dim() << "\n# fingerprint " << algebra_fingerprint(*a) << "\n";
    });

    auto* alg_extend = alg_cmd->add_subcommand("extend", "emit the one-point extension");
    alg_extend->add_option("file", alg_file)->required();
    alg_extend->add_option("--p0", p0_spec, "vertex:multiplicity,... of P0")->required();
    alg_extend->add_option("--max-path-length", max_len);
    alg_extend->callback([&] {
        AlgebraPtr base = load_algebra(alg_file, "", max_len);
        ExtensionContext ctx = one_point_extension(base, parse_p0(p0_spec, base->quiver()));
        std::cout << serialize_algebra(*ctx.extended);
        std::cout << "# dim " << ctx.extended->dim() << "\n# fingerprint "
                  << algebra_fingerprint(*ctx.extended) << "\n";
    });

    // ------------------------------------------------------------- module
    auto* mod_cmd = app.add_subcommand("module", "single-module analysis");
    std::string rep_file;
    auto* mod_analyze = mod_cmd->add_subcommand("analyze", "dims, top, socle, pd, tau, summands");
    mod_analyze->add_option("algebra", alg_file)->required();
    mod_analyze->add_option("module", rep_file)->required();
    mod_analyze->callback([&] {
        AlgebraPtr a = load_algebra(alg_file, "", max_len);
        Representation m = parse_rep_text(read_text_file(rep_file), a);
        std::cout << "dims " << dims_str(m) << "\n";
        std::cout << "top " << dims_str(top(m).rep) << "\n";
        std::cout << "socle " << dims_str(socle(m).rep) << "\n";
        auto pd = projective_dimension(m);
        std::cout << "pd " << (pd ? std::to_string(*pd) : std::string("inf")) << "\n";
        std::cout << "tau " << dims_str(tau(m)) << "\n";
        std::cout << "summands";
        for (const auto& [part, mult] : decompose_grouped(m, 1))
            std::cout << " " << dims_str(part) << "x" << mult;
        std::cout << "\n";
    });

    // ------------------------------------------------------------ functor
    auto* fun_cmd = app.add_subcommand("functor", "restriction/extension functors");
    fun_cmd->require_subcommand(1);
    std::string omega_name;
    auto add_ext_side = [&](CLI::App* c) {
        c->add_option("algebra", alg_file, "extended algebra file")->required();
        c->add_option("module", rep_file)->required();
        c->add_option("--omega", omega_name, "extension vertex (default: last)");
    };
    auto* fr = fun_cmd->add_subcommand("restrict", "R: drop the extension vertex");
    add_ext_side(fr);
    fr->callback([&] {
        AlgebraPtr a = load_algebra(alg_file, "", max_len);
        ExtensionContext ctx = context_for(a, omega_name);
        Representation x = parse_rep_text(read_text_file(rep_file), a);
        std::cout << serialize_rep(restrict_module(ctx, x));
    });
    for (const char* name : {"u", "v"}) {
        auto* c = fun_cmd->add_subcommand(name, std::string(name) == "u"
                                                    ? "dimension at the extension vertex"
                                                    : "joint kernel of the new arrows");
        add_ext_side(c);
        std::string which = name;
        c->callback([&, which] {
            AlgebraPtr a = load_algebra(alg_file, "", max_len);
            ExtensionContext ctx = context_for(a, omega_name);
            Representation x = parse_rep_text(read_text_file(rep_file), a);
            std::cout << (which == "u" ? u_dim(ctx, x) : v_dim(ctx, x)) << "\n";
        });
    }
    auto* fd = fun_cmd->add_subcommand("delta", "unit map X -> E R X");
    add_ext_side(fd);
    fd->callback([&] {
        AlgebraPtr a = load_algebra(alg_file, "", max_len);
        ExtensionContext ctx = context_for(a, omega_name);
        Representation x = parse_rep_text(read_text_file(rep_file), a);
        ModuleMap d = unit_delta(ctx, x);
        Representation ker = kernel(d).rep, cok = cokernel(d).rep;
        std::cout << "kernel S-multiplicity " << ker.dim(ctx.omega) << "\n";
        std::cout << "cokernel S-multiplicity " << cok.dim(ctx.omega) << "\n";
        std::cout << (d.is_injective() ? "mono\n" : "") << (d.is_surjective() ? "epi\n" : "");
    });
    auto add_base_side = [&](CLI::App* c) {
        c->add_option("algebra", alg_file, "base algebra file")->required();
        c->add_option("module", rep_file)->required();
        c->add_option("--p0", p0_spec, "vertex:multiplicity,... of P0")->required();
    };
    auto* fe = fun_cmd->add_subcommand("extend", "E: adjoint extension");
    add_base_side(fe);
    fe->callback([&] {
        AlgebraPtr base = load_algebra(alg_file, "", max_len);
        ExtensionContext ctx = one_point_extension(base, parse_p0(p0_spec, base->quiver()));
        Representation m = parse_rep_text(read_text_file(rep_file), base);
        std::cout << serialize_rep(extend_module(ctx, m));
    });
    auto* fl = fun_cmd->add_subcommand("L", "zero-extension at the new vertex");
    add_base_side(fl);
    fl->callback([&] {
        AlgebraPtr base = load_algebra(alg_file, "", max_len);
        ExtensionContext ctx = one_point_extension(base, parse_p0(p0_spec, base->quiver()));
        Representation m = parse_rep_text(read_text_file(rep_file), base);
        std::cout << serialize_rep(embed_module(ctx, m));
    });

    // ---------------------------------------------------------- enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive listings");
    std::string enum_kind;
    int dim_bound = 12;
    enum_cmd->add_option("kind", enum_kind, "ind|tilting|stt|silting|cosilting")->required();
    enum_cmd->add_option("algebra", alg_file)->required();
    enum_cmd->add_option("--field", field_flag, "Q (default) or F<p>");
    enum_cmd->add_option("--dim-bound", dim_bound, "total-dimension bound for ind search");
    enum_cmd->callback([&] {
        AlgebraPtr a = load_algebra(alg_file, field_flag, max_len);
        auto ind = enumerate_indecomposables(a, dim_bound);
        if (enum_kind == "ind") {
            for (const auto& m : ind) std::cout << dims_str(m) << "\n";
            std::cout << "count " << ind.size() << "\n";
            return;
        }
        std::vector<SubcatSample> found;
        if (enum_kind == "tilting")
            found = enumerate_tilting(a, ind, TiltingMode::DefBBOS, 1);
        else if (enum_kind == "stt")
            found = enumerate_stt(a, ind, SttMode::Def61, 1);
        else if (enum_kind == "silting")
            found = enumerate_silting(a, ind, 1);
        else if (enum_kind == "cosilting")
            found = enumerate_cosilting(a, ind, 1);
        else
            throw ParseError("unknown enumeration kind '" + enum_kind + "'");
        for (const auto& t : found) {
            for (std::size_t i = 0; i < t.generators.size(); ++i)
                std::cout << (i ? " " : "") << dims_str(t.generators[i]);
            if (t.generators.empty()) std::cout << "(zero object)";
            std::cout << "\n";
        }
        std::cout << "count " << found.size() << "\n";
    });

    // -------------------------------------------------------------- check
    auto* check_cmd = app.add_subcommand("check", "certify a module or module list");
    std::string check_kind;
    std::vector<std::string> check_reps;
    check_cmd->add_option("kind", check_kind, "tilting|stt|silting|cosilting|quasi-tilting")
        ->required();
    check_cmd->add_option("algebra", alg_file)->required();
    check_cmd->add_option("modules", check_reps, ".rep files; summands are split off")
        ->required();
    check_cmd->add_option("--field", field_flag);
    bool check_failed = false;
    check_cmd->callback([&] {
        AlgebraPtr a = load_algebra(alg_file, field_flag, max_len);
        std::vector<Representation> mods;
        for (const auto& f : check_reps) mods.push_back(parse_rep_text(read_text_file(f), a));
        SubcatSample t = subcat_from_modules(a, mods, 1);
        auto ind = enumerate_indecomposables(a, dim_bound);
        Verdict v;
        if (check_kind == "tilting") {
            v = is_tilting(t, TiltingMode::DefBBOS, ind, 1);
            Verdict alt = is_tilting(t, TiltingMode::DefB, ind, 1);
            for (auto& c : alt.clauses) v.add(c);
        } else if (check_kind == "stt") {
            v = is_support_tau_tilting(t, SttMode::Def61, ind, 1);
            Verdict alt = is_support_tau_tilting(t, SttMode::AIRPairs, ind, 1);
            for (auto& c : alt.clauses) v.add(c);
        } else if (check_kind == "silting") {
            v = is_silting_findim(t, ind, {}, 1).verdict;
        } else if (check_kind == "cosilting") {
            v = is_cosilting_findim(t, ind, 1);
        } else if (check_kind == "quasi-tilting") {
            v = is_quasi_tilting_findim(t, ind, 1);
        } else {
            throw ParseError("unknown check kind '" + check_kind + "'");
        }
        print_verdict(check_kind, v);
        check_failed = !v.pass;
    });

    // ------------------------------------------------------------- verify
    auto* ver_cmd = app.add_subcommand("verify", "run a named suite, emit a report");
    std::string suite, base_file, json_path;
    std::uint64_t seed = 1;
    int count = 100;
    ver_cmd->add_option("suite", suite, "suite id or 'all'")->required();
    ver_cmd->add_option("--seed", seed);
    ver_cmd->add_option("--count", count, "randomized samples per context");
    ver_cmd->add_option("--base", base_file, "base .quiver (default: shipped corpus)");
    ver_cmd->add_option("--algebra", base_file, "alias for --base");
    ver_cmd->add_option("--p0", p0_spec, "P0 of the extension when --base is given");
    ver_cmd->add_option("--json", json_path, "write the JSON report here ('-' = stdout)");
    bool verify_failed = false;
    ver_cmd->callback([&] {
        std::vector<std::pair<std::string, ExtensionContext>> ctxs;
        if (!base_file.empty()) {
            if (p0_spec.empty()) throw ParseError("--base requires --p0");
            AlgebraPtr base = load_algebra(base_file, field_flag, max_len);
            ctxs.emplace_back(base_file,
                              one_point_extension(base, parse_p0(p0_spec, base->quiver())));
        }
        std::vector<std::string> suites =
            suite == "all" ? suite_names() : std::vector<std::string>{suite};
        std::string json_all;
        for (const auto& s : suites) {
            VerifyReport rep = run_suite(s, seed, count, ctxs);
            std::cout << rep.summary() << "\n";
            if (!rep.ok()) verify_failed = true;
            json_all += rep.to_json();
        }
        if (json_path == "-") {
            std::cout << json_all;
        } else if (!json_path.empty()) {
            std::ofstream out(json_path, std::ios::binary);
            out << json_all;
        }
    });

    CLI11_PARSE(app, argc, argv);
    return (check_failed || verify_failed) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
