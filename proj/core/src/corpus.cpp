#include "opext/corpus.hpp"

namespace opext::corpus {

namespace {

constexpr const char* kA2 =
    "field Q\n"
    "vertex 1\n"
    "vertex 2\n"
    "arrow a 1 2\n";

constexpr const char* kA3 =
    "field Q\n"
    "vertex 1\n"
    "vertex 2\n"
    "vertex 3\n"
    "arrow a 1 2\n"
    "arrow b 2 3\n";

constexpr const char* kAbZero =
    "field Q\n"
    "vertex 1\n"
    "vertex 2\n"
    "vertex 3\n"
    "arrow a 1 2\n"
    "arrow b 2 3\n"
    "relation 1*a.b\n";

}  // namespace

std::vector<std::string> names() { return {"a2", "a3", "abzero"}; }

std::string quiver_text(const std::string& name) {
    if (name == "a2") return kA2;
    if (name == "a3") return kA3;
    if (name == "abzero") return kAbZero;
    throw ParseError("unknown corpus algebra '" + name + "'");
}

AlgebraPtr algebra(const std::string& name, Field f) {
    QuiverFile file = parse_quiver_text(quiver_text(name));
    return std::make_shared<const Algebra>(
        Algebra::build(f, std::move(file.quiver), std::move(file.relations), 12));
}

std::vector<ExtensionSpec> extensions() {
    return {{"a2-ext-p1", "a2", {1, 0}},
            {"a2-ext-p2", "a2", {0, 1}},
            {"abzero-ext-p1", "abzero", {1, 0, 0}}};
}

ExtensionContext extension(const std::string& name, Field f) {
    for (const auto& e : extensions())
        if (e.name == name) return one_point_extension(algebra(e.base, f), e.p0);
    throw ParseError("unknown corpus extension '" + name + "'");
}

std::vector<AlgebraPtr> all_algebras(Field f) {
    std::vector<AlgebraPtr> out;
    for (const auto& n : names()) out.push_back(algebra(n, f));
    for (const auto& e : extensions()) out.push_back(extension(e.name, f).extended);
    return out;
}

}  // namespace opext::corpus
