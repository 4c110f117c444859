#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nichols/braiding.hpp"
#include "nichols/cartan.hpp"
#include "nichols/error.hpp"
#include "nichols/freealg.hpp"
#include "nichols/groupoid.hpp"
#include "nichols/rank2.hpp"
#include "nichols/scalar.hpp"

using namespace nichols;
using nlohmann::json;

namespace {

// 0 pass / 1 mathematical failure / 2 resource cap, so automation can tell
// a refuted assertion from an exhausted search
constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_cap = 2;

BraidingMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::BadInput, "cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        fail(Err::ParseError, e.what()); // message carries line and column
    }
    return BraidingMatrix::from_json(j);
}

void emit(const json& j, const std::string& format, const std::string& table) {
    if (format == "table")
        std::cout << table;
    else
        std::cout << j.dump(2) << '\n';
}

json cartan_rows(const CartanData& cd) {
    json rows = json::array();
    for (size_t i = 0; i < cd.c.size(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < cd.c[i].size(); ++j) {
            if (cd.reflectable[i])
                row.push_back(cd.c[i][j]);
            else
                row.push_back(nullptr);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int run_classify(const std::string& path, const std::string& format) {
    BraidingMatrix m = load_matrix(path);
    CartanData cd = cartan_data(m);
    json out = {{"class", braid_class_name(classify_class(m))},
                {"cartan", cartan_rows(cd)},
                {"gcm", gcm_class_name(cd.gcm_class)}};

    std::string tab = "class: " + std::string(braid_class_name(classify_class(m)))
        + "\ncartan:\n";
    for (size_t i = 0; i < cd.c.size(); ++i) {
        tab += " ";
        for (long v : cd.c[i])
            tab += " " + (cd.reflectable[i] ? std::to_string(v) : std::string("?"));
        tab += "\n";
    }
    tab += "gcm: " + std::string(gcm_class_name(cd.gcm_class)) + "\n";
    emit(out, format, tab);
    return exit_pass;
}

int run_reflect(const std::string& path, unsigned vertex, const std::string& format) {
    BraidingMatrix m = load_matrix(path);
    if (vertex < 1 || vertex > m.theta())
        fail(Err::IndexOutOfRange, "vertex must lie in 1.." + std::to_string(m.theta()));
    BraidingMatrix r = reflect_matrix(m, vertex - 1);
    std::string tab;
    for (unsigned i = 0; i < r.theta(); ++i) {
        for (unsigned j = 0; j < r.theta(); ++j)
            tab += (j ? "  " : "") + r.at(i, j).str();
        tab += "\n";
    }
    emit(r.to_json(), format, tab);
    return exit_pass;
}

json gk_json(const GkValue& gk) {
    json out = {{"kind", gk.kind == GkValue::Finite
                             ? "Finite"
                             : (gk.kind == GkValue::Infinite ? "Infinite" : "Unknown")}};
    if (gk.kind == GkValue::Finite) out["value"] = gk.value;
    return out;
}

json report_json(const GroupoidReport& rep) {
    json nodes = json::array();
    for (const GroupoidNode& n : rep.nodes) {
        json roots = json::array();
        for (const Root& r : n.roots) {
            json root = {{"coords", r.coords}, {"q_beta", r.q_beta.str()}};
            if (r.height)
                root["height"] = *r.height;
            else
                root["height"] = nullptr;
            roots.push_back(std::move(root));
        }
        nodes.push_back({{"key", diagram(n.matrix).key()},
                         {"matrix", n.matrix.to_json()},
                         {"roots", std::move(roots)}});
    }
    json edges = json::array();
    for (const GroupoidEdge& e : rep.edges)
        edges.push_back({{"from", e.from}, {"vertex", e.vertex + 1}, {"to", e.to}});
    return {{"verdict", verdict_name(rep.verdict)},
            {"reason", rep.reason},
            {"gk", gk_json(gk_dimension(rep))},
            {"nodes", std::move(nodes)},
            {"edges", std::move(edges)}};
}

std::string report_table(const GroupoidReport& rep) {
    std::string tab = std::string("verdict: ") + verdict_name(rep.verdict);
    if (!rep.reason.empty()) tab += " (" + rep.reason + ")";
    tab += "\ngk: " + gk_dimension(rep).str() + "\n";
    tab += "matrices: " + std::to_string(rep.nodes.size()) + ", edges: "
        + std::to_string(rep.edges.size()) + "\n";
    for (size_t i = 0; i < rep.nodes.size(); ++i) {
        const GroupoidNode& n = rep.nodes[i];
        tab += "node " + std::to_string(i) + "\n";
        for (const Root& r : n.roots) {
            tab += "  (";
            for (size_t k = 0; k < r.coords.size(); ++k)
                tab += (k ? "," : "") + std::to_string(r.coords[k]);
            tab += ")  q = " + r.q_beta.str() + "  height = "
                + (r.height ? std::to_string(*r.height) : std::string("infinite")) + "\n";
        }
    }
    return tab;
}

int run_groupoid(const std::string& path, const Caps& caps, const std::string& format) {
    BraidingMatrix m = load_matrix(path);
    GroupoidReport rep = enumerate(m, caps);
    emit(report_json(rep), format, report_table(rep));
    return rep.verdict == Verdict::CapExceeded ? exit_cap : exit_pass;
}

int run_gkdim(const std::string& path, const Caps& caps, const std::string& format) {
    BraidingMatrix m = load_matrix(path);
    GkValue gk = gk_dimension(enumerate(m, caps));
    emit(json{{"gk", gk_json(gk)}}, format, gk.str() + "\n");
    return gk.kind == GkValue::Unknown ? exit_cap : exit_pass;
}

int run_oracle(const std::string& path, const std::string& element, unsigned max_degree,
               const std::string& format) {
    BraidingMatrix m = load_matrix(path);
    FreeElement x = parse_element(m, element);
    bool zero = is_zero_in_nichols(m, x, max_degree);
    emit(json{{"element", element}, {"max_degree", max_degree}, {"zero_in_nichols", zero}},
         format, std::string(zero ? "zero" : "nonzero") + "\n");
    return exit_pass;
}

int run_verify(const std::string& suite, uint64_t seed, const std::string& format) {
    SuiteReport rep = verify_suite(suite, seed);
    emit(rep.to_json(), format, rep.table());
    return rep.all_pass() ? exit_pass : exit_fail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact root-system, Nichols-algebra and GK-dimension tools "
                 "for braidings of diagonal type"};
    app.require_subcommand(1);

    std::string input, format = "json", element, suite;
    unsigned vertex = 1, max_degree = 12;
    Caps caps;
    uint64_t seed = 0;

    auto* classify = app.add_subcommand("classify", "matrix class, Cartan matrix, gcm type");
    classify->add_option("--input", input, "matrix JSON file")->required();
    classify->add_option("--format", format, "json or table");

    auto* reflect = app.add_subcommand("reflect", "reflect the matrix at a vertex");
    reflect->add_option("--input", input, "matrix JSON file")->required();
    reflect->add_option("--vertex", vertex, "vertex, 1-based")->required();
    reflect->add_option("--format", format, "json or table");

    auto* groupoid = app.add_subcommand("groupoid", "enumerate the reflection groupoid");
    groupoid->add_option("--input", input, "matrix JSON file")->required();
    groupoid->add_option("--max-matrices", caps.max_matrices, "matrix cap");
    groupoid->add_option("--max-root-height", caps.max_root_height, "root height cap");
    groupoid->add_option("--format", format, "json or table");

    auto* gkdim = app.add_subcommand("gkdim", "GK dimension of the Nichols algebra");
    gkdim->add_option("--input", input, "matrix JSON file")->required();
    gkdim->add_option("--max-matrices", caps.max_matrices, "matrix cap");
    gkdim->add_option("--max-root-height", caps.max_root_height, "root height cap");
    gkdim->add_option("--format", format, "json or table");

    auto* oracle = app.add_subcommand("oracle", "ideal membership for a free-algebra element");
    oracle->add_option("--input", input, "matrix JSON file")->required();
    oracle->add_option("--element", element, "element expression")->required();
    oracle->add_option("--max-degree", max_degree, "total-degree cap");
    oracle->add_option("--format", format, "json or table");

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--seed", seed, "seed for sampling suites");
    verify->add_option("--format", format, "json or table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (format != "json" && format != "table") {
        std::cerr << "format must be json or table\n";
        return exit_fail;
    }

    try {
        if (*classify) return run_classify(input, format);
        if (*reflect) return run_reflect(input, vertex, format);
        if (*groupoid) return run_groupoid(input, caps, format);
        if (*gkdim) return run_gkdim(input, caps, format);
        if (*oracle) return run_oracle(input, element, max_degree, format);
        if (*verify) return run_verify(suite, seed, format);
    } catch (const ToolError& e) {
        std::cerr << e.what() << '\n';
        bool cap = e.code() == Err::CapExceeded || e.code() == Err::DegreeTooLarge;
        return cap ? exit_cap : exit_fail;
    }
    return exit_fail;
}
