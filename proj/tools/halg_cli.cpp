#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "halg/domains.hpp"
#include "halg/fock.hpp"
#include "halg/json_io.hpp"
#include "halg/laws.hpp"

namespace {

constexpr const char* kSchema = "halg-report/1";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

halg::Instance load(const std::string& path) { return halg::parse_instance(read_file(path)); }

void emit(const halg::Json& doc, bool pretty) {
    if (pretty)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << doc.dump() << "\n";
}

halg::Json report_header(const std::string& command) {
    return halg::Json{{"schema", kSchema}, {"command", command}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic invariants of graphs, finite topologies, and set compositions"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the output document");

    std::string q_text = "1";
    std::string file;
    std::string phi_kind;
    std::size_t max_size = 4;

    auto* chromatic = app.add_subcommand("chromatic", "q-deformed chromatic polynomial of a graph");
    chromatic->add_option("--q", q_text, "rational deformation parameter");
    chromatic->add_option("file", file, "graph instance file")->required();

    auto* ehrhart = app.add_subcommand("ehrhart", "q-deformed Ehrhart polynomial of a quasi-poset");
    ehrhart->add_option("--q", q_text, "rational deformation parameter");
    ehrhart->add_option("file", file, "quasi-poset instance file")->required();

    auto* phi = app.add_subcommand("phi", "morphism into set compositions");
    phi->add_option("kind", phi_kind, "chr or ehr")->required()
        ->check(CLI::IsMember({"chr", "ehr"}));
    phi->add_option("file", file, "instance file")->required();

    auto* qsym = app.add_subcommand("qsym", "integer-composition image of the instance");
    qsym->add_option("file", file, "instance file")->required();

    auto* wqsym = app.add_subcommand("wqsym", "packed-word image of the instance");
    wqsym->add_option("file", file, "instance file")->required();

    auto* delta = app.add_subcommand("delta", "internal coproduct of the instance");
    delta->add_option("file", file, "instance file")->required();

    auto* gamma_cmd = app.add_subcommand("gamma", "quotient-sum automorphism of the instance");
    gamma_cmd->add_option("file", file, "instance file")->required();

    auto* check = app.add_subcommand("check", "run the identity-check suite");
    check->add_option("--max-size", max_size, "largest ground-set size (default 4)");

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace halg;

        if (chromatic->parsed()) {
            auto inst = load(file);
            auto* g = std::get_if<BlockGraph>(&inst);
            if (!g) throw std::invalid_argument("chromatic expects a graph instance");
            Rational q = rat_parse(q_text);
            auto doc = report_header("chromatic");
            doc["q"] = rat_to_string(q);
            doc["polynomial"] = to_json(chromatic_polynomial(*g, q));
            emit(doc, pretty);
        } else if (ehrhart->parsed()) {
            auto inst = load(file);
            auto* t = std::get_if<QuasiPoset>(&inst);
            if (!t) throw std::invalid_argument("ehrhart expects a quasi-poset instance");
            Rational q = rat_parse(q_text);
            auto doc = report_header("ehrhart");
            doc["q"] = rat_to_string(q);
            doc["polynomial"] = to_json(ehrhart_polynomial(*t, q));
            emit(doc, pretty);
        } else if (phi->parsed()) {
            auto inst = load(file);
            auto doc = report_header("phi");
            doc["kind"] = phi_kind;
            if (phi_kind == "chr") {
                auto* g = std::get_if<BlockGraph>(&inst);
                if (!g) throw std::invalid_argument("phi chr expects a graph instance");
                doc["value"] = lincomb_to_json(phi_chr(*g));
            } else {
                auto* t = std::get_if<QuasiPoset>(&inst);
                if (!t) throw std::invalid_argument("phi ehr expects a quasi-poset instance");
                doc["value"] = lincomb_to_json(phi_ehr(*t));
            }
            emit(doc, pretty);
        } else if (qsym->parsed()) {
            auto inst = load(file);
            auto doc = report_header("qsym");
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, BlockGraph>)
                        doc["value"] = lincomb_to_json(khat_image(phi_chr(v)));
                    else if constexpr (std::is_same_v<T, QuasiPoset>)
                        doc["value"] = lincomb_to_json(khat_image(phi_ehr(v)));
                    else
                        doc["value"] = lincomb_to_json(LinComb<IntComposition>(khat_encode(v)));
                },
                inst);
            emit(doc, pretty);
        } else if (wqsym->parsed()) {
            auto inst = load(file);
            auto doc = report_header("wqsym");
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, BlockGraph>)
                        doc["value"] = lincomb_to_json(k_image(phi_chr(v)));
                    else if constexpr (std::is_same_v<T, QuasiPoset>)
                        doc["value"] = lincomb_to_json(k_image(phi_ehr(v)));
                    else
                        doc["value"] = lincomb_to_json(LinComb<PackedWord>(k_encode(v)));
                },
                inst);
            emit(doc, pretty);
        } else if (delta->parsed()) {
            auto inst = load(file);
            auto doc = report_header("delta");
            std::visit([&](const auto& v) { doc["value"] = lincomb_to_json(internal_delta(v)); },
                       inst);
            emit(doc, pretty);
        } else if (gamma_cmd->parsed()) {
            auto inst = load(file);
            auto doc = report_header("gamma");
            if (auto* g = std::get_if<BlockGraph>(&inst))
                doc["value"] = lincomb_to_json(gamma(*g));
            else if (auto* t = std::get_if<QuasiPoset>(&inst))
                doc["value"] = lincomb_to_json(gamma_top(*t));
            else
                throw std::invalid_argument("gamma is defined for graph and quasi-poset instances");
            emit(doc, pretty);
        } else if (check->parsed()) {
            auto report = run_law_suite(max_size);
            auto doc = report_header("check");
            doc["max_size"] = report.max_size;
            doc["elapsed_ms"] = report.elapsed_ms;
            doc["all_pass"] = report.all_pass();
            Json laws = Json::array();
            for (const auto& l : report.laws) {
                Json entry{{"name", l.name}, {"pass", l.pass}, {"instances", l.instances}};
                if (!l.pass) entry["counterexample"] = l.counterexample;
                laws.push_back(std::move(entry));
            }
            doc["laws"] = std::move(laws);
            emit(doc, pretty);
            return report.all_pass() ? 0 : 1;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
