// rvd: hyperelliptic Rauzy diagrams, cocycle matrices, group verification
// and orbit/decomposition certificates from the command line.
//
// Exit codes: 0 success, 1 verification/certification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hyprv/constructive.hpp"
#include "hyprv/io.hpp"
#include "hyprv/verify.hpp"

using namespace hyprv;
using nlohmann::json;

namespace {

constexpr long long kFlatWordCap = 2000000;  // flat certificate print cap

void write_out(const std::string& out_file, const std::string& content) {
    if (out_file.empty() || out_file == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_file);
    if (!f) throw Error("cannot open output file: " + out_file);
    f << content;
    if (!content.empty() && content.back() != '\n') f << '\n';
}

json read_json_input(const std::string& input) {
    // a path, "-" for stdin, or inline JSON text
    if (input == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return json::parse(buf.str());
    }
    if (!input.empty() && (input[0] == '{' || input[0] == '[')) return json::parse(input);
    std::ifstream f(input);
    if (!f) throw Error("cannot open input file: " + input);
    return json::parse(f);
}

int cmd_diagram(int d, const std::string& format, const std::string& out_file) {
    HypDiagram hyp(d);
    if (format == "json")
        write_out(out_file, diagram_to_json(hyp).dump(2));
    else if (format == "dot")
        write_out(out_file, diagram_to_dot(hyp));
    else
        write_out(out_file, diagram_to_text(hyp));
    return 0;
}

int cmd_matrix(int d, const std::string& path_spec, const std::string& format, const std::string& out_file) {
    DiagramPath p = parse_path(central_vertex(d), path_spec);
    IntMatrix b = path_matrix(p);
    if (format == "json") {
        json j{{"d", d},
               {"path", path_spec},
               {"start_word", ""},
               {"end_word", HypDiagram(d).word_of(p.end())},
               {"letters", alphabet(d)},
               {"matrix", matrix_to_json(b)}};
        write_out(out_file, j.dump(2));
    } else {
        std::string text = "B over letters";
        for (Letter l : alphabet(d)) text += " " + std::to_string(l);
        text += "\n";
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) text += (j ? " " : "") + b.at(i, j).str();
            text += "\n";
        }
        write_out(out_file, text);
    }
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyConfig& cfg, const std::string& format,
               const std::string& out_file) {
    std::vector<std::string> names;
    if (suite == "all")
        names = {"structure", "cocycle", "group", "orbit", "decompose", "appendix"};
    else
        names = {suite};

    auto t0 = std::chrono::steady_clock::now();
    bool all = true;
    json jreports = json::array();
    std::string text;
    for (const std::string& name : names) {
        SuiteReport report = run_suite(name, cfg);
        all = all && report.all_pass();
        json jchecks = json::array();
        for (const CheckResult& c : report.checks) {
            jchecks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            text += std::string(c.pass ? "PASS" : "FAIL") + " " + c.name +
                    (c.detail.empty() ? "" : " (" + c.detail + ")") + "\n";
        }
        json jreport{{"suite", report.suite}, {"all_pass", report.all_pass()}, {"checks", jchecks}};
        if (name == "appendix") {
            std::string tables = appendix_tables_text();
            text += tables;
            jreport["tables"] = tables;
        }
        jreports.push_back(std::move(jreport));
    }
    auto t1 = std::chrono::steady_clock::now();
    text += std::string(all ? "PASS" : "FAIL") + " overall\n";
    if (format == "json")
        write_out(out_file, json{{"reports", jreports}, {"all_pass", all}}.dump(2));
    else
        write_out(out_file, text);
    std::cerr << "elapsed: " << std::chrono::duration<double>(t1 - t0).count() << " s\n";
    return all ? 0 : 1;
}

int cmd_certify(const std::string& kind, int d, const std::string& input, Letter base_letter,
                const std::string& out_file) {
    json in = read_json_input(input);
    json result;
    PackedWord word;
    if (kind == "orbit") {
        IntVec v;
        Letter p = base_letter;
        if (in.is_object()) {
            v = vector_from_json(in.at("vector"));
            if (in.contains("letter")) p = in.at("letter").get<int>();
        } else {
            v = vector_from_json(in);
        }
        if (static_cast<int>(v.size()) != d) throw Error("vector dimension does not match --d");
        word = orbit_word_packed(v, p, d);
        // re-verify before printing
        if (apply_packed(word, unit_vector(d, letter_index(d, p)), d) != v)
            throw Error("certificate failed re-verification");
        result["kind"] = "orbit";
        result["letter"] = p;
        result["vector"] = vector_to_json(v);
    } else {
        IntMatrix b = in.is_object() ? matrix_from_json(in.at("matrix")) : matrix_from_json(in);
        if (b.size() != d) throw Error("matrix dimension does not match --d");
        word = decompose_packed(b, d);
        if (evaluate_packed(word, d) != b) throw Error("certificate failed re-verification");
        result["kind"] = "decompose";
        result["matrix"] = matrix_to_json(b);
    }
    result["d"] = d;
    Int flat_len = packed_flat_length(word);
    result["flat_length"] = flat_len.str();
    result["verified"] = true;
    if (flat_len <= kFlatWordCap)
        result["word"] = generator_word_to_json(flatten_packed(word));
    else
        result["packed_word"] = packed_word_to_json(word);
    write_out(out_file, result.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperelliptic Rauzy-Veech diagrams, cocycles and certificates"};
    app.require_subcommand(1);

    std::string out_file;

    auto* diagram = app.add_subcommand("diagram", "export a hyperelliptic Rauzy diagram");
    int dia_d = 4;
    std::string dia_format = "text";
    diagram->add_option("--d", dia_d, "complexity d >= 2")->check(CLI::Range(2, 24));
    diagram->add_option("--format", dia_format, "json | dot | text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    diagram->add_option("--out", out_file, "output file (default stdout)");

    auto* matrix = app.add_subcommand("matrix", "cocycle matrix of a path from the central vertex");
    int mat_d = 4;
    std::string mat_path, mat_format = "text";
    matrix->add_option("--d", mat_d, "complexity d >= 2")->check(CLI::Range(2, 24));
    matrix->add_option("--path", mat_path, "word over t,b,T,B (uppercase = backward)");
    matrix->add_option("--format", mat_format, "json | text")->check(CLI::IsMember({"json", "text"}));
    matrix->add_option("--out", out_file, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string ver_suite = "structure", ver_format = "text";
    VerifyConfig cfg;
    int seed_opt = 1;
    verify->add_option("--suite", ver_suite, "structure | cocycle | group | orbit | decompose | appendix | all")
        ->check(CLI::IsMember({"structure", "cocycle", "group", "orbit", "decompose", "appendix", "all"}));
    verify->add_option("--d", cfg.d_max, "maximal complexity (suites clamp to their own bounds)")
        ->check(CLI::Range(2, 12));
    verify->add_option("--radius", cfg.radius, "orbit ball sup-norm bound")->check(CLI::Range(1, 6));
    verify->add_option("--word-len", cfg.word_len, "random generator word length")->check(CLI::Range(1, 200));
    verify->add_option("--seed", seed_opt, "PRNG seed");
    verify->add_option("--format", ver_format, "json | text")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out_file, "output file (default stdout)");

    auto* certify = app.add_subcommand("certify", "produce a verified generator-word certificate");
    std::string cert_kind = "orbit", cert_input;
    int cert_d = 3;
    int cert_letter_opt = 1 << 20;
    certify->add_option("--kind", cert_kind, "orbit | decompose")->check(CLI::IsMember({"orbit", "decompose"}));
    certify->add_option("--d", cert_d, "complexity d >= 2")->check(CLI::Range(2, 24));
    certify->add_option("--input", cert_input,
                        "JSON input: file path, '-' for stdin, or inline "
                        "{\"vector\": [...], \"letter\": p} / {\"matrix\": [[...]]}")
        ->required();
    certify->add_option("--letter", cert_letter_opt, "base letter p for orbit certificates (default d-1)");
    certify->add_option("--out", out_file, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (diagram->parsed()) return cmd_diagram(dia_d, dia_format, out_file);
        if (matrix->parsed()) return cmd_matrix(mat_d, mat_path, mat_format, out_file);
        if (verify->parsed()) {
            cfg.seed = static_cast<uint64_t>(seed_opt);
            return cmd_verify(ver_suite, cfg, ver_format, out_file);
        }
        if (certify->parsed()) {
            Letter p = cert_letter_opt == (1 << 20) ? cert_d - 1 : cert_letter_opt;
            return cmd_certify(cert_kind, cert_d, cert_input, p, out_file);
        }
    } catch (const NotInOrbitError& e) {
        std::cerr << "NotInOrbit: " << e.what() << "\n";
        return 1;
    } catch (const NotInGPrimeError& e) {
        std::cerr << "NotInGPrime: " << e.what() << "\n";
        return 1;
    } catch (const MalformedPathError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BadLetterError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BadDimensionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
