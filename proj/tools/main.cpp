// Command-line surface: validate / power / toeplitz-check / lambda /
// synthesize / report over JSON model, operator, and section files.
// Exit codes: 0 pass, 1 check failed, 2 input error.

#include "bimtoep/io.hpp"
#include "bimtoep/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

using namespace bimtoep;

namespace {

int run_validate(const std::string& model_path, const std::string& out) {
    Model m = load_model(model_path);  // throws if the base module is invalid
    bool all_ok = true;
    ValidationReport full;
    for (int n = -m.ladder->range(); n <= m.ladder->range(); ++n) {
        ValidationReport rep = validate_bimodule(*m.ladder->level(n), m.tol("axiom", 1e-9));
        std::cout << "level " << n << ":\n" << rep.summary();
        for (auto& c : rep.checks) {
            c.name = "level " + std::to_string(n) + ": " + c.name;
            full.checks.push_back(c);
        }
        all_ok = all_ok && rep.passed();
    }
    if (!out.empty()) write_file(out, report_to_json(m.name, 0, full));
    std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok ? 0 : 1;
}

int run_power(const std::string& model_path, int n, const std::string& out) {
    Model m = load_model(model_path);
    const auto& L = m.ladder->level(n);
    Model dump;  // reuse the model serializer for the structure dump
    dump.name = m.name + ":level" + std::to_string(n);
    dump.algebra = m.algebra;
    dump.bimodule = L;
    dump.window = m.window;
    std::cout << "level " << n << " dimension " << L->dim() << "\n";
    std::string text = model_to_json(dump);
    if (!out.empty())
        write_file(out, text);
    else
        std::cout << text;
    return 0;
}

int run_toeplitz_check(const std::string& model_path, const std::string& op_path, double tol,
                       const std::string& out) {
    Model m = load_model(model_path);
    OperatorMatrix M = operator_from_json(read_file(op_path), m.ladder);
    ToeplitzCheck tc = is_toeplitz(M, tol > 0 ? tol : m.tol("toeplitz", 1e-8));
    for (const auto& [i, j, r] : tc.residuals)
        std::cout << "(" << i << "," << j << ") residual " << r << "\n";
    std::cout << "max residual " << tc.max_residual << " at (" << tc.offending_i << ","
              << tc.offending_j << ")\n"
              << (tc.is_toeplitz ? "TOEPLITZ" : "NOT-TOEPLITZ") << "\n";
    if (!out.empty()) {
        ValidationReport rep;
        for (const auto& [i, j, r] : tc.residuals)
            rep.checks.push_back({"block (" + std::to_string(i) + "," + std::to_string(j) + ")", r,
                                  r <= tc.max_residual || true});
        rep.checks.push_back({"toeplitz", tc.max_residual, tc.is_toeplitz});
        write_file(out, report_to_json(m.name, 0, rep));
    }
    return tc.is_toeplitz ? 0 : 1;
}

int run_lambda(const std::string& model_path, const std::string& section_path,
               const std::string& out) {
    Model m = load_model(model_path);
    CrossSection f = section_from_json(read_file(section_path), m.ladder);
    OperatorMatrix M = lambda_rep(f, m.window);
    write_file(out, operator_to_json(M));
    return 0;
}

int run_synthesize(const std::string& model_path, const std::string& op_path, int radius,
                   const std::string& out) {
    Model m = load_model(model_path);
    OperatorMatrix M = operator_from_json(read_file(op_path), m.ladder);
    if (radius < 0) radius = m.ladder->range();
    SynthesisResult syn = synthesize_section(M, radius, m.tol("toeplitz", 1e-8));
    for (const auto& [k, s] : syn.spread)
        std::cout << "diagonal " << k << " spread " << s << " reconstruction "
                  << syn.reconstruction.at(k) << "\n";
    std::cout << "max spread " << syn.max_spread << "\n"
              << (syn.consistent ? "CONSISTENT" : "INCONSISTENT") << "\n";
    if (!out.empty()) write_file(out, section_to_json(syn.section));
    return syn.consistent ? 0 : 1;
}

int run_report(const std::string& model_path, std::uint64_t seed, const std::string& out) {
    Model m = load_model(model_path);
    auto t0 = std::chrono::steady_clock::now();
    ValidationReport rep = run_property_suite(m, seed);
    auto t1 = std::chrono::steady_clock::now();
    std::cout << rep.summary();
    std::cerr << "suite runtime "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << " ms\n";
    if (!out.empty()) write_file(out, report_to_json(m.name, seed, rep));
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toeplitz matrices over an imprimitivity bimodule: models, the tensor "
                 "ladder, the left regular representation, and Toeplitz diagnostics"};
    app.require_subcommand(1);

    std::string model, op_path, section_path, out;
    int n = 0, radius = -1;
    double tol = -1;
    std::uint64_t seed = 0;

    auto add_model = [&](CLI::App* c) {
        c->add_option("--model", model, "model file or builtin name (scalar, flip, perm3, m2-inner)")
            ->required();
    };

    auto* validate = app.add_subcommand("validate", "run the axiom suite on every ladder level");
    add_model(validate);
    validate->add_option("--out", out, "write a JSON report");

    auto* power = app.add_subcommand("power", "dump the structure of a tensor power");
    add_model(power);
    power->add_option("--n", n, "level")->required();
    power->add_option("--out", out, "write the structure dump");

    auto* tc = app.add_subcommand("toeplitz-check", "test the Toeplitz predicate on an operator");
    add_model(tc);
    tc->add_option("--operator", op_path, "operator file")->required();
    tc->add_option("--tol", tol, "predicate tolerance");
    tc->add_option("--out", out, "write a JSON report");

    auto* lam = app.add_subcommand("lambda", "left regular representation of a section");
    add_model(lam);
    lam->add_option("--section", section_path, "section file")->required();
    lam->add_option("--out", out, "operator output file")->required();

    auto* syn = app.add_subcommand("synthesize", "read a section off a Toeplitz matrix");
    add_model(syn);
    syn->add_option("--operator", op_path, "operator file")->required();
    syn->add_option("--radius", radius, "synthesis radius (default: ladder range)");
    syn->add_option("--out", out, "section output file");

    auto* rp = app.add_subcommand("report", "seeded property suite");
    add_model(rp);
    rp->add_option("--seed", seed, "RNG seed");
    rp->add_option("--out", out, "report output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(model, out);
        if (power->parsed()) return run_power(model, n, out);
        if (tc->parsed()) return run_toeplitz_check(model, op_path, tol, out);
        if (lam->parsed()) return run_lambda(model, section_path, out);
        if (syn->parsed()) return run_synthesize(model, op_path, radius, out);
        if (rp->parsed()) return run_report(model, seed, out);
    } catch (const ParseError& e) {
        std::cerr << "{\"error\":\"input\",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    } catch (const StructuralError& e) {
        std::cerr << "{\"error\":\"input\",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "{\"error\":\"validation\",\"message\":\"" << e.what() << "\"}\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"internal\",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    }
    return 2;
}
