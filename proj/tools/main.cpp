#include "ode/expr_io.hpp"
#include "ode/solver.hpp"
#include "ode/verifier.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct InputSpec {
    std::string text;  // positional problem text
    std::string path;  // --input
};

std::string load_problem_text(const InputSpec& in) {
    const bool have_text = !in.text.empty();
    const bool have_path = !in.path.empty();
    if (have_text == have_path)
        throw std::runtime_error("exactly one input source required (argument or --input)");
    if (have_text) {
        if (in.text == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            return ss.str();
        }
        return in.text;
    }
    if (in.path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(in.path);
    if (!f)
        throw std::runtime_error("cannot open input file: " + in.path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::pair<ode::ComplexRational, std::size_t>> parse_roots(const std::string& spec) {
    std::vector<std::pair<ode::ComplexRational, std::size_t>> roots;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (item.empty())
            continue;
        const auto colon = item.rfind(':');
        if (colon == std::string::npos)
            throw std::runtime_error("root entry '" + item + "' must be gamma:multiplicity");
        const ode::ComplexRational gamma = ode::ComplexRational::parse(strip(item.substr(0, colon)));
        const std::size_t mult = std::stoul(strip(item.substr(colon + 1)));
        roots.emplace_back(gamma, mult);
    }
    if (roots.empty())
        throw std::runtime_error("empty root list");
    return roots;
}

void print_trace_plain(const ode::Trace& trace) {
    for (const auto& step : trace) {
        std::cout << step.name << ": ";
        if (!step.before.empty())
            std::cout << step.before << " => ";
        std::cout << step.after << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact particular solutions of constant-coefficient linear ODEs"};
    app.require_subcommand(1);

    std::string format = "plain";
    bool trace_flag = false;
    std::string roots_spec;
    std::string candidate_path;
    InputSpec input;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("problem", input.text, "problem text, '-' for stdin");
        cmd->add_option("--input", input.path, "read the problem from a file, '-' for stdin");
        cmd->add_option("--format", format, "plain, latex or structured")
            ->check(CLI::IsMember({"plain", "latex", "structured"}));
        cmd->add_flag("--trace", trace_flag, "emit the derivation steps");
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "compute a particular solution");
    add_common(solve_cmd);
    solve_cmd->add_option("--roots", roots_spec,
                          "characteristic roots 'gamma:mult,...' for the general solution");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a candidate solution");
    add_common(verify_cmd);
    verify_cmd->add_option("--candidate", candidate_path, "file holding the candidate solution")
        ->required();

    CLI::App* homog_cmd = app.add_subcommand("homogeneous", "homogeneous basis from roots");
    add_common(homog_cmd);
    homog_cmd->add_option("--roots", roots_spec, "characteristic roots 'gamma:mult,...'")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const std::string text = strip(load_problem_text(input));
        const ode::ProblemStatement ps = ode::parse_problem(text);

        if (app.got_subcommand(solve_cmd)) {
            ode::Trace trace;
            const ode::ParticularSolution sol =
                ode::solve(ps.op, ps.forcing, trace_flag ? &trace : nullptr);

            std::vector<ode::ExpTrigPoly> basis;
            if (!roots_spec.empty())
                basis = ode::homogeneous_basis(ps.op, parse_roots(roots_spec));

            if (format == "structured") {
                nlohmann::json doc = ode::structured_document(
                    ps, &sol, trace_flag ? &trace : nullptr);
                if (!basis.empty()) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& b : basis)
                        arr.push_back(ode::to_json(b));
                    doc["homogeneous_basis"] = arr;
                }
                std::cout << doc.dump(2) << "\n";
            } else {
                if (trace_flag)
                    print_trace_plain(trace);
                std::string out;
                for (std::size_t i = 0; i < basis.size(); ++i) {
                    out += "c" + std::to_string(i + 1) + "*";
                    const std::string b = format == "latex" ? ode::render_latex(basis[i])
                                                            : ode::render_plain(basis[i]);
                    out += "(" + b + ") + ";
                }
                out += format == "latex" ? ode::render_latex(sol.real_form)
                                         : ode::render_plain(sol.real_form);
                std::cout << out << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            std::ifstream f(candidate_path);
            if (!f)
                throw std::runtime_error("cannot open candidate file: " + candidate_path);
            std::ostringstream ss;
            ss << f.rdbuf();
            const ode::ExpTrigPoly candidate = ode::parse_exptrig(strip(ss.str()));
            const ode::ExpTrigPoly forcing = ps.forcing.to_exptrig();
            const ode::RealVerdict verdict = ode::verify_real(ps.op, candidate, forcing);
            if (verdict.pass) {
                std::cout << "PASS\n";
                return 0;
            }
            std::cout << "FAIL\nresidual: " << ode::render_plain(verdict.residual) << "\n";
            return 1;
        }

        // homogeneous
        const auto basis = ode::homogeneous_basis(ps.op, parse_roots(roots_spec));
        for (const auto& b : basis)
            std::cout << (format == "latex" ? ode::render_latex(b) : ode::render_plain(b)) << "\n";
        return 0;
    } catch (const ode::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
