/*
 * Copyright 2026 The hafkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hafkit/errors.hpp"
#include "hafkit/gbs.hpp"
#include "hafkit/hafnian.hpp"
#include "hafkit/induced.hpp"
#include "hafkit/matrix_io.hpp"
#include "hafkit/verify.hpp"

namespace {

using namespace hafkit;

// Exit codes: 0 success, 1 domain verdict (not encodable / property failures),
// 2 usage or parse error, 3 precondition violation, 4 size cap, 5 numerical failure.

int run_haf(const std::string& path) {
    std::cout << format_complex(hafnian(load_matrix(path))) << "\n";
    return 0;
}

int run_haf_block(const std::string& path) {
    std::cout << format_complex(hafnian_block(load_block(path))) << "\n";
    return 0;
}

int run_per(const std::string& path, const std::string& algorithm) {
    const ComplexMatrix b = load_matrix(path);
    const Complex value = (algorithm == "naive") ? permanent_naive(b) : permanent_ryser(b);
    std::cout << format_complex(value) << "\n";
    return 0;
}

int run_induced(const std::string& path, int r, const std::string& scaling) {
    const ComplexMatrix q = load_matrix(path);
    const ComplexMatrix result =
        (scaling == "permanent-scaled") ? induced_c(q, r) : induced_p(q, r).data;
    std::cout << matrix_to_json(result) << "\n";
    return 0;
}

int run_encode(const std::string& path, bool has_c, double c) {
    const ComplexMatrix r = load_matrix(path);
    const EncodabilityReport report = check_encodable(r);

    const auto status = [&](int condition) -> std::string {
        for (const ConditionFailure& failure : report.failures) {
            if (failure.condition == condition) {
                char buffer[64];
                std::snprintf(buffer, sizeof(buffer), " (violation %.3e)", failure.violation);
                return "FAIL: " + failure.detail + buffer;
            }
        }
        return "pass";
    };
    std::cout << "condition 1 (R11 = conj(R22), R12 = R21^T): " << status(1) << "\n";
    std::cout << "condition 2 (R12 Hermitian positive semidefinite): " << status(2) << "\n";
    char upper[32];
    std::snprintf(upper, sizeof(upper), "%.17g", report.c_max);
    std::cout << "condition 3 (admissible scaling): c in (0, " << upper << ")\n";

    if (!report.encodable) {
        return 1;
    }
    if (has_c) {
        const CovarianceMatrix cov = build_covariance(r, c); // PreconditionError -> 3
        std::cout << "sigma: " << matrix_to_json(cov.sigma) << "\n";
        std::cout << "symplectic spectrum:";
        for (double nu : cov.symplectic_eigenvalues) {
            char value[32];
            std::snprintf(value, sizeof(value), " %.17g", nu);
            std::cout << value;
        }
        std::cout << "\n";
    }
    return 0;
}

int emit_reports(const std::vector<PropertyReport>& reports) {
    bool all_clean = true;
    for (const PropertyReport& report : reports) {
        std::string witness_path;
        if (report.failures > 0 && report.witness) {
            witness_path = "hafkit_witness_" + report.property_name + ".json";
            std::ofstream out(witness_path);
            out << *report.witness << "\n";
            all_clean = false;
        } else if (report.failures > 0) {
            all_clean = false;
        }
        std::cout << report_line(report, witness_path) << "\n";
    }
    return all_clean ? 0 : 1;
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed) {
    std::vector<PropertyReport> reports;
    if (suite == "nonnegativity" || suite == "all") {
        reports.push_back(verify_nonnegativity(trials, 5, seed));
    }
    if (suite == "monotonicity" || suite == "all") {
        reports.push_back(verify_monotonicity(trials, 4, seed));
    }
    if (suite == "schur" || suite == "all") {
        reports.push_back(verify_schur(trials, 8, seed));
    }
    if (suite == "induced" || suite == "all") {
        for (PropertyReport& report : verify_induced_suite(trials, seed)) {
            reports.push_back(std::move(report));
        }
    }
    if (suite == "block" || suite == "all") {
        reports.push_back(verify_block_formula(trials, 5, seed));
    }
    return emit_reports(reports);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hafnians, permanents, induced matrices and GBS encodability"};
    app.require_subcommand(1);

    auto* haf_cmd = app.add_subcommand("haf", "hafnian of a symmetric matrix of even order");
    std::string haf_path;
    haf_cmd->add_option("input", haf_path, "matrix file")->required();

    auto* block_cmd = app.add_subcommand("haf-block", "hafnian of A(Y, B) from a block file");
    std::string block_path;
    block_cmd->add_option("input", block_path, "block file")->required();

    auto* per_cmd = app.add_subcommand("per", "permanent of a square matrix");
    std::string per_path;
    std::string algorithm = "ryser";
    per_cmd->add_option("input", per_path, "matrix file")->required();
    per_cmd->add_option("--algorithm", algorithm, "ryser (default) or naive")
        ->check(CLI::IsMember({"ryser", "naive"}));

    auto* induced_cmd = app.add_subcommand("induced", "r-th induced matrix");
    std::string induced_path;
    int induced_r = 1;
    std::string scaling = "scaled";
    induced_cmd->add_option("input", induced_path, "matrix file")->required();
    induced_cmd->add_option("--r", induced_r, "induced order (default 1)");
    induced_cmd
        ->add_option("--scaling", scaling,
                     "scaled: entries per/sqrt(mu mu); permanent-scaled: raw subset permanents")
        ->check(CLI::IsMember({"scaled", "permanent-scaled"}));

    auto* encode_cmd = app.add_subcommand("encode", "GBS encodability of a complex symmetric matrix");
    std::string encode_path;
    double encode_c = 0.0;
    encode_cmd->add_option("input", encode_path, "matrix file")->required();
    CLI::Option* c_option =
        encode_cmd->add_option("--c", encode_c, "scaling constant; builds sigma when given");

    auto* verify_cmd = app.add_subcommand("verify", "randomized property suites");
    std::string suite = "all";
    int trials = 200;
    std::uint64_t seed = 1;
    verify_cmd->add_option("--suite", suite, "suite name (default all)")
        ->check(CLI::IsMember(
            {"nonnegativity", "monotonicity", "schur", "induced", "block", "all"}));
    verify_cmd->add_option("--trials", trials, "trials per matrix order (default 200)");
    verify_cmd->add_option("--seed", seed, "PRNG seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (haf_cmd->parsed()) {
            return run_haf(haf_path);
        }
        if (block_cmd->parsed()) {
            return run_haf_block(block_path);
        }
        if (per_cmd->parsed()) {
            return run_per(per_path, algorithm);
        }
        if (induced_cmd->parsed()) {
            return run_induced(induced_path, induced_r, scaling);
        }
        if (encode_cmd->parsed()) {
            return run_encode(encode_path, c_option->count() > 0, encode_c);
        }
        if (verify_cmd->parsed()) {
            return run_verify(suite, trials, seed);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
    return 2;
}
