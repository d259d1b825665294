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

// Acceptance suite: every release-blocking check in one binary, one verdict
// line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hafkit/combinatorics.hpp"
#include "hafkit/complex_matrix.hpp"
#include "hafkit/gbs.hpp"
#include "hafkit/hafnian.hpp"
#include "hafkit/induced.hpp"
#include "hafkit/linalg.hpp"
#include "hafkit/matrix_io.hpp"
#include "hafkit/verify.hpp"

using namespace hafkit;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int run_command(const std::string& args, std::string* output = nullptr) {
    const std::string command = std::string(HAFKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return -1;
    }
    char buffer[4096];
    while (fgets(buffer, sizeof(buffer), pipe) != nullptr) {
        if (output != nullptr) {
            *output += buffer;
        }
    }
    const int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Criterion {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& message) {
        if (!ok && passed) {
            passed = false;
            detail = message;
        }
    }
};

// 1. hafnian vs the permutation-sum oracle, orders 2..8, under 10 s.
Criterion hafnian_oracle_equivalence() {
    Criterion c;
    const auto start = Clock::now();
    double worst = 0.0;
    for (int order = 2; order <= 8; order += 2) {
        InstanceGenerator gen(1000 + static_cast<std::uint64_t>(order), order);
        for (int trial = 0; trial < 100; ++trial) {
            const ComplexMatrix a = gen.symmetric();
            const Complex expected = hafnian_naive(a);
            const double dev =
                std::abs(hafnian(a) - expected) / std::max(1.0, std::abs(expected));
            worst = std::max(worst, dev);
        }
    }
    const double elapsed = seconds_since(start);
    char detail[128];
    std::snprintf(detail, sizeof(detail), "max rel dev %.2e, %.2f s", worst, elapsed);
    c.detail = detail;
    c.require(worst <= 1e-10, c.detail + " (tolerance 1e-10)");
    c.require(elapsed < 10.0, c.detail + " (limit 10 s)");
    return c;
}

// 2. Ryser vs the expansion oracle, orders 1..8.
Criterion permanent_oracle_equivalence() {
    Criterion c;
    double worst = 0.0;
    for (int order = 1; order <= 8; ++order) {
        InstanceGenerator gen(2000 + static_cast<std::uint64_t>(order), order);
        for (int trial = 0; trial < 100; ++trial) {
            const ComplexMatrix b = gen.dense(order, order);
            const Complex expected = permanent_naive(b);
            const double dev =
                std::abs(permanent_ryser(b) - expected) / std::max(1.0, std::abs(expected));
            worst = std::max(worst, dev);
        }
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "max rel dev %.2e", worst);
    c.detail = detail;
    c.require(worst <= 1e-10, c.detail + " (tolerance 1e-10)");
    return c;
}

// 3. block decomposition identity on 200 instances, M <= 5, Hermitian B.
Criterion block_identity() {
    Criterion c;
    const PropertyReport report = verify_block_formula(40, 5, 3);
    c.detail = report_line(report, "");
    c.require(report.trials == 200 && report.failures == 0, c.detail);
    return c;
}

// 4. nonnegativity, 200 trials per M in 1..5, 25% singular B.
Criterion nonnegativity() {
    Criterion c;
    const PropertyReport report = verify_nonnegativity(200, 5, 4);
    c.detail = report_line(report, "");
    c.require(report.trials == 1000 && report.failures == 0, c.detail);
    return c;
}

// 5. monotonicity in B, 200 trials, M <= 4.
Criterion monotonicity() {
    Criterion c;
    const PropertyReport report = verify_monotonicity(50, 4, 5);
    c.detail = report_line(report, "");
    c.require(report.trials == 200 && report.failures == 0, c.detail);
    return c;
}

// 6. induced-matrix suite: exact identity, multiplicativity, PSD preservation,
//    Loewner monotonicity.
Criterion induced_suite() {
    Criterion c;
    for (int m = 1; m <= 4; ++m) {
        for (int r = 1; r <= 3; ++r) {
            const InducedMatrix p = induced_p(ComplexMatrix::identity(m), r);
            const double dev =
                max_abs_diff(p.data, ComplexMatrix::identity(p.data.rows()));
            c.require(dev <= 1e-12, "P_r(I) deviates by " + std::to_string(dev));
        }
    }
    const std::vector<PropertyReport> reports = verify_induced_suite(100, 6);
    long failures = 0;
    for (const PropertyReport& report : reports) {
        failures += report.failures;
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "identity exact, %ld failures in 4x100 trials",
                  failures);
    if (c.passed) {
        c.detail = detail;
    }
    c.require(failures == 0, c.detail);
    return c;
}

// 7. Schur inequality per(B) >= det(B) >= 0 on 200 PSD instances.
Criterion schur_inequality() {
    Criterion c;
    const PropertyReport report = verify_schur(25, 8, 7);
    c.detail = report_line(report, "");
    c.require(report.trials == 200 && report.failures == 0, c.detail);
    return c;
}

// 8. covariance round trip and physicality for 100 encodable R at
//    c = {0.5, 0.9} c_max, plus the exact vacuum.
Criterion covariance_round_trip() {
    Criterion c;
    double worst_residual = 0.0;
    double min_nu = 1.0;
    int instances = 0;
    for (int m = 1; m <= 4; ++m) {
        InstanceGenerator gen(8000 + static_cast<std::uint64_t>(m), m);
        for (int trial = 0; trial < 25; ++trial) {
            const ComplexMatrix r = assemble(BlockMatrix(gen.symmetric(), gen.psd()));
            const double c_max = 1.0 / spectral_norm(r);
            for (double fraction : {0.5, 0.9}) {
                const double scaling = fraction * c_max;
                const CovarianceMatrix cov = build_covariance(r, scaling);
                const int n = r.rows();
                const ComplexMatrix identity = ComplexMatrix::identity(n);
                const ComplexMatrix reconstructed =
                    x_matrix(n) * (identity - inverse(cov.sigma + 0.5 * identity));
                worst_residual = std::max(
                    worst_residual, max_abs_diff(Complex(scaling, 0.0) * r, reconstructed));
                min_nu = std::min(min_nu, cov.symplectic_eigenvalues.front());
            }
            ++instances;
        }
    }
    const CovarianceMatrix vacuum = build_covariance(ComplexMatrix(8, 8), 1.0);
    const double vacuum_dev =
        max_abs_diff(vacuum.sigma, 0.5 * ComplexMatrix::identity(8));

    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "%d instances, residual %.2e, min nu %.12f, vacuum dev %.2e", instances,
                  worst_residual, min_nu, vacuum_dev);
    c.detail = detail;
    c.require(instances == 100, c.detail);
    c.require(worst_residual <= 1e-9, c.detail + std::string(" (residual bound 1e-9)"));
    c.require(min_nu >= 0.5 - 1e-9, c.detail + std::string(" (physicality bound)"));
    c.require(vacuum_dev <= 1e-12, c.detail + std::string(" (vacuum bound 1e-12)"));
    return c;
}

// 9. performance floor: dense 16x16 hafnian < 5 s, hafnian_block at M = 8 < 30 s.
Criterion performance_floor() {
    Criterion c;
    InstanceGenerator gen16(9016, 16);
    const ComplexMatrix dense16 = gen16.symmetric();
    auto start = Clock::now();
    const Complex h16 = hafnian(dense16);
    const double t16 = seconds_since(start);

    InstanceGenerator gen8(9008, 8);
    const BlockMatrix ab(gen8.symmetric(), gen8.hermitian());
    start = Clock::now();
    const Complex h_block = hafnian_block(ab);
    const double t_block = seconds_since(start);

    char detail[160];
    std::snprintf(detail, sizeof(detail), "16x16 hafnian %.2f s (|h|=%.3e), M=8 block %.2f s (|h|=%.3e)",
                  t16, std::abs(h16), t_block, std::abs(h_block));
    c.detail = detail;
    c.require(t16 < 5.0, c.detail + std::string(" (limit 5 s)"));
    c.require(t_block < 30.0, c.detail + std::string(" (limit 30 s)"));
    return c;
}

// 10. CLI contract: bit-exact file round trips, exit codes, full verify under 60 s.
Criterion cli_contract() {
    Criterion c;
    const fs::path dir = fs::temp_directory_path() / "hafkit_acceptance";
    fs::create_directories(dir);

    for (int trial = 0; trial < 50; ++trial) {
        const double magnitude = std::pow(10.0, 4.0 * (trial % 7) - 12.0);
        InstanceGenerator gen(10000 + static_cast<std::uint64_t>(trial), 3, magnitude);
        const ComplexMatrix m = gen.dense(3, 3);
        const std::string path = (dir / ("roundtrip" + std::to_string(trial) + ".json")).string();
        save_matrix(path, m);
        c.require(load_matrix(path) == m, "file round trip not bit-exact at trial " +
                                              std::to_string(trial));
    }

    const auto fixture = [&](const std::string& name, const ComplexMatrix& m) {
        const std::string path = (dir / name).string();
        save_matrix(path, m);
        return path;
    };
    c.require(run_command("haf " + fixture("ok.json", ComplexMatrix(2, 2, {0, 1, 1, 0}))) == 0,
              "haf on a valid file must exit 0");
    {
        const std::string garbage = (dir / "garbage.json").string();
        std::ofstream(garbage) << "{broken";
        c.require(run_command("haf " + garbage) == 2, "parse error must exit 2");
    }
    c.require(run_command("haf " + fixture("odd.json", ComplexMatrix(3, 3))) == 3,
              "odd order must exit 3");
    c.require(run_command("per --algorithm naive " + fixture("n12.json", ComplexMatrix(12, 12))) ==
                  4,
              "naive permanent cap must exit 4");
    c.require(run_command("encode " + fixture("neg.json", ComplexMatrix(2, 2, {0, -1, -1, 0}))) ==
                  1,
              "condition violation must exit 1");
    c.require(run_command("verify --suite bogus") == 2, "unknown suite must exit 2");

    const auto start = Clock::now();
    const int verify_exit = run_command("verify --suite all --trials 200 --seed 1");
    const double verify_seconds = seconds_since(start);

    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "50 bit-exact round trips, exit codes 0/1/2/3/4, verify all %.1f s",
                  verify_seconds);
    if (c.passed) {
        c.detail = detail;
    }
    c.require(verify_exit == 0, "verify --suite all must exit 0");
    c.require(verify_seconds < 60.0, c.detail + std::string(" (limit 60 s)"));
    fs::remove_all(dir);
    return c;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria = {
        {"hafnian-oracle-equivalence", hafnian_oracle_equivalence},
        {"permanent-oracle-equivalence", permanent_oracle_equivalence},
        {"block-decomposition-identity", block_identity},
        {"nonnegativity", nonnegativity},
        {"monotonicity", monotonicity},
        {"induced-matrix-suite", induced_suite},
        {"schur-inequality", schur_inequality},
        {"covariance-round-trip", covariance_round_trip},
        {"performance-floor", performance_floor},
        {"cli-contract", cli_contract},
    };

    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Criterion result;
        try {
            result = run();
        } catch (const std::exception& e) {
            result.passed = false;
            result.detail = std::string("exception: ") + e.what();
        }
        if (!result.passed) {
            ++failed;
        }
        std::printf("%s %2d %s (%s)\n", result.passed ? "PASS" : "FAIL", index, name.c_str(),
                    result.detail.c_str());
        std::fflush(stdout);
    }

    if (failed == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("acceptance: %d of %zu criteria FAILED\n", failed, criteria.size());
    }
    return failed == 0 ? 0 : 1;
}
