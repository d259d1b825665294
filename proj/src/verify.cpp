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

#include "hafkit/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "hafkit/hafnian.hpp"
#include "hafkit/induced.hpp"
#include "hafkit/linalg.hpp"
#include "hafkit/matrix_io.hpp"

namespace hafkit {

namespace {

// SplitMix64 output function; also used to derive one substream per order.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t substream(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed ^ (0xD1B54A32D192ED03ull * (stream + 1));
    return splitmix64(state);
}

bool singular_trial(int trial) { return trial % 4 == 3; }

std::string witness_json(const std::string& property, std::uint64_t seed, int m, int trial,
                         const std::vector<std::pair<std::string, const ComplexMatrix*>>& parts) {
    std::string out = "{\"property\":\"" + property + "\",\"seed\":" + std::to_string(seed) +
                      ",\"order\":" + std::to_string(m) + ",\"trial\":" + std::to_string(trial);
    for (const auto& [name, matrix] : parts) {
        out += ",\"" + name + "\":" + matrix_to_json(*matrix);
    }
    out += "}";
    return out;
}

void record(PropertyReport& report, double violation, double tol, std::string&& witness) {
    ++report.trials;
    report.worst_violation = std::max(report.worst_violation, violation);
    if (violation > tol) {
        ++report.failures;
        if (!report.witness) {
            report.witness = std::move(witness);
        }
    }
}

double min_eigen_violation(const ComplexMatrix& hermitian_matrix) {
    const HermitianEigen eig = eigh(hermitian_matrix);
    if (eig.eigenvalues.empty()) {
        return 0.0;
    }
    const double scale = std::max(
        1.0, std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back())));
    return std::max(0.0, -eig.eigenvalues.front() / scale);
}

} // namespace

InstanceGenerator::InstanceGenerator(std::uint64_t seed, int m, double magnitude)
    : state_(seed), m_(m), magnitude_(magnitude) {}

std::uint64_t InstanceGenerator::next_u64() { return splitmix64(state_); }

double InstanceGenerator::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Complex InstanceGenerator::gaussian() {
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return Complex(radius * std::cos(angle), radius * std::sin(angle));
}

ComplexMatrix InstanceGenerator::dense(int rows, int cols) {
    ComplexMatrix z(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            z(i, j) = magnitude_ * gaussian();
        }
    }
    return z;
}

ComplexMatrix InstanceGenerator::symmetric() {
    const ComplexMatrix z = dense(m_, m_);
    ComplexMatrix out(m_, m_);
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) {
            out(i, j) = 0.5 * (z(i, j) + z(j, i));
        }
    }
    return out;
}

ComplexMatrix InstanceGenerator::hermitian() {
    const ComplexMatrix z = dense(m_, m_);
    ComplexMatrix out(m_, m_);
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) {
            out(i, j) = 0.5 * (z(i, j) + std::conj(z(j, i)));
        }
    }
    return out;
}

ComplexMatrix InstanceGenerator::psd() {
    const ComplexMatrix g = dense(m_, m_);
    return g.adjoint() * g;
}

ComplexMatrix InstanceGenerator::psd_singular() {
    const ComplexMatrix g = dense(m_ - 1, m_);
    return g.adjoint() * g;
}

std::string report_line(const PropertyReport& report, const std::string& witness_path) {
    char worst[32];
    std::snprintf(worst, sizeof(worst), "%.3e", report.worst_violation);
    return report.property_name + " trials=" + std::to_string(report.trials) +
           " failures=" + std::to_string(report.failures) + " worst=" + worst +
           " witness=" + (witness_path.empty() ? "-" : witness_path);
}

PropertyReport verify_nonnegativity(int trials, int m_max, std::uint64_t seed) {
    PropertyReport report;
    report.property_name = "nonnegativity";
    for (int m = 1; m <= m_max; ++m) {
        InstanceGenerator gen(substream(seed, static_cast<std::uint64_t>(m)), m);
        for (int trial = 0; trial < trials; ++trial) {
            const ComplexMatrix y = gen.symmetric();
            const ComplexMatrix b = singular_trial(trial) ? gen.psd_singular() : gen.psd();
            const Complex h = hafnian_block(BlockMatrix(y, b));
            const double scale = std::max(1.0, std::abs(h));
            const double violation =
                std::max(std::max(0.0, -h.real() / scale), std::abs(h.imag()) / scale);
            record(report, violation, kNonnegativityTol,
                   witness_json("nonnegativity", seed, m, trial, {{"y", &y}, {"b", &b}}));
        }
    }
    return report;
}

PropertyReport verify_monotonicity(int trials, int m_max, std::uint64_t seed) {
    PropertyReport report;
    report.property_name = "monotonicity";
    for (int m = 1; m <= m_max; ++m) {
        InstanceGenerator gen(substream(seed, 0x100 + static_cast<std::uint64_t>(m)), m);
        for (int trial = 0; trial < trials; ++trial) {
            const ComplexMatrix y = gen.symmetric();
            const ComplexMatrix b = singular_trial(trial) ? gen.psd_singular() : gen.psd();
            const ComplexMatrix l = b + gen.psd();
            const Complex h_b = hafnian_block(BlockMatrix(y, b));
            const Complex h_l = hafnian_block(BlockMatrix(y, l));
            const double scale = std::max({1.0, std::abs(h_b), std::abs(h_l)});
            const double violation = std::max(0.0, (h_b.real() - h_l.real()) / scale);
            record(report, violation, kMonotonicityTol,
                   witness_json("monotonicity", seed, m, trial, {{"y", &y}, {"b", &b}, {"l", &l}}));
        }
    }
    return report;
}

PropertyReport verify_schur(int trials, int n_max, std::uint64_t seed) {
    PropertyReport report;
    report.property_name = "schur";
    for (int n = 1; n <= n_max; ++n) {
        InstanceGenerator gen(substream(seed, 0x200 + static_cast<std::uint64_t>(n)), n);
        for (int trial = 0; trial < trials; ++trial) {
            const ComplexMatrix b = singular_trial(trial) ? gen.psd_singular() : gen.psd();
            const Complex per = permanent_auto(b);
            const Complex det = determinant(b);
            const double scale = std::max({1.0, std::abs(per), std::abs(det)});
            const double violation = std::max(
                {0.0, (det.real() - per.real()) / scale, -det.real() / scale,
                 std::abs(per.imag()) / scale, std::abs(det.imag()) / scale});
            record(report, violation, kSchurTol,
                   witness_json("schur", seed, n, trial, {{"b", &b}}));
        }
    }
    return report;
}

std::vector<PropertyReport> verify_induced_suite(int trials, std::uint64_t seed) {
    PropertyReport identity_report;
    identity_report.property_name = "induced-identity";
    PropertyReport mult_report;
    mult_report.property_name = "induced-multiplicativity";
    PropertyReport psd_report;
    psd_report.property_name = "induced-psd";
    PropertyReport mono_report;
    mono_report.property_name = "induced-monotonicity";

    for (int trial = 0; trial < trials; ++trial) {
        const int m = 1 + trial % 4;
        const int n = 1 + (trial + 1) % 4;
        const int p = 1 + (trial + 2) % 4;
        const int r = 1 + trial % 3;
        InstanceGenerator gen(substream(seed, 0x300 + static_cast<std::uint64_t>(trial)), m);

        {
            const ComplexMatrix id_m = ComplexMatrix::identity(m);
            const InducedMatrix induced = induced_p(id_m, r);
            const double violation =
                max_abs_diff(induced.data, ComplexMatrix::identity(induced.data.rows()));
            record(identity_report, violation, kInducedIdentityTol,
                   witness_json("induced-identity", seed, m, trial, {}));
        }
        {
            const ComplexMatrix q = gen.dense(m, n);
            const ComplexMatrix s = gen.dense(n, p);
            const ComplexMatrix product_induced = induced_p(q * s, r).data;
            const ComplexMatrix induced_product = induced_p(q, r).data * induced_p(s, r).data;
            const double scale = std::max(1.0, product_induced.max_abs());
            const double violation = max_abs_diff(product_induced, induced_product) / scale;
            record(mult_report, violation, kInducedTol,
                   witness_json("induced-multiplicativity", seed, m, trial, {{"q", &q}, {"s", &s}}));
        }
        {
            const ComplexMatrix b = singular_trial(trial) ? gen.psd_singular() : gen.psd();
            const double violation = std::max(min_eigen_violation(induced_p(b, r).data),
                                              min_eigen_violation(induced_c(b, r)));
            record(psd_report, violation, kInducedTol,
                   witness_json("induced-psd", seed, m, trial, {{"b", &b}}));
        }
        {
            const ComplexMatrix b = singular_trial(trial) ? gen.psd_singular() : gen.psd();
            const ComplexMatrix l = b + gen.psd();
            const double violation =
                min_eigen_violation(induced_p(l, r).data - induced_p(b, r).data);
            record(mono_report, violation, kInducedTol,
                   witness_json("induced-monotonicity", seed, m, trial, {{"b", &b}, {"l", &l}}));
        }
    }
    return {identity_report, mult_report, psd_report, mono_report};
}

PropertyReport verify_block_formula(int trials, int m_max, std::uint64_t seed) {
    PropertyReport report;
    report.property_name = "block-formula";
    for (int m = 1; m <= m_max; ++m) {
        InstanceGenerator gen(substream(seed, 0x400 + static_cast<std::uint64_t>(m)), m);
        for (int trial = 0; trial < trials; ++trial) {
            const ComplexMatrix y = gen.symmetric();
            // the decomposition identity holds for any Hermitian B
            const ComplexMatrix b = gen.hermitian();
            const BlockMatrix ab(y, b);
            const Complex via_blocks = hafnian_block(ab);
            const Complex direct = hafnian(assemble(ab));
            const double scale = std::max(1.0, std::abs(direct));
            const double violation = std::abs(via_blocks - direct) / scale;
            record(report, violation, kBlockFormulaTol,
                   witness_json("block-formula", seed, m, trial, {{"y", &y}, {"b", &b}}));
        }
    }
    return report;
}

} // namespace hafkit
