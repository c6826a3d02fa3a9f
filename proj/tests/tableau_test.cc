// Copyright 2026 The PTIM Decoders Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "ptim/tableau.h"

#include <gtest/gtest.h>

#include <complex>
#include <vector>

namespace ptim {
namespace {

using Amplitudes = std::vector<std::complex<double>>;

// Applies a Pauli product to a state vector (qubit j is bit j of the index).
Amplitudes apply_pauli(const PauliRow &op, const Amplitudes &psi) {
    Amplitudes out(psi.size());
    const std::complex<double> i_unit(0, 1);
    for (uint64_t b = 0; b < psi.size(); ++b) {
        std::complex<double> phase = op.sign ? -1.0 : 1.0;
        for (int j = 0; j < 64; ++j) {
            bool x = (op.x >> j) & 1, z = (op.z >> j) & 1;
            bool bit = (b >> j) & 1;
            if (x && z) {
                phase *= bit ? -i_unit : i_unit;  // Y|0> = i|1>, Y|1> = -i|0>
            } else if (z && bit) {
                phase *= -1.0;
            }
        }
        out[b ^ op.x] += phase * psi[b];
    }
    return out;
}

double expectation(const PauliRow &op, const Amplitudes &psi) {
    Amplitudes phi = apply_pauli(op, psi);
    std::complex<double> s = 0;
    for (size_t b = 0; b < psi.size(); ++b) {
        s += std::conj(psi[b]) * phi[b];
    }
    return s.real();
}

// Projects onto the given eigenvalue of op and renormalizes.
void project(const PauliRow &op, int outcome, Amplitudes &psi) {
    Amplitudes phi = apply_pauli(op, psi);
    double norm = 0;
    for (size_t b = 0; b < psi.size(); ++b) {
        psi[b] = 0.5 * (psi[b] + static_cast<double>(outcome) * phi[b]);
        norm += std::norm(psi[b]);
    }
    for (auto &a : psi) {
        a /= std::sqrt(norm);
    }
}

PauliRow random_pauli(int n, RngStream &rng) {
    PauliRow op;
    uint64_t mask = (uint64_t{1} << n) - 1;
    do {
        op.x = rng.next() & mask;
        op.z = rng.next() & mask;
    } while (op.x == 0 && op.z == 0);
    return op;
}

TEST(Tableau, StartsInAllZeroState) {
    Tableau t(3);
    EXPECT_TRUE(t.is_consistent());
    EXPECT_EQ(t.peek(PauliRow{0, 0b001, false}), 1);
    EXPECT_EQ(t.peek(PauliRow{0, 0b110, false}), 1);
    EXPECT_EQ(t.peek(PauliRow{0, 0b110, true}), -1);
    EXPECT_FALSE(t.peek(PauliRow{0b001, 0, false}).has_value());
    EXPECT_THROW(Tableau(65), std::invalid_argument);
}

TEST(Tableau, PauliRowCommutation) {
    PauliRow x0{1, 0, false}, z0{0, 1, false}, z1{0, 2, false}, zz{0, 3, false}, xx{3, 0, false};
    EXPECT_FALSE(x0.commutes_with(z0));
    EXPECT_TRUE(x0.commutes_with(z1));
    EXPECT_TRUE(zz.commutes_with(xx));
    EXPECT_EQ(PauliRow({1, 2, true}).str(2), "-XZ");
}

TEST(Tableau, MatchesStateVectorOnRandomMeasurements) {
    RngStream rng(12, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 5;
        Tableau tab(n);
        Amplitudes psi(size_t{1} << n, 0.0);
        psi[0] = 1.0;
        for (int k = 0; k < 12; ++k) {
            PauliRow op = random_pauli(n, rng);
            double ev = expectation(op, psi);
            auto predicted = tab.peek(op);
            if (std::abs(std::abs(ev) - 1) < 1e-9) {
                ASSERT_TRUE(predicted.has_value());
                EXPECT_EQ(*predicted, ev > 0 ? 1 : -1);
            } else {
                EXPECT_NEAR(ev, 0.0, 1e-9);
                EXPECT_FALSE(predicted.has_value());
            }
            bool was_random = false;
            int outcome = tab.measure(op, rng, &was_random);
            EXPECT_EQ(was_random, !predicted.has_value());
            project(op, outcome, psi);
            EXPECT_NEAR(expectation(op, psi), outcome, 1e-9);
            EXPECT_EQ(tab.peek(op), outcome);
            ASSERT_TRUE(tab.is_consistent());
            for (int j = 0; j < n; ++j) {
                const PauliRow &s = tab.stabilizer(j);
                EXPECT_NEAR(expectation(s, psi), 1.0, 1e-9) << s.str(n);
            }
        }
    }
}

TEST(Tableau, DeterminedMeasurementsConsumeNoRandomness) {
    Tableau tab(4);
    RngStream a(1, 0), b(1, 0);
    tab.measure(PauliRow{0, 0b0011, false}, a);
    EXPECT_EQ(a.next(), b.next());
}

}  // namespace
}  // namespace ptim
