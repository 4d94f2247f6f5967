// Copyright 2026 The ucjiqp Authors
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

#ifndef UCJIQP_STATE_VECTOR_H
#define UCJIQP_STATE_VECTOR_H

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ucjiqp {

using Complex = std::complex<double>;

/// Largest register a dense statevector may hold. Set at configure time.
inline constexpr int kMaxStateModes = UCJIQP_MAX_STATE_MODES;

/// Throws CapacityError when `width` qubits/modes exceed kMaxStateModes.
void check_state_capacity(int width);

/// Basis convention used everywhere: mode (or qubit) g is bit g of the
/// integer index. Display strings print bit 0 first, so index 0b0011 on four
/// modes reads "1100".
std::string index_to_bits(uint64_t index, int width);
uint64_t bits_to_index(std::string_view bits);

/// Dense amplitudes over 2^modes computational basis states.
class StateVector {
   public:
    /// |0...0> on `modes` modes.
    explicit StateVector(int modes);
    StateVector(int modes, std::vector<Complex> amplitudes);

    static StateVector basis_state(int modes, uint64_t index);

    int modes() const {
        return modes_;
    }
    uint64_t dimension() const {
        return amps_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amps_;
    }
    std::span<Complex> amplitudes() {
        return amps_;
    }
    const Complex &operator[](uint64_t index) const {
        return amps_[index];
    }
    Complex &operator[](uint64_t index) {
        return amps_[index];
    }

    double norm() const;
    void scale(Complex factor);

    bool operator==(const StateVector &other) const = default;

   private:
    int modes_;
    std::vector<Complex> amps_;
};

/// Kronecker product with `low` on the least-significant bits.
StateVector tensor_product(const StateVector &low, const StateVector &high);

}  // namespace ucjiqp

#endif
