// Copyright 2026 The fnl Authors
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

#ifndef FNL_QUANTUM_QUANTUM_H
#define FNL_QUANTUM_QUANTUM_H

#include <span>
#include <vector>

#include "fnl/config.h"
#include "fnl/numkit/complex_matrix.h"
#include "fnl/quantum/behavior.h"

namespace fnl {

/// Pure state Σ_i √λ_i |a_i⟩|b_i⟩ on C^d ⊗ C^d, kept in Schmidt form.
class BipartitePureState {
   public:
    /// Σ_i √λ_i |ii⟩ in the computational bases. `coeffs` may be in any order;
    /// they are sorted descending and the bases permuted to match.
    static BipartitePureState from_schmidt(std::span<const double> coeffs, const Tolerances &tol = {});
    static BipartitePureState from_schmidt(std::span<const double> coeffs, ComplexMatrix basis_a,
                                           ComplexMatrix basis_b, const Tolerances &tol = {});
    /// General d×d vector, Alice's index most significant.
    static BipartitePureState from_vector(std::span<const Complex> v, std::size_t dim, const Tolerances &tol = {});

    int dim() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<double> &coeffs() const { return coeffs_; }
    const ComplexMatrix &basis_a() const { return basis_a_; }
    const ComplexMatrix &basis_b() const { return basis_b_; }
    double lambda_max() const { return coeffs_.front(); }
    double lambda_min() const { return coeffs_.back(); }

    /// Full d²-dimensional vector.
    ComplexVector vector() const;
    /// d×d amplitude matrix Ψ with |ψ⟩ = Σ Ψ_jk |j⟩|k⟩.
    ComplexMatrix amplitudes() const;

   private:
    BipartitePureState(std::vector<double> coeffs, ComplexMatrix basis_a, ComplexMatrix basis_b);

    std::vector<double> coeffs_;
    ComplexMatrix basis_a_;
    ComplexMatrix basis_b_;
};

/// Positive operator-valued measure on C^dim.
struct Povm {
    std::vector<ComplexMatrix> elements;

    std::size_t dim() const { return elements.empty() ? 0 : elements[0].rows(); }
    std::size_t outcomes() const { return elements.size(); }

    /// Rank-1 projective measurement onto the columns of a unitary.
    static Povm from_basis(const ComplexMatrix &unitary);
};

/// Throws ValidationError if an element is not Hermitian PSD or the elements
/// do not sum to the identity.
void validate_povm(const Povm &povm, const Tolerances &tol = {});

/// Indexed family of POVMs sharing one Hilbert-space dimension.
class MeasurementSet {
   public:
    MeasurementSet() = default;
    explicit MeasurementSet(std::vector<Povm> povms, const Tolerances &tol = {});

    std::size_t settings() const { return povms_.size(); }
    std::size_t dim() const { return povms_.empty() ? 0 : povms_[0].dim(); }
    /// Largest outcome count over settings (behaviors pad with zero-probability outcomes).
    std::size_t max_outcomes() const;
    const Povm &operator[](std::size_t x) const { return povms_[x]; }
    const std::vector<Povm> &povms() const { return povms_; }

   private:
    std::vector<Povm> povms_;
};

/// Bob's normalized conditional states |ψ^B_{a|x}⟩ and Alice's outcome weights p(a|x).
struct PostMeasurementFamily {
    struct Entry {
        ComplexVector state;  ///< unit vector, empty when the outcome is unrealizable
        double weight = 0;    ///< p(a|x)
        bool realizable() const { return !state.empty(); }
    };
    std::vector<std::vector<Entry>> entries;  ///< [x][a]

    std::size_t settings() const { return entries.size(); }
    std::size_t outcomes(std::size_t x) const { return entries[x].size(); }
    const Entry &at(std::size_t x, std::size_t a) const { return entries[x][a]; }
    /// Outcomes of setting x with nonzero probability.
    std::vector<int> realizable_outcomes(std::size_t x) const;
};

/// Conditional states on Bob's side after Alice's rank-1 measurements.
/// Outcomes with p(a|x) ≤ zero_weight are kept but flagged unrealizable.
/// Throws UnsupportedError for elements of rank > 1.
PostMeasurementFamily post_measurement_states(const BipartitePureState &state, const MeasurementSet &alice,
                                              const Tolerances &tol = {}, double zero_weight = 1e-14);

/// p(a,b|x,y) = ⟨ψ|A_{a|x} ⊗ B_{b|y}|ψ⟩.
RealBehavior born_behavior(const BipartitePureState &state, const MeasurementSet &alice, const MeasurementSet &bob);

/// |ψ⟩^{⊗k} as a single state of local dimension d^k, Schmidt coefficients
/// re-sorted descending. Throws ResourceError when d^k exceeds dimension_cap.
BipartitePureState tensor_copies(const BipartitePureState &state, int k, int dimension_cap = 64);

}  // namespace fnl

#endif
