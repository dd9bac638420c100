// Copyright 2026 The PORAC Filter Authors
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

#ifndef PORAC_MATRIX_HPP
#define PORAC_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace porac {

using Complex = std::complex<double>;

/// Tolerance used wherever a caller does not supply one.
inline constexpr double kDefaultTol = 1e-10;

/// Dense square complex matrix stored row-major.
///
/// Every state and observable in the library is carried by this type. The
/// dimensions that occur in practice are powers of two up to 1024, so the
/// kernel is written for clarity rather than blocking or vectorisation.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
    /// Row-major nested initializer, e.g. {{0, 1}, {1, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t dim() const { return dim_; }
    std::span<const Complex> entries() const { return entries_; }
    std::span<Complex> entries() { return entries_; }

    Complex &operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

/// Kronecker product; a(i,j)*b occupies block (i,j) of the result.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Throws std::invalid_argument on dimension mismatch.
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix &a);

/// Entrywise complex conjugate, no transpose.
ComplexMatrix conj_entries(const ComplexMatrix &a);

/// Tr[a*b] as sum_{i,j} a(i,j) b(j,i); the product is never formed.
Complex trace_product(const ComplexMatrix &a, const ComplexMatrix &b);

Complex trace(const ComplexMatrix &a);

/// Determinant by Gaussian elimination with partial pivoting.
Complex determinant(const ComplexMatrix &a);

/// Largest |a(i,j) - b(i,j)|. Throws on dimension mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest |a(i,j)|.
double max_abs(const ComplexMatrix &a);

/// Largest |a - a^dagger| entry.
double hermiticity_residual(const ComplexMatrix &a);

/// <v|a|v> for a column vector v of length a.dim().
Complex expectation(const ComplexMatrix &a, std::span<const Complex> v);

/// |v><v|.
ComplexMatrix outer_projector(std::span<const Complex> v);

struct SpectralReport {
    std::vector<double> eigenvalues;  // ascending
    double max_offdiag_residual = 0.0;
    int sweeps = 0;
};

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Throws std::invalid_argument if `a` is not Hermitian within `tol` and
/// std::runtime_error if the off-diagonal residual does not fall below `tol`
/// within `max_sweeps` sweeps.
SpectralReport hermitian_eigenvalues(const ComplexMatrix &a, double tol = kDefaultTol, int max_sweeps = 100);

namespace pauli {

ComplexMatrix identity();
ComplexMatrix x();
/// ((0, -i), (i, 0)).
ComplexMatrix y();
ComplexMatrix z();

}  // namespace pauli

}  // namespace porac

#endif  // PORAC_MATRIX_HPP
