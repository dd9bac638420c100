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

#include "porac/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace porac {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()) + ")");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(dim_ * dim_) + " entries, got " +
                                    std::to_string(entries_.size()));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    entries_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("ComplexMatrix: rows must form a square matrix");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "operator+=");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "operator-=");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &e : entries_) {
        e *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) {
                continue;
            }
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    out(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "matmul");
    const std::size_t d = a.dim();
    ComplexMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < d; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    const std::size_t d = a.dim();
    ComplexMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

ComplexMatrix conj_entries(const ComplexMatrix &a) {
    ComplexMatrix out = a;
    for (auto &e : out.entries()) {
        e = std::conj(e);
    }
    return out;
}

Complex trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "trace_product");
    const std::size_t d = a.dim();
    Complex sum{};
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            sum += a(i, j) * b(j, i);
        }
    }
    return sum;
}

Complex trace(const ComplexMatrix &a) {
    Complex sum{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += a(i, i);
    }
    return sum;
}

Complex determinant(const ComplexMatrix &a) {
    ComplexMatrix m = a;
    const std::size_t d = m.dim();
    Complex det = 1.0;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < d; ++r) {
            if (std::abs(m(r, col)) > std::abs(m(pivot, col))) {
                pivot = r;
            }
        }
        if (m(pivot, col) == Complex{}) {
            return 0.0;
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < d; ++c) {
                std::swap(m(pivot, c), m(col, c));
            }
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < d; ++r) {
            const Complex factor = m(r, col) / m(col, col);
            if (factor == Complex{}) {
                continue;
            }
            for (std::size_t c = col; c < d; ++c) {
                m(r, c) -= factor * m(col, c);
            }
        }
    }
    return det;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0.0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) {
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    }
    return worst;
}

double max_abs(const ComplexMatrix &a) {
    double worst = 0.0;
    for (const auto &e : a.entries()) {
        worst = std::max(worst, std::abs(e));
    }
    return worst;
}

double hermiticity_residual(const ComplexMatrix &a) {
    const std::size_t d = a.dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return worst;
}

Complex expectation(const ComplexMatrix &a, std::span<const Complex> v) {
    if (v.size() != a.dim()) {
        throw std::invalid_argument("expectation: vector length does not match matrix dimension");
    }
    Complex sum{};
    for (std::size_t i = 0; i < v.size(); ++i) {
        Complex row{};
        for (std::size_t j = 0; j < v.size(); ++j) {
            row += a(i, j) * v[j];
        }
        sum += std::conj(v[i]) * row;
    }
    return sum;
}

ComplexMatrix outer_projector(std::span<const Complex> v) {
    ComplexMatrix out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return out;
}

SpectralReport hermitian_eigenvalues(const ComplexMatrix &a, double tol, int max_sweeps) {
    if (hermiticity_residual(a) > tol) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian within tolerance");
    }
    ComplexMatrix m = a;
    const std::size_t d = m.dim();
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = m(i, i).real();
    }

    auto offdiag = [&m, d] {
        double worst = 0.0;
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                worst = std::max(worst, std::abs(m(p, q)));
            }
        }
        return worst;
    };

    SpectralReport report;
    double residual = offdiag();
    while (residual > tol) {
        if (report.sweeps >= max_sweeps) {
            throw std::runtime_error("hermitian_eigenvalues: no convergence after " + std::to_string(max_sweeps) +
                                     " sweeps (residual " + std::to_string(residual) + ")");
        }
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const double mag = std::abs(m(p, q));
                if (mag == 0.0) {
                    continue;
                }
                // Phase-rotate (p,q) to a real entry, then apply a real Jacobi rotation.
                const Complex phase = m(p, q) / mag;
                const double tau = (m(q, q).real() - m(p, p).real()) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Rotation J with J(p,p)=c, J(p,q)=s, J(q,p)=-s*conj(phase), J(q,q)=c*conj(phase).
                const Complex jpp = c;
                const Complex jpq = s;
                const Complex jqp = -s * std::conj(phase);
                const Complex jqq = c * std::conj(phase);
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex akp = m(k, p);
                    const Complex akq = m(k, q);
                    m(k, p) = akp * jpp + akq * jqp;
                    m(k, q) = akp * jpq + akq * jqq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex apk = m(p, k);
                    const Complex aqk = m(q, k);
                    m(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    m(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                m(p, p) = m(p, p).real();
                m(q, q) = m(q, q).real();
            }
        }
        ++report.sweeps;
        residual = offdiag();
    }

    report.max_offdiag_residual = residual;
    report.eigenvalues.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        report.eigenvalues[i] = m(i, i).real();
    }
    std::sort(report.eigenvalues.begin(), report.eigenvalues.end());
    return report;
}

namespace pauli {

ComplexMatrix identity() { return ComplexMatrix::identity(2); }

ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix y() {
    const Complex i{0.0, 1.0};
    return {{0.0, -i}, {i, 0.0}};
}

ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace pauli

}  // namespace porac
