// Copyright 2026 The nlconv Authors
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

#ifndef NLCONV_TESTS_ORACLES_HPP
#define NLCONV_TESTS_ORACLES_HPP

// Independent reference computations for the tests. Everything here is
// written from index arithmetic and general-purpose Eigen solvers only, never
// through the library code it checks.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

inline Vec kron(const Vec &a, const Vec &b) {
    Vec out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index k = 0; k < b.size(); ++k) out(i * b.size() + k) = a(i) * b(k);
    return out;
}

inline int bit(int index, int qubit, int n) { return (index >> (n - 1 - qubit)) & 1; }

// Keeps the listed qubits (in the given order) of an n-qubit matrix.
inline Mat partial_trace(const Mat &rho, int n, const std::vector<int> &keep) {
    const int k = static_cast<int>(keep.size());
    Mat out = Mat::Zero(1 << k, 1 << k);
    for (int i = 0; i < (1 << n); ++i) {
        for (int j = 0; j < (1 << n); ++j) {
            bool traced_equal = true;
            for (int q = 0; q < n; ++q) {
                bool kept = false;
                for (int kq : keep) kept = kept || kq == q;
                if (!kept && bit(i, q, n) != bit(j, q, n)) traced_equal = false;
            }
            if (!traced_equal) continue;
            int a = 0, b = 0;
            for (int p = 0; p < k; ++p) {
                a = (a << 1) | bit(i, keep[p], n);
                b = (b << 1) | bit(j, keep[p], n);
            }
            out(a, b) += rho(i, j);
        }
    }
    return out;
}

inline Mat identity(int d) { return Mat::Identity(d, d); }

// Operator acting on qubits (q, q+1) of an n-qubit register.
inline Mat embed_adjacent(const Mat &op, int first, int n) {
    return kron(kron(identity(1 << first), op), identity(1 << (n - first - 2)));
}

// (sum_k sqrt(eig(a b)))^2 from the general complex eigensolver; eig(ab)
// equals eig(sqrt(a) b sqrt(a)) without any matrix square root.
inline double fidelity(const Mat &a, const Mat &b) {
    // Eigenvalues of a*b are non-negative; those at rounding level are dropped
    // because their square roots would otherwise add ~1e-8 of noise.
    Eigen::ComplexEigenSolver<Mat> es(a * b);
    double largest = es.eigenvalues().cwiseAbs().maxCoeff();
    double t = 0.0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        double v = es.eigenvalues()(k).real();
        if (v > 1e-13 * largest) t += std::sqrt(v);
    }
    return t * t;
}

inline Mat random_density(int dim, int rank, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Mat a(dim, rank);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = C(g(rng), g(rng));
    Mat rho = a * a.adjoint();
    return rho / rho.trace().real();
}

inline Vec random_ket(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vec v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = C(g(rng), g(rng));
    return v / v.norm();
}

inline Vec ket(const char *labels) {
    Vec out = Vec::Ones(1);
    const double r = 1.0 / std::sqrt(2.0);
    for (const char *c = labels; *c; ++c) {
        Vec q(2);
        switch (*c) {
            case 'H': q << 1, 0; break;
            case 'V': q << 0, 1; break;
            case '+': q << r, r; break;
            case '-': q << r, -r; break;
            case 'R': q << r, C(0, r); break;
            case 'L': q << r, C(0, -r); break;
        }
        out = kron(out, q);
    }
    return out;
}

// Process action straight from the Choi definition with an explicit
// input-index sum: out = sum_{a,a'} rho[a',a] chi[(a',.),(a,.)] ... written
// here as Tr_in[(rho^T (x) 1) chi].
inline Mat choi_apply(const Mat &chi, const Mat &rho) {
    Mat big = kron(Mat(rho.transpose()), identity(4)) * chi;
    Mat out = Mat::Zero(4, 4);
    for (int a = 0; a < 4; ++a) out += big.block(a * 4, a * 4, 4, 4);
    return out;
}

// Wootters spin-flip concurrence from eigenvalues of rho * rho~ (general solver).
inline double concurrence(const Mat &rho) {
    Mat yy = Mat::Zero(4, 4);
    yy(0, 3) = -1; yy(1, 2) = 1; yy(2, 1) = 1; yy(3, 0) = -1;
    Mat flipped = yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<Mat> es(rho * flipped);
    std::vector<double> l;
    for (int k = 0; k < 4; ++k) l.push_back(std::sqrt(std::max(es.eigenvalues()(k).real(), 0.0)));
    std::sort(l.rbegin(), l.rend());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

}  // namespace oracle

#endif
