// Test-side oracles kept deliberately independent of the library's solve
// routes: random graph generators, an eigendecomposition pseudoinverse, and
// the spectral identities for Kirchhoff / Kemeny.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "rescoal/graph.hpp"

namespace testsupport {

// Random spanning tree plus Bernoulli(1/3) extra edges: always connected.
inline rescoal::Graph random_connected_graph(std::mt19937_64& rng, int n) {
    std::set<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v)
        e.insert({static_cast<int>(rng() % v), v});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 3 == 0) e.insert({i, j});
    return rescoal::Graph(n, {e.begin(), e.end()});
}

// Bernoulli(1/2) edges, connectivity not guaranteed.
inline rescoal::Graph random_graph(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 2) e.emplace_back(i, j);
    return rescoal::Graph(n, std::move(e));
}

inline Eigen::MatrixXd dense_laplacian(const rescoal::Graph& g) {
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(g.n(), g.n());
    for (const auto& [u, v] : g.edges()) {
        l(u, u) += 1;
        l(v, v) += 1;
        l(u, v) -= 1;
        l(v, u) -= 1;
    }
    return l;
}

// Moore-Penrose pseudoinverse by spectral cutoff; a different route than
// the library's rank-one shift.
inline Eigen::MatrixXd eig_pinv(const Eigen::MatrixXd& m, double cut = 1e-9) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m.rows(), m.cols());
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        const double lam = es.eigenvalues()(i);
        if (std::abs(lam) > cut)
            out += es.eigenvectors().col(i) *
                   es.eigenvectors().col(i).transpose() / lam;
    }
    return out;
}

inline Eigen::MatrixXd resistance_via_pinv(const rescoal::Graph& g) {
    const Eigen::MatrixXd h = eig_pinv(dense_laplacian(g));
    Eigen::MatrixXd r(g.n(), g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            r(i, j) = h(i, i) + h(j, j) - 2 * h(i, j);
    return r;
}

// Kf = n * sum of reciprocal nonzero Laplacian eigenvalues.
inline double spectral_kirchhoff(const rescoal::Graph& g) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_laplacian(g),
                                                      Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > 1e-9) s += 1.0 / es.eigenvalues()(i);
    return g.n() * s;
}

// kappa = sum of reciprocal nonzero eigenvalues of D^{-1/2} L D^{-1/2}.
inline double spectral_kemeny(const rescoal::Graph& g) {
    Eigen::MatrixXd l = dense_laplacian(g);
    Eigen::VectorXd dinv(g.n());
    for (int i = 0; i < g.n(); ++i)
        dinv(i) = 1.0 / std::sqrt(double(g.degree(i)));
    const Eigen::MatrixXd nl = dinv.asDiagonal() * l * dinv.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(nl, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > 1e-9) s += 1.0 / es.eigenvalues()(i);
    return s;
}

} // namespace testsupport
