#include "rescoal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "rescoal/errors.hpp"
#include "rescoal/format.hpp"
#include "rescoal/graph.hpp"

namespace rescoal {

namespace {

constexpr double kResidualTol = 1e-9; // identity/defining-property residuals
constexpr double kCondLimit = 1e12;   // singularity threshold

// Condition estimate for a symmetric matrix from its spectrum.
// Returns +inf for an exactly singular one.
double sym_condition(const Eigen::MatrixXd& m) {
    if (m.rows() == 0) return 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    const auto ev = es.eigenvalues().cwiseAbs();
    double lo = ev.minCoeff(), hi = ev.maxCoeff();
    if (lo == 0.0) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

Eigen::MatrixXd invert_checked(const Eigen::MatrixXd& m, const char* what) {
    if (m.rows() != m.cols())
        throw invalid_parameter_error(std::string(what) + ": block not square");
    if (m.rows() == 0) return m;
    if (sym_condition((m + m.transpose()) / 2.0) > kCondLimit)
        throw singular_matrix_error(std::string(what) +
                                    ": singular or near-singular block");
    return m.fullPivLu().inverse();
}

void require_residual(const Eigen::MatrixXd& resid, double scale,
                      const char* what) {
    if (max_abs(resid) > kResidualTol * std::max(1.0, scale))
        throw contract_violation_error(std::string(what) +
                                       ": residual exceeds tolerance");
}

} // namespace

double max_abs(const Eigen::MatrixXd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

SymMatrix::SymMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
        throw invalid_parameter_error("SymMatrix: matrix not square");
    for (int i = 0; i < m_.rows(); ++i)
        for (int j = i + 1; j < m_.cols(); ++j) {
            double a = m_(i, j), b = m_(j, i);
            if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a)))
                throw contract_violation_error(
                    "SymMatrix: asymmetry at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
        }
    m_ = ((m_ + m_.transpose()) / 2.0).eval();
}

SymMatrix SymMatrix::zero(int n) {
    return SymMatrix(Eigen::MatrixXd::Zero(n, n));
}

SymMatrix SymMatrix::identity(int n) {
    return SymMatrix(Eigen::MatrixXd::Identity(n, n));
}

SymEigen sym_eigen(const SymMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.mat());
    if (es.info() != Eigen::Success)
        throw contract_violation_error("sym_eigen: eigensolver failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

GenInverse::GenInverse(SymMatrix x, InverseKind kind, const SymMatrix& of)
    : x_(std::move(x)), kind_(kind) {
    if (x_.n() != of.n())
        throw invalid_parameter_error("GenInverse: dimension mismatch");
    const Eigen::MatrixXd& M = of.mat();
    const Eigen::MatrixXd& X = x_.mat();
    const double scale = max_abs(M);
    switch (kind_) {
    case InverseKind::one_inverse:
        require_residual(M * X * M - M, scale, "GenInverse: MXM=M");
        break;
    case InverseKind::group_inverse:
        require_residual(M * X * M - M, scale, "GenInverse: MXM=M");
        require_residual(X * M * X - X, std::max(scale, max_abs(X)),
                         "GenInverse: XMX=X");
        require_residual(M * X - X * M, scale, "GenInverse: MX=XM");
        break;
    case InverseKind::ordinary_inverse:
        require_residual(M * X - Eigen::MatrixXd::Identity(M.rows(), M.cols()),
                         scale, "GenInverse: MX=I");
        break;
    }
}

SymMatrix laplacian(const Graph& g) {
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(g.n(), g.n());
    for (const auto& [u, v] : g.edges()) {
        l(u, u) += 1.0;
        l(v, v) += 1.0;
        l(u, v) -= 1.0;
        l(v, u) -= 1.0;
    }
    return SymMatrix(std::move(l));
}

SymMatrix block_inverse(const Eigen::MatrixXd& c0, const Eigen::MatrixXd& c1,
                        const Eigen::MatrixXd& c2, const Eigen::MatrixXd& c3) {
    const auto n0 = c0.rows(), n3 = c3.rows();
    if (c0.cols() != n0 || c3.cols() != n3 || c1.rows() != n0 ||
        c1.cols() != n3 || c2.rows() != n3 || c2.cols() != n0)
        throw invalid_parameter_error("block_inverse: incompatible block shapes");

    const Eigen::MatrixXd c0inv = invert_checked(c0, "block_inverse: C0");
    const Eigen::MatrixXd p = c3 - c2 * c0inv * c1;
    const Eigen::MatrixXd pinv = invert_checked(p, "block_inverse: Schur complement");

    Eigen::MatrixXd x(n0 + n3, n0 + n3);
    x.topLeftCorner(n0, n0) = c0inv + c0inv * c1 * pinv * c2 * c0inv;
    x.topRightCorner(n0, n3) = -c0inv * c1 * pinv;
    x.bottomLeftCorner(n3, n0) = -pinv * c2 * c0inv;
    x.bottomRightCorner(n3, n3) = pinv;

    Eigen::MatrixXd c(n0 + n3, n0 + n3);
    c << c0, c1, c2, c3;
    require_residual(c * x - Eigen::MatrixXd::Identity(n0 + n3, n0 + n3),
                     max_abs(c), "block_inverse: CX=I");
    return SymMatrix(std::move(x)); // rejects non-symmetric C via its X
}

GenInverse one_inverse_block(const SymMatrix& l1, const Eigen::MatrixXd& l2,
                             const SymMatrix& l3) {
    const int n1 = l1.n(), n2 = l3.n();
    if (l2.rows() != n1 || l2.cols() != n2)
        throw invalid_parameter_error("one_inverse_block: L2 shape mismatch");
    if (n2 < 1)
        throw invalid_parameter_error("one_inverse_block: empty second block");

    // Each column of L2^T (= each row of L2) must be all -1 or all 0.
    for (int i = 0; i < n1; ++i) {
        bool all_zero = true, all_minus = true;
        for (int j = 0; j < n2; ++j) {
            double v = l2(i, j);
            if (std::abs(v) > 1e-12) all_zero = false;
            if (std::abs(v + 1.0) > 1e-12) all_minus = false;
        }
        if (!all_zero && !all_minus)
            throw invalid_parameter_error(
                "one_inverse_block: column pattern violated at row " +
                std::to_string(i));
    }

    const Eigen::MatrixXd l1inv = invert_checked(l1.mat(), "one_inverse_block: L1");
    const Eigen::MatrixXd s = l3.mat() - l2.transpose() * l1inv * l2;
    // S is the Laplacian-like Schur complement: group inverse via rank-one shift.
    const Eigen::MatrixXd j = Eigen::MatrixXd::Ones(n2, n2) / double(n2);
    const Eigen::MatrixXd ssharp = (s + j).fullPivLu().inverse() - j;

    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n1 + n2, n1 + n2);
    x.topLeftCorner(n1, n1) = l1inv;
    x.bottomRightCorner(n2, n2) = ssharp;

    Eigen::MatrixXd m(n1 + n2, n1 + n2);
    m << l1.mat(), l2, l2.transpose(), l3.mat();
    return GenInverse(SymMatrix(std::move(x)), InverseKind::one_inverse,
                      SymMatrix(std::move(m)));
}

SymMatrix shifted_group_inverse(const SymMatrix& l, double a, int n) {
    if (a <= 0.0)
        throw invalid_parameter_error("shifted_group_inverse: need a > 0");
    if (n != l.n())
        throw invalid_parameter_error("shifted_group_inverse: n does not match L");
    const Eigen::MatrixXd i = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd j = Eigen::MatrixXd::Ones(n, n);
    const Eigen::MatrixXd x =
        (l.mat() + a * i).ldlt().solve(i) - j / (a * n);

    // Group-inverse identities against N = L + aI - (a/n)J.
    const Eigen::MatrixXd nn = l.mat() + a * i - (a / n) * j;
    const double scale = max_abs(nn);
    require_residual(nn * x * nn - nn, scale, "shifted_group_inverse: NXN=N");
    require_residual(x * nn * x - x, std::max(scale, max_abs(x)),
                     "shifted_group_inverse: XNX=X");
    require_residual(nn * x - x * nn, scale, "shifted_group_inverse: NX=XN");
    return SymMatrix(x);
}

SymMatrix ri_minus_sj_inverse(double r, double s, int n) {
    if (n < 1) throw invalid_parameter_error("ri_minus_sj_inverse: need n >= 1");
    if (r <= 0.0) throw invalid_parameter_error("ri_minus_sj_inverse: need r > 0");
    const double denom = r - n * s;
    if (std::abs(denom) <= 1e-12 * std::max({1.0, std::abs(r), std::abs(n * s)}))
        throw singular_matrix_error("ri_minus_sj_inverse: r = n*s, matrix singular");

    const Eigen::MatrixXd i = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd j = Eigen::MatrixXd::Ones(n, n);
    const Eigen::MatrixXd x = i / r + (s / (r * denom)) * j;

    const Eigen::MatrixXd m = r * i - s * j;
    if (max_abs(m * x - i) > 1e-10 * std::max(1.0, max_abs(m)))
        throw contract_violation_error("ri_minus_sj_inverse: residual too large");
    return SymMatrix(x);
}

GenInverse laplacian_pseudoinverse(const SymMatrix& l) {
    const int n = l.n();
    Eigen::VectorXd rowsum = l.mat().rowwise().sum();
    if (rowsum.cwiseAbs().maxCoeff() > kResidualTol * std::max(1.0, max_abs(l.mat())))
        throw invalid_parameter_error(
            "laplacian_pseudoinverse: input has nonzero row sums");
    if (n > 1) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l.mat(),
                                                          Eigen::EigenvaluesOnly);
        if (es.eigenvalues()(1) < 1e-9)
            throw disconnected_graph_error(
                "laplacian_pseudoinverse: graph is disconnected "
                "(second-smallest eigenvalue below 1e-9)");
    }
    const Eigen::MatrixXd j = Eigen::MatrixXd::Ones(n, n) / double(n);
    const Eigen::MatrixXd i = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd x = (l.mat() + j).ldlt().solve(i) - j;

    GenInverse result(SymMatrix(std::move(x)), InverseKind::group_inverse, l);
    Eigen::VectorXd xsum = result.matrix().mat().rowwise().sum();
    if (xsum.cwiseAbs().maxCoeff() > kResidualTol)
        throw contract_violation_error(
            "laplacian_pseudoinverse: result row sums not zero");
    return result;
}

void dump_matrix(const Eigen::MatrixXd& m, std::ostream& out) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << fmt_dump(m(i, j));
        }
        out << '\n';
    }
}

} // namespace rescoal
