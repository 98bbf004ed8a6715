// Dense symmetric linear algebra: validated symmetric matrices, generalized
// inverses, and the four structured-inverse constructions (block inverse,
// block {1}-inverse, shifted group inverse, (rI-sJ)^{-1}).
#pragma once

#include <Eigen/Dense>
#include <iosfwd>

namespace rescoal {

class Graph;

double max_abs(const Eigen::MatrixXd& m);

// Square matrix validated symmetric within 1e-12 relative on construction;
// stored exactly symmetrized so downstream solvers see a clean input.
class SymMatrix {
public:
    explicit SymMatrix(Eigen::MatrixXd m);
    static SymMatrix zero(int n);
    static SymMatrix identity(int n);

    int n() const { return static_cast<int>(m_.rows()); }
    double operator()(int i, int j) const { return m_(i, j); }
    const Eigen::MatrixXd& mat() const { return m_; }

private:
    Eigen::MatrixXd m_;
};

struct SymEigen {
    Eigen::VectorXd values;  // ascending
    Eigen::MatrixXd vectors; // orthonormal columns, vectors.col(i) <-> values[i]
};

SymEigen sym_eigen(const SymMatrix& m);

enum class InverseKind { one_inverse, group_inverse, ordinary_inverse };

// A generalized inverse X of a matrix M, checked on construction:
//   one_inverse:      M X M = M            (within 1e-9, max-norm scaled)
//   group_inverse:    additionally X M X = X and M X = X M
//   ordinary_inverse: M X = I
class GenInverse {
public:
    GenInverse(SymMatrix x, InverseKind kind, const SymMatrix& of);

    const SymMatrix& matrix() const { return x_; }
    InverseKind kind() const { return kind_; }

private:
    SymMatrix x_;
    InverseKind kind_;
};

// L = D - A for the graph; row sums zero, diagonal = degrees.
SymMatrix laplacian(const Graph& g);

// Inverse of C = [[C0,C1],[C2,C3]] via the Schur complement
// P = C3 - C2 C0^{-1} C1. C must be symmetric overall (C2 = C1^T) since the
// result is a SymMatrix. Throws singular_matrix_error when C0 or P has
// condition estimate above 1e12.
SymMatrix block_inverse(const Eigen::MatrixXd& c0, const Eigen::MatrixXd& c1,
                        const Eigen::MatrixXd& c2, const Eigen::MatrixXd& c3);

// {1}-inverse of the connected-graph Laplacian [[L1,L2],[L2^T,L3]] under the
// column-pattern hypothesis (each column of L2^T all -1 or all 0):
// diag(L1^{-1}, S^#) with S the Schur complement L3 - L2^T L1^{-1} L2.
GenInverse one_inverse_block(const SymMatrix& l1, const Eigen::MatrixXd& l2,
                             const SymMatrix& l3);

// (L + aI - (a/n)J)^# = (L + aI)^{-1} - (1/(an))J for a > 0.
// n is the dimension and must match L.
SymMatrix shifted_group_inverse(const SymMatrix& l, double a, int n);

// (rI - sJ)^{-1} = (1/r)I + (s/(r(r-ns)))J, defined when r > 0 and r != ns.
SymMatrix ri_minus_sj_inverse(double r, double s, int n);

// Group inverse L^# = (L + J/n)^{-1} - J/n of a connected-graph Laplacian.
// Throws disconnected_graph_error when the second-smallest eigenvalue
// is below 1e-9.
GenInverse laplacian_pseudoinverse(const SymMatrix& l);

// Debug dump: one row per line, single-space separated, 17 significant digits.
void dump_matrix(const Eigen::MatrixXd& m, std::ostream& out);

} // namespace rescoal
