#include "rescoal/resistance.hpp"

#include <cmath>
#include <string>

#include "rescoal/errors.hpp"

namespace rescoal {

namespace {

constexpr double kMetricTol = 1e-9;

void check_metric(const Eigen::MatrixXd& r) {
    const int n = static_cast<int>(r.rows());
    for (int i = 0; i < n; ++i) {
        if (std::abs(r(i, i)) > 1e-12)
            throw contract_violation_error("resistance matrix: nonzero diagonal at " +
                                           std::to_string(i));
        for (int j = i + 1; j < n; ++j)
            if (r(i, j) < 1e-12)
                throw contract_violation_error(
                    "resistance matrix: nonpositive entry at (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (r(i, j) > r(i, k) + r(k, j) + kMetricTol)
                    throw contract_violation_error(
                        "resistance matrix: triangle inequality violated at (" +
                        std::to_string(i) + "," + std::to_string(j) + "," +
                        std::to_string(k) + ")");
}

// Squares away float dust on the diagonal before validation. Anything
// larger than dust is left alone for check_metric to reject.
SymMatrix clean_diagonal(SymMatrix r) {
    Eigen::MatrixXd m = r.mat();
    for (int i = 0; i < m.rows(); ++i)
        if (std::abs(m(i, i)) <= 1e-12) m(i, i) = 0.0;
    return SymMatrix(std::move(m));
}

} // namespace

ResistanceMatrix::ResistanceMatrix(SymMatrix r, Provenance prov)
    : r_(clean_diagonal(std::move(r))), prov_(std::move(prov)) {
    check_metric(r_.mat());
}

ResistanceMatrix resistance_from_generalized_inverse(const GenInverse& h,
                                                     Provenance prov) {
    const Eigen::MatrixXd& x = h.matrix().mat();
    const int n = static_cast<int>(x.rows());
    Eigen::MatrixXd r(n, n);
    for (int i = 0; i < n; ++i) {
        r(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) {
            r(i, j) = x(i, i) + x(j, j) - x(i, j) - x(j, i);
            r(j, i) = r(i, j);
        }
    }
    try {
        return ResistanceMatrix(SymMatrix(std::move(r)), std::move(prov));
    } catch (const contract_violation_error& e) {
        throw inconsistent_inverse_error(
            std::string("generalized inverse yields invalid resistances: ") +
            e.what());
    }
}

ResistanceMatrix resistance_oracle(const Graph& g) {
    return resistance_from_generalized_inverse(
        laplacian_pseudoinverse(laplacian(g)), Provenance::oracle());
}

namespace {

// Fills a rectangular block (and its mirror) of a matrix under assembly.
struct BlockFill {
    Eigen::MatrixXd& r;
    void constant(int r0, int rn, int c0, int cn, double v) {
        for (int i = r0; i < r0 + rn; ++i)
            for (int j = c0; j < c0 + cn; ++j) {
                if (i == j) continue;
                r(i, j) = v;
                r(j, i) = v;
            }
    }
};

ResistanceMatrix finish(Eigen::MatrixXd r, const std::string& fam) {
    return ResistanceMatrix(SymMatrix(std::move(r)), Provenance::closed(fam));
}

} // namespace

ResistanceMatrix rd_kcoal_complete(int p1, int p2, int k) {
    validate(KCoalComplete{p1, p2, k});
    const double t = p1 + p2 - k;
    const int a = p1 - k, b = p2 - k, n = p1 + p2 - k;
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
    BlockFill f{r};
    f.constant(0, k, 0, k, 2.0 / t);
    f.constant(0, k, k, a, ((k + 1.0) * b + 2.0 * p1 * k) / (k * p1 * t));
    f.constant(0, k, k + a, b, ((k + 1.0) * a + 2.0 * p2 * k) / (k * p2 * t));
    f.constant(k, a, k, a, 2.0 / p1);
    f.constant(k, a, k + a, b,
               (p1 + p2) * (k + 1.0) / (double(k) * p1 * p2));
    f.constant(k + a, b, k + a, b, 2.0 / p2);
    return finish(std::move(r), "kcoal");
}

ResistanceMatrix rd_windmill(int n, int t) {
    validate(Windmill{n, t});
    const int order = 1 + n * t;
    const double same = 2.0 / (n + 1), cross = 4.0 / (n + 1);
    Eigen::MatrixXd r = Eigen::MatrixXd::Constant(order, order, cross);
    for (int i = 0; i < order; ++i) {
        r(0, i) = same;
        r(i, 0) = same;
        r(i, i) = 0.0;
    }
    for (int b = 0; b < t; ++b)
        for (int i = 1 + b * n; i < 1 + (b + 1) * n; ++i)
            for (int j = 1 + b * n; j < 1 + (b + 1) * n; ++j)
                if (i != j) r(i, j) = same;
    return finish(std::move(r), "windmill");
}

ResistanceMatrix rd_join_coalescence(int p, int k, const Graph& g) {
    validate(JoinCoal{p, k, g, ""});
    const int n = g.n(), a = p - k, order = p + n;
    const double pn = p + n;
    const Eigen::MatrixXd m =
        (laplacian(g).mat() + double(k) * Eigen::MatrixXd::Identity(n, n))
            .ldlt()
            .solve(Eigen::MatrixXd::Identity(n, n));

    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(order, order);
    BlockFill f{r};
    f.constant(0, k, 0, k, 2.0 / pn);
    f.constant(0, k, k, a, (k * (2.0 * p + n) + n) / (k * p * pn));
    f.constant(k, a, k, a, 2.0 / p);
    for (int j = 0; j < n; ++j) {
        const double tg = (k - 1.0) / (k * pn) + m(j, j);
        const double ag = (k + 1.0) / (double(k) * p) + m(j, j);
        for (int i = 0; i < k; ++i) r(i, p + j) = r(p + j, i) = tg;
        for (int i = k; i < p; ++i) r(i, p + j) = r(p + j, i) = ag;
        for (int i = 0; i < j; ++i)
            r(p + i, p + j) = r(p + j, p + i) =
                m(i, i) + m(j, j) - 2.0 * m(i, j);
    }
    return finish(std::move(r), "joincoal");
}

ResistanceMatrix rd_star_coalescence(int p, const Graph& g) {
    validate(StarJoinCoal{p, g, ""});
    const int n = g.n(), order = p + n;
    const Eigen::MatrixXd m =
        (laplacian(g).mat() + Eigen::MatrixXd::Identity(n, n))
            .ldlt()
            .solve(Eigen::MatrixXd::Identity(n, n));

    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(order, order);
    BlockFill f{r};
    f.constant(0, 1, 1, p - 1, 1.0);
    f.constant(1, p - 1, 1, p - 1, 2.0);
    for (int j = 0; j < n; ++j) {
        r(0, p + j) = r(p + j, 0) = m(j, j);
        for (int i = 1; i < p; ++i) r(i, p + j) = r(p + j, i) = 1.0 + m(j, j);
        for (int i = 0; i < j; ++i)
            r(p + i, p + j) = r(p + j, p + i) =
                m(i, i) + m(j, j) - 2.0 * m(i, j);
    }
    return finish(std::move(r), "starcoal");
}

ResistanceMatrix rd_bipartite_star(int p, int q, int n) {
    validate(BipartiteStar{p, q, n});
    const int order = p + q + n;
    const double cross = (p + q - 1.0) / (double(p) * q);
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(order, order);
    BlockFill f{r};
    f.constant(0, 1, 1, p - 1, 2.0 / q);
    f.constant(0, 1, p, q, cross);
    f.constant(0, 1, p + q, n, 1.0);
    f.constant(1, p - 1, 1, p - 1, 2.0 / q);
    f.constant(1, p - 1, p, q, cross);
    f.constant(1, p - 1, p + q, n, (q + 2.0) / q);
    f.constant(p, q, p, q, 2.0 / p);
    f.constant(p, q, p + q, n, 1.0 + cross);
    f.constant(p + q, n, p + q, n, 2.0);
    return finish(std::move(r), "bipartite_star");
}

ResistanceMatrix rd_bipartite_complete(int p, int q, int n) {
    validate(BipartiteComplete{p, q, n});
    if (n < 2)
        throw invalid_parameter_error(
            "rd_bipartite_complete needs n >= 2 (K_n block must coalesce a clique)");
    const int order = p + q + n - 1;
    const double cross = (p + q - 1.0) / (double(p) * q);
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(order, order);
    BlockFill f{r};
    f.constant(0, 1, 1, p - 1, 2.0 / q);
    f.constant(0, 1, p, q, cross);
    f.constant(0, 1, p + q, n - 1, 2.0 / n);
    f.constant(1, p - 1, 1, p - 1, 2.0 / q);
    f.constant(1, p - 1, p, q, cross);
    f.constant(1, p - 1, p + q, n - 1, 2.0 * (q + n) / (double(q) * n));
    f.constant(p, q, p, q, 2.0 / p);
    f.constant(p, q, p + q, n - 1,
               (q * (n + 2.0 * p) + n * (p - 1.0)) / (double(n) * p * q));
    f.constant(p + q, n - 1, p + q, n - 1, 2.0 / n);
    return finish(std::move(r), "bipartite_complete");
}

ResistanceMatrix rd_pineapple(int p, int q) {
    validate(Pineapple{p, q});
    const int order = p + q;
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(order, order);
    BlockFill f{r};
    f.constant(0, 1, 1, p - 1, 2.0 / p);
    f.constant(0, 1, p, q, 1.0);
    f.constant(1, p - 1, 1, p - 1, 2.0 / p);
    f.constant(1, p - 1, p, q, (p + 2.0) / p);
    f.constant(p, q, p, q, 2.0);
    return finish(std::move(r), "pineapple");
}

ResistanceMatrix rd_dandelion(int n, int l) {
    validate(Dandelion{n, l});
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) r(i, j) = std::abs(i - j);
    for (int s = l; s < n; ++s) {
        for (int i = 0; i < l; ++i) r(i, s) = r(s, i) = i + 1.0;
        for (int s2 = l; s2 < n; ++s2)
            if (s2 != s) r(s, s2) = 2.0;
    }
    return finish(std::move(r), "dandelion");
}

ResistanceMatrix closed_form(const FamilySpec& spec) {
    validate(spec);
    struct V {
        ResistanceMatrix operator()(const KCoalComplete& s) {
            return rd_kcoal_complete(s.p1, s.p2, s.k);
        }
        ResistanceMatrix operator()(const Windmill& s) {
            return rd_windmill(s.n, s.t);
        }
        ResistanceMatrix operator()(const Rose3&) {
            ResistanceMatrix r = rd_windmill(2, 3);
            return ResistanceMatrix(r.sym(), Provenance::closed("rose3"));
        }
        ResistanceMatrix operator()(const JoinCoal& s) {
            return rd_join_coalescence(s.p, s.k, s.g);
        }
        ResistanceMatrix operator()(const StarJoinCoal& s) {
            return rd_star_coalescence(s.p, s.g);
        }
        ResistanceMatrix operator()(const BipartiteStar& s) {
            return rd_bipartite_star(s.p, s.q, s.n);
        }
        ResistanceMatrix operator()(const BipartiteComplete& s) {
            return rd_bipartite_complete(s.p, s.q, s.n);
        }
        ResistanceMatrix operator()(const Pineapple& s) {
            return rd_pineapple(s.p, s.q);
        }
        ResistanceMatrix operator()(const Kite& s) {
            ResistanceMatrix r = rd_kcoal_complete(s.p, 2, 1);
            return ResistanceMatrix(r.sym(), Provenance::closed("kite"));
        }
        ResistanceMatrix operator()(const Dandelion& s) {
            return rd_dandelion(s.n, s.l);
        }
    };
    return std::visit(V{}, spec);
}

Deviation max_deviation(const ResistanceMatrix& a, const ResistanceMatrix& b) {
    if (a.n() != b.n())
        throw invalid_parameter_error("max_deviation: dimension mismatch");
    Deviation d;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) {
            double v = std::abs(a(i, j) - b(i, j));
            if (v > d.value) d = {v, i, j};
        }
    return d;
}

} // namespace rescoal
