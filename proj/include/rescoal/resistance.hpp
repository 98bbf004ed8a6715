// Resistance-distance matrices: a generalized-inverse oracle valid for any
// connected graph, plus closed-form constructors for each supported family.
// Both routes emit matrices in the same canonical vertex order, so they
// compare entrywise.
#pragma once

#include <string>

#include "rescoal/family.hpp"
#include "rescoal/linalg.hpp"

namespace rescoal {

struct Provenance {
    enum class Kind { oracle, closed_form } kind = Kind::oracle;
    std::string family; // set for closed_form

    static Provenance oracle() { return {Kind::oracle, ""}; }
    static Provenance closed(std::string fam) {
        return {Kind::closed_form, std::move(fam)};
    }
};

// Validated on construction: symmetric (via SymMatrix), zero diagonal,
// strictly positive off-diagonal, triangle inequality within 1e-9.
class ResistanceMatrix {
public:
    ResistanceMatrix(SymMatrix r, Provenance prov);

    int n() const { return r_.n(); }
    double operator()(int i, int j) const { return r_(i, j); }
    const SymMatrix& sym() const { return r_; }
    const Eigen::MatrixXd& mat() const { return r_.mat(); }
    const Provenance& provenance() const { return prov_; }

private:
    SymMatrix r_;
    Provenance prov_;
};

// r_ij = h_ii + h_jj - h_ij - h_ji for any {1}-inverse H of the Laplacian.
// Invariant violations surface as inconsistent_inverse_error.
ResistanceMatrix resistance_from_generalized_inverse(
    const GenInverse& h, Provenance prov = Provenance::oracle());

// Definition route: Laplacian -> group inverse -> pair formula.
ResistanceMatrix resistance_oracle(const Graph& g);

// Closed forms. Vertex order always matches build_family of the same
// FamilySpec.
ResistanceMatrix rd_kcoal_complete(int p1, int p2, int k);
ResistanceMatrix rd_windmill(int n, int t);
ResistanceMatrix rd_join_coalescence(int p, int k, const Graph& g);
ResistanceMatrix rd_star_coalescence(int p, const Graph& g);
ResistanceMatrix rd_bipartite_star(int p, int q, int n);
ResistanceMatrix rd_bipartite_complete(int p, int q, int n);
ResistanceMatrix rd_pineapple(int p, int q);
ResistanceMatrix rd_dandelion(int n, int l);

// Dispatcher over the closed forms above.
ResistanceMatrix closed_form(const FamilySpec& spec);

struct Deviation {
    double value = 0.0;
    int i = 0, j = 0; // first row-major argmax
};

Deviation max_deviation(const ResistanceMatrix& a, const ResistanceMatrix& b);

} // namespace rescoal
