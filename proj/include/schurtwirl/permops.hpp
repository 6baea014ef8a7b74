#ifndef SCHURTWIRL_PERMOPS_HPP
#define SCHURTWIRL_PERMOPS_HPP

#include <vector>

#include "schurtwirl/common.hpp"
#include "schurtwirl/tableaux.hpp"

namespace schurtwirl {

// Bijection on {1..t}; images[k] is the image of k+1.
struct Permutation {
    std::vector<int> images;

    int size() const { return (int)images.size(); }
    int apply(int k) const { return images[k - 1]; }
    bool is_valid() const;
    static Permutation identity(int t);
    Permutation inverse() const;
    Permutation compose(const Permutation& q) const;  // this after q
};

std::vector<Permutation> all_permutations(int t);

// Permutation operator on (C^d)^{x t} by direct action on basis tensor
// factors: |v_1 ... v_t> -> |v_{p^-1(1)} ... v_{p^-1(t)}>.  Reference
// construction for every other O_p route.
Matrix permutation_matrix_direct(const Permutation& p, int d, int t,
                                 long capacity = kDefaultCapacity);

// Generalized Gell-Mann generators of su(d), Hermitian traceless with
// Tr(g_a g_b) = 2 delta_ab.  d^2 - 1 matrices of size d x d.
std::vector<Matrix> gellmann_generators(int d);

// Transposition operator O_(i k) built from the Gell-Mann expansion
// (1/d) Id + (1/2) sum_j g_j at slots i and k.  1-based slot indices.
Matrix transposition_matrix_gellmann(int i, int k, int d, int t);

// O_p as a product of Gell-Mann transposition matrices over an adjacent
// transposition factorization of p.
Matrix permutation_matrix_product(const Permutation& p, int d, int t);

// Matrix representation of the Young symmetrizer of a standard tableau:
// (1/(kl)) sum over row group (size k) and column group (size l) of
// sgn(p_c) O_{p_r} O_{p_c}.
Matrix young_symmetrizer(const StandardTableau& tab, int d);

}  // namespace schurtwirl

#endif
