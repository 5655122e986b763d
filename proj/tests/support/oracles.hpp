#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "workbench/ainfty.hpp"
#include "workbench/relation_term.hpp"
#include "workbench/slit_domain.hpp"

namespace wb::oracle {

// Planar trees as laminar families of leaf intervals [lo, hi] with 2 <= hi - lo + 1 < k.
std::set<std::string> laminar_tree_encodings(int k);
long long tree_count_by_compositions(int k);

// Terms of the arity-d relations built from cut-position bitmasks.
std::vector<RelationTerm> functor_terms(int d);
std::vector<RelationTerm> homotopy_terms(int d);
long long functor_term_count(int d);
long long homotopy_term_count(int d);

// Sign exponents written out from the Koszul bookkeeping; returns {lhs, rhs} mod 2.
struct SignSides {
  int lhs = 0;
  int rhs = 0;
};
SignSides m_identity(std::span<const int> mu, int n, int m);
SignSides f_identity(std::span<const int> mu, int n, int m);
SignSides fprime_identity(std::span<const int> mu, std::span<const int> partition);

// Central differences of Im F and Re F.
struct FdBeta {
  double beta_x, beta_y, beta_j_x, beta_j_y;
};
FdBeta finite_difference_beta(const slit::SlitDomain& domain, std::complex<double> z, double step = 1e-5);

// Lattice vectors v != 0 with v^T G v / 2 <= -cutoff, by exhaustive box search.
long long lattice_count(const Eigen::MatrixXd& gram, double cutoff, int box);

// Twice the index of t -> exp(i S(t)) R^n against R^n, from the eigenvalues of S at the endpoints.
int unitary_path_twice_index(std::span<const Eigen::MatrixXd> coeffs, double t0, double t1);

// Random homotopy family compatible with degrees and endpoints.
ainfty::Homotopy random_homotopy(const ainfty::Category& cat, std::uint64_t seed, int k_max);
// Solves the homotopy relation for the second functor, one arity at a time; g^d enters the relation with sign -1.
ainfty::Functor solve_homotopic_functor(const ainfty::Homotopy& h, const ainfty::Functor& f,
                                        const ainfty::Category& src, const ainfty::Category& dst, int k_max);

}  // namespace wb::oracle
