#pragma once
#include "grk/cartan.hpp"
#include "grk/exec.hpp"
#include "grk/multipartition.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace grk {

// Dense matrix over exact rationals, acting on coordinate columns:
// (M v)_b = sum_c M[b][c] v_c.
using Matrix = std::vector<std::vector<mpq_class>>;

Matrix zero_matrix(long n);
Matrix identity_matrix(long n);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matadd(const Matrix& a, const Matrix& b);
Matrix matsub(const Matrix& a, const Matrix& b);
bool is_zero_matrix(const Matrix& a);

// Explicit module over the graded presentation.  Basis vector b carries a
// residue sequence iseq[b] and a degree deg[b]; the idempotent e(i) acts as
// the projection onto the basis vectors with residue sequence i, so the
// idempotent relations hold by construction and only the y and psi matrices
// are free data.
struct KLRRep {
    long d = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<long>> iseq;
    std::vector<long> deg;
    std::vector<Matrix> y;    // y[r-1] for r = 1..d
    std::vector<Matrix> psi;  // psi[r-1] for r = 1..d-1
    long dim() const { return (long)iseq.size(); }
    // projection onto the basis vectors with residue sequence i
    Matrix idempotent(const std::vector<long>& i) const;
};

// Seminormal module on the standard tableaux of a partition: e(j) projects
// onto the matching residue sequence, every y_r acts as zero, and psi_r sends
// v_T to v_{s_r T} when the swapped tableau is standard and to zero otherwise.
// Only defined for e = 0 at level 1.
KLRRep build_seminormal(const Multipartition& mu, const std::vector<long>& kappa,
                        const QuantumChar& qc);

struct KLRViolation {
    std::string relation;
    long r = 0, s = 0;       // strand indices involved, 0 when not applicable
    std::string where;       // residue sequence or basis label, may be empty
    std::string str() const;
    bool operator==(const KLRViolation&) const = default;
};

// Evaluates every defining relation of the presentation as a matrix identity
// on the given module, including the cyclotomic relation for the dominant
// weight described by kappa and the degree shifts of the generators.  Returns
// all violations found (an empty list on success).
std::vector<KLRViolation> verify_klr_relations(const KLRRep& rep,
                                               const std::vector<long>& kappa,
                                               const QuantumChar& qc,
                                               Exec exec = Exec::parallel);

std::string klr_rep_json(const KLRRep& rep);

} // namespace grk
