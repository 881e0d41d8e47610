#pragma once
#include "grk/cartan.hpp"
#include "grk/exec.hpp"
#include "grk/laurent.hpp"
#include "grk/multipartition.hpp"
#include "grk/tableaux.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace grk {

// Residue word attached to a restricted partition: the last letter is the
// residue of the bottom removable node whose removal keeps the partition
// restricted, and the prefix is the word of the smaller partition.  Level 1
// only, e >= 2.
std::vector<long> j_sequence(const Multipartition& lam,
                             const std::vector<long>& kappa,
                             const QuantumChar& qc);

// Product of quantum factorials [r_1]!...[r_t]! where the r_i count the
// removable nodes stripped in each round of bottom-sequence removal.
LaurentPoly r_lambda(const Multipartition& lam, const std::vector<long>& kappa,
                     const QuantumChar& qc);

// coefficient of the residue word of lam in ch
LaurentPoly m_mult(const QCharacter& ch, const Multipartition& lam,
                   const std::vector<long>& kappa, const QuantumChar& qc);

struct BasicTaskResult {
    LaurentPoly d, m;
    bool operator==(const BasicTaskResult&) const = default;
};

// Splits t = d*r + m for the unique d in qZ_{>=0}[q] and bar-invariant
// nonnegative m, given bar-invariant nonnegative r != 0.  Throws
// std::invalid_argument when no such pair exists.
BasicTaskResult solve_basic_task(const LaurentPoly& t, const LaurentPoly& r);

struct DecompositionMatrix {
    RootElement alpha;
    std::vector<Multipartition> rows;  // every shape in the block, lex-descending
    std::vector<Multipartition> cols;  // the restricted shapes, lex-descending
    std::map<std::pair<Multipartition, Multipartition>, LaurentPoly> entries;
    LaurentPoly entry(const Multipartition& mu, const Multipartition& nu) const;
    bool operator==(const DecompositionMatrix&) const = default;
};

// Throws std::logic_error unless the matrix is unitriangular with respect to
// dominance with off-diagonal entries in qZ_{>=0}[q].
void validate_decomposition_matrix(const DecompositionMatrix& dm);

// Row-by-row induction on residue-word multiplicities; level 1, e >= 2.
DecompositionMatrix decomposition_matrix_llt(const RootElement& alpha,
                                             const std::vector<long>& kappa,
                                             const QuantumChar& qc,
                                             Exec exec = Exec::parallel);

// For each shape, determines the unique correction making the Specht
// character minus the known irreducible characters bar-invariant; any level,
// any quantum characteristic.
DecompositionMatrix decomposition_matrix_bar(const RootElement& alpha,
                                             const std::vector<long>& kappa,
                                             const QuantumChar& qc,
                                             Exec exec = Exec::parallel);

// Peels extremal constituents off each Specht character.
DecompositionMatrix decomposition_matrix_extremal(const RootElement& alpha,
                                                  const std::vector<long>& kappa,
                                                  const QuantumChar& qc,
                                                  Exec exec = Exec::parallel);

// ch D for every column label, by back-substitution through the matrix
std::map<Multipartition, QCharacter> irreducible_qcharacters(
    const DecompositionMatrix& dm, const std::vector<long>& kappa,
    const QuantumChar& qc, Exec exec = Exec::parallel);

std::string matrix_json(const DecompositionMatrix& dm, long e,
                        const std::vector<long>& kappa);
// Inverse of matrix_json; throws std::invalid_argument on malformed or
// stale-version input.
DecompositionMatrix matrix_from_json(const std::string& text);
// One row per shape; set at_one to export the q = 1 specialization.
std::string matrix_csv(const DecompositionMatrix& dm, bool at_one = false);

std::optional<DecompositionMatrix> cache_load(const std::string& dir, long e,
                                              const std::vector<long>& kappa,
                                              const RootElement& alpha);
void cache_store(const std::string& dir, long e, const std::vector<long>& kappa,
                 const DecompositionMatrix& dm);
std::string cache_path(const std::string& dir, long e,
                       const std::vector<long>& kappa,
                       const RootElement& alpha);

} // namespace grk
