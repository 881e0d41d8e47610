#pragma once
#include "grk/multipartition.hpp"
#include "grk/tableaux.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace grk {

// Signs of the addable (+1) and removable (-1) i-nodes in top-to-bottom
// order, after exhaustive cancellation of -...+ pairs (0 marks a cancelled
// node).  The surviving signs always read +...+-...-.
struct SignatureItem {
    Node node;
    int sign;  // +1, -1 or 0
};

struct ReducedSignature {
    std::vector<SignatureItem> items;
    long eps() const;                   // surviving '-' count
    long phi() const;                   // surviving '+' count
    std::optional<Node> good() const;   // leftmost surviving '-'
    std::optional<Node> cogood() const; // rightmost surviving '+'
};

ReducedSignature reduced_signature(const Multipartition& mu, long i,
                                   const std::vector<long>& kappa,
                                   const QuantumChar& qc);
long epsilon(const Multipartition& mu, long i, const std::vector<long>& kappa,
             const QuantumChar& qc);
long phi(const Multipartition& mu, long i, const std::vector<long>& kappa,
         const QuantumChar& qc);

std::optional<Multipartition> e_tilde(const Multipartition& mu, long i,
                                      const std::vector<long>& kappa,
                                      const QuantumChar& qc);
std::optional<Multipartition> f_tilde(const Multipartition& mu, long i,
                                      const std::vector<long>& kappa,
                                      const QuantumChar& qc);

// closure of the empty multipartition under the f operators, through size d;
// ordered by size, then lex-descending within a size
std::vector<Multipartition> enumerate_restricted(long d,
                                                 const std::vector<long>& kappa,
                                                 const QuantumChar& qc);
bool is_restricted(const Multipartition& mu, const std::vector<long>& kappa,
                   const QuantumChar& qc);

struct CrystalEdge {
    Multipartition source, target;
    long residue;
};
struct CrystalGraph {
    std::vector<Multipartition> vertices;
    std::vector<CrystalEdge> edges;  // sorted by (source position, residue)
};
CrystalGraph crystal_graph(long d, const std::vector<long>& kappa,
                           const QuantumChar& qc);
std::string crystal_dot(const CrystalGraph& g);

// level 1: the partition labelling the twist of the irreducible by negating
// residues; restricted with respect to the negated multicharge
Multipartition mullineux(const Multipartition& mu, const std::vector<long>& kappa,
                         const QuantumChar& qc);

struct ExtremalRun {
    long residue;
    long mult;
    bool operator==(const ExtremalRun&) const = default;
};
struct ExtremalData {
    std::vector<ExtremalRun> runs;  // left-to-right run form j1^m1 ... jn^mn
    Multipartition mu;              // f applied along the expanded tuple
    std::vector<long> full_sequence() const;
};

// peel maximal trailing runs off a character that is a nonnegative
// combination of irreducible characters; identifies the lex-least such run
// tuple and its crystal endpoint
ExtremalData extremal_sequence(const QCharacter& ch,
                               const std::vector<long>& kappa,
                               const QuantumChar& qc);
// the graded multiplicity of the irreducible at the extremal endpoint
std::pair<Multipartition, LaurentPoly> extremal_multiplicity(
    const QCharacter& ch, const std::vector<long>& kappa, const QuantumChar& qc);

// max trailing-run length of residue j across supported sequences
long char_epsilon(const QCharacter& ch, long j);
// keep sequences ending in m copies of j, truncated by m
QCharacter char_run_restrict(const QCharacter& ch, long j, long m);

} // namespace grk
