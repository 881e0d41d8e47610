#pragma once
#include "grk/exec.hpp"
#include "grk/laurent.hpp"
#include "grk/multipartition.hpp"

#include <map>
#include <string>
#include <vector>

namespace grk {

// Filling of the diagram of a multipartition with 1..d, stored row-wise per
// component.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<std::vector<long>>> rows);

    Multipartition shape() const;
    long size() const { return (long)node_by_entry_.size(); }
    long entry(const Node& a) const;
    Node node_of(long k) const;  // node holding entry k
    bool is_standard() const;
    std::string str() const;  // "2,5,6/3|0|1,4,9,10/7,8"
    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
    bool operator!=(const Tableau& o) const = default;
    bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

private:
    std::vector<std::vector<std::vector<long>>> rows_;  // [comp][row][col]
    std::vector<Node> node_by_entry_;
};

std::vector<Tableau> standard_tableaux(const Multipartition& mu);
// entries 1..d along successive rows, components in order
Tableau leading_tableau(const Multipartition& mu);

std::vector<long> residue_sequence(const Tableau& t, const std::vector<long>& kappa,
                                   const QuantumChar& qc);
RootElement sequence_content(const std::vector<long>& seq, const QuantumChar& qc);

// w with w(leading tableau) = t, returned as the image list w(1),...,w(d)
std::vector<long> tableau_permutation(const Tableau& t);
// disjoint-cycle text, fixed points omitted, "()" for the identity
std::string perm_cycles_str(const std::vector<long>& w);

long tableau_degree(const Tableau& t, const std::vector<long>& kappa,
                    const QuantumChar& qc);

// Finite sum of residue sequences with Laurent-polynomial coefficients.
class QCharacter {
public:
    using Seq = std::vector<long>;
    QCharacter() = default;
    const std::map<Seq, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // length of the supported sequences; zero character has none
    long length() const;
    LaurentPoly coeff(const Seq& s) const;
    void add(const Seq& s, const LaurentPoly& c);
    QCharacter& operator+=(const QCharacter& o);
    QCharacter& operator-=(const QCharacter& o);
    QCharacter scaled(const LaurentPoly& c) const;
    bool operator==(const QCharacter&) const = default;
    LaurentPoly qdim() const;  // sum of all coefficients

private:
    std::map<Seq, LaurentPoly> terms_;
};

QCharacter specht_qcharacter(const Multipartition& mu,
                             const std::vector<long>& kappa,
                             const QuantumChar& qc);
// one character per input shape, parallel over shapes
std::vector<QCharacter> specht_qcharacters(const std::vector<Multipartition>& mus,
                                           const std::vector<long>& kappa,
                                           const QuantumChar& qc,
                                           Exec exec = Exec::parallel);

// drop the last residue of every sequence, merging coefficients
QCharacter restrict_character(const QCharacter& ch);

LaurentPoly block_graded_dimension(const RootElement& alpha,
                                   const std::vector<long>& kappa,
                                   const QuantumChar& qc,
                                   const std::vector<long>& i,
                                   const std::vector<long>& j);
// all nonzero entries (i,j) -> qdim e(i) H e(j) for the block of alpha
std::map<std::pair<QCharacter::Seq, QCharacter::Seq>, LaurentPoly>
graded_dimension_table(const RootElement& alpha, const std::vector<long>& kappa,
                       const QuantumChar& qc, Exec exec = Exec::parallel);

} // namespace grk
