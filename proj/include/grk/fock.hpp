#pragma once
#include "grk/exec.hpp"
#include "grk/laurent.hpp"
#include "grk/multipartition.hpp"

#include <map>
#include <string>
#include <vector>

namespace grk {

// Element of the level-l Fock space: finite sum of monomial basis vectors
// M_mu with Laurent-polynomial coefficients.
class FockVector {
public:
    FockVector() = default;
    static FockVector basis(const Multipartition& mu);
    const std::map<Multipartition, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentPoly coeff(const Multipartition& mu) const;
    void add(const Multipartition& mu, const LaurentPoly& c);
    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector scaled(const LaurentPoly& c) const;
    bool operator==(const FockVector&) const = default;

private:
    std::map<Multipartition, LaurentPoly> terms_;
};

FockVector fock_E(long i, const FockVector& v, const std::vector<long>& kappa,
                  const QuantumChar& qc);
FockVector fock_F(long i, const FockVector& v, const std::vector<long>& kappa,
                  const QuantumChar& qc);
FockVector fock_K(long i, const FockVector& v, const std::vector<long>& kappa,
                  const QuantumChar& qc, bool inverse = false);

enum class ChevalleyOp { E, F };
// op^n / [n]!; the division is always exact
FockVector fock_divided_power(ChevalleyOp op, long i, long n,
                              const FockVector& v,
                              const std::vector<long>& kappa,
                              const QuantumChar& qc);

struct RelationViolation {
    std::string relation;
    Multipartition mu;
    long i, j;
    std::string str() const;
    bool operator==(const RelationViolation&) const = default;
};

// Checks the defining relations of the quantized enveloping algebra on every
// basis vector of size <= dmax: the K-conjugation relations, the cleared-form
// commutator relation, and both quantum Serre relations.  Returns all
// violations found (an empty list on success).
std::vector<RelationViolation> verify_uqg_relations(long dmax,
                                                    const std::vector<long>& kappa,
                                                    const QuantumChar& qc,
                                                    Exec exec = Exec::parallel);

} // namespace grk
