#pragma once
#include <map>
#include <string>
#include <vector>

namespace grk {

// Quantum characteristic e together with the index set I: the integers when
// e = 0, Z/eZ when e >= 2.  e = 1 is rejected.
class QuantumChar {
public:
    explicit QuantumChar(long e);
    long e() const { return e_; }
    // canonical representative: k mod e in {0,...,e-1} for e > 0, k itself for e = 0
    long normalize(long k) const;
    long cartan_entry(long i, long j) const;
    // quiver predicates; arguments need not be normalized
    bool arrow_to(long i, long j) const;      // i -> j, single arrow
    bool arrow_from(long i, long j) const;    // i <- j, single arrow
    bool double_arrow(long i, long j) const;  // i <=> j (e = 2 only)
    bool unlinked(long i, long j) const;      // distinct, not adjacent
private:
    long e_;
};

// Element of Q_+: finitely supported residue -> coefficient map.
using RootElement = std::map<long, long>;

void add_to(RootElement& a, long i, long c = 1);
long height(const RootElement& a);
long sym_form(const RootElement& a, const RootElement& b, const QuantumChar& qc);

// Multicharge kappa = (k_1,...,k_l) standing for Lambda = Lambda_{k_1}+...+Lambda_{k_l}.
long weight_pairing(const std::vector<long>& kappa, const RootElement& a,
                    const QuantumChar& qc);
long defect(const std::vector<long>& kappa, const RootElement& a,
            const QuantumChar& qc);

// "2a0+a1" style text used by the CLI for root elements: comma-separated
// residue:coefficient pairs, e.g. "0:2,1:1"; "" is the zero element.
std::string root_str(const RootElement& a);
RootElement parse_root(const std::string& s);

} // namespace grk
