#pragma once
#include "grk/cartan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grk {

// Box (row, col) in component comp of a multipartition; everything 1-based.
struct Node {
    long row = 0, col = 0, comp = 1;
    bool operator==(const Node&) const = default;
};

// Traversal order used for "above"/"below": by (component, row) ascending,
// reading the stacked diagrams top to bottom.
bool node_above(const Node& a, const Node& b);
std::string node_str(const Node& a);  // "(row,col,comp)"

class Multipartition {
public:
    Multipartition() : comps_(1) {}
    explicit Multipartition(std::vector<std::vector<long>> comps);
    static Multipartition empty(long level);

    long level() const { return (long)comps_.size(); }
    long size() const;
    long rows(long m) const { return (long)comps_[m - 1].size(); }
    // part length, 0 past the last row
    long part(long m, long row) const;
    const std::vector<long>& component(long m) const { return comps_[m - 1]; }
    std::vector<Node> nodes() const;  // by (comp, row, col)

    Multipartition remove_node(const Node& a) const;
    Multipartition add_node(const Node& b) const;

    bool operator==(const Multipartition&) const = default;
    bool operator!=(const Multipartition&) const = default;
    bool operator<(const Multipartition& o) const;  // lex, for ordered containers

    std::string str() const;  // "3,1|0|4,2"
    static Multipartition parse(const std::string& s);

private:
    std::vector<std::vector<long>> comps_;
};

long node_residue(const Node& a, const std::vector<long>& kappa,
                  const QuantumChar& qc);
RootElement content(const Multipartition& mu, const std::vector<long>& kappa,
                    const QuantumChar& qc);

struct BoundaryNodes {
    std::vector<Node> removable, addable;  // each in top-to-bottom order
};
BoundaryNodes boundary_nodes(const Multipartition& mu);

bool dominates(const Multipartition& mu, const Multipartition& nu);
bool lex_less(const Multipartition& mu, const Multipartition& nu);

// d_A(mu): addable minus removable res(A)-nodes strictly below the removable node A
long d_below(const Multipartition& mu, const Node& a,
             const std::vector<long>& kappa, const QuantumChar& qc);
// d^B(mu): addable minus removable res(B)-nodes strictly above the addable node B
long d_above(const Multipartition& mu, const Node& b,
             const std::vector<long>& kappa, const QuantumChar& qc);
// d_i(mu): all addable minus all removable i-nodes
long d_total(const Multipartition& mu, long i, const std::vector<long>& kappa,
             const QuantumChar& qc);

// Closed-form restrictedness where one exists: level 1 with e > 0, or e = 0
// with monotone kappa.  nullopt when no closed form covers the configuration.
std::optional<bool> is_restricted_closed_form(const Multipartition& mu,
                                              const std::vector<long>& kappa,
                                              const QuantumChar& qc);

// All l-multipartitions of d, lex-descending.
std::vector<Multipartition> enumerate_multipartitions(long d, long l);
std::vector<Multipartition> multipartitions_with_content(
    long d, const std::vector<long>& kappa, const QuantumChar& qc,
    const RootElement& alpha);

std::vector<long> transpose(const std::vector<long>& lambda);

} // namespace grk
