#include "grk/cartan.hpp"

#include <sstream>
#include <stdexcept>

namespace grk {

QuantumChar::QuantumChar(long e) : e_(e) {
    if (e == 1 || e < 0)
        throw std::domain_error("quantum characteristic must be 0 or >= 2");
}

long QuantumChar::normalize(long k) const {
    if (e_ == 0) return k;
    long r = k % e_;
    return r < 0 ? r + e_ : r;
}

long QuantumChar::cartan_entry(long i, long j) const {
    i = normalize(i);
    j = normalize(j);
    if (i == j) return 2;
    if (e_ == 2) return -2;
    if (normalize(j - i) == 1 || normalize(i - j) == 1) return -1;
    return 0;
}

bool QuantumChar::arrow_to(long i, long j) const {
    if (e_ == 2) return false;
    return normalize(j - i) == 1;
}

bool QuantumChar::arrow_from(long i, long j) const {
    if (e_ == 2) return false;
    return normalize(i - j) == 1;
}

bool QuantumChar::double_arrow(long i, long j) const {
    return e_ == 2 && normalize(i) != normalize(j);
}

bool QuantumChar::unlinked(long i, long j) const {
    i = normalize(i);
    j = normalize(j);
    return i != j && cartan_entry(i, j) == 0;
}

void add_to(RootElement& a, long i, long c) {
    long& v = a[i];
    v += c;
    if (v == 0) a.erase(i);
}

long height(const RootElement& a) {
    long h = 0;
    for (const auto& [i, c] : a) h += c;
    return h;
}

long sym_form(const RootElement& a, const RootElement& b, const QuantumChar& qc) {
    long s = 0;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) s += ci * cj * qc.cartan_entry(i, j);
    return s;
}

long weight_pairing(const std::vector<long>& kappa, const RootElement& a,
                    const QuantumChar& qc) {
    long s = 0;
    for (long k : kappa) {
        auto it = a.find(qc.normalize(k));
        if (it != a.end()) s += it->second;
    }
    return s;
}

long defect(const std::vector<long>& kappa, const RootElement& a,
            const QuantumChar& qc) {
    return weight_pairing(kappa, a, qc) - sym_form(a, a, qc) / 2;
}

std::string root_str(const RootElement& a) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : a) {
        if (!first) out << ",";
        out << i << ":" << c;
        first = false;
    }
    return out.str();
}

RootElement parse_root(const std::string& s) {
    RootElement a;
    if (s.empty()) return a;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("root element entry needs residue:coefficient: " + item);
        long i = std::stol(item.substr(0, colon));
        long c = std::stol(item.substr(colon + 1));
        if (c < 0) throw std::invalid_argument("root element coefficients must be >= 0");
        add_to(a, i, c);
    }
    return a;
}

} // namespace grk
