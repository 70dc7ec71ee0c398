#include "tracerec/infiltration.hpp"

#include "tracerec/error.hpp"

namespace tracerec {

namespace {

void add_appended(InfiltrationPoly& out, const InfiltrationPoly& src, Symbol s) {
    for (const auto& [w, c] : src) {
        Seq key = w;
        key.push_back(s);
        out[key] += c;
    }
}

} // namespace

InfiltrationPoly infiltration(const Seq& f, const Seq& g) {
    if (f.size() + g.size() > kInfiltrationMaxLength) {
        throw GuardExceeded("infiltration: total length above 24");
    }
    const std::size_t n = f.size();
    const std::size_t m = g.size();
    // row[j] = f[0:i) ↑ g[0:j), rolled over i.
    std::vector<InfiltrationPoly> prev(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = {{g.slice(0, j), BigCount(1)}};
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<InfiltrationPoly> cur(m + 1);
        cur[0] = {{f.slice(0, i), BigCount(1)}};
        const Symbol a = f[i - 1];
        for (std::size_t j = 1; j <= m; ++j) {
            const Symbol b = g[j - 1];
            add_appended(cur[j], prev[j], a);
            add_appended(cur[j], cur[j - 1], b);
            if (a == b) add_appended(cur[j], prev[j - 1], a);
        }
        prev = std::move(cur);
    }
    return std::move(prev[m]);
}

InfiltrationPoly infiltration(const InfiltrationPoly& p, const Seq& g) {
    InfiltrationPoly out;
    for (const auto& [w, c] : p) {
        for (const auto& [h, d] : infiltration(w, g)) out[h] += c * d;
    }
    return out;
}

InfiltrationPoly infiltration(std::span<const Seq> seqs) {
    std::size_t total = 0;
    for (const auto& s : seqs) total += s.size();
    if (total > kInfiltrationMaxLength) throw GuardExceeded("infiltration: total length above 24");
    InfiltrationPoly acc{{Seq{}, BigCount(1)}};
    for (const auto& s : seqs) acc = infiltration(acc, s);
    return acc;
}

BigCount coefficient(const InfiltrationPoly& p, const Seq& w) {
    auto it = p.find(w);
    return it == p.end() ? BigCount(0) : it->second;
}

} // namespace tracerec
