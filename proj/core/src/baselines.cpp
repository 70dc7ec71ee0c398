#include "tracerec/baselines.hpp"

#include <vector>

#include "tracerec/error.hpp"

namespace tracerec {

Seq bma(std::size_t n, std::span<const Seq> traces) {
    if (traces.empty()) throw InvalidArgument("bma: at least one trace required");
    for (const auto& y : traces) {
        if (!y.is_binary()) throw InvalidArgument("bma: traces must be binary");
    }
    std::vector<std::size_t> c(traces.size(), 0);
    std::vector<Symbol> out(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t ones = 0;
        std::size_t zeros = 0;
        for (std::size_t l = 0; l < traces.size(); ++l) {
            if (c[l] >= traces[l].size()) continue;
            (traces[l][c[l]] ? ones : zeros) += 1;
        }
        if (ones + zeros == 0) continue;
        const Symbol b = ones >= zeros ? 1 : 0;
        out[i] = b;
        for (std::size_t l = 0; l < traces.size(); ++l) {
            if (c[l] < traces[l].size() && traces[l][c[l]] == b) ++c[l];
        }
    }
    return Seq(std::move(out));
}

} // namespace tracerec
