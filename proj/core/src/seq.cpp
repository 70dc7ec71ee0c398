#include "tracerec/seq.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "tracerec/error.hpp"

namespace tracerec {

Seq Seq::from_bits(std::string_view bits) {
    std::vector<Symbol> out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InvalidArgument("not a binary sequence: '" + std::string(bits) + "'");
        }
        out.push_back(static_cast<Symbol>(c - '0'));
    }
    return Seq(std::move(out));
}

Seq Seq::from_integer(std::uint64_t value, std::size_t length) {
    std::vector<Symbol> out(length);
    for (std::size_t i = 0; i < length; ++i) {
        out[length - 1 - i] = static_cast<Symbol>((value >> i) & 1u);
    }
    return Seq(std::move(out));
}

Seq Seq::slice(std::size_t first, std::size_t last) const {
    if (first > last || last > size()) {
        throw InvalidArgument("slice out of range");
    }
    return Seq(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(first),
                                   symbols_.begin() + static_cast<std::ptrdiff_t>(last)));
}

Seq Seq::reversed() const {
    return Seq(std::vector<Symbol>(symbols_.rbegin(), symbols_.rend()));
}

Seq Seq::complemented() const {
    if (!is_binary()) {
        throw InvalidArgument("complement requires a binary sequence");
    }
    std::vector<Symbol> out(symbols_);
    for (auto& s : out) s = static_cast<Symbol>(1 - s);
    return Seq(std::move(out));
}

bool Seq::is_binary() const noexcept {
    return std::all_of(symbols_.begin(), symbols_.end(), [](Symbol s) { return s <= 1; });
}

std::size_t Seq::count(Symbol s) const noexcept {
    return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), s));
}

std::string Seq::to_bits() const {
    std::string out;
    out.reserve(size());
    for (Symbol s : symbols_) out.push_back(s <= 1 ? static_cast<char>('0' + s) : '?');
    return out;
}

Alphabet::Alphabet(std::string chars) : chars_(std::move(chars)), index_(256, -1) {
    if (chars_.empty() || chars_.size() > 256) {
        throw InvalidArgument("alphabet must have between 1 and 256 symbols");
    }
    for (std::size_t k = 0; k < chars_.size(); ++k) {
        auto c = static_cast<unsigned char>(chars_[k]);
        if (index_[c] != -1) throw InvalidArgument("duplicate character in alphabet");
        index_[c] = static_cast<int>(k);
    }
}

Alphabet Alphabet::binary() { return Alphabet("01"); }

Alphabet Alphabet::lowercase() { return Alphabet("abcdefghijklmnopqrstuvwxyz"); }

Seq Alphabet::encode(std::string_view text) const {
    std::vector<Symbol> out;
    out.reserve(text.size());
    for (char c : text) {
        int id = index_[static_cast<unsigned char>(c)];
        if (id < 0) {
            throw InvalidArgument(std::string("character '") + c + "' not in alphabet \"" + chars_ + "\"");
        }
        out.push_back(static_cast<Symbol>(id));
    }
    return Seq(std::move(out));
}

std::string Alphabet::decode(const Seq& s) const {
    std::string out;
    out.reserve(s.size());
    for (Symbol sym : s) {
        if (sym >= chars_.size()) throw InvalidArgument("symbol outside alphabet");
        out.push_back(chars_[sym]);
    }
    return out;
}

bool Alphabet::contains(const Seq& s) const noexcept {
    return std::all_of(s.begin(), s.end(), [&](Symbol sym) { return sym < chars_.size(); });
}

BigCount binomial_coeff(const Seq& f, const Seq& g) {
    const std::size_t n = f.size();
    const std::size_t m = g.size();
    if (m > n) return 0;
    // row[j] = count of g[0:j) in f[0:i); updated right to left so row[j-1] is still the old value.
    std::vector<BigCount> row(m + 1, 0);
    row[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t hi = std::min(m, i + 1);
        for (std::size_t j = hi; j >= 1; --j) {
            if (f[i] == g[j - 1]) row[j] += row[j - 1];
        }
    }
    return row[m];
}

std::vector<std::vector<BigCount>> binomial_table(const Seq& f, const Seq& g) {
    const std::size_t n = f.size();
    const std::size_t m = g.size();
    std::vector<std::vector<BigCount>> table(n + 1, std::vector<BigCount>(m + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) table[i][0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            table[i][j] = table[i - 1][j];
            if (f[i - 1] == g[j - 1]) table[i][j] += table[i - 1][j - 1];
        }
    }
    return table;
}

std::uint64_t binomial_coeff_u64(const Seq& f, const Seq& g) {
    const std::size_t n = f.size();
    const std::size_t m = g.size();
    if (n > 63) throw InvalidArgument("binomial_coeff_u64 requires |f| <= 63");
    if (m > n) return 0;
    std::vector<std::uint64_t> row(m + 1, 0);
    row[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t hi = std::min(m, i + 1);
        for (std::size_t j = hi; j >= 1; --j) {
            if (f[i] == g[j - 1]) row[j] += row[j - 1];
        }
    }
    return row[m];
}

BigCount choose(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    BigCount out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
}

Seq substitute(const Seq& x, std::size_t i, Symbol s) {
    if (i >= x.size()) throw InvalidArgument("substitute: index out of range");
    Seq out = x;
    out[i] = s;
    return out;
}

std::vector<double> substitute(std::span<const double> x, std::size_t i, double s) {
    if (i >= x.size()) throw InvalidArgument("substitute: index out of range");
    std::vector<double> out(x.begin(), x.end());
    out[i] = s;
    return out;
}

std::vector<Seq> read_sequences(std::istream& in, const Alphabet& alphabet) {
    std::vector<Seq> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(alphabet.encode(line));
    }
    return out;
}

void write_sequences(std::ostream& out, std::span<const Seq> seqs, const Alphabet& alphabet) {
    for (const auto& s : seqs) out << alphabet.decode(s) << '\n';
}

std::ostream& operator<<(std::ostream& os, const Seq& s) { return os << s.to_bits(); }

} // namespace tracerec
