#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tracerec {

/// Arbitrary-precision nonnegative integer used for every exact count.
using BigCount = mpz_class;

/// Exact rational, used where probabilities must be compared exactly.
using Rational = mpq_class;

using Symbol = std::uint8_t;

/// A finite sequence of symbol ids. Symbols are small integers; the mapping
/// to printable characters lives in Alphabet.
class Seq {
public:
    Seq() = default;
    explicit Seq(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
    Seq(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

    /// Parses a string of '0'/'1' characters. Throws InvalidArgument on any other character.
    static Seq from_bits(std::string_view bits);

    /// Binary sequence of length `length` holding the low bits of `value`, most significant first.
    static Seq from_integer(std::uint64_t value, std::size_t length);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    Symbol& operator[](std::size_t i) noexcept { return symbols_[i]; }

    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    void push_back(Symbol s) { symbols_.push_back(s); }

    /// Symbols in [first, last).
    Seq slice(std::size_t first, std::size_t last) const;
    Seq reversed() const;
    /// Binary complement; requires is_binary().
    Seq complemented() const;
    bool is_binary() const noexcept;
    std::size_t count(Symbol s) const noexcept;

    /// '0'/'1' rendering for binary sequences (symbols >= 2 print as '?').
    std::string to_bits() const;

    friend bool operator==(const Seq&, const Seq&) = default;
    friend auto operator<=>(const Seq& a, const Seq& b) { return a.symbols_ <=> b.symbols_; }

private:
    std::vector<Symbol> symbols_;
};

/// Text codec between characters and symbol ids. Symbol id k is the k-th
/// character of the alphabet string.
class Alphabet {
public:
    explicit Alphabet(std::string chars);

    static Alphabet binary();
    /// 'a'..'z', used for the textbook word examples.
    static Alphabet lowercase();

    std::size_t size() const noexcept { return chars_.size(); }
    Seq encode(std::string_view text) const;
    std::string decode(const Seq& s) const;
    bool contains(const Seq& s) const noexcept;

private:
    std::string chars_;
    std::vector<int> index_;
};

/// Number of index subsets S with f_S = g, in O(|f||g|) time.
BigCount binomial_coeff(const Seq& f, const Seq& g);

/// Full table T[i][j] = binomial_coeff(f[0:i), g[0:j)), shape (|f|+1) x (|g|+1).
std::vector<std::vector<BigCount>> binomial_table(const Seq& f, const Seq& g);

/// Same count in 64-bit arithmetic; valid whenever |f| <= 63 (the count is below 2^|f|).
std::uint64_t binomial_coeff_u64(const Seq& f, const Seq& g);

/// Classical binomial coefficient C(a, b), zero when b < 0 or b > a.
BigCount choose(long a, long b);

/// Copy of x with coordinate i (0-based) replaced by s.
Seq substitute(const Seq& x, std::size_t i, Symbol s);
std::vector<double> substitute(std::span<const double> x, std::size_t i, double s);

/// Reads one sequence per line; an empty line is the empty sequence.
/// A trailing newline at end of input does not add an extra empty sequence.
std::vector<Seq> read_sequences(std::istream& in, const Alphabet& alphabet);
void write_sequences(std::ostream& out, std::span<const Seq> seqs, const Alphabet& alphabet);

std::ostream& operator<<(std::ostream& os, const Seq& s);

} // namespace tracerec
