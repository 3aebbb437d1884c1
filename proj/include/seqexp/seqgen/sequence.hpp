#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqexp/error.hpp"
#include "seqexp/exact/bigint.hpp"

namespace seqexp::seqgen {

using exact::BigInt;
using exact::BigRat;

/// Terms a(offset), a(offset+1), ... stored densely.
template <typename T>
struct BasicSequence {
    long offset = 0;
    std::vector<T> terms;

    std::size_t size() const { return terms.size(); }
    bool empty() const { return terms.empty(); }
    /// One past the last index.
    long end_index() const { return offset + static_cast<long>(terms.size()); }
    bool has(long n) const { return n >= offset && n < end_index(); }
    const T& at(long n) const {
        if (!has(n)) throw Error(ErrorCode::InvalidArgument, "sequence index " + std::to_string(n) + " out of range");
        return terms[static_cast<std::size_t>(n - offset)];
    }

    /// Terms with index < end.
    BasicSequence prefix(long end) const {
        BasicSequence out{offset, {}};
        for (long n = offset; n < end && n < end_index(); ++n) out.terms.push_back(at(n));
        return out;
    }

    friend bool operator==(const BasicSequence&, const BasicSequence&) = default;
};

using Sequence = BasicSequence<BigInt>;
using RatSequence = BasicSequence<BigRat>;

RatSequence to_rational(const Sequence& s);
/// Throws NonIntegral if any term is not an integer.
Sequence to_integer(const RatSequence& s);

Sequence make_sequence(long offset, std::initializer_list<long> terms);

/// Pattern word for avoidance, e.g. {2,0,1}.
struct Pattern {
    std::vector<int> letters;

    /// Parses digit strings such as "201".
    static Pattern parse(const std::string& text);
    std::string to_string() const;
};

}  // namespace seqexp::seqgen
