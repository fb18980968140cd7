#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace khpages {

/// Braid word on a fixed number of strands. Letter i in [1, strands) is the
/// positive crossing of strands i and i+1 (strand i passes over); -i is the
/// negative crossing.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    int crossing_count() const { return static_cast<int>(letters.size()); }
    int writhe() const;
    int positive_count() const;
    /// Self-linking number of the transverse closure: writhe - strands.
    int self_linking() const { return writhe() - strands; }
    bool is_positive() const;

    BraidWord mirrored() const;            // negate every letter
    BraidWord stabilized(int sign) const;  // one more strand, append +/-(strands)
    BraidWord conjugated(int letter) const;
    BraidWord with_insertion(std::size_t pos, const std::vector<int>& piece) const;

    void validate() const;  // throws DomainError on out-of-range letters
};

/// Parse "s=<int>; w=<comma-separated nonzero ints>". Whitespace is ignored
/// and w may be empty. Throws ParseError naming the offending token.
BraidWord parse_braid(const std::string& text);

std::string to_string(const BraidWord&);

}  // namespace khpages
