#include "khpages/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "khpages/errors.hpp"

namespace khpages {

int BraidWord::writhe() const {
    int w = 0;
    for (int x : letters) w += x > 0 ? 1 : -1;
    return w;
}

int BraidWord::positive_count() const {
    return static_cast<int>(std::count_if(letters.begin(), letters.end(), [](int x) { return x > 0; }));
}

bool BraidWord::is_positive() const {
    return std::all_of(letters.begin(), letters.end(), [](int x) { return x > 0; });
}

BraidWord BraidWord::mirrored() const {
    BraidWord out = *this;
    for (int& x : out.letters) x = -x;
    return out;
}

BraidWord BraidWord::stabilized(int sign) const {
    BraidWord out = *this;
    out.strands = strands + 1;
    out.letters.push_back(sign >= 0 ? strands : -strands);
    return out;
}

BraidWord BraidWord::conjugated(int letter) const {
    BraidWord out = *this;
    out.letters.insert(out.letters.begin(), letter);
    out.letters.push_back(-letter);
    out.validate();
    return out;
}

BraidWord BraidWord::with_insertion(std::size_t pos, const std::vector<int>& piece) const {
    BraidWord out = *this;
    pos = std::min(pos, out.letters.size());
    out.letters.insert(out.letters.begin() + static_cast<std::ptrdiff_t>(pos), piece.begin(), piece.end());
    out.validate();
    return out;
}

void BraidWord::validate() const {
    if (strands < 1) throw DomainError("braid word: strand count must be positive");
    for (int x : letters) {
        if (x == 0 || std::abs(x) >= strands)
            throw DomainError("braid word: letter " + std::to_string(x) + " out of range for " +
                              std::to_string(strands) + " strands");
    }
}

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

int parse_int(const std::string& tok, const char* what) {
    if (tok.empty()) throw ParseError(std::string("braid grammar: empty ") + what);
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(std::string("braid grammar: bad ") + what + " '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(std::string("braid grammar: bad ") + what + " '" + tok + "'");
    return value;
}

}  // namespace

BraidWord parse_braid(const std::string& text) {
    std::string s = strip(text);
    if (s.rfind("s=", 0) != 0) throw ParseError("braid grammar: expected 's=<int>; w=...'");
    size_t semi = s.find(';');
    if (semi == std::string::npos) throw ParseError("braid grammar: missing ';' between s and w");
    BraidWord b;
    b.strands = parse_int(s.substr(2, semi - 2), "strand count");
    if (b.strands < 1) throw ParseError("braid grammar: strand count must be >= 1");
    std::string rest = s.substr(semi + 1);
    if (rest.rfind("w=", 0) != 0) throw ParseError("braid grammar: expected 'w=' after ';'");
    rest = rest.substr(2);
    if (!rest.empty()) {
        size_t start = 0;
        while (start <= rest.size()) {
            size_t comma = rest.find(',', start);
            std::string tok =
                rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            int letter = parse_int(tok, "letter");
            if (letter == 0) throw ParseError("braid grammar: letter 0 is not allowed");
            if (std::abs(letter) >= b.strands)
                throw ParseError("braid grammar: letter " + tok + " >= strand count " +
                                 std::to_string(b.strands));
            b.letters.push_back(letter);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return b;
}

std::string to_string(const BraidWord& b) {
    std::string out = "s=" + std::to_string(b.strands) + "; w=";
    for (size_t i = 0; i < b.letters.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(b.letters[i]);
    }
    return out;
}

}  // namespace khpages
