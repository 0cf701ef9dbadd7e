#include "cycperm/pattern_io.hpp"

#include <cctype>

#include "cycperm/errors.hpp"

namespace cycperm {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

VincularPattern parse_pattern(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw InvalidInput("empty pattern");
    bool cyclic = false;
    if (s.front() == '[') {
        if (s.size() < 2 || s.back() != ']')
            throw InvalidInput("unterminated '[' in pattern: " + text);
        cyclic = true;
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> word;
    std::vector<int> bonds;
    bool in_block = false;
    int block_len = 0;
    for (char ch : s) {
        if (ch == '(') {
            if (in_block) throw InvalidInput("nested '(' in pattern: " + text);
            in_block = true;
            block_len = 0;
        } else if (ch == ')') {
            if (!in_block || block_len < 2)
                throw InvalidInput("bond block needs at least two entries: " + text);
            in_block = false;
        } else if (ch >= '1' && ch <= '9') {
            word.push_back(ch - '0');
            if (in_block) {
                ++block_len;
                if (block_len >= 2) bonds.push_back(static_cast<int>(word.size()) - 1);
            }
        } else {
            throw InvalidInput(std::string("unexpected character '") + ch +
                               "' in pattern: " + text);
        }
    }
    if (in_block) throw InvalidInput("unterminated '(' in pattern: " + text);
    return VincularPattern(Permutation(std::move(word)), std::move(bonds), cyclic);
}

PatternSet parse_pattern_set(const std::string& text) {
    std::vector<VincularPattern> patterns;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string piece =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        patterns.push_back(parse_pattern(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return PatternSet(std::move(patterns));
}

std::string print_pattern(const VincularPattern& p) {
    const auto& w = p.base().values();
    const int n = static_cast<int>(w.size());
    if (n > 9) throw InvalidInput("text form supports patterns of length at most 9");
    std::vector<char> bonded(static_cast<std::size_t>(n + 1), 0);
    for (int b : p.bonds()) bonded[static_cast<std::size_t>(b)] = 1;
    std::string out;
    if (p.cyclic()) out += '[';
    int i = 0;
    while (i < n) {
        int j = i;
        while (j + 1 < n && bonded[static_cast<std::size_t>(j + 1)]) ++j;
        if (j > i) out += '(';
        for (int k = i; k <= j; ++k) out += static_cast<char>('0' + w[static_cast<std::size_t>(k)]);
        if (j > i) out += ')';
        i = j + 1;
    }
    if (p.cyclic()) out += ']';
    return out;
}

std::string print_pattern_set(const PatternSet& s) {
    std::string out;
    for (const auto& p : s.patterns()) {
        if (!out.empty()) out += ',';
        out += print_pattern(p);
    }
    return out;
}

}  // namespace cycperm
