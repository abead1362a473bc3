#include "globwb/expr.hpp"

#include <cctype>

namespace globwb {

namespace {

struct Lexer {
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c, const char* what) {
        if (peek() != c) throw ParseError(pos, std::string("expected ") + what);
        ++pos;
    }
    int nat() {
        skip();
        std::size_t start = pos;
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) throw ParseError(start, "number too large");
            ++pos;
        }
        if (pos == start) throw ParseError(start, "expected a natural number");
        return static_cast<int>(v);
    }
};

Table parse_bracket(Lexer& lx) {
    Table t;
    lx.expect('[', "'['");
    while (std::isdigit(static_cast<unsigned char>(lx.peek()))) t.tops.push_back(lx.nat());
    if (t.tops.empty()) throw ParseError(lx.pos, "table needs at least one entry");
    if (lx.peek() == '/') {
        ++lx.pos;
        while (std::isdigit(static_cast<unsigned char>(lx.peek()))) t.glues.push_back(lx.nat());
    }
    std::size_t close = lx.pos;
    lx.expect(']', "']'");
    if (t.glues.size() + 1 != t.tops.size())
        throw ParseError(close, "table with " + std::to_string(t.tops.size()) + " entries needs " +
                                    std::to_string(t.tops.size() - 1) + " glue levels");
    for (std::size_t k = 0; k < t.glues.size(); ++k)
        if (t.glues[k] >= t.tops[k] || t.glues[k] >= t.tops[k + 1])
            throw ParseError(close, "glue level " + std::to_string(t.glues[k]) + " at position " + std::to_string(k + 1) +
                                        " is not below both neighbours");
    return t;
}

int atom(Lexer& lx) {
    lx.expect('D', "a disk atom 'D<n>'");
    return lx.nat();
}

}  // namespace

Table parse_expr(std::string_view text) {
    Lexer lx{text};
    if (lx.done()) throw ParseError(0, "empty expression");
    Table t;
    if (lx.peek() == '[') {
        t = parse_bracket(lx);
    } else {
        t.tops.push_back(atom(lx));
        while (lx.peek() == '*') {
            std::size_t at = lx.pos;
            ++lx.pos;
            int g = lx.nat();
            int next = atom(lx);
            if (g >= t.tops.back() || g >= next)
                throw ParseError(at, "glue level " + std::to_string(g) + " not below neighbours D" +
                                         std::to_string(t.tops.back()) + " and D" + std::to_string(next));
            t.glues.push_back(g);
            t.tops.push_back(next);
        }
    }
    if (!lx.done()) throw ParseError(lx.pos, "unexpected trailing input");
    t.validate();
    return t;
}

std::string print_expr(const Table& t) {
    std::string s = "D" + std::to_string(t.tops.at(0));
    for (std::size_t k = 0; k < t.glues.size(); ++k)
        s += " *" + std::to_string(t.glues[k]) + " D" + std::to_string(t.tops[k + 1]);
    return s;
}

}  // namespace globwb
