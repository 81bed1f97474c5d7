#include "treehelly/codec.hpp"

#include <cctype>
#include <sstream>

namespace treehelly {

namespace {
constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'
}  // namespace

std::string encode_graph6(const SimpleGraph& g) {
    const int n = g.n();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else if (n < (1 << 18)) {
        out.push_back(static_cast<char>(kG6Hi));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
    } else {
        throw std::invalid_argument("graph too large for supported graph6 range");
    }
    // Upper triangle column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kG6Lo));
    return out;
}

SimpleGraph decode_graph6(const std::string& text) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > text.size()) throw CodecError("truncated graph6 input", text.size());
    };
    auto sextet = [&]() {
        need(1);
        int c = static_cast<unsigned char>(text[pos]);
        if (c < kG6Lo || c > kG6Hi) throw CodecError("invalid graph6 byte", pos);
        ++pos;
        return c - kG6Lo;
    };

    need(1);
    long long n;
    if (static_cast<unsigned char>(text[0]) == kG6Hi) {
        ++pos;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == kG6Hi)
            throw CodecError("graph6 header for n >= 2^18 not supported", pos);
        n = sextet();
        n = (n << 6) | sextet();
        n = (n << 6) | sextet();
    } else {
        n = sextet();
    }

    SimpleGraph g(static_cast<int>(n));
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                acc = sextet();
                bits = 6;
            }
            if (acc & (1 << (bits - 1))) g.add_edge(i, j);
            --bits;
        }
    }
    if (pos != text.size()) throw CodecError("trailing bytes after graph6 body", pos);
    return g;
}

std::string encode_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

SimpleGraph decode_edge_list(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&](const char* what) {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw CodecError(std::string("expected ") + what, start);
        return std::stoll(text.substr(start, pos - start));
    };

    long long n = read_int("vertex count header");
    if (n < 0 || n > (1 << 20)) throw CodecError("unreasonable vertex count", 0);
    SimpleGraph g(static_cast<int>(n));
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        size_t tok = pos;
        long long u = read_int("vertex index");
        skip_ws();
        if (pos == text.size()) throw CodecError("odd edge token count", tok);
        size_t tok2 = pos;
        long long v = read_int("vertex index");
        if (u >= n || v >= n)
            throw CodecError("vertex index out of range", u >= n ? tok : tok2);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

SimpleGraph decode_graph(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        return decode_edge_list(text);
    // graph6 bodies never contain whitespace
    std::string trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
    size_t lead = 0;
    while (lead < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[lead]))) ++lead;
    return decode_graph6(trimmed.substr(lead));
}

std::string encode_dot(const SimpleGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace treehelly
