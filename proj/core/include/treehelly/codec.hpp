#ifndef TREEHELLY_CODEC_HPP
#define TREEHELLY_CODEC_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "treehelly/graph.hpp"

namespace treehelly {

/// Malformed input; `offset` is the byte position of the offending token.
class CodecError : public std::runtime_error {
public:
    CodecError(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/// graph6 per the published byte layout (McKay). Supports n < 2^18.
std::string encode_graph6(const SimpleGraph& g);
SimpleGraph decode_graph6(const std::string& text);

/// Plain edge list: first line is the vertex count, then one "u v" pair per
/// line, 0-based. Blank lines ignored.
std::string encode_edge_list(const SimpleGraph& g);
SimpleGraph decode_edge_list(const std::string& text);

/// Auto-detect: edge list when the input starts with a decimal count,
/// graph6 otherwise.
SimpleGraph decode_graph(const std::string& text);

std::string encode_dot(const SimpleGraph& g, const std::string& name = "G");

}  // namespace treehelly

#endif
