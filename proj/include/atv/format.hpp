#ifndef ATV_FORMAT_HPP
#define ATV_FORMAT_HPP

#include <string>

#include "atv/chain_complex.hpp"

namespace atv {

/// Parses the chain-complex text format:
///
///   name <string>
///   meta <key> <value>        (optional, repeatable)
///   dim <n>
///   ranks <r0> ... <rn>
///   boundary <p>              (for p = 1..n, in order)
///   <ranks[p-1] rows of ranks[p] signed integers>
///
/// '#' starts a comment, blank lines are ignored, LF or CRLF both accepted.
/// Throws ParseError with line/column on malformed input; the returned
/// complex is validated (dd = 0) before being handed back.
ChainComplex parse_complex(const std::string& text);

/// Emits the same grammar; parse(serialize(cc)) reproduces cc exactly.
std::string serialize_complex(const ChainComplex& cc);

} // namespace atv

#endif
