#ifndef PGROUPLAB_PARSE_HPP
#define PGROUPLAB_PARSE_HPP

#include <string>
#include <vector>

#include "pgrouplab/common.hpp"
#include "pgrouplab/group.hpp"
#include "pgrouplab/hom.hpp"

namespace pgrouplab {

/// "<p>:[l1,l2,...]", e.g. "2:[3,1]" or "3:[]". Exponents may come in any
/// order; the shape stores them sorted. Throws ParseError with the offending
/// position on malformed text.
GroupShape parse_group(const std::string& text);

/// "(c1,c2,...)" with one coordinate per group rank; values reduce modulo
/// the coordinate moduli. "()" is the element of a rank-0 group.
Element parse_element(const GroupShape& g, const std::string& text);

/// Semicolon-separated element list, e.g. "(1,2);(0,4)". Empty or
/// whitespace-only text is an empty list.
std::vector<Element> parse_generators(const GroupShape& g, const std::string& text);

/// "[[1,0],[0,1]]" row-major; "[]" is the 0 x 0 matrix.
std::vector<std::vector<u64>> parse_matrix(const std::string& text);

/// Matrix text as an endomorphism of g (rank x rank, entries validated by
/// the homomorphism constructor).
Homomorphism parse_endo(const GroupShape& g, const std::string& text);

}  // namespace pgrouplab

#endif
