#ifndef KGV_ELEMENT_IO_HPP
#define KGV_ELEMENT_IO_HPP

#include <string>

#include "kgv/kpalg.hpp"

namespace kgv {

// Round-trippable text form of algebra elements, e.g.
//   "3/2 * s[a,f] s[b]* + -1 * p[v]"
// where s[...] lists an edge word (last traversed first) and p[v] is a
// vertex projection. KPElement::str() emits this form; parseElement reads
// it back over a given graph.
KPElement parseElement(const KGraphPtr& graph, const std::string& text);

// JSON mirror: [{"coeff": "3/2", "mu": ["a","f"], "nu": ["b"], "at": "v"}, ...]
std::string elementToJson(const KPElement& x);
KPElement elementFromJson(const KGraphPtr& graph, const std::string& jsonText);

}  // namespace kgv

#endif  // KGV_ELEMENT_IO_HPP
