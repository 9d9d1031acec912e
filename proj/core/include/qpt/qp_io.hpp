#ifndef QPT_QP_IO_HPP
#define QPT_QP_IO_HPP

#include <string>
#include <vector>

#include "qpt/quiver.hpp"

namespace qpt {

// QP file format: one JSON object with fields
//   vertices:  ["1", "2", ...]
//   arrows:    [{"id": "a", "src": "1", "tgt": "2"}, ...]
//   potential: [{"coeff": "p/q", "cycle": ["a", "b", ...]}, ...]
// Unknown fields are ignored on parse; serialization is deterministic and
// parse . serialize . parse = parse holds bit-exactly.
QP parse_qp(const std::string& text);
std::string serialize_qp(const QP& qp);

QP load_qp_file(const std::string& path);
void save_qp_file(const QP& qp, const std::string& path);

// EjeQuiver output reuses the QP format; each arrow carries an extra
// "witness" field (a path in the ambient quiver), ignored by parse_qp.
struct EjeArrowNote {
    std::vector<std::string> witness;
};
std::string serialize_qp_with_witnesses(const QP& qp, const std::vector<EjeArrowNote>& notes);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace qpt

#endif
