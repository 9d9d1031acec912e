#ifndef QPT_GRAPH_IO_HPP
#define QPT_GRAPH_IO_HPP

#include <string>

#include "qpt/exchange_graph.hpp"
#include "qpt/silting.hpp"

namespace qpt {

// Deterministic emission: identical inputs give byte-identical output.
std::string exchange_graph_json(const ExchangeGraph& eg);
std::string exchange_graph_dot(const ExchangeGraph& eg);

std::string quotient_graph_json(const QuotientGraph& qg);
std::string quotient_graph_dot(const QuotientGraph& qg);

std::string silting_graph_json(const SiltingGraph& sg);
std::string seg_bullet_json(const SegBulletResult& res);

} // namespace qpt

#endif
