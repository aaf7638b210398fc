#include "metacyc/serialize.hpp"

#include <sstream>

#include "metacyc/error.hpp"

namespace metacyc {

void to_json(Json& j, const GeneralPresentation& p) { j = Json{{"n", p.n}, {"M", p.M}, {"E", p.E}, {"r", p.r}}; }

void from_json(const Json& j, GeneralPresentation& p) {
  p = {j.at("n").get<u64>(), j.at("M").get<u64>(), j.at("E").get<u64>(), j.at("r").get<u64>()};
}

void to_json(Json& j, const SplitPresentation& p) { j = Json{{"n", p.n}, {"m", p.m}, {"r", p.r}}; }

void from_json(const Json& j, SplitPresentation& p) {
  p = {j.at("n").get<u64>(), j.at("m").get<u64>(), j.at("r").get<u64>()};
}

void to_json(Json& j, const GroupElement& g) { j = Json{{"i", g.i}, {"j", g.j}}; }

void from_json(const Json& j, GroupElement& g) { g = {j.at("i").get<u64>(), j.at("j").get<u64>()}; }

void to_json(Json& j, const NormalForm2& f) { j = Json{{"r", f.r}, {"s", f.s}, {"t", f.t}, {"sign", f.sign}}; }

void from_json(const Json& j, NormalForm2& f) {
  f = {j.at("r").get<unsigned>(), j.at("s").get<unsigned>(), j.at("t").get<unsigned>(), j.at("sign").get<int>()};
}

void to_json(Json& j, const TypeIParams& p) {
  j = Json{{"type", "I"}, {"r", p.r}, {"s", p.s}, {"t", p.t}, {"u", p.u}};
}

void from_json(const Json& j, TypeIParams& p) {
  p = {j.at("r").get<unsigned>(), j.at("s").get<unsigned>(), j.at("t").get<unsigned>(), j.at("u").get<unsigned>()};
}

void to_json(Json& j, const TypeIIParams& p) {
  j = Json{{"type", "II"}, {"r", p.r}, {"s", p.s}, {"v", p.v}, {"t", p.t}, {"t_prime", p.tp}, {"u", p.u}};
}

void from_json(const Json& j, TypeIIParams& p) {
  p = {j.at("r").get<unsigned>(), j.at("s").get<unsigned>(),       j.at("v").get<unsigned>(),
       j.at("t").get<unsigned>(), j.at("t_prime").get<unsigned>(), j.at("u").get<unsigned>()};
}

Json params_to_json(const TwoGroupParams& p) {
  return std::visit([](const auto& q) { return Json(q); }, p);
}

TwoGroupParams params_from_json(const Json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "I") return j.get<TypeIParams>();
  if (type == "II") return j.get<TypeIIParams>();
  throw Error(ErrorKind::InvalidArgument, "unknown parameter type '" + type + "'");
}

void to_json(Json& j, const MetacircCertificate& c) {
  const auto s = c.sigma.images();
  const auto t = c.tau.images();
  j = Json{{"sigma", std::vector<Vertex>(s.begin(), s.end())},
           {"tau", std::vector<Vertex>(t.begin(), t.end())},
           {"m", c.m},
           {"n", c.n}};
}

void from_json(const Json& j, MetacircCertificate& c) {
  c.sigma = Permutation(j.at("sigma").get<std::vector<Vertex>>());
  c.tau = Permutation(j.at("tau").get<std::vector<Vertex>>());
  c.m = j.at("m").get<std::size_t>();
  c.n = j.at("n").get<std::size_t>();
}

void to_json(Json& j, const SimpleGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j = Json{{"N", g.vertex_count()}, {"edges", std::move(edges)}};
}

void from_json(const Json& j, SimpleGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  g = SimpleGraph(j.at("N").get<std::size_t>(), std::move(edges));
}

std::string to_dot(const GroupGraph& gg, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < gg.space.size(); ++v) os << "  " << v << " [label=\"" << gg.space.label(v) << "\"];\n";
  for (const auto& [u, v] : gg.graph.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace metacyc
