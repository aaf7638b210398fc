#pragma once

// JSON schemas and DOT export.
//
//   group        {"n", "M", "E", "r"}
//   presentation {"n", "m", "r"}
//   element      {"i", "j"}
//   normal form  {"r", "s", "t", "sign"}
//   type params  {"type": "I", "r", "s", "t", "u"} or
//                {"type": "II", "r", "s", "v", "t", "t_prime", "u"}
//   certificate  {"sigma": [...], "tau": [...], "m", "n"}
//   graph        {"N", "edges": [[u, v], ...]}

#include <string>

#include <json.hpp>

#include "metacyc/graphs.hpp"
#include "metacyc/group.hpp"
#include "metacyc/two_groups.hpp"

namespace metacyc {

using Json = nlohmann::json;

void to_json(Json& j, const GeneralPresentation& p);
void from_json(const Json& j, GeneralPresentation& p);
void to_json(Json& j, const SplitPresentation& p);
void from_json(const Json& j, SplitPresentation& p);
void to_json(Json& j, const GroupElement& g);
void from_json(const Json& j, GroupElement& g);
void to_json(Json& j, const NormalForm2& f);
void from_json(const Json& j, NormalForm2& f);
void to_json(Json& j, const TypeIParams& p);
void from_json(const Json& j, TypeIParams& p);
void to_json(Json& j, const TypeIIParams& p);
void from_json(const Json& j, TypeIIParams& p);
void to_json(Json& j, const MetacircCertificate& c);
void from_json(const Json& j, MetacircCertificate& c);
void to_json(Json& j, const SimpleGraph& g);
void from_json(const Json& j, SimpleGraph& g);

Json params_to_json(const TwoGroupParams& p);
TwoGroupParams params_from_json(const Json& j);

/// Undirected DOT with vertex labels "i.j".
std::string to_dot(const GroupGraph& gg, const std::string& name = "G");

}  // namespace metacyc
