#pragma once
#include "toricq/binom.hpp"
#include "toricq/quivrep.hpp"

#include <json.hpp>

namespace tq {

using json = nlohmann::ordered_json;

// integers go out as JSON numbers when they fit in 53 bits, else as decimal strings
json to_json(const Int& x);
json to_json(const IVec& v);
json to_json(const QVec& v);
json to_json(const Mat& m);
json to_json(const Fan& f, const std::vector<IVec>* ray_order = nullptr);
json to_json(const Quiver& q);
json to_json(const BinomialIdeal& I);

Int int_from_json(const json& j);
IVec ivec_from_json(const json& j);
Mat mat_from_json(const json& j);
// fan plus the ray order it was written in
std::pair<Fan, std::vector<IVec>> fan_from_json(const json& j);
Quiver quiver_from_json(const json& j);
BinomialIdeal ideal_from_json(const json& j);

json read_json_file(const std::string& path);

// "1,2;3,4" style inline matrices and vector lists
std::vector<IVec> parse_rows(const std::string& s);
IVec parse_ivec(const std::string& s);

std::string fan_dot(const Fan& f, const std::vector<IVec>* ray_order = nullptr, const std::string& name = "fan");
// arrow labels rendered through label_fn when given
std::string quiver_dot(const Quiver& q, const std::function<std::string(std::size_t)>& label_fn = nullptr,
                       const std::string& name = "Q");

} // namespace tq
