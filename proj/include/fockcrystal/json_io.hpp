#pragma once

#include <string>

#include <json.hpp>

#include "fockcrystal/column.hpp"
#include "fockcrystal/fock.hpp"
#include "fockcrystal/partition.hpp"

// JSON encodings:
//   Partition       [4,3,1]
//   Multipartition  [[4,3,1],[2]]
//   Multicharge     [4,0,1]
//   Node            [a,b,c]
//   FiniteColumn    [9,8,7]            (top to bottom)
//   InfiniteColumn  {"charge": s, "shape": [...]}
//   CrystalGraph    {"vertices": [...], "edges": [[src,i,j,dst], ...]}

namespace fock {

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

void to_json(nlohmann::json& j, const Multipartition& mp);
void from_json(const nlohmann::json& j, Multipartition& mp);

void to_json(nlohmann::json& j, const Multicharge& s);
void from_json(const nlohmann::json& j, Multicharge& s);

void to_json(nlohmann::json& j, const Node& n);
void from_json(const nlohmann::json& j, Node& n);

void to_json(nlohmann::json& j, const FiniteColumn& c);
void from_json(const nlohmann::json& j, FiniteColumn& c);

void to_json(nlohmann::json& j, const InfiniteColumn& c);
void from_json(const nlohmann::json& j, InfiniteColumn& c);

nlohmann::json crystal_to_json(const CrystalGraph& g);

// One node per multipartition (label = JSON form), edge labels "i (j)".
std::string crystal_to_dot(const CrystalGraph& g);

}  // namespace fock
