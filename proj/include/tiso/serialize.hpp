#pragma once

#include <string>
#include <vector>

#include "tiso/base.hpp"
#include "tiso/cayley.hpp"
#include "tiso/classes.hpp"
#include "tiso/diagrams.hpp"
#include "tiso/svaction.hpp"

namespace tiso {

// Canonical JSON keys. Object members are emitted in alphabetical order, so
// equal values always serialize to equal strings.
std::string partition_key(const Partition& p);             // [3,1]
std::string root_key(const Root& r);                       // {"i":..,"j":..,"sign":"+"}
std::string word_key(const Word& w);                       // "rdrrd"
std::string class_key(const EquivClass& c);                // canonical {"k":..,"lambda":[..]}
std::string labeled_key(const LabeledDiagram& s);          // {"k":..,"lambda":[..]}
std::string sv_key(const SuperVector& v);                  // {"a":[..],"b":[..]}
std::string chain_key(const std::vector<Root>& chain);     // array of roots

Partition parse_partition(const RectConfig& rect, const std::string& json_text);
Root parse_root(const std::string& json_text);
LabeledDiagram parse_labeled(const RectConfig& rect, const std::string& json_text);
SuperVector parse_sv(const std::string& json_text);

std::string to_dot(const CayleyGraph& g);
std::string graph_json(const CayleyGraph& g, const OrbitReport* report = nullptr);

std::string report_json(const OrbitReport& report);
std::string iso_report_json(const IsoReport& report);

}  // namespace tiso
