#include "quandlekit/serialize.hpp"

#include <fstream>
#include <stdexcept>

#include "quandlekit/errors.hpp"

namespace quandlekit {
namespace {

std::vector<int> flatten(const Json& rows, std::size_t n, const char* what) {
  if (!rows.is_array() || rows.size() != n) throw std::invalid_argument(std::string(what) + " must have size rows");
  std::vector<int> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw std::invalid_argument(std::string(what) + " rows must have size entries");
    for (const auto& v : row) flat.push_back(v.get<int>());
  }
  return flat;
}

Json unflatten(const std::vector<int>& flat, std::size_t n) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(std::vector<int>(flat.begin() + static_cast<std::ptrdiff_t>(i * n),
                                    flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)));
  }
  return rows;
}

std::vector<std::string> labels_of(const Json& j) {
  if (!j.contains("labels")) return {};
  return j.at("labels").get<std::vector<std::string>>();
}

}  // namespace

Json quandle_to_json(const FiniteQuandle& q) {
  Json j;
  j["size"] = q.size();
  j["table"] = unflatten(q.table(), static_cast<std::size_t>(q.size()));
  if (!q.labels().empty()) j["labels"] = q.labels();
  return j;
}

FiniteQuandle quandle_from_json(const Json& j, bool unchecked) {
  const int n = j.at("size").get<int>();
  if (n < 1) throw std::invalid_argument("size must be positive");
  FiniteQuandle q(n, flatten(j.at("table"), static_cast<std::size_t>(n), "table"), labels_of(j));
  if (!unchecked) {
    if (auto v = check_axioms(q)) throw AxiomViolationError(v->describe());
  }
  return q;
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["size"] = g.size();
  j["mult"] = unflatten(g.mult(), static_cast<std::size_t>(g.size()));
  j["identity"] = g.identity();
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  const int n = j.at("size").get<int>();
  if (n < 1) throw std::invalid_argument("size must be positive");
  return FiniteGroup(n, flatten(j.at("mult"), static_cast<std::size_t>(n), "mult"), j.value("identity", 0), labels_of(j));
}

Json mcq_to_json(const MCQ& x) {
  Json j;
  j["groups"] = Json::array();
  for (const auto& g : x.groups()) j["groups"].push_back(group_to_json(g));
  j["op"] = unflatten(x.op_table(), static_cast<std::size_t>(x.carrier_size()));
  return j;
}

MCQ mcq_from_json(const Json& j, bool unchecked) {
  std::vector<FiniteGroup> groups;
  std::size_t carrier = 0;
  for (const auto& g : j.at("groups")) {
    groups.push_back(group_from_json(g));
    carrier += static_cast<std::size_t>(groups.back().size());
  }
  MCQ x(std::move(groups), flatten(j.at("op"), carrier, "op"));
  if (!unchecked) {
    if (auto v = check_mcq_axioms(x)) throw AxiomViolationError(v->describe());
  }
  return x;
}

Json partition_to_json(const Partition& p) {
  Json j = Json::array();
  for (const auto& block : p) j.push_back(block);
  return j;
}

Json decomposition_to_json(const Decomposition& d) {
  Json j;
  j["depth"] = d.depth;
  j["levels"] = Json::array();
  for (const auto& level : d.levels) j["levels"].push_back(partition_to_json(level));
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  d.depth = j.at("depth").get<int>();
  for (const auto& level : j.at("levels")) d.levels.push_back(canonical_partition(level.get<Partition>()));
  if (d.depth < 0 || static_cast<std::size_t>(d.depth) + 2 != d.levels.size()) {
    throw std::invalid_argument("decomposition must list depth + 2 levels");
  }
  return d;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte, "valid JSON", path + ": " + e.what());
  }
}

}  // namespace quandlekit
