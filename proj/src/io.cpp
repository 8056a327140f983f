#include "cyclehom/io.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cyclehom/errors.hpp"

namespace cyclehom::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text, const std::string& name) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError(name + ": not valid JSON");
  if (!doc.is_object()) throw ParseError(name + ": expected a JSON object");
  return doc;
}

void require_version(const json& doc, const std::string& name) {
  if (!doc.contains("format_version") || !doc["format_version"].is_string())
    throw ParseError(name + ": missing string field \"format_version\"");
  const std::string version = doc["format_version"].get<std::string>();
  if (version != "1") throw ParseError(name + ": unsupported format_version \"" + version + "\"");
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError("cannot read file " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

cycles::FiniteGroup group_from_json(const json& doc, const std::string& name) {
  require_version(doc, name);
  if (!doc.contains("order") || !doc["order"].is_number_integer())
    throw ParseError(name + ": missing integer field \"order\"");
  const std::int64_t order = doc["order"].get<std::int64_t>();
  if (!doc.contains("table") || !doc["table"].is_array())
    throw ParseError(name + ": missing array field \"table\"");

  std::vector<std::vector<std::int64_t>> table;
  for (const json& row : doc["table"]) {
    if (!row.is_array()) throw ParseError(name + ": table rows must be arrays");
    std::vector<std::int64_t> entries;
    for (const json& cell : row) {
      if (!cell.is_number_integer()) throw ParseError(name + ": table entries must be integers");
      entries.push_back(cell.get<std::int64_t>());
    }
    table.push_back(std::move(entries));
  }
  if (static_cast<std::int64_t>(table.size()) != order)
    throw ValidationError(name + ": declared order " + std::to_string(order) + " but the table has " +
                          std::to_string(table.size()) + " rows");

  if (doc.contains("names")) {
    if (!doc["names"].is_array()) throw ParseError(name + ": \"names\" must be an array");
    for (const json& label : doc["names"])
      if (!label.is_string()) throw ParseError(name + ": element names must be strings");
    if (static_cast<std::int64_t>(doc["names"].size()) != order)
      throw ValidationError(name + ": \"names\" must label each of the " + std::to_string(order) +
                            " elements");
  }

  return cycles::FiniteGroup(name, std::move(table));
}

std::vector<std::vector<std::int64_t>> generators_from_json(const json& doc,
                                                            const std::string& name) {
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw ParseError(name + ": missing array field \"generators\"");
  std::vector<std::vector<std::int64_t>> generators;
  for (const json& perm : doc["generators"]) {
    if (!perm.is_array()) throw ParseError(name + ": generators must be arrays of indices");
    std::vector<std::int64_t> entries;
    for (const json& cell : perm) {
      if (!cell.is_number_integer())
        throw ParseError(name + ": generator entries must be integers");
      entries.push_back(cell.get<std::int64_t>());
    }
    generators.push_back(std::move(entries));
  }
  return generators;
}

ordered_json cyclic_group_json(std::int64_t n) {
  ordered_json doc;
  doc["format_version"] = "1";
  doc["order"] = n;
  ordered_json table = ordered_json::array();
  for (std::int64_t a = 0; a < n; ++a) {
    ordered_json row = ordered_json::array();
    for (std::int64_t b = 0; b < n; ++b) row.push_back((a + b) % n);
    table.push_back(std::move(row));
  }
  doc["table"] = std::move(table);
  return doc;
}

ordered_json group_json(const cycles::FiniteGroup& g) {
  ordered_json doc;
  doc["format_version"] = "1";
  doc["order"] = g.order();
  ordered_json table = ordered_json::array();
  for (std::int64_t a = 0; a < g.order(); ++a) {
    ordered_json row = ordered_json::array();
    for (std::int64_t b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  doc["table"] = std::move(table);
  return doc;
}

ordered_json inversion_action_json(std::int64_t n) {
  ordered_json doc;
  doc["format_version"] = "1";
  doc["group"] = "cyclic_" + std::to_string(n) + ".json";
  ordered_json perm = ordered_json::array();
  for (std::int64_t a = 0; a < n; ++a) perm.push_back((n - a) % n);
  doc["generators"] = ordered_json::array({std::move(perm)});
  return doc;
}

void write_json(const std::filesystem::path& file, const ordered_json& doc) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write file " + file.string());
  out << doc.dump(2) << '\n';
}

}  // namespace

cycles::FiniteGroup parse_group(const std::string& text, const std::string& name) {
  return group_from_json(parse_json(text, name), name);
}

cycles::FiniteGroup load_group(const std::filesystem::path& file) {
  return parse_group(read_file(file), file.stem().string());
}

cycles::GroupAction parse_action(const std::string& text, const std::filesystem::path& base_dir,
                                 const std::string& name) {
  const json doc = parse_json(text, name);
  require_version(doc, name);
  if (!doc.contains("group")) throw ParseError(name + ": missing field \"group\"");

  cycles::FiniteGroup group = [&] {
    const json& ref = doc["group"];
    if (ref.is_string()) {
      std::filesystem::path target(ref.get<std::string>());
      if (target.is_relative()) target = base_dir / target;
      return load_group(target);
    }
    if (ref.is_object()) return group_from_json(ref, name + ".group");
    throw ParseError(name + ": \"group\" must be a path or an inline group object");
  }();

  return cycles::GroupAction::generated(std::move(group), generators_from_json(doc, name));
}

cycles::GroupAction load_action(const std::filesystem::path& file) {
  return parse_action(read_file(file), file.parent_path(), file.stem().string());
}

std::vector<std::string> write_seed_corpus(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;

  for (std::int64_t n = 2; n <= 6; ++n) {
    const std::string file = "cyclic_" + std::to_string(n) + ".json";
    write_json(dir / file, cyclic_group_json(n));
    written.push_back(file);
  }
  write_json(dir / "s_3.json", group_json(cycles::FiniteGroup::dihedral(3)));
  written.push_back("s_3.json");

  for (std::int64_t n : {3, 4, 5}) {
    const std::string file = "mu_" + std::to_string(n) + "_inversion.json";
    write_json(dir / file, inversion_action_json(n));
    written.push_back(file);
  }

  ordered_json trivial;
  trivial["format_version"] = "1";
  trivial["group"] = "s_3.json";
  trivial["generators"] = ordered_json::array();
  write_json(dir / "s_3_trivial.json", trivial);
  written.push_back("s_3_trivial.json");

  std::sort(written.begin(), written.end());
  return written;
}

}  // namespace cyclehom::io
