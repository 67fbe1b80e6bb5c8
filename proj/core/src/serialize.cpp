#include "maplaw/serialize.hpp"

#include "maplaw/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace maplaw {

namespace {

using json = nlohmann::ordered_json;

json rational_to_json(const Rational& r) { return json(to_string(r)); }

Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_string()) {
    auto parsed = try_parse_rational(v.get<std::string>());
    if (parsed) return *parsed;
    raise(Errc::parse_error, where + ": '" + v.get<std::string>() + "' is not a rational");
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_unsigned()) return Rational(v.get<unsigned long long>());
  if (v.is_number_float()) return Rational(v.get<double>());
  raise(Errc::parse_error, where + ": expected a rational string or number");
}

json point_to_json(const Point& p) {
  json arr = json::array();
  for (const Rational& c : p.coords()) arr.push_back(rational_to_json(c));
  return arr;
}

Point point_from_json(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty())
    raise(Errc::parse_error, where + ": expected a nonempty coordinate array");
  std::vector<Rational> coords;
  coords.reserve(v.size());
  std::size_t i = 0;
  for (const json& c : v) {
    coords.push_back(rational_from_json(c, where + "[" + std::to_string(i) + "]"));
    ++i;
  }
  return Point(std::move(coords));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    raise(Errc::parse_error, e.what());
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::parse_error, "cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void save_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(Errc::invalid_argument, "cannot write file '" + path + "'");
  out << body;
  if (!out) raise(Errc::invalid_argument, "short write to '" + path + "'");
}

std::string mapping_to_json(const FiniteMapping& m) {
  json doc = json::object();
  doc["m"] = m.domain_dim();
  doc["n"] = m.range_dim();
  json pairs = json::array();
  for (const auto& [x, y] : m.table()) {
    json entry = json::array();
    entry.push_back(point_to_json(x));
    entry.push_back(point_to_json(y));
    pairs.push_back(std::move(entry));
  }
  doc["pairs"] = std::move(pairs);
  if (!m.meta().empty()) doc["meta"] = m.meta();
  return dump(doc);
}

FiniteMapping mapping_from_json_text(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("pairs") || !doc.at("pairs").is_array())
    raise(Errc::parse_error, "mapping document needs a 'pairs' array");
  std::vector<std::pair<Point, Point>> pairs;
  std::size_t i = 0;
  for (const json& entry : doc.at("pairs")) {
    const std::string where = "pairs[" + std::to_string(i) + "]";
    if (!entry.is_array() || entry.size() != 2)
      raise(Errc::parse_error, where + ": expected [[x...],[y...]]");
    pairs.emplace_back(point_from_json(entry.at(0), where + ".x"),
                       point_from_json(entry.at(1), where + ".y"));
    ++i;
  }
  std::string meta;
  if (doc.contains("meta")) {
    if (!doc.at("meta").is_string()) raise(Errc::parse_error, "meta: expected a string");
    meta = doc.at("meta").get<std::string>();
  }
  FiniteMapping m = FiniteMapping::build(std::move(pairs), std::move(meta));
  if (doc.contains("m") && doc.at("m").is_number_integer() &&
      doc.at("m").get<long long>() != static_cast<long long>(m.domain_dim()))
    raise(Errc::parse_error, "declared domain dimension does not match the pairs");
  if (doc.contains("n") && doc.at("n").is_number_integer() &&
      doc.at("n").get<long long>() != static_cast<long long>(m.range_dim()))
    raise(Errc::parse_error, "declared range dimension does not match the pairs");
  return m;
}

std::string mapping_to_csv(const FiniteMapping& m) {
  std::string out;
  for (std::size_t j = 0; j < m.domain_dim(); ++j) {
    if (j) out += ",";
    out += "x" + std::to_string(j + 1);
  }
  for (std::size_t j = 0; j < m.range_dim(); ++j)
    out += ",y" + std::to_string(j + 1);
  out += "\n";
  for (const auto& [x, y] : m.table()) {
    std::string row;
    for (const Rational& c : x.coords()) {
      if (!row.empty()) row += ",";
      row += to_string(c);
    }
    for (const Rational& c : y.coords()) row += "," + to_string(c);
    out += row + "\n";
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  for (std::string& f : fields) {
    std::size_t begin = f.find_first_not_of(" \t");
    std::size_t end = f.find_last_not_of(" \t");
    f = begin == std::string::npos ? "" : f.substr(begin, end - begin + 1);
  }
  return fields;
}

}  // namespace

FiniteMapping mapping_from_csv_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  std::size_t m = 0, n = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> header = split_csv_line(line);
    for (const std::string& h : header) {
      if (h.size() >= 2 && h[0] == 'x' && n == 0)
        ++m;
      else if (h.size() >= 2 && h[0] == 'y')
        ++n;
      else
        raise(Errc::parse_error,
              "line " + std::to_string(line_no) + ": header field '" + h +
                  "' (expected x1..xm then y1..yn)");
    }
    break;
  }
  if (m == 0 || n == 0)
    raise(Errc::parse_error, "CSV header must declare at least x1 and y1");

  std::vector<std::pair<Point, Point>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != m + n)
      raise(Errc::parse_error, "line " + std::to_string(line_no) + ": expected " +
                                   std::to_string(m + n) + " fields, got " +
                                   std::to_string(fields.size()));
    std::vector<Rational> xs, ys;
    for (std::size_t j = 0; j < m + n; ++j) {
      auto parsed = try_parse_rational(fields[j]);
      if (!parsed)
        raise(Errc::parse_error, "line " + std::to_string(line_no) + ": '" + fields[j] +
                                     "' is not a rational");
      (j < m ? xs : ys).push_back(std::move(*parsed));
    }
    pairs.emplace_back(Point(std::move(xs)), Point(std::move(ys)));
  }
  return FiniteMapping::build(std::move(pairs));
}

FiniteMapping load_mapping_file(const std::string& path) {
  std::string body = read_text_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return mapping_from_csv_text(body);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return mapping_from_json_text(body);
  raise(Errc::parse_error, "mapping file '" + path + "' must end in .csv or .json");
}

namespace {

json concept_points_json(const ConceptSet& c) {
  json arr = json::array();
  for (const Point& p : c.members) arr.push_back(point_to_json(p));
  return arr;
}

}  // namespace

std::string law1_report_to_json(const Law1Report& report) {
  json doc = json::object();
  doc["verdict"] = law1_verdict_name(report.verdict);
  doc["method"] = law1_method_name(report.method);
  if (report.witness) {
    json w = json::object();
    w["x_s"] = concept_points_json(report.witness->x_s);
    w["covered_range"] = concept_points_json(report.witness->covered_range);
    doc["witness"] = std::move(w);
  } else {
    doc["witness"] = nullptr;
  }
  json collisions = json::array();
  for (const auto& [x1, x2] : report.collisions) {
    json pair = json::array();
    pair.push_back(point_to_json(x1));
    pair.push_back(point_to_json(x2));
    collisions.push_back(std::move(pair));
  }
  doc["collisions"] = std::move(collisions);
  return dump(doc);
}

std::string constraint_to_json(const EqualityConstraint& phi) {
  json doc = json::object();
  json roots = json::array();
  for (const Rational& r : phi.roots) roots.push_back(rational_to_json(r));
  doc["roots"] = std::move(roots);
  doc["offset"] = rational_to_json(phi.offset);
  return dump(doc);
}

EqualityConstraint constraint_from_json_text(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("roots") || !doc.at("roots").is_array())
    raise(Errc::parse_error, "constraint document needs a 'roots' array");
  std::vector<Rational> roots;
  std::size_t i = 0;
  for (const json& r : doc.at("roots")) {
    roots.push_back(rational_from_json(r, "roots[" + std::to_string(i) + "]"));
    ++i;
  }
  Rational offset = 0;
  if (doc.contains("offset")) offset = rational_from_json(doc.at("offset"), "offset");
  return build_constraint(std::move(roots), std::move(offset));
}

EqualityConstraint load_constraint_file(const std::string& path) {
  return constraint_from_json_text(read_text_file(path));
}

std::string harvest_to_json(const HarvestFunction& h) {
  json doc = json::object();
  json pieces = json::array();
  for (const auto& piece : h.pieces()) {
    json p = json::object();
    p["concept"] = concept_points_json(piece.concept_set);
    p["level"] = rational_to_json(piece.level);
    pieces.push_back(std::move(p));
  }
  doc["pieces"] = std::move(pieces);
  return dump(doc);
}

namespace {

ConceptSet concept_from_points_json(const json& arr, std::string name, Side side,
                                    const std::string& where) {
  if (!arr.is_array() || arr.empty())
    raise(Errc::parse_error, where + ": expected a nonempty array of points");
  std::vector<Point> members;
  std::size_t i = 0;
  for (const json& p : arr) {
    members.push_back(point_from_json(p, where + "[" + std::to_string(i) + "]"));
    ++i;
  }
  return ConceptSet(std::move(name), side, std::move(members));
}

}  // namespace

HarvestFunction harvest_from_json_text(const std::string& text) {
  json doc = parse_json(text);
  std::vector<ConceptSet> concepts;
  std::optional<std::vector<Rational>> levels;

  if (doc.is_object() && doc.contains("pieces")) {
    // The serialized form: levels travel with their pieces.
    std::vector<Rational> level_list;
    std::size_t i = 0;
    for (const json& p : doc.at("pieces")) {
      const std::string where = "pieces[" + std::to_string(i) + "]";
      if (!p.is_object() || !p.contains("concept"))
        raise(Errc::parse_error, where + ": expected {concept, level}");
      concepts.push_back(concept_from_points_json(p.at("concept"),
                                                  "piece-" + std::to_string(i), Side::range_side,
                                                  where + ".concept"));
      if (p.contains("level"))
        level_list.push_back(rational_from_json(p.at("level"), where + ".level"));
      ++i;
    }
    if (!level_list.empty()) {
      if (level_list.size() != concepts.size())
        raise(Errc::parse_error, "either every piece carries a level or none does");
      levels = std::move(level_list);
    }
  } else if (doc.is_object() && doc.contains("concepts")) {
    // The build-input form: concept groups plus an optional level list.
    std::size_t i = 0;
    for (const json& c : doc.at("concepts")) {
      const std::string where = "concepts[" + std::to_string(i) + "]";
      std::string name = "concept-" + std::to_string(i);
      if (c.is_object()) {
        if (c.contains("name") && c.at("name").is_string()) name = c.at("name").get<std::string>();
        if (!c.contains("points"))
          raise(Errc::parse_error, where + ": expected a 'points' array");
        concepts.push_back(concept_from_points_json(c.at("points"), std::move(name),
                                                    Side::range_side, where + ".points"));
      } else {
        concepts.push_back(
            concept_from_points_json(c, std::move(name), Side::range_side, where));
      }
      ++i;
    }
    if (doc.contains("levels")) {
      std::vector<Rational> level_list;
      std::size_t j = 0;
      for (const json& l : doc.at("levels")) {
        level_list.push_back(rational_from_json(l, "levels[" + std::to_string(j) + "]"));
        ++j;
      }
      levels = std::move(level_list);
    }
  } else {
    raise(Errc::parse_error, "harvest document needs 'pieces' or 'concepts'");
  }
  return build_harvest(std::move(concepts), std::move(levels));
}

HarvestFunction load_harvest_file(const std::string& path) {
  return harvest_from_json_text(read_text_file(path));
}

std::vector<ConceptSet> groups_from_json_text(const std::string& text, Side side) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("groups") || !doc.at("groups").is_array() ||
      doc.at("groups").empty())
    raise(Errc::parse_error, "groups document needs a nonempty 'groups' array");
  std::vector<ConceptSet> groups;
  std::size_t i = 0;
  for (const json& g : doc.at("groups")) {
    const std::string where = "groups[" + std::to_string(i) + "]";
    std::string name = "group-" + std::to_string(i);
    if (g.is_object()) {
      if (g.contains("name") && g.at("name").is_string()) name = g.at("name").get<std::string>();
      if (!g.contains("points")) raise(Errc::parse_error, where + ": expected a 'points' array");
      groups.push_back(
          concept_from_points_json(g.at("points"), std::move(name), side, where + ".points"));
    } else {
      groups.push_back(concept_from_points_json(g, std::move(name), side, where));
    }
    ++i;
  }
  return groups;
}

std::vector<ConceptSet> load_groups_file(const std::string& path, Side side) {
  return groups_from_json_text(read_text_file(path), side);
}

std::string bundle_to_json(const HyperplaneBundle& bundle) {
  json doc = json::object();
  doc["mode"] = mode_name(bundle.vector_set.mode);
  json direction = json::array();
  for (const Rational& d : bundle.vector_set.direction) direction.push_back(rational_to_json(d));
  doc["direction"] = std::move(direction);
  json levels = json::array();
  for (const Rational& l : bundle.vector_set.levels) levels.push_back(rational_to_json(l));
  doc["levels"] = std::move(levels);
  json embedding = json::object();
  embedding["mapping_id"] = bundle.embedding.mapping_id;
  embedding["harvest_id"] = bundle.embedding.harvest_id;
  json table = json::array();
  for (const auto& [x, z] : bundle.embedding.table) {
    json entry = json::array();
    entry.push_back(point_to_json(x));
    entry.push_back(point_to_json(z));
    table.push_back(std::move(entry));
  }
  embedding["table"] = std::move(table);
  doc["embedding"] = std::move(embedding);
  return dump(doc);
}

std::string separability_report_to_json(const SeparabilityReport& report) {
  json doc = json::object();
  json pairs = json::array();
  for (const PairResult& pr : report.pairs) {
    json entry = json::object();
    entry["group_a"] = pr.group_a;
    entry["group_b"] = pr.group_b;
    entry["verdict"] = pair_verdict_name(pr.verdict);
    entry["certificate"] = pr.certificate;
    if (pr.hyperplane) {
      json h = json::object();
      json normal = json::array();
      for (const Rational& w : pr.hyperplane->normal) normal.push_back(rational_to_json(w));
      h["normal"] = std::move(normal);
      h["offset"] = rational_to_json(pr.hyperplane->offset);
      h["margin"] = rational_to_json(pr.hyperplane->margin);
      h["first_group_side"] =
          pr.hyperplane->first_group_side == GroupSide::above ? "above" : "below";
      entry["hyperplane"] = std::move(h);
    } else {
      entry["hyperplane"] = nullptr;
    }
    entry["hull_witness"] = pr.hull_witness ? point_to_json(*pr.hull_witness) : json(nullptr);
    pairs.push_back(std::move(entry));
  }
  doc["pairs"] = std::move(pairs);
  return dump(doc);
}

std::string audit_report_to_json(const AuditReport& report) {
  json doc = json::object();
  doc["name"] = report.spec_name;
  doc["verdict"] = audit_verdict_name(report.verdict);
  json violations = json::array();
  for (const Violation& v : report.violations) {
    json entry = json::object();
    entry["rule"] = v.rule;
    entry["source_index"] = v.source_index;
    entry["explanation"] = v.explanation;
    violations.push_back(std::move(entry));
  }
  doc["violations"] = std::move(violations);
  json warnings = json::array();
  for (const AuditWarning& w : report.warnings) {
    json entry = json::object();
    entry["rule"] = w.rule;
    entry["source_index"] = w.source_index ? json(*w.source_index) : json(nullptr);
    entry["explanation"] = w.explanation;
    warnings.push_back(std::move(entry));
  }
  doc["warnings"] = std::move(warnings);
  return dump(doc);
}

std::string demo_report_to_json(const DemoReport& report) {
  json doc = json::object();
  doc["id"] = report.id;
  doc["input_hash"] = report.input_hash;
  json inputs = json::object();
  for (const auto& [key, value] : report.inputs) inputs[key] = value;
  doc["inputs"] = std::move(inputs);
  json results = json::object();
  for (const auto& [key, value] : report.results) results[key] = value;
  doc["results"] = std::move(results);
  doc["narrative"] = report.narrative;
  return dump(doc);
}

std::string demo_report_to_text(const DemoReport& report) {
  std::string out = "demo: " + report.id + "\n";
  out += "hash: " + report.input_hash + "\n\ninputs:\n";
  for (const auto& [key, value] : report.inputs) out += "  " + key + " = " + value + "\n";
  out += "\nresults:\n";
  for (const auto& [key, value] : report.results) out += "  " + key + " = " + value + "\n";
  out += "\nnarrative:\n";
  for (const std::string& line : report.narrative) out += "  - " + line + "\n";
  return out;
}

}  // namespace maplaw
