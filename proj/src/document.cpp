#include "acx4/document.hpp"

#include <limits>

#include "json.hpp"

#include "acx4/error.hpp"

namespace acx4 {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

const Integer kSafeMax = (Integer(1) << 53) - 1;

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParseError, (path.empty() ? std::string("document") : path) + ": " + what);
}

std::string at(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}
std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

// ---- reading ---------------------------------------------------------------

const json& member(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.is_object()) parse_fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(at(path, key), "missing");
  return *it;
}

const json& array_of(const json& node, const std::string& path) {
  if (!node.is_array()) parse_fail(path, "expected an array");
  return node;
}

bool is_decimal(const std::string& s) {
  std::size_t i = s.size() > 1 && s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Integer read_integer(const json& node, const std::string& path) {
  if (node.is_number_unsigned()) return Integer(node.get<std::uint64_t>());
  if (node.is_number_integer()) return Integer(node.get<std::int64_t>());
  if (node.is_string()) {
    const auto& s = node.get_ref<const std::string&>();
    if (!is_decimal(s)) parse_fail(path, "string \"" + s + "\" is not a decimal integer");
    return Integer(s);
  }
  parse_fail(path, "expected an integer");
}

std::int64_t read_int64(const json& node, const std::string& path) {
  const Integer v = read_integer(node, path);
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    parse_fail(path, "integer out of range");
  }
  return v.convert_to<std::int64_t>();
}

std::size_t read_index(const json& node, const std::string& path) {
  const Integer v = read_integer(node, path);
  if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) parse_fail(path, "index out of range");
  return v.convert_to<std::size_t>();
}

LatticeVector read_vector(const json& node, const std::string& path) {
  if (!node.is_array() || node.size() != 2) parse_fail(path, "expected [x, y]");
  return {read_integer(node[0], at(path, 0)), read_integer(node[1], at(path, 1))};
}

std::string read_string(const json& node, const std::string& path) {
  if (!node.is_string()) parse_fail(path, "expected a string");
  return node.get<std::string>();
}

MultiFanFamily read_family(const json& root, const std::string& path) {
  const auto& fans = array_of(member(root, path, "fans"), at(path, "fans"));
  std::vector<MultiFan> out;
  for (std::size_t j = 0; j < fans.size(); ++j) {
    const std::string fpath = at(at(path, "fans"), j);
    const auto& vecs = array_of(member(fans[j], fpath, "vectors"), at(fpath, "vectors"));
    std::vector<LatticeVector> raw;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      raw.push_back(read_vector(vecs[i], at(at(fpath, "vectors"), i)));
    }
    try {
      out.push_back(MultiFan::validate(std::move(raw)));
    } catch (const Error& e) {
      throw Error(e.code(), fpath + ": " + e.detail(), e.index());
    }
  }
  return MultiFanFamily(std::move(out));
}

TorusGraph read_graph(const json& root) {
  RawGraph raw;
  const auto& vs = array_of(member(root, "", "vertices"), "vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) raw.vertices.push_back(read_string(vs[i], at("vertices", i)));
  const auto& es = array_of(member(root, "", "edges"), "edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string p = at("edges", i);
    raw.edges.push_back({read_string(member(es[i], p, "from"), at(p, "from")),
                         read_string(member(es[i], p, "to"), at(p, "to")),
                         read_vector(member(es[i], p, "label"), at(p, "label"))});
  }
  return validate_graph(std::move(raw));
}

MoveLog read_log(const json& root) {
  const auto& initial = member(root, "", "initial");
  const auto& final_node = member(root, "", "final");
  for (const auto* node : {&initial, &final_node}) {
    if (node->is_object() && node->contains("format") && (*node)["format"] != kFansFormat) {
      parse_fail(node == &initial ? "initial.format" : "final.format",
                 "expected \"" + std::string(kFansFormat) + "\"");
    }
  }
  MoveLog log{read_family(initial, "initial"), {}, read_family(final_node, "final")};
  const auto& moves = array_of(member(root, "", "moves"), "moves");
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const std::string p = at("moves", i);
    const std::string kind = read_string(member(moves[i], p, "kind"), at(p, "kind"));
    Move m;
    if (kind == "blow_up") {
      m.kind = MoveKind::kBlowUpFan;
    } else if (kind == "blow_down") {
      m.kind = MoveKind::kBlowDownFan;
    } else {
      parse_fail(at(p, "kind"), "expected \"blow_up\" or \"blow_down\", got \"" + kind + "\"");
    }
    m.fan_index = read_index(member(moves[i], p, "fan"), at(p, "fan"));
    m.position = read_index(member(moves[i], p, "position"), at(p, "position"));
    m.vector = read_vector(member(moves[i], p, "vector"), at(p, "vector"));
    log.moves.push_back(std::move(m));
  }
  return log;
}

ChiYReport read_report(const json& root) {
  const auto& a = array_of(member(root, "", "a"), "a");
  if (a.size() != 3) parse_fail("a", "expected [a0, a1, a2]");
  const ChiYReport r = report_from_counts(
      {read_int64(a[0], "a[0]"), read_int64(a[1], "a[1]"), read_int64(a[2], "a[2]")});
  const std::pair<const char*, std::int64_t> derived[] = {{"euler", r.euler},
                                                          {"todd", r.todd},
                                                          {"signature", r.signature},
                                                          {"c1_sq", r.c1_sq},
                                                          {"c2", r.c2}};
  for (const auto& [key, expected] : derived) {
    if (read_int64(member(root, "", key), key) != expected) {
      parse_fail(key, "inconsistent with a; expected " + std::to_string(expected));
    }
  }
  return r;
}

// ---- writing ---------------------------------------------------------------

ojson write_integer(const Integer& v) {
  if (v <= kSafeMax && v >= -kSafeMax) return v.convert_to<std::int64_t>();
  return v.str();
}

ojson write_vector(const LatticeVector& v) {
  return ojson::array({write_integer(v.x), write_integer(v.y)});
}

ojson write_family(const MultiFanFamily& fam, bool with_format) {
  ojson out = ojson::object();
  if (with_format) out["format"] = kFansFormat;
  ojson fans = ojson::array();
  for (const auto& fan : fam.fans()) {
    ojson vecs = ojson::array();
    for (const auto& v : fan.vectors()) vecs.push_back(write_vector(v));
    fans.push_back(ojson{{"vectors", std::move(vecs)}});
  }
  out["fans"] = std::move(fans);
  return out;
}

ojson write_graph(const TorusGraph& g) {
  ojson out = ojson::object();
  out["format"] = kGraphFormat;
  out["vertices"] = g.vertices();
  ojson edges = ojson::array();
  for (const auto& e : g.edges()) {
    ojson edge = ojson::object();
    edge["from"] = e.from;
    edge["to"] = e.to;
    edge["label"] = write_vector(e.label);
    edges.push_back(std::move(edge));
  }
  out["edges"] = std::move(edges);
  return out;
}

ojson write_log(const MoveLog& log) {
  ojson out = ojson::object();
  out["format"] = kLogFormat;
  out["initial"] = write_family(log.initial, false);
  ojson moves = ojson::array();
  for (const auto& m : log.moves) {
    ojson mv = ojson::object();
    mv["kind"] = m.kind == MoveKind::kBlowUpFan ? "blow_up" : "blow_down";
    mv["fan"] = m.fan_index;
    mv["position"] = m.position;
    mv["vector"] = write_vector(m.vector);
    moves.push_back(std::move(mv));
  }
  out["moves"] = std::move(moves);
  out["final"] = write_family(log.final, false);
  return out;
}

ojson write_report(const ChiYReport& r) {
  ojson out = ojson::object();
  out["format"] = kReportFormat;
  out["a"] = ojson::array({r.a0, r.a1, r.a2});
  out["euler"] = r.euler;
  out["todd"] = r.todd;
  out["signature"] = r.signature;
  out["c1_sq"] = r.c1_sq;
  out["c2"] = r.c2;
  return out;
}

}  // namespace

std::string_view Document::format() const {
  return std::visit(
      [](const auto& p) -> std::string_view {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, MultiFanFamily>) return kFansFormat;
        else if constexpr (std::is_same_v<T, TorusGraph>) return kGraphFormat;
        else if constexpr (std::is_same_v<T, MoveLog>) return kLogFormat;
        else return kReportFormat;
      },
      payload);
}

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON at byte ") +
                                            std::to_string(e.byte) + ": " + e.what());
  }
  const std::string format = read_string(member(root, "", "format"), "format");
  if (format == kFansFormat) return {read_family(root, "")};
  if (format == kGraphFormat) return {read_graph(root)};
  if (format == kLogFormat) return {read_log(root)};
  if (format == kReportFormat) return {read_report(root)};
  throw Error(ErrorCode::kUnknownFormat, "unknown format \"" + format + "\"");
}

std::string emit_document(const Document& doc) {
  const ojson out = std::visit(
      [](const auto& p) -> ojson {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, MultiFanFamily>) return write_family(p, true);
        else if constexpr (std::is_same_v<T, TorusGraph>) return write_graph(p);
        else if constexpr (std::is_same_v<T, MoveLog>) return write_log(p);
        else return write_report(p);
      },
      doc.payload);
  return out.dump() + "\n";
}

}  // namespace acx4
