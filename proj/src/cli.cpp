#include "acx4/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "acx4/classify.hpp"
#include "acx4/document.hpp"
#include "acx4/error.hpp"
#include "acx4/generate.hpp"
#include "acx4/invariants.hpp"
#include "acx4/reduce.hpp"
#include "acx4/render.hpp"

namespace acx4 {

namespace {

using ojson = nlohmann::ordered_json;

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::kParseError, "cannot write " + path);
}

Document load(const std::string& path) {
  try {
    return parse_document(read_text(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail(), e.index());
  }
}

const char* kind_name(const Document& d) {
  if (std::holds_alternative<MoveLog>(d.payload)) return "a move log";
  return "a report";
}

// Graph documents are accepted wherever a family is expected.
MultiFanFamily load_family(const std::string& path) {
  Document d = load(path);
  if (auto* fam = std::get_if<MultiFanFamily>(&d.payload)) return *fam;
  if (auto* g = std::get_if<TorusGraph>(&d.payload)) return graph_to_family(*g);
  throw Error(ErrorCode::kUnknownFormat,
              path + ": expected a fan family or graph, got " + kind_name(d));
}

// Same encoding as the document formats: numbers up to 2^53 - 1, strings beyond.
ojson integer_json(const Integer& v) {
  static const Integer safe = (Integer(1) << 53) - 1;
  if (v <= safe && v >= -safe) return v.convert_to<std::int64_t>();
  return v.str();
}

ojson vector_json(const LatticeVector& v) { return ojson::array({integer_json(v.x), integer_json(v.y)}); }

ojson document_json(const Document& d) { return ojson::parse(emit_document(d)); }

std::string describe(const Document& d) {
  std::ostringstream os;
  os << "valid " << d.format();
  if (auto* fam = std::get_if<MultiFanFamily>(&d.payload)) {
    os << ": " << fam->size() << " fan(s), " << fixed_point_count(*fam) << " fixed point(s)";
  } else if (auto* g = std::get_if<TorusGraph>(&d.payload)) {
    os << ": " << g->vertices().size() << " vertices, " << g->edges().size() << " edges";
  } else if (auto* log = std::get_if<MoveLog>(&d.payload)) {
    os << ": " << log->moves.size() << " move(s)";
    if (replay(log->initial, log->moves) != log->final) {
      throw Error(ErrorCode::kMoveInapplicable, "replaying the moves does not reach \"final\"");
    }
  }
  return os.str();
}

ojson classify_json(const MultiFanFamily& fam) {
  ojson fans = ojson::array();
  for (std::size_t j = 0; j < fam.size(); ++j) {
    const auto& fan = fam[j];
    ojson entry = ojson::object();
    entry["fan"] = j;
    entry["points"] = fan.size();
    entry["winding"] = winding_number(fan);
    entry["minimal"] = is_minimal_fan(fan);
    if (fan.size() == 3) {
      const auto f = recognize_three(fan);
      entry["normal_form"] = {{"shape", "v1,v2,-v1-v2"},
                              {"v1", vector_json(f.v1)},
                              {"v2", vector_json(f.v2)}};
    } else if (fan.size() == 4) {
      const auto f = recognize_four(fan);
      entry["normal_form"] = {{"shape", "v1,v2,-v1+a*v2,-v2"},
                              {"v1", vector_json(f.v1)},
                              {"v2", vector_json(f.v2)},
                              {"a", integer_json(f.a)},
                              {"rotation", f.rotation}};
    } else {
      entry["normal_form"] = nullptr;
    }
    ojson pieces = ojson::array();
    for (const auto& p : plumbing_description(fan)) {
      pieces.push_back({{"euler_number", integer_json(p.euler_number)},
                        {"sphere_weights",
                         ojson::array({vector_json(p.sphere_weights[0]),
                                       vector_json(p.sphere_weights[1])})}});
    }
    entry["plumbing"] = std::move(pieces);
    fans.push_back(std::move(entry));
  }
  return {{"fans", std::move(fans)}};
}

std::vector<MultiFan> canonical_members(const MultiFanFamily& fam, EquivalenceMode mode) {
  std::vector<MultiFan> out;
  for (const auto& f : fam.fans()) out.push_back(canonical_form(f, mode));
  std::sort(out.begin(), out.end(), [](const MultiFan& a, const MultiFan& b) {
    return a.vectors() < b.vectors();
  });
  return out;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"acx4: multi-fans and torus graphs of almost complex torus 4-manifolds",
               "acx4"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::function<void()> action;
  std::string file;
  auto add = [&](const std::string& name, const std::string& help) {
    return app.add_subcommand(name, help);
  };

  // validate
  {
    auto* sub = add("validate", "Parse and validate any acx4 document");
    sub->add_option("file", file, "Input document ('-' for stdin)")->required();
    sub->callback([&] { action = [&] { out << describe(load(file)) << "\n"; }; });
  }
  // convert
  std::string convert_to;
  {
    auto* sub = add("convert", "Convert between fan families and torus graphs");
    sub->add_option("--to", convert_to, "Target kind")
        ->required()
        ->check(CLI::IsMember({"fan", "graph"}));
    sub->add_option("file", file, "Input document")->required();
    sub->callback([&] {
      action = [&] {
        const MultiFanFamily fam = load_family(file);
        out << (convert_to == "fan" ? emit_document({fam}) : emit_document({family_to_graph(fam)}));
      };
    });
  }
  // invariants
  {
    auto* sub = add("invariants", "Print the chi_y report of a family or graph");
    sub->add_option("file", file, "Input document")->required();
    sub->callback([&] { action = [&] { out << emit_document({chi_y_report(load_family(file))}); }; });
  }
  // blowup / blowdown
  std::size_t fan_index = 0;
  std::size_t position = 0;
  std::string vertex;
  std::string edge_from;
  std::string edge_to;
  {
    auto* sub = add("blowup", "Blow up a fan pair or a graph vertex");
    auto* fan_opt = sub->add_option("--fan", fan_index, "Fan index (family input)");
    auto* pos_opt = sub->add_option("--pos", position, "Pair (v_pos, v_pos+1) to blow up");
    auto* vertex_opt = sub->add_option("--vertex", vertex, "Vertex to blow up (graph input)");
    fan_opt->needs(pos_opt);
    pos_opt->needs(fan_opt);
    vertex_opt->excludes(fan_opt)->excludes(pos_opt);
    sub->add_option("file", file, "Input document")->required();
    sub->callback([&, vertex_opt, pos_opt] {
      if (!vertex_opt->count() && !pos_opt->count()) {
        throw CLI::ValidationError("blowup", "give --fan and --pos, or --vertex");
      }
      const bool by_vertex = vertex_opt->count() > 0;
      action = [&, by_vertex] {
        Document d = load(file);
        if (by_vertex) {
          const auto* g = std::get_if<TorusGraph>(&d.payload);
          if (!g) throw Error(ErrorCode::kUnknownFormat, "--vertex needs a graph document");
          out << emit_document({blow_up_graph(*g, vertex)});
          return;
        }
        const MultiFanFamily fam = load_family(file);
        if (fan_index >= fam.size()) {
          throw Error(ErrorCode::kIndexOutOfRange, "fan " + std::to_string(fan_index) +
                                                       " of " + std::to_string(fam.size()));
        }
        std::vector<MultiFan> fans = fam.fans();
        fans[fan_index] = blow_up_fan(fans[fan_index], position);
        out << emit_document({MultiFanFamily(std::move(fans))});
      };
    });
  }
  {
    auto* sub = add("blowdown", "Blow down a fan vector or contract a graph edge");
    auto* fan_opt = sub->add_option("--fan", fan_index, "Fan index (family input)");
    auto* pos_opt = sub->add_option("--pos", position, "Index of the vector to remove");
    auto* from_opt = sub->add_option("--from", edge_from, "Edge endpoint (graph input)");
    auto* to_opt = sub->add_option("--to", edge_to, "Other edge endpoint (graph input)");
    fan_opt->needs(pos_opt);
    pos_opt->needs(fan_opt);
    from_opt->needs(to_opt);
    to_opt->needs(from_opt);
    from_opt->excludes(fan_opt)->excludes(pos_opt);
    sub->add_option("file", file, "Input document")->required();
    sub->callback([&, from_opt, pos_opt] {
      if (!from_opt->count() && !pos_opt->count()) {
        throw CLI::ValidationError("blowdown", "give --fan and --pos, or --from and --to");
      }
      const bool by_edge = from_opt->count() > 0;
      action = [&, by_edge] {
        Document d = load(file);
        if (by_edge) {
          const auto* g = std::get_if<TorusGraph>(&d.payload);
          if (!g) throw Error(ErrorCode::kUnknownFormat, "--from/--to need a graph document");
          out << emit_document({blow_down_graph(*g, edge_from, edge_to)});
          return;
        }
        const MultiFanFamily fam = load_family(file);
        if (fan_index >= fam.size()) {
          throw Error(ErrorCode::kIndexOutOfRange, "fan " + std::to_string(fan_index) +
                                                       " of " + std::to_string(fam.size()));
        }
        std::vector<MultiFan> fans = fam.fans();
        fans[fan_index] = blow_down_fan(fans[fan_index], position);
        out << emit_document({MultiFanFamily(std::move(fans))});
      };
    });
  }
  // minimize
  std::string log_path;
  {
    auto* sub = add("minimize", "Reduce to a family of minimal fans");
    sub->add_option("--log", log_path, "Write the replayable move log here");
    sub->add_option("file", file, "Input document")->required();
    sub->callback([&] {
      action = [&] {
        const auto r = reduce_to_minimal(load_family(file));
        if (!log_path.empty()) write_text(log_path, emit_document({r.log}));
        out << emit_document({r.minimal});
      };
    });
  }
  // normalize-complex
  {
    auto* sub = add("normalize-complex", "Rewrite a Todd-genus-one fan to the CP1xCP1 model");
    sub->add_option("file", file, "Input document with exactly one fan")->required();
    sub->callback([&] {
      action = [&] {
        const MultiFanFamily fam = load_family(file);
        if (fam.size() != 1) {
          throw Error(ErrorCode::kNotToddOne, "expected one fan, got " + std::to_string(fam.size()));
        }
        const auto n = normalize_complex(fam[0]);
        ojson model = ojson::object();
        model["name"] = n.model.name;
        model["a"] = n.model.a;
        model["rotation"] = n.model.rotation;
        model["action"] = n.model.action;
        ojson result = ojson::object();
        result["model"] = std::move(model);
        result["log"] = document_json({n.log});
        out << result.dump() << "\n";
      };
    });
  }
  // classify
  {
    auto* sub = add("classify", "Normal forms and plumbing data per fan");
    sub->add_option("file", file, "Input document")->required();
    sub->callback([&] { action = [&] { out << classify_json(load_family(file)).dump() << "\n"; }; });
  }
  // equiv
  std::string other;
  std::string mode = "rotations";
  {
    auto* sub = add("equiv", "Compare two families up to rotation (and reversal)");
    sub->add_option("a", file, "First document")->required();
    sub->add_option("b", other, "Second document")->required();
    sub->add_option("--mode", mode, "rotations or full (adds reversal)")
        ->check(CLI::IsMember({"rotations", "full"}));
    sub->callback([&] {
      action = [&] {
        const EquivalenceMode m =
            mode == "full" ? EquivalenceMode::kRotationsAndReversal : EquivalenceMode::kRotations;
        const bool same = canonical_members(load_family(file), m) ==
                          canonical_members(load_family(other), m);
        out << (same ? "true" : "false") << "\n";
      };
    });
  }
  // render
  std::string render_format;
  {
    auto* sub = add("render", "Draw a family (svg) or graph (dot, tikz)");
    sub->add_option("--format", render_format, "Output format")
        ->required()
        ->check(CLI::IsMember({"svg", "dot", "tikz"}));
    sub->add_option("file", file, "Input document")->required();
    sub->callback([&] {
      action = [&] {
        Document d = load(file);
        if (render_format == "svg") {
          out << render_fan_svg(load_family(file));
          return;
        }
        const TorusGraph g = std::holds_alternative<TorusGraph>(d.payload)
                                 ? std::get<TorusGraph>(d.payload)
                                 : family_to_graph(load_family(file));
        out << (render_format == "dot" ? render_graph_dot(g) : render_graph_tikz(g));
      };
    });
  }
  // generate
  std::uint64_t seed = 0;
  std::size_t components = 1;
  std::size_t blowups = 0;
  std::vector<int> signs;
  {
    auto* sub = add("generate", "Seeded random family: minimal fans plus blow-ups");
    sub->add_option("--seed", seed, "Random seed")->required();
    sub->add_option("--components", components, "Number of fans")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("--blowups", blowups, "Number of random blow-ups")->required();
    sub->add_option("--signs", signs, "Orientation per fan (1 or -1)")
        ->check(CLI::IsMember({-1, 1}));
    sub->callback([&] {
      action = [&] {
        std::optional<std::vector<int>> s;
        if (!signs.empty()) s = signs;
        out << emit_document({gen_random_family(seed, components, blowups, s)});
      };
    });
  }
  // replay
  {
    auto* sub = add("replay", "Apply a move log to a family");
    sub->add_option("--log", log_path, "Move log document")->required();
    sub->add_option("file", file, "Family to replay from")->required();
    sub->callback([&] {
      action = [&] {
        Document d = load(log_path);
        const auto* log = std::get_if<MoveLog>(&d.payload);
        if (!log) throw Error(ErrorCode::kUnknownFormat, log_path + ": expected a move log");
        const MultiFanFamily start = load_family(file);
        const MultiFanFamily end = replay(start, log->moves);
        if (start == log->initial && end != log->final) {
          throw Error(ErrorCode::kMoveInapplicable, "replay does not reach the logged final state");
        }
        out << emit_document({end});
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    if (action) action();
    return 0;
  } catch (const Error& e) {
    err << "acx4: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "acx4: InternalInconsistency: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace acx4
