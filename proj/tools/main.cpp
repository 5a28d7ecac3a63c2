#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "webvac/io.hpp"
#include "webvac/render.hpp"
#include "webvac/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw webvac::Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw webvac::Error("cannot write '" + path + "'");
  out << content;
}

std::uint64_t env_budget() {
  const char* env = std::getenv("WEBVAC_BUDGET");
  if (!env) return webvac::kDefaultEnumerationBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    throw webvac::Error("WEBVAC_BUDGET must be a positive integer");
  return v;
}

std::vector<int> parse_id_list(const std::string& s) {
  std::vector<int> ids;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw webvac::Error("empty edge id in '" + s + "'");
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw webvac::Error("bad edge id '" + item + "'");
    ids.push_back(v);
  }
  if (ids.empty()) throw webvac::Error("no edge ids given");
  return ids;
}

void parse_scale(const std::string& s, webvac::RenderSpec& spec) {
  size_t slash = s.find('/');
  auto to_long = [&](const std::string& part) {
    size_t pos = 0;
    long v = std::stol(part, &pos);
    if (pos != part.size() || v <= 0)
      throw webvac::Error("scale must be a positive integer or p/q");
    return v;
  };
  if (slash == std::string::npos) {
    spec.scale_num = to_long(s);
    spec.scale_den = 1;
  } else {
    spec.scale_num = to_long(s.substr(0, slash));
    spec.scale_den = to_long(s.substr(slash + 1));
  }
}

std::vector<std::string> parse_palette(const std::string& s) {
  std::vector<std::string> colors;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) colors.push_back(item);
  if (colors.empty()) throw webvac::Error("palette must list at least one color");
  return colors;
}

int run(int argc, char** argv) {
  CLI::App app{"rectangular tableau evacuation, multicolored matchings and web graphs"};
  app.require_subcommand(1);

  std::string file, out_path, kind, format = "svg", scale, palette, edge_ids;
  int steps = 1;
  bool raw = false;
  std::vector<int> shape_args;
  std::uint64_t budget = 0;

  auto* evacuate_cmd = app.add_subcommand("evacuate", "evacuate a tableau file");
  evacuate_cmd->add_option("file", file)->required();

  auto* promote_cmd = app.add_subcommand("promote", "promote a tableau file");
  promote_cmd->add_option("file", file)->required();
  promote_cmd->add_option("--steps", steps, "number of promotions")
      ->check(CLI::NonNegativeNumber);

  auto* ncm_cmd = app.add_subcommand("ncm", "matching of a tableau file");
  ncm_cmd->add_option("file", file)->required();

  auto* web_cmd = app.add_subcommand("web", "web graph of a tableau file");
  web_cmd->add_option("file", file)->required();
  web_cmd->add_flag("--raw", raw, "emit the web before boundary standardization");

  auto* reflect_cmd = app.add_subcommand("reflect", "reflect a matching or web file");
  reflect_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"ncm", "web"}));
  reflect_cmd->add_option("file", file)->required();

  auto* flip_cmd = app.add_subcommand("flip", "flip edges of a web file");
  flip_cmd->add_option("file", file)->required();
  flip_cmd->add_option("--edges", edge_ids, "comma-separated 1-based edge ids as printed")
      ->required();

  auto* verify_cmd = app.add_subcommand("verify", "machine-check a shape");
  verify_cmd->add_option("--shape", shape_args)->required()->expected(2);
  verify_cmd->add_option("--budget", budget, "enumeration budget");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list every tableau of a shape");
  enumerate_cmd->add_option("--shape", shape_args)->required()->expected(2);

  auto* count_cmd = app.add_subcommand("count", "count tableaux of a shape");
  count_cmd->add_option("--shape", shape_args)->required()->expected(2);

  auto* render_cmd = app.add_subcommand("render", "render a matching or web file");
  render_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"ncm", "web"}));
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"svg", "tikz"}));
  render_cmd->add_option("file", file)->required();
  render_cmd->add_option("-o,--out", out_path)->required();
  render_cmd->add_option("--scale", scale, "positive rational, e.g. 2 or 1/2");
  render_cmd->add_option("--palette", palette, "comma-separated color names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*evacuate_cmd) {
    std::cout << print_tableau(webvac::evacuate(webvac::parse_tableau(read_file(file))));
  } else if (*promote_cmd) {
    webvac::StandardTableau t = webvac::parse_tableau(read_file(file));
    for (int i = 0; i < steps; ++i) t = webvac::promote(t);
    std::cout << print_tableau(t);
  } else if (*ncm_cmd) {
    std::cout << print_ncm(webvac::ncm_from_tableau(webvac::parse_tableau(read_file(file))));
  } else if (*web_cmd) {
    webvac::StandardTableau t = webvac::parse_tableau(read_file(file));
    webvac::WebGraph w = webvac::web_from_ncm(webvac::ncm_from_tableau(t));
    if (!raw) w = webvac::standardize_boundary(w);
    std::cout << print_web(w);
  } else if (*reflect_cmd) {
    if (kind == "ncm")
      std::cout << print_ncm(webvac::reflect_ncm(webvac::parse_ncm(read_file(file))));
    else
      std::cout << print_web(webvac::reflect_web(webvac::parse_web(read_file(file))));
  } else if (*flip_cmd) {
    webvac::WebGraph w = webvac::parse_web(read_file(file));
    std::vector<int> order = webvac::web_edge_print_order(w);
    std::vector<int> indices;
    for (int id : parse_id_list(edge_ids)) {
      if (id < 1 || id > static_cast<int>(order.size()))
        throw webvac::UnknownEdge("edge id " + std::to_string(id) + " out of range 1.." +
                                  std::to_string(order.size()));
      indices.push_back(order[id - 1]);
    }
    std::cout << print_web(webvac::flip_edges(w, indices));
  } else if (*verify_cmd) {
    if (budget == 0) budget = env_budget();
    auto reports = webvac::run_suite({{shape_args[0], shape_args[1]}}, budget);
    std::cout << webvac::print_reports(reports);
    return webvac::all_passed(reports) ? 0 : 1;
  } else if (*enumerate_cmd) {
    webvac::for_each_syt({shape_args[0], shape_args[1]},
                         [](const webvac::StandardTableau& t) {
                           std::cout << webvac::print_tableau(t);
                         },
                         env_budget());
  } else if (*count_cmd) {
    std::cout << webvac::count_syt({shape_args[0], shape_args[1]}) << "\n";
  } else if (*render_cmd) {
    webvac::RenderSpec spec;
    spec.format = format == "svg" ? webvac::RenderSpec::Format::Svg
                                  : webvac::RenderSpec::Format::Tikz;
    if (!scale.empty()) parse_scale(scale, spec);
    if (!palette.empty()) spec.palette = parse_palette(palette);
    std::string text = read_file(file);
    std::string doc = kind == "ncm"
                          ? webvac::render_ncm(webvac::parse_ncm(text), spec)
                          : webvac::render_web(webvac::parse_web(text), spec);
    write_file(out_path, doc);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const webvac::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
