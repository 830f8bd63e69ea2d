#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "framekit/framekit.hpp"

namespace fs = std::filesystem;
using namespace framekit;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path workspace() {
  const char* env = std::getenv("FRAMEKIT_WORKSPACE");
  return env && *env ? fs::path(env) : fs::path("framekit_workspace");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Inline JSON if it starts with '{', "-" for stdin, otherwise a file path.
Json read_json_arg(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json(arg);
  if (arg == "-") return parse_json({std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()});
  return parse_json(read_file(arg));
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file || !(file << text)) throw IoError("cannot write " + out);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_id(const std::string& id) {
  if (id.empty() || id.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.-") != std::string::npos ||
      id.front() == '.')
    throw Error(ErrorCode::InvalidParams, "frame id '" + id + "' may only use letters, digits, '_', '.', '-'");
}

FiniteLattice load_frame(const std::string& id) {
  require_id(id);
  auto path = workspace() / (id + ".json");
  if (fs::exists(path)) return frame_from_json(parse_json(read_file(path)));
  if (auto builtin = builtin_frame(id)) return *builtin;
  throw Error(ErrorCode::UnknownFrame, "no frame '" + id + "' in " + workspace().string() + " or the corpus");
}

std::string default_id(const Json& input, const FiniteLattice& lattice) {
  if (input.contains("kind")) {
    auto kind = input.at("kind").get<std::string>();
    if ((kind == "boolean" || kind == "chain") && input.contains("n")) return kind + input.at("n").dump();
  }
  std::uint64_t h = 1469598103934665603ull;
  for (char c : frame_to_json(lattice).dump()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "frame-" << std::hex << (h & 0xffffffffull);
  return out.str();
}

struct Globals {
  std::string frame;
  std::uint64_t seed = 42;
  std::size_t cap_ideals = Caps{}.ideals;
  std::size_t cap_lattice = Caps{}.lattice;
  std::string out;
  std::string format;

  Caps caps() const { return {cap_ideals, cap_lattice}; }
  FiniteLattice require_frame() const {
    if (frame.empty()) throw Error(ErrorCode::InvalidParams, "--frame is required");
    return load_frame(frame);
  }
};

int cmd_build(const Globals& g, const std::string& input) {
  Json doc = read_json_arg(input);
  FiniteLattice lattice = frame_from_json(doc);
  std::string id = g.frame.empty() ? default_id(doc, lattice) : g.frame;
  require_id(id);
  Json stored = frame_to_json(lattice);
  stored["distributive"] = lattice.is_distributive();
  fs::create_directories(workspace());
  emit(dump(stored), (workspace() / (id + ".json")).string());

  Json result = {{"id", id}, {"distributive", lattice.is_distributive()}};
  if (lattice.is_distributive()) {
    result["profile"] = profile_to_json(classify(lattice));
  } else {
    std::cerr << "warning: '" << id << "' is not distributive; frame operations will refuse it\n";
    result["profile"] = nullptr;
  }
  emit(dump(result), g.out);
  return kOk;
}

int cmd_analyze(const Globals& g, std::vector<std::string> targets) {
  const auto lattice = g.require_frame();
  lattice.require_distributive("analyze");
  if (targets.empty()) targets = {"bl", "points", "beta0", "beta", "cs", "lemma_c1"};
  Json report = {{"frame", g.frame}, {"size", lattice.size()}, {"profile", profile_to_json(classify(lattice))}};
  for (const auto& t : targets) {
    if (t == "bl") {
      report["BL"] = names_json(lattice, complemented_elements(lattice));
    } else if (t == "points") {
      report["points"] = names_json(lattice, prime_elements(lattice));
    } else if (t == "beta0") {
      report["beta0"] = compactification_json(banaschewski(lattice, g.caps()));
    } else if (t == "beta") {
      report["beta"] = compactification_json(stone_cech_finite(lattice, g.caps()));
    } else if (t == "cs") {
      auto cs = cs_comparison(lattice, g.caps());
      report["cs"] = {{"completelyRegular", cs.completely_regular},
                      {"outOfHypothesis", !cs.completely_regular},
                      {"stronglyZeroDimensional", cs.strongly_zero_dimensional},
                      {"frameHomomorphism", cs.is_frame_homomorphism},
                      {"isomorphism", cs.is_isomorphism}};
    } else if (t == "lemma_c1") {
      report["lemmaC1"] = lemma_c1_json(check_lemma_c1(lattice, g.caps()));
    } else {
      throw Error(ErrorCode::InvalidParams, "unknown target '" + t + "' (bl, points, beta0, beta, cs, lemma_c1)");
    }
  }
  emit(dump(report), g.out);
  return kOk;
}

StepFunction load_step(const Json& j, FramePtr& frame, std::string& frame_id) {
  // an explicit 'frame' key wins; otherwise --frame supplies it
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "step function must be an object");
  std::string id = frame_id;
  if (j.contains("frame")) {
    if (!j.at("frame").is_string()) throw Error(ErrorCode::ParseError, "'frame' must be a string");
    id = j.at("frame").get<std::string>();
  }
  if (id.empty()) throw Error(ErrorCode::ParseError, "step function needs a 'frame' (or pass --frame)");
  if (!frame) {
    frame = share(load_frame(id));
    frame_id = id;
  } else if (id != frame_id) {
    throw Error(ErrorCode::FrameMismatch, "step functions on '" + frame_id + "' and '" + id + "'");
  }
  return step_from_json(j, frame);
}

std::optional<Rational> bound(const std::string& text) {
  if (text.empty() || text == "inf" || text == "-inf" || text == "+inf") return std::nullopt;
  return parse_rational(text);
}

int cmd_ring(const Globals& g, const std::string& op, const std::vector<std::string>& args, const std::string& lower,
             const std::string& upper) {
  const std::size_t arity = (op == "add" || op == "mul" || op == "factor") ? 2 : 1;
  if (args.size() != arity)
    throw Error(ErrorCode::InvalidParams, "ring " + op + " takes " + std::to_string(arity) + " step function(s)");
  FramePtr frame;
  std::string id = g.frame;
  if (!id.empty()) frame = share(load_frame(id));
  std::vector<StepFunction> fs;
  for (const auto& a : args) fs.push_back(load_step(read_json_arg(a), frame, id));
  const auto& lat = *frame;
  Json out;
  if (op == "add") {
    out = step_to_json(fs[0] + fs[1], id);
  } else if (op == "mul") {
    out = step_to_json(fs[0] * fs[1], id);
  } else if (op == "factor") {
    out = step_to_json(factor_cb(fs[0], fs[1]), id);
  } else if (op == "coz") {
    out = {{"coz", lat.name(coz(fs[0]))}};
  } else if (op == "image") {
    Json values = Json::array();
    for (const auto& v : image(fs[0])) values.push_back(format_rational(v));
    out = {{"image", std::move(values)}};
  } else if (op == "eval") {
    RationalInterval interval{bound(lower), bound(upper)};
    if (interval.lower && interval.upper && !(*interval.lower < *interval.upper))
      throw Error(ErrorCode::InvalidParams, "empty interval");
    out = {{"element", lat.name(eval_interval(fs[0], interval))}};
  } else if (op == "clean") {
    auto d = clean_decompose(fs[0]);
    out = {{"witness", format_rational(d.witness)},
           {"cut", lat.name(d.cut)},
           {"idempotent", step_to_json(d.idempotent, id)},
           {"unit", step_to_json(d.unit, id)},
           {"formulaAgrees", d.formula_agrees}};
  }
  emit(dump(out), g.out);
  return kOk;
}

int cmd_spectrum(const Globals& g) {
  auto ctx = CozeroContext::make(share(g.require_frame()), g.caps());
  auto s = spectrum(ctx);
  if (g.format == "dot")
    emit(spectrum_dot(s, ctx.upper()), g.out);
  else if (g.format.empty() || g.format == "json")
    emit(dump(spectrum_json(s, ctx.upper())), g.out);
  else
    throw Error(ErrorCode::UnsupportedFormat, "format '" + g.format + "' (dot, json)");
  bool ok = s.theorem_b() && s.opens_zero_dimensional && s.lemma_q1 && s.lemma_q2 && s.lemma_q3 && s.lemma_q4;
  return ok ? kOk : kCheckFailed;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& frames) {
  SuiteOptions options;
  options.seed = g.seed;
  options.caps = g.caps();
  options.frames = frames;
  if (!g.frame.empty()) options.frames.push_back(g.frame);
  auto report = run_suite(options);
  const std::string json = dump(report_json(report));
  if (g.format == "json") {
    emit(json, g.out);
  } else if (g.format.empty() || g.format == "table") {
    std::cout << report_table(report);
    if (!g.out.empty()) emit(json, g.out);
  } else {
    throw Error(ErrorCode::UnsupportedFormat, "format '" + g.format + "' (table, json)");
  }
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_export(const Globals& g, const std::string& object, bool annotate) {
  const auto lattice = g.require_frame();
  const std::string format = g.format.empty() ? "dot" : g.format;
  if (format != "dot" && format != "json") throw Error(ErrorCode::UnsupportedFormat, "format '" + format + "' (dot, json)");
  std::string text;
  if (object == "frame") {
    text = format == "dot" ? hasse_dot(lattice, g.frame) : dump(frame_to_json(lattice));
  } else if (object == "beta0" || object == "beta") {
    auto c = object == "beta0" ? banaschewski(lattice, g.caps()) : stone_cech_finite(lattice, g.caps());
    text = format == "dot" ? compactification_dot(c, object, annotate) : dump(compactification_json(c));
  } else if (object == "spectrum") {
    auto ctx = CozeroContext::make(share(lattice), g.caps());
    auto s = spectrum(ctx);
    text = format == "dot" ? spectrum_dot(s, ctx.upper()) : dump(spectrum_json(s, ctx.upper()));
  } else {
    throw Error(ErrorCode::InvalidParams, "unknown object '" + object + "' (frame, beta0, beta, spectrum)");
  }
  emit(text, g.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"framekit: finite frames, their compactifications, step-function rings and maximal spectra"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--frame", g.frame, "frame id (workspace file or built-in)");
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--cap-ideals", g.cap_ideals, "largest lattice whose ideals are enumerated");
  app.add_option("--cap-lattice", g.cap_lattice, "largest lattice for table-based constructions");
  app.add_option("--out", g.out, "write output to this file");
  app.add_option("--format", g.format, "output format");

  std::string input;
  auto* build = app.add_subcommand("build", "store a frame in the workspace and print its profile");
  build->add_option("input", input, "frame JSON: inline, a file path, or - for stdin")->required();

  std::vector<std::string> targets;
  auto* analyze = app.add_subcommand("analyze", "report BL, points, compactifications and checks for a frame");
  analyze->add_option("--target", targets, "bl, points, beta0, beta, cs, lemma_c1 (default: all)");

  std::string op, lower, upper;
  std::vector<std::string> operands;
  auto* ring = app.add_subcommand("ring", "step-function calculator");
  ring->add_option("op", op, "eval, add, mul, coz, image, clean, factor")
      ->required()
      ->check(CLI::IsMember({"eval", "add", "mul", "coz", "image", "clean", "factor"}));
  ring->add_option("operands", operands, "step-function JSON: inline, file, or -");
  ring->add_option("--lower", lower, "eval: open lower bound (omit for -inf)");
  ring->add_option("--upper", upper, "eval: open upper bound (omit for +inf)");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "maximal-ideal spectrum of a frame");

  std::vector<std::string> frames;
  auto* verify = app.add_subcommand("verify", "run the theorem suite over the bundled corpus");
  verify->add_option("frames", frames, "restrict to these corpus frames");

  std::string object = "frame";
  bool annotate = false;
  auto* exp = app.add_subcommand("export", "write a frame or derived object as DOT or JSON");
  exp->add_option("--object", object, "frame, beta0, beta, spectrum");
  exp->add_flag("--annotate", annotate, "draw join and adjoint arrows for beta0/beta");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(g, input);
    if (*analyze) return cmd_analyze(g, targets);
    if (*ring) return cmd_ring(g, op, operands, lower, upper);
    if (*spectrum_cmd) return cmd_spectrum(g);
    if (*verify) return cmd_verify(g, frames);
    if (*exp) return cmd_export(g, object, annotate);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
