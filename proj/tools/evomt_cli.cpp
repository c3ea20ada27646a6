// evomt: Sinhala-to-English translation by dictionary lookup, PPMI sense
// selection and evolutionary word reordering.
//
// Exit codes: 0 success, 1 resource or I/O failure, 2 bad usage or input.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "evomt/error.hpp"
#include "evomt/pipeline.hpp"
#include "evomt/tagset.hpp"
#include "json_output.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitResource = 1;
constexpr int kExitDomain = 2;

// Bad user input that is not a resource problem.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EaOptions {
  std::uint64_t seed = 0;
  std::size_t children = 100;
  std::size_t max_generations = 1000;
  bool no_anchor = false;
  bool trace = false;

  evomt::EaConfig config() const {
    evomt::EaConfig c;
    c.seed = seed;
    c.children_per_generation = children;
    c.max_generations = max_generations;
    c.anchor_trailing_sign = !no_anchor;
    return c;
  }
};

void add_ea_options(CLI::App* cmd, EaOptions& o) {
  cmd->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  cmd->add_option("--children", o.children, "Children per generation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-generations", o.max_generations, "Generation cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--no-anchor", o.no_anchor, "Let a trailing sign move during reordering");
  cmd->add_flag("--trace", o.trace, "Print one line per generation");
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw evomt::IoFailure("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> input_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// Explicit flag, else $EVO_MT_HOME/<name> when present.
std::optional<fs::path> resource_path(const std::string& flag, const char* name) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* home = std::getenv("EVO_MT_HOME")) {
    fs::path candidate = fs::path(home) / name;
    if (fs::exists(candidate)) return candidate;
  }
  return std::nullopt;
}

evomt::ChunkGrammar load_grammar(const std::string& flag) {
  if (auto path = resource_path(flag, "grammar.cfg")) {
    std::ifstream in(*path, std::ios::binary);
    if (!in) throw evomt::IoFailure("cannot open " + path->string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return evomt::parse_grammar(text);
  }
  return evomt::parse_grammar(evomt::default_grammar_source());
}

evomt::TagLexicon load_taglex(const std::string& flag) {
  if (auto path = resource_path(flag, "taglex.tsv")) return evomt::load_tag_lexicon(*path);
  return {};
}

struct ResourceFlags {
  std::string lexicon, model, taglex, grammar;
};

void add_resource_options(CLI::App* cmd, ResourceFlags& r) {
  cmd->add_option("--lexicon", r.lexicon, "Bilingual lexicon (TSV)");
  cmd->add_option("--model", r.model, "PPMI model file");
  cmd->add_option("--taglex", r.taglex, "Tag lexicon (TSV)");
  cmd->add_option("--grammar", r.grammar, "Chunk grammar");
}

evomt::Resources load_resources(const ResourceFlags& flags) {
  evomt::Resources res;
  const auto lexicon = resource_path(flags.lexicon, "lexicon.tsv");
  if (!lexicon) throw evomt::IoFailure("no lexicon: pass --lexicon or set EVO_MT_HOME");
  res.lexicon = evomt::load_lexicon(*lexicon);
  if (auto model = resource_path(flags.model, "model.ppmi")) res.model = evomt::load_model(*model);
  res.taglex = load_taglex(flags.taglex);
  res.grammar = load_grammar(flags.grammar);
  return res;
}

std::vector<std::string> parse_tag_list(const std::string& text) {
  std::vector<std::string> tags;
  std::istringstream in(text);
  std::string tag;
  while (in >> tag) {
    if (!evomt::is_tag(tag)) throw UsageError("unknown POS tag in --target: " + tag);
    tags.push_back(tag);
  }
  return tags;
}

std::vector<evomt::TaggedToken> parse_tagged_line(const std::string& line) {
  try {
    return evomt::parse_tagged_text(line);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_build_model(const std::string& corpus_path, const std::string& out_path, std::size_t window) {
  std::vector<std::string> sentences;
  for (const auto& line : input_lines(read_input(corpus_path))) {
    for (auto& s : evomt::split_sentences(line)) sentences.push_back(std::move(s));
  }
  evomt::BuildOptions options;
  if (window > 0) options.window = window;
  const auto model = evomt::build_model(sentences, options);
  evomt::save_model(model, out_path);
  std::cout << "tokens " << model.total_tokens << "\n"
            << "pairs " << model.total_pairs << "\n";
  return kExitOk;
}

int cmd_translate(const ResourceFlags& flags, const EaOptions& ea, const std::string& in_path,
                  const std::string& format, std::size_t jobs) {
  const auto resources = load_resources(flags);
  const auto results = evomt::translate_text(resources, ea.config(), read_input(in_path), jobs);
  for (const auto& r : results) {
    if (format == "json-lines") {
      std::cout << evomt::cli::to_json(r).dump(-1, ' ', false) << "\n";
      continue;
    }
    if (ea.trace && r.report) std::cout << evomt::format_trace(*r.report);
    std::cout << r.rendered << "\n";
  }
  return kExitOk;
}

int cmd_tag(const std::string& taglex_flag, const std::string& in_path) {
  const auto taglex = load_taglex(taglex_flag);
  for (const auto& line : input_lines(read_input(in_path))) {
    std::vector<evomt::TagRequest> requests;
    for (auto& t : evomt::tokenize(line)) requests.push_back({std::move(t.text), std::nullopt});
    std::cout << evomt::format_tagged(evomt::tag_tokens(taglex, requests)) << "\n";
  }
  return kExitOk;
}

int cmd_chunk(const std::string& grammar_flag, const std::string& in_path) {
  const auto grammar = load_grammar(grammar_flag);
  bool first = true;
  for (const auto& line : input_lines(read_input(in_path))) {
    const auto tagged = parse_tagged_line(line);
    if (tagged.empty()) continue;
    if (!first) std::cout << "\n";
    first = false;
    for (const auto& item : evomt::chunk(grammar, tagged).items) {
      std::cout << evomt::format_chunk(item) << "\n";
    }
  }
  return kExitOk;
}

int cmd_evolve(const std::string& grammar_flag, const EaOptions& ea, const std::string& target_text,
               const std::string& in_path) {
  std::optional<evomt::ChunkGrammar> grammar;
  std::optional<std::vector<std::string>> explicit_target;
  if (!target_text.empty()) {
    explicit_target = parse_tag_list(target_text);
  } else {
    grammar = load_grammar(grammar_flag);
  }

  bool first = true;
  for (const auto& line : input_lines(read_input(in_path))) {
    const auto tagged = parse_tagged_line(line);
    if (tagged.empty()) continue;
    if (!first) std::cout << "\n";
    first = false;

    std::vector<std::string> target;
    if (explicit_target) {
      target = *explicit_target;
    } else {
      const auto derived = evomt::derive_target(tagged, *grammar, !ea.no_anchor);
      if (derived.status == evomt::TargetStatus::NoVerbFound) {
        std::cout << "no-verb: order unchanged\n" << evomt::format_tagged(tagged) << "\n";
        continue;
      }
      target = derived.tags;
    }

    const auto report = evomt::evolve(tagged, target, ea.config());
    if (ea.trace) std::cout << evomt::format_trace(report);
    std::cout << "fitness " << report.best.fitness.value_or(0) << " generations " << report.generations_run
              << " terminated " << evomt::to_string(report.terminated_by) << "\n";
    std::cout << "order";
    for (auto idx : report.best.order) std::cout << ' ' << idx;
    std::cout << "\n"
              << evomt::format_tagged(evomt::apply_order(std::span<const evomt::TaggedToken>(tagged),
                                                         report.best.order))
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sinhala-to-English translation with evolutionary reordering", "evomt"};
  app.require_subcommand(1);

  std::string corpus_path, out_path;
  std::size_t window = 0;
  auto* build = app.add_subcommand("build-model", "Build a PPMI co-occurrence model from a corpus");
  build->add_option("--corpus", corpus_path, "Corpus text, sentences per line")->required();
  build->add_option("--out", out_path, "Model file to write")->required();
  build->add_option("--window", window, "Co-occurrence window in words (0 = whole sentence)");

  ResourceFlags resources;
  EaOptions ea;
  std::string in_path, format = "text";
  std::size_t jobs = 1;
  auto* translate = app.add_subcommand("translate", "Translate Sinhala text to English");
  add_resource_options(translate, resources);
  add_ea_options(translate, ea);
  translate->add_option("--in", in_path, "Input file (default stdin)");
  translate->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();
  translate->add_option("--jobs", jobs, "Sentence-level worker threads")->check(CLI::PositiveNumber);

  std::string taglex_flag;
  auto* tag = app.add_subcommand("tag", "POS-tag English text as word/TAG");
  tag->add_option("--taglex", taglex_flag, "Tag lexicon (TSV)");
  tag->add_option("--in", in_path, "Input file (default stdin)");

  std::string grammar_flag;
  auto* chunk = app.add_subcommand("chunk", "Chunk word/TAG lines with the grammar");
  chunk->add_option("--grammar", grammar_flag, "Chunk grammar");
  chunk->add_option("--in", in_path, "Input file (default stdin)");

  std::string target_text;
  auto* evolve = app.add_subcommand("evolve", "Reorder word/TAG lines toward a target tag sequence");
  evolve->add_option("--grammar", grammar_flag, "Chunk grammar used to derive the target");
  evolve->add_option("--target", target_text, "Explicit target tags, space separated");
  evolve->add_option("--in", in_path, "Input file (default stdin)");
  add_ea_options(evolve, ea);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (*build) return cmd_build_model(corpus_path, out_path, window);
    if (*translate) return cmd_translate(resources, ea, in_path, format, jobs);
    if (*tag) return cmd_tag(taglex_flag, in_path);
    if (*chunk) return cmd_chunk(grammar_flag, in_path);
    if (*evolve) return cmd_evolve(grammar_flag, ea, target_text, in_path);
  } catch (const evomt::EmptyCorpus& e) {
    std::cerr << "evomt: " << e.what() << "\n";
    return kExitDomain;
  } catch (const UsageError& e) {
    std::cerr << "evomt: " << e.what() << "\n";
    return kExitDomain;
  } catch (const evomt::Error& e) {
    std::cerr << "evomt: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "evomt: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitOk;
}
