#include "tonegroup/cli.hpp"

#include <CLI11.hpp>

#include "tonegroup/classify.hpp"
#include "tonegroup/core.hpp"
#include "tonegroup/error.hpp"
#include "tonegroup/graph.hpp"
#include "tonegroup/transform.hpp"
#include "tonegroup/verify.hpp"

namespace tonegroup::cli {

namespace {

struct Options {
  std::string word;
  std::string generators;
  std::string chord;
  int tones = 0;
  bool harmonic = false;
  std::string format = "dot";
  bool include_dd = false;
};

int cmd_apply(const Options& o, std::ostream& out) {
  const Word word = parse_word(o.word);
  out << to_string(apply_word(word, parse_chord(o.chord))) << '\n';
  return kOk;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const auto gens = parse_generators(o.generators);
  for (const auto& c : orbit(parse_chord(o.chord), gens)) out << to_string(c) << '\n';
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  out << to_string(classify(parse_chord(o.chord))) << '\n';
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.harmonic && o.tones != 3 && o.tones != 4) {
    err << "error: --harmonic needs --tones 3 or 4\n";
    return kUsage;
  }
  for (const auto& c : enumerate_chords(o.tones)) {
    if (!o.harmonic) {
      out << to_string(c) << '\n';
      continue;
    }
    const auto result = classify(c);
    if (std::holds_alternative<NotHarmonic>(result)) continue;
    out << to_string(c) << ' '
        << (std::holds_alternative<Untabulated>(result) ? std::string("untabulated")
                                                         : to_string(result))
        << '\n';
  }
  return kOk;
}

int cmd_graph(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = build_chord_graph(o.include_dd);
  if (o.format == "dot") {
    out << export_dot(g);
  } else if (o.format == "json") {
    out << export_json(g);
  } else {
    err << "error: unknown format '" << o.format << "', expected dot or json\n";
    return kUsage;
  }
  return kOk;
}

int cmd_verify(std::ostream& out) {
  bool all = true;
  for (const auto& r : run_verification()) {
    out << to_string(r) << '\n';
    all = all && r.passed;
  }
  return all ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group actions on twelve-tone chords: inversion, major-minor duality and "
               "augmented-diminished duality",
               "tonegroup"};
  app.require_subcommand(1);
  Options o;

  auto* apply = app.add_subcommand("apply", "Apply an operator word (left to right) to a chord");
  apply->add_option("word", o.word, "Operators over {i,d,a}, e.g. iid; empty for identity")
      ->required();
  apply->add_option("chord", o.chord, "Chord such as 0,4,7")->required();

  auto* orb = app.add_subcommand("orbit", "List the orbit of a chord under some operators");
  orb->add_option("generators", o.generators, "Comma list over {i,d,a}, e.g. i,d")->required();
  orb->add_option("chord", o.chord, "Chord such as 0,4,7")->required();

  auto* cls = app.add_subcommand("classify", "Label a three- or four-tone chord");
  cls->add_option("chord", o.chord, "Chord such as 0,4,7,11")->required();

  auto* en = app.add_subcommand("enumerate", "List every chord with a given number of tones");
  en->add_option("--tones", o.tones, "Number of tones, 1..12")->required();
  en->add_flag("--harmonic", o.harmonic, "Only harmonic chords, with labels (3 or 4 tones)");

  auto* gr = app.add_subcommand("graph", "Export the seventh-chord graph");
  gr->add_option("--format", o.format, "dot or json");
  gr->add_flag("--include-dd", o.include_dd, "Include the diminished-diminished chord");

  auto* ver = app.add_subcommand("verify", "Run the exhaustive invariant suite");

  // CLI11 parses argv-style vectors back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*apply) return cmd_apply(o, out);
    if (*orb) return cmd_orbit(o, out);
    if (*cls) return cmd_classify(o, out);
    if (*en) return cmd_enumerate(o, out, err);
    if (*gr) return cmd_graph(o, out, err);
    if (*ver) return cmd_verify(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::WrongArity ? kArity : kUsage;
  }
  return kUsage;
}

}  // namespace tonegroup::cli
