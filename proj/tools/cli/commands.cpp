// Copyright 2026 The Anticart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "anticart/error.hpp"
#include "anticart/pregroup.hpp"
#include "anticart/protocols.hpp"
#include "anticart/resource.hpp"
#include "anticart/rewrite.hpp"
#include "anticart/semantics.hpp"
#include "anticart/serialization.hpp"
#include "cli.hpp"

namespace anticart::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Tsv };

struct Globals {
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  Format format = Format::Text;
};

// Signals an exit status after output has been written.
struct Exit {
  int code;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fmt(double x, const char* spec = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::string links_text(const ParseWitness& w) {
  std::string out;
  for (const auto& [i, j] : w.links) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return out;
}

TypeList residual_types(const ParseWitness& w) {
  TypeList out;
  for (int r : w.residual) out.push_back(w.flat[r]);
  return out;
}

std::string flat_text(const ParseWitness& w) {
  std::string out;
  for (size_t k = 0; k + 1 < w.word_start.size(); ++k) {
    if (k > 0) out += " | ";
    TypeList part(w.flat.begin() + w.word_start[k], w.flat.begin() + w.word_start[k + 1]);
    out += to_string(part);
  }
  return out;
}

// Parses against `target`, or when it is empty against s, falling back to
// the first word's first reading.
ParseResult parse_auto(const Lexicon& lex, const std::vector<std::string>& words,
                       const std::string& target) {
  if (!target.empty()) return parse(lex, words, parse_types(target));
  ParseResult r = parse(lex, words, parse_types("s"));
  if (r.witnesses.empty() && !words.empty()) {
    ParseResult fallback = parse(lex, words, lex.entries(words.front()).front().type);
    if (!fallback.witnesses.empty()) return fallback;
  }
  return r;
}

const ParseWitness& pick_witness(const ParseResult& r, int index, std::ostream& err) {
  if (r.witnesses.empty()) {
    err << "NoParse\n";
    throw Exit{kNegative};
  }
  if (index < 0 && r.witnesses.size() > 1) {
    err << "AmbiguousParse: " << r.witnesses.size() << " parses; pass --parse-index\n";
    throw Exit{kAmbiguous};
  }
  if (index >= static_cast<int>(r.witnesses.size())) {
    err << "parse index " << index << " out of range (" << r.witnesses.size() << " parses)\n";
    throw Exit{kInputError};
  }
  return r.witnesses[index < 0 ? 0 : index];
}

Tensor sentence_meaning(const Lexicon& lex, const std::string& sentence, const std::string& target,
                        int parse_index, bool thick, std::ostream& err) {
  auto result = parse_auto(lex, tokenize(sentence), target);
  const ParseWitness& w = pick_witness(result, parse_index, err);
  return evaluate(grammar_diagram(lex, w), lex.model(thick ? Doubling::Thick : Doubling::Thin));
}

int cmd_parse(const Globals& g, const std::string& lexicon, const std::string& sentence,
              const std::string& target, std::ostream& out) {
  const Lexicon lex = Lexicon::from_json(read_file(lexicon));
  const auto result = parse_auto(lex, tokenize(sentence), target);
  if (g.format == Format::Json) {
    json doc = {{"witnesses", json::array()}, {"failures", json::array()}};
    for (const auto& w : result.witnesses) {
      doc["witnesses"].push_back({{"readings", w.entry_choice},
                                  {"flat", to_string(w.flat)},
                                  {"links", w.links},
                                  {"residual", to_string(residual_types(w))}});
    }
    for (const auto& f : result.failures) {
      doc["failures"].push_back({{"readings", f.entry_choice}, {"residual", to_string(f.residual)}});
    }
    out << doc.dump() << "\n";
  } else if (g.format == Format::Tsv) {
    out << "witness\tlinks\tresidual\n";
    for (size_t k = 0; k < result.witnesses.size(); ++k) {
      const auto& w = result.witnesses[k];
      out << k << "\t" << links_text(w) << "\t" << to_string(residual_types(w)) << "\n";
    }
  } else {
    for (size_t k = 0; k < result.witnesses.size(); ++k) {
      const auto& w = result.witnesses[k];
      out << "witness " << k << "\n"
          << "  types:    " << flat_text(w) << "\n"
          << "  links:    " << links_text(w) << "\n"
          << "  residual: " << to_string(residual_types(w)) << "\n";
    }
    if (result.witnesses.empty()) {
      out << "no parse\n";
      for (const auto& f : result.failures) {
        out << "  readings";
        for (int c : f.entry_choice) out << " " << c;
        out << " leave: " << to_string(f.residual) << "\n";
      }
    }
  }
  return result.witnesses.empty() ? kNegative : kOk;
}

int cmd_meaning(const Globals& g, const std::string& lexicon, const std::string& sentence,
                const std::string& target, int parse_index, bool thick, std::ostream& out,
                std::ostream& err) {
  const Lexicon lex = Lexicon::from_json(read_file(lexicon));
  const Tensor t = sentence_meaning(lex, sentence, target, parse_index, thick, err);
  if (g.format == Format::Json) {
    json doc = {{"tensor", json::parse(tensor_to_json(t))}};
    if (thick) doc["entropy"] = entropy(density_matrix(t));
    out << doc.dump() << "\n";
  } else {
    out << tensor_to_json(t) << "\n";
    if (thick) out << "entropy\t" << fmt(entropy(density_matrix(t))) << "\n";
  }
  return kOk;
}

int cmd_similarity(const std::string& lexicon, const std::string& first, const std::string& second,
                   const std::string& target, const std::string& kind, bool thick, std::ostream& out,
                   std::ostream& err) {
  const Lexicon lex = Lexicon::from_json(read_file(lexicon));
  const bool overlap = kind == "overlap";
  const bool doubled = thick || overlap;
  Tensor a = sentence_meaning(lex, first, target, -1, doubled, err);
  Tensor b = sentence_meaning(lex, second, target, -1, doubled, err);
  if (overlap) {
    a = density_matrix(a);
    b = density_matrix(b);
  }
  out << fmt(similarity(a, b, overlap ? SimilarityKind::NormalizedOverlap : SimilarityKind::Cosine))
      << "\n";
  return kOk;
}

int cmd_disambiguate(const Globals& g, const std::string& lexicon, const std::string& word,
                     const std::string& context, const std::string& target, std::ostream& out,
                     std::ostream& err) {
  const Lexicon lex = Lexicon::from_json(read_file(lexicon));
  const double before = entropy(density_matrix(sentence_meaning(lex, word, "", -1, true, err)));
  const double after = entropy(
      density_matrix(sentence_meaning(lex, word + " " + context, target, -1, true, err)));
  if (g.format == Format::Json) {
    out << json{{"before", before}, {"after", after}, {"decreased", after < before}}.dump() << "\n";
  } else {
    out << "before\t" << fmt(before) << "\nafter\t" << fmt(after) << "\n";
  }
  return kOk;
}

int cmd_normalize(const Globals& g, const std::string& path, bool trace, std::ostream& out,
                  std::ostream& err) {
  const Diagram d = diagram_from_json(read_file(path));
  const auto violations = validate(d);
  if (!violations.empty()) {
    for (const auto& v : violations) err << to_string(v.kind) << ": " << v.detail << "\n";
    return kInputError;
  }
  const NormalForm nf = normalize(d);
  if (trace) {
    for (const auto& step : nf.trace) {
      err << step.rule;
      for (int n : step.nodes) err << " " << n;
      err << "\n";
    }
  }
  out << diagram_to_json(nf.diagram, g.format == Format::Text ? 2 : -1) << "\n";
  return kOk;
}

int cmd_teleport(const Globals& g, int dim, int trials, std::ostream& out, std::ostream& err) {
  TeleportOptions options;
  options.seed = g.seed;
  const auto reports = teleportation_reports(dim, trials, options);
  if (g.format == Format::Json) {
    json rows = json::array();
    for (const auto& r : reports) {
      rows.push_back({{"branch", r.branch}, {"fidelity", r.fidelity}, {"probability", r.probability}});
    }
    out << rows.dump() << "\n";
  } else {
    out << "branch\tfidelity\tprobability\n";
    for (const auto& r : reports) {
      out << r.branch << "\t" << fmt(r.fidelity, "%.12f") << "\t" << fmt(r.probability, "%.12f")
          << "\n";
    }
  }
  try {
    verify_teleportation(dim, trials, g.tolerance, options);
  } catch (const VerificationFailure& e) {
    err << e.what() << "\n";
    return kNegative;
  }
  return kOk;
}

int cmd_rate(const Globals& g, const std::string& path, const std::string& a, const std::string& b,
             int n_max, int m_max, size_t max_steps, size_t max_states, std::ostream& out) {
  const auto p = ResourcePresentation::from_json(read_file(path));
  const auto rate = conversion_rate(a, b, p, n_max, {max_steps, max_states}, m_max);
  if (g.format == Format::Json) {
    out << json{{"rate", std::to_string(rate.numerator) + "/" + std::to_string(rate.denominator)},
                {"n", rate.n},
                {"m", rate.m},
                {"n_max", rate.n_max},
                {"m_max", rate.m_max},
                {"max_steps", rate.max_steps},
                {"lower_bound", true}}
               .dump()
        << "\n";
  } else {
    out << rate.to_string() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Process-theory toolkit: string diagrams, pregroup meanings, teleportation, resources",
               "anticart"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::string format = "text";
  app.add_option("--seed", g.seed, "Seed for every random choice");
  app.add_option("--tol", g.tolerance, "Numerical tolerance");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));

  std::string lexicon, sentence, target, first, second, word, context, path, kind = "cosine";
  std::string atom_a, atom_b;
  int parse_index = -1, dim = 2, trials = 25, n_max = 3, m_max = 16;
  size_t max_steps = 16, max_states = 1'000'000;
  bool thick = false, trace = false;

  auto* parse_cmd = app.add_subcommand("parse", "Pregroup-parse a sentence");
  parse_cmd->add_option("lexicon", lexicon)->required();
  parse_cmd->add_option("sentence", sentence)->required();
  parse_cmd->add_option("--target", target, "Target type (default s)");

  auto* meaning_cmd = app.add_subcommand("meaning", "Evaluate a sentence meaning");
  meaning_cmd->add_option("lexicon", lexicon)->required();
  meaning_cmd->add_option("sentence", sentence)->required();
  meaning_cmd->add_option("--target", target);
  meaning_cmd->add_option("--parse-index", parse_index);
  meaning_cmd->add_flag("--thick", thick, "Density-matrix semantics; also prints entropy");

  auto* sim_cmd = app.add_subcommand("similarity", "Compare two sentence meanings");
  sim_cmd->add_option("lexicon", lexicon)->required();
  sim_cmd->add_option("first", first)->required();
  sim_cmd->add_option("second", second)->required();
  sim_cmd->add_option("--target", target);
  sim_cmd->add_option("--kind", kind)->check(CLI::IsMember({"cosine", "overlap"}));
  sim_cmd->add_flag("--thick", thick);

  auto* dis_cmd = app.add_subcommand("disambiguate", "Entropy of a word before and after context");
  dis_cmd->add_option("lexicon", lexicon)->required();
  dis_cmd->add_option("word", word)->required();
  dis_cmd->add_option("context", context)->required();
  dis_cmd->add_option("--target", target);

  auto* norm_cmd = app.add_subcommand("normalize", "Normalize a diagram JSON file");
  norm_cmd->add_option("diagram", path)->required();
  norm_cmd->add_flag("--trace", trace, "Print applied rewrites to stderr");

  auto* tele_cmd = app.add_subcommand("teleport", "Verify post-selected teleportation");
  tele_cmd->add_option("--dim", dim)->check(CLI::Range(2, 16));
  tele_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);

  auto* rate_cmd = app.add_subcommand("rate", "Lower bound on a resource conversion rate");
  rate_cmd->add_option("presentation", path)->required();
  rate_cmd->add_option("from", atom_a)->required();
  rate_cmd->add_option("to", atom_b)->required();
  rate_cmd->add_option("--nmax", n_max)->check(CLI::PositiveNumber);
  rate_cmd->add_option("--mmax", m_max)->check(CLI::PositiveNumber);
  rate_cmd->add_option("--max-steps", max_steps);
  rate_cmd->add_option("--max-states", max_states);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  g.format = format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Text;

  try {
    if (*parse_cmd) return cmd_parse(g, lexicon, sentence, target, out);
    if (*meaning_cmd) return cmd_meaning(g, lexicon, sentence, target, parse_index, thick, out, err);
    if (*sim_cmd) return cmd_similarity(lexicon, first, second, target, kind, thick, out, err);
    if (*dis_cmd) return cmd_disambiguate(g, lexicon, word, context, target, out, err);
    if (*norm_cmd) return cmd_normalize(g, path, trace, out, err);
    if (*tele_cmd) return cmd_teleport(g, dim, trials, out, err);
    if (*rate_cmd) {
      return cmd_rate(g, path, atom_a, atom_b, n_max, m_max, max_steps, max_states, out);
    }
  } catch (const Exit& e) {
    return e.code;
  } catch (const StateExplosion& e) {
    err << e.what() << "\n";
    return kExhausted;
  } catch (const VerificationFailure& e) {
    err << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace anticart::cli
