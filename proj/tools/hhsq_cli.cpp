/*
 * Copyright 2026 the hhsq authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "hhsq/verify.hpp"
#include "hhsq/version.hpp"

using json = nlohmann::json;
using namespace hhsq;

namespace {

constexpr long long kDefaultSeed = 20260819;

struct Request {
  std::string ring_text = "Z";
  std::string format = "text";
  long long seed = kDefaultSeed;
  int r = 1;
  int max_q = 3;
  int max_m = 4;
  long long budget = 20000;
  std::string word_text;
  bool explain = false;
};

json meta_json(const Request& req, const GroundRing& ring, int r) {
  json meta;
  meta["r"] = r;
  meta["ring"] = ring.name();
  meta["ring_families"] = kRingKinds;
  meta["seed"] = req.seed;
  meta["version"] = kVersion;
  return meta;
}

json module_json(const ModuleDescriptor& m) {
  json out;
  out["free_rank"] = m.free_rank;
  json torsion = json::array();
  for (const Int& d : m.torsion) torsion.push_back(d.str());
  out["torsion"] = torsion;
  out["pretty"] = m.str();
  return out;
}

std::string bracketed(const CyclicWord& w) {
  return "[" + word_str(w.representative) + "]";
}

std::string pass_str(bool ok) { return ok ? "PASS" : "FAIL"; }

void emit(const Request& req, const json& doc, const std::string& text) {
  if (req.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

int run_compute(const Request& req) {
  GroundRing ring = parse_ring(req.ring_text);
  json results = json::array();
  std::ostringstream text;
  text << "ring " << ring.name() << ", r = " << req.r << ", engine "
       << kVersion << "\n";
  for (int q = 0; q <= req.max_q; ++q) {
    AggregateHomology agg =
        aggregate_homology(req.r, ring, q, ExecutionMode::OpenMp);
    json entry;
    entry["degree"] = q;
    entry["module"] = module_json(agg.module);
    json parts = json::array();
    for (const auto& part : agg.parts) {
      json p;
      p["word"] = word_str(part.word.representative);
      p["module"] = module_json(part.homology.module);
      parts.push_back(p);
    }
    entry["parts"] = parts;
    results.push_back(entry);
    text << "q = " << q << ": " << agg.module.str() << "\n";
    for (const auto& part : agg.parts)
      text << "    " << bracketed(part.word) << " -> "
           << part.homology.module.str() << "\n";
  }
  json doc;
  doc["command"] = "compute";
  doc["meta"] = meta_json(req, ring, req.r);
  doc["results"] = results;
  emit(req, doc, text.str());
  return 0;
}

int run_word(const Request& req, int requested_r) {
  GroundRing ring = parse_ring(req.ring_text);
  int r = requested_r;
  if (r <= 0) {
    // Default alphabet: the largest letter that occurs (1 for the empty word).
    Word probe = parse_word(req.word_text, 1 << 20);
    r = 1;
    for (int a : probe) r = std::max(r, a);
  }
  CyclicWord w = canonicalize(parse_word(req.word_text, r));
  const int m = w.length();

  WordCheck check = check_word(w, ring);
  auto expected = predict(w, ring);
  SummandComplex sc = build_summand_complex(w, ring);

  json degrees = json::array();
  std::ostringstream text;
  text << "word " << bracketed(w) << " over " << ring.name() << " (r = " << r
       << ")\n";
  text << "canonical " << bracketed(w) << ", length " << m << ", period "
       << w.period << ", case " << case_number(check.kind) << "\n";
  for (int q = 0; q <= m + 1; ++q) {
    ModuleDescriptor predicted = predicted_at(expected, q);
    ModuleDescriptor computed = homology_at(sc.complex, q).module;
    json entry;
    entry["degree"] = q;
    entry["predicted"] = module_json(predicted);
    entry["computed"] = module_json(computed);
    entry["match"] = predicted == computed;
    degrees.push_back(entry);
    text << "degree " << q << ": predicted " << predicted.str()
         << ", computed " << computed.str() << ", "
         << (predicted == computed ? "match" : "MISMATCH") << "\n";
  }
  text << "checks: modules " << pass_str(check.modules_match)
       << ", lower witness " << pass_str(check.low_witness_ok)
       << ", upper witness " << pass_str(check.high_witness_ok)
       << ", rotation model " << pass_str(check.comparison_ok) << "\n";

  json explain;
  if (req.explain) {
    Chain low = generator_low(w, ring);
    explain["lower_witness"] = low.str();
    text << "lower witness (degree " << (m == 0 ? 0 : m - 1)
         << "): " << low.str() << "\n";
    if (m > 0) {
      RingElement a = ring.one();
      bool have = true;
      if (check.kind == HomologyCase::TorsionPair) {
        CyclicSummand tt = two_torsion(ring);
        if (tt.generator)
          a = *tt.generator;
        else
          have = false;
      }
      if (have) {
        Chain high = generator_high(w, ring, a);
        explain["upper_witness"] = high.str();
        text << "upper witness (degree " << m << "): " << high.str() << "\n";
      } else {
        explain["upper_witness"] = nullptr;
        text << "upper witness (degree " << m
             << "): none (no 2-torsion in " << ring.name() << ")\n";
      }
    }
  }

  text << pass_str(check.ok()) << "\n";

  json doc;
  doc["command"] = "word";
  doc["meta"] = meta_json(req, ring, r);
  json results;
  results["word"] = word_str(w.representative);
  results["length"] = m;
  results["period"] = w.period;
  results["case"] = case_number(check.kind);
  results["degrees"] = degrees;
  json checks;
  checks["modules_match"] = check.modules_match;
  checks["low_witness"] = check.low_witness_ok;
  checks["high_witness"] = check.high_witness_ok;
  checks["comparison"] = check.comparison_ok;
  results["checks"] = checks;
  if (req.explain) results["explain"] = explain;
  results["pass"] = check.ok();
  doc["results"] = results;
  emit(req, doc, text.str());
  return check.ok() ? 0 : 1;
}

int run_necklaces(const Request& req) {
  json results = json::array();
  std::ostringstream text;
  for (int m = 0; m <= req.max_m; ++m) {
    auto words = enumerate_necklaces(req.r, m);
    json entry;
    entry["length"] = m;
    entry["count"] = necklace_count(req.r, m);
    json list = json::array();
    for (const auto& w : words) list.push_back(word_str(w.representative));
    entry["words"] = list;
    results.push_back(entry);
    text << "length " << m << ": " << words.size() << " necklace"
         << (words.size() == 1 ? "" : "s") << "\n";
    for (const auto& w : words) text << "    " << bracketed(w) << "\n";
  }
  json doc;
  doc["command"] = "necklaces";
  GroundRing ring = parse_ring(req.ring_text);
  doc["meta"] = meta_json(req, ring, req.r);
  doc["results"] = results;
  emit(req, doc, text.str());
  return 0;
}

int run_verify_lemma(const Request& req) {
  GroundRing ring = parse_ring(req.ring_text);
  SweepResult sweep =
      sweep_words(req.r, req.max_m, ring, ExecutionMode::OpenMp);
  json checks = json::array();
  std::ostringstream text;
  for (const auto& check : sweep.checks) {
    json entry;
    entry["word"] = word_str(check.word.representative);
    entry["case"] = case_number(check.kind);
    entry["modules_match"] = check.modules_match;
    entry["low_witness"] = check.low_witness_ok;
    entry["high_witness"] = check.high_witness_ok;
    entry["comparison"] = check.comparison_ok;
    entry["pass"] = check.ok();
    checks.push_back(entry);
    text << pass_str(check.ok()) << " " << bracketed(check.word) << " case "
         << case_number(check.kind) << "\n";
  }
  text << "checked " << sweep.checks.size() << " necklaces over "
       << ring.name() << ": " << sweep.failures << " failure"
       << (sweep.failures == 1 ? "" : "s") << "\n";
  json doc;
  doc["command"] = "verify-lemma";
  doc["meta"] = meta_json(req, ring, req.r);
  json results;
  results["max_m"] = req.max_m;
  results["checks"] = checks;
  results["failures"] = sweep.failures;
  results["pass"] = sweep.ok();
  doc["results"] = results;
  emit(req, doc, text.str());
  return sweep.ok() ? 0 : 1;
}

int run_verify_theorem(const Request& req) {
  GroundRing ring = parse_ring(req.ring_text);
  std::vector<SymbolReport> reports = sweep_symbols(req.r, ring);
  bool all_ok = true;
  json results = json::array();
  std::ostringstream text;
  for (const auto& rep : reports) {
    all_ok = all_ok && rep.ok();
    json entry;
    entry["q"] = rep.q;
    entry["word"] = word_str(rep.word.representative);
    entry["symbol_is_cycle"] = rep.symbol_is_cycle;
    entry["matches_formula"] = rep.matches_formula;
    entry["cycle_in_slice"] = rep.cycle_in_slice;
    entry["matches_generator_class"] = rep.matches_generator_class;
    entry["nontrivial"] = rep.nontrivial;
    entry["generates"] = rep.generates;
    entry["module"] = module_json(rep.module);
    entry["pass"] = rep.ok();
    text << pass_str(rep.ok()) << " q = " << rep.q << " at "
         << bracketed(rep.word) << ": class generates " << rep.module.str()
         << "\n";
    if (req.explain) {
      Chain projected = project_symbol(rep.q, req.r, ring);
      Chain formula = projected_symbol_formula(rep.q, ring);
      entry["projected"] = projected.str();
      entry["formula"] = formula.str();
      text << "    projected component: " << projected.str() << "\n";
      text << "    permutation formula: " << formula.str() << "\n";
    }
    results.push_back(entry);
  }
  text << (all_ok ? "PASS" : "FAIL") << " for q = 1.." << req.r << " over "
       << ring.name() << "\n";
  json doc;
  doc["command"] = "verify-theorem";
  doc["meta"] = meta_json(req, ring, req.r);
  doc["results"] = results;
  emit(req, doc, text.str());
  return all_ok ? 0 : 1;
}

int run_verify_exactness(const Request& req, int max_ell) {
  GroundRing ring = parse_ring(req.ring_text);
  bool all_ok = true;
  json results = json::array();
  std::ostringstream text;
  for (int ell = 1; ell <= max_ell; ell += 2) {
    ExactnessReport rep = verify_exact_sequence(ell, ring);
    all_ok = all_ok && rep.ok();
    json entry;
    entry["ell"] = ell;
    entry["injects"] = rep.injects;
    entry["exact_at_first"] = rep.exact_at_first;
    entry["exact_at_second"] = rep.exact_at_second;
    entry["surjects"] = rep.surjects;
    entry["composite_is_ell"] = rep.composite_is_ell;
    entry["pass"] = rep.ok();
    results.push_back(entry);
    text << pass_str(rep.ok()) << " cyclic order " << ell << "\n";
  }
  text << (all_ok ? "PASS" : "FAIL") << " for odd orders up to " << max_ell
       << " over " << ring.name() << "\n";
  json doc;
  doc["command"] = "verify-exactness";
  doc["meta"] = meta_json(req, ring, req.r);
  doc["results"] = results;
  emit(req, doc, text.str());
  return all_ok ? 0 : 1;
}

int run_oracle(const Request& req) {
  GroundRing ring = parse_ring(req.ring_text);
  std::vector<OracleCheck> checks = oracle_compare(
      req.r, ring, req.max_q, req.budget, ExecutionMode::OpenMp);
  bool all_ok = true;
  json results = json::array();
  std::ostringstream text;
  for (const auto& check : checks) {
    all_ok = all_ok && check.match;
    json entry;
    entry["degree"] = check.degree;
    entry["full"] = module_json(check.from_full);
    entry["slices"] = module_json(check.from_slices);
    entry["match"] = check.match;
    results.push_back(entry);
    text << pass_str(check.match) << " q = " << check.degree
         << ": brute force " << check.from_full.str() << ", slices "
         << check.from_slices.str() << "\n";
  }
  text << (all_ok ? "PASS" : "FAIL") << " through degree " << req.max_q
       << " over " << ring.name() << "\n";
  json doc;
  doc["command"] = "oracle";
  doc["meta"] = meta_json(req, ring, req.r);
  doc["results"] = results;
  emit(req, doc, text.str());
  return all_ok ? 0 : 1;
}

void add_common(CLI::App* sub, Request& req) {
  sub->add_option("--ring", req.ring_text,
                  "Coefficient ring: Z, Q, F<p>, or Z/<n>");
  sub->add_option("--format", req.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--seed", req.seed,
                  "Seed echoed into report metadata (randomized property "
                  "suites live in the test binaries)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild homology of square-zero algebras, with "
               "verified closed forms"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Request req;
  int word_r = 0;   // 0 means "largest letter in the word"
  int max_ell = 7;  // odd cyclic orders 1, 3, 5, 7 by default

  CLI::App* compute =
      app.add_subcommand("compute", "Homology per degree, one line per "
                                    "contributing necklace");
  compute->add_option("--r", req.r, "Number of algebra generators")
      ->check(CLI::PositiveNumber);
  compute->add_option("--max-q", req.max_q, "Largest homological degree")
      ->check(CLI::NonNegativeNumber);
  add_common(compute, req);

  CLI::App* word = app.add_subcommand(
      "word", "Single-necklace detail: prediction, engine homology, "
              "witnesses");
  word->add_option("--word", req.word_text,
                   "Comma-separated 1-based letters, e.g. 1,2,1; empty for "
                   "the length-zero word")
      ->required();
  word->add_option("--r", word_r, "Alphabet size (default: largest letter)");
  word->add_flag("--explain", req.explain, "Print witness chains");
  add_common(word, req);

  CLI::App* necklaces =
      app.add_subcommand("necklaces", "Enumerate necklaces by length");
  necklaces->add_option("--r", req.r, "Alphabet size")
      ->check(CLI::PositiveNumber);
  necklaces->add_option("--max-m", req.max_m, "Largest word length")
      ->check(CLI::NonNegativeNumber);
  add_common(necklaces, req);

  CLI::App* lemma = app.add_subcommand(
      "verify-lemma", "Audit every necklace: predicted modules, witnesses, "
                      "rotation model");
  lemma->add_option("--r", req.r, "Number of algebra generators")
      ->check(CLI::PositiveNumber);
  lemma->add_option("--max-m", req.max_m, "Largest word length")
      ->check(CLI::NonNegativeNumber);
  add_common(lemma, req);

  CLI::App* theorem = app.add_subcommand(
      "verify-theorem", "Audit symbol classes: cycle, formula, "
                        "nontriviality, generation");
  theorem->add_option("--r", req.r, "Number of algebra generators")
      ->check(CLI::PositiveNumber);
  theorem->add_flag("--explain", req.explain,
                    "Print projected components and formulas");
  add_common(theorem, req);

  CLI::App* exactness = app.add_subcommand(
      "verify-exactness", "Audit the four-term sequence for odd cyclic "
                          "orders");
  exactness->add_option("--max-m", max_ell, "Largest cyclic order")
      ->check(CLI::PositiveNumber);
  add_common(exactness, req);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Slice-assembled homology against the raw bar complex");
  oracle->add_option("--r", req.r, "Number of algebra generators")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--max-q", req.max_q, "Largest homological degree")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--budget", req.budget,
                     "Largest permitted basis size per degree")
      ->check(CLI::PositiveNumber);
  add_common(oracle, req);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(req);
    if (word->parsed()) return run_word(req, word_r);
    if (necklaces->parsed()) return run_necklaces(req);
    if (lemma->parsed()) return run_verify_lemma(req);
    if (theorem->parsed()) return run_verify_theorem(req);
    if (exactness->parsed()) return run_verify_exactness(req, max_ell);
    if (oracle->parsed()) return run_oracle(req);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const RingParseError& e) {
    std::cerr << "error: bad ring: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
