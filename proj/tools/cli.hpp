#pragma once

// affold command line: paths, count, verify, oracle, render, execute.
// Exit status: 0 success, 1 failed verification, 2 bad flags or input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "affold/affine.hpp"
#include "affold/example8.hpp"
#include "affold/folding.hpp"
#include "affold/json_io.hpp"
#include "affold/loopgroup.hpp"
#include "affold/render.hpp"

namespace affold::cli {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// "A2", "G2", "A1xA1" or a JSON integer matrix such as "[[2,-1],[-1,2]]".
inline CartanDatum parse_type(const std::string& s)
{
  if (!s.empty() && s.front() == '[') {
    std::vector<IntVec> m;
    try {
      m = nlohmann::json::parse(s).get<std::vector<IntVec>>();
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("--type: bad matrix: " + std::string(e.what()));
    }
    return validate_cartan(m);
  }
  return cartan_from_label(s);
}

inline Word parse_checked_word(const AffineWeylGroup& W, const std::string& s)
{
  const Word w = parse_word(s);
  for (int i : w)
    if (i < 0 || i > W.rank())
      throw UsageError("word letter " + std::to_string(i) + " out of range 0.." + std::to_string(W.rank()));
  return w;
}

/// A word such as "2,1,0" or a JSON endpoint {"translation": [...], "finite_word": [...]}.
inline AffineWeylElement parse_endpoint(const AffineWeylGroup& W, const std::string& s)
{
  if (!s.empty() && s.front() == '{') {
    try {
      return json_io::endpoint_from_json(W, nlohmann::json::parse(s));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("--end: bad endpoint JSON: " + std::string(e.what()));
    }
  }
  return W.from_word(parse_checked_word(W, s));
}

inline std::string endpoint_label(const AffineWeylGroup& W, const AffineWeylElement& g)
{
  const Word w = W.reduced_word(g);
  return w.empty() ? "e" : word_to_string(w);
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out)
{
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Alcove-walk folding: folded paths, cell counts and loop-group checks", "affold"};
  app.require_subcommand(1);

  std::string type, word_s, end_s, out_path, field = "rational", labels_s;
  std::optional<std::int64_t> q;
  unsigned p = 2, jobs = 1;
  int radius = 2;
  bool allow_nonreduced = false;
  std::string target;

  auto common = [&](CLI::App* sc, bool needs_word) {
    sc->add_option("--type", type, "Cartan type label (A2, G2, A1xA1) or JSON matrix")->required();
    auto* w = sc->add_option("--word", word_s, "comma separated word over 0..n");
    if (needs_word) w->required();
  };

  auto* paths = app.add_subcommand("paths", "enumerate labeled folded paths as JSON");
  common(paths, true);
  paths->add_option("--end", end_s, "keep only paths ending here (word or JSON endpoint)");
  paths->add_flag("--allow-nonreduced", allow_nonreduced, "accept non-reduced words");
  paths->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  paths->add_option("--out", out_path, "output file");

  auto* count = app.add_subcommand("count", "point-count polynomial per endpoint");
  common(count, true);
  count->add_option("--end", end_s, "print only this endpoint's polynomial");
  count->add_option("--q", q, "also evaluate at q")->check(CLI::NonNegativeNumber);
  count->add_flag("--allow-nonreduced", allow_nonreduced, "accept non-reduced words");
  count->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run a built-in verification suite");
  verify->add_option("target", target, "suite name (example8)")->required()->check(CLI::IsMember({"example8"}));

  auto* oracle = app.add_subcommand("oracle", "compare finite-field brute force with the enumerator");
  common(oracle, true);
  oracle->add_option("--p", p, "prime field size")->check(CLI::PositiveNumber);
  oracle->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "SVG picture of the arrangement and a walk");
  common(render, false);
  render->add_option("--radius", radius, "largest |k| of drawn hyperplanes")->check(CLI::PositiveNumber);
  render->add_option("--end", end_s, "draw the folded paths of --word ending here");
  render->add_option("--out", out_path, "output file");

  auto* execute = app.add_subcommand("execute", "run the matrix folding executor, JSON state");
  common(execute, true);
  execute->add_option("--labels", labels_s, "comma separated labels, one per letter")->required();
  execute->add_option("--field", field, "scalar field")->check(CLI::IsMember({"rational", "fp"}));
  execute->add_option("--p", p, "prime for --field fp")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      int passed = 0;
      const auto checks = example8::run();
      for (const auto& c : checks) {
        out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
        if (!c.passed) out << ": " << c.detail;
        out << "\n";
        passed += c.passed ? 1 : 0;
      }
      out << passed << "/" << checks.size() << " assertions passed\n";
      return passed == static_cast<int>(checks.size()) ? 0 : 1;
    }

    const AffineWeylGroup W(parse_type(type));
    const Word w = word_s.empty() ? Word{} : parse_checked_word(W, word_s);
    const EnumerateOptions opts{allow_nonreduced, jobs};
    if ((paths->parsed() || count->parsed()) && allow_nonreduced && !W.is_reduced(w))
      err << "warning: word " << word_to_string(w) << " is not reduced; paths do not index cells\n";

    if (paths->parsed()) {
      auto all = enumerate_folded_paths(W, w, opts);
      if (!end_s.empty()) {
        const auto e = parse_endpoint(W, end_s);
        std::erase_if(all, [&](const FoldedPath& x) { return x.endpoint != e; });
      }
      emit(json_io::paths_to_json(W, w, all).dump(2) + "\n", out_path, out);
      return 0;
    }

    if (count->parsed()) {
      const auto cells = cells_by_endpoint(W, w, opts);
      auto line = [&](const CountPolynomial& c) {
        out << c.to_string();
        if (q) out << "\t" << c.eval(*q);
        out << "\n";
      };
      if (!end_s.empty()) {
        const auto it = cells.find(parse_endpoint(W, end_s));
        line(it == cells.end() ? CountPolynomial() : it->second.count);
        return 0;
      }
      for (const auto& [g, cell] : cells) {
        out << endpoint_label(W, g) << "\t";
        line(cell.count);
      }
      return 0;
    }

    if (oracle->parsed()) {
      const LoopGroup<ModP> G(W);
      if (!W.is_reduced(w)) throw UsageError("word " + word_to_string(w) + " is not reduced");
      const auto brute = brute_force_cells(G, w, p, jobs);
      const auto cells = cells_by_endpoint(W, w);
      std::map<AffineWeylElement, std::pair<std::int64_t, std::int64_t>> table;
      for (const auto& [g, n] : brute) table[g].first = n;
      for (const auto& [g, cell] : cells) table[g].second = cell.count.eval(p);
      bool ok = true;
      out << "endpoint\tbrute\tpolynomial\tat p=" << p << "\tstatus\n";
      for (const auto& [g, pr] : table) {
        const auto it = cells.find(g);
        const bool match = pr.first == pr.second;
        ok = ok && match;
        out << endpoint_label(W, g) << "\t" << pr.first << "\t" << (it == cells.end() ? "0" : it->second.count.to_string())
            << "\t" << pr.second << "\t" << (match ? "ok" : "MISMATCH") << "\n";
      }
      return ok ? 0 : 1;
    }

    if (render->parsed()) {
      SceneSpec spec{W, radius, {}, {}, {}};
      if (!end_s.empty()) {
        if (word_s.empty()) throw UsageError("render: --end needs --word");
        const auto e = parse_endpoint(W, end_s);
        for (auto& x : enumerate_folded_paths(W, w))
          if (x.endpoint == e) spec.paths.push_back(std::move(x));
      } else if (!w.empty()) {
        spec.walks.push_back(w);
      }
      emit(render_arrangement(spec), out_path, out);
      return 0;
    }

    if (execute->parsed()) {
      std::vector<std::string> raw;
      std::stringstream ss(labels_s);
      for (std::string item; std::getline(ss, item, ',');) raw.push_back(item);
      if (raw.size() != w.size())
        throw UsageError(std::to_string(raw.size()) + " labels for a word of length " + std::to_string(w.size()));
      if (field == "rational") {
        const LoopGroup<Rational> G(W);
        std::vector<Rational> labels;
        for (const auto& s : raw) labels.push_back(ScalarTraits<Rational>::parse(s));
        out << json_io::state_to_json(G, execute_folding(G, w, labels)).dump(2) << "\n";
      } else {
        if (!is_prime(p)) throw UsageError("--p " + std::to_string(p) + " is not prime");
        const LoopGroup<ModP> G(W);
        std::vector<ModP> labels;
        for (const auto& s : raw) labels.push_back(ScalarTraits<ModP>::parse(s, p));
        out << json_io::state_to_json(G, execute_folding(G, w, labels)).dump(2) << "\n";
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace affold::cli
