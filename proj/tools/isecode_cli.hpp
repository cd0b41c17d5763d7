#pragma once

// Command-line front end. Every subcommand is a thin adapter over the library;
// run_cli is kept free of process state so tests can drive it in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "isecode/isecode.hpp"

namespace isecode::cli {

enum ExitCode : int { kOk = 0, kRefusal = 2, kTimeout = 3, kIoError = 4 };

using nlohmann::ordered_json;

inline TVector parse_tvector(const std::string& text) {
  std::vector<unsigned> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParameterError("malformed t-vector '" + text + "'");
    values.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (values.empty()) throw ParameterError("empty t-vector");
  return TVector(std::move(values));
}

inline std::vector<unsigned> parse_positions(const std::string& text) {
  std::vector<unsigned> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParameterError("malformed position list '" + text + "'");
    out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return out;
}

inline SymbolSet parse_symbol_set(const std::string& text) {
  SymbolSet set;
  for (auto x : parse_positions(text)) set.insert(x);
  return set;
}

inline ordered_json tvector_json(const TVector& t) { return ordered_json(t.t); }

// Human text keeps the exact value and appends a decimal approximation.
inline std::string rational_text(const Rational& q) {
  std::ostringstream os;
  os << to_string(q) << " (" << std::setprecision(6) << to_double(q) << ")";
  return os.str();
}

struct Options {
  unsigned n = 0;
  unsigned s = 0;
  std::string t;
  std::string p;
  std::string output;
  std::uint64_t seed = kDefaultSeedBase;
  std::int64_t timeout_ms = 60'000;
  std::string format = "text";
  unsigned threads = 1;
};

namespace detail {

inline void emit(std::ostream& out, const std::string& format, const ordered_json& j,
                 const std::vector<std::pair<std::string, std::string>>& text_rows) {
  if (format == "json") {
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    for (std::size_t i = 0; i < text_rows.size(); ++i) out << (i ? "," : "") << text_rows[i].first;
    out << '\n';
    for (std::size_t i = 0; i < text_rows.size(); ++i) {
      const auto& v = text_rows[i].second;
      out << (i ? "," : "") << (v.find(',') != std::string::npos ? "\"" + v + "\"" : v);
    }
    out << '\n';
  } else {
    for (const auto& [k, v] : text_rows) out << k << ": " << v << '\n';
  }
}

// Report of both bounds for (n, s, t); shared by `bound` and `verify`.
struct BoundsReport {
  ordered_json json;
  std::vector<std::pair<std::string, std::string>> rows;
  bool any_applicable = false;
  std::optional<BigInt> thm4;
  std::optional<ProductBound> thm7;
};

inline BoundsReport bounds(unsigned n, unsigned s, const TVector& t) {
  BoundsReport rep;
  ordered_json j4, j7;
  try {
    rep.thm4 = bound_thm4(n, s, t);
    j4 = {{"applicable", true}, {"words", rep.thm4->str()}};
    rep.rows.emplace_back("thm4", rep.thm4->str());
  } catch (const Refusal& e) {
    j4 = {{"applicable", false}, {"reason", e.what()}};
    rep.rows.emplace_back("thm4", std::string("inapplicable (") + e.what() + ")");
  }
  try {
    rep.thm7 = bound_thm7(n, s, t);
    j7 = {{"applicable", true}, {"density", to_string(rep.thm7->density)}, {"words", rep.thm7->words.str()}};
    rep.rows.emplace_back("thm7", rep.thm7->words.str() + " words, density " + rational_text(rep.thm7->density));
  } catch (const Refusal& e) {
    j7 = {{"applicable", false}, {"reason", e.what()}};
    rep.rows.emplace_back("thm7", std::string("inapplicable (") + e.what() + ")");
  }
  rep.any_applicable = rep.thm4 || rep.thm7;
  rep.json = {{"thm4", j4}, {"thm7", j7}};
  return rep;
}

inline void write_family_file(const std::string& path, const Family& f, bool binary) {
  std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
  if (!os) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  if (binary) write_family_binary(os, f);
  else write_family_text(os, f);
  if (!os) throw std::ios_base::failure("write to '" + path + "' failed");
}

inline std::string read_file(const std::string& path, bool binary) {
  std::ifstream is(path, binary ? std::ios::binary : std::ios::in);
  if (!is) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

inline ordered_json family_summary(const Family& f, const TVector& t) {
  return {{"n", f.params().n()}, {"s", f.params().s()}, {"t", tvector_json(t)},
          {"size", f.size()},    {"density", to_string(density(f))}};
}

}  // namespace detail

inline int cmd_bound(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t = parse_tvector(o.t);
  isecode::detail::require_t_size(t, o.s);
  auto rep = detail::bounds(o.n, o.s, t);
  ordered_json j = {{"n", o.n}, {"s", o.s}, {"t", tvector_json(t)}};
  j.update(rep.json);
  if (!rep.any_applicable) {
    detail::emit(out, o.format, j, rep.rows);
    err << "error: neither bound applies to n=" << o.n << " s=" << o.s << " t=" << to_string(t) << '\n';
    return kRefusal;
  }
  detail::emit(out, o.format, j, rep.rows);
  return kOk;
}

struct ConstructOptions {
  std::string kind;
  std::string x1, x2, x;
  unsigned r = 0;
  bool binary = false;
};

inline int cmd_construct(const Options& o, const ConstructOptions& c, std::ostream& out, std::ostream& err) {
  std::optional<Family> family;
  TVector t;
  ordered_json extra = ordered_json::object();

  if (c.kind == "product") {
    t = parse_tvector(o.t);
    auto pc = construct_product(o.n, o.s, t);
    ordered_json blocks = ordered_json::array();
    for (std::size_t i = 0; i < pc.selections.size(); ++i)
      blocks.push_back({{"symbol", i + 1},
                        {"positions", pc.partition.block(i)},
                        {"r", pc.selections[i].r},
                        {"w", to_string(pc.selections[i].value)}});
    extra["blocks"] = blocks;
    family = std::move(pc.family);
  } else if (c.kind == "K") {
    t = parse_tvector(o.t);
    if (t.size() != 2) throw ParameterError("K takes t = t1,t2");
    const auto x1 = parse_positions(c.x1);
    const auto x2 = parse_positions(c.x2);
    if (k_threshold_unreachable(x1, x2, t[0], t[1])) err << "warning: t_i > |X_i|, K is empty\n";
    bool disjoint = true;
    for (auto a : x1)
      for (auto b : x2) disjoint = disjoint && a != b;
    std::uint64_t words = 1;
    bool fits = true;
    for (unsigned i = 0; i < o.n && fits; ++i) {
      if (words > dense_cap() / 2) fits = false;
      words *= 2;
    }
    if (!fits) {
      if (!disjoint) throw Refusal("K beyond the dense cap is only available for disjoint blocks");
      for (auto j : x1)
        if (j < 1 || j > o.n) throw ParameterError("X1 position outside [1, n]");
      for (auto j : x2)
        if (j < 1 || j > o.n) throw ParameterError("X2 position outside [1, n]");
      const auto d = k_density_disjoint(static_cast<unsigned>(x1.size()), static_cast<unsigned>(x2.size()), t[0], t[1]);
      ordered_json j = {{"kind", "K"}, {"n", o.n}, {"s", 2}, {"t", tvector_json(t)}, {"density", to_string(d)}};
      if (o.format == "text") out << to_string(d) << '\n';
      else detail::emit(out, o.format, j, {{"density", to_string(d)}});
      return kOk;
    }
    family = construct_K(o.n, x1, x2, t[0], t[1]);
    extra["disjoint"] = disjoint;
  } else if (c.kind == "L") {
    t = parse_tvector(o.t);
    unsigned tl = 0;
    if (t.size() == 1) tl = t[0];
    else {
      isecode::detail::require_t_size(t, o.s);
      tl = t[0];
      for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i]) throw ParameterError("L is (t,0,...,0)-intersecting; only t_1 may be nonzero");
    }
    family = construct_L(o.n, o.s, parse_positions(c.x), tl);
    t = TVector::zeros(o.s);
    t.t[0] = tl;
  } else if (c.kind == "Ftr") {
    t = parse_tvector(o.t);
    if (t.size() != 1) throw ParameterError("Ftr takes a single t");
    // Set A ⊆ [n] is written as the binary word with symbol 1 exactly on A.
    family = lift(construct_Ftr(o.n, t[0], c.r), 1, 2);
    extra["r"] = c.r;
    extra["mu_half"] = to_string(mu_p_window(t[0], c.r, Rational{1, 2}));
    t = TVector{t[0], 0};
  } else {
    throw ParameterError("unknown construction '" + c.kind + "' (product, K, L, Ftr)");
  }

  ordered_json j = {{"kind", c.kind}};
  j.update(detail::family_summary(*family, t));
  j["intersecting"] = is_t_intersecting(*family, t);
  j.update(extra);
  if (o.output.empty()) {
    write_family_text(out, *family);
    return kOk;
  }
  detail::write_family_file(o.output, *family, c.binary);
  j["file"] = o.output;
  detail::emit(out, o.format, j,
               {{"kind", c.kind},
                {"size", std::to_string(family->size())},
                {"density", rational_text(density(*family))},
                {"intersecting", j["intersecting"].get<bool>() ? "true" : "false"},
                {"file", o.output}});
  return kOk;
}

struct SearchCliOptions {
  std::optional<std::string> seed_word;
};

inline int cmd_search(const Options& o, const SearchCliOptions& so, std::ostream& out, std::ostream&) {
  const auto t = parse_tvector(o.t);
  SearchOptions opts;
  opts.threads = o.threads;
  opts.timeout = std::chrono::milliseconds(o.timeout_ms);
  const SpaceParams params(o.s, o.n);
  if (so.seed_word) opts.seed_word = encode(parse_word(*so.seed_word, params));
  const auto r = max_family(o.n, o.s, t, opts);
  ordered_json j = {{"n", o.n}, {"s", o.s}, {"t", tvector_json(t)}, {"max", r.max_size}};
  if (!o.output.empty()) {
    detail::write_family_file(o.output, r.witness, false);
    j["witness_file"] = o.output;
  } else {
    j["witness_file"] = nullptr;
  }
  j["nodes"] = r.nodes_explored;
  j["ms"] = r.elapsed.count();
  j["lower_bound"] = r.lower_bound_only;
  if (r.restricted) j["restricted_to_seed"] = *so.seed_word;
  j["density"] = to_string(Rational{BigInt{r.max_size}, BigInt{params.word_count()}});
  detail::emit(out, o.format, j,
               {{"max", std::to_string(r.max_size) + (r.lower_bound_only ? " (lower bound, timed out)" : "")},
                {"density", rational_text(Rational{BigInt{r.max_size}, BigInt{params.word_count()}})},
                {"nodes", std::to_string(r.nodes_explored)},
                {"ms", std::to_string(r.elapsed.count())},
                {"witness_file", o.output.empty() ? "-" : o.output}});
  return r.lower_bound_only ? kTimeout : kOk;
}

struct VerifyOptions {
  std::string file;
  bool binary = false;
};

inline int cmd_verify(const Options& o, const VerifyOptions& v, std::ostream& out, std::ostream&) {
  const auto content = detail::read_file(v.file, v.binary);
  std::istringstream is(content);
  std::optional<Family> family;
  if (v.binary) {
    family = read_family_binary(is);
  } else if (content.find_first_not_of(" \t\r\n") == std::string::npos) {
    // No header: an empty family with no known space.
    if (o.s && o.n) family = Family::empty(SpaceParams(o.s, o.n));
    else {
      ordered_json j = {{"n", nullptr}, {"s", nullptr}, {"size", 0}, {"intersecting", true}};
      detail::emit(out, o.format, j, {{"size", "0"}, {"intersecting", "true"}});
      return kOk;
    }
  } else {
    family = read_family_text(is);
  }
  const auto& params = family->params();
  if (o.s && o.s != params.s()) throw ParameterError("-s disagrees with the file header");
  if (o.n && o.n != params.n()) throw ParameterError("-n disagrees with the file header");
  const auto t = o.t.empty() ? TVector::zeros(params.s()) : parse_tvector(o.t);
  isecode::detail::require_t_size(t, params.s());

  ordered_json j = detail::family_summary(*family, t);
  const bool inter = is_t_intersecting(*family, t);
  j["intersecting"] = inter;
  std::vector<std::pair<std::string, std::string>> rows{
      {"size", std::to_string(family->size())},
      {"density", rational_text(density(*family))},
      {"intersecting", inter ? "true" : "false"}};

  ordered_json complete = ordered_json::array();
  std::string complete_text;
  if (params.s() <= 6) {
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << params.s()); ++mask) {
      const auto p = SymbolSet::from_mask(mask);
      const bool c = is_P_complete(*family, p);
      complete.push_back({{"P", to_string(p)}, {"complete", c}});
      if (c) complete_text += (complete_text.empty() ? "" : " ") + to_string(p);
    }
    j["complete"] = complete;
    rows.emplace_back("complete for", complete_text.empty() ? "none" : complete_text);
  }

  auto rep = detail::bounds(params.n(), params.s(), t);
  if (rep.thm4) rep.json["thm4"]["within"] = BigInt{family->size()} <= *rep.thm4;
  if (rep.thm7) rep.json["thm7"]["within"] = BigInt{family->size()} <= rep.thm7->words;
  j.update(rep.json);
  rows.insert(rows.end(), rep.rows.begin(), rep.rows.end());
  detail::emit(out, o.format, j, rows);
  return kOk;
}

struct CorrelateOptions {
  std::string p;
  std::string q;
  std::size_t trials = 1000;
  bool exhaustive = false;
  bool include_trials = true;
};

inline int cmd_correlate(const Options& o, const CorrelateOptions& c, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<SymbolSet, SymbolSet>> pairs;
  if (!c.p.empty() || !c.q.empty()) {
    if (c.p.empty() || c.q.empty()) throw ParameterError("give both --P and --Q, or neither");
    pairs.emplace_back(parse_symbol_set(c.p), parse_symbol_set(c.q));
  } else {
    pairs = disjoint_pairs(o.s);
  }

  ordered_json configs = ordered_json::array();
  std::int64_t global_min = std::numeric_limits<std::int64_t>::max();
  std::size_t total_violations = 0;
  std::vector<std::pair<std::string, std::string>> rows;

  for (const auto& [p, q] : pairs) {
    ordered_json cfg = {{"P", to_string(p)}, {"Q", to_string(q)}};
    std::int64_t min_slack = std::numeric_limits<std::int64_t>::max();
    std::size_t violations = 0;
    ordered_json trials = ordered_json::array();
    if (c.exhaustive) {
      if (o.n != 1) throw ParameterError("--exhaustive enumerates n = 1 only");
      for (const auto& chk : exhaustive_correlation(o.s, p, q)) {
        min_slack = std::min(min_slack, chk.slack());
        violations += chk.slack() < 0;
        if (c.include_trials) trials.push_back({{"lhs", chk.lhs}, {"rhs", chk.rhs}, {"slack", chk.slack()}});
      }
    } else {
      const SpaceParams params(o.s, o.n);
      const auto rep = correlation_campaign(params, p, q, c.trials, o.seed, o.threads);
      min_slack = rep.min_slack();
      violations = rep.violations();
      for (const auto& tr : rep.trials) {
        ordered_json jt = {{"seed", tr.seed},         {"rho", to_string(tr.rho)},   {"lhs", tr.check.lhs},
                           {"rhs", tr.check.rhs},     {"slack", tr.check.slack()}, {"slices_ok", tr.slices_ok}};
        if (tr.check.slack() < 0 || !tr.slices_ok) {
          // Replay material for a failing trial.
          std::ostringstream fs, gs;
          write_family_text(fs, random_complete_family(params, p, tr.rho, tr.seed));
          write_family_text(gs, random_complete_family(params, q, tr.rho, partner_seed(tr.seed)));
          jt["F"] = fs.str();
          jt["G"] = gs.str();
          err << "violation at seed " << tr.seed << " for P=" << to_string(p) << " Q=" << to_string(q) << '\n';
        }
        if (c.include_trials || jt.contains("F")) trials.push_back(jt);
      }
    }
    cfg["min_slack"] = min_slack;
    cfg["violations"] = violations;
    if (c.include_trials || !trials.empty()) cfg["trials"] = trials;
    configs.push_back(cfg);
    global_min = std::min(global_min, min_slack);
    total_violations += violations;
    rows.emplace_back("P=" + to_string(p) + " Q=" + to_string(q),
                      "min slack " + std::to_string(min_slack) + ", violations " + std::to_string(violations));
  }
  ordered_json j = {{"s", o.s}, {"n", o.n}, {"configs", configs}, {"min_slack", global_min},
                    {"violations", total_violations}};
  rows.emplace_back("min_slack", std::to_string(global_min));
  rows.emplace_back("violations", std::to_string(total_violations));
  if (o.format == "csv") {
    out << "P,Q,min_slack,violations\n";
    for (const auto& cfg : configs)
      out << '"' << cfg["P"].get<std::string>() << "\",\"" << cfg["Q"].get<std::string>() << "\","
          << cfg["min_slack"].get<std::int64_t>() << ',' << cfg["violations"].get<std::size_t>() << '\n';
  } else {
    detail::emit(out, o.format, j, rows);
  }
  return kOk;
}

struct TableOptions {
  unsigned n_min = 1;
  unsigned n_max = 4;
};

// All t with Σt <= n for each n in range; one CSV row per instance.
inline int cmd_table(const Options& o, const TableOptions& tb, std::ostream& out, std::ostream&) {
  if (o.s < 2) throw ParameterError("table needs -s >= 2");
  out << "n,s,t,max,density,thm4,thm7,nodes,lower_bound\n";
  bool partial = false;
  for (unsigned n = tb.n_min; n <= tb.n_max; ++n) {
    std::vector<unsigned> t(o.s, 0);
    while (true) {
      const TVector tv(t);
      if (tv.sum() <= n) {
        SearchOptions opts;
        opts.threads = o.threads;
        opts.timeout = std::chrono::milliseconds(o.timeout_ms);
        const auto r = max_family(n, o.s, tv, opts);
        partial = partial || r.lower_bound_only;
        auto rep = detail::bounds(n, o.s, tv);
        out << n << ',' << o.s << ",\"" << to_string(tv) << "\"," << r.max_size << ','
            << to_string(Rational{BigInt{r.max_size}, BigInt{r.witness.params().word_count()}}) << ','
            << (rep.thm4 ? rep.thm4->str() : "") << ',' << (rep.thm7 ? rep.thm7->words.str() : "") << ','
            << r.nodes_explored << ',' << (r.lower_bound_only ? "true" : "false") << '\n';
      }
      // Next t in lexicographic order with entries in [0, n].
      std::size_t k = 0;
      while (k < t.size() && ++t[k] > n) t[k++] = 0;
      if (k == t.size()) break;
    }
  }
  return partial ? kTimeout : kOk;
}

inline int cmd_measure(const Options& o, std::ostream& out, std::ostream&) {
  const auto t = parse_tvector(o.t);
  if (t.size() != 1) throw ParameterError("measure takes a single t");
  const auto p = parse_rational(o.p.empty() ? "1/" + std::to_string(o.s ? o.s : 2) : o.p);
  const auto sel = w(o.n, t[0], p);
  ordered_json j = {{"n", o.n},          {"t", t[0]},           {"p", to_string(p)},
                    {"r", sel.r},        {"r_star", sel.r_star}, {"w", to_string(sel.value)}};
  detail::emit(out, o.format, j,
               {{"r", std::to_string(sel.r)}, {"r_star", std::to_string(sel.r_star)}, {"w", rational_text(sel.value)}});
  return kOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal (t1,...,ts)-intersecting families: bounds, constructions, exact search"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool need_ns, bool need_t) {
    auto* n = sub->add_option("-n", o.n, "word length");
    auto* s = sub->add_option("-s", o.s, "alphabet size");
    auto* t = sub->add_option("-t", o.t, "demand vector, comma separated");
    if (need_ns) {
      n->required();
      s->required();
    }
    if (need_t) t->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* bound = app.add_subcommand("bound", "fixed-coordinate and product bounds");
  add_common(bound, true, true);

  ConstructOptions co;
  auto* construct = app.add_subcommand("construct", "build an explicit family");
  construct->add_option("kind", co.kind, "product | K | L | Ftr")->required();
  add_common(construct, false, true);
  construct->add_option("--x1", co.x1, "K: block X1 positions");
  construct->add_option("--x2", co.x2, "K: block X2 positions");
  construct->add_option("--x", co.x, "L: block X positions");
  construct->add_option("-r", co.r, "Ftr: window parameter r");
  construct->add_option("-o", o.output, "output family file");
  construct->add_flag("--binary", co.binary, "write the binary form");

  SearchCliOptions so;
  auto* search = app.add_subcommand("search", "exact maximum family by clique search");
  add_common(search, true, true);
  search->add_option("-o", o.output, "witness family file");
  search->add_option("--timeout-ms", o.timeout_ms, "time budget");
  search->add_option("--threads", o.threads, "worker threads");
  search->add_option("--seed-word", so.seed_word, "restrict to families containing this word");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "check a family file");
  verify->add_option("file", vo.file, "family file")->required();
  add_common(verify, false, false);
  verify->add_flag("--binary", vo.binary, "read the binary form");

  CorrelateOptions cor;
  auto* correlate = app.add_subcommand("correlate", "correlation inequality trials");
  add_common(correlate, true, false);
  correlate->add_option("--P", cor.p, "symbol set P, comma separated");
  correlate->add_option("--Q", cor.q, "symbol set Q, comma separated");
  correlate->add_option("--trials", cor.trials, "random trials per (P, Q)");
  correlate->add_option("--seed", o.seed, "base seed");
  correlate->add_option("--threads", o.threads, "worker threads");
  correlate->add_flag("--exhaustive", cor.exhaustive, "enumerate all pairs (n = 1)");
  correlate->add_flag("!--no-trials", cor.include_trials, "omit per-trial rows");

  TableOptions to;
  auto* table = app.add_subcommand("table", "sweep (n, t) and emit CSV");
  table->add_option("-s", o.s, "alphabet size")->required();
  table->add_option("--n-min", to.n_min, "smallest n");
  table->add_option("--n-max", to.n_max, "largest n");
  table->add_option("--timeout-ms", o.timeout_ms, "time budget per instance");
  table->add_option("--threads", o.threads, "worker threads");

  auto* measure = app.add_subcommand("measure", "w(n, t, p) window selection");
  measure->add_option("-n", o.n, "ground set size")->required();
  measure->add_option("-t", o.t, "intersection size")->required();
  measure->add_option("-p", o.p, "bias p as num/den (default 1/s)");
  measure->add_option("-s", o.s, "alphabet size for the default p = 1/s");
  measure->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kRefusal;
  }

  try {
    if (*bound) return cmd_bound(o, out, err);
    if (*construct) return cmd_construct(o, co, out, err);
    if (*search) return cmd_search(o, so, out, err);
    if (*verify) return cmd_verify(o, vo, out, err);
    if (*correlate) return cmd_correlate(o, cor, out, err);
    if (*table) return cmd_table(o, to, out, err);
    if (*measure) return cmd_measure(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const SearchTimeout& e) {
    err << "timeout: " << e.what() << '\n';
    return kTimeout;
  } catch (const Refusal& e) {
    err << "refused: " << e.what() << '\n';
    return kRefusal;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kRefusal;
  }
  return kRefusal;
}

}  // namespace isecode::cli
