#include "permstat_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "permstat/ballot.hpp"
#include "permstat/error.hpp"
#include "permstat/parallel.hpp"
#include "permstat/parity.hpp"
#include "permstat/statistics.hpp"
#include "permstat/tableau.hpp"
#include "permstat/wilf.hpp"

namespace permstat::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Options {
  std::string format = "text";
  std::size_t threads = 0;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<std::size_t> n_max;
  std::vector<std::string> avoid;
  std::string stat;
  std::string perm;
  std::string word;
  std::string family;
  std::string target;
  bool fast = false;
  bool count_only = false;
};

/// What a subcommand hands back for rendering.
struct Outcome {
  Json parameters = Json::object();
  Json result = Json::object();
  std::string text;
  std::vector<std::vector<std::string>> csv;
  int exit_code = kOk;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

StatName require_stat(const std::string& text) {
  if (text.empty()) throw UsageError("--stat is required (maj, ch or inv)");
  auto stat = parse_stat_name(text);
  if (!stat) throw UsageError("unknown statistic '" + text + "' (expected maj, ch or inv)");
  return *stat;
}

std::size_t require(const std::optional<std::size_t>& value, const char* flag) {
  if (!value) throw UsageError(std::string(flag) + " is required");
  return *value;
}

PatternSet patterns_from(const std::vector<std::string>& avoid) {
  PatternSet set;
  for (const auto& a : avoid) set.insert(parse_permutation(a));
  return set;
}

Json pattern_list(const PatternSet& set) {
  Json out = Json::array();
  for (const auto& p : set) out.push_back(p.to_string());
  return out;
}

Json coefficients_json(const StatPolynomial& poly) {
  Json out = Json::array();
  for (auto c : poly.coefficients()) out.push_back(c);
  return out;
}

std::string join(std::span<const std::uint64_t> values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

Json rows_json(const StandardTableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) rows.push_back(row);
  return rows;
}

void add_polynomial_rows(Outcome& o, const std::string& label, const StatPolynomial& poly) {
  for (std::size_t i = 0; i < poly.coefficients().size(); ++i) {
    o.csv.push_back({label, std::to_string(i), std::to_string(poly.coefficient(i))});
  }
}

void guard_exhaustive(std::size_t n, const PatternSet& patterns, std::size_t bound) {
  if (!patterns.constrains(n) && n > bound) {
    throw ResourceLimitError("enumerating all of S_" + std::to_string(n) +
                             " exceeds PERMSTAT_MAX_EXHAUSTIVE=" + std::to_string(bound));
  }
}

const char* verdict(bool holds) { return holds ? "pass" : "fail"; }

// ---- subcommands ----------------------------------------------------------

Outcome cmd_stat(const Options& opt) {
  const auto p = parse_permutation(opt.perm);
  const auto stat = require_stat(opt.stat);
  Outcome o;
  o.parameters["perm"] = p.to_string();
  o.parameters["stat"] = to_string(stat);
  const auto value = statistic(p, stat);
  o.result["value"] = value;
  std::ostringstream text;
  text << to_string(stat) << "(" << p.to_string() << ") = " << value << "\n";
  o.csv.push_back({"key", "value"});
  o.csv.push_back({"value", std::to_string(value)});
  if (stat == StatName::major_index) {
    const auto des = descent_set(p);
    o.result["descent_set"] = des;
    text << "descent set: {";
    for (std::size_t i = 0; i < des.size(); ++i) text << (i ? ", " : "") << des[i];
    text << "}\n";
  } else if (stat == StatName::charge) {
    Json map = Json::object();
    text << "charge values:";
    for (int v : p.values()) {
      const auto chv = charge_values(p).at(v);
      map[std::to_string(v)] = chv;
      text << " " << v << ":" << chv;
      o.csv.push_back({"chv(" + std::to_string(v) + ")", std::to_string(chv)});
    }
    text << "\n";
    o.result["charge_values"] = map;
  }
  o.text = text.str();
  return o;
}

Outcome cmd_poly(const Options& opt, std::size_t bound) {
  const std::size_t n = require(opt.n, "--n");
  const auto patterns = patterns_from(opt.avoid);
  const auto stat = require_stat(opt.stat);
  Outcome o;
  o.parameters["n"] = n;
  o.parameters["avoid"] = pattern_list(patterns);
  o.parameters["stat"] = to_string(stat);
  o.parameters["fast"] = opt.fast;
  std::optional<StatPolynomial> poly;
  if (opt.fast) {
    if (stat != StatName::charge || patterns != PatternSet{Permutation{3, 2, 1}}) {
      throw UsageError("--fast is only valid with --stat ch and --avoid 321");
    }
    poly = fast_ch_321(n, opt.threads);
  } else {
    guard_exhaustive(n, patterns, bound);
    poly = stat_polynomial(n, patterns, stat, opt.threads);
  }
  o.result["coefficients"] = coefficients_json(*poly);
  o.result["total"] = poly->total();
  o.text = poly->to_string() + "\ncoefficients: " + join(poly->coefficients(), " ") +
           "\ntotal: " + std::to_string(poly->total()) + "\n";
  o.csv.push_back({"polynomial", "exponent", "coefficient"});
  add_polynomial_rows(o, to_string(stat).data(), *poly);
  return o;
}

Outcome cmd_avoid(const Options& opt, std::size_t bound) {
  const std::size_t n = require(opt.n, "--n");
  const auto patterns = patterns_from(opt.avoid);
  guard_exhaustive(n, patterns, bound);
  Outcome o;
  o.parameters["n"] = n;
  o.parameters["avoid"] = pattern_list(patterns);
  o.parameters["count_only"] = opt.count_only;
  std::size_t count = 0;
  Json list = Json::array();
  std::string text;
  o.csv.push_back({"permutation"});
  enumerate_avoiders(n, patterns, [&](const Permutation& p) {
    ++count;
    if (opt.count_only) return;
    list.push_back(p.to_string());
    text += p.to_string() + "\n";
    o.csv.push_back({p.to_string()});
  });
  o.result["count"] = count;
  if (!opt.count_only) o.result["permutations"] = list;
  if (opt.count_only) o.csv = {{"count"}, {std::to_string(count)}};
  o.text = text + "count: " + std::to_string(count) + "\n";
  return o;
}

std::vector<PatternSet> family(const std::string& name) {
  if (name == "s3-singletons") return s3_singletons();
  if (name == "s3-pairs") return s3_pairs_without_monotone();
  if (name == "s3-subsets") return s3_subsets();
  throw UsageError("unknown family '" + name + "' (expected s3-singletons, s3-pairs or s3-subsets)");
}

void render_classes(Outcome& o, const WilfClassReport& report) {
  Json classes = Json::array();
  Json witnesses = Json::object();
  std::ostringstream text;
  o.csv.push_back({"class", "member"});
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    Json members = Json::array();
    text << "class " << i + 1 << ":";
    for (const auto& set : report.classes[i]) {
      members.push_back(set.to_string());
      text << " " << set.to_string();
      o.csv.push_back({std::to_string(i + 1), set.to_string()});
    }
    text << "\n";
    classes.push_back(members);
  }
  for (const auto& cls : report.classes) {
    for (const auto& set : cls) {
      Json seq = Json::array();
      for (const auto& poly : report.witness_polynomials.at(set)) seq.push_back(coefficients_json(poly));
      witnesses[set.to_string()] = seq;
    }
  }
  o.result["n_range"] = {report.n_min, report.n_max};
  o.result["classes"] = classes;
  o.result["witness_polynomials"] = witnesses;
  o.text += text.str();
}

Outcome cmd_classes(const Options& opt, std::size_t bound) {
  const std::size_t n_max = require(opt.n_max, "--nmax");
  const auto stat = require_stat(opt.stat);
  std::vector<PatternSet> candidates;
  if (!opt.family.empty()) candidates = family(opt.family);
  for (const auto& a : opt.avoid) candidates.push_back(parse_pattern_set(a));
  if (candidates.empty()) throw UsageError("give candidates with --avoid or --family");
  for (const auto& c : candidates) guard_exhaustive(n_max, c, bound);
  Outcome o;
  o.parameters["nmax"] = n_max;
  o.parameters["stat"] = to_string(stat);
  Json cands = Json::array();
  for (const auto& c : candidates) cands.push_back(c.to_string());
  o.parameters["candidates"] = cands;
  render_classes(o, st_wilf_classes(candidates, stat, n_max, opt.threads));
  return o;
}

Outcome cmd_rsk(const Options& opt) {
  const auto p = parse_permutation(opt.perm);
  const auto [ins, rec] = rsk_insert(p);
  Outcome o;
  o.parameters["perm"] = p.to_string();
  o.result["shape"] = ins.shape();
  o.result["P"] = rows_json(ins);
  o.result["Q"] = rows_json(rec);
  std::ostringstream text;
  text << "P:\n";
  for (const auto& row : ins.rows()) {
    for (int v : row) text << " " << v;
    text << "\n";
  }
  text << "Q:\n";
  for (const auto& row : rec.rows()) {
    for (int v : row) text << " " << v;
    text << "\n";
  }
  o.text = text.str();
  o.csv = {{"tableau", "row", "entries"}};
  for (std::size_t r = 0; r < ins.row_count(); ++r) {
    std::string a, b;
    for (int v : ins.rows()[r]) a += (a.empty() ? "" : " ") + std::to_string(v);
    for (int v : rec.rows()[r]) b += (b.empty() ? "" : " ") + std::to_string(v);
    o.csv.push_back({"P", std::to_string(r + 1), a});
    o.csv.push_back({"Q", std::to_string(r + 1), b});
  }
  return o;
}

Outcome cmd_involution(const Options& opt) {
  if (opt.word.empty()) throw UsageError("--word is required");
  const auto w = BallotWord::parse(opt.word);
  const auto image = involution_phi(w);
  Outcome o;
  o.parameters["word"] = w.to_string();
  o.result["image"] = image.to_string();
  o.result["rank"] = ballot_rank(w);
  o.result["image_rank"] = ballot_rank(image);
  o.result["tableau"] = rows_json(w.to_tableau());
  o.result["image_tableau"] = rows_json(image.to_tableau());
  o.text = w.to_string() + " (" + w.to_tableau().to_string() + ") -> " + image.to_string() + " (" +
           image.to_tableau().to_string() + ")\n";
  o.csv = {{"word", "image"}, {w.to_string(), image.to_string()}};
  return o;
}

// ---- verify ---------------------------------------------------------------

Json prepend(const char* key, const Json& value, const Json& rest) {
  Json out = Json::object();
  out[key] = value;
  for (const auto& [k, v] : rest.items()) out[k] = v;
  return out;
}

void finish_verdict(Outcome& o, bool holds) {
  o.result = prepend("verdict", verdict(holds), o.result);
  o.exit_code = holds ? kOk : kVerifiedFailure;
  o.text = std::string("verdict: ") + verdict(holds) + "\n" + o.text;
  o.csv.insert(o.csv.begin(), {{"key", "value"}, {"verdict", verdict(holds)}});
}

Outcome verify_involution(std::size_t n) {
  Outcome o;
  o.parameters["n"] = n;
  std::size_t words = 0;
  bool holds = true;
  std::optional<BallotWord> counterexample;
  const ExactInt count = count_two_row(n);
  if (count % 2 != 0) {
    throw DomainError("no fixed-point-free involution guaranteed: count_two_row(" + std::to_string(n) +
                      ") = " + count.str() + " is odd");
  }
  enumerate_two_row_syt(n, [&](const BallotWord& w) {
    ++words;
    const auto image = involution_phi(w);
    const bool ok = image != w && involution_phi(image) == w && image.size() == w.size() && image.is_two_row();
    if (!ok && holds) counterexample = w;
    holds = holds && ok;
  });
  o.result["words"] = words;
  if (counterexample) o.result["counterexample"] = counterexample->to_string();
  o.text = "checked " + std::to_string(words) + " two-row ballot words\n";
  o.csv.push_back({"words", std::to_string(words)});
  finish_verdict(o, holds);
  return o;
}

Outcome verify_classes(const ClassVerdict& v, std::size_t n_max, StatName stat) {
  Outcome o;
  o.parameters["nmax"] = n_max;
  o.parameters["stat"] = to_string(stat);
  render_classes(o, v.report);
  if (!v.holds) o.result["detail"] = v.detail;
  finish_verdict(o, v.holds);
  return o;
}

Outcome verify_parity(const ParityResult& r) {
  Outcome o;
  o.parameters["k"] = r.k;
  o.result["n"] = r.n;
  o.result["coefficients"] = coefficients_json(r.polynomial);
  o.result["total"] = r.polynomial.total();
  o.result["brute_force_checked"] = r.brute_force.has_value();
  o.result["via_charge_identity"] = r.via_charge_identity;
  o.text = "n = " + std::to_string(r.n) + "\n" + r.polynomial.to_string() + "\ncoefficients: " +
           join(r.polynomial.coefficients(), " ") + "\n";
  o.csv.push_back({"n", std::to_string(r.n)});
  for (std::size_t i = 0; i < r.polynomial.coefficients().size(); ++i) {
    o.csv.push_back({"q^" + std::to_string(i), std::to_string(r.polynomial.coefficient(i))});
  }
  finish_verdict(o, r.holds);
  return o;
}

Outcome cmd_verify(const Options& opt, std::size_t bound) {
  const auto& t = opt.target;
  if (t == "lemma1") {
    const std::size_t n = opt.n.value_or(8);
    Outcome o;
    o.parameters["n"] = n;
    const bool holds = verify_lemma1(n, bound);
    o.text = "maj(p) = ch(f(p)) over S_" + std::to_string(n) + "\n";
    finish_verdict(o, holds);
    return o;
  }
  if (t == "lemma2") {
    const std::size_t n = opt.n.value_or(7);
    const auto r = verify_lemma2(n, bound);
    Outcome o;
    o.parameters["n"] = n;
    Json map = Json::object();
    for (const auto& [sigma, tau] : r.correspondence) {
      map[sigma.to_string()] = tau.to_string();
      o.text += "f(Av_" + std::to_string(n) + "(" + sigma.to_string() + ")) = Av_" + std::to_string(n) + "(" +
                tau.to_string() + ")\n";
      o.csv.push_back({sigma.to_string(), tau.to_string()});
    }
    o.result["correspondence"] = map;
    if (r.counterexample) o.result["counterexample"] = r.counterexample->to_string();
    if (r.failing_pattern) o.result["failing_pattern"] = r.failing_pattern->to_string();
    finish_verdict(o, r.holds);
    return o;
  }
  if (t == "theorem3" || t == "theorem4") {
    const std::size_t n_max = opt.n_max.value_or(8);
    const StatName stat = opt.stat.empty() ? StatName::charge : require_stat(opt.stat);
    // S_3 pattern sets always constrain n >= 3; smaller n are tiny.
    const auto v = t == "theorem3" ? verify_theorem3(n_max, stat, opt.threads)
                                   : verify_theorem4(n_max, stat, opt.threads);
    return verify_classes(v, n_max, stat);
  }
  if (t == "lemma5") {
    const auto r = verify_lemma5(opt.k.value_or(4));
    Outcome o;
    o.parameters["k"] = r.k;
    o.result["n"] = r.n;
    o.result["count"] = r.count;
    if (r.enumerated) o.result["enumerated"] = *r.enumerated;
    o.text = "|Av_" + std::to_string(r.n) + "(321)| = " + std::to_string(r.count) + "\n";
    o.csv.push_back({"count", std::to_string(r.count)});
    finish_verdict(o, r.holds);
    return o;
  }
  if (t == "theorem8") return verify_parity(verify_theorem8(opt.k.value_or(4), opt.threads));
  if (t == "corollary9") return verify_parity(verify_corollary9(opt.k.value_or(4), opt.threads));
  if (t == "involution") return verify_involution(opt.n.value_or(15));
  throw UsageError("unknown verify target '" + t + "'");
}

// ---- rendering ------------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(std::ostream& out, Format format, const std::string& command, const Outcome& o, long long elapsed_ms) {
  switch (format) {
    case Format::json: {
      Json record;
      record["command"] = command;
      record["parameters"] = o.parameters;
      record["result"] = o.result;
      record["elapsed_ms"] = elapsed_ms;
      out << record.dump() << "\n";
      break;
    }
    case Format::csv:
      for (const auto& row : o.csv) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << "\n";
      }
      break;
    case Format::text:
      out << o.text;
      break;
  }
}

void emit_error(std::ostream& out, std::ostream& err, Format format, const std::string& command,
                const Json& parameters, const char* kind, const std::string& message, long long elapsed_ms) {
  err << "permstat " << command << ": " << message << "\n";
  if (format != Format::json) return;
  Json record;
  record["command"] = command;
  record["parameters"] = parameters;
  record["error"] = Json{{"kind", kind}, {"message", message}};
  record["elapsed_ms"] = elapsed_ms;
  out << record.dump() << "\n";
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  const bool comma = text.find(',') != std::string_view::npos;
  if (!comma) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError(std::string(1, c), "unexpected token '" + std::string(1, c) + "' in permutation '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
    return Permutation(std::move(values));
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const std::string token(text.substr(start, end - start));
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9) {
      throw ParseError(token, "unexpected token '" + token + "' in permutation '" + std::string(text) + "'");
    }
    values.push_back(std::stoi(token));
    start = end + 1;
  }
  return Permutation(std::move(values));
}

PatternSet parse_pattern_set(std::string_view text) {
  PatternSet set;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('+', start), text.size());
    set.insert(parse_permutation(text.substr(start, end - start)));
    start = end + 1;
  }
  return set;
}

std::size_t exhaustion_bound_from_env() {
  const char* raw = std::getenv("PERMSTAT_MAX_EXHAUSTIVE");
  if (raw == nullptr || *raw == '\0') return kDefaultExhaustionBound;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 4) {
    throw UsageError("PERMSTAT_MAX_EXHAUSTIVE must be a small nonnegative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(std::stoul(text));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation statistics, pattern avoidance and statistic generating polynomials", "permstat"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--threads", opt.threads, "Worker threads (0 = hardware concurrency)");
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", opt.n, "Permutation size"); };
  auto add_avoid = [&](CLI::App* sub) { sub->add_option("--avoid", opt.avoid, "Forbidden pattern (repeatable)"); };
  auto add_stat = [&](CLI::App* sub) { sub->add_option("--stat", opt.stat, "Statistic: maj, ch or inv"); };

  auto* stat = app.add_subcommand("stat", "Evaluate a statistic on one permutation");
  stat->add_option("--perm", opt.perm, "Permutation, e.g. 3,2,8,5,7,4,6,1,9")->required();
  add_stat(stat);
  add_common(stat);

  auto* poly = app.add_subcommand("poly", "Statistic generating polynomial over Av_n");
  add_n(poly);
  add_avoid(poly);
  add_stat(poly);
  poly->add_flag("--fast", opt.fast, "Use the tableau path (charge, avoid 321 only)");
  add_common(poly);

  auto* avoid = app.add_subcommand("avoid", "List or count Av_n");
  add_n(avoid);
  add_avoid(avoid);
  avoid->add_flag("--count", opt.count_only, "Only print the count");
  add_common(avoid);

  auto* classes = app.add_subcommand("classes", "st-Wilf classes of pattern sets");
  classes->add_option("--nmax", opt.n_max, "Largest n compared");
  classes->add_option("--avoid", opt.avoid, "Candidate pattern set, patterns joined by '+' (repeatable)");
  classes->add_option("--family", opt.family, "s3-singletons, s3-pairs or s3-subsets");
  add_stat(classes);
  add_common(classes);

  auto* verify = app.add_subcommand("verify", "Mechanically check a result");
  verify->add_option("target", opt.target, "lemma1 lemma2 theorem3 theorem4 lemma5 theorem8 corollary9 involution")
      ->required()
      ->check(CLI::IsMember(
          {"lemma1", "lemma2", "theorem3", "theorem4", "lemma5", "theorem8", "corollary9", "involution"}));
  add_n(verify);
  verify->add_option("--k", opt.k, "Exponent k, n = 2^k - 1");
  verify->add_option("--nmax", opt.n_max, "Largest n compared");
  add_stat(verify);
  add_common(verify);

  auto* rsk = app.add_subcommand("rsk", "Insertion and recording tableaux of a permutation");
  rsk->add_option("--perm", opt.perm, "Permutation")->required();
  add_common(rsk);

  auto* invol = app.add_subcommand("involution", "Apply the fixed-point-free involution to a ballot word");
  invol->add_option("--word", opt.word, "Ballot word over {1,2}, e.g. 112")->required();
  add_common(invol);

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
    err << "permstat: " << e.what() << "\n";
    return kUsageError;
  }

  const auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const Format format = opt.format == "json" ? Format::json : opt.format == "csv" ? Format::csv : Format::text;
  const auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return static_cast<long long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count());
  };
  Json parameters = Json::object();
  try {
    const std::size_t bound = exhaustion_bound_from_env();
    if (opt.threads == 0) opt.threads = default_thread_count();
    Outcome o;
    if (command == "stat") o = cmd_stat(opt);
    else if (command == "poly") o = cmd_poly(opt, bound);
    else if (command == "avoid") o = cmd_avoid(opt, bound);
    else if (command == "classes") o = cmd_classes(opt, bound);
    else if (command == "verify") {
      o = cmd_verify(opt, bound);
      o.parameters = prepend("target", opt.target, o.parameters);
    }
    else if (command == "rsk") o = cmd_rsk(opt);
    else o = cmd_involution(opt);
    emit(out, format, command, o, elapsed());
    return o.exit_code;
  } catch (const ParseError& e) {
    emit_error(out, err, format, command, parameters, "parse", e.what(), elapsed());
  } catch (const InvalidPermutation& e) {
    emit_error(out, err, format, command, parameters, "invalid_permutation",
               std::string("invalid permutation: ") + e.what(), elapsed());
  } catch (const OverflowError& e) {
    emit_error(out, err, format, command, parameters, "overflow", e.what(), elapsed());
  } catch (const ResourceLimitError& e) {
    emit_error(out, err, format, command, parameters, "resource", e.what(), elapsed());
  } catch (const DomainError& e) {
    emit_error(out, err, format, command, parameters, "domain", e.what(), elapsed());
  } catch (const UsageError& e) {
    emit_error(out, err, format, command, parameters, "usage", e.what(), elapsed());
  }
  return kUsageError;
}

}  // namespace permstat::cli
