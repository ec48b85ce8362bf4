#include "cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "promisecc/automata.hpp"
#include "promisecc/bounds.hpp"
#include "promisecc/errors.hpp"
#include "promisecc/protocols.hpp"
#include "promisecc/query.hpp"

namespace promisecc::cli {
namespace {

using nlohmann::json;

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_epsilon(const std::string& text) {
  double eps = 0.0;
  if (text.find('/') != std::string::npos) {
    eps = Rational::parse(text).to_double();
  } else {
    try {
      std::size_t used = 0;
      eps = std::stod(text, &used);
      if (used != text.size()) throw ParameterError("");
    } catch (const std::exception&) {
      throw ParameterError("malformed epsilon '" + text + "'");
    }
  }
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("epsilon must lie in (0, 1)");
  return eps;
}

std::vector<int> resolve_ns(const RunConfig& c) {
  std::vector<int> ns = c.n;
  if (!c.n_range.empty()) {
    int a = 0, b = 0, step = 1;
    char sep1 = 0, sep2 = 0;
    std::istringstream in(c.n_range);
    in >> a >> sep1 >> b;
    if (!in || sep1 != ':') throw ParameterError("--n-range expects a:b or a:b:step");
    if (in >> sep2) {
      if (sep2 != ':' || !(in >> step) || step < 1) throw ParameterError("--n-range step must be positive");
    }
    for (int v = a; v <= b; v += step) ns.push_back(v);
  }
  return ns;
}

/// n/2 rounded up to an even number.
int default_k(Family family, int n) {
  int k = (n + 1) / 2;
  if (family == Family::kEqK && k % 2 != 0) ++k;
  return k;
}

PromiseParams make_params(Family family, int n, std::optional<int> k, const Rational& lambda,
                          DjPromise dj = DjPromise::kWeightEqualsK) {
  PromiseParams p;
  switch (family) {
    case Family::kEqK: p = PromiseParams::eqk(n, k.value_or(default_k(family, n))); break;
    case Family::kDjK: p = PromiseParams::djk(n, k.value_or(default_k(family, n)), dj); break;
    case Family::kDisjLambda: p = PromiseParams::disj(n, lambda); break;
    case Family::kDisjPrimeK: p = PromiseParams::disj_prime(n, k.value_or(default_k(family, n))); break;
  }
  p.validate();
  return p;
}

std::string param_text(const PromiseParams& p) {
  return p.family == Family::kDisjLambda ? p.lambda.to_string() : std::to_string(p.k);
}

void put_params(json& j, const PromiseParams& p) {
  j["problem"] = std::string(to_string(p.family));
  j["n"] = p.n;
  if (p.family == Family::kDisjLambda) {
    j["lambda"] = p.lambda.to_string();
  } else {
    j["k"] = p.k;
  }
}

std::string label_text(Label l) { return std::string(to_string(l)); }

// ---------------------------------------------------------------------------
// Protocol selection.

struct Runner {
  std::string protocol;
  std::function<ProtocolTranscript(const BitString&, const BitString&)> exact;
  std::function<ProtocolTranscript(const BitString&, const BitString&, Rng&)> sampled;
};

struct RunnerOptions {
  std::string protocol;
  double epsilon = 1.0 / 3.0;
  std::optional<int> sample_size;
  std::optional<int> rounds;
};

Runner make_runner(const PromiseParams& p, const RunnerOptions& o) {
  Runner r;
  const std::string& want = o.protocol;
  switch (p.family) {
    case Family::kEqK:
      if (want.empty() || want == "quantum") {
        auto proto = std::make_shared<EqkQuantumProtocol>(p.n, p.k);
        r.protocol = "quantum";
        r.exact = [proto](const BitString& x, const BitString& y) { return proto->run(x, y); };
        r.sampled = [proto](const BitString& x, const BitString& y, Rng& g) { return proto->run(x, y, g); };
        return r;
      }
      if (want == "deterministic") {
        const int k = p.k;
        r.protocol = want;
        r.exact = [k](const BitString& x, const BitString& y) { return run_eqk_deterministic(x, y, k); };
        r.sampled = [k](const BitString& x, const BitString& y, Rng&) { return run_eqk_deterministic(x, y, k); };
        return r;
      }
      break;
    case Family::kDisjLambda:
      if (want.empty() || want == "quantum") {
        auto proto = std::make_shared<DisjQuantumProtocol>(p.n);
        const auto policy = o.rounds ? RepetitionPolicy::fixed(p.lambda, *o.rounds)
                                     : RepetitionPolicy::quantum(p.lambda, o.epsilon);
        r.protocol = "quantum";
        r.exact = [proto, policy](const BitString& x, const BitString& y) { return proto->run(x, y, policy); };
        r.sampled = [proto, policy](const BitString& x, const BitString& y, Rng& g) {
          return proto->run(x, y, policy, g);
        };
        return r;
      }
      if (want == "probabilistic") {
        const auto policy = o.sample_size ? RepetitionPolicy::fixed(p.lambda, *o.sample_size)
                                          : RepetitionPolicy::probabilistic(p.lambda, o.epsilon);
        r.protocol = want;
        r.exact = [policy](const BitString& x, const BitString& y) { return run_disj_probabilistic(x, y, policy); };
        r.sampled = [policy](const BitString& x, const BitString& y, Rng& g) {
          return run_disj_probabilistic(x, y, policy, g);
        };
        return r;
      }
      break;
    case Family::kDisjPrimeK:
      if (want.empty() || want == "deterministic") {
        const int k = p.k;
        r.protocol = "deterministic";
        r.exact = [k](const BitString& x, const BitString& y) { return run_disj_prime_deterministic(x, y, k); };
        r.sampled = [k](const BitString& x, const BitString& y, Rng&) {
          return run_disj_prime_deterministic(x, y, k);
        };
        return r;
      }
      break;
    case Family::kDjK:
      throw ParameterError("dj is a query problem; use 'query dj'");
  }
  throw ParameterError("protocol '" + want + "' is not available for " + std::string(to_string(p.family)));
}

RunnerOptions runner_options(const RunConfig& c) {
  return {c.protocol, parse_epsilon(c.epsilon), c.sample_size, c.rounds};
}

void check_sample_config(const RunConfig& c) {
  if (c.mode != Mode::kSample) return;
  if (!c.seed) throw ParameterError("sample mode requires --seed");
  if (c.shots < 1) throw ParameterError("sample mode requires --shots >= 1");
}

BitString parse_bits(const std::string& text, const char* what) {
  if (text.empty()) throw InputError(std::string("missing --") + what);
  return BitString::parse(text);
}

int input_length(const RunConfig& c, const BitString& x) {
  const int n = static_cast<int>(x.size());
  if (!c.n.empty() && c.n.front() != n) {
    throw InputError("--n " + std::to_string(c.n.front()) + " does not match input length " + std::to_string(n));
  }
  return n;
}

double standard_error(double p, std::uint64_t shots) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
}

// Per-instance seeds for sampled sweeps; shot j of instance i uses
// Rng(instance_seed(seed, i), j).
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x9e3779b97f4a7c15ULL));
}

// ---------------------------------------------------------------------------
// protocol run / sweep

struct InstanceRow {
  PromiseParams params;
  BitString x;
  BitString y;
  Label label = Label::kOffPromise;
  ProtocolTranscript transcript;
  std::optional<SampleTally> tally;
};

const char* kRowHeader = "n,param,x,y,label,output,probability,qubit_cost,bit_cost";

void write_row_csv(std::ostream& out, const InstanceRow& r) {
  out << r.params.n << ',' << param_text(r.params) << ',' << r.x.to_string() << ',' << r.y.to_string() << ','
      << label_text(r.label) << ',' << r.transcript.output << ',' << fmt(r.transcript.output_probability) << ','
      << r.transcript.qubit_cost() << ',' << r.transcript.bit_cost();
  if (r.tally) out << ',' << r.tally->shots << ',' << r.tally->ones << ',' << fmt(r.tally->frequency());
  out << '\n';
}

json row_json(const InstanceRow& r, const RunConfig& c) {
  json j = to_json(r.transcript, c.with_states);
  put_params(j, r.params);
  j["x"] = r.x.to_string();
  j["y"] = r.y.to_string();
  j["label"] = label_text(r.label);
  j["mode"] = c.mode == Mode::kExact ? "exact" : "sample";
  if (r.tally) {
    j["shots"] = r.tally->shots;
    j["ones"] = r.tally->ones;
    j["frequency"] = r.tally->frequency();
    j["standard_error"] = standard_error(r.transcript.output_probability, r.tally->shots);
  }
  return j;
}

InstanceRow evaluate(const Runner& runner, const PromiseParams& params, const BitString& x, const BitString& y,
                     Label label, const RunConfig& c, std::uint64_t seed) {
  InstanceRow row{params, x, y, label, runner.exact(x, y), std::nullopt};
  if (c.mode == Mode::kSample) {
    row.tally = sample_outputs([&](Rng& g) { return runner.sampled(x, y, g); }, c.shots, seed);
  }
  return row;
}

Label check_promise(const PromiseParams& p, const BitString& x, const BitString* y, bool allow) {
  const Label label = y ? classify(p, x, *y) : classify(p, x);
  if (label == Label::kOffPromise && !allow) {
    throw PromiseViolation("input is outside the " + std::string(to_string(p.family)) +
                           " promise; pass --allow-off-promise to simulate anyway");
  }
  return label;
}

int protocol_run(const RunConfig& c, std::ostream& out) {
  const auto x = parse_bits(c.x, "x");
  const auto y = parse_bits(c.y, "y");
  const int n = input_length(c, x);
  if (y.size() != x.size()) throw DimensionError("x and y must have the same length");
  const auto params = make_params(parse_family(c.problem), n, c.k, Rational::parse(c.lambda));
  const Label label = check_promise(params, x, &y, c.allow_off_promise);
  const auto runner = make_runner(params, runner_options(c));
  const auto row = evaluate(runner, params, x, y, label, c, c.seed.value_or(0));
  if (c.format == Format::kCsv) {
    out << kRowHeader << (row.tally ? ",shots,ones,frequency" : "") << '\n';
    write_row_csv(out, row);
  } else {
    auto j = row_json(row, c);
    j["command"] = "protocol run";
    out << j.dump(2) << '\n';
  }
  return 0;
}

struct SourceInstance {
  PromiseParams params;
  BitString x;
  BitString y;
};

std::vector<SourceInstance> read_instances(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  std::vector<SourceInstance> items;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = json::parse(line);
      const auto family = parse_family(j.at("family").get<std::string>());
      const auto x = BitString::parse(j.at("x").get<std::string>());
      const int n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(x.size());
      if (n != static_cast<int>(x.size())) throw InputError("n does not match the length of x");
      std::optional<int> k;
      if (j.contains("k")) k = j.at("k").get<int>();
      Rational lambda(1, 4);
      if (j.contains("lambda")) lambda = Rational::parse(j.at("lambda").get<std::string>());
      const auto y = BitString::parse(j.at("y").get<std::string>());
      items.push_back({make_params(family, n, k, lambda), x, y});
    } catch (const json::exception& e) {
      throw InputError(path + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const Error& e) {
      throw InputError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return items;
}

int protocol_sweep(const RunConfig& c, std::ostream& out) {
  const auto family = parse_family(c.problem);
  if (c.summary) {
    SweepSpec spec{family, c.protocol, resolve_ns(c), c.k, Rational::parse(c.lambda), parse_epsilon(c.epsilon),
                   c.sample_size, c.rounds};
    out << sweep_report(spec);
    return 0;
  }

  std::vector<SourceInstance> items;
  if (!c.instances.empty()) {
    items = read_instances(c.instances);
  } else {
    const Rational lambda = Rational::parse(c.lambda);
    for (int n : resolve_ns(c)) {
      const auto params = make_params(family, n, c.k, lambda);
      if (c.exhaustive) {
        for (const auto& inst : enumerate_promise(params)) items.push_back({params, inst.x, *inst.y});
      } else {
        if (!c.seed) throw ParameterError("random sweeps need --seed (or pass --exhaustive)");
        if (c.count < 1) throw ParameterError("random sweeps need --count >= 1");
        Rng rng(*c.seed, static_cast<std::uint64_t>(n));
        for (const auto& inst : sample_promise(params, c.count, rng)) items.push_back({params, inst.x, *inst.y});
      }
    }
  }

  const auto options = runner_options(c);
  std::map<std::string, Runner> runners;
  if (c.format == Format::kCsv) out << kRowHeader << (c.mode == Mode::kSample ? ",shots,ones,frequency" : "") << '\n';
  std::uint64_t index = 0;
  for (const auto& item : items) {
    const std::string key = std::string(to_string(item.params.family)) + "/" + std::to_string(item.params.n) + "/" +
                            param_text(item.params);
    auto it = runners.find(key);
    if (it == runners.end()) it = runners.emplace(key, make_runner(item.params, options)).first;
    const Label label = check_promise(item.params, item.x, &item.y, c.allow_off_promise);
    const auto row = evaluate(it->second, item.params, item.x, item.y, label, c,
                              instance_seed(c.seed.value_or(0), index++));
    if (c.format == Format::kCsv) {
      write_row_csv(out, row);
    } else {
      auto j = row_json(row, c);
      j.erase("messages");
      out << j.dump() << '\n';
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// query dj

json query_json(const QueryRun& q) {
  return {{"algorithm", q.algorithm},
          {"queries_used", q.queries_used},
          {"queried_positions", q.queried_positions},
          {"output", q.output},
          {"probability", q.output_probability}};
}

QueryRun run_query(const std::string& algorithm, const BitString& x, int k, DjPromise promise) {
  if (algorithm == "quantum") return run_djk_quantum(x, k);
  if (algorithm == "deterministic") return run_djk_deterministic(x, k, promise);
  throw ParameterError("unknown query algorithm '" + algorithm + "'");
}

DjPromise parse_dj_promise(const std::string& text) {
  if (text == "eq") return DjPromise::kWeightEqualsK;
  if (text == "gt") return DjPromise::kWeightAboveK;
  throw ParameterError("--promise must be eq or gt");
}

int query_dj(const RunConfig& c, std::ostream& out) {
  const auto promise = parse_dj_promise(c.dj_promise);
  if (c.algorithm == "adversary") {
    if (c.n.empty() || !c.k) throw ParameterError("adversary needs --n and --k");
    const int n = c.n.front();
    make_params(Family::kDjK, n, c.k, Rational(1, 4), promise);
    const auto w = adversary_check(n, *c.k);
    json j{{"algorithm", "adversary"},
           {"n", n},
           {"k", *c.k},
           {"tree_depth", n - *c.k},
           {"queried_positions", w.queried_positions},
           {"zero_input", w.zero_input.to_string()},
           {"heavy_input", w.heavy_input.to_string()},
           {"verdict", w.verdict}};
    out << j.dump(2) << '\n';
    return 0;
  }

  if (c.exhaustive) {
    for (int n : resolve_ns(c)) {
      const auto params = make_params(Family::kDjK, n, c.k, Rational(1, 4), promise);
      if (c.format == Format::kCsv) out << "n,k,x,label,algorithm,output,probability,queries\n";
      for (const auto& inst : enumerate_promise(params)) {
        const auto q = run_query(c.algorithm, inst.x, params.k, promise);
        if (c.format == Format::kCsv) {
          out << n << ',' << params.k << ',' << inst.x.to_string() << ',' << label_text(inst.label) << ','
              << q.algorithm << ',' << q.output << ',' << fmt(q.output_probability) << ',' << q.queries_used << '\n';
        } else {
          auto j = query_json(q);
          j["n"] = n;
          j["k"] = params.k;
          j["x"] = inst.x.to_string();
          j["label"] = label_text(inst.label);
          out << j.dump() << '\n';
        }
      }
    }
    return 0;
  }

  const auto x = parse_bits(c.x, "x");
  const int n = input_length(c, x);
  const auto params = make_params(Family::kDjK, n, c.k, Rational(1, 4), promise);
  const Label label = check_promise(params, x, nullptr, c.allow_off_promise);
  const auto q = run_query(c.algorithm, x, params.k, promise);
  json j = query_json(q);
  put_params(j, params);
  j["x"] = x.to_string();
  j["label"] = label_text(label);
  if (c.mode == Mode::kSample) {
    std::uint64_t ones = 0;
    for (std::uint64_t s = 0; s < c.shots; ++s) {
      Rng rng(*c.seed, s);
      ones += static_cast<std::uint64_t>(c.algorithm == "quantum" ? run_djk_quantum(x, params.k, rng).output
                                                                   : q.output);
    }
    j["shots"] = c.shots;
    j["ones"] = ones;
    j["frequency"] = static_cast<double>(ones) / static_cast<double>(c.shots);
  }
  if (c.format == Format::kCsv) {
    out << "n,k,x,label,algorithm,output,probability,queries\n"
        << n << ',' << params.k << ',' << x.to_string() << ',' << label_text(label) << ',' << q.algorithm << ','
        << q.output << ',' << fmt(q.output_probability) << ',' << q.queries_used << '\n';
  } else {
    out << j.dump(2) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// automaton run / build

Mo1qcfa build_automaton(Family family, int n, std::optional<int> k) {
  if (family == Family::kEqK) return build_automaton_eqk(n, k.value_or(default_k(family, n)));
  if (family == Family::kDisjLambda) return build_automaton_disj(n);
  throw ParameterError("automata exist for eqk and disj only");
}

int automaton_build(const RunConfig& c, std::ostream& out) {
  if (c.n.empty()) throw ParameterError("missing --n");
  const auto family = parse_family(c.problem);
  const auto a = build_automaton(family, c.n.front(), c.k);
  out << to_json(a).dump(2) << '\n';
  return 0;
}

int automaton_run(const RunConfig& c, std::ostream& out) {
  const auto family = parse_family(c.problem);
  std::string word = c.word;
  int n = 0;
  std::optional<Label> label;
  if (word.empty()) {
    const auto x = parse_bits(c.x, "x");
    const auto y = parse_bits(c.y, "y");
    n = input_length(c, x);
    if (y.size() != x.size()) throw DimensionError("x and y must have the same length");
    word = x.to_string() + "#" + y.to_string();
    if (family == Family::kDisjLambda) word += "#" + x.to_string();
    const auto params = make_params(family, n, c.k, Rational::parse(c.lambda));
    label = check_promise(params, x, &y, c.allow_off_promise);
  } else if (!c.n.empty()) {
    n = c.n.front();
  } else {
    const auto len = static_cast<int>(word.size());
    n = family == Family::kDisjLambda ? (len - 2) / 3 : (len - 1) / 2;
    if (n < 1) throw InputError("cannot infer n from word '" + word + "'");
  }
  const auto a = build_automaton(family, n, c.k);
  const double p = simulate_mo1qcfa(a, word);
  json j{{"command", "automaton run"},
         {"problem", std::string(to_string(family))},
         {"n", n},
         {"word", word},
         {"classical_states", a.classical_state_count()},
         {"quantum_dimension", a.quantum_dimension()},
         {"probability", p},
         {"output", p >= 0.5 ? 1 : 0}};
  if (family == Family::kEqK) j["k"] = c.k.value_or(default_k(family, n));
  if (label) j["label"] = label_text(*label);
  if (c.mode == Mode::kSample) {
    std::uint64_t ones = 0;
    for (std::uint64_t s = 0; s < c.shots; ++s) {
      Rng rng(*c.seed, s);
      ones += rng.bernoulli(p) ? 1 : 0;
    }
    j["shots"] = c.shots;
    j["ones"] = ones;
    j["frequency"] = static_cast<double>(ones) / static_cast<double>(c.shots);
  }
  if (c.format == Format::kCsv) {
    out << "problem,n,word,probability\n" << to_string(family) << ',' << n << ',' << word << ',' << fmt(p) << '\n';
  } else {
    out << j.dump(2) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bounds, gen

int bounds_cmd(const std::string& which, const RunConfig& c, std::ostream& out) {
  if (c.n.empty()) throw ParameterError("missing --n");
  const int n = c.n.front();
  json j;
  if (which == "mnl") {
    if (!c.l) throw ParameterError("missing --l");
    j = to_json(max_family_avoiding(n, *c.l, c.node_budget));
  } else if (which == "eqk") {
    const int k = c.k.value_or(default_k(Family::kEqK, n));
    j = to_json(eqk_rectangle_bound(n, k, c.node_budget));
    j["k"] = k;
    j["l"] = (n - k) / 2;
  } else {
    const auto lambda = Rational::parse(c.lambda);
    DisjConflictRule rule;
    if (c.rule == "quarter") {
      rule = DisjConflictRule::kQuarterIntersection;
    } else if (c.rule == "rectangle") {
      rule = DisjConflictRule::kRectangle;
    } else {
      throw ParameterError("--rule must be quarter or rectangle");
    }
    j = to_json(disj_rectangle_bound(n, lambda, rule, c.node_budget));
    j["lambda"] = lambda.to_string();
    j["rule"] = c.rule;
    j["reference_threshold"] = disj_reference_threshold(n);
  }
  if (c.format == Format::kCsv) {
    const auto& fam = j.contains("family") ? j["family"] : j;
    out << "n,max_size,upper_bound,exact,c1_lower,bit_lower\n"
        << n << ',' << fam["max_size"].get<std::uint64_t>() << ',' << fam["upper_bound"].get<std::uint64_t>() << ','
        << (fam["exact"].get<bool>() ? 1 : 0) << ',' << j.value("c1_lower", std::uint64_t{0}) << ','
        << j.value("bit_lower", 0) << '\n';
  } else {
    out << j.dump(2) << '\n';
  }
  return 0;
}

int gen_instances(const RunConfig& c, std::ostream& out) {
  const auto family = parse_family(c.problem);
  const auto promise = parse_dj_promise(c.dj_promise);
  const Rational lambda = Rational::parse(c.lambda);
  for (int n : resolve_ns(c)) {
    const auto params = make_params(family, n, c.k, lambda, promise);
    std::vector<PromiseInstance> batch;
    if (c.exhaustive) {
      for (const auto& inst : enumerate_promise(params)) batch.push_back(inst);
    } else {
      if (!c.seed) throw ParameterError("gen instances needs --seed (or --exhaustive)");
      if (c.count < 1) throw ParameterError("gen instances needs --count >= 1");
      Rng rng(*c.seed, static_cast<std::uint64_t>(n));
      batch = sample_promise(params, c.count, rng);
    }
    for (const auto& inst : batch) {
      json j;
      j["family"] = std::string(to_string(params.family));
      j["n"] = n;
      if (params.family == Family::kDisjLambda) {
        j["lambda"] = params.lambda.to_string();
      } else {
        j["k"] = params.k;
      }
      j["x"] = inst.x.to_string();
      if (inst.y) j["y"] = inst.y->to_string();
      j["label"] = label_text(inst.label);
      out << j.dump() << '\n';
    }
  }
  return 0;
}

}  // namespace

std::string sweep_report(const SweepSpec& spec) {
  std::ostringstream out;
  out << kSweepHeader << '\n';
  const RunnerOptions options{spec.protocol, spec.epsilon, spec.sample_size, spec.rounds};
  for (int n : spec.n) {
    const auto params = make_params(spec.family, n, spec.k, spec.lambda);
    const auto runner = make_runner(params, options);
    std::uint64_t count = 0;
    double min_yes = std::numeric_limits<double>::quiet_NaN();
    double max_yes = std::numeric_limits<double>::quiet_NaN();
    double max_no = std::numeric_limits<double>::quiet_NaN();
    int qubits = 0;
    int bits = 0;
    for (const auto& inst : enumerate_promise(params)) {
      const auto t = runner.exact(inst.x, *inst.y);
      const double p = t.output_probability;
      ++count;
      if (inst.label == Label::kYes) {
        min_yes = std::isnan(min_yes) ? p : std::min(min_yes, p);
        max_yes = std::isnan(max_yes) ? p : std::max(max_yes, p);
      } else {
        max_no = std::isnan(max_no) ? p : std::max(max_no, p);
      }
      qubits = std::max(qubits, t.qubit_cost());
      bits = std::max(bits, t.bit_cost());
    }
    out << n << ',' << param_text(params) << ',' << count << ',' << fmt(min_yes) << ',' << fmt(max_yes) << ','
        << fmt(max_no) << ',' << qubits << ',' << bits << '\n';
  }
  return out.str();
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    check_sample_config(c);
    if (c.command == "protocol run") return protocol_run(c, out);
    if (c.command == "protocol sweep") return protocol_sweep(c, out);
    if (c.command == "query dj") return query_dj(c, out);
    if (c.command == "automaton run") return automaton_run(c, out);
    if (c.command == "automaton build") return automaton_build(c, out);
    if (c.command == "bounds mnl") return bounds_cmd("mnl", c, out);
    if (c.command == "bounds eqk") return bounds_cmd("eqk", c, out);
    if (c.command == "bounds disj") return bounds_cmd("disj", c, out);
    if (c.command == "gen instances") return gen_instances(c, out);
    err << "error: unknown command '" << c.command << "'\n";
    return 1;
  } catch (const PromiseViolation& e) {
    err << "promise violation: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact simulation of promise-problem communication protocols", "promise-cc"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::map<std::string, Mode> modes{{"exact", Mode::kExact}, {"sample", Mode::kSample}};
  std::map<std::string, Format> formats{{"json", Format::kJson}, {"csv", Format::kCsv}};
  std::vector<std::pair<CLI::App*, std::string>> leaves;
  std::vector<CLI::Option*> seed_options;

  auto common = [&](CLI::App* sub, const std::string& name) {
    leaves.emplace_back(sub, name);
    sub->add_option("--problem", c.problem, "eqk | dj | disj | disjp");
    sub->add_option("--n", c.n, "input length (comma list for sweeps)")->delimiter(',');
    sub->add_option("--k", c.k, "promise parameter k");
    sub->add_option("--lambda", c.lambda, "disjointness gap as p/q")->capture_default_str();
    sub->add_option("--format", c.format, "json | csv")->transform(CLI::CheckedTransformer(formats));
    seed_options.push_back(sub->add_option("--seed", seed, "RNG seed"));
  };
  auto run_flags = [&](CLI::App* sub) {
    sub->add_option("--x", c.x, "Alice's input");
    sub->add_option("--y", c.y, "Bob's input");
    sub->add_option("--mode", c.mode, "exact | sample")->transform(CLI::CheckedTransformer(modes));
    sub->add_option("--shots", c.shots, "samples in sample mode");
    sub->add_flag("--allow-off-promise", c.allow_off_promise, "simulate inputs outside the promise");
  };
  auto protocol_flags = [&](CLI::App* sub) {
    sub->add_option("--protocol", c.protocol, "quantum | probabilistic | deterministic");
    sub->add_option("--epsilon", c.epsilon, "target error, p/q or decimal")->capture_default_str();
    sub->add_option("--sample-size", c.sample_size, "positions sent by the probabilistic protocol");
    sub->add_option("--rounds", c.rounds, "fixed number of quantum rounds");
    sub->add_flag("--states", c.with_states, "include quantum message states in JSON");
  };

  auto* protocol = app.add_subcommand("protocol", "run two-party protocols");
  protocol->require_subcommand(1);
  auto* prun = protocol->add_subcommand("run", "run one input pair");
  common(prun, "protocol run");
  run_flags(prun);
  protocol_flags(prun);
  auto* psweep = protocol->add_subcommand("sweep", "run many input pairs");
  common(psweep, "protocol sweep");
  run_flags(psweep);
  protocol_flags(psweep);
  psweep->add_option("--n-range", c.n_range, "a:b or a:b:step");
  psweep->add_flag("--exhaustive", c.exhaustive, "every promise pair");
  psweep->add_flag("--summary", c.summary, "one CSV row per n");
  psweep->add_option("--instances", c.instances, "JSON-lines instance file");
  psweep->add_option("--count", c.count, "random promise pairs per n");

  auto* query = app.add_subcommand("query", "query algorithms");
  query->require_subcommand(1);
  auto* qdj = query->add_subcommand("dj", "Deutsch-Jozsa with weight promise");
  common(qdj, "query dj");
  run_flags(qdj);
  qdj->add_option("--algorithm", c.algorithm, "quantum | deterministic | adversary")->capture_default_str();
  qdj->add_option("--promise", c.dj_promise, "eq (W in {0,k}) | gt (W = 0 or W > k)")->capture_default_str();
  qdj->add_flag("--exhaustive", c.exhaustive, "every promise input");

  auto* automaton = app.add_subcommand("automaton", "measure-once quantum-classical automata");
  automaton->require_subcommand(1);
  auto* arun = automaton->add_subcommand("run", "acceptance probability of a word");
  common(arun, "automaton run");
  run_flags(arun);
  arun->add_option("--word", c.word, "tape contents without end-markers");
  auto* abuild = automaton->add_subcommand("build", "dump the automaton");
  common(abuild, "automaton build");

  auto* bounds = app.add_subcommand("bounds", "rectangle lower bounds");
  bounds->require_subcommand(1);
  auto budget = [&](CLI::App* sub) {
    sub->add_option("--node-budget", c.node_budget, "search nodes before giving up exactness (0 = no limit)")
        ->capture_default_str();
  };
  auto* bmnl = bounds->add_subcommand("mnl", "largest family avoiding intersection size l");
  common(bmnl, "bounds mnl");
  budget(bmnl);
  bmnl->add_option("--l", c.l, "forbidden intersection size");
  auto* beqk = bounds->add_subcommand("eqk", "equality rectangle bound");
  common(beqk, "bounds eqk");
  budget(beqk);
  auto* bdisj = bounds->add_subcommand("disj", "disjointness rectangle bound");
  common(bdisj, "bounds disj");
  budget(bdisj);
  bdisj->add_option("--rule", c.rule, "quarter | rectangle")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "generate inputs");
  gen->require_subcommand(1);
  auto* ginst = gen->add_subcommand("instances", "JSON-lines promise instances");
  common(ginst, "gen instances");
  ginst->add_option("--n-range", c.n_range, "a:b or a:b:step");
  ginst->add_option("--count", c.count, "instances per n");
  ginst->add_flag("--exhaustive", c.exhaustive, "every promise input");
  ginst->add_option("--promise", c.dj_promise, "dj promise: eq | gt")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  for (auto* opt : seed_options) {
    if (opt->count() > 0) c.seed = seed;
  }
  for (const auto& [sub, name] : leaves) {
    if (sub->parsed()) c.command = name;
  }
  return dispatch(c, out, err);
}

}  // namespace promisecc::cli
