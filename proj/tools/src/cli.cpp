#include "levy_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "levy/levy.hpp"

namespace levy::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Error bound target for `slope --cf` without --depth.
constexpr double kDefaultSlopeBound = 1e-4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string real_text(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

Json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(real_text(x).c_str(), nullptr);
}

Json real(const std::optional<double>& x) { return x ? real(*x) : Json(nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string join_digits(const std::vector<std::uint64_t>& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(digits[i]);
  }
  return out;
}

struct Record {
  std::string command;
  std::vector<std::string> argv;
  std::optional<Alphabet> alphabet;
  Json input = Json::object();
  Json result = Json::object();
  Json error_bound = nullptr;
  std::optional<double> heuristic_error;
  std::string method;
  std::vector<std::string> warnings;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

Json exact_to_rounding() { return "exact-to-rounding"; }

void emit(const Record& rec, const std::string& format, double wall_time, std::ostream& out,
          std::ostream& err) {
  for (const auto& w : rec.warnings) err << "levy: warning: " << w << '\n';
  if (format == "csv") {
    for (std::size_t i = 0; i < rec.csv_header.size(); ++i) {
      out << (i > 0 ? "," : "") << rec.csv_header[i];
    }
    out << '\n';
    for (const auto& row : rec.csv_rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i > 0 ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
    return;
  }
  Json doc;
  doc["command"] = rec.command;
  doc["argv"] = rec.argv;
  if (rec.alphabet) {
    doc["alphabet"] = {{"a", rec.alphabet->a}, {"b", rec.alphabet->b}};
  } else {
    doc["alphabet"] = nullptr;
  }
  doc["input"] = rec.input;
  doc["result"] = rec.result;
  doc["error_bound"] = rec.error_bound;
  doc["heuristic_error"] = real(rec.heuristic_error);
  doc["method"] = rec.method;
  doc["warnings"] = rec.warnings;
  doc["wall_time_s"] = real(wall_time);
  out << doc.dump(2) << '\n';
}

struct AlphabetFlags {
  std::optional<Letter> a;
  std::optional<Letter> b;

  std::optional<Alphabet> get() const {
    if (!a && !b) return std::nullopt;
    if (!a || !b) throw UsageError("-a and -b must be given together");
    try {
      return Alphabet(*a, *b);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  Alphabet require() const {
    auto alphabet = get();
    if (!alphabet) throw UsageError("alphabet flags -a and -b are required");
    return *alphabet;
  }
};

void add_alphabet(CLI::App* sub, AlphabetFlags& flags, bool required) {
  auto* a = sub->add_option("-a", flags.a, "Smaller letter a >= 1");
  auto* b = sub->add_option("-b", flags.b, "Larger letter b > a");
  if (required) {
    a->required();
    b->required();
  }
}

Word parse_word_arg(const std::string& text, const std::string& flag) {
  try {
    return parse_word(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Fraction parse_fraction(const std::string& text, std::vector<std::string>& warnings) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw UsageError("slope must be written p/q, got '" + text + "'");
  std::int64_t p = 0;
  std::int64_t q = 0;
  const auto parse = [&](std::string_view s, std::int64_t& v) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw UsageError("cannot parse slope '" + text + "'");
    }
  };
  parse(std::string_view(text).substr(0, slash), p);
  parse(std::string_view(text).substr(slash + 1), q);
  if (q == 0) throw UsageError("slope denominator must be nonzero");
  if (q < 0 || p < 0 || p > q) throw UsageError("slope must lie in [0,1], got " + text);
  const std::int64_t g = std::gcd(p, q);
  if (g > 1) {
    warnings.push_back("reduced " + text + " to " + std::to_string(p / g) + "/" +
                       std::to_string(q / g));
  }
  return Fraction(p, q);
}

std::vector<std::uint64_t> parse_digits(const std::string& text, bool& open_ended) {
  std::vector<std::uint64_t> digits;
  open_ended = false;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token == "...") {
      if (comma != std::string_view::npos) throw UsageError("'...' must end the digit list");
      open_ended = true;
      break;
    }
    std::uint64_t d = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), d);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || d == 0) {
      throw UsageError("slope digits must be positive integers, got '" + std::string(token) + "'");
    }
    digits.push_back(d);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (digits.empty()) throw UsageError("empty digit list");
  return digits;
}

// "--cf 1,2 --repeat 3" is [1,2,3,3,...]; "--cf 1,2,..." repeats 1,2.
SlopeCF parse_slope_cf(const std::string& cf, const std::string& repeat) {
  bool open_ended = false;
  auto digits = parse_digits(cf, open_ended);
  if (open_ended && !repeat.empty()) throw UsageError("use either '...' or --repeat, not both");
  if (open_ended) return SlopeCF({}, std::move(digits));
  if (!repeat.empty()) {
    bool repeat_open = false;
    auto period = parse_digits(repeat, repeat_open);
    if (repeat_open) throw UsageError("--repeat takes a plain digit list");
    return SlopeCF(std::move(digits), std::move(period));
  }
  return SlopeCF(std::move(digits));
}

Json slope_cf_json(const SlopeCF& cf) {
  return {{"prefix", cf.prefix()}, {"period", cf.period()}};
}

// ---------------------------------------------------------------- quad

struct QuadArgs {
  std::string period;
  std::string preperiod;
  AlphabetFlags alphabet;
};

Record cmd_quad(const QuadArgs& args) {
  Record rec;
  rec.command = "quad";
  rec.alphabet = args.alphabet.get();
  const Word period = parse_word_arg(args.period, "--period");
  const Word preperiod =
      args.preperiod.empty() ? Word{} : parse_word_arg(args.preperiod, "--preperiod");
  if (period.empty()) throw UsageError("--period must be nonempty");
  const QuadPeriod qp(period, preperiod);
  const LevyResult r = levy_quadratic(qp);
  const MuMean mu = mu_mean(period);

  rec.input = {{"period", format_word(period)}, {"preperiod", format_word(preperiod)}};
  rec.result = {{"trace", qp.trace().get_str()},
                {"s", qp.length()},
                {"value", real(r.value)},
                {"mu", real(mu.value)},
                {"mu_root", real(mu.root_found)}};
  rec.error_bound = exact_to_rounding();
  rec.method = std::string(to_string(r.method));
  rec.csv_header = {"period", "preperiod", "s", "trace", "value", "mu", "error_bound", "method"};
  rec.csv_rows.push_back({format_word(period), format_word(preperiod),
                          std::to_string(qp.length()), qp.trace().get_str(), real_text(r.value),
                          real_text(mu.value), "exact-to-rounding", rec.method});
  return rec;
}

// --------------------------------------------------------------- slope

struct SlopeArgs {
  std::string fraction;
  std::string cf;
  std::string repeat;
  std::optional<std::size_t> depth;
  AlphabetFlags alphabet;
};

std::size_t default_depth(const SlopeCF& cf, const Alphabet& alphabet) {
  const double g = tail_gap(alphabet);
  for (std::size_t k = 1;; ++k) {
    if (5.0 * g / static_cast<double>(cf.convergent(k).q()) < kDefaultSlopeBound) return k;
  }
}

Record cmd_slope(const SlopeArgs& args) {
  Record rec;
  rec.command = "slope";
  const Alphabet alphabet = args.alphabet.require();
  rec.alphabet = alphabet;
  if (args.fraction.empty() == args.cf.empty()) {
    throw UsageError("give exactly one of a p/q slope or --cf digits");
  }
  if (args.cf.empty() && (!args.repeat.empty() || args.depth)) {
    throw UsageError("--repeat and --depth need --cf");
  }
  rec.csv_header = {"slope", "depth", "value", "x", "trace", "error_bound", "method"};

  auto rational = [&](const Fraction& pq) {
    const SlopePoint sp = slope_point(pq, alphabet);
    rec.result = {{"fraction", pq.to_string()}, {"p", pq.p()},
                  {"q", pq.q()},                {"value", real(sp.f_value)},
                  {"x", real(sp.x_value)},      {"trace", sp.trace.get_str()}};
    rec.error_bound = exact_to_rounding();
    rec.method = std::string(to_string(Method::rational_slope));
    rec.csv_rows.push_back({pq.to_string(), "", real_text(sp.f_value), real_text(sp.x_value),
                            sp.trace.get_str(), "exact-to-rounding", rec.method});
  };

  if (!args.fraction.empty()) {
    const Fraction pq = parse_fraction(args.fraction, rec.warnings);
    rec.input = {{"slope", args.fraction}};
    rational(pq);
    return rec;
  }

  const SlopeCF cf = parse_slope_cf(args.cf, args.repeat);
  rec.input = {{"cf", slope_cf_json(cf)}};
  if (args.depth) rec.input["depth"] = *args.depth;
  if (cf.is_finite() && !args.depth) {
    rational(cf.convergent(cf.max_index()));
    return rec;
  }
  const std::size_t k = args.depth ? *args.depth : default_depth(cf, alphabet);
  if (k < 1) throw UsageError("--depth must be >= 1");
  const LevyResult r = f_irrational(cf, alphabet, k);
  const Fraction c = cf.convergent(k);
  const SlopePoint sp = slope_point(c, alphabet);
  rec.result = {{"fraction", c.to_string()}, {"p", c.p()},
                {"q", c.q()},                {"depth", k},
                {"value", real(r.value)},    {"x", real(sp.x_value)},
                {"trace", sp.trace.get_str()}};
  rec.error_bound = real(*r.error_bound);
  rec.method = std::string(to_string(r.method));
  rec.csv_rows.push_back({c.to_string(), std::to_string(k), real_text(r.value),
                          real_text(sp.x_value), sp.trace.get_str(), real_text(*r.error_bound),
                          rec.method});
  return rec;
}

// --------------------------------------------------------------- curve

struct CurveArgs {
  std::int64_t qmax = 0;
  AlphabetFlags alphabet;
};

unsigned curve_threads(std::vector<std::string>& warnings) {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LEVY_THREADS"); env != nullptr && *env != '\0') {
    unsigned cap = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec != std::errc{} || ptr != s.data() + s.size() || cap == 0) {
      warnings.push_back("ignoring invalid LEVY_THREADS='" + std::string(s) + "'");
    } else {
      threads = std::min(threads, cap);
    }
  }
  return threads;
}

Record cmd_curve(const CurveArgs& args) {
  Record rec;
  rec.command = "curve";
  const Alphabet alphabet = args.alphabet.require();
  rec.alphabet = alphabet;
  if (args.qmax < 1) throw UsageError("--qmax must be >= 1");
  rec.input = {{"qmax", args.qmax}};

  const std::vector<Fraction> fractions = farey_sequence(args.qmax);
  std::vector<std::optional<SlopePoint>> points(fractions.size());
  const unsigned threads =
      std::min<unsigned>(curve_threads(rec.warnings), static_cast<unsigned>(fractions.size()));
  {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> failures(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < fractions.size(); i += threads) {
            points[i] = slope_point(fractions[i], alphabet);
          }
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i]->f_value > points[i - 1]->f_value) ||
        !(points[i]->x_value > points[i - 1]->x_value)) {
      throw std::runtime_error("f is not strictly increasing between " +
                               fractions[i - 1].to_string() + " and " + fractions[i].to_string());
    }
  }

  Json rows = Json::array();
  rec.csv_header = {"p", "q", "f", "x", "trace"};
  for (const auto& sp : points) {
    rows.push_back({{"fraction", sp->fraction.to_string()},
                    {"p", sp->fraction.p()},
                    {"q", sp->fraction.q()},
                    {"f", real(sp->f_value)},
                    {"x", real(sp->x_value)},
                    {"trace", sp->trace.get_str()}});
    rec.csv_rows.push_back({std::to_string(sp->fraction.p()), std::to_string(sp->fraction.q()),
                            real_text(sp->f_value), real_text(sp->x_value),
                            sp->trace.get_str()});
  }
  rec.result = {{"count", points.size()}, {"rows", std::move(rows)}};
  rec.error_bound = exact_to_rounding();
  rec.method = std::string(to_string(Method::rational_slope));
  return rec;
}

// -------------------------------------------------------------- invert

struct InvertArgs {
  double target = 0.0;
  double tol = 1e-8;
  std::size_t max_steps = kInvertMaxSteps;
  AlphabetFlags alphabet;
};

Record cmd_invert(const InvertArgs& args) {
  Record rec;
  rec.command = "invert";
  const Alphabet alphabet = args.alphabet.require();
  rec.alphabet = alphabet;
  if (!(args.tol > 0.0)) throw UsageError("--tol must be positive");
  rec.input = {{"target", real(args.target)}, {"tol", real(args.tol)},
               {"max_steps", args.max_steps}};
  const Inversion inv = invert_f(args.target, alphabet, args.tol, args.max_steps);
  rec.result = {{"lower", inv.lower.to_string()},
                {"upper", inv.upper.to_string()},
                {"slope", inv.slope.to_string()},
                {"f_lower", real(inv.f_lower)},
                {"f_upper", real(inv.f_upper)},
                {"f_slope", real(inv.f_slope)},
                {"width", real(inv.width)},
                {"cf_digits", inv.cf_digits},
                {"steps", inv.steps},
                {"exact_hit", inv.exact_hit}};
  rec.error_bound = real(inv.width);
  rec.method = std::string(to_string(Method::rational_slope));
  rec.csv_header = {"target", "lower", "upper", "slope", "cf_digits", "f_lower",
                    "f_upper", "width", "steps", "exact_hit"};
  rec.csv_rows.push_back({real_text(args.target), inv.lower.to_string(), inv.upper.to_string(),
                          inv.slope.to_string(), join_digits(inv.cf_digits),
                          real_text(inv.f_lower), real_text(inv.f_upper), real_text(inv.width),
                          std::to_string(inv.steps), inv.exact_hit ? "true" : "false"});
  return rec;
}

// ------------------------------------------------------------------ xi

struct XiArgs {
  unsigned mmax = 20;
  AlphabetFlags alphabet;
};

Record cmd_xi(const XiArgs& args) {
  Record rec;
  rec.command = "xi";
  const Alphabet alphabet = args.alphabet.require();
  rec.alphabet = alphabet;
  if (args.mmax < 4) throw UsageError("--mmax must be >= 4");
  rec.input = {{"mmax", args.mmax}};
  const XiOscillation xi = xi_oscillation(alphabet, args.mmax);

  Json samples = Json::array();
  rec.csv_header = {"m", "u"};
  for (const auto& s : xi.samples) {
    samples.push_back({{"m", s.m}, {"u", real(s.u)}});
    rec.csv_rows.push_back({std::to_string(s.m), real_text(s.u)});
  }
  rec.result = {{"samples", std::move(samples)},
                {"even_point", real(xi.even_point)},
                {"odd_point", real(xi.odd_point)},
                {"gap", real(xi.gap())},
                {"noise_floor", real(xi.noise_floor)},
                {"derived_prediction",
                 {{"even", real(xi.predicted_even)},
                  {"odd", real(xi.predicted_odd)},
                  {"gap", real(xi.predicted_gap())}}},
                {"verdict", xi.oscillates() ? "no Lévy constant" : "inconclusive"}};
  rec.error_bound = "heuristic";
  rec.heuristic_error = xi.noise_floor;
  rec.method = std::string(to_string(Method::empirical_logq));
  return rec;
}

// ------------------------------------------------------------ estimate

struct EstimateArgs {
  std::string word_file;
  std::string slope;
  std::string repeat;
  std::string periodic;
  std::string preperiod;
  std::size_t n = 0;
  std::string method;
  std::size_t tail_depth = kDefaultTailDepth;
  AlphabetFlags alphabet;
};

Word read_word_file(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot open word file '" + path + "'");
    in = &file;
  }
  Word all;
  try {
    for (const Word& w : read_words(*in)) all.append(w);
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
  return all;
}

Record cmd_estimate(const EstimateArgs& args) {
  Record rec;
  rec.command = "estimate";
  const int sources = !args.word_file.empty() + !args.slope.empty() + !args.periodic.empty();
  if (sources != 1) throw UsageError("give exactly one of --word, --slope, --periodic");
  if (args.n < 1) throw UsageError("-n must be >= 1");
  if (!args.repeat.empty() && args.slope.empty()) throw UsageError("--repeat needs --slope");
  if (!args.preperiod.empty() && args.periodic.empty()) {
    throw UsageError("--preperiod needs --periodic");
  }
  std::string method = args.method;
  if (method.empty()) method = args.periodic.empty() ? "logq" : "difference";
  if (method != "logq" && method != "birkhoff" && method != "difference") {
    throw UsageError("--method must be logq, birkhoff or difference");
  }
  if (method == "difference" && args.periodic.empty()) {
    throw UsageError("--method difference needs --periodic");
  }
  const Estimator estimator = method == "birkhoff" ? Estimator::birkhoff : Estimator::logq;
  const std::size_t needed = estimator == Estimator::birkhoff ? args.n + args.tail_depth - 1
                                                              : args.n;
  rec.input = {{"n", args.n}, {"estimator", method}};
  if (estimator == Estimator::birkhoff) rec.input["tail_depth"] = args.tail_depth;

  LevyResult r;
  if (!args.periodic.empty()) {
    rec.alphabet = args.alphabet.get();
    const Word period = parse_word_arg(args.periodic, "--periodic");
    const Word preperiod =
        args.preperiod.empty() ? Word{} : parse_word_arg(args.preperiod, "--preperiod");
    if (period.empty()) throw UsageError("--periodic must be nonempty");
    rec.input["periodic"] = format_word(period);
    rec.input["preperiod"] = format_word(preperiod);
    r = method == "difference"
            ? levy_empirical_periodic(period, args.n, preperiod)
            : levy_empirical(periodic_source(period, preperiod), args.n, estimator,
                             args.tail_depth);
  } else if (!args.slope.empty()) {
    const Alphabet alphabet = args.alphabet.require();
    rec.alphabet = alphabet;
    const SlopeCF cf = parse_slope_cf(args.slope, args.repeat);
    rec.input["slope"] = slope_cf_json(cf);
    r = levy_empirical(word_source(sturmian_prefix(cf, alphabet, needed)), args.n, estimator,
                       args.tail_depth);
  } else {
    rec.alphabet = args.alphabet.get();
    rec.input["word"] = args.word_file;
    Word letters = read_word_file(args.word_file);
    rec.input["letters_available"] = letters.size();
    r = levy_empirical(word_source(std::move(letters)), args.n, estimator, args.tail_depth);
  }

  rec.result = {{"value", real(r.value)}};
  rec.error_bound = "heuristic";
  rec.heuristic_error = r.heuristic_error;
  rec.method = std::string(to_string(r.method));
  rec.csv_header = {"n", "estimator", "value", "heuristic_error", "method"};
  rec.csv_rows.push_back({std::to_string(args.n), method, real_text(r.value),
                          r.heuristic_error ? real_text(*r.heuristic_error) : "", rec.method});
  return rec;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::out_of_range:
      return kOutOfRange;
    case ErrorCode::truncated_stream:
    case ErrorCode::insufficient_digits:
      return kInsufficientInput;
    case ErrorCode::precision:
    case ErrorCode::no_convergence:
      return kFailure;
    default:
      return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  CLI::App app{"Levy constants of periodic and Sturmian continued fractions", "levy"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  QuadArgs quad;
  auto* quad_cmd = app.add_subcommand("quad", "Levy constant of an eventually periodic expansion");
  quad_cmd->add_option("--period", quad.period, "Period letters, comma separated")->required();
  quad_cmd->add_option("--preperiod", quad.preperiod, "Preperiod letters, comma separated");
  add_alphabet(quad_cmd, quad.alphabet, false);

  SlopeArgs slope;
  auto* slope_cmd = app.add_subcommand("slope", "Slope function f at a rational or CF slope");
  slope_cmd->add_option("fraction", slope.fraction, "Rational slope p/q in [0,1]");
  slope_cmd->add_option("--cf", slope.cf, "Slope digits d_1,d_2,... (trailing ... repeats them)");
  slope_cmd->add_option("--repeat", slope.repeat, "Digits repeated after the --cf prefix");
  slope_cmd->add_option("--depth", slope.depth, "Convergent index k");
  add_alphabet(slope_cmd, slope.alphabet, true);

  CurveArgs curve;
  auto* curve_cmd = app.add_subcommand("curve", "f and x over the Farey sequence F_qmax");
  curve_cmd->add_option("--qmax", curve.qmax, "Largest denominator")->required();
  add_alphabet(curve_cmd, curve.alphabet, true);

  InvertArgs invert;
  auto* invert_cmd = app.add_subcommand("invert", "Find a slope with f(slope) = target");
  invert_cmd->add_option("target", invert.target, "Target Levy value")->required();
  invert_cmd->add_option("--tol", invert.tol, "Enclosure width")->capture_default_str();
  invert_cmd->add_option("--max-steps", invert.max_steps, "Mediant evaluation cap")
      ->capture_default_str();
  add_alphabet(invert_cmd, invert.alphabet, true);

  XiArgs xi;
  auto* xi_cmd = app.add_subcommand("xi", "Oscillation of log Q_{2^m}/2^m for xi_{a,b}");
  xi_cmd->add_option("--mmax", xi.mmax, "Largest m")->capture_default_str();
  add_alphabet(xi_cmd, xi.alphabet, true);

  EstimateArgs estimate;
  auto* estimate_cmd = app.add_subcommand("estimate", "Empirical Levy estimate");
  estimate_cmd->add_option("--word", estimate.word_file, "Words file, or - for stdin");
  estimate_cmd->add_option("--slope", estimate.slope, "Sturmian slope digits d_1,d_2,...");
  estimate_cmd->add_option("--repeat", estimate.repeat, "Digits repeated after the --slope prefix");
  estimate_cmd->add_option("--periodic", estimate.periodic, "Period letters, comma separated");
  estimate_cmd->add_option("--preperiod", estimate.preperiod, "Preperiod for --periodic");
  estimate_cmd->add_option("-n", estimate.n, "Number of partial quotients")->required();
  estimate_cmd->add_option("--method", estimate.method, "logq, birkhoff or difference");
  estimate_cmd->add_option("--tail-depth", estimate.tail_depth, "Birkhoff tail truncation")
      ->capture_default_str();
  add_alphabet(estimate_cmd, estimate.alphabet, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    Record rec;
    if (quad_cmd->parsed()) rec = cmd_quad(quad);
    if (slope_cmd->parsed()) rec = cmd_slope(slope);
    if (curve_cmd->parsed()) rec = cmd_curve(curve);
    if (invert_cmd->parsed()) rec = cmd_invert(invert);
    if (xi_cmd->parsed()) rec = cmd_xi(xi);
    if (estimate_cmd->parsed()) rec = cmd_estimate(estimate);
    rec.argv = args;
    const double wall = std::chrono::duration<double>(Clock::now() - start).count();
    emit(rec, format, wall, out, err);
    return kSuccess;
  } catch (const UsageError& e) {
    err << "levy: " << e.what() << '\n';
    return kUsage;
  } catch (const OutOfRangeError& e) {
    err << "levy: " << e.what() << "; valid interval [" << real_text(e.lower()) << ", "
        << real_text(e.upper()) << "]\n";
    return kOutOfRange;
  } catch (const Error& e) {
    err << "levy: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "levy: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace levy::cli
