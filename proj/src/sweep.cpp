#include "gnkb/sweep.hpp"

#include <atomic>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "gnkb/bounds.hpp"
#include "gnkb/errors.hpp"

namespace gnkb {

namespace {

std::string trim(const std::string& s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::string spaced = value;
  for (char& c : spaced)
    if (c == ',') c = ' ';
  std::istringstream ss(spaced);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

int parse_int_field(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

SweepRow evaluate(int n, int k, int b, Method method) {
  SweepRow row{n, k, b, method, std::nullopt, {}};
  std::string beta, q, r, which, bandwidth, ratio, c1, c2, c3, lower, upper, error;
  try {
    Params p{n, k, b};
    p.validate();
    Rational bn = make_rational(b, n);
    beta = to_string(bn);
    if (2 * b <= n) {
      auto dec = classify_case(bn);
      q = std::to_string(dec.q);
      r = to_string(dec.r);
      which = to_string(dec.which);
      if (k >= 2) {
        auto c = coefficients(bn, k);
        c1 = to_decimal(c.c1);
        c2 = to_decimal(c.c2);
        c3 = to_decimal(c.c3);
        auto [lo, hi] = theorem2_interval(bn, k);
        lower = to_decimal(lo);
        upper = to_decimal(hi);
      }
    }
    auto w = bandwidth_of_numbering(make_numbering(p, method));
    row.bandwidth = w;
    bandwidth = std::to_string(w);
    ratio = to_decimal(make_rational(w, 1) / pow(make_rational(n), static_cast<unsigned>(k)));
  } catch (const std::exception& e) {
    error = e.what();
  }
  row.fields = {std::to_string(n), std::to_string(k), std::to_string(b), beta, q, r, which, to_string(method),
                bandwidth, ratio, c1, c2, c3, lower, upper, error};
  return row;
}

}  // namespace

void SweepConfig::validate() const {
  if (k.empty()) throw ParameterError("sweep config needs at least one k");
  if (method.empty()) throw ParameterError("sweep config needs at least one method");
  if (beta.empty() != n.empty()) throw ParameterError("beta and n lists must be given together");
  if (beta.empty() && nb.empty()) throw ParameterError("sweep config needs beta and n lists or nb pairs");
  for (const auto& bt : beta) {
    if (bt <= 0 || bt > 1) throw ParameterError("beta " + to_string(bt) + " outside (0, 1]");
    for (int nv : n) {
      Rational b = bt * nv;
      if (b.get_den() != 1)
        throw ParameterError("beta * n = " + to_string(bt) + " * " + std::to_string(nv) + " is not an integer");
    }
  }
  for (const auto& m : method)
    if (m == Method::custom) throw ParameterError("custom is not a sweep method");
  if (threads < 0) throw ParameterError("threads must be non-negative");
}

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig config;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key = value");
    std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    auto items = split_list(value);
    if (key == "k") {
      for (const auto& t : items) config.k.push_back(parse_int_field(t, line));
    } else if (key == "n") {
      for (const auto& t : items) config.n.push_back(parse_int_field(t, line));
    } else if (key == "beta") {
      for (const auto& t : items) {
        try {
          config.beta.push_back(parse_rational(t));
        } catch (const Error& e) {
          throw ParseError(line, e.what());
        }
      }
    } else if (key == "nb") {
      for (const auto& t : items) {
        auto colon = t.find(':');
        if (colon == std::string::npos) throw ParseError(line, "nb entries are n:b, got '" + t + "'");
        config.nb.emplace_back(parse_int_field(t.substr(0, colon), line), parse_int_field(t.substr(colon + 1), line));
      }
    } else if (key == "method") {
      for (const auto& t : items) {
        try {
          config.method.push_back(parse_method(t));
        } catch (const Error& e) {
          throw ParseError(line, e.what());
        }
      }
    } else if (key == "output") {
      config.output = value;
    } else if (key == "threads") {
      if (items.size() != 1) throw ParseError(line, "threads takes one value");
      config.threads = parse_int_field(items[0], line);
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  return config;
}

SweepConfig parse_sweep_config_string(const std::string& text) {
  std::istringstream in(text);
  return parse_sweep_config(in);
}

const std::vector<std::string>& sweep_header() {
  static const std::vector<std::string> header{"n",         "k",     "b",  "beta", "q",  "r",
                                               "case",      "method", "bandwidth", "ratio", "c1", "c2",
                                               "c3",        "lower_coeff", "upper_coeff", "error"};
  return header;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  struct Job {
    int n, k, b;
    Method m;
  };
  std::vector<Job> jobs;
  for (int k : config.k) {
    std::vector<std::pair<int, int>> points;
    for (const auto& bt : config.beta)
      for (int nv : config.n) points.emplace_back(nv, static_cast<int>(Rational(bt * nv).get_num().get_si()));
    points.insert(points.end(), config.nb.begin(), config.nb.end());
    for (auto [nv, bv] : points)
      for (Method m : config.method) jobs.push_back({nv, k, bv, m});
  }

  std::vector<SweepRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) rows[i] = evaluate(jobs[i].n, jobs[i].k, jobs[i].b, jobs[i].m);
  };
  unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  const auto& header = sweep_header();
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.fields.size(); ++i) out << (i ? "," : "") << csv_cell(row.fields[i]);
    out << '\n';
  }
}

}  // namespace gnkb
