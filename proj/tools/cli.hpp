// Command-line surface: JSON reports for each subcommand and the dispatcher.
#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "quatlat/classes.hpp"
#include "quatlat/genset.hpp"
#include "quatlat/localsolve.hpp"
#include "quatlat/recon.hpp"
#include "quatlat/theta.hpp"

namespace quatlat::cli {

using json = nlohmann::ordered_json;

/// A report and whether every check inside it held.
struct Outcome {
  json report;
  bool verified = true;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Integer& n);
json to_json(const Rational& q);
json to_json(const GramMatrix& g);
json to_json(const IntegerVector& v);
json to_json(const Quat& q);
json to_json(const ThetaSeries& t);

/// Accepts [[..]] or {"gram": [[..]]}; entries are strings ("3/2") or integers.
GramMatrix gram_from_json(const json& j);
/// Accepts [c0, c1, ..] or {"coeffs": [..]}.
ThetaSeries theta_from_json(const json& j);
json read_json_file(const std::string& path);

/// QUATLAT_WORKERS, else the hardware concurrency (at least 1).
unsigned workers();

/// out[i] = f(i) for i < n, spread over workers(); order of results is fixed.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F f) {
  std::vector<T> out(n);
  unsigned w = std::min<std::size_t>(workers(), std::max<std::size_t>(n, 1));
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < w; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += w) out[i] = f(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

Outcome order_report(long p);
Outcome gross_report(long p);
Outcome theta_report(const GramMatrix& g, long n);
Outcome minima_report(const GramMatrix& g);
/// Successive minima of O^T for every class of B_p.
Outcome class_minima_report(long p);
Outcome classes_report(long p, long ell);
/// Runs the pipeline on each class's theta series and compares with the minima.
Outcome recon_report(long p);
Outcome recon_series_report(const ThetaSeries& theta, long p);
Outcome genset_report(long p, long ell, int k_max);
Outcome lsc_report(const GramMatrix& form, const Integer& s, long ell);

std::vector<std::string> repro_names();
Outcome repro(const std::string& name);

/// Exit codes: 0 success, 1 a verification failed, 2 usage error.
int run(int argc, char** argv);

}  // namespace quatlat::cli
