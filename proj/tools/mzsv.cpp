// Command-line front end: structural queries on indices, product expansion,
// relation-family construction, and the two verification sweeps.

#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mzsv/report.hpp"

namespace {

using namespace mzsv;

std::vector<Family> parse_families(const std::string& csv) {
  std::vector<Family> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto f = family_from_string(tok);
    if (!f) throw CLI::ValidationError("--families", "unknown family '" + tok + "'");
    out.push_back(*f);
  }
  if (out.empty()) throw CLI::ValidationError("--families", "no families given");
  return out;
}

int int_param(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::domain_error(std::string(what) + " must be an integer, got '" + s + "'");
  }
}

RelationInstance build_from_cli(Family f, const std::string& kstr, const std::string& lstr,
                                int m, int r, int i) {
  switch (f) {
    case Family::sum_classical:
      return build_sum_classical(int_param(kstr, "--k"), r, false);
    case Family::sum_classical_star:
      return build_sum_classical(int_param(kstr, "--k"), r, true);
    case Family::duality_classical:
      return build_duality_classical(Index::parse(kstr));
    case Family::ohno:
      return build_ohno(Index::parse(kstr), m);
    case Family::ohno_star:
      return build_ohno_star(Index::parse(kstr), m);
    case Family::sum_finite:
      return build_sum_finite(int_param(kstr, "--k"), r, i, false);
    case Family::sum_finite_star:
      return build_sum_finite(int_param(kstr, "--k"), r, i, true);
    case Family::duality_finite:
      return build_duality_finite(Index::parse(kstr));
    case Family::oyama:
      return build_oyama(Index::parse(kstr), m);
    case Family::ohno_star_finite:
      return build_ohno_star_finite(Index::parse(kstr), m);
    case Family::kawashima_linear:
      return build_kawashima_linear(Index::parse(kstr), Index::parse(lstr));
    case Family::lemma24:
      return build_lemma24(Index::parse(kstr), m);
    case Family::lemma25:
      return build_lemma25(Index::parse(kstr), m);
    case Family::star_ones:
      return build_star_ones(i);
    case Family::harmonic_hom:
      return build_harmonic_hom(Index::parse(kstr), Index::parse(lstr));
    case Family::star_depth2: {
      Index k = Index::parse(kstr);
      if (k.depth() != 2) throw std::domain_error("star_depth2 needs --k with exactly two components");
      return build_star_depth2(k.parts()[0], k.parts()[1]);
    }
  }
  throw std::domain_error("unknown family");
}

/// Runs fn(i) for every instance position across `jobs` workers; result
/// slots are preassigned so output order is scheduling-independent.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::mutex err_mu;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

struct SweepOptions {
  std::string families;
  int max_total_weight = 6;
  int jobs = 1;
  std::string out;
};

int run_verify_real(const SweepOptions& opt, long long N, double tol) {
  std::vector<RelationInstance> instances;
  for (Family f : parse_families(opt.families)) {
    auto batch = enumerate_instances(f, EnumBounds{opt.max_total_weight});
    instances.insert(instances.end(), std::make_move_iterator(batch.begin()),
                     std::make_move_iterator(batch.end()));
  }
  RealEvaluator ev(N);
  std::vector<RealCheckResult> results(instances.size());
  parallel_for(instances.size(), opt.jobs,
               [&](std::size_t i) { results[i] = check_real(instances[i], tol, ev); });
  int failed = 0;
  std::vector<json> entries;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    entries.push_back(result_entry(instances[i], results[i]));
    if (!results[i].pass) {
      ++failed;
      std::cout << "FAIL " << results[i].id << "  lhs=" << double_str(results[i].lhs.value)
                << " rhs=" << double_str(results[i].rhs.value)
                << " diff=" << double_str(results[i].diff) << "\n";
    }
  }
  std::cout << instances.size() - failed << "/" << instances.size()
            << " instances pass (N=" << N << ", tol=" << tol << ")\n";
  if (!opt.out.empty()) {
    json config{{"mode", "verify-real"},
                {"families", opt.families},
                {"max_total_weight", opt.max_total_weight},
                {"N", N},
                {"tol", double_str(tol)}};
    write_report(make_report(config, std::move(entries)), opt.out);
  }
  return failed == 0 ? 0 : 1;
}

int run_verify_modp(const SweepOptions& opt, const PrimeWindow& window) {
  std::vector<RelationInstance> instances;
  for (Family f : parse_families(opt.families)) {
    auto batch = enumerate_instances(f, EnumBounds{opt.max_total_weight});
    instances.insert(instances.end(), std::make_move_iterator(batch.begin()),
                     std::make_move_iterator(batch.end()));
  }
  ModpEvaluator ev;
  std::vector<ModpCheckResult> results(instances.size());
  parallel_for(instances.size(), opt.jobs,
               [&](std::size_t i) { results[i] = check_modp(instances[i], window, ev); });
  int failed = 0;
  std::vector<json> entries;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    entries.push_back(result_entry(instances[i], results[i]));
    if (!results[i].pass) {
      ++failed;
      std::cout << "FAIL " << results[i].id << "  p=" << results[i].witness_p
                << " lhs=" << results[i].lhs << " rhs=" << results[i].rhs << "\n";
    }
  }
  std::cout << instances.size() - failed << "/" << instances.size()
            << " instances pass (primes " << window.p_min << ".." << window.p_max << ")\n";
  if (!opt.out.empty()) {
    json config{{"mode", "verify-modp"},
                {"families", opt.families},
                {"max_total_weight", opt.max_total_weight},
                {"pmin", window.p_min},
                {"pmax", window.p_max}};
    write_report(make_report(config, std::move(entries)), opt.out);
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index calculus and verification of Ohno-type relations for multiple zeta-star values"};
  app.require_subcommand(1);
  app.set_config("--config");
  app.set_version_flag("--version", mzsv::kVersion);

  std::string index_arg, index_arg2, type, families, kstr, lstr, out;
  int m = 0, r = 1, i = 1;
  long long N = 1000000, n_arg = 0, p_arg = 0;
  long long pmin = 5, pmax = 199;
  double tol = 1e-4;
  int jobs = 1, max_w = 6, k_scalar = 3;

  auto* dual = app.add_subcommand("dual", "Dual of an admissible index");
  dual->add_option("index", index_arg, "index, e.g. 1,2")->required();

  auto* hdual = app.add_subcommand("hdual", "Hoffman dual of a nonempty index");
  hdual->add_option("index", index_arg, "index, e.g. 2,1")->required();

  auto* product = app.add_subcommand("product", "Expand a shuffle or harmonic product");
  product->add_option("--type", type, "shuffle|harmonic")
      ->required()
      ->check(CLI::IsMember({"shuffle", "harmonic"}));
  product->add_option("a", index_arg, "first index")->required();
  product->add_option("b", index_arg2, "second index")->required();

  auto* relation = app.add_subcommand("relation", "Print both sides of one relation instance");
  relation->add_option("--family", families, "family name")->required();
  relation->add_option("--k", kstr, "index parameter (or scalar weight for sum families)");
  relation->add_option("--l", lstr, "second index parameter");
  relation->add_option("--m", m, "weight shift");
  relation->add_option("--r", r, "depth parameter of the sum formulas");
  relation->add_option("--i", i, "slot parameter (or the ones-count for star_ones)");

  auto* vreal = app.add_subcommand("verify-real", "Numeric verification sweep over real-space families");
  vreal->add_option("--families", families, "comma-separated family names")->required();
  vreal->add_option("--max-total-weight", max_w, "bound on total weight");
  vreal->add_option("--N", N, "series truncation bound");
  vreal->add_option("--tol", tol, "pass tolerance");
  vreal->add_option("--jobs", jobs, "worker threads");
  vreal->add_option("--out", out, "write JSON report here");

  auto* vmodp = app.add_subcommand("verify-modp", "Exact mod-p verification sweep over finite-space families");
  vmodp->add_option("--families", families, "comma-separated family names")->required();
  vmodp->add_option("--max-total-weight", max_w, "bound on total weight");
  vmodp->add_option("--pmin", pmin, "smallest prime of the window");
  vmodp->add_option("--pmax", pmax, "largest prime of the window");
  vmodp->add_option("--jobs", jobs, "worker threads");
  vmodp->add_option("--out", out, "write JSON report here");

  auto* bern = app.add_subcommand("bernoulli-modp", "Bernoulli number B_n mod p");
  bern->add_option("--n", n_arg, "Bernoulli number index")->required();
  bern->add_option("--p", p_arg, "prime modulus")->required();

  auto* remark = app.add_subcommand("diagnose-remark",
                                    "Compare zeta_A(1,k-1) against Z_A(k) over a prime window");
  remark->add_option("--k", k_scalar, "weight, k >= 2")->required();
  remark->add_option("--pmin", pmin, "smallest prime of the window");
  remark->add_option("--pmax", pmax, "largest prime of the window");
  remark->add_option("--out", out, "write JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  using namespace mzsv;
  try {
    if (dual->parsed()) {
      std::cout << mzsv::dagger(Index::parse(index_arg)).str() << "\n";
    } else if (hdual->parsed()) {
      std::cout << hoffman_dual(Index::parse(index_arg)).str() << "\n";
    } else if (product->parsed()) {
      Index a = Index::parse(index_arg), b = Index::parse(index_arg2);
      LinComb res = (type == "shuffle") ? shuffle(a, b) : harmonic(a, b);
      std::cout << res.str() << "\n";
    } else if (relation->parsed()) {
      auto fam = family_from_string(families);
      if (!fam) {
        std::cerr << "unknown family '" << families << "'\n";
        return 2;
      }
      RelationInstance inst = build_from_cli(*fam, kstr, lstr, m, r, i);
      std::cout << inst.id << "  [" << value_space_name(inst.space) << "]\n";
      std::cout << "lhs: " << inst.lhs.str() << "\n";
      if (inst.rhs_product) {
        std::cout << "rhs: " << inst.rhs_product->first.display() << " * "
                  << inst.rhs_product->second.display() << "\n";
      } else {
        std::cout << "rhs: " << inst.rhs.str() << "\n";
      }
    } else if (vreal->parsed()) {
      return run_verify_real({families, max_w, jobs, out}, N, tol);
    } else if (vmodp->parsed()) {
      return run_verify_modp({families, max_w, jobs, out}, PrimeWindow{pmin, pmax});
    } else if (bern->parsed()) {
      std::cout << bernoulli_mod_p(n_arg, p_arg) << "\n";
    } else if (remark->parsed()) {
      auto rows = remark_diagnostic(k_scalar, PrimeWindow{pmin, pmax});
      bool constant_ratio = !rows.empty();
      long long ratio0 = 0;
      bool have_ratio = false;
      std::vector<json> entries;
      for (const auto& row : rows) {
        std::cout << "p=" << row.p << ": zeta_A(1," << k_scalar - 1 << ")=" << row.zeta_1_km1
                  << "  Z_A(" << k_scalar << ")=" << row.z_value;
        if (row.ratio_defined) {
          std::cout << "  ratio=" << row.ratio;
          if (!have_ratio) {
            ratio0 = row.ratio;
            have_ratio = true;
          } else if (row.ratio != ratio0) {
            constant_ratio = false;
          }
        }
        std::cout << "\n";
        json entry{{"p", row.p},
                   {"zeta_1_km1", std::to_string(row.zeta_1_km1)},
                   {"Z_A", std::to_string(row.z_value)}};
        if (row.ratio_defined) entry["ratio"] = std::to_string(row.ratio);
        entries.push_back(entry);
      }
      if (have_ratio && constant_ratio) {
        std::cout << "note: ratio is the constant " << ratio0 << " across the window\n";
      }
      if (!out.empty()) {
        json report{{"version", kVersion},
                    {"config", {{"mode", "diagnose-remark"}, {"k", k_scalar}, {"pmin", pmin}, {"pmax", pmax}}},
                    {"rows", entries}};
        if (have_ratio && constant_ratio) report["constant_ratio"] = std::to_string(ratio0);
        write_report(report, out);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
