#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "wrank/errors.hpp"
#include "wrank/smith.hpp"
#include "wrank/triplet.hpp"

namespace wrank::cli {

using nlohmann::json;

unsigned worker_threads() {
  if (const char* env = std::getenv("WRANK_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

json to_json(const IncidenceSpec& spec) {
  return {{"m", spec.m}, {"k", spec.k}, {"n", spec.n}, {"i", spec.i}};
}

json to_json(const LayerDims& layers) { return json::array({layers.l0, layers.l1, layers.l2}); }

json to_json(const RankReport& r) {
  json j;
  j["spec"] = to_json(r.spec);
  j["normalized"] = to_json(r.normalized);
  j["normalization"] = r.normalization;
  j["field"] = r.field.characteristic();
  j["computed_rank"] = r.computed_rank;
  j["predicted_rank"] = r.predicted_rank ? json(*r.predicted_rank) : json(nullptr);
  j["lower_bound"] = r.lower_bound ? to_json(*r.lower_bound) : json(nullptr);
  j["layers"] = r.layers ? to_json(*r.layers) : json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["elapsed_ms"] = std::round(r.elapsed_ms * 1000.0) / 1000.0;
  if (r.field.is_rational()) j["probe_prime"] = r.probe_prime;
  return j;
}

json to_json(const DiagonalComparison& cmp) {
  json j;
  j["m"] = cmp.m;
  j["n"] = cmp.n;
  json cand = json::array();
  for (const auto& x : cmp.candidate) cand.push_back(to_json(x));
  json snf = json::array();
  for (const auto& x : cmp.snf) snf.push_back(to_json(x));
  j["candidate"] = cand;
  j["snf"] = snf;
  j["multisets_equal"] = cmp.multisets_equal;
  j["equivalent"] = cmp.equivalent;
  json primes = json::array();
  for (const auto& p : cmp.primes) {
    primes.push_back({{"p", p.p},
                      {"candidate_units", p.candidate_units},
                      {"snf_p_rank", p.snf_p_rank},
                      {"streaming_rank", p.streaming_rank},
                      {"candidate_matches", p.candidate_matches},
                      {"snf_consistent", p.snf_consistent}});
  }
  j["primes"] = primes;
  return j;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, unsigned threads) {
  if (config.max_m < 4) throw ParameterError("sweep needs --max-m >= 4");
  std::vector<std::uint32_t> chars;
  if (config.include_char0) chars.push_back(0);
  chars.insert(chars.end(), config.primes.begin(), config.primes.end());
  for (auto c : chars) FieldSpec::from_characteristic(c);

  std::vector<SweepRow> rows;
  for (int m = 4; m <= config.max_m; ++m) {
    for (int n = 2; 2 * n <= m; ++n) {
      for (auto c : chars) rows.push_back({m, n, c, 0, 0, 0, false});
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    RankOptions options;
    options.seed = config.seed;
    for (std::size_t idx = next++; idx < rows.size(); idx = next++) {
      SweepRow& row = rows[idx];
      const RankReport r =
          compute_rank_report({row.m, 2, row.n, 1}, FieldSpec::from_characteristic(row.characteristic), options);
      row.predicted = r.predicted_rank.value_or(0);
      row.computed = r.computed_rank;
      row.elapsed_ms = r.elapsed_ms;
      row.match = r.verdict == Verdict::kMatch;
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rows.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << r.m << ',' << r.n << ',' << r.characteristic << ',' << r.predicted << ',' << r.computed << ','
        << std::fixed << std::setprecision(3) << r.elapsed_ms << std::defaultfloat << ','
        << (r.match ? "match" : "MISMATCH") << '\n';
  }
}

namespace {

struct Common {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--seed", common.seed, "Seed for the rational-rank probe prime");
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string layers_text(const LayerDims& l) {
  std::ostringstream s;
  s << '[' << l.l0 << ", " << l.l1 << ", " << l.l2 << ']';
  return s.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ranks of subset-intersection incidence matrices W_{k,n}^i(m)", "wrank"};
  app.require_subcommand(1);

  Common common;
  IncidenceSpec spec{0, 2, 0, 1};
  std::uint32_t characteristic = 0;
  std::string export_path;
  bool with_layers = false;

  auto* rank_cmd = app.add_subcommand("rank", "Rank of W_{k,n}^i(m) with prediction and verdict");
  rank_cmd->add_option("--m", spec.m, "Ground set size")->required();
  rank_cmd->add_option("--n", spec.n, "Column subset size")->required();
  rank_cmd->add_option("--k", spec.k, "Row subset size")->capture_default_str();
  rank_cmd->add_option("--i", spec.i, "Intersection size")->capture_default_str();
  rank_cmd->add_option("--char", characteristic, "0 or a prime")->capture_default_str();
  rank_cmd->add_option("--export", export_path, "Write the matrix in sparse triplet format");
  rank_cmd->add_flag("--layers", with_layers, "Also compute the filtration layer dimensions");
  add_common(rank_cmd, common);

  SweepConfig sweep;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Check the rank table over a parameter range");
  sweep_cmd->add_option("--max-m", sweep.max_m, "Largest m")->required();
  sweep_cmd->add_option("--primes", sweep.primes, "Comma-separated primes")->delimiter(',');
  sweep_cmd->add_flag("--include-char0", sweep.include_char0, "Also check characteristic 0");
  sweep_cmd->add_option("--out", sweep_out, "CSV output file (default stdout)");
  sweep_cmd->add_option("--seed", sweep.seed, "Seed for the rational-rank probe prime");

  int lm = 0, ln = 0;
  std::uint32_t lchar = 0;
  auto* layers_cmd = app.add_subcommand("layers", "Dimensions of L^0, L^1, L^2 for im rho_{n,2}");
  layers_cmd->add_option("--m", lm)->required();
  layers_cmd->add_option("--n", ln)->required();
  layers_cmd->add_option("--char", lchar)->capture_default_str();
  int layer_cap = kDefaultLayerCap;
  layers_cmd->add_option("--cap", layer_cap, "Largest m accepted")->capture_default_str();
  add_common(layers_cmd, common);

  int cm = 0, cn = 0, ck = 2, ci = 1, cj = 0;
  auto* coeff_cmd = app.add_subcommand("coeff", "Coefficient of e_s in psi_{k,j}(tau_{n,k}^i(e_t^j))");
  coeff_cmd->add_option("--m", cm)->required();
  coeff_cmd->add_option("--n", cn)->required();
  coeff_cmd->add_option("--k", ck)->capture_default_str();
  coeff_cmd->add_option("--i", ci)->capture_default_str();
  coeff_cmd->add_option("--j", cj)->required();
  add_common(coeff_cmd, common);

  IncidenceSpec snf_spec{0, 2, 0, 1};
  std::string snf_input;
  std::size_t snf_cap = kDefaultSnfCap;
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of W_{k,n}^i(m) or of a triplet file");
  snf_cmd->add_option("--m", snf_spec.m);
  snf_cmd->add_option("--n", snf_spec.n);
  snf_cmd->add_option("--k", snf_spec.k)->capture_default_str();
  snf_cmd->add_option("--i", snf_spec.i)->capture_default_str();
  snf_cmd->add_option("--input", snf_input, "Sparse triplet file instead of --m/--n");
  snf_cmd->add_option("--cap", snf_cap, "Largest dimension accepted")->capture_default_str();
  add_common(snf_cmd, common);

  int dm = 0, dn = 0;
  auto* diag_cmd = app.add_subcommand("diag-compare", "Coefficient diagonal vs. Smith form of W_{2,n}^1(m)");
  diag_cmd->add_option("--m", dm)->required();
  diag_cmd->add_option("--n", dn)->required();
  diag_cmd->add_option("--cap", snf_cap, "Largest dimension accepted")->capture_default_str();
  add_common(diag_cmd, common);

  IncidenceSpec col_spec{0, 2, 0, 1};
  std::vector<int> col_set;
  auto* column_cmd = app.add_subcommand("column", "List the rows S with |S ∩ T| = i for one column T");
  column_cmd->add_option("--m", col_spec.m)->required();
  column_cmd->add_option("--n", col_spec.n)->required();
  column_cmd->add_option("--k", col_spec.k)->capture_default_str();
  column_cmd->add_option("--i", col_spec.i)->capture_default_str();
  column_cmd->add_option("--set", col_set, "Column subset T, 1-based, comma-separated")->delimiter(',')->required();
  add_common(column_cmd, common);

  int pm = 0, pn = 0;
  std::uint32_t pchar = 0;
  auto* predict_cmd = app.add_subcommand("predict", "Table rank of W_{2,n}^1(m) without computing");
  predict_cmd->add_option("--m", pm)->required();
  predict_cmd->add_option("--n", pn)->required();
  predict_cmd->add_option("--char", pchar)->capture_default_str();
  add_common(predict_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  const bool as_json = common.format == "json";

  try {
    if (*rank_cmd) {
      RankOptions options;
      options.seed = common.seed;
      options.threads = 1;
      options.with_layers = with_layers;
      const FieldSpec field = FieldSpec::from_characteristic(characteristic);
      const RankReport report = compute_rank_report(spec, field, options);
      if (!export_path.empty()) {
        std::ofstream file(export_path);
        if (!file) {
          err << "cannot open " << export_path << " for writing\n";
          return kIoError;
        }
        write_triplets(file, LinearMap::intersection(spec, field).materialize());
        if (!file) return kIoError;
      }
      if (as_json) {
        emit(out, to_json(report));
      } else {
        out << report.spec.to_string() << " over char " << field.characteristic() << ": computed "
            << report.computed_rank;
        if (report.predicted_rank) out << ", predicted " << *report.predicted_rank;
        out << ", " << to_string(report.verdict);
        if (report.layers) out << ", layers " << layers_text(*report.layers);
        out << '\n';
      }
      return report.verdict == Verdict::kMismatch ? kMismatch : kOk;
    }

    if (*sweep_cmd) {
      const auto rows = run_sweep(sweep, worker_threads());
      const bool all_match = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.match; });
      if (sweep_out.empty()) {
        write_sweep_csv(out, rows);
      } else {
        std::ofstream file(sweep_out);
        if (!file) {
          err << "cannot open " << sweep_out << " for writing\n";
          return kIoError;
        }
        write_sweep_csv(file, rows);
        if (!file) return kIoError;
      }
      err << rows.size() << " rows, " << (all_match ? "all match" : "MISMATCH found") << '\n';
      return all_match ? kOk : kMismatch;
    }

    if (*layers_cmd) {
      const NormalizedSpec normalized = normalize_spec({lm, 2, ln, 1});
      const LayerDims l = layer_dims(normalized.spec, FieldSpec::from_characteristic(lchar), layer_cap);
      if (as_json) {
        emit(out, {{"spec", to_json(normalized.spec)}, {"field", lchar}, {"layers", to_json(l)}, {"rank", l.rank}});
      } else {
        out << layers_text(l) << '\n';
      }
      return kOk;
    }

    if (*coeff_cmd) {
      const BigInt c = lemma_coefficient(cm, cn, ck, ci, cj);
      if (as_json) {
        emit(out, {{"m", cm}, {"n", cn}, {"k", ck}, {"i", ci}, {"j", cj}, {"coefficient", to_json(c)}});
      } else {
        out << c << '\n';
      }
      return kOk;
    }

    if (*snf_cmd) {
      IntMatrix matrix;
      if (!snf_input.empty()) {
        std::ifstream file(snf_input);
        if (!file) {
          err << "cannot open " << snf_input << '\n';
          return kIoError;
        }
        matrix = to_dense(read_triplets(file));
      } else {
        if (snf_spec.m <= 0) throw ParameterError("snf needs --m/--n or --input");
        snf_spec.validate();
        if (snf_spec.rows() > snf_cap || snf_spec.cols() > snf_cap) {
          throw SizeCapError("matrix exceeds the SNF cap " + std::to_string(snf_cap));
        }
        matrix = incidence_matrix(snf_spec);
      }
      const SNFResult snf = smith_normal_form(std::move(matrix), snf_cap);
      if (as_json) {
        json diag = json::array();
        for (const auto& d : snf.diagonal) diag.push_back(to_json(d));
        emit(out, {{"diagonal", diag}, {"rank", snf.rank}});
      } else {
        for (std::size_t t = 0; t < snf.diagonal.size(); ++t) out << (t ? " " : "") << snf.diagonal[t];
        out << '\n';
      }
      return kOk;
    }

    if (*diag_cmd) {
      const DiagonalComparison cmp = diagonal_form_compare(dm, dn, snf_cap);
      if (as_json) {
        emit(out, to_json(cmp));
      } else {
        out << "m=" << dm << " n=" << dn << " equivalent=" << (cmp.equivalent ? "yes" : "no")
            << " multisets_equal=" << (cmp.multisets_equal ? "yes" : "no") << '\n';
        for (const auto& p : cmp.primes) {
          out << "  p=" << p.p << " candidate=" << p.candidate_units << " rank=" << p.streaming_rank
              << " snf=" << p.snf_p_rank << '\n';
        }
      }
      return kOk;
    }

    if (*column_cmd) {
      col_spec.validate();
      const KSubset t = KSubset::from_one_based(col_set, col_spec.m);
      const ModuleVector v = intersection_column(col_spec, t, FieldSpec::rational());
      std::vector<std::string> rows;
      for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx] != 0) rows.push_back(subset_unrank(idx, col_spec.k, col_spec.m).to_string());
      }
      if (as_json) {
        emit(out, {{"spec", to_json(col_spec)}, {"column", t.to_string()}, {"rows", rows}});
      } else {
        for (const auto& r : rows) out << r << '\n';
      }
      return kOk;
    }

    if (*predict_cmd) {
      const FieldSpec field = FieldSpec::from_characteristic(pchar);
      const NormalizedSpec normalized = normalize_spec({pm, 2, pn, 1});
      const auto rank = predicted_rank(normalized.spec.m, normalized.spec.n, field);
      const auto which = rank_case(normalized.spec.m, normalized.spec.n, field);
      if (as_json) {
        emit(out, {{"spec", to_json(normalized.spec)}, {"field", pchar}, {"predicted_rank", rank},
                   {"case", to_string(which)}});
      } else {
        out << rank << " (" << to_string(which) << ")\n";
      }
      return kOk;
    }
  } catch (const SizeCapError& e) {
    err << "size cap: " << e.what() << '\n';
    return kSizeCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace wrank::cli
