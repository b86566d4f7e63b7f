// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isoradix/curvefile.hpp"
#include "isoradix/distinguish.hpp"
#include "isoradix/galois.hpp"
#include "isoradix/lfunc.hpp"
#include "isoradix/radical.hpp"
#include "isoradix/sweep.hpp"
#include "isoradix/version.hpp"

namespace {

using isoradix::Rational;
using json = nlohmann::ordered_json;

struct Ctx {
  std::string curves_file;
  std::string cache_dir;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string format = "json";

  std::optional<isoradix::IngestResult> ingested;

  isoradix::SweepOptions sweep_opts() const {
    isoradix::SweepOptions o;
    o.seed = seed;
    o.threads = threads;
    if (!cache_dir.empty()) o.cache_dir = std::filesystem::path(cache_dir);
    return o;
  }

  const isoradix::RationalCurve& curve(const std::string& label) const {
    return isoradix::find_curve(label, ingested ? &*ingested : nullptr);
  }
};

std::string join_u64(const std::vector<std::uint64_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

// The invocation recorded in reports is normalized: flags that cannot change
// the numbers (--threads, --cache-dir) are omitted so identical inputs give
// byte-identical reports.
std::string normalize_invocation(const Ctx& ctx, const std::string& body) {
  std::string inv = body;
  if (!ctx.curves_file.empty()) inv += " --curves " + ctx.curves_file;
  inv += " --seed " + std::to_string(ctx.seed) + " --format " + ctx.format;
  return inv;
}

void emit(const Ctx& ctx, const std::string& invocation, const json& payload, const std::string& csv_body) {
  if (ctx.format == "csv") {
    std::cout << "# tool: " << isoradix::kToolName << " " << isoradix::kToolVersion << "\n"
              << "# invocation: " << invocation << "\n"
              << csv_body;
    return;
  }
  json out;
  out["tool"] = isoradix::kToolName;
  out["version"] = isoradix::kToolVersion;
  out["invocation"] = invocation;
  for (const auto& [k, v] : payload.items()) out[k] = v;
  std::cout << out.dump(2) << "\n";
}

json fingerprint_json(const std::string& label, const isoradix::Fingerprint& fp) {
  json j;
  j["label"] = label;
  j["curve_key"] = fp.curve_key.hex();
  j["degree"] = fp.degree;
  j["primes"] = fp.primes;
  j["ells"] = fp.ells;
  j["vals"] = fp.vals;
  return j;
}

int run_count(const Ctx& ctx, const std::string& label, std::uint64_t p) {
  const auto& E = ctx.curve(label);
  const auto R = isoradix::reduce(E, p);
  if (!R)
    throw isoradix::UserError("curve '" + label + "' has bad reduction at p = " + std::to_string(p) +
                              " (p divides the discriminant); pick a different prime");
  const std::uint64_t N = isoradix::group_order(*R, ctx.seed);
  const std::int64_t a = static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(N);
  const auto cls = isoradix::classify(isoradix::count_extension(a, p, 1));

  json payload;
  payload["label"] = label;
  payload["p"] = p;
  payload["N"] = N;
  payload["a"] = a;
  payload["class"] = isoradix::reduction_class_name(cls);

  std::ostringstream csv;
  csv << "p,N,a,class\n"
      << p << "," << N << "," << a << "," << isoradix::reduction_class_name(cls) << "\n";
  emit(ctx, normalize_invocation(ctx, "count --curve " + label + " --p " + std::to_string(p)), payload, csv.str());
  return 0;
}

int run_fingerprint(const Ctx& ctx, std::uint64_t bound, std::vector<std::uint64_t> ells, int degree) {
  if (!ctx.ingested)
    throw isoradix::UserError("fingerprint requires --curves FILE (a JSON-lines curve file)");

  json fps = json::array();
  std::ostringstream csv;
  std::vector<isoradix::Fingerprint> all;
  for (const auto& E : ctx.ingested->curves) {
    const auto entry = isoradix::sweep_traces(E, bound, ctx.sweep_opts());
    all.push_back(isoradix::fingerprint(E, bound, ells, degree, isoradix::rows_up_to(entry, bound)));
    fps.push_back(fingerprint_json(E.label, all.back()));
  }

  json payload;
  payload["bound"] = bound;
  payload["fingerprints"] = fps;
  if (!ctx.ingested->rejected.empty()) {
    json rej = json::array();
    for (const auto& r : ctx.ingested->rejected)
      rej.push_back(json{{"label", r.label}, {"line", r.line}, {"reason", r.reason}});
    payload["rejected"] = rej;
  }

  csv << "label,curve_key,degree,p";
  if (!all.empty())
    for (std::uint64_t ell : all.front().ells) csv << ",v_" << ell;
  csv << "\n";
  for (std::size_t c = 0; c < all.size(); ++c) {
    const auto& fp = all[c];
    for (std::size_t i = 0; i < fp.primes.size(); ++i) {
      csv << ctx.ingested->curves[c].label << "," << fp.curve_key.hex() << "," << fp.degree << "," << fp.primes[i];
      for (int v : fp.vals[i]) csv << "," << v;
      csv << "\n";
    }
  }

  std::string inv = "fingerprint --bound " + std::to_string(bound) + " --ells " + join_u64(all.empty() ? ells : all.front().ells);
  if (degree != 1) inv += " --degree " + std::to_string(degree);
  emit(ctx, normalize_invocation(ctx, inv), payload, csv.str());
  return 0;
}

int run_compare(const Ctx& ctx, const std::string& l1, const std::string& l2, std::uint64_t bound,
                const std::vector<std::uint64_t>& ells) {
  const auto& E1 = ctx.curve(l1);
  const auto& E2 = ctx.curve(l2);
  const auto e1 = isoradix::sweep_traces(E1, bound, ctx.sweep_opts());
  const auto e2 = isoradix::sweep_traces(E2, bound, ctx.sweep_opts());
  const auto report = isoradix::mismatch_scan(E1, E2, bound, ells, isoradix::rows_up_to(e1, bound),
                                              isoradix::rows_up_to(e2, bound));
  const auto v = isoradix::verdict(report);

  json payload;
  payload["curve1"] = l1;
  payload["curve2"] = l2;
  payload["key1"] = report.key1.hex();
  payload["key2"] = report.key2.hex();
  payload["bound"] = report.B;
  payload["ells"] = report.ells;
  payload["primes_tested"] = report.primes_tested;
  json ms = json::array();
  for (const auto& m : report.mismatches)
    ms.push_back(json{{"p", m.p}, {"ell", m.ell}, {"v1", m.v1}, {"v2", m.v2}});
  payload["mismatches"] = ms;
  json dens = json::array();
  for (const auto& d : report.per_ell)
    dens.push_back(json{{"ell", d.ell}, {"mismatch_primes", d.mismatch_primes}, {"density", d.density.str()}});
  payload["per_ell_density"] = dens;
  json jv;
  if (v.status == isoradix::VerdictStatus::Distinguished) {
    jv["status"] = "distinguished";
    jv["p"] = v.witness_p;
    jv["ell"] = v.witness_ell;
  } else {
    jv["status"] = "consistent_with_isogeny";
    jv["primes_tested"] = v.primes_tested;
  }
  jv["note"] = v.note;
  payload["verdict"] = jv;

  std::ostringstream csv;
  csv << "p,ell,v1,v2\n";
  for (const auto& m : report.mismatches) csv << m.p << "," << m.ell << "," << m.v1 << "," << m.v2 << "\n";
  csv << "\nell,mismatch_primes,primes_tested\n";
  for (const auto& d : report.per_ell) csv << d.ell << "," << d.mismatch_primes << "," << report.primes_tested << "\n";
  csv << "\nverdict,witness_p,witness_ell,primes_tested\n";
  if (v.status == isoradix::VerdictStatus::Distinguished)
    csv << "distinguished," << v.witness_p << "," << v.witness_ell << "," << v.primes_tested << "\n";
  else
    csv << "consistent_with_isogeny,,," << v.primes_tested << "\n";

  const std::string inv = "compare --curve1 " + l1 + " --curve2 " + l2 + " --bound " + std::to_string(bound) +
                          " --ells " + join_u64(report.ells);
  emit(ctx, normalize_invocation(ctx, inv), payload, csv.str());
  return 0;
}

int run_density(const Ctx& ctx, const std::string& l1, const std::string& l2, std::uint64_t ell,
                std::uint64_t bound) {
  const auto& E1 = ctx.curve(l1);
  const auto& E2 = ctx.curve(l2);
  const auto e1 = isoradix::sweep_traces(E1, bound, ctx.sweep_opts());
  const auto e2 = isoradix::sweep_traces(E2, bound, ctx.sweep_opts());
  const auto grid = isoradix::joint_valuation_density(E1, E2, ell, bound, isoradix::rows_up_to(e1, bound),
                                                      isoradix::rows_up_to(e2, bound));
  if (grid.total == 0)
    throw isoradix::EmptySampleError("no common good primes <= " + std::to_string(bound) + "; raise the bound");

  constexpr int dim = isoradix::kValuationCap + 2;
  json counts = json::array();
  json densities = json::array();
  for (int i = 0; i < dim; ++i) {
    json crow = json::array();
    json drow = json::array();
    for (int j = 0; j < dim; ++j) {
      crow.push_back(grid.counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      drow.push_back(grid.density(i, j).str());
    }
    counts.push_back(crow);
    densities.push_back(drow);
  }

  json payload;
  payload["curve1"] = l1;
  payload["curve2"] = l2;
  payload["key1"] = E1.key().hex();
  payload["key2"] = E2.key().hex();
  payload["ell"] = grid.ell;
  payload["bound"] = grid.B;
  payload["total"] = grid.total;
  payload["m_cap"] = isoradix::kValuationCap;
  payload["counts"] = counts;
  payload["densities"] = densities;

  std::ostringstream csv;
  csv << "ell,bound,total\n" << grid.ell << "," << grid.B << "," << grid.total << "\n";
  csv << "\nm1,m2,count,density_num,density_den\n";
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Rational d = grid.density(i, j);
      csv << i << "," << j << "," << grid.counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] << ","
          << d.num << "," << d.den << "\n";
    }

  const std::string inv = "density --curve1 " + l1 + " --curve2 " + l2 + " --ell " + std::to_string(ell) +
                          " --bound " + std::to_string(bound);
  emit(ctx, normalize_invocation(ctx, inv), payload, csv.str());
  return 0;
}

int run_galois(const Ctx& ctx, const std::string& model_str, std::uint64_t ell, bool coupled) {
  isoradix::GroupKind kind;
  if (model_str == "gl2")
    kind = isoradix::GroupKind::GL2;
  else if (model_str == "split")
    kind = isoradix::GroupKind::SplitCartan;
  else if (model_str == "nonsplit")
    kind = isoradix::GroupKind::NonSplitCartan;
  else
    throw isoradix::UserError("unknown model '" + model_str + "'; use gl2, split, or nonsplit");

  const auto model = isoradix::make_model(kind, ell);
  const std::uint64_t order = isoradix::model_order(model);
  const Rational eig = isoradix::eigen_one_fraction(model);
  std::optional<Rational> cm;
  if (coupled) cm = isoradix::coupled_mismatch_fraction(model, model);

  json payload;
  payload["model"] = model_str;
  payload["ell"] = ell;
  payload["order"] = order;
  payload["eigen_one"] = eig.str();
  if (cm) payload["coupled_mismatch"] = cm->str();

  std::ostringstream csv;
  csv << "model,ell,order,eigen_one_num,eigen_one_den";
  if (cm) csv << ",coupled_num,coupled_den";
  csv << "\n" << model_str << "," << ell << "," << order << "," << eig.num << "," << eig.den;
  if (cm) csv << "," << cm->num << "," << cm->den;
  csv << "\n";

  std::string inv = "galois --model " + model_str + " --ell " + std::to_string(ell);
  if (coupled) inv += " --coupled";
  emit(ctx, normalize_invocation(ctx, inv), payload, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radical fingerprints of elliptic curves and exact Chebotarev predictions"};
  app.require_subcommand(1);
  app.fallthrough();

  Ctx ctx;
  if (const char* env = std::getenv("ISORADIX_CACHE_DIR")) ctx.cache_dir = env;
  app.add_option("--curves", ctx.curves_file, "JSON-lines curve file; labels shadow the builtins");
  app.add_option("--cache-dir", ctx.cache_dir, "trace cache directory (default: $ISORADIX_CACHE_DIR)");
  app.add_option("--seed", ctx.seed, "seed for all randomized internals");
  app.add_option("--threads", ctx.threads, "worker threads for prime sweeps")->check(CLI::Range(1, 256));
  app.add_option("--format", ctx.format, "output format")->check(CLI::IsMember({"json", "csv"}));

  // count
  auto* count_cmd = app.add_subcommand("count", "point count, trace, and reduction class at one prime");
  std::string count_label;
  std::uint64_t count_p = 0;
  count_cmd->add_option("--curve", count_label, "curve label")->required();
  count_cmd->add_option("--p", count_p, "prime of good reduction (>= 5)")->required();

  // fingerprint
  auto* fp_cmd = app.add_subcommand("fingerprint", "valuation matrices for every curve in a file");
  std::uint64_t fp_bound = 0;
  std::vector<std::uint64_t> fp_ells;
  int fp_degree = 1;
  fp_cmd->add_option("--bound", fp_bound, "sweep good primes up to this bound")->required();
  fp_cmd->add_option("--ells", fp_ells, "test primes, comma separated")->required()->delimiter(',');
  fp_cmd->add_option("--degree", fp_degree, "residue degree k (orders over F_{p^k})")
      ->check(CLI::Range(1, isoradix::kMaxExtensionDegree));

  // compare
  auto* cmp_cmd = app.add_subcommand("compare", "radical mismatch scan between two curves");
  std::string cmp_l1, cmp_l2;
  std::uint64_t cmp_bound = 0;
  std::vector<std::uint64_t> cmp_ells;
  cmp_cmd->add_option("--curve1", cmp_l1, "first curve label")->required();
  cmp_cmd->add_option("--curve2", cmp_l2, "second curve label")->required();
  cmp_cmd->add_option("--bound", cmp_bound, "sweep good primes up to this bound")->required();
  cmp_cmd->add_option("--ells", cmp_ells, "test primes, comma separated")->required()->delimiter(',');

  // density
  auto* den_cmd = app.add_subcommand("density", "joint valuation grid for a curve pair at one ell");
  std::string den_l1, den_l2;
  std::uint64_t den_ell = 0, den_bound = 0;
  den_cmd->add_option("--curve1", den_l1, "first curve label")->required();
  den_cmd->add_option("--curve2", den_l2, "second curve label")->required();
  den_cmd->add_option("--ell", den_ell, "test prime")->required();
  den_cmd->add_option("--bound", den_bound, "sweep good primes up to this bound")->required();

  // galois
  auto* gal_cmd = app.add_subcommand("galois", "exact constants of a mod-ell image model");
  std::string gal_model;
  std::uint64_t gal_ell = 0;
  bool gal_coupled = false;
  gal_cmd->add_option("--model", gal_model, "gl2 | split | nonsplit")->required();
  gal_cmd->add_option("--ell", gal_ell, "prime ell")->required();
  gal_cmd->add_flag("--coupled", gal_coupled, "also report the equal-determinant coupled mismatch fraction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help/version exit 0; any parse problem is a user error
  }

  try {
    if (!ctx.curves_file.empty()) ctx.ingested = isoradix::ingest_curves(ctx.curves_file);

    if (count_cmd->parsed()) return run_count(ctx, count_label, count_p);
    if (fp_cmd->parsed()) return run_fingerprint(ctx, fp_bound, fp_ells, fp_degree);
    if (cmp_cmd->parsed()) return run_compare(ctx, cmp_l1, cmp_l2, cmp_bound, cmp_ells);
    if (den_cmd->parsed()) return run_density(ctx, den_l1, den_l2, den_ell, den_bound);
    if (gal_cmd->parsed()) return run_galois(ctx, gal_model, gal_ell, gal_coupled);
    throw isoradix::InternalError("no subcommand dispatched");
  } catch (const isoradix::UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
