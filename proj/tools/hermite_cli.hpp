#pragma once

// Command-line front end: verify, table, export-basis, quad-selftest.
// Exit codes: 0 success, 1 check failures, 2 usage error, 3 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dch/verify.hpp"

namespace hermite_cli {

using dch::Json;

enum ExitCode { kOk = 0, kChecksFailed = 1, kUsage = 2, kInternal = 3 };

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GroupSpec {
  std::string family = "Z2^d";
  int d = 2;
  int m = 4;
  std::vector<std::string> kappa = {"1/2", "1/3"};
};

struct Options {
  std::string config;
  std::string out;
  std::uint64_t seed = 20240611;
  int jobs = 1;
  int quad_order = 16;
  std::uint64_t mc_samples = 1000000;
  std::string format = "text";

  GroupSpec group;
  bool group_given = false;

  int min_n = 0, max_n = 3;
  std::vector<int> n_list;
  int min_s = 0, max_s = 8;
  bool all_generators = false;
  bool first_generator = false;
  std::vector<std::string> quad_kappas;
};

inline std::vector<GroupSpec> default_matrix() {
  return {{"Z2^d", 2, 0, {"1/2", "1/3"}},
          {"Z2^d", 2, 0, {"1", "2"}},
          {"Z2^d", 3, 0, {"3/2", "1/2", "1"}},
          {"A", 3, 0, {"1"}}};
}

inline dch::ReflectionData build(const GroupSpec& g) {
  dch::RationalVector kappa;
  for (const auto& k : g.kappa) kappa.push_back(dch::parse_rational(k));
  if (kappa.empty()) throw usage_error("kappa list is empty");
  const dch::Family f = dch::parse_family(g.family);
  try {
    return dch::build_group(f, f == dch::Family::I2 ? g.m : g.d, kappa);
  } catch (const dch::internal_error&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

inline GroupSpec group_from_json(const Json& j, GroupSpec g) {
  if (j.contains("family")) g.family = j.at("family").get<std::string>();
  if (j.contains("d")) g.d = j.at("d").get<int>();
  if (j.contains("m")) g.m = j.at("m").get<int>();
  if (j.contains("kappa")) {
    const Json& k = j.at("kappa");
    g.kappa.clear();
    if (k.is_array()) {
      for (const auto& v : k) g.kappa.push_back(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>()));
    } else {
      g.kappa = split_list(k.is_string() ? k.get<std::string>() : std::to_string(k.get<long>()));
    }
  }
  return g;
}

/// Writes text either to a file named by `target` (if it has an extension)
/// or to `target/default_name`.
inline void write_output(const std::string& target, const std::string& default_name, const std::string& content) {
  std::filesystem::path p(target);
  if (!p.has_extension()) {
    std::filesystem::create_directories(p);
    p /= default_name;
  } else if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path());
  }
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << content;
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Dunkl-Clifford-Hermite polynomial toolkit"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--config", o_.config, "JSON config file")->check(CLI::ExistingFile);
    app.add_option("--out", o_.out, "output directory or file");
    app.add_option("--seed", o_.seed, "Monte Carlo seed");
    app.add_option("--jobs", o_.jobs, "parallel tuples")->check(CLI::PositiveNumber);
    app.add_option("--quad-order", o_.quad_order, "Gauss rule order m")->check(CLI::Range(1, dch::kMaxQuadOrder));
    app.add_option("--mc-samples", o_.mc_samples, "Monte Carlo samples");
    app.add_option("--format", o_.format, "stdout format")->check(CLI::IsMember({"text", "json"}));

    std::string kappa_text;
    auto add_group = [&](CLI::App* sub) {
      sub->add_option("--family", o_.group.family, "Z2^d, A, B or I2");
      sub->add_option("--d", o_.group.d, "dimension");
      sub->add_option("--m", o_.group.m, "dihedral order for I2");
      sub->add_option("--kappa", kappa_text, "comma separated multiplicities, one per orbit");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    add_group(verify);
    verify->add_option("--min-n", o_.min_n);
    verify->add_option("--max-n", o_.max_n);
    verify->add_option("--max-s", o_.max_s);
    verify->add_flag("--first-generator", o_.first_generator, "only the first module generator per degree");

    std::string n_text;
    CLI::App* table = app.add_subcommand("table", "Hermite polynomials, radial coefficients and norms");
    add_group(table);
    table->add_option("--n", n_text, "comma separated degrees");
    table->add_option("--min-s", o_.min_s);
    table->add_option("--max-s", o_.max_s);
    table->add_flag("--all-generators", o_.all_generators);

    CLI::App* exp = app.add_subcommand("export-basis", "monogenic module bases with spherical norms");
    add_group(exp);
    exp->add_option("--n", n_text, "comma separated degrees");

    std::string qk_text;
    CLI::App* quad = app.add_subcommand("quad-selftest", "moment test of the generalized Gauss-Hermite rules");
    quad->add_option("--kappa", qk_text, "comma separated kappa values");

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kUsage;
    }

    try {
      apply_config(app);
      for (CLI::App* sub : {verify, table, exp})
        if (sub->parsed()) {
          if (sub->count("--family") || sub->count("--d") || sub->count("--m") || sub->count("--kappa")) o_.group_given = true;
          if (sub->count("--kappa")) o_.group.kappa = split_list(kappa_text);
        }
      if (!n_text.empty()) {
        o_.n_list.clear();
        for (const auto& s : split_list(n_text)) o_.n_list.push_back(std::stoi(s));
      }
      if (!qk_text.empty()) o_.quad_kappas = split_list(qk_text);
      if (verify->parsed()) return cmd_verify();
      if (table->parsed()) return cmd_table();
      if (exp->parsed()) return cmd_export();
      return cmd_quad();
    } catch (const usage_error& e) {
      err_ << "usage error: " << e.what() << "\n";
      return kUsage;
    } catch (const dch::internal_error& e) {
      err_ << "internal error: " << e.what() << "\n";
      return kInternal;
    } catch (const dch::decomposition_error& e) {
      err_ << "internal error: " << e.what() << "\n";
      return kInternal;
    } catch (const std::invalid_argument& e) {
      err_ << "usage error: " << e.what() << "\n";
      return kUsage;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return kInternal;
    }
  }

 private:
  // Config values fill whatever the command line left unset.
  void apply_config(const CLI::App& app) {
    if (o_.config.empty()) return;
    std::ifstream f(o_.config);
    Json j;
    try {
      j = Json::parse(f);
    } catch (const Json::exception& e) {
      throw usage_error(std::string("bad config: ") + e.what());
    }
    auto sub = [&]() -> const CLI::App* {
      for (const CLI::App* s : app.get_subcommands()) return s;
      return nullptr;
    }();
    auto cli_has = [&](const std::string& name) {
      const CLI::Option* global = app.get_option_no_throw(name);
      const CLI::Option* local = sub ? sub->get_option_no_throw(name) : nullptr;
      return (global && global->count() > 0) || (local && local->count() > 0);
    };
    try {
      if (j.contains("seed") && !cli_has("--seed")) o_.seed = j.at("seed").get<std::uint64_t>();
      if (j.contains("jobs") && !cli_has("--jobs")) o_.jobs = j.at("jobs").get<int>();
      if (j.contains("quad_order") && !cli_has("--quad-order")) o_.quad_order = j.at("quad_order").get<int>();
      if (j.contains("mc_samples") && !cli_has("--mc-samples")) o_.mc_samples = j.at("mc_samples").get<std::uint64_t>();
      if (j.contains("out") && !cli_has("--out")) o_.out = j.at("out").get<std::string>();
      if (j.contains("min_n") && !cli_has("--min-n")) o_.min_n = j.at("min_n").get<int>();
      if (j.contains("max_n") && !cli_has("--max-n")) o_.max_n = j.at("max_n").get<int>();
      if (j.contains("min_s") && !cli_has("--min-s")) o_.min_s = j.at("min_s").get<int>();
      if (j.contains("max_s") && !cli_has("--max-s")) o_.max_s = j.at("max_s").get<int>();
      if (j.contains("n") && !cli_has("--n")) o_.n_list = j.at("n").get<std::vector<int>>();
      if (j.contains("groups")) {
        for (const auto& g : j.at("groups")) config_groups_.push_back(group_from_json(g, GroupSpec{}));
      }
      if (j.contains("family") || j.contains("kappa") || j.contains("d")) {
        GroupSpec merged = group_from_json(j, o_.group);
        // Explicit command-line group fields win.
        if (sub && sub->count("--family")) merged.family = o_.group.family;
        if (sub && sub->count("--d")) merged.d = o_.group.d;
        if (sub && sub->count("--m")) merged.m = o_.group.m;
        if (sub && sub->count("--kappa")) merged.kappa = o_.group.kappa;
        o_.group = merged;
        config_group_given_ = true;
      }
    } catch (const Json::exception& e) {
      throw usage_error(std::string("bad config value: ") + e.what());
    }
  }

  std::vector<dch::ReflectionData> groups() {
    std::vector<dch::ReflectionData> out;
    if (o_.group_given || config_group_given_) {
      out.push_back(build(o_.group));
    } else if (!config_groups_.empty()) {
      for (const auto& g : config_groups_) out.push_back(build(g));
    } else {
      for (const auto& g : default_matrix()) out.push_back(build(g));
    }
    return out;
  }

  std::vector<int> degrees() const {
    if (!o_.n_list.empty()) return o_.n_list;
    std::vector<int> out;
    for (int n = o_.min_n; n <= o_.max_n; ++n) out.push_back(n);
    return out;
  }

  int cmd_verify() {
    dch::VerifyConfig cfg;
    cfg.groups = groups();
    cfg.min_n = o_.min_n;
    cfg.max_n = o_.max_n;
    cfg.max_s = o_.max_s;
    cfg.quad_order = o_.quad_order;
    cfg.mc_samples = o_.mc_samples;
    cfg.seed = o_.seed;
    cfg.jobs = o_.jobs;
    cfg.all_generators = !o_.first_generator;
    if (cfg.min_n < 0 || cfg.max_n < cfg.min_n) throw usage_error("invalid n range");
    if (cfg.max_s < 0) throw usage_error("max-s must be nonnegative");
    const dch::VerificationReport report = dch::run_verification(cfg);
    const std::string json = report.to_json().dump(2) + "\n";
    const std::string text = report.to_text();
    if (!o_.out.empty()) {
      write_output(o_.out, "report.json", json);
      if (!std::filesystem::path(o_.out).has_extension()) write_output(o_.out, "report.txt", text);
    }
    out_ << (o_.format == "json" ? json : text);
    return report.failures() == 0 ? kOk : kChecksFailed;
  }

  int cmd_table() {
    const std::vector<dch::ReflectionData> gs = groups();
    if (gs.size() != 1) throw usage_error("table needs a single group; pass --family/--d/--kappa");
    const dch::ReflectionData& rd = gs.front();
    if (o_.min_s < 0) throw usage_error("min-s must be nonnegative");
    const std::vector<int> ns = o_.n_list.empty() ? std::vector<int>{1} : o_.n_list;
    for (int n : ns)
      if (n < 0) throw usage_error("degrees must be nonnegative");
    const dch::DunklOperators ops(rd);
    Json entries = Json::array();
    std::string text;
    char line[256];
    std::snprintf(line, sizeof line, "%s\n", rd.describe().c_str());
    text += line;
    if (o_.min_s <= o_.max_s) {
      for (int n : ns) {
        dch::MonogenicBasis basis = dch::module_basis(ops, n);
        if (rd.is_z2()) basis = dch::orthonormalize_z2(std::move(basis));
        const std::size_t count = o_.all_generators ? basis.elements.size() : std::min<std::size_t>(1, basis.elements.size());
        for (std::size_t j = 0; j < count; ++j) {
          const dch::HermiteFamily fam = dch::hermite_generate(ops, basis.elements[j], o_.max_s);
          Json rows = Json::array();
          for (int s = o_.min_s; s <= o_.max_s; ++s) {
            Json row = {{"s", s},
                        {"H", dch::to_json(fam.polys[s])},
                        {"radial", dch::to_json(fam.radial[s])},
                        {"C", s == 0 ? std::string("0") : dch::to_string(dch::c_coefficient(s, fam.mu, n))}};
            std::string norm_text = "-";
            if (basis.orthogonal) {
              const dch::HermiteNorm g = dch::gamma_norm(fam, basis.norm(j), s);
              row["gamma"] = dch::to_json(g.sphere_averaged);
              norm_text = g.sphere_averaged.to_string();
            }
            rows.push_back(row);
            std::string radial;
            for (std::size_t k = 0; k < fam.radial[s].size(); ++k)
              radial += (k ? " " : "") + dch::to_string(fam.radial[s][k]);
            std::snprintf(line, sizeof line, "n=%-2d j=%-2zu s=%-2d  a=[%s]  gamma=%s\n", n, j, s, radial.c_str(),
                          norm_text.c_str());
            text += line;
          }
          Json entry = {{"n", n}, {"generator", j}, {"P", dch::to_json(fam.p)}};
          if (basis.orthogonal) entry["norm"] = dch::to_json(basis.norm(j));
          entry["rows"] = rows;
          entries.push_back(entry);
        }
      }
    }
    const Json doc = {{"group", group_json(rd)}, {"min_s", o_.min_s}, {"max_s", o_.max_s}, {"entries", entries}};
    const std::string json = doc.dump(2) + "\n";
    if (!o_.out.empty()) write_output(o_.out, "table.json", std::filesystem::path(o_.out).extension() == ".txt" ? text : json);
    out_ << (o_.format == "json" ? json : text);
    return kOk;
  }

  int cmd_export() {
    const std::vector<dch::ReflectionData> gs = groups();
    if (gs.size() != 1) throw usage_error("export-basis needs a single group; pass --family/--d/--kappa");
    const dch::ReflectionData& rd = gs.front();
    const dch::DunklOperators ops(rd);
    Json bases = Json::array();
    for (int n : degrees()) {
      if (n < 0) throw usage_error("degrees must be nonnegative");
      dch::MonogenicBasis b = dch::module_basis(ops, n);
      if (rd.is_z2()) b = dch::orthonormalize_z2(std::move(b));
      Json elems = Json::array(), norms = Json::array(), gram = Json::array();
      for (const auto& e : b.elements) elems.push_back(dch::to_json(e));
      for (const auto& row : b.gram) {
        Json r = Json::array();
        for (const auto& g : row) r.push_back(g.to_string());
        gram.push_back(r);
      }
      for (std::size_t j = 0; j < b.gram.size(); ++j) norms.push_back(dch::to_json(b.norm(j)));
      bases.push_back({{"n", n},
                       {"expected_rank", b.expected_rank},
                       {"rank", b.elements.size()},
                       {"kernel_dimension", b.kernel_dimension},
                       {"elements", elems},
                       {"norms", norms},
                       {"gram", gram}});
    }
    const std::string json = Json{{"group", group_json(rd)}, {"bases", bases}}.dump(2) + "\n";
    if (!o_.out.empty()) write_output(o_.out, "basis.json", json);
    out_ << json;
    return kOk;
  }

  int cmd_quad() {
    std::vector<std::string> ks = o_.quad_kappas.empty() ? std::vector<std::string>{"0", "1/3", "1/2", "1", "3/2"} : o_.quad_kappas;
    const int m = o_.quad_order;
    bool ok = true;
    Json results = Json::array();
    std::string text;
    for (const auto& kt : ks) {
      const dch::Rational kappa = dch::parse_rational(kt);
      if (kappa < 0) throw usage_error("kappa must be nonnegative");
      const dch::QuadRule q = dch::quad_rule(kappa, m);
      double worst = 0.0, worst_odd = 0.0;
      for (int j = 0; j < m; ++j) {
        long double even = 0, odd = 0;
        for (int i = 0; i < m; ++i) {
          even += q.weights[i] * std::pow(static_cast<long double>(q.nodes[i]), 2 * j);
          odd += q.weights[i] * std::pow(static_cast<long double>(q.nodes[i]), 2 * j + 1);
        }
        const long double exact = std::tgamma(static_cast<long double>(j) + kappa.get_d() + 0.5L);
        worst = std::max(worst, static_cast<double>(std::abs(even / exact - 1)));
        worst_odd = std::max(worst_odd, static_cast<double>(std::abs(odd) / exact));
      }
      bool sym = true;
      for (int i = 0; i < m; ++i) sym = sym && q.nodes[i] == -q.nodes[m - 1 - i] && q.weights[i] == q.weights[m - 1 - i];
      const bool pass = worst <= 1e-12 && worst_odd <= 1e-14 && sym;
      ok = ok && pass;
      results.push_back({{"kappa", dch::to_string(kappa)},
                         {"order", m},
                         {"max_rel_even_moment_error", worst},
                         {"max_odd_moment", worst_odd},
                         {"symmetric", sym},
                         {"pass", pass}});
      char line[200];
      std::snprintf(line, sizeof line, "%s kappa=%-5s m=%-2d even-moment rel err %.3e  odd %.3e\n", pass ? "PASS" : "FAIL",
                    dch::to_string(kappa).c_str(), m, worst, worst_odd);
      text += line;
    }
    const std::string json = Json{{"results", results}}.dump(2) + "\n";
    if (!o_.out.empty()) write_output(o_.out, "quad.json", json);
    out_ << (o_.format == "json" ? json : text);
    return ok ? kOk : kChecksFailed;
  }

  static Json group_json(const dch::ReflectionData& rd) {
    Json k = Json::array();
    for (const auto& v : rd.kappa_per_orbit()) k.push_back(dch::to_string(v));
    return {{"family", dch::family_name(rd.family)}, {"d", rd.d}, {"kappa", k}, {"mu", dch::to_string(rd.mu)}};
  }

  std::ostream& out_;
  std::ostream& err_;
  Options o_;
  std::vector<GroupSpec> config_groups_;
  bool config_group_given_ = false;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return Cli(out, err).run(argc, argv);
}

}  // namespace hermite_cli
