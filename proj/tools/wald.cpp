// wald: command-line front end for the verification campaigns.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "wald/campaign.hpp"
#include "wald/context.hpp"
#include "wald/error.hpp"
#include "wald/quadform.hpp"
#include "wald/serialize.hpp"

namespace {

using wald::json;

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::uint32_t q = 3;
  std::string kind = "split";
  int dmin = -1;
  int dmax = 3;
  int mmax = -1;
  int D = 5;
  int d = 0;
  std::uint64_t seed = 1;
  int workers = 1;
  int samples = 0;
  std::string convention = "sublattice";
  std::string out;
  std::string format = "json";
  std::string e1 = "1";
  std::string alpha;
  std::string beta;
  std::string gamma;
  std::string lhs = "(1,0)";
  std::string rhs = "(1,0)";
  std::string matrix;
  int precision = 0;
};

void add_session_flags(CLI::App* app, Options& o, bool with_d_range) {
  app->add_option("--q", o.q, "odd prime residue field size")->envname("WALD_Q");
  app->add_option("--kind", o.kind, "split | ramified")->envname("WALD_KIND");
  if (with_d_range) {
    app->add_option("--dmax", o.dmax, "largest d (or a)")->envname("WALD_DMAX");
    app->add_option("--mmax", o.mmax, "largest orbit index")->envname("WALD_MMAX");
  }
  app->add_option("--D", o.D, "truncation / matrix size")->envname("WALD_D");
  app->add_option("--seed", o.seed, "seed for randomized cells")->envname("WALD_SEED");
  app->add_option("--workers", o.workers, "worker threads")->envname("WALD_WORKERS");
  app->add_option("--samples", o.samples, "random draws (0: campaign default)")->envname("WALD_SAMPLES");
  app->add_option("--convention", o.convention, "sublattice | superlattice")->envname("WALD_CONVENTION");
  app->add_option("--out", o.out, "output path (default stdout)")->envname("WALD_OUT");
  app->add_option("--format", o.format, "json | csv")->envname("WALD_FORMAT")->check(CLI::IsMember({"json", "csv"}));
}

wald::SessionConfig to_config(const Options& o) {
  wald::SessionConfig cfg;
  cfg.q = o.q;
  cfg.kind = wald::parse_kind(o.kind);
  cfg.dmax = o.dmax;
  cfg.dmin = o.dmin >= 0 ? o.dmin : 0;
  if (o.mmax >= 0) cfg.mmax = o.mmax;
  cfg.D = o.D;
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  cfg.samples = o.samples;
  cfg.convention = wald::parse_convention(o.convention);
  cfg.params.kind = cfg.kind;
  return cfg;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw wald::Error(wald::ErrorKind::ConfigInvalid, "cannot open " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int emit(const wald::Report& report, const Options& o) {
  Output out(o.out);
  if (o.format == "csv") {
    report.write_csv(out.stream());
  } else {
    report.write_ndjson(out.stream());
  }
  return report.all_pass() ? 0 : kExitFail;
}

int emit_json(const json& j, const Options& o) {
  Output out(o.out);
  out.stream() << j.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of torus-orbit, Hecke and Waldspurger-module combinatorics over F_q((t))"};
  app.require_subcommand(1);
  Options o;

  auto* campaign = app.add_subcommand("campaign", "run a named verification campaign");
  std::string campaign_name;
  campaign->add_option("name", campaign_name, "campaign name")->required()->check(CLI::IsMember(wald::campaign_names()));
  add_session_flags(campaign, o, true);
  campaign->add_option("--dmin", o.dmin, "smallest d (or a)")->envname("WALD_DMIN");

  auto* prop17 = app.add_subcommand("verify-prop17", "closed-orbit sublattice counts (campaign prop17)");
  add_session_flags(prop17, o, true);

  auto* wd = app.add_subcommand("wd", "the distinguished function W_d and its checks");
  wd->add_option("--d", o.d, "d")->required();
  add_session_flags(wd, o, false);

  auto* multone = app.add_subcommand("multone", "rank-one freeness certificate (campaign multone)");
  add_session_flags(multone, o, false);

  auto* ke = app.add_subcommand("ke", "eigenfunction window check for numeric parameters");
  add_session_flags(ke, o, false);
  ke->add_option("--e1", o.e1, "first Satake eigenvalue (rational)");
  ke->add_option("--alpha", o.alpha, "numeric alpha (split)");
  ke->add_option("--beta", o.beta, "numeric beta (split)");
  ke->add_option("--gamma", o.gamma, "numeric gamma (ramified)");

  auto* hecke = app.add_subcommand("hecke", "spherical Hecke algebra");
  hecke->require_subcommand(1);
  auto* convolve = hecke->add_subcommand("convolve", "T_lhs * T_rhs in the coset basis");
  convolve->add_option("--q", o.q, "odd prime")->envname("WALD_Q");
  convolve->add_option("--lhs", o.lhs, "coweight \"(a1,a2)\"");
  convolve->add_option("--rhs", o.rhs, "coweight \"(a1,a2)\"");
  convolve->add_option("--out", o.out, "output path");

  auto* quadform = app.add_subcommand("quadform", "symmetric forms over F_q[[t]]");
  quadform->require_subcommand(1);
  auto* classify = quadform->add_subcommand("classify", "similitude invariant and covering type");
  classify->add_option("--q", o.q, "odd prime")->envname("WALD_Q");
  classify->add_option("--matrix", o.matrix, "JSON [[x, y], [y, z]]; entries as integers, coefficient lists or \"c*t^k\" strings")
      ->required();
  classify->add_option("--precision", o.precision, "working precision (default 2 val det + 2)");
  classify->add_option("--out", o.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (campaign->parsed()) return emit(wald::run_campaign(campaign_name, to_config(o)), o);
    if (prop17->parsed()) return emit(wald::run_campaign("prop17", to_config(o)), o);
    if (wd->parsed()) {
      wald::SessionConfig cfg = to_config(o);
      cfg.dmin = cfg.dmax = o.d;
      return emit(wald::run_campaign("wd", cfg), o);
    }
    if (multone->parsed()) return emit(wald::run_campaign("multone", to_config(o)), o);
    if (ke->parsed()) {
      wald::SessionConfig cfg = to_config(o);
      cfg.params.symbolic = false;
      if (cfg.kind == wald::EtaleKind::Split) {
        if (o.alpha.empty() || o.beta.empty()) throw wald::Error(wald::ErrorKind::ConfigInvalid, "--alpha and --beta are required");
        cfg.params.alpha = wald::Rational::parse(o.alpha);
        cfg.params.beta = wald::Rational::parse(o.beta);
      } else {
        if (o.gamma.empty()) throw wald::Error(wald::ErrorKind::ConfigInvalid, "--gamma is required");
        cfg.params.gamma = wald::Rational::parse(o.gamma);
      }
      cfg.e1 = wald::Rational::parse(o.e1);
      return emit(wald::run_campaign("ke", cfg), o);
    }
    if (convolve->parsed()) {
      wald::ModulusScope scope(o.q);
      const auto h = wald::convolve(wald::HeckeElement::basis(wald::Coweight::parse(o.lhs)),
                                    wald::HeckeElement::basis(wald::Coweight::parse(o.rhs)));
      json j = wald::to_json(h);
      j["q"] = o.q;
      j["text"] = h.str();
      return emit_json(j, o);
    }
    if (classify->parsed()) {
      wald::ModulusScope scope(o.q);
      json m;
      try {
        m = json::parse(o.matrix);
      } catch (const json::exception& e) {
        throw wald::Error(wald::ErrorKind::ParseError, e.what());
      }
      if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 || m[1].size() != 2) {
        throw wald::Error(wald::ErrorKind::ParseError, "--matrix must be a 2x2 JSON array");
      }
      const auto y = wald::laurent_poly_from_json(m[0][1]);
      if (y != wald::laurent_poly_from_json(m[1][0])) throw wald::Error(wald::ErrorKind::ConfigInvalid, "matrix is not symmetric");
      const auto form = wald::SymMatrixO::make(wald::laurent_poly_from_json(m[0][0]), y, wald::laurent_poly_from_json(m[1][1]));
      const int precision = o.precision > 0 ? o.precision : wald::default_precision(form);
      const auto diag = wald::diagonalize(form, precision);
      json j = wald::to_json(diag.inv);
      const wald::CoverType cover = wald::covering_type(diag.inv);
      j["cover"] = std::string(wald::to_string(cover));
      if (cover == wald::CoverType::UnramifiedNonsplitCover) j["note"] = "does not occur over an algebraically closed residue field";
      j["precision"] = precision;
      j["w"] = wald::to_json(diag.w);
      return emit_json(j, o);
    }
  } catch (const wald::Error& e) {
    std::cerr << "error [" << wald::to_string(e.kind()) << "]: " << e.what() << "\n";
    const bool config = e.kind() == wald::ErrorKind::ConfigInvalid || e.kind() == wald::ErrorKind::ParseError ||
                        e.kind() == wald::ErrorKind::NoModulus;
    return config ? kExitConfig : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitConfig;
}
