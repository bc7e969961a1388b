#include "cli.hpp"

#include "acceptance.hpp"

#include "twklv/bar.hpp"
#include "twklv/datum.hpp"
#include "twklv/errors.hpp"
#include "twklv/fq.hpp"
#include "twklv/hecke.hpp"
#include "twklv/module_action.hpp"
#include "twklv/tsv.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

namespace twklv::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Either a JSON file or "builtin:<name>".
ParamDatum read_datum(const std::string& where) {
  const std::string prefix = "builtin:";
  if (where.rfind(prefix, 0) == 0) return builtin_datum(where.substr(prefix.size()));
  return load_datum(where);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::uint32_t> parse_qs(const std::string& s) {
  std::vector<std::uint32_t> qs;
  for (const auto& part : split(s, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        part.size() > 6)
      throw UsageError("--q expects a comma separated list of integers, got '" + s + "'");
    qs.push_back(static_cast<std::uint32_t>(std::stoul(part)));
  }
  return qs;
}

Family parse_family_arg(const std::string& s) {
  auto f = parse_family(s);
  if (!f) throw UsageError("unknown family '" + s + "' (expected a1a1-sc, a1a1-int, a1a1-ad, a2-c or a2-s)");
  return *f;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted Kazhdan-Lusztig-Vogan polynomials", "twklv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string type, sigma = "()", datum_path, word, on, name, out_path, family, derive_qs, verify_qs;
  bool oracle = false, check = false;

  auto* fold = app.add_subcommand("fold", "Folded generators of W^sigma and their types");
  fold->add_option("--type", type, "Cartan type, e.g. A3 or A1xA1")->required();
  fold->add_option("--sigma", sigma, "diagram involution in cycle notation, e.g. \"(1 3)\"");

  auto* hkl = app.add_subcommand("hecke-kl", "P^sigma_{y,w} table of a folded system");
  hkl->add_option("--type", type, "Cartan type")->required();
  hkl->add_option("--sigma", sigma, "diagram involution");

  auto* validate = app.add_subcommand("validate", "Validate a parameter datum");
  validate->add_option("--datum", datum_path, "datum JSON file or builtin:<name>")->required();

  auto* act = app.add_subcommand("act", "Apply generators to a basis element");
  act->add_option("--datum", datum_path, "datum JSON file or builtin:<name>")->required();
  act->add_option("--word", word, "generators separated by commas, applied first to last")->required();
  act->add_option("--on", on, "parameter id")->required();

  auto* bar = app.add_subcommand("bar", "Matrix of the duality operator");
  bar->add_option("--datum", datum_path, "datum JSON file or builtin:<name>")->required();
  bar->add_flag("--oracle", oracle, "use the interpolation solver");
  bar->add_flag("--check", check, "re-verify the defining identities");

  auto* klv = app.add_subcommand("klv", "P^sigma table of a datum");
  klv->add_option("--datum", datum_path, "datum JSON file or builtin:<name>")->required();
  klv->add_flag("--check", check, "re-verify the characterising properties");

  auto* builtin = app.add_subcommand("builtin", "Emit a built-in datum as JSON");
  builtin->add_option("--name", name, "a2-c, a2-s, a1a1-sc, a1a1-int, a1a1-ad or hecke:<type>:<sigma>")->required();
  builtin->add_option("--out", out_path, "output file (default: standard output)");

  auto* fq = app.add_subcommand("fq", "Finite-field models");
  fq->require_subcommand(1);
  auto* derive = fq->add_subcommand("derive", "Interpolate a datum from point counts");
  derive->add_option("--family", family, "family name")->required();
  derive->add_option("--q", derive_qs, "values of q, e.g. 3,5,7,9")->default_val("3,5,7,9");
  derive->add_option("--out", out_path, "datum output file (default: standard output)");
  auto* verify = fq->add_subcommand("verify", "Compare point and orbit counts with closed forms");
  verify->add_option("--family", family, "family name")->required();
  verify->add_option("--q", verify_qs, "values of q")->default_val("3");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*fold) {
      auto fs = make_folded(type, sigma);
      out << "type\t" << type << "\nsigma\t" << sigma_to_string(fs->sigma()) << "\norder\t" << fs->size() << '\n';
      out << "generator\torbit\tm\n";
      for (const auto& g : fs->generators()) {
        std::string orbit;
        for (int s : g.orbit) orbit += (orbit.empty() ? "" : ",") + std::to_string(s + 1);
        out << g.label << '\t' << orbit << '\t' << g.m << '\n';
      }
      return 0;
    }
    if (*hkl) {
      write_tsv(out, hecke_kl(make_folded(type, sigma)));
      return 0;
    }
    if (*validate) {
      const auto rep = validate_datum(read_datum(datum_path));
      (rep.ok() ? out : err) << rep.str();
      return rep.ok() ? 0 : 1;
    }
    if (*act) {
      const ParamDatum d = read_datum(datum_path);
      const auto gens = split(word, ',');
      for (const auto& g : gens) d.require_gen(g);
      write_melt(out, d, act_word(d, gens, MElt::basis(d.require_param(on))));
      return 0;
    }
    if (*bar) {
      const ParamDatum d = read_datum(datum_path);
      const BarMatrix b = oracle ? bar_matrix_oracle(d) : bar_matrix(d);
      if (check) {
        const auto rep = check_bar_matrix(d, b.rho);
        if (!rep.ok()) {
          err << rep.str("bar matrix check");
          return 1;
        }
      }
      write_tsv(out, b.rho);
      return 0;
    }
    if (*klv) {
      const ParamDatum d = read_datum(datum_path);
      const auto lengths = d.lengths();
      const PolyMatrix rho = bar_matrix(d).rho;
      const PolyMatrix p = canonical_basis(rho, lengths);
      if (check) {
        auto rep = check_canonical_basis(rho, p, lengths);
        const auto rep_bar = check_bar_matrix(d, rho);
        rep.failures.insert(rep.failures.end(), rep_bar.failures.begin(), rep_bar.failures.end());
        if (!rep.ok()) {
          err << rep.str("klv check");
          return 1;
        }
      }
      write_tsv(out, p);
      return 0;
    }
    if (*builtin) {
      const std::string json = datum_to_json(builtin_datum(name));
      if (out_path.empty()) out << json;
      else write_text(out_path, json);
      return 0;
    }
    if (*derive) {
      const Family f = parse_family_arg(family);
      const auto qs = parse_qs(derive_qs);
      const DerivedDatum dd = interpolate_datum(f, qs);
      std::ostringstream report;
      bool ok = true;
      for (auto q : qs) {
        const auto rep = verify_counts(build_scene(f, q));
        ok = ok && rep.ok();
        report << rep.str();
      }
      const auto val = validate_datum(dd.datum);
      ok = ok && val.ok();
      report << val.str();
      for (const auto& n : dd.notes) report << "note\t" << n << '\n';
      report << "action\n";
      write_tsv(report, dd.action);
      const std::string json = datum_to_json(dd.datum);
      if (out_path.empty()) {
        out << json;
        err << report.str();
      } else {
        write_text(out_path, json);
        out << report.str();
      }
      return ok ? 0 : 1;
    }
    if (*verify) {
      const Family f = parse_family_arg(family);
      bool ok = true;
      for (auto q : parse_qs(verify_qs)) {
        const auto rep = verify_counts(build_scene(f, q));
        ok = ok && rep.ok();
        out << rep.str();
      }
      return ok ? 0 : 1;
    }
    if (*selftest) return acceptance::run_acceptance(out) ? 0 : 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace twklv::cli
