#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "thermo/monotones.hpp"
#include "thermo/quasiorder.hpp"
#include "thermo/resource_file.hpp"
#include "thermo/workcost.hpp"

namespace thermo::cli {

namespace {

constexpr int kRealDigits = 18;
constexpr int kCurveDigits = 12;

struct Options {
  std::string file;
  std::vector<std::string> names;
  std::string beta = "1";
  std::string epsilon;
  std::string out_path;
  std::vector<std::string> levels;
  int precision = 12;
  bool witness = false;
};

void print_matrix(std::ostream& out, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "\t" : " ") << m(i, j);
    out << "\n";
  }
}

void print_vector(std::ostream& out, const Vector& v) {
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ")";
}

Real parse_positive_real(const std::string& text, const std::string& flag) {
  Real value;
  try {
    value = Real(text);
  } catch (const std::exception&) {
    throw std::invalid_argument(flag + ": invalid real '" + text + "'");
  }
  if (!(value > 0)) throw std::invalid_argument(flag + " must be positive, got '" + text + "'");
  return value;
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
  const ResourceFile file = ResourceFile::load(opt.file, opt.precision);
  const ResourceState& a = file.state(opt.names.at(0));
  const ResourceState& b = file.state(opt.names.at(1));

  const Convertibility lp = convertible_lp(a, b);
  const bool lorenz = lorenz_dominates(lorenz_curve(a), lorenz_curve(b));
  const bool hinge_d = hinge_condition_d(a, b);
  const bool hinge_e = hinge_condition_e(a, b);

  out << "check " << opt.names[0] << " -> " << opt.names[1] << "\n";
  out << "lp_feasibility\t" << std::boolalpha << lp.convertible << "\n";
  out << "lorenz\t" << lorenz << "\n";
  out << "hinge_d\t" << hinge_d << "\n";
  out << "hinge_e\t" << hinge_e << "\n";

  if (lp.convertible != lorenz || lorenz != hinge_d || hinge_d != hinge_e) {
    err << "internal error: convertibility criteria disagree\n";
    return kInternalError;
  }
  if (lp.convertible && !is_gibbs_stochastic_witness(lp.witness->matrix, a, b)) {
    err << "internal error: witness G fails verification\n";
    return kInternalError;
  }
  out << "verdict\t" << (lp.convertible ? "convertible" : "not convertible") << "\n";
  if (opt.witness) {
    if (lp.convertible) {
      out << "witness G (" << b.size() << "x" << a.size() << "):\n";
      print_matrix(out, lp.witness->matrix);
    } else {
      out << "farkas certificate y = ";
      print_vector(out, *lp.certificate);
      out << "\n";
    }
  }
  return lp.convertible ? kOk : kNotConvertible;
}

const char* pass(bool ok) { return ok ? "PASS" : "FAIL"; }

int cmd_work(const Options& opt, std::ostream& out, std::ostream& err) {
  const Real beta = parse_positive_real(opt.beta, "--beta");
  std::optional<Rational> epsilon;
  if (!opt.epsilon.empty()) {
    try {
      epsilon = Rational::parse(opt.epsilon);
    } catch (const RationalError& e) {
      throw std::invalid_argument(std::string("--epsilon: ") + e.what());
    }
  }
  const ResourceFile file = ResourceFile::load(opt.file, opt.precision);
  const ResourceState& a = file.state(opt.names.at(0));
  const ResourceState& b = file.state(opt.names.at(1));

  const WorkResult result = work_gain_lp(a, b, beta);
  out << "work " << opt.names[0] << " -> " << opt.names[1] << " (beta = " << format_real(beta, kRealDigits) << ")\n";
  out << "x* = " << result.x_star << "\n";
  out << "W = " << format_real(result.work_gain, kRealDigits) << "\n";
  if (opt.witness) {
    out << "witness F (" << b.size() << "x" << a.size() << "):\n";
    print_matrix(out, result.witness_F);
  }
  if (!epsilon) return kOk;

  const LiftedMap lift = lift_to_thermal_map(result, a, b, *epsilon);
  const auto eps_max = lift_epsilon_max(result, a, b);
  out << "lift epsilon = " << lift.epsilon << "\n";
  out << "epsilon_max = " << (eps_max ? eps_max->str() : std::string("none")) << "\n";
  out << "t = " << lift.t << "\n";
  out << "y = " << lift.y << "\n";
  out << "u = ";
  print_vector(out, lift.u);
  out << "\nv = ";
  print_vector(out, lift.v);
  out << "\nG (" << lift.G.rows() << "x" << lift.G.cols() << "):\n";
  print_matrix(out, lift.G);
  const LiftVerification check = verify_lift(lift, a, b);
  out << "nonnegative\t" << pass(check.nonnegative) << "\n";
  out << "column_sums\t" << pass(check.column_sums) << "\n";
  out << "resource_action\t" << pass(check.resource_action) << "\n";
  out << "gibbs_action\t" << pass(check.gibbs_action) << "\n";
  out << "z_identity\t" << pass(check.z_identity) << "\n";
  out << "verification: " << pass(check.all()) << "\n";
  if (!check.all()) {
    err << "internal error: lifted map fails verification\n";
    return kInternalError;
  }
  return kOk;
}

void write_lorenz_tsv(std::ostream& os, const std::vector<std::pair<std::string, LorenzCurve>>& curves) {
  os << "name\tt_exact\tL_exact\tt_decimal\tL_decimal\n";
  for (const auto& [name, curve] : curves)
    for (const auto& pt : curve.points())
      os << name << "\t" << pt.t << "\t" << pt.L << "\t" << pt.t.decimal(kCurveDigits) << "\t"
         << pt.L.decimal(kCurveDigits) << "\n";
}

int cmd_lorenz(const Options& opt, std::ostream& out, std::ostream& err) {
  const ResourceFile file = ResourceFile::load(opt.file, opt.precision);
  std::vector<std::string> names = opt.names;
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  std::vector<std::pair<std::string, LorenzCurve>> curves;
  for (const auto& name : names) curves.emplace_back(name, lorenz_curve(file.state(name)));

  if (opt.out_path.empty()) {
    write_lorenz_tsv(out, curves);
    return kOk;
  }
  std::ofstream os(opt.out_path);
  if (!os) {
    err << "error: cannot write '" << opt.out_path << "'\n";
    return kInputError;
  }
  write_lorenz_tsv(os, curves);
  os.close();
  if (!os) {
    err << "error: failed writing '" << opt.out_path << "'\n";
    return kInputError;
  }
  for (const auto& [name, curve] : curves)
    out << name << "\t" << curve.points().size() << " breakpoints\t" << curve.kinks() << " kinks\n";
  return kOk;
}

int cmd_monotone(const Options& opt, std::ostream& out, std::ostream&) {
  const ResourceFile file = ResourceFile::load(opt.file, opt.precision);
  for (const auto& name : opt.names) {
    out << "monotones " << name << "\n";
    for (const auto& m : monotone_family(file.state(name))) {
      out << m.name << "\t" << format_real(m.value, kRealDigits);
      if (m.exact) out << "\t" << *m.exact;
      out << "\n";
    }
  }
  return kOk;
}

void print_gibbs(std::ostream& out, const Vector& g) {
  out << "level\tg_exact\tg_decimal\n";
  for (std::size_t i = 0; i < g.size(); ++i) out << i << "\t" << g[i] << "\t" << g[i].decimal(kCurveDigits) << "\n";
}

int cmd_gibbs(const Options& opt, std::ostream& out, std::ostream& err) {
  if (!opt.levels.empty()) {
    if (!opt.file.empty()) {
      err << "error: give either FILE NAME or --levels, not both\n";
      return kInputError;
    }
    Hamiltonian h;
    for (const auto& level : opt.levels) {
      try {
        h.levels.emplace_back(level);
      } catch (const std::exception&) {
        throw std::invalid_argument("--levels: invalid real '" + level + "'");
      }
    }
    h.beta = parse_positive_real(opt.beta, "--beta");
    h.precision = opt.precision;
    print_gibbs(out, gibbs_from_hamiltonian(h));
    return kOk;
  }
  if (opt.file.empty() || opt.names.size() != 1) {
    err << "error: gibbs needs FILE NAME or --levels\n";
    return kInputError;
  }
  const ResourceFile file = ResourceFile::load(opt.file, opt.precision);
  const ResourceEntry& entry = file.entry(opt.names[0]);
  if (!entry.hamiltonian) {
    err << "error: state '" << opt.names[0] << "' has no 'levels'; its g is given directly\n";
    return kInputError;
  }
  print_gibbs(out, entry.state.g());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact convertibility and work cost of quasiclassical thermal resources", "thermo"};
  app.require_subcommand(1);
  Options opt;

  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", opt.precision, "Decimal digits for rationalized Gibbs weights")
        ->check(CLI::Range(1, kMaxGibbsPrecision));
  };

  CLI::App* check = app.add_subcommand("check", "Decide A -> B by LP, Lorenz curves and both hinge criteria");
  check->add_option("file", opt.file, "Resource file (JSON)")->required();
  check->add_option("names", opt.names, "A B")->required()->expected(2);
  check->add_flag("--witness", opt.witness, "Print the Gibbs-stochastic witness or the Farkas certificate");
  add_precision(check);

  CLI::App* work = app.add_subcommand("work", "Exact work gain of A -> B");
  work->add_option("file", opt.file, "Resource file (JSON)")->required();
  work->add_option("names", opt.names, "A B")->required()->expected(2);
  work->add_option("--beta", opt.beta, "Inverse temperature for W = -(1/beta) ln x*");
  work->add_flag("--witness", opt.witness, "Print the LP witness F");
  work->add_option("--epsilon", opt.epsilon, "Lift to the system+weight map at e^{-beta E} = epsilon (rational)");
  add_precision(work);

  CLI::App* lorenz = app.add_subcommand("lorenz", "Emit Lorenz curve breakpoints as TSV");
  lorenz->add_option("file", opt.file, "Resource file (JSON)")->required();
  lorenz->add_option("names", opt.names, "State names")->required()->expected(1, -1);
  lorenz->add_option("--out", opt.out_path, "Write the TSV here and print a summary");
  add_precision(lorenz);

  CLI::App* monotone = app.add_subcommand("monotone", "Print the divergence family of a state");
  monotone->add_option("file", opt.file, "Resource file (JSON)")->required();
  monotone->add_option("names", opt.names, "State names")->required()->expected(1, -1);
  add_precision(monotone);

  CLI::App* gibbs = app.add_subcommand("gibbs", "Print the rationalized Gibbs vector of a Hamiltonian");
  gibbs->add_option("file", opt.file, "Resource file (JSON)");
  gibbs->add_option("names", opt.names, "State name")->expected(0, 1);
  gibbs->add_option("--levels", opt.levels, "Energy levels (instead of FILE NAME)")->delimiter(',');
  gibbs->add_option("--beta", opt.beta, "Inverse temperature with --levels");
  add_precision(gibbs);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(opt, out, err);
    if (*work) return cmd_work(opt, out, err);
    if (*lorenz) return cmd_lorenz(opt, out, err);
    if (*monotone) return cmd_monotone(opt, out, err);
    if (*gibbs) return cmd_gibbs(opt, out, err);
  } catch (const LiftError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    // invalid_argument and friends derive from logic_error; only the rest is internal.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e) ||
        dynamic_cast<const std::out_of_range*>(&e)) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace thermo::cli
