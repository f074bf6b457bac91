// hw: Hoelder weights, diagonal-map operator weights, extremizers, and
// inequality checks, with machine-readable reports on stdout.
//
// Every subcommand prints one JSON document (or `--format csv` for a flat
// key,value listing of the scalar fields). Runs with the same arguments and
// seed are byte-identical. Exit codes: 0 success/satisfied, 1 unsatisfied or
// failed certification, 2 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "hw/diagonal_map.hpp"
#include "hw/exponent.hpp"
#include "hw/inequalities.hpp"
#include "hw/measure.hpp"
#include "hw/operator_weight.hpp"
#include "hw/oracle.hpp"
#include "hw/weights.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

// ---------- formatting ----------

std::string fmt_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

/// Weights serialize as JSON numbers, except infinity which is the string
/// "inf" so that consumers never need float-inf support.
ordered_json weight_json(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

std::string fmt_complex(const std::complex<double>& z) {
  if (z.imag() == 0.0) return fmt_double(z.real());
  std::string s = fmt_double(z.real());
  s += z.imag() < 0.0 ? '-' : '+';
  s += fmt_double(std::fabs(z.imag()));
  s += 'i';
  return s;
}

ordered_json vector_json(const Eigen::VectorXcd& v) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(fmt_complex(v[i]));
  return arr;
}

ordered_json array_json(const Eigen::ArrayXd& v) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(fmt_double(v[i]));
  return arr;
}

// ---------- parsing ----------

double parse_finite_double(std::string_view text, const char* what) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);  // from_chars rejects '+'
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v))
    throw std::invalid_argument(std::string("cannot parse ") + what + " '" + std::string(text) + "'");
  return v;
}

/// Complex literals: `a`, `bi`, `a+bi`, `a-bi` (also bare `i`, `-i`).
std::complex<double> parse_complex(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty vector component");
  // Split at the last top-level sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E')
      split = i;
  }
  auto parse_imag_part = [](std::string_view part) {
    // part ends with 'i'; the coefficient may be empty or a bare sign.
    std::string_view coeff = part.substr(0, part.size() - 1);
    if (coeff.empty() || coeff == "+") return 1.0;
    if (coeff == "-") return -1.0;
    return parse_finite_double(coeff, "imaginary part");
  };
  if (text.back() == 'i') {
    if (split == std::string_view::npos)
      return {0.0, parse_imag_part(text)};
    return {parse_finite_double(text.substr(0, split), "real part"),
            parse_imag_part(text.substr(split))};
  }
  return {parse_finite_double(text, "component"), 0.0};
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

Eigen::VectorXcd parse_cvector(const std::string& text) {
  const auto parts = split_commas(text);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = parse_complex(parts[i]);
  return v;
}

/// Extended nonnegative reals for masses and function values: `inf` allowed.
Eigen::ArrayXd parse_xvector(const std::string& text) {
  const auto parts = split_commas(text);
  Eigen::ArrayXd v(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == "inf") {
      v[static_cast<Eigen::Index>(i)] = std::numeric_limits<double>::infinity();
    } else {
      v[static_cast<Eigen::Index>(i)] = parse_finite_double(parts[i], "value");
    }
  }
  return v;
}

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t seed_flag) {
  if (seed_opt->count() > 0) return seed_flag;
  if (const char* env = std::getenv("HW_SEED")) {
    std::uint64_t v = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      throw std::invalid_argument("HW_SEED is not an unsigned integer");
    return v;
  }
  return 0;
}

// ---------- report plumbing ----------

const char* direction_name(hw::Direction d) {
  return d == hw::Direction::TLess ? "t-less" : "t-greater";
}

ordered_json inequality_json(const hw::InequalityReport& rep) {
  ordered_json j;
  j["lhs"] = weight_json(rep.lhs.value());
  j["rhs"] = weight_json(rep.rhs.value());
  j["direction"] = direction_name(rep.direction);
  j["satisfied"] = rep.satisfied;
  j["slack"] = rep.slack;
  return j;
}

void flatten_csv(const ordered_json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten_csv(value, prefix.empty() ? key : prefix + "." + key, os);
  } else if (j.is_array()) {
    // vectors are omitted from the flat form
  } else if (j.is_string()) {
    os << prefix << "," << j.get<std::string>() << "\n";
  } else {
    os << prefix << "," << j.dump() << "\n";
  }
}

void emit(const ordered_json& report, const std::string& format) {
  if (format == "csv") {
    flatten_csv(report, "", std::cout);
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

/// Fuse single-value flags with their following token ("-p" "-inf" becomes
/// "-p-inf") so values with a leading dash parse cleanly.
std::vector<std::string> fuse_args(int argc, char** argv) {
  static const std::vector<std::string> value_flags = {
      "-p", "-s", "-t", "-r", "-x", "-v", "-f", "-g", "-k",
      "--masses", "--values", "--samples", "--refine", "--seed",
      "--threshold", "--workers", "--rtol", "--format"};
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    const std::string tok = argv[i];
    const bool is_value_flag =
        std::find(value_flags.begin(), value_flags.end(), tok) != value_flags.end();
    if (is_value_flag && i + 1 < argc) {
      const std::string value = argv[++i];
      if (tok.size() == 2) {
        out.push_back(tok + value);
      } else {
        out.push_back(tok + "=" + value);
      }
    } else {
      out.push_back(tok);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hoelder weights and diagonal operator weights"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  std::string format = "json";
  app.add_option("--format", format, "output format: json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // weight
  auto* cmd_weight = app.add_subcommand("weight", "Hoelder weight ||x||_p of a complex vector");
  std::string w_p, w_x;
  cmd_weight->add_option("-p", w_p, "exponent: nonzero real, inf, or -inf")->required();
  cmd_weight->add_option("-x", w_x, "comma-separated complex vector, e.g. 1,2+3i")->required();

  // opweight
  auto* cmd_op = app.add_subcommand("opweight", "closed-form operator weight of diag(v)");
  std::string o_s, o_t, o_v;
  cmd_op->add_option("-s", o_s, "source exponent")->required();
  cmd_op->add_option("-t", o_t, "target exponent")->required();
  cmd_op->add_option("-v", o_v, "diagonal entries")->required();

  // extremal
  auto* cmd_ex = app.add_subcommand("extremal", "extremizing vector or sequence for diag(v)");
  std::string e_s, e_t, e_v;
  std::uint64_t e_k = 1'000'000;
  cmd_ex->add_option("-s", e_s, "source exponent")->required();
  cmd_ex->add_option("-t", e_t, "target exponent")->required();
  cmd_ex->add_option("-v", e_v, "diagonal entries")->required();
  cmd_ex->add_option("-k", e_k, "sequence index to emit (default 1000000)");

  // verify-hoelder
  auto* cmd_vh = app.add_subcommand("verify-hoelder", "generalized Hoelder inequality check");
  std::string vh_r, vh_s, vh_x, vh_v;
  cmd_vh->add_option("-r", vh_r, "first exponent")->required();
  cmd_vh->add_option("-s", vh_s, "second exponent")->required();
  cmd_vh->add_option("-v", vh_v, "first vector")->required();
  cmd_vh->add_option("-x", vh_x, "second vector")->required();

  // reverse-hoelder
  auto* cmd_rh = app.add_subcommand("reverse-hoelder", "reverse Hoelder check on a measure space");
  std::string rh_r, rh_s, rh_f, rh_g, rh_m;
  cmd_rh->add_option("-r", rh_r, "exponent r < 1")->required();
  cmd_rh->add_option("-s", rh_s, "exponent s < 1, 1/r + 1/s = 1")->required();
  cmd_rh->add_option("-f", rh_f, "values of |f| (inf allowed)")->required();
  cmd_rh->add_option("-g", rh_g, "values of |g| (inf allowed)")->required();
  cmd_rh->add_option("--masses", rh_m, "atom masses")->required();

  // lp
  auto* cmd_lp = app.add_subcommand("lp", "||f||_p on a discrete measure space");
  std::string lp_p, lp_vals, lp_m;
  cmd_lp->add_option("-p", lp_p, "exponent")->required();
  cmd_lp->add_option("--values", lp_vals, "values of |f| (inf allowed)")->required();
  cmd_lp->add_option("--masses", lp_m, "atom masses")->required();

  // oracle
  auto* cmd_or = app.add_subcommand("oracle", "brute-force lower bound on the operator weight");
  std::string or_s, or_t, or_v;
  std::uint64_t or_samples = 10'000, or_refine = 200, or_seed = 0;
  double or_threshold = 1e9;
  int or_workers = 1;
  cmd_or->add_option("-s", or_s, "source exponent")->required();
  cmd_or->add_option("-t", or_t, "target exponent")->required();
  cmd_or->add_option("-v", or_v, "diagonal entries")->required();
  cmd_or->add_option("--samples", or_samples, "random samples (default 10000)");
  cmd_or->add_option("--refine", or_refine, "refinement iterations (default 200)");
  auto* or_seed_opt = cmd_or->add_option("--seed", or_seed, "RNG seed (default $HW_SEED or 0)");
  cmd_or->add_option("--threshold", or_threshold, "divergence threshold (default 1e9)");
  cmd_or->add_option("--workers", or_workers, "sampling threads; never changes the result");

  // certify
  auto* cmd_cf = app.add_subcommand("certify", "closed form vs oracle with a pass/fail gap");
  std::string cf_s, cf_t, cf_v;
  std::uint64_t cf_samples = 10'000, cf_refine = 200, cf_seed = 0;
  double cf_threshold = 1e9, cf_rtol = 1e-4;
  int cf_workers = 1;
  cmd_cf->add_option("-s", cf_s, "source exponent")->required();
  cmd_cf->add_option("-t", cf_t, "target exponent")->required();
  cmd_cf->add_option("-v", cf_v, "diagonal entries")->required();
  cmd_cf->add_option("--rtol", cf_rtol, "relative gap tolerance (default 1e-4)");
  cmd_cf->add_option("--samples", cf_samples, "random samples (default 10000)");
  cmd_cf->add_option("--refine", cf_refine, "refinement iterations (default 200)");
  auto* cf_seed_opt = cmd_cf->add_option("--seed", cf_seed, "RNG seed (default $HW_SEED or 0)");
  cmd_cf->add_option("--threshold", cf_threshold, "divergence threshold (default 1e9)");
  cmd_cf->add_option("--workers", cf_workers, "sampling threads; never changes the result");

  auto args = fuse_args(argc, argv);
  try {
    std::vector<const char*> ptrs;
    ptrs.push_back(argv[0]);
    for (const auto& a : args) ptrs.push_back(a.c_str());
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e, std::cerr, std::cerr);
    return 2;
  }

  try {
    if (*cmd_weight) {
      const hw::Exponent p = hw::Exponent::parse(w_p);
      const Eigen::VectorXcd x = parse_cvector(w_x);
      ordered_json rep;
      rep["command"] = "weight";
      rep["inputs"] = {{"p", p.str()}, {"x", vector_json(x)}};
      rep["result"] = weight_json(hw::hoelder_weight(x, p).value());
      emit(rep, format);
      return 0;
    }

    if (*cmd_op) {
      const hw::Exponent s = hw::Exponent::parse(o_s);
      const hw::Exponent t = hw::Exponent::parse(o_t);
      const Eigen::VectorXcd v = parse_cvector(o_v);
      ordered_json rep;
      rep["command"] = "opweight";
      rep["inputs"] = {{"s", s.str()}, {"t", t.str()}, {"v", vector_json(v)}};
      if (v.size() == 1) {
        // One-dimensional maps scale every weight by |v_1|; no case applies.
        rep["result"] = weight_json(std::abs(v[0]));
        rep["note"] = "n=1: ||D|| = |v_1| for all exponents";
      } else {
        const hw::DiagonalMap d(v);
        rep["result"] = weight_json(hw::operator_weight(s, t, d).value());
        rep["case"] = std::string(1, hw::case_letter(hw::classify(s, t, d)));
      }
      rep["provenance"] = "closed_form";
      emit(rep, format);
      return 0;
    }

    if (*cmd_ex) {
      const hw::Exponent s = hw::Exponent::parse(e_s);
      const hw::Exponent t = hw::Exponent::parse(e_t);
      const Eigen::VectorXcd v = parse_cvector(e_v);
      ordered_json rep;
      rep["command"] = "extremal";
      rep["inputs"] = {{"s", s.str()}, {"t", t.str()}, {"v", vector_json(v)}, {"k", e_k}};
      if (v.size() == 1) {
        rep["kind"] = "attained";
        rep["vector"] = ordered_json::array({"1"});
        rep["note"] = "n=1: every unit vector attains |v_1|";
        emit(rep, format);
        return 0;
      }
      const hw::DiagonalMap d(v);
      const hw::Extremizer ex = hw::extremizer(s, t, d);
      switch (ex.kind) {
        case hw::Extremizer::Kind::Vacuous:
          rep["kind"] = "vacuous";
          break;
        case hw::Extremizer::Kind::Attained: {
          rep["kind"] = "attained";
          rep["vector"] = vector_json(ex.vector);
          rep["source_weight"] = weight_json(hw::hoelder_weight(ex.vector, s).value());
          rep["mapped_weight"] = weight_json(hw::hoelder_weight(d.apply(ex.vector), t).value());
          break;
        }
        case hw::Extremizer::Kind::Sequence: {
          const std::uint64_t k = std::max(e_k, ex.k_min);
          const Eigen::VectorXcd xk = ex.at(k);
          rep["kind"] = "sequence";
          rep["divergent"] = ex.divergent;
          rep["k_min"] = ex.k_min;
          rep["k"] = k;
          rep["vector"] = vector_json(xk);
          rep["source_weight"] = weight_json(hw::hoelder_weight(xk, s).value());
          rep["mapped_weight"] = weight_json(hw::hoelder_weight(d.apply(xk), t).value());
          break;
        }
      }
      rep["case"] = std::string(1, hw::case_letter(hw::classify(s, t, d)));
      emit(rep, format);
      return 0;
    }

    if (*cmd_vh) {
      const double r = parse_finite_double(vh_r, "exponent r");
      const double s = parse_finite_double(vh_s, "exponent s");
      const Eigen::VectorXcd v = parse_cvector(vh_v);
      const Eigen::VectorXcd x = parse_cvector(vh_x);
      const hw::ExponentTriple triple = hw::ExponentTriple::conjugate(r, s);
      const hw::InequalityReport res = hw::check_generalized_hoelder(v, x, triple);
      ordered_json rep;
      rep["command"] = "verify-hoelder";
      rep["inputs"] = {{"r", fmt_double(r)}, {"s", fmt_double(s)},
                       {"v", vector_json(v)}, {"x", vector_json(x)}};
      rep["t"] = fmt_double(triple.t());
      rep["report"] = inequality_json(res);
      emit(rep, format);
      return res.satisfied ? 0 : 1;
    }

    if (*cmd_rh) {
      const double r = parse_finite_double(rh_r, "exponent r");
      const double s = parse_finite_double(rh_s, "exponent s");
      const hw::StepFunction f(parse_xvector(rh_f));
      const hw::StepFunction g(parse_xvector(rh_g));
      const hw::DiscreteMeasureSpace space(parse_xvector(rh_m));
      const hw::InequalityReport res = hw::check_reverse_hoelder(f, g, r, s, space);
      ordered_json rep;
      rep["command"] = "reverse-hoelder";
      rep["inputs"] = {{"r", fmt_double(r)}, {"s", fmt_double(s)},
                       {"f", array_json(f.values())}, {"g", array_json(g.values())},
                       {"masses", array_json(space.masses())}};
      rep["report"] = inequality_json(res);
      emit(rep, format);
      return res.satisfied ? 0 : 1;
    }

    if (*cmd_lp) {
      const hw::Exponent p = hw::Exponent::parse(lp_p);
      const hw::StepFunction f(parse_xvector(lp_vals));
      const hw::DiscreteMeasureSpace space(parse_xvector(lp_m));
      ordered_json rep;
      rep["command"] = "lp";
      rep["inputs"] = {{"p", p.str()}, {"values", array_json(f.values())},
                       {"masses", array_json(space.masses())}};
      rep["result"] = weight_json(hw::lp_weight(f, space, p).value());
      emit(rep, format);
      return 0;
    }

    if (*cmd_or) {
      const hw::Exponent s = hw::Exponent::parse(or_s);
      const hw::Exponent t = hw::Exponent::parse(or_t);
      const Eigen::VectorXcd v = parse_cvector(or_v);
      const std::uint64_t seed = resolve_seed(or_seed_opt, or_seed);
      ordered_json rep;
      rep["command"] = "oracle";
      rep["inputs"] = {{"s", s.str()}, {"t", t.str()}, {"v", vector_json(v)},
                       {"samples", or_samples}, {"refine", or_refine},
                       {"threshold", or_threshold}};
      rep["seed"] = seed;
      if (v.size() == 1) {
        rep["lower_bound"] = weight_json(std::abs(v[0]));
        rep["witness"] = ordered_json::array({"1"});
        rep["diverging"] = false;
        rep["evaluations"] = 0;
        rep["note"] = "n=1: ratio is |v_1| for every x";
      } else {
        const hw::DiagonalMap d(v);
        const hw::SearchBudget budget{or_samples, or_refine, or_threshold, seed};
        const hw::OracleEstimate est = hw::oracle_operator_weight(d, s, t, budget, or_workers);
        rep["lower_bound"] = weight_json(est.lower_bound.value());
        rep["witness"] = vector_json(est.witness);
        rep["diverging"] = est.diverging;
        rep["evaluations"] = est.evaluations;
      }
      rep["provenance"] = "oracle";
      emit(rep, format);
      return 0;
    }

    if (*cmd_cf) {
      const hw::Exponent s = hw::Exponent::parse(cf_s);
      const hw::Exponent t = hw::Exponent::parse(cf_t);
      const Eigen::VectorXcd v = parse_cvector(cf_v);
      const std::uint64_t seed = resolve_seed(cf_seed_opt, cf_seed);
      ordered_json rep;
      rep["command"] = "certify";
      rep["inputs"] = {{"s", s.str()}, {"t", t.str()}, {"v", vector_json(v)},
                       {"rtol", cf_rtol}, {"samples", cf_samples}, {"refine", cf_refine}};
      rep["seed"] = seed;
      bool pass = false;
      if (v.size() == 1) {
        rep["closed_form"] = weight_json(std::abs(v[0]));
        rep["gap"] = 0.0;
        rep["note"] = "n=1: closed form and ratio coincide exactly";
        pass = true;
      } else {
        const hw::DiagonalMap d(v);
        const double closed = hw::operator_weight(s, t, d).value();
        const hw::SearchBudget budget{cf_samples, cf_refine, cf_threshold, seed};
        const hw::OracleEstimate est = hw::oracle_operator_weight(d, s, t, budget, cf_workers);
        rep["case"] = std::string(1, hw::case_letter(hw::classify(s, t, d)));
        rep["closed_form"] = weight_json(closed);
        rep["oracle"] = {{"lower_bound", weight_json(est.lower_bound.value())},
                         {"diverging", est.diverging},
                         {"evaluations", est.evaluations}};
        const double lb = est.lower_bound.value();
        if (std::isinf(closed)) {
          pass = est.diverging;
          rep["gap"] = pass ? ordered_json(0.0) : ordered_json("inf");
        } else if (closed == 0.0) {
          pass = lb <= 1e-12;
          rep["gap"] = lb;
        } else {
          const double gap = std::fabs(closed - lb) / closed;
          pass = gap <= cf_rtol && lb <= closed * (1.0 + 1e-9);
          rep["gap"] = gap;
        }
      }
      rep["pass"] = pass;
      rep["provenance"] = "both";
      emit(rep, format);
      return pass ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
