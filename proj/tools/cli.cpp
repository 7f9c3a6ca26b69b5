#include "cli.hpp"

#include "cmtype/constructions.hpp"
#include "cmtype/engine.hpp"
#include "cmtype/errors.hpp"
#include "cmtype/kernels.hpp"
#include "cmtype/reference_cases.hpp"
#include "cmtype/report_json.hpp"
#include "cmtype/typecalc.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace cmtype::cli {
namespace {

struct Options {
  std::string semigroup;
  std::string gens;
  std::string field = "qq";
  std::string engine = "auto";
  std::string filter;
  int bound = 0;
  bool json = false;
};

std::vector<int> parse_csv(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw ArgumentError("bad semigroup generator '" + item + "' in '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ArgumentError("no semigroup generators given");
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "-";
  if constexpr (std::is_same_v<T, bool>) {
    return yes_no(*v);
  } else if constexpr (std::is_same_v<T, std::string>) {
    return *v;
  } else {
    return std::to_string(*v);
  }
}

void print_semigroup(std::ostream& out, const NumericalSemigroup& h) {
  const auto inv = h.invariants();
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  out << "semigroup            " << h.to_string() << "\n"
      << "multiplicity         " << inv.multiplicity << "\n"
      << "embedding dimension  " << inv.embedding_dimension << "\n"
      << "frobenius            " << inv.frobenius << "\n"
      << "conductor            " << inv.conductor << "\n"
      << "genus                " << h.gaps().size() << "\n"
      << "pseudo-frobenius     " << list(h.pseudo_frobenius()) << "\n"
      << "type                 " << inv.type << "\n"
      << "symmetric            " << yes_no(inv.is_symmetric) << "\n"
      << "max embedding dim    " << yes_no(inv.is_med) << "\n"
      << "apery(e)             " << list(h.apery(inv.multiplicity)) << "\n";
}

void print_report(std::ostream& out, const IdealReport& rep) {
  out << "ideal                " << rep.ideal << "  [" << rep.engine << " engine]\n"
      << "mu(I)                " << rep.mu << "\n"
      << "r_R(I)               " << rep.module_type << "\n"
      << "r(R/I)               " << opt_str(rep.quotient_type) << "\n"
      << "length(R/I)          " << opt_str(rep.colength) << "\n"
      << "r(R x I)             " << rep.type_idealization << "  (socle " << rep.type_by_socle
      << ", cokernel " << rep.type_by_cokernel << ")\n"
      << "socle excess         " << rep.socle_excess << "\n"
      << "mu(cokernel)         " << rep.cokernel_mu << "\n"
      << "closed               " << yes_no(rep.is_closed) << "\n"
      << "trace                " << opt_str(rep.is_trace) << "\n"
      << "residually faithful  " << yes_no(rep.is_residually_faithful) << "\n"
      << "Ulrich ideal         " << opt_str(rep.is_ulrich_ideal) << "\n"
      << "reduction            " << opt_str(rep.reduction) << "\n"
      << "Ulrich w.r.t. m      " << yes_no(rep.is_ulrich_module_wrt_m) << "\n"
      << "isomorphic to K      " << yes_no(rep.is_canonical) << "\n"
      << "principal            " << yes_no(rep.is_principal) << "\n";
  for (const auto& v : rep.verdicts) {
    out << (v.pass ? "  pass  " : "  FAIL  ") << std::left << std::setw(28) << v.name << v.detail
        << "\n";
  }
}

long long elapsed_us(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int semigroup_info(const std::string& gens_text) {
    const auto h = make_semigroup(parse_csv(gens_text));
    if (opt_.json) {
      emit("semigroup info", {{"semigroup", h->generators()}},
           {{"semigroup", semigroup_json(*h)}, {"verdicts", nlohmann::json::array()}});
    } else {
      print_semigroup(out_, *h);
    }
    return kOk;
  }

  int ideal_analyze() {
    const auto h = make_semigroup(parse_csv(opt_.semigroup));
    if (opt_.gens.empty()) throw ArgumentError("--gens is required");
    const auto spec = FieldSpec::parse(opt_.field);
    const auto exprs = parse_expression_list(opt_.gens);
    const bool monomial_input =
        std::all_of(exprs.begin(), exprs.end(), [](const auto& e) { return e.is_monomial(); });
    std::string engine = opt_.engine;
    if (engine == "auto") engine = monomial_input ? "monomial" : "series";
    if (engine == "monomial" && !monomial_input) {
      throw ArgumentError("the monomial engine needs monomial generators");
    }
    if (engine != "monomial" && engine != "series") {
      throw ArgumentError("unknown engine '" + engine + "'");
    }

    IdealReport rep;
    if (engine == "monomial") {
      // Orders of the generators as elements of k[t]; a coefficient that
      // vanishes in the chosen field drops its term.
      std::vector<int> exps;
      auto collect = [&](const auto& f) {
        for (const auto& e : exprs) {
          const auto s = to_series(e, f);
          if (!s.is_zero()) exps.push_back(*s.order());
        }
      };
      if (spec.kind == FieldKind::prime_field) {
        collect(PrimeField(spec));
      } else {
        collect(Rationals());
      }
      if (exps.empty()) throw ArgumentError("an ideal needs at least one nonzero generator");
      rep = classify(MonomialEngine(h), RelativeIdeal::from_exponents(h, exps));
    } else if (spec.kind == FieldKind::rationals) {
      const Rationals f;
      rep = classify(SeriesEngine(h, f), parse_ideal(h, f, opt_.gens));
    } else {
      const PrimeField f(spec);
      rep = classify(SeriesEngine(h, f), parse_ideal(h, f, opt_.gens));
    }

    if (opt_.json) {
      emit("ideal analyze",
           {{"semigroup", h->generators()},
            {"gens", opt_.gens},
            {"field", spec.to_string()},
            {"engine", opt_.engine}},
           {{"semigroup", semigroup_json(*h)},
            {"report", report_json(rep)},
            {"verdicts", verdicts_json(rep.verdicts)}});
    } else {
      out_ << "semigroup            " << h->to_string() << "  over " << spec.to_string() << "\n";
      print_report(out_, rep);
    }
    return rep.all_pass() ? kOk : kConsistency;
  }

  int verify_reference() {
    const auto suite = run_reference_cases(opt_.filter);
    if (opt_.json) {
      emit("verify paper", {{"filter", opt_.filter}}, {{"suite", suite_json(suite)}});
    } else {
      for (const auto& c : suite.cases) {
        out_ << (c.pass() ? "pass  " : "FAIL  ") << c.name << "\n";
        if (c.pass()) continue;
        if (c.error) out_ << "      error: " << *c.error << "\n";
        for (const auto& k : c.checks) {
          out_ << "      " << k.quantity << ": expected " << k.expected << ", computed "
               << k.computed << (k.pass() ? "" : "  <--") << "\n";
        }
      }
      out_ << suite.cases.size() - static_cast<std::size_t>(suite.failures()) << "/"
           << suite.cases.size() << " cases passed\n";
    }
    if (suite.cases.empty()) throw ArgumentError("no reference case matches '" + opt_.filter + "'");
    return suite.failures() == 0 ? kOk : kConsistency;
  }

  int sup_search() {
    const auto h = make_semigroup(parse_csv(opt_.semigroup));
    const int bound = opt_.bound > 0 ? opt_.bound : h->conductor() + h->multiplicity();
    const auto res = cmtype::sup_search(h, bound);
    const int predicted = h->is_dvr() ? 1 : h->type() + h->multiplicity();
    const MonomialEngine eng(h);
    const std::string witness = eng.describe(*res.witness);
    const std::vector<Verdict> verdicts{
        {"sup-bound", res.value <= predicted,
         std::to_string(res.value) + " <= " + std::to_string(predicted)}};
    if (opt_.json) {
      emit("sup-search", {{"semigroup", h->generators()}, {"bound", bound}},
           {{"semigroup", semigroup_json(*h)},
            {"sup", {{"value", res.value},
                     {"predicted", predicted},
                     {"witness", witness},
                     {"searched", res.searched}}},
            {"verdicts", verdicts_json(verdicts)}});
    } else {
      out_ << "semigroup            " << h->to_string() << "\n"
           << "ideals searched      " << res.searched << "\n"
           << "max r(R x I)         " << res.value << "\n"
           << "r(R) + e             " << predicted << "\n"
           << "witness              " << witness << "\n";
    }
    return verdicts.front().pass ? kOk : kConsistency;
  }

  int enumerate() {
    const auto h = make_semigroup(parse_csv(opt_.semigroup));
    const int bound = opt_.bound > 0 ? opt_.bound : h->conductor();
    const std::string filter = opt_.filter.empty() ? "all" : opt_.filter;
    const MonomialEngine eng(h);
    auto keep = [&](const IdealReport& rep) {
      if (filter == "all") return true;
      if (filter == "closed") return rep.is_closed;
      if (filter == "trace") return rep.is_trace.value_or(false);
      if (filter == "residually-faithful") return rep.is_residually_faithful;
      if (filter == "ulrich") return rep.is_ulrich_ideal.value_or(false);
      if (filter == "ulrich-wrt-m") return rep.is_ulrich_module_wrt_m;
      if (filter == "canonical") return rep.is_canonical;
      if (filter == "principal") return rep.is_principal;
      throw ArgumentError("unknown enumerate filter '" + filter +
                          "' (all, closed, trace, residually-faithful, ulrich, ulrich-wrt-m, "
                          "canonical, principal)");
    };
    keep(IdealReport{});  // validate the filter before enumerating

    auto rows = nlohmann::json::array();
    bool all_pass = true;
    std::size_t matched = 0;
    const auto total = enumerate_monomial_ideals(h, bound, [&](const RelativeIdeal& e) {
      // Shift into m: t^e E is an m-primary ideal isomorphic to E.
      const auto i = h->is_dvr() ? e : e.shifted(h->multiplicity());
      const auto rep = classify(eng, i);
      all_pass = all_pass && rep.all_pass();
      if (!keep(rep)) return;
      ++matched;
      if (opt_.json) {
        rows.push_back(report_json(rep));
      } else {
        out_ << rep.ideal << "  mu " << rep.mu << "  r_R " << rep.module_type << "  r(RxI) "
             << rep.type_idealization << (rep.all_pass() ? "" : "  VERDICT FAILURE") << "\n";
      }
    });
    if (opt_.json) {
      emit("enumerate", {{"semigroup", h->generators()}, {"bound", bound}, {"filter", filter}},
           {{"semigroup", semigroup_json(*h)},
            {"ideals", rows},
            {"enumerated", total},
            {"matched", matched},
            {"verdicts", nlohmann::json::array()}});
    } else {
      out_ << matched << " of " << total << " ideals match '" << filter << "'\n";
    }
    return all_pass ? kOk : kConsistency;
  }

 private:
  void emit(const std::string& command, nlohmann::json input, nlohmann::json body) {
    out_ << dump_document(make_document(command, std::move(input), std::move(body), elapsed_us(start_)));
  }

  const Options& opt_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string caret_message(const ParseError& e, const std::string& text) {
  std::ostringstream os;
  os << e.what() << "\n  " << text << "\n  " << std::string(e.position(), ' ') << "^";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohen-Macaulay types of idealizations over numerical semigroup rings", "cmtype"};
  app.require_subcommand(1);
  Options opt;
  std::string info_gens;
  std::string isa;

  app.add_option("--isa", isa, "kernel variant: scalar or avx2 (default: best available)");

  auto* semigroup = app.add_subcommand("semigroup", "semigroup invariants");
  semigroup->require_subcommand(1);
  auto* info = semigroup->add_subcommand("info", "multiplicity, Frobenius number, type, ...");
  info->add_option("gens", info_gens, "generators, comma separated")->required();
  info->add_flag("--json", opt.json, "emit JSON");

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--semigroup", opt.semigroup, "semigroup generators, comma separated")
        ->required();
    cmd->add_flag("--json", opt.json, "emit JSON");
  };

  auto* ideal = app.add_subcommand("ideal", "ideal analysis");
  ideal->require_subcommand(1);
  auto* analyze = ideal->add_subcommand("analyze", "full type report for one ideal");
  add_common(analyze);
  analyze->add_option("--gens", opt.gens, "generator expressions, comma separated")->required();
  analyze->add_option("--field", opt.field, "qq or fp:<p>");
  analyze->add_option("--engine", opt.engine, "auto, monomial or series")
      ->check(CLI::IsMember({"auto", "monomial", "series"}));

  auto* verify = app.add_subcommand("verify", "built-in reference cases");
  verify->require_subcommand(1);
  auto* paper = verify->add_subcommand("paper", "run the reference cases");
  paper->add_option("--filter", opt.filter, "substring of case names");
  paper->add_flag("--json", opt.json, "emit JSON");

  auto* sup = app.add_subcommand("sup-search", "maximum r(R x I) over monomial ideals");
  add_common(sup);
  sup->add_option("--bound", opt.bound, "largest generator exponent (default c + e)")
      ->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "list monomial ideals with a property");
  add_common(enumerate);
  enumerate->add_option("--bound", opt.bound, "largest generator exponent (default c)")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--filter", opt.filter, "all, closed, trace, ulrich, ...");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (!isa.empty()) {
      if (isa == "scalar") {
        kernels::set_isa(kernels::Isa::scalar);
      } else if (isa == "avx2") {
        kernels::set_isa(kernels::Isa::avx2);
      } else {
        throw ArgumentError("unknown --isa '" + isa + "'");
      }
    }
    Runner runner(opt, out);
    if (info->parsed()) return runner.semigroup_info(info_gens);
    if (analyze->parsed()) return runner.ideal_analyze();
    if (paper->parsed()) return runner.verify_reference();
    if (sup->parsed()) return runner.sup_search();
    if (enumerate->parsed()) return runner.enumerate();
    err << "no command\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << caret_message(e, opt.gens) << "\n";
    return kInputError;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace cmtype::cli
