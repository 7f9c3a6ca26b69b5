#include "cmtype/reference_cases.hpp"

#include "cmtype/constructions.hpp"
#include "cmtype/engine.hpp"
#include "cmtype/errors.hpp"
#include "cmtype/typecalc.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace cmtype {
namespace {

class Recorder {
 public:
  explicit Recorder(CaseResult& r) : r_(r) {}

  void equal(std::string quantity, long long want, long long got) {
    r_.checks.push_back({std::move(quantity), std::to_string(want), std::to_string(got)});
  }
  void flag(std::string quantity, bool want, bool got) {
    r_.checks.push_back({std::move(quantity), want ? "true" : "false", got ? "true" : "false"});
  }

 private:
  CaseResult& r_;
};

struct ReferenceCase {
  std::string name;
  std::string description;
  std::function<void(Recorder&)> run;
};

SemigroupPtr sg(std::initializer_list<int> gens) { return make_semigroup(gens); }

RelativeIdeal mono(const SemigroupPtr& h, std::initializer_list<int> gens) {
  return RelativeIdeal::from_exponents(h, gens);
}

std::string coeff_term(int c, int exponent) {
  return std::to_string(c) + "*t^" + std::to_string(exponent);
}

// 25 distinct non-DVR semigroups with generators in [2, 30], fixed seed.
std::vector<SemigroupPtr> random_semigroups() {
  std::mt19937 rng(20240611u);
  std::vector<SemigroupPtr> out;
  std::set<std::vector<int>> seen;
  while (out.size() < 25) {
    const int count = 2 + static_cast<int>(rng() % 3);
    std::vector<int> gens;
    int g = 0;
    for (int i = 0; i < count; ++i) {
      gens.push_back(2 + static_cast<int>(rng() % 29));
      g = std::gcd(g, gens.back());
    }
    if (g != 1) continue;
    auto h = make_semigroup(gens);
    if (h->is_dvr() || !seen.insert(h->generators()).second) continue;
    out.push_back(std::move(h));
  }
  return out;
}

template <IdealEngine E>
void trace_checks(Recorder& rec, const E& eng, const typename E::Ideal& i) {
  rec.flag("R:I = I:I", true, is_trace(eng, i));
  const auto rep = classify(eng, i);
  rec.equal("r(R⋉I) - r(R/I)", 2, rep.type_idealization - rep.quotient_type.value_or(-100));
  rec.flag("verdicts pass", true, rep.all_pass());
}

template <IdealEngine E>
void ulrich_checks(Recorder& rec, const E& eng, const typename E::Ideal& i, int mu, int r) {
  const auto rep = classify(eng, i);
  rec.flag("Ulrich ideal", true, rep.is_ulrich_ideal.value_or(false));
  rec.equal("mu(I)", mu, rep.mu);
  rec.equal("r(R/I)", 1, rep.quotient_type.value_or(-1));
  rec.equal("r(R⋉I)", r, rep.type_idealization);
  rec.flag("verdicts pass", true, rep.all_pass());
}

std::vector<ReferenceCase> build_cases() {
  std::vector<ReferenceCase> cases;
  auto add = [&](std::string name, std::string description, std::function<void(Recorder&)> run) {
    cases.push_back({std::move(name), std::move(description), std::move(run)});
  };

  // ---- <3,4,5>: the ring, (t^3,t^4), (t^3,t^5), m
  const auto h345 = sg({3, 4, 5});
  add("type-3-4-5/ring", "type of k[[t^3,t^4,t^5]] and of R⋉R", [h345](Recorder& rec) {
    const MonomialEngine eng(h345);
    rec.equal("r(R)", 2, h345->type());
    rec.equal("r(R⋉R)", 2, idealization_type(eng, eng.ring()).first.type);
  });
  add("type-3-4-5/t3-t4", "I = (t^3, t^4) is closed with r(R⋉I) = r_R(I) = 1",
      [h345](Recorder& rec) {
        const MonomialEngine eng(h345);
        const auto rep = classify(eng, mono(h345, {3, 4}));
        rec.equal("r(R⋉I)", 1, rep.type_idealization);
        rec.equal("r_R(I)", 1, rep.module_type);
        rec.flag("closed", true, rep.is_closed);
        rec.flag("residually faithful", true, rep.is_residually_faithful);
        rec.flag("verdicts pass", true, rep.all_pass());
      });
  add("type-3-4-5/t3-t5", "J = (t^3, t^5): r(R⋉J) = 1 + r_R(J) = 3", [h345](Recorder& rec) {
    const MonomialEngine eng(h345);
    const auto rep = classify(eng, mono(h345, {3, 5}));
    rec.equal("r(R⋉J)", 3, rep.type_idealization);
    rec.equal("r_R(J)", 2, rep.module_type);
    rec.equal("socle excess", 1, rep.socle_excess);
    rec.flag("verdicts pass", true, rep.all_pass());
  });
  add("type-3-4-5/maximal", "m: r_R(m) = 3 and r(R⋉m) = 2 + r_R(m) = 5", [h345](Recorder& rec) {
    const MonomialEngine eng(h345);
    const auto rep = classify(eng, eng.maximal());
    rec.equal("r_R(m)", 3, rep.module_type);
    rec.equal("r(R⋉m)", 5, rep.type_idealization);
    rec.flag("trace", true, rep.is_trace.value_or(false));
    rec.flag("closed", false, rep.is_closed);
    rec.flag("Ulrich w.r.t. m", true, rep.is_ulrich_module_wrt_m);
    rec.flag("verdicts pass", true, rep.all_pass());
  });

  // ---- <4,5,6>, (t^8, t^9)
  const auto h456 = sg({4, 5, 6});
  add("gorenstein-4-5-6/t8-t9", "over k[[t^4,t^5,t^6]], I = (t^8, t^9)", [h456](Recorder& rec) {
    const MonomialEngine eng(h456);
    const auto rep = classify(eng, mono(h456, {8, 9}));
    rec.equal("r(R/I)", 2, rep.quotient_type.value_or(-1));
    rec.equal("r_R(I)", 2, rep.module_type);
    rec.equal("r(R⋉I)", 3, rep.type_idealization);
    rec.flag("verdicts pass", true, rep.all_pass());
  });

  // ---- trace ideals of <4,5,6>
  add("trace-4-5-6/ring", "R is a trace ideal", [h456](Recorder& rec) {
    const MonomialEngine eng(h456);
    rec.flag("R:I = I:I", true, is_trace(eng, eng.ring()));
  });
  const std::vector<std::pair<std::string, std::vector<int>>> monomial_traces = {
      {"t8-t9-t10-t11", {8, 9, 10, 11}},
      {"t6-t8-t9", {6, 8, 9}},
      {"t5-t6-t8", {5, 6, 8}},
      {"maximal", {4, 5, 6}},
      {"I0", {4, 6}},
  };
  for (const auto& [label, gens] : monomial_traces) {
    add("trace-4-5-6/" + label, "monomial trace ideal of k[[t^4,t^5,t^6]]",
        [h456, gens](Recorder& rec) {
          const MonomialEngine eng(h456);
          trace_checks(rec, eng, RelativeIdeal::from_exponents(h456, gens));
        });
  }
  for (int a = 1; a < 5; ++a) {
    add("trace-4-5-6/I" + std::to_string(a) + "-fp5",
        "I_a = (t^4 - a t^5, t^6) over F_5 is a trace ideal", [h456, a](Recorder& rec) {
          const PrimeField f(5);
          const SeriesEngine eng(h456, f);
          trace_checks(rec, eng, parse_ideal(h456, f, "t^4 - " + coeff_term(a, 5) + ", t^6"));
        });
  }
  add("trace-4-5-6/distinct-fp5", "I_a = I_b only for a = b, a, b in F_5", [h456](Recorder& rec) {
    const PrimeField f(5);
    std::vector<FractionalIdeal<PrimeField>> ideals;
    for (int a = 0; a < 5; ++a) {
      ideals.push_back(parse_ideal(h456, f, "t^4 - " + coeff_term(a, 5) + ", t^6"));
    }
    int equal_pairs = 0;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      for (std::size_t j = i + 1; j < ideals.size(); ++j) {
        equal_pairs += ideal_equals(ideals[i], ideals[j]) ? 1 : 0;
      }
    }
    rec.equal("equal pairs among I_0..I_4", 0, equal_pairs);
  });

  // ---- Ulrich ideals of <3,7> over F_5
  const auto h37 = sg({3, 7});
  for (int a = 1; a < 5; ++a) {
    add("ulrich-3-7/a" + std::to_string(a), "(t^6 - a t^7, t^10) over F_5 is an Ulrich ideal",
        [h37, a](Recorder& rec) {
          const PrimeField f(5);
          const SeriesEngine eng(h37, f);
          ulrich_checks(rec, eng, parse_ideal(h37, f, "t^6 - " + coeff_term(a, 7) + ", t^10"), 2, 3);
        });
  }
  add("ulrich-3-7/monomial", "(t^6, t^10) is not an Ulrich ideal", [h37](Recorder& rec) {
    const PrimeField f(5);
    const SeriesEngine eng(h37, f);
    rec.flag("Ulrich ideal", false, is_ulrich_ideal(eng, parse_ideal(h37, f, "t^6, t^10")));
    rec.flag("Ulrich ideal (monomial engine)", false,
             is_ulrich_ideal(MonomialEngine(h37), mono(h37, {6, 10})));
  });

  // ---- Ulrich ideals of <6,13,28> over F_3, c = (t^24, t^26, t^28)
  const auto h61328 = sg({6, 13, 28});
  const std::string tail = ", t^24, t^26, t^28";
  std::vector<std::pair<std::string, std::string>> families;
  for (int a = 0; a < 3; ++a) {
    families.push_back({"i-a" + std::to_string(a), "t^6 + " + coeff_term(a, 13)});
    families.push_back({"iii-a" + std::to_string(a), "t^18 + " + coeff_term(a, 25)});
    for (int b = 0; b < 3; ++b) {
      families.push_back({"ii-a" + std::to_string(a) + "-b" + std::to_string(b),
                          "t^12 + " + coeff_term(a, 13) + " + " + coeff_term(b, 19)});
    }
  }
  for (const auto& [label, head] : families) {
    add("ulrich-6-13-28/" + label, "Ulrich family member over F_3: (" + head + ") + c",
        [h61328, text = head + tail](Recorder& rec) {
          const PrimeField f(3);
          const SeriesEngine eng(h61328, f);
          ulrich_checks(rec, eng, parse_ideal(h61328, f, text), 3, 5);
        });
  }

  // ---- <9,10,11,12,15>
  const auto h9 = sg({9, 10, 11, 12, 15});
  add("canonical-9-10/K", "K = R + Rt + Rt^3 + Rt^4", [h9](Recorder& rec) {
    const MonomialEngine eng(h9);
    rec.flag("K = (1, t, t^3, t^4)", true, eng.canonical() == mono(h9, {0, 1, 3, 4}));
    rec.equal("mu(K)", 4, eng.mu(eng.canonical()));
  });
  add("canonical-9-10/R+Rt", "I = R + Rt is residually faithful, not R or K up to isomorphism",
      [h9](Recorder& rec) {
        const MonomialEngine eng(h9);
        const auto i = mono(h9, {0, 1});
        const auto k = eng.canonical();
        const auto rep = classify(eng, i);
        rec.equal("mu(I)", 2, rep.mu);
        rec.flag("(K:I)I = K", true, eng.product(eng.colon(k, i), i) == k);
        rec.equal("mu(C)", 0, rep.cokernel_mu);
        rec.flag("residually faithful", true, rep.is_residually_faithful);
        rec.equal("r(R⋉I) - r_R(I)", 0, rep.type_idealization - rep.module_type);
        rec.flag("I ≅ K", false, rep.is_canonical);
        rec.flag("verdicts pass", true, rep.all_pass());
      });

  // ---- maximal ideal over random semigroups
  for (const auto& h : random_semigroups()) {
    add("maximal-ideal/" + h->to_string(), "r_R(m) = r(R) + 1 and r(R⋉m) = 2 r(R) + 1",
        [h](Recorder& rec) {
          const MonomialEngine eng(h);
          const auto rep = classify(eng, eng.maximal());
          const int r = h->type();
          rec.equal("r_R(m)", r + 1, rep.module_type);
          rec.equal("r(R⋉m)", 2 * r + 1, rep.type_idealization);
          rec.flag("verdicts pass", true, rep.all_pass());
        });
  }

  // ---- blow-up and supremum
  add("blowup-sup/1", "over a DVR the supremum is 1", [](Recorder& rec) {
    const auto h = sg({1});
    rec.flag("A = R", true, blowup_ring(h) == RelativeIdeal::ring(h));
    rec.equal("sup r(R⋉I)", 1, sup_search(h, 1).value);
  });
  for (const auto& h : {h345, h37, h456, h61328}) {
    add("blowup-sup/" + h->to_string(), "blow-up A realizes sup r(R⋉I) = r(R) + e", [h](Recorder& rec) {
      const MonomialEngine eng(h);
      const int e = h->multiplicity();
      const int r = h->type();
      const auto a = blowup_ring(h);
      rec.flag("A = R[m/t^e]", true, a == blowup_ring_closed_form(h));
      rec.flag("A:A = A", true, colon(a, a) == a);
      rec.equal("mu(A)", e, eng.mu(a));
      rec.flag("Ulrich w.r.t. m", true, is_ulrich_module_wrt_m(eng, a));
      rec.equal("r(R⋉A)", r + e, idealization_type(eng, a).first.type);
      rec.equal("sup r(R⋉I), bound c + e", r + e, sup_search(h, h->conductor() + e).value);
    });
  }

  // ---- PF family, MED family, dual family
  const auto h56789 = sg({5, 6, 7, 8, 9});
  for (const auto& h : {h345, h56789, h37}) {
    const int r = h->type();
    for (int p = 1; p <= r; ++p) {
      add("pf-family/" + h->to_string() + "/p" + std::to_string(p),
          "I = (t^e) + (t^(α_j + e) : j >= p): r(R⋉I) = (r - p + 1) + r_R(I)", [h, p, r](Recorder& rec) {
            const MonomialEngine eng(h);
            const auto i = pf_family_ideal(h, p);
            rec.flag("I^2 = t^e I", true, product(i, i) == i.shifted(h->multiplicity()));
            const auto rep = classify(eng, i);
            rec.equal("r(R⋉I) - r_R(I)", r - p + 1, rep.type_idealization - rep.module_type);
            rec.flag("verdicts pass", true, rep.all_pass());
          });
    }
  }
  for (const auto& h : {h345, h56789, sg({4, 5, 6, 7})}) {
    const int l = h->embedding_dimension();
    for (int p = 2; p <= l; ++p) {
      add("med-family/" + h->to_string() + "/p" + std::to_string(p),
          "I_p = (t^a1) + (t^ap, ..., t^al) over a semigroup of maximal embedding dimension",
          [h, p, l](Recorder& rec) {
            const MonomialEngine eng(h);
            const auto rep = classify(eng, med_family_ideal(h, p));
            rec.equal("r_R(I_p)", p == 2 ? l : l - 1, rep.module_type);
            rec.equal("r(R⋉I_p) - r_R(I_p)", l - p + 1, rep.type_idealization - rep.module_type);
            rec.flag("verdicts pass", true, rep.all_pass());
          });
    }
  }
  for (const auto& h : {h345, h56789}) {
    const int r = h->type();
    for (int p = 1; p <= r; ++p) {
      add("dual-family/" + h->to_string() + "/p" + std::to_string(p),
          "dual of the PF family ideal: r(R⋉I^∨) = 2r - 2p + 3", [h, p, r](Recorder& rec) {
            const MonomialEngine eng(h);
            const auto i = pf_family_ideal(h, p);
            const auto rep = classify(eng, dual_family_ideal(h, p));
            rec.equal("r(R⋉I^∨)", 2 * r - 2 * p + 3, rep.type_idealization);
            rec.equal("r(R⋉I^∨) - mu(I)", r - p + 1, rep.type_idealization - i.mu());
            rec.flag("verdicts pass", true, rep.all_pass());
          });
    }
  }
  return cases;
}

const std::vector<ReferenceCase>& all_cases() {
  static const std::vector<ReferenceCase> cases = build_cases();
  return cases;
}

}  // namespace

std::vector<std::string> reference_case_names() {
  std::vector<std::string> out;
  for (const auto& c : all_cases()) out.push_back(c.name);
  return out;
}

SuiteResult run_reference_cases(std::string_view filter) {
  SuiteResult suite;
  suite.filter = std::string(filter);
  for (const auto& c : all_cases()) {
    if (c.name.find(filter) == std::string::npos) continue;
    CaseResult result;
    result.name = c.name;
    result.description = c.description;
    Recorder rec(result);
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(rec);
    } catch (const std::exception& e) {
      result.error = e.what();
    }
    result.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    suite.cases.push_back(std::move(result));
  }
  return suite;
}

}  // namespace cmtype
