#pragma once

// Cohen–Macaulay types attached to a fractional ideal I of R = k[[t^H]]:
// r_R(I), r(R/I), and r(R ⋉ I) computed two independent ways, plus the
// closed / trace / residually faithful / Ulrich predicates and the identity
// checks that tie them together.  Everything is generic over IdealEngine.
//
// Conventions: q = t^a R for a ∈ H \ {0} is the parameter ideal (default
// a = e), K is the canonical ideal {x : F − x ∉ H}, and freeness of I/I²
// over R/I is decided by ℓ(I/I²) = μ(I)·ℓ(R/I), which suffices since the
// natural map (R/I)^μ → I/I² is onto.

#include "cmtype/engine.hpp"
#include "cmtype/errors.hpp"
#include "cmtype/semigroup.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cmtype {

struct SocleResult {
  int excess = 0;
  int type = 0;
};

struct CokernelResult {
  int cokernel_mu = 0;
  int type = 0;
};

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct IdealReport {
  std::string engine;
  std::string ideal;
  SemigroupInvariants invariants;
  int mu = 0;
  int module_type = 0;
  bool in_ring = false;
  bool m_primary = false;  // I ⊆ R and I ≠ R
  std::optional<int> quotient_type;
  std::optional<int> colength;  // ℓ(R/I)
  int type_by_socle = 0;
  int type_by_cokernel = 0;
  int type_idealization = 0;
  int socle_excess = 0;
  int cokernel_mu = 0;
  bool is_closed = false;
  std::optional<bool> is_trace;
  bool is_residually_faithful = false;
  std::optional<bool> is_ulrich_ideal;
  std::optional<std::string> reduction;
  bool is_ulrich_module_wrt_m = false;
  bool is_canonical = false;
  bool is_principal = false;
  std::vector<Verdict> verdicts;

  bool all_pass() const {
    for (const auto& v : verdicts) {
      if (!v.pass) return false;
    }
    return true;
  }
};

// r_R(I) = μ(K : I)
template <IdealEngine E>
int module_type(const E& eng, const typename E::Ideal& i) {
  return eng.mu(eng.colon(eng.canonical(), i));
}

template <IdealEngine E>
bool is_m_primary(const E& eng, const typename E::Ideal& i) {
  const auto r = eng.ring();
  return eng.contains(r, i) && !eng.equals(r, i);
}

// ℓ(R/I); requires I ⊆ R.
template <IdealEngine E>
int colength(const E& eng, const typename E::Ideal& i) {
  return eng.quotient_length(eng.ring(), i);
}

// r(R/I) = ℓ(((I : m) ∩ R)/I)
template <IdealEngine E>
int quotient_type(const E& eng, const typename E::Ideal& i) {
  if (!is_m_primary(eng, i)) {
    throw ArgumentError("r(R/I) needs an ideal I ⊆ R with I ≠ R, got " + eng.describe(i));
  }
  const auto socle = eng.intersect(eng.colon(i, eng.maximal()), eng.ring());
  return eng.quotient_length(socle, i);
}

// In R̄ = R/(t^a): ℓ(soc(R̄) ∩ Ann(I/t^a I)), then add r_R(I).
template <IdealEngine E>
SocleResult socle_formula(const E& eng, const typename E::Ideal& i, int a) {
  if (a <= 0 || !eng.semigroup().contains(a)) {
    throw ArgumentError("parameter exponent " + std::to_string(a) + " is not a nonzero element of " +
                        eng.semigroup().to_string());
  }
  const auto r = eng.ring();
  const auto q = eng.monomial(a);
  const auto socle = eng.intersect(eng.colon(q, eng.maximal()), r);
  const auto ann = eng.intersect(eng.colon(eng.product(q, i), i), r);
  SocleResult out;
  out.excess = eng.quotient_length(eng.intersect(socle, ann), q);
  out.type = out.excess + module_type(eng, i);
  return out;
}

// C = coker(Hom(I,K) ⊗ I → K) = K/((K:I)·I); μ(C) = ℓ(K/((K:I)·I + mK)).
template <IdealEngine E>
CokernelResult cokernel_formula(const E& eng, const typename E::Ideal& i) {
  const auto k = eng.canonical();
  const auto image = eng.product(eng.colon(k, i), i);
  const auto below = eng.sum(image, eng.product(eng.maximal(), k));
  CokernelResult out;
  out.cokernel_mu = eng.quotient_length(k, below);
  out.type = module_type(eng, i) + out.cokernel_mu;
  return out;
}

template <IdealEngine E>
bool is_closed(const E& eng, const typename E::Ideal& i) {
  return eng.equals(eng.colon(i, i), eng.ring());
}

template <IdealEngine E>
bool is_trace(const E& eng, const typename E::Ideal& i) {
  return eng.equals(eng.colon(eng.ring(), i), eng.colon(i, i));
}

// (t^e I : I) ∩ R = t^e R
template <IdealEngine E>
bool is_residually_faithful(const E& eng, const typename E::Ideal& i) {
  const auto q = eng.monomial(eng.semigroup().multiplicity());
  return eng.equals(eng.intersect(eng.colon(eng.product(q, i), i), eng.ring()), q);
}

template <IdealEngine E>
struct UlrichResult {
  bool ulrich = false;
  std::optional<typename E::Ideal> reduction;
};

// I ⊆ R m-primary: a reduction (x) ⊊ I with I² = xI and ℓ(I/I²) = μ(I)·ℓ(R/I).
template <IdealEngine E>
UlrichResult<E> ulrich_ideal_check(const E& eng, const typename E::Ideal& i) {
  if (!is_m_primary(eng, i)) {
    throw ArgumentError("the Ulrich ideal test needs I ⊆ R with I ≠ R, got " + eng.describe(i));
  }
  UlrichResult<E> out;
  out.reduction = eng.reduction(i);
  if (!out.reduction || eng.equals(*out.reduction, i)) return out;
  const int free_rank = eng.mu(i);
  out.ulrich = eng.quotient_length(i, eng.product(i, i)) == free_rank * colength(eng, i);
  return out;
}

template <IdealEngine E>
bool is_ulrich_ideal(const E& eng, const typename E::Ideal& i) {
  return ulrich_ideal_check(eng, i).ulrich;
}

// m·M = t^e·M
template <IdealEngine E>
bool is_ulrich_module_wrt_m(const E& eng, const typename E::Ideal& m) {
  const auto q = eng.monomial(eng.semigroup().multiplicity());
  return eng.equals(eng.product(eng.maximal(), m), eng.product(q, m));
}

// M Ulrich with respect to an m-primary I: IM = xM for the reduction x of I
// and ℓ(M/IM) = μ(M)·ℓ(R/I).  Throws ArgumentError when no reduction of I is
// found among the candidates (the given generators of least order, the
// window basis row of least order, t^δ).
template <IdealEngine E>
bool is_ulrich_module_wrt(const E& eng, const typename E::Ideal& m, const typename E::Ideal& i) {
  if (eng.equals(i, eng.maximal())) return is_ulrich_module_wrt_m(eng, m);
  if (!is_m_primary(eng, i)) throw ArgumentError("expected an m-primary ideal I ⊊ R");
  const auto x = eng.reduction(i);
  if (!x) {
    throw ArgumentError("undecidable: no reduction of " + eng.describe(i) +
                        " among the least-order generators, basis row, or monomial");
  }
  const auto im = eng.product(i, m);
  if (!eng.equals(im, eng.product(*x, m))) return false;
  return eng.quotient_length(m, im) == eng.mu(m) * colength(eng, i);
}

// r(R ⋉ I), by the socle formula at a = e and by the cokernel formula.
// Disagreement or a violated bound r_R(I) ≤ r ≤ r(R) + r_R(I) is a bug and
// raises ConsistencyError.
template <IdealEngine E>
std::pair<SocleResult, CokernelResult> idealization_type(const E& eng, const typename E::Ideal& i) {
  const auto& h = eng.semigroup();
  auto socle = socle_formula(eng, i, h.multiplicity());
  auto coker = cokernel_formula(eng, i);
  if (socle.type != coker.type) {
    throw ConsistencyError("r(R⋉I) by socle formula = " + std::to_string(socle.type) +
                           " but by cokernel formula = " + std::to_string(coker.type) + " for " +
                           eng.describe(i));
  }
  const int rr = module_type(eng, i);
  if (socle.type < rr || socle.type > h.type() + rr) {
    throw ConsistencyError("r(R⋉I) = " + std::to_string(socle.type) + " outside [" +
                           std::to_string(rr) + ", " + std::to_string(h.type() + rr) + "] for " +
                           eng.describe(i));
  }
  if (h.is_dvr() && socle.type != 1) {
    throw ConsistencyError("over a DVR every idealization has type 1");
  }
  return {socle, coker};
}

namespace detail {

inline void add_verdict(IdealReport& rep, std::string name, bool pass, std::string detail) {
  rep.verdicts.push_back({std::move(name), pass, std::move(detail)});
}

inline std::string eq(int a, int b) { return std::to_string(a) + " = " + std::to_string(b); }

}  // namespace detail

template <IdealEngine E>
IdealReport classify(const E& eng, const typename E::Ideal& i) {
  using detail::add_verdict;
  using detail::eq;
  const auto& h = eng.semigroup();
  IdealReport rep;
  rep.engine = E::name;
  rep.ideal = eng.describe(i);
  rep.invariants = h.invariants();
  const int rr_ring = rep.invariants.type;
  const bool gorenstein = rep.invariants.is_symmetric;

  rep.mu = eng.mu(i);
  rep.module_type = module_type(eng, i);
  rep.in_ring = eng.contains(eng.ring(), i);
  rep.m_primary = is_m_primary(eng, i);
  const auto [socle, coker] = idealization_type(eng, i);
  rep.type_by_socle = socle.type;
  rep.type_by_cokernel = coker.type;
  rep.type_idealization = socle.type;
  rep.socle_excess = socle.excess;
  rep.cokernel_mu = coker.cokernel_mu;
  rep.is_closed = is_closed(eng, i);
  rep.is_residually_faithful = is_residually_faithful(eng, i);
  rep.is_ulrich_module_wrt_m = is_ulrich_module_wrt_m(eng, i);
  rep.is_canonical = rep.module_type == 1;
  rep.is_principal = rep.mu == 1;
  if (rep.in_ring) rep.is_trace = is_trace(eng, i);
  if (rep.m_primary) {
    rep.quotient_type = quotient_type(eng, i);
    rep.colength = colength(eng, i);
    const auto u = ulrich_ideal_check(eng, i);
    rep.is_ulrich_ideal = u.ulrich;
    if (u.reduction) rep.reduction = eng.describe(*u.reduction);
  }
  const int r = rep.type_idealization;
  const int rr = rep.module_type;

  add_verdict(rep, "two-methods", socle.type == coker.type, eq(socle.type, coker.type));
  add_verdict(rep, "type-bounds", rr <= r && r <= rr_ring + rr,
              std::to_string(rr) + " <= " + std::to_string(r) + " <= " + std::to_string(rr_ring + rr));
  add_verdict(rep, "residually-faithful-socle",
              rep.is_residually_faithful == (socle.excess == 0),
              "excess " + std::to_string(socle.excess));

  if (rep.is_ulrich_ideal.value_or(false)) {
    const int want = (2 * rep.mu - 1) * *rep.quotient_type;
    add_verdict(rep, "ulrich-ideal-type", r == want, eq(r, want));
    if (rep.invariants.is_med && !rep.invariants.is_dvr) {
      const int v = rep.invariants.embedding_dimension;
      add_verdict(rep, "ulrich-ideal-med-type", r == 2 * v - 1, eq(r, 2 * v - 1));
    }
  }
  if (rep.is_ulrich_module_wrt_m && !rep.invariants.is_dvr) {
    add_verdict(rep, "ulrich-wrt-m-type", rr == rep.mu && r == rr_ring + rr,
                "r_R(I) " + eq(rr, rep.mu) + ", r " + eq(r, rr_ring + rr));
  }
  if (rep.invariants.is_med && !rep.invariants.is_dvr) {
    add_verdict(rep, "med-ulrich-converse", (r == rr_ring + rr) == rep.is_ulrich_module_wrt_m,
                "r = r(R) + r_R(I) iff Ulrich w.r.t. m");
  }
  if (gorenstein && rep.m_primary) {
    const int rq = *rep.quotient_type;
    bool ok = rq <= rr && rr <= 1 + rq;
    std::string detail = std::to_string(rq) + " <= " + std::to_string(rr) + " <= " + std::to_string(1 + rq);
    if (rep.mu > 1) {
      ok = ok && r == 1 + rr;
      detail += ", r " + eq(r, 1 + rr);
    }
    add_verdict(rep, "gorenstein-bounds", ok, detail);
    if (rep.is_trace.value_or(false)) {
      add_verdict(rep, "gorenstein-trace-type", r == 2 + rq, eq(r, 2 + rq));
    }
  }
  add_verdict(rep, "closed-type",
              rep.is_closed == rep.is_residually_faithful && rep.is_closed == (r == rr),
              std::string("closed ") + (rep.is_closed ? "yes" : "no") + ", r " +
                  (r == rr ? "=" : "!=") + " r_R(I)");
  if (rep.is_closed && rep.m_primary) {
    add_verdict(rep, "closed-proper-type", r == *rep.quotient_type && rr == *rep.quotient_type,
                "r, r_R(I), r(R/I) = " + std::to_string(r) + ", " + std::to_string(rr) + ", " +
                    std::to_string(*rep.quotient_type));
  }
  if (!rep.invariants.is_dvr && eng.equals(i, eng.maximal())) {
    add_verdict(rep, "maximal-ideal-type", rr == rr_ring + 1 && r == 2 * rr_ring + 1,
                "r_R(m) " + eq(rr, rr_ring + 1) + ", r " + eq(r, 2 * rr_ring + 1));
  }
  if (gorenstein) {
    add_verdict(rep, "gorenstein-closed-principal", !rep.is_closed || rep.is_principal,
                rep.is_closed ? "closed, mu " + std::to_string(rep.mu) : "not closed");
  }
  if (rep.is_canonical) {
    add_verdict(rep, "canonical-type", r == 1, eq(r, 1));
  }
  return rep;
}

}  // namespace cmtype
