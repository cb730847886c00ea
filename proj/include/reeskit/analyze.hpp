#ifndef REESKIT_ANALYZE_HPP
#define REESKIT_ANALYZE_HPP

#include <chrono>
#include <optional>

#include "reeskit/parse.hpp"
#include "reeskit/rees.hpp"

namespace reeskit {

struct AnalyzeOptions {
  GbOptions gb;
  int sdeg_bound = 20;
  int reduction_bound = 64;
  bool compute_rees = true;  // false skips the elimination (budget fallback)
};

// The full invariant record for one ideal.  Fields start unset (-1 / empty)
// and are only filled by completed stages; failures land in stage_errors and
// clear `complete`.
struct ReesReport {
  std::string version = "report-v1";
  std::uint32_t characteristic = 0;
  std::string ring;
  std::vector<std::string> i_gens, j_gens;
  std::string a_gen;

  long long lambda_r_mod_i = -1, lambda_r_mod_j = -1, lambda_i_mod_j = -1;
  std::vector<long long> hvector_j_a;

  int red = -1;
  std::vector<long long> f_seq;
  long long e0 = -1, e1 = -1;
  std::optional<bool> huckaba_acm;

  int reltype = -1, sdeg = -1, edeg = -1;
  long long nu_t = -1;
  std::vector<std::pair<int, long long>> fresh_profile;

  long long deg_sym = -1, deg_rees = -1, deg_t = -1;
  std::optional<bool> degcheck_rees, degcheck_sym, degcheck_t;

  std::optional<bool> birational;
  int gen_degree = -1;  // n when equigenerated

  // candidate verification: "", "verified", "one-directional", "failed"
  std::string rees_equality;

  bool complete = false;
  std::vector<std::string> stage_errors;
  std::vector<std::pair<std::string, double>> timings_ms;

  long long f_sum() const {
    long long s = 0;
    for (long long v : f_seq) s += v;
    return s;
  }
};

// Analysis input: generators of I with presentation-variable names, the
// designated reduction, and optional extras from the family constructors.
template <class K>
struct AnalyzeInput {
  std::vector<Poly<K>> f;           // generators of I
  std::vector<std::string> tnames;  // presentation variable names, one per f_i
  std::vector<Poly<K>> jgens;       // designated reduction J (in R)
  std::optional<int> a_index;       // position of the distinguished generator
  std::vector<std::vector<Poly<K>>> jcoords;  // optional: jgens[k] = Σ jcoords[k][i] f_i
  std::vector<std::string> candidate;         // optional Rees generators (text, parsed in B)
};

namespace detail {

class StageClock {
 public:
  explicit StageClock(ReesReport* rpt) : rpt_(rpt) {}

  // Runs a stage, captures errors; returns false when the stage failed.
  bool run(const std::string& name, const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    try {
      body();
    } catch (const std::exception& e) {
      rpt_->stage_errors.push_back(name + ": " + e.what());
      ok = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    rpt_->timings_ms.emplace_back(
        name, std::chrono::duration<double, std::milli>(t1 - t0).count());
    return ok;
  }

 private:
  ReesReport* rpt_;
};

template <class K>
std::string ring_desc(const Ring<K>& R) {
  std::string s = R.field.characteristic() == 0
                      ? std::string("QQ")
                      : "GF(" + std::to_string(R.field.characteristic()) + ")";
  s += "[";
  for (int i = 0; i < R.nvars(); ++i) s += (i ? "," : "") + R.vars[i];
  return s + "]";
}

// Powers of a monomial ideal, directly.
template <class K>
long long monomial_power_colength(const std::vector<Poly<K>>& f, int nvars, int j) {
  std::vector<Monomial> gens;
  for (const auto& g : f) gens.push_back(g.lm());
  std::vector<Monomial> cur = gens;
  for (int step = 1; step < j; ++step) {
    std::vector<Monomial> prods;
    prods.reserve(cur.size() * gens.size());
    for (const auto& a : cur)
      for (const auto& b : gens) prods.push_back(mono_mul(a, b, nvars));
    cur = make_monideal(nvars, std::move(prods)).gens;
  }
  return monideal_colength(make_monideal(nvars, std::move(cur)));
}

}  // namespace detail

// Orchestrates the full analysis.  Every internal cross-check described in
// the individual operations is executed; stage errors leave a partial report
// marked incomplete.
template <class K>
ReesReport analyze(const AnalyzeInput<K>& in, const AnalyzeOptions& opt = {}) {
  ReesReport rpt;
  detail::StageClock clock(&rpt);

  const auto R = in.f.empty() ? RingPtr<K>() : in.f.front().ring();
  if (!R) {
    rpt.stage_errors.push_back("validate: no generators");
    return rpt;
  }
  rpt.characteristic = R->field.characteristic();
  rpt.ring = detail::ring_desc(*R);
  for (const auto& g : in.f) rpt.i_gens.push_back(g.str());
  for (const auto& g : in.jgens) rpt.j_gens.push_back(g.str());
  if (in.a_index) rpt.a_gen = in.f[*in.a_index].str();

  const int d = R->nvars();
  Ideal<K> I = make_ideal<K>(R, in.f);
  Ideal<K> J = make_ideal<K>(R, in.jgens);

  bool monomial_input = true;
  for (const auto& g : in.f)
    if (g.nterms() != 1) monomial_input = false;

  bool equigenerated = true;
  for (const auto& g : in.f)
    if (g.degree() != in.f.front().degree()) equigenerated = false;
  if (equigenerated) rpt.gen_degree = int(in.f.front().degree());

  // --- validate ---------------------------------------------------------------
  bool lengths_ok = clock.run("validate", [&] {
    for (const auto& g : in.f)
      if (!g.is_homogeneous()) throw NotHomogeneous("generators of I");
    if (!ideal_contains(I, J, opt.gb))
      throw ContainmentViolation("designated reduction is not contained in I");
    rpt.lambda_r_mod_i = colength(I, opt.gb);
    rpt.lambda_r_mod_j = colength(J, opt.gb);
    rpt.lambda_i_mod_j = rpt.lambda_r_mod_j - rpt.lambda_r_mod_i;
  });
  if (!lengths_ok) return rpt;

  // --- h-vector of R/(J:a) ------------------------------------------------------
  if (in.a_index) {
    clock.run("hvector", [&] {
      auto q = ideal_quotient(J, in.f[*in.a_index], opt.gb);
      rpt.hvector_j_a = hvector_of(q, opt.gb).h;
    });
  }

  // --- syzygies and the symmetric algebra --------------------------------------
  ReesPresentation<K> P;
  Ideal<K> L1;
  bool have_presentation = clock.run("syzygies", [&] {
    P = make_presentation(in.f, in.tnames);
    auto phi = syzygies(in.f, opt.gb);
    L1 = sym_ideal(phi, P);
  });
  if (!have_presentation) return rpt;

  // --- Rees ideal ---------------------------------------------------------------
  if (opt.compute_rees) {
    clock.run("rees", [&] { compute_rees_ideal(P, opt.gb); });
  }
  if (!in.candidate.empty()) {
    clock.run("candidate", [&] {
      MonomialOrder ord = MonomialOrder::grevlex_order();
      std::vector<Poly<K>> cgens;
      for (const auto& s : in.candidate) cgens.push_back(parse_poly<K>(s, P.bring, ord));
      Ideal<K> cand = make_ideal<K>(P.bring, std::move(cgens));
      bool forward = true;
      for (const auto& g : cand.gens)
        if (!rees_membership(g, P)) forward = false;
      if (!forward) {
        rpt.rees_equality = "failed";
        return;
      }
      if (P.L_available)
        rpt.rees_equality = ideal_contains(cand, P.L, opt.gb) ? "verified" : "failed";
      else
        rpt.rees_equality = "one-directional";
    });
  }

  // check (L_1) ⊆ L when both are on hand
  if (P.L_available) {
    clock.run("sym-in-rees", [&] {
      if (!ideal_contains(P.L, L1, opt.gb))
        throw InternalCheckFailure("(L_1) is not contained in the computed Rees ideal");
    });
  }

  // --- f-sequence and reduction number ------------------------------------------
  bool have_fseq = false;
  clock.run("fseq", [&] {
    if (P.L_available) {
      // express J in T-linear forms and count fiber lengths from in(L + lin)
      MonomialOrder ord = MonomialOrder::grevlex_order();
      std::vector<Poly<K>> lin;
      for (std::size_t k = 0; k < in.jgens.size(); ++k) {
        std::vector<Poly<K>> coords =
            k < in.jcoords.size() && !in.jcoords[k].empty()
                ? in.jcoords[k]
                : express_in_terms(in.jgens[k], in.f, opt.gb);
        Poly<K> form(P.bring, ord);
        for (std::size_t i = 0; i < coords.size(); ++i) {
          if (coords[i].is_zero()) continue;
          form = form + transport(coords[i], P.bring, ord) *
                            Poly<K>::variable(P.bring, ord, P.tvar[i]);
        }
        if (form.is_zero()) throw InternalCheckFailure("reduction generator presents as zero");
        lin.push_back(form);
      }
      FiberLengthCounter<K> counter(P, std::move(lin), opt.gb);
      for (int j = 1; j <= opt.reduction_bound + 1; ++j) {
        long long fj = counter.count(j);
        if (fj == 0) {
          rpt.red = j - 1;
          break;
        }
        if (!rpt.f_seq.empty() && fj > rpt.f_seq.back())
          throw InternalCheckFailure("f-sequence must be non-increasing");
        rpt.f_seq.push_back(fj);
      }
      if (rpt.red < 0)
        throw BoundExceeded("no reduction within bound; J is presumably not a reduction");
    } else {
      rpt.red = reduction_number(I, J, opt.reduction_bound, opt.gb);
      FSequence fs = f_sequence(I, J, rpt.red, opt.gb);
      rpt.f_seq = fs.values;
    }
    // cross-checks against directly computed small lengths
    if (!rpt.f_seq.empty() && rpt.f_seq[0] != rpt.lambda_i_mod_j)
      throw InternalCheckFailure("f_1 disagrees with λ(I/J)");
    if (rpt.f_seq.size() >= 2 && P.L_available) {
      long long direct =
          colength(ideal_product(J, I), opt.gb) - colength(ideal_power(I, 2), opt.gb);
      if (direct != rpt.f_seq[1])
        throw InternalCheckFailure("f_2 disagrees with the direct colength route");
    }
    have_fseq = true;
  });

  // --- Hilbert-Samuel coefficients ------------------------------------------------
  bool have_e = false;
  if (have_fseq) {
    clock.run("hilbert", [&] {
      std::function<long long(int)> H;
      std::optional<ReesSliceCounter<K>> slices;
      if (monomial_input) {
        H = [&](int j) { return detail::monomial_power_colength(in.f, d, j); };
        if (P.L_available) {  // dual-route agreement at one window point
          ReesSliceCounter<K> sc(P, opt.gb);
          long long a = sc.lambda_power(rpt.red + 1);
          long long b = H(rpt.red + 1);
          if (a != b)
            throw InternalCheckFailure("power colength routes disagree: " +
                                       std::to_string(a) + " vs " + std::to_string(b));
        }
      } else if (P.L_available) {
        slices.emplace(P, opt.gb);
        H = [&slices](int j) { return slices->lambda_power(j); };
      } else {
        H = [&](int j) { return colength(ideal_power(I, j), opt.gb); };
      }
      auto [e0, e1] = hs_coefficients_from<K>(H, rpt.red, d, rpt.lambda_r_mod_j);
      rpt.e0 = e0;
      rpt.e1 = e1;
      have_e = true;
    });
  }

  // --- Huckaba verdict -------------------------------------------------------------
  if (have_e) {
    clock.run("huckaba", [&] {
      FSequence fs;
      fs.red = rpt.red;
      fs.values = rpt.f_seq;
      rpt.huckaba_acm = huckaba_test(rpt.e1, fs);
    });
  }

  // --- relation metrics --------------------------------------------------------------
  if (P.L_available) {
    GradedGenerators<K> mingens;
    bool have_mingens = clock.run("mingens", [&] {
      Ideal<K> Lcopy = make_ideal<K>(
          P.bring, groebner_of(P.L, MonomialOrder::grevlex_order(), opt.gb));
      mingens = minimal_generators(Lcopy, opt.gb);
    });
    if (have_mingens) {
      clock.run("reltype", [&] {
        rpt.reltype = reltype(P, mingens, opt.gb);
        rpt.nu_t = nu_T(mingens);
        rpt.fresh_profile = fresh_generator_profile(mingens);
      });
      clock.run("sdeg", [&] { rpt.sdeg = sdeg(P, L1, mingens, opt.sdeg_bound, opt.gb); });
    }
    clock.run("fiber", [&] {
      Ideal<K> fib = fiber_ideal(P);
      rpt.edeg = edeg(fib, opt.gb);
    });
    clock.run("degrees", [&] {
      auto [dim_rees, deg_rees] = dim_and_degree(P.L, opt.gb);
      Ideal<K> L1copy = L1;
      auto [dim_sym, deg_sym] = dim_and_degree(L1copy, opt.gb);
      if (dim_rees != d + 1 || dim_sym != d + 1)
        throw InternalCheckFailure("Rees and symmetric algebras must have dimension d+1");
      rpt.deg_rees = deg_rees;
      rpt.deg_sym = deg_sym;
      // deg T from the series difference; additivity is the consistency check
      auto numL = hs_numerator_uni(lead_ideal(P.L, MonomialOrder::grevlex_order(), opt.gb),
                                   std::vector<int>(P.bring->nvars(), 1));
      auto numS = hs_numerator_uni(lead_ideal(L1copy, MonomialOrder::grevlex_order(), opt.gb),
                                   std::vector<int>(P.bring->nvars(), 1));
      std::vector<long long> diff = numS;
      if (numL.size() > diff.size()) diff.resize(numL.size(), 0);
      for (std::size_t i = 0; i < numL.size(); ++i) diff[i] -= numL[i];
      bool zero = true;
      for (long long v : diff)
        if (v) zero = false;
      if (zero) {
        rpt.deg_t = 0;
      } else {
        int dim = P.bring->nvars();
        while (dim > 0) {
          bool exact = true;
          auto q = upoly_div_1mt(diff, &exact);
          if (!exact) break;
          diff = std::move(q);
          --dim;
        }
        if (dim != d + 1)
          throw InternalCheckFailure("module of nonlinear relations has wrong dimension");
        rpt.deg_t = upoly_eval1(diff);
      }
      if (rpt.deg_sym != rpt.deg_rees + rpt.deg_t)
        throw InternalCheckFailure("degree additivity failed along the canonical sequence");
      if (equigenerated) {
        long long expect = 0, p = 1;
        for (int i = 0; i < d; ++i) {
          expect += p;
          p *= rpt.gen_degree;
        }
        rpt.degcheck_rees = (rpt.deg_rees == expect);
        rpt.degcheck_sym = (rpt.deg_sym == expect + rpt.lambda_i_mod_j);
        rpt.degcheck_t = (rpt.deg_sym - rpt.deg_rees == rpt.lambda_i_mod_j);
      }
    });
  }

  // --- birationality ------------------------------------------------------------------
  if (equigenerated && int(in.f.size()) == d + 1 && rpt.edeg >= 0) {
    clock.run("birational", [&] {
      std::optional<int> red = rpt.red >= 0 ? std::optional<int>(rpt.red) : std::nullopt;
      std::optional<long long> e1 =
          have_e ? std::optional<long long>(rpt.e1) : std::nullopt;
      rpt.birational = is_birational(rpt.edeg, rpt.gen_degree, d, red, e1);
    });
  }

  // --- final coherence ------------------------------------------------------------------
  clock.run("coherence", [&] {
    if (rpt.huckaba_acm.value_or(false) && rpt.reltype >= 0 && rpt.red >= 0 &&
        rpt.reltype != rpt.red + 1)
      throw InternalCheckFailure("aCM requires reltype = red + 1");
  });

  rpt.complete = rpt.stage_errors.empty();
  return rpt;
}

}  // namespace reeskit

#endif
