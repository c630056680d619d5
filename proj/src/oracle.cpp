#include "gst/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace gst {

namespace {

constexpr int kMaxCounterexamples = 10;

Budget fresh_budget() { return Budget{default_budget()}; }

void add_ce(VerificationReport& r, std::string inputs, std::string observed,
            std::string expected) {
  if ((int)r.counterexamples.size() < kMaxCounterexamples)
    r.counterexamples.push_back({std::move(inputs), std::move(observed), std::move(expected)});
}

// A deterministic sequence backed by a 32-entry table, repeating past the end.
Seq table_seq(Rng& rng, std::uint64_t bound) {
  auto tab = std::make_shared<std::vector<std::uint64_t>>();
  for (int i = 0; i < 32; ++i) tab->push_back(rng() % (bound + 1));
  return [tab](std::uint64_t i) { return (*tab)[i % 32]; };
}

std::string show_seq_prefix(const Seq& a, std::uint64_t n) {
  std::ostringstream os;
  os << "[";
  for (std::uint64_t i = 0; i < n; ++i) os << (i ? "," : "") << a(i);
  os << ",..]";
  return os.str();
}

std::string show_vec(const std::vector<std::uint64_t>& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "]";
  return os.str();
}

ValuePtr seq_value(const std::vector<std::uint64_t>& s) {
  auto tab = std::make_shared<std::vector<std::uint64_t>>(s);
  return pair_value(foreign([tab](std::uint64_t i) { return i < tab->size() ? (*tab)[i] : 0; }),
                    nat_value(s.size()));
}

std::vector<std::uint64_t> read_seq(const ValuePtr& v, Budget& b) {
  if (v->kind != VKind::Pair) fail(ErrCode::IllTypedRuntime, "expected a finite sequence");
  std::uint64_t len = readback_nat(force(v->snd, b));
  ValuePtr f = force(v->fst, b);
  std::vector<std::uint64_t> out;
  out.reserve(len);
  for (std::uint64_t i = 0; i < len; ++i)
    out.push_back(readback_nat(apply(f, nat_value(i), b)));
  return out;
}

std::uint64_t ev1(const ValuePtr& f, const ValuePtr& x, Budget& b) {
  return readback_nat(apply(f, x, b));
}

Seq hat(const std::vector<std::uint64_t>& s) {
  auto tab = std::make_shared<std::vector<std::uint64_t>>(s);
  return [tab](std::uint64_t i) { return i < tab->size() ? (*tab)[i] : 0; };
}

Seq concat(const std::vector<std::uint64_t>& s, const Seq& a) {
  auto tab = std::make_shared<std::vector<std::uint64_t>>(s);
  return [tab, a](std::uint64_t i) {
    return i < tab->size() ? (*tab)[i] : a(i - tab->size());
  };
}

std::vector<std::uint64_t> append(std::vector<std::uint64_t> s, std::uint64_t n) {
  s.push_back(n);
  return s;
}

// Seeded host-level G : Seq -> N and H : Seq -> (N -> N) -> N, as values and
// as replayable host closures.
struct HostG {
  ValuePtr val;
  std::function<std::uint64_t(const std::vector<std::uint64_t>&)> fn;
};

struct HostH {
  ValuePtr val;
  std::function<std::uint64_t(const std::vector<std::uint64_t>&)> base;
  std::uint64_t n1, n2;  // points where H inspects its function argument
};

std::uint64_t seq_key(const std::vector<std::uint64_t>& s) {
  std::uint64_t k = s.size();
  for (std::size_t i = 0; i < s.size(); ++i) k += (i + 1) * s[i];
  return k;
}

HostG make_g(Rng& rng, std::uint64_t bound) {
  auto tab = std::make_shared<std::vector<std::uint64_t>>();
  for (int i = 0; i < 16; ++i) tab->push_back(rng() % (bound + 1));
  auto fn = [tab](const std::vector<std::uint64_t>& s) { return (*tab)[seq_key(s) % 16]; };
  ValuePtr val = host_fn([fn](const ValuePtr& sv, Budget& b) -> ValuePtr {
    return nat_value(fn(read_seq(sv, b)));
  });
  return {val, fn};
}

HostH make_h(Rng& rng, std::uint64_t bound) {
  auto tab = std::make_shared<std::vector<std::uint64_t>>();
  for (int i = 0; i < 16; ++i) tab->push_back(rng() % (bound + 1));
  std::uint64_t n1 = rng() % 4, n2 = rng() % 4;
  auto base = [tab](const std::vector<std::uint64_t>& s) { return (*tab)[seq_key(s) % 16]; };
  ValuePtr val = host_fn([base, n1, n2](const ValuePtr& sv, Budget& b) -> ValuePtr {
    auto svec = read_seq(sv, b);
    return host_fn([base, n1, n2, svec](const ValuePtr& fv, Budget& b2) -> ValuePtr {
      std::uint64_t r = base(svec) + ev1(fv, nat_value(n1), b2) + ev1(fv, nat_value(n2), b2);
      return nat_value(r);
    });
  });
  return {val, base, n1, n2};
}

// Both GBR equations for one sampled (G, H, s); true when they hold.
bool gbr_holds_one(const ValuePtr& vS, const ValuePtr& vB, const std::vector<std::uint64_t>& sv,
                   const HostG& G, const HostH& H, Budget& b, std::uint64_t* got,
                   std::uint64_t* want) {
  auto brec = [&](const std::vector<std::uint64_t>& s) {
    return readback_nat(
        apply(apply(apply(vB, G.val, b), Thunk::of(H.val), b), Thunk::of(seq_value(s)), b));
  };
  std::uint64_t lhs = brec(sv);
  std::uint64_t ss = ev1(vS, seq_value(sv), b);
  std::uint64_t rhs;
  if (ss == 1) {
    rhs = G.fn(sv);
  } else {
    rhs = H.base(sv) + brec(append(sv, H.n1)) + brec(append(sv, H.n2));
  }
  if (got) *got = lhs;
  if (want) *want = rhs;
  return lhs == rhs;
}

std::vector<std::uint64_t> sample_seq(Rng& rng, std::uint64_t max_len, std::uint64_t bound) {
  std::uint64_t len = rng() % (max_len + 1);
  std::vector<std::uint64_t> s;
  for (std::uint64_t i = 0; i < len; ++i) s.push_back(rng() % (bound + 1));
  return s;
}

struct ContParts {
  ValuePtr v, m;
};

ContParts split_pair(const ValuePtr& w, Budget& b) {
  if (w->kind != VKind::Pair) fail(ErrCode::IllTypedRuntime, "expected a pair carrier");
  return {force(w->fst, b), force(w->snd, b)};
}

}  // namespace

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["property"] = property;
  j["seed"] = seed;
  j["samples"] = samples;
  j["verdict"] = pass() ? "pass" : "fail";
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& c : counterexamples)
    j["counterexamples"].push_back(
        {{"inputs", c.inputs}, {"observed", c.observed}, {"expected", c.expected}});
  if (!note.empty()) j["note"] = note;
  return j.dump(2);
}

VerificationReport check_continuity(const TmPtr& f, const TmPtr& M, const Sampler& s) {
  VerificationReport r{.property = "continuity", .seed = s.seed, .samples = s.samples};
  Rng rng(s.seed);
  Budget b0 = fresh_budget();
  ValuePtr vf = eval_closed(f, b0), vM = eval_closed(M, b0);
  for (int i = 0; i < s.samples; ++i) {
    Budget b = fresh_budget();
    Seq alpha = table_seq(rng, s.seq_bound);
    std::uint64_t m = ev1(vM, foreign(alpha), b);
    std::uint64_t pos = m + rng() % 9;
    std::uint64_t bump = 1 + rng() % 3;
    Seq beta = [alpha, pos, bump](std::uint64_t k) {
      return k == pos ? alpha(k) + bump : alpha(k);
    };
    std::uint64_t fa = ev1(vf, foreign(alpha), b);
    std::uint64_t fb = ev1(vf, foreign(beta), b);
    if (fa != fb)
      add_ce(r, "alpha=" + show_seq_prefix(alpha, std::max<std::uint64_t>(pos + 1, 4)) +
                    " m=" + std::to_string(m) + " beta differs at " + std::to_string(pos),
             "f(beta)=" + std::to_string(fb), "f(alpha)=" + std::to_string(fa));
  }
  return r;
}

VerificationReport check_uniform_continuity(const TmPtr& f, const TmPtr& M, const Seq& delta,
                                            int prefix_bound, std::uint64_t cap) {
  VerificationReport r{.property = "uniform-continuity", .seed = 0, .samples = 0};
  Budget b = fresh_budget();
  ValuePtr vf = eval_closed(f, b), vM = eval_closed(M, b);
  std::uint64_t m = ev1(vM, foreign(delta), b);
  std::uint64_t L = m + prefix_bound;
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < L; ++i) {
    std::uint64_t w = delta(i) + 1;
    if (count > cap / w)
      fail(ErrCode::BudgetExhausted, "uniform continuity enumeration exceeds the prefix cap");
    count *= w;
  }
  r.samples = (int)std::min<std::uint64_t>(count, 1u << 30);
  std::vector<std::uint64_t> p(L, 0);
  std::map<std::vector<std::uint64_t>, std::pair<std::uint64_t, std::vector<std::uint64_t>>> rep;
  while (true) {
    Budget be = fresh_budget();
    std::uint64_t v = ev1(vf, foreign(hat(p)), be);
    std::vector<std::uint64_t> key(p.begin(), p.begin() + std::min<std::uint64_t>(m, L));
    auto it = rep.find(key);
    if (it == rep.end()) {
      rep.emplace(key, std::make_pair(v, p));
    } else if (it->second.first != v) {
      add_ce(r, "alpha=" + show_vec(it->second.second) + " beta=" + show_vec(p) +
                    " agree below M(delta)=" + std::to_string(m),
             "f(beta)=" + std::to_string(v), "f(alpha)=" + std::to_string(it->second.first));
    }
    // odometer over prefixes bounded by delta
    std::uint64_t i = 0;
    for (; i < L; ++i) {
      if (p[i] < delta(i)) {
        ++p[i];
        std::fill(p.begin(), p.begin() + i, 0);
        break;
      }
    }
    if (i == L) break;
  }
  return r;
}

namespace {

// A dominated pair (lo, hi) with hi maj lo at the given type.
std::pair<ValuePtr, ValuePtr> synth_maj(const TyPtr& ty, const Sampler& s, Rng& rng) {
  switch (ty->kind) {
    case TyKind::Nat: {
      std::uint64_t n = rng() % 7;
      return {nat_value(n), nat_value(std::min<std::uint64_t>(n + rng() % 4, 6))};
    }
    case TyKind::Arrow: {
      if (ty->a->kind == TyKind::Nat && ty->b->kind == TyKind::Nat) {
        auto tab = std::make_shared<std::vector<std::uint64_t>>();
        for (int i = 0; i < 32; ++i) tab->push_back(rng() % (s.max_nat + 1));
        std::uint64_t slack = rng() % 3;
        Seq lo = [tab](std::uint64_t i) { return (*tab)[i % 32]; };
        // the running maximum dominates every earlier entry
        Seq hi = [tab, slack](std::uint64_t i) {
          std::uint64_t mx = 0;
          for (std::uint64_t k = 0; k <= std::min<std::uint64_t>(i, 31); ++k)
            mx = std::max(mx, (*tab)[k]);
          return mx + slack;
        };
        return {foreign(lo), foreign(hi)};
      }
      auto [clo, chi] = synth_maj(ty->b, s, rng);
      auto konst = [](ValuePtr v) {
        return host_fn([v](const ValuePtr&, Budget&) { return v; });
      };
      return {konst(clo), konst(chi)};
    }
    case TyKind::Prod: {
      auto [a1, a2] = synth_maj(ty->a, s, rng);
      auto [b1, b2] = synth_maj(ty->b, s, rng);
      return {pair_value(a1, b1), pair_value(a2, b2)};
    }
    default:
      fail(ErrCode::Unsynthesizable, "majorizability is not defined at " + show_ty(ty));
  }
}

void maj_rel(const ValuePtr& vt, const ValuePtr& vu, const TyPtr& ty, const Sampler& s,
             Rng& rng, Budget& b, int depth, const std::string& path,
             VerificationReport& r) {
  switch (ty->kind) {
    case TyKind::Nat: {
      std::uint64_t a = readback_nat(vt), c = readback_nat(vu);
      if (!(a <= c))
        add_ce(r, path.empty() ? "at N" : path, std::to_string(a) + " > " + std::to_string(c),
               "t <= u");
      return;
    }
    case TyKind::Prod: {
      maj_rel(force(vt->fst, b), force(vu->fst, b), ty->a, s, rng, b, depth, path + " pr1", r);
      maj_rel(force(vt->snd, b), force(vu->snd, b), ty->b, s, rng, b, depth, path + " pr2", r);
      return;
    }
    case TyKind::Arrow: {
      if (ty->a->kind == TyKind::Nat) {
        // exhaustive at first-order arguments up to 6; no sampling needed
        for (std::uint64_t n = 0; n <= std::min<std::uint64_t>(s.max_nat, 6); ++n) {
          Budget bb = fresh_budget();
          maj_rel(apply(vt, nat_value(n), bb), apply(vu, nat_value(n), bb), ty->b, s, rng, bb,
                  depth + 1, path + " @" + std::to_string(n), r);
          if (!r.counterexamples.empty() && depth > 0) return;
        }
        return;
      }
      int k = std::max(2, s.samples >> (2 * depth + 2));
      for (int i = 0; i < k; ++i) {
        Budget bb = fresh_budget();
        auto [lo, hi] = synth_maj(ty->a, s, rng);
        maj_rel(apply(vt, lo, bb), apply(vu, hi, bb), ty->b, s, rng, bb, depth + 1,
                path + " @sample" + std::to_string(i), r);
        if (!r.counterexamples.empty() && depth > 0) return;
      }
      return;
    }
    default:
      fail(ErrCode::Unsynthesizable, "majorizability is not defined at " + show_ty(ty));
  }
}

}  // namespace

VerificationReport check_majorizes(const TmPtr& t, const TmPtr& u, const TyPtr& rho,
                                   const Sampler& s) {
  VerificationReport r{.property = "majorizes", .seed = s.seed, .samples = s.samples};
  Rng rng(s.seed);
  Budget b = fresh_budget();
  ValuePtr vt = eval_closed(t, b), vu = eval_closed(u, b);
  maj_rel(vt, vu, rho, s, rng, b, 0, "", r);
  return r;
}

VerificationReport check_gbr(const TmPtr& S, const TmPtr& B, const TyPtr& sigma,
                             const Sampler& s) {
  if (sigma->kind != TyKind::Nat)
    fail(ErrCode::InvalidArgument, "the recursor oracle runs at motive N");
  VerificationReport r{.property = "gbr", .seed = s.seed, .samples = s.samples};
  Rng rng(s.seed);
  Budget b0 = fresh_budget();
  ValuePtr vS = eval_closed(S, b0), vB = eval_closed(B, b0);
  for (int i = 0; i < s.samples; ++i) {
    Budget b = fresh_budget();
    auto sv = sample_seq(rng, 4, 3);
    HostG G = make_g(rng, s.max_nat);
    HostH H = make_h(rng, s.max_nat);
    std::uint64_t got = 0, want = 0;
    if (!gbr_holds_one(vS, vB, sv, G, H, b, &got, &want))
      add_ce(r, "s=" + show_vec(sv) + " sample=" + std::to_string(i),
             "B(G,H,s)=" + std::to_string(got), std::to_string(want));
  }
  return r;
}

VerificationReport check_secures_monotone(const TmPtr& S, const TmPtr& Y, const Sampler& s) {
  VerificationReport r{.property = "secures-monotone", .seed = s.seed, .samples = s.samples};
  Rng rng(s.seed);
  Budget b0 = fresh_budget();
  ValuePtr vS = eval_closed(S, b0), vY = eval_closed(Y, b0);
  for (int i = 0; i < s.samples; ++i) {
    Budget b = fresh_budget();
    auto sv = sample_seq(rng, 4, 3);
    if (ev1(vS, seq_value(sv), b) != 1) continue;
    for (std::uint64_t n = 0; n <= 3; ++n) {
      if (ev1(vS, seq_value(append(sv, n)), b) != 1)
        add_ce(r, "s=" + show_vec(sv) + " n=" + std::to_string(n), "S(s*n)=0",
               "S monotone: S(s*n)=1");
    }
    std::uint64_t ys = ev1(vY, foreign(hat(sv)), b);
    for (int j = 0; j < 5; ++j) {
      Seq alpha = table_seq(rng, s.seq_bound);
      std::uint64_t ya = ev1(vY, foreign(concat(sv, alpha)), b);
      if (ya != ys)
        add_ce(r, "s=" + show_vec(sv) + " alpha=" + show_seq_prefix(alpha, 4),
               "Y(s*alpha)=" + std::to_string(ya), "Y(hat s)=" + std::to_string(ys));
    }
  }
  return r;
}

RelationSpec maj_spec() {
  RelationSpec r;
  r.name = "maj";
  r.base = [](std::uint64_t n, const ValuePtr& w, Rng&, Budget&) {
    return n <= readback_nat(w);
  };
  r.gen = [](Rng& rng, Budget&) -> std::pair<std::uint64_t, ValuePtr> {
    std::uint64_t n = rng() % 9;
    return {n, nat_value(n + rng() % 4)};
  };
  r.gen_fun = [](Rng& rng, Budget&) -> std::pair<ValuePtr, ValuePtr> {
    auto tab = std::make_shared<std::vector<std::uint64_t>>();
    for (int i = 0; i < 32; ++i) tab->push_back(rng() % 9);
    std::uint64_t slack = rng() % 3;
    Seq lo = [tab](std::uint64_t i) { return (*tab)[i % 32]; };
    Seq hi = [tab, slack](std::uint64_t i) {
      std::uint64_t mx = 0;
      for (std::uint64_t k = 0; k <= std::min<std::uint64_t>(i, 31); ++k)
        mx = std::max(mx, (*tab)[k]);
      return mx + slack;
    };
    return {foreign(lo), foreign(hi)};
  };
  return r;
}

namespace {

struct GenericPieces {
  ValuePtr etav;
  ValuePtr omegav;  // null when absent
};

GenericPieces eval_nucleus(const SimpleNucleus& nuc) {
  Budget b = fresh_budget();
  GenericPieces g;
  g.etav = eval_closed(nuc.eta, b);
  if (nuc.omega) g.omegav = eval_closed(nuc.omega, b);
  return g;
}

// gen for the point-parametrized relations: eta-pairs (n, eta n) and
// Omega-pairs (point(k), Omega(eta k)).
// max_nat caps the sampled numerals: the uniform-continuity and bar carriers
// nest cube enumerations and recursor trees whose depth follows the numeral,
// so the heavier relations use a tighter bound.
std::function<std::pair<std::uint64_t, ValuePtr>(Rng&, Budget&)> point_gen(
    const GenericPieces& g, const Seq& point, std::uint64_t max_nat) {
  return [g, point, max_nat](Rng& rng, Budget& b) -> std::pair<std::uint64_t, ValuePtr> {
    if (rng() % 2 == 0) {
      std::uint64_t n = rng() % (max_nat + 1);
      return {n, apply(g.etav, nat_value(n), b)};
    }
    std::uint64_t k = rng() % (max_nat + 1);
    return {point(k), apply(g.omegav, apply(g.etav, nat_value(k), b), b)};
  };
}

}  // namespace

RelationSpec cont_spec(Seq alpha) {
  GenericPieces g = eval_nucleus(nucleus(NucleusKind::Continuity));
  RelationSpec r;
  r.name = "cont";
  r.base = [alpha](std::uint64_t n, const ValuePtr& w, Rng& rng, Budget& b) {
    ContParts p = split_pair(w, b);
    std::uint64_t v = ev1(p.v, foreign(alpha), b);
    if (v != n) return false;
    std::uint64_t m = ev1(p.m, foreign(alpha), b);
    for (int j = 0; j < 8; ++j) {
      std::uint64_t pos = m + rng() % 9;
      std::uint64_t bump = 1 + rng() % 3;
      Seq beta = [alpha, pos, bump](std::uint64_t k) {
        return k == pos ? alpha(k) + bump : alpha(k);
      };
      if (ev1(p.v, foreign(beta), b) != v) return false;
    }
    return true;
  };
  r.gen = point_gen(g, alpha, 8);
  r.gen_fun = [g, alpha](Rng&, Budget&) -> std::pair<ValuePtr, ValuePtr> {
    return {foreign(alpha), g.omegav};
  };
  return r;
}

RelationSpec ucont_spec(Seq delta) {
  GenericPieces g = eval_nucleus(nucleus(NucleusKind::UniformContinuity));
  RelationSpec r;
  r.name = "ucont";
  r.base = [delta](std::uint64_t n, const ValuePtr& w, Rng& rng, Budget& b) {
    ContParts p = split_pair(w, b);
    std::uint64_t v = ev1(p.v, foreign(delta), b);
    if (v != n) return false;
    std::uint64_t m = ev1(p.m, foreign(delta), b);
    for (int j = 0; j < 8; ++j) {
      // alpha, beta below delta, agreeing on the first m entries
      auto shared = std::make_shared<std::vector<std::uint64_t>>();
      auto ta = std::make_shared<std::vector<std::uint64_t>>();
      auto tb = std::make_shared<std::vector<std::uint64_t>>();
      for (std::uint64_t i = 0; i < m && i < 64; ++i)
        shared->push_back(rng() % (delta(i) + 1));
      for (std::uint64_t i = 0; i < 8; ++i) {
        ta->push_back(rng() % (delta(m + i) + 1));
        tb->push_back(rng() % (delta(m + i) + 1));
      }
      auto mk = [shared, m](std::shared_ptr<std::vector<std::uint64_t>> tail) -> Seq {
        return [shared, tail, m](std::uint64_t i) -> std::uint64_t {
          if (i < m && i < shared->size()) return (*shared)[i];
          if (i >= m && i - m < tail->size()) return (*tail)[i - m];
          return 0;
        };
      };
      if (ev1(p.v, foreign(mk(ta)), b) != ev1(p.v, foreign(mk(tb)), b)) return false;
    }
    return true;
  };
  r.gen = point_gen(g, delta, 3);
  r.gen_fun = [g, delta](Rng&, Budget&) -> std::pair<ValuePtr, ValuePtr> {
    return {foreign(delta), g.omegav};
  };
  return r;
}

RelationSpec bar_spec(Seq alpha) {
  GenericPieces g = eval_nucleus(bar_nucleus(ty_nat()));
  RelationSpec r;
  r.name = "bar";
  r.base = [alpha](std::uint64_t n, const ValuePtr& w, Rng& rng, Budget& b) {
    if (w->kind != VKind::Pair) fail(ErrCode::IllTypedRuntime, "expected the bar carrier");
    ValuePtr v = force(w->fst, b);
    ValuePtr sb = force(w->snd, b);
    if (sb->kind != VKind::Pair) fail(ErrCode::IllTypedRuntime, "expected the bar carrier");
    ValuePtr sv = force(sb->fst, b);
    ValuePtr bv = force(sb->snd, b);
    if (ev1(v, foreign(alpha), b) != n) return false;
    for (int j = 0; j < 4; ++j) {
      auto s = sample_seq(rng, 3, 3);
      if (ev1(sv, seq_value(s), b) == 1) {
        for (std::uint64_t k = 0; k <= 2; ++k)
          if (ev1(sv, seq_value(append(s, k)), b) != 1) return false;
        std::uint64_t ys = ev1(v, foreign(hat(s)), b);
        for (int q = 0; q < 2; ++q) {
          Seq beta = table_seq(rng, 5);
          if (ev1(v, foreign(concat(s, beta)), b) != ys) return false;
        }
      }
    }
    for (int j = 0; j < 2; ++j) {
      auto s = sample_seq(rng, 3, 3);
      HostG G = make_g(rng, 8);
      HostH H = make_h(rng, 8);
      // vS/vB of the carrier under test
      auto vS_tm = sv;
      std::uint64_t got = 0, want = 0;
      auto brec = [&](const std::vector<std::uint64_t>& sq) {
        return readback_nat(apply(apply(apply(bv, G.val, b), Thunk::of(H.val), b),
                                  Thunk::of(seq_value(sq)), b));
      };
      got = brec(s);
      if (ev1(vS_tm, seq_value(s), b) == 1)
        want = G.fn(s);
      else
        want = H.base(s) + brec(append(s, H.n1)) + brec(append(s, H.n2));
      if (got != want) return false;
    }
    return true;
  };
  r.gen = point_gen(g, alpha, 4);
  r.gen_fun = [g, alpha](Rng&, Budget&) -> std::pair<ValuePtr, ValuePtr> {
    return {foreign(alpha), g.omegav};
  };
  return r;
}

namespace {

std::pair<ValuePtr, ValuePtr> synth_related(const RelationSpec& spec, const TyPtr& ty, Rng& rng,
                                            Budget& b) {
  switch (ty->kind) {
    case TyKind::Nat: {
      auto [n, w] = spec.gen(rng, b);
      return {nat_value(n), w};
    }
    case TyKind::Arrow: {
      if (spec.gen_fun && ty->a->kind == TyKind::Nat && ty->b->kind == TyKind::Nat)
        return spec.gen_fun(rng, b);
      auto [y, yj] = synth_related(spec, ty->b, rng, b);
      auto konst = [](ValuePtr v) {
        return host_fn([v](const ValuePtr&, Budget&) { return v; });
      };
      return {konst(y), konst(yj)};
    }
    case TyKind::Prod: {
      auto [a1, a2] = synth_related(spec, ty->a, rng, b);
      auto [b1, b2] = synth_related(spec, ty->b, rng, b);
      return {pair_value(a1, b1), pair_value(a2, b2)};
    }
    default:
      fail(ErrCode::Unsynthesizable,
           "no generator for related pairs at " + show_ty(ty));
  }
}

void rel_check(const RelationSpec& spec, const ValuePtr& vt, const ValuePtr& vj,
               const TyPtr& ty, const Sampler& s, Rng& rng, Budget& b, int depth,
               const std::string& path, VerificationReport& r) {
  switch (ty->kind) {
    case TyKind::Nat: {
      std::uint64_t n = readback_nat(vt);
      if (!spec.base(n, vj, rng, b))
        add_ce(r, "conclusion" + path, "base relation fails at n=" + std::to_string(n),
               "related");
      return;
    }
    case TyKind::Prod:
      rel_check(spec, force(vt->fst, b), force(vj->fst, b), ty->a, s, rng, b, depth,
                path + " pr1", r);
      rel_check(spec, force(vt->snd, b), force(vj->snd, b), ty->b, s, rng, b, depth,
                path + " pr2", r);
      return;
    case TyKind::Arrow: {
      int k = depth == 0 ? std::max(2, s.samples / 10) : 2;
      for (int i = 0; i < k; ++i) {
        Budget bb = fresh_budget();
        auto [x, xj] = synth_related(spec, ty->a, rng, bb);
        rel_check(spec, apply(vt, x, bb), apply(vj, xj, bb), ty->b, s, rng, bb, depth + 1,
                  path + " @" + std::to_string(i), r);
        if (!r.counterexamples.empty() && depth > 0) return;
      }
      return;
    }
    default:
      fail(ErrCode::Unsynthesizable, "relation undefined at " + show_ty(ty));
  }
}

}  // namespace

VerificationReport check_logical_relation(const SimpleNucleus& nuc, const RelationSpec& spec,
                                          const TmPtr& t, const TmPtr& tJ, const TyPtr& rho,
                                          const Sampler& s) {
  VerificationReport r{.property = "logical-relation:" + spec.name,
                       .seed = s.seed,
                       .samples = s.samples};
  r.note = "sampled evidence only; universal clauses are not proved";
  Rng rng(s.seed);
  Budget b0 = fresh_budget();
  ValuePtr etav = eval_closed(nuc.eta, b0);
  ValuePtr kapv = eval_closed(nuc.kappa, b0);

  // eta condition
  for (std::uint64_t n = 0; n <= s.max_nat; ++n) {
    Budget b = fresh_budget();
    if (!spec.base(n, apply(etav, nat_value(n), b), rng, b))
      add_ce(r, "eta n=" + std::to_string(n), "base relation fails on eta n", "related");
  }

  // kappa condition
  int outer = std::max(4, s.samples / 5);
  int inner = std::max(2, s.samples / 20);
  for (int i = 0; i < outer; ++i) {
    Budget b = fresh_budget();
    auto ns = std::make_shared<std::vector<std::uint64_t>>();
    auto ws = std::make_shared<std::vector<ValuePtr>>();
    for (int k = 0; k < 8; ++k) {
      auto [n, w] = spec.gen(rng, b);
      ns->push_back(n);
      ws->push_back(w);
    }
    ValuePtr gval = host_fn([ws](const ValuePtr& idx, Budget&) -> ValuePtr {
      return (*ws)[readback_nat(idx) % 8];
    });
    ValuePtr kg = apply(kapv, gval, b);
    for (int j = 0; j < inner; ++j) {
      auto [m, u] = spec.gen(rng, b);
      std::uint64_t fm = (*ns)[m % 8];
      if (!spec.base(fm, apply(kg, Thunk::of(u), b), rng, b))
        add_ce(r, "kappa sample=" + std::to_string(i) + " arg n=" + std::to_string(m),
               "f(n) unrelated to (kappa g)(w)", "related");
    }
  }

  // conclusion: t related to its translation at rho
  Budget b = fresh_budget();
  ValuePtr vt = eval_closed(t, b);
  ValuePtr vj = eval_closed(tJ, b);
  rel_check(spec, vt, vj, rho, s, rng, b, 0, "", r);
  return r;
}

}  // namespace gst
