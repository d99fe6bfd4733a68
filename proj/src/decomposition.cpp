/*
 * Copyright 2026 The tri3 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <tri3/decomposition.hpp>

#include <algorithm>
#include <cctype>
#include <tuple>

namespace tri3 {

const char* to_string(StepStatus s) {
    switch (s) {
    case StepStatus::Pass: return "PASS";
    case StepStatus::Fail: return "FAIL";
    case StepStatus::Info: return "INFO";
    }
    return "?";
}

const char* to_string(Mode m) {
    switch (m) {
    case Mode::T31K1: return "t31k1";
    case Mode::T31K3: return "t31k3";
    case Mode::T22: return "t22";
    }
    return "?";
}

Mode parse_mode(const std::string& s) {
    if (s == "t31k1") return Mode::T31K1;
    if (s == "t31k3") return Mode::T31K3;
    if (s == "t22") return Mode::T22;
    throw InputError("unknown mode '" + s + "' (expected t31k1, t31k3 or t22)");
}

bool PipelineTrace::all_pass() const {
    return first_failure() == nullptr;
}

const TraceStep* PipelineTrace::find(const std::string& id) const {
    for (const auto& s : steps)
        if (s.id == id) return &s;
    return nullptr;
}

const TraceStep* PipelineTrace::first_failure() const {
    for (const auto& s : steps)
        if (s.status == StepStatus::Fail) return &s;
    return nullptr;
}

namespace {

// "3.3(b)" -> "3.3'(b)" for the k = 3 pipeline.
std::string label(const std::string& base, int k) {
    if (k != 3 || base.empty() || !std::isdigit(static_cast<unsigned char>(base[0]))) return base;
    const auto paren = base.find('(');
    if (paren == std::string::npos) return base + "'";
    return base.substr(0, paren) + "'" + base.substr(paren);
}

std::string render(const std::vector<Index>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

class Recorder {
public:
    explicit Recorder(PipelineTrace* t) : tr_(t ? t : &local_) {}

    void add(std::string id, std::string lemma, const Verdict& v, StepStatus when_bad = StepStatus::Fail) {
        TraceStep s;
        s.id = std::move(id);
        s.lemma = std::move(lemma);
        s.property = v.property;
        s.status = v.holds ? StepStatus::Pass : when_bad;
        s.checked = v.checked;
        s.violations = v.violations;
        s.witnesses = v.witnesses;
        tr_->steps.push_back(std::move(s));
    }

    void add(TraceStep s) { tr_->steps.push_back(std::move(s)); }

    /// Throws PipelineFailure if any recorded step failed.
    void gate() const {
        if (const auto* f = tr_->first_failure()) {
            std::string msg = "step '" + f->id + "' (" + f->lemma + ") failed: " + f->property;
            if (!f->witnesses.empty()) msg += " at " + render(f->witnesses.front());
            throw PipelineFailure(msg, *tr_);
        }
    }

    PipelineTrace& trace() { return *tr_; }

private:
    PipelineTrace local_;
    PipelineTrace* tr_;
};

Index frame_e(const TriRing3& t, int k) { return k == 1 ? t.q(1) : t.q_prime(3); }
Index frame_f(const TriRing3& t, int k) { return k == 1 ? t.q_prime(1) : t.q(3); }

void check_k(int k) {
    if (k != 1 && k != 3) throw InputError("k must be 1 or 3");
}

Verdict conservation(const Context& c, const EndoMap& phi, const std::vector<const EndoMap*>& parts,
                     const std::string& what) {
    auto sum = EndoMap::zero(c.t);
    for (const auto* p : parts) sum = map_add(c.t, sum, *p);
    return maps_equal(c.t, phi, sum, what);
}

std::vector<Index> concat(const std::vector<Index>& a, const std::vector<Index>& b) {
    std::vector<Index> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

Frame Frame::make(const Context& c, int k) {
    check_k(k);
    const auto& t = c.t;
    Frame f;
    f.k = k;
    f.e = frame_e(t, k);
    f.f = frame_f(t, k);
    f.e_mask = diagonal_corner_mask(k, k == 3);
    f.f_mask = diagonal_corner_mask(k, k == 1);
    f.m_mask = static_cast<BlockMask>(block::All & ~(f.e_mask | f.f_mask));
    f.te = t.elements_of(f.e_mask);
    f.m = t.elements_of(f.m_mask);
    f.tf = t.elements_of(f.f_mask);
    f.te_center = corner_center(t, f.e_mask);
    f.tf_center = corner_center(t, f.f_mask);
    f.lift_e = CentralLift::build(t, c.facts.center, f.e_mask);
    f.lift_f = CentralLift::build(t, c.facts.center, f.f_mask);
    return f;
}

std::pair<EndoMap, EndoMap> reduce_inner(const Context& c, const EndoMap& phi, int k, PipelineTrace* trace) {
    check_k(k);
    require_same_ring(c.t, phi);
    const auto& t = c.t;
    Recorder rec(trace);
    const Index e = frame_e(t, k), f = frame_f(t, k);
    const EndoMap d = k == 1 ? inner_derivation(t, phi(f)) : inner_derivation(t, t.neg(phi(e)));
    EndoMap phi1 = map_sub(t, phi, d);

    Verdict corner;
    corner.property = k == 1 ? "Q1 phi1(Q'1) Q'1 = 0" : "Q'3 phi1(Q'3) Q3 = 0";
    corner.checked = 1;
    const Index probe = k == 1 ? f : e;
    if (t.sandwich(e, phi1(probe), f) != t.zero()) corner.fail({probe}, t.limits().witness_cap);
    rec.add("corner-identity", label("3.2", k), corner);
    rec.add("phi1-mld", label("3.2", k), is_mult_lie_derivation(t, phi1, c.exec));
    rec.add("conservation-reduce", "conservation", conservation(c, phi, {&d, &phi1}, "phi = d + phi1"));
    rec.gate();
    return {d, std::move(phi1)};
}

std::vector<TraceStep> lemma_invariant_report(const Context& c, const EndoMap& phi1, int k, bool throw_on_fail) {
    check_k(k);
    require_same_ring(c.t, phi1);
    const auto& t = c.t;
    const auto cap = t.limits().witness_cap;
    const Frame fr = Frame::make(c, k);
    const Index E = fr.e, F = fr.f, Z = t.zero();
    const auto& center = c.facts.center;
    PipelineTrace local;
    Recorder rec(&local);
    const auto diag_blocks = static_cast<BlockMask>(block::R11 | block::R22 | block::R33);
    const auto te_tf = concat(fr.te, fr.tf);
    auto in_list = [](const std::vector<Index>& sorted, Index x) {
        return std::binary_search(sorted.begin(), sorted.end(), x);
    };

    {
        Verdict v;
        v.property = "phi1(E), phi1(F) diagonal";
        for (Index p : {E, F}) {
            ++v.checked;
            if (!t.in_blocks(phi1(p), diag_blocks)) v.fail({p}, cap);
        }
        rec.add("idempotent-images-diagonal", label("3.3(a)", k), v);
    }
    {
        Verdict v;
        v.property = "E phi1(a) F = 0 for a in T_E and T_F";
        for (auto a : te_tf) {
            ++v.checked;
            if (t.sandwich(E, phi1(a), F) != Z) v.fail({a}, cap);
        }
        rec.add("corner-vanishing", label("3.3(b)", k), v);
    }
    {
        Verdict v;
        v.property = "phi1(a) = E phi1(a) E + F phi1(a) F, phi1(m) = E phi1(m) F";
        for (auto a : te_tf) {
            ++v.checked;
            const Index y = phi1(a);
            if (y != t.add(t.sandwich(E, y, E), t.sandwich(F, y, F))) v.fail({a}, cap);
        }
        for (auto m : fr.m) {
            ++v.checked;
            if (phi1(m) != t.sandwich(E, phi1(m), F)) v.fail({m}, cap);
        }
        rec.add("block-decomposition", label("3.3(c)", k), v);
    }
    {
        Verdict v;
        v.property = "E phi1(T_F) E in Z(T_E), F phi1(T_E) F in Z(T_F)";
        for (auto b : fr.tf) {
            ++v.checked;
            if (!in_list(fr.te_center, t.sandwich(E, phi1(b), E))) v.fail({b}, cap);
        }
        for (auto a : fr.te) {
            ++v.checked;
            if (!in_list(fr.tf_center, t.sandwich(F, phi1(a), F))) v.fail({a}, cap);
        }
        rec.add("corner-centers", label("3.3(d)", k), v);
    }
    {
        Verdict v;
        v.property = "phi1(E), phi1(F) in Z(T)";
        for (Index p : {E, F}) {
            ++v.checked;
            if (!center.contains(phi1(p))) v.fail({p}, cap);
        }
        rec.add("idempotent-images-central", label("3.4", k), v);
    }
    {
        Verdict v;
        v.property = "phi1(E x F) = E phi1(x) F";
        for (Index x = 0; x < t.size(); ++x) {
            ++v.checked;
            if (phi1(t.sandwich(E, x, F)) != t.sandwich(E, phi1(x), F)) v.fail({x}, cap);
        }
        rec.add("module-corner", label("3.4", k), v);
    }
    {
        Verdict v;
        v.property = "phi1(am) = phi1(a)m + a phi1(m) - m phi1(a)";
        for (auto a : fr.te)
            for (auto m : fr.m) {
                ++v.checked;
                const Index rhs =
                    t.sub(t.add(t.mul(phi1(a), m), t.mul(a, phi1(m))), t.mul(m, phi1(a)));
                if (phi1(t.mul(a, m)) != rhs) v.fail({a, m}, cap);
            }
        rec.add("product-am", label("3.5", k), v);
    }
    {
        Verdict v;
        v.property = "phi1(mb) = phi1(m)b + m phi1(b) - phi1(b)m";
        for (auto m : fr.m)
            for (auto b : fr.tf) {
                ++v.checked;
                const Index rhs =
                    t.sub(t.add(t.mul(phi1(m), b), t.mul(m, phi1(b))), t.mul(phi1(b), m));
                if (phi1(t.mul(m, b)) != rhs) v.fail({m, b}, cap);
            }
        rec.add("product-mb", label("3.5", k), v);
    }
    auto defect = [&](Index x, Index y) { return t.sub(t.sub(phi1(t.add(x, y)), phi1(x)), phi1(y)); };
    {
        Verdict v;
        v.property = "phi1(a+m)-phi1(a)-phi1(m) and phi1(a+b)-phi1(a)-phi1(b) in Z(T)";
        for (auto a : fr.te) {
            for (auto m : fr.m) {
                ++v.checked;
                if (!center.contains(defect(a, m))) v.fail({a, m}, cap);
            }
            for (auto b : fr.tf) {
                ++v.checked;
                if (!center.contains(defect(a, b))) v.fail({a, b}, cap);
            }
        }
        rec.add("sum-defect-central", label("3.6(1)", k), v);
    }
    {
        Verdict v;
        v.property = "phi1(b+m)-phi1(b)-phi1(m) in Z(T) (recorded, not asserted)";
        for (auto b : fr.tf)
            for (auto m : fr.m) {
                ++v.checked;
                if (!center.contains(defect(b, m))) v.fail({b, m}, cap);
            }
        rec.add("sum-defect-b-m", label("3.6(1)", k), v, StepStatus::Info);
    }
    {
        Verdict v;
        v.property = "phi1 additive on M";
        for (auto m : fr.m)
            for (auto n : fr.m) {
                ++v.checked;
                if (defect(m, n) != Z) v.fail({m, n}, cap);
            }
        rec.add("module-additive", label("3.6(2)", k), v);
    }
    {
        const SSets s(t);
        const SSet which = k == 1 ? SSet::S23 : SSet::S12;
        Verdict v;
        v.property = std::string("phi1(x)-phi1(ExE)-phi1(FxF)-phi1(ExF) in ") + to_string(which);
        for (Index x = 0; x < t.size(); ++x) {
            ++v.checked;
            const Index y = t.sub(t.sub(t.sub(phi1(x), phi1(t.sandwich(E, x, E))), phi1(t.sandwich(F, x, F))),
                                  phi1(t.sandwich(E, x, F)));
            if (!s.contains(y, which)) v.fail({x}, cap);
        }
        rec.add("sum-defect-range", label("3.6(3)", k), v);
    }
    if (throw_on_fail) rec.gate();
    return local.steps;
}

namespace {

EndoMap gamma1_of(const Context& c, const Frame& fr, const EndoMap& phi1) {
    const auto& t = c.t;
    return EndoMap::from_function(t, [&](Index x) {
        const Index a = t.sandwich(fr.e, phi1(t.sandwich(fr.f, x, fr.f)), fr.e);
        const Index b = t.sandwich(fr.f, phi1(t.sandwich(fr.e, x, fr.e)), fr.f);
        const auto za = fr.lift_e(a), zb = fr.lift_f(b);
        if (!za || !zb)
            throw StandardAssumptionViolated("gamma1: corner value of element " + std::to_string(x) +
                                             " has no central lift");
        return t.add(*za, *zb);
    });
}

} // namespace

EndoMap build_gamma1(const Context& c, const EndoMap& phi1, int k, PipelineTrace* trace) {
    check_k(k);
    require_same_ring(c.t, phi1);
    const auto& t = c.t;
    Recorder rec(trace);
    const Frame fr = Frame::make(c, k);
    EndoMap gamma1 = gamma1_of(c, fr, phi1);
    rec.add("gamma1-central", "gamma1",
            is_central_vanishing_on_commutators(t, gamma1, c.facts.center, c.facts.commutators));
    const EndoMap delta0 = map_sub(t, phi1, gamma1);
    rec.add("delta0-mld", "delta0", is_mult_lie_derivation(t, delta0, c.exec));
    Verdict blocks;
    blocks.property = "delta0(M) in M, delta0(T_E) in T_E, delta0(T_F) in T_F";
    for (const auto& part : {range_within(t, delta0, fr.m, fr.m_mask, ""), range_within(t, delta0, fr.te, fr.e_mask, ""),
                             range_within(t, delta0, fr.tf, fr.f_mask, "")}) {
        blocks.checked += part.checked;
        blocks.violations += part.violations;
        blocks.holds = blocks.holds && part.holds;
        for (const auto& w : part.witnesses)
            if (blocks.witnesses.size() < t.limits().witness_cap) blocks.witnesses.push_back(w);
    }
    rec.add("delta0-blocks", "delta0", blocks);
    rec.gate();
    return gamma1;
}

std::pair<EndoMap, EndoMap> build_delta1(const Context& c, const EndoMap& delta0, int k, PipelineTrace* trace) {
    check_k(k);
    require_same_ring(c.t, delta0);
    const auto& t = c.t;
    const auto cap = t.limits().witness_cap;
    Recorder rec(trace);
    const Index E = frame_e(t, k), F = frame_f(t, k);
    EndoMap delta1 = EndoMap::from_function(t, [&](Index x) {
        return t.add(t.add(delta0(t.sandwich(E, x, E)), delta0(t.sandwich(E, x, F))), delta0(t.sandwich(F, x, F)));
    });
    EndoMap xi1 = map_sub(t, delta0, delta1);

    {
        Verdict v;
        v.property = "delta1 additive on T_E";
        const auto te = t.elements_of(diagonal_corner_mask(k, k == 3));
        for (auto a : te)
            for (auto b : te) {
                ++v.checked;
                if (delta1(t.add(a, b)) != t.add(delta1(a), delta1(b))) v.fail({a, b}, cap);
            }
        rec.add("delta1-additive-corner", "delta1", v);
    }
    rec.add("delta1-additive", "delta1", is_additive(t, delta1, c.exec));
    rec.add("delta1-leibniz", "delta1", is_leibniz(t, delta1, c.exec));
    rec.add("delta1-mld", "delta1", is_mult_lie_derivation(t, delta1, c.exec));
    rec.add("xi1-mld", "xi1", is_mult_lie_derivation(t, xi1, c.exec));
    {
        const SSets s(t);
        const SSet which = k == 1 ? SSet::S23 : SSet::S12;
        Verdict v;
        v.property = std::string("range(xi1) in ") + to_string(which);
        for (Index x = 0; x < t.size(); ++x) {
            ++v.checked;
            if (!s.contains(xi1(x), which)) v.fail({x}, cap);
        }
        rec.add("xi1-range", "xi1", v);
    }
    rec.gate();
    return {std::move(delta1), std::move(xi1)};
}

std::pair<EndoMap, EndoMap> build_gamma2(const Context& c, const EndoMap& xi1, int k, PipelineTrace* trace) {
    check_k(k);
    require_same_ring(c.t, xi1);
    const auto& t = c.t;
    const auto cap = t.limits().witness_cap;
    Recorder rec(trace);
    const auto lift = CentralLift::build(t, c.facts.center, diagonal_corner_mask(k, false));
    const Index Qk = t.q(k);
    EndoMap gamma2 = EndoMap::from_function(t, [&](Index x) {
        const auto z = lift(t.sandwich(Qk, xi1(x), Qk));
        if (!z)
            throw StandardAssumptionViolated("gamma2: corner value of element " + std::to_string(x) +
                                             " has no central lift");
        return *z;
    });
    EndoMap xi2 = map_sub(t, xi1, gamma2);
    rec.add("gamma2-central", "gamma2",
            is_central_vanishing_on_commutators(t, gamma2, c.facts.center, c.facts.commutators));
    rec.add("xi2-mld", "xi2", is_mult_lie_derivation(t, xi2, c.exec));
    {
        const SSets s(t);
        const SSet which = k == 1 ? SSet::S1 : SSet::S3;
        Verdict v;
        v.property = std::string("range(xi2) in ") + to_string(which);
        for (Index x = 0; x < t.size(); ++x) {
            ++v.checked;
            if (!s.contains(xi2(x), which)) v.fail({x}, cap);
        }
        rec.add("xi2-range", label("xi2", k), v);
    }
    rec.gate();
    return {std::move(gamma2), std::move(xi2)};
}

namespace {

void require_mld(const Context& c, const EndoMap& phi, Recorder& rec) {
    auto v = is_mult_lie_derivation(c.t, phi, c.exec);
    rec.add("input-mld", "input", v);
    if (!v.holds)
        throw NotMLD("input map is not a multiplicative Lie derivation; violating pair " +
                     render(v.witnesses.front()));
}

void record_assumption(Recorder& rec, const AssumptionVerdict& a, const std::string& lemma, std::size_t cap) {
    Verdict v;
    v.property = a.name;
    v.checked = a.corner_center.size() + a.projection.size();
    for (auto m : a.missing) v.fail({m}, cap);
    for (auto e : a.extra) v.fail({e}, cap);
    rec.add(std::string(a.prime ? "prime-assumption-" : "standard-assumption-") + std::to_string(a.index), lemma, v);
}

struct T31Parts {
    EndoMap d, phi1, gamma1, delta0, delta1, xi1, gamma2, xi2;
};

T31Parts run_t31(const Context& c, const EndoMap& phi, int k, Recorder& rec) {
    const auto& t = c.t;
    T31Parts p;
    std::tie(p.d, p.phi1) = reduce_inner(c, phi, k, &rec.trace());
    for (auto& s : lemma_invariant_report(c, p.phi1, k, false)) rec.add(std::move(s));
    rec.gate();
    p.gamma1 = build_gamma1(c, p.phi1, k, &rec.trace());
    p.delta0 = map_sub(t, p.phi1, p.gamma1);
    rec.add("conservation-gamma1", "conservation",
            conservation(c, phi, {&p.d, &p.gamma1, &p.delta0}, "phi = d + gamma1 + delta0"));
    std::tie(p.delta1, p.xi1) = build_delta1(c, p.delta0, k, &rec.trace());
    rec.add("conservation-delta1", "conservation",
            conservation(c, phi, {&p.d, &p.gamma1, &p.delta1, &p.xi1}, "phi = d + gamma1 + delta1 + xi1"));
    std::tie(p.gamma2, p.xi2) = build_gamma2(c, p.xi1, k, &rec.trace());
    rec.add("conservation-gamma2", "conservation",
            conservation(c, phi, {&p.d, &p.gamma1, &p.delta1, &p.gamma2, &p.xi2},
                         "phi = d + gamma1 + delta1 + gamma2 + xi2"));
    rec.gate();
    return p;
}

} // namespace

DecompositionResult decompose_theorem31(const Context& c, const EndoMap& phi, int k) {
    check_k(k);
    require_same_ring(c.t, phi);
    const auto& t = c.t;
    DecompositionResult r;
    r.mode = k == 1 ? Mode::T31K1 : Mode::T31K3;
    Recorder rec(&r.trace);

    const auto& std_k = c.facts.standard[static_cast<std::size_t>(k - 1)];
    const auto& prime_k = c.facts.prime[k == 1 ? 0 : 1];
    record_assumption(rec, std_k, "3.1", t.limits().witness_cap);
    record_assumption(rec, prime_k, "3.1", t.limits().witness_cap);
    if (!std_k.holds || !prime_k.holds)
        throw StandardAssumptionViolated("hypotheses for k = " + std::to_string(k) + " fail: " +
                                         (!std_k.holds ? std_k.name : prime_k.name));
    require_mld(c, phi, rec);

    auto p = run_t31(c, phi, k, rec);
    r.delta = map_add(t, p.d, p.delta1);
    r.gamma = map_add(t, p.gamma1, p.gamma2);
    r.xi = p.xi2;

    rec.add("delta-derivation", "3.1", is_derivation(t, r.delta, c.exec));
    rec.add("gamma-central", "3.1",
            is_central_vanishing_on_commutators(t, r.gamma, c.facts.center, c.facts.commutators));
    {
        const SSets s(t);
        const SSet which = k == 1 ? SSet::S1 : SSet::S3;
        Verdict v;
        v.property = std::string("range(xi) in ") + to_string(which);
        for (Index x = 0; x < t.size(); ++x) {
            ++v.checked;
            if (!s.contains(r.xi(x), which)) v.fail({x}, t.limits().witness_cap);
        }
        rec.add("xi-range", "3.1", v);
    }
    rec.add("reconstruction", "3.1", conservation(c, phi, {&r.delta, &r.gamma, &r.xi}, "phi = delta + gamma + xi"));
    rec.gate();
    r.standard_form = true;
    return r;
}

MapVerdict verify_standard_form(const Context& c, const EndoMap& phi, const EndoMap& delta, const EndoMap& gamma) {
    const auto& t = c.t;
    const auto parts = {
        conservation(c, phi, {&delta, &gamma}, "phi = delta + gamma"),
        is_derivation(t, delta, c.exec),
        is_central_vanishing_on_commutators(t, gamma, c.facts.center, c.facts.commutators),
    };
    MapVerdict v;
    v.property = "standard form";
    for (const auto& p : parts) {
        v.checked += p.checked;
        v.violations += p.violations;
        if (!p.holds && v.holds) {
            v.holds = false;
            v.property = "standard form (" + p.property + " fails)";
            v.witnesses = p.witnesses;
        }
    }
    return v;
}

DecompositionResult decompose_theorem22(const Context& c, const EndoMap& phi) {
    require_same_ring(c.t, phi);
    const auto& t = c.t;
    DecompositionResult r;
    r.mode = Mode::T22;
    Recorder rec(&r.trace);

    for (const auto& s : c.facts.standard) record_assumption(rec, s, "2.2", t.limits().witness_cap);
    if (!c.facts.standard_holds()) {
        std::string which;
        for (const auto& s : c.facts.standard)
            if (!s.holds) which += (which.empty() ? "" : ", ") + s.name;
        throw StandardAssumptionViolated("standard assumption fails: " + which);
    }
    for (const auto& s : c.facts.prime) record_assumption(rec, s, "Claim 1", t.limits().witness_cap);
    rec.gate();
    require_mld(c, phi, rec);

    auto p = run_t31(c, phi, 1, rec);
    const EndoMap delta = map_add(t, p.d, p.delta1);
    const EndoMap gamma = map_add(t, p.gamma1, p.gamma2);
    const EndoMap& xi = p.xi2;

    const EndoMap d2 = inner_derivation(t, t.neg(xi(t.q_prime(3))));
    const EndoMap phi2 = map_sub(t, xi, d2);
    rec.add("phi2-zero", "Claim 2", maps_equal(t, phi2, EndoMap::zero(t), "phi2 = xi - d2 = 0"));
    rec.gate();

    r.delta = map_add(t, delta, xi);
    r.gamma = gamma;
    r.xi = EndoMap::zero(t);
    rec.add("final-reconstruction", "2.2", conservation(c, phi, {&r.delta, &r.gamma}, "phi = delta + gamma"));
    rec.add("final-derivation", "2.2", is_derivation(t, r.delta, c.exec));
    rec.add("final-central", "2.2",
            is_central_vanishing_on_commutators(t, r.gamma, c.facts.center, c.facts.commutators));
    rec.gate();
    r.standard_form = true;
    return r;
}

DecompositionResult decompose(const Context& c, const EndoMap& phi, Mode mode) {
    switch (mode) {
    case Mode::T31K1: return decompose_theorem31(c, phi, 1);
    case Mode::T31K3: return decompose_theorem31(c, phi, 3);
    case Mode::T22: return decompose_theorem22(c, phi);
    }
    throw InputError("unknown mode");
}

} // namespace tri3
