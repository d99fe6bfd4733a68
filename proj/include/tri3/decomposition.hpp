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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <tri3/endo_map.hpp>
#include <tri3/error.hpp>
#include <tri3/ring_facts.hpp>
#include <tri3/tri_ring.hpp>

namespace tri3 {

enum class StepStatus { Pass, Fail, Info };

const char* to_string(StepStatus s);

struct TraceStep {
    std::string id;
    /// Audit label the step audits, e.g. "3.3(b)".
    std::string lemma;
    StepStatus status = StepStatus::Pass;
    std::string property;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::vector<std::vector<Index>> witnesses;
};

struct PipelineTrace {
    std::vector<TraceStep> steps;

    bool all_pass() const;
    /// First step with this id, or nullptr.
    const TraceStep* find(const std::string& id) const;
    const TraceStep* first_failure() const;
};

/// TheoremInvariantViolation that carries the trace up to the failure.
class PipelineFailure : public TheoremInvariantViolation {
public:
    PipelineFailure(const std::string& what, PipelineTrace trace)
        : TheoremInvariantViolation(what), trace_(std::move(trace)) {}

    const PipelineTrace& trace() const noexcept { return trace_; }

private:
    PipelineTrace trace_;
};

enum class Mode { T31K1, T31K3, T22 };

const char* to_string(Mode m);
/// "t31k1", "t31k3", "t22"; throws InputError otherwise.
Mode parse_mode(const std::string& s);

struct DecompositionResult {
    Mode mode = Mode::T22;
    EndoMap delta, gamma, xi;
    PipelineTrace trace;
    bool standard_form = false;
};

/// Ring plus its precomputed facts; shared by every pipeline stage.
struct Context {
    const TriRing3& t;
    const RingFacts& facts;
    Exec exec = Exec::Parallel;
};

/// Upper-left idempotent E, its complement F = I - E, and the blocks of
/// T_E = E T E, M = E T F and T_F = F T F. k = 1: E = Q1. k = 3: E = Q'3.
struct Frame {
    int k = 1;
    Index e = 0, f = 0;
    BlockMask e_mask = 0, m_mask = 0, f_mask = 0;
    std::vector<Index> te, m, tf;
    std::vector<Index> te_center, tf_center;
    CentralLift lift_e, lift_f;

    static Frame make(const Context& c, int k);
    /// The Q_k corner lift: lift_e for k = 1, lift_f for k = 3.
    const CentralLift& lift_qk() const { return k == 1 ? lift_e : lift_f; }
};

/// k = 1: d(x) = [phi(Q'1), x]. k = 3: d(x) = [x, phi(Q'3)]. phi1 = phi - d,
/// and the corner identity is verified (TheoremInvariantViolation if not).
std::pair<EndoMap, EndoMap> reduce_inner(const Context& c, const EndoMap& phi, int k, PipelineTrace* trace = nullptr);

/// Exhaustive checks of every corner, centrality, product and additivity
/// identity phi1 must satisfy. When throw_on_fail, a failure raises
/// PipelineFailure after all checks have run.
std::vector<TraceStep> lemma_invariant_report(const Context& c, const EndoMap& phi1, int k,
                                              bool throw_on_fail = true);

/// gamma1(x) = lift_E(E phi1(FxF) E) + lift_F(F phi1(ExE) F).
EndoMap build_gamma1(const Context& c, const EndoMap& phi1, int k, PipelineTrace* trace = nullptr);

/// delta1(x) = delta0(ExE) + delta0(ExF) + delta0(FxF), xi1 = delta0 - delta1.
std::pair<EndoMap, EndoMap> build_delta1(const Context& c, const EndoMap& delta0, int k,
                                         PipelineTrace* trace = nullptr);

/// gamma2(x) = lift(Q_k xi1(x) Q_k), xi2 = xi1 - gamma2.
std::pair<EndoMap, EndoMap> build_gamma2(const Context& c, const EndoMap& xi1, int k,
                                         PipelineTrace* trace = nullptr);

/// phi = delta + gamma + xi with xi ranging in S1 (k = 1) or S3 (k = 3).
/// Throws NotMLD, StandardAssumptionViolated, PipelineFailure.
DecompositionResult decompose_theorem31(const Context& c, const EndoMap& phi, int k);

/// phi = delta + gamma with xi absorbed into delta as an inner derivation.
DecompositionResult decompose_theorem22(const Context& c, const EndoMap& phi);

DecompositionResult decompose(const Context& c, const EndoMap& phi, Mode mode);

/// Reconstruction, derivation and central-vanishing checks combined.
MapVerdict verify_standard_form(const Context& c, const EndoMap& phi, const EndoMap& delta, const EndoMap& gamma);

} // namespace tri3
