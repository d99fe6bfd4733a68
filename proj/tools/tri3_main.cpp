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


#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <tri3/config.hpp>
#include <tri3/decomposition.hpp>
#include <tri3/digest.hpp>
#include <tri3/error.hpp>
#include <tri3/example21.hpp>
#include <tri3/generators.hpp>
#include <tri3/report.hpp>

namespace fs = std::filesystem;
using namespace tri3;

namespace {

constexpr int kPass = 0, kNegative = 1, kInputFailure = 2;

struct Options {
    std::string command;
    std::string config, map_file, out, out_dir = ".", mode = "t22", non_mld, report;
    std::uint64_t seed = 0;
    std::optional<Index> inner;
    bool no_inner = false, central = true, explicit_tables = false, serial = false;
    std::uint32_t modulus = 2;
};

Exec exec_of(const Options& o) {
    return o.serial ? Exec::Serial : Exec::Parallel;
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const InputError*>(&e) || dynamic_cast<const SizeLimitExceeded*>(&e) ||
        dynamic_cast<const HashMismatch*>(&e) || dynamic_cast<const RingMismatch*>(&e) ||
        dynamic_cast<const ModuleMismatch*>(&e))
        return kInputFailure;
    return kNegative;
}

void emit(const Options& o, const Config* cfg, const Report& r) {
    std::cout << render_report(r);
    std::string path = o.report;
    if (path.empty() && cfg && cfg->report_path) path = *cfg->report_path;
    if (!path.empty()) write_report(path, r);
}

int finish(const Options& o, const Config* cfg, Report& r, bool pass) {
    set_verdict(r, pass);
    emit(o, cfg, r);
    return pass ? kPass : kNegative;
}

Report center_set_json(const TriRing3& t, const std::vector<Index>& members) {
    Report m = Report::array(), d = Report::array();
    for (auto x : members) {
        m.push_back(x);
        d.push_back(t.describe(x));
    }
    return {{"size", members.size()}, {"members", m}, {"described", d}};
}

int cmd_validate(const Options& o) {
    const auto cfg = load_config(o.config);
    const auto t = build_ring(cfg);
    auto r = report_header("validate", *t);
    r["config_digest"] = to_hex(cfg.digest);
    r["ring"] = ring_summary_json(*t);
    t->require_scannable("validate");
    const auto center = center_of_T(*t, exec_of(o));
    Report checks = Report::array();
    bool pass = t->all_faithful();
    for (const auto& v : {check_peirce(*t), check_module_closure(*t), check_lie_closure(*t, center, exec_of(o))}) {
        checks.push_back(verdict_json(v));
        pass = pass && v.holds;
    }
    r["checks"] = checks;
    r["center_size"] = center.size();
    return finish(o, &cfg, r, pass);
}

int cmd_center(const Options& o) {
    const auto cfg = load_config(o.config);
    const auto t = build_ring(cfg);
    t->require_scannable("center");
    const auto facts = RingFacts::compute(*t, exec_of(o));
    auto r = report_header("center", *t);
    r["config_digest"] = to_hex(cfg.digest);
    r["center"] = center_set_json(*t, facts.center.members);
    r["commutator_count"] = facts.commutators.size();
    Report corners = Report::object();
    const std::pair<const char*, BlockMask> masks[] = {
        {"T1", diagonal_corner_mask(1, false)},  {"T2", diagonal_corner_mask(2, false)},
        {"T3", diagonal_corner_mask(3, false)},  {"T'1", diagonal_corner_mask(1, true)},
        {"T'3", diagonal_corner_mask(3, true)},
    };
    for (const auto& [name, mask] : masks) corners[name] = center_set_json(*t, corner_center(*t, mask));
    r["corner_centers"] = corners;
    Report std_a = Report::array(), prime_a = Report::array();
    for (const auto& a : facts.standard) std_a.push_back(assumption_json(a));
    for (const auto& a : facts.prime) prime_a.push_back(assumption_json(a));
    r["standard_assumption"] = std_a;
    r["prime_assumption"] = prime_a;
    Report taus = Report::object();
    for (int k : {1, 3}) {
        const std::string key = "k" + std::to_string(k);
        try {
            const auto tau = compute_tau(*t, facts.center, k);
            Report pairs = Report::array();
            for (const auto& [a, b] : tau.pairs) pairs.push_back({a, b});
            taus[key] = {{"pairs", pairs}};
        } catch (const TheoremInvariantViolation& e) {
            taus[key] = {{"error", e.what()}};
        }
    }
    r["tau"] = taus;
    r["V12"] = annihilator_V(*t, VSet::V12);
    r["V23"] = annihilator_V(*t, VSet::V23);
    bool pass = facts.standard_holds();
    for (const auto& a : facts.prime) pass = pass && a.holds;
    return finish(o, &cfg, r, pass);
}

int cmd_check_map(const Options& o) {
    const auto cfg = load_config(o.config);
    const auto t = build_ring(cfg);
    const auto phi = read_map_file(o.map_file, *t);
    auto r = report_header("check-map", *t);
    r["map_digest"] = to_hex(phi.digest());
    const auto mld = is_mult_lie_derivation(*t, phi, exec_of(o));
    r["multiplicative_lie_derivation"] = verdict_json(mld);
    r["additive"] = verdict_json(is_additive(*t, phi, exec_of(o)));
    r["leibniz"] = verdict_json(is_leibniz(*t, phi, exec_of(o)));
    r["derivation"] = verdict_json(is_derivation(*t, phi, exec_of(o)));
    if (!mld.holds) {
        const auto& w = mld.witnesses.front();
        std::cerr << "not a multiplicative Lie derivation: witness pair (" << w[0] << ", " << w[1] << ")\n";
    }
    return finish(o, &cfg, r, mld.holds);
}

int cmd_decompose(const Options& o) {
    const auto cfg = load_config(o.config);
    const auto t = build_ring(cfg);
    t->require_scannable("decompose");
    const auto mode = parse_mode(o.mode);
    const auto phi = read_map_file(o.map_file, *t);
    const auto facts = RingFacts::compute(*t, exec_of(o));
    const Context ctx{*t, facts, exec_of(o)};

    auto r = report_header("decompose", *t);
    r["mode"] = to_string(mode);
    r["input_digest"] = to_hex(phi.digest());
    const fs::path dir = o.out_dir;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InputError("cannot create " + dir.string() + ": " + ec.message());
    Options ro = o;
    if (ro.report.empty()) ro.report = (dir / "report.json").string();

    DecompositionResult res;
    try {
        res = decompose(ctx, phi, mode);
    } catch (const PipelineFailure& e) {
        r["steps"] = trace_json(e.trace());
        r["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return finish(ro, nullptr, r, false);
    } catch (const Error& e) {
        if (exit_code_for(e) == kInputFailure) throw;
        r["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return finish(ro, nullptr, r, false);
    }
    r["steps"] = trace_json(res.trace);
    Report comps = Report::object();
    for (const auto& [name, map] : {std::pair<const char*, const EndoMap*>{"delta", &res.delta},
                                    {"gamma", &res.gamma},
                                    {"xi", &res.xi}}) {
        const std::string file = std::string(name) + ".json";
        write_map_file(dir / file, *map);
        comps[name] = {{"file", file}, {"digest", to_hex(map->digest())}};
    }
    r["components"] = comps;
    r["xi_zero"] = res.xi == EndoMap::zero(*t);
    const auto sf = verify_standard_form(ctx, phi, map_add(*t, res.delta, res.xi), res.gamma);
    r["standard_form"] = verdict_json(sf);
    return finish(ro, nullptr, r, res.trace.all_pass() && sf.holds);
}

int cmd_gen(const Options& o) {
    const auto cfg = load_config(o.config);
    const auto t = build_ring(cfg);
    t->require_scannable("gen");
    if (o.out.empty()) throw InputError("gen needs -o <map-file>");
    auto r = report_header("gen", *t);
    EndoMap phi;
    if (!o.non_mld.empty()) {
        phi = gen_non_mld(*t, o.non_mld == "any" ? "" : o.non_mld, exec_of(o));
        r["variant"] = o.non_mld;
    } else {
        const auto facts = RingFacts::compute(*t, exec_of(o));
        MldRecipe rec;
        rec.seed = o.seed;
        rec.inner = o.inner;
        rec.use_inner = !o.no_inner;
        rec.use_central = o.central;
        if (rec.inner && *rec.inner >= t->size()) throw InputError("--inner index out of range");
        phi = gen_mld(*t, facts, rec, exec_of(o));
        r["recipe"] = {{"seed", rec.seed},
                       {"inner", rec.inner ? Report(*rec.inner) : Report(nullptr)},
                       {"use_inner", rec.use_inner},
                       {"use_central", rec.use_central}};
    }
    write_map_file(o.out, phi);
    r["file"] = o.out;
    r["digest"] = to_hex(phi.digest());
    return finish(o, &cfg, r, true);
}

int cmd_example21(const Options& o) {
    const auto doc = preset_config_json("example21", o.modulus, o.explicit_tables);
    const std::string text = o.explicit_tables ? doc.dump() + "\n" : doc.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
        return kPass;
    }
    std::ofstream out(o.out, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write " + o.out);
    return kPass;
}

int cmd_not_triangular(const Options& o) {
    const auto cfg = load_config(o.config);
    const auto t = build_ring(cfg);
    auto r = report_header("not-triangular", *t);
    const auto nt = check_not_triangular_example21(*t);
    r["report"] = not_triangular_json(nt);
    return finish(o, &cfg, r, nt.not_triangular);
}

int run(const Options& o) {
    if (o.command == "validate") return cmd_validate(o);
    if (o.command == "center") return cmd_center(o);
    if (o.command == "check-map") return cmd_check_map(o);
    if (o.command == "decompose") return cmd_decompose(o);
    if (o.command == "gen") return cmd_gen(o);
    if (o.command == "example21") return cmd_example21(o);
    if (o.command == "not-triangular") return cmd_not_triangular(o);
    throw InputError("unknown command " + o.command);
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Finite triangular 3-matrix rings and multiplicative Lie derivations"};
    app.require_subcommand(1);
    app.add_flag("--serial", o.serial, "Use the serial reference kernels");
    app.add_option("--report", o.report, "Also write the report to this path");

    auto* validate = app.add_subcommand("validate", "Build a ring and run every axiom and faithfulness check");
    validate->add_option("config", o.config)->required();
    auto* center = app.add_subcommand("center", "Center, corner centers, standard assumptions, tau, V sets");
    center->add_option("config", o.config)->required();
    auto* check = app.add_subcommand("check-map", "MLD, additivity and derivation verdicts for a map file");
    check->add_option("config", o.config)->required();
    check->add_option("map", o.map_file)->required();
    auto* dec = app.add_subcommand("decompose", "Decompose a map and write delta, gamma, xi and the trace");
    dec->add_option("config", o.config)->required();
    dec->add_option("map", o.map_file)->required();
    dec->add_option("--mode", o.mode, "t31k1, t31k3 or t22")->check(CLI::IsMember({"t31k1", "t31k3", "t22"}));
    dec->add_option("--out-dir", o.out_dir, "Directory for component maps and report.json");
    auto* gen = app.add_subcommand("gen", "Generate a seeded MLD (or a non-MLD control)");
    gen->add_option("config", o.config)->required();
    gen->add_option("--seed", o.seed);
    gen->add_option("--inner", o.inner, "Element index for the inner derivation");
    gen->add_flag("--no-inner", o.no_inner, "Leave out the inner derivation");
    gen->add_flag("--central,!--no-central", o.central, "Include the central map (default on)");
    gen->add_option("--non-mld", o.non_mld, "squaring, constant_I, identity or any");
    gen->add_option("-o,--output", o.out)->required();
    auto* ex = app.add_subcommand("example21", "Write the 6x6 block preset config");
    ex->add_option("--modulus", o.modulus);
    ex->add_option("-o,--output", o.out);
    ex->add_flag("--explicit", o.explicit_tables, "Write explicit operation tables");
    auto* nt = app.add_subcommand("not-triangular", "Partition and faithfulness report for the 6x6 preset");
    nt->add_option("config", o.config)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kInputFailure;
    }
    o.command = app.get_subcommands().front()->get_name();

    try {
        return run(o);
    } catch (const Error& e) {
        const int code = exit_code_for(e);
        auto r = report_header(o.command);
        r["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        set_verdict(r, false);
        std::cout << render_report(r);
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputFailure;
    }
}
