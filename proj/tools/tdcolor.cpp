// Copyright 2026 The tdcolor authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tdc/choosability.hpp"
#include "tdc/coloring.hpp"
#include "tdc/discharging.hpp"
#include "tdc/errors.hpp"
#include "tdc/gadgets.hpp"
#include "tdc/generators.hpp"
#include "tdc/graph.hpp"
#include "tdc/mad.hpp"
#include "tdc/rational.hpp"
#include "tdc/reduction.hpp"
#include "tdc/rng.hpp"

namespace {

constexpr int kExitOk = 0;        // verified success
constexpr int kExitNegative = 1;  // verified negative (UNSAT, NONE, ...)
constexpr int kExitError = 2;     // usage or internal error

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// "cycle 5", "petersen", "fig4-girth4 4", "random-sparse 60 10 1", ...
tdc::Graph build_from_spec(const std::string& spec) {
    auto parts = split_ws(spec);
    if (parts.empty()) throw tdc::PreconditionError("empty generator spec");
    const std::string& name = parts[0];
    auto arg = [&](std::size_t i) -> long {
        if (i >= parts.size()) {
            throw tdc::PreconditionError("generator " + name + " is missing an argument");
        }
        return std::stol(parts[i]);
    };
    if (name == "cycle") return tdc::cycle(static_cast<int>(arg(1)));
    if (name == "petersen") return tdc::petersen();
    if (name == "hoffman-singleton") return tdc::hoffman_singleton();
    if (name == "fig4-girth4") return tdc::fig4_girth4(static_cast<int>(arg(1)));
    if (name == "fig4-girth5") return tdc::fig4_girth5();
    if (name == "wegner-g3") return tdc::wegner_g3(static_cast<int>(arg(1)));
    if (name == "wegner-g4") return tdc::wegner_g4(static_cast<int>(arg(1)));
    if (name == "random-sparse") {
        return tdc::random_sparse(static_cast<int>(arg(1)), static_cast<int>(arg(2)),
                                  static_cast<std::uint64_t>(arg(3)));
    }
    throw tdc::PreconditionError("unknown generator: " + name);
}

struct InputOptions {
    std::string path;
    std::string gen_spec;

    tdc::Graph load() const {
        if (!gen_spec.empty()) return build_from_spec(gen_spec);
        if (path.empty()) throw tdc::PreconditionError("no input graph (path or --gen)");
        return tdc::load_graph_file(path);
    }
    std::string describe() const { return gen_spec.empty() ? path : ("gen:" + gen_spec); }
};

void add_input(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("input", in.path, "edge-list file");
    cmd->add_option("--gen", in.gen_spec, "generator spec, e.g. \"cycle 5\"");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw tdc::Error("cannot write " + out_path);
        out << text;
    }
}

std::string girth_str(const tdc::Graph& g) {
    auto gi = tdc::girth(g);
    return gi ? std::to_string(*gi) : "inf";
}

void header(std::ostream& os, const std::string& cmd, const std::string& input,
            std::uint64_t seed) {
    os << "# tdcolor " << cmd;
    if (!input.empty()) os << " " << input;
    os << "\n# seed: " << seed << "\n";
}

// ---- subcommand bodies -----------------------------------------------------

int run_stats(const InputOptions& in) {
    tdc::Graph g = in.load();
    header(std::cout, "stats", in.describe(), 0);
    auto eq1 = tdc::check_equation_1(g);
    std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count()
              << " delta=" << g.max_degree() << " girth=" << girth_str(g)
              << " mad=" << tdc::mad_exact(g).str() << " eq1=" << eq1.sum.str() << "\n";
    std::cout << "RESULT: OK\n";
    return kExitOk;
}

int run_square(const InputOptions& in, const std::string& out_path) {
    tdc::Graph g = in.load();
    emit(tdc::to_edge_list(tdc::square(g)), out_path);
    return kExitOk;
}

int run_color2(const InputOptions& in, bool exact, int budget, const std::string& lists_path,
               bool girth9, const std::string& out_path) {
    tdc::Graph g = in.load();
    std::ostringstream rep;
    header(rep, "color2", in.describe(), 0);
    if (exact) {
        if (budget > 0) {
            auto c = tdc::chromatic_exact(tdc::square(g), budget);
            if (!c) {
                rep << "RESULT: UNSAT budget=" << budget << "\n";
                emit(rep.str(), out_path);
                return kExitNegative;
            }
            rep << tdc::coloring_to_text(*c);
            rep << "RESULT: SAT budget=" << budget << "\n";
            emit(rep.str(), out_path);
            return kExitOk;
        }
        auto r = tdc::two_distance_chromatic(g);
        rep << "chi2=" << r.value << "\n";
        rep << tdc::coloring_to_text(r.witness);
        rep << "RESULT: CHI2=" << r.value << "\n";
        emit(rep.str(), out_path);
        return kExitOk;
    }
    tdc::ListAssignment L;
    if (lists_path.empty()) {
        L = tdc::ListAssignment::uniform(g.vertex_count(), 6);
    } else {
        std::ifstream f(lists_path);
        if (!f) throw tdc::Error("cannot open " + lists_path);
        std::ostringstream ss;
        ss << f.rdbuf();
        L = tdc::lists_from_text(ss.str(), g.vertex_count());
    }
    tdc::ConstructiveOptions opts;
    opts.accept_girth_9 = girth9;
    auto res = tdc::color_constructive(g, L, opts);
    rep << "# reduction trace (lemma anchor order)\n";
    for (const auto& step : res.trace) {
        rep << "reduce " << tdc::to_string(step.lemma) << " anchor=" << step.anchor
            << " n=" << step.order << "\n";
    }
    rep << tdc::coloring_to_text(res.coloring);
    rep << "RESULT: COLORED\n";
    emit(rep.str(), out_path);
    return kExitOk;
}

int run_choosable(const InputOptions& in, const std::string& sizes_csv, int uniform_k,
                  const std::string& mode, std::uint64_t trials, std::uint64_t seed) {
    tdc::Graph g = in.load();
    tdc::SizeProfile profile;
    if (!sizes_csv.empty()) {
        std::istringstream ss(sizes_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) profile.sizes.push_back(std::stoi(tok));
    } else if (uniform_k > 0) {
        profile.sizes.assign(g.vertex_count(), uniform_k);
    } else {
        throw tdc::PreconditionError("choosable needs --sizes or --uniform");
    }
    header(std::cout, "choosable", in.describe(), seed);
    tdc::ChoosableReport rep;
    if (mode == "exhaustive") {
        rep = tdc::check_choosable_exhaustive(g, profile);
    } else if (mode == "randomized") {
        rep = tdc::check_choosable_randomized(g, profile, trials, seed);
    } else {
        throw tdc::PreconditionError("mode must be exhaustive or randomized");
    }
    std::cout << "mode=" << rep.mode << " checked=" << rep.assignments_checked;
    if (rep.mode == "randomized") std::cout << " seed=" << rep.seed;
    std::cout << "\n";
    if (rep.counterexample) {
        std::cout << "counterexample:\n" << tdc::lists_to_text(*rep.counterexample);
        std::cout << "RESULT: NOT-CHOOSABLE\n";
        return kExitNegative;
    }
    std::cout << (rep.mode == "exhaustive" ? "RESULT: CHOOSABLE\n"
                                           : "RESULT: NO-FAILURE-FOUND\n");
    return kExitOk;
}

int run_gadget(const std::string& action, const std::string& id_str, const std::string& mode,
               std::uint64_t trials, std::uint64_t seed) {
    tdc::GadgetId id = tdc::gadget_id_from_string(id_str);
    const tdc::Gadget& gad = tdc::gadget(id);
    if (action == "show") {
        std::cout << tdc::to_edge_list(gad.graph);
        std::cout << "profile:\n";
        for (int v = 0; v < gad.size(); ++v) {
            std::cout << gad.labels[v] << " " << gad.profile.sizes[v] << "\n";
        }
        std::cout << "RESULT: OK\n";
        return kExitOk;
    }
    if (action == "verify") {
        header(std::cout, "gadget verify", id_str, seed);
        bool exhaustive;
        if (mode == "exhaustive") {
            exhaustive = true;
        } else if (mode == "randomized") {
            exhaustive = false;
        } else {  // auto: exhaust when the enumeration bound is affordable
            exhaustive =
                tdc::choosability_enumeration_bound(gad.profile) <= tdc::kDefaultChoosableBudget;
        }
        auto rep = tdc::verify_gadget(id, exhaustive, exhaustive ? 0 : trials, seed);
        std::cout << "mode=" << rep.mode << " checked=" << rep.assignments_checked;
        if (rep.mode == "randomized") std::cout << " seed=" << rep.seed;
        std::cout << "\n";
        if (rep.counterexample) {
            std::cout << "counterexample:\n" << tdc::lists_to_text(*rep.counterexample);
            std::cout << "RESULT: NOT-CHOOSABLE\n";
            return kExitNegative;
        }
        std::cout << (exhaustive ? "RESULT: CHOOSABLE\n" : "RESULT: NO-FAILURE-FOUND\n");
        return kExitOk;
    }
    if (action == "fuzz") {
        header(std::cout, "gadget fuzz", id_str, seed);
        auto rep = tdc::cross_check_procedure(id, trials, seed);
        std::cout << rep.text();
        return rep.ok ? kExitOk : kExitNegative;
    }
    throw tdc::PreconditionError("gadget action must be show, verify or fuzz");
}

int run_detect(const InputOptions& in) {
    tdc::Graph g = in.load();
    header(std::cout, "detect", in.describe(), 0);
    auto m = tdc::find_configuration(g);
    if (!m) {
        std::cout << "RESULT: MATCH=NONE\n";
        return kExitNegative;
    }
    std::cout << "lemma=" << tdc::to_string(m->lemma) << " anchor=" << m->anchor << "\n";
    std::cout << "mapping:";
    for (const auto& [label, v] : m->note_map) std::cout << ' ' << label << "=" << v;
    std::cout << "\nremoval:";
    for (int v : m->removal) std::cout << ' ' << v;
    std::cout << "\nuncolor:";
    for (int v : m->uncolor) std::cout << ' ' << v;
    std::cout << "\n";
    if (m->gadget) std::cout << "extension: gadget " << tdc::to_string(*m->gadget) << "\n";
    std::cout << "RESULT: MATCH=" << tdc::to_string(m->lemma) << "\n";
    return kExitOk;
}

int run_discharge(const InputOptions& in) {
    tdc::Graph g = in.load();
    header(std::cout, "discharge", in.describe(), 0);
    auto ledger = tdc::run_discharging(g);
    for (const auto& t : ledger.transfers) {
        std::cout << t.from << " -> " << t.to << " : " << t.amount.str() << " : " << t.rule
                  << "\n";
    }
    auto cert = tdc::certify_nonnegative(g, ledger);
    for (const auto& row : cert.rows) {
        std::cout << row.v << " : " << row.mu.str() << " : " << row.mu_star.str() << " : "
                  << row.case_id;
        if (!row.note.empty()) std::cout << " (" << row.note << ")";
        std::cout << "\n";
    }
    tdc::Rational initial_total;
    for (const auto& r : ledger.initial) initial_total += r;
    bool conserved = ledger.total() == initial_total &&
                     initial_total == tdc::check_equation_1(g).sum;
    std::cout << "RESULT: CONSERVED=" << (conserved ? "true" : "false")
              << " NONNEG=" << (cert.all_nonnegative ? "true" : "false") << "\n";
    return conserved && cert.all_nonnegative ? kExitOk : kExitNegative;
}

int run_gen(const std::string& spec, const std::string& out_path) {
    tdc::Graph g = build_from_spec(spec);
    emit(tdc::to_edge_list(g), out_path);
    if (split_ws(spec)[0] == "fig4-girth5") {
        for (const auto& line : tdc::fig4_girth5_checklist()) std::cerr << line << "\n";
    }
    return kExitOk;
}

int run_corpus(int count, int n, int girth, std::uint64_t seed) {
    header(std::cout, "corpus", "", seed);
    std::cout << "count=" << count << " n=" << n << " girth=" << girth << "\n";
    int detected = 0, conserved = 0, colored = 0;
    int contradiction_state = 0;
    tdc::Rng lists_rng(seed ^ 0x5eedULL);
    for (int i = 0; i < count; ++i) {
        tdc::Graph g = tdc::random_sparse(n, girth, seed + static_cast<std::uint64_t>(i));

        bool det = tdc::find_configuration(g).has_value();
        detected += det;

        auto ledger = tdc::run_discharging(g);
        tdc::Rational total;
        for (const auto& r : ledger.initial) total += r;
        auto eq1 = tdc::check_equation_1(g);
        bool cons = ledger.total() == total && total == eq1.sum;
        conserved += cons;

        auto cert = tdc::certify_nonnegative(g, ledger);
        if (!det && cert.all_nonnegative && eq1.sum < tdc::Rational(0)) ++contradiction_state;

        tdc::ConstructiveOptions opts;
        opts.accept_girth_9 = girth <= 9;
        // One uniform run and one adversarial-random run per instance.
        auto uniform = tdc::color_constructive(g, tdc::ListAssignment::uniform(g.vertex_count(), 6),
                                               opts);
        tdc::ListAssignment random_lists;
        random_lists.lists.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            random_lists.lists[v] = lists_rng.sample_subset(12, 6);
        }
        auto adversarial = tdc::color_constructive(g, random_lists, opts);
        bool ok_color = !tdc::verify_coloring(g, uniform.coloring, 2) &&
                        !tdc::verify_coloring(g, adversarial.coloring, 2);
        colored += ok_color;
    }
    std::cout << "detect=" << detected << "/" << count << " conserved=" << conserved << "/"
              << count << " colored=" << colored << "/" << count << "\n";
    std::cout << "contradiction-state=" << contradiction_state << "/" << count << "\n";
    bool ok = detected == count && conserved == count && colored == count &&
              contradiction_state == 0;
    std::cout << "RESULT: " << (ok ? "OK" : "FAIL") << "\n";
    return ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-distance list coloring toolkit"};
    app.require_subcommand(1);

    InputOptions in_stats, in_square, in_color2, in_choosable, in_detect, in_discharge;
    std::string out_square, out_color2, out_gen;
    bool exact = false, girth9 = false;
    int budget = 0;
    std::string lists_path;
    std::string sizes_csv;
    int uniform_k = 0;
    std::string mode_choosable = "exhaustive";
    std::string gadget_action, gadget_id, gadget_mode = "auto";
    std::uint64_t seed = 0, trials = 10000;
    int corpus_count = 10, corpus_n = 60, corpus_girth = 10;

    auto* stats = app.add_subcommand("stats", "n, m, max degree, girth, mad, charge sum");
    add_input(stats, in_stats);

    auto* square_cmd = app.add_subcommand("square", "emit the square of the graph");
    add_input(square_cmd, in_square);
    square_cmd->add_option("--out", out_square, "output path");

    auto* color2 = app.add_subcommand("color2", "2-distance coloring (constructive or exact)");
    add_input(color2, in_color2);
    color2->add_flag("--exact", exact, "exact chi^2 via the branch-and-bound solver");
    color2->add_option("--budget", budget, "decide <= budget colors instead of optimizing");
    color2->add_option("--lists", lists_path, "list assignment file (v: c1,c2,...)");
    color2->add_flag("--girth-9-ok", girth9, "accept girth 9 inputs");
    color2->add_option("--out", out_color2, "output path");

    auto* choosable = app.add_subcommand("choosable", "choosability verification");
    add_input(choosable, in_choosable);
    choosable->add_option("--sizes", sizes_csv, "per-vertex list sizes, comma separated");
    choosable->add_option("--uniform", uniform_k, "uniform list size");
    choosable->add_option("--mode", mode_choosable, "exhaustive or randomized");
    choosable->add_option("--trials", trials, "randomized trials");
    choosable->add_option("--seed", seed, "random seed");

    auto* gadget_cmd = app.add_subcommand("gadget", "show / verify / fuzz a coloring gadget");
    gadget_cmd->add_option("action", gadget_action, "show | verify | fuzz")->required();
    gadget_cmd->add_option("id", gadget_id, "gadget id a..j")->required();
    gadget_cmd->add_option("--mode", gadget_mode, "auto | exhaustive | randomized");
    gadget_cmd->add_option("--trials", trials, "trials for randomized / fuzz");
    gadget_cmd->add_option("--seed", seed, "random seed");

    auto* detect = app.add_subcommand("detect", "find a reducible configuration");
    add_input(detect, in_detect);

    auto* discharge = app.add_subcommand("discharge", "charge ledger and certificate");
    add_input(discharge, in_discharge);

    std::vector<std::string> gen_args;
    auto* gen = app.add_subcommand("gen", "emit a named graph");
    gen->add_option("spec", gen_args, "e.g. cycle 5, random-sparse 60 10 1")->required();
    gen->add_option("--out", out_gen, "output path");

    auto* corpus = app.add_subcommand("corpus", "generate + detect + discharge + color");
    corpus->add_option("--count", corpus_count, "number of instances");
    corpus->add_option("--n", corpus_n, "vertices per instance");
    corpus->add_option("--girth", corpus_girth, "target girth (9 or 10)");
    corpus->add_option("--seed", seed, "base seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (stats->parsed()) return run_stats(in_stats);
        if (square_cmd->parsed()) return run_square(in_square, out_square);
        if (color2->parsed()) {
            return run_color2(in_color2, exact || budget > 0, budget, lists_path, girth9,
                              out_color2);
        }
        if (choosable->parsed()) {
            return run_choosable(in_choosable, sizes_csv, uniform_k, mode_choosable, trials,
                                 seed);
        }
        if (gadget_cmd->parsed()) {
            return run_gadget(gadget_action, gadget_id, gadget_mode, trials, seed);
        }
        if (detect->parsed()) return run_detect(in_detect);
        if (discharge->parsed()) return run_discharge(in_discharge);
        if (gen->parsed()) {
            std::string full;
            for (const auto& w : gen_args) {
                if (!full.empty()) full += " ";
                full += w;
            }
            return run_gen(full, out_gen);
        }
        if (corpus->parsed()) return run_corpus(corpus_count, corpus_n, corpus_girth, seed);
    } catch (const tdc::TheoremFalsified& e) {
        std::cerr << "error: " << e.what() << "\n" << e.graph;
        return kExitError;
    } catch (const tdc::ProcedureFailure& e) {
        std::cerr << "error: " << e.what() << "\n" << e.trace;
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
