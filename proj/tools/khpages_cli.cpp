// khpages command-line front end. Subcommands: kh, pages, psi, det, jones,
// vk, check. Exit codes: 0 success, 1 domain error, 2 usage/parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "khpages/errors.hpp"
#include "khpages/goeritz.hpp"
#include "khpages/khovanov.hpp"
#include "khpages/pages.hpp"
#include "khpages/pagesolver.hpp"
#include "khpages/serialize.hpp"
#include "khpages/transverse.hpp"

namespace {

using namespace khpages;

struct InputOptions {
    std::string inline_text;
    std::string file_path;
    int marked_edge = -1;

    std::string text() const {
        if (!file_path.empty()) {
            std::ifstream in(file_path);
            if (!in) throw ParseError("cannot read input file '" + file_path + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
        return inline_text;
    }
};

void add_input_options(CLI::App* cmd, InputOptions& input) {
    auto* positional = cmd->add_option("input", input.inline_text, "inline braid word or PD JSON");
    auto* file = cmd->add_option("-f,--file", input.file_path, "read the input from a file");
    positional->excludes(file);
    cmd->add_option("--marked-edge", input.marked_edge, "override the marked (reduction) edge");
    cmd->callback([cmd, positional, file]() {
        if (positional->count() == 0 && file->count() == 0)
            throw CLI::RequiredError(cmd->get_name() + ": an inline input or --file");
    });
}

PlanarDiagram diagram_from(const InputOptions& input) {
    PlanarDiagram d = parse_diagram(input.text());
    if (input.marked_edge >= 0) {
        if (input.marked_edge >= d.edge_count) throw DomainError("marked edge out of range");
        d.marked_edge = input.marked_edge;
        d.validate();
    }
    return d;
}

bool looks_like_braid(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    return first == std::string::npos || text[first] != '{';
}

int threads_option(int cli_threads) {
    if (cli_threads > 0) return cli_threads;
    if (const char* env = std::getenv("KHPAGES_THREADS")) {
        intن = std::atoi(env);
        if (ن > 0) return ن;
    }
    return 1;
}

struct PagesFlags {
    bool assume_delta_shift = false;
    std::optional<int> einf_rank;
    bool lspace = false;
    bool no_einf_target = false;
    std::vector<std::string> survivors;
    int max_page = 8;
};

struct PagesOutcome {
    PagesRunInfo info;
    SolverResult result;
    BigradedRanks e2;
};

PagesOutcome run_pages(const InputOptions& input, const PagesFlags& flags, int threads) {
    if (!flags.assume_delta_shift)
        throw CLI::ValidationError("pages", "--assume-delta-shift must be acknowledged");
    int einf_modes = (flags.einf_rank ? 1 : 0) + (flags.lspace ? 1 : 0) + (flags.no_einf_target ? 1 : 0);
    if (einf_modes != 1)
        throw CLI::ValidationError(
            "pages", "exactly one of --einf-rank N, --lspace, --no-einf-target is required");

    const std::string text = input.text();
    PlanarDiagram d = diagram_from(input);
    BigradedRanks e2 = kh_homology(d, threads);

    SolverConstraints constraints;
    constraints.assume_delta_shift = true;
    constraints.max_page = flags.max_page;
    PagesRunInfo info;
    info.delta_shift = true;
    if (flags.einf_rank) {
        constraints.e_infinity_rank = *flags.einf_rank;
        info.einf_source = "user";
    } else if (flags.lspace) {
        constraints.e_infinity_rank = static_cast<int>(determinant(d));
        info.einf_source = "lspace";
    } else {
        info.einf_source = "none";
    }
    info.einf_rank = constraints.e_infinity_rank;

    for (const std::string& s : flags.survivors) {
        size_t comma = s.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("pages", "--survivor expects h,q");
        try {
            constraints.survivors.emplace_back(std::stoi(s.substr(0, comma)),
                                               std::stoi(s.substr(comma + 1)));
        } catch (const std::exception&) {
            throw CLI::ValidationError("pages", "--survivor expects h,q");
        }
    }

    // Degree-forced survivor: for a braid closure whose psi class is nonzero
    // and whose E^2 table has no support below h = 0, the class persists on
    // every page (it is a cycle and nothing can hit it), so its bigrading is
    // a sound survivor constraint.
    if (looks_like_braid(text)) {
        BraidWord braid = parse_braid(text);
        bool min_h_nonneg = true;
        for (auto [hq, r] : e2)
            if (r > 0 && hq.first < 0) min_h_nonneg = false;
        if (min_h_nonneg) {
            PsiClass cls = psi_class(braid);
            if (cls.nonzero) {
                std::pair<int, int> bigrading{cls.h, cls.q};
                bool already = false;
                for (auto s : constraints.survivors) already = already || s == bigrading;
                if (!already) constraints.survivors.push_back(bigrading);
            }
        }
    }
    info.survivors = constraints.survivors;

    PagesOutcome outcome;
    outcome.info = info;
    outcome.result = solve_pages(e2, constraints);
    outcome.e2 = e2;
    return outcome;
}

std::string pages_text_report(const PagesOutcome& outcome) {
    std::ostringstream out;
    out << "assumptions: delta-shift (k,2k-2) acknowledged; E-infinity rank ";
    if (outcome.info.einf_rank)
        out << *outcome.info.einf_rank << " (" << outcome.info.einf_source << ")";
    else
        out << "unconstrained";
    out << "\n";
    if (!outcome.info.survivors.empty()) {
        out << "survivors:";
        for (auto [h, q] : outcome.info.survivors) out << " (" << h << "," << q << ")";
        out << "\n";
    }
    switch (outcome.result.status) {
        case SolverStatus::Unique: {
            out << "status: unique\n";
            const PageSequence& seq = outcome.result.sequences.front();
            for (size_t i = 0; i < seq.pages.size(); ++i) {
                int k = static_cast<int>(i) + 2;
                out << "E^" << k;
                if (k == seq.stable_page) out << " = E^inf";
                out << ": " << poincare_polynomial(seq.pages[i]) << "\n";
            }
            for (size_t i = 0; i < seq.pages.size(); ++i) {
                out << "V^" << static_cast<int>(i) + 2 << ": "
                    << vk_polynomial(seq.pages[i]).to_string_half_exponents() << "\n";
            }
            break;
        }
        case SolverStatus::Ambiguous:
            out << "status: ambiguous (" << outcome.result.sequence_count
                << " page sequences from " << outcome.result.pattern_count << " patterns)\n";
            for (const PageSequence& seq : outcome.result.sequences) {
                out << "-";
                for (size_t i = 0; i < seq.pages.size(); ++i)
                    out << " E^" << static_cast<int>(i) + 2 << ": "
                        << poincare_polynomial(seq.pages[i]) << ";";
                out << "\n";
            }
            break;
        case SolverStatus::Infeasible:
            out << "status: infeasible (no pattern survives past page " << outcome.result.deepest_page
                << ")\n";
            break;
    }
    return out.str();
}

int run_check(std::ostream& out) {
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
        all_ok = all_ok && ok;
    };

    // Reidemeister pairs: stabilization, R2 insertion, R3 word substitution.
    {
        std::mt19937 rng(2026);
        int checked = 0;
        bool ok = true;
        for (int trial = 0; trial < 12 && ok; ++trial) {
            int strands = 2 + static_cast<int>(rng() % 2);
            BraidWord base;
            base.strands = strands;
            int len = 2 + static_cast<int>(rng() % 3);
            for (int i = 0; i < len; ++i) {
                int letter = 1 + static_cast<int>(rng() % (strands - 1));
                base.letters.push_back(rng() % 2 ? letter : -letter);
            }
            BigradedRanks reference = kh_homology(braid_to_diagram(base));
            BraidWord moved;
            switch (trial % 3) {
                case 0: moved = base.stabilized(rng() % 2 ? +1 : -1); break;
                case 1: {
                    int g = 1 + static_cast<int>(rng() % (strands - 1));
                    moved = base.with_insertion(rng() % (base.letters.size() + 1), {g, -g});
                    break;
                }
                default: {
                    BraidWord widened = base;
                    widened.strands = std::max(strands, 3);
                    moved = widened.with_insertion(rng() % (widened.letters.size() + 1),
                                                   {1, 2, 1, -2, -1, -2});
                    break;
                }
            }
            ok = kh_homology(braid_to_diagram(moved)) == reference;
            ++checked;
        }
        report("reidemeister", ok, std::to_string(checked) + " diagram pairs");
    }

    // Connected sum against the rank-table tensor product.
    {
        BraidWord trefoil = parse_braid("s=2; w=1,1,1");
        PlanarDiagram d = braid_to_diagram(trefoil);
        BigradedRanks single = kh_homology(d);
        BigradedRanks granny = kh_homology(connected_sum(d, d));
        bool ok = granny == tensor_pages(single, single);
        report("connected-sum", ok, "trefoil # trefoil = tensor square");
    }

    // Determinant dual method.
    {
        const char* corpus[] = {
            "s=2; w=1,1,1", "s=2; w=-1,-1,-1", "s=2; w=1,1,1,1,1", "s=3; w=1,-2,1,-2",
            "s=3; w=1,2,1,2,1,2,1,2", "s=2; w=1,1",
        };
        bool ok = true;
        for (const char* text : corpus) {
            PlanarDiagram d = braid_to_diagram(parse_braid(text));
            if (determinant(d) != jones_determinant_check(d)) ok = false;
        }
        report("determinant-dual", ok, "Goeritz vs Jones evaluation");
    }

    // Page engine vs the subquotient oracle on random filtered complexes.
    {
        std::mt19937 rng(7);
        bool ok = true;
        for (int trial = 0; trial < 25 && ok; ++trial) {
            int n = 4 + static_cast<int>(rng() % 10);
            std::vector<int> f(static_cast<size_t>(n));
            for (int& x : f) x = static_cast<int>(rng() % 5);
            SparseMatrixF2 diff(n, n);
            std::vector<int> unpaired(static_cast<size_t>(n));
            std::iota(unpaired.begin(), unpaired.end(), 0);
            std::shuffle(unpaired.begin(), unpaired.end(), rng);
            while (unpaired.size() >= 2 && rng() % 4) {
                int a = unpaired.back();
                unpaired.pop_back();
                int b = unpaired.back();
                unpaired.pop_back();
                if (f[static_cast<size_t>(a)] > f[static_cast<size_t>(b)]) std::swap(a, b);
                diff.push(a, b);
            }
            diff.normalize();
            GradedComplex c = GradedComplex::from_matrix(f, {}, diff);
            auto pages = compute_pages(c, 6);
            auto oracle = oracle_pages(c, 6);
            for (size_t k = 0; k < pages.size(); ++k) {
                GradedRanks nonzero;
                for (auto [key, r] : pages[k].ranks)
                    if (r) nonzero[key] = r;
                if (nonzero != oracle[k]) ok = false;
            }
        }
        report("page-oracle", ok, "staged cancellation vs subquotient ranks");
    }

    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduced Khovanov homology over F2 and spectral-sequence page tools"};
    app.require_subcommand(1);

    bool json_output = false;
    int threads = 0;
    app.add_flag("--json", json_output, "emit JSON instead of text");
    app.add_option("--threads", threads, "worker threads for cube construction");

    InputOptions kh_input;
    auto* kh_cmd = app.add_subcommand("kh", "reduced Khovanov homology rank table");
    add_input_options(kh_cmd, kh_input);

    InputOptions pages_input;
    PagesFlags pages_flags;
    auto* pages_cmd = app.add_subcommand("pages", "higher page tables by constraint propagation");
    add_input_options(pages_cmd, pages_input);
    pages_cmd->add_flag("--assume-delta-shift", pages_flags.assume_delta_shift,
                        "acknowledge the (k,2k-2) shift rule");
    pages_cmd->add_option("--einf-rank", pages_flags.einf_rank, "total rank of the stable page");
    pages_cmd->add_flag("--lspace", pages_flags.lspace,
                        "use the link determinant as the stable rank (heuristic)");
    pages_cmd->add_flag("--no-einf-target", pages_flags.no_einf_target,
                        "run without a stable-rank constraint");
    pages_cmd->add_option("--survivor", pages_flags.survivors,
                          "bigrading h,q that must persist (repeatable)");
    pages_cmd->add_option("--max-page", pages_flags.max_page, "page report cap (default 8)");

    InputOptions vk_input;
    PagesFlags vk_flags;
    auto* vk_cmd = app.add_subcommand("vk", "V^k polynomials of the computed pages");
    add_input_options(vk_cmd, vk_input);
    vk_cmd->add_flag("--assume-delta-shift", vk_flags.assume_delta_shift,
                     "acknowledge the (k,2k-2) shift rule");
    vk_cmd->add_option("--einf-rank", vk_flags.einf_rank, "total rank of the stable page");
    vk_cmd->add_flag("--lspace", vk_flags.lspace,
                     "use the link determinant as the stable rank (heuristic)");
    vk_cmd->add_flag("--no-einf-target", vk_flags.no_einf_target,
                     "run without a stable-rank constraint");
    vk_cmd->add_option("--survivor", vk_flags.survivors, "bigrading h,q that must persist");
    vk_cmd->add_option("--max-page", vk_flags.max_page, "page report cap (default 8)");

    InputOptions psi_input;
    bool psi_with_pages = false;
    PagesFlags psi_flags;
    auto* psi_cmd = app.add_subcommand("psi", "transverse invariant of a braid closure");
    add_input_options(psi_cmd, psi_input);
    psi_cmd->add_flag("--pages", psi_with_pages, "also run the page solver for page fates");
    psi_cmd->add_flag("--assume-delta-shift", psi_flags.assume_delta_shift,
                      "acknowledge the (k,2k-2) shift rule (with --pages)");
    psi_cmd->add_option("--einf-rank", psi_flags.einf_rank, "stable rank (with --pages)");
    psi_cmd->add_flag("--lspace", psi_flags.lspace, "determinant as stable rank (with --pages)");
    psi_cmd->add_flag("--no-einf-target", psi_flags.no_einf_target,
                      "no stable-rank constraint (with --pages)");

    InputOptions det_input;
    auto* det_cmd = app.add_subcommand("det", "link determinant, both methods");
    add_input_options(det_cmd, det_input);

    InputOptions jones_input;
    auto* jones_cmd = app.add_subcommand("jones", "graded Euler characteristic polynomial");
    add_input_options(jones_cmd, jones_input);

    auto* check_cmd = app.add_subcommand("check", "run the bundled property suites");
    (void)check_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    std::string output;
    try {
        if (kh_cmd->parsed()) {
            BigradedRanks table = kh_homology(diagram_from(kh_input), threads_option(threads));
            output = json_output ? rank_table_json(table) : poincare_polynomial(table) + "\n";
        } else if (pages_cmd->parsed()) {
            PagesOutcome outcome = run_pages(pages_input, pages_flags, threads_option(threads));
            output = json_output ? pages_result_json(outcome.info, outcome.result)
                                 : pages_text_report(outcome);
        } else if (vk_cmd->parsed()) {
            PagesOutcome outcome = run_pages(vk_input, vk_flags, threads_option(threads));
            if (outcome.result.status != SolverStatus::Unique)
                throw DomainError("vk: page solver did not return a unique sequence");
            std::ostringstream out;
            const PageSequence& seq = outcome.result.sequences.front();
            for (size_t i = 0; i < seq.pages.size(); ++i)
                out << "V^" << static_cast<int>(i) + 2 << ": "
                    << vk_polynomial(seq.pages[i]).to_string_half_exponents() << "\n";
            output = out.str();
        } else if (psi_cmd->parsed()) {
            const std::string text = psi_input.text();
            if (!looks_like_braid(text))
                throw DomainError("psi: the transverse invariant is defined for braid input only");
            BraidWord braid = parse_braid(text);
            PsiReport report;
            if (psi_with_pages) {
                PagesOutcome outcome = run_pages(psi_input, psi_flags, threads_option(threads));
                report = fillability_report(braid, &outcome.result);
            } else {
                report = fillability_report(braid, nullptr);
            }
            if (json_output) {
                output = psi_report_json(report);
            } else {
                std::ostringstream out;
                out << "psi bigrading: (" << report.h << "," << report.q << ")\n";
                out << "class at E^2: " << (report.e2_nonzero ? "nonzero" : "zero") << "\n";
                for (const PageFate& fate : report.page_fates) {
                    out << "E^" << fate.page << ": "
                        << (fate.fate == PageFateKind::Nonzero
                                ? "nonzero"
                                : fate.fate == PageFateKind::Zero ? "zero" : "unknown")
                        << "\n";
                }
                out << "fillability obstruction: " << (report.fillability_obstruction ? "yes" : "no")
                    << "\n";
                output = out.str();
            }
        } else if (det_cmd->parsed()) {
            PlanarDiagram d = diagram_from(det_input);
            long long goeritz = determinant(d);
            long long jones = jones_determinant_check(d);
            if (goeritz != jones)
                throw DomainError("determinant methods disagree: goeritz " + std::to_string(goeritz) +
                                  ", jones " + std::to_string(jones));
            output = json_output ? determinant_json(goeritz, goeritz, jones)
                                 : "determinant " + std::to_string(goeritz) + " (goeritz " +
                                       std::to_string(goeritz) + ", jones-eval " + std::to_string(jones) +
                                       ")\n";
        } else if (jones_cmd->parsed()) {
            LaurentPoly chi = graded_euler_characteristic(
                build_reduced_complex(diagram_from(jones_input), threads_option(threads)));
            output = chi.to_string() + "\n";
        } else if (check_cmd->parsed()) {
            std::ostringstream out;
            int status = run_check(out);
            std::cout << out.str();
            return status;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::cout << output;
    return 0;
}
