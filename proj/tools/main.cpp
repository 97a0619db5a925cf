// Command line front end: classification queries and invariant reports for
// presentation files, plus direct odometer and window inspection.
//
// Exit codes: 0 for any computed result (NotHomeomorphic included), 2 for
// input errors.  Nothing else.

#include "presentation.hpp"

#include <matchbox/classify.hpp>
#include <matchbox/pseudogroup.hpp>
#include <matchbox/toral.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace matchbox;
using cli::Presentation;

class CliError : public std::runtime_error {
public:
    explicit CliError(const std::string& what) : std::runtime_error(what) {}
};

Int parse_residue(const std::string& text, const char* flag) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw CliError(std::string(flag) + ": expected a decimal integer, got '" + text + "'");
    }
}

std::string supernatural_finite(const SupernaturalNumber& c) {
    if (c.finite_part.empty()) {
        return "1";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, e] : c.finite_part) {
        if (!first) {
            out << ' ';
        }
        out << p << '^' << e;
        first = false;
    }
    return out.str();
}

std::string supernatural_infinite(const SupernaturalNumber& c) {
    std::ostringstream out;
    bool first = true;
    for (std::int64_t p : c.infinite_primes) {
        if (!first) {
            out << ' ';
        }
        out << p;
        first = false;
    }
    return out.str();
}

void print_verdict(const char* kind, const Verdict& v) {
    std::cout << "kind: " << kind << "\n";
    switch (v.kind) {
        case Verdict::Kind::Homeomorphic:
            std::cout << "verdict: Homeomorphic\n";
            break;
        case Verdict::Kind::NotHomeomorphic:
            std::cout << "verdict: NotHomeomorphic\n";
            break;
        case Verdict::Kind::ConsistentAtDepth:
            std::cout << "verdict: ConsistentAtDepth\ndepth: " << v.depth << "\n";
            break;
        case Verdict::Kind::NotCoveredByTheory:
            std::cout << "verdict: NotCoveredByTheory\nreason: " << v.reason << "\n";
            return;
    }
    std::cout << "theorem: " << v.theorem << "\n";
    if (v.witness_prime) {
        std::cout << "witness_prime: " << *v.witness_prime << "\n";
    }
    std::cout << "certificate: " << v.certificate << "\n";
}

struct ClassifyArgs {
    std::string file_a;
    std::string file_b;
    int depth = 6;
};

void run_classify(const ClassifyArgs& args) {
    Presentation a = cli::load_presentation(args.file_a);
    Presentation b = cli::load_presentation(args.file_b);
    if (std::string(cli::kind_name(a)) != cli::kind_name(b)) {
        throw CliError(std::string("kind mismatch: ") + cli::kind_name(a) + " vs " +
                       cli::kind_name(b));
    }
    if (const auto* va = std::get_if<cli::VietorisPresentation>(&a)) {
        const auto& vb = std::get<cli::VietorisPresentation>(b);
        print_verdict("vietoris", classify_vietoris(va->seq, vb.seq));
        return;
    }
    if (const auto* sa = std::get_if<cli::AdicSurfacePresentation>(&a)) {
        const auto& sb = std::get<cli::AdicSurfacePresentation>(b);
        print_verdict("adic-surface", classify_adic_surfaces(sa->surface, sb.surface));
        return;
    }
    const auto& ta = std::get<cli::ToralPresentation>(a);
    const auto& tb = std::get<cli::ToralPresentation>(b);
    ToralVerdict v = [&] {
        try {
            return toral_consistency(ta.chain, tb.chain, args.depth);
        } catch (const DimensionMismatchError& e) {
            throw CliError(std::string("kind mismatch: ") + e.what());
        }
    }();
    std::cout << "kind: toral\n";
    if (v.kind == ToralVerdict::Kind::Refuted) {
        std::cout << "verdict: Refuted\ndepth: " << v.depth << "\ncertificate: " << v.witness
                  << "\n";
    } else {
        std::cout << "verdict: ConsistentAtDepth\ndepth: " << v.depth
                  << "\ncertificate: invariant-factor chains interleave within horizon "
                  << 2 * v.depth << "\n";
    }
}

struct OdometerArgs {
    std::vector<std::int64_t> prefix;
    std::vector<std::int64_t> period;
    int depth = 1;
    std::string start = "0";
    std::int64_t steps = 0;
};

void run_odometer(const OdometerArgs& args) {
    TowerRef tower = make_tower(BondingSequence(args.prefix, args.period), args.depth);
    Int start = parse_residue(args.start, "--start");
    if (start < 0 || start >= tower->fiber_modulus()) {
        std::ostringstream out;
        out << "--start: residue " << start << " out of range [0, " << tower->fiber_modulus()
            << ")";
        throw CliError(out.str());
    }
    TowerPoint p(tower, start);
    for (std::int64_t i = 0; i < args.steps; ++i) {
        p = add_one(p);
        std::cout << p.residue() << "\n";
    }
}

struct CollapsibleArgs {
    std::vector<std::int64_t> prefix;
    std::vector<std::int64_t> period;
    int level = 1;
    std::optional<int> depth;
    std::vector<std::string> set;
};

void run_collapsible(const CollapsibleArgs& args) {
    const int depth = args.depth.value_or(args.level);
    if (depth < args.level) {
        throw CliError("--depth: must be at least --level");
    }
    TowerRef tower = make_tower(BondingSequence(args.prefix, args.period), depth);
    std::vector<Int> residues;
    residues.reserve(args.set.size());
    for (const std::string& r : args.set) {
        residues.push_back(parse_residue(r, "--set"));
    }
    ClopenSet window(tower, args.level, std::move(residues));
    RestrictedAction action(window);
    if (!action.is_collapsible()) {
        std::cout << "collapsible: false\n";
        return;
    }
    std::cout << "collapsible: true\n";
    std::cout << "index: " << action.isotropy().index << "\n";
    std::cout << "partition:";
    for (const ClopenSet& part : action.translates_partition()) {
        // parts re-canonicalize on translation; print all of them at the
        // window's level so the tiling is visible at a glance
        const ClopenSet shown = part.refine_to(args.level);
        std::cout << " {";
        bool first = true;
        for (const Int& r : shown.residues()) {
            if (!first) {
                std::cout << ',';
            }
            std::cout << r;
            first = false;
        }
        std::cout << '}';
    }
    std::cout << "\n";
}

struct CounterexampleArgs {
    int genus = 2;
    std::vector<std::int64_t> prefix;
    std::vector<std::int64_t> period;
    std::string out_a = "counterexample_a.json";
    std::string out_b = "counterexample_b.json";
};

void run_counterexample(const CounterexampleArgs& args) {
    BondingSequence m(args.prefix, args.period);
    auto [a, b] = generate_counterexample(args.genus, m);
    // p1 is the entry the construction prepended
    std::cout << "p1: " << b.sequence().prefix().front() << "\n";
    cli::save_presentation(args.out_a, cli::AdicSurfacePresentation{a});
    cli::save_presentation(args.out_b, cli::AdicSurfacePresentation{b});
    const bool equivalent = adic_surfaces_return_equivalent(a, b);
    const Verdict v = classify_adic_surfaces(a, b);
    std::cout << "return_equivalent: " << (equivalent ? "true" : "false") << "\n";
    std::cout << "homeomorphic: " << (v.kind == Verdict::Kind::Homeomorphic ? "true" : "false")
              << "\n";
    std::cout << "theorem: " << v.theorem << "\n";
    std::cout << "witness_prime: " << *v.witness_prime << "\n";
    std::cout << "wrote: " << args.out_a << "\n";
    std::cout << "wrote: " << args.out_b << "\n";
}

struct InvariantsArgs {
    std::string file;
    int depth = 6;
};

void print_characteristic_lines(const BondingSequence& seq) {
    const SupernaturalNumber c = characteristic(seq);
    std::cout << "finite: " << supernatural_finite(c) << "\n";
    std::cout << "infinite: " << supernatural_infinite(c) << "\n";
}

void run_invariants(const InvariantsArgs& args) {
    Presentation p = cli::load_presentation(args.file);
    if (const auto* v = std::get_if<cli::VietorisPresentation>(&p)) {
        std::cout << "kind: vietoris\n";
        print_characteristic_lines(v->seq);
        return;
    }
    if (const auto* s = std::get_if<cli::AdicSurfacePresentation>(&p)) {
        std::cout << "kind: adic-surface\n";
        std::cout << "genus: " << s->surface.genus() << "\n";
        print_characteristic_lines(s->surface.sequence());
        return;
    }
    const auto& t = std::get<cli::ToralPresentation>(p);
    std::cout << "kind: toral\n";
    std::cout << "n: " << t.chain.n() << "\n";
    std::cout << "depth: " << args.depth << "\n";
    const auto chains = quotient_invariants(t.chain, args.depth);
    for (int k = 0; k < args.depth; ++k) {
        std::cout << "factors[" << (k + 1) << "]:";
        for (const Int& f : chains[static_cast<std::size_t>(k)]) {
            std::cout << ' ' << f;
        }
        std::cout << "\n";
    }
    const IntMatrix kernel = kernel_lattice_at_depth(t.chain, args.depth);
    const LatticeInvariants inv = lattice_invariants(kernel);
    std::cout << "kernel: " << kernel.to_string() << "\n";
    std::cout << "rank: " << inv.rank << "\n";
    std::cout << "torsion_rank: " << inv.torsion_rank << "\n";
    std::cout << "strict_shrinkage: " << (strict_shrinkage(t.chain, args.depth) ? "true" : "false")
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification invariants for weak solenoids and adic surface bundles"};
    app.require_subcommand(1);

    ClassifyArgs classify_args;
    CLI::App* classify = app.add_subcommand(
        "classify", "compare two presentation files and print a verdict record");
    classify->add_option("file_a", classify_args.file_a, "first presentation file")->required();
    classify->add_option("file_b", classify_args.file_b, "second presentation file")->required();
    classify->add_option("--depth", classify_args.depth, "truncation depth for toral chains")
        ->check(CLI::PositiveNumber);

    OdometerArgs odometer_args;
    CLI::App* odometer =
        app.add_subcommand("odometer", "print successive odometer residues on a truncated fiber");
    odometer->add_option("--prefix", odometer_args.prefix, "prefix entries, comma separated")
        ->delimiter(',');
    odometer->add_option("--period", odometer_args.period, "period entries, comma separated")
        ->delimiter(',')
        ->required();
    odometer->add_option("--depth", odometer_args.depth, "tower depth")
        ->check(CLI::PositiveNumber)
        ->required();
    odometer->add_option("--start", odometer_args.start, "starting residue (default 0)");
    odometer->add_option("--steps", odometer_args.steps, "number of steps to print")
        ->check(CLI::NonNegativeNumber)
        ->required();

    CollapsibleArgs collapsible_args;
    CLI::App* collapsible = app.add_subcommand(
        "collapsible", "decide whether a clopen window tiles the fiber under translation");
    collapsible->add_option("--prefix", collapsible_args.prefix, "prefix entries")
        ->delimiter(',');
    collapsible->add_option("--period", collapsible_args.period, "period entries")
        ->delimiter(',')
        ->required();
    collapsible->add_option("--level", collapsible_args.level, "level of the window residues")
        ->check(CLI::PositiveNumber)
        ->required();
    collapsible
        ->add_option("--depth", collapsible_args.depth,
                     "tower depth (default: the window level)")
        ->check(CLI::PositiveNumber);
    collapsible
        ->add_option("--set", collapsible_args.set, "window residues at the level, comma separated")
        ->delimiter(',')
        ->required();

    CounterexampleArgs counterexample_args;
    CLI::App* counterexample = app.add_subcommand(
        "counterexample",
        "write a return-equivalent but non-homeomorphic pair of adic-surface files");
    counterexample->add_option("--genus", counterexample_args.genus, "common genus, at least 2")
        ->required();
    counterexample->add_option("--prefix", counterexample_args.prefix, "prefix entries")
        ->delimiter(',');
    counterexample->add_option("--period", counterexample_args.period, "period entries")
        ->delimiter(',')
        ->required();
    counterexample->add_option("--out-a", counterexample_args.out_a,
                               "output file for the base presentation");
    counterexample->add_option("--out-b", counterexample_args.out_b,
                               "output file for the modified presentation");

    InvariantsArgs invariants_args;
    CLI::App* invariants =
        app.add_subcommand("invariants", "print the invariants of one presentation file");
    invariants->add_option("file", invariants_args.file, "presentation file")->required();
    invariants->add_option("--depth", invariants_args.depth, "truncation depth for toral chains")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exits 0
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (classify->parsed()) {
            run_classify(classify_args);
        } else if (odometer->parsed()) {
            run_odometer(odometer_args);
        } else if (collapsible->parsed()) {
            run_collapsible(collapsible_args);
        } else if (counterexample->parsed()) {
            run_counterexample(counterexample_args);
        } else if (invariants->parsed()) {
            run_invariants(invariants_args);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
