#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kneser_lab/kneser_lab.hpp"

using namespace kneser_lab;

namespace {

// Exit statuses.
constexpr int exit_pass = 0;
constexpr int exit_violation = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_usage = 64;
constexpr int exit_data = 65;
constexpr int exit_internal = 70;

struct Options {
    bool json_output = false;
    unsigned threads = default_threads();
    std::uint64_t seed = 42;
};

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::format, "cannot read '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

LinearCode load_code(const std::string& path) {
    std::istringstream is(slurp(path));
    return read_code(is);
}

SetFamily load_family(const std::string& path) {
    std::istringstream is(slurp(path));
    return read_family(is);
}

json code_json(const LinearCode& code) {
    json rows = json::array();
    for (const auto& v : code.basis()) rows.push_back(to_string(v));
    return json{{"schema", schema_version}, {"p", code.field().p()}, {"n", code.length()}, {"dim", code.dim()}, {"rows", rows}};
}

json family_json(const SetFamily& family) {
    json j = to_json(family);
    j["schema"] = schema_version;
    j["size"] = family.size();
    return j;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_report(const Options& opt, const VerificationReport& r) {
    if (opt.json_output) {
        std::cout << r.to_json().dump() << '\n';
        return;
    }
    std::cout << r.check << ": " << (!r.hypothesis_met ? "VACUOUS (hypothesis not met)" : r.pass ? "PASS" : "FAIL") << '\n';
    for (const auto& [key, value] : r.details.items()) std::cout << "  " << key << ": " << scalar_text(value) << '\n';
    if (!r.witness.is_null()) std::cout << "witness: " << r.witness.dump() << '\n';
}

int report_status(const VerificationReport& r) { return r.pass ? exit_pass : exit_violation; }

void emit_code(const Options& opt, const LinearCode& code) {
    if (opt.json_output)
        std::cout << code_json(code).dump() << '\n';
    else
        write_code(std::cout, code);
}

void emit_family(const Options& opt, const SetFamily& family) {
    if (opt.json_output)
        std::cout << family_json(family).dump() << '\n';
    else
        write_family(std::cout, family);
}

int emit_search(const Options& opt, const SearchReport& r) {
    if (opt.json_output) {
        std::cout << r.to_json().dump() << '\n';
    } else {
        std::cout << r.theorem << ' ' << r.params.dump() << ": "
                  << (r.inconclusive ? "INCONCLUSIVE" : r.pass ? "PASS" : "FAIL") << '\n';
        if (r.theorem != "suite")
            std::cout << "  max: " << r.max_found << "\n  bound: " << r.bound << "\n  extremal: " << r.extremal_count << '\n';
        std::cout << "  scanned: " << r.universe_size << "\n  admissible: " << r.admissible << '\n';
        for (const auto& [key, value] : r.details.items()) std::cout << "  " << key << ": " << scalar_text(value) << '\n';
        std::cout << "  method: " << r.method << '\n';
        if (!r.counterexample.is_null()) std::cout << "counterexample: " << r.counterexample.dump() << '\n';
    }
    if (!r.pass) return exit_violation;
    return r.inconclusive ? exit_inconclusive : exit_pass;
}

Subset parse_subset_arg(const std::string& text, std::size_t n) {
    if (text.size() == n && text.find_first_not_of("01") == std::string::npos) return parse_bitstring(text, n);
    Subset s = 0;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || value < 1 || value > n)
            fail(ErrorKind::format, "--set expects a length-" + std::to_string(n) + " bitstring or 1-based elements, got '" +
                                        text + "'");
        s |= Subset{1} << (value - 1);
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Divisible set families and Schur products of linear codes over prime fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    std::uint64_t seed_flag = 42;
    app.add_flag("--json", opt.json_output, "Emit JSON (schema kneser-lab/1)");
    app.add_option("--threads", opt.threads, "Worker threads for sweeps")->check(CLI::Range(1u, 1024u));
    app.add_option("--seed", seed_flag, "Seed for randomized suites");

    std::function<int()> action;
    auto sub = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    // codes
    std::string in_a, in_b;
    std::size_t k = 1, t = 1, ell = 1, alpha = 1;
    std::uint32_t p = 2;

    auto* product = sub("product", "Schur product C*D of two code files");
    product->add_option("c", in_a, "First code file ('-' for stdin)")->required();
    product->add_option("d", in_b, "Second code file")->required();
    product->callback([&] { action = [&] { emit_code(opt, schur_product(load_code(in_a), load_code(in_b))); return exit_pass; }; });

    auto* power_cmd = sub("power", "k-th Schur power of a code");
    power_cmd->add_option("code", in_a, "Code file (default stdin)");
    power_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::PositiveNumber);
    power_cmd->callback([&] { action = [&] { emit_code(opt, power(load_code(in_a), k)); return exit_pass; }; });

    auto* stab_cmd = sub("stabilizer", "Stabilizer St(C) = {x : x*C ⊆ C}");
    stab_cmd->add_option("code", in_a, "Code file (default stdin)");
    stab_cmd->callback([&] { action = [&] { emit_code(opt, stabilizer(load_code(in_a))); return exit_pass; }; });

    auto* dec_cmd = sub("decompose", "Stabilizer decomposition of a full-support code");
    dec_cmd->add_option("code", in_a, "Code file (default stdin)");
    dec_cmd->callback([&] {
        action = [&] {
            const auto d = decompose(load_code(in_a));
            if (opt.json_output) {
                json j = d.to_json();
                j["schema"] = schema_version;
                std::cout << j.dump() << '\n';
            } else {
                std::cout << "m: " << d.m << '\n';
                for (std::size_t i = 0; i < d.m; ++i) {
                    std::cout << "part " << i + 1 << ':';
                    for (auto c : d.parts[i]) std::cout << ' ' << c + 1;
                    std::cout << " (dim " << d.components[i].dim() << ")\n";
                }
            }
            return exit_pass;
        };
    });

    auto* kneser_cmd = sub("kneser", "Check dim CD >= dim C + dim D - dim St(CD)");
    kneser_cmd->add_option("c", in_a, "First code file ('-' for stdin)")->required();
    kneser_cmd->add_option("d", in_b, "Second code file")->required();
    kneser_cmd->callback([&] {
        action = [&] {
            const auto r = kneser_check(load_code(in_a), load_code(in_b));
            print_report(opt, r);
            return report_status(r);
        };
    });

    auto* growth_cmd = sub("growth", "Power growth inequality up to t");
    growth_cmd->add_option("code", in_a, "Code file (default stdin)");
    growth_cmd->add_option("--t", t, "Largest power")->required()->check(CLI::PositiveNumber);
    growth_cmd->callback([&] {
        action = [&] {
            const auto r = growth_check(load_code(in_a), t);
            print_report(opt, r);
            return report_status(r);
        };
    });

    auto* points_cmd = sub("binary-points", "V ∩ {0,1}^n as a family");
    points_cmd->add_option("code", in_a, "Code file (default stdin)");
    points_cmd->callback([&] {
        action = [&] {
            const auto code = load_code(in_a);
            const auto points = binary_family(code);
            if (opt.json_output) {
                json j = family_json(points);
                j["dim"] = code.dim();
                j["bound"] = std::uint64_t{1} << code.dim();
                std::cout << j.dump() << '\n';
            } else {
                write_family(std::cout, points);
            }
            return exit_pass;
        };
    });

    // families
    auto* atoms_cmd = sub("atoms", "Atoms of a family");
    atoms_cmd->add_option("family", in_a, "Family file (default stdin)");
    atoms_cmd->callback([&] {
        action = [&] {
            const auto f = load_family(in_a);
            const auto part = atoms(f);
            if (opt.json_output) {
                json list = json::array();
                for (auto a : part.atoms) list.push_back(to_bitstring(a, f.ground_size()));
                std::cout << json{{"schema", schema_version}, {"n", f.ground_size()}, {"count", part.count()},
                                  {"atoms", list}, {"sizes", part.sizes()}}
                                 .dump()
                          << '\n';
            } else {
                std::cout << part.count() << '\n';
                for (auto a : part.atoms) std::cout << to_bitstring(a, f.ground_size()) << ' ' << cardinality(a) << '\n';
            }
            return exit_pass;
        };
    });

    auto* closure_cmd = sub("closure", "F^k: all intersections of k members");
    closure_cmd->add_option("family", in_a, "Family file (default stdin)");
    closure_cmd->add_option("--k", k, "Order")->required()->check(CLI::PositiveNumber);
    closure_cmd->callback([&] { action = [&] { emit_family(opt, product_family(load_family(in_a), k)); return exit_pass; }; });

    auto* div_cmd = sub("check-divisible", "Is every k-wise intersection divisible by l");
    div_cmd->add_option("family", in_a, "Family file (default stdin)");
    div_cmd->add_option("--k", k, "Order")->required()->check(CLI::PositiveNumber);
    div_cmd->add_option("--l", ell, "Modulus")->required()->check(CLI::PositiveNumber);
    div_cmd->callback([&] {
        action = [&] {
            const auto r = is_kwise_divisible(load_family(in_a), k, ell);
            print_report(opt, r);
            return report_status(r);
        };
    });

    std::string set_arg;
    auto* restrict_cmd = sub("restrict", "Restriction F|_A, re-indexed to A");
    restrict_cmd->add_option("family", in_a, "Family file (default stdin)");
    restrict_cmd->add_option("--set", set_arg, "A as a bitstring or comma-separated 1-based elements")->required();
    restrict_cmd->callback([&] {
        action = [&] {
            const auto f = load_family(in_a);
            emit_family(opt, restrict(f, parse_subset_arg(set_arg, f.ground_size())));
            return exit_pass;
        };
    });

    auto* bridge_cmd = sub("bridge-check", "k-wise p-divisibility, combinatorially and via V^<k> ⊆ 1^⊥");
    bridge_cmd->add_option("family", in_a, "Family file (default stdin)");
    bridge_cmd->add_option("--k", k, "Order")->required()->check(CLI::PositiveNumber);
    bridge_cmd->add_option("--p", p, "Prime")->required();
    bridge_cmd->callback([&] {
        action = [&] {
            const auto r = bridge_check(load_family(in_a), k, p).report();
            print_report(opt, r);
            return report_status(r);
        };
    });

    std::string v_arg;
    auto* lift_cmd = sub("lift-check", "Prime-power divisibility of a binary v in V^<k>");
    lift_cmd->add_option("family", in_a, "Family file (default stdin)");
    lift_cmd->add_option("--k", k, "Order")->required()->check(CLI::PositiveNumber);
    lift_cmd->add_option("--p", p, "Prime")->required();
    lift_cmd->add_option("--alpha", alpha, "Exponent")->required()->check(CLI::PositiveNumber);
    lift_cmd->add_option("--v", v_arg, "Binary vector as a bitstring")->required();
    lift_cmd->callback([&] {
        action = [&] {
            const auto f = load_family(in_a);
            const PrimeField field(p);
            const auto v = characteristic_vector(field, f.ground_size(), parse_bitstring(v_arg, f.ground_size()));
            const auto r = prime_power_lift_check(f, k, p, alpha, v);
            print_report(opt, r);
            return report_status(r);
        };
    });

    auto* split_cmd = sub("split", "Split along the stabilizer decomposition of V^<k>");
    split_cmd->add_option("family", in_a, "Family file (default stdin)");
    split_cmd->add_option("--k", k, "Order")->required()->check(CLI::PositiveNumber);
    split_cmd->add_option("--p", p, "Prime")->required();
    split_cmd->callback([&] {
        action = [&] {
            const auto f = load_family(in_a);
            const auto s = split_family(f, k, p);
            if (opt.json_output) {
                json j{{"schema", schema_version}, {"decomposable", s.has_value()}, {"family_size", f.size()}};
                if (s) {
                    j["first_block"] = to_bitstring(s->first_block, f.ground_size());
                    j["second_block"] = to_bitstring(s->second_block, f.ground_size());
                    j["first"] = to_json(s->first);
                    j["second"] = to_json(s->second);
                    j["product_bound"] = s->first.size() * s->second.size();
                }
                std::cout << j.dump() << '\n';
            } else if (!s) {
                std::cout << "indecomposable\n";
            } else {
                std::cout << "first block: " << to_bitstring(s->first_block, f.ground_size()) << '\n';
                std::cout << "second block: " << to_bitstring(s->second_block, f.ground_size()) << '\n';
                std::cout << "|F| = " << f.size() << " <= " << s->first.size() << " * " << s->second.size() << '\n';
                write_family(std::cout, s->first);
                write_family(std::cout, s->second);
            }
            return exit_pass;
        };
    });

    auto* tphi_cmd = sub("tphi", "Atoms outside the large components of V^<t> have size divisible by p^alpha");
    tphi_cmd->add_option("family", in_a, "Family file (default stdin)");
    tphi_cmd->add_option("--t", t, "Power of V")->required()->check(CLI::PositiveNumber);
    tphi_cmd->add_option("--p", p, "Prime")->required();
    tphi_cmd->add_option("--alpha", alpha, "Exponent")->required()->check(CLI::PositiveNumber);
    tphi_cmd->add_option("--l", ell, "Divisor l")->required()->check(CLI::PositiveNumber);
    tphi_cmd->add_option("--k", k, "Order of divisibility")->required()->check(CLI::PositiveNumber);
    tphi_cmd->callback([&] {
        action = [&] {
            const auto r = tphi_atom_report(load_family(in_a), t, p, alpha, ell, k);
            print_report(opt, r);
            return report_status(r);
        };
    });

    // constructions
    auto* construct = sub("construct", "Canonical families and matrices");
    construct->require_subcommand(1);
    std::vector<std::size_t> sizes;
    std::size_t m = 1;
    auto* atomic_cmd = construct->add_subcommand("atomic", "All unions of consecutive blocks");
    atomic_cmd->fallthrough();
    atomic_cmd->add_option("--sizes", sizes, "Block sizes, e.g. 3,3,3")->required()->delimiter(',');
    atomic_cmd->callback([&] { action = [&] { emit_family(opt, atomic_family(sizes)); return exit_pass; }; });
    auto* hadamard_cmd = construct->add_subcommand("hadamard12", "Order-12 Hadamard matrix");
    hadamard_cmd->fallthrough();
    hadamard_cmd->callback([&] {
        action = [&] {
            const auto h = paley_hadamard_12();
            if (opt.json_output)
                std::cout << json{{"schema", schema_version}, {"order", h.order()}, {"entries", h.entries()}}.dump() << '\n';
            else
                write_matrix(std::cout, h);
            return exit_pass;
        };
    });
    auto* fo_cmd = construct->add_subcommand("frankl-odlyzko", "24^m sets on [12m], pairwise intersections divisible by 3");
    fo_cmd->fallthrough();
    fo_cmd->add_option("--m", m, "Number of blocks of 12")->check(CLI::PositiveNumber);
    fo_cmd->callback([&] { action = [&] { emit_family(opt, frankl_odlyzko_family(m)); return exit_pass; }; });

    // exhaustive verification
    auto* verify = sub("verify", "Exhaustive theorem sweeps and the random property suite");
    verify->require_subcommand(1);
    std::size_t n = 1;
    std::uint64_t trials = 10000;
    auto verify_sub = [&](const char* name, const char* help) {
        auto* s = verify->add_subcommand(name, help);
        s->fallthrough();
        return s;
    };
    auto* t1 = verify_sub("theorem1", "p-wise p-divisible families have at most 2^floor(n/p) members");
    t1->add_option("--p", p, "Prime")->required();
    t1->add_option("--n", n, "Ground size")->required();
    t1->callback([&] { action = [&] { return emit_search(opt, verify_theorem1(p, n, opt.threads)); }; });
    auto* t2 = verify_sub("theorem2", "Large (p+1)-wise p-divisible families are atomic with atoms of size p");
    t2->add_option("--p", p, "Prime")->required();
    t2->add_option("--n", n, "Ground size")->required();
    t2->callback([&] { action = [&] { return emit_search(opt, verify_theorem2(p, n, opt.threads)); }; });
    auto* t4 = verify_sub("theorem4", "4l^2-wise l-divisible families, composite l");
    t4->add_option("--l", ell, "Divisor l")->required()->check(CLI::PositiveNumber);
    t4->add_option("--n", n, "Ground size")->required();
    t4->callback([&] { action = [&] { return emit_search(opt, verify_theorem4(ell, n, opt.threads)); }; });
    auto* suite = verify_sub("suite", "Seeded random property suite");
    suite->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
    suite->callback([&] {
        action = [&] {
            opt.seed = seed_flag;
            return emit_search(opt, random_property_suite(trials, opt.seed, opt.threads));
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    } catch (const Error& e) {
        std::cerr << "kneser-lab: " << to_string(e.kind()) << " error: " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::budget: return exit_inconclusive;
            case ErrorKind::internal: return exit_internal;
            default: return exit_data;
        }
    } catch (const std::exception& e) {
        std::cerr << "kneser-lab: internal error: " << e.what() << '\n';
        return exit_internal;
    }
}
