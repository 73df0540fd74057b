#include "prg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace prg {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

GroupSpec parse_spec_literal(const std::string& text) {
    const std::string low = lowercase(text);
    if (low == "clifford") return {4, axis(3), axis(1), axis(3)};
    if (low == "clifford+t") return {8, axis(3), axis(1), axis(3)};
    if (low == "x") return {2, axis(1), axis(1), axis(1)};
    if (low == "y") return {2, axis(2), axis(2), axis(2)};
    if (low == "z") return {2, axis(3), axis(3), axis(3)};
    if (low == "s") return {4, axis(3), axis(3), axis(3)};
    if (low == "t") return {8, axis(3), axis(3), axis(3)};
    if (low == "h") return {1, axis(1), axis(1), axis(3)};

    // k:a:bc
    std::size_t first = text.find(':');
    if (first == std::string::npos)
        throw ParseError("expected 'k:a:bc' or a named alias", 0);
    std::size_t second = text.find(':', first + 1);
    if (second == std::string::npos)
        throw ParseError("expected a second ':' introducing the translation pair", first + 1);

    const std::string k_part = text.substr(0, first);
    const std::string a_part = text.substr(first + 1, second - first - 1);
    const std::string bc_part = text.substr(second + 1);

    if (k_part.empty() || !std::all_of(k_part.begin(), k_part.end(),
                                       [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("degree must be a positive integer", 0);
    unsigned long k = 0;
    try {
        k = std::stoul(k_part);
    } catch (const std::exception&) {
        throw ParseError("degree out of range", 0);
    }
    if (k == 0) throw ParseError("degree must be at least 1", 0);

    auto digit_axis = [&](char c, std::size_t pos) {
        if (c < '1' || c > '3') throw ParseError("axis index must be 1, 2, or 3", pos);
        return axis(c - '0');
    };
    if (a_part.size() != 1) throw ParseError("root direction must be a single digit", first + 1);
    if (bc_part.size() != 2)
        throw ParseError("translation pair must be two digits, e.g. 13 or 22", second + 1);

    return {static_cast<unsigned>(k), digit_axis(a_part[0], first + 1),
            digit_axis(bc_part[0], second + 1), digit_axis(bc_part[1], second + 2)};
}

Mat2 parse_gate_word(const std::string& text, unsigned ambient) {
    if (ambient % 8 != 0)
        throw UnsupportedField("gate words need an ambient field order divisible by 8");
    Mat2 acc = Mat2::identity(ambient);
    std::istringstream in(text);
    std::string token;
    std::size_t pos = 0;
    while (in >> token) {
        pos = text.find(token, pos);
        bool dag = !token.empty() && token.back() == '\'';
        if (dag) token.pop_back();
        Mat2 g = Mat2::identity(ambient);
        if (token == "X") g = pauli(axis(1), ambient);
        else if (token == "Y") g = pauli(axis(2), ambient);
        else if (token == "Z") g = pauli(axis(3), ambient);
        else if (token == "S") g = identity_root(4, axis(3), ambient);
        else if (token == "T") g = identity_root(8, axis(3), ambient);
        else if (token == "H") g = translation(axis(1), axis(3), ambient);
        else if (token == "V1") g = identity_root(4, axis(1), ambient);
        else if (token == "V2") g = identity_root(4, axis(2), ambient);
        else if (token == "V3") g = identity_root(4, axis(3), ambient);
        else if (token == "r12" || token == "R12") g = translation(axis(1), axis(2), ambient);
        else if (token == "r13" || token == "R13") g = translation(axis(1), axis(3), ambient);
        else if (token == "r23" || token == "R23") g = translation(axis(2), axis(3), ambient);
        else throw ParseError("unknown gate '" + token + "'", pos);
        acc = mul(acc, dag ? dagger(g) : g);
        pos += token.size();
    }
    return acc;
}

namespace {

struct CliOptions {
    std::uint64_t cap = 0;     // 0 = default (10 x predicted order, or 4096)
    unsigned ambient = 0;      // 0 = default lcm(8, k)
    int indent = 2;
    std::string out_path;
};

std::uint64_t effective_cap(const CliOptions& opt, const GroupSpec& spec) {
    if (opt.cap != 0) return opt.cap;
    auto predicted = predicted_order(spec);
    return predicted ? 10 * *predicted : 4096;
}

void emit(const Json& doc, const CliOptions& opt, std::ostream& out) {
    std::string text = opt.indent >= 0 ? doc.dump(opt.indent) : doc.dump();
    if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path);
        if (!file) throw Error("cannot open output file " + opt.out_path);
        file << text << '\n';
    } else {
        out << text << '\n';
    }
}

Json classify_json(const GroupSpec& spec) {
    Json out{{"spec", spec_to_json(spec)},
             {"kind", kind_to_string(classify(spec))},
             {"finite", is_finite(spec)}};
    auto order = predicted_order(spec);
    out["order"] = order ? Json(*order) : Json("infinite");
    out["structure"] = order ? Json(structure_label(spec)) : Json(nullptr);
    return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for Pauli root groups <V_{k,a}, rho_bc>: classification, "
                 "enumeration, equality and subgroup decisions with witnesses, "
                 "infiniteness certificates, the GU(2,9) reduction, and the signed Pauli "
                 "action"};
    app.require_subcommand(1);

    CliOptions opt;
    app.add_option("--cap", opt.cap,
                   "closure size bound (default: 10 x predicted order, or 4096)");
    app.add_option("--ambient", opt.ambient,
                   "ambient cyclotomic field order (default: lcm(8, k))");
    app.add_option("--json-indent", opt.indent, "JSON indent; negative for compact output");
    app.add_option("--out", opt.out_path, "write JSON to this file instead of stdout");

    std::string spec_arg, spec_arg2, word_arg;

    CLI::App* c_classify = app.add_subcommand("classify", "kind, finiteness, order, structure");
    c_classify->add_option("spec", spec_arg, "group literal k:a:bc or alias")->required();

    CLI::App* c_enum = app.add_subcommand("enumerate", "close the group and dump it as JSON");
    c_enum->add_option("spec", spec_arg, "group literal")->required();

    CLI::App* c_equal = app.add_subcommand("equal", "decide equality of two groups");
    c_equal->add_option("p", spec_arg, "first group")->required();
    c_equal->add_option("q", spec_arg2, "second group")->required();

    CLI::App* c_sub = app.add_subcommand("subgroup", "decide containment p <= q");
    c_sub->add_option("p", spec_arg, "candidate subgroup")->required();
    c_sub->add_option("q", spec_arg2, "candidate supergroup")->required();

    CLI::App* c_wit = app.add_subcommand(
        "witness", "express q's generators as words over p's generators");
    c_wit->add_option("p", spec_arg, "source group")->required();
    c_wit->add_option("q", spec_arg2, "group whose generators are expressed")->required();

    CLI::App* c_cert = app.add_subcommand("certify",
                                          "infiniteness certificate via the trace square");
    c_cert->add_option("spec", spec_arg, "group literal")->required();

    CLI::App* c_gu = app.add_subcommand("gu29-check",
                                        "verify the mod-3 reduction of the Clifford group");
    c_gu->add_option("spec", spec_arg, "smooth degree-4 literal (default: clifford)");

    CLI::App* c_act = app.add_subcommand("action",
                                         "permutation of the signed Paulis induced by a "
                                         "gate word");
    c_act->add_option("word", word_arg, "e.g. \"H S' r12\"")->required();

    // global flags may follow the subcommand
    for (CLI::App* sub : {c_classify, c_enum, c_equal, c_sub, c_wit, c_cert, c_gu, c_act})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 64;
    }

    try {
        if (*c_classify) {
            emit(classify_json(parse_spec_literal(spec_arg)), opt, out);
            return 0;
        }
        if (*c_enum) {
            GroupSpec spec = parse_spec_literal(spec_arg);
            EnumerateResult result =
                enumerate(spec, effective_cap(opt, spec), opt.ambient);
            if (const auto* cap = std::get_if<CapExceeded>(&result)) {
                emit(Json{{"status", "cap-exceeded"},
                          {"spec", spec_to_json(spec)},
                          {"cap", cap->cap}},
                     opt, out);
                return 2;
            }
            emit(group_to_json(std::get<FiniteGroup>(result)), opt, out);
            return 0;
        }
        if (*c_equal || *c_sub) {
            GroupSpec p = parse_spec_literal(spec_arg);
            GroupSpec q = parse_spec_literal(spec_arg2);
            RelationVerdict v = *c_equal ? decide_equal(p, q) : decide_subgroup(p, q);
            Json doc = verdict_to_json(v);
            doc["p"] = spec_to_json(p);
            doc["q"] = spec_to_json(q);
            emit(doc, opt, out);
            return v.answer == RelAnswer::Undetermined ? 2 : 0;
        }
        if (*c_wit) {
            GroupSpec p = parse_spec_literal(spec_arg);
            GroupSpec q = parse_spec_literal(spec_arg2);
            emit(witness_to_json(witness_generators(p, q)), opt, out);
            return 0;
        }
        if (*c_cert) {
            GroupSpec spec = parse_spec_literal(spec_arg);
            try {
                InfinitenessCertificate cert = infiniteness_certificate(spec);
                Json doc = certificate_to_json(cert);
                doc["status"] = "infinite";
                emit(doc, opt, out);
            } catch (const NotApplicable& e) {
                emit(Json{{"status", "not-applicable"},
                          {"spec", spec_to_json(spec)},
                          {"reason", e.what()}},
                     opt, out);
            }
            return 0;
        }
        if (*c_gu) {
            GroupSpec spec = parse_spec_literal(spec_arg.empty() ? "clifford" : spec_arg);
            FiniteGroup clifford = enumerate_finite(spec, opt.ambient);
            Gu29Report report = verify_gu29_isomorphism(clifford);
            Json doc = gu29_report_to_json(report);
            doc["spec"] = spec_to_json(spec);
            emit(doc, opt, out);
            return (report.homomorphism && report.injective && report.all_in_gu &&
                    report.image_size == 192)
                       ? 0
                       : 1;
        }
        if (*c_act) {
            unsigned n = opt.ambient == 0 ? 8 : opt.ambient;
            Mat2 u = parse_gate_word(word_arg, n);
            Json doc = perm_to_json(signed_pauli_action(u));
            doc["word"] = word_arg;
            emit(doc, opt, out);
            return 0;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 64;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 65;
    }
    return 64;
}

}  // namespace prg
