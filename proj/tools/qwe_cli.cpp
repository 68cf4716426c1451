// Command-line front end for the qwe shared library.  All functionality
// goes through the C API in qwe.h; this file only parses arguments, moves
// files around, and formats output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwe.h"

namespace {

struct CodeHandle {
    qwe_code* ptr = nullptr;
    ~CodeHandle() { qwe_code_free(ptr); }
};

struct OperatorHandle {
    qwe_operator* ptr = nullptr;
    ~OperatorHandle() { qwe_operator_free(ptr); }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { qwe_string_free(ptr); }
};

[[noreturn]] void die(qwe_status status) {
    std::cerr << "error: " << qwe_last_error() << "\n";
    std::exit(status);
}

void check(qwe_status status) {
    if (status != QWE_OK) die(status);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(QWE_ERR_CONTRACT);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        std::exit(QWE_ERR_CONTRACT);
    }
    out << text << "\n";
}

struct CodeSource {
    std::string stabilizer_path;
    std::string builtin;
    std::string vectors_path;

    void add_options(CLI::App* cmd) {
        auto* a = cmd->add_option("--stabilizer", stabilizer_path,
                                  "stabilizer generator file (one Pauli word per line)");
        auto* b = cmd->add_option("--builtin", builtin, "built-in code name");
        auto* c = cmd->add_option("--vectors", vectors_path, "codeword vector file (JSON)");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    }

    void load(CodeHandle& handle) const {
        if (!stabilizer_path.empty())
            check(qwe_code_from_stabilizer(read_file(stabilizer_path).c_str(), &handle.ptr));
        else if (!builtin.empty())
            check(qwe_code_builtin(builtin.c_str(), &handle.ptr));
        else if (!vectors_path.empty())
            check(qwe_code_from_vectors_json(read_file(vectors_path).c_str(), &handle.ptr));
        else {
            std::cerr << "error: provide --stabilizer, --builtin, or --vectors\n";
            std::exit(QWE_ERR_CONTRACT);
        }
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum weight enumerators: analysis, transforms, constructions"};
    app.require_subcommand(1);
    std::string out_path;
    double tolerance = 0.0;  // 0 = library default
    app.add_option("--out", out_path, "write output to file instead of stdout")->capture_default_str();
    app.add_option("--tolerance", tolerance, "float-backend comparison tolerance");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "weight distributions and polynomials");
    CodeSource enum_src;
    enum_src.add_options(cmd_enum);
    std::string op1_path, op2_path;
    cmd_enum->add_option("--operator", op1_path, "operator file (JSON), used for M1 and M2");
    cmd_enum->add_option("--operator2", op2_path, "second operator file (JSON)");

    // distance / erasures
    auto* cmd_dist = app.add_subcommand("distance", "certify minimum distance and purity");
    CodeSource dist_src;
    dist_src.add_options(cmd_dist);

    auto* cmd_eras = app.add_subcommand("erasures", "erasure correctability per subset");
    CodeSource eras_src;
    eras_src.add_options(cmd_eras);
    int eras_max = -1;
    cmd_eras->add_option("--max-size", eras_max, "largest subset size to scan");

    // transform
    auto* cmd_trans = app.add_subcommand("transform", "polynomial transforms on coefficient lists");
    std::string coeffs;
    int block_dim = 2;
    bool t_macw = false, t_shadow = false, t_toprimed = false, t_fromprimed = false;
    cmd_trans->add_option("--coeffs", coeffs, "comma-separated coefficients, d ascending")->required();
    cmd_trans->add_option("--D", block_dim, "block dimension");
    cmd_trans->add_flag("--macwilliams", t_macw, "MacWilliams transform");
    cmd_trans->add_flag("--shadow", t_shadow, "shadow transform (input is A')");
    cmd_trans->add_flag("--to-primed", t_toprimed, "unprimed -> primed substitution");
    cmd_trans->add_flag("--from-primed", t_fromprimed, "primed -> unprimed substitution");

    // constructions
    auto* cmd_shorten = app.add_subcommand("shorten", "trace out one factor of a pure code");
    CodeSource shorten_src;
    shorten_src.add_options(cmd_shorten);
    int shorten_factor = 1;
    cmd_shorten->add_option("--factor", shorten_factor, "1-based factor to remove");

    auto* cmd_extend = app.add_subcommand("extend", "extend a rank-D code by one dim-D factor");
    CodeSource extend_src;
    extend_src.add_options(cmd_extend);

    auto* cmd_concat = app.add_subcommand("concat", "re-encode each factor with an inner encoder");
    CodeSource concat_src;
    concat_src.add_options(cmd_concat);
    std::string encoder = "identity";
    cmd_concat->add_option("--encoder", encoder, "built-in encoder name")->required();

    // fuzz-shadow
    auto* cmd_fuzz = app.add_subcommand("fuzz-shadow", "shadow positivity fuzz on random PSD pairs");
    int fuzz_max_n = 3, fuzz_max_d = 3;
    long fuzz_trials = 1000;
    unsigned long long fuzz_seed = 1;
    cmd_fuzz->add_option("--max-n", fuzz_max_n, "largest factor count");
    cmd_fuzz->add_option("--max-D", fuzz_max_d, "largest block dimension");
    cmd_fuzz->add_option("--trials", fuzz_trials, "number of random pairs");
    cmd_fuzz->add_option("--seed", fuzz_seed, "RNG seed");

    // haar-check
    auto* cmd_haar = app.add_subcommand("haar-check", "Monte-Carlo Haar estimate vs exact value");
    std::string haar_op1, haar_op2, haar_kind = "Aprime";
    std::vector<int> haar_subset;
    long haar_samples = 10000;
    unsigned long long haar_seed = 1;
    cmd_haar->add_option("--operator", haar_op1, "operator file M1 (JSON)")->required();
    cmd_haar->add_option("--operator2", haar_op2, "operator file M2 (defaults to M1)");
    cmd_haar->add_option("--subset", haar_subset, "1-based factor indices of S");
    cmd_haar->add_option("--kind", haar_kind, "Aprime or Bprime");
    cmd_haar->add_option("--samples", haar_samples, "Monte-Carlo samples");
    cmd_haar->add_option("--seed", haar_seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    OwnedString result;
    if (cmd_enum->parsed()) {
        if (!op1_path.empty()) {
            OperatorHandle m1, m2;
            check(qwe_operator_from_json(read_file(op1_path).c_str(), &m1.ptr));
            const std::string second = op2_path.empty() ? op1_path : op2_path;
            check(qwe_operator_from_json(read_file(second).c_str(), &m2.ptr));
            check(qwe_pair_enumerate(m1.ptr, m2.ptr, &result.ptr));
        } else {
            CodeHandle code;
            enum_src.load(code);
            check(qwe_code_report(code.ptr, tolerance, &result.ptr));
        }
    } else if (cmd_dist->parsed()) {
        CodeHandle code;
        dist_src.load(code);
        check(qwe_code_distance(code.ptr, tolerance, &result.ptr));
    } else if (cmd_eras->parsed()) {
        CodeHandle code;
        eras_src.load(code);
        check(qwe_code_erasures(code.ptr, eras_max, tolerance, &result.ptr));
    } else if (cmd_trans->parsed()) {
        int picked = t_macw + t_shadow + t_toprimed + t_fromprimed;
        if (picked != 1) {
            std::cerr << "error: pick exactly one of --macwilliams --shadow --to-primed --from-primed\n";
            return QWE_ERR_CONTRACT;
        }
        const char* kind = t_macw ? "macwilliams" : t_shadow ? "shadow" : t_toprimed ? "to-primed" : "from-primed";
        check(qwe_transform(coeffs.c_str(), block_dim, kind, &result.ptr));
    } else if (cmd_shorten->parsed()) {
        CodeHandle code, shorter;
        shorten_src.load(code);
        check(qwe_code_shorten(code.ptr, shorten_factor, &shorter.ptr));
        check(qwe_code_report(shorter.ptr, tolerance, &result.ptr));
    } else if (cmd_extend->parsed()) {
        CodeHandle code, longer;
        extend_src.load(code);
        check(qwe_code_extend(code.ptr, &longer.ptr));
        check(qwe_code_report(longer.ptr, tolerance, &result.ptr));
    } else if (cmd_concat->parsed()) {
        CodeHandle code, bigger;
        concat_src.load(code);
        check(qwe_code_concat(code.ptr, encoder.c_str(), &bigger.ptr));
        check(qwe_code_report(bigger.ptr, tolerance, &result.ptr));
    } else if (cmd_fuzz->parsed()) {
        check(qwe_fuzz_shadow(fuzz_max_n, fuzz_max_d, fuzz_trials, fuzz_seed, &result.ptr));
    } else if (cmd_haar->parsed()) {
        OperatorHandle m1, m2;
        check(qwe_operator_from_json(read_file(haar_op1).c_str(), &m1.ptr));
        const std::string second = haar_op2.empty() ? haar_op1 : haar_op2;
        check(qwe_operator_from_json(read_file(second).c_str(), &m2.ptr));
        check(qwe_haar_check(m1.ptr, m2.ptr, haar_subset.data(), static_cast<int>(haar_subset.size()),
                             haar_kind.c_str(), haar_samples, haar_seed, &result.ptr));
    }

    emit(result.ptr ? result.ptr : "", out_path);
    return 0;
}
