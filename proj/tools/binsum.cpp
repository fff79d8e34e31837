#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "binsum/basis.hpp"
#include "binsum/oracle.hpp"
#include "binsum/parser.hpp"
#include "binsum/printer.hpp"
#include "binsum/reducer.hpp"

using nlohmann::json;
using namespace binsum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::vector<long> parse_long_list(const std::string& csv) {
    std::vector<long> out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string part = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(Rat::parse(part).to_long());
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string part = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(Rat::parse(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

BasisSpec make_spec(const std::string& a_csv, const std::string& b_csv) {
    return BasisSpec(parse_long_list(a_csv), parse_rat_list(b_csv));
}

json spec_json(const BasisSpec& spec) {
    json a = json::array(), b = json::array();
    for (long ai : spec.a) a.push_back(ai);
    for (const Rat& bi : spec.b) b.push_back(bi.str());
    return json{{"m", spec.m()}, {"a", a}, {"b", b}};
}

json operator_json(const OreOp& op) { return json::parse(print_operator(op, PrintStyle::Json)); }

struct ReduceOpts {
    std::string operator_text, a_csv, b_csv;
    std::string format = "text";
    bool show_column = false;
    bool show_matrix = false;
};

int run_reduce(const ReduceOpts& o) {
    BasisSpec spec = make_spec(o.a_csv, o.b_csv);
    OreOp l = parse_operator(o.operator_text);
    ReductionResult res = reduce_first_column(l, spec);
    OreOp cleared = cleared_primitive(res.lprime);

    std::optional<OpMatrix> full;
    if (o.show_matrix) full = reduce_full_matrix(l, res.table);

    std::string note;
    if (res.lprime.is_zero())
        note = "the whole first column vanished: every h yields a solution";
    else if (res.lprime.is_unit())
        note = "gcrd is a unit: only h = 0 satisfies L'h = 0";

    if (o.format == "json") {
        json j{{"schema", 1},
               {"input", print_operator(l)},
               {"lprime", {{"text", print_operator(res.lprime)},
                           {"cleared", print_operator(cleared)},
                           {"json", operator_json(res.lprime)}}}};
        j.update(spec_json(spec));
        if (!note.empty()) j["note"] = note;
        if (o.show_column) {
            json col = json::array(), shifts = json::array();
            for (const OreOp& entry : res.column) col.push_back(print_operator(entry));
            for (int s : res.shifts) shifts.push_back(s);
            j["column"] = col;
            j["shifts"] = shifts;
        }
        if (full) {
            json rows = json::array();
            for (int r = 0; r < full->size(); ++r) {
                json row = json::array();
                for (int c = 0; c < full->size(); ++c) row.push_back(print_operator(full->at(r, c)));
                rows.push_back(row);
            }
            j["matrix"] = rows;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "L' (monic):   " << print_operator(res.lprime) << "\n";
        std::cout << "L' (cleared): " << print_operator(cleared) << "\n";
        if (!note.empty()) std::cout << "note: " << note << "\n";
        if (o.show_column)
            for (size_t r = 0; r < res.column.size(); ++r)
                std::cout << "L_" << r << ",0:        " << print_operator(res.column[r]) << "\n";
        if (full)
            for (int r = 0; r < full->size(); ++r)
                for (int c = 0; c < full->size(); ++c)
                    std::cout << "[RL]_" << r << "," << c << ":    " << print_operator(full->at(r, c))
                              << "\n";
    }
    return kExitOk;
}

struct ExpandOpts {
    std::string a_csv, b_csv;
    std::string format = "text";
};

int run_expand(const ExpandOpts& o) {
    BasisSpec spec = make_spec(o.a_csv, o.b_csv);
    ExpansionTable table = expansion_table(spec);
    if (o.format == "json") {
        json e = json::array(), x = json::array();
        for (const auto& row : table.e) {
            json jr = json::array();
            for (const RatFun& alpha : row) jr.push_back(ratfun_str(alpha, 'k'));
            e.push_back(jr);
        }
        for (const auto& pair : table.x)
            x.push_back(json::array({ratfun_str(pair[0], 'k'), ratfun_str(pair[1], 'k')}));
        json j{{"schema", 1}, {"E", e}, {"X", x}};
        j.update(spec_json(spec));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "basis C_{a,b} with m = " << spec.m() << ", A = " << spec.max_a()
                  << ", mA = " << spec.shift_band() << "\n";
        for (int j = 0; j < spec.m(); ++j) {
            std::cout << "E on P_{" << spec.m() << "k+" << j << "}: alpha_i for i = 0.." << spec.shift_band()
                      << " (coefficient of P_{" << spec.m() << "k+" << j << "-i}):\n";
            for (int i = 0; i <= spec.shift_band(); ++i)
                std::cout << "  i=" << i << ": " << ratfun_str(table.e[j][i], 'k') << "\n";
            std::cout << "X on P_{" << spec.m() << "k+" << j << "}: same "
                      << ratfun_str(table.x[j][0], 'k') << ", up " << ratfun_str(table.x[j][1], 'k')
                      << "\n";
        }
    }
    return kExitOk;
}

struct VerifyOpts {
    std::string operator_text, a_csv, b_csv;
    std::string lprime_text, initial_csv, h_csv;
    long nmax = 15;
    long truncate = -1;
    std::string format = "text";
};

int run_verify(const VerifyOpts& o) {
    BasisSpec spec = make_spec(o.a_csv, o.b_csv);
    KernelSpec kernel{spec};
    OreOp l = parse_operator(o.operator_text);
    require_input_operator(l);

    std::optional<long> truncation;
    if (o.truncate >= 0) truncation = o.truncate;

    // How much of h the sums up to n = nmax + ord L consume.
    std::optional<long> bound = kernel.termination_bound(o.nmax + l.order());
    if (!bound && !truncation)
        throw std::invalid_argument("kernel never terminates (no b_i in N); pass --truncate");
    long h_len = (bound ? *bound : *truncation) + 1;
    if (truncation && *truncation + 1 < h_len) h_len = *truncation + 1;

    OreOp lprime(Var::K);
    Sequence h;
    std::string h_source;
    if (!o.h_csv.empty()) {
        h = Sequence(parse_rat_list(o.h_csv));
        h_source = "explicit";
        if (h.size() < h_len)
            throw std::invalid_argument("--h too short: need " + std::to_string(h_len) + " values");
    } else {
        if (!o.lprime_text.empty()) {
            lprime = parse_rational_operator(o.lprime_text, spec.m() == 1 ? Var::N : Var::K);
        } else {
            lprime = reduce_first_column(l, spec).lprime;
        }
        if (lprime.is_zero())
            throw std::invalid_argument("L' is zero; any h works, nothing to unroll");
        std::vector<Rat> initial;
        if (!o.initial_csv.empty()) {
            initial = parse_rat_list(o.initial_csv);
        } else {
            initial.assign(static_cast<size_t>(std::max(lprime.order(), 1)), Rat(0));
            initial[0] = Rat(1);
        }
        h = unroll(lprime, initial, h_len - 1);
        h_source = o.lprime_text.empty() ? "reduced and unrolled" : "unrolled from given L'";
    }

    VerifyReport report = verify_solution(l, kernel, h, o.nmax, truncation);

    if (o.format == "json") {
        json j{{"schema", 1},
               {"pass", report.pass},
               {"nmax", o.nmax},
               {"h_source", h_source},
               {"operator", print_operator(l)}};
        j.update(spec_json(spec));
        // Sums that never terminate are only checked as truncated formal
        // series; flag that in the report.
        if (!bound) j["truncated_formal"] = true;
        if (!lprime.is_zero()) j["lprime"] = print_operator(lprime);
        if (report.first_failure) {
            j["first_failure"] = *report.first_failure;
            j["residual"] = report.residual.str();
        }
        json hj = json::array();
        for (long i = 0; i < std::min<long>(h.size(), 12); ++i) hj.push_back(h.at(i).str());
        j["h_prefix"] = hj;
        std::cout << j.dump(2) << "\n";
    } else {
        if (report.pass) {
            std::cout << "PASS: L y = 0 for n = 0.." << o.nmax << "\n";
        } else {
            std::cout << "FAIL: residual " << report.residual.str() << " at n = " << *report.first_failure
                      << "\n";
        }
        std::cout << "h = ";
        for (long i = 0; i < std::min<long>(h.size(), 8); ++i)
            std::cout << (i ? ", " : "") << h.at(i).str();
        std::cout << ", ...\n";
    }
    return report.pass ? kExitOk : kExitVerifyFail;
}

struct GcrdOpts {
    std::vector<std::string> operators;
    std::string format = "text";
};

int run_gcrd(const GcrdOpts& o) {
    std::vector<OreOp> ops;
    for (const std::string& text : o.operators) {
        Var fallback = ops.empty() ? Var::K : ops[0].var();
        ops.push_back(parse_rational_operator(text, fallback));
    }
    for (size_t i = 1; i < ops.size(); ++i)
        if (ops[i].var() != ops[0].var())
            throw std::invalid_argument("gcrd: operators use different variables");
    OreOp g = gcrd(std::span<const OreOp>(ops));
    if (o.format == "json") {
        json j{{"schema", 1},
               {"gcrd", print_operator(g)},
               {"cleared", print_operator(cleared_primitive(g))}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "gcrd:    " << print_operator(g) << "\n";
        std::cout << "cleared: " << print_operator(cleared_primitive(g)) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"definite-sum solutions of linear recurrences via binomial-coefficient bases"};
    app.require_subcommand(1);

    ReduceOpts ro;
    auto* reduce = app.add_subcommand("reduce", "compute L' with L'h = 0 iff L(sum F(n,k)h_k) = 0");
    reduce->add_option("--operator", ro.operator_text, "operator in n and E, e.g. \"(n+1)*E - 2*(2*n+1)\"")
        ->required();
    reduce->add_option("--a", ro.a_csv, "comma-separated a_1..a_m (positive integers)")->required();
    reduce->add_option("--b", ro.b_csv, "comma-separated b_1..b_m (rationals)")->required();
    reduce->add_option("--format", ro.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    reduce->add_flag("--column", ro.show_column, "also print the first column L_{r,0}");
    reduce->add_flag("--matrix", ro.show_matrix, "also print the full m x m matrix [RL]");

    ExpandOpts eo;
    auto* expand = app.add_subcommand("expand", "print the E- and X-expansion tables of a basis");
    expand->add_option("--a", eo.a_csv)->required();
    expand->add_option("--b", eo.b_csv)->required();
    expand->add_option("--format", eo.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "check L y = 0 for y_n = sum_k F(n,k) h_k exactly");
    verify->add_option("--operator", vo.operator_text)->required();
    verify->add_option("--a", vo.a_csv)->required();
    verify->add_option("--b", vo.b_csv)->required();
    verify->add_option("--lprime", vo.lprime_text, "operator for unrolling h (default: run reduce)");
    verify->add_option("--initial", vo.initial_csv, "initial values for the unroll (default: 1,0,...)");
    verify->add_option("--hseq", vo.h_csv, "explicit h prefix (overrides --lprime/--initial)");
    verify->add_option("--nmax", vo.nmax, "check L y = 0 for n = 0..nmax (default 15)");
    verify->add_option("--truncate", vo.truncate, "truncation when the sum never terminates");
    verify->add_option("--format", vo.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    GcrdOpts go;
    auto* gc = app.add_subcommand("gcrd", "greatest common right divisor of recurrence operators");
    gc->add_option("--operator", go.operators, "operator (repeatable)")->required()->expected(-1);
    gc->add_option("--format", go.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (reduce->parsed()) return run_reduce(ro);
        if (expand->parsed()) return run_expand(eo);
        if (verify->parsed()) return run_verify(vo);
        if (gc->parsed()) return run_gcrd(go);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
