#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <kbessel/kbessel.hpp>
#include <kbessel/verify.hpp>

namespace {

// "a" or "start:step:stop" (inclusive stop, half-step tolerance)
std::vector<double> parse_range(const std::string& text)
{
    std::vector<double> out;
    auto first = text.find(':');
    if (first == std::string::npos) {
        out.push_back(std::stod(text));
        return out;
    }
    auto second = text.find(':', first + 1);
    if (second == std::string::npos)
        throw CLI::ValidationError("range", "expected start:step:stop");
    double start = std::stod(text.substr(0, first));
    double step = std::stod(text.substr(first + 1, second - first - 1));
    double stop = std::stod(text.substr(second + 1));
    if (step <= 0)
        throw CLI::ValidationError("range", "step must be positive");
    for (double v = start; v <= stop + step / 2; v += step)
        out.push_back(v);
    return out;
}

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path)
    {
        if (path.empty())
            return;
        file.open(path);
        if (!file)
            throw kbessel::domain_error("cannot open output file " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

const char* error_order_str(const kbessel::ErrorOrder& e)
{
    static std::string buf;
    buf = std::to_string(e.num) + "/" + std::to_string(e.den);
    return buf.c_str();
}

void emit_eval_row(std::ostream& os, double r, double t, double y,
                   bool with_oracle, const kbessel::PrecisionPolicy& pol)
{
    using namespace kbessel;
    auto res = evaluate(r, t, y, RegimeThresholds{}, AsymptoticsConfig{}, pol);
    os << r << "," << t << "," << y << "," << regime_name(res.regime) << ","
       << res.value.re << "," << res.value.im << ","
       << error_order_str(res.error_order);
    if (with_oracle) {
        BigComplex o = k_oracle({BigReal(r), BigReal(t)}, BigReal(y), pol);
        Complex<double> od = to_double(o);
        double dev = detail::rel_dev_big(res.value, o);
        os << "," << od.re << "," << od.im << "," << dev;
    } else {
        os << ",,,";
    }
    os << "\n";
}

void print_suite(std::ostream& os, const kbessel::SuiteResult& res)
{
    os << "suite,label,p1,p2,p3,measured,threshold,pass\n";
    for (const auto& row : res.rows)
        os << res.suite << "," << row.label << "," << row.p1 << "," << row.p2
           << "," << row.p3 << "," << row.measured << "," << row.threshold
           << "," << (row.pass ? "pass" : "fail") << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    using namespace kbessel;
    CLI::App app{"K-Bessel asymptotics evaluator"};
    app.require_subcommand(1);

    std::string out_path;
    unsigned digits = 0;
    double coalescence_width = 0.05;
    app.add_option("--out", out_path, "write CSV to file instead of stdout");
    app.add_option("--digits", digits, "override working precision (digits)");
    app.add_option("--coalescence-width", coalescence_width,
                   "uniform-routing window for |t/y - 1|");

    auto* cmd_eval = app.add_subcommand("eval", "evaluate one point");
    double er = 0, et = 0, ey = 0;
    bool with_oracle = false;
    cmd_eval->add_option("--r", er, "real part of the order")->required();
    cmd_eval->add_option("--t", et, "imaginary part of the order")->required();
    cmd_eval->add_option("--y", ey, "argument")->required();
    cmd_eval->add_flag("--with-oracle", with_oracle, "also run the oracle");

    auto* cmd_sweep = app.add_subcommand("sweep", "evaluate a parameter grid");
    std::string sr = "0", st = "0", sy = "1";
    bool sweep_oracle = false;
    cmd_sweep->add_option("--r", sr, "r value or start:step:stop")->required();
    cmd_sweep->add_option("--t", st, "t value or start:step:stop")->required();
    cmd_sweep->add_option("--y", sy, "y value or start:step:stop")->required();
    cmd_sweep->add_flag("--with-oracle", sweep_oracle, "also run the oracle");

    auto* cmd_verify = app.add_subcommand("verify", "run a self-check suite");
    std::string suite;
    cmd_verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"mono-decay", "branch-constant", "osc-decay",
                               "uniform-limits", "uniform-window", "envelopes",
                               "dual-oracle", "eisenstein-cross",
                               "eisenstein-decay", "coefficient-shape"}));

    auto* cmd_eis = app.add_subcommand("eisenstein", "Eisenstein series reports");
    double ex = 0, eis_y = 2, eis_r = 1.3, eis_t = 40, accuracy = 1e-8;
    long bound = 3000;
    bool cross_check = false, shape_check = false;
    std::string eis_t_range, eis_y_range;
    cmd_eis->add_option("--x", ex, "real part of z");
    cmd_eis->add_option("--y", eis_y, "imaginary part of z");
    cmd_eis->add_option("--r", eis_r, "real part of s");
    cmd_eis->add_option("--t", eis_t, "imaginary part of s");
    cmd_eis->add_option("--accuracy", accuracy, "target relative accuracy");
    cmd_eis->add_option("--bound", bound, "coset-sum truncation bound");
    cmd_eis->add_flag("--cross-check", cross_check,
                      "compare against the direct coset sum");
    cmd_eis->add_flag("--shape-check", shape_check, "emit bound-shape ratios");
    cmd_eis->add_option("--t-range", eis_t_range, "t grid for --shape-check");
    cmd_eis->add_option("--y-range", eis_y_range, "y grid for --shape-check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Output out;
        out.open(out_path);
        std::ostream& os = out.stream();
        os << std::setprecision(17);
        os << "# schema=1\n";

        PrecisionPolicy pol;
        if (digits > 0)
            pol.working_digits = digits;

        if (*cmd_eval) {
            os << "r,t,y,regime,re,im,error_order,oracle_re,oracle_im,rel_deviation\n";
            emit_eval_row(os, er, et, ey, with_oracle, pol);
        } else if (*cmd_sweep) {
            auto rs = parse_range(sr);
            auto ts = parse_range(st);
            auto ys = parse_range(sy);
            os << "r,t,y,regime,re,im,error_order,oracle_re,oracle_im,rel_deviation\n";
            for (double r : rs)
                for (double t : ts)
                    for (double y : ys)
                        emit_eval_row(os, r, t, y, sweep_oracle, pol);
        } else if (*cmd_verify) {
            SuiteResult res;
            if (suite == "mono-decay") res = verify_mono_decay();
            else if (suite == "branch-constant") res = verify_branch_constant();
            else if (suite == "osc-decay") res = verify_osc_decay();
            else if (suite == "uniform-limits") res = verify_uniform_limits();
            else if (suite == "uniform-window") res = verify_uniform_window();
            else if (suite == "envelopes") res = verify_envelopes();
            else if (suite == "dual-oracle") res = verify_dual_oracle();
            else if (suite == "eisenstein-cross") res = verify_eisenstein_cross();
            else if (suite == "eisenstein-decay") res = verify_eisenstein_decay();
            else res = verify_coefficient_shape();
            print_suite(os, res);
            if (!res.pass)
                return 3;
        } else if (*cmd_eis) {
            Complex<double> s{eis_r, eis_t};
            if (shape_check) {
                std::vector<double> tg = eis_t_range.empty()
                    ? std::vector<double>{eis_t} : parse_range(eis_t_range);
                std::vector<double> yg = eis_y_range.empty()
                    ? std::vector<double>{} : parse_range(eis_y_range);
                os << "kind,case,r,t,y,N,measured,bound,ratio,alt_ratio\n";
                for (const auto& row : bound_shape_check(eis_r, tg, yg))
                    os << row.kind << "," << row.label << "," << row.r << ","
                       << row.t << "," << row.y << "," << row.N << ","
                       << row.measured << "," << row.bound << "," << row.ratio
                       << "," << row.alt_ratio << "\n";
            } else if (cross_check) {
                auto p = eisenstein_eval(ex, eis_y, s, accuracy, {}, pol);
                Complex<double> cs = direct_coset_sum(ex, eis_y, s, bound);
                double dev = kbessel::abs(p.value - cs) / kbessel::abs(cs);
                os << "x,y,r,t,N,re,im,coset_re,coset_im,rel_deviation,tail_estimate\n";
                os << ex << "," << eis_y << "," << eis_r << "," << eis_t << ","
                   << p.N << "," << p.value.re << "," << p.value.im << ","
                   << cs.re << "," << cs.im << "," << dev << ","
                   << coset_tail_estimate(s, bound) << "\n";
            } else {
                auto p = eisenstein_eval(ex, eis_y, s, accuracy, {}, pol);
                os << "x,y,r,t,N,re,im\n";
                os << ex << "," << eis_y << "," << eis_r << "," << eis_t << ","
                   << p.N << "," << p.value.re << "," << p.value.im << "\n";
            }
        }
    } catch (const CLI::ParseError& e) {
        // bad ranges surface after parsing; still a usage error
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
