#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "mrat/labeling.hpp"
#include "mrat/series.hpp"
#include "mrat/tree.hpp"
#include "mrat/updown.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCrossCheck = 3;
constexpr int kExitIo = 4;

constexpr int kDeskScaleCap = 7;

struct Range {
    int lo = 0, hi = 0;
};

// "A" or "A..B"
Range parse_range(const std::string& s) {
    Range r;
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(s);
        } else {
            r.lo = std::stoi(s.substr(0, dots));
            r.hi = std::stoi(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected A or A..B, got '" + s + "'");
    }
    if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range '" + s + "'");
    return r;
}

int default_jobs() {
    if (const char* env = std::getenv("MRAT_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

// Writes to --out if given, else stdout; missing parent dirs are an I/O error.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::ios_base::failure("cannot open output file: " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

nlohmann::json json_int(const mrat::Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

std::string rat_str(const mrat::Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

void check_cap(int hi, bool force) {
    if (hi > kDeskScaleCap && !force)
        throw CLI::ValidationError(
            "--n", "n > 7 means (2n-2)!-scale label spaces; pass --force to proceed");
}

nlohmann::json report_json(const mrat::OrbitDecomposition& dec, const mrat::Int& sharp) {
    nlohmann::json diagrams = nlohmann::json::array();
    for (const auto& d : dec.diagrams) {
        std::map<int, int> hist;
        for (const auto& orb : d.orbits) ++hist[orb.length];
        nlohmann::json orbits = nlohmann::json::array();
        for (const auto& [len, cnt] : hist) orbits.push_back({{"length", len}, {"count", cnt}});
        diagrams.push_back({{"matching", d.diagram.matching()},
                            {"tree_signature", d.tree_signature},
                            {"sharp_r", json_int(d.sharp_r)},
                            {"pi", d.pi},
                            {"total", json_int(d.total)},
                            {"orbits", orbits}});
    }
    return {{"n", dec.n},
            {"sharp_real", json_int(sharp)},
            {"components", json_int(dec.orbit_count())},
            {"diagrams", diagrams}};
}

int run_count(const Range& r, const std::string& format, const std::string& out_path, int jobs) {
    if (r.lo < 1) throw CLI::ValidationError("--n", "n must be >= 1");
    Sink sink(out_path);
    nlohmann::json all = nlohmann::json::array();
    if (format == "csv") sink.out() << "n,sharp_real,components\n";
    for (int n = r.lo; n <= r.hi; ++n) {
        auto dec = mrat::orbit_decomposition(n, jobs);
        mrat::Int sharp = dec.total_labelings();
        if (n >= 2) {
            mrat::Int planted = mrat::sharp_real_planted(n);
            if (planted != sharp) {
                std::cerr << "cross-check failed at n=" << n << ": direct enumeration gives "
                          << sharp << ", planted-tree sum gives " << planted << "\n";
                return kExitCrossCheck;
            }
        }
        if (format == "json") {
            all.push_back(report_json(dec, sharp));
        } else if (format == "csv") {
            sink.out() << n << "," << sharp << "," << dec.orbit_count() << "\n";
        } else {
            sink.out() << "n=" << n << "  sharp=" << sharp
                       << "  components=" << dec.orbit_count() << "\n";
        }
    }
    if (format == "json") sink.out() << all.dump(2) << "\n";
    return 0;
}

int run_verify(const Range& r, int words_len, int series_order, int jobs) {
    bool any = false;
    if (r.lo > 0) {
        any = true;
        if (r.lo < 1) throw CLI::ValidationError("--n", "n must be >= 1");
        for (int n = r.lo; n <= r.hi; ++n) {
            mrat::Int direct = mrat::sharp_real(n, jobs);
            mrat::Int planted = (n >= 2) ? mrat::sharp_real_planted(n) : direct;
            std::cout << "n=" << n << " direct=" << direct << " planted=" << planted
                      << (direct == planted ? "  ok" : "  MISMATCH") << "\n";
            if (direct != planted) return kExitCrossCheck;
            if (n >= 2) {
                // per-diagram: caterpillar closed form vs enumeration
                for (const auto& d : mrat::enumerate_diagrams(n - 1)) {
                    auto ct = mrat::caterpillar_type(mrat::associated_tree(d));
                    if (!ct) continue;
                    auto g = mrat::symmetry_group(d);
                    mrat::Int closed =
                        mrat::sharp_caterpillar(*ct, g.oriented_size(), g.orientation_symmetric());
                    mrat::Int enumerated = mrat::count_diagram_total(d);
                    if (closed != enumerated) {
                        std::cout << "caterpillar mismatch on " << d.to_text() << ": closed form "
                                  << closed << " vs enumerated " << enumerated << "\n";
                        return kExitCrossCheck;
                    }
                }
                std::cout << "n=" << n << " caterpillar closed forms  ok\n";
            }
        }
    }
    if (words_len > 0) {
        any = true;
        if (words_len > 11)
            throw CLI::ValidationError("--words", "brute-force oracle capped at length 11");
        for (int len = 0; len <= words_len; ++len)
            for (int bits = 0; bits < (1 << len); ++bits) {
                std::string w;
                for (int i = 0; i < len; ++i) w.push_back((bits >> i) & 1 ? 'D' : 'U');
                mrat::Int det = mrat::count_updown_determinant(w);
                mrat::Int brute = mrat::count_updown_bruteforce(w);
                if (det != brute) {
                    std::cout << "word " << w << ": determinant " << det << " vs brute " << brute
                              << "\n";
                    return kExitCrossCheck;
                }
            }
        std::cout << "determinant == brute force for all words of length <= " << words_len
                  << "  ok\n";
    }
    if (series_order > 0) {
        any = true;
        auto fp = mrat::fp_series(series_order);
        for (int n = 1; 2 * n <= series_order; ++n) {
            mrat::Int via_series =
                static_cast<mrat::Int>(fp.coeff(2 * n) * mrat::factorial(2 * n));
            mrat::Int via_det = mrat::sharp_path(n);
            std::cout << "P_" << n << " series=" << via_series << " determinant=" << via_det
                      << (via_series == via_det ? "  ok" : "  MISMATCH") << "\n";
            if (via_series != via_det) return kExitCrossCheck;
        }
    }
    if (!any) throw CLI::ValidationError("verify", "nothing to verify: pass --n, --words, or --series");
    std::cout << "all checks passed\n";
    return 0;
}

int run_tables(const std::vector<std::string>& words, const std::string& out_path) {
    Sink sink(out_path);
    sink.out() << "word,count\n";
    for (const auto& w : words)
        sink.out() << w << "," << mrat::count_updown_determinant(w) << "\n";
    return 0;
}

int run_series(const std::string& op, int order, const Range& nrange,
               const std::string& format, const std::string& out_path) {
    Sink sink(out_path);
    if (op == "ratios") {
        Range r = nrange.lo > 0 ? nrange : Range{2, 8};
        sink.out() << "n,sharp_Pn_determinant,sharp_Pn_series,ratio_rn\n";
        auto fp = mrat::fp_series(2 * r.hi);
        for (int n = r.lo; n <= r.hi; ++n) {
            mrat::Int det = mrat::sharp_path(n);
            mrat::Int ser = static_cast<mrat::Int>(fp.coeff(2 * n) * mrat::factorial(2 * n));
            sink.out() << n << "," << det << "," << ser << ","
                       << mrat::asymptotic_ratio(n) << "\n";
        }
        return 0;
    }
    mrat::RationalSeries s(order);
    if (op == "fp") s = mrat::fp_series(order);
    else if (op == "a1") s = mrat::a_series(1, order);
    else if (op == "a3") s = mrat::a_series(3, order);
    else if (op == "sectan") s = mrat::sec_tan_series(order);
    else throw CLI::ValidationError("--op", "unknown series op '" + op + "'");
    if (format == "json") {
        nlohmann::json coeffs = nlohmann::json::array();
        for (int k = 0; k <= order; ++k) {
            mrat::Rat scaled = s.coeff(k) * mrat::factorial(k);
            coeffs.push_back({{"k", k}, {"coeff", rat_str(s.coeff(k))},
                              {"scaled", rat_str(scaled)}});
        }
        sink.out() << nlohmann::json({{"op", op}, {"order", order}, {"coeffs", coeffs}}).dump(2)
                   << "\n";
    } else {
        sink.out() << "k,coeff,scaled_by_factorial\n";
        for (int k = 0; k <= order; ++k)
            sink.out() << k << "," << rat_str(s.coeff(k)) << ","
                       << rat_str(s.coeff(k) * mrat::factorial(k)) << "\n";
    }
    return 0;
}

int run_diagrams(int m, const std::string& out_path) {
    if (m < 1) throw CLI::ValidationError("--m", "m must be >= 1");
    Sink sink(out_path);
    for (const auto& d : mrat::enumerate_diagrams(m)) sink.out() << d.to_text() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of properly labeled chord diagrams"};
    app.require_subcommand(1);

    std::string nrange_s, format = "text", out_path, series_op = "fp";
    int m = 0, order = 12, jobs = default_jobs(), words_len = 0, series_check = 0;
    bool force = false;
    std::vector<std::string> updown_words;

    auto* count = app.add_subcommand("count", "count labelings and components per n");
    count->add_option("--n", nrange_s, "n or range A..B")->required();
    count->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    count->add_option("--out", out_path, "output file (default stdout)");
    count->add_option("--jobs", jobs, "worker threads (env MRAT_JOBS)");
    count->add_flag("--force", force, "allow n > 7");

    auto* verify = app.add_subcommand("verify", "run cross-validation suites");
    verify->add_option("--n", nrange_s, "compare enumeration pipelines over a range");
    verify->add_option("--words", words_len, "determinant vs brute force up to this word length");
    verify->add_option("--series", series_check, "series coefficients vs determinant to this order");
    verify->add_option("--jobs", jobs, "worker threads (env MRAT_JOBS)");
    verify->add_flag("--force", force, "allow n > 7");

    auto* tables = app.add_subcommand("tables", "emit word,count rows");
    tables->add_option("--updown", updown_words, "up-down words over {U,D}")->required();
    tables->add_option("--out", out_path, "output file (default stdout)");

    auto* series = app.add_subcommand("series", "emit series coefficients or the ratio table");
    series->add_option("--op", series_op, "fp | a1 | a3 | sectan | ratios");
    series->add_option("--order", order, "truncation order");
    series->add_option("--n", nrange_s, "range for --op ratios");
    series->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    series->add_option("--out", out_path, "output file (default stdout)");

    auto* diagrams = app.add_subcommand("diagrams", "list canonical diagrams of m chords");
    diagrams->add_option("--m", m, "number of chords")->required();
    diagrams->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count->parsed()) {
            Range r = parse_range(nrange_s);
            check_cap(r.hi, force);
            return run_count(r, format, out_path, jobs);
        }
        if (verify->parsed()) {
            Range r{0, 0};
            if (!nrange_s.empty()) {
                r = parse_range(nrange_s);
                check_cap(r.hi, force);
            }
            return run_verify(r, words_len, series_check, jobs);
        }
        if (tables->parsed()) return run_tables(updown_words, out_path);
        if (series->parsed()) {
            Range r{0, 0};
            if (!nrange_s.empty()) r = parse_range(nrange_s);
            return run_series(series_op, order, r, format, out_path);
        }
        if (diagrams->parsed()) return run_diagrams(m, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const mrat::CrossCheckError& e) {
        std::cerr << "cross-check failed: " << e.what() << "\n";
        return kExitCrossCheck;
    } catch (const std::ios_base::failure& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
