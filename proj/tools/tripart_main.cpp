#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tripart/enumerate.hpp"
#include "tripart/hull.hpp"
#include "tripart/lattice.hpp"
#include "tripart/partition.hpp"
#include "tripart/words.hpp"

using json = nlohmann::json;
using namespace tripart;

namespace {

json partition_json(const Partition& p) { return json(p.parts()); }

json cells_json(const std::vector<Cell>& cells) {
    json out = json::array();
    for (const Cell& c : cells) out.push_back(json::array({c.x, c.y}));
    return out;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int default_threads() {
    if (const char* env = std::getenv("TRIPART_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

void require_word_arg(const std::string& w) {
    for (char c : w)
        if (c != '0' && c != '1') throw parse_error("binary word must consist of 0/1 only");
}

CountSeries count_by_method(const std::string& method, long long n, int threads) {
    if (method == "gf") return count_delta_gf(n);
    if (method == "brute") return count_delta_brute(n);
    return count_delta_dfs(n, threads);
}

void print_series_csv(const CountSeries& s) {
    std::printf("n,count\n");
    for (long long n = 0; n <= s.max_n(); ++n) std::printf("%lld,%lld\n", n, s.at(n));
}

void cmd_check(const std::string& text) {
    Partition p = parse_partition(text);
    TriangularReport rep = check_triangular(p);
    attach_slopes(rep, p);
    json out;
    out["triangular"] = rep.triangular;
    out["removable"] = cells_json(rep.removable);
    out["addable"] = cells_json(rep.addable);
    if (rep.interval) {
        out["t_minus"] = rep.interval->t_minus.str();
        out["t_plus"] = rep.interval->t_plus.str();
    } else if (!p.empty()) {
        SlopeInterval si = slope_interval(p);
        out["t_minus"] = si.t_minus.str();
        out["t_plus"] = si.t_plus.str();
    } else {
        out["t_minus"] = nullptr;
        out["t_plus"] = nullptr;
    }
    if (rep.witness) out["witness"] = rep.witness->str();
    if (rep.triangular) {
        WideTall wt = classify_wide_tall(p);
        out["wide"] = wt.wide;
        out["tall"] = wt.tall;
    }
    emit(out);
}

void cmd_count(long long max_n, const std::string& method, int threads, const std::string& format) {
    CountSeries s = count_by_method(method, max_n, threads);
    if (format == "json") {
        json out;
        out["label"] = s.label;
        out["max_n"] = s.max_n();
        out["values"] = s.values;
        emit(out);
    } else {
        print_series_csv(s);
    }
}

void cmd_classes(long long max_n, const std::string& format, int threads) {
    CountSeries delta = count_delta_dfs(max_n + 1, threads);
    CountSeries delta2 = count_delta2(max_n + 1);
    DerivedClasses cls = derive_class_series(delta, delta2);
    if (format == "json") {
        json rows = json::array();
        for (long long n = 1; n <= max_n; ++n) {
            json row;
            row["n"] = n;
            row["d1"] = cls.d1.at(n);
            row["d2"] = delta2.at(n);
            row["up1"] = cls.up1.at(n);
            row["up2"] = cls.up2.at(n);
            row["d2up2"] = cls.d2up2.at(n);
            rows.push_back(row);
        }
        emit(json{{"rows", rows}});
    } else {
        std::printf("n,d1,d2,up1,up2,d2up2\n");
        for (long long n = 1; n <= max_n; ++n)
            std::printf("%lld,%lld,%lld,%lld,%lld,%lld\n", n, cls.d1.at(n), delta2.at(n),
                        cls.up1.at(n), cls.up2.at(n), cls.d2up2.at(n));
    }
}

void cmd_square(long long max_l, bool cross_check, const std::string& format) {
    std::vector<long long> counts;
    for (long long l = 0; l <= max_l; ++l) {
        long long v = square_count(l);
        if (cross_check) {
            long long rec = count_subpartitions(staircase(l));
            if (rec != v)
                throw std::runtime_error("square cross-check failed at l = " + std::to_string(l));
        }
        counts.push_back(v);
    }
    if (format == "json") {
        emit(json{{"max_l", max_l}, {"values", counts}});
    } else {
        std::printf("l,count\n");
        for (long long l = 0; l <= max_l; ++l)
            std::printf("%lld,%lld\n", l, counts[static_cast<size_t>(l)]);
    }
}

void cmd_rect(long long l) {
    RectCounts rc = rect_counts(l);
    json out;
    out["l"] = l;
    out["width_exact"] = rc.width_exact;
    out["box_l_minus_1"] = rc.minus1 ? json(*rc.minus1) : json(nullptr);
    out["box_l_minus_2"] = rc.minus2 ? json(*rc.minus2) : json(nullptr);
    out["narrow_tall"] = rc.narrow_tall ? json(*rc.narrow_tall) : json(nullptr);
    emit(out);
}

void cmd_bench(long long max_n, int threads) {
    CountSeries delta = count_delta_dfs(max_n, threads);
    std::printf("n,delta,pp_upper,pp_lower,ratio_nlogn\n");
    for (long long n = 1; n <= max_n; ++n) {
        long long upper = coprime_pair_count(2 * n + 1);
        double lower = coprime_pair_count(n / 2) / 3.0;
        double ratio = n > 1 ? delta.at(n) / (n * std::log(static_cast<double>(n))) : 0.0;
        std::printf("%lld,%lld,%lld,%.6f,%.6f\n", n, delta.at(n), upper, lower, ratio);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for triangular partitions (corner cuts)"};
    app.require_subcommand(1);

    // check
    std::string check_text;
    auto* check = app.add_subcommand("check", "triangularity report for a partition");
    check->add_option("partition", check_text,
                      "comma-separated parts, multiplicity form allowed (e.g. 8,6,5,3,1 or 5^3,2)");
    check->callback([&] { cmd_check(check_text); });

    // count
    long long count_n = 50;
    std::string count_method = "dfs";
    std::string count_format = "csv";
    int count_threads = default_threads();
    auto* count = app.add_subcommand("count", "|Delta(n)| for n = 0..N");
    count->add_option("--max-n", count_n, "largest size N")->required();
    count->add_option("--method", count_method, "dfs, gf or brute")
        ->check(CLI::IsMember({"dfs", "gf", "brute"}));
    count->add_option("--threads", count_threads, "worker threads for the dfs engine");
    count->add_option("--format", count_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    count->callback([&] { cmd_count(count_n, count_method, count_threads, count_format); });

    // classes
    long long classes_n = 50;
    std::string classes_format = "csv";
    int classes_threads = default_threads();
    auto* classes = app.add_subcommand("classes", "counts by removable/addable cells");
    classes->add_option("--max-n", classes_n, "largest size N")->required();
    classes->add_option("--threads", classes_threads, "worker threads for the dfs engine");
    classes->add_option("--format", classes_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    classes->callback([&] { cmd_classes(classes_n, classes_format, classes_threads); });

    // square
    long long square_l = 10;
    bool square_cross = false;
    std::string square_format = "csv";
    auto* square = app.add_subcommand("square", "triangular partitions in an l x l square");
    square->add_option("--max-l", square_l, "largest side L")->required();
    square->add_flag("--cross-check", square_cross, "verify against the subpartition recurrence");
    square->add_option("--format", square_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    square->callback([&] { cmd_square(square_l, square_cross, square_format); });

    // rect
    long long rect_l = 0;
    auto* rect = app.add_subcommand("rect", "box counts around the l x l square");
    rect->add_option("--l", rect_l, "side l")->required();
    rect->callback([&] { cmd_rect(rect_l); });

    // bench
    long long bench_n = 1000;
    int bench_threads = default_threads();
    auto* bench = app.add_subcommand("bench", "plot-ready series with coprime-pair bounds");
    bench->add_option("--max-n", bench_n, "largest size N")->required();
    bench->add_option("--threads", bench_threads, "worker threads for the dfs engine");
    bench->callback([&] { cmd_bench(bench_n, bench_threads); });

    // lattice
    auto* lattice = app.add_subcommand("lattice", "triangular Young lattice operations");
    lattice->require_subcommand(1);
    std::string lat_p, lat_q;

    auto* lat_join = lattice->add_subcommand("join", "least upper bound");
    lat_join->add_option("p", lat_p)->required();
    lat_join->add_option("q", lat_q)->required();
    lat_join->callback([&] {
        emit(json{{"join", partition_json(join(parse_partition(lat_p), parse_partition(lat_q)))}});
    });

    auto* lat_meet = lattice->add_subcommand("meet", "greatest lower bound");
    lat_meet->add_option("p", lat_p)->required();
    lat_meet->add_option("q", lat_q)->required();
    lat_meet->callback([&] {
        emit(json{{"meet", partition_json(meet(parse_partition(lat_p), parse_partition(lat_q)))}});
    });

    auto* lat_mobius = lattice->add_subcommand("mobius", "Mobius function mu(p, q)");
    lat_mobius->add_option("p", lat_p)->required();
    lat_mobius->add_option("q", lat_q)->required();
    lat_mobius->callback([&] {
        emit(json{{"mobius", mobius(parse_partition(lat_p), parse_partition(lat_q))}});
    });

    auto* lat_covers = lattice->add_subcommand("covers", "cover relations of a partition");
    lat_covers->add_option("p", lat_p)->required();
    lat_covers->callback([&] {
        Partition p = parse_partition(lat_p);
        json down = json::array(), up = json::array();
        for (const Partition& c : covers_down(p)) down.push_back(partition_json(c));
        for (const Partition& c : covers_up(p)) up.push_back(partition_json(c));
        emit(json{{"down", down}, {"up", up}});
    });

    auto* lat_subcount = lattice->add_subcommand("subcount", "number of triangular subpartitions");
    lat_subcount->add_option("p", lat_p)->required();
    lat_subcount->callback([&] {
        emit(json{{"count", count_subpartitions(parse_partition(lat_p))}});
    });

    // tableaux
    long long tyt1 = 0, tyt2 = 0;
    bool tyt_brute = false;
    auto* tableaux = app.add_subcommand("tableaux", "triangular Young tableaux counts");
    tableaux->add_option("--two-row", "two-row shape t1 t2")
        ->expected(2)
        ->required()
        ->each([&, idx = std::make_shared<int>(0)](const std::string& v) mutable {
            (*idx == 0 ? tyt1 : tyt2) = std::stoll(v);
            ++*idx;
        });
    tableaux->add_flag("--brute", tyt_brute, "count by walking the lattice instead");
    tableaux->callback([&] {
        long long n = tyt_brute ? tyt_count_brute(Partition({tyt1, tyt2}))
                                : tyt_count_two_row(tyt1, tyt2);
        emit(json{{"shape", json::array({tyt1, tyt2})},
                  {"count", n},
                  {"method", tyt_brute ? "brute" : "formula"}});
    });

    // balanced
    auto* balanced = app.add_subcommand("balanced", "balanced-word queries");
    balanced->require_subcommand(1);
    std::string bal_word;
    auto* bal_check = balanced->add_subcommand("check", "balance test via triangularity");
    bal_check->add_option("word", bal_word)->required();
    bal_check->callback([&] {
        require_word_arg(bal_word);
        emit(json{{"word", bal_word}, {"balanced", is_balanced(bal_word)}});
    });

    long long bal_len = 10;
    bool bal_brute = false, bal_empty = false;
    auto* bal_count = balanced->add_subcommand("count", "|B_len| for len = 1..L");
    bal_count->add_option("--max-len", bal_len, "largest length L")->required();
    bal_count->add_flag("--brute", bal_brute, "enumerate instead of the totient formula");
    bal_count->add_flag("--include-empty", bal_empty, "include the len = 0 row");
    bal_count->callback([&] {
        std::printf("len,count\n");
        for (long long l = bal_empty ? 0 : 1; l <= bal_len; ++l) {
            long long c = bal_brute ? static_cast<long long>(balanced_enumerate(l).size())
                                    : balanced_count_formula(l);
            std::printf("%lld,%lld\n", l, c);
        }
    });

    // encode / decode
    auto* encode = app.add_subcommand("encode", "partition-to-word encodings");
    encode->require_subcommand(1);
    std::string enc_part;
    auto* enc_omega = encode->add_subcommand("omega", "balanced word of a wide triangular partition");
    enc_omega->add_option("partition", enc_part)->required();
    enc_omega->callback([&] { emit(json{{"word", omega(parse_partition(enc_part))}}); });
    auto* enc_chi = encode->add_subcommand("chi", "(min, dif, word) triple");
    enc_chi->add_option("partition", enc_part)->required();
    enc_chi->callback([&] {
        ChiTriple t = chi(parse_partition(enc_part));
        emit(json{{"m", t.m}, {"d", t.d}, {"w", t.w}});
    });

    auto* decode = app.add_subcommand("decode", "word-to-partition decodings");
    decode->require_subcommand(1);
    std::string dec_word;
    auto* dec_omega = decode->add_subcommand("omega", "partition of a balanced word starting with 1");
    dec_omega->add_option("word", dec_word)->required();
    dec_omega->callback([&] {
        require_word_arg(dec_word);
        emit(json{{"partition", partition_json(omega_inv(dec_word))}});
    });
    long long dec_m = 0, dec_d = 0;
    auto* dec_chi = decode->add_subcommand("chi", "partition of a (m, d, word) triple");
    dec_chi->add_option("m", dec_m)->required();
    dec_chi->add_option("d", dec_d)->required();
    dec_chi->add_option("word", dec_word)->required();
    dec_chi->callback([&] {
        require_word_arg(dec_word);
        emit(json{{"partition", partition_json(xi({dec_m, dec_d, dec_word}))}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
