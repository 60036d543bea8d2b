// Command-line front end: analyze function files, generate corpora, build
// codes from defining sets, emit complements, run filter-generator keystreams
// and Berlekamp-Massey. All reports are JSON with sorted keys so identical
// inputs, flags and seeds give byte-identical output.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <set>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aicode/annihilator.hpp"
#include "aicode/boolfun.hpp"
#include "aicode/bounds.hpp"
#include "aicode/code.hpp"
#include "aicode/complement.hpp"
#include "aicode/field.hpp"
#include "aicode/io.hpp"
#include "aicode/poly.hpp"
#include "aicode/sequence.hpp"

namespace fs = std::filesystem;
using namespace aicode;

namespace {

std::uint64_t fnv1a(const std::vector<std::uint32_t>& table) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint32_t v : table)
        for (int i = 0; i < 4; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    return h;
}

std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("parse error in " + path + ": " + e.what());
    }
    return j;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

long long binom_cap(int n, int d) { return binom_sum(n, 0, d); }

// min over nonempty preimages of the lowest annihilator degree with the zero
// point adjoined; this is the quantity the per-preimage codes can see
std::optional<int> zero_anchored_ai(const VectorialFunction& F) {
    std::optional<int> best;
    for (std::uint32_t b = 0; b < (1u << F.m()); ++b) {
        auto pre = F.preimage(b);
        if (pre.empty()) continue;
        if (std::find(pre.begin(), pre.end(), Point{0}) == pre.end())
            pre.insert(pre.begin(), 0);
        if (pre.size() == (std::size_t{1} << F.n())) continue;
        const int d = lda_of_set(F.n(), pre);
        if (!best || d < *best) best = d;
    }
    return best;
}

struct AnalyzeOptions {
    std::uint64_t budget = 1ull << 24;
    std::uint64_t seed = 1;
    bool ht_coprime_to_order = true;
    bool thm12_strict = true;
    bool timings = false;
    bool distribution = false;
};

json analyze_function(const VectorialFunction& F, const AnalyzeOptions& opt) {
    using clock = std::chrono::steady_clock;
    json rep;
    json timings;
    auto stamp = [&](const char* stage, clock::time_point& last) {
        const auto now = clock::now();
        timings[stage] =
            std::chrono::duration_cast<std::chrono::milliseconds>(now - last).count();
        last = now;
    };
    auto t = clock::now();

    const int n = F.n(), m = F.m();
    rep["field"] = field_to_json(*F.field());
    rep["function"] = {{"hash", hex::from_value(fnv1a(F.table()))},
                       {"n", n},
                       {"m", m},
                       {"degree", F.degree()},
                       {"constant", F.is_constant()}};

    // annihilator side
    const AiResult ai = ai_vectorial(F);
    rep["ai"] = {{"method", ai.degenerate ? "flagged-degenerate" : "exact"},
                 {"value", ai.value},
                 {"degenerate", ai.degenerate}};
    const auto nz = F.nonzero_support();
    std::optional<int> lda0;  // product notion, zero point adjoined
    {
        auto pts = nz;
        if (std::find(pts.begin(), pts.end(), Point{0}) == pts.end())
            pts.insert(pts.begin(), 0);
        if (pts.size() < (std::size_t{1} << n)) lda0 = lda_of_set(n, pts);
    }
    if (nz.size() == (std::size_t{1} << n)) {
        rep["lda_product"] = {{"method", "flagged-degenerate"},
                              {"note", "no point maps to zero"}};
    } else {
        rep["lda_product"] = {{"method", "exact"}, {"value", lda_of_set(n, nz)}};
    }
    stamp("annihilators", t);

    // the code generated by G_F and the per-preimage codes
    std::vector<std::string> internal_failures;
    const CyclicCode gf_code = code_for_function(F);
    {
        const auto dist = min_distance(gf_code, opt.budget, opt.seed);
        const auto wh = min_weight_height(gf_code);
        const auto lcd = is_lcd(gf_code, n <= 4);
        rep["g_f"] = code_to_json(gf_code, dist, wh, lcd, opt.distribution);
    }
    json per_b = json::array();
    bool lcd_all = true;
    bool distance_bound_valid = true;
    std::optional<int> min_wh;
    int skipped_empty = 0;
    for (std::uint32_t b = 0; b < (1u << m); ++b) {
        const auto pre = F.preimage(b);
        if (pre.empty()) {
            ++skipped_empty;
            continue;
        }
        const CyclicCode C = code_from_preimage(F, b);
        const auto dist = min_distance(C, opt.budget, opt.seed);
        const auto wh = min_weight_height(C);
        const auto lcd = is_lcd(C, n <= 4);
        json jb = code_to_json(C, dist, wh, lcd, opt.distribution);
        jb["b"] = hex::from_value(b);
        jb["preimage_size"] = pre.size();
        if (!wh.zero_code) min_wh = min_wh ? std::min(*min_wh, wh.value) : wh.value;
        if (!lcd.lcd) lcd_all = false;
        if (lcd.rank_confirms && !*lcd.rank_confirms)
            internal_failures.push_back("lcd_rank_disagrees");
        if (!dist.zero_code() && dist.lower >= 1) {
            const auto bound =
                lda_lower_from_distance(dist.lower, n, opt.thm12_strict);
            jb["lda_lower"] = {{"value", bound.value},
                               {"delta", bound.delta},
                               {"method", dist.exact() ? "exact" : "bracket"},
                               {"strict_convention", bound.strict_convention}};
            if (pre.size() < (std::size_t{1} << n)) {
                const int lda_b = lda_of_set(n, pre);
                jb["lda"] = lda_b;
                if (dist.exact() && bound.value > lda_b) {
                    // the weak reading can overshoot; the strict one must not
                    if (opt.thm12_strict)
                        internal_failures.push_back("distance_bound_valid");
                    distance_bound_valid = false;
                }
            }
            const auto vb = consecutive_zero_bound(C.gen().root_exponents, n,
                                                   false, opt.ht_coprime_to_order,
                                                   opt.thm12_strict);
            if (vb.applicable)
                jb["v_pattern_lower"] = {{"value", vb.value},
                                         {"delta", vb.delta},
                                         {"k", vb.k},
                                         {"l", vb.pattern_l},
                                         {"step", vb.pattern_step}};
            if (!C.gen().root_exponents.empty()) {
                const auto hb = ht_bound(C.gen().root_exponents, n,
                                         opt.ht_coprime_to_order);
                jb["distance_exceeds"] = hb.value;
                if (dist.exact() && dist.lower <= hb.value)
                    internal_failures.push_back("consecutive_root_bound_valid");
            }
        }
        per_b.push_back(std::move(jb));
    }
    rep["per_b"] = std::move(per_b);
    rep["per_b_skipped_empty"] = skipped_empty;
    stamp("codes", t);

    // complement facts
    {
        const auto pair = complement_vectorial(F);
        const auto back = complement_vectorial(pair.Fc);
        bool pointwise = true;
        const std::uint32_t ones = (1u << m) - 1;
        for (Point x = 0; x < (1u << n); ++x) {
            const std::uint32_t mask = x == 0 ? ones : 0;
            pointwise = pointwise && pair.Fc.eval(x) == (F.eval(x) ^ mask);
        }
        const auto div = complement_generator_division(F);
        json jc;
        jc["involution_ok"] = back.Fc == F;
        jc["pointwise_ok"] = pointwise;
        jc["gf_divides_gfc"] = div.divides;
        jc["quotient_is_one"] = div.quotient == Poly{1};
        jc["membership_ok"] = div.membership_ok;
        const auto nzc = pair.Fc.nonzero_support();
        if (nz.size() < (std::size_t{1} << n) && nzc.size() < (std::size_t{1} << n)) {
            const int a = lda_of_set(n, nz), c = lda_of_set(n, nzc);
            jc["lda_sandwich_ok"] = (c >= a - 1) && (c <= a + 1);
        } else {
            jc["lda_sandwich_ok"] = "flagged-degenerate";
        }
        rep["complement"] = std::move(jc);
        if (!rep["complement"]["involution_ok"].get<bool>() ||
            !rep["complement"]["pointwise_ok"].get<bool>())
            internal_failures.push_back("complement_pointwise");
    }
    stamp("complement", t);

    // spectral immunity through the G_F code
    const auto si = spectral_immunity(F, opt.budget, opt.seed);
    {
        json js;
        if (si.zero_code) {
            js["method"] = "flagged-degenerate";
            js["note"] = "no nonzero annihilating codeword";
        } else {
            js = distance_to_json(si.weight);
            js["ai_cap"] = binom_cap(n, si.ai_value);
            js["within_ai_cap"] = si.ai_bound_holds;
            if (lda0) {
                js["lda_cap"] = binom_cap(n, *lda0);
                if (si.weight.exact())
                    js["within_lda_cap"] = si.weight.upper <= binom_cap(n, *lda0);
            }
        }
        rep["spectral_immunity"] = std::move(js);
    }
    stamp("spectral", t);

    // global bounds
    {
        json jb = json::array();
        const auto up = ai_upper(n, m);
        bool surjective = true;
        for (std::uint32_t b = 0; b < (1u << m); ++b)
            if (F.preimage(b).empty()) {
                surjective = false;
                break;
            }
        jb.push_back({{"kind", "ai_upper"},
                      {"value", up.value},
                      {"applicable", surjective},
                      {"note", surjective ? "" : "not surjective"}});
        if (m == 1 && !nz.empty()) {
            std::vector<int> supp_exps;
            for (Point x : nz)
                if (x != 0)
                    supp_exps.push_back(
                        static_cast<int>(F.field()->log_alpha(x)));
            if (!supp_exps.empty()) {
                const auto cz = consecutive_zero_bound(
                    supp_exps, n, true, opt.ht_coprime_to_order, opt.thm12_strict);
                jb.push_back({{"kind", "lda_complement_lower"},
                              {"value", cz.value},
                              {"applicable", cz.applicable},
                              {"delta", cz.delta},
                              {"k", cz.k}});
                const auto cor =
                    ai_lower_corollary(supp_exps, n, opt.ht_coprime_to_order);
                jb.push_back({{"kind", "ai_lower_corollary"},
                              {"value", cor.value},
                              {"applicable", cor.applicable}});
            }
        }
        rep["bounds"] = std::move(jb);
        if (surjective && !ai.degenerate && ai.value > up.value)
            internal_failures.push_back("ai_upper_surjective");
    }

    // theorem-style checks, reported per function rather than asserted
    {
        json checks;
        bool in_code = true;
        const auto basis = product_annihilators(F, n);
        for (const auto& g : basis.basis)
            if (!gf_code.contains(fold_to_codeword(g.uni()))) in_code = false;
        checks["annihilators_in_code"] = in_code;
        if (!in_code) internal_failures.push_back("annihilators_in_code");
        if (min_wh && !ai.degenerate)
            checks["ai_equals_min_code_weight_height"] = ai.value == *min_wh;
        const auto ai0 = zero_anchored_ai(F);
        if (min_wh && ai0)
            checks["zero_anchored_ai_equals_min_code_weight_height"] =
                *ai0 == *min_wh;
        if (!si.zero_code && si.weight.exact() && !ai.degenerate)
            checks["si_within_ai_binomial_cap"] = si.ai_bound_holds;
        if (!si.zero_code && si.weight.exact() && lda0)
            checks["si_within_lda_binomial_cap"] =
                si.weight.upper <= binom_cap(n, *lda0);
        checks["codes_all_lcd"] = lcd_all;
        checks["distance_bound_valid"] = distance_bound_valid;
        rep["theorem_checks"] = std::move(checks);
    }
    stamp("bounds_and_checks", t);

    if (opt.timings) rep["timings_ms"] = std::move(timings);
    rep["internal_ok"] = internal_failures.empty();
    if (!internal_failures.empty()) rep["internal_failures"] = internal_failures;
    return rep;
}

void print_table(const json& rep, std::ostream& os) {
    os << "function  hash=" << rep["function"]["hash"].get<std::string>()
       << "  n=" << rep["function"]["n"] << "  m=" << rep["function"]["m"]
       << "  degree=" << rep["function"]["degree"] << "\n";
    os << "ai        " << rep["ai"]["value"]
       << (rep["ai"]["degenerate"].get<bool>() ? "  (degenerate)" : "") << "\n";
    if (rep["lda_product"].contains("value"))
        os << "lda       " << rep["lda_product"]["value"] << "\n";
    else
        os << "lda       degenerate\n";
    os << "g_f       deg=" << rep["g_f"]["defining_set"].size()
       << "  lcd=" << rep["g_f"]["lcd"] << "\n";
    for (const auto& jb : rep["per_b"]) {
        os << "  b=" << jb["b"].get<std::string>()
           << "  dim=" << jb["dimension"];
        if (jb["min_distance"].contains("value"))
            os << "  d=" << jb["min_distance"]["value"];
        else if (jb["min_distance"].contains("lower"))
            os << "  d in [" << jb["min_distance"]["lower"] << ","
               << jb["min_distance"]["upper"] << "]";
        else
            os << "  d=undef";
        if (!jb["min_weight_height"].is_null())
            os << "  wh=" << jb["min_weight_height"];
        os << "  lcd=" << jb["lcd"] << "\n";
    }
    if (rep["spectral_immunity"].contains("value"))
        os << "si        " << rep["spectral_immunity"]["value"] << "\n";
    os << "checks    ";
    for (const auto& [k, v] : rep["theorem_checks"].items())
        os << k << "=" << v << " ";
    os << "\n";
}

int cmd_analyze(const std::string& input, const std::string& out,
                const AnalyzeOptions& opt, bool table) {
    const auto F = function_from_json(load_json(input));
    const json rep = analyze_function(F, opt);
    if (table) {
        std::ostringstream os;
        print_table(rep, os);
        if (out.empty()) {
            std::cout << os.str();
        } else {
            std::ofstream o(out);
            o << os.str();
        }
    } else {
        emit(rep, out);
    }
    if (!rep["internal_ok"].get<bool>()) {
        std::cerr << "internal invariant violation:";
        for (const auto& name : rep["internal_failures"])
            std::cerr << " " << name.get<std::string>();
        std::cerr << "\n";
        return 2;
    }
    return 0;
}

int cmd_corpus(int n, int m, int count, std::uint64_t seed,
               const std::string& out_dir, std::uint64_t budget) {
    if (n < 1 || n > Gf2n::kMaxDegree) throw std::runtime_error("corpus: bad n");
    if (m < 1 || m > 16) throw std::runtime_error("corpus: bad m");
    auto field = Gf2n::make(n);
    fs::create_directories(out_dir);
    const bool oracle = n <= 5;
    const bool distances = n <= 3;
    if (!oracle)
        std::cerr << "warning: n > 5, manifest omits oracle fields\n";

    const std::size_t size = std::size_t{1} << n;
    const bool exhaustive = n == 3 && m == 1 && count == 256;
    std::uint64_t s = seed;
    json manifest;
    manifest["n"] = n;
    manifest["m"] = m;
    manifest["count"] = count;
    manifest["seed"] = seed;
    manifest["exhaustive"] = exhaustive;
    json funcs = json::array();
    for (int idx = 0; idx < count; ++idx) {
        std::vector<std::uint32_t> table(size);
        if (exhaustive) {
            for (std::size_t x = 0; x < size; ++x)
                table[x] = (static_cast<std::uint32_t>(idx) >> x) & 1;
        } else {
            for (auto& v : table)
                v = static_cast<std::uint32_t>(splitmix(s) & ((1u << m) - 1));
        }
        const auto F = VectorialFunction::from_table(field, m, table);
        char name[32];
        std::snprintf(name, sizeof name, "func_%04d.json", idx);
        {
            std::ofstream o(fs::path(out_dir) / name);
            o << function_to_json(F, "tt").dump(2) << "\n";
        }
        json entry;
        entry["file"] = name;
        entry["hash"] = hex::from_value(fnv1a(table));
        if (oracle) {
            const auto ai = ai_vectorial(F);
            entry["ai"] = ai.value;
            entry["ai_degenerate"] = ai.degenerate;
            const auto nz = F.nonzero_support();
            if (nz.size() < size)
                entry["lda_product"] = lda_of_set(n, nz);
            else
                entry["lda_product"] = nullptr;
            if (distances) {
                json dists = json::object();
                for (std::uint32_t b = 0; b < (1u << m); ++b) {
                    if (F.preimage(b).empty()) continue;
                    const auto C = code_from_preimage(F, b);
                    const auto d = min_distance(C, budget);
                    dists[hex::from_value(b)] =
                        d.zero_code() ? json(nullptr) : json(d.lower);
                }
                entry["min_distances"] = std::move(dists);
                const auto si = spectral_immunity(F, budget);
                entry["si"] = si.zero_code ? json(nullptr) : json(si.weight.lower);
            }
        }
        funcs.push_back(std::move(entry));
    }
    manifest["functions"] = std::move(funcs);
    std::ofstream o(fs::path(out_dir) / "manifest.json");
    o << manifest.dump(2) << "\n";
    return 0;
}

int cmd_code(int n, const std::string& roots_csv, const std::string& out,
             std::uint64_t budget, bool ht_coprime_order, bool distribution) {
    auto field = Gf2n::make(n);
    std::set<int> exps;
    std::stringstream ss(roots_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const int N = static_cast<int>(field->group_order());
        exps.insert(((std::stoi(tok) % N) + N) % N);
    }
    std::vector<Fe> zs;
    for (int e : exps) zs.push_back(field->alpha_pow(e));
    const auto C = code_from_pointset(field, zs);
    const auto dist = min_distance(C, budget);
    const auto wh = min_weight_height(C);
    const auto lcd = is_lcd(C, n <= 4);
    json j = code_to_json(C, dist, wh, lcd, distribution);
    if (!C.gen().root_exponents.empty() && !C.is_zero_code())
        j["distance_exceeds"] =
            ht_bound(C.gen().root_exponents, n, ht_coprime_order).value;
    j["dual_gen_coeffs"] = json::array();
    for (Fe c : dual_generator(C).coeffs)
        j["dual_gen_coeffs"].push_back(hex::from_value(c));
    emit(j, out);
    return 0;
}

int cmd_complement(const std::string& input, const std::string& out) {
    const auto F = function_from_json(load_json(input));
    const auto pair = complement_vectorial(F);
    emit(function_to_json(pair.Fc, "tt"), out);
    return 0;
}

int cmd_keystream(const std::string& input, std::uint32_t state, int length,
                  const std::string& out) {
    const auto F = function_from_json(load_json(input));
    const auto ks = keystream({F, state}, length);
    json j;
    j["n"] = F.n();
    j["m"] = F.m();
    j["state"] = hex::from_value(state);
    j["length"] = length;
    j["period"] = ks.period;
    if (F.m() == 1) {
        std::string bits;
        for (auto v : ks.symbols) bits.push_back(v ? '1' : '0');
        j["bits"] = bits;
    } else {
        json arr = json::array();
        for (auto v : ks.symbols) arr.push_back(hex::from_value(v));
        j["symbols"] = arr;
    }
    emit(j, out);
    return 0;
}

int cmd_bm(const std::string& input, const std::string& out) {
    // accepts a keystream report with "bits", or a raw text file of 0/1
    std::vector<std::uint8_t> bits;
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open " + input);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    std::string bitstr;
    if (!content.empty() && content[0] == '{') {
        const json j = json::parse(content);
        if (!j.contains("bits"))
            throw std::runtime_error("bm: keystream file has no bit stream");
        bitstr = j.at("bits").get<std::string>();
    } else {
        bitstr = content;
    }
    for (char c : bitstr) {
        if (c == '0') bits.push_back(0);
        else if (c == '1') bits.push_back(1);
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw std::runtime_error("bm: expected a stream of 0/1 characters");
    }
    const auto r = berlekamp_massey(bits);
    json j;
    j["lc"] = r.lc;
    j["poly_bits"] = hex::from_bits(r.min_poly);
    j["window"] = bits.size();
    emit(j, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebraic-attack analysis of Boolean and vectorial functions"};
    app.require_subcommand(1);

    std::string input, out, roots_csv, ht_coprime = "order", thm12 = "strict";
    std::uint64_t budget = 1ull << 24, seed = 1;
    bool table = false, timings = false, distribution = false;
    int n = 3, m = 1, count = 16, length = 14;
    std::uint32_t state = 1;

    auto* analyze = app.add_subcommand("analyze", "full analysis of a function file");
    analyze->add_option("input", input, "function file (JSON)")->required();
    analyze->add_option("--out", out, "write the report here instead of stdout");
    analyze->add_option("--budget", budget, "codeword enumeration budget");
    analyze->add_option("--seed", seed, "seed for sampled searches");
    analyze->add_option("--ht-coprime", ht_coprime,
                        "step coprimality convention: order | n")
        ->check(CLI::IsMember({"order", "n"}));
    analyze->add_option("--thm12-convention", thm12,
                        "binomial sum convention: strict | weak")
        ->check(CLI::IsMember({"strict", "weak"}));
    analyze->add_flag("--table", table, "human-readable summary instead of JSON");
    analyze->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");
    analyze->add_flag("--timings", timings, "include wall times (breaks byte-identical output)");
    analyze->add_flag("--distribution", distribution, "include weight distributions");

    auto* corpus = app.add_subcommand("corpus", "emit reproducible function files + oracle manifest");
    corpus->add_option("--n", n)->required();
    corpus->add_option("--m", m)->required();
    corpus->add_option("--count", count)->required();
    corpus->add_option("--seed", seed);
    corpus->add_option("--out", out, "output directory")->required();
    corpus->add_option("--budget", budget);

    auto* code = app.add_subcommand("code", "cyclic code from a defining exponent set");
    code->add_option("--n", n)->required();
    code->add_option("--roots", roots_csv, "comma-separated exponents of alpha")->required();
    code->add_option("--out", out);
    code->add_option("--budget", budget);
    code->add_option("--ht-coprime", ht_coprime)->check(CLI::IsMember({"order", "n"}));
    code->add_flag("--distribution", distribution);

    auto* complement = app.add_subcommand("complement", "algebraic complement of a function file");
    complement->add_option("input", input)->required();
    complement->add_option("--out", out);

    auto* ks = app.add_subcommand("keystream", "filter-generator keystream");
    ks->add_option("input", input)->required();
    ks->add_option("--state", state, "nonzero initial state");
    ks->add_option("--length", length, "number of symbols");
    ks->add_option("--out", out);

    auto* bm = app.add_subcommand("bm", "linear complexity of a bit stream");
    bm->add_option("input", input, "keystream report or raw 0/1 text")->required();
    bm->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        AnalyzeOptions opt;
        opt.budget = budget;
        opt.seed = seed;
        opt.ht_coprime_to_order = ht_coprime == "order";
        opt.thm12_strict = thm12 == "strict";
        opt.timings = timings;
        opt.distribution = distribution;
        if (analyze->parsed()) return cmd_analyze(input, out, opt, table);
        if (corpus->parsed()) return cmd_corpus(n, m, count, seed, out, budget);
        if (code->parsed())
            return cmd_code(n, roots_csv, out, budget, opt.ht_coprime_to_order,
                            distribution);
        if (complement->parsed()) return cmd_complement(input, out);
        if (ks->parsed()) return cmd_keystream(input, state, length, out);
        if (bm->parsed()) return cmd_bm(input, out);
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
