#include "gss/cli.hpp"

#include "gss/blocks.hpp"
#include "gss/codes.hpp"
#include "gss/crypto.hpp"
#include "gss/gss.hpp"
#include "gss/io.hpp"
#include "gss/repro.hpp"
#include "gss/rng.hpp"
#include "gss/rs.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gss {

namespace {

using nlohmann::json;

[[noreturn]] void die(const std::string& msg) { throw std::runtime_error(msg); }

std::vector<long long> parse_csv(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            die(std::string(what) + ": bad entry '" + item + "'");
        }
    }
    if (out.empty()) die(std::string(what) + ": empty list");
    return out;
}

std::vector<fe> parse_csv_fe(const std::string& text, const Field& F,
                             const char* what) {
    std::vector<fe> out;
    for (long long v : parse_csv(text, what)) {
        if (v < 0 || v >= static_cast<long long>(F.size()))
            die(std::string(what) + ": entry " + std::to_string(v) +
                " outside GF(" + std::to_string(F.size()) + ")");
        out.push_back(static_cast<fe>(v));
    }
    return out;
}

std::vector<int> parse_csv_int(const std::string& text, const char* what) {
    std::vector<int> out;
    for (long long v : parse_csv(text, what)) out.push_back(static_cast<int>(v));
    return out;
}

void check_word(const std::vector<fe>& w, const Field& F, int n, const char* what) {
    if (static_cast<int>(w.size()) != n)
        die(std::string(what) + ": expected " + std::to_string(n) +
            " symbols, got " + std::to_string(w.size()));
    for (fe v : w)
        if (v >= F.size())
            die(std::string(what) + ": symbol " + std::to_string(v) +
                " outside GF(" + std::to_string(F.size()) + ")");
}

struct TowerArgs {
    std::uint64_t q = 0;
    std::uint32_t e = 1;
};

void add_tower_flags(CLI::App* cmd, TowerArgs& ta) {
    cmd->add_option("--q", ta.q, "field size of the code (a prime power)")
        ->required();
    cmd->add_option("--e", ta.e,
                    "degree of the middle field over the prime field");
}

Tower build_tower(const TowerArgs& ta) {
    if (ta.q < 2) die("--q must be at least 2");
    std::uint64_t p = 2;
    while (ta.q % p != 0) {
        ++p;
        if (p * p > ta.q) {
            p = ta.q;
            break;
        }
    }
    std::uint32_t deg = 0;
    std::uint64_t v = ta.q;
    while (v % p == 0) {
        v /= p;
        ++deg;
    }
    if (v != 1) die("--q must be a prime power");
    if (ta.e == 0 || deg % ta.e != 0)
        die("--e must divide the extension degree of --q");
    return Tower(static_cast<std::uint32_t>(p), ta.e, deg / ta.e);
}

void check_same_tower(const Tower& a, const Tower& b, const char* what) {
    if (a.p() != b.p() || a.e() != b.e() || a.m() != b.m() ||
        a.mid_modulus() != b.mid_modulus() ||
        a.top_modulus() != b.top_modulus() || a.basis() != b.basis())
        die(std::string(what) + ": the two files use different field towers");
}

LinearCode doc_code(const Document& doc) {
    if (doc.kind == Document::Kind::Grs) return rs_generator(doc.grs);
    if (doc.kind == Document::Kind::Code) return doc.code;
    die("expected a code or GRS document");
}

void emit_code(const std::string& out, const Tower& tw, const LinearCode& C) {
    if (out.empty() || out == "-")
        save_code(std::cout, tw, C);
    else
        save_code_file(out, tw, C);
}

void emit_block(const std::string& out, const Tower& tw, const BlockCode& C) {
    if (out.empty() || out == "-")
        save_block(std::cout, tw, C);
    else
        save_block_file(out, tw, C);
}

void emit_grs(const std::string& out, const GrsSpec& spec) {
    if (out.empty() || out == "-")
        save_grs(std::cout, spec);
    else
        save_grs_file(out, spec);
}

std::string fmt_kb2(std::uint64_t bits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f",
                  static_cast<double>(bits) / 8.0 / 1024.0);
    return buf;
}

const char* distance_label(DistanceKind k) {
    switch (k) {
    case DistanceKind::Exact: return "exact";
    case DistanceKind::LowerBound: return "lower bound";
    case DistanceKind::UpperBound: return "upper bound";
    }
    return "?";
}

int cmd_field(const TowerArgs& ta, bool json_out) {
    Tower tw = build_tower(ta);
    auto vec = [](const std::vector<fe>& v) {
        json a = json::array();
        for (fe x : v) a.push_back(x);
        return a;
    };
    if (json_out) {
        json j = {{"p", tw.p()},          {"e", tw.e()},
                  {"m", tw.m()},          {"q", tw.q()},
                  {"size", tw.top_size()}, {"alpha", tw.alpha()},
                  {"mid_modulus", vec(tw.mid_modulus())},
                  {"top_modulus", vec(tw.top_modulus())},
                  {"basis", vec(tw.basis())}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "tower GF(" << tw.p() << ") <= GF(" << tw.q() << ") <= GF("
              << tw.top_size() << ")\n";
    std::cout << "p " << tw.p() << "  e " << tw.e() << "  m " << tw.m() << "\n";
    auto line = [](const char* name, const std::vector<fe>& v) {
        std::cout << name;
        for (fe x : v) std::cout << " " << x;
        std::cout << "\n";
    };
    line("mid modulus ", tw.mid_modulus());
    line("top modulus ", tw.top_modulus());
    line("basis       ", tw.basis());
    std::cout << "alpha       " << tw.alpha() << "\n";
    return 0;
}

int cmd_analyze(const std::string& in, const DistanceBudget& budget,
                bool json_out) {
    Document doc = load_document_file(in);
    json j;
    std::ostringstream txt;
    switch (doc.kind) {
    case Document::Kind::Grs: {
        const GrsSpec& s = doc.grs;
        txt << "GRS code over GF(" << s.field().size() << "): [" << s.n()
            << "," << s.k << "," << s.d() << "]  distance exact (MDS)\n"
            << "decoding radius " << s.t() << "\n";
        j = {{"kind", "grs"},       {"field", s.field().size()},
             {"n", s.n()},          {"k", s.k},
             {"d", s.d()},          {"distance", "exact"},
             {"method", "mds"},     {"radius", s.t()}};
        break;
    }
    case Document::Kind::Code: {
        const LinearCode& C = doc.code;
        DistanceReport rep = min_distance(C, budget);
        txt << "linear code over GF(" << C.G.F.size() << "): n=" << C.n()
            << " k=" << C.k() << "\n"
            << "d " << (rep.kind == DistanceKind::Exact ? "= " : rep.kind == DistanceKind::LowerBound ? ">= " : "<= ")
            << rep.d << "  " << distance_label(rep.kind) << " (" << rep.method
            << ")";
        if (rep.kind == DistanceKind::UpperBound)
            txt << ", weights below " << rep.verified_lower << " excluded";
        txt << "\n";
        j = {{"kind", "code"},
             {"field", C.G.F.size()},
             {"n", C.n()},
             {"k", C.k()},
             {"d", rep.d},
             {"distance", distance_label(rep.kind)},
             {"method", rep.method},
             {"verified_lower", rep.verified_lower}};
        break;
    }
    case Document::Kind::Block: {
        const BlockCode& B = doc.block;
        DistanceReport rep = block_min_distance(B, budget);
        auto [pn, pd] = B.pseudo_dim();
        txt << "block code over GF(" << B.G.F.size() << "): " << B.nblocks
            << " blocks of size " << B.r << ", dimension " << B.kq() << "\n"
            << "pseudo-dimension " << pn;
        if (pd != 1) txt << "/" << pd;
        txt << "\nblock distance "
            << (rep.kind == DistanceKind::Exact ? "= " : rep.kind == DistanceKind::LowerBound ? ">= " : "<= ")
            << rep.d << "  " << distance_label(rep.kind) << " (" << rep.method
            << ")";
        if (rep.kind == DistanceKind::UpperBound)
            txt << ", weights below " << rep.verified_lower << " excluded";
        txt << "\n";
        j = {{"kind", "block"},
             {"field", B.G.F.size()},
             {"blocks", B.nblocks},
             {"r", B.r},
             {"dimension", B.kq()},
             {"pseudo_dimension", {{"num", pn}, {"den", pd}}},
             {"d", rep.d},
             {"distance", distance_label(rep.kind)},
             {"method", rep.method},
             {"verified_lower", rep.verified_lower}};
        break;
    }
    case Document::Kind::Family: {
        const SubspaceFamily& W = doc.family;
        txt << "subspace family over GF(" << W.tw->q() << ") in GF("
            << W.tw->top_size() << "): " << W.n() << " subspaces of rank "
            << W.r << "\n";
        j = {{"kind", "family"},
             {"field", W.tw->top_size()},
             {"n", W.n()},
             {"r", W.r}};
        break;
    }
    }
    if (json_out)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << txt.str();
    return 0;
}

int cmd_decode(const std::string& grs_path, const std::string& family_path,
               const std::string& word_text, bool json_out) {
    Document pd = load_document_file(grs_path);
    if (pd.kind != Document::Kind::Grs)
        die("decode: --grs must name a GRS document");
    std::vector<fe> word = parse_word(word_text);

    if (family_path.empty()) {
        const GrsSpec& spec = pd.grs;
        check_word(word, spec.field(), spec.n(), "decode word");
        DecodeResult res = decode(spec, word);
        if (json_out) {
            json j = {{"ok", res.ok}};
            if (res.ok) {
                j["codeword"] = res.codeword;
                json errs = json::array();
                for (std::size_t i = 0; i < res.error_positions.size(); ++i)
                    errs.push_back({{"position", res.error_positions[i] + 1},
                                    {"value", res.error_values[i]}});
                j["errors"] = errs;
            } else {
                j["reason"] = res.reason;
            }
            std::cout << j.dump(2) << "\n";
            return res.ok ? 0 : 1;
        }
        if (!res.ok) {
            std::cout << "decoding failed: " << res.reason << "\n";
            return 1;
        }
        std::cout << "codeword " << format_word(res.codeword) << "\n";
        if (res.error_positions.empty()) {
            std::cout << "no errors\n";
        } else {
            std::cout << res.error_positions.size() << " error(s) at position(s)";
            for (int p : res.error_positions) std::cout << " " << (p + 1);
            std::cout << "\n";
        }
        return 0;
    }

    Document fd = load_document_file(family_path);
    if (fd.kind != Document::Kind::Family)
        die("decode: --family must name a family document");
    check_same_tower(*pd.tower, *fd.tower, "decode");
    // Rebind the parent onto the family's tower so one tower serves the whole
    // computation.
    GrsSpec parent{fd.tower.get(), pd.grs.support, pd.grs.mult, pd.grs.k,
                   pd.grs.extended};
    const SubspaceFamily& W = fd.family;
    if (parent.n() != W.n()) die("decode: family length differs from the code");
    check_word(word, fd.tower->mid(), W.n() * W.r, "decode word");
    GssDecodeResult res = gss_decode(parent, W, word);
    if (json_out) {
        json j = {{"ok", res.ok}, {"outside_family", res.outside_family}};
        if (res.ok) {
            j["word"] = res.word;
            j["parent_codeword"] = res.parent_codeword;
        } else {
            j["reason"] = res.reason;
        }
        std::cout << j.dump(2) << "\n";
        return res.ok ? 0 : 1;
    }
    if (!res.ok) {
        std::cout << "decoding failed: " << res.reason << "\n";
        return 1;
    }
    std::cout << "word     " << format_word(res.word) << "\n";
    std::cout << "codeword " << format_word(res.parent_codeword) << "\n";
    return 0;
}

int cmd_reproduce(bool quick, const std::string& section, std::uint64_t seed,
                  bool json_out) {
    ReproOptions opt;
    opt.quick = quick;
    opt.seed = seed;
    opt.section = section;
    std::vector<ReproClaim> claims = run_reproduction(opt);
    if (claims.empty() && !section.empty())
        die("unknown section " + section);
    if (json_out) {
        json arr = json::array();
        for (const ReproClaim& c : claims) {
            json j = {{"id", c.id},
                      {"anchor", c.anchor},
                      {"computed", c.computed},
                      {"expected", c.expected},
                      {"status", c.status}};
            if (!c.note.empty()) j["note"] = c.note;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        int match = 0, bound = 0, typo = 0, failed = 0;
        for (const ReproClaim& c : claims) {
            if (c.status == "match") ++match;
            else if (c.status == "bound-satisfied") ++bound;
            else if (c.status == "typo-noted") ++typo;
            else ++failed;
            std::printf("%-15s %s  (%s)\n", c.status.c_str(), c.id.c_str(),
                        c.anchor.c_str());
            std::printf("    computed: %s\n", c.computed.c_str());
            std::printf("    expected: %s\n", c.expected.c_str());
            if (!c.note.empty()) std::printf("    note:     %s\n", c.note.c_str());
        }
        std::printf("\n%zu claims: %d match, %d bound-satisfied, %d typo-noted, %d failed\n",
                    claims.size(), match, bound, typo, failed);
    }
    return reproduction_ok(claims) ? 0 : 1;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"subfield and subspace subcodes of generalized Reed-Solomon codes"};
    app.require_subcommand(1);

    bool json_out = false;
    std::uint64_t seed = 0;
    int threads = 1;
    app.add_flag("--json", json_out, "machine-readable output");
    app.add_option("--seed", seed, "seed for every random choice (default 0)");
    app.add_option("--threads", threads, "worker hint for long searches");

    int rc = 0;

    // field
    auto* c_field = app.add_subcommand("field", "describe a field tower");
    c_field->fallthrough();
    auto field_args = std::make_shared<TowerArgs>();
    add_tower_flags(c_field, *field_args);
    c_field->callback([&rc, &json_out, field_args] {
        rc = cmd_field(*field_args, json_out);
    });

    // construct
    auto* c_construct =
        app.add_subcommand("construct", "build codes and write them to files");
    c_construct->require_subcommand(1);
    c_construct->fallthrough();

    struct ConstructArgs {
        TowerArgs tower;
        int n = 0, k = 0, r = 0;
        bool extended = false;
        std::string support, mult, parent, u, y, pi, V, W, out;
    };
    auto ca = std::make_shared<ConstructArgs>();

    auto* c_rs = c_construct->add_subcommand(
        "rs", "Reed-Solomon code on consecutive powers of alpha");
    c_rs->fallthrough();
    add_tower_flags(c_rs, ca->tower);
    c_rs->add_option("--n", ca->n, "length")->required();
    c_rs->add_option("--k", ca->k, "dimension")->required();
    c_rs->add_option("--out", ca->out, "output file (default stdout)");
    c_rs->callback([&rc, ca] {
        Tower tw = build_tower(ca->tower);
        emit_grs(ca->out, make_rs(tw, ca->n, ca->k));
        rc = 0;
    });

    auto* c_grs = c_construct->add_subcommand(
        "grs", "generalized Reed-Solomon code from support and multipliers");
    c_grs->fallthrough();
    add_tower_flags(c_grs, ca->tower);
    c_grs->add_option("--k", ca->k, "dimension")->required();
    c_grs->add_option("--support", ca->support, "comma-separated evaluation points");
    c_grs->add_option("--mult", ca->mult, "comma-separated column multipliers");
    c_grs->add_flag("--extended", ca->extended,
                    "evaluate at every field element (ignores --support)");
    c_grs->add_option("--out", ca->out, "output file (default stdout)");
    c_grs->callback([&rc, ca] {
        Tower tw = build_tower(ca->tower);
        if (ca->extended) {
            GrsSpec spec = make_extended_rs(tw, ca->k);
            if (!ca->mult.empty())
                spec = make_grs(tw, spec.support,
                                parse_csv_fe(ca->mult, tw.top(), "--mult"),
                                ca->k);
            emit_grs(ca->out, spec);
        } else {
            if (ca->support.empty())
                die("construct grs: --support or --extended is required");
            std::vector<fe> sup = parse_csv_fe(ca->support, tw.top(), "--support");
            std::vector<fe> mul;
            if (ca->mult.empty())
                mul.assign(sup.size(), 1);
            else
                mul = parse_csv_fe(ca->mult, tw.top(), "--mult");
            emit_grs(ca->out, make_grs(tw, sup, mul, ca->k));
        }
        rc = 0;
    });

    auto* c_image = c_construct->add_subcommand(
        "image", "expansion of a code over the middle field, as a block code");
    c_image->fallthrough();
    c_image->add_option("--in", ca->parent, "code or GRS document")->required();
    c_image->add_option("--out", ca->out, "output file (default stdout)");
    c_image->callback([&rc, ca] {
        Document doc = load_document_file(ca->parent);
        emit_block(ca->out, *doc.tower, q_ary_image(doc_code(doc)));
        rc = 0;
    });

    auto* c_sfsc = c_construct->add_subcommand(
        "sfsc", "subfield subcode over the middle field");
    c_sfsc->fallthrough();
    c_sfsc->add_option("--in", ca->parent, "code or GRS document")->required();
    c_sfsc->add_option("--out", ca->out, "output file (default stdout)");
    c_sfsc->callback([&rc, ca] {
        Document doc = load_document_file(ca->parent);
        emit_code(ca->out, *doc.tower, subfield_subcode(doc_code(doc)));
        rc = 0;
    });

    auto* c_gss = c_construct->add_subcommand(
        "gss", "generalized subfield subcode (one component per position)");
    c_gss->fallthrough();
    c_gss->add_option("--parent", ca->parent, "code or GRS document")->required();
    c_gss->add_option("--u", ca->u,
                      "basis component per position, 1-based, comma-separated");
    c_gss->add_option("--y", ca->y,
                      "nonzero field element per position, comma-separated");
    c_gss->add_option("--pi", ca->pi,
                      "block permutation for --y (1-based targets)");
    c_gss->add_option("--out", ca->out, "output file (default stdout)");
    c_gss->callback([&rc, ca] {
        Document doc = load_document_file(ca->parent);
        LinearCode C = doc_code(doc);
        if (ca->u.empty() == ca->y.empty())
            die("construct gss: exactly one of --u and --y is required");
        if (!ca->u.empty()) {
            if (!ca->pi.empty()) die("construct gss: --pi requires --y");
            std::vector<int> u = parse_csv_int(ca->u, "--u");
            emit_code(ca->out, *doc.tower, s_u(C, u));
        } else {
            std::vector<fe> y = parse_csv_fe(ca->y, doc.tower->top(), "--y");
            std::vector<int> pi(y.size());
            if (ca->pi.empty()) {
                std::iota(pi.begin(), pi.end(), 0);
            } else {
                pi = parse_csv_int(ca->pi, "--pi");
                for (int& v : pi) --v;
            }
            emit_code(ca->out, *doc.tower, gss_algorithm3(C, pi, y));
        }
        rc = 0;
    });

    auto* c_ssc = c_construct->add_subcommand(
        "ssc", "subspace subcode for one subspace used at every position");
    c_ssc->fallthrough();
    c_ssc->add_option("--parent", ca->parent, "code or GRS document")->required();
    c_ssc->add_option("--V", ca->V,
                      "subspace basis rows over the middle field, e.g. 1,0,0;0,1,0")
        ->required();
    c_ssc->add_option("--out", ca->out, "output file (default stdout)");
    c_ssc->callback([&rc, ca] {
        Document doc = load_document_file(ca->parent);
        LinearCode C = doc_code(doc);
        std::vector<std::vector<fe>> rows;
        std::string item;
        std::stringstream ss(ca->V);
        while (std::getline(ss, item, ';'))
            rows.push_back(parse_csv_fe(item, doc.tower->mid(), "--V"));
        if (rows.empty()) die("--V: empty basis");
        Mat V = Mat::from_rows(doc.tower->mid(), rows);
        emit_block(ca->out, *doc.tower, subspace_subcode(C, V));
        rc = 0;
    });

    auto* c_gssw = c_construct->add_subcommand(
        "gssw", "subspace subcode for a per-position family");
    c_gssw->fallthrough();
    c_gssw->add_option("--parent", ca->parent, "code or GRS document")->required();
    c_gssw->add_option("--W", ca->W, "family document")->required();
    c_gssw->add_option("--out", ca->out, "output file (default stdout)");
    c_gssw->callback([&rc, ca] {
        Document pd = load_document_file(ca->parent);
        Document fd = load_document_file(ca->W);
        if (fd.kind != Document::Kind::Family)
            die("construct gssw: --W must name a family document");
        check_same_tower(*pd.tower, *fd.tower, "construct gssw");
        Document rebased = pd;
        if (pd.kind == Document::Kind::Grs) {
            rebased.grs.tw = fd.tower.get();
            emit_block(ca->out, *fd.tower,
                       gss_w(rs_generator(rebased.grs), fd.family));
        } else {
            // expansion coordinates only depend on the tower parameters,
            // which check_same_tower just pinned down
            emit_block(ca->out, *fd.tower, gss_w(doc_code(pd), fd.family));
        }
        rc = 0;
    });

    // analyze
    auto* c_analyze = app.add_subcommand(
        "analyze", "report parameters and (bounded) minimum distance");
    c_analyze->fallthrough();
    struct AnalyzeArgs {
        std::string in;
        std::uint64_t enum_cap = 1ull << 24;
        int wmax = 14;
        long long budget_ms = 60000;
    };
    auto aa = std::make_shared<AnalyzeArgs>();
    c_analyze->add_option("--in", aa->in, "code, block, GRS, or family document")
        ->required();
    c_analyze->add_option("--budget-ms", aa->budget_ms,
                          "time budget for distance searches");
    c_analyze->add_option("--enum-cap", aa->enum_cap,
                          "full-enumeration cap on q^k");
    c_analyze->add_option("--support-wmax", aa->wmax,
                          "weight cap for the support search");
    c_analyze->callback([&rc, &json_out, &seed, &threads, aa] {
        DistanceBudget budget;
        budget.max_enumeration = aa->enum_cap;
        budget.support_weight_max = aa->wmax;
        budget.time_ms = aa->budget_ms;
        budget.seed = seed;
        budget.threads = threads;
        rc = cmd_analyze(aa->in, budget, json_out);
    });

    // decode
    auto* c_decode = app.add_subcommand(
        "decode", "bounded-distance decoding, plain or through a family");
    c_decode->fallthrough();
    struct DecodeArgs {
        std::string grs, family, word;
    };
    auto da = std::make_shared<DecodeArgs>();
    c_decode->add_option("--grs", da->grs, "GRS document")->required();
    c_decode->add_option("--family", da->family,
                         "family document (decode a block word)");
    c_decode->add_option("--word", da->word, "received word, space-separated")
        ->required();
    c_decode->callback([&rc, &json_out, da] {
        rc = cmd_decode(da->grs, da->family, da->word, json_out);
    });

    // crypto
    auto* c_crypto =
        app.add_subcommand("crypto", "McEliece-style demonstrator");
    c_crypto->require_subcommand(1);
    c_crypto->fallthrough();

    struct CryptoArgs {
        std::string parent, pub, sec, message, word, out;
        int r = 1, t = -1;
        int n = 0, k = 0, wf_t = 0;
        std::uint64_t kq = 0, nq = 0;
        int bits = 1;
    };
    auto ka = std::make_shared<CryptoArgs>();

    auto* c_keygen = c_crypto->add_subcommand("keygen", "generate a key pair");
    c_keygen->fallthrough();
    c_keygen->add_option("--parent", ka->parent, "GRS document")->required();
    c_keygen->add_option("--r", ka->r, "subspace rank")->required();
    c_keygen->add_option("--pub", ka->pub, "public key output file")->required();
    c_keygen->add_option("--sec", ka->sec, "secret key output file")->required();
    c_keygen->callback([&rc, &seed, ka] {
        Document doc = load_document_file(ka->parent);
        if (doc.kind != Document::Kind::Grs)
            die("crypto keygen: --parent must name a GRS document");
        KeyPair kp = keygen(doc.grs, ka->r, seed);
        save_public_key(ka->pub, kp.pub);
        save_secret_key(ka->sec, kp.sec);
        std::cout << "public code: " << kp.pub.n << " blocks of size "
                  << kp.pub.r << ", dimension " << kp.pub.G.rows
                  << ", corrects " << kp.pub.t << " block error(s)\n";
        rc = 0;
    });

    auto* c_encrypt = c_crypto->add_subcommand("encrypt", "encrypt a message");
    c_encrypt->fallthrough();
    c_encrypt->add_option("--pub", ka->pub, "public key file")->required();
    c_encrypt->add_option("--message", ka->message,
                          "message symbols, space-separated")
        ->required();
    c_encrypt->add_option("--t", ka->t, "error weight override");
    c_encrypt->callback([&rc, &seed, ka] {
        LoadedPublicKey pk = load_public_key(ka->pub);
        std::vector<fe> msg = parse_word(ka->message);
        check_word(msg, pk.tower->mid(), pk.key.G.rows, "message");
        Rng rng(seed);
        std::vector<fe> ct = encrypt(pk.key, msg, rng, ka->t);
        std::cout << format_word(ct) << "\n";
        rc = 0;
    });

    auto* c_decrypt = c_crypto->add_subcommand("decrypt", "decrypt a ciphertext");
    c_decrypt->fallthrough();
    c_decrypt->add_option("--sec", ka->sec, "secret key file")->required();
    c_decrypt->add_option("--pub", ka->pub, "public key file")->required();
    c_decrypt->add_option("--word", ka->word, "ciphertext, space-separated")
        ->required();
    c_decrypt->callback([&rc, ka] {
        LoadedSecretKey sk = load_secret_key(ka->sec);
        LoadedPublicKey pk = load_public_key(ka->pub);
        check_same_tower(*sk.tower, *pk.tower, "crypto decrypt");
        std::vector<fe> ct = parse_word(ka->word);
        check_word(ct, sk.tower->mid(), pk.key.n * pk.key.r, "ciphertext");
        DecryptResult res = decrypt(sk.key, pk.key, ct);
        if (!res.ok) {
            std::cout << "decryption failed: " << res.reason << "\n";
            rc = 1;
            return;
        }
        std::cout << format_word(res.message) << "\n";
        rc = 0;
    });

    auto* c_estimate = c_crypto->add_subcommand(
        "estimate", "workfactor and key-size estimates");
    c_estimate->fallthrough();
    c_estimate->add_option("--n", ka->n, "code length")->required();
    c_estimate->add_option("--k", ka->k, "code dimension")->required();
    c_estimate->add_option("--t", ka->wf_t, "correctable errors")->required();
    c_estimate->add_option("--kq", ka->kq, "systematic generator rows");
    c_estimate->add_option("--nq", ka->nq, "systematic generator columns");
    c_estimate->add_option("--bits", ka->bits, "bits per stored symbol");
    c_estimate->callback([&rc, &json_out, ka] {
        double lg = workfactor_log2(ka->n, ka->k, ka->wf_t);
        json j = {{"workfactor_log2", lg}};
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f", lg);
        std::string txt = "log2 workfactor " + std::string(buf);
        if (ka->kq) {
            if (!ka->nq) die("crypto estimate: --kq requires --nq");
            std::uint64_t bits = keysize_systematic(ka->kq, ka->nq, ka->bits);
            j["key_bits"] = bits;
            j["key_kb"] = fmt_kb2(bits);
            txt += "\nkey " + std::to_string(bits) + " bits (" + fmt_kb2(bits) +
                   " KB)";
        }
        if (json_out)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << txt << "\n";
        rc = 0;
    });

    // reproduce-paper
    auto* c_repro = app.add_subcommand(
        "reproduce-paper",
        "recompute the documented worked examples and parameter claims");
    c_repro->fallthrough();
    bool quick = false;
    std::string section;
    c_repro->add_flag("--quick", quick, "skip the long randomized distance search");
    c_repro->add_option("--section", section,
                        "run one section only (example1, block-example, derived, "
                        "workfactor, keysize, duality, equivalence, decode, crypto)");
    c_repro->callback([&rc, &json_out, &seed, &quick, &section] {
        rc = cmd_reproduce(quick, section, seed, json_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

} // namespace gss
