#include "gss/io.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gss {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("malformed input: " + what);
}

std::string expect_token(std::istream& is, const char* what) {
    std::string tok;
    if (!(is >> tok)) fail(std::string("missing ") + what);
    return tok;
}

void expect_keyword(std::istream& is, const std::string& kw) {
    if (expect_token(is, kw.c_str()) != kw) fail("expected " + kw);
}

long long expect_int(std::istream& is, const char* what) {
    long long v;
    if (!(is >> v)) fail(std::string("missing ") + what);
    return v;
}

std::vector<fe> read_values(std::istream& is, int count, const char* what) {
    std::vector<fe> v(count);
    for (int i = 0; i < count; ++i)
        v[i] = static_cast<fe>(expect_int(is, what));
    return v;
}

void write_values(std::ostream& os, const std::vector<fe>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? " " : "") << v[i];
}

void write_mat(std::ostream& os, const Mat& M) {
    os << "MAT " << M.rows << " " << M.cols << "\n";
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) os << (j ? " " : "") << M.at(i, j);
        os << "\n";
    }
}

Mat read_mat_body(std::istream& is, Field F) { // the MAT keyword is consumed
    int rows = static_cast<int>(expect_int(is, "row count"));
    int cols = static_cast<int>(expect_int(is, "column count"));
    if (rows < 0 || cols < 0) fail("negative matrix shape");
    Mat M(F, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            long long v = expect_int(is, "matrix entry");
            if (v < 0 || static_cast<std::uint64_t>(v) >= F.size())
                fail("matrix entry out of field range");
            M.at(i, j) = static_cast<fe>(v);
        }
    return M;
}

Mat read_mat(std::istream& is, Field F) {
    expect_keyword(is, "MAT");
    return read_mat_body(is, F);
}

json tower_to_json(const Tower& tw) {
    return json{{"p", tw.p()},       {"e", tw.e()},
                {"m", tw.m()},       {"mid", tw.mid_modulus()},
                {"top", tw.top_modulus()}, {"basis", tw.basis()}};
}

std::shared_ptr<Tower> tower_from_json(const json& j) {
    return std::make_shared<Tower>(
        j.at("p").get<std::uint32_t>(), j.at("e").get<std::uint32_t>(),
        j.at("m").get<std::uint32_t>(), j.at("mid").get<std::vector<fe>>(),
        j.at("top").get<std::vector<fe>>(), j.at("basis").get<std::vector<fe>>());
}

json mat_to_json(const Mat& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < M.cols; ++j) row.push_back(M.at(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"rows", M.rows}, {"cols", M.cols}, {"data", std::move(rows)}};
}

Mat mat_from_json(const json& j, Field F) {
    int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
    Mat M(F, rows, cols);
    const json& data = j.at("data");
    if (static_cast<int>(data.size()) != rows) fail("row count mismatch");
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(data[i].size()) != cols) fail("column count mismatch");
        for (int j2 = 0; j2 < cols; ++j2) M.at(i, j2) = data[i][j2].get<fe>();
    }
    return M;
}

json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    json j;
    is >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << j.dump(2) << "\n";
}

template <typename Saver>
void save_to_file(const std::string& path, Saver&& saver) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    saver(os);
}

} // namespace

void write_tower(std::ostream& os, const Tower& tw) {
    os << "FIELD " << tw.p() << " " << tw.e() << " " << tw.m() << "\n";
    os << "MID ";
    write_values(os, tw.mid_modulus());
    os << "\nTOP ";
    write_values(os, tw.top_modulus());
    os << "\nBASIS ";
    write_values(os, tw.basis());
    os << "\n";
}

std::shared_ptr<Tower> read_tower(std::istream& is) {
    expect_keyword(is, "FIELD");
    auto p = static_cast<std::uint32_t>(expect_int(is, "p"));
    auto e = static_cast<std::uint32_t>(expect_int(is, "e"));
    auto m = static_cast<std::uint32_t>(expect_int(is, "m"));
    expect_keyword(is, "MID");
    std::vector<fe> mid = read_values(is, static_cast<int>(e) + 1, "mid modulus");
    expect_keyword(is, "TOP");
    std::vector<fe> top = read_values(is, static_cast<int>(m) + 1, "top modulus");
    expect_keyword(is, "BASIS");
    std::vector<fe> basis = read_values(is, static_cast<int>(m), "basis");
    return std::make_shared<Tower>(p, e, m, std::move(mid), std::move(top),
                                   std::move(basis));
}

void save_code(std::ostream& os, const Tower& tw, const LinearCode& C) {
    os << "GSS v1 code\n";
    write_tower(os, tw);
    os << "LEVEL " << (C.G.F.lv == Level::Top ? "top" : "mid") << "\n";
    if (C.d)
        os << "D " << *C.d << "\n";
    write_mat(os, C.G);
}

void save_block(std::ostream& os, const Tower& tw, const BlockCode& C) {
    os << "GSS v1 block\n";
    write_tower(os, tw);
    os << "BLOCK " << C.r << " " << C.nblocks << "\n";
    write_mat(os, C.G);
}

void save_grs(std::ostream& os, const GrsSpec& spec) {
    os << "GSS v1 grs\n";
    write_tower(os, *spec.tw);
    os << "GRS " << spec.k << " " << (spec.extended ? 1 : 0) << "\n";
    os << "SUPPORT ";
    write_values(os, spec.support);
    os << "\nMULT ";
    write_values(os, spec.mult);
    os << "\n";
}

void save_family(std::ostream& os, const SubspaceFamily& W) {
    os << "GSS v1 family\n";
    write_tower(os, *W.tw);
    os << "W " << W.r << " " << W.n() << "\n";
    for (const Mat& M : W.bases) write_mat(os, M);
}

Document load_document(std::istream& is) {
    expect_keyword(is, "GSS");
    expect_keyword(is, "v1");
    std::string kind = expect_token(is, "document kind");
    Document doc;
    doc.tower = read_tower(is);
    const Tower& tw = *doc.tower;
    if (kind == "code") {
        doc.kind = Document::Kind::Code;
        expect_keyword(is, "LEVEL");
        std::string lv = expect_token(is, "level name");
        if (lv != "top" && lv != "mid") fail("unknown level " + lv);
        std::optional<int> d;
        std::string next = expect_token(is, "MAT");
        if (next == "D") {
            d = static_cast<int>(expect_int(is, "distance"));
            next = expect_token(is, "MAT");
        }
        if (next != "MAT") fail("expected MAT");
        Field F = lv == "top" ? tw.top() : tw.mid();
        doc.code = make_code_exact(read_mat_body(is, F));
        doc.code.d = d;
    } else if (kind == "block") {
        doc.kind = Document::Kind::Block;
        expect_keyword(is, "BLOCK");
        int r = static_cast<int>(expect_int(is, "block size"));
        int n = static_cast<int>(expect_int(is, "block count"));
        Mat G = read_mat(is, tw.mid());
        if (G.cols != r * n) fail("block shape mismatch");
        doc.block = make_block_code_exact(std::move(G), r);
    } else if (kind == "grs") {
        doc.kind = Document::Kind::Grs;
        expect_keyword(is, "GRS");
        int k = static_cast<int>(expect_int(is, "dimension"));
        int ext = static_cast<int>(expect_int(is, "extended flag"));
        expect_keyword(is, "SUPPORT");
        // the support length is implied by the field when extended, otherwise
        // everything up to MULT belongs to the support
        std::vector<fe> support;
        std::string tok;
        while (is >> tok && tok != "MULT") support.push_back(static_cast<fe>(std::stoll(tok)));
        if (tok != "MULT") fail("expected MULT");
        std::vector<fe> mult = read_values(is, static_cast<int>(support.size()), "multiplier");
        doc.grs = make_grs(tw, std::move(support), std::move(mult), k);
        doc.grs.extended = ext != 0;
    } else if (kind == "family") {
        doc.kind = Document::Kind::Family;
        expect_keyword(is, "W");
        int r = static_cast<int>(expect_int(is, "subspace dimension"));
        int n = static_cast<int>(expect_int(is, "family size"));
        std::vector<Mat> bases;
        bases.reserve(n);
        for (int i = 0; i < n; ++i) {
            Mat M = read_mat(is, tw.mid());
            if (M.rows != r) fail("basis row count mismatch");
            bases.push_back(std::move(M));
        }
        doc.family = make_family(tw, std::move(bases));
    } else {
        fail("unknown document kind " + kind);
    }
    return doc;
}

Document load_document_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return load_document(is);
}

void save_code_file(const std::string& path, const Tower& tw, const LinearCode& C) {
    save_to_file(path, [&](std::ostream& os) { save_code(os, tw, C); });
}

void save_block_file(const std::string& path, const Tower& tw, const BlockCode& C) {
    save_to_file(path, [&](std::ostream& os) { save_block(os, tw, C); });
}

void save_grs_file(const std::string& path, const GrsSpec& spec) {
    save_to_file(path, [&](std::ostream& os) { save_grs(os, spec); });
}

void save_family_file(const std::string& path, const SubspaceFamily& W) {
    save_to_file(path, [&](std::ostream& os) { save_family(os, W); });
}

void save_public_key(const std::string& path, const PublicKey& key) {
    json j{{"type", "gss-public"},
           {"field", tower_to_json(*key.tw)},
           {"n", key.n},
           {"r", key.r},
           {"t", key.t},
           {"pivots", key.pivots},
           {"G", mat_to_json(key.G)}};
    write_json_file(path, j);
}

void save_secret_key(const std::string& path, const SecretKey& key) {
    json bases = json::array();
    for (const Mat& M : key.W.bases) bases.push_back(mat_to_json(M));
    json j{{"type", "gss-secret"},
           {"field", tower_to_json(*key.parent.tw)},
           {"parent",
            {{"support", key.parent.support},
             {"mult", key.parent.mult},
             {"k", key.parent.k},
             {"extended", key.parent.extended}}},
           {"W", {{"r", key.W.r}, {"bases", std::move(bases)}}},
           {"perm", key.perm}};
    write_json_file(path, j);
}

LoadedPublicKey load_public_key(const std::string& path) {
    json j = read_json_file(path);
    if (j.at("type") != "gss-public") fail("not a public key file");
    LoadedPublicKey out;
    out.tower = tower_from_json(j.at("field"));
    out.key.tw = out.tower.get();
    out.key.n = j.at("n").get<int>();
    out.key.r = j.at("r").get<int>();
    out.key.t = j.at("t").get<int>();
    out.key.pivots = j.at("pivots").get<std::vector<int>>();
    out.key.G = mat_from_json(j.at("G"), out.tower->mid());
    return out;
}

LoadedSecretKey load_secret_key(const std::string& path) {
    json j = read_json_file(path);
    if (j.at("type") != "gss-secret") fail("not a secret key file");
    LoadedSecretKey out;
    out.tower = tower_from_json(j.at("field"));
    const json& p = j.at("parent");
    out.key.parent = make_grs(*out.tower, p.at("support").get<std::vector<fe>>(),
                              p.at("mult").get<std::vector<fe>>(), p.at("k").get<int>());
    out.key.parent.extended = p.at("extended").get<bool>();
    const json& w = j.at("W");
    std::vector<Mat> bases;
    for (const json& b : w.at("bases")) bases.push_back(mat_from_json(b, out.tower->mid()));
    out.key.W = make_family(*out.tower, std::move(bases));
    out.key.perm = j.at("perm").get<std::vector<int>>();
    return out;
}

std::vector<fe> parse_word(const std::string& text) {
    std::istringstream is(text);
    std::vector<fe> w;
    std::string tok;
    while (is >> tok) {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0)
            fail("not a field element: " + tok);
        w.push_back(static_cast<fe>(v));
    }
    return w;
}

std::string format_word(const std::vector<fe>& word) {
    std::ostringstream os;
    write_values(os, word);
    return os.str();
}

} // namespace gss
