#include "gss/rs.hpp"

#include <algorithm>
#include <stdexcept>

namespace gss {

namespace {

void validate(const GrsSpec& spec) {
    if (!spec.tw) throw std::invalid_argument("missing field tower");
    const int n = spec.n();
    if (n == 0 || spec.k <= 0 || spec.k > n)
        throw std::invalid_argument("need 0 < k <= n");
    if (spec.mult.size() != spec.support.size())
        throw std::invalid_argument("support and multiplier lengths differ");
    std::vector<fe> s = spec.support;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("support points must be distinct");
    for (fe v : spec.mult)
        if (v == 0) throw std::invalid_argument("multipliers must be nonzero");
}

fe poly_eval(const Field& F, const std::vector<fe>& p, fe x) {
    fe y = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) y = F.add(F.mul(y, x), *it);
    return y;
}

std::vector<fe> poly_deriv(const Field& F, const std::vector<fe>& p) {
    const int ch = static_cast<int>(F.characteristic());
    std::vector<fe> d;
    for (std::size_t i = 1; i < p.size(); ++i) {
        fe c = 0;
        for (int rep = 0; rep < static_cast<int>(i) % ch; ++rep) c = F.add(c, p[i]);
        d.push_back(c);
    }
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

int poly_deg(const std::vector<fe>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i]) return i;
    return -1;
}

// Berlekamp-Massey: shortest LFSR generating the syndrome sequence.
std::vector<fe> berlekamp_massey(const Field& F, const std::vector<fe>& s, int& L_out) {
    std::vector<fe> C = {1}, B = {1};
    int L = 0, shift = 1;
    fe b = 1;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        fe delta = s[i];
        for (int j = 1; j <= L && j < static_cast<int>(C.size()); ++j)
            delta = F.add(delta, F.mul(C[j], s[i - j]));
        if (delta == 0) {
            ++shift;
            continue;
        }
        fe coef = F.div(delta, b);
        std::vector<fe> prev = C;
        if (C.size() < B.size() + shift) C.resize(B.size() + shift, 0);
        for (std::size_t j = 0; j < B.size(); ++j)
            C[j + shift] = F.sub(C[j + shift], F.mul(coef, B[j]));
        if (2 * L <= i) {
            L = i + 1 - L;
            B = std::move(prev);
            b = delta;
            shift = 1;
        } else {
            ++shift;
        }
    }
    L_out = L;
    return C;
}

struct Candidate {
    bool ok = false;
    std::vector<int> positions;
    std::vector<fe> values;
};

// Chien/Forney for an error locator over the given support positions, with
// per-position syndrome multipliers y (already including any a_j shift).
Candidate locate_errors(const Field& F, const GrsSpec& spec, const std::vector<fe>& y,
                        const std::vector<fe>& lambda, const std::vector<fe>& syn,
                        int nsyn, const std::vector<int>& searchable) {
    Candidate cand;
    int L = poly_deg(lambda);
    if (L < 0) return cand;
    // omega = syn * lambda mod z^nsyn
    std::vector<fe> omega(nsyn, 0);
    for (int i = 0; i < nsyn; ++i)
        for (int j = 0; j <= i && j < static_cast<int>(lambda.size()); ++j)
            omega[i] = F.add(omega[i], F.mul(lambda[j], syn[i - j]));
    std::vector<fe> dlambda = poly_deriv(F, lambda);
    for (int j : searchable) {
        fe aj = spec.support[j];
        fe inv = F.inv(aj);
        if (poly_eval(F, lambda, inv) != 0) continue;
        fe denom = F.mul(y[j], poly_eval(F, dlambda, inv));
        if (denom == 0) return cand; // repeated root; reject the locator
        fe e = F.div(F.neg(F.mul(aj, poly_eval(F, omega, inv))), denom);
        if (e == 0) return cand;
        cand.positions.push_back(j);
        cand.values.push_back(e);
    }
    cand.ok = static_cast<int>(cand.positions.size()) == L;
    return cand;
}

} // namespace

GrsSpec make_rs(const Tower& tw, int n, int k) {
    if (n < 1 || static_cast<std::uint64_t>(n) > tw.top_size() - 1)
        throw std::invalid_argument("length must be between 1 and q^m - 1");
    GrsSpec spec;
    spec.tw = &tw;
    spec.k = k;
    fe a = 1;
    for (int i = 0; i < n; ++i) {
        spec.support.push_back(a);
        a = tw.top().mul(a, tw.alpha());
    }
    spec.mult.assign(n, 1);
    validate(spec);
    return spec;
}

GrsSpec make_extended_rs(const Tower& tw, int k) {
    GrsSpec spec;
    spec.tw = &tw;
    spec.k = k;
    spec.extended = true;
    for (std::uint64_t x = 0; x < tw.top_size(); ++x)
        spec.support.push_back(static_cast<fe>(x));
    spec.mult.assign(spec.support.size(), 1);
    validate(spec);
    return spec;
}

GrsSpec make_grs(const Tower& tw, std::vector<fe> support, std::vector<fe> mult, int k) {
    GrsSpec spec;
    spec.tw = &tw;
    spec.support = std::move(support);
    spec.mult = std::move(mult);
    spec.k = k;
    validate(spec);
    return spec;
}

LinearCode rs_generator(const GrsSpec& spec) {
    validate(spec);
    const Field F = spec.field();
    const int n = spec.n(), k = spec.k;
    Mat G(F, k, n);
    for (int j = 0; j < n; ++j) {
        fe p = spec.mult[j];
        for (int i = 0; i < k; ++i) {
            G.at(i, j) = p;
            p = F.mul(p, spec.support[j]);
        }
    }
    LinearCode C = make_code_exact(std::move(G));
    C.d = spec.d();
    return C;
}

std::vector<fe> encode(const GrsSpec& spec, const std::vector<fe>& message) {
    if (static_cast<int>(message.size()) != spec.k)
        throw std::invalid_argument("message length must equal k");
    const Field F = spec.field();
    std::vector<fe> cw(spec.n());
    for (int j = 0; j < spec.n(); ++j)
        cw[j] = F.mul(spec.mult[j], poly_eval(F, message, spec.support[j]));
    return cw;
}

std::vector<fe> dual_multipliers(const GrsSpec& spec) {
    validate(spec);
    const Field F = spec.field();
    const int n = spec.n();
    std::vector<fe> y(n);
    for (int j = 0; j < n; ++j) {
        fe prod = spec.mult[j];
        for (int l = 0; l < n; ++l)
            if (l != j) prod = F.mul(prod, F.sub(spec.support[j], spec.support[l]));
        y[j] = F.inv(prod);
    }
    return y;
}

DecodeResult decode(const GrsSpec& spec, const std::vector<fe>& word) {
    validate(spec);
    const Field F = spec.field();
    const int n = spec.n(), k = spec.k, t = spec.t();
    if (static_cast<int>(word.size()) != n)
        throw std::invalid_argument("received word length must equal n");

    DecodeResult res;
    if (k == n) { // every word is a codeword
        res.ok = true;
        res.codeword = word;
        return res;
    }

    const std::vector<fe> y = dual_multipliers(spec);
    const int nsyn = n - k;
    auto syndromes = [&](const std::vector<fe>& w) {
        std::vector<fe> s(nsyn, 0);
        for (int j = 0; j < n; ++j) {
            fe p = F.mul(w[j], y[j]);
            for (int i = 0; i < nsyn; ++i) {
                s[i] = F.add(s[i], p);
                p = F.mul(p, spec.support[j]);
            }
        }
        return s;
    };
    const std::vector<fe> syn = syndromes(word);

    auto accept = [&](const Candidate& cand) -> bool {
        if (!cand.ok || static_cast<int>(cand.positions.size()) > t) return false;
        std::vector<fe> c = word;
        for (std::size_t i = 0; i < cand.positions.size(); ++i)
            c[cand.positions[i]] = F.sub(c[cand.positions[i]], cand.values[i]);
        for (fe s : syndromes(c)) // full-strength membership check
            if (s != 0) return false;
        res.ok = true;
        res.codeword = std::move(c);
        res.error_positions = cand.positions;
        res.error_values = cand.values;
        return true;
    };

    int zero_pos = -1;
    std::vector<int> nonzero_support;
    for (int j = 0; j < n; ++j) {
        if (spec.support[j] == 0)
            zero_pos = j;
        else
            nonzero_support.push_back(j);
    }

    // Pass 1: no error on a zero support point.
    {
        std::vector<fe> s2t(syn.begin(), syn.begin() + 2 * t);
        int L = 0;
        std::vector<fe> lambda = berlekamp_massey(F, s2t, L);
        Candidate cand;
        if (L == 0) {
            cand.ok = true; // error-free hypothesis
        } else if (L <= t && poly_deg(lambda) == L) {
            cand = locate_errors(F, spec, y, lambda, s2t, 2 * t, nonzero_support);
        }
        if (accept(cand)) return res;
    }

    // Pass 2: one error sits on the zero support point, which feeds only the
    // s = 0 syndrome; the shifted sequence S_{s+1} sees the remaining errors
    // with multipliers y_j a_j.
    if (zero_pos >= 0 && t >= 1) {
        std::vector<fe> shifted(syn.begin() + 1, syn.begin() + 2 * t);
        std::vector<fe> ya(n, 0);
        for (int j : nonzero_support) ya[j] = F.mul(y[j], spec.support[j]);
        int L = 0;
        std::vector<fe> lambda = berlekamp_massey(F, shifted, L);
        Candidate cand;
        if (L == 0) {
            cand.ok = true;
        } else if (L <= t - 1 && poly_deg(lambda) == L) {
            cand = locate_errors(F, spec, ya, lambda, shifted,
                                 static_cast<int>(shifted.size()), nonzero_support);
        }
        if (cand.ok) {
            fe rest = 0;
            for (std::size_t i = 0; i < cand.positions.size(); ++i)
                rest = F.add(rest, F.mul(cand.values[i], y[cand.positions[i]]));
            fe ez = F.div(F.sub(syn[0], rest), y[zero_pos]);
            if (ez != 0) {
                auto it = std::upper_bound(cand.positions.begin(), cand.positions.end(),
                                           zero_pos);
                std::size_t idx = it - cand.positions.begin();
                cand.positions.insert(it, zero_pos);
                cand.values.insert(cand.values.begin() + idx, ez);
                if (accept(cand)) return res;
            }
        }
    }

    res.reason = "no codeword within the correction radius";
    return res;
}

LinearCode alternant_code(const GrsSpec& spec) {
    return subfield_subcode(rs_generator(spec));
}

} // namespace gss
