#include "gss/refdata.hpp"

#include <stdexcept>

namespace gss::refdata {

namespace {

Mat bit_matrix(Field F, const std::vector<const char*>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(std::string(rows[0]).size());
    Mat M(F, r, c);
    for (int i = 0; i < r; ++i) {
        std::string s = rows[i];
        if (static_cast<int>(s.size()) != c) throw std::logic_error("ragged bit matrix");
        for (int j = 0; j < c; ++j) M.at(i, j) = s[j] == '1' ? 1 : 0;
    }
    return M;
}

} // namespace

Mat rs7_systematic(const Tower& tw) {
    Mat G = Mat::identity(tw.top(), 6);
    Mat S(tw.top(), 6, 7);
    fe a = tw.alpha();
    fe p = a;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) S.at(i, j) = G.at(i, j);
        S.at(i, 6) = p;
        p = tw.top().mul(p, a);
    }
    return S;
}

Mat image18(const Tower& tw) {
    return bit_matrix(tw.mid(), {
                                    "100000000000000000010",
                                    "010000000000000000001",
                                    "001000000000000000110",
                                    "000100000000000000001",
                                    "000010000000000000110",
                                    "000001000000000000011",
                                    "000000100000000000110",
                                    "000000010000000000011",
                                    "000000001000000000111",
                                    "000000000100000000011",
                                    "000000000010000000111",
                                    "000000000001000000101",
                                    "000000000000100000111",
                                    "000000000000010000101",
                                    "000000000000001000100",
                                    "000000000000000100101",
                                    "000000000000000010100",
                                    "000000000000000001010",
                                });
}

Mat image_dual3(const Tower& tw) {
    return bit_matrix(tw.mid(), {
                                    "001010101011111110100",
                                    "101011111110100001010",
                                    "010101011111110100001",
                                });
}

std::vector<int> tuple_a() { return {2, 3, 3, 2, 2, 3, 3}; }
std::vector<int> tuple_b() { return {1, 3, 1, 2, 3, 1, 3}; }

Mat shortened_a(const Tower& tw) {
    return bit_matrix(tw.mid(), {
                                    "1000001",
                                    "0100011",
                                    "0010110",
                                    "0001110",
                                });
}

Mat shortened_b(const Tower& tw) {
    return bit_matrix(tw.mid(), {
                                    "1001010",
                                    "0101011",
                                    "0011001",
                                    "0000111",
                                });
}

Mat parity21(const Tower& tw) {
    return bit_matrix(tw.mid(), {
                                    "100000101100101001001",
                                    "010000111010111101101",
                                    "001000011001011010010",
                                    "000100011100111111011",
                                    "000010110010100100110",
                                    "000001111001110110111",
                                });
}

std::vector<Mat> family_bases(const Tower& tw) {
    Mat V1 = bit_matrix(tw.mid(), {"100", "010"}); // <1, alpha>
    Mat V2 = bit_matrix(tw.mid(), {"100", "001"}); // <1, alpha^2>
    Mat V3 = bit_matrix(tw.mid(), {"010", "001"}); // <alpha, alpha^2>
    return {V1, V2, V1, V3, V1, V2, V1};
}

std::vector<int> family_dropped_columns() { return {3, 5, 9, 10, 15, 17, 21}; }

Mat expected_block_generator(const Tower& tw) {
    return bit_matrix(tw.mid(), {
                                    "10000000101000",
                                    "01000000010100",
                                    "00100000001010",
                                    "00010000000101",
                                    "00001000101010",
                                    "00000100010101",
                                    "00000010100010",
                                    "00000001010001",
                                });
}

Mat derived_block_generator(const Tower& tw) {
    return bit_matrix(tw.mid(), {
                                    "10000000101000",
                                    "01000000100110",
                                    "00100000001010",
                                    "00010000010011",
                                    "00001000101010",
                                    "00000100100111",
                                    "00000010010001",
                                    "00000001111100",
                                });
}

Mat hamming7(const Tower& tw) {
    return bit_matrix(tw.mid(), {
                                    "1000011",
                                    "0100101",
                                    "0010110",
                                    "0001111",
                                });
}

std::vector<fe> rs7_dual_vector() { return {2, 4, 3, 6, 7, 5, 1}; }

} // namespace gss::refdata
