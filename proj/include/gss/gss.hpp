#pragma once

#include "gss/blocks.hpp"
#include "gss/rs.hpp"

#include <optional>

namespace gss {

// One r-dimensional GF(q)-subspace of GF(q^m) per position, each given by a
// full-rank r x m basis matrix of coordinate rows.
struct SubspaceFamily {
    const Tower* tw = nullptr;
    int r = 0;
    std::vector<Mat> bases;

    int n() const { return static_cast<int>(bases.size()); }
};

SubspaceFamily make_family(const Tower& tw, std::vector<Mat> bases);
SubspaceFamily uniform_family(const Tower& tw, int n, const Mat& V);
// r = 1 families: V_i spanned by the u_i-th basis element, or by a given y_i.
SubspaceFamily family_from_tuple(const Tower& tw, const std::vector<int>& u);
SubspaceFamily family_from_elements(const Tower& tw, const std::vector<fe>& y);
SubspaceFamily random_family(const Tower& tw, int n, int r, Rng& rng);

// Keep one expansion component per position (u_i in 1..m): shortening the
// image on all other components (s_u) or puncturing onto the kept ones (p_u).
LinearCode s_u(const LinearCode& C, const std::vector<int>& u);
LinearCode p_u(const LinearCode& C, const std::vector<int>& u);

// Literal construction of a generator of s_u via the image's dual.
Mat gss_algorithm1(const LinearCode& C, const std::vector<int>& u);

// Generalized subfield subcode relative to an isometry: keep the first
// component of every block of mon(image).  The main path works on the dual
// side with the adjoint maps; the reference version transforms the image
// generator first and must produce the same code.
LinearCode gss_algorithm2(const LinearCode& C, const MonomialIsometry& mon);
Mat gss_algorithm2_reference(const LinearCode& C, const MonomialIsometry& mon);

// Same construction parametrized by one nonzero element per position.
LinearCode gss_algorithm3(const LinearCode& C, const std::vector<int>& pi,
                          const std::vector<fe>& y);

// C intersected with V^n (resp. with prod V_i), as a block code of block
// size r carrying coordinates relative to each V_i's basis rows.
BlockCode subspace_subcode(const LinearCode& C, const Mat& V);
BlockCode gss_w(const LinearCode& C, const SubspaceFamily& W);

// Block word (coordinates in the V_i bases) -> word over GF(q^m), and back;
// projection fails when some block value leaves its subspace.
std::vector<fe> lift_block_word(const SubspaceFamily& W, const std::vector<fe>& z);
std::optional<std::vector<fe>> project_to_family(const SubspaceFamily& W,
                                                 const std::vector<fe>& c);

struct GssDecodeResult {
    bool ok = false;
    bool outside_family = false; // parent decoded fine but left the family
    std::vector<fe> word;        // corrected block word
    std::vector<fe> parent_codeword;
    std::string reason;
};

// Decode a noisy block word of gss_w(parent, W) through the parent decoder;
// corrects up to the parent's radius in block errors.
GssDecodeResult gss_decode(const GrsSpec& parent, const SubspaceFamily& W,
                           const std::vector<fe>& noisy);

} // namespace gss
