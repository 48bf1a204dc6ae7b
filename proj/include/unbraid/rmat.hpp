#pragma once

#include "unbraid/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unbraid {

enum class Series { sl, so };

struct RmatError : std::runtime_error {
    enum Kind { UnsupportedSeries, EigenvalueMismatch, DimensionMismatch };
    Kind kind;
    RmatError(Kind k, const std::string& m) : std::runtime_error(m), kind(k) {}
};

// Index bookkeeping for the fundamental multiplet of U_q sl(N) / U_q so(N).
// so indices run -n..-1,(0),1..n; sl indices run 1..N. rho is stored doubled
// (2*rho is integral).
struct IndexScheme {
    Series series;
    int N;
    std::vector<int> idx;   // index values in increasing position order
    std::vector<int> rho2;  // 2*rho per position (so only; zeros for sl)

    static IndexScheme make(Series s, int N);

    int pos(int index_value) const {
        for (int p = 0; p < N; ++p)
            if (idx[p] == index_value) return p;
        throw std::logic_error("index value out of range");
    }
    int pair(int p1, int p2) const { return p1 * N + p2; }
    // weight of an index position: the index value itself for so, i for sl.
    int weight(int p) const { return idx[p]; }
};

struct Projector {
    Coeff eigenvalue;
    SpMat mat;
    std::string name; // "sym", "asym", "trace"
};

struct BraidData {
    IndexScheme scheme;
    SpMat rhat;                    // N^2 x N^2
    SpMat metric;                  // N x N (so only; empty for sl)
    std::vector<Projector> projectors;
    SpMat umat;                    // N x N, rho(u)
};

struct YbeResult {
    bool pass = true;
    std::vector<int> witness_index; // (a,b,c,d,e,f) positions on failure
    std::string lhs, rhs;
};

// Braid matrix per the closed form for the chosen series; row = out pair,
// col = in pair, pair packing (p1,p2) -> p1*N+p2 in position order.
SpMat build_rhat(const CoeffField& f, const IndexScheme& sc);

// g_{ij} = q^{-rho_i} delta_{i,-j} (so only).
SpMat build_metric(const CoeffField& f, const IndexScheme& sc);

// U^i_j = g^{ih} g_{jh} for so; rho(u_1) computed from the braid matrix for sl.
SpMat build_U(const CoeffField& f, const IndexScheme& sc);
SpMat rho_u_from_rhat(const CoeffField& f, const IndexScheme& sc, const SpMat& rhat);

// Spectral projectors P_mu = prod_{nu != mu} (Rhat - nu)/(mu - nu). Throws
// EigenvalueMismatch when Rhat fails its characteristic identity.
std::vector<Projector> spectral_projectors(const CoeffField& f, const SpMat& rhat,
                                           const std::vector<std::pair<std::string, Coeff>>& eigenvalues);

// Eigenvalues the paper assigns to each series (prefactor-scaled for sl).
std::vector<std::pair<std::string, Coeff>> series_eigenvalues(const CoeffField& f, const IndexScheme& sc);

// (Rhat x 1)(1 x Rhat)(Rhat x 1) == (1 x Rhat)(Rhat x 1)(1 x Rhat), exactly.
YbeResult check_matrix_ybe(const CoeffField& f, const SpMat& rhat);

BraidData build_braid_data(const CoeffField& f, const IndexScheme& sc);

// JSON dump {scheme, flattening, entries:[[row,col,coeff]]}, entries sorted.
std::string dump_matrix(const CoeffField& f, const IndexScheme& sc, const SpMat& m,
                        const std::string& label);

} // namespace unbraid
