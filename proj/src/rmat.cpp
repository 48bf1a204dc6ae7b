#include "unbraid/rmat.hpp"

#include <sstream>

namespace unbraid {

IndexScheme IndexScheme::make(Series s, int N) {
    IndexScheme sc;
    sc.series = s;
    sc.N = N;
    if (s == Series::sl) {
        for (int i = 1; i <= N; ++i) sc.idx.push_back(i);
        sc.rho2.assign(N, 0);
    } else {
        int n = N / 2;
        for (int i = -n; i <= n; ++i) {
            if (i == 0 && N % 2 == 0) continue;
            sc.idx.push_back(i);
        }
        // rho decreases in the index: rho_{-n} = n-1/2 down to rho_n = 1/2-n
        // for odd N (n-1 down to 1-n for even N). This orientation is the one
        // that makes the braid matrix satisfy Yang-Baxter with the printed
        // closed form, makes L+ upper triangular in numeric index order, and
        // is validated downstream by the centrality of r^2.
        for (int p = 0; p < N; ++p) {
            int i = sc.idx[p];
            int r2;
            if (N % 2 == 1) r2 = i > 0 ? 1 - 2 * i : (i < 0 ? -1 - 2 * i : 0);
            else r2 = i > 0 ? -2 * (i - 1) : -2 * (i + 1);
            sc.rho2.push_back(r2);
        }
    }
    return sc;
}

namespace {

Coeff q_rho_pow(const CoeffField& f, const IndexScheme& sc, int pos, int sign) {
    // q^{sign*rho_pos} = t^{L*sign*rho2/2}
    long e2 = (long)f.root_order() * sign * sc.rho2[pos];
    if (e2 % 2 != 0) throw CoeffError(CoeffError::BadExponent, "odd root order for half-integral rho");
    return Coeff::tpow(f, (int)(e2 / 2));
}

} // namespace

SpMat build_rhat(const CoeffField& f, const IndexScheme& sc) {
    const int N = sc.N;
    SpMat R(N * N, N * N);
    Coeff q = Coeff::qpow(f, 1);
    Coeff qi = Coeff::qpow(f, -1);
    Coeff k = q - qi;
    Coeff one = Coeff::one(f);
    if (sc.series == Series::sl) {
        Coeff pref = Coeff::qpow(f, -1, N);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                int i = sc.idx[a], j = sc.idx[b];
                if (i == j) R.add(sc.pair(a, a), sc.pair(a, a), pref * q);
                else {
                    // e^j_i x e^i_j : out (i,j), in (j,i)
                    R.add(sc.pair(a, b), sc.pair(b, a), pref);
                    if (i < j) R.add(sc.pair(a, b), sc.pair(a, b), pref * k);
                }
            }
        return R;
    }
    // so series
    for (int a = 0; a < N; ++a) {
        int i = sc.idx[a];
        if (i != 0) {
            R.add(sc.pair(a, a), sc.pair(a, a), q);
            int ma = sc.pos(-i);
            R.add(sc.pair(a, ma), sc.pair(ma, a), qi);
        }
    }
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            int i = sc.idx[a], j = sc.idx[b];
            if ((i != j && i != -j) || (i == 0 && j == 0)) R.add(sc.pair(a, b), sc.pair(b, a), one);
            if (i < j) {
                R.add(sc.pair(a, b), sc.pair(a, b), k);
                // -k q^{-rho_i + rho_j} e^{-j}_i x e^j_{-i} : out (i,-i), in (-j,j)
                int mi = sc.pos(-i), mj = sc.pos(-j);
                Coeff w = q_rho_pow(f, sc, a, -1) * q_rho_pow(f, sc, b, 1);
                R.add(sc.pair(a, mi), sc.pair(mj, b), Coeff::zero(f) - k * w);
            }
        }
    return R;
}

SpMat build_metric(const CoeffField& f, const IndexScheme& sc) {
    if (sc.series != Series::so)
        throw RmatError(RmatError::UnsupportedSeries, "metric defined for the so series only");
    SpMat g(sc.N, sc.N);
    for (int a = 0; a < sc.N; ++a) {
        int i = sc.idx[a];
        g.set(a, sc.pos(-i), q_rho_pow(f, sc, a, -1));
    }
    return g;
}

SpMat build_U(const CoeffField& f, const IndexScheme& sc) {
    if (sc.series != Series::so)
        throw RmatError(RmatError::UnsupportedSeries, "build_U defined for the so series only");
    SpMat g = build_metric(f, sc);
    // U^i_j = g^{ih} g_{jh}; with g symmetric in this convention this is
    // diagonal with entries q^{-2 rho_i}.
    SpMat U(sc.N, sc.N);
    for (int a = 0; a < sc.N; ++a)
        for (int h = 0; h < sc.N; ++h) {
            if (!g.has(a, h)) continue;
            for (int b = 0; b < sc.N; ++b)
                if (g.has(b, h)) U.add(a, b, g.get(f, a, h) * g.get(f, b, h));
        }
    return U;
}

SpMat rho_u_from_rhat(const CoeffField& f, const IndexScheme& sc, const SpMat& rhat) {
    // rho(u_1)_ab = sum_c [(rho x rho.S) R][(c,a),(b,c)], and
    // (rho x rho.S) R = ((X^{T2})^{-1})^{T2} with X = (rho x rho) R.
    const int N = sc.N;
    SpMat X(N * N, N * N);
    rhat.for_each([&](int r, int c, const Coeff& v) {
        int i = r / N, j = r % N;
        X.add(j * N + i, c, v); // X = rowflip(Rhat)
    });
    auto pt2 = [&](const SpMat& M) {
        SpMat R(N * N, N * N);
        M.for_each([&](int r, int c, const Coeff& v) {
            int a = r / N, b = r % N, cc = c / N, d = c % N;
            R.add(a * N + d, cc * N + b, v);
        });
        return R;
    };
    SpMat W = pt2(pt2(X).inverse(f));
    SpMat U(N, N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            Coeff s = Coeff::zero(f);
            for (int c = 0; c < N; ++c) s += W.get(f, c * N + a, b * N + c);
            if (!s.is_zero()) U.set(a, b, s);
        }
    return U;
}

std::vector<std::pair<std::string, Coeff>> series_eigenvalues(const CoeffField& f, const IndexScheme& sc) {
    Coeff q = Coeff::qpow(f, 1);
    Coeff qi = Coeff::qpow(f, -1);
    std::vector<std::pair<std::string, Coeff>> ev;
    if (sc.series == Series::sl) {
        // eigenvalues of the prefactor-scaled matrix: q^{-1/N} {q, -q^{-1}}
        Coeff pref = Coeff::qpow(f, -1, sc.N);
        ev.emplace_back("sym", pref * q);
        ev.emplace_back("asym", Coeff::zero(f) - pref * qi);
    } else {
        ev.emplace_back("sym", q);
        ev.emplace_back("asym", Coeff::zero(f) - qi);
        ev.emplace_back("trace", Coeff::qpow(f, 1 - sc.N));
    }
    return ev;
}

std::vector<Projector> spectral_projectors(const CoeffField& f, const SpMat& rhat,
                                           const std::vector<std::pair<std::string, Coeff>>& eigenvalues) {
    const int n = rhat.rows();
    SpMat I = SpMat::identity(f, n);
    // characteristic identity
    SpMat chi = I;
    for (auto& [name, ev] : eigenvalues) chi = chi.mul(rhat.add_mat(I.scale(Coeff::zero(f) - ev)));
    if (!chi.is_zero())
        throw RmatError(RmatError::EigenvalueMismatch, "braid matrix fails its characteristic identity");
    std::vector<Projector> ps;
    for (auto& [name, lam] : eigenvalues) {
        SpMat P = I;
        for (auto& [oname, mu] : eigenvalues) {
            if (mu == lam) continue;
            P = P.mul(rhat.add_mat(I.scale(Coeff::zero(f) - mu))).scale((lam - mu).inv());
        }
        ps.push_back(Projector{lam, P, name});
    }
    return ps;
}

YbeResult check_matrix_ybe(const CoeffField& f, const SpMat& rhat) {
    const int n2 = rhat.rows();
    int N = 1;
    while (N * N < n2) ++N;
    if (N * N != n2 || rhat.cols() != n2)
        throw RmatError(RmatError::DimensionMismatch, "braid matrix must be square of size N^2");
    const int n3 = N * N * N;
    SpMat R1(n3, n3), R2(n3, n3); // Rhat x 1 and 1 x Rhat
    rhat.for_each([&](int r, int c, const Coeff& v) {
        int a = r / N, b = r % N, d = c / N, e = c % N;
        for (int x = 0; x < N; ++x) {
            R1.add((a * N + b) * N + x, (d * N + e) * N + x, v);
            R2.add((x * N + a) * N + b, (x * N + d) * N + e, v);
        }
    });
    SpMat lhs = R1.mul(R2).mul(R1);
    SpMat rhs = R2.mul(R1).mul(R2);
    YbeResult res;
    for (int r = 0; r < n3 && res.pass; ++r) {
        for (int c = 0; c < n3; ++c) {
            Coeff a = lhs.get(f, r, c), b = rhs.get(f, r, c);
            if (a != b) {
                res.pass = false;
                res.witness_index = {r / (N * N), (r / N) % N, r % N, c / (N * N), (c / N) % N, c % N};
                res.lhs = a.str();
                res.rhs = b.str();
                break;
            }
        }
    }
    return res;
}

BraidData build_braid_data(const CoeffField& f, const IndexScheme& sc) {
    BraidData bd;
    bd.scheme = sc;
    bd.rhat = build_rhat(f, sc);
    if (sc.series == Series::so) {
        bd.metric = build_metric(f, sc);
        bd.umat = build_U(f, sc);
    } else {
        bd.umat = rho_u_from_rhat(f, sc, bd.rhat);
    }
    bd.projectors = spectral_projectors(f, bd.rhat, series_eigenvalues(f, sc));
    return bd;
}

std::string dump_matrix(const CoeffField& f, const IndexScheme& sc, const SpMat& m,
                        const std::string& label) {
    std::ostringstream os;
    os << "{\"scheme\":{\"series\":\"" << (sc.series == Series::sl ? "sl" : "so") << "\",\"N\":" << sc.N
       << "},\"flattening\":\"row=(out1,out2),col=(in1,in2)\",\"label\":\"" << label << "\",\"entries\":[";
    bool first = true;
    for (int r = 0; r < m.rows(); ++r)
        for (auto& [c, v] : m.row(r)) {
            if (!first) os << ",";
            first = false;
            os << "[" << r << "," << c << ",\"" << v.str() << "\"]";
        }
    (void)f;
    os << "]}";
    return os.str();
}

} // namespace unbraid
