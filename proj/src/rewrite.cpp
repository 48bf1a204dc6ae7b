#include "unbraid/rewrite.hpp"

#include <algorithm>
#include <sstream>
#include <cstdlib>
#include <cstdio>

namespace unbraid {

GenId RewriteSystem::add_gen(GenInfo g) {
    g.id = (GenId)gens_.size();
    gens_.push_back(g);
    // rank key: copy, family, position, id — packed into a long
    rank_.push_back(((long)g.copy << 40) | ((long)(int)g.family << 32) |
                    ((long)(g.position + 0x8000) << 16) | (long)g.id);
    refresh_skips();
    clear_memo();
    return g.id;
}

void RewriteSystem::refresh_skips() {
    for (auto& [l, r] : rules_) r.skips = skip_set_for(l);
}

GenId RewriteSystem::find_gen(const std::string& name) const {
    for (auto& g : gens_)
        if (g.name == name) return g.id;
    throw RewriteError(RewriteError::UnknownGenerator, "no generator named " + name);
}

int RewriteSystem::weighted_degree(const Word& w) const {
    int d = 0;
    for (GenId g : w) d += gens_[g].degw;
    return d;
}

int RewriteSystem::grade(const Word& w) const {
    int d = 0;
    for (GenId g : w) d += gens_[g].grade;
    return d;
}

bool RewriteSystem::word_less(const Word& a, const Word& b) const {
    int da = weighted_degree(a), db = weighted_degree(b);
    if (da != db) return da < db;
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return rank_[a[k]] < rank_[b[k]];
    return false;
}

const Word* RewriteSystem::leading_word(const Element& e) const {
    const Word* lead = nullptr;
    for (auto& [w, c] : e.terms)
        if (!lead || word_less(*lead, w)) lead = &w;
    return lead;
}

void RewriteSystem::check_orientation(const Word& lhs, const Element& rhs) const {
    for (auto& [w, c] : rhs.terms)
        if (!word_less(w, lhs))
            throw RewriteError(RewriteError::NotOrientable,
                               "rule RHS word " + word_str(w) + " not below LHS " + word_str(lhs));
}

std::map<GenId, Coeff> RewriteSystem::skip_set_for(const Word& lhs) const {
    // Two-letter ascending patterns [a, c] may be separated in normal words
    // by letters of intermediate rank; those that scalar-commute past a are
    // recorded as skips. A non-commuting intermediate letter would block the
    // pattern; none of the shipped presentations produces one.
    std::map<GenId, Coeff> skips;
    if (lhs.size() != 2) return skips;
    GenId a = lhs[0], c = lhs[1];
    if (rank(a) >= rank(c)) return skips;
    for (auto& g : gens_) {
        if (rank(g.id) <= rank(a) || rank(g.id) >= rank(c)) continue;
        // need a ranked rule [g, a] -> lambda [a, g]
        auto it = rules_.find(Word{g.id, a});
        if (it == rules_.end()) continue;
        const Element& r = it->second.rhs;
        if (r.terms.size() != 1) continue;
        auto& [w, coeff] = *r.terms.begin();
        if (w.size() == 2 && w[0] == a && w[1] == g.id) skips.emplace(g.id, coeff.inv());
    }
    return skips;
}

void RewriteSystem::add_rule(const Word& lhs, const Element& rhs) {
    if (lhs.empty() || lhs.size() > 4)
        throw RewriteError(RewriteError::NotOrientable,
                           "rule LHS length out of range: " + word_str(lhs));
    if (rules_.count(lhs))
        throw RewriteError(RewriteError::RuleConflict, "duplicate rule LHS " + word_str(lhs));
    Element r = nf(rhs);
    check_orientation(lhs, r);
    RuleRhs rr;
    rr.rhs = std::move(r);
    rules_.emplace(lhs, std::move(rr));
    max_lhs_ = std::max(max_lhs_, (int)lhs.size());
    refresh_skips();
    clear_memo();
}

bool RewriteSystem::add_relation(const Element& rel) {
    Element d = nf(rel);
    if (d.is_zero()) return false;
    const Word* lead = leading_word(d);
    Coeff c0 = d.terms.at(*lead);
    Element rhs;
    for (auto& [w, c] : d.terms)
        if (w != *lead) rhs.add_term(w, -(c / c0));
    add_rule(*lead, rhs);
    return true;
}

std::optional<RewriteSystem::Redex> RewriteSystem::find_redex(const Word& w) const {
    const int n = (int)w.size();
    for (int p = 0; p < n; ++p) {
        for (int len = std::min(max_lhs_, n - p); len >= 1; --len) {
            Word sub(w.begin() + p, w.begin() + p + len);
            auto it = rules_.find(sub);
            if (it != rules_.end())
                return Redex{p, len, {}, Coeff::one(*fld_), &it->second};
        }
        // schema match: [a, run.., c] with run letters in the rule's skip set
        for (int j = p + 2; j < n; ++j) {
            Word pat{w[p], w[j]};
            auto it = rules_.find(pat);
            if (it != rules_.end() && !it->second.skips.empty()) {
                Coeff fac = Coeff::one(*fld_);
                bool ok = true;
                for (int k = p + 1; k < j; ++k) {
                    auto s = it->second.skips.find(w[k]);
                    if (s == it->second.skips.end()) { ok = false; break; }
                    fac = fac * s->second;
                }
                if (ok)
                    return Redex{p, j - p + 1, Word(w.begin() + p + 1, w.begin() + j), fac, &it->second};
            }
        }
    }
    return std::nullopt;
}

const Element& RewriteSystem::nf_word(const Word& w) const {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    auto rdx = find_redex(w);
    if (!rdx) {
        Element e;
        e.terms.emplace(w, Coeff::one(*fld_));
        return memo_.emplace(w, std::move(e)).first->second;
    }
    if (++steps_ > step_budget_)
        throw RewriteError(RewriteError::NonTerminating, "normal-form step budget exceeded");
    Element acc;
    for (auto& [wr, cr] : rdx->rule->rhs.terms) {
        Word u;
        u.reserve(w.size() + wr.size());
        u.insert(u.end(), w.begin(), w.begin() + rdx->pos);
        u.insert(u.end(), rdx->run.begin(), rdx->run.end());
        u.insert(u.end(), wr.begin(), wr.end());
        u.insert(u.end(), w.begin() + rdx->pos + rdx->span, w.end());
        const Element& sub_nf = nf_word(u);
        Coeff c = cr * rdx->factor;
        for (auto& [ws, cs] : sub_nf.terms) acc.add_term(ws, c * cs);
    }
    return memo_.emplace(w, std::move(acc)).first->second;
}

Element RewriteSystem::nf(const Element& e) const {
    steps_ = 0;
    Element r;
    for (auto& [w, c] : e.terms) {
        const Element& n = nf_word(w);
        for (auto& [wn, cn] : n.terms) r.add_term(wn, c * cn);
    }
    return r;
}

void RewriteSystem::for_each_critical_pair(
    const std::function<bool(const Word&, const Element&, const Element&)>& visit) const {
    std::vector<const Word*> lhss;
    for (auto& [l, r] : rules_) lhss.push_back(&l);
    std::sort(lhss.begin(), lhss.end(), [](const Word* a, const Word* b) { return *a < *b; });
    for (const Word* l1p : lhss)
        for (const Word* l2p : lhss) {
            const Word &l1 = *l1p, &l2 = *l2p;
            const Element &r1 = rules_.at(l1).rhs, &r2 = rules_.at(l2).rhs;
            // proper overlaps: nonempty suffix of l1 = prefix of l2
            int kmax = (int)std::min(l1.size(), l2.size());
            for (int k = 1; k <= kmax; ++k) {
                if (k == (int)l1.size() && k == (int)l2.size()) continue; // identical lhs
                if (!std::equal(l1.end() - k, l1.end(), l2.begin())) continue;
                Word w(l1.begin(), l1.end());
                w.insert(w.end(), l2.begin() + k, l2.end());
                // route 1: reduce the l1 occurrence; route 2: the l2 occurrence
                Element a = Element::word(Coeff::one(*fld_), Word(l2.begin() + k, l2.end()));
                Element e1 = nf(r1 * a);
                Element b = Element::word(Coeff::one(*fld_), Word(l1.begin(), l1.end() - k));
                Element e2 = nf(b * r2);
                if (!visit(w, e1, e2)) return;
            }
            // containment: l2 strictly inside l1
            if (l2.size() < l1.size()) {
                for (size_t p = 0; p + l2.size() <= l1.size(); ++p) {
                    if (p == 0 && l2.size() == l1.size()) continue;
                    if (!std::equal(l2.begin(), l2.end(), l1.begin() + p)) continue;
                    Element e1 = nf(Element::word(Coeff::one(*fld_), l1));
                    Element pre = Element::word(Coeff::one(*fld_), Word(l1.begin(), l1.begin() + p));
                    Element post =
                        Element::word(Coeff::one(*fld_), Word(l1.begin() + p + l2.size(), l1.end()));
                    Element e2 = nf(pre * r2 * post);
                    if (!visit(l1, e1, e2)) return;
                }
            }
        }
}

ConfluenceResult RewriteSystem::confluence_check(int cap) const {
    ConfluenceResult res;
    for_each_critical_pair([&](const Word& w, const Element& a, const Element& b) {
        if (cap > 0 && weighted_degree(w) > cap + 1) return true;
        if (a != b) {
            res.pass = false;
            res.witness = w;
            res.nf_left = el_str(a);
            res.nf_right = el_str(b);
            return false;
        }
        return true;
    });
    return res;
}

std::map<GenId, Coeff> RewriteSystem::scaling_profile(const Element& E) const {
    std::map<GenId, Coeff> lam;
    Element En = nf(E);
    if (En.is_zero()) throw RewriteError(RewriteError::NotScaling, "scaling element is zero");
    for (auto& g : gens_) {
        Element z = Element::gen(*fld_, g.id);
        Element A = nf(En * z), B = nf(z * En);
        if (A.is_zero() != B.is_zero())
            throw RewriteError(RewriteError::NotScaling, "one-sided annihilation for " + g.name);
        if (A.terms.size() != B.terms.size())
            throw RewriteError(RewriteError::NotScaling, "no scalar ratio for " + g.name);
        Coeff ratio = Coeff::zero(*fld_);
        bool have = false;
        auto itb = B.terms.begin();
        for (auto& [w, c] : A.terms) {
            if (itb->first != w) throw RewriteError(RewriteError::NotScaling, "support mismatch for " + g.name);
            Coeff r = c / itb->second;
            if (!have) {
                ratio = r;
                have = true;
            } else if (!(ratio == r)) {
                throw RewriteError(RewriteError::NotScaling, "non-scalar commutation for " + g.name);
            }
            ++itb;
        }
        lam.emplace(g.id, have ? ratio : Coeff::one(*fld_));
    }
    return lam;
}

namespace {
int element_copy(const std::vector<GenInfo>& gens, const Element& e) {
    int copy = 1;
    for (auto& [w, c] : e.terms)
        for (GenId g : w) copy = std::max(copy, gens[g].copy);
    return copy;
}
} // namespace

std::vector<GenId> RewriteSystem::adjoin_scaling_element(const Element& E, const std::string& symbol,
                                                         AdjoinMode mode, int degw) {
    const CoeffField& f = *fld_;
    Element En = nf(E);
    auto lam = scaling_profile(En);
    int cp = element_copy(gens_, En);
    int scale_pos = 0;
    for (auto& g : gens_)
        if (g.family == Family::Scale && g.copy == cp && g.position < 1000)
            scale_pos = std::max(scale_pos, g.position + 1);

    auto add_comm_rules = [&](GenId x, const std::map<GenId, Coeff>& powers) {
        // X z = powers(z) * z X; the rule reduces whichever side is the
        // descending word under the generator ranks.
        for (auto& [z, lz] : powers) {
            if (z == x) continue;
            if (rank(x) > rank(z)) add_rule(Word{x, z}, Element::word(lz, Word{z, x}));
            else add_rule(Word{z, x}, Element::word(lz.inv(), Word{x, z}));
        }
    };

    if (mode == AdjoinMode::Inverse) {
        if (En.terms.size() != 1 || En.terms.begin()->first.size() != 1)
            throw RewriteError(RewriteError::NotScaling,
                               "inverse mode expects a single-generator element");
        GenId base = En.terms.begin()->first[0];
        Coeff cbase = En.terms.begin()->second;
        // the localization inverse sits directly after its partner in the
        // same family, so the cancellation pattern is local in normal words
        GenInfo gi;
        gi.name = symbol;
        gi.copy = gens_[base].copy;
        gi.family = gens_[base].family;
        gi.position = gens_[base].position + 1;
        gi.degw = degw;
        gi.grade = -gens_[base].grade;
        GenId S = add_gen(gi);
        gens_[S].inverse = base;
        if (gens_[base].inverse < 0) gens_[base].inverse = S;
        std::map<GenId, Coeff> pw;
        for (auto& [z, l] : lam)
            if (z != base) pw.emplace(z, l.inv());
        add_comm_rules(S, pw);
        Coeff ic = cbase.inv();
        add_rule(Word{S, base}, Element::word(ic, Word{}));
        add_rule(Word{base, S}, Element::word(ic, Word{}));
        complete_overlaps();
        return {S};
    }

    // sqrt-inverse: adjoin R = E^{1/2} and S = E^{-1/2}. Callers keep E's
    // words short (sums of generators do not work as rewrite patterns at
    // arbitrary separation; where E is built from quadratic contractions
    // those are named as defined generators first).
    const Word* elead = leading_word(En);
    int edeg = elead ? weighted_degree(*elead) : 0;
    GenInfo gr;
    gr.name = symbol;
    gr.family = Family::Scale;
    gr.copy = cp;
    gr.position = scale_pos;
    gr.degw = std::max(1, (edeg + 1) / 2);
    gr.grade = (elead ? grade(*elead) : 0) / 2;
    GenId R = add_gen(gr);
    GenInfo gs = gr;
    gs.name = symbol + "^-1";
    gs.position = scale_pos + 1;
    gs.grade = -gr.grade;
    GenId S = add_gen(gs);
    gens_[R].inverse = S;
    gens_[S].inverse = R;
    std::map<GenId, Coeff> pr, ps;
    for (auto& [z, l] : lam) {
        Coeff rt = l.monomial_sqrt();
        pr.emplace(z, rt);
        ps.emplace(z, rt.inv());
    }
    add_comm_rules(R, pr);
    add_comm_rules(S, ps);
    add_rule(Word{R, S}, Element::unit(f));
    add_rule(Word{S, R}, Element::unit(f));
    // value relation R*R = E, oriented on its leading normal word
    add_relation(Element::word(Coeff::one(f), Word{R, R}) - En);
    complete_overlaps();
    return {R, S};
}

std::vector<GenId> RewriteSystem::adjoin_defined_elements(
    const std::vector<std::pair<Element, std::string>>& defs) {
    const CoeffField& f = *fld_;
    // phase 0: normal forms and raw commutator data, before any value rule
    std::vector<Element> dns;
    for (auto& [D, symbol] : defs) dns.push_back(nf(D));
    struct CommData {
        Element T1, T2; // T1 ~ D * z, T2 ~ z * D as pre-batch normal forms
    };
    std::vector<std::vector<CommData>> vs_gen(defs.size());
    std::vector<GenId> old_gens;
    for (auto& g : gens_) old_gens.push_back(g.id);
    for (size_t k = 0; k < defs.size(); ++k)
        for (GenId z : old_gens)
            vs_gen[k].push_back(CommData{nf(dns[k] * Element::gen(f, z)),
                                         nf(Element::gen(f, z) * dns[k])});
    std::map<std::pair<size_t, size_t>, CommData> vs_def;
    for (size_t l = 0; l < defs.size(); ++l)
        for (size_t k = 0; k < l; ++k)
            vs_def.emplace(std::make_pair(l, k), CommData{nf(dns[l] * dns[k]), nf(dns[k] * dns[l])});
    // phase 1: generators and value rules
    std::vector<GenId> ids;
    for (size_t k = 0; k < defs.size(); ++k) {
        const Element& Dn = dns[k];
        int cp = element_copy(gens_, Dn);
        int scale_pos = 0;
        for (auto& g : gens_)
            if (g.family == Family::Scale && g.copy == cp && g.position >= 1000)
                scale_pos = std::max(scale_pos, g.position - 1000 + 1);
        const Word* dlead = leading_word(Dn);
        GenInfo gu;
        gu.name = defs[k].second;
        gu.family = Family::Scale;
        gu.copy = cp;
        gu.position = 1000 + scale_pos;
        gu.degw = dlead ? weighted_degree(*dlead) : 1;
        gu.grade = dlead ? grade(*dlead) : 0;
        GenId u = add_gen(gu);
        add_relation(Element::gen(f, u) - Dn);
        ids.push_back(u);
    }
    // phase 2: commutator rules from the raw data; residuals fold through
    // every value rule when normalized here
    auto emit = [&](GenId u, GenId z, const CommData& cd) {
        const Element &T1 = cd.T1, &T2 = cd.T2;
        if (T2.is_zero()) {
            if (!T1.is_zero())
                throw RewriteError(RewriteError::NotScaling,
                                   "one-sided annihilation for " + gens_[z].name);
            return;
        }
        Coeff sigma = Coeff::one(f);
        Element rho;
        const Word* lead2 = leading_word(T2);
        if (lead2 && T1.terms.count(*lead2)) {
            sigma = T1.terms.at(*lead2) / T2.terms.at(*lead2);
            rho = T1 - T2.scaled(sigma);
        } else {
            const Word* lead1 = leading_word(T1);
            if (!(lead1 && T2.terms.count(*lead1)))
                throw RewriteError(RewriteError::NotScaling, "no leading match for " +
                                                                 gens_[u].name + " against " +
                                                                 gens_[z].name);
            Coeff sp = T2.terms.at(*lead1) / T1.terms.at(*lead1);
            sigma = sp.inv();
            rho = (T2 - T1.scaled(sp)).scaled(-sigma);
        }
        // residual folding may reproduce the commutator words themselves;
        // solve for them
        Element rhs = Element::word(sigma, Word{z, u}) + nf(rho);
        Word self{u, z};
        auto it = rhs.terms.find(self);
        if (it != rhs.terms.end()) {
            Coeff c1 = it->second;
            if (c1 == Coeff::one(f))
                throw RewriteError(RewriteError::NotScaling,
                                   "degenerate commutator for " + gens_[u].name + ", " + gens_[z].name);
            rhs.terms.erase(it);
            rhs = rhs.scaled((Coeff::one(f) - c1).inv());
        }
        add_rule(self, rhs);
    };
    for (size_t k = 0; k < defs.size(); ++k)
        for (size_t zi = 0; zi < old_gens.size(); ++zi) emit(ids[k], old_gens[zi], vs_gen[k][zi]);
    for (auto& [kl, cd] : vs_def) emit(ids[kl.first], ids[kl.second], cd);
    complete_overlaps();
    return ids;
}

GenId RewriteSystem::adjoin_defined_element(const Element& D, const std::string& symbol, int degw) {
    const CoeffField& f = *fld_;
    Element Dn = nf(D);
    int cp = element_copy(gens_, Dn);
    int scale_pos = 0;
    for (auto& g : gens_)
        if (g.family == Family::Scale && g.copy == cp && g.position >= 1000)
            scale_pos = std::max(scale_pos, g.position - 1000 + 1);
    const Word* dlead = leading_word(Dn);
    GenInfo gu;
    gu.name = symbol;
    gu.family = Family::Scale;
    gu.copy = cp;
    // value generators sort after the root/inverse scale generators so they
    // can drift out of the way of the inverse-pair cancellations
    gu.position = 1000 + scale_pos;
    gu.degw = degw > 0 ? degw : (dlead ? weighted_degree(*dlead) : 1);
    gu.grade = dlead ? grade(*dlead) : 0;
    // Commutators are solved from the pre-adjunction normal forms:
    //   D z = sigma_z  z D + rho_z   with rho_z of lower degree,
    // read off by matching leading terms. This is the oracle producing the
    // q-commutation scalars plus the inhomogeneous corrections (the
    // Heisenberg contraction generators need the correction term).
    struct Comm {
        GenId z;
        Coeff sigma;
        Element rho;
    };
    std::vector<Comm> comms;
    for (auto& g : gens_) {
        GenId z = g.id;
        Element T1 = nf(Dn * Element::gen(f, z));
        Element T2 = nf(Element::gen(f, z) * Dn);
        if (T2.is_zero()) {
            if (!T1.is_zero())
                throw RewriteError(RewriteError::NotScaling, "one-sided annihilation for " + g.name);
            continue;
        }
        const Word* lead2 = leading_word(T2);
        if (lead2 && T1.terms.count(*lead2)) {
            // D z = sigma z D + rho
            Coeff sigma = T1.terms.at(*lead2) / T2.terms.at(*lead2);
            comms.push_back(Comm{z, sigma, T1 - T2.scaled(sigma)});
            continue;
        }
        const Word* lead1 = leading_word(T1);
        if (lead1 && T2.terms.count(*lead1)) {
            // z D = sigma' D z + rho'  =>  D z = (z D - rho')/sigma'
            Coeff sp = T2.terms.at(*lead1) / T1.terms.at(*lead1);
            Coeff si = sp.inv();
            comms.push_back(Comm{z, si, (T2 - T1.scaled(sp)).scaled(-si)});
            continue;
        }
        throw RewriteError(RewriteError::NotScaling,
                           "no leading match for " + symbol + " against " + g.name);
    }
    GenId u = add_gen(gu);
    // value rule: leading word of D folds into u
    add_relation(Element::gen(f, u) - Dn);
    for (auto& c : comms) {
        Element rhs = Element::word(c.sigma, Word{c.z, u}) + nf(c.rho);
        add_rule(Word{u, c.z}, rhs);
    }
    complete_overlaps();
    return u;
}

std::pair<GenId, GenId> RewriteSystem::adjoin_invertible_element(
    const Element& V, const std::string& symbol, int degw,
    const std::function<std::vector<Element>(GenId, GenId)>& rel_maker) {
    const CoeffField& f = *fld_;
    Element Vn = nf(V);
    auto lam = scaling_profile(Vn);
    int scale_pos = 0;
    for (auto& g : gens_)
        if (g.family == Family::Scale && g.position < 1000) scale_pos = std::max(scale_pos, g.position + 1);
    const Word* vlead = leading_word(Vn);
    GenInfo ga;
    ga.name = symbol;
    ga.family = Family::Scale;
    ga.copy = element_copy(gens_, Vn);
    ga.position = scale_pos;
    ga.degw = degw;
    ga.grade = vlead ? grade(*vlead) : 0;
    GenId A = add_gen(ga);
    GenInfo gb = ga;
    gb.name = symbol + "^-1";
    gb.position = scale_pos + 1;
    gb.grade = -ga.grade;
    GenId B = add_gen(gb);
    gens_[A].inverse = B;
    gens_[B].inverse = A;
    for (auto& [z, l] : lam) {
        if (rank(A) > rank(z)) add_rule(Word{A, z}, Element::word(l, Word{z, A}));
        else add_rule(Word{z, A}, Element::word(l.inv(), Word{A, z}));
        if (rank(B) > rank(z)) add_rule(Word{B, z}, Element::word(l.inv(), Word{z, B}));
        else add_rule(Word{z, B}, Element::word(l, Word{B, z}));
    }
    add_rule(Word{A, B}, Element::unit(f));
    add_rule(Word{B, A}, Element::unit(f));
    for (const Element& rel : rel_maker(A, B)) add_relation(rel);
    complete_overlaps();
    return {A, B};
}

void RewriteSystem::complete_overlaps(int max_rounds) {
    const bool dbg = std::getenv("UNBRAID_DEBUG") != nullptr;
    for (int round = 0; round < max_rounds; ++round) {
        std::vector<Element> defects;
        std::vector<Word> where;
        for_each_critical_pair([&](const Word& w, const Element& a, const Element& b) {
            if (a != b) {
                Element d = a - b;
                defects.push_back(d);
                where.push_back(w);
                return defects.size() < 8; // a few at a time, then re-normalize
            }
            return true;
        });
        if (defects.empty()) return;
        bool added = false;
        for (size_t k = 0; k < defects.size(); ++k) {
            if (dbg) {
                Element dn = nf(defects[k]);
                if (!dn.is_zero())
                    fprintf(stderr, "[complete] round %d overlap %s defect %s\n", round,
                            word_str(where[k]).c_str(), el_str(dn).c_str());
            }
            added = add_relation(defects[k]) || added;
        }
        if (!added) return;
    }
    auto res = confluence_check();
    if (!res.pass)
        throw RewriteError(RewriteError::CompletionFailed,
                           "overlap completion did not converge; witness " + word_str(res.witness));
}

std::string RewriteSystem::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) s += ".";
        s += gens_[w[k]].name;
    }
    return s;
}

std::string RewriteSystem::el_str(const Element& e) const {
    if (e.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [w, c] : e.terms) {
        if (!first) s += " + ";
        first = false;
        s += c.str() + " * " + word_str(w);
    }
    return s;
}

bool linear_independence(const RewriteSystem& rs, const std::vector<Element>& elems, int cap,
                         const RewriteSystem* base, const std::vector<GenId>* base_gens) {
    const CoeffField& f = rs.field();
    std::vector<Element> rows;
    std::vector<std::vector<int>> tuples;
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 1; len <= cap; ++len) {
        std::vector<std::vector<int>> next;
        for (auto& t : frontier)
            for (int k = 0; k < (int)elems.size(); ++k) {
                auto t2 = t;
                t2.push_back(k);
                next.push_back(t2);
                if (base && base_gens) {
                    Word bw;
                    for (int idx : t2) bw.push_back((*base_gens)[idx]);
                    if (!base->is_normal(bw)) continue;
                }
                tuples.push_back(t2);
            }
        frontier = std::move(next);
    }
    for (auto& t : tuples) {
        Element p = Element::unit(f);
        for (int k : t) p = p * elems[k];
        rows.push_back(rs.nf(p));
    }
    // exact rank over the Coeff field
    std::map<Word, int> col_of;
    for (auto& r : rows)
        for (auto& [w, c] : r.terms)
            if (!col_of.count(w)) {
                int id = (int)col_of.size();
                col_of.emplace(w, id);
            }
    int ncols = (int)col_of.size();
    std::vector<std::vector<Coeff>> m;
    for (auto& r : rows) {
        std::vector<Coeff> row(ncols, Coeff::zero(f));
        for (auto& [w, c] : r.terms) row[col_of[w]] = c;
        m.push_back(std::move(row));
    }
    size_t rank = 0;
    for (int c = 0; c < ncols && rank < m.size(); ++c) {
        size_t piv = rank;
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        Coeff ip = m[rank][c].inv();
        for (int j = c; j < ncols; ++j)
            if (!m[rank][j].is_zero()) m[rank][j] = m[rank][j] * ip;
        for (size_t r2 = 0; r2 < m.size(); ++r2) {
            if (r2 == rank || m[r2][c].is_zero()) continue;
            Coeff k = m[r2][c];
            for (int j = c; j < ncols; ++j)
                if (!m[rank][j].is_zero()) m[r2][j] = m[r2][j] - k * m[rank][j];
        }
        ++rank;
    }
    return rank == m.size();
}

} // namespace unbraid
