#pragma once

#include "unbraid/element.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace unbraid {

struct RewriteError : std::runtime_error {
    enum Kind {
        NonTerminating,
        NotScaling,
        NotOrientable,
        CompletionFailed,
        UnknownGenerator,
        RuleConflict
    };
    Kind kind;
    RewriteError(Kind k, const std::string& m) : std::runtime_error(m), kind(k) {}
};

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (GenId g : w) {
            h ^= (size_t)(g + 0x9e3779b9);
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct ConfluenceResult {
    bool pass = true;
    Word witness;
    std::string nf_left, nf_right;
};

// Right-hand side of a rule. For two-letter ascending left-hand words [a, c]
// the rule may carry a skip set: letters allowed between a and c in a match,
// each hopping past a with a fixed scalar. This finitely presents the closure
// of the rule family [a, g1..gk, c] -> prod(lambda) g1..gk RHS.
struct RuleRhs {
    Element rhs;
    std::map<GenId, Coeff> skips;
};

enum class AdjoinMode { Inverse, SqrtInverse };

// Oriented rewrite system over a fixed generator table. Rules map short
// left-hand words (length 1..4; the shipped presentations are quadratic, the
// few longer rules come from scale-element adjunction) to Elements that are
// strictly smaller in the term order: weighted degree, then length, then lex
// by generator rank. Generator rank sorts by copy, then family
// (coordinate < derivative < frt-aux < scale), then position.
class RewriteSystem {
public:
    RewriteSystem(const CoeffField& f) : fld_(&f) {}

    const CoeffField& field() const { return *fld_; }

    GenId add_gen(GenInfo g);
    const GenInfo& gen(GenId g) const { return gens_.at(g); }
    const std::vector<GenInfo>& gens() const { return gens_; }
    GenId find_gen(const std::string& name) const;

    // Term order ------------------------------------------------------------
    long rank(GenId g) const { return rank_.at(g); }
    int weighted_degree(const Word& w) const;
    int grade(const Word& w) const; // diagnostic grading: sum of gen grades
    // strict word order: a < b
    bool word_less(const Word& a, const Word& b) const;
    const Word* leading_word(const Element& e) const;

    // Rules -----------------------------------------------------------------
    void add_rule(const Word& lhs, const Element& rhs);
    // Orients relation "rel = 0" on the leading word of NF(rel); no-op when
    // NF(rel) == 0. Returns whether a rule was added.
    bool add_relation(const Element& rel);
    bool has_rule(const Word& lhs) const { return rules_.count(lhs) != 0; }
    const std::unordered_map<Word, RuleRhs, WordHash>& rules() const { return rules_; }
    size_t rule_count() const { return rules_.size(); }

    // Normal forms ----------------------------------------------------------
    Element nf(const Element& e) const;
    Element nf_mul(const Element& a, const Element& b) const { return nf(a * b); }
    // word -> its normal form (memoized)
    const Element& nf_word(const Word& w) const;
    bool is_normal(const Word& w) const { return !find_redex(w).has_value(); }

    void set_step_budget(long b) { step_budget_ = b; }

    // Confluence ------------------------------------------------------------
    // Checks all critical pairs (overlaps and containments) of the finite
    // rule set; for quadratic rules this is exactly the 3-letter diamond
    // check the presentations are shipped with. cap (when > 0) additionally
    // skips superposed words of weighted degree above it; cap <= 0 checks
    // everything.
    ConfluenceResult confluence_check(int cap = 0) const;

    // Scaling oracle: E*z = lambda_z * z*E for every generator z. Returns the
    // map gen -> lambda, or throws NotScaling.
    std::map<GenId, Coeff> scaling_profile(const Element& E) const;

    // Extension by E^{-1} (single-generator E) or by the pair E^{+1/2},
    // E^{-1/2}. Adds commutation rules from the scaling oracle, the inverse
    // pair rules, the value rule orienting symbol^2 = E, and runs a bounded
    // overlap completion. Returns the new symbols (root first for sqrt mode).
    std::vector<GenId> adjoin_scaling_element(const Element& E, const std::string& symbol,
                                              AdjoinMode mode, int degw = 1);

    // Names a (quadratic) element D as a fresh scale generator u: adds the
    // value rule folding D's leading word into u and the commutation rules
    // [u, z] solved from the partially-stuck normal forms of z*D. Requires the
    // commutators [D, z] to close on words of length <= 2 after folding.
    GenId adjoin_defined_element(const Element& D, const std::string& symbol, int degw = 0);
    // Batch version: all value rules land before any commutator is solved,
    // so mutually-referencing contractions can fold each other's residuals.
    std::vector<GenId> adjoin_defined_elements(
        const std::vector<std::pair<Element, std::string>>& defs);

    // Extension by an invertible element V and its inverse, with commutation
    // rules from the scaling oracle; the value relation linking the new
    // symbol to V is supplied by the caller (pre-multiplied into a shape
    // whose leading word is short), as extra relations after both symbols
    // exist: rel_maker(A, B) with A ~ V, B ~ V^{-1}.
    std::pair<GenId, GenId> adjoin_invertible_element(
        const Element& V, const std::string& symbol, int degw,
        const std::function<std::vector<Element>(GenId, GenId)>& rel_maker);

    // Bounded Knuth-Bendix-style repair used inside adjunction: join failing
    // critical pairs by orienting their differences, a few rounds at most.
    void complete_overlaps(int max_rounds = 8);

    void clear_memo() const { memo_.clear(); }

    std::string word_str(const Word& w) const;
    std::string el_str(const Element& e) const;

private:
    struct Redex {
        int pos;
        int span;          // letters consumed including skipped run
        Word run;          // skipped letters, kept in place
        Coeff factor;      // product of skip scalars
        const RuleRhs* rule;
    };
    std::optional<Redex> find_redex(const Word& w) const;
    void check_orientation(const Word& lhs, const Element& rhs) const;
    std::map<GenId, Coeff> skip_set_for(const Word& lhs) const;
    void refresh_skips();
    void for_each_critical_pair(
        const std::function<bool(const Word&, const Element&, const Element&)>& visit) const;

    const CoeffField* fld_;
    std::vector<GenInfo> gens_;
    std::vector<long> rank_;
    std::unordered_map<Word, RuleRhs, WordHash> rules_;
    int max_lhs_ = 1;
    long step_budget_ = 1000000;
    mutable std::unordered_map<Word, Element, WordHash> memo_;
    mutable long steps_ = 0;
};

// Exact rank test: the NF images of words of length <= cap in elems are
// linearly independent over the Coeff field. When a base presentation is
// given (with base_gens matching elems positionally), only words that are
// normal in the base are taken — the injectivity evidence for a map defined
// on the base algebra.
bool linear_independence(const RewriteSystem& rs, const std::vector<Element>& elems, int cap,
                         const RewriteSystem* base = nullptr,
                         const std::vector<GenId>* base_gens = nullptr);

} // namespace unbraid
