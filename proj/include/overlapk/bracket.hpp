#pragma once

// Bracket expressions: the homology side. AST over generators x_i, long
// brackets {x_{i1},...,x_{ik}}, the Poisson bracket [.,.] of degree d-1, the
// commutative product, and the unit. Indices are linear: each element of
// {1..n} appears exactly once across an expression.

#include <cctype>
#include <compare>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "overlapk/formal_sum.hpp"
#include "overlapk/koszul.hpp"

namespace overlapk {

class BracketExpr {
public:
    enum class Kind { Unit, Var, Long, Br, Prod };

    static BracketExpr unit() { return BracketExpr(Kind::Unit, 0, {}); }
    static BracketExpr var(int i) {
        if (i < 1) throw std::invalid_argument("BracketExpr: variable index must be positive");
        return BracketExpr(Kind::Var, i, {});
    }
    static BracketExpr long_bracket(std::vector<BracketExpr> args) {
        if (args.size() < 2) throw std::invalid_argument("BracketExpr: long bracket arity");
        return BracketExpr(Kind::Long, 0, std::move(args));
    }
    static BracketExpr br(BracketExpr l, BracketExpr r) {
        return BracketExpr(Kind::Br, 0, {std::move(l), std::move(r)});
    }
    // Flattened product; empty product is the unit.
    static BracketExpr prod(std::vector<BracketExpr> factors) {
        std::vector<BracketExpr> flat;
        for (auto& f : factors) {
            if (f.kind() == Kind::Prod)
                for (const auto& g : f.children()) flat.push_back(g);
            else if (f.kind() != Kind::Unit)
                flat.push_back(std::move(f));
        }
        if (flat.empty()) return unit();
        if (flat.size() == 1) return flat[0];
        return BracketExpr(Kind::Prod, 0, std::move(flat));
    }

    Kind kind() const { return kind_; }
    int var_index() const { return var_; }
    const std::vector<BracketExpr>& children() const { return children_; }

    int degree(int d) const {
        switch (kind_) {
            case Kind::Unit:
            case Kind::Var:
                return 0;
            case Kind::Long: {
                int deg = (int(children_.size()) - 1) * d - 1;
                for (const auto& c : children_) deg += c.degree(d);
                return deg;
            }
            case Kind::Br:
                return (d - 1) + children_[0].degree(d) + children_[1].degree(d);
            case Kind::Prod: {
                int deg = 0;
                for (const auto& c : children_) deg += c.degree(d);
                return deg;
            }
        }
        return 0;
    }

    void collect_indices(std::vector<int>& out) const {
        if (kind_ == Kind::Var) out.push_back(var_);
        for (const auto& c : children_) c.collect_indices(out);
    }
    // Indices, checking linearity (each used once).
    std::set<int> support() const {
        std::vector<int> idx;
        collect_indices(idx);
        std::set<int> s(idx.begin(), idx.end());
        if (s.size() != idx.size())
            throw std::invalid_argument("BracketExpr: repeated index (slots must be linear)");
        return s;
    }

    bool all_long_args_are_vars() const {
        if (kind_ == Kind::Long)
            for (const auto& c : children_)
                if (c.kind() != Kind::Var) return false;
        for (const auto& c : children_)
            if (!c.all_long_args_are_vars()) return false;
        return true;
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::Unit: return "1";
            case Kind::Var: return "x" + std::to_string(var_);
            case Kind::Long: {
                std::string s = "{";
                for (size_t i = 0; i < children_.size(); ++i)
                    s += (i ? "," : "") + children_[i].to_string();
                return s + "}";
            }
            case Kind::Br:
                return "[" + children_[0].to_string() + "," + children_[1].to_string() + "]";
            case Kind::Prod: {
                std::string s;
                for (size_t i = 0; i < children_.size(); ++i)
                    s += (i ? "*" : "") + children_[i].to_string();
                return s;
            }
        }
        return "";
    }

    friend bool operator==(const BracketExpr& a, const BracketExpr& b) {
        return a.kind_ == b.kind_ && a.var_ == b.var_ && a.children_ == b.children_;
    }
    friend bool operator<(const BracketExpr& a, const BracketExpr& b) {
        if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
        if (a.var_ != b.var_) return a.var_ < b.var_;
        return a.children_ < b.children_;
    }

private:
    BracketExpr(Kind k, int v, std::vector<BracketExpr> ch)
        : kind_(k), var_(v), children_(std::move(ch)) {}

    Kind kind_;
    int var_;
    std::vector<BracketExpr> children_;
};

using ExprSum = FormalSum<BracketExpr>;

// ------------------------------- parsing ------------------------------------

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    BracketExpr parse() {
        BracketExpr e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("bracket expression: " + msg + " at offset " +
                                    std::to_string(pos_));
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    BracketExpr parse_expr() {
        std::vector<BracketExpr> factors;
        factors.push_back(parse_term());
        while (eat('*')) factors.push_back(parse_term());
        return BracketExpr::prod(std::move(factors));
    }

    BracketExpr parse_term() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '1') { ++pos_; return BracketExpr::unit(); }
        if (c == 'x') {
            ++pos_;
            return BracketExpr::var(parse_int());
        }
        if (c == '{') {
            ++pos_;
            std::vector<BracketExpr> args;
            args.push_back(parse_expr());
            while (eat(',')) args.push_back(parse_expr());
            expect('}');
            return BracketExpr::long_bracket(std::move(args));
        }
        if (c == '[') {
            ++pos_;
            BracketExpr l = parse_expr();
            expect(',');
            BracketExpr r = parse_expr();
            expect(']');
            return BracketExpr::br(std::move(l), std::move(r));
        }
        if (c == '(') {
            ++pos_;
            BracketExpr e = parse_expr();
            expect(')');
            return e;
        }
        fail("unexpected character");
    }

    int parse_int() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }
};

}  // namespace detail

inline BracketExpr parse_bracket_expr(const std::string& text) {
    return detail::ExprParser(text).parse();
}

// --------------------------- right-action normal form -----------------------

// Rewrites until every long-bracket argument is a generator x_i. Product
// arguments split by the Leibniz rule, bracket arguments by its graded
// companion, unit arguments kill the term; arguments move to the last slot
// through the (-1)^{|sigma| d} symmetry with Koszul corrections for the
// arguments' own degrees.
namespace detail {

inline ExprSum normalize_expr(const BracketExpr& e, int d);

inline ExprSum normalize_long(std::vector<BracketExpr> args, int d) {
    const int k = int(args.size());
    int j = -1;
    for (int i = 0; i < k; ++i)
        if (args[i].kind() != BracketExpr::Kind::Var) { j = i; break; }
    if (j < 0) {
        ExprSum out;
        out.add(BracketExpr::long_bracket(std::move(args)), BigInt(1));
        return out;
    }
    // Move slot j to the end.
    long long move_sign = (long long)(k - 1 - j) * d;
    int dj = args[j].degree(d);
    for (int t = j + 1; t < k; ++t) move_sign += (long long)dj * args[t].degree(d);
    BracketExpr a = args[j];
    args.erase(args.begin() + j);
    std::vector<BracketExpr> rest = args;  // k-1 leading slots

    ExprSum out;
    auto emit = [&](const BracketExpr& expr, long long sgn_exp) {
        ExprSum sub = normalize_expr(expr, d);
        sub.scale(BigInt(sign_pow(move_sign + sgn_exp)));
        out += sub;
    };

    switch (a.kind()) {
        case BracketExpr::Kind::Unit:
            return out;  // {...,1} = 0
        case BracketExpr::Kind::Prod: {
            // {a_1..a_{k-1}, s*t} = (-1)^{|s||{a,t}|} s*{a_1..a_{k-1},t} + {a_1..a_{k-1},s}*t
            BracketExpr s = a.children()[0];
            std::vector<BracketExpr> tail(a.children().begin() + 1, a.children().end());
            BracketExpr t = BracketExpr::prod(std::move(tail));
            std::vector<BracketExpr> with_t = rest;
            with_t.push_back(t);
            std::vector<BracketExpr> with_s = rest;
            with_s.push_back(s);
            int deg_long_t = BracketExpr::long_bracket(with_t).degree(d);
            emit(BracketExpr::prod({s, BracketExpr::long_bracket(with_t)}),
                 (long long)s.degree(d) * deg_long_t);
            emit(BracketExpr::prod({BracketExpr::long_bracket(with_s), t}), 0);
            return out;
        }
        case BracketExpr::Kind::Br: {
            // {a_1..a_{k-1},[s,t]} = (-1)^{d+|s|(d-1+|t|)}[{a_1..a_{k-1},t},s]
            //                        + (-1)^{|s|(d-1)}[{a_1..a_{k-1},s},t]
            BracketExpr s = a.children()[0];
            BracketExpr t = a.children()[1];
            std::vector<BracketExpr> with_t = rest;
            with_t.push_back(t);
            std::vector<BracketExpr> with_s = rest;
            with_s.push_back(s);
            emit(BracketExpr::br(BracketExpr::long_bracket(with_t), s),
                 d + (long long)s.degree(d) * (d - 1 + t.degree(d)));
            emit(BracketExpr::br(BracketExpr::long_bracket(with_s), t),
                 (long long)s.degree(d) * (d - 1));
            return out;
        }
        case BracketExpr::Kind::Long:
            // The right action only ever inserts products of iterated brackets
            // of generators; a long bracket cannot sit inside a slot.
            throw std::invalid_argument(
                "normalize: long bracket inside a long-bracket slot is not a "
                "right-action expression");
        case BracketExpr::Kind::Var:
            break;  // unreachable
    }
    return out;
}

inline ExprSum normalize_expr(const BracketExpr& e, int d) {
    ExprSum out;
    switch (e.kind()) {
        case BracketExpr::Kind::Unit:
        case BracketExpr::Kind::Var:
            out.add(e, BigInt(1));
            return out;
        case BracketExpr::Kind::Br: {
            ExprSum l = normalize_expr(e.children()[0], d);
            ExprSum r = normalize_expr(e.children()[1], d);
            for (const auto& [lk, lc] : l.terms())
                for (const auto& [rk, rc] : r.terms())
                    out.add(BracketExpr::br(lk, rk), lc * rc);
            return out;
        }
        case BracketExpr::Kind::Prod: {
            out.add(BracketExpr::unit(), BigInt(1));
            for (const auto& f : e.children()) {
                ExprSum fs = normalize_expr(f, d);
                ExprSum next;
                for (const auto& [ok, oc] : out.terms())
                    for (const auto& [fk, fc] : fs.terms())
                        next.add(BracketExpr::prod({ok, fk}), oc * fc);
                out = std::move(next);
            }
            return out;
        }
        case BracketExpr::Kind::Long: {
            // Expand argument sums multilinearly, then fix the slots.
            std::vector<ExprSum> arg_sums;
            for (const auto& a : e.children()) arg_sums.push_back(normalize_expr(a, d));
            std::vector<std::pair<std::vector<BracketExpr>, BigInt>> combos = {{{}, BigInt(1)}};
            for (const auto& as : arg_sums) {
                std::vector<std::pair<std::vector<BracketExpr>, BigInt>> next;
                for (const auto& [prefix, pc] : combos)
                    for (const auto& [ak, ac] : as.terms()) {
                        auto ext = prefix;
                        ext.push_back(ak);
                        next.emplace_back(std::move(ext), pc * ac);
                    }
                combos = std::move(next);
            }
            for (auto& [slots, c] : combos) {
                ExprSum sub = normalize_long(std::move(slots), d);
                sub.scale(c);
                out += sub;
            }
            return out;
        }
    }
    return out;
}

}  // namespace detail

inline ExprSum right_action_normalize(const BracketExpr& e, int d) {
    return detail::normalize_expr(e, d);
}

// ------------------------------- left action --------------------------------

inline BracketExpr relabel_expr(const BracketExpr& e, const std::vector<int>& image) {
    switch (e.kind()) {
        case BracketExpr::Kind::Unit:
            return e;
        case BracketExpr::Kind::Var: {
            int i = e.var_index();
            if (i < 1 || i > int(image.size()))
                throw std::invalid_argument("relabel_expr: index out of range");
            return BracketExpr::var(image[i - 1]);
        }
        default: {
            std::vector<BracketExpr> ch;
            for (const auto& c : e.children()) ch.push_back(relabel_expr(c, image));
            switch (e.kind()) {
                case BracketExpr::Kind::Long: return BracketExpr::long_bracket(std::move(ch));
                case BracketExpr::Kind::Br: return BracketExpr::br(ch[0], ch[1]);
                default: return BracketExpr::prod(std::move(ch));
            }
        }
    }
}

// Substitutes args into the slots of a bracket/product pattern p (no long
// brackets), relabeling each argument into its consecutive index block.
inline BracketExpr left_action(const BracketExpr& p, const std::vector<BracketExpr>& args) {
    std::set<int> slots = p.support();
    if (slots.size() != args.size())
        throw std::invalid_argument("left_action: arity mismatch");
    for (int i = 1; i <= int(args.size()); ++i)
        if (!slots.count(i)) throw std::invalid_argument("left_action: pattern slots must be 1..n");

    std::vector<int> sizes(args.size());
    std::vector<int> offsets(args.size(), 0);
    int total = 0;
    for (size_t i = 0; i < args.size(); ++i) {
        sizes[i] = int(args[i].support().size());
        offsets[i] = total;
        total += sizes[i];
    }

    std::function<BracketExpr(const BracketExpr&)> subst = [&](const BracketExpr& e) -> BracketExpr {
        switch (e.kind()) {
            case BracketExpr::Kind::Unit:
                return e;
            case BracketExpr::Kind::Var: {
                int i = e.var_index();
                const BracketExpr& arg = args[i - 1];
                std::set<int> sup = arg.support();
                int local = 0;
                std::vector<int> img(sup.empty() ? 0 : *sup.rbegin(), 0);
                for (int s : sup) img[s - 1] = ++local + offsets[i - 1];
                return relabel_expr(arg, img);
            }
            case BracketExpr::Kind::Long:
                throw std::invalid_argument("left_action: pattern must not contain long brackets");
            case BracketExpr::Kind::Br:
                return BracketExpr::br(subst(e.children()[0]), subst(e.children()[1]));
            case BracketExpr::Kind::Prod: {
                std::vector<BracketExpr> ch;
                for (const auto& c : e.children()) ch.push_back(subst(c));
                return BracketExpr::prod(std::move(ch));
            }
        }
        return e;
    };
    return subst(p);
}

}  // namespace overlapk
