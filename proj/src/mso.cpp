#include "pvc/mso.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "pvc/errors.hpp"

namespace pvc::mso {

// ---- builders --------------------------------------------------------------

namespace {

Formula node(Kind kind, std::vector<std::string> vars = {}, std::vector<Formula> children = {}) {
    Formula f;
    f.kind = kind;
    f.vars = std::move(vars);
    f.children = std::move(children);
    return f;
}

Formula junction(Kind kind, std::vector<Formula> parts) {
    if (parts.empty()) throw InvalidParameter("empty conjunction or disjunction");
    if (parts.size() == 1) return std::move(parts.front());
    return node(kind, {}, std::move(parts));
}

Formula quantifier(Kind kind, Binder binder, std::vector<std::string> vars, std::string domain, Formula body) {
    Formula f = node(kind, std::move(vars), {std::move(body)});
    f.binder = binder;
    f.domain = std::move(domain);
    return f;
}

}  // namespace

Formula conj(std::vector<Formula> parts) { return junction(Kind::conj, std::move(parts)); }
Formula disj(std::vector<Formula> parts) { return junction(Kind::disj, std::move(parts)); }
Formula negate(Formula f) { return node(Kind::negation, {}, {std::move(f)}); }
Formula implies(Formula p, Formula q) { return node(Kind::implies, {}, {std::move(p), std::move(q)}); }

Formula exists(Binder binder, std::vector<std::string> vars, std::string domain, Formula body) {
    return quantifier(Kind::exists, binder, std::move(vars), std::move(domain), std::move(body));
}

Formula forall(Binder binder, std::vector<std::string> vars, std::string domain, Formula body) {
    return quantifier(Kind::forall, binder, std::move(vars), std::move(domain), std::move(body));
}

Formula in(std::string element, std::string set) { return node(Kind::in, {std::move(element), std::move(set)}); }
Formula eq(std::string a, std::string b) { return node(Kind::eq, {std::move(a), std::move(b)}); }
Formula inc(std::string edge, std::string vertex) { return node(Kind::inc, {std::move(edge), std::move(vertex)}); }
Formula even(std::string set) { return node(Kind::even, {std::move(set)}); }

Formula macro(std::string name, std::vector<std::string> args, Formula body) {
    Formula f = node(Kind::macro, std::move(args), {std::move(body)});
    f.name = std::move(name);
    return f;
}

// ---- ParityColorable_k -----------------------------------------------------

namespace {

constexpr Binder kElem = Binder::element;
constexpr Binder kSet = Binder::set;

Formula partition(const std::vector<std::string>& xs) {
    std::vector<Formula> covered;
    for (const auto& x : xs) covered.push_back(in("v", x));
    std::vector<Formula> clauses{disj(std::move(covered))};
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            clauses.push_back(disj({negate(in("v", xs[i])), negate(in("v", xs[j]))}));
    return macro("Partition", xs, forall(kElem, {"v"}, "V", conj(std::move(clauses))));
}

Formula connected(const std::string& x, const std::string& y) {
    Formula split = conj({exists(kElem, {"u"}, x, in("u", "A")), exists(kElem, {"v"}, x, negate(in("v", "A")))});
    Formula crossing = exists(
        kElem, {"e"}, y,
        exists(kElem, {"u", "v"}, x, conj({inc("e", "u"), inc("e", "v"), in("u", "A"), negate(in("v", "A"))})));
    return macro("Conn", {x, y}, forall(kSet, {"A"}, x, implies(std::move(split), std::move(crossing))));
}

Formula degree_one(const std::string& x, const std::string& y) {
    Formula only = forall(kElem, {"e"}, y, implies(negate(eq("e", "e1")), negate(inc("e", x))));
    return macro("Deg1", {x, y}, exists(kElem, {"e1"}, y, conj({inc("e1", x), std::move(only)})));
}

Formula degree_two(const std::string& x, const std::string& y) {
    Formula only = forall(kElem, {"e"}, y,
                          implies(conj({negate(eq("e", "e1")), negate(eq("e", "e2"))}), negate(inc("e", x))));
    return macro("Deg2", {x, y},
                 exists(kElem, {"e1", "e2"}, y,
                        conj({inc("e1", x), inc("e2", x), negate(eq("e1", "e2")), std::move(only)})));
}

// The edge set is named F so that it does not shadow the path variable Y.
Formula path(const std::string& x) {
    Formula inner = forall(kElem, {"x"}, x,
                           implies(conj({negate(eq("x", "x1")), negate(eq("x", "x2"))}), degree_two("x", "F")));
    Formula body = conj({negate(eq("x1", "x2")), connected(x, "F"), degree_one("x1", "F"), degree_one("x2", "F"),
                         std::move(inner)});
    return macro("Path", {x}, exists(kSet, {"F"}, "E", exists(kElem, {"x1", "x2"}, x, std::move(body))));
}

Formula oddtimes(const std::string& x, const std::string& y) {
    Formula mirror = forall(kElem, {"x"}, x,
                            conj({implies(in("x", "A"), in("x", y)), implies(negate(in("x", "A")), negate(in("x", y)))}));
    return macro("Oddtimes", {x, y}, exists(kSet, {"A"}, x, conj({negate(even("A")), std::move(mirror)})));
}

}  // namespace

Sentence emit_parity_colourable(std::size_t k) {
    if (k == 0) throw InvalidParameter("emit_parity_colourable: k must be at least 1");
    std::vector<std::string> xs;
    for (std::size_t i = 1; i <= k; ++i) xs.push_back("X" + std::to_string(i));
    std::vector<Formula> odd;
    for (const auto& x : xs) odd.push_back(oddtimes(x, "Y"));
    Formula paths = forall(kSet, {"Y"}, "V", implies(path("Y"), disj(std::move(odd))));
    return {k, exists(kSet, xs, "V", conj({partition(xs), std::move(paths)}))};
}

// ---- rendering -------------------------------------------------------------

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

void render_sexpr(const Formula& f, std::string& out) {
    auto children = [&](std::size_t from) {
        for (std::size_t i = from; i < f.children.size(); ++i) {
            out += ' ';
            render_sexpr(f.children[i], out);
        }
    };
    switch (f.kind) {
        case Kind::conj: out += "(and"; children(0); out += ')'; return;
        case Kind::disj: out += "(or"; children(0); out += ')'; return;
        case Kind::negation: out += "(not"; children(0); out += ')'; return;
        case Kind::implies: out += "(implies"; children(0); out += ')'; return;
        case Kind::exists:
        case Kind::forall:
            out += f.kind == Kind::exists ? "(exists" : "(forall";
            if (f.binder == Binder::set) out += "-set";
            out += " (" + join(f.vars, " ") + ") " + f.domain;
            children(0);
            out += ')';
            return;
        case Kind::in: out += "(in " + join(f.vars, " ") + ')'; return;
        case Kind::eq: out += "(eq " + join(f.vars, " ") + ')'; return;
        case Kind::inc: out += "(inc " + join(f.vars, " ") + ')'; return;
        case Kind::even: out += "(even " + join(f.vars, " ") + ')'; return;
        case Kind::macro:
            out += "(macro " + f.name + " (" + join(f.vars, " ") + ")";
            children(0);
            out += ')';
            return;
    }
}

void render_text(const Formula& f, std::string& out) {
    auto infix = [&](const char* op) {
        out += '(';
        for (std::size_t i = 0; i < f.children.size(); ++i) {
            if (i) out += op;
            render_text(f.children[i], out);
        }
        out += ')';
    };
    switch (f.kind) {
        case Kind::conj: infix(" ∧ "); return;
        case Kind::disj: infix(" ∨ "); return;
        case Kind::implies: infix(" ⇒ "); return;
        case Kind::negation:
            out += "¬";
            render_text(f.children[0], out);
            return;
        case Kind::exists:
        case Kind::forall:
            out += f.kind == Kind::exists ? "∃" : "∀";
            out += join(f.vars, ",");
            out += f.binder == Binder::set ? " ⊆ " : " ∈ ";
            out += f.domain + " [";
            render_text(f.children[0], out);
            out += ']';
            return;
        case Kind::in: out += f.vars[0] + " ∈ " + f.vars[1]; return;
        case Kind::eq: out += f.vars[0] + " = " + f.vars[1]; return;
        case Kind::inc: out += "inc(" + join(f.vars, ",") + ')'; return;
        case Kind::even: out += "Even(" + join(f.vars, ",") + ')'; return;
        case Kind::macro:
            out += "⟨" + f.name + '(' + join(f.vars, ",") + "): ";
            render_text(f.children[0], out);
            out += "⟩";
            return;
    }
}

}  // namespace

std::string render(const Formula& f, Syntax syntax) {
    std::string out;
    if (syntax == Syntax::sexpr) {
        render_sexpr(f, out);
    } else {
        render_text(f, out);
    }
    return out;
}

// ---- parsing ---------------------------------------------------------------

namespace {

struct Token {
    std::string text;  // identifier or symbol
    bool ident = false;
    std::size_t line = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

std::vector<Token> tokenize(std::string_view s, Syntax syntax) {
    static const std::vector<std::string> symbols = {"∃", "∀", "∈", "⊆", "∧", "∨", "⇒", "¬", "⟨", "⟩",
                                                     "(", ")", "[", "]", ",", ":", "="};
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (c == '\n') ++line;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i + 1;
            // Hyphens belong to sexpr keywords (exists-set); in text syntax they never occur.
            while (j < s.size() && ident_char(s[j]) && (s[j] != '-' || syntax == Syntax::sexpr)) ++j;
            out.push_back({std::string(s.substr(i, j - i)), true, line});
            i = j;
            continue;
        }
        bool matched = false;
        if (syntax == Syntax::text || c == '(' || c == ')') {
            for (const auto& sym : symbols) {
                if (s.substr(i, sym.size()) == sym) {
                    out.push_back({sym, false, line});
                    i += sym.size();
                    matched = true;
                    break;
                }
            }
        }
        if (!matched) throw ParseError(line, "unexpected character");
    }
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

    void done() const {
        if (pos_ != t_.size()) fail("trailing input");
    }

    Formula sexpr() {
        expect("(");
        const std::string head = ident();
        Formula f;
        if (head == "and" || head == "or") {
            std::vector<Formula> parts;
            while (!peek(")")) parts.push_back(sexpr());
            if (parts.size() < 2) fail(head + " needs at least two operands");
            f = node(head == "and" ? Kind::conj : Kind::disj, {}, std::move(parts));
        } else if (head == "not") {
            f = negate(sexpr());
        } else if (head == "implies") {
            Formula p = sexpr();
            f = implies(std::move(p), sexpr());
        } else if (head == "exists" || head == "forall" || head == "exists-set" || head == "forall-set") {
            const bool set = head.size() > 6 && head.substr(head.size() - 4) == "-set";
            expect("(");
            std::vector<std::string> vars;
            while (!peek(")")) vars.push_back(ident());
            expect(")");
            if (vars.empty()) fail("quantifier without variables");
            std::string domain = ident();
            f = quantifier(head.rfind("exists", 0) == 0 ? Kind::exists : Kind::forall, set ? kSet : kElem,
                           std::move(vars), std::move(domain), sexpr());
        } else if (head == "in" || head == "eq" || head == "inc") {
            std::string a = ident();
            std::string b = ident();
            f = head == "in" ? in(a, b) : head == "eq" ? eq(a, b) : inc(a, b);
        } else if (head == "even") {
            f = even(ident());
        } else if (head == "macro") {
            std::string name = ident();
            expect("(");
            std::vector<std::string> args;
            while (!peek(")")) args.push_back(ident());
            expect(")");
            f = macro(std::move(name), std::move(args), sexpr());
        } else {
            fail("unknown form '" + head + "'");
        }
        expect(")");
        return f;
    }

    Formula text() {
        if (accept("¬")) return negate(text());
        if (accept("(")) {
            std::vector<Formula> parts{text()};
            std::optional<std::string> op;
            while (!accept(")")) {
                const std::string sym = symbol();
                if (sym != "∧" && sym != "∨" && sym != "⇒") fail("expected a connective");
                if (op && *op != sym) fail("mixed connectives need parentheses");
                op = sym;
                parts.push_back(text());
            }
            if (!op) fail("parenthesised formula without a connective");
            if (*op == "⇒") {
                if (parts.size() != 2) fail("implication takes two operands");
                return implies(std::move(parts[0]), std::move(parts[1]));
            }
            return node(*op == "∧" ? Kind::conj : Kind::disj, {}, std::move(parts));
        }
        if (peek("∃") || peek("∀")) {
            const Kind kind = symbol() == "∃" ? Kind::exists : Kind::forall;
            std::vector<std::string> vars{ident()};
            while (accept(",")) vars.push_back(ident());
            const std::string rel = symbol();
            if (rel != "∈" && rel != "⊆") fail("expected ∈ or ⊆ after quantified variables");
            std::string domain = ident();
            expect("[");
            Formula body = text();
            expect("]");
            return quantifier(kind, rel == "⊆" ? kSet : kElem, std::move(vars), std::move(domain), std::move(body));
        }
        if (accept("⟨")) {
            std::string name = ident();
            expect("(");
            std::vector<std::string> args;
            if (!peek(")")) {
                args.push_back(ident());
                while (accept(",")) args.push_back(ident());
            }
            expect(")");
            expect(":");
            Formula body = text();
            expect("⟩");
            return macro(std::move(name), std::move(args), std::move(body));
        }
        const std::string a = ident();
        if (a == "inc" || a == "Even") {
            expect("(");
            std::string x = ident();
            if (a == "Even") {
                expect(")");
                return even(std::move(x));
            }
            expect(",");
            std::string y = ident();
            expect(")");
            return inc(std::move(x), std::move(y));
        }
        const std::string rel = symbol();
        if (rel == "∈") return in(a, ident());
        if (rel == "=") return eq(a, ident());
        fail("expected ∈ or = after '" + a + "'");
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        const std::size_t line = pos_ < t_.size() ? t_[pos_].line : (t_.empty() ? 1 : t_.back().line);
        throw ParseError(line, what);
    }
    bool peek(const char* sym) const { return pos_ < t_.size() && !t_[pos_].ident && t_[pos_].text == sym; }
    bool accept(const char* sym) {
        if (!peek(sym)) return false;
        ++pos_;
        return true;
    }
    void expect(const char* sym) {
        if (!accept(sym)) fail(std::string("expected '") + sym + "'");
    }
    std::string ident() {
        if (pos_ >= t_.size() || !t_[pos_].ident) fail("expected an identifier");
        return t_[pos_++].text;
    }
    std::string symbol() {
        if (pos_ >= t_.size() || t_[pos_].ident) fail("expected a symbol");
        return t_[pos_++].text;
    }

    std::vector<Token> t_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text, Syntax syntax) {
    Parser p(tokenize(text, syntax));
    Formula f = syntax == Syntax::sexpr ? p.sexpr() : p.text();
    p.done();
    return f;
}

// ---- structure -------------------------------------------------------------

Formula strip_macros(const Formula& f) {
    if (f.kind == Kind::macro) return strip_macros(f.children[0]);
    Formula out = f;
    for (auto& c : out.children) c = strip_macros(c);
    return out;
}

std::size_t expanded_size(const Formula& f) {
    std::size_t n = f.kind == Kind::macro ? 0 : 1;
    for (const auto& c : f.children) n += expanded_size(c);
    return n;
}

std::size_t count_macros(const Formula& f, std::string_view name) {
    std::size_t n = f.kind == Kind::macro && f.name == name ? 1 : 0;
    for (const auto& c : f.children) n += count_macros(c, name);
    return n;
}

namespace {

enum class Base { vertex, edge };

struct Sort {
    Binder binder;
    Base base;
};

class Checker {
public:
    explicit Checker(StructuralReport& report) : r_(report) {}

    void visit(const Formula& f, bool in_oddtimes, bool in_partition) {
        switch (f.kind) {
            case Kind::conj:
            case Kind::disj:
                if (f.children.size() < 2) diag("junction with fewer than two operands");
                if (in_partition && f.kind == Kind::disj && is_exclusion(f)) ++r_.exclusion_clauses;
                break;
            case Kind::negation:
                if (f.children.size() != 1) diag("negation takes one operand");
                break;
            case Kind::implies:
                if (f.children.size() != 2) diag("implication takes two operands");
                break;
            case Kind::exists:
            case Kind::forall: quantified(f, in_oddtimes, in_partition); return;
            case Kind::in:
                if (arity(f, 2)) {
                    auto x = lookup(f.vars[0]);
                    auto s = lookup(f.vars[1]);
                    if (x && s && (x->binder != Binder::element || s->binder != Binder::set || x->base != s->base))
                        diag("sort mismatch in " + f.vars[0] + " ∈ " + f.vars[1]);
                }
                break;
            case Kind::eq:
                if (arity(f, 2)) {
                    auto a = lookup(f.vars[0]);
                    auto b = lookup(f.vars[1]);
                    if (a && b && (a->binder != Binder::element || b->binder != Binder::element || a->base != b->base))
                        diag("sort mismatch in " + f.vars[0] + " = " + f.vars[1]);
                }
                break;
            case Kind::inc:
                if (arity(f, 2)) {
                    auto e = lookup(f.vars[0]);
                    auto v = lookup(f.vars[1]);
                    if (e && (e->binder != Binder::element || e->base != Base::edge))
                        diag("inc expects an edge, got " + f.vars[0]);
                    if (v && (v->binder != Binder::element || v->base != Base::vertex))
                        diag("inc expects a vertex, got " + f.vars[1]);
                }
                break;
            case Kind::even:
                if (arity(f, 1)) {
                    auto s = lookup(f.vars[0]);
                    if (s && s->binder != Binder::set) diag("Even expects a set, got " + f.vars[0]);
                }
                if (!in_oddtimes) diag("Even outside Oddtimes");
                break;
            case Kind::macro:
                if (f.children.size() != 1) diag("macro " + f.name + " must wrap one formula");
                for (const auto& a : f.vars) lookup(a);
                if (f.name == "Oddtimes") ++r_.oddtimes;
                in_oddtimes = in_oddtimes || f.name == "Oddtimes";
                in_partition = in_partition || f.name == "Partition";
                break;
        }
        for (const auto& c : f.children) visit(c, in_oddtimes, in_partition);
    }

private:
    void diag(std::string what) { r_.diagnostics.push_back(std::move(what)); }

    bool arity(const Formula& f, std::size_t n) {
        if (f.vars.size() == n && f.children.empty()) return true;
        diag("atom with wrong arity");
        return false;
    }

    std::optional<Sort> lookup(const std::string& name) {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
            if (it->first == name) return it->second;
        diag("free variable " + name);
        return std::nullopt;
    }

    static bool is_exclusion(const Formula& f) {
        if (f.children.size() != 2) return false;
        for (const auto& c : f.children)
            if (c.kind != Kind::negation || c.children.size() != 1 || c.children[0].kind != Kind::in) return false;
        return true;
    }

    void quantified(const Formula& f, bool in_oddtimes, bool in_partition) {
        if (f.vars.empty()) diag("quantifier without variables");
        if (f.children.size() != 1) {
            diag("quantifier must have one body");
            return;
        }
        Base base = Base::vertex;
        if (f.domain == "E") {
            base = Base::edge;
        } else if (f.domain != "V") {
            auto d = lookup(f.domain);
            if (d && d->binder != Binder::set) diag("quantifier domain " + f.domain + " is not a set");
            if (d) base = d->base;
        }
        for (const auto& v : f.vars) {
            if (v == "V" || v == "E") diag("variable named like a universe");
            scope_.push_back({v, Sort{f.binder, base}});
        }
        visit(f.children[0], in_oddtimes, in_partition);
        scope_.resize(scope_.size() - f.vars.size());
    }

    StructuralReport& r_;
    std::vector<std::pair<std::string, Sort>> scope_;
};

}  // namespace

StructuralReport structural_check(const Formula& f, std::size_t k) {
    StructuralReport report;
    report.size = expanded_size(f);
    if ((f.kind == Kind::exists || f.kind == Kind::forall) && f.binder == Binder::set) {
        report.set_variables = f.vars.size();
    }
    Checker(report).visit(f, false, false);
    if (k > 0) {
        if (report.set_variables != k)
            report.diagnostics.push_back("expected " + std::to_string(k) + " colour-class variables");
        if (report.exclusion_clauses != k * (k - 1) / 2)
            report.diagnostics.push_back("expected " + std::to_string(k * (k - 1) / 2) + " exclusion clauses, found " +
                                         std::to_string(report.exclusion_clauses));
        if (report.oddtimes != k)
            report.diagnostics.push_back("expected " + std::to_string(k) + " Oddtimes disjuncts, found " +
                                         std::to_string(report.oddtimes));
    }
    return report;
}

}  // namespace pvc::mso
