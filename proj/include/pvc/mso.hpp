#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pvc::mso {

enum class Kind { conj, disj, negation, implies, exists, forall, in, eq, inc, even, macro };

/// Whether a quantifier binds element variables (x in D) or set variables (X subset of D).
enum class Binder { element, set };

/// Formula node. Field use by kind:
///   conj, disj          children (two or more)
///   negation            children[0]
///   implies             children[0] => children[1]
///   exists, forall      binder, vars, domain ("V", "E" or a set variable), children[0]
///   in                  vars = {element, set}
///   eq                  vars = {a, b}
///   inc                 vars = {edge, vertex}
///   even                vars = {set}
///   macro               name, vars = arguments, children[0] = expansion
struct Formula {
    Kind kind = Kind::conj;
    Binder binder = Binder::element;
    std::vector<std::string> vars;
    std::string domain;
    std::string name;
    std::vector<Formula> children;

    bool operator==(const Formula&) const = default;
};

// Builders. conj/disj of a single operand return that operand.
Formula conj(std::vector<Formula> parts);
Formula disj(std::vector<Formula> parts);
Formula negate(Formula f);
Formula implies(Formula premise, Formula conclusion);
Formula exists(Binder binder, std::vector<std::string> vars, std::string domain, Formula body);
Formula forall(Binder binder, std::vector<std::string> vars, std::string domain, Formula body);
Formula in(std::string element, std::string set);
Formula eq(std::string a, std::string b);
Formula inc(std::string edge, std::string vertex);
Formula even(std::string set);
Formula macro(std::string name, std::vector<std::string> args, Formula body);

struct Sentence {
    std::size_t k = 0;
    Formula ast;
};

/// ParityColorable_k with every auxiliary subformula expanded and wrapped in a
/// macro node carrying its name. Throws InvalidParameter for k = 0.
Sentence emit_parity_colourable(std::size_t k);

enum class Syntax { sexpr, text };

std::string render(const Formula& f, Syntax syntax);
/// Throws ParseError on malformed input.
Formula parse(std::string_view text, Syntax syntax);

/// Replaces every macro node by its expansion.
Formula strip_macros(const Formula& f);

/// Number of nodes, macro wrappers excluded.
std::size_t expanded_size(const Formula& f);
std::size_t count_macros(const Formula& f, std::string_view name);

struct StructuralReport {
    std::vector<std::string> diagnostics;
    std::size_t set_variables = 0;      // bound by the outermost quantifier
    std::size_t exclusion_clauses = 0;  // pairwise clauses inside Partition
    std::size_t oddtimes = 0;
    std::size_t size = 0;

    bool ok() const { return diagnostics.empty(); }
};

/// Closedness, sorts of quantified variables, atom arity and sorts, Even only
/// inside Oddtimes, and, when `k` is non-zero, the clause and disjunct counts
/// expected for ParityColorable_k.
StructuralReport structural_check(const Formula& f, std::size_t k = 0);

constexpr int kGrammarVersion = 1;

}  // namespace pvc::mso
