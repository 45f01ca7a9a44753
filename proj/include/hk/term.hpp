#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hk/errors.hpp"

namespace hk {

// Generators of the free braided monoidal category on one Hopf-algebra-like
// object H, plus the extra generators used by the Habiro and Kerler
// presentations (wbar, vplus, vminus). Every edge is an H-wire; objects are
// just arities.
enum class AtomKind : uint8_t {
    Id,       // 1 : H -> H
    Mu,       // m : H^2 -> H        product
    Eta,      // u : 1 -> H          unit
    Delta,    // d : H -> H^2        coproduct
    Eps,      // e : H -> 1          counit
    S,        // S : H -> H          antipode
    Sinv,     // S' : H -> H
    Lambda,   // l : H -> 1          integral form
    Integ,    // L : 1 -> H          integral element
    Tau,      // t : H -> H          ribbon morphism
    TauInv,   // t' : H -> H
    Cop,      // w : 1 -> H^2        copairing
    Braid,    // c : H^2 -> H^2
    BraidInv, // c' : H^2 -> H^2
    Wbar,     // wb : H^2 -> 1       pairing (Habiro)
    Vplus,    // v+ : 1 -> H         ribbon element (Habiro/Kerler)
    Vminus,   // v- : 1 -> H
};

constexpr int kAtomKindCount = 17;

struct Atom {
    AtomKind kind;
    friend bool operator==(Atom a, Atom b) { return a.kind == b.kind; }
};

int atom_in(AtomKind k);
int atom_out(AtomKind k);
std::string_view atom_token(AtomKind k);

// A morphism H^source -> H^target written as a vertical stack of rows, each
// row a horizontal word of atoms. The empty row list is the identity.
// Composition reads bottom-to-top: rows[0] is applied first.
class Term {
  public:
    Term() : source_(0), target_(0) {}
    explicit Term(int n) : source_(n), target_(n) {} // identity on H^n
    Term(int source, std::vector<std::vector<Atom>> rows);

    int source() const { return source_; }
    int target() const { return target_; }
    const std::vector<std::vector<Atom>>& rows() const { return rows_; }
    size_t atom_count() const;

    friend bool operator==(const Term& a, const Term& b) {
        return a.source_ == b.source_ && a.rows_ == b.rows_;
    }

  private:
    int source_;
    int target_;
    std::vector<std::vector<Atom>> rows_;
};

Term identity(int n);
Term atom_term(AtomKind k);

// Vertical stacking g after f; throws arity_error if f.target != g.source.
Term compose(const Term& g, const Term& f);
// Horizontal juxtaposition, f left of g; the shorter operand is padded with
// identity atoms above its last row.
Term tensor(const Term& f, const Term& g);
Term tensor(std::initializer_list<Term> fs);

// Mirror through a vertical axis: reverses each row, keeps atom kinds.
Term sym(const Term& f);

// c_{n,m} : H^{n+m} -> H^{m+n} expanded through the hexagon recursions.
Term build_braiding(int n, int m);

// Left-greedy canonical form: every atom sinks to the earliest row its input
// wires (or, for arity-0 inputs, its bounding gap) allow. Two terms are equal
// modulo the interchange law iff their canonical forms are equal.
Term canonical(const Term& t);
uint64_t canonical_hash(const Term& t);
bool equal_mod_interchange(const Term& a, const Term& b);

// Term grammar: rows separated by ';', atoms within a row by '#'. Whitespace
// insignificant. Accepts derived names with bracketed parameters (see
// builders.hpp). identity(n) prints as "id[n]".
Term parse(std::string_view text);
std::string print(const Term& t);

std::ostream& operator<<(std::ostream& os, const Term& t);

} // namespace hk
