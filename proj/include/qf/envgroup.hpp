#pragma once

#include "qf/presentation.hpp"
#include "qf/quandle.hpp"
#include "qf/rational.hpp"

#include <string>
#include <vector>

namespace qf {

// Group words are signed 1-based generator indices, freely reduced on
// construction; relators may be the empty list.
struct GroupPresentation {
    int generators = 0;
    std::vector<std::vector<int>> relators;
};

std::vector<int> free_reduce(std::vector<int> word);

// Env(Q) for n = 0, Env_n(Q) for n >= 2: one group generator per quandle
// element (or presentation generator), conjugation relators q^-1 p q
// ((p*q)~)^-1, plus q^n relators when n >= 2. Relators that reduce to the
// empty word are dropped.
GroupPresentation env_presentation(const FiniteQuandle& q, int n);
GroupPresentation env_presentation(const QuandlePresentation& p, int n);

struct ExponentMap {
    int modulus = 0; // 0 for Z, n >= 2 for Z_n
};

// Exponent sum of a word, reduced mod n when the map has modulus n >= 2.
// Computed on words; it is well defined on group elements because every
// relator of Env (resp. Env_n) has exponent 0 (resp. 0 mod n), which
// exponent_certificate verifies.
BigInt exponent(const std::vector<int>& word, const ExponentMap& map = {});

// Verifies every relator has exponent 0 (mod n); when it does, the exponent
// map is a well-defined surjection onto Z (or Z_n) and the exponent-zero
// subgroup has index n in Env_n.
struct ExponentCertificate {
    bool ok = false;
    int modulus = 0;
    std::string line;
};
ExponentCertificate exponent_certificate(const GroupPresentation& g, int n);

// Invariant factors d1 | d2 | ... (units dropped), then one 0 per free rank.
struct AbelianInvariants {
    std::vector<BigInt> factors;
    std::string display() const;
    bool operator==(const AbelianInvariants&) const = default;
};

// Exact integer Smith normal form of the relator exponent matrix.
// Deterministic pivoting: smallest nonzero absolute value, ties by position.
AbelianInvariants abelianization(const GroupPresentation& g);

std::vector<std::vector<BigInt>> smith_normal_form(std::vector<std::vector<BigInt>> m);

} // namespace qf
