#pragma once

#include <array>
#include <string_view>

#include "propp/error.hpp"
#include "propp/sumset_structure.hpp"

namespace propp {

// Every check the audit can emit, keyed by equation tag. `kind` says
// whether the inequality must hold for every n (given the hypotheses
// recorded on the check) or only asymptotically.
struct RegistryEntry {
  std::string_view tag;
  std::string_view anchor;
  CheckKind kind;
};

namespace detail {
inline constexpr CheckKind U = CheckKind::Unconditional;
inline constexpr CheckKind C = CheckKind::Conditional;
}  // namespace detail

inline constexpr std::array kRegistry = {
    // set-up shared by every case
    RegistryEntry{"lemma31", "is disjoint from", detail::U},
    RegistryEntry{"Adecompo", "is an injection", detail::U},
    RegistryEntry{"B1A3disjoint", "disjoint subsets of the interval", detail::U},
    RegistryEntry{"dyadicembed", "disjoint subsets of the interval", detail::U},
    RegistryEntry{"B_1/2size", "for every $a\\in A_{[\\frac{1}{2}]}$ there is a power of $2$", detail::U},
    RegistryEntry{"lemmalo", "no incidences of the form", detail::U},
    RegistryEntry{"lemmalo.bound", "trivial upper bound on the number of integers", detail::U},
    RegistryEntry{"B_1'decompo", "C_1", detail::U},
    RegistryEntry{"C1'size", "C_1'", detail::U},
    RegistryEntry{"C1'even", "C_1'", detail::U},
    RegistryEntry{"Zsize", "Zsize", detail::U},
    RegistryEntry{"Zpartition", "Z_B", detail::U},
    RegistryEntry{"Z_RG", "are disjoint by definition of", detail::U},
    RegistryEntry{"Ycrucial.size", "crucially that", detail::U},
    RegistryEntry{"Ycrucial.range", "crucially that", detail::U},
    RegistryEntry{"Ycrucial.disjoint", "crucially that", detail::U},
    RegistryEntry{"Ycrucial.integral", "crucially that", detail::U},
    RegistryEntry{"goodineq", "goodineq", detail::U},
    RegistryEntry{"B_2equals", "B_2equals", detail::U},
    RegistryEntry{"basicmult", "consists exclusively of integer multiples", detail::U},
    RegistryEntry{"jaja2", "by applying Lemma", detail::U},
    RegistryEntry{"Coddcase2", "for each of", detail::U},
    // Case 1
    RegistryEntry{"case1", "Case 1", detail::U},
    RegistryEntry{"case1.trivial", "so we get the trivial estimate", detail::U},
    RegistryEntry{"case1.noexpansion", "so we get the trivial estimate", detail::U},
    RegistryEntry{"case1.gcd", "gcd", detail::U},
    RegistryEntry{"case1.Q", "contains an interval $Q$ of length at least", detail::U},
    RegistryEntry{"case1.Qlong", "contains an interval $Q$ of length at least", detail::U},
    RegistryEntry{"case1.min", "s>\\frac{4n}{9}+1", detail::U},
    RegistryEntry{"case1.band", "\\left\\lfloor\\frac{s-1}{2}\\right\\rfloor", detail::U},
    RegistryEntry{"case1.final", "Case 1", detail::U},
    // Case 2
    RegistryEntry{"case2", "Case 2", detail::U},
    RegistryEntry{"q12bound", "with modulus", detail::U},
    RegistryEntry{"go1", "Hence we conclude", detail::U},
    RegistryEntry{"go2", "Hence we conclude", detail::U},
    RegistryEntry{"case2.gcd", "gcd", detail::U},
    RegistryEntry{"Qdefi", "Qdefi", detail::U},
    RegistryEntry{"Qdisjoint", "are disjoint", detail::U},
    RegistryEntry{"A'sizebound1", "A'sizebound1", detail::U},
    RegistryEntry{"3Modulo6many", "3Modulo6many", detail::U},
    RegistryEntry{"Aprimebound", "Aprimebound", detail::C},
    RegistryEntry{"A''B1disjoint", "Aprimebound", detail::U},
    RegistryEntry{"A''B1size", "Aprimebound", detail::U},
    RegistryEntry{"O_1expansionsum", "O_1expansionsum", detail::U},
    RegistryEntry{"B_1LRbound", "B_1LRbound", detail::C},
    RegistryEntry{"evenpack.disjoint", "pairwise disjoint sets of even numbers", detail::U},
    RegistryEntry{"evenpack", "pairwise disjoint sets of even numbers", detail::U},
    RegistryEntry{"case2.final", "Case 2", detail::C},
    // Case 3, common part
    RegistryEntry{"case3", "Case 3", detail::U},
    RegistryEntry{"inductionbound", "by induction on $n$ we may assume", detail::C},
    RegistryEntry{"inductionboundmultiples", "the induction hypothesis gives the bound", detail::C},
    RegistryEntry{"A_2lowe", "If neither of", detail::C},
    RegistryEntry{"A_2genelowe", "A_2genelowe", detail::C},
    RegistryEntry{"jajaja", "jajaja", detail::U},
    RegistryEntry{"jaja1", "jaja1", detail::U},
    RegistryEntry{"jajafinal", "stronger than we need", detail::U},
    RegistryEntry{"subcase3.1", "Subcase 3.1", detail::U},
    RegistryEntry{"subcase3.2", "Subcase 3.2", detail::U},
    RegistryEntry{"A_u,0bound", "A_u,0bound", detail::C},
    // one residue class of A_(1/2,1] mod 3 empty
    RegistryEntry{"yaya0", "yaya0", detail::C},
    RegistryEntry{"yaya1", "yaya1", detail::U},
    RegistryEntry{"yaya2", "yaya2", detail::U},
    RegistryEntry{"nonempty.final", "nonemptylemma", detail::C},
    // gcd* = 9
    RegistryEntry{"classbound", "dada1", detail::U},
    RegistryEntry{"dada0", "dada0", detail::C},
    RegistryEntry{"dada1", "dada1", detail::U},
    RegistryEntry{"dada.final", "dada1", detail::C},
    RegistryEntry{"zaza0", "zaza0", detail::C},
    RegistryEntry{"zaza1", "zaza1", detail::C},
    RegistryEntry{"zaza2", "zaza2", detail::C},
    RegistryEntry{"zaza.final", "zaza2", detail::C},
    RegistryEntry{"nonzero9", "the proof here is exactly the same", detail::C},
    RegistryEntry{"Ubound9", "the proof here is exactly the same", detail::C},
    // gcd* = 6
    RegistryEntry{"Qlength", "has common difference $6$ and length at least", detail::U},
    RegistryEntry{"eq1", "eq1", detail::U},
    RegistryEntry{"shii", "shii", detail::U},
    RegistryEntry{"eq2", "eq2", detail::C},
    RegistryEntry{"eq.final", "eq2", detail::C},
    RegistryEntry{"oddA'", "oddA'", detail::U},
    RegistryEntry{"evenA'", "evenA'", detail::U},
    RegistryEntry{"oddeven.final", "evenA'", detail::U},
    // gcd* = 3
    RegistryEntry{"normalization", "remove at most", detail::C},
    RegistryEntry{"B_2decompo", "B_2decompo", detail::U},
    RegistryEntry{"Coddu", "for each of $i=1,3$", detail::U},
    RegistryEntry{"expands4", "Either the following inequality holds", detail::C},
    RegistryEntry{"noexpands4u", "Either the following inequality holds", detail::C},
    RegistryEntry{"divideby4", "Either the following inequality holds", detail::U},
    RegistryEntry{"A_2case1", "A_2case1", detail::C},
    RegistryEntry{"B2Lbound", "AminusB", detail::U},
    RegistryEntry{"AminusB", "AminusB", detail::C},
    RegistryEntry{"Bbound", "Bbound", detail::C},
    RegistryEntry{"A_2T", "A_2T", detail::C},
    RegistryEntry{"minineq", "minineq", detail::C},
    RegistryEntry{"3.1.3Q", "3.1.3Q", detail::C},
    RegistryEntry{"nomult3", "3.1.3Q", detail::C},
    RegistryEntry{"IB1disjoint", "3.1.3Q", detail::U},
    RegistryEntry{"branch(i)", "if we choose", detail::C},
    RegistryEntry{"branch(ii)", "if we choose", detail::C},
    RegistryEntry{"branch(ii')", "if we choose", detail::C},
    // expansion leaf
    RegistryEntry{"freimaindouble", "freimaindouble", detail::U},
    RegistryEntry{"rara1", "One of the following three statements holds", detail::C},
    RegistryEntry{"rara2", "One of the following three statements holds", detail::C},
    RegistryEntry{"rara4", "One of the following three statements holds", detail::U},
    RegistryEntry{"lemmaZ", "One of the following three statements holds", detail::U},
    RegistryEntry{"lemmaZ.AP", "One of the following three statements holds", detail::C},
    RegistryEntry{"cor11", "If either of", detail::C},
    RegistryEntry{"cor120", "If either of", detail::C},
    RegistryEntry{"bababa1", "bababa1", detail::U},
    RegistryEntry{"goodineqnew", "goodineqnew", detail::U},
    RegistryEntry{"Mainbound", "Mainbound", detail::C},
    RegistryEntry{"mamama0", "mamama0", detail::C},
    RegistryEntry{"A_u,1dense", "A_u,1dense", detail::C},
    RegistryEntry{"final1", "final1", detail::U},
    RegistryEntry{"final2", "final2", detail::U},
    RegistryEntry{"lemmaB_bound", "Furthermore, if case", detail::U},
    RegistryEntry{"final2case3", "Furthermore, if case", detail::C},
    RegistryEntry{"expansion.final", "the proof here is exactly the same", detail::C},
    RegistryEntry{"3.2.expansion", "the proof here is exactly the same", detail::U},
    RegistryEntry{"gcd.other", "gcd", detail::C},
};

inline const RegistryEntry& registry_entry(std::string_view tag) {
  for (const auto& e : kRegistry)
    if (e.tag == tag) return e;
  throw Error(ErrorKind::PreconditionViolation, "no registry entry for " + std::string(tag));
}

}  // namespace propp
