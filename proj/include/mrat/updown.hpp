#pragma once

#include <string>
#include <vector>

#include "mrat/bigint.hpp"
#include "mrat/diagram.hpp"
#include "mrat/tree.hpp"

namespace mrat {

// Words over {U,D} of length l describe permutations of length l+1:
// letter i is U iff sigma_i < sigma_{i+1}.

std::string updown_word_of(const std::vector<int>& perm);

// Exhaustive count with backtracking; refuses words longer than 11.
Int count_updown_bruteforce(const std::string& word);

// MacMahon/Niven descent-set determinant; exact for any length.
Int count_updown_determinant(const std::string& word);

// 1-based descent positions of the word (letters equal to D).
std::vector<int> descent_set(const std::string& word);

// s-sequence of a caterpillar type: 0, the blocks
// eps_{2i-1}+1..eps_{2i} built from eps_i = delta_1+...+delta_i, and 2e-1.
std::vector<int> build_svalues(const std::vector<int>& delta);

// det(binom(s_i, s_{j-1})) over the extended s-sequence.
Int count_from_svalues(const std::vector<int>& s);

// U^{delta_1} D^{delta_2} U^{delta_3} ...
std::string caterpillar_word(const std::vector<int>& delta);

// A(k): 2up-2down permutations of odd length k.
Int two_up_two_down(int k);
std::string two_up_two_down_word(int k);

// #(P_n) = n * A(2n-1).
Int sharp_path(int n);

// Closed caterpillar count: n* times the U^{delta_1}D^{delta_2}... word count, with
// n* = 2e/|Aut(D+)| for orientation-symmetric diagrams and 4e/|Aut(D+)|
// otherwise.
Int sharp_caterpillar(const CaterpillarType& type, int aut_plus_order,
                      bool orientation_symmetric);

// Euler-Bernoulli numbers K_k: alternating permutations, EGF sec t + tan t.
Int euler_bernoulli(int k);

// Corners c of a path-type oriented diagram whose adjacent chord is
// directed c -> c'.
std::vector<int> bijection_corners(const OrientedDiagram& d);

// The constructive bijection from proper labelings of a path-type diagram
// (label 1 at corner c) onto 2up-2down permutations of length 2n-1.
std::vector<int> path_bijection(const OrientedDiagram& d, const std::vector<int>& labels,
                                    int corner);

}  // namespace mrat
