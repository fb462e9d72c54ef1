#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "actad/element.hpp"

namespace actad {

// Position maps of a composition x o_i y; all values 1-based.
struct ShuffleMap {
  int slot = 0;
  int mx = 0;
  int my = 0;
  std::vector<int> phi;  // phi[j-1] for j != slot; phi[slot-1] == 0
  std::vector<int> psi;  // psi[k-1]

  int phi_at(int j) const { return phi[static_cast<size_t>(j - 1)]; }
  int psi_at(int k) const { return psi[static_cast<size_t>(k - 1)]; }
  friend bool operator==(const ShuffleMap&, const ShuffleMap&) = default;
};

struct Composite {
  Element result;
  ShuffleMap shuffle;
};

int arity_m(const Element& x);
std::vector<Element> slots_F(const Element& x);
Element total_G(const Element& x);

Composite compose(const Element& x, int i, const Element& y);
ShuffleMap shuffle(const Element& x, int i, const Element& y);

// Raw application sequence, innermost first; indices need not be sorted.
struct GammaSequence {
  std::vector<Element> factors;
  std::vector<int> indices;
};

enum class SwapStrategy { LeftFirst, RightFirst, Random };

struct Normalized {
  Element element;
  std::vector<int> perm;  // perm[p-1] = canonical position of raw factor p
};

Normalized normalize(const GammaSequence& g, SwapStrategy strategy = SwapStrategy::LeftFirst,
                     std::uint64_t seed = 0);

struct Attachment {
  int slot = 0;
  Element subtree;
  std::vector<int> positions;  // positions[u-1]: factor of the whole element that is subtree factor u
};

struct HeadForm {
  Element head;
  std::vector<Attachment> attachments;  // strictly increasing slots
};

HeadForm decompose_head(const Element& z);

struct Assembled {
  Element element;
  std::vector<std::vector<int>> positions;  // per attachment, final position of each factor
};

// Grafts each subtree into its head slot; positions[t] is filled for attachment t.
// Attachment.positions of the input is ignored.
Assembled assemble_head(const Element& head, const std::vector<Attachment>& attachments);

Element embed(const Element& y);

struct AxiomCheck {
  bool ok = true;
  std::string lhs;
  std::string rhs;
};

// (x o_i y) o_{phi(j)} z == (x o_j z) o_i y, for i < j.
AxiomCheck check_associativity(const Element& x, int i, const Element& y, int j, const Element& z);
// phi^(x,i,y)(j) == phi^(x o_k t,i,y)(j), for i < j < k.
AxiomCheck check_phi_short(const Element& x, int i, const Element& y, int j, int k, const Element& t);
// phi^(x o_j z,i,y)(phi^(x,j,z)(k)) == phi^(x o_i y,phi^(x,i,y)(j),z)(phi^(x,i,y)(k)), i < j, k not in {i,j}.
AxiomCheck check_phi_long(const Element& x, int i, const Element& y, int j, const Element& z, int k);

namespace detail {
// Composition without the G/f matching check; callers guarantee it.
Composite compose_trusted(const Element& x, int i, const Element& y);
}  // namespace detail

}  // namespace actad
