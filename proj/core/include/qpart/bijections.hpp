#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpart/partition.hpp"

namespace qpart {

/// An increasing row of elements together with the gamma value carried by each.
struct GammaMatrix {
  std::vector<Element> values;
  std::vector<int> gamma;

  friend bool operator==(const GammaMatrix&, const GammaMatrix&) = default;
};

/// Intermediate data of the involution phi.
///
/// `closers` / `passants` are the (F_s, gamma) and (P, gamma) rows of the
/// source. The image rows hold the mirrored element sets. The passant row
/// takes the gamma row reversed. Closer gammas are handed over per level l:
/// image closers at level l receive, in increasing order, the gammas of the
/// source closers at level l.
struct PhiCertificate {
  SetPartition source;
  SetPartition image;
  GammaMatrix closers;
  GammaMatrix passants;
  GammaMatrix image_closers;
  GammaMatrix image_passants;
};

/// The involution on P_n^k exchanging mak and makp.
///
/// Built in four steps: classify the source and read off gamma; mirror the
/// four element classes (i -> n+1-i, openers <-> closers); seed one singleton
/// block per image opener; insert the remaining elements in increasing order,
/// each into the gamma-th currently incomplete block. Throws ConsistencyError
/// if an insertion has no valid target or the result does not have the
/// mirrored classification.
SetPartition phi(const SetPartition& p);
PhiCertificate phi_certificate(const SetPartition& p);
std::string to_json(const PhiCertificate& cert);

/// Block exchange on P_n^{k+1}(O) for 1 <= i <= k (the partition has k+1
/// blocks). Leaves all blocks other than B_i, B_{i+1} alone. With
/// g = max(B_{i+1}) and T = {a in B_i : a > g}:
///   |B_{i+1}| > 1:  B_i' = (B_i \ T) + {g},  B_{i+1}' = (B_{i+1} \ {g}) + T
///   |B_{i+1}| = 1:  B_i' = B_i \ T,          B_{i+1}' = B_{i+1} + T
/// Throws std::out_of_range for a bad i and ConsistencyError if the opener
/// set would change.
SetPartition phi_i(const SetPartition& p, int i);

/// Greedy matching of non-singleton openers to non-singleton closers: openers
/// are taken in increasing order and each one receives the smallest unused
/// closer whose level l is one higher. Throws ConsistencyError when no such
/// closer exists.
std::map<Element, Element> match_openers_closers(const SetPartition& p);

}  // namespace qpart
