#pragma once

// Valued Motzkin paths. Element i of a partition becomes step i:
//   non-singleton opener  -> NE, label 1
//   singleton             -> E, label 1, starred
//   non-singleton closer  -> SE, label gamma_i
//   passant               -> E, label gamma_i
// The height before step i is the number of incomplete blocks l_i, so the
// labels of SE and plain E steps lie in [1, height].

#include <string>
#include <string_view>
#include <vector>

#include "qpart/partition.hpp"

namespace qpart {

enum class StepKind { NE, SE, E };

struct Step {
  StepKind kind = StepKind::E;
  int label = 1;
  bool starred = false;

  friend bool operator==(const Step&, const Step&) = default;
};

struct LabeledMotzkinPath {
  std::vector<Step> steps;

  int size() const noexcept { return static_cast<int>(steps.size()); }
  friend bool operator==(const LabeledMotzkinPath&, const LabeledMotzkinPath&) = default;
};

/// Throws ValidationError naming the first offending (1-based) step.
void validate(const LabeledMotzkinPath& path);
bool is_valid(const LabeledMotzkinPath& path) noexcept;

LabeledMotzkinPath encode(const SetPartition& p);
/// Inverse of encode. Validates first.
SetPartition decode(const LabeledMotzkinPath& path);

/// Mirror image: reverse the steps and swap NE with SE. Plain and starred E
/// steps keep their labels in the mirrored position, NE steps are labelled 1,
/// and the SE steps of the result take the input's SE labels level by level:
/// the steps leaving height h get the labels of the input steps leaving
/// height h, in left-to-right order.
LabeledMotzkinPath reflect(const LabeledMotzkinPath& path);

/// "NE(1) E(1*) SE(3) ..." and its parser.
std::string to_string(const LabeledMotzkinPath& path);
LabeledMotzkinPath parse_path(std::string_view text);

/// {"steps":[{"kind":"NE","label":1,"starred":false}, ...]}
std::string to_json(const LabeledMotzkinPath& path);
LabeledMotzkinPath path_from_json(std::string_view json);

/// Lattice drawing: one column per step ('/' NE, '\' SE, '_' E), labels beneath.
std::string render_ascii(const LabeledMotzkinPath& path);

}  // namespace qpart
