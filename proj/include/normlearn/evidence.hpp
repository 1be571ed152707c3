// Copyright 2026 The normlearn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dempster-Shafer belief functions over small finite frames of discernment.
//
// Subsets of a frame are encoded as bit sets against the frame's fixed
// element order, so set equality and intersection are exact integer
// operations. Frames are limited to 64 elements.

#ifndef NORMLEARN_EVIDENCE_HPP_
#define NORMLEARN_EVIDENCE_HPP_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace normlearn {

using SubsetBits = std::uint64_t;

inline constexpr double kMassTolerance = 1e-9;
inline constexpr double kConflictTolerance = 1e-12;
inline constexpr double kPruneThreshold = 1e-12;

class FrameOfDiscernment;
using FramePtr = std::shared_ptr<const FrameOfDiscernment>;

// Θ: an ordered set of mutually exclusive atoms.
class FrameOfDiscernment {
 public:
  // Throws kInvalidFrame for fewer than two, duplicate, or more than 64
  // elements.
  static FramePtr create(std::vector<std::string> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  SubsetBits full_mask() const;

  bool operator==(const FrameOfDiscernment& other) const {
    return elements_ == other.elements_;
  }

 private:
  explicit FrameOfDiscernment(std::vector<std::string> elements)
      : elements_(std::move(elements)) {}

  std::vector<std::string> elements_;
};

bool same_frame(const FramePtr& a, const FramePtr& b);

// A nonempty subset of a frame.
class FocalSet {
 public:
  FocalSet(FramePtr frame, SubsetBits bits);

  static FocalSet of(const FramePtr& frame,
                     std::span<const std::string> members);
  static FocalSet of(const FramePtr& frame,
                     std::initializer_list<std::string_view> members);
  static FocalSet whole(const FramePtr& frame);

  const FramePtr& frame() const { return frame_; }
  SubsetBits bits() const { return bits_; }
  std::vector<std::string> members() const;
  std::size_t cardinality() const;
  bool is_whole() const;
  bool contains(std::string_view element) const;

  bool operator==(const FocalSet& other) const {
    return bits_ == other.bits_ && same_frame(frame_, other.frame_);
  }

 private:
  FramePtr frame_;
  SubsetBits bits_;
};

struct UncertaintyInterval {
  double lower = 0.0;  // belief
  double upper = 1.0;  // plausibility

  double center() const { return (lower + upper) / 2.0; }
  double width() const { return upper - lower; }
};

// A basic belief assignment. Only focal sets (nonzero mass) are stored;
// every other subset implicitly carries zero.
class MassFunction {
 public:
  static MassFunction vacuous(const FramePtr& frame);

  const FramePtr& frame() const { return frame_; }
  const std::map<SubsetBits, double>& focal_masses() const { return masses_; }
  double mass_of(const FocalSet& set) const;
  double mass_of_bits(SubsetBits bits) const;
  double total() const;

 private:
  friend MassFunction make_mass(
      const FramePtr&, std::span<const std::pair<FocalSet, double>>);
  friend MassFunction combine(const MassFunction&, const MassFunction&);

  MassFunction(FramePtr frame, std::map<SubsetBits, double> masses)
      : frame_(std::move(frame)), masses_(std::move(masses)) {}

  FramePtr frame_;
  std::map<SubsetBits, double> masses_;
};

// Validates and builds a mass function. Errors: kInvalidMass (outside
// [0,1] or repeated focal set), kEmptyFocalSet, kForeignElement,
// kSumNotOne.
MassFunction make_mass(const FramePtr& frame,
                       std::span<const std::pair<FocalSet, double>> entries);
MassFunction make_mass(
    const FramePtr& frame,
    std::initializer_list<std::pair<FocalSet, double>> entries);

// The simple support function used for a single testimony: `mass` on
// `focal`, the remainder on Θ.
MassFunction simple_support(const FocalSet& focal, double mass);

// Bel(A): mass committed to A and its subsets.
double belief(const MassFunction& m, const FocalSet& a);
// Pl(A): mass of every focal set intersecting A.
double plausibility(const MassFunction& m, const FocalSet& a);
// 1 - Bel(complement of A), computed from the complement directly.
double plausibility_from_complement(const MassFunction& m, const FocalSet& a);
UncertaintyInterval interval(const MassFunction& m, const FocalSet& a);

// K = Σ_{a∩b=∅} m1(a)·m2(b).
double conflict(const MassFunction& m1, const MassFunction& m2);

// Dempster's rule. Throws kTotalConflict when K is within 1e-12 of 1 and
// kFrameMismatch for different frames. Masses under 1e-12 are pruned and
// the remainder renormalized.
MassFunction combine(const MassFunction& m1, const MassFunction& m2);

// Left fold of combine over a nonempty list.
MassFunction combine_all(std::span<const MassFunction> ms);

}  // namespace normlearn

#endif  // NORMLEARN_EVIDENCE_HPP_
