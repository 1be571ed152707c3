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

#include "normlearn/evidence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "normlearn/errors.hpp"

namespace normlearn {

FramePtr FrameOfDiscernment::create(std::vector<std::string> elements) {
  if (elements.size() < 2) {
    throw Error(ErrorCode::kInvalidFrame, "a frame needs at least two elements");
  }
  if (elements.size() > 64) {
    throw Error(ErrorCode::kInvalidFrame, "frames are limited to 64 elements");
  }
  std::set<std::string> seen;
  for (const auto& e : elements) {
    if (e.empty()) throw Error(ErrorCode::kInvalidFrame, "empty element label");
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::kInvalidFrame, "duplicate element " + e);
    }
  }
  return FramePtr(new FrameOfDiscernment(std::move(elements)));
}

std::optional<std::size_t> FrameOfDiscernment::index_of(
    std::string_view name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == name) return i;
  }
  return std::nullopt;
}

SubsetBits FrameOfDiscernment::full_mask() const {
  return elements_.size() == 64 ? ~SubsetBits{0}
                                : (SubsetBits{1} << elements_.size()) - 1;
}

bool same_frame(const FramePtr& a, const FramePtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

FocalSet::FocalSet(FramePtr frame, SubsetBits bits)
    : frame_(std::move(frame)), bits_(bits) {
  if (!frame_) throw Error(ErrorCode::kInvalidFrame, "null frame");
  if (bits_ == 0) throw Error(ErrorCode::kEmptyFocalSet, "");
  if ((bits_ & ~frame_->full_mask()) != 0) {
    throw Error(ErrorCode::kForeignElement, "bits outside the frame");
  }
}

namespace {

template <typename Range>
SubsetBits bits_for(const FramePtr& frame, const Range& members) {
  SubsetBits bits = 0;
  for (const auto& name : members) {
    auto idx = frame->index_of(name);
    if (!idx) {
      throw Error(ErrorCode::kForeignElement, std::string(name));
    }
    bits |= SubsetBits{1} << *idx;
  }
  return bits;
}

}  // namespace

FocalSet FocalSet::of(const FramePtr& frame,
                      std::span<const std::string> members) {
  return FocalSet(frame, bits_for(frame, members));
}

FocalSet FocalSet::of(const FramePtr& frame,
                      std::initializer_list<std::string_view> members) {
  return FocalSet(frame, bits_for(frame, members));
}

FocalSet FocalSet::whole(const FramePtr& frame) {
  return FocalSet(frame, frame->full_mask());
}

std::vector<std::string> FocalSet::members() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < frame_->size(); ++i) {
    if (bits_ & (SubsetBits{1} << i)) out.push_back(frame_->elements()[i]);
  }
  return out;
}

std::size_t FocalSet::cardinality() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

bool FocalSet::is_whole() const { return bits_ == frame_->full_mask(); }

bool FocalSet::contains(std::string_view element) const {
  auto idx = frame_->index_of(element);
  return idx && (bits_ & (SubsetBits{1} << *idx)) != 0;
}

// ---------------------------------------------------------------------------

MassFunction MassFunction::vacuous(const FramePtr& frame) {
  return make_mass(frame, {{FocalSet::whole(frame), 1.0}});
}

double MassFunction::mass_of(const FocalSet& set) const {
  if (!same_frame(set.frame(), frame_)) {
    throw Error(ErrorCode::kForeignElement, "focal set from another frame");
  }
  return mass_of_bits(set.bits());
}

double MassFunction::mass_of_bits(SubsetBits bits) const {
  auto it = masses_.find(bits);
  return it == masses_.end() ? 0.0 : it->second;
}

double MassFunction::total() const {
  double sum = 0.0;
  for (const auto& [bits, mass] : masses_) sum += mass;
  return sum;
}

MassFunction make_mass(const FramePtr& frame,
                       std::span<const std::pair<FocalSet, double>> entries) {
  if (!frame) throw Error(ErrorCode::kInvalidFrame, "null frame");
  std::map<SubsetBits, double> masses;
  double sum = 0.0;
  for (const auto& [set, mass] : entries) {
    if (!same_frame(set.frame(), frame)) {
      throw Error(ErrorCode::kForeignElement, "focal set from another frame");
    }
    if (!(mass >= 0.0 && mass <= 1.0)) {
      throw Error(ErrorCode::kInvalidMass,
                  "mass " + std::to_string(mass) + " outside [0,1]");
    }
    if (masses.count(set.bits()) != 0) {
      throw Error(ErrorCode::kInvalidMass, "focal set listed twice");
    }
    sum += mass;
    if (mass > 0.0) masses.emplace(set.bits(), mass);
  }
  if (std::abs(sum - 1.0) > kMassTolerance) {
    throw Error(ErrorCode::kSumNotOne, "masses sum to " + std::to_string(sum));
  }
  return MassFunction(frame, std::move(masses));
}

MassFunction make_mass(
    const FramePtr& frame,
    std::initializer_list<std::pair<FocalSet, double>> entries) {
  return make_mass(frame, std::span<const std::pair<FocalSet, double>>(
                              entries.begin(), entries.size()));
}

MassFunction simple_support(const FocalSet& focal, double mass) {
  if (!(mass > 0.0 && mass <= 1.0)) {
    throw Error(ErrorCode::kInvalidMass,
                "source mass " + std::to_string(mass) + " outside (0,1]");
  }
  const FramePtr& frame = focal.frame();
  if (focal.is_whole() || mass == 1.0) {
    return make_mass(frame, {{focal, 1.0}});
  }
  return make_mass(frame, {{focal, mass}, {FocalSet::whole(frame), 1.0 - mass}});
}

namespace {

void check_frame(const MassFunction& m, const FocalSet& a) {
  if (!same_frame(m.frame(), a.frame())) {
    throw Error(ErrorCode::kForeignElement, "focal set from another frame");
  }
}

double belief_of_bits(const MassFunction& m, SubsetBits a) {
  double sum = 0.0;
  for (const auto& [b, mass] : m.focal_masses()) {
    if ((b & ~a) == 0) sum += mass;
  }
  return sum;
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

double belief(const MassFunction& m, const FocalSet& a) {
  check_frame(m, a);
  return clamp_unit(belief_of_bits(m, a.bits()));
}

double plausibility(const MassFunction& m, const FocalSet& a) {
  check_frame(m, a);
  double sum = 0.0;
  for (const auto& [b, mass] : m.focal_masses()) {
    if ((b & a.bits()) != 0) sum += mass;
  }
  return clamp_unit(sum);
}

double plausibility_from_complement(const MassFunction& m, const FocalSet& a) {
  check_frame(m, a);
  const SubsetBits complement = m.frame()->full_mask() & ~a.bits();
  // Bel(∅) = 0 since no focal set is empty.
  const double bel_complement =
      complement == 0 ? 0.0 : belief_of_bits(m, complement);
  return clamp_unit(1.0 - bel_complement);
}

UncertaintyInterval interval(const MassFunction& m, const FocalSet& a) {
  return {belief(m, a), plausibility(m, a)};
}

double conflict(const MassFunction& m1, const MassFunction& m2) {
  if (!same_frame(m1.frame(), m2.frame())) {
    throw Error(ErrorCode::kFrameMismatch, "conflict across frames");
  }
  double k = 0.0;
  for (const auto& [a, ma] : m1.focal_masses()) {
    for (const auto& [b, mb] : m2.focal_masses()) {
      if ((a & b) == 0) k += ma * mb;
    }
  }
  return clamp_unit(k);
}

MassFunction combine(const MassFunction& m1, const MassFunction& m2) {
  if (!same_frame(m1.frame(), m2.frame())) {
    throw Error(ErrorCode::kFrameMismatch, "combining across frames");
  }
  std::map<SubsetBits, double> joint;
  double k = 0.0;
  for (const auto& [a, ma] : m1.focal_masses()) {
    for (const auto& [b, mb] : m2.focal_masses()) {
      const SubsetBits c = a & b;
      if (c == 0) {
        k += ma * mb;
      } else {
        joint[c] += ma * mb;
      }
    }
  }
  const double norm = 1.0 - k;
  if (norm <= kConflictTolerance) {
    throw Error(ErrorCode::kTotalConflict, "K = " + std::to_string(k));
  }

  double kept = 0.0;
  for (auto it = joint.begin(); it != joint.end();) {
    it->second /= norm;
    if (it->second < kPruneThreshold) {
      it = joint.erase(it);
    } else {
      kept += it->second;
      ++it;
    }
  }
  for (auto& [bits, mass] : joint) mass /= kept;
  return MassFunction(m1.frame(), std::move(joint));
}

MassFunction combine_all(std::span<const MassFunction> ms) {
  if (ms.empty()) {
    throw Error(ErrorCode::kNoEvidence, "combine_all of an empty list");
  }
  MassFunction acc = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) acc = combine(acc, ms[i]);
  return acc;
}

}  // namespace normlearn
