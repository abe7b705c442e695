#ifndef TENSEPROOF_TRACKS_HPP_
#define TENSEPROOF_TRACKS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "tenseproof/derivation.hpp"

namespace tenseproof {

enum class TrackSort { kLabeled, kRelational, kMixed };
enum class TrackOrigin { kAssumption, kAxiom, kUfConclusion };
enum class TrackTerminus { kConclusion, kUfPremise, kMinorPremise };

std::string_view track_sort_name(TrackSort s);
std::string_view track_origin_name(TrackOrigin o);
std::string_view track_terminus_name(TrackTerminus t);

// Formulas from the top of the track downwards.
struct Track {
  std::vector<NodePath> nodes;
  std::size_t elim_end = 0;     // nodes[0, elim_end) form the elimination part
  std::size_t central_end = 0;  // nodes[elim_end, central_end) form the central part
  TrackSort sort = TrackSort::kLabeled;
  TrackOrigin origin = TrackOrigin::kAssumption;
  TrackTerminus terminus = TrackTerminus::kConclusion;
  int falsum_rules = 0;  // falsum-rule applications in the central part

  std::size_t index_of(const NodePath& p) const;  // nodes.size() when absent
};

enum class LinkKind {
  kMajorOfElim,   // (i) relational track ends as the minor premise of GE/HE/XE
  kMonMinor,      // (ii) relational track ends as the minor premise of mon
  kUf2Origin,     // (iii) relational track ends in uf2 that starts a labeled track
  kUf1Terminus,   // (iv) labeled track ends in uf1 that starts a relational track
  kSameSort,      // labeled-labeled or relational-relational boundary
  kUnclassified,  // a labeled-relational link fitting none of the above
};

std::string_view link_kind_name(LinkKind k);

struct TrackLink {
  std::size_t upper;  // track whose last formula makes the connection
  std::size_t lower;
  LinkKind kind;
  NodePath at;  // the node joining the two tracks
};

struct TrackReport {
  std::vector<Track> tracks;
  std::vector<TrackLink> links;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

class StructureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Track decomposition with every defect listed.
TrackReport analyze_tracks(const Derivation& d);

// As analyze_tracks, but throws StructureViolation on the first defect.
TrackReport tracks(const Derivation& d);

}  // namespace tenseproof

#endif  // TENSEPROOF_TRACKS_HPP_
