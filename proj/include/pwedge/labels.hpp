#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace pwedge {

// Lineage of a facet through wedge and perturbation steps.  A chain always
// terminates at Original; construction-step numbers strictly increase along
// the chain.  Rendered as e.g. "Perturbed(Top(Original(3),1),2)".
class FacetLabel {
 public:
  enum class Kind { Original, Top, Base, Perturbed };

  FacetLabel() = default;

  static FacetLabel original(int index);
  static FacetLabel top(const FacetLabel& parent, int step);
  static FacetLabel base(const FacetLabel& parent, int step);
  static FacetLabel perturbed(const FacetLabel& parent, int step);

  Kind kind() const { return kind_; }
  int index() const { return number_; }  // Original: facet index
  int step() const { return number_; }   // derived kinds: construction step
  const FacetLabel& parent() const;      // derived kinds only

  // Index of the Original at the root of the chain.
  int root_index() const;

  std::string str() const;
  static std::optional<FacetLabel> parse(std::string_view text);

  bool operator==(const FacetLabel& other) const;

 private:
  static FacetLabel derived(Kind kind, const FacetLabel& parent, int step);

  Kind kind_ = Kind::Original;
  int number_ = 0;
  std::shared_ptr<const FacetLabel> parent_;
};

}  // namespace pwedge
