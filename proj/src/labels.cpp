#include "pwedge/labels.hpp"

#include <cctype>
#include <stdexcept>

namespace pwedge {

FacetLabel FacetLabel::original(int index) {
  FacetLabel label;
  label.kind_ = Kind::Original;
  label.number_ = index;
  return label;
}

FacetLabel FacetLabel::derived(Kind kind, const FacetLabel& parent, int step) {
  if (parent.kind_ != Kind::Original && step <= parent.number_)
    throw std::invalid_argument("facet label steps must strictly increase");
  FacetLabel label;
  label.kind_ = kind;
  label.number_ = step;
  label.parent_ = std::make_shared<const FacetLabel>(parent);
  return label;
}

FacetLabel FacetLabel::top(const FacetLabel& parent, int step) {
  return derived(Kind::Top, parent, step);
}

FacetLabel FacetLabel::base(const FacetLabel& parent, int step) {
  return derived(Kind::Base, parent, step);
}

FacetLabel FacetLabel::perturbed(const FacetLabel& parent, int step) {
  return derived(Kind::Perturbed, parent, step);
}

const FacetLabel& FacetLabel::parent() const {
  if (!parent_) throw std::logic_error("Original labels have no parent");
  return *parent_;
}

int FacetLabel::root_index() const {
  const FacetLabel* p = this;
  while (p->parent_) p = p->parent_.get();
  return p->number_;
}

std::string FacetLabel::str() const {
  switch (kind_) {
    case Kind::Original:
      return "Original(" + std::to_string(number_) + ")";
    case Kind::Top:
      return "Top(" + parent_->str() + "," + std::to_string(number_) + ")";
    case Kind::Base:
      return "Base(" + parent_->str() + "," + std::to_string(number_) + ")";
    case Kind::Perturbed:
      return "Perturbed(" + parent_->str() + "," + std::to_string(number_) + ")";
  }
  return {};
}

bool FacetLabel::operator==(const FacetLabel& other) const {
  if (kind_ != other.kind_ || number_ != other.number_) return false;
  if (!parent_ && !other.parent_) return true;
  if (!parent_ || !other.parent_) return false;
  return *parent_ == *other.parent_;
}

namespace {

// Recursive descent over "Kind(...)" with a cursor into the text.
std::optional<FacetLabel> parse_label(std::string_view text, std::size_t& pos) {
  auto starts_with = [&](std::string_view word) {
    return text.substr(pos, word.size()) == word;
  };
  auto parse_int = [&]() -> std::optional<int> {
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    return std::stoi(std::string(text.substr(start, pos - start)));
  };

  FacetLabel::Kind kind;
  if (starts_with("Original(")) {
    pos += 9;
    auto idx = parse_int();
    if (!idx || pos >= text.size() || text[pos] != ')') return std::nullopt;
    ++pos;
    return FacetLabel::original(*idx);
  } else if (starts_with("Top(")) {
    kind = FacetLabel::Kind::Top;
    pos += 4;
  } else if (starts_with("Base(")) {
    kind = FacetLabel::Kind::Base;
    pos += 5;
  } else if (starts_with("Perturbed(")) {
    kind = FacetLabel::Kind::Perturbed;
    pos += 10;
  } else {
    return std::nullopt;
  }

  auto parent = parse_label(text, pos);
  if (!parent || pos >= text.size() || text[pos] != ',') return std::nullopt;
  ++pos;
  auto step = parse_int();
  if (!step || pos >= text.size() || text[pos] != ')') return std::nullopt;
  ++pos;
  switch (kind) {
    case FacetLabel::Kind::Top:
      return FacetLabel::top(*parent, *step);
    case FacetLabel::Kind::Base:
      return FacetLabel::base(*parent, *step);
    default:
      return FacetLabel::perturbed(*parent, *step);
  }
}

}  // namespace

std::optional<FacetLabel> FacetLabel::parse(std::string_view text) {
  std::size_t pos = 0;
  auto label = parse_label(text, pos);
  if (!label || pos != text.size()) return std::nullopt;
  return label;
}

}  // namespace pwedge
