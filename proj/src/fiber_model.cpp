#include "stabiliscope/fiber_model.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace stabiliscope {

FiberModel::FiberModel(std::vector<Rat> marked) : marked_(std::move(marked)) {
  if (marked_.size() < 2)
    throw std::invalid_argument("fiber model: need at least the marks 0 and 1");
  if (marked_.front() != Rat(0) || marked_.back() != Rat(1))
    throw std::invalid_argument("fiber model: marks must run from 0 to 1");
  for (std::size_t i = 0; i + 1 < marked_.size(); ++i) {
    if (!(marked_[i] < marked_[i + 1]))
      throw std::invalid_argument("fiber model: marks must be strictly increasing");
    if (!is_farey_neighbor(marked_[i], marked_[i + 1]))
      throw std::invalid_argument("fiber model: " + marked_[i].str() + " and " +
                                  marked_[i + 1].str() + " are not Farey neighbors");
  }
}

const Rat& FiberModel::mark(std::size_t j) const {
  if (j >= marked_.size())
    throw std::out_of_range("fiber model: no mark " + std::to_string(j));
  return marked_[j];
}

Placement locate(const FiberModel& model, const Rat& q) {
  const auto& marks = model.marked();
  if (q < marks.front() || marks.back() < q)
    throw std::domain_error("locate: " + q.str() + " is outside [0,1]");
  const auto it = std::lower_bound(marks.begin(), marks.end(), q);
  const auto i = static_cast<std::size_t>(it - marks.begin());
  if (it != marks.end() && *it == q) return Placement::marked_curve(i);
  return Placement::gap_point(i - 1);
}

FiberModel blowup_gap(const FiberModel& model, std::size_t gap) {
  if (gap >= model.gap_count())
    throw std::out_of_range("blowup: no gap " + std::to_string(gap));
  std::vector<Rat> marks = model.marked();
  marks.insert(marks.begin() + static_cast<std::ptrdiff_t>(gap) + 1,
               mediant(marks[gap], marks[gap + 1]));
  return FiberModel(std::move(marks));
}

Placement curve_image(const FiberModel& model, const PLMap& map, std::size_t curve) {
  return locate(model, map(model.mark(curve)));
}

PointImage point_image(const FiberModel& model, const PLMap& map, std::size_t gap) {
  if (gap >= model.gap_count())
    throw std::out_of_range("point image: no gap " + std::to_string(gap));
  const ImageSet image = image_interval(map, model.mark(gap), model.mark(gap + 1));

  // Marked values inside the image form a contiguous index range because
  // the image is an interval.
  const auto& marks = model.marked();
  std::size_t first = marks.size(), last = 0;
  for (std::size_t k = 0; k < marks.size(); ++k) {
    if (marks[k] < image.lo) continue;
    if (image.hi < marks[k]) break;
    if (image.contains(marks[k])) {
      first = std::min(first, k);
      last = std::max(last, k);
    }
  }
  if (first <= last) return PointImage::curves(first, last);

  // No curve is met, so the whole image sits inside one gap; its left end
  // identifies which.
  const Placement at_lo = locate(model, image.lo);
  const std::size_t g = at_lo.index;
  assert(g < model.gap_count());
  return PointImage::point(g);
}

std::string to_dot(const FiberModel& model) {
  std::ostringstream os;
  os << "graph fiber {\n  rankdir=LR;\n";
  const auto& marks = model.marked();
  for (std::size_t i = 0; i + 1 < marks.size(); ++i)
    os << "  \"" << marks[i].str() << "\" -- \"" << marks[i + 1].str() << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace stabiliscope
