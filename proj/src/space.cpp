#include "torusrep/space.hpp"

#include <stdexcept>

namespace torusrep {

OrderedSpace::OrderedSpace() : data_(std::make_shared<Data>()) {}

OrderedSpace::OrderedSpace(std::vector<std::string> points) {
  auto data = std::make_shared<Data>();
  data->points = std::move(points);
  data->index.reserve(data->points.size());
  for (std::size_t i = 0; i < data->points.size(); ++i) {
    auto [it, inserted] = data->index.emplace(data->points[i], static_cast<int>(i));
    (void)it;
    if (!inserted) {
      throw std::invalid_argument("duplicate point id '" + data->points[i] + "'");
    }
  }
  data_ = std::move(data);
}

const std::string& OrderedSpace::point(int index) const {
  if (index < 0 || static_cast<std::size_t>(index) >= data_->points.size()) {
    throw std::invalid_argument("point index out of range");
  }
  return data_->points[static_cast<std::size_t>(index)];
}

bool OrderedSpace::contains(const std::string& id) const {
  return data_->index.count(id) != 0;
}

int OrderedSpace::index_of(const std::string& id) const {
  auto it = data_->index.find(id);
  if (it == data_->index.end()) {
    throw std::invalid_argument("unknown point id '" + id + "'");
  }
  return it->second;
}

bool OrderedSpace::precedes(const std::string& a, const std::string& b) const {
  return index_of(a) < index_of(b);
}

bool OrderedSpace::operator==(const OrderedSpace& other) const {
  return data_ == other.data_ || data_->points == other.data_->points;
}

}  // namespace torusrep
