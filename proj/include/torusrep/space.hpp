#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace torusrep {

/**
 * A finite point set with a total order given by the declared listing
 * order. Point identifiers are arbitrary distinct strings. Copies share
 * the underlying data; all accessors are const.
 */
class OrderedSpace {
 public:
  OrderedSpace();  // empty space
  explicit OrderedSpace(std::vector<std::string> points);

  std::size_t size() const { return data_->points.size(); }
  bool empty() const { return data_->points.empty(); }
  const std::vector<std::string>& points() const { return data_->points; }
  const std::string& point(int index) const;

  bool contains(const std::string& id) const;
  // Position in the order; throws std::invalid_argument on unknown ids.
  int index_of(const std::string& id) const;

  // a <_X b in the declared order.
  bool precedes(const std::string& a, const std::string& b) const;

  bool operator==(const OrderedSpace& other) const;
  bool operator!=(const OrderedSpace& other) const { return !(*this == other); }

 private:
  struct Data {
    std::vector<std::string> points;
    std::unordered_map<std::string, int> index;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace torusrep
